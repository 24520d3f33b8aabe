//! Exact dense linear algebra over a prime field `F_p`.
//!
//! Every Hom, Ext and resolution computation in the crate bottoms out here.
//! Matrices are dense and row-major; all instances in practice are tiny, so
//! plain Gaussian elimination is used throughout. A `0 x n` or `n x 0` matrix
//! is legal and has rank 0.

use alloc::vec;
use alloc::vec::Vec;

use crate::{Error, Result};

/// Arithmetic context for the prime field `F_p`.
///
/// Scalars are residues in `[0, p)` stored as `u64`; the modulus is carried by
/// the field value rather than by each scalar. Construction validates
/// primality, so downstream arithmetic never has to re-check it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    /// Largest accepted modulus; keeps trial division and `u128` products cheap.
    pub const MAX_MODULUS: u64 = (1 << 31) - 1;

    pub fn new(p: u64) -> Result<Self> {
        if p < 2 || p > Self::MAX_MODULUS || !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(PrimeField { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    /// Reduces a signed integer into `[0, p)`.
    pub fn reduce(&self, n: i64) -> u64 {
        let p = self.p as i64;
        (((n % p) + p) % p) as u64
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    pub fn sub(&self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    pub fn neg(&self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        // residues are < p <= 2^31 - 1, so the product fits in u64
        (a * b) % self.p
    }

    pub fn pow(&self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc = 1u64;
        base %= self.p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Multiplicative inverse of a nonzero residue (Fermat).
    pub fn inv(&self, a: u64) -> u64 {
        debug_assert!(a % self.p != 0, "inverse of zero");
        self.pow(a, self.p - 2)
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Outcome of solving `A x = b`: either a solution or a certificate of
/// infeasibility, namely a row vector `y` with `y A = 0` and `y b != 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SolveOutcome {
    Solution(Vec<u64>),
    Witness(Vec<u64>),
}

/// Dense matrix over `F_p`, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    field: PrimeField,
    rows: usize,
    cols: usize,
    data: Vec<u64>,
}

impl Matrix {
    pub fn zeros(field: PrimeField, rows: usize, cols: usize) -> Self {
        Matrix {
            field,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(field: PrimeField, n: usize) -> Self {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    /// Builds a matrix from signed integer rows, reducing mod p.
    pub fn from_rows(field: PrimeField, rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut m = Matrix::zeros(field, r, c);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), c, "ragged rows");
            for (j, &v) in row.iter().enumerate() {
                m.set(i, j, field.reduce(v));
            }
        }
        m
    }

    /// Builds a matrix whose columns are the given vectors.
    pub fn from_columns(field: PrimeField, rows: usize, cols: &[Vec<u64>]) -> Self {
        let mut m = Matrix::zeros(field, rows, cols.len());
        for (j, col) in cols.iter().enumerate() {
            assert_eq!(col.len(), rows, "column length mismatch");
            for (i, &v) in col.iter().enumerate() {
                m.set(i, j, v);
            }
        }
        m
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: u64) {
        self.data[i * self.cols + j] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&v| v == 0)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    pub fn column(&self, j: usize) -> Vec<u64> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn mul(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "matrix product shape mismatch");
        let f = self.field;
        let mut out = Matrix::zeros(f, self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..rhs.cols {
                    let v = f.add(out.get(i, j), f.mul(a, rhs.get(k, j)));
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[u64]) -> Vec<u64> {
        assert_eq!(self.cols, v.len(), "matrix-vector shape mismatch");
        let f = self.field;
        let mut out = vec![0u64; self.rows];
        for i in 0..self.rows {
            let mut acc = 0u64;
            for j in 0..self.cols {
                acc = f.add(acc, f.mul(self.get(i, j), v[j]));
            }
            out[i] = acc;
        }
        out
    }

    pub fn add(&self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let f = self.field;
        let mut out = self.clone();
        for i in 0..self.rows * self.cols {
            out.data[i] = f.add(self.data[i], rhs.data[i]);
        }
        out
    }

    pub fn sub(&self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let f = self.field;
        let mut out = self.clone();
        for i in 0..self.rows * self.cols {
            out.data[i] = f.sub(self.data[i], rhs.data[i]);
        }
        out
    }

    pub fn scale(&self, c: u64) -> Matrix {
        let f = self.field;
        let mut out = self.clone();
        for v in &mut out.data {
            *v = f.mul(*v, c);
        }
        out
    }

    /// Square matrix power.
    pub fn pow(&self, mut k: usize) -> Matrix {
        assert!(self.is_square());
        let mut acc = Matrix::identity(self.field, self.rows);
        let mut base = self.clone();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            k >>= 1;
        }
        acc
    }

    pub fn hstack(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.rows, rhs.rows);
        let mut out = Matrix::zeros(self.field, self.rows, self.cols + rhs.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(i, j, self.get(i, j));
            }
            for j in 0..rhs.cols {
                out.set(i, self.cols + j, rhs.get(i, j));
            }
        }
        out
    }

    /// Row echelon reduction; returns (rref matrix, pivot column indices).
    fn rref(&self) -> (Matrix, Vec<usize>) {
        let f = self.field;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let mut pivot = None;
            for r in row..m.rows {
                if m.get(r, col) != 0 {
                    pivot = Some(r);
                    break;
                }
            }
            let Some(pr) = pivot else { continue };
            if pr != row {
                for j in 0..m.cols {
                    let a = m.get(row, j);
                    let b = m.get(pr, j);
                    m.set(row, j, b);
                    m.set(pr, j, a);
                }
            }
            let inv = f.inv(m.get(row, col));
            for j in col..m.cols {
                m.set(row, j, f.mul(m.get(row, j), inv));
            }
            for r in 0..m.rows {
                if r != row && m.get(r, col) != 0 {
                    let c = m.get(r, col);
                    for j in col..m.cols {
                        let v = f.sub(m.get(r, j), f.mul(c, m.get(row, j)));
                        m.set(r, j, v);
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right null space `{ v : A v = 0 }`.
    ///
    /// The returned vectors are the standard free-variable basis from the
    /// reduced echelon form; their count is always `cols - rank`.
    pub fn kernel_basis(&self) -> Vec<Vec<u64>> {
        let f = self.field;
        let (r, pivots) = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        let mut basis = Vec::with_capacity(self.cols - pivots.len());
        for free in 0..self.cols {
            if is_pivot[free] {
                continue;
            }
            let mut v = vec![0u64; self.cols];
            v[free] = 1;
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = f.neg(r.get(row, free));
            }
            basis.push(v);
        }
        basis
    }

    /// Basis of the left null space `{ y : y A = 0 }`.
    pub fn left_kernel_basis(&self) -> Vec<Vec<u64>> {
        self.transpose().kernel_basis()
    }

    /// Solves `A x = b`, or produces a left-kernel witness of infeasibility.
    pub fn solve_or_witness(&self, b: &[u64]) -> Result<SolveOutcome> {
        if b.len() != self.rows {
            return Err(Error::DimensionMismatch {
                expected: self.rows,
                got: b.len(),
            });
        }
        let f = self.field;
        let bm = Matrix::from_columns(f, self.rows, &[b.to_vec()]);
        if let Some(x) = self.solve_matrix(&bm) {
            return Ok(SolveOutcome::Solution(x.column(0)));
        }
        // Infeasible: some left-kernel vector does not annihilate b.
        for y in self.left_kernel_basis() {
            let mut dot = 0u64;
            for (yi, bi) in y.iter().zip(b.iter()) {
                dot = f.add(dot, f.mul(*yi, *bi));
            }
            if dot != 0 {
                return Ok(SolveOutcome::Witness(y));
            }
        }
        unreachable!("inconsistent system must have a separating left-kernel vector");
    }

    /// Solves `A X = B` for all columns at once; `None` if any column is
    /// inconsistent.
    pub fn solve_matrix(&self, b: &Matrix) -> Option<Matrix> {
        assert_eq!(self.rows, b.rows, "rhs row count mismatch");
        let f = self.field;
        let (r, pivots) = self.hstack(b).rref();
        // A pivot in the appended block means inconsistency.
        if pivots.iter().any(|&c| c >= self.cols) {
            return None;
        }
        let mut x = Matrix::zeros(f, self.cols, b.cols);
        for (row, &pc) in pivots.iter().enumerate() {
            for j in 0..b.cols {
                x.set(pc, j, r.get(row, self.cols + j));
            }
        }
        Some(x)
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if !self.is_square() {
            return None;
        }
        let id = Matrix::identity(self.field, self.rows);
        let inv = self.solve_matrix(&id)?;
        if self.mul(&inv) == id {
            Some(inv)
        } else {
            None
        }
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    /// Columns of `self` forming a basis of the column space.
    pub fn column_space_basis(&self) -> Matrix {
        let (_, pivots) = self.rref();
        let mut out = Matrix::zeros(self.field, self.rows, pivots.len());
        for (k, &j) in pivots.iter().enumerate() {
            for i in 0..self.rows {
                out.set(i, k, self.get(i, j));
            }
        }
        out
    }

    /// Extends the (full-column-rank) columns of `self` to a basis of the
    /// ambient space by standard basis vectors; returns the invertible
    /// `[self | E]` together with the indices of the appended columns.
    pub fn extend_to_basis(&self) -> (Matrix, Vec<usize>) {
        let f = self.field;
        let n = self.rows;
        let stacked = self.hstack(&Matrix::identity(f, n));
        let (_, pivots) = stacked.rref();
        let mut appended = Vec::new();
        let mut out = self.clone();
        for &c in &pivots {
            if c >= self.cols {
                let idx = c - self.cols;
                let mut e = vec![0u64; n];
                e[idx] = 1;
                out = out.hstack(&Matrix::from_columns(f, n, &[e]));
                appended.push(idx);
            }
        }
        debug_assert_eq!(out.cols, n, "input columns were not independent");
        (out, appended)
    }

    /// A surjection `q : F^n -> F^{n-r}` whose kernel is the column span of
    /// `self` (assumed full column rank).
    pub fn quotient_map(&self) -> Matrix {
        let (full, _) = self.extend_to_basis();
        let inv = full.inverse().expect("completed basis is invertible");
        let f = self.field;
        let n = self.rows;
        let r = self.cols;
        let mut q = Matrix::zeros(f, n - r, n);
        for i in 0..n - r {
            for j in 0..n {
                q.set(i, j, inv.get(r + i, j));
            }
        }
        q
    }

    /// Whether every column of `v` lies in the column span of `self`.
    pub fn spans(&self, v: &Matrix) -> bool {
        self.solve_matrix(v).is_some()
    }
}

/// Evaluation matrix pairing the dual basis of an `n`-dimensional space
/// against the original basis: entry `(i, j)` is `delta_ij`.
///
/// Dual-space bookkeeping throughout the crate indexes the dual basis by the
/// chosen basis of the original space, so the pairing is the identity and
/// dualizing a map amounts to transposing it.
pub fn dual_pairing(field: PrimeField, n: usize) -> Matrix {
    Matrix::identity(field, n)
}
