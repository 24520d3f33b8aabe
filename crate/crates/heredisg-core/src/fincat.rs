//! Finite k-linear categories presented by composition tables, and their
//! contravariant finite-dimensional modules: minimal projective resolutions,
//! Ext groups, global dimension, and stable categories of Dynkin quivers
//! presented in this form.
//!
//! Categories are assumed basic: distinct objects are non-isomorphic, and
//! every endomorphism ring is local (checked at construction). The radical is
//! then the full Hom space between distinct objects together with the maximal
//! ideal of each endomorphism ring.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use crate::ar::{knit_indecomposables, tau};
use crate::linalg::{Matrix, PrimeField};
use crate::quiver::Quiver;
use crate::rep::{decompose, stable_hom, RepMap, Representation, StableHom};
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinCat {
    field: PrimeField,
    names: Vec<String>,
    hom_dims: Vec<usize>,         // [x * n + y] = dim Hom(x, y)
    comp: Vec<Vec<u64>>,          // [(x * n + y) * n + z]: tensor [f][g][h]
    identities: Vec<Vec<u64>>,    // per object, coords in End(x)
    radicals: Vec<Vec<Vec<u64>>>, // per object, basis of rad End(x)
}

/// Assembles the data of a finite linear category; `build` validates the
/// axioms (units, associativity, local endomorphism rings) exhaustively.
pub struct FinCatBuilder {
    field: PrimeField,
    names: Vec<String>,
    hom_dims: Vec<usize>,
    comp: BTreeMap<(usize, usize, usize), Vec<u64>>,
    identities: Vec<Option<Vec<u64>>>,
}

impl FinCatBuilder {
    pub fn new(field: PrimeField, names: Vec<String>, hom_dims: Vec<Vec<usize>>) -> Self {
        let n = names.len();
        assert_eq!(hom_dims.len(), n);
        let mut flat = Vec::with_capacity(n * n);
        for row in &hom_dims {
            assert_eq!(row.len(), n);
            flat.extend_from_slice(row);
        }
        FinCatBuilder {
            field,
            names,
            hom_dims: flat,
            comp: BTreeMap::new(),
            identities: vec![None; n],
        }
    }

    fn dim(&self, x: usize, y: usize) -> usize {
        self.hom_dims[x * self.names.len() + y]
    }

    /// Records `g . f` for basis elements `f` in Hom(x,y), `g` in Hom(y,z) as
    /// a coefficient vector over the basis of Hom(x,z).
    pub fn set_composition(
        &mut self,
        x: usize,
        y: usize,
        z: usize,
        f: usize,
        g: usize,
        coeffs: &[u64],
    ) {
        let (dxy, dyz, dxz) = (self.dim(x, y), self.dim(y, z), self.dim(x, z));
        assert!(f < dxy && g < dyz && coeffs.len() == dxz);
        let tensor = self
            .comp
            .entry((x, y, z))
            .or_insert_with(|| vec![0; dxy * dyz * dxz]);
        for (h, &c) in coeffs.iter().enumerate() {
            tensor[(f * dyz + g) * dxz + h] = c;
        }
    }

    pub fn set_identity(&mut self, x: usize, coords: Vec<u64>) {
        assert_eq!(coords.len(), self.dim(x, x));
        self.identities[x] = Some(coords);
    }

    pub fn build(self) -> Result<FinCat> {
        let n = self.names.len();
        let mut comp = vec![Vec::new(); n * n * n];
        for ((x, y, z), tensor) in self.comp {
            comp[(x * n + y) * n + z] = tensor;
        }
        let mut identities = Vec::with_capacity(n);
        for (x, id) in self.identities.into_iter().enumerate() {
            match id {
                Some(v) => identities.push(v),
                None => {
                    return Err(Error::InvalidCategory(format!(
                        "object {x} has no identity"
                    )))
                }
            }
        }
        let mut cat = FinCat {
            field: self.field,
            names: self.names,
            hom_dims: self.hom_dims,
            comp,
            identities,
            radicals: Vec::new(),
        };
        cat.validate()?;
        Ok(cat)
    }
}

impl FinCat {
    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn object_count(&self) -> usize {
        self.names.len()
    }

    pub fn object_name(&self, x: usize) -> &str {
        &self.names[x]
    }

    pub fn object_index(&self, name: &str) -> Result<usize> {
        self.names
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| Error::UnknownName(String::from(name)))
    }

    pub fn hom_dim(&self, x: usize, y: usize) -> usize {
        self.hom_dims[x * self.names.len() + y]
    }

    pub fn identity_coords(&self, x: usize) -> &[u64] {
        &self.identities[x]
    }

    /// Basis of `rad End(x)` in End coordinates.
    pub fn end_radical(&self, x: usize) -> &[Vec<u64>] {
        &self.radicals[x]
    }

    fn tensor(&self, x: usize, y: usize, z: usize) -> &[u64] {
        let n = self.names.len();
        &self.comp[(x * n + y) * n + z]
    }

    /// Composite `g . f` of coefficient vectors `f` over Hom(x,y) and `g`
    /// over Hom(y,z), as coefficients over Hom(x,z).
    pub fn compose(&self, x: usize, y: usize, z: usize, fc: &[u64], gc: &[u64]) -> Vec<u64> {
        let (dyz, dxz) = (self.hom_dim(y, z), self.hom_dim(x, z));
        debug_assert!(fc.len() == self.hom_dim(x, y) && gc.len() == dyz);
        let mut out = vec![0u64; dxz];
        if dxz == 0 {
            return out;
        }
        let t = self.tensor(x, y, z);
        if t.is_empty() {
            return out;
        }
        for (f, &cf) in fc.iter().enumerate() {
            if cf == 0 {
                continue;
            }
            for (g, &cg) in gc.iter().enumerate() {
                if cg == 0 {
                    continue;
                }
                let w = self.field.mul(cf, cg);
                let base = (f * dyz + g) * dxz;
                for (h, o) in out.iter_mut().enumerate() {
                    *o = self.field.add(*o, self.field.mul(w, t[base + h]));
                }
            }
        }
        out
    }

    fn basis_vec(dim: usize, k: usize) -> Vec<u64> {
        let mut v = vec![0u64; dim];
        v[k] = 1;
        v
    }

    fn validate(&mut self) -> Result<()> {
        let n = self.names.len();
        for x in 0..n {
            if self.identities[x].len() != self.hom_dim(x, x) || self.hom_dim(x, x) == 0 {
                return Err(Error::InvalidCategory(format!(
                    "object {x} has no well-formed identity"
                )));
            }
        }
        // Unit laws.
        for x in 0..n {
            for y in 0..n {
                let d = self.hom_dim(x, y);
                for f in 0..d {
                    let fv = Self::basis_vec(d, f);
                    let left = self.compose(x, x, y, &self.identities[x].clone(), &fv);
                    let right = self.compose(x, y, y, &fv, &self.identities[y].clone());
                    if left != fv || right != fv {
                        return Err(Error::InvalidCategory(format!(
                            "unit law fails on Hom({x},{y}) basis element {f}"
                        )));
                    }
                }
            }
        }
        // Associativity on all basis triples.
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    for w in 0..n {
                        let (dxy, dyz, dzw) =
                            (self.hom_dim(x, y), self.hom_dim(y, z), self.hom_dim(z, w));
                        if dxy == 0 || dyz == 0 || dzw == 0 {
                            continue;
                        }
                        for f in 0..dxy {
                            let fv = Self::basis_vec(dxy, f);
                            for g in 0..dyz {
                                let gv = Self::basis_vec(dyz, g);
                                let gf = self.compose(x, y, z, &fv, &gv);
                                for h in 0..dzw {
                                    let hv = Self::basis_vec(dzw, h);
                                    let l = self.compose(x, z, w, &gf, &hv);
                                    let hg = self.compose(y, z, w, &gv, &hv);
                                    let r = self.compose(x, y, w, &fv, &hg);
                                    if l != r {
                                        return Err(Error::InvalidCategory(format!(
                                            "associativity fails on ({x},{y},{z},{w}) basis ({f},{g},{h})"
                                        )));
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
        // Local endomorphism rings; cache the radicals.
        let mut radicals = Vec::with_capacity(n);
        for x in 0..n {
            radicals.push(self.local_end_radical(x)?);
        }
        self.radicals = radicals;
        Ok(())
    }

    /// End(x) product `b . a` (apply `a`, then `b`) as coefficient vectors.
    fn end_mul(&self, x: usize, b: &[u64], a: &[u64]) -> Vec<u64> {
        self.compose(x, x, x, a, b)
    }

    /// Computes `rad End(x)` and certifies locality.
    ///
    /// Dimension one is local outright. Otherwise the radical is the kernel
    /// of the trace form (valid for p > dim End) and locality amounts to the
    /// quotient being a finite field: commutative with a one-dimensional
    /// Frobenius fixed space.
    fn local_end_radical(&self, x: usize) -> Result<Vec<Vec<u64>>> {
        let d = self.hom_dim(x, x);
        if d == 1 {
            return Ok(Vec::new());
        }
        let f = self.field;
        if f.modulus() <= d as u64 {
            return Err(Error::LocalityUndecidable {
                end_dim: d,
                modulus: f.modulus(),
            });
        }
        let lmat: Vec<Matrix> = (0..d)
            .map(|i| {
                let bi = Self::basis_vec(d, i);
                let cols: Vec<Vec<u64>> = (0..d)
                    .map(|j| self.end_mul(x, &bi, &Self::basis_vec(d, j)))
                    .collect();
                Matrix::from_columns(f, d, &cols)
            })
            .collect();
        let lcombo = |coords: &[u64]| -> Matrix {
            let mut acc = Matrix::zeros(f, d, d);
            for (i, &c) in coords.iter().enumerate() {
                if c != 0 {
                    acc = acc.add(&lmat[i].scale(c));
                }
            }
            acc
        };
        let mut trace_form = Matrix::zeros(f, d, d);
        for i in 0..d {
            for j in 0..d {
                let prod = lmat[i].mul(&lmat[j]);
                let mut tr = 0u64;
                for k in 0..d {
                    tr = f.add(tr, prod.get(k, k));
                }
                trace_form.set(i, j, tr);
            }
        }
        let rad = trace_form.kernel_basis();
        for r in &rad {
            if !lcombo(r).pow(d).is_zero() {
                return Err(Error::InvalidCategory(format!(
                    "trace radical of End({x}) contains a non-nilpotent element"
                )));
            }
        }
        // Quotient E / J: complement coordinates and projection.
        let rad_cols =
            Matrix::from_columns(f, d, &rad).column_space_basis();
        let (full, appended) = rad_cols.extend_to_basis();
        let inv = full.inverse().expect("completed basis");
        let r = rad_cols.cols();
        let qd = appended.len();
        let mut proj = Matrix::zeros(f, qd, d);
        for i in 0..qd {
            for j in 0..d {
                proj.set(i, j, inv.get(r + i, j));
            }
        }
        // Commutativity of E / J.
        for i in 0..qd {
            for j in 0..qd {
                let u = Self::basis_vec(d, appended[i]);
                let v = Self::basis_vec(d, appended[j]);
                let uv = self.end_mul(x, &u, &v);
                let vu = self.end_mul(x, &v, &u);
                let diff: Vec<u64> = uv
                    .iter()
                    .zip(vu.iter())
                    .map(|(a, b)| f.sub(*a, *b))
                    .collect();
                if proj.mul_vec(&diff).iter().any(|&c| c != 0) {
                    return Err(Error::InvalidCategory(format!(
                        "End({x}) modulo its radical is not commutative, hence not local"
                    )));
                }
            }
        }
        // Frobenius fixed space of E / J must be one-dimensional.
        let mut frob = Matrix::zeros(f, qd, qd);
        for j in 0..qd {
            let u = Self::basis_vec(d, appended[j]);
            let upow = lcombo(&u).pow((f.modulus() - 1) as usize).mul_vec(&u);
            let qc = proj.mul_vec(&upow);
            for i in 0..qd {
                frob.set(i, j, qc[i]);
            }
        }
        let fixed = frob.sub(&Matrix::identity(f, qd)).kernel_basis().len();
        if fixed != 1 {
            return Err(Error::InvalidCategory(format!(
                "End({x}) modulo its radical splits into {fixed} fields, hence not local"
            )));
        }
        Ok(rad)
    }

    /// Basis elements of rad Hom(x, y), as coefficient vectors.
    pub fn radical_basis(&self, x: usize, y: usize) -> Vec<Vec<u64>> {
        if x != y {
            (0..self.hom_dim(x, y))
                .map(|k| Self::basis_vec(self.hom_dim(x, y), k))
                .collect()
        } else {
            self.radicals[x].clone()
        }
    }
}

/// A contravariant finite-dimensional module over a `FinCat`: one space per
/// object and, for each Hom basis element `f : x -> y`, a matrix
/// `M(f) : M(y) -> M(x)`.
#[derive(Debug, Clone, PartialEq)]
pub struct FinCatModule {
    cat: Arc<FinCat>,
    dims: Vec<usize>,
    action: Vec<Vec<Matrix>>, // [x * n + y][k]: M(f_k): M(y) -> M(x)
}

impl FinCatModule {
    pub fn new(cat: Arc<FinCat>, dims: Vec<usize>, action: Vec<Vec<Matrix>>) -> Result<Self> {
        let n = cat.object_count();
        if dims.len() != n || action.len() != n * n {
            return Err(Error::InvalidModule(String::from("shape mismatch")));
        }
        let m = FinCatModule { cat, dims, action };
        m.validate()?;
        Ok(m)
    }

    pub fn zero(cat: Arc<FinCat>) -> Self {
        let n = cat.object_count();
        let f = cat.field();
        let dims = vec![0usize; n];
        let mut action = Vec::with_capacity(n * n);
        for x in 0..n {
            for y in 0..n {
                action.push(
                    (0..cat.hom_dim(x, y))
                        .map(|_| Matrix::zeros(f, 0, 0))
                        .collect(),
                );
            }
        }
        FinCatModule { cat, dims, action }
    }

    pub fn cat(&self) -> &Arc<FinCat> {
        &self.cat
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim_at(&self, x: usize) -> usize {
        self.dims[x]
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }

    /// Action matrix of the `k`-th basis element of Hom(x, y).
    pub fn action(&self, x: usize, y: usize, k: usize) -> &Matrix {
        &self.action[x * self.cat.object_count() + y][k]
    }

    /// Action of a general morphism given by coefficients over Hom(x, y).
    pub fn action_of(&self, x: usize, y: usize, coeffs: &[u64]) -> Matrix {
        let f = self.cat.field();
        let mut acc = Matrix::zeros(f, self.dims[x], self.dims[y]);
        for (k, &c) in coeffs.iter().enumerate() {
            if c != 0 {
                acc = acc.add(&self.action(x, y, k).scale(c));
            }
        }
        acc
    }

    fn validate(&self) -> Result<()> {
        let n = self.cat.object_count();
        for x in 0..n {
            for y in 0..n {
                let d = self.cat.hom_dim(x, y);
                let blocks = &self.action[x * n + y];
                if blocks.len() != d {
                    return Err(Error::InvalidModule(format!(
                        "Hom({x},{y}) has {d} basis elements but {} action matrices",
                        blocks.len()
                    )));
                }
                for b in blocks {
                    if (b.rows(), b.cols()) != (self.dims[x], self.dims[y]) {
                        return Err(Error::InvalidModule(format!(
                            "action on Hom({x},{y}) has shape {}x{}, expected {}x{}",
                            b.rows(),
                            b.cols(),
                            self.dims[x],
                            self.dims[y]
                        )));
                    }
                }
            }
        }
        // Identities act as identity matrices.
        for x in 0..n {
            let idm = self.action_of(x, x, self.cat.identity_coords(x));
            if idm != Matrix::identity(self.cat.field(), self.dims[x]) {
                return Err(Error::InvalidModule(format!(
                    "identity of object {x} does not act as the identity"
                )));
            }
        }
        // Contravariance: M(g . f) = M(f) M(g) on all basis pairs.
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let (dxy, dyz) = (self.cat.hom_dim(x, y), self.cat.hom_dim(y, z));
                    for fk in 0..dxy {
                        let fv = FinCat::basis_vec(dxy, fk);
                        for gk in 0..dyz {
                            let gv = FinCat::basis_vec(dyz, gk);
                            let gf = self.cat.compose(x, y, z, &fv, &gv);
                            let lhs = self.action_of(x, z, &gf);
                            let rhs = self.action(x, y, fk).mul(self.action(y, z, gk));
                            if lhs != rhs {
                                return Err(Error::InvalidModule(format!(
                                    "contravariance fails on Hom({x},{y}) x Hom({y},{z}) basis ({fk},{gk})"
                                )));
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    }

    pub fn direct_sum(parts: &[&FinCatModule]) -> FinCatModule {
        assert!(!parts.is_empty());
        let cat = parts[0].cat.clone();
        let f = cat.field();
        let n = cat.object_count();
        let mut dims = vec![0usize; n];
        for p in parts {
            assert!(*p.cat == *cat);
            for x in 0..n {
                dims[x] += p.dims[x];
            }
        }
        let mut action = Vec::with_capacity(n * n);
        for x in 0..n {
            for y in 0..n {
                let d = cat.hom_dim(x, y);
                let mut blocks = Vec::with_capacity(d);
                for k in 0..d {
                    let mut m = Matrix::zeros(f, dims[x], dims[y]);
                    let mut ro = 0;
                    let mut co = 0;
                    for p in parts {
                        let b = p.action(x, y, k);
                        for i in 0..b.rows() {
                            for j in 0..b.cols() {
                                m.set(ro + i, co + j, b.get(i, j));
                            }
                        }
                        ro += p.dims[x];
                        co += p.dims[y];
                    }
                    blocks.push(m);
                }
                action.push(blocks);
            }
        }
        FinCatModule { cat, dims, action }
    }

    /// `rad M` as a per-object column basis: the span of the images of all
    /// radical morphisms acting on `M`.
    pub fn radical_submodule(&self) -> Vec<Matrix> {
        let n = self.cat.object_count();
        let f = self.cat.field();
        let mut out = Vec::with_capacity(n);
        for x in 0..n {
            let mut stack = Matrix::zeros(f, self.dims[x], 0);
            for y in 0..n {
                for r in self.cat.radical_basis(x, y) {
                    stack = stack.hstack(&self.action_of(x, y, &r));
                }
            }
            out.push(stack.column_space_basis());
        }
        out
    }
}

/// The Yoneda projective `C(-, x)` with right-composition action.
pub fn yoneda_module(cat: &Arc<FinCat>, x: usize) -> Result<FinCatModule> {
    let n = cat.object_count();
    if x >= n {
        return Err(Error::UnknownName(format!("object #{x}")));
    }
    let f = cat.field();
    let dims: Vec<usize> = (0..n).map(|y| cat.hom_dim(y, x)).collect();
    let mut action = Vec::with_capacity(n * n);
    for y in 0..n {
        for z in 0..n {
            let d = cat.hom_dim(y, z);
            let mut blocks = Vec::with_capacity(d);
            for k in 0..d {
                // M(f): Hom(z, x) -> Hom(y, x), u |-> u . f
                let fv = FinCat::basis_vec(d, k);
                let cols: Vec<Vec<u64>> = (0..cat.hom_dim(z, x))
                    .map(|u| {
                        let uv = FinCat::basis_vec(cat.hom_dim(z, x), u);
                        cat.compose(y, z, x, &fv, &uv)
                    })
                    .collect();
                blocks.push(Matrix::from_columns(f, dims[y], &cols));
            }
            action.push(blocks);
        }
    }
    FinCatModule::new(cat.clone(), dims, action)
}

/// The injective `D C(x, -)` built through the dual pairing: the action of a
/// morphism is the transpose of post-composition.
pub fn co_injective_module(cat: &Arc<FinCat>, x: usize) -> Result<FinCatModule> {
    let n = cat.object_count();
    if x >= n {
        return Err(Error::UnknownName(format!("object #{x}")));
    }
    let f = cat.field();
    let dims: Vec<usize> = (0..n).map(|y| cat.hom_dim(x, y)).collect();
    let mut action = Vec::with_capacity(n * n);
    for y in 0..n {
        for z in 0..n {
            let d = cat.hom_dim(y, z);
            let mut blocks = Vec::with_capacity(d);
            for k in 0..d {
                // post-composition Hom(x, y) -> Hom(x, z), u |-> f . u;
                // the action M(f): D Hom(x,z) -> D Hom(x,y) is its dual.
                let fv = FinCat::basis_vec(d, k);
                let cols: Vec<Vec<u64>> = (0..cat.hom_dim(x, y))
                    .map(|u| {
                        let uv = FinCat::basis_vec(cat.hom_dim(x, y), u);
                        cat.compose(x, y, z, &uv, &fv)
                    })
                    .collect();
                let post = Matrix::from_columns(f, cat.hom_dim(x, z), &cols);
                blocks.push(post.transpose());
            }
            action.push(blocks);
        }
    }
    FinCatModule::new(cat.clone(), dims, action)
}

/// One simple module per object: one-dimensional at the object, zero
/// elsewhere, radical acting as zero.
pub fn simple_modules(cat: &Arc<FinCat>) -> Vec<FinCatModule> {
    (0..cat.object_count())
        .map(|x| simple_module(cat, x).expect("object in range"))
        .collect()
}

pub fn simple_module(cat: &Arc<FinCat>, x: usize) -> Result<FinCatModule> {
    let n = cat.object_count();
    if x >= n {
        return Err(Error::UnknownName(format!("object #{x}")));
    }
    let f = cat.field();
    let mut dims = vec![0usize; n];
    dims[x] = 1;
    // Scalar functional on End(x): coefficient of the identity mod radical.
    let d = cat.hom_dim(x, x);
    let mut cols = vec![cat.identity_coords(x).to_vec()];
    cols.extend(cat.end_radical(x).iter().cloned());
    let basis = Matrix::from_columns(f, d, &cols);
    let inv = basis
        .inverse()
        .ok_or_else(|| Error::InvalidCategory(format!("End({x}) is not identity plus radical")))?;
    let lambda: Vec<u64> = (0..d).map(|j| inv.get(0, j)).collect();
    let mut action = Vec::with_capacity(n * n);
    for a in 0..n {
        for b in 0..n {
            let hd = cat.hom_dim(a, b);
            let blocks = (0..hd)
                .map(|k| {
                    if a == x && b == x {
                        let mut m = Matrix::zeros(f, 1, 1);
                        m.set(0, 0, lambda[k]);
                        m
                    } else {
                        Matrix::zeros(f, dims[a], dims[b])
                    }
                })
                .collect();
            action.push(blocks);
        }
    }
    FinCatModule::new(cat.clone(), dims, action)
}

/// A morphism of modules: one matrix per object, natural in all morphisms.
#[derive(Debug, Clone)]
pub struct ModMap {
    source: FinCatModule,
    target: FinCatModule,
    blocks: Vec<Matrix>, // per object: target_dim x source_dim
}

impl ModMap {
    pub fn new(source: FinCatModule, target: FinCatModule, blocks: Vec<Matrix>) -> Self {
        debug_assert_eq!(blocks.len(), source.cat.object_count());
        ModMap {
            source,
            target,
            blocks,
        }
    }

    pub fn zero(source: FinCatModule, target: FinCatModule) -> Self {
        let f = source.cat.field();
        let blocks = (0..source.cat.object_count())
            .map(|x| Matrix::zeros(f, target.dims[x], source.dims[x]))
            .collect();
        ModMap::new(source, target, blocks)
    }

    pub fn identity(m: &FinCatModule) -> Self {
        let f = m.cat.field();
        let blocks = m.dims.iter().map(|&d| Matrix::identity(f, d)).collect();
        ModMap::new(m.clone(), m.clone(), blocks)
    }

    pub fn source(&self) -> &FinCatModule {
        &self.source
    }

    pub fn target(&self) -> &FinCatModule {
        &self.target
    }

    pub fn block(&self, x: usize) -> &Matrix {
        &self.blocks[x]
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.iter().all(Matrix::is_zero)
    }

    pub fn is_natural(&self) -> bool {
        let n = self.source.cat.object_count();
        for x in 0..n {
            for y in 0..n {
                for k in 0..self.source.cat.hom_dim(x, y) {
                    let lhs = self.blocks[x].mul(self.source.action(x, y, k));
                    let rhs = self.target.action(x, y, k).mul(&self.blocks[y]);
                    if lhs != rhs {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// `self` after `other`.
    pub fn compose(&self, other: &ModMap) -> ModMap {
        let blocks = self
            .blocks
            .iter()
            .zip(other.blocks.iter())
            .map(|(g, f)| g.mul(f))
            .collect();
        ModMap::new(other.source.clone(), self.target.clone(), blocks)
    }

    /// Kernel submodule with its inclusion.
    pub fn kernel(&self) -> (FinCatModule, ModMap) {
        let f = self.source.cat.field();
        let bases: Vec<Matrix> = self
            .blocks
            .iter()
            .enumerate()
            .map(|(x, b)| Matrix::from_columns(f, self.source.dims[x], &b.kernel_basis()))
            .collect();
        submodule_from_bases(&self.source, bases)
    }

    /// Image submodule of the target with its inclusion.
    pub fn image(&self) -> (FinCatModule, ModMap) {
        let bases: Vec<Matrix> = self.blocks.iter().map(Matrix::column_space_basis).collect();
        submodule_from_bases(&self.target, bases)
    }

    fn flatten(&self) -> Vec<u64> {
        let mut out = Vec::new();
        for b in &self.blocks {
            for i in 0..b.rows() {
                for j in 0..b.cols() {
                    out.push(b.get(i, j));
                }
            }
        }
        out
    }
}

/// Builds the submodule spanned by per-object column bases (assumed closed
/// under the action), with induced action matrices.
fn submodule_from_bases(ambient: &FinCatModule, bases: Vec<Matrix>) -> (FinCatModule, ModMap) {
    let cat = ambient.cat.clone();
    let n = cat.object_count();
    let dims: Vec<usize> = bases.iter().map(Matrix::cols).collect();
    let mut action = Vec::with_capacity(n * n);
    for x in 0..n {
        for y in 0..n {
            let d = cat.hom_dim(x, y);
            let blocks = (0..d)
                .map(|k| {
                    let moved = ambient.action(x, y, k).mul(&bases[y]);
                    bases[x]
                        .solve_matrix(&moved)
                        .expect("submodule closed under action")
                })
                .collect();
            action.push(blocks);
        }
    }
    let sub = FinCatModule { cat, dims, action };
    let incl = ModMap::new(sub.clone(), ambient.clone(), bases);
    (sub, incl)
}

/// Basis of the natural-transformation space `Hom(M, N)`.
#[derive(Debug, Clone)]
pub struct ModHomSpace {
    source: FinCatModule,
    target: FinCatModule,
    basis: Vec<Vec<Matrix>>,
}

impl ModHomSpace {
    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    pub fn basis_map(&self, i: usize) -> ModMap {
        ModMap::new(
            self.source.clone(),
            self.target.clone(),
            self.basis[i].clone(),
        )
    }

    pub fn coordinates_of(&self, f: &ModMap) -> Option<Vec<u64>> {
        let field = self.source.cat.field();
        let total: usize = self
            .source
            .dims
            .iter()
            .zip(self.target.dims.iter())
            .map(|(s, t)| s * t)
            .sum();
        let cols: Vec<Vec<u64>> = self
            .basis
            .iter()
            .map(|b| ModMap::new(self.source.clone(), self.target.clone(), b.clone()).flatten())
            .collect();
        let mat = Matrix::from_columns(field, total, &cols);
        let x = mat.solve_matrix(&Matrix::from_columns(field, total, &[f.flatten()]))?;
        Some(x.column(0))
    }
}

pub fn module_hom(m: &FinCatModule, n: &FinCatModule) -> Result<ModHomSpace> {
    if *m.cat != *n.cat {
        return Err(Error::CategoryMismatch);
    }
    let field = m.cat.field();
    let nobj = m.cat.object_count();
    let mut offsets = vec![0usize; nobj + 1];
    for x in 0..nobj {
        offsets[x + 1] = offsets[x] + n.dims[x] * m.dims[x];
    }
    let unknowns = offsets[nobj];
    let mut rows: Vec<Vec<u64>> = Vec::new();
    for x in 0..nobj {
        for y in 0..nobj {
            for k in 0..m.cat.hom_dim(x, y) {
                let mf = m.action(x, y, k); // M(y) -> M(x)
                let nf = n.action(x, y, k); // N(y) -> N(x)
                // phi_x M(f) = N(f) phi_y, one row per entry (i < n_x, j < m_y).
                for i in 0..n.dims[x] {
                    for j in 0..m.dims[y] {
                        let mut row = vec![0u64; unknowns];
                        for kk in 0..m.dims[x] {
                            let idx = offsets[x] + i * m.dims[x] + kk;
                            row[idx] = field.add(row[idx], mf.get(kk, j));
                        }
                        for l in 0..n.dims[y] {
                            let idx = offsets[y] + l * m.dims[y] + j;
                            row[idx] = field.sub(row[idx], nf.get(i, l));
                        }
                        rows.push(row);
                    }
                }
            }
        }
    }
    let kernel = if rows.is_empty() {
        Matrix::zeros(field, 0, unknowns).kernel_basis()
    } else {
        Matrix::from_columns(field, unknowns, &rows)
            .transpose()
            .kernel_basis()
    };
    let basis = kernel
        .into_iter()
        .map(|vecu| {
            let mut blocks = Vec::with_capacity(nobj);
            for x in 0..nobj {
                let mut b = Matrix::zeros(field, n.dims[x], m.dims[x]);
                for i in 0..n.dims[x] {
                    for j in 0..m.dims[x] {
                        b.set(i, j, vecu[offsets[x] + i * m.dims[x] + j]);
                    }
                }
                blocks.push(b);
            }
            blocks
        })
        .collect();
    Ok(ModHomSpace {
        source: m.clone(),
        target: n.clone(),
        basis,
    })
}

/// Projective cover of a module: generators chosen as a complement of
/// `rad M`, covered by the matching sum of Yoneda projectives.
pub struct Cover {
    /// Object index per Yoneda summand.
    pub generators: Vec<usize>,
    pub projective: FinCatModule,
    pub map: ModMap,
}

pub fn projective_cover(m: &FinCatModule) -> Cover {
    let cat = m.cat.clone();
    let f = cat.field();
    let n = cat.object_count();
    let rad = m.radical_submodule();
    let mut gens: Vec<(usize, Vec<u64>)> = Vec::new();
    for x in 0..n {
        let (_, appended) = rad[x].extend_to_basis();
        for idx in appended {
            let mut e = vec![0u64; m.dims[x]];
            e[idx] = 1;
            gens.push((x, e));
        }
    }
    if gens.is_empty() {
        let p = FinCatModule::zero(cat);
        let map = ModMap::zero(p.clone(), m.clone());
        return Cover {
            generators: Vec::new(),
            projective: p,
            map,
        };
    }
    let yonedas: Vec<FinCatModule> = gens
        .iter()
        .map(|(x, _)| yoneda_module(&cat, *x).expect("object in range"))
        .collect();
    let projective = FinCatModule::direct_sum(&yonedas.iter().collect::<Vec<_>>());
    // Cover map at object o: column for (generator (x, g), basis u of
    // Hom(o, x)) is M(u)(g).
    let mut blocks = Vec::with_capacity(n);
    for o in 0..n {
        let mut cols: Vec<Vec<u64>> = Vec::new();
        for (x, g) in &gens {
            for u in 0..cat.hom_dim(o, *x) {
                let uv = FinCat::basis_vec(cat.hom_dim(o, *x), u);
                cols.push(m.action_of(o, *x, &uv).mul_vec(g));
            }
        }
        blocks.push(Matrix::from_columns(f, m.dims[o], &cols));
    }
    let map = ModMap::new(projective.clone(), m.clone(), blocks);
    debug_assert!(map.is_natural());
    debug_assert!(
        (0..n).all(|o| map.block(o).rank() == m.dims[o]),
        "cover must be surjective"
    );
    Cover {
        generators: gens.into_iter().map(|(x, _)| x).collect(),
        projective,
        map,
    }
}

/// A minimal projective resolution up to a depth: `P_k -> ... -> P_0 -> M`.
pub struct Resolution {
    pub projectives: Vec<FinCatModule>,
    /// `maps[0] : P_0 -> M`; `maps[i] : P_i -> P_{i-1}` for `i > 0`.
    pub maps: Vec<ModMap>,
    /// Objects of the Yoneda summands of each `P_i`.
    pub generators: Vec<Vec<usize>>,
    /// Whether some syzygy vanished at or before the requested depth.
    pub terminated: bool,
}

impl Resolution {
    /// Projective dimension, when the resolution terminated.
    pub fn finished_length(&self) -> Option<usize> {
        if self.terminated {
            Some(self.projectives.len().saturating_sub(1))
        } else {
            None
        }
    }
}

pub fn resolve(m: &FinCatModule, depth: usize) -> Resolution {
    let mut projectives = Vec::new();
    let mut maps: Vec<ModMap> = Vec::new();
    let mut generators = Vec::new();
    let mut current = m.clone();
    let mut incl: Option<ModMap> = None;
    let mut terminated = false;
    for _ in 0..=depth {
        if current.is_zero() {
            terminated = true;
            break;
        }
        let cover = projective_cover(&current);
        // Minimality: the syzygy lands in rad P.
        debug_assert!({
            let (_, k_incl) = cover.map.kernel();
            let radp = cover.projective.radical_submodule();
            (0..cover.projective.cat.object_count()).all(|x| radp[x].spans(k_incl.block(x)))
        });
        let to_prev = match &incl {
            None => cover.map.clone(),
            Some(i) => i.compose(&cover.map),
        };
        let (syz, syz_incl) = cover.map.kernel();
        projectives.push(cover.projective);
        generators.push(cover.generators);
        maps.push(to_prev);
        incl = Some(syz_incl);
        current = syz;
    }
    if !terminated && current.is_zero() {
        terminated = true;
    }
    Resolution {
        projectives,
        maps,
        generators,
        terminated,
    }
}

/// `dim Ext^deg(M, N)`, as homology of `Hom(P_*, N)` for a minimal resolution
/// of `M` taken one step past `deg`, so the answer is exact.
pub fn ext_group(m: &FinCatModule, n: &FinCatModule, deg: usize) -> Result<usize> {
    if *m.cat != *n.cat {
        return Err(Error::CategoryMismatch);
    }
    let res = resolve(m, deg + 1);
    ext_from_resolution(&res, n, deg)
}

/// Ext from an already-computed resolution, which must reach `deg + 1` or
/// have terminated earlier.
pub fn ext_from_resolution(res: &Resolution, n: &FinCatModule, deg: usize) -> Result<usize> {
    if !res.terminated && res.projectives.len() < deg + 2 {
        return Err(Error::Invalid(String::from(
            "resolution truncated before the requested degree",
        )));
    }
    let hom_of = |i: usize| -> Result<Option<ModHomSpace>> {
        match res.projectives.get(i) {
            Some(p) => Ok(Some(module_hom(p, n)?)),
            None => Ok(None),
        }
    };
    // Precomposition Hom(P_i, N) -> Hom(P_{i+1}, N).
    let transfer = |i: usize| -> Result<Matrix> {
        let f = n.cat.field();
        let from = hom_of(i)?;
        let to = hom_of(i + 1)?;
        let (Some(from), Some(to), Some(d)) = (from.as_ref(), to.as_ref(), res.maps.get(i + 1))
        else {
            let rows = to.map_or(0, |t| t.dimension());
            let cols = from.map_or(0, |s| s.dimension());
            return Ok(Matrix::zeros(f, rows, cols));
        };
        let mut out = Matrix::zeros(f, to.dimension(), from.dimension());
        for j in 0..from.dimension() {
            let img = from.basis_map(j).compose(d);
            let coords = to
                .coordinates_of(&img)
                .expect("precomposition stays in Hom");
            for i2 in 0..to.dimension() {
                out.set(i2, j, coords[i2]);
            }
        }
        Ok(out)
    };
    let b_deg = hom_of(deg)?.map_or(0, |s| s.dimension());
    let t_out = transfer(deg)?;
    let ker = b_deg - t_out.rank();
    let im = if deg == 0 { 0 } else { transfer(deg - 1)?.rank() };
    Ok(ker - im)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GlobalDimension {
    Finite(usize),
    ExceedsCap(usize),
}

/// Maximum projective dimension over the simple modules.
pub fn global_dimension(cat: &Arc<FinCat>, cap: usize) -> GlobalDimension {
    let mut best = 0usize;
    for s in simple_modules(cat) {
        let res = resolve(&s, cap);
        match res.finished_length() {
            Some(pd) => best = best.max(pd),
            None => return GlobalDimension::ExceedsCap(cap),
        }
    }
    GlobalDimension::Finite(best)
}

/// `Hom(M, N)` in the module category modulo morphisms factoring through a
/// projective module.
pub struct StableModHom {
    hom_dimension: usize,
    factor_rank: usize,
}

impl StableModHom {
    pub fn dimension(&self) -> usize {
        self.hom_dimension - self.factor_rank
    }

    pub fn hom_dimension(&self) -> usize {
        self.hom_dimension
    }

    pub fn factor_dimension(&self) -> usize {
        self.factor_rank
    }
}

pub fn stable_module_hom(m: &FinCatModule, n: &FinCatModule) -> Result<StableModHom> {
    let hom = module_hom(m, n)?;
    let d = hom.dimension();
    let cover = projective_cover(n);
    let lifts = module_hom(m, &cover.projective)?;
    let f = m.cat.field();
    let mut cols: Vec<Vec<u64>> = Vec::new();
    for i in 0..lifts.dimension() {
        let through = cover.map.compose(&lifts.basis_map(i));
        cols.push(
            hom.coordinates_of(&through)
                .expect("factoring morphism lies in Hom"),
        );
    }
    let rank = Matrix::from_columns(f, d, &cols).rank();
    Ok(StableModHom {
        hom_dimension: d,
        factor_rank: rank,
    })
}

/// The one-object category with End = k.
pub fn point_category(field: PrimeField) -> Arc<FinCat> {
    let mut b = FinCatBuilder::new(field, alloc::vec![String::from("pt")], alloc::vec![alloc::vec![1]]);
    b.set_composition(0, 0, 0, 0, 0, &[1]);
    b.set_identity(0, alloc::vec![1]);
    Arc::new(b.build().expect("point category is valid"))
}

/// The stable category of `mod A`, presented as a finite linear category
/// whose objects are the non-projective indecomposables.
pub struct StableCategory {
    pub cat: Arc<FinCat>,
    /// Object `i` of `cat` corresponds to this indecomposable.
    pub objects: Vec<Representation>,
}

/// Builds the stable category. For a Dynkin quiver the objects are knitted;
/// otherwise a finite object list must be supplied by the caller. Projective
/// summands in a supplied list are stripped.
pub fn build_stable_category(
    q: &Arc<Quiver>,
    field: PrimeField,
    supplied: Option<Vec<Representation>>,
    seed: u64,
) -> Result<StableCategory> {
    let candidates = match supplied {
        Some(list) => {
            for m in &list {
                if decompose(m, seed).len() != 1 {
                    return Err(Error::Decomposable);
                }
            }
            list
        }
        None => knit_indecomposables(q, field)?,
    };
    let objects: Vec<Representation> = candidates
        .into_iter()
        .filter(|m| !tau(m).is_zero())
        .collect();
    let n = objects.len();
    let mut names: Vec<String> = Vec::with_capacity(n);
    for m in &objects {
        let wide = m.dims().iter().any(|&x| x > 9);
        let mut name = String::from("m");
        for (i, d) in m.dims().iter().enumerate() {
            if i > 0 && wide {
                name.push('.');
            }
            name.push_str(&format!("{d}"));
        }
        let mut unique = name.clone();
        let mut k = 2;
        while names.contains(&unique) {
            unique = format!("{name}_{k}");
            k += 1;
        }
        names.push(unique);
    }
    let mut st: Vec<Vec<StableHom>> = Vec::with_capacity(n);
    for x in 0..n {
        let mut row = Vec::with_capacity(n);
        for y in 0..n {
            row.push(stable_hom(&objects[x], &objects[y])?);
        }
        st.push(row);
    }
    let hom_dims: Vec<Vec<usize>> = (0..n)
        .map(|x| (0..n).map(|y| st[x][y].dimension()).collect())
        .collect();
    let mut builder = FinCatBuilder::new(field, names, hom_dims);
    for x in 0..n {
        for y in 0..n {
            let fx = st[x][y].section();
            for z in 0..n {
                let gy = st[y][z].section();
                for (fi, fmap) in fx.iter().enumerate() {
                    for (gi, gmap) in gy.iter().enumerate() {
                        let comp: RepMap = gmap.compose(fmap);
                        let coeffs = st[x][z].project(&comp).expect("composite lies in Hom");
                        builder.set_composition(x, y, z, fi, gi, &coeffs);
                    }
                }
            }
        }
        let idc = st[x][x]
            .project(&RepMap::identity(&objects[x]))
            .expect("identity lies in Hom");
        builder.set_identity(x, idc);
    }
    let cat = Arc::new(builder.build()?);
    Ok(StableCategory { cat, objects })
}


#[cfg(test)]
mod tests {
    use super::fixtures::{chain_category, f101, point_category};
    use super::*;

    #[test]
    fn point_category_is_valid() {
        let c = point_category();
        assert_eq!(c.object_count(), 1);
        assert!(c.end_radical(0).is_empty());
    }

    #[test]
    fn dual_numbers_are_local() {
        // k[e]/(e^2): End basis {1, e}.
        let mut b = FinCatBuilder::new(f101(), vec![String::from("x")], vec![vec![2]]);
        b.set_composition(0, 0, 0, 0, 0, &[1, 0]);
        b.set_composition(0, 0, 0, 0, 1, &[0, 1]);
        b.set_composition(0, 0, 0, 1, 0, &[0, 1]);
        b.set_composition(0, 0, 0, 1, 1, &[0, 0]);
        b.set_identity(0, vec![1, 0]);
        let c = b.build().unwrap();
        assert_eq!(c.end_radical(0).len(), 1);
    }

    #[test]
    fn split_end_ring_is_rejected() {
        // k x k: not local, construction must fail.
        let mut b = FinCatBuilder::new(f101(), vec![String::from("x")], vec![vec![2]]);
        b.set_composition(0, 0, 0, 0, 0, &[1, 0]);
        b.set_composition(0, 0, 0, 0, 1, &[0, 0]);
        b.set_composition(0, 0, 0, 1, 0, &[0, 0]);
        b.set_composition(0, 0, 0, 1, 1, &[0, 1]);
        b.set_identity(0, vec![1, 1]);
        assert!(matches!(b.build(), Err(Error::InvalidCategory(_))));
    }

    #[test]
    fn broken_unit_law_is_rejected() {
        let mut b = FinCatBuilder::new(f101(), vec![String::from("x")], vec![vec![1]]);
        b.set_composition(0, 0, 0, 0, 0, &[2]);
        b.set_identity(0, vec![1]);
        assert!(matches!(b.build(), Err(Error::InvalidCategory(_))));
    }

    #[test]
    fn broken_associativity_is_rejected() {
        // Two objects, Hom(0,1) two-dimensional with a non-associative table:
        // e . f defined inconsistently against the End(1) = k[u]/(u^2) action.
        let mut b = FinCatBuilder::new(
            f101(),
            vec![String::from("x"), String::from("y")],
            vec![vec![1, 2], vec![0, 2]],
        );
        b.set_composition(0, 0, 0, 0, 0, &[1]);
        b.set_identity(0, vec![1]);
        // End(y) = k[u]/(u^2), basis {id, u}.
        b.set_composition(1, 1, 1, 0, 0, &[1, 0]);
        b.set_composition(1, 1, 1, 0, 1, &[0, 1]);
        b.set_composition(1, 1, 1, 1, 0, &[0, 1]);
        b.set_composition(1, 1, 1, 1, 1, &[0, 0]);
        b.set_identity(1, vec![1, 0]);
        // Hom(0,1) basis {f, g} with id acting correctly...
        b.set_composition(0, 0, 1, 0, 0, &[1, 0]);
        b.set_composition(0, 0, 1, 0, 1, &[0, 1]);
        b.set_composition(0, 1, 1, 0, 0, &[1, 0]);
        b.set_composition(0, 1, 1, 1, 0, &[0, 1]);
        // ...but u . f = f (instead of lying in the radical coherently):
        b.set_composition(0, 1, 1, 0, 1, &[1, 0]);
        b.set_composition(0, 1, 1, 1, 1, &[0, 0]);
        assert!(b.build().is_err());
    }

    #[test]
    fn yoneda_module_of_chain() {
        let c = chain_category(3);
        let y1 = yoneda_module(&c, 1).unwrap();
        // C(-, c1): dim 1 at c0 (the chain morphism) and at c1 (identity).
        assert_eq!(y1.dims(), &[1, 1, 0]);
        let y0 = yoneda_module(&c, 0).unwrap();
        assert_eq!(y0.dims(), &[1, 0, 0]);
    }

    #[test]
    fn co_injective_of_chain() {
        let c = chain_category(3);
        let i1 = co_injective_module(&c, 1).unwrap();
        // D C(c1, -): dim 1 at c1 and c2.
        assert_eq!(i1.dims(), &[0, 1, 1]);
    }

    #[test]
    fn one_object_point_yoneda_equals_co_injective() {
        let c = point_category();
        let y = yoneda_module(&c, 0).unwrap();
        let i = co_injective_module(&c, 0).unwrap();
        assert_eq!(y.dims(), i.dims());
        assert_eq!(y.dims(), &[1]);
    }

    #[test]
    fn simples_count_and_covers() {
        let c = chain_category(3);
        let simples = simple_modules(&c);
        assert_eq!(simples.len(), 3);
        for (x, s) in simples.iter().enumerate() {
            let y = yoneda_module(&c, x).unwrap();
            assert_eq!(module_hom(&y, s).unwrap().dimension(), 1);
            let cover = projective_cover(s);
            assert_eq!(cover.generators, vec![x]);
        }
    }

    #[test]
    fn ext0_equals_natural_transformations() {
        let c = chain_category(3);
        let simples = simple_modules(&c);
        for s in &simples {
            for t in &simples {
                let direct = module_hom(s, t).unwrap().dimension();
                let via_res = ext_group(s, t, 0).unwrap();
                assert_eq!(direct, via_res);
            }
        }
        let y = yoneda_module(&c, 2).unwrap();
        // Ext^0(yoneda X, N) = dim N(X).
        for t in &simples {
            assert_eq!(ext_group(&y, t, 0).unwrap(), t.dim_at(2));
        }
    }

    #[test]
    fn semisimple_point_has_no_higher_ext() {
        let c = point_category();
        let s = simple_module(&c, 0).unwrap();
        for d in 1..4 {
            assert_eq!(ext_group(&s, &s, d).unwrap(), 0);
        }
        assert_eq!(global_dimension(&c, 8), GlobalDimension::Finite(0));
    }

    #[test]
    fn chain_ext1_between_adjacent_simples() {
        // Arrow-count oracle: one chain morphism i -> i+1 gives
        // dim Ext^1(S_{i+1}, S_i) = 1; all other Ext^1 vanish.
        let c = chain_category(3);
        let s = simple_modules(&c);
        for i in 0..3 {
            for j in 0..3 {
                let expected = usize::from(i == j + 1);
                assert_eq!(
                    ext_group(&s[i], &s[j], 1).unwrap(),
                    expected,
                    "Ext^1(S_{i}, S_{j})"
                );
            }
        }
    }

    #[test]
    fn chain_resolutions_move_down() {
        let c = chain_category(3);
        let s = simple_modules(&c);
        // Simple at the middle object: pd >= 1 and covers descend the chain.
        let res = resolve(&s[1], 8);
        assert!(res.terminated);
        assert!(res.finished_length().unwrap() >= 1);
        for (step, gens) in res.generators.iter().enumerate() {
            for &g in gens {
                assert_eq!(g, 1 - step, "cover generators descend one step");
            }
        }
        let res0 = resolve(&s[0], 8);
        assert_eq!(res0.finished_length(), Some(0));
        assert_eq!(global_dimension(&c, 8), GlobalDimension::Finite(2));
    }

    #[test]
    fn stable_category_of_a2_is_a_point() {
        let q = Arc::new(Quiver::parse("vertices 2\narrow a 1 2\n").unwrap());
        let sc = build_stable_category(&q, f101(), None, 0).unwrap();
        assert_eq!(sc.cat.object_count(), 1);
        assert_eq!(sc.cat.hom_dim(0, 0), 1);
        assert_eq!(sc.objects[0].dims(), &[1, 0]);
        assert_eq!(global_dimension(&sc.cat, 8), GlobalDimension::Finite(0));
    }

    #[test]
    fn stable_category_of_a3() {
        let q = Arc::new(Quiver::parse("vertices 3\narrow a 1 2\narrow b 2 3\n").unwrap());
        let sc = build_stable_category(&q, f101(), None, 0).unwrap();
        // 6 indecomposables minus 3 projectives.
        assert_eq!(sc.cat.object_count(), 3);
        // Yoneda dims agree with the stable-hom table by construction.
        for x in 0..3 {
            let y = yoneda_module(&sc.cat, x).unwrap();
            for o in 0..3 {
                assert_eq!(y.dim_at(o), sc.cat.hom_dim(o, x));
            }
        }
        match global_dimension(&sc.cat, 8) {
            GlobalDimension::Finite(d) => assert!(d <= 2, "gl.dim = {d}"),
            GlobalDimension::ExceedsCap(_) => panic!("must be finite"),
        }
    }

    #[test]
    fn stable_category_rejects_decomposable_supplied_objects() {
        let q = Arc::new(Quiver::parse("vertices 2\narrow a 1 2\n").unwrap());
        let f = f101();
        let s1 = Representation::simple(q.clone(), f, 0).unwrap();
        let sum = Representation::direct_sum(&[&s1, &s1]);
        assert!(matches!(
            build_stable_category(&q, f, Some(vec![sum]), 0),
            Err(Error::Decomposable)
        ));
    }

    #[test]
    fn stable_category_needs_objects_for_non_dynkin() {
        let q = Arc::new(Quiver::parse("vertices 2\narrow a 1 2\narrow b 1 2\n").unwrap());
        assert!(matches!(
            build_stable_category(&q, f101(), None, 0),
            Err(Error::NonDynkin)
        ));
    }
}
