//! Finite-dimensional representations of an acyclic quiver: the category
//! `mod A` for the hereditary path algebra `A = kQ`.
//!
//! Representations are covariant on vertices: an arrow `a : i -> j` induces
//! `M(a) : M(i) -> M(j)`, and `Hom(P(i), M) = M(i)`. Hom spaces are computed
//! as intertwiner systems, `Ext^1` from the standard two-term projective
//! resolution, and direct-sum decomposition by seeded Fitting splittings.

use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use crate::linalg::{Matrix, PrimeField};
use crate::quiver::{Path, Quiver};
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Representation {
    quiver: Arc<Quiver>,
    field: PrimeField,
    dims: Vec<usize>,
    maps: Vec<Matrix>, // one per arrow, shape dim(target) x dim(source)
}

impl Representation {
    pub fn new(
        quiver: Arc<Quiver>,
        field: PrimeField,
        dims: Vec<usize>,
        maps: Vec<Matrix>,
    ) -> Result<Self> {
        if dims.len() != quiver.vertex_count() {
            return Err(Error::DimensionMismatch {
                expected: quiver.vertex_count(),
                got: dims.len(),
            });
        }
        if maps.len() != quiver.arrows().len() {
            return Err(Error::DimensionMismatch {
                expected: quiver.arrows().len(),
                got: maps.len(),
            });
        }
        for (a, m) in quiver.arrows().iter().zip(maps.iter()) {
            if m.rows() != dims[a.target] || m.cols() != dims[a.source] {
                return Err(Error::InvalidModule(alloc::format!(
                    "map for arrow `{}` has shape {}x{}, expected {}x{}",
                    a.name,
                    m.rows(),
                    m.cols(),
                    dims[a.target],
                    dims[a.source],
                )));
            }
        }
        Ok(Representation {
            quiver,
            field,
            dims,
            maps,
        })
    }

    pub fn zero(quiver: Arc<Quiver>, field: PrimeField) -> Self {
        let dims = vec![0; quiver.vertex_count()];
        let maps = quiver
            .arrows()
            .iter()
            .map(|_| Matrix::zeros(field, 0, 0))
            .collect();
        Representation {
            quiver,
            field,
            dims,
            maps,
        }
    }

    /// Simple module concentrated at one vertex.
    pub fn simple(quiver: Arc<Quiver>, field: PrimeField, v: usize) -> Result<Self> {
        if v >= quiver.vertex_count() {
            return Err(Error::UnknownName(alloc::format!("vertex #{v}")));
        }
        let mut dims = vec![0; quiver.vertex_count()];
        dims[v] = 1;
        let maps = quiver
            .arrows()
            .iter()
            .map(|a| Matrix::zeros(field, dims[a.target], dims[a.source]))
            .collect();
        Ok(Representation {
            quiver,
            field,
            dims,
            maps,
        })
    }

    /// Indecomposable projective `P(v)`: the space at `w` has the paths
    /// `v -> w` as basis and arrows act by path concatenation.
    pub fn projective(quiver: Arc<Quiver>, field: PrimeField, v: usize) -> Result<Self> {
        if v >= quiver.vertex_count() {
            return Err(Error::UnknownName(alloc::format!("vertex #{v}")));
        }
        let paths: Vec<Vec<Path>> = (0..quiver.vertex_count())
            .map(|w| quiver.paths(v, w))
            .collect();
        let dims: Vec<usize> = paths.iter().map(Vec::len).collect();
        let mut maps = Vec::new();
        for a in quiver.arrows() {
            let src = &paths[a.source];
            let tgt = &paths[a.target];
            let mut m = Matrix::zeros(field, tgt.len(), src.len());
            let ai = quiver.arrow_index(&a.name)?;
            for (j, p) in src.iter().enumerate() {
                let mut ext = p.clone();
                ext.push(ai);
                let i = tgt.iter().position(|q| *q == ext).expect("extended path");
                m.set(i, j, 1);
            }
            maps.push(m);
        }
        Ok(Representation {
            quiver,
            field,
            dims,
            maps,
        })
    }

    /// Indecomposable injective `I(v)`: the dual of the paths into `v`, with
    /// arrows acting by the transpose of path prepending.
    pub fn injective(quiver: Arc<Quiver>, field: PrimeField, v: usize) -> Result<Self> {
        if v >= quiver.vertex_count() {
            return Err(Error::UnknownName(alloc::format!("vertex #{v}")));
        }
        let paths: Vec<Vec<Path>> = (0..quiver.vertex_count())
            .map(|w| quiver.paths(w, v))
            .collect();
        let dims: Vec<usize> = paths.iter().map(Vec::len).collect();
        let mut maps = Vec::new();
        for a in quiver.arrows() {
            // prepend(a) : paths(target(a), v) -> paths(source(a), v)
            let from = &paths[a.target];
            let to = &paths[a.source];
            let mut pre = Matrix::zeros(field, to.len(), from.len());
            let ai = quiver.arrow_index(&a.name)?;
            for (j, p) in from.iter().enumerate() {
                let mut ext = vec![ai];
                ext.extend_from_slice(p);
                let i = to.iter().position(|q| *q == ext).expect("prepended path");
                pre.set(i, j, 1);
            }
            maps.push(pre.transpose());
        }
        Ok(Representation {
            quiver,
            field,
            dims,
            maps,
        })
    }

    pub fn quiver(&self) -> &Arc<Quiver> {
        &self.quiver
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dims_i64(&self) -> Vec<i64> {
        self.dims.iter().map(|&d| d as i64).collect()
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }

    pub fn map(&self, arrow: usize) -> &Matrix {
        &self.maps[arrow]
    }

    /// Action of a path, as the composite of its arrow maps.
    pub fn path_action(&self, from: usize, path: &Path) -> Matrix {
        let mut acc = Matrix::identity(self.field, self.dims[from]);
        for &a in path {
            acc = self.maps[a].mul(&acc);
        }
        acc
    }

    pub fn direct_sum(parts: &[&Representation]) -> Representation {
        assert!(!parts.is_empty(), "empty direct sum needs a quiver");
        let quiver = parts[0].quiver.clone();
        let field = parts[0].field;
        let n = quiver.vertex_count();
        let mut dims = vec![0usize; n];
        for p in parts {
            assert_eq!(*p.quiver, *quiver, "direct sum across quivers");
            for v in 0..n {
                dims[v] += p.dims[v];
            }
        }
        let mut maps = Vec::new();
        for (ai, a) in quiver.arrows().iter().enumerate() {
            let mut m = Matrix::zeros(field, dims[a.target], dims[a.source]);
            let mut ro = 0;
            let mut co = 0;
            for p in parts {
                let b = p.map(ai);
                for i in 0..b.rows() {
                    for j in 0..b.cols() {
                        m.set(ro + i, co + j, b.get(i, j));
                    }
                }
                ro += p.dims[a.target];
                co += p.dims[a.source];
            }
            maps.push(m);
        }
        Representation {
            quiver,
            field,
            dims,
            maps,
        }
    }

    /// The dual representation over the opposite quiver.
    pub fn dual(&self) -> Representation {
        let op = Arc::new(self.quiver.opposite());
        let maps = self.maps.iter().map(Matrix::transpose).collect();
        Representation {
            quiver: op,
            field: self.field,
            dims: self.dims.clone(),
            maps,
        }
    }

    /// Rebinds to a structurally equal quiver value (used after double
    /// dualization, which produces a fresh but identical quiver).
    pub fn rebind_quiver(self, quiver: Arc<Quiver>) -> Result<Representation> {
        if *quiver != **self.quiver() {
            return Err(Error::QuiverMismatch);
        }
        Representation::new(quiver, self.field, self.dims, self.maps)
    }

    /// Uniformly random representation with dimensions up to `max_dim`.
    pub fn random(
        quiver: Arc<Quiver>,
        field: PrimeField,
        max_dim: usize,
        rng: &mut ChaCha8Rng,
    ) -> Representation {
        let n = quiver.vertex_count();
        let dims: Vec<usize> = (0..n)
            .map(|_| (rng.next_u64() as usize) % (max_dim + 1))
            .collect();
        let p = field.modulus();
        let maps = quiver
            .arrows()
            .iter()
            .map(|a| {
                let mut m = Matrix::zeros(field, dims[a.target], dims[a.source]);
                for i in 0..m.rows() {
                    for j in 0..m.cols() {
                        m.set(i, j, rng.next_u64() % p);
                    }
                }
                m
            })
            .collect();
        Representation {
            quiver,
            field,
            dims,
            maps,
        }
    }
}

/// A morphism of representations given by one matrix per vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RepMap {
    source: Representation,
    target: Representation,
    blocks: Vec<Matrix>, // per vertex, shape target_dim x source_dim
}

impl RepMap {
    pub fn new(source: Representation, target: Representation, blocks: Vec<Matrix>) -> Self {
        debug_assert_eq!(blocks.len(), source.quiver.vertex_count());
        for (v, b) in blocks.iter().enumerate() {
            debug_assert_eq!((b.rows(), b.cols()), (target.dims[v], source.dims[v]));
        }
        RepMap {
            source,
            target,
            blocks,
        }
    }

    pub fn zero(source: Representation, target: Representation) -> Self {
        let f = source.field;
        let blocks = (0..source.quiver.vertex_count())
            .map(|v| Matrix::zeros(f, target.dims[v], source.dims[v]))
            .collect();
        RepMap::new(source, target, blocks)
    }

    pub fn identity(rep: &Representation) -> Self {
        let blocks = rep
            .dims
            .iter()
            .map(|&d| Matrix::identity(rep.field, d))
            .collect();
        RepMap::new(rep.clone(), rep.clone(), blocks)
    }

    pub fn source(&self) -> &Representation {
        &self.source
    }

    pub fn target(&self) -> &Representation {
        &self.target
    }

    pub fn block(&self, v: usize) -> &Matrix {
        &self.blocks[v]
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.iter().all(Matrix::is_zero)
    }

    /// Whether every vertex block commutes with the arrow actions.
    pub fn intertwines(&self) -> bool {
        for (ai, a) in self.source.quiver.arrows().iter().enumerate() {
            let lhs = self.target.map(ai).mul(&self.blocks[a.source]);
            let rhs = self.blocks[a.target].mul(self.source.map(ai));
            if lhs != rhs {
                return false;
            }
        }
        true
    }

    /// `self` after `other`.
    pub fn compose(&self, other: &RepMap) -> RepMap {
        debug_assert_eq!(other.target.dims, self.source.dims);
        let blocks = self
            .blocks
            .iter()
            .zip(other.blocks.iter())
            .map(|(g, f)| g.mul(f))
            .collect();
        RepMap::new(other.source.clone(), self.target.clone(), blocks)
    }

    pub fn add(&self, other: &RepMap) -> RepMap {
        let blocks = self
            .blocks
            .iter()
            .zip(other.blocks.iter())
            .map(|(a, b)| a.add(b))
            .collect();
        RepMap::new(self.source.clone(), self.target.clone(), blocks)
    }

    pub fn scale(&self, c: u64) -> RepMap {
        let blocks = self.blocks.iter().map(|b| b.scale(c)).collect();
        RepMap::new(self.source.clone(), self.target.clone(), blocks)
    }

    pub fn is_iso(&self) -> bool {
        self.blocks.iter().all(Matrix::is_invertible)
    }

    /// Kernel subrepresentation with its inclusion.
    pub fn kernel(&self) -> (Representation, RepMap) {
        let f = self.source.field;
        let q = self.source.quiver.clone();
        let bases: Vec<Matrix> = self
            .blocks
            .iter()
            .enumerate()
            .map(|(v, b)| {
                let cols = b.kernel_basis();
                Matrix::from_columns(f, self.source.dims[v], &cols)
            })
            .collect();
        self.subrep_from_bases(q, bases)
    }

    /// Image subrepresentation of the target with its inclusion.
    pub fn image(&self) -> (Representation, RepMap) {
        let q = self.target.quiver.clone();
        let bases: Vec<Matrix> = self.blocks.iter().map(Matrix::column_space_basis).collect();
        // delegate to the target-side helper
        RepMap::sub_of(&self.target, q, bases)
    }

    fn subrep_from_bases(&self, q: Arc<Quiver>, bases: Vec<Matrix>) -> (Representation, RepMap) {
        RepMap::sub_of(&self.source, q, bases)
    }

    /// Builds the subrepresentation spanned by the given per-vertex bases
    /// (assumed closed under the arrow actions), with induced maps.
    fn sub_of(ambient: &Representation, q: Arc<Quiver>, bases: Vec<Matrix>) -> (Representation, RepMap) {
        let f = ambient.field;
        let dims: Vec<usize> = bases.iter().map(Matrix::cols).collect();
        let mut maps = Vec::new();
        for (ai, a) in q.arrows().iter().enumerate() {
            let moved = ambient.map(ai).mul(&bases[a.source]);
            let induced = bases[a.target]
                .solve_matrix(&moved)
                .expect("subspace closed under action");
            maps.push(induced);
        }
        let sub = Representation {
            quiver: q,
            field: f,
            dims,
            maps,
        };
        let incl = RepMap::new(sub.clone(), ambient.clone(), bases);
        (sub, incl)
    }

    /// Cokernel with the projection from the target.
    pub fn cokernel(&self) -> (Representation, RepMap) {
        let f = self.target.field;
        let q = self.target.quiver.clone();
        let projections: Vec<Matrix> = self
            .blocks
            .iter()
            .map(|b| b.column_space_basis().quotient_map())
            .collect();
        let dims: Vec<usize> = projections.iter().map(Matrix::rows).collect();
        let mut maps = Vec::new();
        for (ai, a) in q.arrows().iter().enumerate() {
            // Induced map C(a) with C(a) q_src = q_tgt T(a); solve on the nose.
            let rhs = projections[a.target].mul(self.target.map(ai));
            let qt = projections[a.source].transpose();
            // q_src has full row rank, so q_src^T X^T = rhs^T is solvable.
            let xt = qt
                .solve_matrix(&rhs.transpose())
                .expect("quotient map has full row rank");
            maps.push(xt.transpose());
        }
        let coker = Representation {
            quiver: q,
            field: f,
            dims,
            maps,
        };
        let proj = RepMap::new(self.target.clone(), coker.clone(), projections);
        (coker, proj)
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

/// A basis of `Hom_A(M, N)`.
#[derive(Debug, Clone)]
pub struct MorphismSpace {
    source: Representation,
    target: Representation,
    basis: Vec<Vec<Matrix>>,
}

impl MorphismSpace {
    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    pub fn basis_map(&self, i: usize) -> RepMap {
        RepMap::new(
            self.source.clone(),
            self.target.clone(),
            self.basis[i].clone(),
        )
    }

    pub fn element(&self, coords: &[u64]) -> RepMap {
        assert_eq!(coords.len(), self.basis.len());
        let mut acc = RepMap::zero(self.source.clone(), self.target.clone());
        for (c, b) in coords.iter().zip(self.basis.iter()) {
            if *c == 0 {
                continue;
            }
            let m = RepMap::new(self.source.clone(), self.target.clone(), b.clone());
            acc = acc.add(&m.scale(*c));
        }
        acc
    }

    pub fn random_element(&self, rng: &mut ChaCha8Rng) -> RepMap {
        let p = self.source.field.modulus();
        let coords: Vec<u64> = (0..self.basis.len()).map(|_| rng.next_u64() % p).collect();
        self.element(&coords)
    }

    /// Coordinates of a morphism in this basis, if it lies in the span.
    pub fn coordinates_of(&self, f: &RepMap) -> Option<Vec<u64>> {
        let field = self.source.field;
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
            .map(|b| {
                RepMap::new(self.source.clone(), self.target.clone(), b.clone()).flatten()
            })
            .collect();
        let mat = Matrix::from_columns(field, total, &cols);
        let x = mat.solve_matrix(&Matrix::from_columns(field, total, &[f.flatten()]))?;
        Some(x.column(0))
    }
}

/// Solves the intertwiner system defining `Hom_A(M, N)`.
pub fn hom_space(m: &Representation, n: &Representation) -> Result<MorphismSpace> {
    if **m.quiver() != **n.quiver() || m.field != n.field {
        return Err(Error::QuiverMismatch);
    }
    let field = m.field;
    let q = m.quiver();
    let nv = q.vertex_count();
    // Unknowns: entries of phi_v (n_v x m_v), vertex-major, row-major.
    let mut offsets = vec![0usize; nv + 1];
    for v in 0..nv {
        offsets[v + 1] = offsets[v] + n.dims[v] * m.dims[v];
    }
    let unknowns = offsets[nv];
    let mut rows: Vec<Vec<u64>> = Vec::new();
    for (ai, a) in q.arrows().iter().enumerate() {
        let (x, y) = (a.source, a.target);
        let na = n.map(ai);
        let ma = m.map(ai);
        // Equation block: N(a) phi_x - phi_y M(a) = 0, one row per entry (i, j).
        for i in 0..n.dims[y] {
            for j in 0..m.dims[x] {
                let mut row = vec![0u64; unknowns];
                for k in 0..n.dims[x] {
                    let idx = offsets[x] + k * m.dims[x] + j;
                    row[idx] = field.add(row[idx], na.get(i, k));
                }
                for l in 0..m.dims[y] {
                    let idx = offsets[y] + i * m.dims[y] + l;
                    row[idx] = field.sub(row[idx], ma.get(l, j));
                }
                rows.push(row);
            }
        }
    }
    let sys = Matrix::from_columns(
        field,
        unknowns,
        &rows.iter().map(|r| r.clone()).collect::<Vec<_>>(),
    )
    .transpose();
    let kernel = if rows.is_empty() {
        // No constraints: every vertex tuple is a morphism.
        Matrix::zeros(field, 0, unknowns).kernel_basis()
    } else {
        sys.kernel_basis()
    };
    let basis = kernel
        .into_iter()
        .map(|vecu| {
            let mut blocks = Vec::with_capacity(nv);
            for v in 0..nv {
                let mut b = Matrix::zeros(field, n.dims[v], m.dims[v]);
                for r in 0..n.dims[v] {
                    for c in 0..m.dims[v] {
                        b.set(r, c, vecu[offsets[v] + r * m.dims[v] + c]);
                    }
                }
                blocks.push(b);
            }
            blocks
        })
        .collect();
    Ok(MorphismSpace {
        source: m.clone(),
        target: n.clone(),
        basis,
    })
}

/// `Ext^1(M, N)` presented as the cokernel of
/// `Hom(P_0, N) -> Hom(P_1, N)` for the standard two-term resolution
/// `0 -> P_1 -> P_0 -> M -> 0`; higher Ext vanishes by heredity.
#[derive(Debug, Clone)]
pub struct Ext1Space {
    dimension: usize,
    /// The presenting map `delta`; the cokernel of its column space is Ext^1.
    presentation: Matrix,
}

impl Ext1Space {
    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn presentation(&self) -> &Matrix {
        &self.presentation
    }
}

pub fn ext1_space(m: &Representation, n: &Representation) -> Result<Ext1Space> {
    if **m.quiver() != **n.quiver() || m.field != n.field {
        return Err(Error::QuiverMismatch);
    }
    let field = m.field;
    let q = m.quiver();
    // delta : (+)_v Hom_k(M_v, N_v) -> (+)_a Hom_k(M_{s(a)}, N_{t(a)})
    // phi |-> (N(a) phi_{s(a)} - phi_{t(a)} M(a))_a
    let nv = q.vertex_count();
    let mut col_off = vec![0usize; nv + 1];
    for v in 0..nv {
        col_off[v + 1] = col_off[v] + n.dims[v] * m.dims[v];
    }
    let na_rows: usize = q
        .arrows()
        .iter()
        .map(|a| n.dims[a.target] * m.dims[a.source])
        .sum();
    let mut delta = Matrix::zeros(field, na_rows, col_off[nv]);
    let mut ro = 0;
    for (ai, a) in q.arrows().iter().enumerate() {
        let (x, y) = (a.source, a.target);
        let na = n.map(ai);
        let ma = m.map(ai);
        for i in 0..n.dims[y] {
            for j in 0..m.dims[x] {
                let r = ro + i * m.dims[x] + j;
                for k in 0..n.dims[x] {
                    let c = col_off[x] + k * m.dims[x] + j;
                    delta.set(r, c, field.add(delta.get(r, c), na.get(i, k)));
                }
                for l in 0..m.dims[y] {
                    let c = col_off[y] + i * m.dims[y] + l;
                    delta.set(r, c, field.sub(delta.get(r, c), ma.get(l, j)));
                }
            }
        }
        ro += n.dims[y] * m.dims[x];
    }
    let dimension = na_rows - delta.rank();
    Ok(Ext1Space {
        dimension,
        presentation: delta,
    })
}

/// Projective cover `P ->> N` built from `top N = N / rad N`, where `rad N`
/// at a vertex is the sum of the images of the incoming arrow maps.
pub fn projective_cover(n: &Representation) -> (Representation, RepMap) {
    let field = n.field;
    let q = n.quiver().clone();
    let nv = q.vertex_count();
    // rad N at each vertex, as a column basis.
    let mut gens: Vec<Vec<Vec<u64>>> = Vec::with_capacity(nv);
    for v in 0..nv {
        let mut incoming = Matrix::zeros(field, n.dims[v], 0);
        for (ai, a) in q.arrows().iter().enumerate() {
            if a.target == v {
                incoming = incoming.hstack(n.map(ai));
            }
        }
        let rad = incoming.column_space_basis();
        let (_, appended) = rad.extend_to_basis();
        // Generators: standard basis vectors completing rad N_v.
        let g = appended
            .into_iter()
            .map(|idx| {
                let mut e = vec![0u64; n.dims[v]];
                e[idx] = 1;
                e
            })
            .collect();
        gens.push(g);
    }
    let parts_per_vertex: Vec<Representation> = (0..nv)
        .map(|v| Representation::projective(q.clone(), field, v).expect("vertex in range"))
        .collect();
    let mut parts: Vec<&Representation> = Vec::new();
    for (v, g) in gens.iter().enumerate() {
        for _ in 0..g.len() {
            parts.push(&parts_per_vertex[v]);
        }
    }
    if parts.is_empty() {
        let p = Representation::zero(q, field);
        let cover = RepMap::zero(p.clone(), n.clone());
        return (p, cover);
    }
    let p = Representation::direct_sum(&parts);
    // Cover map: column for (vertex v, generator g, path pi: v -> w) is N(pi)(g).
    let mut blocks = Vec::with_capacity(nv);
    for w in 0..nv {
        let mut cols: Vec<Vec<u64>> = Vec::new();
        for v in 0..nv {
            let paths = q.paths(v, w);
            for g in &gens[v] {
                for pi in &paths {
                    cols.push(n.path_action(v, pi).mul_vec(g));
                }
            }
        }
        blocks.push(Matrix::from_columns(field, n.dims[w], &cols));
    }
    let cover = RepMap::new(p, n.clone(), blocks);
    debug_assert!(cover.intertwines());
    debug_assert!(
        (0..nv).all(|v| cover.block(v).rank() == n.dims[v]),
        "cover must be surjective"
    );
    (cover.source.clone(), cover)
}

/// `Hom(M, N)` modulo morphisms factoring through a projective, with a chosen
/// section of representatives inside the Hom basis.
#[derive(Debug, Clone)]
pub struct StableHom {
    hom: MorphismSpace,
    factor_rank: usize,
    section_indices: Vec<usize>,
    projector: Matrix, // stable coords from hom coords
}

impl StableHom {
    pub fn dimension(&self) -> usize {
        self.section_indices.len()
    }

    pub fn hom(&self) -> &MorphismSpace {
        &self.hom
    }

    pub fn factor_dimension(&self) -> usize {
        self.factor_rank
    }

    /// Representatives of the chosen complement, as morphisms.
    pub fn section(&self) -> Vec<RepMap> {
        self.section_indices
            .iter()
            .map(|&i| self.hom.basis_map(i))
            .collect()
    }

    /// Stable coordinates of the class of `f`.
    pub fn project(&self, f: &RepMap) -> Option<Vec<u64>> {
        let coords = self.hom.coordinates_of(f)?;
        Some(self.projector.mul_vec(&coords))
    }
}

pub fn stable_hom(m: &Representation, n: &Representation) -> Result<StableHom> {
    let hom = hom_space(m, n)?;
    let field = m.field;
    let d = hom.dimension();
    let (_, cover) = projective_cover(n);
    let lifts = hom_space(m, cover.source())?;
    let mut cols: Vec<Vec<u64>> = Vec::new();
    for i in 0..lifts.dimension() {
        let through = cover.compose(&lifts.basis_map(i));
        let c = hom
            .coordinates_of(&through)
            .expect("projective-factoring morphism lies in Hom");
        cols.push(c);
    }
    let w = Matrix::from_columns(field, d, &cols).column_space_basis();
    let (full, appended) = w.extend_to_basis();
    let inv = full.inverse().expect("completed basis");
    let r = w.cols();
    let mut projector = Matrix::zeros(field, d - r, d);
    for i in 0..d - r {
        for j in 0..d {
            projector.set(i, j, inv.get(r + i, j));
        }
    }
    Ok(StableHom {
        hom,
        factor_rank: r,
        section_indices: appended,
        projector,
    })
}

/// `Hom(M, N)` modulo morphisms factoring through an injective, computed by
/// dualizing into the opposite quiver.
pub fn costable_hom_dim(m: &Representation, n: &Representation) -> Result<usize> {
    if **m.quiver() != **n.quiver() || m.field != n.field {
        return Err(Error::QuiverMismatch);
    }
    Ok(stable_hom(&n.dual(), &m.dual())?.dimension())
}

/// Seeded isomorphism test: equal dimension vectors plus an invertible
/// element found among random combinations of a Hom basis (32 trials).
pub fn isomorphism(m: &Representation, n: &Representation, seed: u64) -> Option<RepMap> {
    if m.dims != n.dims {
        return None;
    }
    if m.is_zero() {
        return Some(RepMap::zero(m.clone(), n.clone()));
    }
    let hom = hom_space(m, n).ok()?;
    if hom.dimension() == 0 {
        return None;
    }
    // Single basis elements first; they are often already invertible.
    for i in 0..hom.dimension() {
        let f = hom.basis_map(i);
        if f.is_iso() {
            return Some(f);
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..32 {
        let f = hom.random_element(&mut rng);
        if f.is_iso() {
            return Some(f);
        }
    }
    None
}

/// Direct-sum decomposition into indecomposables by seeded Fitting
/// splittings: sample an endomorphism, shift by eigenvalues, and split along
/// `ker(psi^N) (+) im(psi^N)`. The multiset of summands is independent of the
/// seed; summands are returned sorted by dimension vector.
pub fn decompose(m: &Representation, seed: u64) -> Vec<Representation> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut todo = vec![m.clone()];
    let mut out = Vec::new();
    while let Some(x) = todo.pop() {
        if x.is_zero() {
            continue;
        }
        match try_split(&x, &mut rng) {
            Some((a, b)) => {
                todo.push(a);
                todo.push(b);
            }
            None => out.push(x),
        }
    }
    out.sort_by(|a, b| a.dims.cmp(&b.dims));
    out
}

const SPLIT_ATTEMPTS: usize = 64;
/// Above this modulus, scanning all residues for eigenvalues is replaced by
/// random shifts.
const EIGEN_SCAN_LIMIT: u64 = 4096;

fn try_split(
    x: &Representation,
    rng: &mut ChaCha8Rng,
) -> Option<(Representation, Representation)> {
    if x.total_dim() <= 1 {
        return None;
    }
    let end = hom_space(x, x).expect("same quiver");
    if end.dimension() <= 1 {
        return None;
    }
    let field = x.field;
    let p = field.modulus();
    let total = x.total_dim();
    for _ in 0..SPLIT_ATTEMPTS {
        let phi = end.random_element(rng);
        let shifts: Vec<u64> = if p <= EIGEN_SCAN_LIMIT {
            (0..p).collect()
        } else {
            let mut s = vec![0u64];
            s.extend((0..8).map(|_| rng.next_u64() % p));
            s
        };
        for c in shifts {
            // psi = phi - c id, then Fitting along psi^N.
            let psi = RepMap::new(
                x.clone(),
                x.clone(),
                (0..x.quiver().vertex_count())
                    .map(|v| {
                        phi.block(v)
                            .sub(&Matrix::identity(field, x.dims[v]).scale(c))
                    })
                    .collect(),
            );
            let singular: usize = psi
                .blocks
                .iter()
                .map(|b| b.cols() - b.rank())
                .sum();
            if singular == 0 {
                continue;
            }
            let psi_n = RepMap::new(
                x.clone(),
                x.clone(),
                psi.blocks.iter().map(|b| b.pow(total)).collect(),
            );
            let (ker, _) = psi_n.kernel();
            let kd = ker.total_dim();
            if kd > 0 && kd < total {
                let (im, _) = psi_n.image();
                return Some((ker, im));
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::Quiver;

    fn f101() -> PrimeField {
        PrimeField::new(101).unwrap()
    }

    fn a2() -> Arc<Quiver> {
        Arc::new(Quiver::parse("vertices 2\narrow a 1 2\n").unwrap())
    }

    fn kronecker() -> Arc<Quiver> {
        Arc::new(Quiver::parse("vertices 2\narrow a 1 2\narrow b 1 2\n").unwrap())
    }

    /// Independent path-count oracle via adjacency-matrix powers.
    fn path_count_oracle(q: &Quiver, from: usize, to: usize) -> usize {
        let n = q.vertex_count();
        let mut adj = vec![vec![0usize; n]; n];
        for a in q.arrows() {
            adj[a.source][a.target] += 1;
        }
        let mut total = vec![vec![0usize; n]; n];
        for (v, row) in total.iter_mut().enumerate() {
            row[v] = 1;
        }
        let mut power = total.clone();
        for _ in 0..n {
            // power <- power * adj
            let mut next = vec![vec![0usize; n]; n];
            for i in 0..n {
                for k in 0..n {
                    for j in 0..n {
                        next[i][j] += power[i][k] * adj[k][j];
                    }
                }
            }
            power = next;
            for i in 0..n {
                for j in 0..n {
                    total[i][j] += power[i][j];
                }
            }
        }
        total[from][to]
    }

    #[test]
    fn projective_dims_match_path_counts() {
        let q = a2();
        let p1 = Representation::projective(q.clone(), f101(), 0).unwrap();
        assert_eq!(p1.dims(), &[1, 1]);
        for w in 0..2 {
            assert_eq!(p1.dims()[w], path_count_oracle(&q, 0, w));
        }
        let k = kronecker();
        let p1 = Representation::projective(k.clone(), f101(), 0).unwrap();
        assert_eq!(p1.dims(), &[1, 2]);
        for w in 0..2 {
            assert_eq!(p1.dims()[w], path_count_oracle(&k, 0, w));
        }
    }

    #[test]
    fn injective_dims_match_path_counts() {
        let q = a2();
        let i1 = Representation::injective(q.clone(), f101(), 0).unwrap();
        assert_eq!(i1.dims(), &[1, 0]);
        for w in 0..2 {
            assert_eq!(i1.dims()[w], path_count_oracle(&q, w, 0));
        }
        let i2 = Representation::injective(q, f101(), 1).unwrap();
        assert_eq!(i2.dims(), &[1, 1]);
    }

    #[test]
    fn hom_p1_to_s1_is_one_dimensional() {
        let q = a2();
        let p1 = Representation::projective(q.clone(), f101(), 0).unwrap();
        let s1 = Representation::simple(q, f101(), 0).unwrap();
        let h = hom_space(&p1, &s1).unwrap();
        assert_eq!(h.dimension(), 1);
        assert!(h.basis_map(0).intertwines());
    }

    #[test]
    fn hom_from_projective_is_yoneda() {
        // dim Hom(P(v), M) = dim M(v) for arbitrary M.
        let q = kronecker();
        let f = f101();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..5 {
            let m = Representation::random(q.clone(), f, 3, &mut rng);
            for v in 0..2 {
                let p = Representation::projective(q.clone(), f, v).unwrap();
                let h = hom_space(&p, &m).unwrap();
                assert_eq!(h.dimension(), m.dims()[v]);
            }
        }
    }

    #[test]
    fn hom_p2_p1_kronecker() {
        let q = kronecker();
        let p1 = Representation::projective(q.clone(), f101(), 0).unwrap();
        let p2 = Representation::projective(q, f101(), 1).unwrap();
        assert_eq!(hom_space(&p2, &p1).unwrap().dimension(), 2);
    }

    #[test]
    fn hom_basis_elements_intertwine() {
        let q = kronecker();
        let f = f101();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let m = Representation::random(q.clone(), f, 3, &mut rng);
        let n = Representation::random(q, f, 3, &mut rng);
        let h = hom_space(&m, &n).unwrap();
        for i in 0..h.dimension() {
            assert!(h.basis_map(i).intertwines());
        }
    }

    #[test]
    fn ext1_of_simples_a2() {
        let q = a2();
        let s1 = Representation::simple(q.clone(), f101(), 0).unwrap();
        let s2 = Representation::simple(q, f101(), 1).unwrap();
        assert_eq!(ext1_space(&s1, &s2).unwrap().dimension(), 1);
        assert_eq!(ext1_space(&s2, &s1).unwrap().dimension(), 0);
    }

    #[test]
    fn ext1_from_projective_vanishes() {
        let q = kronecker();
        let f = f101();
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for v in 0..2 {
            let p = Representation::projective(q.clone(), f, v).unwrap();
            for _ in 0..4 {
                let n = Representation::random(q.clone(), f, 3, &mut rng);
                assert_eq!(ext1_space(&p, &n).unwrap().dimension(), 0);
            }
        }
    }

    #[test]
    fn euler_identity_on_random_pairs() {
        // dim Hom - dim Ext^1 = <dim M, dim N> over hereditary quivers.
        for qq in [a2(), kronecker()] {
            let f = f101();
            let mut rng = ChaCha8Rng::seed_from_u64(23);
            for _ in 0..20 {
                let m = Representation::random(qq.clone(), f, 3, &mut rng);
                let n = Representation::random(qq.clone(), f, 3, &mut rng);
                let h = hom_space(&m, &n).unwrap().dimension() as i64;
                let e = ext1_space(&m, &n).unwrap().dimension() as i64;
                let form = qq.euler_form(&m.dims_i64(), &n.dims_i64()).unwrap();
                assert_eq!(h - e, form);
            }
        }
    }

    #[test]
    fn decompose_explicit_sum() {
        let q = a2();
        let f = f101();
        let p1 = Representation::projective(q.clone(), f, 0).unwrap();
        let s2 = Representation::simple(q, f, 1).unwrap();
        let sum = Representation::direct_sum(&[&p1, &s2]);
        let parts = decompose(&sum, 0);
        let mut dimvecs: Vec<Vec<usize>> = parts.iter().map(|p| p.dims().to_vec()).collect();
        dimvecs.sort();
        assert_eq!(dimvecs, vec![vec![0, 1], vec![1, 1]]);
    }

    #[test]
    fn decompose_indecomposable_is_identity() {
        let q = a2();
        let p1 = Representation::projective(q, f101(), 0).unwrap();
        let parts = decompose(&p1, 0);
        assert_eq!(parts.len(), 1);
        assert_eq!(parts[0].dims(), &[1, 1]);
    }

    #[test]
    fn decompose_scrambled_sum() {
        // Random-basis-change image of S1 + S1 + P1 over A2.
        let q = a2();
        let f = f101();
        let s1 = Representation::simple(q.clone(), f, 0).unwrap();
        let p1 = Representation::projective(q.clone(), f, 0).unwrap();
        let sum = Representation::direct_sum(&[&s1, &s1, &p1]);
        // Conjugate by invertible vertex matrices.
        let g0 = Matrix::from_rows(f, &[vec![1, 2, 3], vec![0, 1, 4], vec![5, 0, 1]]);
        let g1 = Matrix::from_rows(f, &[vec![7]]);
        assert!(g0.is_invertible() && g1.is_invertible());
        let maps = vec![g1
            .mul(sum.map(0))
            .mul(&g0.inverse().unwrap())];
        let scrambled = Representation::new(q, f, sum.dims().to_vec(), maps).unwrap();
        let parts = decompose(&scrambled, 42);
        let dimvecs: Vec<Vec<usize>> = parts.iter().map(|p| p.dims().to_vec()).collect();
        assert_eq!(dimvecs, vec![vec![1, 0], vec![1, 0], vec![1, 1]]);
        // Seed independence of the multiset.
        let parts2 = decompose(&scrambled, 1337);
        let dimvecs2: Vec<Vec<usize>> = parts2.iter().map(|p| p.dims().to_vec()).collect();
        assert_eq!(dimvecs, dimvecs2);
    }

    #[test]
    fn decompose_summands_have_local_end() {
        // Every reported summand has End where the only idempotent splittings
        // are trivial; for these inputs End is one-dimensional.
        let q = kronecker();
        let f = f101();
        let p1 = Representation::projective(q.clone(), f, 0).unwrap();
        let p2 = Representation::projective(q, f, 1).unwrap();
        let sum = Representation::direct_sum(&[&p1, &p2, &p2]);
        let parts = decompose(&sum, 5);
        assert_eq!(parts.len(), 3);
        let mut total: Vec<usize> = vec![0, 0];
        for part in &parts {
            assert_eq!(hom_space(&part, &part).unwrap().dimension(), 1);
            total[0] += part.dims()[0];
            total[1] += part.dims()[1];
        }
        assert_eq!(total, vec![1, 4]);
    }

    #[test]
    fn stable_end_of_s1_is_one_dimensional() {
        let q = a2();
        let s1 = Representation::simple(q, f101(), 0).unwrap();
        let st = stable_hom(&s1, &s1).unwrap();
        assert_eq!(st.dimension(), 1);
        assert_eq!(st.factor_dimension(), 0);
    }

    #[test]
    fn stable_hom_into_projective_vanishes() {
        let q = kronecker();
        let f = f101();
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for v in 0..2 {
            let p = Representation::projective(q.clone(), f, v).unwrap();
            for _ in 0..3 {
                let m = Representation::random(q.clone(), f, 2, &mut rng);
                assert_eq!(stable_hom(&m, &p).unwrap().dimension(), 0);
            }
        }
    }

    #[test]
    fn stable_end_of_regular_r0() {
        let q = kronecker();
        let f = f101();
        let r0 = Representation::new(
            q,
            f,
            vec![1, 1],
            vec![
                Matrix::from_rows(f, &[vec![1]]),
                Matrix::from_rows(f, &[vec![0]]),
            ],
        )
        .unwrap();
        assert_eq!(stable_hom(&r0, &r0).unwrap().dimension(), 1);
    }

    #[test]
    fn stable_hom_ignores_projective_summands() {
        let q = a2();
        let f = f101();
        let s1 = Representation::simple(q.clone(), f, 0).unwrap();
        let p1 = Representation::projective(q.clone(), f, 0).unwrap();
        let p2 = Representation::projective(q, f, 1).unwrap();
        let m = Representation::direct_sum(&[&s1, &p1]);
        let n = Representation::direct_sum(&[&s1, &p2]);
        assert_eq!(
            stable_hom(&m, &n).unwrap().dimension(),
            stable_hom(&s1, &s1).unwrap().dimension()
        );
        assert_eq!(
            stable_hom(&m, &s1).unwrap().dimension(),
            stable_hom(&s1, &s1).unwrap().dimension()
        );
    }

    #[test]
    fn isomorphism_detects_conjugated_module() {
        let q = kronecker();
        let f = f101();
        let p1 = Representation::projective(q.clone(), f, 0).unwrap();
        let g = Matrix::from_rows(f, &[vec![3, 1], vec![5, 2]]);
        assert!(g.is_invertible());
        let maps = vec![g.mul(p1.map(0)), g.mul(p1.map(1))];
        let twisted = Representation::new(q, f, p1.dims().to_vec(), maps).unwrap();
        let iso = isomorphism(&p1, &twisted, 0).expect("isomorphic");
        assert!(iso.is_iso() && iso.intertwines());
        // Different dimension vectors are never isomorphic.
        assert!(isomorphism(&p1, &p1.dual().dual().rebind_quiver(p1.quiver().clone()).unwrap(), 0).is_some());
    }

    #[test]
    fn kernel_image_cokernel_shapes() {
        let q = a2();
        let f = f101();
        let p1 = Representation::projective(q.clone(), f, 0).unwrap();
        let s1 = Representation::simple(q, f, 0).unwrap();
        let h = hom_space(&p1, &s1).unwrap();
        let proj = h.basis_map(0);
        let (ker, incl) = proj.kernel();
        assert_eq!(ker.dims(), &[0, 1]); // rad P(1) = S(2)
        assert!(incl.intertwines());
        let (im, _) = proj.image();
        assert_eq!(im.dims(), &[1, 0]);
        let (cok, pr) = proj.cokernel();
        assert_eq!(cok.total_dim(), 0);
        assert!(pr.intertwines());
    }

    #[test]
    fn projective_cover_of_simple() {
        let q = a2();
        let f = f101();
        let s1 = Representation::simple(q, f, 0).unwrap();
        let (p, cover) = projective_cover(&s1);
        assert_eq!(p.dims(), &[1, 1]); // P(1)
        assert!(cover.intertwines());
        let (ker, _) = cover.kernel();
        assert_eq!(ker.dims(), &[0, 1]);
    }
}
