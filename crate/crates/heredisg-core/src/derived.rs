//! The bounded derived category of a hereditary path algebra as formal sums
//! of shifted indecomposable modules, with the Serre functor and the
//! level-to-shift correspondence between the repetitive category of the
//! projective-free modules and shifted modules.
//!
//! For hereditary algebras every object decomposes as a sum of shifted
//! modules, so no complexes are materialized: the Serre functor acts
//! summand-wise (`nu` on projectives, `tau` with a shift otherwise), and Hom
//! dimensions reduce to module Hom and `Ext^1`.

use alloc::string::String;
use alloc::vec::Vec;

use crate::ar::{classify, identify_injective, identify_projective, tau, tau_inv, ARClass};
use crate::quiver::Quiver;
use crate::rep::{decompose, ext1_space, hom_space, isomorphism, stable_hom, Representation};
use crate::{Error, Result};

/// A formal finite direct sum of shifted indecomposable modules.
#[derive(Debug, Clone)]
pub struct DerivedObject {
    summands: Vec<(Representation, i64)>,
}

impl DerivedObject {
    /// Splits a module into indecomposables placed at the given shift.
    pub fn from_module(m: &Representation, shift: i64, seed: u64) -> DerivedObject {
        let summands = decompose(m, seed)
            .into_iter()
            .map(|part| (part, shift))
            .collect();
        DerivedObject { summands }
    }

    pub fn zero() -> DerivedObject {
        DerivedObject {
            summands: Vec::new(),
        }
    }

    pub fn summands(&self) -> &[(Representation, i64)] {
        &self.summands
    }

    pub fn is_zero(&self) -> bool {
        self.summands.is_empty()
    }

    pub fn shift(&self, by: i64) -> DerivedObject {
        DerivedObject {
            summands: self
                .summands
                .iter()
                .map(|(m, s)| (m.clone(), s + by))
                .collect(),
        }
    }

    fn quiver(&self) -> Option<&Quiver> {
        self.summands.first().map(|(m, _)| &**m.quiver())
    }
}

/// The Serre functor: `nu` on projective summands, `tau` with a shift bump
/// on the rest.
pub fn serre(u: &DerivedObject) -> DerivedObject {
    let summands = u
        .summands
        .iter()
        .map(|(m, s)| {
            if tau(m).is_zero() {
                let v = identify_projective(m).expect("tau-killed indecomposable is projective");
                let inj = Representation::injective(m.quiver().clone(), m.field(), v)
                    .expect("vertex in range");
                (inj, *s)
            } else {
                (tau(m), s + 1)
            }
        })
        .collect();
    DerivedObject { summands }
}

/// Quasi-inverse of the Serre functor.
pub fn serre_inv(u: &DerivedObject) -> DerivedObject {
    let summands = u
        .summands
        .iter()
        .map(|(m, s)| {
            if tau_inv(m).is_zero() {
                let v = identify_injective(m).expect("inverse-tau-killed indecomposable is injective");
                let proj = Representation::projective(m.quiver().clone(), m.field(), v)
                    .expect("vertex in range");
                (proj, *s)
            } else {
                (tau_inv(m), s - 1)
            }
        })
        .collect();
    DerivedObject { summands }
}

/// `S^k`, applying `serre` or its inverse `|k|` times.
pub fn serre_power(u: &DerivedObject, k: i64) -> DerivedObject {
    let mut acc = u.clone();
    if k >= 0 {
        for _ in 0..k {
            acc = serre(&acc);
        }
    } else {
        for _ in 0..(-k) {
            acc = serre_inv(&acc);
        }
    }
    acc
}

/// `dim Hom(U, V)` in the derived category: summand pairs contribute module
/// Hom at equal shifts, `Ext^1` when the target sits one shift higher, and
/// zero otherwise (heredity).
pub fn derived_hom(u: &DerivedObject, v: &DerivedObject) -> Result<usize> {
    if let (Some(a), Some(b)) = (u.quiver(), v.quiver()) {
        if a != b {
            return Err(Error::QuiverMismatch);
        }
    }
    let mut total = 0usize;
    for (m, i) in &u.summands {
        for (n, j) in &v.summands {
            total += match j - i {
                0 => hom_space(m, n)?.dimension(),
                1 => ext1_space(m, n)?.dimension(),
                _ => 0,
            };
        }
    }
    Ok(total)
}

/// Seeded isomorphism test as a multiset match of (shift, iso class).
pub fn derived_isomorphic(u: &DerivedObject, v: &DerivedObject, seed: u64) -> bool {
    if u.summands.len() != v.summands.len() {
        return false;
    }
    let mut remaining: Vec<&(Representation, i64)> = v.summands.iter().collect();
    for (m, s) in &u.summands {
        let found = remaining.iter().position(|(n, t)| {
            s == t && n.dims() == m.dims() && isomorphism(m, n, seed).is_some()
        });
        match found {
            Some(k) => {
                remaining.swap_remove(k);
            }
            None => return false,
        }
    }
    true
}

/// An object `(X, i)` of the repetitive category of the projective-free
/// module category.
#[derive(Debug, Clone)]
pub struct PhiIndex {
    module: Representation,
    level: i64,
}

impl PhiIndex {
    /// Fails when the module has a nonzero projective direct summand.
    pub fn new(module: Representation, level: i64, seed: u64) -> Result<PhiIndex> {
        for part in decompose(&module, seed) {
            if tau(&part).is_zero() {
                return Err(Error::ProjectiveSummand);
            }
        }
        Ok(PhiIndex { module, level })
    }

    pub fn module(&self) -> &Representation {
        &self.module
    }

    pub fn level(&self) -> i64 {
        self.level
    }
}

/// `Phi(X, i) = S^i(X)`: the level becomes a Serre power.
pub fn phi(ix: &PhiIndex, seed: u64) -> DerivedObject {
    let u = DerivedObject::from_module(&ix.module, 0, seed);
    serre_power(&u, ix.level)
}

/// One instance of the Hom-dimension comparison between the repetitive
/// category and the derived category.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PhiHomReport {
    /// Hom dimension in the repetitive category, from the three-case formula.
    pub repetitive_dim: usize,
    /// Hom dimension between the Phi images in the derived category.
    pub derived_dim: usize,
}

impl PhiHomReport {
    pub fn passed(&self) -> bool {
        self.repetitive_dim == self.derived_dim
    }
}

/// Compares `Hom((X,i),(Y,j))` computed from the repetitive-category formula
/// (stable Hom on a level, its dual one level up, zero otherwise) with the
/// Hom dimension between the Phi images.
pub fn phi_hom_check(a: &PhiIndex, b: &PhiIndex, seed: u64) -> Result<PhiHomReport> {
    let repetitive_dim = match b.level - a.level {
        0 => stable_hom(&a.module, &b.module)?.dimension(),
        1 => stable_hom(&b.module, &a.module)?.dimension(),
        _ => 0,
    };
    let derived_dim = derived_hom(&phi(a, seed), &phi(b, seed))?;
    Ok(PhiHomReport {
        repetitive_dim,
        derived_dim,
    })
}

/// A failed instance in a Phi Hom-comparison grid.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PhiGridFailure {
    pub from: (usize, i64),
    pub to: (usize, i64),
    pub repetitive_dim: usize,
    pub derived_dim: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PhiGridReport {
    pub instances: usize,
    pub failures: Vec<PhiGridFailure>,
}

impl PhiGridReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Runs `phi_hom_check` over every pair of (module, level) drawn from the
/// given projective-free modules and levels, sharing the stable-Hom table
/// and the Phi images across instances.
pub fn phi_hom_grid(
    modules: &[Representation],
    levels: &[i64],
    seed: u64,
) -> Result<PhiGridReport> {
    let n = modules.len();
    for m in modules {
        for part in decompose(m, seed) {
            if tau(&part).is_zero() {
                return Err(Error::ProjectiveSummand);
            }
        }
    }
    let mut stable_dims = Vec::with_capacity(n * n);
    for a in modules {
        for b in modules {
            stable_dims.push(stable_hom(a, b)?.dimension());
        }
    }
    let mut images: Vec<Vec<DerivedObject>> = Vec::with_capacity(n);
    for m in modules {
        let base = DerivedObject::from_module(m, 0, seed);
        images.push(levels.iter().map(|&l| serre_power(&base, l)).collect());
    }
    let mut instances = 0usize;
    let mut failures = Vec::new();
    for a in 0..n {
        for (ai, &la) in levels.iter().enumerate() {
            for b in 0..n {
                for (bi, &lb) in levels.iter().enumerate() {
                    let repetitive_dim = match lb - la {
                        0 => stable_dims[a * n + b],
                        1 => stable_dims[b * n + a],
                        _ => 0,
                    };
                    let derived_dim = derived_hom(&images[a][ai], &images[b][bi])?;
                    instances += 1;
                    if repetitive_dim != derived_dim {
                        failures.push(PhiGridFailure {
                            from: (a, la),
                            to: (b, lb),
                            repetitive_dim,
                            derived_dim,
                        });
                    }
                }
            }
        }
    }
    Ok(PhiGridReport {
        instances,
        failures,
    })
}

const PREIMAGE_SEARCH_WIDTH: i64 = 16;

/// Constructs `(X, i)` with `Phi(X, i)` isomorphic to `m[l]`.
///
/// The trichotomy class predicts the level directly (regular modules need
/// `i = l`; preprojective and preinjective orbits shift by one when the
/// translate power runs off the end). On representation-finite quivers a
/// predicted index can land on a projective, in which case nearby levels are
/// searched; the Serre orbit covers everything, so the search terminates.
pub fn phi_preimage(
    m: &Representation,
    l: i64,
    bound: usize,
    seed: u64,
) -> Result<PhiIndex> {
    let class = classify(m, bound, seed)?;
    let predicted = match class {
        ARClass::Regular { .. } => l,
        ARClass::Preprojective { power } => {
            let i0 = (power - 1) as i64;
            if i0 + l > 0 {
                l
            } else {
                l - 1
            }
        }
        ARClass::Preinjective { power } => {
            let i0 = (power - 1) as i64;
            if i0 - l >= 0 {
                l
            } else {
                l + 1
            }
        }
        ARClass::Inconclusive { bound } => return Err(Error::Inconclusive { bound }),
    };
    let target = DerivedObject::from_module(m, l, seed);
    let mut offsets = Vec::with_capacity((2 * PREIMAGE_SEARCH_WIDTH + 1) as usize);
    offsets.push(0);
    for d in 1..=PREIMAGE_SEARCH_WIDTH {
        offsets.push(d);
        offsets.push(-d);
    }
    for off in offsets {
        let level = predicted + off;
        let u = serre_power(&target, -level);
        if let [(x, 0)] = u.summands() {
            if !tau(x).is_zero() {
                return Ok(PhiIndex {
                    module: x.clone(),
                    level,
                });
            }
        }
    }
    Err(Error::Invalid(String::from(
        "no repetitive-category preimage found within the search width",
    )))
}

/// Whether the predicted level from the trichotomy case analysis was usable
/// without searching; exposed for the representation-infinite checks.
pub fn phi_preimage_was_predicted(m: &Representation, l: i64, bound: usize, seed: u64) -> bool {
    match (phi_preimage(m, l, bound, seed), classify(m, bound, seed)) {
        (Ok(ix), Ok(class)) => {
            let predicted = match class {
                ARClass::Regular { .. } => l,
                ARClass::Preprojective { power } => {
                    let i0 = (power - 1) as i64;
                    if i0 + l > 0 {
                        l
                    } else {
                        l - 1
                    }
                }
                ARClass::Preinjective { power } => {
                    let i0 = (power - 1) as i64;
                    if i0 - l >= 0 {
                        l
                    } else {
                        l + 1
                    }
                }
                ARClass::Inconclusive { .. } => return false,
            };
            ix.level() == predicted
        }
        _ => false,
    }
}

/// One summand's verdict in an `S^k` window check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sc0Summand {
    pub dims: Vec<usize>,
    pub shift: i64,
    pub allowed: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sc0Report {
    pub power: i64,
    pub summands: Vec<Sc0Summand>,
}

impl Sc0Report {
    pub fn passed(&self) -> bool {
        self.summands.iter().all(|s| s.allowed)
    }
}

/// Checks where `S^power` sends a module class: for `power < 0` every
/// summand must be a projective at shift zero or sit at a negative shift;
/// for `power > 1` every summand must be an injective at shift one or sit
/// above shift one.
pub fn sc0_check(m: &Representation, power: i64, seed: u64) -> Result<Sc0Report> {
    if power == 0 || power == 1 {
        return Err(Error::Invalid(String::from(
            "power must be negative or greater than one",
        )));
    }
    let u = serre_power(&DerivedObject::from_module(m, 0, seed), power);
    let summands = u
        .summands()
        .iter()
        .map(|(x, s)| {
            let allowed = if power < 0 {
                *s < 0 || (*s == 0 && tau(x).is_zero())
            } else {
                *s > 1 || (*s == 1 && tau_inv(x).is_zero())
            };
            Sc0Summand {
                dims: x.dims().to_vec(),
                shift: *s,
                allowed,
            }
        })
        .collect();
    Ok(Sc0Report { power, summands })
}
