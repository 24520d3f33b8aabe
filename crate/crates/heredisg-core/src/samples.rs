//! Standard quivers and sample module sets used by the verification suites:
//! all indecomposables of a Dynkin quiver, and for the Kronecker quiver the
//! translate orbits near the projectives and injectives together with the
//! homogeneous regular modules for parameters 0, 1 and infinity.

use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use crate::ar::{knit_indecomposables, tau, tau_inv};
use crate::linalg::{Matrix, PrimeField};
use crate::quiver::Quiver;
use crate::rep::Representation;
use crate::{Error, Result};

pub fn linear_quiver(n: usize) -> Arc<Quiver> {
    let mut text = format!("vertices {n}\n");
    for i in 1..n {
        text.push_str(&format!("arrow a{i} {i} {}\n", i + 1));
    }
    Arc::new(Quiver::parse(&text).expect("linear quiver is valid"))
}

pub fn d4_quiver() -> Arc<Quiver> {
    Arc::new(
        Quiver::parse("vertices 4\narrow a 2 1\narrow b 3 1\narrow c 4 1\n")
            .expect("D4 quiver is valid"),
    )
}

pub fn kronecker_quiver() -> Arc<Quiver> {
    Arc::new(
        Quiver::parse("vertices 2\narrow a 1 2\narrow b 1 2\n").expect("Kronecker quiver is valid"),
    )
}

/// Whether a quiver is the Kronecker quiver up to labels: two vertices and
/// two parallel arrows.
pub fn is_kronecker(q: &Quiver) -> bool {
    q.vertex_count() == 2
        && q.arrows().len() == 2
        && q.arrows()[0].source == q.arrows()[1].source
        && q.arrows()[0].target == q.arrows()[1].target
        && q.arrows()[0].source != q.arrows()[0].target
}

/// Homogeneous regular Kronecker module of dimension vector (1,1): the first
/// arrow acts by 1 and the second by `lambda`; `None` is the parameter at
/// infinity, acting by (0, 1).
pub fn kronecker_regular(
    q: &Arc<Quiver>,
    field: PrimeField,
    lambda: Option<u64>,
) -> Result<Representation> {
    if !is_kronecker(q) {
        return Err(Error::Invalid(String::from("not a Kronecker quiver")));
    }
    let (a, b) = match lambda {
        Some(l) => (1, l % field.modulus()),
        None => (0, 1),
    };
    let (src, tgt) = (q.arrows()[0].source, q.arrows()[0].target);
    let mut dims = vec![0usize; 2];
    dims[src] = 1;
    dims[tgt] = 1;
    let mk = |v: u64| {
        let mut m = Matrix::zeros(field, 1, 1);
        m.set(0, 0, v);
        m
    };
    Representation::new(q.clone(), field, dims, vec![mk(a), mk(b)])
}

/// A module with a display name, for reports and queries.
#[derive(Debug, Clone)]
pub struct NamedModule {
    pub name: String,
    pub rep: Representation,
}

/// Kronecker sample set: preprojectives and preinjectives within translate
/// distance three of the projectives and injectives (the projectives
/// themselves excluded, so every sample is projective-free), plus the three
/// homogeneous regulars.
pub fn kronecker_samples(q: &Arc<Quiver>, field: PrimeField) -> Result<Vec<NamedModule>> {
    if !is_kronecker(q) {
        return Err(Error::Invalid(String::from("not a Kronecker quiver")));
    }
    let mut out = Vec::new();
    for v in 0..2 {
        let mut m = Representation::projective(q.clone(), field, v)?;
        for d in 1..=3 {
            m = tau_inv(&m);
            out.push(NamedModule {
                name: format!("tau^-{d}(P{})", q.vertex_name(v)),
                rep: m.clone(),
            });
        }
    }
    for v in 0..2 {
        let mut m = Representation::injective(q.clone(), field, v)?;
        out.push(NamedModule {
            name: format!("I{}", q.vertex_name(v)),
            rep: m.clone(),
        });
        for d in 1..=3 {
            m = tau(&m);
            out.push(NamedModule {
                name: format!("tau^{d}(I{})", q.vertex_name(v)),
                rep: m.clone(),
            });
        }
    }
    for (label, lambda) in [("0", Some(0)), ("1", Some(1)), ("inf", None)] {
        out.push(NamedModule {
            name: format!("R({label})"),
            rep: kronecker_regular(q, field, lambda)?,
        });
    }
    Ok(out)
}

/// All knitted indecomposables of a Dynkin quiver, named by dimension vector.
pub fn dynkin_samples(q: &Arc<Quiver>, field: PrimeField) -> Result<Vec<NamedModule>> {
    let list = knit_indecomposables(q, field)?;
    Ok(list
        .into_iter()
        .map(|rep| {
            let name = format!(
                "m{}",
                rep.dims()
                    .iter()
                    .map(|d| format!("{d}"))
                    .collect::<Vec<_>>()
                    .join("")
            );
            NamedModule { name, rep }
        })
        .collect())
}

/// The standard sample set for a quiver: all indecomposables when Dynkin,
/// the Kronecker set for the Kronecker quiver, otherwise an error.
pub fn sample_modules(q: &Arc<Quiver>, field: PrimeField) -> Result<Vec<NamedModule>> {
    if q.is_dynkin() {
        dynkin_samples(q, field)
    } else if is_kronecker(q) {
        kronecker_samples(q, field)
    } else {
        Err(Error::Invalid(String::from(
            "no standard sample set: quiver is neither Dynkin nor Kronecker",
        )))
    }
}
