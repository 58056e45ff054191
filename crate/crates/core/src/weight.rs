//! Weight-space bookkeeping.
//!
//! `D` and `J` are diagonal on the basis with eigenvalues `d - p` and
//! `r - q`, where `p = h + l + m` and `q = k + l - m`. Each pair `(p, q)`
//! labels a finite-dimensional weight space whose basis is enumerated here
//! in `(l, m)`-lexicographic order; that order is the canonical column order
//! for every matrix in the crate.

use serde::Serialize;

use crate::algebra::Generator;
use crate::field::Field;
use crate::pbw::{ModuleElement, Monomial};

/// Grading label `(p, q)` of a weight space.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct WeightLabel {
    pub p: u32,
    pub q: i64,
}

impl WeightLabel {
    pub fn new(p: u32, q: i64) -> Self {
        WeightLabel { p, q }
    }

    /// Label reached by acting with `x`, or `None` when it would need
    /// `p < 0` (an empty space).
    pub fn shifted(&self, x: Generator) -> Option<WeightLabel> {
        let (dp, dq) = x.weight_shift();
        let p = i64::from(self.p) + dp;
        if p < 0 {
            return None;
        }
        Some(WeightLabel::new(p as u32, self.q + dq))
    }
}

impl std::fmt::Display for WeightLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(p={}, q={})", self.p, self.q)
    }
}

/// The weight label of a basis monomial.
pub fn weight_of(mono: Monomial) -> WeightLabel {
    WeightLabel {
        p: mono.h + mono.l + mono.m,
        q: i64::from(mono.k) + i64::from(mono.l) - i64::from(mono.m),
    }
}

/// Ordered basis of the `(p, q)` weight space: all monomials with
/// `h = p - l - m >= 0` and `k = q - l + m >= 0`, listed by `(l, m)`
/// ascending. The returned length is the weight-space dimension; the list
/// may be empty.
pub fn enumerate_basis(w: WeightLabel) -> Vec<Monomial> {
    let mut basis = Vec::new();
    for l in 0..=w.p {
        for m in 0..=(w.p - l) {
            let k = w.q - i64::from(l) + i64::from(m);
            if k < 0 {
                continue;
            }
            let h = w.p - l - m;
            basis.push(Monomial::new(h, k as u32, l, m));
        }
    }
    basis
}

/// Coordinates of an element in an ordered basis; `None` if its support is
/// not contained in the basis.
pub fn coordinates<F: Field>(v: &ModuleElement<F>, basis: &[Monomial]) -> Option<Vec<F>> {
    let mut coords = vec![F::zero(); basis.len()];
    let index: std::collections::BTreeMap<Monomial, usize> = basis
        .iter()
        .enumerate()
        .map(|(i, m)| (*m, i))
        .collect();
    for (mono, c) in v.iter() {
        let i = index.get(mono)?;
        coords[*i] = c.clone();
    }
    Some(coords)
}

/// Rebuilds a module element from coordinates in an ordered basis.
pub fn from_coordinates<F: Field>(coords: &[F], basis: &[Monomial]) -> ModuleElement<F> {
    let mut out = ModuleElement::zero();
    for (c, mono) in coords.iter().zip(basis) {
        out.insert(*mono, c.clone());
    }
    out
}
