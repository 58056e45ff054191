//! Singular vectors by exact nullspace computation.
//!
//! A singular vector at weight `(p, q)` is a nonzero element (other than the
//! highest-weight vector itself) annihilated by all four raising generators.
//! The solver stacks the matrices of `H, P+, P-, K+` restricted to the
//! weight space and computes the exact nullspace; the closed-form results —
//! the `q = 0` coefficient table and the `q > 0` kernel basis of `K+` — are
//! implemented as independent constructions so the two routes can be checked
//! against each other.
//!
//! A generic (fully symbolic) run treats `d` as transcendental and therefore
//! finds nothing at `q = 0`; discovering the singular level `p = 2d + 3`
//! requires specializing the parameters, which is why the solver is usually
//! driven over `ℚ` on a grid of points.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Signed};

use crate::algebra::Generator;
use crate::error::{Error, Result};
use crate::field::{Field, Rational};
use crate::linalg;
use crate::pbw::{ModuleElement, Monomial, VermaModule};
use crate::weight::{enumerate_basis, from_coordinates, WeightLabel};

/// The matrix of one raising generator restricted to a weight space.
#[derive(Debug, Clone)]
pub struct AnnihilatorBlock<F> {
    pub generator: Generator,
    pub target: Option<WeightLabel>,
    pub target_basis: Vec<Monomial>,
    /// `target_basis.len()` rows by `domain_basis.len()` columns.
    pub rows: Vec<Vec<F>>,
}

/// Stacked annihilation conditions `H v = P± v = K+ v = 0` over one weight
/// space, in the fixed block order `H, P+, P-, K+`.
#[derive(Debug, Clone)]
pub struct AnnihilatorSystem<F> {
    pub weight: WeightLabel,
    pub domain_basis: Vec<Monomial>,
    pub blocks: Vec<AnnihilatorBlock<F>>,
}

impl<F: Field> AnnihilatorSystem<F> {
    /// All block rows concatenated into one matrix.
    pub fn stacked(&self) -> Vec<Vec<F>> {
        let mut rows = Vec::new();
        for block in &self.blocks {
            rows.extend(block.rows.iter().cloned());
        }
        rows
    }
}

/// Builds the annihilation system at a weight space by acting with each
/// raising generator on every basis monomial.
pub fn build_annihilator<F: Field>(
    module: &VermaModule<F>,
    weight: WeightLabel,
) -> AnnihilatorSystem<F> {
    let domain_basis = enumerate_basis(weight);
    let mut blocks = Vec::with_capacity(Generator::RAISING.len());
    for x in Generator::RAISING {
        let target = weight.shifted(x);
        let target_basis = target.map(enumerate_basis).unwrap_or_default();
        let mut rows = vec![vec![F::zero(); domain_basis.len()]; target_basis.len()];
        let index: BTreeMap<Monomial, usize> = target_basis
            .iter()
            .enumerate()
            .map(|(i, m)| (*m, i))
            .collect();
        for (j, mono) in domain_basis.iter().enumerate() {
            let image = module.act_monomial(x, *mono);
            for (t, c) in image.iter() {
                let i = index[t];
                rows[i][j] = c.clone();
            }
        }
        blocks.push(AnnihilatorBlock {
            generator: x,
            target,
            target_basis,
            rows,
        });
    }
    AnnihilatorSystem {
        weight,
        domain_basis,
        blocks,
    }
}

/// A singular-vector candidate: coefficients over the `(l, m)` index pairs
/// of the weight-space basis.
#[derive(Debug, Clone, PartialEq)]
pub struct SingularVectorCandidate<F> {
    pub weight: WeightLabel,
    pub coefficients: BTreeMap<(u32, u32), F>,
}

impl<F: Field> SingularVectorCandidate<F> {
    pub fn from_element(weight: WeightLabel, v: &ModuleElement<F>) -> Self {
        let mut coefficients = BTreeMap::new();
        for (mono, c) in v.iter() {
            coefficients.insert((mono.l, mono.m), c.clone());
        }
        SingularVectorCandidate {
            weight,
            coefficients,
        }
    }

    pub fn to_element(&self) -> ModuleElement<F> {
        let mut out = ModuleElement::zero();
        for (&(l, m), c) in &self.coefficients {
            let h = self.weight.p - l - m;
            let k = self.weight.q - i64::from(l) + i64::from(m);
            debug_assert!(k >= 0, "candidate support outside the weight space");
            out.insert(Monomial::new(h, k as u32, l, m), c.clone());
        }
        out
    }
}

/// All singular vectors at a weight space, as a nullspace basis normalized
/// so each vector's first nonzero coefficient in `(l, m)` order is 1.
///
/// At `(p, q) = (0, 0)` the annihilation conditions are vacuous but the only
/// candidate is the highest-weight vector, which is not a singular vector;
/// the result there is empty by definition.
pub fn solve_singular<F: Field>(
    module: &VermaModule<F>,
    weight: WeightLabel,
) -> Vec<SingularVectorCandidate<F>> {
    if weight.p == 0 && weight.q == 0 {
        return Vec::new();
    }
    let system = build_annihilator(module, weight);
    let cols = system.domain_basis.len();
    if cols == 0 {
        return Vec::new();
    }
    linalg::nullspace(system.stacked(), cols)
        .into_iter()
        .map(|coords| {
            let v = from_coordinates(&coords, &system.domain_basis);
            SingularVectorCandidate::from_element(weight, &v)
        })
        .collect()
}

/// What the classification predicts for a weight space at a given `d`:
/// exactly one singular vector iff `q = 0` and `p = 2d + 3` with `p >= 1`,
/// none otherwise.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Expectation {
    None,
    One,
}

pub fn classify_level(weight: WeightLabel, d: &Rational) -> Expectation {
    let two_d_plus_3 = Rational::from_integer(2.into()) * d.clone()
        + Rational::from_integer(3.into());
    if weight.q == 0
        && weight.p >= 1
        && two_d_plus_3 == Rational::from_integer(BigInt::from(weight.p))
    {
        Expectation::One
    } else {
        Expectation::None
    }
}

/// The singular level `p0 = 2d + 3` when it is a positive integer.
///
/// `p0 = 0` (that is, `d = -3/2`) is excluded: the corresponding "vector"
/// would be the highest-weight vector itself and generates no proper
/// submodule.
pub fn singular_level(d: &Rational) -> Option<u32> {
    let two_d_plus_3 = Rational::from_integer(2.into()) * d.clone()
        + Rational::from_integer(3.into());
    if !two_d_plus_3.is_integer() || !two_d_plus_3.is_positive() {
        return None;
    }
    u32::try_from(two_d_plus_3.to_integer()).ok()
}

fn factorial(n: u32) -> Rational {
    let mut acc = BigInt::one();
    for i in 2..=i64::from(n) {
        acc *= BigInt::from(i);
    }
    Rational::from_integer(acc)
}

/// The `q = 0` singular-vector coefficient table at level `p`, normalized to
/// `a_{0,0} = 1`:
///
/// ```text
/// a_{l,m} = (-1/2)^{m+l} · θ^{-m} · p! / (l! (m-l)! (p-l-m)!)
/// ```
///
/// over `0 <= m <= p`, `0 <= l <= min(m, p-m)`. Requires a nonzero `θ`.
pub fn q0_coefficient_table<F: Field>(
    theta: &F,
    p: u32,
) -> Result<BTreeMap<(u32, u32), F>> {
    if p < 1 {
        return Err(Error::invalid("coefficient table requires p >= 1"));
    }
    let theta_inv = theta.inverse().map_err(|_| Error::ZeroTheta)?;
    let minus_half = F::from_rational(&Rational::new((-1).into(), 2.into()));
    let p_fact = factorial(p);
    let mut table = BTreeMap::new();
    for m in 0..=p {
        for l in 0..=m.min(p - m) {
            let ratio =
                p_fact.clone() / (factorial(l) * factorial(m - l) * factorial(p - l - m));
            let mut coef = F::from_rational(&ratio);
            for _ in 0..(m + l) {
                coef = coef * minus_half.clone();
            }
            for _ in 0..m {
                coef = coef * theta_inv.clone();
            }
            table.insert((l, m), coef);
        }
    }
    Ok(table)
}

/// Basis of `ker(K+)` inside a weight space with `q >= 1`, computed as the
/// exact nullspace of the `K+` block alone and normalized like
/// [`solve_singular`]. Empty when `p < q`.
pub fn kplus_kernel<F: Field>(
    module: &VermaModule<F>,
    weight: WeightLabel,
) -> Result<Vec<ModuleElement<F>>> {
    if weight.q < 1 {
        return Err(Error::invalid("the K+ kernel operation requires q >= 1"));
    }
    let system = build_annihilator(module, weight);
    let cols = system.domain_basis.len();
    if cols == 0 {
        return Ok(Vec::new());
    }
    let kplus = system
        .blocks
        .iter()
        .find(|b| b.generator == Generator::KPlus)
        .expect("K+ block is always built");
    Ok(linalg::nullspace(kplus.rows.clone(), cols)
        .into_iter()
        .map(|coords| from_coordinates(&coords, &system.domain_basis))
        .collect())
}

/// Closed-form construction of the same kernel basis: for each
/// `q <= l <= (p+q)/2` the vector
///
/// ```text
/// Σ_m (-1/(2θ))^m / ((p-l-m)! (q-l+m)!) · |p-l-m, q-l+m, l, m⟩ ,
/// ```
///
/// `m` running from `l-q` to `p-l`, rescaled so the first coefficient is 1.
/// Kept independent of the nullspace route on purpose.
pub fn kplus_kernel_reference<F: Field>(
    theta: &F,
    weight: WeightLabel,
) -> Result<Vec<ModuleElement<F>>> {
    if weight.q < 1 {
        return Err(Error::invalid("the K+ kernel operation requires q >= 1"));
    }
    let q = weight.q as u32;
    let p = weight.p;
    let theta_inv = theta.inverse().map_err(|_| Error::ZeroTheta)?;
    let minus_inv_2theta =
        F::from_rational(&Rational::new((-1).into(), 2.into())) * theta_inv;
    let mut vectors = Vec::new();
    if p < q {
        return Ok(vectors);
    }
    let basis = enumerate_basis(weight);
    for l in q..=((p + q) / 2) {
        let mut v = ModuleElement::zero();
        for m in (l - q)..=(p - l) {
            let denom = factorial(p - l - m) * factorial(q + m - l);
            let mut coef = F::from_rational(&(Rational::one() / denom));
            for _ in 0..m {
                coef = coef * minus_inv_2theta.clone();
            }
            v.insert(Monomial::new(p - l - m, q + m - l, l, m), coef);
        }
        vectors.push(v.normalized_leading(&basis));
    }
    Ok(vectors)
}

/// Checks every solver output against the raising actions directly, without
/// going through the matrices it was computed from.
pub fn is_annihilated<F: Field>(module: &VermaModule<F>, v: &ModuleElement<F>) -> bool {
    Generator::RAISING
        .into_iter()
        .all(|x| module.act(x, v).is_zero())
}
