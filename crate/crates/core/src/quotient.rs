//! The invariant submodule generated by the singular vector, the quotient
//! module, and the classification of irreducibles.
//!
//! When `p0 = 2d + 3` is a positive integer the Verma module contains a
//! unique singular vector `v_s = (2θC - K-F+)^{p0}·hw` at weight `(p0, 0)`.
//! Applying every lowering monomial of complementary weight to `v_s` spans
//! the corresponding slice of the submodule it generates; row reduction
//! makes the slice canonical. The quotient is handled entirely through these
//! slices: representatives are chosen greedily in basis order, raising
//! actions are reduced modulo the target slice, and the absence of singular
//! vectors in the quotient is verified level by level as an exact nullspace
//! statement.
//!
//! All of this runs specialized over `ℚ`: the submodule only exists once `d`
//! has been pinned to a half-integer on the singular locus.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::algebra::Generator;
use crate::error::{Error, Result};
use crate::field::Rational;
use crate::linalg::RowSpace;
use crate::pbw::{ModuleElement, Monomial, VermaModule};
use crate::ratfn::SpecPoint;
use crate::solver::singular_level;
use crate::weight::{coordinates, enumerate_basis, WeightLabel};

/// One weight-space slice of the submodule generated by the singular vector.
#[derive(Debug, Clone)]
pub struct SubmoduleSlice {
    pub weight: WeightLabel,
    /// Images of the singular vector under the lowering monomials of
    /// complementary weight, before reduction.
    pub spanning: Vec<ModuleElement<Rational>>,
    /// Basis of the ambient weight space the coordinates refer to.
    pub basis: Vec<Monomial>,
    /// Row-reduced span of the coordinate vectors.
    pub reduced: RowSpace<Rational>,
}

impl SubmoduleSlice {
    pub fn dim(&self) -> usize {
        self.reduced.rank()
    }
}

/// Builds the slice of `U(g⁻)·v_s` at a weight space. Empty below the
/// singular level. Requires the module's `d` to lie on the singular locus.
pub fn submodule_slice(
    module: &VermaModule<Rational>,
    weight: WeightLabel,
) -> Result<SubmoduleSlice> {
    let d = &module.highest_weight().d;
    let p0 = singular_level(d).ok_or_else(|| {
        Error::invalid(format!("no singular level at d = {d}: 2d+3 is not a positive integer"))
    })?;
    let basis = enumerate_basis(weight);
    let mut slice = SubmoduleSlice {
        weight,
        spanning: Vec::new(),
        basis: basis.clone(),
        reduced: RowSpace::new(basis.len()),
    };
    if weight.p < p0 {
        return Ok(slice);
    }
    let vs = module.closed_form_power(p0)?;
    // Lowering words of complementary weight, reusing the weight-space
    // enumeration: a monomial (a, b, c, e) stands for C^a K-^b F-^c F+^e.
    let complement = WeightLabel::new(weight.p - p0, weight.q);
    for word_mono in enumerate_basis(complement) {
        let image = module.act_word(&word_mono.word(), &vs);
        if image.is_zero() {
            continue;
        }
        let coords = coordinates(&image, &basis)
            .expect("lowering image stays in the expected weight space");
        slice.reduced.insert(&coords);
        slice.spanning.push(image);
    }
    Ok(slice)
}

/// Representatives of a quotient-space basis: the monomials kept by a greedy
/// sweep in basis order, skipping anything dependent on the slice together
/// with the monomials already kept.
pub fn quotient_basis(
    module: &VermaModule<Rational>,
    weight: WeightLabel,
) -> Result<Vec<Monomial>> {
    let slice = submodule_slice(module, weight)?;
    Ok(quotient_basis_from_slice(&slice))
}

fn quotient_basis_from_slice(slice: &SubmoduleSlice) -> Vec<Monomial> {
    let mut space = slice.reduced.clone();
    let mut reps = Vec::new();
    for (i, mono) in slice.basis.iter().enumerate() {
        let mut unit = vec![Rational::from_integer(0.into()); slice.basis.len()];
        unit[i] = Rational::from_integer(1.into());
        if space.insert(&unit) {
            reps.push(*mono);
        }
    }
    reps
}

/// Which irreducible module the parameters select.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Branch {
    VermaIrreducible,
    QuotientIrreducible,
}

/// Classification verdict for one parameter point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassificationVerdict {
    pub d: Rational,
    pub r: Rational,
    pub theta: Rational,
    pub branch: Branch,
    /// The singular level `2d + 3`, present on the quotient branch.
    pub p0: Option<u32>,
    /// Recorded convention: `2d + 3` must be a *positive* integer; the
    /// boundary value `2d + 3 = 0` stays on the Verma branch.
    pub positive_integer_convention: bool,
}

/// The classification: the Verma module itself is irreducible unless
/// `2d + 3` is a positive integer, in which case the quotient by the
/// submodule generated by the singular vector is.
pub fn classify(point: &SpecPoint) -> ClassificationVerdict {
    let p0 = singular_level(&point.d);
    ClassificationVerdict {
        d: point.d.clone(),
        r: point.r.clone(),
        theta: point.theta.clone(),
        branch: match p0 {
            Some(_) => Branch::QuotientIrreducible,
            None => Branch::VermaIrreducible,
        },
        p0,
        positive_integer_convention: true,
    }
}

/// Dimensions at one weight of the Verma space, the submodule slice and the
/// quotient.
#[derive(Debug, Clone, Serialize)]
pub struct LevelReport {
    pub p: u32,
    pub q: i64,
    pub dim_weight_space: usize,
    pub dim_submodule: usize,
    pub dim_quotient: usize,
}

/// Outcome of the level-by-level singular-vector search in the quotient.
#[derive(Debug, Clone)]
pub struct QuotientCheckReport {
    pub point: SpecPoint,
    pub p0: u32,
    pub levels: Vec<LevelReport>,
    /// Weights at which the quotient unexpectedly contains a singular
    /// vector, with the offending vector rendered over the representatives.
    pub violations: Vec<(WeightLabel, String)>,
    pub additivity_failures: Vec<WeightLabel>,
}

impl QuotientCheckReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty() && self.additivity_failures.is_empty()
    }
}

/// Searches the quotient module for singular vectors at every weight with
/// `1 <= p <= p_max`, `|q| <= q_max`, and checks `dim V = dim I + dim Ṽ`
/// at each of them.
///
/// A weight vector of the quotient is a combination of representatives; it
/// is singular when each raising image lies in the target slice. The search
/// is therefore an exact nullspace computation on the stacked
/// reduced-modulo-slice action matrices, and the expected outcome — by
/// construction of the quotient — is that every such nullspace is zero.
pub fn quotient_singular_check(
    point: &SpecPoint,
    p_max: u32,
    q_max: u32,
) -> Result<QuotientCheckReport> {
    let module = VermaModule::at_point(point);
    let p0 = singular_level(&point.d).ok_or_else(|| {
        Error::invalid("quotient check requires 2d+3 to be a positive integer")
    })?;
    let mut slices: BTreeMap<WeightLabel, SubmoduleSlice> = BTreeMap::new();
    let mut report = QuotientCheckReport {
        point: point.clone(),
        p0,
        levels: Vec::new(),
        violations: Vec::new(),
        additivity_failures: Vec::new(),
    };
    for p in 1..=p_max {
        for q in -i64::from(q_max)..=i64::from(q_max) {
            let w = WeightLabel::new(p, q);
            check_one_weight(&module, w, &mut slices, &mut report)?;
        }
    }
    Ok(report)
}

fn slice_at<'a>(
    module: &VermaModule<Rational>,
    w: WeightLabel,
    slices: &'a mut BTreeMap<WeightLabel, SubmoduleSlice>,
) -> Result<&'a SubmoduleSlice> {
    if let std::collections::btree_map::Entry::Vacant(entry) = slices.entry(w) {
        entry.insert(submodule_slice(module, w)?);
    }
    Ok(&slices[&w])
}

fn check_one_weight(
    module: &VermaModule<Rational>,
    w: WeightLabel,
    slices: &mut BTreeMap<WeightLabel, SubmoduleSlice>,
    report: &mut QuotientCheckReport,
) -> Result<()> {
    let dim_weight_space;
    let reps: Vec<Monomial>;
    {
        let slice = slice_at(module, w, slices)?;
        dim_weight_space = slice.basis.len();
        reps = quotient_basis_from_slice(slice);
        if dim_weight_space != slice.dim() + reps.len() {
            report.additivity_failures.push(w);
        }
        report.levels.push(LevelReport {
            p: w.p,
            q: w.q,
            dim_weight_space,
            dim_submodule: slice.dim(),
            dim_quotient: reps.len(),
        });
    }
    if reps.is_empty() {
        return Ok(());
    }
    // Stack the four raising actions, each reduced modulo the slice of its
    // target weight space.
    let mut stacked: Vec<Vec<Rational>> = Vec::new();
    for x in Generator::RAISING {
        let Some(target) = w.shifted(x) else {
            continue;
        };
        let target_slice = slice_at(module, target, slices)?;
        let images: Vec<Vec<Rational>> = reps
            .iter()
            .map(|rep| {
                let image = module.act_monomial(x, *rep);
                let coords = coordinates(&image, &target_slice.basis)
                    .expect("raising image stays in the target weight space");
                target_slice.reduced.reduce(&coords)
            })
            .collect();
        let target_dim = images.first().map(|v| v.len()).unwrap_or(0);
        for row_idx in 0..target_dim {
            stacked.push(images.iter().map(|col| col[row_idx].clone()).collect());
        }
    }
    for kernel in crate::linalg::nullspace(stacked, reps.len()) {
        let mut rendered = ModuleElement::<Rational>::zero();
        for (c, rep) in kernel.iter().zip(&reps) {
            rendered.insert(*rep, c.clone());
        }
        report.violations.push((w, rendered.to_string()));
    }
    Ok(())
}
