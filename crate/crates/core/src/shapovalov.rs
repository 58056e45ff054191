//! The contravariant bilinear form and its Gram matrices.
//!
//! The form is pinned down by `(hw, hw) = 1` together with contravariance
//! with respect to the anti-automorphism `ω`: pairing `A·hw` against `B·hw`
//! transports `A` across as `ω(A)` and reads off the highest-weight
//! component of `ω(A)B·hw`. Degeneracy of the Gram matrix on a weight space
//! signals reducibility, so extracting the rational roots (in `d`) of a
//! symbolic Gram determinant locates the reducible modules.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::algebra::{omega, Generator};
use crate::field::{Field, Rational};
use crate::linalg;
use crate::pbw::{ModuleElement, Monomial, VermaModule};
use crate::poly::{Polynomial, Var};
use crate::ratfn::RationalFunction;
use crate::weight::{enumerate_basis, weight_of, WeightLabel};

/// The word `ω(C^h K-^k F-^l F+^m)` — factor order reversed, each factor
/// replaced by its `ω`-image — to be applied left-to-right.
pub fn omega_word(mono: Monomial) -> Vec<Generator> {
    let mut word = mono.word();
    word.reverse();
    word.iter().map(|g| omega(*g)).collect()
}

/// The bilinear form `(u, v)`. Bilinear; vanishes across distinct weights.
pub fn pair<F: Field>(
    module: &VermaModule<F>,
    u: &ModuleElement<F>,
    v: &ModuleElement<F>,
) -> F {
    let mut acc = F::zero();
    for (mono, c) in u.iter() {
        let transported = module.act_word(&omega_word(*mono), v);
        acc = acc + c.clone() * transported.coeff(&Monomial::hw());
    }
    acc
}

/// Gram matrix of the form over one weight space, rows and columns in the
/// canonical basis order.
#[derive(Debug, Clone)]
pub struct GramMatrix<F> {
    pub weight: WeightLabel,
    pub basis: Vec<Monomial>,
    pub entries: Vec<Vec<F>>,
}

impl<F: Field> GramMatrix<F> {
    pub fn is_symmetric(&self) -> bool {
        let n = self.basis.len();
        (0..n).all(|i| (0..n).all(|j| self.entries[i][j] == self.entries[j][i]))
    }
}

pub fn gram<F: Field>(module: &VermaModule<F>, weight: WeightLabel) -> GramMatrix<F> {
    let basis = enumerate_basis(weight);
    let entries = basis
        .iter()
        .map(|u| {
            basis
                .iter()
                .map(|v| {
                    pair(
                        module,
                        &ModuleElement::basis(*u),
                        &ModuleElement::basis(*v),
                    )
                })
                .collect()
        })
        .collect();
    GramMatrix {
        weight,
        basis,
        entries,
    }
}

pub fn gram_det<F: Field>(g: &GramMatrix<F>) -> F {
    linalg::determinant(g.entries.clone())
}

/// Rational values of `d` at which a symbolic Gram determinant vanishes
/// identically in `θ` and `r`, found by the rational-root theorem on the
/// primitive integer form of the numerator, sorted ascending.
///
/// Candidate enumeration factors the leading/trailing integer contents by
/// trial division (primes up to 10⁶, any larger cofactor treated as prime),
/// which covers everything this crate produces; each candidate is then
/// confirmed by exact substitution, so no reported root is ever spurious.
pub fn gram_det_roots(det: &RationalFunction) -> Vec<Rational> {
    let num = det.numerator();
    if num.is_zero() {
        return Vec::new();
    }
    // Clear rational denominators and the overall integer content.
    let content = num.rational_content();
    let primitive = num.scale(&(Rational::one() / content));
    let coeffs = univariate_in_d(&primitive);
    let low = coeffs.iter().position(|c| !c.is_zero()).unwrap();
    let high = coeffs.iter().rposition(|c| !c.is_zero()).unwrap();
    let mut candidates = Vec::new();
    if low > 0 {
        candidates.push(Rational::zero());
    }
    if high > low {
        let trailing = integer_content(&coeffs[low]);
        let leading = integer_content(&coeffs[high]);
        for a in divisors(&trailing) {
            for b in divisors(&leading) {
                let c = Rational::new(a.clone(), b.clone());
                candidates.push(c.clone());
                candidates.push(-c);
            }
        }
    }
    candidates.sort();
    candidates.dedup();
    candidates
        .into_iter()
        .filter(|c| is_root_in_d(det, c))
        .collect()
}

fn univariate_in_d(p: &Polynomial) -> Vec<Polynomial> {
    p.to_univariate(Var::D)
}

fn integer_content(p: &Polynomial) -> BigInt {
    let mut acc = BigInt::zero();
    for (_, c) in p.terms() {
        debug_assert!(c.denom().is_one(), "primitive form has integer coefficients");
        acc = acc.gcd(c.numer());
    }
    acc
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    if n.is_zero() {
        return vec![BigInt::one()];
    }
    let mut factors: Vec<(BigInt, u32)> = Vec::new();
    let mut rest = n;
    let mut p = BigInt::from(2);
    let bound = BigInt::from(1_000_000u64);
    while &p * &p <= rest && p <= bound {
        let mut e = 0;
        while (&rest % &p).is_zero() {
            rest /= &p;
            e += 1;
        }
        if e > 0 {
            factors.push((p.clone(), e));
        }
        p += 1u32;
    }
    if rest > BigInt::one() {
        factors.push((rest, 1));
    }
    let mut divs = vec![BigInt::one()];
    for (prime, e) in factors {
        let mut next = Vec::new();
        for d in &divs {
            let mut power = BigInt::one();
            for _ in 0..=e {
                next.push(d * &power);
                power *= &prime;
            }
        }
        divs = next;
    }
    divs.sort();
    divs.dedup();
    divs
}

fn is_root_in_d(det: &RationalFunction, d0: &Rational) -> bool {
    match det.eval_var(Var::D, d0) {
        Ok(v) => v.is_zero(),
        Err(_) => false,
    }
}

/// The unique singular vector at a weight space, when the solver finds
/// exactly one. Convenience for orthogonality checks.
pub fn singular_vector_at<F: Field>(
    module: &VermaModule<F>,
    weight: WeightLabel,
) -> Option<ModuleElement<F>> {
    let mut found = crate::solver::solve_singular(module, weight);
    if found.len() == 1 {
        Some(found.remove(0).to_element())
    } else {
        None
    }
}

/// `(act(x, u), v) = (u, act(ω(x), v))`, the defining transport property.
pub fn contravariance_holds<F: Field>(
    module: &VermaModule<F>,
    x: Generator,
    u: &ModuleElement<F>,
    v: &ModuleElement<F>,
) -> bool {
    let lhs = pair(module, &module.act(x, u), v);
    let rhs = pair(module, u, &module.act(omega(x), v));
    lhs == rhs
}

/// Orthogonality of a weight vector against its entire weight space.
pub fn orthogonal_to_weight_space<F: Field>(
    module: &VermaModule<F>,
    v: &ModuleElement<F>,
) -> bool {
    let Some((mono, _)) = v.iter().next() else {
        return true;
    };
    let weight = weight_of(*mono);
    enumerate_basis(weight)
        .into_iter()
        .all(|b| pair(module, v, &ModuleElement::basis(b)).is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::rat;
    use crate::ratfn::SpecPoint;
    use crate::solver::solve_singular;

    fn sym() -> VermaModule<RationalFunction> {
        VermaModule::symbolic()
    }

    fn rf(n: i64) -> RationalFunction {
        RationalFunction::from_integer(n)
    }

    #[test]
    fn pairing_examples() {
        let v = sym();
        let hw = ModuleElement::basis(Monomial::hw());
        assert_eq!(pair(&v, &hw, &hw), RationalFunction::one());

        let c_hw = ModuleElement::basis(Monomial::new(1, 0, 0, 0));
        let kf_hw = ModuleElement::basis(Monomial::new(0, 1, 0, 1));
        assert_eq!(pair(&v, &c_hw, &c_hw), rf(-2) * RationalFunction::d());
        assert_eq!(pair(&v, &c_hw, &kf_hw), rf(4) * RationalFunction::theta());
        // Distinct weights pair to zero.
        let f_hw = ModuleElement::basis(Monomial::new(0, 0, 1, 0));
        assert!(pair(&v, &c_hw, &f_hw).is_zero());
    }

    #[test]
    fn gram_at_level_one() {
        let v = sym();
        let g = gram(&v, WeightLabel::new(1, 0));
        let theta = RationalFunction::theta();
        assert_eq!(
            g.entries,
            vec![
                vec![rf(-2) * RationalFunction::d(), rf(4) * theta.clone()],
                vec![rf(4) * theta.clone(), rf(8) * theta.pow(2)],
            ]
        );
        assert!(g.is_symmetric());
        // det = -16θ²(d+1), with the single rational root d = -1.
        let det = gram_det(&g);
        let expected = rf(-16)
            * RationalFunction::theta().pow(2)
            * (RationalFunction::d() + RationalFunction::one());
        assert_eq!(det, expected);
        assert_eq!(gram_det_roots(&det), vec![rat(-1, 1)]);
    }

    #[test]
    fn gram_at_the_highest_weight() {
        let v = sym();
        let g = gram(&v, WeightLabel::new(0, 0));
        assert_eq!(g.entries, vec![vec![RationalFunction::one()]]);
        assert!(gram_det_roots(&gram_det(&g)).is_empty());
    }

    #[test]
    fn gram_det_at_level_two_has_the_expected_root() {
        let v = sym();
        let det = gram_det(&gram(&v, WeightLabel::new(2, 0)));
        let roots = gram_det_roots(&det);
        assert!(roots.contains(&rat(-1, 2)), "roots: {roots:?}");
    }

    #[test]
    fn contravariance_on_a_sample() {
        let v = sym();
        let u = ModuleElement::basis(Monomial::new(1, 1, 0, 0));
        let w = ModuleElement::basis(Monomial::new(0, 1, 1, 1));
        for x in Generator::ALL {
            assert!(
                contravariance_holds(&v, x, &u, &w),
                "transport fails for {x}"
            );
        }
    }

    #[test]
    fn singular_vectors_are_orthogonal_to_their_weight_space() {
        for p in 1..=3u32 {
            let d = rat(i64::from(p) - 3, 2);
            let point = SpecPoint::new(rat(1, 1), d, rat(0, 1)).unwrap();
            let module = VermaModule::at_point(&point);
            let vs = singular_vector_at(&module, WeightLabel::new(p, 0))
                .expect("singular vector exists at p = 2d+3");
            assert!(orthogonal_to_weight_space(&module, &vs));
        }
    }

    #[test]
    fn gram_nullspace_contains_the_singular_vector() {
        let point = SpecPoint::new(rat(1, 1), rat(-1, 2), rat(5, 1)).unwrap();
        let module = VermaModule::at_point(&point);
        let w = WeightLabel::new(2, 0);
        let g = gram(&module, w);
        let ns = linalg::nullspace(g.entries.clone(), g.basis.len());
        assert_eq!(ns.len(), 1);
        let found = solve_singular(&module, w);
        assert_eq!(found.len(), 1);
        let coords: Vec<_> = g
            .basis
            .iter()
            .map(|b| found[0].to_element().coeff(b))
            .collect();
        assert_eq!(ns[0], coords);
    }

    #[test]
    fn gram_rank_deficiency_matches_the_invariant_submodule() {
        // Observed property (not claimed as a theorem): at q != 0 the
        // radical of the form is exactly the slice of the invariant
        // submodule. Off the singular locus that slice is zero and the Gram
        // matrix is nonsingular; on the locus (here d = -1/2, so p0 = 2)
        // the submodule reaches q != 0 weights and degenerates the form by
        // exactly its dimension there.
        use crate::quotient::submodule_slice;
        use crate::solver::singular_level;
        for d in [rat(-2, 1), rat(-1, 2), rat(1, 1), rat(7, 3)] {
            for theta in [rat(1, 1), rat(1, 3)] {
                let point = SpecPoint::new(theta, d.clone(), rat(5, 1)).unwrap();
                let module = VermaModule::at_point(&point);
                for p in 0..=5u32 {
                    for q in [-3i64, -2, -1, 1, 2, 3] {
                        let w = WeightLabel::new(p, q);
                        let g = gram(&module, w);
                        if g.basis.is_empty() {
                            continue;
                        }
                        let rank = linalg::rank(g.entries.clone());
                        let expected_deficiency = match singular_level(&d) {
                            Some(_) => submodule_slice(&module, w).unwrap().dim(),
                            None => 0,
                        };
                        assert_eq!(
                            g.basis.len() - rank,
                            expected_deficiency,
                            "Gram radical at (p={p}, q={q}), d={d}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn divisor_enumeration() {
        let divs = divisors(&BigInt::from(16));
        let expected: Vec<BigInt> =
            [1, 2, 4, 8, 16].into_iter().map(BigInt::from).collect();
        assert_eq!(divs, expected);
        assert_eq!(divisors(&BigInt::from(-6)).len(), 4);
    }
}
