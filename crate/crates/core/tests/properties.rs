//! Property tests for the exact arithmetic layer and the module action.

use cga_verma::field::{rat, Rational};
use cga_verma::pbw::{ModuleElement, Monomial, VermaModule};
use cga_verma::poly::{self, Polynomial, Var};
use cga_verma::ratfn::{RationalFunction, SpecPoint};
use cga_verma::{bracket, Generator};

use num_traits::{One, Zero};
use proptest::prelude::*;

fn small_rational() -> impl Strategy<Value = Rational> {
    (-20i64..=20, 1i64..=12).prop_map(|(n, d)| rat(n, d))
}

fn small_polynomial() -> impl Strategy<Value = Polynomial> {
    proptest::collection::vec(
        (small_rational(), 0u32..=2, 0u32..=2, 0u32..=2),
        0..=3,
    )
    .prop_map(|terms| {
        let mut p = Polynomial::zero();
        for (c, et, ed, er) in terms {
            let term = Polynomial::constant(c)
                .mul(&Polynomial::variable(Var::Theta).pow(et))
                .mul(&Polynomial::variable(Var::D).pow(ed))
                .mul(&Polynomial::variable(Var::R).pow(er));
            p = p.add(&term);
        }
        p
    })
}

fn nonzero_polynomial() -> impl Strategy<Value = Polynomial> {
    small_polynomial().prop_filter("nonzero", |p| !p.is_zero())
}

fn scalar() -> impl Strategy<Value = RationalFunction> {
    (small_polynomial(), nonzero_polynomial())
        .prop_map(|(n, d)| RationalFunction::new(n, d).unwrap())
}

fn nonzero_scalar() -> impl Strategy<Value = RationalFunction> {
    scalar().prop_filter("nonzero", |s| !s.is_zero())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn addition_is_associative(a in scalar(), b in scalar(), c in scalar()) {
        let lhs = (a.clone() + b.clone()) + c.clone();
        let rhs = a + (b + c);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn multiplication_distributes(a in scalar(), b in scalar(), c in scalar()) {
        let lhs = a.clone() * (b.clone() + c.clone());
        let rhs = a.clone() * b + a * c;
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn multiplicative_inverse(a in nonzero_scalar()) {
        let prod = a.clone() * a.inverse().unwrap();
        prop_assert!(prod.is_one());
    }

    #[test]
    fn normal_form_is_canonical(a in scalar(), b in nonzero_scalar()) {
        // Two routes to a/b: direct division versus multiplying by the
        // inverse. Canonical forms must be bit-identical.
        let direct = a.clone() / b.clone();
        let via_inverse = a * b.inverse().unwrap();
        prop_assert_eq!(direct.numerator(), via_inverse.numerator());
        prop_assert_eq!(direct.denominator(), via_inverse.denominator());
    }

    #[test]
    fn specialization_is_a_ring_homomorphism(a in scalar(), b in scalar()) {
        let at = SpecPoint::new(rat(2, 3), rat(-1, 2), rat(3, 1)).unwrap();
        let defined = |s: &RationalFunction| s.specialize(&at).is_ok();
        if defined(&a) && defined(&b) {
            let sum = a.clone() + b.clone();
            let prod = a.clone() * b.clone();
            prop_assert_eq!(
                sum.specialize(&at).unwrap(),
                a.specialize(&at).unwrap() + b.specialize(&at).unwrap()
            );
            prop_assert_eq!(
                prod.specialize(&at).unwrap(),
                a.specialize(&at).unwrap() * b.specialize(&at).unwrap()
            );
        }
    }

    #[test]
    fn gcd_divides_both_inputs(a in small_polynomial(), b in small_polynomial(), g in nonzero_polynomial()) {
        let ag = a.mul(&g);
        let bg = b.mul(&g);
        let gg = poly::gcd(&ag, &bg);
        if !ag.is_zero() {
            prop_assert!(ag.div_exact(&gg).is_some());
        }
        if !bg.is_zero() {
            prop_assert!(bg.div_exact(&gg).is_some());
        }
        // The common factor is picked up (up to normalization).
        if !ag.is_zero() || !bg.is_zero() {
            prop_assert!(gg.div_exact(&poly::gcd(&g, &g)).is_some());
        }
    }

    #[test]
    fn scalar_text_round_trip(a in scalar()) {
        let s = a.to_string();
        let back: RationalFunction = s.parse().unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn module_element_serialization_is_sorted(
        exps in proptest::collection::vec((0u32..4, 0u32..4, 0u32..4, 0u32..4), 1..6)
    ) {
        let mut v: ModuleElement<Rational> = ModuleElement::zero();
        for (i, (h, k, l, m)) in exps.into_iter().enumerate() {
            v.insert(Monomial::new(h, k, l, m), rat(i as i64 + 1, 1));
        }
        let terms = v.to_json_terms();
        let keys: Vec<_> = terms.iter().map(|t| (t.h, t.k, t.l, t.m)).collect();
        let mut sorted = keys.clone();
        sorted.sort();
        prop_assert_eq!(keys, sorted);
    }

    #[test]
    fn commutator_action_matches_bracket(
        x_idx in 0usize..11,
        y_idx in 0usize..11,
        (h, k, l, m) in (0u32..3, 0u32..3, 0u32..3, 0u32..3)
    ) {
        // act(x, act(y, v)) - act(y, act(x, v)) = act([x, y], v) at a
        // specialized point, exactly.
        let x = Generator::ALL[x_idx];
        let y = Generator::ALL[y_idx];
        let at = SpecPoint::new(rat(1, 3), rat(-5, 2), rat(2, 1)).unwrap();
        let module = VermaModule::at_point(&at);
        let v = ModuleElement::basis(Monomial::new(h, k, l, m));
        let lhs = module.act(x, &module.act(y, &v)).sub(&module.act(y, &module.act(x, &v)));
        let rhs = module.act_element(&bracket(x, y), &v);
        prop_assert_eq!(lhs, rhs);
    }
}
