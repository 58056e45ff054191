//! Normal ordering in the universal enveloping algebra and the induced
//! action on the Verma basis.
//!
//! The module is spanned by monomials `C^h K-^k F-^l F+^m` applied to a
//! highest-weight vector that is annihilated by `H, P±, K+` and diagonal
//! under `D, J, Θ` with eigenvalues `(d, r, θ)`. Every action is computed by
//! commuting the incoming generator rightward through the monomial one
//! factor at a time, using only the structure constants from
//! [`crate::algebra`] and the highest-weight conditions — no per-generator
//! action formula is built in. The printed formulas for the six raising and
//! cartan generators live in [`reference`] and serve as an independent
//! cross-check of exactly this rewriting.
//!
//! Among the lowering generators only `C` and `K-` fail to commute
//! (`[C, K-] = F-`), so inserting a lowering factor into an ordered monomial
//! is a trivial exponent bump except when `K-` has to cross a `C` block,
//! which is again handled through the bracket.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::algebra::{bracket, Generator, LieElement, TriangularPart};
use crate::error::{Error, Result};
use crate::field::{Field, Rational};
use crate::ratfn::{RationalFunction, SpecPoint};

/// Exponent tuple of a Verma basis vector: `C^h K-^k F-^l F+^m` applied to
/// the highest-weight vector. Ordered lexicographically by `(h, k, l, m)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Monomial {
    pub h: u32,
    pub k: u32,
    pub l: u32,
    pub m: u32,
}

impl Monomial {
    pub fn new(h: u32, k: u32, l: u32, m: u32) -> Self {
        Monomial { h, k, l, m }
    }

    /// The highest-weight vector itself.
    pub fn hw() -> Self {
        Monomial::new(0, 0, 0, 0)
    }

    pub fn is_hw(&self) -> bool {
        *self == Monomial::hw()
    }

    pub fn degree(&self) -> u32 {
        self.h + self.k + self.l + self.m
    }

    fn exponent(&self, g: Generator) -> u32 {
        match g {
            Generator::C => self.h,
            Generator::KMinus => self.k,
            Generator::FMinus => self.l,
            Generator::FPlus => self.m,
            _ => unreachable!("only lowering generators index the basis"),
        }
    }

    fn bump(&self, g: Generator) -> Monomial {
        let mut out = *self;
        match g {
            Generator::C => out.h += 1,
            Generator::KMinus => out.k += 1,
            Generator::FMinus => out.l += 1,
            Generator::FPlus => out.m += 1,
            _ => unreachable!("only lowering generators index the basis"),
        }
        out
    }

    /// Leftmost PBW factor and the monomial with one copy of it removed.
    fn split_leading(&self) -> Option<(Generator, Monomial)> {
        for g in Generator::LOWERING {
            if self.exponent(g) > 0 {
                let mut rest = *self;
                match g {
                    Generator::C => rest.h -= 1,
                    Generator::KMinus => rest.k -= 1,
                    Generator::FMinus => rest.l -= 1,
                    Generator::FPlus => rest.m -= 1,
                    _ => unreachable!(),
                }
                return Some((g, rest));
            }
        }
        None
    }

    /// The word `C^h K-^k F-^l F+^m` as an explicit generator sequence.
    pub fn word(&self) -> UeaWord {
        let mut w = Vec::with_capacity(self.degree() as usize);
        w.extend(std::iter::repeat_n(Generator::C, self.h as usize));
        w.extend(std::iter::repeat_n(Generator::KMinus, self.k as usize));
        w.extend(std::iter::repeat_n(Generator::FMinus, self.l as usize));
        w.extend(std::iter::repeat_n(Generator::FPlus, self.m as usize));
        w
    }
}

/// An arbitrary word in the enveloping algebra, leftmost factor applied last.
pub type UeaWord = Vec<Generator>;

/// Finitely supported vector of the Verma module: a sparse map from basis
/// monomials to coefficients. No zero coefficients are stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModuleElement<F> {
    terms: BTreeMap<Monomial, F>,
}

impl<F: Field> Default for ModuleElement<F> {
    fn default() -> Self {
        ModuleElement {
            terms: BTreeMap::new(),
        }
    }
}

impl<F: Field> ModuleElement<F> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(mono: Monomial) -> Self {
        Self::term(mono, F::one())
    }

    pub fn term(mono: Monomial, coef: F) -> Self {
        let mut e = Self::default();
        e.insert(mono, coef);
        e
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Monomial, &F)> {
        self.terms.iter()
    }

    pub fn coeff(&self, mono: &Monomial) -> F {
        self.terms.get(mono).cloned().unwrap_or_else(F::zero)
    }

    pub fn insert(&mut self, mono: Monomial, coef: F) {
        if coef.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(mono) {
            Entry::Vacant(slot) => {
                slot.insert(coef);
            }
            Entry::Occupied(mut slot) => {
                let sum = slot.get().clone() + coef;
                if sum.is_zero() {
                    slot.remove();
                } else {
                    *slot.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (mono, c) in &other.terms {
            out.insert(*mono, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (mono, c) in &other.terms {
            out.insert(*mono, -c.clone());
        }
        out
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut out = Self::default();
        for (mono, k) in &self.terms {
            out.terms.insert(*mono, k.clone() * c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        self.scale(&(-F::one()))
    }

    pub fn add_scaled(&mut self, c: &F, other: &Self) {
        if c.is_zero() {
            return;
        }
        for (mono, k) in &other.terms {
            self.insert(*mono, k.clone() * c.clone());
        }
    }

    /// Divides by the coefficient of the earliest monomial (in the given
    /// basis order) that is nonzero, making it 1.
    pub fn normalized_leading(&self, basis: &[Monomial]) -> Self {
        for mono in basis {
            let c = self.coeff(mono);
            if !c.is_zero() {
                let inv = F::one() / c;
                return self.scale(&inv);
            }
        }
        self.clone()
    }

    /// Deterministic serialization: terms sorted by `(h, k, l, m)`.
    pub fn to_json_terms(&self) -> Vec<TermJson> {
        self.terms
            .iter()
            .map(|(mono, c)| TermJson {
                h: mono.h,
                k: mono.k,
                l: mono.l,
                m: mono.m,
                coef: c.to_string(),
            })
            .collect()
    }
}

/// One serialized term of a [`ModuleElement`].
#[derive(Debug, Clone, Serialize)]
pub struct TermJson {
    pub h: u32,
    pub k: u32,
    pub l: u32,
    pub m: u32,
    pub coef: String,
}

impl<F: Field> std::fmt::Display for ModuleElement<F> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (mono, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})|{},{},{},{}⟩", mono.h, mono.k, mono.l, mono.m)?;
        }
        Ok(())
    }
}

/// Highest-weight data `(d, r, θ)` as elements of the coefficient field.
#[derive(Debug, Clone, PartialEq)]
pub struct HighestWeight<F> {
    pub d: F,
    pub r: F,
    pub theta: F,
}

impl HighestWeight<RationalFunction> {
    /// Fully symbolic weights: `d`, `r`, `θ` are the indeterminates
    /// themselves.
    pub fn symbolic() -> Self {
        HighestWeight {
            d: RationalFunction::d(),
            r: RationalFunction::r(),
            theta: RationalFunction::theta(),
        }
    }
}

impl HighestWeight<Rational> {
    pub fn at(point: &SpecPoint) -> Self {
        HighestWeight {
            d: point.d.clone(),
            r: point.r.clone(),
            theta: point.theta.clone(),
        }
    }
}

/// The Verma module over a fixed highest weight, with the generator action
/// computed by bracket-driven normal ordering.
#[derive(Debug, Clone)]
pub struct VermaModule<F> {
    hw: HighestWeight<F>,
}

impl VermaModule<RationalFunction> {
    pub fn symbolic() -> Self {
        VermaModule::new(HighestWeight::symbolic())
    }
}

impl VermaModule<Rational> {
    pub fn at_point(point: &SpecPoint) -> Self {
        VermaModule::new(HighestWeight::at(point))
    }
}

impl<F: Field> VermaModule<F> {
    pub fn new(hw: HighestWeight<F>) -> Self {
        VermaModule { hw }
    }

    pub fn highest_weight(&self) -> &HighestWeight<F> {
        &self.hw
    }

    /// Action of a single generator, extended linearly.
    pub fn act(&self, x: Generator, v: &ModuleElement<F>) -> ModuleElement<F> {
        let mut out = ModuleElement::zero();
        for (mono, c) in v.iter() {
            out.add_scaled(c, &self.act_monomial(x, *mono));
        }
        out
    }

    /// Action of a `ℚ`-linear combination of generators.
    pub fn act_element(&self, e: &LieElement, v: &ModuleElement<F>) -> ModuleElement<F> {
        let mut out = ModuleElement::zero();
        for (g, c) in e.iter() {
            out.add_scaled(&F::from_rational(c), &self.act(*g, v));
        }
        out
    }

    /// Applies a word right-to-left: `act_word([x, y], v) = x·(y·v)`, empty
    /// word is the identity.
    pub fn act_word(&self, word: &[Generator], v: &ModuleElement<F>) -> ModuleElement<F> {
        let mut out = v.clone();
        for g in word.iter().rev() {
            out = self.act(*g, &out);
        }
        out
    }

    /// Action of a generator on a single basis monomial.
    pub fn act_monomial(&self, x: Generator, mono: Monomial) -> ModuleElement<F> {
        if mono.is_hw() {
            return self.act_on_hw(x);
        }
        if x.part() == TriangularPart::Lowering {
            return self.insert_lowering(x, mono);
        }
        // x·(y·rest) = y·(x·rest) + [x,y]·rest, with y the leftmost factor.
        let (y, rest) = mono.split_leading().expect("non-hw monomial has a factor");
        let mut out = self.insert_lowering_all(y, &self.act_monomial(x, rest));
        for (g, c) in bracket(x, y).iter() {
            out.add_scaled(&F::from_rational(c), &self.act_monomial(*g, rest));
        }
        out
    }

    fn act_on_hw(&self, x: Generator) -> ModuleElement<F> {
        match x {
            Generator::H | Generator::PPlus | Generator::PMinus | Generator::KPlus => {
                ModuleElement::zero()
            }
            Generator::D => ModuleElement::term(Monomial::hw(), self.hw.d.clone()),
            Generator::J => ModuleElement::term(Monomial::hw(), self.hw.r.clone()),
            Generator::Theta => ModuleElement::term(Monomial::hw(), self.hw.theta.clone()),
            g => ModuleElement::basis(Monomial::hw().bump(g)),
        }
    }

    /// Multiplies an ordered monomial by a lowering generator on the left.
    ///
    /// `C`, `F-` and `F+` commute with everything at or below them in the
    /// PBW order, so they are plain exponent bumps; `K-` crossing a `C`
    /// block goes through `[K-, C] = -F-`.
    fn insert_lowering(&self, y: Generator, mono: Monomial) -> ModuleElement<F> {
        if y == Generator::KMinus && mono.h > 0 {
            let rest = Monomial {
                h: mono.h - 1,
                ..mono
            };
            let mut out =
                self.insert_lowering_all(Generator::C, &self.insert_lowering(y, rest));
            out.add_scaled(&(-F::one()), &self.insert_lowering(Generator::FMinus, rest));
            return out;
        }
        ModuleElement::basis(mono.bump(y))
    }

    fn insert_lowering_all(&self, y: Generator, v: &ModuleElement<F>) -> ModuleElement<F> {
        let mut out = ModuleElement::zero();
        for (mono, c) in v.iter() {
            out.add_scaled(c, &self.insert_lowering(y, *mono));
        }
        out
    }

    /// Normal-ordered expansion of `(2θC - K-F+)^p` applied to the
    /// highest-weight vector.
    ///
    /// The two summands do not commute (`[C, K-F+] = F-F+`), so the power is
    /// expanded as a genuine repeated product, one factor per pass.
    pub fn closed_form_power(&self, p: u32) -> Result<ModuleElement<F>> {
        if p < 1 {
            return Err(Error::invalid("closed-form power requires p >= 1"));
        }
        let two_theta = F::from_integer(2) * self.hw.theta.clone();
        let mut v = ModuleElement::basis(Monomial::hw());
        for _ in 0..p {
            let first = self.act(Generator::C, &v).scale(&two_theta);
            let second = self.act(
                Generator::KMinus,
                &self.act(Generator::FPlus, &v),
            );
            v = first.sub(&second);
        }
        Ok(v)
    }
}

pub mod reference {
    //! Textbook actions of the six generators that are diagonal or printed
    //! in closed form on the basis: `D`, `J`, `H`, `K+`, `P+`, `P-`.
    //!
    //! These are kept deliberately independent of the rewriting engine (no
    //! brackets, no recursion — just the explicit coefficient formulas) so
    //! the two routes can be compared term by term.

    use super::*;

    /// Closed-form action, or `None` for the five generators whose action
    /// has no closed-form transcription here.
    pub fn act<F: Field>(
        hw: &HighestWeight<F>,
        x: Generator,
        mono: Monomial,
    ) -> Option<ModuleElement<F>> {
        let Monomial { h, k, l, m } = mono;
        let int = |n: u32| F::from_integer(i64::from(n));
        let theta = hw.theta.clone();
        let mut out = ModuleElement::zero();
        match x {
            Generator::D => {
                let eig = hw.d.clone() - int(h + l + m);
                out.insert(mono, eig);
            }
            Generator::J => {
                let eig = hw.r.clone() - int(k) - int(l) + int(m);
                out.insert(mono, eig);
            }
            Generator::H => {
                if l > 0 {
                    out.insert(
                        Monomial::new(h, k + 1, l - 1, m),
                        -int(2) * int(l),
                    );
                }
                if k > 0 && m > 0 {
                    out.insert(
                        Monomial::new(h, k - 1, l, m - 1),
                        int(4) * int(k) * int(m) * theta.clone(),
                    );
                }
                if h > 0 {
                    let coef = int(h)
                        * (int(2 * l + 2 * m + h)
                            - F::from_integer(2) * hw.d.clone()
                            - F::one());
                    out.insert(Monomial::new(h - 1, k, l, m), coef);
                }
            }
            Generator::KPlus => {
                if k > 0 {
                    out.insert(
                        Monomial::new(h, k - 1, l, m),
                        -int(2) * int(k) * theta.clone(),
                    );
                }
                if h > 0 {
                    out.insert(Monomial::new(h - 1, k, l, m + 1), -int(h));
                }
            }
            Generator::PPlus => {
                if l > 0 {
                    out.insert(
                        Monomial::new(h, k, l - 1, m),
                        int(4) * int(l) * theta.clone(),
                    );
                }
                if h > 0 && k > 0 {
                    out.insert(
                        Monomial::new(h - 1, k - 1, l, m),
                        int(4) * int(h) * int(k) * theta.clone(),
                    );
                }
                if h > 1 {
                    out.insert(
                        Monomial::new(h - 2, k, l, m + 1),
                        int(h) * int(h - 1),
                    );
                }
            }
            Generator::PMinus => {
                if m > 0 {
                    out.insert(
                        Monomial::new(h, k, l, m - 1),
                        -int(4) * int(m) * theta.clone(),
                    );
                }
                if h > 0 {
                    out.insert(Monomial::new(h - 1, k + 1, l, m), -int(2) * int(h));
                }
                if h > 1 {
                    out.insert(
                        Monomial::new(h - 2, k, l + 1, m),
                        int(h) * int(h - 1),
                    );
                }
            }
            _ => return None,
        }
        Some(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::rat;

    fn sym() -> VermaModule<RationalFunction> {
        VermaModule::symbolic()
    }

    fn mono(h: u32, k: u32, l: u32, m: u32) -> Monomial {
        Monomial::new(h, k, l, m)
    }

    fn rf(n: i64) -> RationalFunction {
        RationalFunction::from_integer(n)
    }

    #[test]
    fn lowering_generators_build_the_basis() {
        let v = sym();
        let hw = ModuleElement::basis(Monomial::hw());
        let built = v.act_word(
            &[
                Generator::C,
                Generator::KMinus,
                Generator::FMinus,
                Generator::FPlus,
            ],
            &hw,
        );
        assert_eq!(built, ModuleElement::basis(mono(1, 1, 1, 1)));
        // F+ commutes past every other lowering generator.
        assert_eq!(
            v.act_monomial(Generator::FPlus, mono(2, 1, 1, 0)),
            ModuleElement::basis(mono(2, 1, 1, 1))
        );
    }

    #[test]
    fn kminus_crosses_a_c_block_via_the_bracket() {
        let v = sym();
        let got = v.act_monomial(Generator::KMinus, mono(1, 0, 0, 0));
        let expected = ModuleElement::basis(mono(1, 1, 0, 0))
            .sub(&ModuleElement::basis(mono(0, 0, 1, 0)));
        assert_eq!(got, expected);
    }

    #[test]
    fn kplus_on_kminus_hw() {
        let v = sym();
        let got = v.act_monomial(Generator::KPlus, mono(0, 1, 0, 0));
        let expected = ModuleElement::term(
            Monomial::hw(),
            rf(-2) * RationalFunction::theta(),
        );
        assert_eq!(got, expected);
    }

    #[test]
    fn h_on_c_hw() {
        let v = sym();
        let got = v.act_monomial(Generator::H, mono(1, 0, 0, 0));
        let expected = ModuleElement::term(
            Monomial::hw(),
            rf(-2) * RationalFunction::d(),
        );
        assert_eq!(got, expected);
    }

    #[test]
    fn act_word_examples() {
        let v = sym();
        let hw = ModuleElement::basis(Monomial::hw());
        assert_eq!(
            v.act_word(&[Generator::H, Generator::C], &hw),
            ModuleElement::term(Monomial::hw(), rf(-2) * RationalFunction::d())
        );
        assert_eq!(v.act_word(&[], &hw), hw);
        assert_eq!(
            v.act_word(&[Generator::KPlus, Generator::KMinus], &hw),
            ModuleElement::term(Monomial::hw(), rf(-2) * RationalFunction::theta())
        );
    }

    #[test]
    fn engine_matches_reference_on_small_monomials() {
        let v = sym();
        for h in 0..3u32 {
            for k in 0..3u32 {
                for l in 0..3u32 {
                    for m in 0..3u32 {
                        let mono = Monomial::new(h, k, l, m);
                        for x in Generator::ALL {
                            if let Some(expected) =
                                reference::act(v.highest_weight(), x, mono)
                            {
                                assert_eq!(
                                    v.act_monomial(x, mono),
                                    expected,
                                    "{x} on {mono:?}"
                                );
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn representation_property_on_a_sample() {
        // act(x, act(y, v)) - act(y, act(x, v)) = act([x,y], v), exactly.
        let v = sym();
        let samples = [mono(0, 0, 0, 0), mono(1, 1, 0, 0), mono(2, 0, 1, 1), mono(0, 2, 2, 1)];
        for x in Generator::ALL {
            for y in Generator::ALL {
                for s in samples {
                    let sv = ModuleElement::basis(s);
                    let lhs = v
                        .act(x, &v.act(y, &sv))
                        .sub(&v.act(y, &v.act(x, &sv)));
                    let rhs = v.act_element(&bracket(x, y), &sv);
                    assert_eq!(lhs, rhs, "[{x},{y}] on {s:?}");
                }
            }
        }
    }

    #[test]
    fn closed_form_power_first_levels() {
        let v = sym();
        let theta = RationalFunction::theta();

        let p1 = v.closed_form_power(1).unwrap();
        let mut expected = ModuleElement::term(mono(1, 0, 0, 0), rf(2) * theta.clone());
        expected.insert(mono(0, 1, 0, 1), rf(-1));
        assert_eq!(p1, expected);

        // Hand-expanded second power.
        let p2 = v.closed_form_power(2).unwrap();
        let mut expected = ModuleElement::term(mono(2, 0, 0, 0), rf(4) * theta.pow(2));
        expected.insert(mono(1, 1, 0, 1), rf(-4) * theta.clone());
        expected.insert(mono(0, 0, 1, 1), rf(2) * theta.clone());
        expected.insert(mono(0, 2, 0, 2), rf(1));
        assert_eq!(p2, expected);

        assert!(v.closed_form_power(0).is_err());
    }

    #[test]
    fn closed_form_power_is_weight_homogeneous() {
        let v = sym();
        for p in 1..=8u32 {
            let el = v.closed_form_power(p).unwrap();
            assert!(!el.is_zero());
            for (mono, _) in el.iter() {
                assert_eq!(mono.h + mono.l + mono.m, p);
                assert_eq!(i64::from(mono.k) + i64::from(mono.l), i64::from(mono.m));
            }
        }
    }

    #[test]
    fn closed_form_power_is_singular_on_the_locus() {
        // (2θC - K-F+)^p |hw⟩ is annihilated by every raising generator
        // exactly when d = (p-3)/2.
        for p in 1..=6u32 {
            let on = SpecPoint::new(rat(1, 3), rat(i64::from(p) - 3, 2), rat(5, 1)).unwrap();
            let module = VermaModule::at_point(&on);
            let v = module.closed_form_power(p).unwrap();
            for x in Generator::RAISING {
                assert!(module.act(x, &v).is_zero(), "{x} at p={p}");
            }
            // Off the locus, H no longer annihilates it.
            let off = SpecPoint::new(rat(1, 3), rat(i64::from(p) - 2, 2), rat(5, 1)).unwrap();
            let module = VermaModule::at_point(&off);
            let v = module.closed_form_power(p).unwrap();
            assert!(!module.act(Generator::H, &v).is_zero(), "p={p}");
        }
    }

    #[test]
    fn diagonal_actions() {
        let v = sym();
        for h in 0..3u32 {
            for k in 0..3u32 {
                for l in 0..2u32 {
                    for m in 0..2u32 {
                        let s = Monomial::new(h, k, l, m);
                        let p = i64::from(h + l + m);
                        let q = i64::from(k) + i64::from(l) - i64::from(m);
                        let dv = v.act_monomial(Generator::D, s);
                        assert_eq!(
                            dv,
                            ModuleElement::term(
                                s,
                                RationalFunction::d() - rf(p)
                            )
                        );
                        let jv = v.act_monomial(Generator::J, s);
                        assert_eq!(
                            jv,
                            ModuleElement::term(
                                s,
                                RationalFunction::r() - rf(q)
                            )
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn specialized_engine_agrees_with_symbolic() {
        let point = SpecPoint::new(rat(1, 3), rat(-2, 1), rat(5, 1)).unwrap();
        let num = VermaModule::at_point(&point);
        let sym = sym();
        for x in Generator::ALL {
            for s in [mono(1, 0, 1, 2), mono(2, 2, 0, 0), mono(0, 1, 1, 1)] {
                let symbolic = sym.act_monomial(x, s);
                let specialized = num.act_monomial(x, s);
                let mut expected = ModuleElement::zero();
                for (mono, c) in symbolic.iter() {
                    expected.insert(*mono, c.specialize(&point).unwrap());
                }
                assert_eq!(specialized, expected, "{x} on {s:?}");
            }
        }
    }
}
