//! The exotic conformal Galilei algebra as structure-constant data.
//!
//! Eleven generators `H, D, C, J, Θ, P±, K±, F±` with the nonzero brackets
//!
//! ```text
//! [J, X±] = ±X±   (X = P, K, F)
//! [H, K±] = -P±   [D, P±] = P±    [C, P±] = 2K±
//! [H, F±] = -2K±  [D, F±] = -F±   [C, K±] = F±
//! [D, H]  = H     [C, D]  = C     [C, H]  = 2D
//! [K+, K-] = -2Θ  [P±, F∓] = ±4Θ
//! ```
//!
//! and everything not listed (and not forced by antisymmetry) equal to zero;
//! `Θ` is central. [`check_jacobi`] validates that reading exhaustively, and
//! the triangular split `g⁺ = {H, P±, K+}`, `g⁰ = {D, J, Θ}`,
//! `g⁻ = {C, F±, K-}` drives everything downstream.

use std::collections::BTreeMap;

use num_traits::Zero;
use serde_json::json;

use crate::field::Rational;

/// One of the eleven basis generators.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Generator {
    H,
    D,
    C,
    J,
    Theta,
    PPlus,
    PMinus,
    KPlus,
    KMinus,
    FPlus,
    FMinus,
}

use Generator::*;

/// Part of the triangular decomposition a generator belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TriangularPart {
    Raising,
    Cartan,
    Lowering,
}

impl Generator {
    /// All generators in canonical order.
    pub const ALL: [Generator; 11] = [
        H, D, C, J, Theta, PPlus, PMinus, KPlus, KMinus, FPlus, FMinus,
    ];

    /// The four raising generators, in the order annihilation conditions are
    /// always stacked.
    pub const RAISING: [Generator; 4] = [H, PPlus, PMinus, KPlus];

    /// The four lowering generators, in PBW order.
    pub const LOWERING: [Generator; 4] = [C, KMinus, FMinus, FPlus];

    pub fn part(self) -> TriangularPart {
        match self {
            H | PPlus | PMinus | KPlus => TriangularPart::Raising,
            D | J | Theta => TriangularPart::Cartan,
            C | KMinus | FMinus | FPlus => TriangularPart::Lowering,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            H => "H",
            D => "D",
            C => "C",
            J => "J",
            Theta => "Theta",
            PPlus => "P+",
            PMinus => "P-",
            KPlus => "K+",
            KMinus => "K-",
            FPlus => "F+",
            FMinus => "F-",
        }
    }

    pub fn parse(s: &str) -> Option<Generator> {
        Generator::ALL.into_iter().find(|g| g.name() == s)
    }

    /// How acting with this generator shifts the `(p, q)` weight label.
    pub fn weight_shift(self) -> (i64, i64) {
        match self {
            H => (-1, 0),
            PPlus => (-1, -1),
            PMinus => (-1, 1),
            KPlus => (0, -1),
            C => (1, 0),
            KMinus => (0, 1),
            FMinus => (1, 1),
            FPlus => (1, -1),
            D | J | Theta => (0, 0),
        }
    }
}

impl std::fmt::Display for Generator {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.name())
    }
}

/// A finite `ℚ`-linear combination of generators; no zero coefficients are
/// stored. The algebra itself is defined over `ℚ` — parameter-dependent
/// coefficients only ever appear at the module level.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LieElement {
    terms: BTreeMap<Generator, Rational>,
}

impl LieElement {
    pub fn zero() -> Self {
        LieElement::default()
    }

    pub fn generator(g: Generator) -> Self {
        Self::term(g, Rational::from_integer(1.into()))
    }

    pub fn term(g: Generator, c: Rational) -> Self {
        let mut e = LieElement::default();
        e.insert(g, c);
        e
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Generator, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, g: Generator) -> Rational {
        self.terms.get(&g).cloned().unwrap_or_else(Rational::zero)
    }

    fn insert(&mut self, g: Generator, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(g) {
            Entry::Vacant(slot) => {
                slot.insert(c);
            }
            Entry::Occupied(mut slot) => {
                let sum = slot.get().clone() + c;
                if sum.is_zero() {
                    slot.remove();
                } else {
                    *slot.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &LieElement) -> LieElement {
        let mut out = self.clone();
        for (g, c) in &other.terms {
            out.insert(*g, c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> LieElement {
        if c.is_zero() {
            return LieElement::zero();
        }
        let mut out = LieElement::default();
        for (g, k) in &self.terms {
            out.terms.insert(*g, k.clone() * c.clone());
        }
        out
    }

    pub fn neg(&self) -> LieElement {
        self.scale(&Rational::from_integer((-1).into()))
    }
}

fn lie(pairs: &[(Generator, i64)]) -> LieElement {
    let mut e = LieElement::default();
    for (g, c) in pairs {
        e.insert(*g, Rational::from_integer((*c).into()));
    }
    e
}

/// The bracket `[x, y]` of two basis generators.
///
/// The table below lists each nonzero bracket once with `x` as written; the
/// mirrored pair is produced by antisymmetry and every unlisted pair is zero.
pub fn bracket(x: Generator, y: Generator) -> LieElement {
    if x == y {
        return LieElement::zero();
    }
    if let Some(e) = bracket_table(x, y) {
        return e;
    }
    if let Some(e) = bracket_table(y, x) {
        return e.neg();
    }
    LieElement::zero()
}

fn bracket_table(x: Generator, y: Generator) -> Option<LieElement> {
    let e = match (x, y) {
        (D, H) => lie(&[(H, 1)]),
        (C, D) => lie(&[(C, 1)]),
        (C, H) => lie(&[(D, 2)]),
        (J, PPlus) => lie(&[(PPlus, 1)]),
        (J, PMinus) => lie(&[(PMinus, -1)]),
        (J, KPlus) => lie(&[(KPlus, 1)]),
        (J, KMinus) => lie(&[(KMinus, -1)]),
        (J, FPlus) => lie(&[(FPlus, 1)]),
        (J, FMinus) => lie(&[(FMinus, -1)]),
        (H, KPlus) => lie(&[(PPlus, -1)]),
        (H, KMinus) => lie(&[(PMinus, -1)]),
        (D, PPlus) => lie(&[(PPlus, 1)]),
        (D, PMinus) => lie(&[(PMinus, 1)]),
        (C, PPlus) => lie(&[(KPlus, 2)]),
        (C, PMinus) => lie(&[(KMinus, 2)]),
        (H, FPlus) => lie(&[(KPlus, -2)]),
        (H, FMinus) => lie(&[(KMinus, -2)]),
        (D, FPlus) => lie(&[(FPlus, -1)]),
        (D, FMinus) => lie(&[(FMinus, -1)]),
        (C, KPlus) => lie(&[(FPlus, 1)]),
        (C, KMinus) => lie(&[(FMinus, 1)]),
        (KPlus, KMinus) => lie(&[(Theta, -2)]),
        (PPlus, FMinus) => lie(&[(Theta, 4)]),
        (PMinus, FPlus) => lie(&[(Theta, -4)]),
        _ => return None,
    };
    Some(e)
}

/// Bilinear extension of the bracket.
pub fn bracket_elements(a: &LieElement, b: &LieElement) -> LieElement {
    let mut out = LieElement::zero();
    for (x, cx) in a.iter() {
        for (y, cy) in b.iter() {
            out = out.add(&bracket(*x, *y).scale(&(cx.clone() * cy.clone())));
        }
    }
    out
}

/// The involutive anti-automorphism pairing raising with lowering
/// generators: `ω(C) = H`, `ω(K+) = K-`, `ω(P±) = F∓`, identity on the
/// cartan part, and the inverse images forced by `ω ∘ ω = id`.
pub fn omega(x: Generator) -> Generator {
    match x {
        D => D,
        J => J,
        Theta => Theta,
        C => H,
        H => C,
        KPlus => KMinus,
        KMinus => KPlus,
        PPlus => FMinus,
        FMinus => PPlus,
        PMinus => FPlus,
        FPlus => PMinus,
    }
}

/// A triple whose Jacobi residual is nonzero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JacobiViolation {
    pub triple: (Generator, Generator, Generator),
    pub residual: LieElement,
}

/// Result of the exhaustive Jacobi scan over all 11³ ordered triples.
#[derive(Debug, Clone, Default)]
pub struct JacobiReport {
    pub triples_checked: usize,
    pub violations: Vec<JacobiViolation>,
}

impl JacobiReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks `[[x,y],z] + [[y,z],x] + [[z,x],y] = 0` for every ordered triple.
pub fn check_jacobi() -> JacobiReport {
    let mut report = JacobiReport::default();
    for x in Generator::ALL {
        for y in Generator::ALL {
            for z in Generator::ALL {
                report.triples_checked += 1;
                let residual = jacobi_residual(x, y, z);
                if !residual.is_zero() {
                    report.violations.push(JacobiViolation {
                        triple: (x, y, z),
                        residual,
                    });
                }
            }
        }
    }
    report
}

pub fn jacobi_residual(x: Generator, y: Generator, z: Generator) -> LieElement {
    let xe = LieElement::generator(x);
    let ye = LieElement::generator(y);
    let ze = LieElement::generator(z);
    bracket_elements(&bracket(x, y), &ze)
        .add(&bracket_elements(&bracket(y, z), &xe))
        .add(&bracket_elements(&bracket(z, x), &ye))
}

/// Pairs failing the anti-automorphism identity `ω([x,y]) = [ω(y), ω(x)]`.
pub fn omega_violations() -> Vec<(Generator, Generator)> {
    let mut bad = Vec::new();
    for x in Generator::ALL {
        for y in Generator::ALL {
            let lhs = apply_omega(&bracket(x, y));
            let rhs = bracket(omega(y), omega(x));
            if lhs != rhs {
                bad.push((x, y));
            }
        }
    }
    bad
}

fn apply_omega(e: &LieElement) -> LieElement {
    let mut out = LieElement::zero();
    for (g, c) in e.iter() {
        out = out.add(&LieElement::term(omega(*g), c.clone()));
    }
    out
}

/// The full 11×11 bracket table as a JSON object keyed by `"X,Y"`, for
/// documentation and cross-validation against other implementations.
pub fn bracket_table_json() -> serde_json::Value {
    let mut table = serde_json::Map::new();
    for x in Generator::ALL {
        for y in Generator::ALL {
            let mut entry = serde_json::Map::new();
            for (g, c) in bracket(x, y).iter() {
                entry.insert(g.name().to_string(), json!(c.to_string()));
            }
            table.insert(format!("{},{}", x.name(), y.name()), entry.into());
        }
    }
    table.into()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::rat;

    #[test]
    fn table_spot_checks() {
        assert_eq!(bracket(H, KPlus), lie(&[(PPlus, -1)]));
        assert_eq!(bracket(PPlus, FMinus), lie(&[(Theta, 4)]));
        // Θ is central, and unlisted brackets vanish.
        assert!(bracket(D, Theta).is_zero());
        assert!(bracket(D, KPlus).is_zero());
        assert!(bracket(FPlus, FMinus).is_zero());
    }

    #[test]
    fn antisymmetry() {
        for x in Generator::ALL {
            for y in Generator::ALL {
                assert_eq!(bracket(x, y), bracket(y, x).neg(), "[{x},{y}]");
            }
        }
    }

    #[test]
    fn jacobi_holds_exhaustively() {
        let report = check_jacobi();
        assert_eq!(report.triples_checked, 11 * 11 * 11);
        assert!(report.passed(), "violations: {:?}", report.violations);
    }

    #[test]
    fn jacobi_spot_triple() {
        // (H, C, K+) exercises five distinct table entries and cancels.
        assert!(jacobi_residual(H, C, KPlus).is_zero());
        // Central element: any triple containing Θ is trivially fine.
        for x in Generator::ALL {
            for y in Generator::ALL {
                assert!(jacobi_residual(Theta, x, y).is_zero());
            }
        }
    }

    #[test]
    fn omega_is_an_involutive_anti_automorphism() {
        assert_eq!(omega(C), H);
        for x in Generator::ALL {
            assert_eq!(omega(omega(x)), x);
        }
        assert!(omega_violations().is_empty());
        // ω swaps raising and lowering and fixes the cartan part.
        for x in Generator::ALL {
            let expected = match x.part() {
                TriangularPart::Raising => TriangularPart::Lowering,
                TriangularPart::Lowering => TriangularPart::Raising,
                TriangularPart::Cartan => TriangularPart::Cartan,
            };
            assert_eq!(omega(x).part(), expected);
        }
    }

    #[test]
    fn grading_consistency() {
        // Brackets of two raising generators stay in raising ∪ cartan;
        // dually for lowering.
        for x in Generator::ALL {
            for y in Generator::ALL {
                if x.part() != y.part() || x.part() == TriangularPart::Cartan {
                    continue;
                }
                for (g, _) in bracket(x, y).iter() {
                    assert!(
                        g.part() == x.part() || g.part() == TriangularPart::Cartan,
                        "[{x},{y}] leaves the cone: {g}"
                    );
                }
            }
        }
    }

    #[test]
    fn bilinearity() {
        let a = LieElement::term(H, rat(2, 1)).add(&LieElement::term(C, rat(-1, 3)));
        let b = LieElement::generator(KPlus);
        let expected = bracket(H, KPlus)
            .scale(&rat(2, 1))
            .add(&bracket(C, KPlus).scale(&rat(-1, 3)));
        assert_eq!(bracket_elements(&a, &b), expected);
    }

    #[test]
    fn json_table_entries() {
        let table = bracket_table_json();
        assert_eq!(table["K+,K-"]["Theta"], "-2");
        assert_eq!(table["H,K+"]["P+"], "-1");
        assert!(table["D,K+"].as_object().unwrap().is_empty());
        assert_eq!(table.as_object().unwrap().len(), 121);
    }
}
