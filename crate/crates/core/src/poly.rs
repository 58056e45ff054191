//! Sparse multivariate polynomials over `ℚ` in the three parameters
//! `θ`, `d`, `r`.
//!
//! Terms are kept in a `BTreeMap` keyed by exponent triples under the
//! graded-lexicographic order with `θ > d > r`. The order is fixed once and
//! for all so that equality of normal forms is syntactic: the leading term,
//! monic normalization and GCD output are all canonical.
//!
//! GCDs are computed by the classic primitive polynomial remainder sequence,
//! recursing on the main variable: a polynomial is viewed as univariate in
//! its highest present variable with coefficients that are polynomials in
//! the lower ones, contents are pulled out recursively, and the primitive
//! parts go through a pseudo-remainder loop. This favors correctness and
//! simplicity over speed, which is appropriate here — the polynomials this
//! crate produces are tiny.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::field::Rational;

/// The three indeterminates, in canonical order (`Theta` highest).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    Theta,
    D,
    R,
}

impl Var {
    pub const ALL: [Var; 3] = [Var::Theta, Var::D, Var::R];

    pub fn symbol(self) -> &'static str {
        match self {
            Var::Theta => "θ",
            Var::D => "d",
            Var::R => "r",
        }
    }
}

/// Exponent triple of a single term.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Exponents {
    pub theta: u32,
    pub d: u32,
    pub r: u32,
}

impl Exponents {
    fn total(&self) -> u64 {
        u64::from(self.theta) + u64::from(self.d) + u64::from(self.r)
    }

    pub fn get(&self, v: Var) -> u32 {
        match v {
            Var::Theta => self.theta,
            Var::D => self.d,
            Var::R => self.r,
        }
    }

    fn with(mut self, v: Var, e: u32) -> Self {
        match v {
            Var::Theta => self.theta = e,
            Var::D => self.d = e,
            Var::R => self.r = e,
        }
        self
    }

    fn mul(&self, other: &Exponents) -> Exponents {
        Exponents {
            theta: self.theta + other.theta,
            d: self.d + other.d,
            r: self.r + other.r,
        }
    }

    fn checked_div(&self, other: &Exponents) -> Option<Exponents> {
        Some(Exponents {
            theta: self.theta.checked_sub(other.theta)?,
            d: self.d.checked_sub(other.d)?,
            r: self.r.checked_sub(other.r)?,
        })
    }

    fn is_unit(&self) -> bool {
        self.theta == 0 && self.d == 0 && self.r == 0
    }
}

// Graded lexicographic: total degree first, ties broken by θ, then d, then r.
impl Ord for Exponents {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.total(), self.theta, self.d, self.r).cmp(&(
            other.total(),
            other.theta,
            other.d,
            other.r,
        ))
    }
}

impl PartialOrd for Exponents {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse polynomial in `ℚ[θ, d, r]`. No zero coefficients are stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Polynomial {
    terms: BTreeMap<Exponents, Rational>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial::default()
    }

    pub fn one() -> Self {
        Polynomial::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        let mut p = Polynomial::default();
        p.insert_term(Exponents::default(), c);
        p
    }

    pub fn from_integer(n: i64) -> Self {
        Polynomial::constant(Rational::from_integer(BigInt::from(n)))
    }

    pub fn variable(v: Var) -> Self {
        let mut p = Polynomial::default();
        p.insert_term(Exponents::default().with(v, 1), Rational::one());
        p
    }

    fn monomial(e: Exponents, c: Rational) -> Self {
        let mut p = Polynomial::default();
        p.insert_term(e, c);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Exponents::is_unit)
    }

    pub fn is_one(&self) -> bool {
        self.as_constant().map(|c| c.is_one()).unwrap_or(false)
    }

    /// Returns `Some` exactly when the polynomial is constant.
    pub fn as_constant(&self) -> Option<Rational> {
        if self.is_zero() {
            Some(Rational::zero())
        } else if self.is_constant() {
            self.terms.values().next().cloned()
        } else {
            None
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &Rational)> {
        self.terms.iter()
    }

    /// Leading term under the canonical graded-lex order.
    pub fn leading_term(&self) -> Option<(&Exponents, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn leading_coefficient(&self) -> Rational {
        self.leading_term()
            .map(|(_, c)| c.clone())
            .unwrap_or_else(Rational::zero)
    }

    fn insert_term(&mut self, e: Exponents, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(e) {
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

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.insert_term(*e, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.insert_term(*e, -c.clone());
        }
        out
    }

    pub fn neg(&self) -> Polynomial {
        let mut out = Polynomial::default();
        for (e, c) in &self.terms {
            out.terms.insert(*e, -c.clone());
        }
        out
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        let mut out = Polynomial::default();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                out.insert_term(ea.mul(eb), ca.clone() * cb.clone());
            }
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        let mut out = Polynomial::default();
        for (e, k) in &self.terms {
            out.terms.insert(*e, k.clone() * c.clone());
        }
        out
    }

    pub fn pow(&self, mut n: u32) -> Polynomial {
        let mut base = self.clone();
        let mut out = Polynomial::one();
        while n > 0 {
            if n & 1 == 1 {
                out = out.mul(&base);
            }
            n >>= 1;
            if n > 0 {
                base = base.mul(&base);
            }
        }
        out
    }

    pub fn degree_in(&self, v: Var) -> u32 {
        self.terms.keys().map(|e| e.get(v)).max().unwrap_or(0)
    }

    /// Exact evaluation at a rational point.
    pub fn eval(&self, theta: &Rational, d: &Rational, r: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            t *= pow_rat(theta, e.theta);
            t *= pow_rat(d, e.d);
            t *= pow_rat(r, e.r);
            acc += t;
        }
        acc
    }

    /// Substitutes a rational value for one variable, leaving the others
    /// symbolic.
    pub fn eval_var(&self, v: Var, value: &Rational) -> Polynomial {
        let mut out = Polynomial::default();
        for (e, c) in &self.terms {
            let k = pow_rat(value, e.get(v)) * c.clone();
            out.insert_term(e.with(v, 0), k);
        }
        out
    }

    /// Normalizes the leading coefficient to 1.
    pub fn monic(&self) -> Polynomial {
        if self.is_zero() {
            return Polynomial::zero();
        }
        let lc = self.leading_coefficient();
        self.scale(&(Rational::one() / lc))
    }

    /// Positive rational `c` such that `self / c` has coprime integer
    /// coefficients (0 for the zero polynomial).
    pub fn rational_content(&self) -> Rational {
        if self.is_zero() {
            return Rational::zero();
        }
        let mut num_gcd = BigInt::zero();
        let mut den_lcm = BigInt::one();
        for c in self.terms.values() {
            num_gcd = num_gcd.gcd(c.numer());
            den_lcm = den_lcm.lcm(c.denom());
        }
        Rational::new(num_gcd, den_lcm)
    }

    /// Exact division; `None` when the divisor does not divide `self`.
    pub fn div_exact(&self, divisor: &Polynomial) -> Option<Polynomial> {
        if divisor.is_zero() {
            return None;
        }
        let (de, dc) = {
            let (e, c) = divisor.leading_term().unwrap();
            (*e, c.clone())
        };
        let mut rem = self.clone();
        let mut quo = Polynomial::default();
        while !rem.is_zero() {
            let (re, rc) = {
                let (e, c) = rem.leading_term().unwrap();
                (*e, c.clone())
            };
            let qe = re.checked_div(&de)?;
            let qc = rc / dc.clone();
            let t = Polynomial::monomial(qe, qc);
            rem = rem.sub(&t.mul(divisor));
            quo = quo.add(&t);
        }
        Some(quo)
    }

    /// The largest monomial dividing every term: componentwise minimum of
    /// the exponent triples.
    fn monomial_content(&self) -> Exponents {
        let mut iter = self.terms.keys();
        let Some(first) = iter.next() else {
            return Exponents::default();
        };
        iter.fold(*first, |acc, e| Exponents {
            theta: acc.theta.min(e.theta),
            d: acc.d.min(e.d),
            r: acc.r.min(e.r),
        })
    }

    /// Exact division by a monomial known to divide every term.
    fn divide_monomial(&self, e: &Exponents) -> Polynomial {
        let mut out = Polynomial::default();
        for (te, c) in &self.terms {
            let shifted = te
                .checked_div(e)
                .expect("monomial content divides every term");
            out.terms.insert(shifted, c.clone());
        }
        out
    }

    /// Highest variable (θ first) that actually occurs.
    fn main_var(&self) -> Option<Var> {
        Var::ALL.into_iter().find(|&v| self.degree_in(v) > 0)
    }

    /// View as univariate in `v`: index `i` holds the coefficient of `v^i`,
    /// a polynomial in the remaining variables.
    pub(crate) fn to_univariate(&self, v: Var) -> Vec<Polynomial> {
        let deg = self.degree_in(v) as usize;
        let mut coeffs = vec![Polynomial::zero(); deg + 1];
        for (e, c) in &self.terms {
            let i = e.get(v) as usize;
            coeffs[i].insert_term(e.with(v, 0), c.clone());
        }
        coeffs
    }

    fn from_univariate(v: Var, coeffs: &[Polynomial]) -> Polynomial {
        let mut out = Polynomial::zero();
        for (i, c) in coeffs.iter().enumerate() {
            let shift = Polynomial::monomial(
                Exponents::default().with(v, i as u32),
                Rational::one(),
            );
            out = out.add(&c.mul(&shift));
        }
        out
    }
}

fn pow_rat(base: &Rational, e: u32) -> Rational {
    let mut out = Rational::one();
    for _ in 0..e {
        out *= base.clone();
    }
    out
}

fn uni_degree(p: &[Polynomial]) -> Option<usize> {
    p.iter().rposition(|c| !c.is_zero())
}

/// GCD of the coefficient list (a polynomial in strictly fewer variables).
fn uni_content(p: &[Polynomial]) -> Polynomial {
    let mut g = Polynomial::zero();
    for c in p {
        g = gcd(&g, c);
        if g.is_one() {
            break;
        }
    }
    g
}

/// Divides out the polynomial content and the rational content, keeping the
/// pseudo-remainder sequence small.
fn uni_primitive(p: &[Polynomial]) -> Vec<Polynomial> {
    let Some(deg) = uni_degree(p) else {
        return Vec::new();
    };
    let p = &p[..=deg];
    let cont = uni_content(p);
    let mut out: Vec<Polynomial> = if cont.is_one() {
        p.to_vec()
    } else {
        p.iter()
            .map(|c| {
                if c.is_zero() {
                    Polynomial::zero()
                } else {
                    c.div_exact(&cont).expect("content division is exact")
                }
            })
            .collect()
    };
    let mut rc = Rational::zero();
    for c in &out {
        let cc = c.rational_content();
        rc = Rational::new(rc.numer().gcd(cc.numer()), rc.denom().lcm(cc.denom()));
    }
    if !rc.is_zero() && !rc.is_one() {
        let inv = Rational::one() / rc;
        for c in &mut out {
            *c = c.scale(&inv);
        }
    }
    out
}

/// Textbook pseudo-remainder `prem(u, v) = lc(v)^(deg u - deg v + 1)·u mod v`
/// in the main variable, with the usual power compensation for skipped
/// steps.
fn uni_pseudo_rem(u: &[Polynomial], v: &[Polynomial]) -> Vec<Polynomial> {
    let du = uni_degree(u).expect("nonzero dividend");
    let dv = uni_degree(v).expect("nonzero divisor");
    debug_assert!(du >= dv);
    let lv = v[dv].clone();
    let mut r: Vec<Polynomial> = u.to_vec();
    let mut compensation = du - dv + 1;
    while let Some(dr) = uni_degree(&r) {
        if dr < dv {
            break;
        }
        let coef = r[dr].clone();
        for c in r.iter_mut() {
            *c = c.mul(&lv);
        }
        for i in 0..=dv {
            let t = coef.mul(&v[i]);
            r[dr - dv + i] = r[dr - dv + i].sub(&t);
        }
        debug_assert!(r[dr].is_zero());
        compensation -= 1;
    }
    for _ in 0..compensation {
        for c in r.iter_mut() {
            *c = c.mul(&lv);
        }
    }
    r.truncate(dv.max(1));
    r
}

/// Subresultant polynomial remainder sequence on two primitive univariate
/// polynomials with polynomial coefficients. Returns the last nonzero
/// remainder (not yet primitive). Unlike the primitive PRS this needs no
/// content GCDs along the way — each remainder is divided by the known
/// subresultant factor `g·h^δ`, which is an exact division.
fn subresultant_prs(mut r0: Vec<Polynomial>, mut r1: Vec<Polynomial>) -> Vec<Polynomial> {
    let mut g = Polynomial::one();
    let mut h = Polynomial::one();
    loop {
        let d0 = uni_degree(&r0).expect("r0 stays nonzero");
        let d1 = uni_degree(&r1).expect("r1 nonzero on entry");
        let delta = (d0 - d1) as u32;
        let prem = uni_pseudo_rem(&r0, &r1);
        if uni_degree(&prem).is_none() {
            return r1;
        }
        let divisor = g.mul(&h.pow(delta));
        let r2: Vec<Polynomial> = prem
            .iter()
            .map(|c| {
                if c.is_zero() {
                    Polynomial::zero()
                } else {
                    c.div_exact(&divisor)
                        .expect("subresultant division is exact")
                }
            })
            .collect();
        r0 = r1;
        r1 = r2;
        g = r0[uni_degree(&r0).unwrap()].clone();
        h = match delta {
            0 => h,
            1 => g.clone(),
            _ => g
                .pow(delta)
                .div_exact(&h.pow(delta - 1))
                .expect("subresultant h-update is exact"),
        };
    }
}

/// Euclidean GCD for univariate polynomials with rational coefficients,
/// ascending coefficient vectors. Returns the monic GCD vector.
fn euclid_univariate_q(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    fn deg(p: &[Rational]) -> Option<usize> {
        p.iter().rposition(|c| !c.is_zero())
    }
    let mut r0 = a.to_vec();
    let mut r1 = b.to_vec();
    if deg(&r0) < deg(&r1) {
        std::mem::swap(&mut r0, &mut r1);
    }
    while let Some(d1) = deg(&r1) {
        let lv = r1[d1].clone();
        while let Some(d0) = deg(&r0) {
            if d0 < d1 {
                break;
            }
            let f = r0[d0].clone() / lv.clone();
            for i in 0..=d1 {
                let t = f.clone() * r1[i].clone();
                r0[d0 - d1 + i] -= t;
            }
        }
        std::mem::swap(&mut r0, &mut r1);
    }
    match deg(&r0) {
        None => Vec::new(),
        Some(d) => {
            let lead = r0[d].clone();
            r0.truncate(d + 1);
            r0.iter().map(|c| c.clone() / lead.clone()).collect()
        }
    }
}

/// Deterministic evaluation points used by the coprimality probe.
const PROBE_POINTS: [(i64, i64); 5] = [(1, 1), (2, 3), (3, 5), (5, 2), (7, 11)];

/// Tries to certify that two primitive univariate-over-`R` polynomials are
/// coprime: at any point where neither leading coefficient vanishes,
/// `deg gcd(A, B)` is bounded by the degree of the specialized univariate
/// GCD, so a degree-0 image proves the primitive parts coprime. Returns
/// `false` when no conclusion could be drawn.
fn probe_certifies_coprime(var: Var, a: &[Polynomial], b: &[Polynomial]) -> bool {
    let others: Vec<Var> = Var::ALL.into_iter().filter(|v| *v != var).collect();
    let la = &a[uni_degree(a).unwrap()];
    let lb = &b[uni_degree(b).unwrap()];
    for (x, y) in PROBE_POINTS {
        let assign = |p: &Polynomial| -> Rational {
            let mut theta = Rational::zero();
            let mut d = Rational::zero();
            let mut r = Rational::zero();
            for (v, val) in others.iter().zip([x, y]) {
                let val = Rational::from_integer(BigInt::from(val));
                match v {
                    Var::Theta => theta = val,
                    Var::D => d = val,
                    Var::R => r = val,
                }
            }
            p.eval(&theta, &d, &r)
        };
        if assign(la).is_zero() || assign(lb).is_zero() {
            continue;
        }
        let au: Vec<Rational> = a.iter().map(&assign).collect();
        let bu: Vec<Rational> = b.iter().map(&assign).collect();
        let g = euclid_univariate_q(&au, &bu);
        return g.len() == 1;
    }
    false
}

/// Greatest common divisor, normalized to leading coefficient 1 under the
/// canonical term order. `gcd(0, 0) = 0` by convention.
///
/// Strategy: strip the shared monomial factor, certify the coprime case
/// cheaply through a specialized univariate image, and otherwise run the
/// subresultant PRS recursively over the main variable.
pub fn gcd(a: &Polynomial, b: &Polynomial) -> Polynomial {
    if a.is_zero() {
        return b.monic();
    }
    if b.is_zero() {
        return a.monic();
    }
    if a.is_constant() || b.is_constant() {
        return Polynomial::one();
    }
    let ma = a.monomial_content();
    let mb = b.monomial_content();
    let shared = Exponents {
        theta: ma.theta.min(mb.theta),
        d: ma.d.min(mb.d),
        r: ma.r.min(mb.r),
    };
    let ap = a.divide_monomial(&ma);
    let bp = b.divide_monomial(&mb);
    let core = gcd_stripped(&ap, &bp);
    core.mul(&Polynomial::monomial(shared, Rational::one()))
        .monic()
}

fn gcd_stripped(a: &Polynomial, b: &Polynomial) -> Polynomial {
    if a.is_constant() || b.is_constant() {
        return Polynomial::one();
    }
    let var = a
        .main_var()
        .into_iter()
        .chain(b.main_var())
        .min()
        .expect("non-constant operands have a main variable");
    let au = a.to_univariate(var);
    let bu = b.to_univariate(var);
    // Univariate over ℚ: plain Euclid.
    if au.iter().chain(&bu).all(Polynomial::is_constant) {
        let to_q = |p: &[Polynomial]| -> Vec<Rational> {
            p.iter().map(|c| c.as_constant().unwrap()).collect()
        };
        let g = euclid_univariate_q(&to_q(&au), &to_q(&bu));
        let coeffs: Vec<Polynomial> =
            g.into_iter().map(Polynomial::constant).collect();
        return Polynomial::from_univariate(var, &coeffs);
    }
    let ca = uni_content(&au);
    let cb = uni_content(&bu);
    let cg = gcd(&ca, &cb);
    let mut pa = uni_primitive(&au);
    let mut pb = uni_primitive(&bu);
    if uni_degree(&pa) < uni_degree(&pb) {
        std::mem::swap(&mut pa, &mut pb);
    }
    if probe_certifies_coprime(var, &pa, &pb) {
        return cg;
    }
    let prs = subresultant_prs(pa, pb);
    let g = Polynomial::from_univariate(var, &uni_primitive(&prs));
    g.mul(&cg)
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        // Descending canonical order, signs pulled into the separators.
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, "-")?;
            } else {
                write!(f, "+")?;
            }
            let mag = c.abs();
            let mut factors = Vec::new();
            for v in Var::ALL {
                let ex = e.get(v);
                match ex {
                    0 => {}
                    1 => factors.push(v.symbol().to_string()),
                    _ => factors.push(format!("{}^{}", v.symbol(), ex)),
                }
            }
            if factors.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{}", factors.join("*"))?;
            } else {
                write!(f, "{}*{}", mag, factors.join("*"))?;
            }
        }
        Ok(())
    }
}

impl FromStr for Polynomial {
    type Err = Error;

    fn from_str(s: &str) -> Result<Polynomial> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        if compact == "0" {
            return Ok(Polynomial::zero());
        }
        let mut out = Polynomial::zero();
        for chunk in split_signed_terms(&compact)? {
            let (sign, body) = match chunk.strip_prefix('-') {
                Some(rest) => (-1i64, rest),
                None => (1i64, chunk.strip_prefix('+').unwrap_or(&chunk)),
            };
            if body.is_empty() {
                return Err(Error::Parse(format!("dangling sign in `{s}`")));
            }
            let mut coef = Rational::from_integer(BigInt::from(sign));
            let mut exps = Exponents::default();
            for piece in body.split('*') {
                if piece.is_empty() {
                    return Err(Error::Parse(format!("empty factor in `{s}`")));
                }
                if piece.chars().next().unwrap().is_ascii_digit() {
                    coef *= crate::field::parse_rational(piece)?;
                } else {
                    let (var, rest) = parse_var(piece)
                        .ok_or_else(|| Error::Parse(format!("unknown factor `{piece}`")))?;
                    let e: u32 = match rest.strip_prefix('^') {
                        Some(n) => n
                            .parse()
                            .map_err(|_| Error::Parse(format!("bad exponent in `{piece}`")))?,
                        None if rest.is_empty() => 1,
                        _ => return Err(Error::Parse(format!("unknown factor `{piece}`"))),
                    };
                    exps = exps.with(var, exps.get(var) + e);
                }
            }
            out.insert_term(exps, coef);
        }
        Ok(out)
    }
}

fn parse_var(s: &str) -> Option<(Var, &str)> {
    for (prefix, var) in [
        ("θ", Var::Theta),
        ("theta", Var::Theta),
        ("d", Var::D),
        ("r", Var::R),
    ] {
        if let Some(rest) = s.strip_prefix(prefix) {
            return Some((var, rest));
        }
    }
    None
}

/// Splits `a+b-c` into `["a", "b", "-c"]`, honoring a leading sign.
fn split_signed_terms(s: &str) -> Result<Vec<String>> {
    let mut chunks = Vec::new();
    let mut current = String::new();
    for (i, ch) in s.char_indices() {
        if (ch == '+' || ch == '-') && i != 0 {
            if current.is_empty() {
                return Err(Error::Parse(format!("consecutive signs in `{s}`")));
            }
            chunks.push(std::mem::take(&mut current));
            if ch == '-' {
                current.push('-');
            }
        } else {
            current.push(ch);
        }
    }
    if current.is_empty() || current == "-" {
        return Err(Error::Parse(format!("dangling sign in `{s}`")));
    }
    chunks.push(current);
    Ok(chunks)
}
