//! Sparse polynomials with arbitrary-precision integer coefficients.
//!
//! A polynomial is an ordered map from a monomial (an exponent vector) to a
//! nonzero [`BigInt`]. Four monomial shapes are used across the crate:
//! univariate in `t` or `s`, bivariate in `(s, t)` with the `s`-degree kept in
//! half units, and trivariate in `(s, u, w)`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// An exponent vector usable as a key of [`SparsePoly`].
pub trait Monomial: Copy + Ord + fmt::Debug {
    fn one() -> Self;
    fn mul(self, rhs: Self) -> Self;
    fn total_degree(self) -> u32;
    /// `(variable, exponent)` factors with nonzero exponent, in print order.
    /// Exponents are given in halves so that `s^(5/2)` can be printed.
    fn factors(self) -> Vec<(&'static str, u32, bool)>;
    /// Inverse of [`Monomial::factors`]; exponents are in halves when the
    /// flag is set.
    fn from_factors(factors: &[(String, u32, bool)]) -> Option<Self>;
}

/// `t^e`
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct TExp(pub u32);

/// `s^e`
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct SExp(pub u32);

/// `s^(s_half/2) t^t`
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct StExp {
    pub s_half: u32,
    pub t: u32,
}

/// `s^s u^u w^w`
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct SuwExp {
    pub s: u32,
    pub u: u32,
    pub w: u32,
}

fn whole(var: &'static str, e: u32) -> Option<(&'static str, u32, bool)> {
    (e > 0).then_some((var, e, false))
}

fn lookup(factors: &[(String, u32, bool)], var: &str, halves_ok: bool) -> Option<Option<u32>> {
    let mut found = None;
    for (name, e, half) in factors {
        if name == var {
            if found.is_some() || (*half && !halves_ok) {
                return None;
            }
            found = Some(if *half || !halves_ok { *e } else { 2 * e });
        }
    }
    Some(found)
}

fn only_vars(factors: &[(String, u32, bool)], vars: &[&str]) -> bool {
    factors.iter().all(|(n, _, _)| vars.contains(&n.as_str()))
}

impl Monomial for TExp {
    fn one() -> Self {
        TExp(0)
    }
    fn mul(self, rhs: Self) -> Self {
        TExp(self.0 + rhs.0)
    }
    fn total_degree(self) -> u32 {
        self.0
    }
    fn factors(self) -> Vec<(&'static str, u32, bool)> {
        whole("t", self.0).into_iter().collect()
    }
    fn from_factors(f: &[(String, u32, bool)]) -> Option<Self> {
        if !only_vars(f, &["t"]) {
            return None;
        }
        Some(TExp(lookup(f, "t", false)?.unwrap_or(0)))
    }
}

impl Monomial for SExp {
    fn one() -> Self {
        SExp(0)
    }
    fn mul(self, rhs: Self) -> Self {
        SExp(self.0 + rhs.0)
    }
    fn total_degree(self) -> u32 {
        self.0
    }
    fn factors(self) -> Vec<(&'static str, u32, bool)> {
        whole("s", self.0).into_iter().collect()
    }
    fn from_factors(f: &[(String, u32, bool)]) -> Option<Self> {
        if !only_vars(f, &["s"]) {
            return None;
        }
        Some(SExp(lookup(f, "s", false)?.unwrap_or(0)))
    }
}

impl Monomial for StExp {
    fn one() -> Self {
        StExp::default()
    }
    fn mul(self, rhs: Self) -> Self {
        StExp {
            s_half: self.s_half + rhs.s_half,
            t: self.t + rhs.t,
        }
    }
    /// Rounded down when the `s`-degree is fractional.
    fn total_degree(self) -> u32 {
        self.s_half / 2 + self.t
    }
    fn factors(self) -> Vec<(&'static str, u32, bool)> {
        let mut out = Vec::new();
        if self.s_half > 0 {
            if self.s_half % 2 == 0 {
                out.push(("s", self.s_half / 2, false));
            } else {
                out.push(("s", self.s_half, true));
            }
        }
        out.extend(whole("t", self.t));
        out
    }
    fn from_factors(f: &[(String, u32, bool)]) -> Option<Self> {
        if !only_vars(f, &["s", "t"]) {
            return None;
        }
        Some(StExp {
            s_half: lookup(f, "s", true)?.unwrap_or(0),
            t: lookup(f, "t", false)?.unwrap_or(0),
        })
    }
}

impl Monomial for SuwExp {
    fn one() -> Self {
        SuwExp::default()
    }
    fn mul(self, rhs: Self) -> Self {
        SuwExp {
            s: self.s + rhs.s,
            u: self.u + rhs.u,
            w: self.w + rhs.w,
        }
    }
    fn total_degree(self) -> u32 {
        self.s + self.u + self.w
    }
    fn factors(self) -> Vec<(&'static str, u32, bool)> {
        [whole("s", self.s), whole("u", self.u), whole("w", self.w)]
            .into_iter()
            .flatten()
            .collect()
    }
    fn from_factors(f: &[(String, u32, bool)]) -> Option<Self> {
        if !only_vars(f, &["s", "u", "w"]) {
            return None;
        }
        Some(SuwExp {
            s: lookup(f, "s", false)?.unwrap_or(0),
            u: lookup(f, "u", false)?.unwrap_or(0),
            w: lookup(f, "w", false)?.unwrap_or(0),
        })
    }
}

/// Sparse polynomial; zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SparsePoly<M: Monomial> {
    terms: BTreeMap<M, BigInt>,
}

pub type PolyT = SparsePoly<TExp>;
pub type PolyS = SparsePoly<SExp>;
pub type PolyST = SparsePoly<StExp>;
pub type PolySUW = SparsePoly<SuwExp>;

/// Univariate polynomial in `s` whose `k`-th coefficient counts
/// triangulations using exactly `k` vertices.
pub type TriangulationPolynomial = PolyS;

impl<M: Monomial> Default for SparsePoly<M> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<M: Monomial> SparsePoly<M> {
    pub fn zero() -> Self {
        SparsePoly {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::monomial(M::one(), BigInt::one())
    }

    pub fn monomial(m: M, coeff: impl Into<BigInt>) -> Self {
        let mut p = Self::zero();
        p.add_term(m, coeff.into());
        p
    }

    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (M, C)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero();
        for (m, c) in terms {
            p.add_term(m, c.into());
        }
        p
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

    /// Terms in ascending monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&M, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: M) -> BigInt {
        self.terms.get(&m).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, m: M, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        SparsePoly {
            terms: self.terms.iter().map(|(m, c)| (*m, c * k)).collect(),
        }
    }

    /// Multiplies every monomial by `m`.
    pub fn shift(&self, m: M) -> Self {
        SparsePoly {
            terms: self.terms.iter().map(|(e, c)| (e.mul(m), c.clone())).collect(),
        }
    }

    /// Re-keys every term; colliding images are summed.
    pub fn map_monomials<N: Monomial>(&self, f: impl Fn(M) -> N) -> SparsePoly<N> {
        SparsePoly::from_terms(self.terms.iter().map(|(m, c)| (f(*m), c.clone())))
    }

    /// Terms sorted by descending total degree, then descending monomial.
    pub fn display_order(&self) -> Vec<(M, &BigInt)> {
        let mut v: Vec<(M, &BigInt)> = self.terms.iter().map(|(m, c)| (*m, c)).collect();
        v.sort_by(|a, b| match b.0.total_degree().cmp(&a.0.total_degree()) {
            Ordering::Equal => b.0.cmp(&a.0),
            o => o,
        });
        v
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }
}

impl PolyT {
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().next_back().map(|m| m.0)
    }
}

impl PolyS {
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().next_back().map(|m| m.0)
    }

    /// Coefficient of the highest power of `s`.
    pub fn leading_coeff(&self) -> BigInt {
        self.terms.values().next_back().cloned().unwrap_or_default()
    }

    /// Lowest power carrying a nonzero coefficient, with that coefficient.
    pub fn lowest_term(&self) -> Option<(u32, BigInt)> {
        self.terms.iter().next().map(|(m, c)| (m.0, c.clone()))
    }
}

impl<'a, M: Monomial> Add<&'a SparsePoly<M>> for &'a SparsePoly<M> {
    type Output = SparsePoly<M>;
    fn add(self, rhs: &SparsePoly<M>) -> SparsePoly<M> {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<M: Monomial> Add for SparsePoly<M> {
    type Output = SparsePoly<M>;
    fn add(mut self, rhs: SparsePoly<M>) -> SparsePoly<M> {
        self += &rhs;
        self
    }
}

impl<M: Monomial> AddAssign<&SparsePoly<M>> for SparsePoly<M> {
    fn add_assign(&mut self, rhs: &SparsePoly<M>) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, c.clone());
        }
    }
}

impl<'a, M: Monomial> Sub<&'a SparsePoly<M>> for &'a SparsePoly<M> {
    type Output = SparsePoly<M>;
    fn sub(self, rhs: &SparsePoly<M>) -> SparsePoly<M> {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, -c);
        }
        out
    }
}

impl<M: Monomial> Sub for SparsePoly<M> {
    type Output = SparsePoly<M>;
    fn sub(self, rhs: SparsePoly<M>) -> SparsePoly<M> {
        &self - &rhs
    }
}

impl<M: Monomial> Neg for &SparsePoly<M> {
    type Output = SparsePoly<M>;
    fn neg(self) -> SparsePoly<M> {
        SparsePoly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

impl<'a, M: Monomial> Mul<&'a SparsePoly<M>> for &'a SparsePoly<M> {
    type Output = SparsePoly<M>;
    fn mul(self, rhs: &SparsePoly<M>) -> SparsePoly<M> {
        let mut out = SparsePoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(*mb), ca * cb);
            }
        }
        out
    }
}

impl<M: Monomial> Mul for SparsePoly<M> {
    type Output = SparsePoly<M>;
    fn mul(self, rhs: SparsePoly<M>) -> SparsePoly<M> {
        &self * &rhs
    }
}

impl<M: Monomial> std::iter::Product for SparsePoly<M> {
    fn product<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::one(), |acc, p| &acc * &p)
    }
}

fn write_monomial(f: &mut fmt::Formatter<'_>, factors: &[(&str, u32, bool)]) -> fmt::Result {
    for (i, (var, e, half)) in factors.iter().enumerate() {
        if i > 0 {
            write!(f, "*")?;
        }
        match (e, half) {
            (e, true) => write!(f, "{var}^({e}/2)")?,
            (1, false) => write!(f, "{var}")?,
            (e, false) => write!(f, "{var}^{e}")?,
        }
    }
    Ok(())
}

/// `8046*s^15 + 37250*s^14 + ... + 5*s^5`; the zero polynomial prints as `0`.
impl<M: Monomial> fmt::Display for SparsePoly<M> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.display_order().into_iter().enumerate() {
            let factors = m.factors();
            let mag = c.abs();
            match (i, c.is_negative()) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            write!(f, "{mag}")?;
            if !factors.is_empty() {
                write!(f, "*")?;
                write_monomial(f, &factors)?;
            }
        }
        Ok(())
    }
}

impl<M: Monomial> fmt::Debug for SparsePoly<M> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SparsePoly({self})")
    }
}

fn parse_factor(text: &str) -> Option<(String, u32, bool)> {
    let (var, exp) = match text.split_once('^') {
        Some((v, e)) => (v, e),
        None => (text, "1"),
    };
    if var.is_empty() || !var.chars().all(|c| c.is_ascii_alphabetic()) {
        return None;
    }
    if let Some(inner) = exp.strip_prefix('(').and_then(|e| e.strip_suffix(')')) {
        let (num, den) = inner.split_once('/')?;
        if den.trim() != "2" {
            return None;
        }
        return Some((var.to_string(), num.trim().parse().ok()?, true));
    }
    Some((var.to_string(), exp.parse().ok()?, false))
}

/// Parses the text format produced by `Display`. Whitespace is ignored.
impl<M: Monomial> FromStr for SparsePoly<M> {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let bad = |m: &str| Error::Parse {
            line: 1,
            message: format!("{m} in polynomial `{text}`"),
        };
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(bad("empty input"));
        }
        let mut out = Self::zero();
        let mut start = 0;
        let bytes = compact.as_bytes();
        let mut pieces = Vec::new();
        for i in 1..=bytes.len() {
            if i == bytes.len() || ((bytes[i] == b'+' || bytes[i] == b'-') && bytes[i - 1] != b'^' && bytes[i - 1] != b'(') {
                pieces.push(&compact[start..i]);
                start = i;
            }
        }
        for piece in pieces {
            let (neg, body) = match piece.as_bytes()[0] {
                b'-' => (true, &piece[1..]),
                b'+' => (false, &piece[1..]),
                _ => (false, piece),
            };
            let mut parts = body.split('*');
            let first = parts.next().ok_or_else(|| bad("empty term"))?;
            let (mut coeff, mut factors) = match first.parse::<BigInt>() {
                Ok(c) => (c, Vec::new()),
                Err(_) => (
                    BigInt::one(),
                    vec![parse_factor(first).ok_or_else(|| bad("malformed factor"))?],
                ),
            };
            for p in parts {
                factors.push(parse_factor(p).ok_or_else(|| bad("malformed factor"))?);
            }
            if neg {
                coeff = -coeff;
            }
            let m = M::from_factors(&factors).ok_or_else(|| bad("unexpected variable"))?;
            out.add_term(m, coeff);
        }
        Ok(out)
    }
}
