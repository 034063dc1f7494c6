//! Exact integers, sparse polynomials, Catalan numbers and the linear
//! pairings against Catalan generating series.

mod catalan;
mod hankel;
mod poly;

pub use catalan::{
    binomial, catalan, catalan_pair_st, catalan_pair_t, complete_edge_basis, maximal_edge_basis,
    series_pair_uw,
};
pub(crate) use catalan::p_basis;
pub use hankel::{hankel_recover, solve_rational, Rational};
pub use poly::{
    Monomial, PolyS, PolyST, PolySUW, PolyT, SExp, SparsePoly, StExp, SuwExp, TExp,
    TriangulationPolynomial,
};
pub use num_bigint::BigInt;

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};

/// A polynomial in `s` and `t` written in the basis `s^k p_j`.
///
/// Keys are `(s_half, j)`; coefficients are nonzero.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PBasisPoly {
    terms: BTreeMap<(u32, u32), BigInt>,
}

impl PBasisPoly {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_term(&mut self, s_half: u32, j: u32, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry((s_half, j)).or_default();
        *e += c;
        if e.is_zero() {
            self.terms.remove(&(s_half, j));
        }
    }

    pub fn coeff(&self, s_half: u32, j: u32) -> BigInt {
        self.terms.get(&(s_half, j)).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &BigInt)> {
        self.terms.iter()
    }

    /// Expands every `p_j` into powers of `t`.
    pub fn expand(&self) -> PolyST {
        let mut out = PolyST::zero();
        for (&(s_half, j), c) in &self.terms {
            for (te, pc) in p_basis(j).terms() {
                out.add_term(StExp { s_half, t: te.0 }, c * pc);
            }
        }
        out
    }

    /// Rewrites `q` in the `p_j` basis; fails if some coefficient of `q` has a
    /// constant term in `t`.
    pub fn from_poly(q: &PolyST) -> Result<Self> {
        let mut by_s: BTreeMap<u32, PolyT> = BTreeMap::new();
        for (e, c) in q.terms() {
            by_s.entry(e.s_half).or_default().add_term(TExp(e.t), c.clone());
        }
        let mut out = PBasisPoly::new();
        for (s_half, tpoly) in by_s {
            for (j, c) in to_p_basis(&tpoly)? {
                out.add_term(s_half, j, c);
            }
        }
        Ok(out)
    }
}

/// Coefficients of `q` in the basis `p_1, p_2, ...`.
pub fn to_p_basis(q: &PolyT) -> Result<BTreeMap<u32, BigInt>> {
    let mut rest = q.clone();
    let mut out = BTreeMap::new();
    while let Some(d) = rest.degree() {
        if d == 0 {
            return Err(Error::InvalidArgument(
                "polynomial with a constant term has no p-basis expansion".into(),
            ));
        }
        let c = rest.coeff(TExp(d));
        rest = &rest - &p_basis(d).scale(&c);
        out.insert(d, c);
    }
    Ok(out)
}

/// `10*p_3 + 7*p_4 + 2*p_5`
pub fn format_p_basis(coeffs: &BTreeMap<u32, BigInt>) -> String {
    if coeffs.is_empty() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, (j, c)) in coeffs.iter().enumerate() {
        match (i, c.is_negative()) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        out.push_str(&format!("{}*p_{j}", c.abs()));
    }
    out
}

/// `(10*p_3 + 7*p_4 + 2*p_5)*s^5 + (p_1 + ...)*s^2`, highest power of `s` first.
impl fmt::Display for PBasisPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut by_s: BTreeMap<u32, BTreeMap<u32, BigInt>> = BTreeMap::new();
        for (&(s_half, j), c) in &self.terms {
            by_s.entry(s_half).or_default().insert(j, c.clone());
        }
        for (i, (s_half, coeffs)) in by_s.iter().rev().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({})", format_p_basis(coeffs))?;
            match s_half {
                0 => {}
                2 => write!(f, "*s")?,
                h if h % 2 == 0 => write!(f, "*s^{}", h / 2)?,
                h => write!(f, "*s^({h}/2)")?,
            }
        }
        Ok(())
    }
}
