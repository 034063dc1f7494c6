use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::poly::{PolyS, PolyST, PolySUW, PolyT, SExp, StExp, TExp};
use crate::error::{Error, Result};

fn table() -> &'static RwLock<Vec<BigInt>> {
    static TABLE: OnceLock<RwLock<Vec<BigInt>>> = OnceLock::new();
    TABLE.get_or_init(|| RwLock::new(vec![BigInt::one()]))
}

/// The `n`-th Catalan number, memoized up to the largest index requested so far.
pub fn catalan(n: usize) -> BigInt {
    if let Some(c) = table().read().unwrap().get(n) {
        return c.clone();
    }
    let mut t = table().write().unwrap();
    while t.len() <= n {
        // C_{k+1} = C_k * 2(2k+1) / (k+2)
        let k = t.len() - 1;
        let next = &t[k] * BigInt::from(2 * (2 * k + 1)) / BigInt::from(k + 2);
        t.push(next);
    }
    t[n].clone()
}

/// Binomial coefficient; zero outside `0 <= k <= n`.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || n < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// `p_n = sum_k (-1)^k binom(n-k, k) t^(n-k)`, the maximal edge-polynomial
/// of a straight edge with `n` segments.
pub fn maximal_edge_basis(n: u32) -> Result<PolyT> {
    if n == 0 {
        return Err(Error::InvalidArgument("p_n is defined for n >= 1".into()));
    }
    Ok(p_basis(n))
}

pub(crate) fn p_basis(n: u32) -> PolyT {
    let n = i64::from(n);
    PolyT::from_terms((0..=n / 2).map(|k| {
        let c = binomial(n - k, k);
        let c = if k % 2 == 0 { c } else { -c };
        (TExp((n - k) as u32), c)
    }))
}

/// `sum_{k=1}^n binom(n-1, k-1) p_k s^k`, the complete edge-polynomial of a
/// straight edge with `n` segments.
pub fn complete_edge_basis(n: u32) -> Result<PolyST> {
    if n == 0 {
        return Err(Error::InvalidArgument("complete edge basis is defined for n >= 1".into()));
    }
    let mut out = PolyST::zero();
    for k in 1..=n {
        let c = binomial(i64::from(n) - 1, i64::from(k) - 1);
        for (e, pc) in p_basis(k).terms() {
            out.add_term(StExp { s_half: 2 * k, t: e.0 }, &c * pc);
        }
    }
    Ok(out)
}

/// Pairs `q` against `sum_{n>=2} C_{n-2} t^n`. Terms of degree 0 and 1 pair to zero.
pub fn catalan_pair_t(q: &PolyT) -> BigInt {
    q.terms()
        .filter(|(e, _)| e.0 >= 2)
        .map(|(e, c)| c * catalan(e.0 as usize - 2))
        .sum()
}

/// Pairs out `t` against the Catalan series, leaving a polynomial in `s`.
pub fn catalan_pair_st(q: &PolyST) -> Result<PolyS> {
    let mut out = PolyS::zero();
    for (e, c) in q.terms() {
        if e.s_half % 2 != 0 {
            return Err(Error::OddHalfExponent { half: e.s_half });
        }
        if e.t >= 2 {
            out.add_term(SExp(e.s_half / 2), c * catalan(e.t as usize - 2));
        }
    }
    Ok(out)
}

/// Sends `s^a u^j w^n` to `C_n p_j s^a`.
pub fn series_pair_uw(r: &PolySUW) -> Result<PolyST> {
    let mut out = PolyST::zero();
    for (e, c) in r.terms() {
        if e.u == 0 {
            return Err(Error::ZeroRoofLength);
        }
        let k = c * catalan(e.w as usize);
        for (te, pc) in p_basis(e.u).terms() {
            out.add_term(StExp { s_half: 2 * e.s, t: te.0 }, &k * pc);
        }
    }
    Ok(out)
}
