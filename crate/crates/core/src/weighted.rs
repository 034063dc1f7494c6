//! Weighted convex polygons: a convex `l`-gon whose `i`-th side carries
//! `a_i - 1` extra collinear points.

use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactmath::{binomial, catalan_pair_st, catalan_pair_t, complete_edge_basis, maximal_edge_basis, PolyS, PolyST, PolyT};
use crate::planar::{rounded_regular_polygon, Point};

fn check(weights: &[u32]) -> Result<()> {
    if weights.len() < 2 {
        return Err(Error::InvalidArgument(format!("need at least two weights, got {}", weights.len())));
    }
    if weights.contains(&0) {
        return Err(Error::InvalidArgument("weights must be positive".into()));
    }
    Ok(())
}

pub fn weight_multiset_normalize(weights: &[u32]) -> Vec<u32> {
    let mut w = weights.to_vec();
    w.sort_unstable();
    w
}

/// Maximal triangulations: `<prod p_(a_j), sum C_(n-2) t^n>`.
pub fn weighted_max_count(weights: &[u32]) -> Result<BigInt> {
    check(weights)?;
    let mut q = PolyT::one();
    for &a in weights {
        q = &q * &maximal_edge_basis(a)?;
    }
    Ok(catalan_pair_t(&q))
}

fn cache() -> &'static RwLock<HashMap<Vec<u32>, PolyS>> {
    static CACHE: OnceLock<RwLock<HashMap<Vec<u32>, PolyS>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// Complete triangulation polynomial, cached by weight multiset.
pub fn weighted_complete_poly(weights: &[u32]) -> Result<PolyS> {
    check(weights)?;
    let key = weight_multiset_normalize(weights);
    if let Some(p) = cache().read().unwrap().get(&key) {
        return Ok(p.clone());
    }
    let mut q = PolyST::one();
    for &a in &key {
        q = &q * &complete_edge_basis(a)?;
    }
    let p = catalan_pair_st(&q)?;
    cache().write().unwrap().insert(key, p.clone());
    Ok(p)
}

/// Maximal count of the digon with weights `(a, b)`, zero weights allowed.
pub fn digon_max_count(a: u32, b: u32) -> BigInt {
    match (a.min(b), a.max(b)) {
        (0, 0) | (1, 1) => BigInt::one(),
        (0, _) | (1, _) => BigInt::zero(),
        _ => binomial(i64::from(a) + i64::from(b) - 4, i64::from(a) - 2),
    }
}

/// Integer points of the weighted polygon: a rounded regular `l`-gon with
/// side `i` cut into `a_i` equal parts, scaled by `lcm(a_i)`.
pub fn weighted_polygon_points(weights: &[u32]) -> Result<Vec<Point>> {
    check(weights)?;
    let corners = rounded_regular_polygon(weights.len(), 1000)?;
    let scale = weights.iter().fold(1i64, |m, &a| m.lcm(&i64::from(a)));
    let mut out = Vec::new();
    for (i, &a) in weights.iter().enumerate() {
        let (p, q) = (corners[i], corners[(i + 1) % corners.len()]);
        let step = scale / i64::from(a);
        for k in 0..i64::from(a) {
            out.push(Point::new(
                scale * p.x + k * step * (q.x - p.x),
                scale * p.y + k * step * (q.y - p.y),
            ));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::catalan;

    #[test]
    fn catalan_for_plain_polygons() {
        for n in 3..12 {
            assert_eq!(weighted_max_count(&vec![1; n]).unwrap(), catalan(n - 2));
        }
        assert_eq!(weighted_complete_poly(&[1, 1, 1]).unwrap().to_string(), "1*s^3");
    }

    #[test]
    fn digons() {
        assert_eq!(weighted_max_count(&[9, 7]).unwrap(), BigInt::from(792));
        assert_eq!(digon_max_count(9, 7), BigInt::from(792));
        assert_eq!(digon_max_count(1, 1), BigInt::one());
        assert_eq!(digon_max_count(0, 0), BigInt::one());
        assert_eq!(digon_max_count(0, 3), BigInt::zero());
    }

    #[test]
    fn normalization() {
        assert_eq!(weight_multiset_normalize(&[1, 5, 2, 3, 4]), vec![1, 2, 3, 4, 5]);
        assert_eq!(weight_multiset_normalize(&[5, 4, 5]), vec![4, 5, 5]);
        assert_eq!(weight_multiset_normalize(&[2, 2]), vec![2, 2]);
    }

    #[test]
    fn bad_weights() {
        assert!(weighted_max_count(&[3]).is_err());
        assert!(weighted_complete_poly(&[3, 0, 1]).is_err());
    }

    #[test]
    fn realization_has_the_right_size() {
        let p = weighted_polygon_points(&[1, 2, 3]).unwrap();
        assert_eq!(p.len(), 6);
        let c = crate::planar::Configuration::new(p).unwrap();
        assert_eq!(c.extremal().len(), 3);
    }
}
