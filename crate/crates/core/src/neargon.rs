//! Edge-polynomials of near-edges and the near-gons built from them.
//!
//! Three independent routes compute the complete edge-polynomial: the
//! covering-roof definition, the transfer matrix, and the state-polynomial
//! recursion for convex near-edges.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;

use crate::error::{Error, Result};
use crate::exactmath::{
    catalan, catalan_pair_st, catalan_pair_t, p_basis, series_pair_uw, solve_rational, PBasisPoly, PolyS, PolyST,
    PolySUW, PolyT, Rational, StExp, SuwExp, TExp,
};
use crate::planar::{orient, rounded_regular_polygon, same_order_type, Bend, Configuration, NearEdge, Orientation, Point};
use crate::roofs::{covering_roofs, sub_edges, Roof, StepMode};
use crate::transfer::{complete_edge_poly_tm, region_poly, RegionCount};

/// Complete edge-polynomial of a near-edge with `segments` segments.
///
/// The maximal edge-polynomial is the coefficient of `s^segments`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgePolynomial {
    complete: PolyST,
    segments: u32,
}

impl EdgePolynomial {
    pub fn new(complete: PolyST, segments: u32) -> Self {
        EdgePolynomial { complete, segments }
    }

    /// `p(E) s^n` for a maximal-only result.
    pub fn from_maximal(p: &PolyT, segments: u32) -> Self {
        let complete = p.map_monomials(|e| StExp { s_half: 2 * segments, t: e.0 });
        EdgePolynomial { complete, segments }
    }

    pub fn complete(&self) -> &PolyST {
        &self.complete
    }

    pub fn segments(&self) -> u32 {
        self.segments
    }

    pub fn maximal(&self) -> PolyT {
        let mut out = PolyT::zero();
        for (e, c) in self.complete.terms() {
            if e.s_half == 2 * self.segments {
                out.add_term(TExp(e.t), c.clone());
            }
        }
        out
    }

    pub fn p_basis(&self) -> PBasisPoly {
        PBasisPoly::from_poly(&self.complete).expect("edge-polynomials have no constant t-terms")
    }

    pub fn product(&self, other: &EdgePolynomial) -> EdgePolynomial {
        EdgePolynomial { complete: &self.complete * &other.complete, segments: self.segments + other.segments }
    }
}

/// By definition: sub-edges, their covering roofs, and maximal counts of the
/// region between each roof and the lower hull.
pub fn covering_roof_edge_poly(e: &NearEdge) -> Result<EdgePolynomial> {
    let mut acc = PBasisPoly::new();
    for indices in sub_edges(e) {
        let sub = e.subsequence(&indices);
        let m = sub.segments();
        let host = sub.to_configuration();
        let floor = Roof::new(sub.lower_vertices().to_vec(), m)?;
        for roof in covering_roofs(&sub) {
            let RegionCount::Maximal(count) = region_poly(&host, &floor, &roof, StepMode::Immediate)? else {
                unreachable!("immediate mode yields a count");
            };
            acc.add_term(2 * m as u32, roof.length() as u32, count);
        }
    }
    Ok(EdgePolynomial::new(acc.expand(), e.segments() as u32))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EdgeMode {
    Complete,
    Maximal,
}

/// `s^a u^j w^n -> C_n s^a u^j`
fn pair_w(r: &PolySUW) -> PolySUW {
    let mut out = PolySUW::zero();
    for (e, c) in r.terms() {
        out.add_term(SuwExp { s: e.s, u: e.u, w: 0 }, c * catalan(e.w as usize));
    }
    out
}

fn suw(s: u32, u: u32, w: u32) -> PolySUW {
    PolySUW::monomial(SuwExp { s, u, w }, 1)
}

/// The state polynomial after each bend, starting from the initial one.
pub fn convex_state_rows(bends: &[Bend], mode: EdgeMode) -> Vec<PolySUW> {
    let mut r = match mode {
        EdgeMode::Complete => suw(1, 1, 0),
        EdgeMode::Maximal => suw(0, 1, 0),
    };
    let mut rows = vec![r.clone()];
    for &b in bends {
        r = match (mode, b) {
            (EdgeMode::Complete, Bend::Up) => &r * &(&suw(1, 1, 1) + &PolySUW::one()),
            (EdgeMode::Complete, Bend::Down) => &(&r * &suw(1, 0, 1)) + &(&pair_w(&r) * &suw(1, 1, 0)),
            (EdgeMode::Maximal, Bend::Up) => &r * &suw(0, 1, 1),
            (EdgeMode::Maximal, Bend::Down) => &(&r * &suw(0, 0, 1)) + &(&pair_w(&r) * &suw(0, 1, 0)),
        };
        rows.push(r.clone());
    }
    rows
}

/// Edge-polynomial of the convex near-edge with the given bends.
pub fn convex_edge_poly(bends: &[Bend], mode: EdgeMode) -> Result<EdgePolynomial> {
    let r = convex_state_rows(bends, mode).pop().expect("at least the initial row");
    let paired = series_pair_uw(&r)?;
    let n = bends.len() as u32 + 1;
    Ok(match mode {
        EdgeMode::Complete => EdgePolynomial::new(paired, n),
        EdgeMode::Maximal => EdgePolynomial::from_maximal(&paired.map_monomials(|e| TExp(e.t)), n),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EdgeMethod {
    Auto,
    TransferMatrix,
    CoveringRoofs,
    Convex,
}

fn transfer_edge_poly(e: &NearEdge) -> Result<EdgePolynomial> {
    Ok(EdgePolynomial::new(complete_edge_poly_tm(e)?.expand(), e.segments() as u32))
}

/// Factorizes, then multiplies per-factor polynomials. `Auto` uses the convex
/// recursion where it applies and the transfer matrix elsewhere.
pub fn edge_poly(e: &NearEdge, method: EdgeMethod) -> Result<EdgePolynomial> {
    match method {
        EdgeMethod::TransferMatrix => transfer_edge_poly(e),
        EdgeMethod::CoveringRoofs => covering_roof_edge_poly(e),
        EdgeMethod::Auto | EdgeMethod::Convex => {
            let mut out = EdgePolynomial::new(PolyST::one(), 0);
            for f in e.factorize() {
                let p = match (f.convex_profile(), method) {
                    (Some(bends), _) => convex_edge_poly(&bends, EdgeMode::Complete)?,
                    (None, EdgeMethod::Auto) => transfer_edge_poly(&f)?,
                    (None, _) => {
                        return Err(Error::InvalidArgument("near-edge has a non-convex prime factor".into()))
                    }
                };
                out = out.product(&p);
            }
            Ok(out)
        }
    }
}

fn require_polygon(edges: &[EdgePolynomial]) -> Result<()> {
    if edges.len() < 2 {
        return Err(Error::InvalidArgument(format!("a near-gon needs at least two edges, got {}", edges.len())));
    }
    Ok(())
}

/// Complete triangulation polynomial of the near-gon with these edges.
pub fn compose(edges: &[EdgePolynomial]) -> Result<PolyS> {
    require_polygon(edges)?;
    let product = edges.iter().fold(PolyST::one(), |acc, e| &acc * e.complete());
    catalan_pair_st(&product)
}

/// Number of maximal triangulations of the near-gon with these edges.
pub fn compose_maximal(edges: &[EdgePolynomial]) -> Result<BigInt> {
    require_polygon(edges)?;
    let product = edges.iter().fold(PolyT::one(), |acc, e| &acc * &e.maximal());
    Ok(catalan_pair_t(&product))
}

/// Recovers `p(E) = sum_j g_j p_j`, `alpha <= j <= d`, from `counts[k]`, the
/// maximal count of `E` closed by `k + 2` unit edges. The system matrix is the
/// shifted Catalan Hankel matrix composed with the `p_j` basis change.
pub fn recover_edge_poly_from_counts(counts: &[BigInt], alpha: u32, d: u32) -> Result<PolyT> {
    if alpha < 1 || d < alpha {
        return Err(Error::InvalidArgument(format!("basis range {alpha}..={d} must satisfy 1 <= alpha <= d")));
    }
    let size = (d - alpha + 1) as usize;
    if counts.len() != size {
        return Err(Error::InvalidArgument(format!("expected {size} counts, got {}", counts.len())));
    }
    let matrix: Vec<Vec<Rational>> = (0..size as u32)
        .map(|k| {
            (alpha..=d)
                .map(|j| Rational::from_integer(catalan_pair_t(&p_basis(j).shift(TExp(k + 2)))))
                .collect()
        })
        .collect();
    let rhs = counts.iter().cloned().map(Rational::from_integer).collect();
    let mut out = PolyT::zero();
    for (j, g) in (alpha..).zip(solve_rational(matrix, rhs)?) {
        if !g.denom().is_one() {
            return Err(Error::NonIntegralSolution);
        }
        out = &out + &p_basis(j).scale(&g.to_integer());
    }
    Ok(out)
}

/// A cyclic sequence of near-edges glued onto a convex polygon.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NearGon {
    edges: Vec<NearEdge>,
}

impl NearGon {
    pub fn new(edges: Vec<NearEdge>) -> Result<Self> {
        if edges.len() < 2 {
            return Err(Error::InvalidArgument(format!("a near-gon needs at least two edges, got {}", edges.len())));
        }
        Ok(NearGon { edges })
    }

    pub fn edges(&self) -> &[NearEdge] {
        &self.edges
    }

    pub fn edge_polys(&self, method: EdgeMethod) -> Result<Vec<EdgePolynomial>> {
        self.edges.iter().map(|e| edge_poly(e, method)).collect()
    }
}

const POLYGON_RADIUS: i64 = 1000;

fn to_i64(v: i128) -> Result<i64> {
    i64::try_from(v).map_err(|_| Error::CoordinateOverflow)
}

/// Labeled points of the near-gon with heights scaled by `2^-m` (dropped when
/// `lift` is false): edge `i` contributes its points `0..n_i`, the last point
/// being the next corner.
fn place(g: &NearGon, corners: &[Point], m: u32, lift: bool) -> Result<Vec<Point>> {
    let lcm = g.edges.iter().fold(1i128, |acc, e| {
        let p = e.points();
        acc.lcm(&i128::from(p[p.len() - 1].x - p[0].x))
    });
    let scale = lcm.checked_shl(m).filter(|s| s >> m == lcm).ok_or(Error::CoordinateOverflow)?;
    let l = corners.len();
    let mut out = Vec::new();
    for (i, e) in g.edges.iter().enumerate() {
        let p = e.points();
        let (first, last) = (p[0], p[p.len() - 1]);
        let len = i128::from(last.x - first.x);
        let (v, w) = (corners[i], corners[(i + 1) % l]);
        let (dx, dy) = (i128::from(w.x - v.x), i128::from(w.y - v.y));
        let along = scale / len;
        let across = if lift { along >> m } else { 0 };
        for q in &p[..p.len() - 1] {
            let x = i128::from(q.x - first.x);
            let y = len * i128::from(q.y - first.y) - i128::from(last.y - first.y) * x;
            let coord = |base: i64, d_along: i128, d_across: i128| -> Option<i128> {
                scale
                    .checked_mul(i128::from(base))?
                    .checked_add(along.checked_mul(x)?.checked_mul(d_along)?)?
                    .checked_add(across.checked_mul(y)?.checked_mul(d_across)?)
            };
            let px = coord(v.x, dx, -dy).ok_or(Error::CoordinateOverflow)?;
            let py = coord(v.y, dy, dx).ok_or(Error::CoordinateOverflow)?;
            out.push(Point::new(to_i64(px)?, to_i64(py)?));
        }
    }
    Ok(out)
}

/// Every triple that is not collinear in the flat limit keeps its flat
/// orientation. Collinear flat triples lie on one edge, whose own
/// orientations are exact at every scale.
fn matches_flat_limit(points: &[Point], flat: &[Point]) -> bool {
    let n = points.len();
    (0..n).all(|i| {
        (i + 1..n).all(|j| {
            (j + 1..n).all(|k| {
                let f = orient(flat[i], flat[j], flat[k]);
                f == Orientation::Collinear || orient(points[i], points[j], points[k]) == f
            })
        })
    })
}

/// Integer realization of a near-gon: each edge is sheared flat onto a side of
/// a convex polygon with heights scaled by `2^-m`, halving until two
/// consecutive scales give the same labeled order type and every cross-edge
/// triple has its flat-limit orientation.
pub fn realize(g: &NearGon, precision_steps: u32) -> Result<Configuration> {
    realize_labeled(g, precision_steps).map(|(pts, _)| Configuration::new(pts).expect("realized points are distinct"))
}

/// As [`realize`], returning the labeled points and the exponent `m`.
pub fn realize_labeled(g: &NearGon, precision_steps: u32) -> Result<(Vec<Point>, u32)> {
    let l = g.edges.len();
    if l < 3 {
        return Err(Error::InvalidArgument("near-gons with fewer than three edges are not realized".into()));
    }
    let corners = rounded_regular_polygon(l, POLYGON_RADIUS)?;
    let mut prev = place(g, &corners, 1, true)?;
    for m in 2..=precision_steps {
        let cur = place(g, &corners, m, true)?;
        if same_order_type(&prev, &cur)? && matches_flat_limit(&cur, &place(g, &corners, m, false)?) {
            return Ok((cur, m));
        }
        prev = cur;
    }
    Err(Error::NoStabilization { steps: precision_steps })
}

#[cfg(test)]
mod tests {
    use super::*;
    use Bend::*;

    fn edge(ys: &[i64]) -> NearEdge {
        NearEdge::from_heights(ys).unwrap()
    }

    #[test]
    fn convex_rows_for_ea() {
        let rows = convex_state_rows(&[Up, Down, Up, Down], EdgeMode::Complete);
        let want = [
            "s*u",
            "s^2*u^2*w + s*u",
            "s^3*u^2*w^2 + s^2*u*w + s^3*u^3 + s^2*u^2",
            "s^4*u^3*w^3 + s^3*u^2*w^2 + s^4*u^4*w + s^3*u^3*w + s^3*u^2*w^2 + s^2*u*w + s^3*u^3 + s^2*u^2",
            "s^5*u^3*w^4 + 2*s^4*u^2*w^3 + s^5*u^4*w^2 + s^4*u^3*w^2 + s^3*u*w^2 + s^4*u^3*w + s^3*u^2*w + 5*s^5*u^4 + 4*s^4*u^3 + s^5*u^5 + 2*s^4*u^4 + s^3*u^2 + s^3*u^3",
        ];
        assert_eq!(rows.len(), want.len());
        for (row, w) in rows.iter().zip(want) {
            assert_eq!(row, &w.parse::<PolySUW>().unwrap());
        }
    }

    #[test]
    fn single_segment() {
        let p = convex_edge_poly(&[], EdgeMode::Complete).unwrap();
        assert_eq!(p.complete().to_string(), "1*s*t");
        assert_eq!(p.maximal().to_string(), "1*t");
    }

    #[test]
    fn maximal_mode_matches_top_coefficient() {
        let c = convex_edge_poly(&[Up, Down, Up], EdgeMode::Complete).unwrap();
        let m = convex_edge_poly(&[Up, Down, Up], EdgeMode::Maximal).unwrap();
        assert_eq!(c.maximal(), m.maximal());
        assert_eq!(m.p_basis().to_string(), "(5*p_3 + 1*p_4)*s^4");
    }

    #[test]
    fn three_routes_on_eb() {
        let eb = edge(&[0, 1, -1, 1, 0]);
        let want = "(5*p_3 + 1*p_4)*s^4 + (4*p_2 + 2*p_3)*s^3 + (1*p_1 + 1*p_2)*s^2";
        for method in [EdgeMethod::Auto, EdgeMethod::TransferMatrix, EdgeMethod::CoveringRoofs, EdgeMethod::Convex] {
            assert_eq!(edge_poly(&eb, method).unwrap().p_basis().to_string(), want, "{method:?}");
        }
    }

    #[test]
    fn non_convex_factor_rejects_convex_method() {
        let ec = edge(&[0, 2, 1, -1, 1, 0]);
        assert!(edge_poly(&ec, EdgeMethod::Convex).is_err());
    }

    #[test]
    fn realization_waits_for_the_flat_limit() {
        let g = NearGon::new(vec![edge(&[0, 0]), edge(&[0, 0, 0, 2, 0]), edge(&[0, 0])]).unwrap();
        let want = compose(&g.edge_polys(EdgeMethod::Auto).unwrap()).unwrap();
        let host = realize(&g, 40).unwrap();
        assert_eq!(crate::transfer::complete_config_poly(&host).unwrap(), want);
    }

    #[test]
    fn recovery() {
        let counts: Vec<BigInt> = [19, 87, 334].iter().map(|&c| BigInt::from(c)).collect();
        let p = recover_edge_poly_from_counts(&counts, 3, 5).unwrap();
        let text = crate::exactmath::format_p_basis(&crate::exactmath::to_p_basis(&p).unwrap());
        assert_eq!(text, "10*p_3 + 7*p_4 + 2*p_5");
        let p1 = recover_edge_poly_from_counts(&[BigInt::one()], 1, 1).unwrap();
        assert_eq!(p1.to_string(), "1*t");
    }

    #[test]
    fn straight_near_gon_realizes_the_weighted_polygon() {
        let g = NearGon::new(vec![edge(&[0, 0]), edge(&[0, 0, 0]), edge(&[0, 0])]).unwrap();
        let (pts, m) = realize_labeled(&g, 10).unwrap();
        assert_eq!(m, 2);
        assert_eq!(pts.len(), 4);
        let c = realize(&g, 10).unwrap();
        let direct = crate::transfer::complete_config_poly(&c).unwrap();
        assert_eq!(direct, crate::weighted::weighted_complete_poly(&[1, 2, 1]).unwrap());
    }

    #[test]
    fn realization_rejects_digons() {
        let g = NearGon::new(vec![edge(&[0, 0]), edge(&[0, 0])]).unwrap();
        assert!(realize(&g, 5).is_err());
    }
}
