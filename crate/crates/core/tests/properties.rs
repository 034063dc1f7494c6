mod common;

use num_bigint::BigInt;
use proptest::prelude::*;

use common::{catalans, choose, pair, p_bar, mul, from_terms, render};
use tripoly::exactmath::{catalan_pair_t, hankel_recover, maximal_edge_basis, PolyT, TExp};
use tripoly::neargon::{compose, edge_poly, realize, EdgeMethod, NearGon};
use tripoly::oracle::{oracle_complete_poly, oracle_complete_visit};
use tripoly::planar::{det, orient, same_order_type, Bend, Configuration, NearEdge, Point};
use tripoly::roofs::{covering_roofs, sub_edges, DecoratedRoof, RoofSystem, StepMode};
use tripoly::transfer::{complete_config_poly, max_config_count};
use tripoly::weighted::{weighted_complete_poly, weighted_max_count, weighted_polygon_points};

fn config_strategy(max_points: usize) -> impl Strategy<Value = Configuration> {
    prop::collection::vec((0i64..6, 0i64..6), 3..=max_points).prop_filter_map("collinear or too small", |raw| {
        let mut pts: Vec<Point> = raw.into_iter().map(|(x, y)| Point::new(x, y)).collect();
        pts.sort();
        pts.dedup();
        let c = Configuration::new(pts).ok()?;
        (c.len() >= 3 && !c.is_collinear()).then_some(c)
    })
}

fn heights(max_segments: usize, bound: i64) -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-bound..=bound, 0..max_segments).prop_map(|inner| {
        let mut h = vec![0];
        h.extend(inner);
        h.push(0);
        h
    })
}

fn edge(h: &[i64]) -> NearEdge {
    NearEdge::from_heights(h).unwrap()
}

/// `left` then `right` joined at a sharp downward kink, so the join splits.
fn concatenate(left: &[i64], right: &[i64]) -> NearEdge {
    const KINK: i64 = 100;
    let k = left.len() as i64 - 1;
    let mut pts: Vec<Point> = left.iter().enumerate().map(|(i, &y)| Point::new(i as i64, y + KINK * (k - i as i64))).collect();
    let base = left[left.len() - 1] - right[0];
    pts.extend(right.iter().enumerate().skip(1).map(|(i, &y)| Point::new(k + i as i64, y + base + KINK * i as i64)));
    NearEdge::new(pts).unwrap()
}

fn poly_t(c: &[i64], lowest: u32) -> PolyT {
    PolyT::from_terms(c.iter().enumerate().map(|(i, &v)| (TExp(lowest + i as u32), BigInt::from(v))))
}

/// Closed segments `ab` and `cd` share no point other than a common endpoint.
fn segments_compatible(a: Point, b: Point, c: Point, d: Point) -> bool {
    let on = |p: Point, q: Point, r: Point| {
        det(p, q, r) == 0 && r.x >= p.x.min(q.x) && r.x <= p.x.max(q.x) && r.y >= p.y.min(q.y) && r.y <= p.y.max(q.y)
    };
    let shared = [a, b].iter().filter(|p| **p == c || **p == d).count();
    if shared == 2 {
        return false;
    }
    if shared == 1 {
        let (o, p, q) = if a == c { (a, b, d) } else if a == d { (a, b, c) } else if b == c { (b, a, d) } else { (b, a, c) };
        return !(det(o, p, q) == 0 && (on(o, p, q) || on(o, q, p)));
    }
    let (d1, d2) = (det(a, b, c).signum(), det(a, b, d).signum());
    let (d3, d4) = (det(c, d, a).signum(), det(c, d, b).signum());
    if d1 * d2 < 0 && d3 * d4 < 0 {
        return false;
    }
    !(on(a, b, c) || on(a, b, d) || on(c, d, a) || on(c, d, b))
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, ..ProptestConfig::default() })]

    #[test]
    fn orientation_is_antisymmetric(a in (-50i64..50, -50i64..50), b in (-50i64..50, -50i64..50), c in (-50i64..50, -50i64..50)) {
        let (a, b, c) = (Point::new(a.0, a.1), Point::new(b.0, b.1), Point::new(c.0, c.1));
        prop_assert_eq!(orient(a, b, c).sign(), -orient(b, a, c).sign());
        prop_assert_eq!(orient(a, b, c).sign(), -orient(a, c, b).sign());
        prop_assert_eq!(orient(a, b, c).sign(), orient(b, c, a).sign());
    }

    #[test]
    fn hulls_enclose_every_point(c in config_strategy(12)) {
        let pts = c.points();
        for w in c.lower_hull().windows(2) {
            for &p in pts {
                prop_assert!(det(pts[w[0]], pts[w[1]], p) >= 0);
            }
        }
        for w in c.upper_hull().windows(2) {
            for &p in pts {
                prop_assert!(det(pts[w[0]], pts[w[1]], p) <= 0);
            }
        }
    }

    #[test]
    fn factors_rebuild_the_edge(h in heights(8, 3)) {
        let e = edge(&h);
        let factors = e.factorize();
        let mut rebuilt = vec![e.points()[0]];
        for f in &factors {
            prop_assert_eq!(f.factorize().len(), 1);
            let last = rebuilt[rebuilt.len() - 1];
            let shift = (last.x - f.points()[0].x, last.y - f.points()[0].y);
            rebuilt.extend(f.points().iter().skip(1).map(|p| Point::new(p.x + shift.0, p.y + shift.1)));
        }
        prop_assert_eq!(rebuilt.as_slice(), e.points());
    }

    #[test]
    fn convex_edges_are_prime_unless_all_down(bends in prop::collection::vec(any::<bool>(), 0..7)) {
        let bends: Vec<Bend> = bends.into_iter().map(|b| if b { Bend::Up } else { Bend::Down }).collect();
        let e = NearEdge::from_profile(&bends).unwrap();
        let n = e.segments();
        let expected = if bends.iter().all(|&b| b == Bend::Down) { n } else { 1 };
        prop_assert_eq!(e.factorize().len(), expected);
    }

    #[test]
    fn roof_codes_round_trip(n in 2usize..=12, seed in any::<u64>()) {
        let mut rng = common::Lcg(seed);
        let mask = rng.below(1 << (n - 1));
        let w = 1 + mask.count_ones() as u64;
        let code = rng.below(w) * (1 << (n - 1)) + mask;
        let r = DecoratedRoof::decode(code, n).unwrap();
        prop_assert_eq!(r.encode(n), code);
    }

    #[test]
    fn successors_change_length_by_one(c in config_strategy(8)) {
        let sys = RoofSystem::hull(&c);
        let n = c.len() - 1;
        for mask in 0u64..1 << (n - 1) {
            for d in 0..=mask.count_ones() as u64 {
                let r = DecoratedRoof::decode(d * (1 << (n - 1)) + mask, n).unwrap();
                for s in sys.successors(&r, StepMode::All) {
                    let grew = s.length() == r.length() + 1;
                    let shrank = s.length() + 1 == r.length();
                    prop_assert!(grew || shrank);
                }
            }
        }
    }

    #[test]
    fn covering_roofs_shelter_the_edge(h in heights(6, 3)) {
        let e = edge(&h);
        let pts = e.points();
        for roof in covering_roofs(&e) {
            let idx = roof.indices();
            for (i, &p) in pts.iter().enumerate() {
                let k = idx.iter().position(|&v| v >= i).unwrap();
                if idx[k] != i {
                    prop_assert!(det(pts[idx[k - 1]], pts[idx[k]], p) <= 0);
                }
            }
        }
        for sub in sub_edges(&e) {
            let s = e.subsequence(&sub);
            let lower: Vec<usize> = s.lower_vertices().iter().map(|&i| sub[i]).collect();
            prop_assert_eq!(lower.as_slice(), e.lower_vertices());
        }
    }

    #[test]
    fn transfer_matches_oracle(c in config_strategy(8)) {
        let tm = complete_config_poly(&c).unwrap();
        prop_assert_eq!(&oracle_complete_poly(&c, 12).unwrap(), &tm);
        prop_assert_eq!(max_config_count(&c).unwrap(), tm.leading_coeff());
    }

    #[test]
    fn oracle_packings_are_triangulations(c in config_strategy(7)) {
        let pts = c.points().to_vec();
        let hull = c.doubled_hull_area();
        let mut failures = Vec::new();
        oracle_complete_visit(&c, 12, &mut |members, tris| {
            let area: i128 = tris.iter().map(|t| det(pts[t[0]], pts[t[1]], pts[t[2]]).abs()).sum();
            if area != hull {
                failures.push("area");
            }
            if !members.iter().all(|m| tris.iter().any(|t| t.contains(m))) {
                failures.push("unused vertex");
            }
            let mut edges: Vec<(usize, usize)> = tris.iter().flat_map(|t| [(t[0], t[1]), (t[0], t[2]), (t[1], t[2])]).collect();
            edges.sort_unstable();
            edges.dedup();
            for (i, &(a, b)) in edges.iter().enumerate() {
                for &(x, y) in &edges[i + 1..] {
                    if !segments_compatible(pts[a], pts[b], pts[x], pts[y]) {
                        failures.push("crossing edges");
                    }
                }
            }
        }).unwrap();
        prop_assert!(failures.is_empty(), "{:?}", failures);
    }

    #[test]
    fn three_routes_agree(h in heights(7, 3)) {
        let e = edge(&h);
        let tm = edge_poly(&e, EdgeMethod::TransferMatrix).unwrap();
        prop_assert_eq!(&edge_poly(&e, EdgeMethod::CoveringRoofs).unwrap(), &tm);
        if e.convex_profile().is_some() {
            prop_assert_eq!(&edge_poly(&e, EdgeMethod::Convex).unwrap(), &tm);
        }
    }

    #[test]
    fn edge_polynomials_are_multiplicative(left in heights(4, 3), right in heights(4, 3)) {
        let joined = concatenate(&left, &right);
        let (a, b) = (edge(&left), edge(&right));
        let factors = joined.factorize();
        let expected: Vec<NearEdge> = a.factorize().into_iter().chain(b.factorize()).collect();
        prop_assert_eq!(factors.len(), expected.len());
        for (f, g) in factors.iter().zip(&expected) {
            prop_assert!(same_order_type(f.points(), g.points()).unwrap());
        }
        let product = edge_poly(&a, EdgeMethod::Auto).unwrap().product(&edge_poly(&b, EdgeMethod::Auto).unwrap());
        prop_assert_eq!(edge_poly(&joined, EdgeMethod::TransferMatrix).unwrap(), product);
    }

    #[test]
    fn mirror_invariance(h in heights(7, 3)) {
        let e = edge(&h);
        prop_assert_eq!(
            edge_poly(&e.vertical_mirror(), EdgeMethod::Auto).unwrap(),
            edge_poly(&e, EdgeMethod::Auto).unwrap()
        );
    }

    #[test]
    fn hankel_round_trip(alpha in 2u32..=12, coeffs in prop::collection::vec(-20i64..=20, 1..=11)) {
        let d = (alpha + coeffs.len() as u32 - 1).min(12);
        let q = poly_t(&coeffs[..(d - alpha + 1) as usize], alpha);
        let values: Vec<BigInt> = (0..=d - alpha).map(|k| catalan_pair_t(&q.shift(TExp(k)))).collect();
        prop_assert_eq!(hankel_recover(&values, alpha, d).unwrap(), q);
    }

    #[test]
    fn inclusion_exclusion(a in 1u32..=8, coeffs in prop::collection::vec(-9i64..=9, 1..=5)) {
        let q = poly_t(&coeffs, 0);
        let lhs = catalan_pair_t(&(&maximal_edge_basis(a).unwrap() * &q));
        let rhs: BigInt = (0..=a / 2)
            .map(|k| {
                let sign = if k % 2 == 0 { 1 } else { -1 };
                choose(i64::from(a - k), i64::from(k)) * sign * catalan_pair_t(&q.shift(TExp(a - k)))
            })
            .sum();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn pairing_is_linear(x in prop::collection::vec(-9i64..=9, 1..=8), y in prop::collection::vec(-9i64..=9, 1..=8)) {
        let (p, q) = (poly_t(&x, 0), poly_t(&y, 2));
        prop_assert_eq!(catalan_pair_t(&(&p + &q)), catalan_pair_t(&p) + catalan_pair_t(&q));
        let c = catalans(12);
        let direct: BigInt = x.iter().enumerate().filter(|(i, _)| *i >= 2).map(|(i, &v)| &c[i - 2] * v).sum();
        prop_assert_eq!(catalan_pair_t(&p), direct);
    }

    #[test]
    fn weighted_extremes(weights in prop::collection::vec(1u32..=5, 3..=6)) {
        let p = weighted_complete_poly(&weights).unwrap();
        prop_assert_eq!(p.leading_coeff(), weighted_max_count(&weights).unwrap());
        let l = weights.len();
        prop_assert_eq!(p.lowest_term(), Some((l as u32, catalans(l)[l - 2].clone())));
        let reference = weights.iter().fold(from_terms(&[(0, 0, 1)]), |acc, &a| mul(&acc, &p_bar(a)));
        prop_assert_eq!(render(&pair(&reference)), p.to_string());
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 24, ..ProptestConfig::default() })]

    #[test]
    fn weighted_realizations_match(weights in prop::collection::vec(1u32..=3, 3..=5)) {
        let host = Configuration::new(weighted_polygon_points(&weights).unwrap()).unwrap();
        prop_assert_eq!(complete_config_poly(&host).unwrap(), weighted_complete_poly(&weights).unwrap());
    }

    #[test]
    fn realized_near_gons_match_composition(edges in prop::collection::vec(heights(4, 2), 3..=4)) {
        let edges: Vec<NearEdge> = edges.iter().map(|h| edge(h)).collect();
        let total: usize = edges.iter().map(|e| e.segments()).sum();
        prop_assume!(total <= 14);
        let g = NearGon::new(edges).unwrap();
        let polys = g.edge_polys(EdgeMethod::Auto).unwrap();
        let host = realize(&g, 40).unwrap();
        prop_assert_eq!(host.len(), total);
        prop_assert_eq!(complete_config_poly(&host).unwrap(), compose(&polys).unwrap());
    }
}
