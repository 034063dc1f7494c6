//! Worked configurations and the catalog of near-edges with at most three
//! segments, with their published edge-polynomials.

use num_bigint::BigInt;

use crate::exactmath::PBasisPoly;
use crate::planar::{Configuration, NearEdge, Point};
use crate::roofs::Roof;

fn points(c: &[(i64, i64)]) -> Vec<Point> {
    c.iter().map(|&(x, y)| Point::new(x, y)).collect()
}

fn edge(ys: &[i64]) -> NearEdge {
    NearEdge::from_heights(ys).expect("fixture heights form a near-edge")
}

pub fn edge_a() -> NearEdge {
    edge(&[0, 1, -1, 1, -1, 0])
}

pub fn edge_b() -> NearEdge {
    edge(&[0, 1, -1, 1, 0])
}

pub fn edge_c() -> NearEdge {
    edge(&[0, 2, 1, -1, 1, 0])
}

/// Apexes closing `edge_c` with one, two and three extra unit edges.
pub const FAN_APEXES: [(i64, i64); 3] = [(1, 10), (2, 11), (3, 10)];

/// `edge_c` plus the first `k` fan apexes.
pub fn edge_c_fan(k: usize) -> Configuration {
    let mut pts = edge_c().points().to_vec();
    pts.extend(points(&FAN_APEXES[..k]));
    Configuration::new(pts).expect("fan points are distinct")
}

/// Published maximal counts of `edge_c_fan(1..=3)`.
pub const FAN_COUNTS_PRINTED: [u64; 3] = [19, 87, 175];

/// 11-point configuration with collinear hull runs.
pub fn eleven_points() -> Configuration {
    let xs = [0, 0, 0, 0, 1, 2, 2, 2, 3, 3, 3];
    let ys = [3, 2, 1, 0, 4, 4, 2, 1, 3, 2, -1];
    Configuration::new(xs.iter().zip(ys).map(|(&x, y)| Point::new(x, y)).collect()).expect("distinct")
}

/// Host, floor and ceiling of the worked region example.
pub fn region_example() -> (Configuration, Roof, Roof) {
    let host = Configuration::new(points(&[(0, 3), (0, 1), (1, 3), (1, 2), (1, 1), (2, 2), (2, 1), (2, 0)]))
        .expect("distinct");
    let floor = Roof::new(vec![0, 1, 7], 7).expect("valid roof");
    let ceiling = Roof::new(vec![0, 2, 3, 5, 6, 7], 7).expect("valid roof");
    (host, floor, ceiling)
}

/// 12-segment near-edge used for the decorated-roof example.
pub fn twelve_segment_edge() -> NearEdge {
    edge(&[1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 0, 1, 1])
}

/// 8-segment near-edge with lower vertices `0, 1, 5, 8`.
pub fn eight_segment_edge() -> NearEdge {
    edge(&[0, -1, 1, 1, -2, -3, -2, -1, 0])
}

pub struct CatalogEntry {
    pub name: &'static str,
    pub heights: &'static [i64],
    /// `(power of s, j, coefficient of p_j)`; empty when only a factorization is given.
    pub complete: &'static [(u32, u32, i64)],
    /// Catalog names of the prime factors, left to right; empty for primes.
    pub factors: &'static [&'static str],
}

impl CatalogEntry {
    pub fn edge(&self) -> NearEdge {
        edge(self.heights)
    }

    pub fn expected(&self) -> Option<PBasisPoly> {
        if self.complete.is_empty() {
            return None;
        }
        let mut p = PBasisPoly::new();
        for &(s, j, c) in self.complete {
            p.add_term(2 * s, j, BigInt::from(c));
        }
        Some(p)
    }
}

const P3_FULL: &[(u32, u32, i64)] = &[(3, 3, 1), (2, 2, 2), (1, 1, 1)];
const P23_FULL: &[(u32, u32, i64)] = &[(3, 2, 1), (3, 3, 1), (2, 2, 2), (1, 1, 1)];

pub const CATALOG: &[CatalogEntry] = &[
    CatalogEntry { name: "1", heights: &[0, 0], complete: &[(1, 1, 1)], factors: &[] },
    CatalogEntry { name: "2,1", heights: &[0, 1, 0], complete: &[(2, 2, 1), (1, 1, 1)], factors: &[] },
    CatalogEntry { name: "2,2", heights: &[0, -1, 0], complete: &[(2, 2, 1), (2, 1, 1)], factors: &["1", "1"] },
    CatalogEntry { name: "2,3", heights: &[0, 0, 0], complete: &[(2, 2, 1), (1, 1, 1)], factors: &[] },
    CatalogEntry { name: "3,1", heights: &[0, 1, 3, 0], complete: P23_FULL, factors: &[] },
    CatalogEntry { name: "3,2", heights: &[0, 1, 1, 0], complete: &[(3, 3, 2), (2, 2, 2), (1, 1, 1)], factors: &[] },
    CatalogEntry { name: "3,3", heights: &[0, 3, 1, 0], complete: P23_FULL, factors: &[] },
    CatalogEntry {
        name: "3,4",
        heights: &[0, 1, -1, 0],
        complete: &[(3, 2, 2), (3, 3, 1), (2, 2, 1), (2, 1, 1)],
        factors: &[],
    },
    CatalogEntry {
        name: "3,5",
        heights: &[0, -1, 1, 0],
        complete: &[(3, 2, 2), (3, 3, 1), (2, 2, 1), (2, 1, 1)],
        factors: &[],
    },
    CatalogEntry { name: "3,6", heights: &[0, -3, -1, 0], complete: &[], factors: &["1", "2,1"] },
    CatalogEntry { name: "3,7", heights: &[0, -1, -1, 0], complete: &[], factors: &["1", "1", "1"] },
    CatalogEntry { name: "3,8", heights: &[0, -1, -3, 0], complete: &[], factors: &["2,1", "1"] },
    CatalogEntry { name: "3,9", heights: &[0, 1, 2, 0], complete: P3_FULL, factors: &[] },
    CatalogEntry { name: "3,10", heights: &[0, -1, -2, 0], complete: &[], factors: &["2,3", "1"] },
    CatalogEntry { name: "3,11", heights: &[0, 0, 1, 0], complete: P23_FULL, factors: &[] },
    CatalogEntry {
        name: "3,12",
        heights: &[0, 0, -1, 0],
        complete: &[(3, 2, 1), (3, 3, 1), (2, 2, 1)],
        factors: &[],
    },
    CatalogEntry { name: "3,13", heights: &[0, 1, 0, 0], complete: P23_FULL, factors: &[] },
    CatalogEntry {
        name: "3,14",
        heights: &[0, -1, 0, 0],
        complete: &[(3, 2, 1), (3, 3, 1), (2, 2, 1)],
        factors: &[],
    },
    CatalogEntry { name: "3,15", heights: &[0, 2, 1, 0], complete: P3_FULL, factors: &[] },
    CatalogEntry { name: "3,16", heights: &[0, -2, -1, 0], complete: &[], factors: &["1", "2,3"] },
    CatalogEntry { name: "3,17", heights: &[0, 0, 0, 0], complete: P3_FULL, factors: &[] },
];

/// Pairs related by a vertical mirror.
pub const MIRROR_PAIRS: &[(&str, &str)] = &[("3,1", "3,3"), ("3,4", "3,5"), ("3,6", "3,8")];

pub fn catalog_entry(name: &str) -> &'static CatalogEntry {
    CATALOG.iter().find(|e| e.name == name).expect("catalog name")
}

/// Every fixture configuration, catalog near-edges included.
pub fn corpus() -> Vec<(String, Configuration)> {
    let mut out = vec![
        ("edge_a".to_string(), edge_a().to_configuration()),
        ("edge_b".to_string(), edge_b().to_configuration()),
        ("edge_c".to_string(), edge_c().to_configuration()),
        ("edge_c_fan1".to_string(), edge_c_fan(1)),
        ("edge_c_fan2".to_string(), edge_c_fan(2)),
        ("edge_c_fan3".to_string(), edge_c_fan(3)),
        ("region_host".to_string(), region_example().0),
        ("eleven_points".to_string(), eleven_points()),
        ("eight_segment_edge".to_string(), eight_segment_edge().to_configuration()),
        ("twelve_segment_edge".to_string(), twelve_segment_edge().to_configuration()),
    ];
    out.extend(CATALOG.iter().map(|e| (format!("E_{}", e.name), e.edge().to_configuration())));
    out
}
