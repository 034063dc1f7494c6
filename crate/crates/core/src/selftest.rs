//! Published worked examples, recomputed and compared as canonical text.

use num_bigint::BigInt;

use crate::exactmath::{format_p_basis, to_p_basis, PolySUW};
use crate::fixtures::{self, CatalogEntry, CATALOG, FAN_COUNTS_PRINTED, MIRROR_PAIRS};
use crate::neargon::{compose, convex_state_rows, edge_poly, realize, recover_edge_poly_from_counts, EdgeMethod, EdgeMode, NearGon};
use crate::planar::{same_order_type, Bend, NearEdge};
use crate::roofs::StepMode;
use crate::transfer::{ceiling_image, complete_config_poly, complete_edge_poly_tm_traced, max_config_count, region_poly_traced, RegionCount, RoofVector};
use crate::weighted::{weighted_complete_poly, weighted_max_count};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SelfCheck {
    pub name: String,
    pub expected: String,
    pub actual: String,
}

impl SelfCheck {
    fn new(name: impl Into<String>, expected: impl Into<String>, actual: impl Into<String>) -> Self {
        SelfCheck { name: name.into(), expected: expected.into(), actual: actual.into() }
    }

    pub fn passed(&self) -> bool {
        self.expected == self.actual
    }
}

fn show<T: ToString, E: ToString>(r: Result<T, E>) -> String {
    match r {
        Ok(v) => v.to_string(),
        Err(e) => format!("error: {}", e.to_string()),
    }
}

pub const WEIGHTED_15: &str = "8046*s^15 + 37250*s^14 + 77467*s^13 + 95364*s^12 + 77048*s^11 + 42776*s^10 + 16584*s^9 + 4460*s^8 + 805*s^7 + 90*s^6 + 5*s^5";
pub const WEIGHTED_TRIANGLE: &str = "901*s^14 + 4825*s^13 + 11734*s^12 + 17130*s^11 + 16710*s^10 + 11466*s^9 + 5670*s^8 + 2034*s^7 + 525*s^6 + 95*s^5 + 11*s^4 + 1*s^3";
pub const NEAR_GON_ABC: &str = "194939*s^14 + 338669*s^13 + 263615*s^12 + 119944*s^11 + 34773*s^10 + 6522*s^9 + 748*s^8 + 42*s^7";
pub const EDGE_A: &str = "(14*p_3 + 7*p_4 + 1*p_5)*s^5 + (10*p_2 + 7*p_3 + 2*p_4)*s^4 + (2*p_1 + 2*p_2 + 1*p_3)*s^3";
pub const EDGE_B: &str = "(5*p_3 + 1*p_4)*s^4 + (4*p_2 + 2*p_3)*s^3 + (1*p_1 + 1*p_2)*s^2";
pub const EDGE_C: &str = "(10*p_3 + 7*p_4 + 2*p_5)*s^5 + (3*p_2 + 13*p_3 + 4*p_4)*s^4 + (6*p_2 + 3*p_3)*s^3 + (1*p_1 + 1*p_2)*s^2";
pub const EDGE_A_ROWS: [&str; 4] = [
    "s^2*u^2*w + s*u",
    "s^3*u^2*w^2 + s^2*u*w + s^3*u^3 + s^2*u^2",
    "s^4*u^3*w^3 + s^3*u^2*w^2 + s^4*u^4*w + s^3*u^3*w + s^3*u^2*w^2 + s^2*u*w + s^3*u^3 + s^2*u^2",
    "s^5*u^3*w^4 + 2*s^4*u^2*w^3 + s^5*u^4*w^2 + s^4*u^3*w^2 + s^3*u*w^2 + s^4*u^3*w + s^3*u^2*w + 5*s^5*u^4 + 4*s^4*u^3 + s^5*u^5 + 2*s^4*u^4 + s^3*u^2 + s^3*u^3",
];
pub const REGION: &str = "12*s^8 + 16*s^7 + 5*s^6";
pub const REGION_IMAGES_PRINTED: &str = "5*s^2, 7*s^(5/2), 9*s^2, 12*s^(7/2)";
pub const EDGE_C_MAXIMAL: &str = "10*p_3 + 7*p_4 + 2*p_5";

pub fn render_vector(v: &RoofVector) -> String {
    if v.is_empty() {
        return "0".into();
    }
    v.iter().map(|(code, c)| format!("{c}*R_{code}")).collect::<Vec<_>>().join(" + ")
}

/// Catalog name of the first entry with the same order type.
fn catalog_name(e: &NearEdge) -> String {
    CATALOG
        .iter()
        .find(|c| same_order_type(c.edge().points(), e.points()).unwrap_or(false))
        .map_or_else(|| "?".into(), |c| format!("E_{}", c.name))
}

fn factor_names(names: &[&str]) -> String {
    names.iter().map(|n| format!("E_{n}")).collect::<Vec<_>>().join(" ")
}

fn catalog_checks(entry: &CatalogEntry, out: &mut Vec<SelfCheck>) {
    let e = entry.edge();
    if let Some(want) = entry.expected() {
        out.push(SelfCheck::new(
            format!("catalog E_{}", entry.name),
            want.to_string(),
            show(edge_poly(&e, EdgeMethod::Auto).map(|p| p.p_basis())),
        ));
    }
    let factors = e.factorize();
    let actual = if factors.len() == 1 { String::new() } else { factors.iter().map(catalog_name).collect::<Vec<_>>().join(" ") };
    out.push(SelfCheck::new(format!("factors E_{}", entry.name), factor_names(entry.factors), actual));
}

pub fn run_selftest() -> Vec<SelfCheck> {
    let mut out = Vec::new();

    out.push(SelfCheck::new("weighted max (1,5,2,3,4)", "8046", show(weighted_max_count(&[1, 5, 2, 3, 4]))));
    out.push(SelfCheck::new("weighted poly (1,5,2,3,4)", WEIGHTED_15, show(weighted_complete_poly(&[1, 5, 2, 3, 4]))));
    out.push(SelfCheck::new("weighted poly (5,4,5)", WEIGHTED_TRIANGLE, show(weighted_complete_poly(&[5, 4, 5]))));

    let edges = [fixtures::edge_a(), fixtures::edge_b(), fixtures::edge_c()];
    for (name, e, want) in [("E_a", &edges[0], EDGE_A), ("E_b", &edges[1], EDGE_B), ("E_c", &edges[2], EDGE_C)] {
        out.push(SelfCheck::new(format!("edge poly {name}"), want, show(edge_poly(e, EdgeMethod::Auto).map(|p| p.p_basis()))));
    }
    let polys: Vec<_> = edges.iter().filter_map(|e| edge_poly(e, EdgeMethod::Auto).ok()).collect();
    out.push(SelfCheck::new("near-gon E_a E_b E_c", NEAR_GON_ABC, show(compose(&polys))));

    let mut last = RoofVector::new();
    let tm = complete_edge_poly_tm_traced(&edges[2], &mut |_, _, v| last = v.clone());
    out.push(SelfCheck::new("transfer E_c", EDGE_C, show(tm)));
    out.push(SelfCheck::new("transfer E_c last vector", "10*R_25", render_vector(&last)));

    let rows = convex_state_rows(&[Bend::Up, Bend::Down, Bend::Up, Bend::Down], EdgeMode::Complete);
    for (k, want) in EDGE_A_ROWS.iter().enumerate() {
        let got = rows.get(k + 1);
        let same = got.is_some_and(|r| want.parse::<PolySUW>().is_ok_and(|w| &w == r));
        let actual = if same { want.to_string() } else { got.map_or("missing".into(), |r| r.to_string()) };
        out.push(SelfCheck::new(format!("convex row {} E_a", k + 1), *want, actual));
    }

    let (host, floor, ceiling) = fixtures::region_example();
    let mut images = Vec::new();
    let region = region_poly_traced(&host, &floor, &ceiling, StepMode::All, &mut |sys, _, v| {
        let w = ceiling_image(sys, v);
        if !w.is_zero() {
            images.push(w.to_string());
        }
    });
    let region = match region {
        Ok(RegionCount::Polynomial(p)) => p.to_string(),
        Ok(RegionCount::Maximal(c)) => c.to_string(),
        Err(e) => format!("error: {e}"),
    };
    out.push(SelfCheck::new("region polynomial", REGION, region));
    out.push(SelfCheck::new("region ceiling images", REGION_IMAGES_PRINTED, images.join(", ")));

    for (k, want) in FAN_COUNTS_PRINTED.iter().enumerate() {
        out.push(SelfCheck::new(
            format!("fan count {}", k + 1),
            want.to_string(),
            show(max_config_count(&fixtures::edge_c_fan(k + 1))),
        ));
    }
    let counts: Vec<BigInt> = FAN_COUNTS_PRINTED.iter().map(|&c| BigInt::from(c)).collect();
    let recovered = recover_edge_poly_from_counts(&counts, 3, 5).and_then(|p| to_p_basis(&p)).map(|p| format_p_basis(&p));
    out.push(SelfCheck::new("recovery from printed fan counts", EDGE_C_MAXIMAL, show(recovered)));

    for entry in CATALOG {
        catalog_checks(entry, &mut out);
    }
    for (a, b) in MIRROR_PAIRS {
        let mirrored = fixtures::catalog_entry(a).edge().vertical_mirror();
        out.push(SelfCheck::new(format!("mirror E_{a}"), format!("E_{b}"), catalog_name(&mirrored)));
    }

    let realized = NearGon::new(edges.to_vec()).and_then(|g| realize(&g, 40)).and_then(|c| complete_config_poly(&c));
    out.push(SelfCheck::new("realized near-gon E_a E_b E_c", NEAR_GON_ABC, show(realized)));
    out
}
