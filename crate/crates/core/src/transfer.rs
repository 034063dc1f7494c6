//! Roof-vector iteration.
//!
//! `V_0 = 0` and `V_i = C_i + T(V_{i-1})`, where `C_i` sums the initially
//! decorated roofs of length `i` along the floor and `T` sends a decorated
//! roof to the sum of its successors. Only the previous vector is kept; each
//! `V_i` is folded into the result as soon as it is formed.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactmath::{catalan_pair_t, PBasisPoly, PolyS, PolyST, PolyT, SExp, StExp};
use crate::exactmath::p_basis;
use crate::planar::{Configuration, NearEdge};
use crate::roofs::{is_covering, Bounds, DecoratedRoof, Roof, RoofCode, RoofSystem, StepMode};

/// Sparse vector over decorated roofs, keyed by roof code.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RoofVector {
    entries: BTreeMap<RoofCode, BigInt>,
}

impl RoofVector {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_pairs<I: IntoIterator<Item = (RoofCode, i64)>>(pairs: I) -> Self {
        let mut v = Self::new();
        for (code, c) in pairs {
            v.add(code, BigInt::from(c));
        }
        v
    }

    pub fn add(&mut self, code: RoofCode, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let e = self.entries.entry(code).or_default();
        *e += c;
        if e.is_zero() {
            self.entries.remove(&code);
        }
    }

    pub fn get(&self, code: RoofCode) -> BigInt {
        self.entries.get(&code).cloned().unwrap_or_default()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = (RoofCode, &BigInt)> {
        self.entries.iter().map(|(&k, v)| (k, v))
    }

    fn merge(&mut self, other: &RoofVector) {
        for (code, c) in other.iter() {
            self.add(code, c.clone());
        }
    }

    /// `2*R_8 (0 [1 3] 4 5) + ...`, in code order.
    pub fn render(&self, sys: &RoofSystem) -> String {
        if self.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, (code, c)) in self.iter().enumerate() {
            if i > 0 {
                out.push_str(" + ");
            }
            let _ = write!(out, "{c}*R_{code} {}", sys.decode(code));
        }
        out
    }
}

/// Receives each `V_i` as it is formed.
pub type Observer<'a> = &'a mut dyn FnMut(&RoofSystem, usize, &RoofVector);

/// `T v`, or `T~ v` in immediate mode; with `prune`, successors whose frozen
/// prefix has left the ceiling are dropped.
pub fn apply_transfer(sys: &RoofSystem, v: &RoofVector, mode: StepMode, prune: bool) -> RoofVector {
    let mut out = RoofVector::new();
    for (code, c) in v.iter() {
        for s in sys.successors(&sys.decode(code), mode) {
            if prune && sys.is_dead_end(&s) {
                continue;
            }
            out.add(sys.encode(&s), c.clone());
        }
    }
    out
}

/// `C_k` for every length `k` occurring among the floor roofs.
pub fn initial_vectors(sys: &RoofSystem) -> BTreeMap<usize, RoofVector> {
    let mut out: BTreeMap<usize, RoofVector> = BTreeMap::new();
    for r in sys.initial_roofs() {
        out.entry(r.length()).or_default().add(sys.encode(&r), BigInt::one());
    }
    out
}

/// The single full floor roof, placed at its length.
fn full_floor_vector(sys: &RoofSystem) -> BTreeMap<usize, RoofVector> {
    let r = DecoratedRoof { indices: sys.bounds().floor_points(), decoration: 0 };
    let mut v = RoofVector::new();
    v.add(sys.encode(&r), BigInt::one());
    BTreeMap::from([(r.length(), v)])
}

fn iterate(
    sys: &RoofSystem,
    initial: &BTreeMap<usize, RoofVector>,
    mode: StepMode,
    prune: bool,
    visit: &mut dyn FnMut(usize, &RoofVector),
) {
    let last = initial.keys().next_back().copied().unwrap_or(0);
    let mut v = RoofVector::new();
    for i in 1.. {
        let mut next = apply_transfer(sys, &v, mode, prune);
        if let Some(c) = initial.get(&i) {
            next.merge(c);
        }
        v = next;
        if v.is_empty() && i >= last {
            break;
        }
        visit(i, &v);
    }
}

/// `sum c * s^(len/2)` over entries tracing the ceiling, in half-units of `s`.
pub fn ceiling_image(sys: &RoofSystem, v: &RoofVector) -> PolyST {
    let mut out = PolyST::zero();
    for (code, c) in v.iter() {
        let r = sys.decode(code);
        if sys.bounds().matches_ceiling(sys.host(), &r.indices) {
            out.add_term(StExp { s_half: r.length() as u32, t: 0 }, c.clone());
        }
    }
    out
}

/// Integral-exponent polynomial in `s` from half-unit exponents.
pub fn finalize_half_powers(acc: &BTreeMap<u32, BigInt>) -> Result<PolyS> {
    let mut out = PolyS::zero();
    for (&half, c) in acc {
        if half % 2 != 0 {
            return Err(Error::OddHalfExponent { half });
        }
        out.add_term(SExp(half / 2), c.clone());
    }
    Ok(out)
}

/// `s * sum_i s^(i/2) W(V_i)`, where `W` keeps roofs tracing the ceiling.
fn complete_count(sys: &RoofSystem, observer: Option<Observer>) -> Result<PolyS> {
    let mut acc: BTreeMap<u32, BigInt> = BTreeMap::new();
    let mut observer = observer;
    iterate(sys, &initial_vectors(sys), StepMode::All, true, &mut |i, v| {
        if let Some(o) = observer.as_mut() {
            o(sys, i, v);
        }
        for (e, c) in ceiling_image(sys, v).terms() {
            *acc.entry(2 + i as u32 + e.s_half).or_default() += c;
        }
    });
    acc.retain(|_, c| !c.is_zero());
    finalize_half_powers(&acc)
}

/// Number of maximal triangulations: immediate steps from the full floor roof
/// to the full ceiling roof.
fn maximal_count(sys: &RoofSystem, observer: Option<Observer>) -> BigInt {
    let target = sys.bounds().ceiling_points();
    let mut total = BigInt::zero();
    let mut observer = observer;
    iterate(sys, &full_floor_vector(sys), StepMode::Immediate, false, &mut |i, v| {
        if let Some(o) = observer.as_mut() {
            o(sys, i, v);
        }
        for (code, c) in v.iter() {
            if sys.decode(code).indices == target {
                total += c;
            }
        }
    });
    total
}

fn require_triangulable(host: &Configuration) -> Result<()> {
    if host.is_collinear() {
        return Err(Error::Collinear);
    }
    Ok(())
}

pub fn complete_config_poly(host: &Configuration) -> Result<PolyS> {
    require_triangulable(host)?;
    complete_count(&RoofSystem::hull(host), None)
}

pub fn complete_config_poly_traced(host: &Configuration, observer: Observer) -> Result<PolyS> {
    require_triangulable(host)?;
    complete_count(&RoofSystem::hull(host), Some(observer))
}

pub fn max_config_count(host: &Configuration) -> Result<BigInt> {
    require_triangulable(host)?;
    Ok(maximal_count(&RoofSystem::hull(host), None))
}

pub fn max_config_count_traced(host: &Configuration, observer: Observer) -> Result<BigInt> {
    require_triangulable(host)?;
    Ok(maximal_count(&RoofSystem::hull(host), Some(observer)))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RegionCount {
    Polynomial(PolyS),
    Maximal(BigInt),
}

/// Triangulations of the closed region between two roofs.
pub fn region_poly(host: &Configuration, floor: &Roof, ceiling: &Roof, mode: StepMode) -> Result<RegionCount> {
    region_poly_inner(host, floor, ceiling, mode, None)
}

pub fn region_poly_traced(
    host: &Configuration,
    floor: &Roof,
    ceiling: &Roof,
    mode: StepMode,
    observer: Observer,
) -> Result<RegionCount> {
    region_poly_inner(host, floor, ceiling, mode, Some(observer))
}

fn region_poly_inner(
    host: &Configuration,
    floor: &Roof,
    ceiling: &Roof,
    mode: StepMode,
    observer: Option<Observer>,
) -> Result<RegionCount> {
    let sys = RoofSystem::new(host, Bounds::region(host, floor, ceiling)?);
    Ok(match mode {
        StepMode::All => RegionCount::Polynomial(complete_count(&sys, observer)?),
        StepMode::Immediate => RegionCount::Maximal(maximal_count(&sys, observer)),
    })
}

/// `sum_i s^(i/2) sum_R c_R s^(len R / 2) p_(len R)` over every entry of every `V_i`.
fn edge_poly_tm(e: &NearEdge, observer: Option<Observer>) -> Result<PBasisPoly> {
    let host = e.to_configuration();
    let sys = RoofSystem::hull(&host);
    let mut acc = PBasisPoly::new();
    let mut odd = None;
    let mut observer = observer;
    iterate(&sys, &initial_vectors(&sys), StepMode::All, false, &mut |i, v| {
        if let Some(o) = observer.as_mut() {
            o(&sys, i, v);
        }
        for (code, c) in v.iter() {
            let len = sys.decode(code).length() as u32;
            let half = i as u32 + len;
            if half % 2 != 0 {
                odd = Some(half);
            }
            acc.add_term(half, len, c.clone());
        }
    });
    match odd {
        Some(half) => Err(Error::OddHalfExponent { half }),
        None => Ok(acc),
    }
}

/// Complete edge-polynomial by the transfer matrix, in the `p_j` basis.
pub fn complete_edge_poly_tm(e: &NearEdge) -> Result<PBasisPoly> {
    edge_poly_tm(e, None)
}

pub fn complete_edge_poly_tm_traced(e: &NearEdge, observer: Observer) -> Result<PBasisPoly> {
    edge_poly_tm(e, Some(observer))
}

/// Maximal edge-polynomial: immediate steps from the full lower roof, each
/// covering roof weighted by `p_(length)`.
pub fn maximal_edge_poly_tm(e: &NearEdge) -> PolyT {
    let host = e.to_configuration();
    let sys = RoofSystem::hull(&host);
    let mut acc: BTreeMap<u32, BigInt> = BTreeMap::new();
    iterate(&sys, &full_floor_vector(&sys), StepMode::Immediate, false, &mut |_, v| {
        for (code, c) in v.iter() {
            let r = sys.decode(code);
            if is_covering(e, &r.roof()) {
                *acc.entry(r.length() as u32).or_default() += c;
            }
        }
    });
    let mut out = PolyT::zero();
    for (len, c) in acc {
        out = &out + &p_basis(len).scale(&c);
    }
    out
}

/// `<p, sum C_(n-2) t^n>` over a maximal edge-polynomial times `t^k`, the
/// maximal count of the near-gon closing `e` with `k` unit edges.
pub fn fan_count(p: &PolyT, k: u32) -> BigInt {
    catalan_pair_t(&p.shift(crate::exactmath::TExp(k)))
}
