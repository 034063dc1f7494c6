//! Roofs, decorated roofs and their successors.
//!
//! A roof over a host with points `0..=n` is a strictly increasing index
//! sequence from `0` to `n`. A decorated roof also marks one of its segments.

use std::fmt;

use crate::error::{Error, Result};
use crate::planar::{in_closed_triangle, orient, Configuration, NearEdge, Orientation};

pub type RoofCode = u64;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Roof {
    indices: Vec<usize>,
}

impl Roof {
    /// Checks `indices` runs from `0` to `n`, strictly increasing.
    pub fn new(indices: Vec<usize>, n: usize) -> Result<Self> {
        if indices.len() < 2 || indices[0] != 0 || *indices.last().unwrap() != n {
            return Err(Error::InvalidRoof(format!("roof must run from 0 to {n}: {indices:?}")));
        }
        if indices.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidRoof(format!("roof indices must increase: {indices:?}")));
        }
        Ok(Roof { indices })
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    /// Number of segments.
    pub fn length(&self) -> usize {
        self.indices.len() - 1
    }

    pub fn decorate(self, decoration: usize) -> Result<DecoratedRoof> {
        if decoration >= self.length() {
            return Err(Error::InvalidRoof(format!("decoration {decoration} out of range")));
        }
        Ok(DecoratedRoof { indices: self.indices, decoration })
    }
}

impl fmt::Display for Roof {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.indices.iter().map(usize::to_string).collect();
        write!(f, "({})", parts.join(" "))
    }
}

/// A roof with the segment `indices[decoration]..indices[decoration + 1]` marked.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DecoratedRoof {
    pub indices: Vec<usize>,
    pub decoration: usize,
}

impl DecoratedRoof {
    pub fn length(&self) -> usize {
        self.indices.len() - 1
    }

    pub fn roof(&self) -> Roof {
        Roof { indices: self.indices.clone() }
    }

    /// `d * 2^(n-1) + sum of 2^(i_k - 1)` over inner roof points.
    pub fn encode(&self, n: usize) -> RoofCode {
        let inner = &self.indices[1..self.indices.len() - 1];
        let mask: u64 = inner.iter().map(|&i| 1u64 << (i - 1)).sum();
        ((self.decoration as u64) << (n - 1)) | mask
    }

    /// Inverse of [`DecoratedRoof::encode`]; the decoration must index a segment.
    pub fn decode(code: RoofCode, n: usize) -> Result<Self> {
        let invalid = Error::InvalidRoofCode { code, points: n + 1 };
        if n == 0 || n > 62 {
            return Err(invalid);
        }
        let mask = code & ((1u64 << (n - 1)) - 1);
        let decoration = (code >> (n - 1)) as usize;
        if decoration > mask.count_ones() as usize {
            return Err(invalid);
        }
        let mut indices = Vec::with_capacity(mask.count_ones() as usize + 2);
        indices.push(0);
        indices.extend((0..n - 1).filter(|b| mask >> b & 1 == 1).map(|b| b + 1));
        indices.push(n);
        Ok(DecoratedRoof { indices, decoration })
    }
}

/// `(0 1 [3 6] 7 9 10 12)`
impl fmt::Display for DecoratedRoof {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = self.decoration;
        let mut parts = Vec::with_capacity(self.indices.len());
        for (k, i) in self.indices.iter().enumerate() {
            parts.push(match k {
                _ if k == d => format!("[{i}"),
                _ if k == d + 1 => format!("{i}]"),
                _ => i.to_string(),
            });
        }
        write!(f, "({})", parts.join(" "))
    }
}

/// `(n + 1) * 2^(n - 2)` decorated roofs over `n + 1` points, `n > 1`.
pub fn decorated_roof_count(n: usize) -> u64 {
    match n {
        0 => 0,
        1 => 1,
        _ => (n as u64 + 1) << (n - 2),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TriangleClass {
    Lambda,
    V,
    Degenerate,
}

/// Class of a sweep-ordered triple `a < b < c`: `Lambda` when `b` lies above
/// the chord `ac`.
pub fn triangle_class(host: &Configuration, a: usize, b: usize, c: usize) -> TriangleClass {
    match orient(host.point(a), host.point(c), host.point(b)) {
        Orientation::CounterClockwise => TriangleClass::Lambda,
        Orientation::Clockwise => TriangleClass::V,
        Orientation::Collinear => TriangleClass::Degenerate,
    }
}

/// No host point other than `a, b, c` (sweep-increasing) in the closed triangle.
pub fn is_minimal_triangle(host: &Configuration, a: usize, b: usize, c: usize) -> bool {
    let (pa, pb, pc) = (host.point(a), host.point(b), host.point(c));
    (a + 1..c).all(|i| i == b || !in_closed_triangle(pa, pb, pc, host.point(i)))
}

/// Which triangles a successor step may glue.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StepMode {
    All,
    Immediate,
}

/// `p` lies on the segment `a..b`, `a < p < b` in sweep order.
fn between_on_line(host: &Configuration, a: usize, b: usize, p: usize) -> bool {
    a < p && p < b && orient(host.point(a), host.point(b), host.point(p)) == Orientation::Collinear
}

/// A closed region between two roofs of one host.
#[derive(Clone, Debug)]
pub struct Bounds {
    floor: Vec<usize>,
    ceiling: Vec<usize>,
    allowed: Vec<bool>,
    on_floor: Vec<bool>,
    on_ceiling: Vec<bool>,
}

/// Where a point sits relative to a skyline.
fn skyline_side(host: &Configuration, path: &[usize], p: usize) -> Orientation {
    let k = path.partition_point(|&v| v < p);
    if k < path.len() && path[k] == p {
        return Orientation::Collinear;
    }
    orient(host.point(path[k - 1]), host.point(path[k]), host.point(p))
}

impl Bounds {
    /// The region between the lower and upper hull.
    pub fn hull(host: &Configuration) -> Bounds {
        let floor = host.lower_hull().to_vec();
        let ceiling = host.upper_hull().to_vec();
        Bounds::build(host, floor, ceiling)
    }

    /// The region between two roofs; fails when the skylines cross.
    pub fn region(host: &Configuration, floor: &Roof, ceiling: &Roof) -> Result<Bounds> {
        let n = host.len() - 1;
        for r in [floor, ceiling] {
            Roof::new(r.indices.clone(), n)?;
        }
        let below = floor.indices.iter().all(|&p| skyline_side(host, &ceiling.indices, p) != Orientation::CounterClockwise);
        let above = ceiling.indices.iter().all(|&p| skyline_side(host, &floor.indices, p) != Orientation::Clockwise);
        if !(below && above) {
            return Err(Error::CrossingSkylines);
        }
        Ok(Bounds::build(host, floor.indices.clone(), ceiling.indices.clone()))
    }

    fn build(host: &Configuration, floor: Vec<usize>, ceiling: Vec<usize>) -> Bounds {
        let n = host.len();
        let mut allowed = vec![false; n];
        let mut on_floor = vec![false; n];
        let mut on_ceiling = vec![false; n];
        for p in 0..n {
            let f = skyline_side(host, &floor, p);
            let c = skyline_side(host, &ceiling, p);
            on_floor[p] = f == Orientation::Collinear;
            on_ceiling[p] = c == Orientation::Collinear;
            allowed[p] = f != Orientation::Clockwise && c != Orientation::CounterClockwise;
        }
        Bounds { floor, ceiling, allowed, on_floor, on_ceiling }
    }

    pub fn floor(&self) -> &[usize] {
        &self.floor
    }

    pub fn ceiling(&self) -> &[usize] {
        &self.ceiling
    }

    pub fn allowed(&self, p: usize) -> bool {
        self.allowed[p]
    }

    pub fn on_floor(&self, p: usize) -> bool {
        self.on_floor[p]
    }

    pub fn on_ceiling(&self, p: usize) -> bool {
        self.on_ceiling[p]
    }

    /// Host points on the floor path; the full initial roof.
    pub fn floor_points(&self) -> Vec<usize> {
        (0..self.on_floor.len()).filter(|&p| self.on_floor[p]).collect()
    }

    /// Host points on the ceiling path.
    pub fn ceiling_points(&self) -> Vec<usize> {
        (0..self.on_ceiling.len()).filter(|&p| self.on_ceiling[p]).collect()
    }

    /// Segment `a..b` between region points stays on or below the ceiling.
    fn under_ceiling(&self, host: &Configuration, a: usize, b: usize) -> bool {
        let lo = self.ceiling.partition_point(|&v| v <= a);
        self.ceiling[lo..]
            .iter()
            .take_while(|&&v| v < b)
            .all(|&v| orient(host.point(a), host.point(b), host.point(v)) != Orientation::Clockwise)
    }

    /// Segment `a..b` is part of the ceiling path.
    pub fn along_ceiling(&self, host: &Configuration, a: usize, b: usize) -> bool {
        if !(self.on_ceiling[a] && self.on_ceiling[b]) {
            return false;
        }
        let lo = self.ceiling.partition_point(|&v| v <= a);
        self.ceiling[lo..].iter().take_while(|&&v| v < b).all(|&v| between_on_line(host, a, b, v))
    }

    /// Roof points trace exactly the ceiling path.
    pub fn matches_ceiling(&self, host: &Configuration, indices: &[usize]) -> bool {
        indices.windows(2).all(|w| self.along_ceiling(host, w[0], w[1]))
    }

    /// Floor corners: floor roof points where the path turns, plus its ends.
    pub fn floor_corners(&self, host: &Configuration) -> Vec<usize> {
        let f = &self.floor;
        let mut out = vec![f[0]];
        for w in f.windows(3) {
            if orient(host.point(w[0]), host.point(w[1]), host.point(w[2])) != Orientation::Collinear {
                out.push(w[1]);
            }
        }
        out.push(f[f.len() - 1]);
        out
    }
}

/// Successor generation over a fixed host and region.
#[derive(Clone, Debug)]
pub struct RoofSystem<'a> {
    host: &'a Configuration,
    bounds: Bounds,
    n: usize,
    minimal: Vec<bool>,
}

impl<'a> RoofSystem<'a> {
    pub fn new(host: &'a Configuration, bounds: Bounds) -> Self {
        let len = host.len();
        let mut minimal = vec![false; len * len * len];
        for a in 0..len {
            for b in a + 1..len {
                for c in b + 1..len {
                    minimal[(a * len + b) * len + c] = is_minimal_triangle(host, a, b, c);
                }
            }
        }
        RoofSystem { host, bounds, n: len - 1, minimal }
    }

    pub fn hull(host: &'a Configuration) -> Self {
        Self::new(host, Bounds::hull(host))
    }

    pub fn host(&self) -> &Configuration {
        self.host
    }

    pub fn bounds(&self) -> &Bounds {
        &self.bounds
    }

    /// Index of the last host point.
    pub fn n(&self) -> usize {
        self.n
    }

    fn is_minimal(&self, a: usize, b: usize, c: usize) -> bool {
        let len = self.n + 1;
        self.minimal[(a * len + b) * len + c]
    }

    pub fn encode(&self, r: &DecoratedRoof) -> RoofCode {
        r.encode(self.n)
    }

    pub fn decode(&self, code: RoofCode) -> DecoratedRoof {
        DecoratedRoof::decode(code, self.n).expect("codes in roof vectors are valid")
    }

    /// Lambda- then V-successors, in segment order.
    pub fn successors(&self, r: &DecoratedRoof, mode: StepMode) -> Vec<DecoratedRoof> {
        let host = self.host;
        let idx = &r.indices;
        let d = r.decoration;
        let mut out = Vec::new();
        for k in d..idx.len() - 1 {
            let (a, c) = (idx[k], idx[k + 1]);
            for q in a + 1..c {
                if !self.bounds.allowed[q] || triangle_class(host, a, q, c) != TriangleClass::Lambda {
                    continue;
                }
                if mode == StepMode::Immediate && !self.is_minimal(a, q, c) {
                    continue;
                }
                if !(self.bounds.under_ceiling(host, a, q) && self.bounds.under_ceiling(host, q, c)) {
                    continue;
                }
                let mut indices = idx.clone();
                indices.insert(k + 1, q);
                out.push(DecoratedRoof { indices, decoration: k });
            }
        }
        for k in d.saturating_sub(1)..idx.len().saturating_sub(2) {
            let (a, b, c) = (idx[k], idx[k + 1], idx[k + 2]);
            if triangle_class(host, a, b, c) != TriangleClass::V {
                continue;
            }
            if mode == StepMode::Immediate && !self.is_minimal(a, b, c) {
                continue;
            }
            if !self.bounds.under_ceiling(host, a, c) {
                continue;
            }
            let mut indices = idx.clone();
            indices.remove(k + 1);
            out.push(DecoratedRoof { indices, decoration: k });
        }
        out
    }

    /// The prefix up to the last ceiling point at or left of the decoration
    /// can no longer move; it must already run along the ceiling.
    pub fn is_dead_end(&self, r: &DecoratedRoof) -> bool {
        let idx = &r.indices;
        let Some(k) = (0..=r.decoration).rev().find(|&k| self.bounds.on_ceiling[idx[k]]) else {
            return false;
        };
        !self.bounds.matches_ceiling(self.host, &idx[..=k])
    }

    /// Decorated-at-zero roofs tracing the floor path, by length.
    pub fn initial_roofs(&self) -> Vec<DecoratedRoof> {
        let corners = self.bounds.floor_corners(self.host);
        let optional: Vec<usize> = self
            .bounds
            .floor_points()
            .into_iter()
            .filter(|p| corners.binary_search(p).is_err())
            .collect();
        let mut out = Vec::with_capacity(1 << optional.len());
        for mask in 0u64..1 << optional.len() {
            let mut indices = corners.clone();
            indices.extend(optional.iter().enumerate().filter(|(b, _)| mask >> b & 1 == 1).map(|(_, &p)| p));
            indices.sort_unstable();
            out.push(DecoratedRoof { indices, decoration: 0 });
        }
        out
    }
}

/// Sweep-ordered successors within the hull.
pub fn successors(host: &Configuration, r: &DecoratedRoof, mode: StepMode) -> Vec<DecoratedRoof> {
    RoofSystem::hull(host).successors(r, mode)
}

/// Every point of `e` is on `r` or strictly below its skyline.
pub fn is_covering(e: &NearEdge, r: &Roof) -> bool {
    let pts = e.points();
    r.indices.windows(2).all(|w| {
        (w[0] + 1..w[1]).all(|i| orient(pts[w[0]], pts[w[1]], pts[i]) == Orientation::Clockwise)
    })
}

/// All covering roofs of `e`, depth first in lexicographic index order.
pub fn covering_roofs(e: &NearEdge) -> Vec<Roof> {
    fn extend(pts: &[crate::planar::Point], path: &mut Vec<usize>, out: &mut Vec<Roof>) {
        let a = *path.last().unwrap();
        let n = pts.len() - 1;
        for b in a + 1..=n {
            // every bypassed point must stay strictly below the new segment
            if (a + 1..b).all(|i| orient(pts[a], pts[b], pts[i]) == Orientation::Clockwise) {
                path.push(b);
                if b == n {
                    out.push(Roof { indices: path.clone() });
                } else {
                    extend(pts, path, out);
                }
                path.pop();
            }
        }
    }
    let mut out = Vec::new();
    extend(e.points(), &mut vec![0], &mut out);
    out
}

/// Index sets of the sub-edges of `e`: sub-sequences containing `V_-(e)`
/// with the same lower hull corners.
pub fn sub_edges(e: &NearEdge) -> Vec<Vec<usize>> {
    let lower = e.lower_vertices();
    let optional: Vec<usize> = (0..=e.segments()).filter(|i| lower.binary_search(i).is_err()).collect();
    let mut out = Vec::new();
    for mask in 0u64..1 << optional.len() {
        let mut indices = lower.to_vec();
        indices.extend(optional.iter().enumerate().filter(|(b, _)| mask >> b & 1 == 1).map(|(_, &p)| p));
        indices.sort_unstable();
        let sub = e.subsequence(&indices);
        let mapped: Vec<usize> = sub.lower_vertices().iter().map(|&k| indices[k]).collect();
        if mapped == lower {
            out.push(indices);
        }
    }
    out
}
