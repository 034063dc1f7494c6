//! Brute-force triangulation enumerator, independent of the roof machinery.
//!
//! For each admissible vertex set `S`, triangles are glued one at a time onto
//! the smallest open side of the current front until no open side remains.
//! Each triangulation is produced exactly once because the triangle on a given
//! side of a given edge is unique.

use std::collections::BTreeMap;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::exactmath::{PolyS, SExp};
use crate::planar::{det, in_closed_triangle, orient, shoelace, Configuration, Orientation, Point};
use crate::roofs::Roof;

pub const DEFAULT_GUARD: usize = 12;

/// A triangulation: index triples into the host, each sorted.
pub type TrianglePacking = Vec<[usize; 3]>;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Side {
    Open,
    Closed,
    Absent,
}

/// Two sides per edge: index 0 is the side where `orient(a, b, c) > 0`.
type Front = BTreeMap<(usize, usize), [Side; 2]>;

fn side_of(pts: &[Point], a: usize, b: usize, c: usize) -> usize {
    usize::from(orient(pts[a], pts[b], pts[c]) != Orientation::CounterClockwise)
}

/// Position of `p` relative to a sweep-ordered path: `Greater` above.
fn path_side(pts: &[Point], path: &[usize], p: usize) -> Orientation {
    if path.contains(&p) {
        return Orientation::Collinear;
    }
    let k = path.iter().position(|&v| v > p).expect("path ends at the last point");
    orient(pts[path[k - 1]], pts[path[k]], pts[p])
}

fn turns(pts: &[Point], path: &[usize]) -> Vec<usize> {
    let mut out = vec![path[0]];
    out.extend(
        path.windows(3)
            .filter(|w| orient(pts[w[0]], pts[w[1]], pts[w[2]]) != Orientation::Collinear)
            .map(|w| w[1]),
    );
    out.push(path[path.len() - 1]);
    out
}

/// Interiors of two non-degenerate triangles are disjoint iff some edge line
/// weakly separates them.
fn interiors_disjoint(a: [Point; 3], b: [Point; 3]) -> bool {
    let separates = |t: [Point; 3], u: [Point; 3]| {
        (0..3).any(|i| {
            let (p, q, r) = (t[i], t[(i + 1) % 3], t[(i + 2) % 3]);
            let inner = det(p, q, r).signum();
            u.iter().all(|&x| det(p, q, x).signum() * inner <= 0)
        })
    };
    separates(a, b) || separates(b, a)
}

/// Segment `p..q` meets the open interior of the triangle.
fn crosses_interior(tri: [Point; 3], p: Point, q: Point) -> bool {
    for i in 0..3 {
        let (u, v, w) = (tri[i], tri[(i + 1) % 3], tri[(i + 2) % 3]);
        let inner = det(u, v, w).signum();
        if det(u, v, p).signum() * inner <= 0 && det(u, v, q).signum() * inner <= 0 {
            return false;
        }
    }
    let s1 = det(p, q, tri[0]).signum();
    let s2 = det(p, q, tri[1]).signum();
    let s3 = det(p, q, tri[2]).signum();
    !(s1 >= 0 && s2 >= 0 && s3 >= 0 || s1 <= 0 && s2 <= 0 && s3 <= 0)
}

struct Search<'a> {
    pts: &'a [Point],
    members: Vec<usize>,
    boundary: Vec<(usize, usize)>,
    region_area: i128,
    triangles: TrianglePacking,
    visit: &'a mut dyn FnMut(&[usize], &[[usize; 3]]),
    count: u64,
}

impl Search<'_> {
    fn admissible(&self, t: [usize; 3]) -> bool {
        let [a, b, c] = t.map(|i| self.pts[i]);
        if self.members.iter().any(|&m| !t.contains(&m) && in_closed_triangle(a, b, c, self.pts[m])) {
            return false;
        }
        if self
            .boundary
            .iter()
            .any(|&(p, q)| crosses_interior([a, b, c], self.pts[p], self.pts[q]))
        {
            return false;
        }
        self.triangles.iter().all(|u| interiors_disjoint([a, b, c], u.map(|i| self.pts[i])))
    }

    fn run(&mut self, front: &mut Front) {
        let open = front
            .iter()
            .find_map(|(&e, s)| s.iter().position(|&x| x == Side::Open).map(|k| (e, k)));
        let Some(((a, b), side)) = open else {
            let area: i128 = self
                .triangles
                .iter()
                .map(|t| det(self.pts[t[0]], self.pts[t[1]], self.pts[t[2]]).abs())
                .sum();
            assert_eq!(area, self.region_area, "packing must cover the region exactly");
            self.count += 1;
            (self.visit)(&self.members, &self.triangles);
            return;
        };
        for ci in 0..self.members.len() {
            let c = self.members[ci];
            if c == a || c == b || orient(self.pts[a], self.pts[b], self.pts[c]) == Orientation::Collinear {
                continue;
            }
            if side_of(self.pts, a, b, c) != side {
                continue;
            }
            let mut t = [a, b, c];
            t.sort_unstable();
            if !self.admissible(t) {
                continue;
            }
            let saved = front.clone();
            let mut ok = true;
            for (p, q, r) in [(t[0], t[1], t[2]), (t[0], t[2], t[1]), (t[1], t[2], t[0])] {
                let k = side_of(self.pts, p, q, r);
                let entry = front.entry((p, q)).or_insert([Side::Absent; 2]);
                match entry[k] {
                    Side::Closed => {
                        ok = false;
                        break;
                    }
                    Side::Open => entry[k] = Side::Closed,
                    Side::Absent => {
                        entry[k] = Side::Closed;
                        if entry[1 - k] == Side::Absent {
                            entry[1 - k] = Side::Open;
                        }
                    }
                }
            }
            if ok {
                self.triangles.push(t);
                self.run(front);
                self.triangles.pop();
            }
            *front = saved;
        }
    }
}

fn check_guard(host: &Configuration, guard: usize) -> Result<()> {
    if host.len() > guard {
        return Err(Error::GuardExceeded { points: host.len(), guard });
    }
    Ok(())
}

/// Calls `visit(S, triangles)` for every triangulation of the closed region
/// between two roofs; returns the number of triangulations by `|S|`.
pub fn oracle_region_visit(
    host: &Configuration,
    floor: &Roof,
    ceiling: &Roof,
    guard: usize,
    visit: &mut dyn FnMut(&[usize], &[[usize; 3]]),
) -> Result<PolyS> {
    check_guard(host, guard)?;
    let pts = host.points();
    let n = pts.len() - 1;
    let (lo, hi) = (floor.indices(), ceiling.indices());
    if lo[lo.len() - 1] != n || hi[hi.len() - 1] != n {
        return Err(Error::InvalidRoof("roofs must end at the last host point".into()));
    }
    let crossing = lo.iter().any(|&p| path_side(pts, hi, p) == Orientation::CounterClockwise)
        || hi.iter().any(|&p| path_side(pts, lo, p) == Orientation::Clockwise);
    if crossing {
        return Err(Error::CrossingSkylines);
    }
    let ring: Vec<Point> = lo.iter().chain(hi.iter().rev().skip(1)).map(|&i| pts[i]).collect();
    let region_area = shoelace(&ring).abs();
    if region_area == 0 {
        return Ok(PolyS::one());
    }
    let on_lo: Vec<bool> = (0..=n).map(|p| path_side(pts, lo, p) == Orientation::Collinear).collect();
    let on_hi: Vec<bool> = (0..=n).map(|p| path_side(pts, hi, p) == Orientation::Collinear).collect();
    let allowed: Vec<usize> = (0..=n)
        .filter(|&p| {
            path_side(pts, lo, p) != Orientation::Clockwise && path_side(pts, hi, p) != Orientation::CounterClockwise
        })
        .collect();
    let mut required = turns(pts, lo);
    required.extend(turns(pts, hi));
    required.sort_unstable();
    required.dedup();
    let optional: Vec<usize> = allowed.iter().copied().filter(|p| required.binary_search(p).is_err()).collect();

    let mut tally: BTreeMap<u32, BigInt> = BTreeMap::new();
    for mask in 0u64..1 << optional.len() {
        let mut members = required.clone();
        members.extend(optional.iter().enumerate().filter(|(b, _)| mask >> b & 1 == 1).map(|(_, &p)| p));
        members.sort_unstable();
        let edges = |on: &[bool]| -> Vec<(usize, usize)> {
            let path: Vec<usize> = members.iter().copied().filter(|&p| on[p]).collect();
            path.windows(2).map(|w| (w[0], w[1])).collect()
        };
        let (lo_edges, hi_edges) = (edges(&on_lo), edges(&on_hi));
        let mut front = Front::new();
        for &e in &lo_edges {
            let shared = hi_edges.contains(&e);
            front.insert(e, [if shared { Side::Closed } else { Side::Open }, Side::Closed]);
        }
        for &e in &hi_edges {
            front.entry(e).or_insert([Side::Closed, Side::Open]);
        }
        let boundary: Vec<(usize, usize)> = front.keys().copied().collect();
        let mut search = Search {
            pts,
            members: members.clone(),
            boundary,
            region_area,
            triangles: Vec::new(),
            visit: &mut *visit,
            count: 0,
        };
        search.run(&mut front);
        if search.count > 0 {
            *tally.entry(members.len() as u32).or_default() += search.count;
        }
    }
    let mut out = PolyS::zero();
    for (k, c) in tally {
        out.add_term(SExp(k), c);
    }
    Ok(out)
}

pub fn oracle_region_poly(host: &Configuration, floor: &Roof, ceiling: &Roof, guard: usize) -> Result<PolyS> {
    oracle_region_visit(host, floor, ceiling, guard, &mut |_, _| {})
}

fn hull_roofs(host: &Configuration) -> Result<(Roof, Roof)> {
    if host.is_collinear() {
        return Err(Error::Collinear);
    }
    let n = host.len() - 1;
    Ok((Roof::new(host.lower_path_points(), n)?, Roof::new(host.upper_path_points(), n)?))
}

/// Complete triangulation polynomial of the whole configuration.
pub fn oracle_complete_poly(host: &Configuration, guard: usize) -> Result<PolyS> {
    check_guard(host, guard)?;
    let (floor, ceiling) = hull_roofs(host)?;
    oracle_region_poly(host, &floor, &ceiling, guard)
}

pub fn oracle_complete_visit(
    host: &Configuration,
    guard: usize,
    visit: &mut dyn FnMut(&[usize], &[[usize; 3]]),
) -> Result<PolyS> {
    check_guard(host, guard)?;
    let (floor, ceiling) = hull_roofs(host)?;
    oracle_region_visit(host, &floor, &ceiling, guard, visit)
}
