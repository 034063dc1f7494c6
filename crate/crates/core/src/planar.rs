//! Exact planar predicates, hulls and near-edges.
//!
//! Points are ordered by the sweep order: increasing `x`, and for equal `x`
//! decreasing `y`. This is lexicographic order after an infinitesimal
//! rotation, so monotone-chain hulls work unchanged on sweep-sorted input.

use std::cmp::Ordering;
use std::fmt;
use std::fs;
use std::path::Path;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Point {
    pub x: i64,
    pub y: i64,
}

impl Point {
    pub const fn new(x: i64, y: i64) -> Self {
        Point { x, y }
    }
}

impl Ord for Point {
    fn cmp(&self, other: &Self) -> Ordering {
        sweep_compare(*self, *other)
    }
}

impl PartialOrd for Point {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

pub fn sweep_compare(p: Point, q: Point) -> Ordering {
    p.x.cmp(&q.x).then(q.y.cmp(&p.y))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Orientation {
    Clockwise,
    Collinear,
    CounterClockwise,
}

impl Orientation {
    pub fn sign(self) -> i8 {
        match self {
            Orientation::Clockwise => -1,
            Orientation::Collinear => 0,
            Orientation::CounterClockwise => 1,
        }
    }
}

/// `det(b - a, c - a)`, exact.
pub fn det(a: Point, b: Point, c: Point) -> i128 {
    let (ux, uy) = (i128::from(b.x) - i128::from(a.x), i128::from(b.y) - i128::from(a.y));
    let (vx, vy) = (i128::from(c.x) - i128::from(a.x), i128::from(c.y) - i128::from(a.y));
    ux * vy - uy * vx
}

pub fn orient(a: Point, b: Point, c: Point) -> Orientation {
    match det(a, b, c).cmp(&0) {
        Ordering::Less => Orientation::Clockwise,
        Ordering::Equal => Orientation::Collinear,
        Ordering::Greater => Orientation::CounterClockwise,
    }
}

/// Closed-triangle membership; the triangle must be non-degenerate.
pub fn in_closed_triangle(a: Point, b: Point, c: Point, p: Point) -> bool {
    let d1 = det(a, b, p).signum();
    let d2 = det(b, c, p).signum();
    let d3 = det(c, a, p).signum();
    (d1 >= 0 && d2 >= 0 && d3 >= 0) || (d1 <= 0 && d2 <= 0 && d3 <= 0)
}

/// Corners of the lower and upper hull chains of sweep-sorted points, as
/// indices. Collinear points are not corners.
fn hull_chains(points: &[Point]) -> (Vec<usize>, Vec<usize>) {
    let chain = |keep: Orientation| {
        let mut h: Vec<usize> = Vec::with_capacity(points.len());
        for (i, &p) in points.iter().enumerate() {
            while h.len() >= 2 && orient(points[h[h.len() - 2]], points[h[h.len() - 1]], p) != keep {
                h.pop();
            }
            h.push(i);
        }
        h
    };
    (chain(Orientation::CounterClockwise), chain(Orientation::Clockwise))
}

/// `p` lies on the path through `path` (indices into `points`, sweep-increasing).
fn on_path(points: &[Point], path: &[usize], p: usize) -> bool {
    path.windows(2).any(|w| {
        (w[0] <= p && p <= w[1]) && orient(points[w[0]], points[w[1]], points[p]) == Orientation::Collinear
    })
}

/// A finite point set kept in sweep order, with its hulls.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Configuration {
    points: Vec<Point>,
    lower: Vec<usize>,
    upper: Vec<usize>,
}

impl Configuration {
    /// Sorts `points` into sweep order; rejects duplicates.
    pub fn new(mut points: Vec<Point>) -> Result<Self> {
        points.sort();
        if let Some(w) = points.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicatePoint { x: w[0].x, y: w[0].y });
        }
        let (lower, upper) = hull_chains(&points);
        Ok(Configuration { points, lower, upper })
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn point(&self, i: usize) -> Point {
        self.points[i]
    }

    pub fn index_of(&self, p: Point) -> Option<usize> {
        self.points.binary_search(&p).ok()
    }

    /// Corner indices of the lower hull, first to last point.
    pub fn lower_hull(&self) -> &[usize] {
        &self.lower
    }

    /// Corner indices of the upper hull, first to last point.
    pub fn upper_hull(&self) -> &[usize] {
        &self.upper
    }

    /// Hull corners, sorted.
    pub fn extremal(&self) -> Vec<usize> {
        let mut e: Vec<usize> = self.lower.iter().chain(&self.upper).copied().collect();
        e.sort_unstable();
        e.dedup();
        e
    }

    /// Every point lying on the lower hull path, corners included.
    pub fn lower_path_points(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| on_path(&self.points, &self.lower, i)).collect()
    }

    /// Every point lying on the upper hull path, corners included.
    pub fn upper_path_points(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| on_path(&self.points, &self.upper, i)).collect()
    }

    pub fn is_collinear(&self) -> bool {
        self.points.len() < 3 || self.lower == self.upper
    }

    /// Twice the hull area.
    pub fn doubled_hull_area(&self) -> i128 {
        let ring: Vec<Point> = self
            .lower
            .iter()
            .chain(self.upper.iter().rev().skip(1))
            .map(|&i| self.points[i])
            .collect();
        shoelace(&ring)
    }
}

/// Twice the signed area of a closed ring (last vertex joins the first).
pub fn shoelace(ring: &[Point]) -> i128 {
    let n = ring.len();
    (0..n)
        .map(|i| {
            let (p, q) = (ring[i], ring[(i + 1) % n]);
            i128::from(p.x) * i128::from(q.y) - i128::from(q.x) * i128::from(p.y)
        })
        .sum()
}

/// Index-aligned order-type comparison of two labeled point lists.
pub fn same_order_type(a: &[Point], b: &[Point]) -> Result<bool> {
    if a.len() != b.len() {
        return Err(Error::SizeMismatch { left: a.len(), right: b.len() });
    }
    let n = a.len();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                if orient(a[i], a[j], a[k]) != orient(b[i], b[j], b[k]) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

pub fn order_type_equivalent(c1: &Configuration, c2: &Configuration) -> Result<bool> {
    same_order_type(&c1.points, &c2.points)
}

/// Position of the middle point of a sweep-ordered triple `a < b < c`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Bend {
    Up,
    Down,
}

impl Bend {
    pub fn sign(self) -> i8 {
        match self {
            Bend::Up => 1,
            Bend::Down => -1,
        }
    }

    pub fn from_sign(s: i64) -> Result<Self> {
        match s {
            1 => Ok(Bend::Up),
            -1 => Ok(Bend::Down),
            _ => Err(Error::InvalidArgument(format!("bend sign must be +1 or -1, got {s}"))),
        }
    }
}

/// An x-monotone point sequence `P_0, ..., P_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NearEdge {
    points: Vec<Point>,
    lower: Vec<usize>,
}

impl NearEdge {
    pub fn new(points: Vec<Point>) -> Result<Self> {
        if points.len() < 2 {
            return Err(Error::InvalidArgument("a near-edge needs at least two points".into()));
        }
        for (i, w) in points.windows(2).enumerate() {
            if w[0] == w[1] {
                return Err(Error::DuplicatePoint { x: w[0].x, y: w[0].y });
            }
            if w[0].x >= w[1].x {
                return Err(Error::NonIncreasingX { index: i + 1 });
            }
        }
        let (lower, _) = hull_chains(&points);
        Ok(NearEdge { points, lower })
    }

    /// `(0, y_0), (1, y_1), ...`
    pub fn from_heights(ys: &[i64]) -> Result<Self> {
        Self::new(ys.iter().enumerate().map(|(i, &y)| Point::new(i as i64, y)).collect())
    }

    /// The convex near-edge with points `(i, e_i * i * (n - i))`.
    pub fn from_profile(bends: &[Bend]) -> Result<Self> {
        let n = bends.len() as i64 + 1;
        let mut ys = vec![0];
        ys.extend(bends.iter().enumerate().map(|(k, b)| {
            let i = k as i64 + 1;
            i64::from(b.sign()) * i * (n - i)
        }));
        ys.push(0);
        Self::from_heights(&ys)
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    /// Number of segments `n`.
    pub fn segments(&self) -> usize {
        self.points.len() - 1
    }

    /// Lower hull corners `V_-(E)` as indices.
    pub fn lower_vertices(&self) -> &[usize] {
        &self.lower
    }

    pub fn to_configuration(&self) -> Configuration {
        Configuration::new(self.points.clone()).expect("near-edge points are distinct")
    }

    /// The sub-sequence at `indices` (increasing).
    pub fn subsequence(&self, indices: &[usize]) -> NearEdge {
        NearEdge::new(indices.iter().map(|&i| self.points[i]).collect()).expect("sub-sequence of a near-edge")
    }

    pub fn translated_to_origin(&self) -> NearEdge {
        let o = self.points[0];
        let points = self.points.iter().map(|p| Point::new(p.x - o.x, p.y - o.y)).collect();
        NearEdge { points, lower: self.lower.clone() }
    }

    /// `P'_i = (x_0 + x_n - x_{n-i}, y_{n-i})`.
    pub fn vertical_mirror(&self) -> NearEdge {
        let x0 = self.points[0].x;
        let xn = self.points[self.points.len() - 1].x;
        let points = self.points.iter().rev().map(|p| Point::new(x0 + xn - p.x, p.y)).collect();
        NearEdge::new(points).expect("mirror of a near-edge")
    }

    /// `p` lies strictly above every line through two points of `range`.
    fn above_all_lines(&self, range: std::ops::RangeInclusive<usize>, p: Point) -> bool {
        let pts = &self.points[range];
        (0..pts.len()).all(|i| (i + 1..pts.len()).all(|j| orient(pts[i], pts[j], p) == Orientation::CounterClockwise))
    }

    fn splits_at(&self, k: usize) -> bool {
        let n = self.segments();
        (k + 1..=n).all(|i| self.above_all_lines(0..=k, self.points[i]))
            && (0..k).all(|i| self.above_all_lines(k..=n, self.points[i]))
    }

    /// Prime factors, left to right, each translated to the origin.
    pub fn factorize(&self) -> Vec<NearEdge> {
        let n = self.segments();
        let split = self.lower.iter().copied().find(|&k| 0 < k && k < n && self.splits_at(k));
        match split {
            None => vec![self.translated_to_origin()],
            Some(k) => {
                let left = NearEdge::new(self.points[..=k].to_vec()).expect("prefix of a near-edge");
                let right = NearEdge::new(self.points[k..].to_vec()).expect("suffix of a near-edge");
                let mut out = left.factorize();
                out.extend(right.factorize());
                out
            }
        }
    }

    /// `(e_1, ..., e_{n-1})` when every point is extremal, `e_i` recording
    /// whether `P_i` lies above the chord `P_0 P_n`.
    pub fn convex_profile(&self) -> Option<Vec<Bend>> {
        let config = self.to_configuration();
        if config.extremal().len() != self.points.len() {
            return None;
        }
        let (first, last) = (self.points[0], self.points[self.segments()]);
        let inner = &self.points[1..self.segments()];
        Some(
            inner
                .iter()
                .map(|&p| match orient(first, last, p) {
                    Orientation::CounterClockwise => Bend::Up,
                    _ => Bend::Down,
                })
                .collect(),
        )
    }
}

/// Parses `x y` lines; `#` starts a comment.
pub fn parse_points(text: &str) -> Result<Vec<Point>> {
    let mut out = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let bad = |message: String| Error::Parse { line: lineno + 1, message };
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() != 2 {
            return Err(bad(format!("expected `x y`, got `{line}`")));
        }
        let coord = |s: &str| s.parse::<i64>().map_err(|e| bad(format!("`{s}`: {e}")));
        out.push(Point::new(coord(fields[0])?, coord(fields[1])?));
    }
    Ok(out)
}

pub fn read_points(path: &Path) -> Result<Vec<Point>> {
    let text = fs::read_to_string(path)
        .map_err(|e| Error::Io { path: path.display().to_string(), message: e.to_string() })?;
    parse_points(&text).map_err(|e| match e {
        Error::Parse { line, message } => {
            Error::Parse { line, message: format!("{}: {message}", path.display()) }
        }
        other => other,
    })
}

pub fn format_points(points: &[Point]) -> String {
    points.iter().map(|p| format!("{} {}\n", p.x, p.y)).collect()
}

/// Vertices of a strictly convex, counter-clockwise `l`-gon near a circle of
/// the given radius, rounded to integers.
pub fn rounded_regular_polygon(l: usize, radius: i64) -> Result<Vec<Point>> {
    if l < 3 {
        return Err(Error::InvalidArgument(format!("a convex polygon needs 3 or more vertices, got {l}")));
    }
    let r = radius as f64;
    let v: Vec<Point> = (0..l)
        .map(|i| {
            let a = std::f64::consts::TAU * i as f64 / l as f64;
            Point::new((r * a.cos()).round() as i64, (r * a.sin()).round() as i64)
        })
        .collect();
    let convex = (0..l).all(|i| orient(v[i], v[(i + 1) % l], v[(i + 2) % l]) == Orientation::CounterClockwise);
    if !convex {
        return Err(Error::InvalidArgument(format!("radius {radius} is too small for a convex {l}-gon")));
    }
    Ok(v)
}
