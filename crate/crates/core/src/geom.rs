//! Exact planar primitives on bounded integer coordinates.
//!
//! Every predicate here is exact: coordinates are integers bounded by
//! [`MAX_COORD`], and all determinant arithmetic runs in `i128`, which cannot
//! overflow for such inputs. There is no floating point anywhere in a
//! predicate, and no epsilon. Collinear or degenerate configurations are
//! rejected with an error rather than resolved by a tie-break.

use crate::error::{Error, Result};

/// Largest coordinate magnitude accepted by the predicates (2^24).
///
/// With |x|, |y| <= 2^24 every orientation determinant is bounded by
/// 2 * (2^25)^2 = 2^51, far inside `i128` (and in fact inside `i64`;
/// the headroom is deliberate).
pub const MAX_COORD: i64 = 1 << 24;

/// A point with exact integer coordinates.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Point {
    pub x: i64,
    pub y: i64,
}

impl Point {
    pub const fn new(x: i64, y: i64) -> Self {
        Point { x, y }
    }

    /// Whether both coordinates are within ±[`MAX_COORD`].
    pub fn in_range(self) -> bool {
        self.x.abs() <= MAX_COORD && self.y.abs() <= MAX_COORD
    }
}

/// Sign of the signed area of an ordered point triple.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Orientation {
    Clockwise,
    Collinear,
    CounterClockwise,
}

impl Orientation {
    /// -1, 0, +1 for clockwise, collinear, counterclockwise.
    pub fn sign(self) -> i8 {
        match self {
            Orientation::Clockwise => -1,
            Orientation::Collinear => 0,
            Orientation::CounterClockwise => 1,
        }
    }
}

/// Orientation of the triple (p, q, r), checking coordinate bounds.
pub fn orient(p: Point, q: Point, r: Point) -> Result<Orientation> {
    for t in [p, q, r] {
        if !t.in_range() {
            return Err(Error::InputOutOfRange { x: t.x, y: t.y, max: MAX_COORD });
        }
    }
    Ok(orient_unchecked(p, q, r))
}

/// Orientation without the range check; callers must have validated bounds
/// (e.g. via [`PointSet::new`]). Exact in `i128`.
pub(crate) fn orient_unchecked(p: Point, q: Point, r: Point) -> Orientation {
    let det = (q.x - p.x) as i128 * (r.y - p.y) as i128
        - (q.y - p.y) as i128 * (r.x - p.x) as i128;
    match det.cmp(&0) {
        std::cmp::Ordering::Less => Orientation::Clockwise,
        std::cmp::Ordering::Equal => Orientation::Collinear,
        std::cmp::Ordering::Greater => Orientation::CounterClockwise,
    }
}

/// A closed segment with distinct endpoints.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Segment {
    pub a: Point,
    pub b: Point,
}

impl Segment {
    pub fn new(a: Point, b: Point) -> Result<Self> {
        if a == b {
            return Err(Error::DegenerateSegment);
        }
        Ok(Segment { a, b })
    }
}

/// How two segments in general position relate.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum SegmentRelation {
    /// No common point.
    Disjoint,
    /// Exactly one shared endpoint, no other common point.
    SharedEndpoint,
    /// A proper interior crossing.
    Crossing,
}

impl SegmentRelation {
    /// Whether the two segments meet at all (shared endpoint or crossing).
    pub fn intersects(self) -> bool {
        !matches!(self, SegmentRelation::Disjoint)
    }
}

/// Exact relation of two segments whose endpoints are in general position.
///
/// Any collinear triple among the four endpoints (including overlapping
/// collinear segments and duplicated segments) is rejected with
/// [`Error::GeneralPositionViolated`]: degenerate inputs are refused, not
/// resolved.
pub fn segments_intersect(s: Segment, t: Segment) -> Result<SegmentRelation> {
    for p in [s.a, s.b, t.a, t.b] {
        if !p.in_range() {
            return Err(Error::InputOutOfRange { x: p.x, y: p.y, max: MAX_COORD });
        }
    }
    if s.a == s.b || t.a == t.b {
        return Err(Error::DegenerateSegment);
    }
    segments_intersect_unchecked(s, t)
}

/// [`segments_intersect`] minus the bound/degeneracy checks.
pub(crate) fn segments_intersect_unchecked(s: Segment, t: Segment) -> Result<SegmentRelation> {
    let gp_err = || Error::GeneralPositionViolated { a: 0, b: 0, c: 0 };
    let shared: Vec<Point> = [s.a, s.b]
        .into_iter()
        .filter(|p| *p == t.a || *p == t.b)
        .collect();
    match shared.len() {
        2 => Err(gp_err()), // identical segment listed twice
        1 => {
            let v = shared[0];
            let u = if s.a == v { s.b } else { s.a };
            let w = if t.a == v { t.b } else { t.a };
            if orient_unchecked(v, u, w) == Orientation::Collinear {
                return Err(gp_err());
            }
            Ok(SegmentRelation::SharedEndpoint)
        }
        _ => {
            let o1 = orient_unchecked(s.a, s.b, t.a);
            let o2 = orient_unchecked(s.a, s.b, t.b);
            let o3 = orient_unchecked(t.a, t.b, s.a);
            let o4 = orient_unchecked(t.a, t.b, s.b);
            if o1 == Orientation::Collinear
                || o2 == Orientation::Collinear
                || o3 == Orientation::Collinear
                || o4 == Orientation::Collinear
            {
                return Err(gp_err());
            }
            if o1 != o2 && o3 != o4 {
                Ok(SegmentRelation::Crossing)
            } else {
                Ok(SegmentRelation::Disjoint)
            }
        }
    }
}

/// A labelled point set in general position.
///
/// Labels are 1-based. Construction validates coordinate bounds, pairwise
/// distinctness, and general position (no three collinear); every other
/// module relies on those invariants.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PointSet {
    points: Vec<Point>,
}

impl PointSet {
    pub fn new(points: Vec<Point>) -> Result<Self> {
        for p in &points {
            if !p.in_range() {
                return Err(Error::InputOutOfRange { x: p.x, y: p.y, max: MAX_COORD });
            }
        }
        let mut seen: Vec<(Point, usize)> =
            points.iter().enumerate().map(|(i, p)| (*p, i + 1)).collect();
        seen.sort();
        for w in seen.windows(2) {
            if w[0].0 == w[1].0 {
                return Err(Error::DuplicatePoint { a: w[0].1, b: w[1].1 });
            }
        }
        let n = points.len();
        for i in 0..n {
            for j in (i + 1)..n {
                for k in (j + 1)..n {
                    if orient_unchecked(points[i], points[j], points[k])
                        == Orientation::Collinear
                    {
                        return Err(Error::GeneralPositionViolated {
                            a: i + 1,
                            b: j + 1,
                            c: k + 1,
                        });
                    }
                }
            }
        }
        Ok(PointSet { points })
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Point with the given 1-based label.
    ///
    /// Panics when the label is out of range; graph construction guarantees
    /// in-range labels everywhere this is used.
    pub fn point(&self, label: usize) -> Point {
        self.points[label - 1]
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }
}

/// Whether every point is a vertex of the convex hull.
pub fn is_convex_position(s: &PointSet) -> bool {
    s.len() < 3 || convex_hull(s.points()).len() == s.len()
}

/// Labels (1-based) in clockwise convex order, rotated to start at the
/// smallest label, or `None` when the set is not in convex position.
pub fn convex_clockwise_labels(s: &PointSet) -> Option<Vec<usize>> {
    if s.len() < 3 {
        return None;
    }
    let hull = convex_hull(s.points());
    if hull.len() != s.len() {
        return None;
    }
    // The hull comes back counterclockwise; reverse for clockwise.
    let mut order: Vec<usize> = hull.into_iter().rev().map(|i| i + 1).collect();
    let start = order
        .iter()
        .position(|&l| l == *order.iter().min().expect("nonempty"))
        .expect("min exists");
    order.rotate_left(start);
    Some(order)
}

/// Andrew's monotone chain over 0-based indices; counterclockwise order.
fn convex_hull(points: &[Point]) -> Vec<usize> {
    let n = points.len();
    if n < 3 {
        return (0..n).collect();
    }
    let mut idx: Vec<usize> = (0..n).collect();
    idx.sort_by_key(|&i| points[i]);
    let left_turn = |a: usize, b: usize, c: usize| {
        orient_unchecked(points[a], points[b], points[c]) == Orientation::CounterClockwise
    };
    let mut lower: Vec<usize> = Vec::new();
    for &i in &idx {
        while lower.len() >= 2 && !left_turn(lower[lower.len() - 2], lower[lower.len() - 1], i) {
            lower.pop();
        }
        lower.push(i);
    }
    let mut upper: Vec<usize> = Vec::new();
    for &i in idx.iter().rev() {
        while upper.len() >= 2 && !left_turn(upper[upper.len() - 2], upper[upper.len() - 1], i) {
            upper.pop();
        }
        upper.push(i);
    }
    // Each chain ends where the other begins; drop the duplicates.
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}

/// Vertices of a regular n-gon of radius 10^6, labelled 1..=n clockwise.
///
/// Coordinates are rounded to integers; the rotational offset is retried on a
/// fixed schedule until the rounded set is in general position, in convex
/// position, and labelled clockwise, so the output is deterministic per n.
pub fn regular_polygon(n: usize) -> Result<PointSet> {
    if n < 3 {
        return Err(Error::InvalidOrder { n, min: 3 });
    }
    const RADIUS: f64 = 1_000_000.0;
    for attempt in 0..256u32 {
        let offset = 0.5 + 0.137 * attempt as f64;
        let pts: Vec<Point> = (0..n)
            .map(|k| {
                let theta = offset - std::f64::consts::TAU * k as f64 / n as f64;
                Point::new(
                    (RADIUS * theta.cos()).round() as i64,
                    (RADIUS * theta.sin()).round() as i64,
                )
            })
            .collect();
        let Ok(ps) = PointSet::new(pts) else { continue };
        if is_convex_position(&ps) && is_clockwise_circular(&ps) {
            return Ok(ps);
        }
    }
    Err(Error::SearchExhausted {
        what: format!("rounding offset for a regular {n}-gon"),
    })
}

/// Whether labels 1..=n walk the convex hull clockwise (every cyclic
/// consecutive triple turns clockwise).
pub fn is_clockwise_circular(s: &PointSet) -> bool {
    let n = s.len();
    if n < 3 {
        return false;
    }
    (1..=n).all(|i| {
        let j = i % n + 1;
        let k = j % n + 1;
        orient_unchecked(s.point(i), s.point(j), s.point(k)) == Orientation::Clockwise
    })
}
