//! Six-way angular splits: an apex and three concurrent lines whose six open
//! sectors each hold a guaranteed number of points.
//!
//! The existence of such a split (with ⌊n/6⌋ − 1 points per sector) is a
//! known fact, but its proof is not constructive in any convenient sense.
//! The implementation therefore searches: candidate apexes are the centroid
//! and intersections of the most balanced lines through point pairs; for
//! each apex, every way of placing three cut lines between consecutive point
//! directions is counted via prefix sums over the circular direction
//! sequence. A successful candidate is then re-verified from scratch by
//! classifying every point against the three concrete lines — the search's
//! own bookkeeping is never trusted for the final answer.
//!
//! All arithmetic is exact: directions and line coefficients are big
//! integers, apexes are big rationals. No floating point is involved.

use std::cmp::Ordering;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::geom::{orient_unchecked, Orientation, Point, PointSet};

/// Exact line a·x + b·y + c = 0 with integer coefficients, gcd-reduced.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LineCoeffs {
    a: BigInt,
    b: BigInt,
    c: BigInt,
}

impl LineCoeffs {
    /// Reduce by the (positive) gcd; the sign pattern is preserved, so the
    /// side of the line a point evaluates to does not change.
    pub(crate) fn reduced(a: BigInt, b: BigInt, c: BigInt) -> Self {
        debug_assert!(!a.is_zero() || !b.is_zero(), "not a line");
        let g = a.gcd(&b).gcd(&c);
        debug_assert!(g.sign() == Sign::Plus);
        LineCoeffs { a: a / &g, b: b / &g, c: c / &g }
    }

    /// The line through two distinct integer points.
    pub(crate) fn through(p: Point, q: Point) -> Self {
        debug_assert!(p != q);
        let a = BigInt::from(q.y - p.y);
        let b = BigInt::from(p.x - q.x);
        let c = -(&a * BigInt::from(p.x) + &b * BigInt::from(p.y));
        Self::reduced(a, b, c)
    }

    /// Signed evaluation at an integer point: zero on the line, constant
    /// sign on each side.
    pub fn eval(&self, p: Point) -> BigInt {
        &self.a * BigInt::from(p.x) + &self.b * BigInt::from(p.y) + &self.c
    }

    /// Coefficients (a, b, c).
    pub fn coefficients(&self) -> (&BigInt, &BigInt, &BigInt) {
        (&self.a, &self.b, &self.c)
    }

    /// Coefficients as decimal strings, for serialization.
    pub fn decimal_strings(&self) -> [String; 3] {
        [self.a.to_string(), self.b.to_string(), self.c.to_string()]
    }
}

/// Exact rational point (x_num/den, y_num/den) with den > 0, gcd-reduced.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalPoint {
    x_num: BigInt,
    y_num: BigInt,
    den: BigInt,
}

impl RationalPoint {
    pub(crate) fn reduced(x_num: BigInt, y_num: BigInt, den: BigInt) -> Self {
        debug_assert!(den.sign() == Sign::Plus);
        let g = den.gcd(&x_num).gcd(&y_num);
        RationalPoint { x_num: x_num / &g, y_num: y_num / &g, den: den / &g }
    }

    /// Intersection of two lines, or `None` when they are parallel.
    fn intersection(l1: &LineCoeffs, l2: &LineCoeffs) -> Option<Self> {
        let det = &l1.a * &l2.b - &l2.a * &l1.b;
        if det.is_zero() {
            return None;
        }
        let x = &l1.b * &l2.c - &l2.b * &l1.c;
        let y = &l2.a * &l1.c - &l1.a * &l2.c;
        Some(if det.sign() == Sign::Minus {
            Self::reduced(-x, -y, -det)
        } else {
            Self::reduced(x, y, det)
        })
    }

    /// Numerators and the common (positive) denominator.
    pub fn parts(&self) -> (&BigInt, &BigInt, &BigInt) {
        (&self.x_num, &self.y_num, &self.den)
    }

    /// (x numerator, y numerator, denominator) as decimal strings.
    pub fn decimal_strings(&self) -> [String; 3] {
        [self.x_num.to_string(), self.y_num.to_string(), self.den.to_string()]
    }

    /// The vector from this point to an integer point, scaled by the
    /// (positive) denominator — same direction, exact components.
    fn to_scaled(&self, p: Point) -> Vec2 {
        (
            BigInt::from(p.x) * &self.den - &self.x_num,
            BigInt::from(p.y) * &self.den - &self.y_num,
        )
    }
}

type Vec2 = (BigInt, BigInt);

fn cross(u: &Vec2, v: &Vec2) -> BigInt {
    &u.0 * &v.1 - &u.1 * &v.0
}

fn dot(u: &Vec2, v: &Vec2) -> BigInt {
    &u.0 * &v.0 + &u.1 * &v.1
}

fn add(u: &Vec2, v: &Vec2) -> Vec2 {
    (&u.0 + &v.0, &u.1 + &v.1)
}

fn sub(u: &Vec2, v: &Vec2) -> Vec2 {
    (&u.0 - &v.0, &u.1 - &v.1)
}

fn neg(u: &Vec2) -> Vec2 {
    (-&u.0, -&u.1)
}

/// Flip a nonzero vector into the upper half-plane (y > 0, or y = 0 with
/// x > 0), i.e. pick the canonical representative of its direction mod π.
fn canonical_mod_pi(v: Vec2) -> (Vec2, bool) {
    let flip = match v.1.sign() {
        Sign::Minus => true,
        Sign::NoSign => v.0.sign() == Sign::Minus,
        Sign::Plus => false,
    };
    if flip {
        (neg(&v), true)
    } else {
        (v, false)
    }
}

/// Angular order of two canonical (upper half-plane) directions: for angles
/// in [0, π), u precedes v exactly when cross(u, v) > 0.
fn cmp_canonical(u: &Vec2, v: &Vec2) -> Ordering {
    match cross(u, v).sign() {
        Sign::Plus => Ordering::Less,
        Sign::NoSign => Ordering::Equal,
        Sign::Minus => Ordering::Greater,
    }
}

/// A successful split: three concurrent lines and the six open sectors they
/// cut around the apex, in counterclockwise order.
#[derive(Clone, Debug)]
pub(crate) struct SectorSplit {
    /// The three cut lines, sorted by direction angle in [0, π).
    pub lines: [LineCoeffs; 3],
    /// Common point of the three lines.
    pub apex: RationalPoint,
    /// 0-based indices into the input slice, one list per open sector,
    /// counterclockwise starting at the sector between the first and second
    /// line directions.
    pub sectors: [Vec<usize>; 6],
    /// An interior direction of each sector (the sum of its two bounding ray
    /// vectors), used downstream as the sector's axis.
    pub axes: [Vec2; 6],
}

/// Search for an apex and three concurrent lines leaving at least `target`
/// points strictly inside each of the six sectors.
pub(crate) fn split_into_sectors(points: &[Point], target: usize) -> Result<SectorSplit> {
    for apex in apex_candidates(points) {
        let Some(cuts) = sector_search(points, &apex, target) else { continue };
        if let Some(split) = realize(points, &apex, cuts, target) {
            return Ok(split);
        }
    }
    Err(Error::SearchExhausted {
        what: format!(
            "apex admitting a six-sector split with >= {target} of {} points per sector",
            points.len()
        ),
    })
}

/// Candidate apexes in deterministic order: the centroid first, then
/// intersections of the most balanced point-pair lines (lines whose two
/// sides hold nearly equally many of the remaining points).
fn apex_candidates(points: &[Point]) -> Vec<RationalPoint> {
    const MAX_LINES: usize = 80;
    const MAX_CANDIDATES: usize = 600;

    let n = points.len();
    let mut out = Vec::new();
    let sx: i64 = points.iter().map(|p| p.x).sum();
    let sy: i64 = points.iter().map(|p| p.y).sum();
    out.push(RationalPoint::reduced(
        BigInt::from(sx),
        BigInt::from(sy),
        BigInt::from(n as i64),
    ));

    let mut ranked: Vec<(usize, usize, usize)> = Vec::with_capacity(n * (n - 1) / 2);
    for i in 0..n {
        for j in (i + 1)..n {
            let mut left = 0usize;
            let mut right = 0usize;
            for (k, p) in points.iter().enumerate() {
                if k == i || k == j {
                    continue;
                }
                match orient_unchecked(points[i], points[j], *p) {
                    Orientation::CounterClockwise => left += 1,
                    Orientation::Clockwise => right += 1,
                    Orientation::Collinear => {}
                }
            }
            ranked.push((left.abs_diff(right), i, j));
        }
    }
    ranked.sort_unstable();
    ranked.truncate(MAX_LINES);
    let lines: Vec<LineCoeffs> = ranked
        .iter()
        .map(|&(_, i, j)| LineCoeffs::through(points[i], points[j]))
        .collect();

    'outer: for b in 1..lines.len() {
        for a in 0..b {
            if let Some(p) = RationalPoint::intersection(&lines[a], &lines[b]) {
                out.push(p);
                if out.len() >= MAX_CANDIDATES {
                    break 'outer;
                }
            }
        }
    }
    out
}

/// For one apex, find three cut directions (each strictly between two
/// consecutive point directions) whose six sectors all hold at least
/// `target` points. Returns `None` when no such triple exists at this apex,
/// or when the apex coincides with an input point.
fn sector_search(points: &[Point], apex: &RationalPoint, target: usize) -> Option<[Vec2; 3]> {
    // Canonical direction (mod π) of every point as seen from the apex.
    let mut dirs: Vec<(Vec2, bool)> = Vec::with_capacity(points.len());
    for p in points {
        let w = apex.to_scaled(*p);
        if w.0.is_zero() && w.1.is_zero() {
            return None; // apex sits exactly on a point
        }
        dirs.push(canonical_mod_pi(w));
    }
    dirs.sort_by(|u, v| cmp_canonical(&u.0, &v.0));

    // Collapse equal directions into blocks; a block carries how many points
    // sit at the canonical angle θ (`pos`) and how many at θ + π (`neg`).
    let mut blocks: Vec<(Vec2, usize, usize)> = Vec::new();
    for (dir, flipped) in dirs {
        match blocks.last_mut() {
            Some(last) if cross(&last.0, &dir).is_zero() => {
                if flipped {
                    last.2 += 1;
                } else {
                    last.1 += 1;
                }
            }
            _ => blocks.push((dir, usize::from(!flipped), usize::from(flipped))),
        }
    }
    let b = blocks.len();
    if b < 3 {
        return None; // fewer than three distinct gaps to cut through
    }

    // Full circular ring of 2b angular positions: blocks 0..b at their
    // canonical angles, then their antipodes.
    let tb = 2 * b;
    let mut pre = vec![0usize; tb + 1];
    for q in 0..tb {
        let cnt = if q < b { blocks[q].1 } else { blocks[q - b].2 };
        pre[q + 1] = pre[q] + cnt;
    }
    let pw = |i: usize| {
        if i <= tb {
            pre[i]
        } else {
            pre[tb] + pre[i - tb]
        }
    };
    // Points strictly between the cut at gap `from` and the cut at gap `to`
    // (ring positions from+1 ..= to), where gap g lies after ring position g.
    let arc = |from: usize, to: usize| pw(to + 1) - pw(from + 1);

    for g1 in 0..(b - 2) {
        for g2 in (g1 + 1)..(b - 1) {
            if arc(g1, g2) < target {
                continue;
            }
            for g3 in (g2 + 1)..b {
                if arc(g2, g3) >= target
                    && arc(g3, g1 + b) >= target
                    && arc(g1 + b, g2 + b) >= target
                    && arc(g2 + b, g3 + b) >= target
                    && arc(g3 + b, g1 + tb) >= target
                {
                    let cut = |g: usize| {
                        // A vector strictly inside the angular gap after
                        // block g: the sum of the bounding directions (their
                        // cone is narrower than π, so the sum lies inside).
                        if g + 1 < b {
                            add(&blocks[g].0, &blocks[g + 1].0)
                        } else {
                            sub(&blocks[b - 1].0, &blocks[0].0)
                        }
                    };
                    return Some([cut(g1), cut(g2), cut(g3)]);
                }
            }
        }
    }
    None
}

/// Build the concrete lines for three cut directions and re-verify the
/// sector counts from scratch by classifying every point against them.
/// Returns `None` if any count falls short (which would mean the search's
/// arithmetic and this classification disagree — the candidate is skipped).
fn realize(
    points: &[Point],
    apex: &RationalPoint,
    cuts: [Vec2; 3],
    target: usize,
) -> Option<SectorSplit> {
    let mut deltas: Vec<Vec2> = cuts.into_iter().map(|c| canonical_mod_pi(c).0).collect();
    deltas.sort_by(|u, v| cmp_canonical(u, v));
    if cross(&deltas[0], &deltas[1]).is_zero() || cross(&deltas[1], &deltas[2]).is_zero() {
        return None; // two cuts collapsed onto one direction
    }

    // Line i passes through the apex with direction deltas[i]; its sign at a
    // point q is the sign of cross(delta_i, q - apex).
    let (pnx, pny, den) = apex.parts();
    let lines: Vec<LineCoeffs> = deltas
        .iter()
        .map(|d| {
            LineCoeffs::reduced(
                -&d.1 * den,
                &d.0 * den,
                &d.1 * pnx - &d.0 * pny,
            )
        })
        .collect();

    // Interior directions of the six sectors, counterclockwise: between
    // consecutive rays d1, d2, d3, -d1, -d2, -d3 the sum of the two bounding
    // ray vectors always points strictly inside.
    let axes: [Vec2; 6] = [
        add(&deltas[0], &deltas[1]),
        add(&deltas[1], &deltas[2]),
        sub(&deltas[2], &deltas[0]),
        neg(&add(&deltas[0], &deltas[1])),
        neg(&add(&deltas[1], &deltas[2])),
        sub(&deltas[0], &deltas[2]),
    ];

    // Sign signature of each sector: the sign of each line's linear part in
    // the sector's interior direction.
    let mut signatures = [[Sign::NoSign; 3]; 6];
    for (k, axis) in axes.iter().enumerate() {
        for (i, line) in lines.iter().enumerate() {
            let s = (&line.a * &axis.0 + &line.b * &axis.1).sign();
            if s == Sign::NoSign {
                return None; // axis parallel to a cut line: degenerate cuts
            }
            signatures[k][i] = s;
        }
    }

    let mut sectors: [Vec<usize>; 6] = Default::default();
    for (idx, p) in points.iter().enumerate() {
        let mut sig = [Sign::NoSign; 3];
        for (i, line) in lines.iter().enumerate() {
            let s = line.eval(*p).sign();
            if s == Sign::NoSign {
                return None; // a point exactly on a cut line
            }
            sig[i] = s;
        }
        let k = signatures.iter().position(|cand| *cand == sig)?;
        sectors[k].push(idx);
    }
    if sectors.iter().any(|sec| sec.len() < target) {
        return None;
    }

    let lines: [LineCoeffs; 3] = lines.try_into().expect("exactly three lines");
    Some(SectorSplit { lines, apex: apex.clone(), sectors, axes })
}

/// Rank two sector members by angular distance to the sector axis, ties by
/// the natural order of the payload. Exact: distances are compared through
/// sign cases and cross-multiplied tangents, never through angles.
pub(crate) fn cmp_angular_closeness(axis: &Vec2, wu: &Vec2, wv: &Vec2) -> Ordering {
    let du = dot(axis, wu);
    let dv = dot(axis, wv);
    let cu = cross(axis, wu).abs();
    let cv = cross(axis, wv).abs();
    // Region 0: within a quarter turn of the axis; 1: exactly a quarter
    // turn; 2: beyond. Closer regions first, then tangents within a region.
    let region = |d: &BigInt| match d.sign() {
        Sign::Plus => 0u8,
        Sign::NoSign => 1,
        Sign::Minus => 2,
    };
    let (ru, rv) = (region(&du), region(&dv));
    ru.cmp(&rv).then_with(|| match ru {
        0 => (&cu * &dv).cmp(&(&cv * &du)),
        2 => (&dv * &cu).cmp(&(&du * &cv)),
        _ => Ordering::Equal,
    })
}

/// The three concurrent cut lines, their apex, and the resulting six open
/// sectors of a point set, counterclockwise around the apex.
#[derive(Clone, Debug)]
pub struct SixPartition {
    lines: [LineCoeffs; 3],
    apex: RationalPoint,
    sectors: [Vec<usize>; 6],
}

impl SixPartition {
    /// The cut lines, sorted by direction angle in [0, π).
    pub fn lines(&self) -> &[LineCoeffs; 3] {
        &self.lines
    }

    /// The common point of the three lines.
    pub fn apex(&self) -> &RationalPoint {
        &self.apex
    }

    /// 1-based point labels per open sector, counterclockwise.
    pub fn sectors(&self) -> &[Vec<usize>; 6] {
        &self.sectors
    }
}

/// Three concurrent lines whose six open sectors each contain at least
/// ⌊n/6⌋ − 1 points of the set.
///
/// The count is re-verified by classifying every point against the returned
/// lines, so a successful result is correct by checking, not by trusting the
/// search.
pub fn six_partition(s: &PointSet) -> Result<SixPartition> {
    let n = s.len();
    if n < 6 {
        return Err(Error::InvalidOrder { n, min: 6 });
    }
    let target = n / 6 - 1;
    let split = split_into_sectors(s.points(), target)?;
    Ok(SixPartition {
        lines: split.lines,
        apex: split.apex,
        sectors: split.sectors.map(|sec| sec.into_iter().map(|i| i + 1).collect()),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::regular_polygon;
    use crate::sample::random_point_set;

    fn sector_counts_verified(s: &PointSet, part: &SixPartition, target: usize) {
        // Recount the sectors here, independently of everything inside the
        // module: group points by their sign pattern against the lines.
        let mut by_sig: std::collections::HashMap<[i8; 3], usize> = Default::default();
        for label in 1..=s.len() {
            let p = s.point(label);
            let sig: Vec<i8> = part
                .lines()
                .iter()
                .map(|l| match l.eval(p).sign() {
                    Sign::Plus => 1i8,
                    Sign::NoSign => 0,
                    Sign::Minus => -1,
                })
                .collect();
            let sig: [i8; 3] = sig.try_into().unwrap();
            assert!(sig.iter().all(|&v| v != 0), "a point lies on a cut line");
            *by_sig.entry(sig).or_default() += 1;
        }
        assert!(by_sig.len() <= 6, "three concurrent lines cut six sectors");
        assert!(by_sig.values().all(|&c| c >= target));
        // The partition's own sector lists agree with the recount.
        let listed: usize = part.sectors().iter().map(Vec::len).sum();
        assert_eq!(listed, s.len());
        for sec in part.sectors() {
            assert!(sec.len() >= target);
        }
    }

    #[test]
    fn lines_are_concurrent_at_the_apex() {
        let s = random_point_set(30, 5).unwrap();
        let part = six_partition(&s).unwrap();
        let (px, py, d) = part.apex().parts();
        for line in part.lines() {
            let (a, b, c) = line.coefficients();
            // a·(px/d) + b·(py/d) + c = 0, cleared of the denominator.
            assert!((a * px + b * py + c * d).is_zero());
        }
    }

    #[test]
    fn random_sets_split_with_the_guaranteed_count() {
        for (n, seed) in [(30usize, 1u64), (30, 2), (42, 3), (18, 4), (25, 9)] {
            let s = random_point_set(n, seed).unwrap();
            let part = six_partition(&s).unwrap();
            sector_counts_verified(&s, &part, n / 6 - 1);
        }
    }

    #[test]
    fn hexagon_splits_trivially() {
        let s = regular_polygon(6).unwrap();
        let part = six_partition(&s).unwrap();
        sector_counts_verified(&s, &part, 0);
    }

    #[test]
    fn tiny_sets_are_rejected() {
        let s = regular_polygon(5).unwrap();
        assert!(matches!(six_partition(&s), Err(Error::InvalidOrder { n: 5, min: 6 })));
    }

    #[test]
    fn sectors_cover_all_labels_once() {
        let s = random_point_set(36, 12).unwrap();
        let part = six_partition(&s).unwrap();
        let mut all: Vec<usize> = part.sectors().iter().flatten().copied().collect();
        all.sort_unstable();
        assert_eq!(all, (1..=36).collect::<Vec<_>>());
    }

    #[test]
    fn angular_closeness_comparator_orders_correctly() {
        let axis: Vec2 = (BigInt::from(1), BigInt::from(0));
        let near: Vec2 = (BigInt::from(10), BigInt::from(1));
        let far: Vec2 = (BigInt::from(1), BigInt::from(10));
        let behind: Vec2 = (BigInt::from(-10), BigInt::from(1));
        let side: Vec2 = (BigInt::from(0), BigInt::from(7));
        assert_eq!(cmp_angular_closeness(&axis, &near, &far), Ordering::Less);
        assert_eq!(cmp_angular_closeness(&axis, &far, &near), Ordering::Greater);
        assert_eq!(cmp_angular_closeness(&axis, &far, &behind), Ordering::Less);
        assert_eq!(cmp_angular_closeness(&axis, &side, &behind), Ordering::Less);
        assert_eq!(cmp_angular_closeness(&axis, &near, &side), Ordering::Less);
        // Mirror images across the axis are angular ties.
        let mirror: Vec2 = (BigInt::from(10), BigInt::from(-1));
        assert_eq!(cmp_angular_closeness(&axis, &near, &mirror), Ordering::Equal);
    }

    #[test]
    fn canonicalization_is_stable_mod_pi() {
        let (up, f1) = canonical_mod_pi((BigInt::from(3), BigInt::from(-4)));
        assert_eq!(up, (BigInt::from(-3), BigInt::from(4)));
        assert!(f1);
        let (axis, f2) = canonical_mod_pi((BigInt::from(-5), BigInt::from(0)));
        assert_eq!(axis, (BigInt::from(5), BigInt::from(0)));
        assert!(f2);
        let (kept, f3) = canonical_mod_pi((BigInt::from(2), BigInt::from(9)));
        assert_eq!(kept, (BigInt::from(2), BigInt::from(9)));
        assert!(!f3);
    }
}
