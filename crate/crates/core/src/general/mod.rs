//! Many-class partial colorings for arbitrary drawings of the complete
//! graph.
//!
//! Any drawing on n ≥ 19 points in general position admits 12m² pairwise
//! intersecting, edge-disjoint color classes, where n = 13m + 6 + r with
//! r < 13. The recipe: separate the point set by near-horizontal lines into
//! an upper part of 12m+6 points and a lower reservoir; split the upper part
//! into six angular sectors of ≥ 2m points around an apex; and form, for
//! every pair of indices, quadrilaterals that alternate between opposite
//! sectors, each carrying one pendant edge down into the reservoir. Every
//! quadrilateral strictly encloses the apex, so any two classes either touch
//! directly or one quadrilateral surrounds the other — and then the inner
//! one's pendant edge must escape through the surrounding cycle.

mod sixpart;

use std::collections::HashSet;

use num_bigint::{BigInt, Sign};
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::geom::{segments_intersect, Point, PointSet, Segment};
use crate::graph::{EdgeId, PartialColoring};

pub use sixpart::{six_partition, LineCoeffs, RationalPoint, SixPartition};
use sixpart::{cmp_angular_closeness, split_into_sectors};

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Decomposition n = 13m + 6 + r with 0 ≤ r < 13, as (m, r).
pub fn decomposition(n: usize) -> (usize, usize) {
    debug_assert!(n >= 6);
    ((n - 6) / 13, (n - 6) % 13)
}

/// The full line-and-group structure a coloring is built from.
///
/// Separators are listed top-down: the set lies strictly between the first
/// and third, and the second splits the upper 12m+6 points from the lower
/// m+r. "Height" is measured by x + shear·y, which orders any point set
/// totally; the map (x, y) ↦ (x, shear·y + x) has positive determinant, so
/// this reading of "horizontal" preserves every orientation and therefore
/// every intersection relation.
#[derive(Clone, Debug)]
pub struct LineConfiguration {
    m: usize,
    r: usize,
    shear: i64,
    separators: [LineCoeffs; 3],
    cuts: [LineCoeffs; 3],
    apex: RationalPoint,
    groups: [Vec<usize>; 6],
    reservoir: Vec<usize>,
}

impl LineConfiguration {
    pub fn m(&self) -> usize {
        self.m
    }

    pub fn r(&self) -> usize {
        self.r
    }

    /// The shear constant K in the height key x + K·y.
    pub fn shear(&self) -> i64 {
        self.shear
    }

    /// The three near-horizontal separating lines, top-down.
    pub fn separators(&self) -> &[LineCoeffs; 3] {
        &self.separators
    }

    /// The three concurrent cut lines through the apex.
    pub fn cut_lines(&self) -> &[LineCoeffs; 3] {
        &self.cuts
    }

    pub fn apex(&self) -> &RationalPoint {
        &self.apex
    }

    /// The six retained groups of 2m labels each, clockwise around the apex.
    pub fn groups(&self) -> &[Vec<usize>; 6] {
        &self.groups
    }

    /// The m reservoir labels the pendant edges attach to, lowest first.
    pub fn anchors(&self) -> &[usize] {
        &self.reservoir
    }
}

/// Which of the three subgraph families a class belongs to.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Family {
    X,
    Y,
    Z,
}

impl Family {
    pub fn as_char(self) -> char {
        match self {
            Family::X => 'X',
            Family::Y => 'Y',
            Family::Z => 'Z',
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Family::X => "X",
            Family::Y => "Y",
            Family::Z => "Z",
        }
    }
}

/// One color class: a quadrilateral through four of the six groups plus a
/// single pendant edge into the reservoir.
#[derive(Clone, Debug)]
pub struct PendantQuad {
    family: Family,
    i: usize,
    j: usize,
    corners: [usize; 4],
    quad: [EdgeId; 4],
    pendant: EdgeId,
}

impl PendantQuad {
    pub fn family(&self) -> Family {
        self.family
    }

    /// Row index in 1..=2m.
    pub fn i(&self) -> usize {
        self.i
    }

    /// Column index in 1..=2m; its parity picks the pendant's corner and
    /// ⌈j/2⌉ picks the reservoir anchor.
    pub fn j(&self) -> usize {
        self.j
    }

    /// The quadrilateral's vertex labels in cycle order.
    pub fn corners(&self) -> [usize; 4] {
        self.corners
    }

    /// The four cycle edges.
    pub fn quad(&self) -> [EdgeId; 4] {
        self.quad
    }

    /// The pendant edge into the reservoir.
    pub fn pendant(&self) -> EdgeId {
        self.pendant
    }

    /// All five edges of the class: the cycle plus the pendant.
    pub fn edges(&self) -> [EdgeId; 5] {
        [self.quad[0], self.quad[1], self.quad[2], self.quad[3], self.pendant]
    }
}

/// Build the line-and-group structure for a point set with n ≥ 19.
pub fn build_configuration(s: &PointSet) -> Result<LineConfiguration> {
    let n = s.len();
    if n < 19 {
        return Err(Error::InvalidOrder { n, min: 19 });
    }
    let (m, r) = decomposition(n);
    let upper_size = 12 * m + 6;

    // Total height order: key = x + K·y with K past every coordinate's
    // range, so two keys tie only for coincident points (excluded).
    let max_abs = s
        .points()
        .iter()
        .map(|p| p.x.abs().max(p.y.abs()))
        .max()
        .expect("nonempty")
        .max(1);
    let shear = 2 * max_abs + 1;
    let key = |label: usize| {
        let p = s.point(label);
        p.x + shear * p.y
    };

    let mut order: Vec<usize> = (1..=n).collect();
    order.sort_by_key(|&l| std::cmp::Reverse(key(l)));
    let upper: Vec<usize> = order[..upper_size].to_vec();
    let lower: Vec<usize> = order[upper_size..].to_vec();

    // Near-horizontal separators as key thresholds, doubled so midpoints
    // stay integral: 2x + 2K·y = t in input coordinates.
    let separator = |t: i64| {
        LineCoeffs::reduced(BigInt::from(2), BigInt::from(2 * shear), BigInt::from(-t))
    };
    let separators = [
        separator(2 * key(order[0]) + 2),
        separator(key(upper[upper_size - 1]) + key(lower[0])),
        separator(2 * key(order[n - 1]) - 2),
    ];

    let upper_points: Vec<Point> = upper.iter().map(|&l| s.point(l)).collect();
    let split = split_into_sectors(&upper_points, 2 * m)?;

    // The split lists sectors counterclockwise; walking them in reverse
    // (fixing the first) names the groups clockwise around the apex. Each
    // group keeps the 2m members angularly closest to its sector's axis.
    let clockwise = [0usize, 5, 4, 3, 2, 1];
    let mut groups: [Vec<usize>; 6] = Default::default();
    for (gi, &sector) in clockwise.iter().enumerate() {
        let axis = &split.axes[sector];
        let mut members = split.sectors[sector].clone();
        members.sort_by(|&iu, &iv| {
            let wu = vector_to(&split.apex, upper_points[iu]);
            let wv = vector_to(&split.apex, upper_points[iv]);
            cmp_angular_closeness(axis, &wu, &wv).then(iu.cmp(&iv))
        });
        members.truncate(2 * m);
        let mut labels: Vec<usize> = members.into_iter().map(|idx| upper[idx]).collect();
        labels.sort_unstable();
        groups[gi] = labels;
    }

    // Pendant anchors: the m lowest points overall, bottom-up.
    let reservoir: Vec<usize> = lower.iter().rev().take(m).copied().collect();

    Ok(LineConfiguration {
        m,
        r,
        shear,
        separators,
        cuts: split.lines,
        apex: split.apex,
        groups,
        reservoir,
    })
}

fn vector_to(apex: &RationalPoint, p: Point) -> (BigInt, BigInt) {
    let (pnx, pny, den) = apex.parts();
    (BigInt::from(p.x) * den - pnx, BigInt::from(p.y) * den - pny)
}

/// Enumerate all 12m² classes of a configuration, checking that the apex is
/// strictly inside every quadrilateral and that no edge is used twice.
pub fn enumerate_families(s: &PointSet, cfg: &LineConfiguration) -> Result<Vec<PendantQuad>> {
    let tm = 2 * cfg.m;
    let [ga, gb, gc, gd, ge, gf] = &cfg.groups;
    let mut quads = Vec::with_capacity(12 * cfg.m * cfg.m);
    for family in [Family::X, Family::Y, Family::Z] {
        for i in 1..=tm {
            for j in 1..=tm {
                let corners: [usize; 4] = match family {
                    Family::X => [ga[i - 1], gb[j - 1], gd[i - 1], ge[j - 1]],
                    Family::Y => [gb[i - 1], gc[j - 1], ge[i - 1], gf[j - 1]],
                    Family::Z => [gc[i - 1], gd[j - 1], gf[i - 1], ga[j - 1]],
                };
                if !apex_strictly_inside(&cfg.apex, corners.map(|l| s.point(l))) {
                    return Err(Error::ApexNotInside { family: family.as_char(), i, j });
                }
                // The pendant hangs from the i-indexed corner on the side
                // given by j's parity, and dives to anchor ⌈j/2⌉.
                let anchor_vertex = if j % 2 == 0 { corners[0] } else { corners[2] };
                let pendant = EdgeId::new(anchor_vertex, cfg.reservoir[(j + 1) / 2 - 1]);
                let quad = [
                    EdgeId::new(corners[0], corners[1]),
                    EdgeId::new(corners[1], corners[2]),
                    EdgeId::new(corners[2], corners[3]),
                    EdgeId::new(corners[3], corners[0]),
                ];
                quads.push(PendantQuad { family, i, j, corners, quad, pendant });
            }
        }
    }

    let mut seen: HashSet<EdgeId> = HashSet::with_capacity(5 * quads.len());
    for quad in &quads {
        for edge in quad.edges() {
            if !seen.insert(edge) {
                return Err(Error::DuplicateEdge { a: edge.i(), b: edge.j() });
            }
        }
    }
    Ok(quads)
}

/// Standalone check that the configuration's apex is strictly inside one
/// class's quadrilateral — the piercing property `enumerate_families`
/// enforces, exposed so external audits can re-test it.
pub fn apex_inside_quad(s: &PointSet, cfg: &LineConfiguration, q: &PendantQuad) -> bool {
    apex_strictly_inside(cfg.apex(), q.corners().map(|l| s.point(l)))
}

/// Strict point-in-polygon for the rational apex against an integer
/// quadrilateral: odd crossing parity of a rightward ray, with any boundary
/// contact counted as outside. Exact throughout.
fn apex_strictly_inside(apex: &RationalPoint, corners: [Point; 4]) -> bool {
    let (px, py, den) = apex.parts();
    let mut crossings = 0usize;
    for idx in 0..4 {
        let u = corners[idx];
        let v = corners[(idx + 1) % 4];
        let ux_d = BigInt::from(u.x) * den;
        let uy_d = BigInt::from(u.y) * den;
        let ex = BigInt::from(v.x - u.x);
        let ey = BigInt::from(v.y - u.y);
        let qx = px - &ux_d;
        let qy = py - &uy_d;

        // Boundary contact: apex collinear with the edge and within it.
        if (&ex * &qy - &ey * &qx).is_zero() {
            let along = &qx * &ex + &qy * &ey;
            let len2_d = (&ex * &ex + &ey * &ey) * den;
            if along.sign() != Sign::Minus && along <= len2_d {
                return false;
            }
        }

        // Half-open crossing rule: the edge crosses the apex's height line
        // iff exactly one endpoint is strictly above it.
        let above_u = uy_d > *py;
        let above_v = BigInt::from(v.y) * den > *py;
        if above_u != above_v {
            // Crossing point right of the apex iff n and ey share a sign,
            // where n = (x_cross - px) scaled by den·ey.
            let n = (&ux_d - px) * &ey + (py - &uy_d) * &ex;
            debug_assert!(!n.is_zero(), "ray through a boundary point was not caught above");
            if n.sign() == ey.sign() {
                crossings += 1;
            }
        }
    }
    crossings % 2 == 1
}

/// Check that every two classes intersect: some edge of one shares an
/// endpoint with, or crosses, some edge of the other.
fn verify_pairwise_intersections(s: &PointSet, quads: &[PendantQuad]) -> Result<()> {
    let segment = |e: EdgeId| {
        Segment::new(s.point(e.i()), s.point(e.j())).expect("distinct labelled points")
    };
    let pair_meets = |qa: &PendantQuad, qb: &PendantQuad| -> Result<bool> {
        for ea in qa.edges() {
            for eb in qb.edges() {
                if ea.shares_endpoint(eb) {
                    return Ok(true);
                }
                if segments_intersect(segment(ea), segment(eb))?.intersects() {
                    return Ok(true);
                }
            }
        }
        Ok(false)
    };
    let fail = |qa: &PendantQuad, qb: &PendantQuad| {
        Err(Error::MalformedColoring {
            reason: format!(
                "classes {}({},{}) and {}({},{}) have no intersecting edge pair",
                qa.family.as_str(),
                qa.i,
                qa.j,
                qb.family.as_str(),
                qb.i,
                qb.j
            ),
        })
    };

    #[cfg(feature = "parallel")]
    {
        return (0..quads.len()).into_par_iter().try_for_each(|a| {
            for b in (a + 1)..quads.len() {
                if !pair_meets(&quads[a], &quads[b])? {
                    return fail(&quads[a], &quads[b]);
                }
            }
            Ok(())
        });
    }

    #[cfg(not(feature = "parallel"))]
    {
        for a in 0..quads.len() {
            for b in (a + 1)..quads.len() {
                if !pair_meets(&quads[a], &quads[b])? {
                    return fail(&quads[a], &quads[b]);
                }
            }
        }
        Ok(())
    }
}

/// Construct the 12m²-class partial coloring of a drawing on n ≥ 19 points:
/// one color per class, every pair of classes intersecting (verified here,
/// not assumed). Returns the coloring and the class count.
pub fn color_general(s: &PointSet) -> Result<(PartialColoring, usize)> {
    let cfg = build_configuration(s)?;
    let quads = enumerate_families(s, &cfg)?;
    color_from_quads(s, &quads)
}

/// Turn enumerated classes into a verified partial coloring; exposed so a
/// caller holding the configuration can reuse it.
pub fn color_from_quads(s: &PointSet, quads: &[PendantQuad]) -> Result<(PartialColoring, usize)> {
    verify_pairwise_intersections(s, quads)?;
    let classes: Vec<Vec<EdgeId>> = quads.iter().map(|q| q.edges().to_vec()).collect();
    let coloring = PartialColoring::from_classes(s.len(), &classes)?;
    Ok((coloring, quads.len()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sample::random_point_set;

    #[test]
    fn decomposition_matches_definition() {
        assert_eq!(decomposition(19), (1, 0));
        assert_eq!(decomposition(31), (1, 12));
        assert_eq!(decomposition(32), (2, 0));
        assert_eq!(decomposition(45), (3, 0));
        assert_eq!(decomposition(100), (7, 3));
    }

    #[test]
    fn small_orders_are_rejected() {
        let s = random_point_set(18, 1).unwrap();
        assert!(matches!(
            build_configuration(&s),
            Err(Error::InvalidOrder { n: 18, min: 19 })
        ));
    }

    #[test]
    fn configuration_shape_n19() {
        let s = random_point_set(19, 2).unwrap();
        let cfg = build_configuration(&s).unwrap();
        assert_eq!((cfg.m(), cfg.r()), (1, 0));
        for group in cfg.groups() {
            assert_eq!(group.len(), 2);
        }
        assert_eq!(cfg.anchors().len(), 1);
        let mut all: Vec<usize> = cfg.groups().iter().flatten().copied().collect();
        all.extend_from_slice(cfg.anchors());
        all.sort_unstable();
        all.dedup();
        assert_eq!(all.len(), 13, "groups and anchors are disjoint label sets");
    }

    #[test]
    fn separators_isolate_the_expected_counts() {
        let s = random_point_set(32, 7).unwrap();
        let cfg = build_configuration(&s).unwrap();
        let [top, mid, bottom] = cfg.separators();
        let side = |line: &LineCoeffs, label: usize| line.eval(s.point(label)).sign();
        let mut above_mid = 0;
        let mut below_mid = 0;
        for label in 1..=32 {
            // Everything lies strictly between the outer separators.
            assert_eq!(side(top, label), Sign::Minus);
            assert_eq!(side(bottom, label), Sign::Plus);
            match side(mid, label) {
                Sign::Plus => above_mid += 1,
                Sign::Minus => below_mid += 1,
                Sign::NoSign => panic!("separator through a point"),
            }
        }
        assert_eq!(above_mid, 30);
        assert_eq!(below_mid, 2);
    }

    #[test]
    fn anchors_are_the_lowest_points() {
        let s = random_point_set(45, 3).unwrap();
        let cfg = build_configuration(&s).unwrap();
        assert_eq!(cfg.anchors().len(), 3);
        let [_, mid, _] = cfg.separators();
        for &label in cfg.anchors() {
            assert_eq!(mid.eval(s.point(label)).sign(), Sign::Minus);
        }
    }

    #[test]
    fn families_have_the_printed_shape() {
        let s = random_point_set(19, 5).unwrap();
        let cfg = build_configuration(&s).unwrap();
        let quads = enumerate_families(&s, &cfg).unwrap();
        assert_eq!(quads.len(), 12);
        let [ga, gb, _gc, gd, ge, _gf] = cfg.groups();
        let x12 = quads
            .iter()
            .find(|q| q.family() == Family::X && q.i() == 1 && q.j() == 2)
            .unwrap();
        assert_eq!(x12.corners(), [ga[0], gb[1], gd[0], ge[1]]);
        // j = 2 is even: the pendant hangs from the first corner and dives
        // to the first anchor.
        assert_eq!(x12.pendant(), EdgeId::new(ga[0], cfg.anchors()[0]));
        let x11 = quads
            .iter()
            .find(|q| q.family() == Family::X && q.i() == 1 && q.j() == 1)
            .unwrap();
        assert_eq!(x11.pendant(), EdgeId::new(gd[0], cfg.anchors()[0]));
    }

    #[test]
    fn classes_are_edge_disjoint_and_counted() {
        for (n, seed, expect) in [(19usize, 11u64, 12usize), (32, 11, 48)] {
            let s = random_point_set(n, seed).unwrap();
            let cfg = build_configuration(&s).unwrap();
            let quads = enumerate_families(&s, &cfg).unwrap();
            assert_eq!(quads.len(), expect, "n = {n}");
            let mut edges: Vec<EdgeId> = quads.iter().flat_map(|q| q.edges()).collect();
            let total = edges.len();
            edges.sort_unstable();
            edges.dedup();
            assert_eq!(edges.len(), total, "n = {n}: all class edges distinct");
        }
    }

    #[test]
    fn apex_sits_inside_every_quadrilateral() {
        // enumerate_families signals ApexNotInside otherwise; re-check one
        // quadrilateral against an exterior point to exercise the test
        // itself.
        let s = random_point_set(19, 13).unwrap();
        let cfg = build_configuration(&s).unwrap();
        let quads = enumerate_families(&s, &cfg).unwrap();
        let corners = quads[0].corners().map(|l| s.point(l));
        assert!(apex_strictly_inside(cfg.apex(), corners));
        let far = RationalPoint::reduced(
            BigInt::from(2 * crate::geom::MAX_COORD),
            BigInt::from(0),
            BigInt::from(1),
        );
        assert!(!apex_strictly_inside(&far, corners));
    }

    #[test]
    fn full_coloring_verifies_pairwise_intersection() {
        let s = random_point_set(19, 17).unwrap();
        let (coloring, classes) = color_general(&s).unwrap();
        assert_eq!(classes, 12);
        assert_eq!(coloring.k(), 12);
        assert_eq!(coloring.len(), 12 * 5);
        assert_eq!(coloring.n(), 19);
    }

    #[test]
    fn corner_labels_match_quad_edges() {
        let s = random_point_set(32, 19).unwrap();
        let cfg = build_configuration(&s).unwrap();
        for quad in enumerate_families(&s, &cfg).unwrap() {
            let c = quad.corners();
            let expect = [
                EdgeId::new(c[0], c[1]),
                EdgeId::new(c[1], c[2]),
                EdgeId::new(c[2], c[3]),
                EdgeId::new(c[3], c[0]),
            ];
            assert_eq!(quad.quad(), expect);
        }
    }
}
