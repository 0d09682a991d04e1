//! Counted and closed-form bounds on complete-coloring sizes.
//!
//! A complete coloring with k colors forces at least C(k,2) intersecting
//! edge pairs, and a drawing has exactly m + cr of them (m at shared
//! vertices, cr at crossings) — inverting that inequality caps k. All bound
//! arithmetic is exact integer work; floating point appears only in the
//! published asymptotic coefficients, which are informational.

use crate::error::{Error, Result};
use crate::graph::{GeometricGraph, IntersectionRelation};

/// Published constant: the best known density of crossings in drawings of
/// large complete graphs, cr(Kₙ) ≤ c·C(n,4) + Θ(n³).
pub const C_RECT: f64 = 0.380488;

/// Published upper coefficient: ψ_g(Kₙ) ≤ 0.1781·n² + Θ(n^{3/2}).
pub const COEF_UPPER: f64 = 0.1781;

/// Published lower coefficient: 0.0710·n² − Θ(n) ≤ ψ_g(Kₙ).
pub const COEF_LOWER: f64 = 0.0710;

/// Exact binomial coefficient in usize (panics on overflow).
pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for s in 0..k {
        acc = acc * (n - s) as u128 / (s + 1) as u128;
    }
    usize::try_from(acc).expect("binomial exceeds usize")
}

/// Number of unordered edge pairs of the drawing that cross.
pub fn count_crossings(g: &GeometricGraph) -> Result<usize> {
    Ok(g.relation()?.crossing_count())
}

/// Crossing count via a freshly built sequential relation; exists so the
/// benches can compare build strategies on equal footing.
pub fn count_crossings_seq(g: &GeometricGraph) -> Result<usize> {
    Ok(IntersectionRelation::build_seq(g)?.crossing_count())
}

/// Crossing count via a freshly built data-parallel relation.
#[cfg(feature = "parallel")]
pub fn count_crossings_par(g: &GeometricGraph) -> Result<usize> {
    Ok(IntersectionRelation::build_par(g)?.crossing_count())
}

/// Number of edge intersections at shared vertices: Σ_v C(deg v, 2), the
/// edge count of the line graph.
pub fn incidence_count(g: &GeometricGraph) -> usize {
    let mut deg = vec![0usize; g.n() + 1];
    for e in g.edges() {
        deg[e.i()] += 1;
        deg[e.j()] += 1;
    }
    deg.iter().map(|&d| d * d.saturating_sub(1) / 2).sum()
}

/// ⌊(1+√(1+8·total))/2⌋ — the largest k with C(k,2) ≤ total intersecting
/// pairs. Exact inversion of C(k,2) via the integer square root.
pub fn complete_coloring_cap(total_intersections: u128) -> usize {
    let k = (1 + (1 + 8 * total_intersections).isqrt()) / 2;
    usize::try_from(k).expect("cap exceeds usize")
}

/// The intersection-counting upper bound on ψ₁ for this drawing.
pub fn psi_upper_from_crossings(g: &GeometricGraph) -> Result<usize> {
    let total = incidence_count(g) as u128 + count_crossings(g)? as u128;
    Ok(complete_coloring_cap(total))
}

/// ⌊(n²+n)/4⌋ — the order-only ceiling on ψ₁ of any geometric graph,
/// attained by the convex construction for every n ≠ 4.
pub fn psi_upper_convex(n: usize) -> usize {
    (n * n + n) / 4
}

/// 12m² with n = 13m+6+r: how many pairwise-intersecting classes the
/// general-position construction provides. None below its n ≥ 19 threshold.
pub fn general_lower_classes(n: usize) -> Option<usize> {
    if n < 19 {
        None
    } else {
        let m = (n - 6) / 13;
        Some(12 * m * m)
    }
}

/// The published asymptotic coefficients, recomputed and order-checked:
/// returns (√(c_rect/12), 12/169), asserting the first ≤ [`COEF_UPPER`] and
/// the second ≥ [`COEF_LOWER`].
pub fn coefficient_check() -> (f64, f64) {
    let upper = (C_RECT / 12.0).sqrt();
    let lower = 12.0 / 169.0;
    assert!(upper <= COEF_UPPER, "derived upper coefficient {upper} exceeds {COEF_UPPER}");
    assert!(lower >= COEF_LOWER, "derived lower coefficient {lower} under {COEF_LOWER}");
    (upper, lower)
}

/// The published constants carried alongside every report.
#[derive(Clone, Copy, PartialEq, Debug)]
pub struct BoundsConstants {
    pub c_rect: f64,
    pub coef_upper: f64,
    pub coef_lower: f64,
}

impl BoundsConstants {
    pub fn published() -> Self {
        BoundsConstants { c_rect: C_RECT, coef_upper: COEF_UPPER, coef_lower: COEF_LOWER }
    }
}

/// Every bound this module knows, for one drawing or one order.
#[derive(Clone, PartialEq, Debug)]
pub struct BoundsReport {
    pub n: usize,
    pub m_incidences: usize,
    pub cr_drawing: usize,
    pub psi_upper_convex: usize,
    pub psi_upper_crossing: usize,
    /// present from n = 19 up, where the construction applies.
    pub psi_g_lower_construction: Option<usize>,
    pub constants: BoundsConstants,
}

/// Count everything on an explicit drawing.
pub fn report_for(g: &GeometricGraph) -> Result<BoundsReport> {
    let n = g.n();
    Ok(BoundsReport {
        n,
        m_incidences: incidence_count(g),
        cr_drawing: count_crossings(g)?,
        psi_upper_convex: psi_upper_convex(n),
        psi_upper_crossing: psi_upper_from_crossings(g)?,
        psi_g_lower_construction: general_lower_classes(n),
        constants: BoundsConstants::published(),
    })
}

/// The report for the convex Kₙ by pure arithmetic (m = n·C(n−1,2),
/// cr = C(n,4)), with the coefficient order-check applied. Defined for
/// n > 18, where the asymptotic statement lives.
pub fn asymptotic_report(n: usize) -> Result<BoundsReport> {
    if n <= 18 {
        return Err(Error::InvalidOrder { n, min: 19 });
    }
    coefficient_check();
    let m = n * binomial(n - 1, 2);
    let cr = binomial(n, 4);
    Ok(BoundsReport {
        n,
        m_incidences: m,
        cr_drawing: cr,
        psi_upper_convex: psi_upper_convex(n),
        psi_upper_crossing: complete_coloring_cap(m as u128 + cr as u128),
        psi_g_lower_construction: general_lower_classes(n),
        constants: BoundsConstants::published(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::{regular_polygon, Point, PointSet};
    use crate::graph::{EdgeId, GeometricGraph};

    #[test]
    fn convex_crossings_count_four_point_subsets() {
        for n in 4..=10 {
            let g = GeometricGraph::complete(regular_polygon(n).unwrap());
            assert_eq!(count_crossings(&g).unwrap(), binomial(n, 4), "n={n}");
        }
    }

    #[test]
    fn planar_k4_has_no_crossings() {
        let ps = PointSet::new(vec![
            Point::new(0, 0),
            Point::new(10, 0),
            Point::new(5, 9),
            Point::new(5, 3),
        ])
        .unwrap();
        let g = GeometricGraph::complete(ps);
        assert_eq!(count_crossings(&g).unwrap(), 0);
    }

    #[test]
    fn incidence_counts() {
        let k4 = GeometricGraph::complete(regular_polygon(4).unwrap());
        assert_eq!(incidence_count(&k4), 12);
        let k5 = GeometricGraph::complete(regular_polygon(5).unwrap());
        assert_eq!(incidence_count(&k5), 30);
        let path = GeometricGraph::new(
            regular_polygon(3).unwrap(),
            vec![EdgeId::new(1, 2), EdgeId::new(2, 3)],
        )
        .unwrap();
        assert_eq!(incidence_count(&path), 1);
    }

    #[test]
    fn crossing_cap_examples() {
        let k4 = GeometricGraph::complete(regular_polygon(4).unwrap());
        assert_eq!(psi_upper_from_crossings(&k4).unwrap(), 5);
        let k5 = GeometricGraph::complete(regular_polygon(5).unwrap());
        assert_eq!(psi_upper_from_crossings(&k5).unwrap(), 8);
        assert_eq!(complete_coloring_cap(0), 1);
    }

    #[test]
    fn convex_ceiling_values() {
        assert_eq!(psi_upper_convex(4), 5);
        assert_eq!(psi_upper_convex(5), 7);
        assert_eq!(psi_upper_convex(13), 45);
    }

    #[test]
    fn isqrt_contract_holds_on_the_formula_inputs() {
        for t in (0u128..5000).chain([u64::MAX as u128, (1 << 100) + 12345]) {
            let x = 1 + 8 * t;
            let r = x.isqrt();
            assert!(r * r <= x && (r + 1) * (r + 1) > x);
        }
    }

    #[test]
    fn binomial_table() {
        assert_eq!(binomial(6, 4), 15);
        assert_eq!(binomial(14, 2), 91);
        assert_eq!(binomial(3, 4), 0);
        assert_eq!(binomial(100, 4), 3_921_225);
    }

    #[test]
    fn coefficients_sit_under_their_published_values() {
        let (upper, lower) = coefficient_check();
        assert!(upper > 0.178 && upper < 0.1781);
        assert!(lower > 0.0710 && lower < 0.07101);
    }

    #[test]
    fn asymptotic_report_needs_large_order() {
        assert!(matches!(asymptotic_report(18), Err(Error::InvalidOrder { .. })));
        let r = asymptotic_report(32).unwrap();
        assert_eq!(r.psi_g_lower_construction, Some(48));
        assert_eq!(r.m_incidences, 32 * binomial(31, 2));
        assert_eq!(r.cr_drawing, binomial(32, 4));
        assert!(r.psi_upper_crossing >= r.psi_upper_convex);
    }

    #[test]
    fn construction_classes_below_threshold_are_absent() {
        assert_eq!(general_lower_classes(18), None);
        assert_eq!(general_lower_classes(19), Some(12));
        assert_eq!(general_lower_classes(45), Some(108));
    }

    #[test]
    fn drawing_report_is_consistent() {
        let g = GeometricGraph::complete(regular_polygon(9).unwrap());
        let r = report_for(&g).unwrap();
        assert_eq!(r.n, 9);
        assert_eq!(r.cr_drawing, binomial(9, 4));
        assert_eq!(r.m_incidences, 9 * binomial(8, 2));
        assert_eq!(r.psi_upper_convex, 22);
        assert!(r.psi_upper_crossing >= 22);
        assert_eq!(r.psi_g_lower_construction, None);
    }

    #[cfg(feature = "parallel")]
    #[test]
    fn crossing_kernels_agree() {
        let g = GeometricGraph::complete(regular_polygon(12).unwrap());
        assert_eq!(count_crossings_seq(&g).unwrap(), count_crossings_par(&g).unwrap());
        assert_eq!(count_crossings(&g).unwrap(), count_crossings_seq(&g).unwrap());
    }
}
