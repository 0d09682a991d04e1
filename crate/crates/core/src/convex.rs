//! Tight complete colorings of convex complete graphs.
//!
//! Points are labeled 1..n in clockwise convex order and all label sums are
//! taken modulo n ([`wrap`] owns that mapping). The edge set splits into
//! circulant classes by circular label distance; the class at distance
//! ⌊n/2⌋ consists of the halving edges, which pairwise intersect and anchor
//! completeness. [`color_convex`] partitions the edges into singleton
//! classes (halving or almost-halving edges) and halving pairs, in four
//! branches by n mod 4, reaching exactly ⌊(n²+n)/4⌋ colors — which matches
//! the upper bound for any geometric graph, so the value is tight.

use crate::error::{Error, Result};
use crate::geom::{orient, Orientation, SegmentRelation};
use crate::graph::{complete_edge_position, complete_edges, Color, Coloring, EdgeId, GeometricGraph};

/// Map a 1-based cyclic index (possibly > n after sums) into 1..=n.
///
/// Single owner of the "all sums mod n" convention; keeping it in one place
/// avoids off-by-one drift between 1-based labels and 0-based residues.
pub(crate) fn wrap(n: usize, x: usize) -> usize {
    debug_assert!(x >= 1);
    (x - 1) % n + 1
}

/// Edge between two cyclic label expressions.
fn edge_cyc(n: usize, a: usize, b: usize) -> EdgeId {
    EdgeId::new(wrap(n, a), wrap(n, b))
}

fn succ(n: usize, x: usize) -> usize {
    wrap(n, x + 1)
}

/// Circular label distance between the endpoints, in 1..=⌊n/2⌋.
pub fn circular_distance(n: usize, e: EdgeId) -> usize {
    let (i, j) = e.endpoints();
    debug_assert!(j <= n);
    let d = j - i;
    d.min(n - d)
}

/// Relation of two edges of the convex n-gon from label arithmetic alone.
///
/// With labels in convex order, chords (a,b) and (c,d) cross exactly when
/// one of c, d lies strictly between a and b and the other does not. This
/// mirrors the geometric predicate and lets label-level machinery be checked
/// without coordinates.
pub fn convex_relation(n: usize, e: EdgeId, f: EdgeId) -> SegmentRelation {
    debug_assert!(e.j() <= n && f.j() <= n);
    if e.shares_endpoint(f) {
        return SegmentRelation::SharedEndpoint;
    }
    let (a, b) = e.endpoints();
    let strictly_inside = |x: usize| a < x && x < b;
    if strictly_inside(f.i()) != strictly_inside(f.j()) {
        SegmentRelation::Crossing
    } else {
        SegmentRelation::Disjoint
    }
}

/// Whether every two edges of the subset intersect, by label arithmetic.
pub fn is_thrackle_labels(n: usize, edges: &[EdgeId]) -> bool {
    for (s, &a) in edges.iter().enumerate() {
        for &b in &edges[s + 1..] {
            if convex_relation(n, a, b) == SegmentRelation::Disjoint {
                return false;
            }
        }
    }
    true
}

/// Whether the edge leaves at least ⌊(n−2)/2⌋ labels on each side.
///
/// On the convex n-gon the two open half-planes of the supporting line hold
/// exactly the two circular gaps between the endpoint labels, so the
/// half-plane definition reduces to a gap computation.
pub fn is_halving_edge(n: usize, e: EdgeId) -> bool {
    let (i, j) = e.endpoints();
    debug_assert!(j <= n);
    let gap_inner = j - i - 1;
    let gap_outer = n - (j - i) - 1;
    let need = (n - 2) / 2;
    gap_inner >= need && gap_outer >= need
}

/// The half-plane definition of a halving edge, evaluated on coordinates.
///
/// Redundant with [`is_halving_edge`] for convex clockwise labelings; the
/// two are asserted equal in tests to guard the index arithmetic.
pub fn is_halving_edge_geometric(g: &GeometricGraph, e: EdgeId) -> Result<bool> {
    let ps = g.points();
    let (a, b) = (ps.point(e.i()), ps.point(e.j()));
    let mut left = 0usize;
    let mut right = 0usize;
    for l in 1..=g.n() {
        if l == e.i() || l == e.j() {
            continue;
        }
        match orient(a, b, ps.point(l))? {
            Orientation::CounterClockwise => left += 1,
            Orientation::Clockwise => right += 1,
            Orientation::Collinear => {
                return Err(Error::GeneralPositionViolated { a: e.i(), b: e.j(), c: l })
            }
        }
    }
    let need = (g.n() - 2) / 2;
    Ok(left >= need && right >= need)
}

/// Whether some orientation (a,b) of the edge has e_{a,b+1} halving.
///
/// Defined for even order only; equivalent to circular distance n/2 − 1,
/// which tests assert.
pub fn is_almost_halving_edge(n: usize, e: EdgeId) -> Result<bool> {
    if n % 2 != 0 {
        return Err(Error::EvenOrderRequired { n });
    }
    let (i, j) = e.endpoints();
    for (a, b) in [(i, j), (j, i)] {
        let s = succ(n, b);
        if s != a && is_halving_edge(n, EdgeId::new(a, s)) {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Edges of the convex n-gon whose circular label distance lies in a
/// residue set.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CirculantClass {
    residues: Vec<usize>,
    edges: Vec<EdgeId>,
}

impl CirculantClass {
    /// Residues, sorted ascending, each in 1..=⌊n/2⌋.
    pub fn residues(&self) -> &[usize] {
        &self.residues
    }

    /// Member edges in lexicographic order.
    pub fn edges(&self) -> &[EdgeId] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }
}

/// The edges at the given circular distances.
pub fn circulant_class(n: usize, residues: &[usize]) -> CirculantClass {
    let mut residues = residues.to_vec();
    residues.sort_unstable();
    residues.dedup();
    debug_assert!(residues.iter().all(|&r| r >= 1 && r <= n / 2));
    let edges = complete_edges(n)
        .into_iter()
        .filter(|&e| residues.contains(&circular_distance(n, e)))
        .collect();
    CirculantClass { residues, edges }
}

/// The partition of E(Kₙ) into the residue classes the construction uses:
/// {⌊n/2⌋}, {⌊n/2⌋−1}, then {i, ⌊n/2⌋−1−i} for i = 1..⌊(⌊n/2⌋−1)/2⌋.
pub fn circulant_partition(n: usize) -> Vec<CirculantClass> {
    debug_assert!(n >= 3);
    let h = n / 2;
    let mut out = vec![circulant_class(n, &[h])];
    if h >= 2 {
        out.push(circulant_class(n, &[h - 1]));
        let i_top = (h - 1) / 2;
        for i in 1..=i_top {
            let ip = h - 1 - i;
            if ip == i {
                out.push(circulant_class(n, &[i]));
            } else {
                out.push(circulant_class(n, &[i, ip]));
            }
        }
    }
    out
}

/// Two disjoint edges e_{i,j}, e_{j+1,k} together with a halving edge
/// among e_{i,j+1}, e_{i,k}, e_{j,k} witnessing that any halving edge meets
/// the pair.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct HalvingPair {
    pub first: EdgeId,
    pub second: EdgeId,
    pub witness: EdgeId,
}

impl HalvingPair {
    /// Validate the full structure: members disjoint, cyclically adjacent
    /// (some endpoint of one member is the label successor of an endpoint of
    /// the other), and the witness one of the three admissible halving edges.
    pub fn new(n: usize, first: EdgeId, second: EdgeId, witness: EdgeId) -> Result<Self> {
        if convex_relation(n, first, second) != SegmentRelation::Disjoint {
            return Err(Error::NotHalvingPair { reason: "member edges are not disjoint" });
        }
        if !is_halving_edge(n, witness) {
            return Err(Error::NotHalvingPair { reason: "witness is not a halving edge" });
        }
        let mut structurally_ok = false;
        'outer: for (p, q) in [(first, second), (second, first)] {
            for j in [p.i(), p.j()] {
                let s = succ(n, j);
                if s != q.i() && s != q.j() {
                    continue;
                }
                let i = if j == p.i() { p.j() } else { p.i() };
                let k = if s == q.i() { q.j() } else { q.i() };
                let admissible =
                    [EdgeId::new(i, s), EdgeId::new(i, k), EdgeId::new(j, k)];
                if admissible.contains(&witness) {
                    structurally_ok = true;
                    break 'outer;
                }
            }
        }
        if !structurally_ok {
            return Err(Error::NotHalvingPair {
                reason: "members are not of the form e_{i,j}, e_{j+1,k} with this witness",
            });
        }
        Ok(HalvingPair { first, second, witness })
    }
}

/// Which n mod 4 branch (or small special case) produced a coloring.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CaseTag {
    /// n ≡ 3 (mod 4): one pair family, no leftover.
    OddA,
    /// n ≡ 1 (mod 4): two pair families plus one leftover repair.
    OddB,
    /// n ≡ 2 (mod 4): two pair families plus one leftover repair.
    EvenA,
    /// n ≡ 0 (mod 4): three pair families, no leftover.
    EvenB,
    /// n ∈ {3, 5}: explicit colorings.
    Small,
}

impl CaseTag {
    pub fn as_str(self) -> &'static str {
        match self {
            CaseTag::OddA => "odd-a",
            CaseTag::OddB => "odd-b",
            CaseTag::EvenA => "even-a",
            CaseTag::EvenB => "even-b",
            CaseTag::Small => "small",
        }
    }
}

/// What a chromatic class is made of.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ClassKind {
    /// One halving edge.
    Halving,
    /// A halving pair; the witness is recorded.
    Pair,
    /// One almost-halving edge from the even-order maximal thrackle.
    Almost,
    /// A class that absorbed the leftover edge of its branch.
    Repair,
}

impl ClassKind {
    pub fn as_str(self) -> &'static str {
        match self {
            ClassKind::Halving => "halving",
            ClassKind::Pair => "pair",
            ClassKind::Almost => "almost",
            ClassKind::Repair => "repair",
        }
    }
}

/// One chromatic class as the construction built it.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TraceClass {
    pub color: Color,
    pub edges: Vec<EdgeId>,
    pub kind: ClassKind,
    pub witness: Option<EdgeId>,
}

/// A leftover edge attached to an earlier class.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct RepairRecord {
    pub leftover: EdgeId,
    pub color: Color,
}

/// Complete per-class record of one run of [`color_convex`].
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ConstructionTrace {
    pub n: usize,
    pub case: CaseTag,
    /// Colors used by the first family of pairs (step 1).
    pub n1: usize,
    /// Colors used once the maximal thrackle is colored (step 2).
    pub n2: usize,
    /// Total colors; always ⌊(n²+n)/4⌋.
    pub n3: usize,
    /// One entry per color, ascending.
    pub classes: Vec<TraceClass>,
    /// The circulant classes whose disjoint union is E(Kₙ).
    pub partition: Vec<CirculantClass>,
    pub repairs: Vec<RepairRecord>,
}

/// ⌊(n²+n)/4⌋, the number of colors the construction must reach — the same
/// value the order-only upper bound caps it at.
pub fn tight_color_count(n: usize) -> usize {
    crate::bounds::psi_upper_convex(n)
}

/// Incrementally assembles a coloring while recording the trace; every
/// class goes through a structural check as it is added.
struct Builder {
    n: usize,
    colors: Vec<Option<Color>>,
    classes: Vec<TraceClass>,
    repairs: Vec<RepairRecord>,
}

impl Builder {
    fn new(n: usize) -> Self {
        Builder {
            n,
            colors: vec![None; n * (n - 1) / 2],
            classes: Vec::new(),
            repairs: Vec::new(),
        }
    }

    fn assign(&mut self, e: EdgeId, c: Color) {
        let pos = complete_edge_position(self.n, e);
        assert!(
            self.colors[pos].is_none(),
            "edge ({}, {}) would be colored twice",
            e.i(),
            e.j()
        );
        self.colors[pos] = Some(c);
    }

    fn next_color(&self) -> Color {
        self.classes.len() + 1
    }

    fn halving_singleton(&mut self, e: EdgeId) {
        assert!(is_halving_edge(self.n, e));
        let c = self.next_color();
        self.assign(e, c);
        self.classes.push(TraceClass { color: c, edges: vec![e], kind: ClassKind::Halving, witness: None });
    }

    fn almost_singleton(&mut self, e: EdgeId) {
        assert!(matches!(is_almost_halving_edge(self.n, e), Ok(true)));
        let c = self.next_color();
        self.assign(e, c);
        self.classes.push(TraceClass { color: c, edges: vec![e], kind: ClassKind::Almost, witness: None });
    }

    fn pair(&mut self, first: EdgeId, second: EdgeId, witness: EdgeId) -> Result<()> {
        let p = HalvingPair::new(self.n, first, second, witness)?;
        let c = self.next_color();
        self.assign(p.first, c);
        self.assign(p.second, c);
        self.classes.push(TraceClass {
            color: c,
            edges: vec![p.first, p.second],
            kind: ClassKind::Pair,
            witness: Some(p.witness),
        });
        Ok(())
    }

    /// Attach a leftover edge to an existing class. The result must stay
    /// proper, so the leftover is checked disjoint from every member.
    fn repair(&mut self, leftover: EdgeId, c: Color) {
        let class = &mut self.classes[c - 1];
        for &m in &class.edges {
            assert!(
                convex_relation(self.n, leftover, m) == SegmentRelation::Disjoint,
                "leftover ({}, {}) intersects class {} member ({}, {})",
                leftover.i(),
                leftover.j(),
                c,
                m.i(),
                m.j()
            );
        }
        class.edges.push(leftover);
        class.kind = ClassKind::Repair;
        class.witness = None;
        self.assign(leftover, c);
        self.repairs.push(RepairRecord { leftover, color: c });
    }

    fn finish(self, case: CaseTag, n1: usize, n2: usize) -> Result<(Coloring, ConstructionTrace)> {
        let n3 = self.classes.len();
        assert_eq!(n3, tight_color_count(self.n), "color count must be ⌊(n²+n)/4⌋");
        let colors: Vec<Color> = self
            .colors
            .iter()
            .enumerate()
            .map(|(pos, c)| c.unwrap_or_else(|| panic!("edge at position {pos} left uncolored")))
            .collect();
        let coloring = Coloring::from_parts(colors)?;
        let trace = ConstructionTrace {
            n: self.n,
            case,
            n1,
            n2,
            n3,
            classes: self.classes,
            partition: circulant_partition(self.n),
            repairs: self.repairs,
        };
        Ok((coloring, trace))
    }
}

/// Proper complete coloring of the convex Kₙ with exactly ⌊(n²+n)/4⌋
/// colors, for labels 1..n in clockwise convex order.
///
/// n = 4 is the one order where proper and pseudo part ways; it signals
/// [`Error::UseK4Variant`] and is served by [`color_k4`].
pub fn color_convex(n: usize) -> Result<(Coloring, ConstructionTrace)> {
    match n {
        0..=2 => Err(Error::InvalidOrder { n, min: 3 }),
        4 => Err(Error::UseK4Variant),
        3 => small_3(),
        5 => small_5(),
        _ => general(n),
    }
}

/// K₃: three singleton classes; each edge is halving (both gaps are 0 and
/// ⌊(n−2)/2⌋ = 0).
fn small_3() -> Result<(Coloring, ConstructionTrace)> {
    let mut b = Builder::new(3);
    b.halving_singleton(EdgeId::new(1, 2));
    b.halving_singleton(EdgeId::new(1, 3));
    b.halving_singleton(EdgeId::new(2, 3));
    b.finish(CaseTag::Small, 0, 0)
}

/// K₅: four halving singletons and three halving pairs, reaching k = 7.
fn small_5() -> Result<(Coloring, ConstructionTrace)> {
    let e = EdgeId::new;
    let mut b = Builder::new(5);
    b.halving_singleton(e(1, 3));
    b.halving_singleton(e(3, 5));
    b.halving_singleton(e(1, 4));
    b.halving_singleton(e(2, 5));
    b.pair(e(1, 2), e(3, 4), e(1, 4))?;
    b.pair(e(2, 3), e(4, 5), e(2, 5))?;
    b.pair(e(2, 4), e(5, 1), e(2, 5))?;
    b.finish(CaseTag::Small, 0, 0)
}

/// Which variant of the two K₄ colorings to use.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum K4Variant {
    /// Proper and complete with 4 colors (the achromatic optimum).
    Alpha,
    /// Complete but not proper with 5 colors (the pseudoachromatic optimum).
    Psi,
}

/// The two explicit K₄ colorings: (psi variant, alpha variant).
///
/// K₄ is the single order where the two indices differ: the 5-color
/// complete coloring cannot be proper, and the proper optimum is 4.
pub fn color_k4() -> (Coloring, Coloring) {
    // Classes {e14,e34} + singletons e12, e23, e13, e24.
    let psi = Coloring::from_parts(vec![2, 4, 1, 3, 5, 1]).expect("valid by construction");
    // Classes {e12,e34}, {e23,e14} + singletons e13, e24.
    let alpha = Coloring::from_parts(vec![1, 3, 2, 2, 4, 1]).expect("valid by construction");
    (psi, alpha)
}

/// One K₄ coloring by variant.
pub fn color_k4_variant(variant: K4Variant) -> Coloring {
    let (psi, alpha) = color_k4();
    match variant {
        K4Variant::Psi => psi,
        K4Variant::Alpha => alpha,
    }
}

/// The n mod 4 case analysis for n ≥ 6.
fn general(n: usize) -> Result<(Coloring, ConstructionTrace)> {
    let h = n / 2; //       ⌊n/2⌋: halving distance
    let i2 = h - 1; //      i″: the almost-halving distance, last residue
    let i_top = i2 / 2; //  the i whose class is colored in step 3
    let mut b = Builder::new(n);

    // Step 1: for i below i_top, pair C_n({i}) against C_n({i'}) shifted by
    // one position; colors (i−1)n + j.
    for i in 1..i_top {
        let ip = i2 - i;
        for j in 1..=n {
            b.pair(
                edge_cyc(n, j, j + i),
                edge_cyc(n, j + i + 1, j + i + 1 + ip),
                edge_cyc(n, j, j + h),
            )?;
        }
    }
    let n1 = n * (i_top - 1);
    debug_assert_eq!(b.classes.len(), n1);

    // Step 2: the maximal thrackle gets n singleton colors — all n halving
    // edges when n is odd; the n/2 halving edges plus the first half of the
    // almost-halving edges when n is even.
    if n % 2 == 1 {
        for j in 1..=n {
            b.halving_singleton(edge_cyc(n, j, j + h));
        }
    } else {
        for j in 1..=h {
            b.halving_singleton(edge_cyc(n, j, j + h));
        }
        for j in 1..=h {
            b.almost_singleton(edge_cyc(n, j, j + i2));
        }
    }
    let n2 = n1 + n;
    debug_assert_eq!(b.classes.len(), n2);

    // Step 3: the class of distance i_top (paired with its complement
    // distance i'), plus whatever distance-i″ edges step 2 left over.
    let i = i_top;
    let ip = i2 - i;
    let case = match n % 4 {
        3 => {
            // i = i': C_n({i}) pairs against C_n({i″}).
            for j in 1..=n {
                b.pair(
                    edge_cyc(n, j, j + i),
                    edge_cyc(n, j + i + 1, j + i + 1 + i2),
                    edge_cyc(n, j + i, j + i + 1 + i2),
                )?;
            }
            CaseTag::OddA
        }
        1 => {
            // i ≠ i': C_n({i,i'}) in n pairs, then C_n({i″}) folded onto
            // itself in ⌊n/2⌋ pairs, leaving e_{n,⌊n/2⌋−1} for repair.
            for j in 1..=n {
                b.pair(
                    edge_cyc(n, j, j + i),
                    edge_cyc(n, j + i + 1, j + i + 1 + ip),
                    edge_cyc(n, j, j + h),
                )?;
            }
            for j in 1..=h {
                b.pair(
                    edge_cyc(n, j, j + i2),
                    edge_cyc(n, j + i2 + 1, j + i2 + 1 + i2),
                    edge_cyc(n, j, j + h),
                )?;
            }
            b.repair(edge_cyc(n, n, h - 1), n1 + h);
            CaseTag::OddB
        }
        2 => {
            // i = i': the second thrackle half C″ pairs against half of
            // C_n({i}); the rest of C_n({i}) folds onto itself, leaving
            // e_{n/2+⌊n/4⌋+1,n} for repair.
            for j in 1..=h {
                b.pair(
                    edge_cyc(n, h + j, h + j + i2),
                    edge_cyc(n, h + j + i2 + 1, h + j + i2 + 1 + i),
                    edge_cyc(n, h + j, h + j + i2 + 1),
                )?;
            }
            for j in 1..=n / 4 {
                b.pair(
                    edge_cyc(n, h + j, h + j + i),
                    edge_cyc(n, h + j + i + 1, h + j + i + 1 + i),
                    edge_cyc(n, h + j, h + j + i + 1 + i),
                )?;
            }
            b.repair(edge_cyc(n, h + n / 4 + 1, n), n1 + 1);
            CaseTag::EvenA
        }
        0 => {
            // i ≠ i': C″ pairs against quarters of C_n({i}) and C_n({i'}),
            // then the remaining three quarters pair i against i'.
            let q = n / 4;
            for j in 1..=q {
                b.pair(
                    edge_cyc(n, h + j, h + j + i2),
                    edge_cyc(n, h + j + i2 + 1, h + j + i2 + 1 + i),
                    edge_cyc(n, h + j, h + j + i2 + 1),
                )?;
            }
            for j in 1..=q {
                b.pair(
                    edge_cyc(n, 3 * q + j, 3 * q + j + i2),
                    edge_cyc(n, 3 * q + j + i2 + 1, 3 * q + j + i2 + 1 + ip),
                    edge_cyc(n, 3 * q + j, 3 * q + j + i2 + 1),
                )?;
            }
            for j in 1..=3 * q {
                b.pair(
                    edge_cyc(n, q + j, q + j + i),
                    edge_cyc(n, q + j + i + 1, q + j + i + 1 + ip),
                    edge_cyc(n, q + j, q + j + i + 1 + ip),
                )?;
            }
            CaseTag::EvenB
        }
        _ => unreachable!(),
    };
    b.finish(case, n1, n2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::regular_polygon;
    use crate::graph::verify;

    #[test]
    fn wrap_owns_the_modular_convention() {
        assert_eq!(wrap(13, 13), 13);
        assert_eq!(wrap(13, 14), 1);
        assert_eq!(wrap(13, 27), 1);
        assert_eq!(succ(5, 5), 1);
    }

    #[test]
    fn circular_distance_is_symmetric_in_the_arc() {
        assert_eq!(circular_distance(13, EdgeId::new(1, 7)), 6);
        assert_eq!(circular_distance(13, EdgeId::new(1, 8)), 6);
        assert_eq!(circular_distance(13, EdgeId::new(2, 13)), 2);
        assert_eq!(circular_distance(6, EdgeId::new(1, 4)), 3);
    }

    #[test]
    fn halving_examples() {
        assert!(is_halving_edge(13, EdgeId::new(1, 7)));
        assert!(!is_halving_edge(13, EdgeId::new(1, 2)));
        assert!(is_halving_edge(14, EdgeId::new(1, 8)));
        assert!(!is_halving_edge(14, EdgeId::new(1, 7)));
    }

    #[test]
    fn almost_halving_examples() {
        assert_eq!(is_almost_halving_edge(14, EdgeId::new(1, 7)), Ok(true));
        assert_eq!(is_almost_halving_edge(14, EdgeId::new(1, 8)), Ok(false));
        assert!(matches!(
            is_almost_halving_edge(13, EdgeId::new(1, 7)),
            Err(Error::EvenOrderRequired { n: 13 })
        ));
    }

    #[test]
    fn almost_halving_equals_distance_characterization() {
        for n in [6usize, 8, 10, 14, 20, 30] {
            for e in complete_edges(n) {
                let by_def = is_almost_halving_edge(n, e).unwrap();
                let by_dist = circular_distance(n, e) == n / 2 - 1;
                assert_eq!(by_def, by_dist, "n={n}, e=({},{})", e.i(), e.j());
            }
        }
    }

    #[test]
    fn convex_relation_matches_geometry() {
        for n in [4usize, 5, 8, 11] {
            let g = GeometricGraph::complete(regular_polygon(n).unwrap());
            let rel = g.relation().unwrap();
            let edges = g.edges();
            for a in 0..edges.len() {
                for b in (a + 1)..edges.len() {
                    assert_eq!(
                        convex_relation(n, edges[a], edges[b]),
                        rel.get(a, b),
                        "n={n}, edges {:?} {:?}",
                        edges[a],
                        edges[b]
                    );
                }
            }
        }
    }

    #[test]
    fn partition_residues_match_the_three_term_shape() {
        let p13: Vec<Vec<usize>> =
            circulant_partition(13).iter().map(|c| c.residues().to_vec()).collect();
        assert_eq!(p13, vec![vec![6], vec![5], vec![1, 4], vec![2, 3]]);
        let p14: Vec<Vec<usize>> =
            circulant_partition(14).iter().map(|c| c.residues().to_vec()).collect();
        assert_eq!(p14, vec![vec![7], vec![6], vec![1, 5], vec![2, 4], vec![3]]);
        let p5: Vec<Vec<usize>> =
            circulant_partition(5).iter().map(|c| c.residues().to_vec()).collect();
        assert_eq!(p5, vec![vec![2], vec![1]]);
    }

    #[test]
    fn partition_is_exact_with_documented_sizes() {
        for n in 3..=31 {
            let classes = circulant_partition(n);
            let mut seen = vec![false; n * (n - 1) / 2];
            for class in &classes {
                let expect: usize = class
                    .residues()
                    .iter()
                    .map(|&r| if n % 2 == 0 && r == n / 2 { n / 2 } else { n })
                    .sum();
                assert_eq!(class.len(), expect, "n={n}, residues {:?}", class.residues());
                for &e in class.edges() {
                    let pos = complete_edge_position(n, e);
                    assert!(!seen[pos], "edge counted twice at n={n}");
                    seen[pos] = true;
                }
            }
            assert!(seen.iter().all(|&s| s), "partition misses edges at n={n}");
        }
    }

    #[test]
    fn halving_pair_validation_rejects_bad_structures() {
        // Members intersect.
        assert!(matches!(
            HalvingPair::new(13, EdgeId::new(1, 7), EdgeId::new(7, 12), EdgeId::new(1, 7)),
            Err(Error::NotHalvingPair { .. })
        ));
        // Witness not halving.
        assert!(matches!(
            HalvingPair::new(13, EdgeId::new(1, 2), EdgeId::new(3, 8), EdgeId::new(2, 3)),
            Err(Error::NotHalvingPair { .. })
        ));
        // Members not label-adjacent.
        assert!(matches!(
            HalvingPair::new(13, EdgeId::new(1, 2), EdgeId::new(4, 9), EdgeId::new(1, 7)),
            Err(Error::NotHalvingPair { .. })
        ));
        // A genuine pair: e_{1,3}, e_{4,9} with witness e_{3,9}.
        assert!(HalvingPair::new(13, EdgeId::new(1, 3), EdgeId::new(4, 9), EdgeId::new(3, 9)).is_ok());
    }

    #[test]
    fn color_convex_rejects_unsupported_orders() {
        assert!(matches!(color_convex(0), Err(Error::InvalidOrder { .. })));
        assert!(matches!(color_convex(2), Err(Error::InvalidOrder { .. })));
        assert!(matches!(color_convex(4), Err(Error::UseK4Variant)));
    }

    #[test]
    fn k5_matches_the_explicit_seven_color_table() {
        let (c, trace) = color_convex(5).unwrap();
        assert_eq!(c.colors(), &[5, 1, 3, 7, 6, 7, 4, 5, 2, 6]);
        assert_eq!(c.k(), 7);
        assert_eq!(trace.case, CaseTag::Small);
        assert_eq!(trace.n3, 7);
    }

    #[test]
    fn k4_variants_have_the_documented_shapes() {
        let (psi, alpha) = color_k4();
        assert_eq!(psi.colors(), &[2, 4, 1, 3, 5, 1]);
        assert_eq!(alpha.colors(), &[1, 3, 2, 2, 4, 1]);
        let g = GeometricGraph::complete(regular_polygon(4).unwrap());
        let rp = verify(&g, &psi).unwrap();
        assert!(rp.is_complete && !rp.is_proper);
        assert_eq!(rp.k, 5);
        let ra = verify(&g, &alpha).unwrap();
        assert!(ra.is_complete && ra.is_proper);
        assert_eq!(ra.k, 4);
    }

    #[test]
    fn tight_count_table() {
        for (n, k) in [(3, 3), (5, 7), (6, 10), (7, 14), (13, 45), (14, 52), (16, 68)] {
            assert_eq!(tight_color_count(n), k);
        }
    }

    #[test]
    fn construction_verifies_on_representative_orders() {
        // One of each branch plus the smallest cases.
        for n in [3usize, 5, 6, 7, 8, 9, 13, 14, 15, 16, 17] {
            let (c, trace) = color_convex(n).unwrap();
            assert_eq!(c.k(), tight_color_count(n), "k at n={n}");
            assert_eq!(trace.n3, c.k());
            let g = GeometricGraph::complete(regular_polygon(n).unwrap());
            let report = verify(&g, &c).unwrap();
            assert!(report.is_proper, "proper at n={n}");
            assert!(report.is_complete, "complete at n={n}");
            assert!(report.singleton_classes <= n, "singleton bound at n={n}");
        }
    }

    #[test]
    fn case_tags_follow_n_mod_4() {
        assert_eq!(color_convex(7).unwrap().1.case, CaseTag::OddA);
        assert_eq!(color_convex(9).unwrap().1.case, CaseTag::OddB);
        assert_eq!(color_convex(6).unwrap().1.case, CaseTag::EvenA);
        assert_eq!(color_convex(8).unwrap().1.case, CaseTag::EvenB);
    }

    #[test]
    fn repairs_occur_exactly_in_the_two_documented_branches() {
        for n in 6..=40 {
            let (_, trace) = match color_convex(n) {
                Ok(v) => v,
                Err(Error::UseK4Variant) => continue,
                Err(e) => panic!("n={n}: {e}"),
            };
            match n % 4 {
                1 => {
                    assert_eq!(trace.repairs.len(), 1);
                    let h = n / 2;
                    assert_eq!(trace.repairs[0].leftover, EdgeId::new(h - 1, n));
                    assert_eq!(trace.repairs[0].color, trace.n1 + h);
                }
                2 => {
                    assert_eq!(trace.repairs.len(), 1);
                    assert_eq!(
                        trace.repairs[0].leftover,
                        EdgeId::new(n / 2 + n / 4 + 1, n)
                    );
                    assert_eq!(trace.repairs[0].color, trace.n1 + 1);
                }
                _ => assert!(trace.repairs.is_empty(), "unexpected repair at n={n}"),
            }
        }
    }

    #[test]
    fn trace_classes_are_structurally_sound() {
        for n in [6usize, 9, 10, 12, 14, 19, 20, 21, 22] {
            let (c, trace) = color_convex(n).unwrap();
            assert_eq!(trace.classes.len(), c.k());
            for (idx, class) in trace.classes.iter().enumerate() {
                assert_eq!(class.color, idx + 1);
                assert!(class.edges.len() <= 3);
                match class.kind {
                    ClassKind::Halving => {
                        assert_eq!(class.edges.len(), 1);
                        assert!(is_halving_edge(n, class.edges[0]));
                    }
                    ClassKind::Almost => {
                        assert_eq!(class.edges.len(), 1);
                        assert_eq!(is_almost_halving_edge(n, class.edges[0]), Ok(true));
                    }
                    ClassKind::Pair => {
                        assert_eq!(class.edges.len(), 2);
                        let w = class.witness.expect("pairs carry a witness");
                        HalvingPair::new(n, class.edges[0], class.edges[1], w).unwrap();
                    }
                    ClassKind::Repair => {
                        assert!(class.edges.len() >= 2);
                        for (s, &a) in class.edges.iter().enumerate() {
                            for &b in &class.edges[s + 1..] {
                                assert_eq!(convex_relation(n, a, b), SegmentRelation::Disjoint);
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn halving_class_is_a_thrackle_of_the_right_size() {
        for n in [7usize, 13, 14, 30] {
            let halving = circulant_class(n, &[n / 2]);
            let expect = if n % 2 == 0 { n / 2 } else { n };
            assert_eq!(halving.len(), expect);
            assert!(is_thrackle_labels(n, halving.edges()));
        }
        assert!(!is_thrackle_labels(6, &[EdgeId::new(1, 2), EdgeId::new(3, 4)]));
    }
}
