//! Geometric graphs, edge colorings, and the coloring verifier.
//!
//! A geometric graph is a labelled point set in general position plus a set
//! of straight-line edges. Two edges *intersect* when they share an endpoint
//! or cross; the pairwise relation of all edges is materialized once per
//! graph and shared by every verification pass, so geometric predicates run
//! O(E^2) times total regardless of how often a graph is re-verified.

use std::collections::HashMap;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::geom::{
    segments_intersect, segments_intersect_unchecked, PointSet, Segment, SegmentRelation,
};

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// 1-based color identifier.
pub type Color = usize;

/// An undirected edge between two 1-based point labels, stored with i < j.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct EdgeId {
    i: u32,
    j: u32,
}

impl EdgeId {
    /// Normalizing constructor; panics on a loop or a zero label.
    pub fn new(a: usize, b: usize) -> Self {
        assert!(a != b && a >= 1 && b >= 1, "edge labels must be distinct and 1-based");
        let (i, j) = if a < b { (a, b) } else { (b, a) };
        EdgeId { i: i as u32, j: j as u32 }
    }

    /// Fallible constructor for data read from the outside.
    pub fn try_new(a: usize, b: usize, n: usize) -> Result<Self> {
        if a == b || a < 1 || b < 1 || a > n || b > n {
            return Err(Error::InvalidEdge { a, b, n });
        }
        Ok(Self::new(a, b))
    }

    /// Smaller endpoint label.
    pub fn i(self) -> usize {
        self.i as usize
    }

    /// Larger endpoint label.
    pub fn j(self) -> usize {
        self.j as usize
    }

    pub fn endpoints(self) -> (usize, usize) {
        (self.i(), self.j())
    }

    pub fn shares_endpoint(self, other: EdgeId) -> bool {
        self.i == other.i || self.i == other.j || self.j == other.i || self.j == other.j
    }
}

/// Edges of the complete graph on n labels, lexicographically ordered.
pub fn complete_edges(n: usize) -> Vec<EdgeId> {
    let mut edges = Vec::with_capacity(n * (n - 1) / 2);
    for i in 1..=n {
        for j in (i + 1)..=n {
            edges.push(EdgeId::new(i, j));
        }
    }
    edges
}

/// Position of an edge inside [`complete_edges`]`(n)`.
pub fn complete_edge_position(n: usize, e: EdgeId) -> usize {
    let (i, j) = e.endpoints();
    (i - 1) * (2 * n - i) / 2 + (j - i - 1)
}

/// A point set plus an explicit straight-line edge list.
#[derive(Debug)]
pub struct GeometricGraph {
    points: PointSet,
    edges: Vec<EdgeId>,
    index: HashMap<EdgeId, usize>,
    relation: OnceLock<IntersectionRelation>,
}

impl GeometricGraph {
    pub fn new(points: PointSet, edges: Vec<EdgeId>) -> Result<Self> {
        let n = points.len();
        let mut index = HashMap::with_capacity(edges.len());
        for (pos, &e) in edges.iter().enumerate() {
            if e.j() > n {
                return Err(Error::InvalidEdge { a: e.i(), b: e.j(), n });
            }
            if index.insert(e, pos).is_some() {
                return Err(Error::DuplicateEdge { a: e.i(), b: e.j() });
            }
        }
        Ok(GeometricGraph { points, edges, index, relation: OnceLock::new() })
    }

    /// The complete geometric graph on the given points.
    pub fn complete(points: PointSet) -> Self {
        let edges = complete_edges(points.len());
        Self::new(points, edges).expect("complete edge list is valid by construction")
    }

    pub fn n(&self) -> usize {
        self.points.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn points(&self) -> &PointSet {
        &self.points
    }

    pub fn edges(&self) -> &[EdgeId] {
        &self.edges
    }

    /// Index of an edge in the enumeration order, if present.
    pub fn edge_position(&self, e: EdgeId) -> Option<usize> {
        self.index.get(&e).copied()
    }

    pub fn segment(&self, e: EdgeId) -> Segment {
        Segment { a: self.points.point(e.i()), b: self.points.point(e.j()) }
    }

    /// The pairwise edge relation, built on first use and cached.
    pub fn relation(&self) -> Result<&IntersectionRelation> {
        if let Some(r) = self.relation.get() {
            return Ok(r);
        }
        let built = IntersectionRelation::build(self)?;
        Ok(self.relation.get_or_init(|| built))
    }
}

/// Materialized pairwise segment relations for one graph's edge list,
/// stored as a triangular table over edge indices.
#[derive(Clone, Debug)]
pub struct IntersectionRelation {
    m: usize,
    table: Vec<SegmentRelation>,
}

impl IntersectionRelation {
    /// Build with the default strategy (parallel when the `parallel` feature
    /// is enabled, sequential otherwise).
    pub fn build(g: &GeometricGraph) -> Result<Self> {
        #[cfg(feature = "parallel")]
        {
            Self::build_par(g)
        }
        #[cfg(not(feature = "parallel"))]
        {
            Self::build_seq(g)
        }
    }

    /// Always-sequential build; kept public so benchmarks can compare it
    /// against the data-parallel build.
    pub fn build_seq(g: &GeometricGraph) -> Result<Self> {
        let m = g.edge_count();
        let mut table = Vec::with_capacity(m * (m.max(1) - 1) / 2);
        for a in 0..m {
            let sa = g.segment(g.edges[a]);
            for b in (a + 1)..m {
                table.push(segments_intersect_unchecked(sa, g.segment(g.edges[b]))?);
            }
        }
        Ok(IntersectionRelation { m, table })
    }

    /// Data-parallel build over rows of the triangular table.
    #[cfg(feature = "parallel")]
    pub fn build_par(g: &GeometricGraph) -> Result<Self> {
        let m = g.edge_count();
        let rows: Vec<Vec<SegmentRelation>> = (0..m)
            .into_par_iter()
            .map(|a| {
                let sa = g.segment(g.edges[a]);
                ((a + 1)..m)
                    .map(|b| segments_intersect_unchecked(sa, g.segment(g.edges[b])))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        let mut table = Vec::with_capacity(m * (m.max(1) - 1) / 2);
        for row in rows {
            table.extend(row);
        }
        Ok(IntersectionRelation { m, table })
    }

    fn idx(&self, a: usize, b: usize) -> usize {
        debug_assert!(a < b && b < self.m);
        a * (2 * self.m - a - 1) / 2 + (b - a - 1)
    }

    /// Relation between two distinct edge indices.
    pub fn get(&self, a: usize, b: usize) -> SegmentRelation {
        let (a, b) = if a < b { (a, b) } else { (b, a) };
        self.table[self.idx(a, b)]
    }

    pub fn intersects(&self, a: usize, b: usize) -> bool {
        self.get(a, b).intersects()
    }

    /// Number of crossing pairs in the table.
    pub fn crossing_count(&self) -> usize {
        self.table.iter().filter(|r| matches!(r, SegmentRelation::Crossing)).count()
    }

    pub fn edge_count(&self) -> usize {
        self.m
    }
}

/// A total, surjective assignment of colors 1..=k to a graph's edge list,
/// stored parallel to the edge enumeration.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Coloring {
    k: usize,
    colors: Vec<Color>,
}

impl Coloring {
    /// Validate totality and surjectivity onto 1..=k (k = max color used).
    pub fn from_parts(colors: Vec<Color>) -> Result<Self> {
        if colors.is_empty() {
            return Err(Error::MalformedColoring { reason: "no edges are colored".into() });
        }
        let k = *colors.iter().max().expect("nonempty");
        if colors.iter().any(|&c| c == 0) {
            return Err(Error::MalformedColoring { reason: "colors are 1-based; found 0".into() });
        }
        let mut used = vec![false; k];
        for &c in &colors {
            used[c - 1] = true;
        }
        if let Some(missing) = used.iter().position(|u| !u) {
            return Err(Error::MalformedColoring {
                reason: format!("color {} in 1..={} is never used", missing + 1, k),
            });
        }
        Ok(Coloring { k, colors })
    }

    /// Number of colors.
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    /// Color of the edge at a given enumeration index.
    pub fn color_at(&self, edge_index: usize) -> Color {
        self.colors[edge_index]
    }

    pub fn colors(&self) -> &[Color] {
        &self.colors
    }

    /// Edge indices grouped by color; entry c-1 lists the class of color c.
    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut classes = vec![Vec::new(); self.k];
        for (idx, &c) in self.colors.iter().enumerate() {
            classes[c - 1].push(idx);
        }
        classes
    }
}

/// A coloring of a subset of the edges of K_n.
///
/// Constructions that color many pairwise intersecting classes leave most
/// edges untouched; this records only the colored ones. Colors are 1..=k
/// with every color used, but totality is not required.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PartialColoring {
    n: usize,
    k: usize,
    assignments: Vec<(EdgeId, Color)>,
}

impl PartialColoring {
    /// Build from classes listed in color order: class index c (0-based)
    /// becomes color c + 1. Classes must be nonempty, edges must name
    /// vertices of K_n, and no edge may appear twice.
    pub fn from_classes(n: usize, classes: &[Vec<EdgeId>]) -> Result<Self> {
        if classes.is_empty() {
            return Err(Error::MalformedColoring { reason: "no classes".into() });
        }
        let mut assignments: Vec<(EdgeId, Color)> = Vec::new();
        for (idx, class) in classes.iter().enumerate() {
            if class.is_empty() {
                return Err(Error::MalformedColoring {
                    reason: format!("class {} is empty", idx + 1),
                });
            }
            for &e in class {
                if e.j() > n {
                    return Err(Error::InvalidEdge { a: e.i(), b: e.j(), n });
                }
                assignments.push((e, idx + 1));
            }
        }
        let mut edges: Vec<EdgeId> = assignments.iter().map(|&(e, _)| e).collect();
        edges.sort_unstable();
        if let Some(w) = edges.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateEdge { a: w[0].i(), b: w[0].j() });
        }
        Ok(PartialColoring { n, k: classes.len(), assignments })
    }

    /// Order of the underlying complete graph.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of colors.
    pub fn k(&self) -> usize {
        self.k
    }

    /// Number of colored edges.
    pub fn len(&self) -> usize {
        self.assignments.len()
    }

    pub fn is_empty(&self) -> bool {
        self.assignments.is_empty()
    }

    /// The (edge, color) pairs in class order.
    pub fn assignments(&self) -> &[(EdgeId, Color)] {
        &self.assignments
    }

    /// Classes by color, 0-indexed: entry c holds color c + 1.
    pub fn classes(&self) -> Vec<Vec<EdgeId>> {
        let mut classes = vec![Vec::new(); self.k];
        for &(e, c) in &self.assignments {
            classes[c - 1].push(e);
        }
        classes
    }
}

/// Everything `verify` learns about one coloring.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct VerificationReport {
    /// No two edges of the same color intersect.
    pub is_proper: bool,
    /// Every pair of distinct colors meets on some intersecting edge pair.
    pub is_complete: bool,
    /// Number of colors.
    pub k: usize,
    /// Number of classes containing exactly one edge.
    pub singleton_classes: usize,
    /// Same-color intersecting pairs, by edge id.
    pub proper_violations: Vec<(EdgeId, EdgeId)>,
    /// Color pairs with no intersecting representatives.
    pub completeness_violations: Vec<(Color, Color)>,
}

/// Check properness and completeness of a coloring against a graph.
///
/// Deterministic and independent of edge enumeration order: verdicts depend
/// only on the set of (edge, color) pairs. The completeness scan
/// short-circuits per color pair on the first intersecting representative.
pub fn verify(g: &GeometricGraph, c: &Coloring) -> Result<VerificationReport> {
    if c.len() != g.edge_count() {
        return Err(Error::MalformedColoring {
            reason: format!("coloring covers {} edges, graph has {}", c.len(), g.edge_count()),
        });
    }
    let rel = g.relation()?;
    let classes = c.classes();

    let mut proper_violations: Vec<(EdgeId, EdgeId)> = Vec::new();
    for class in &classes {
        for (s, &a) in class.iter().enumerate() {
            for &b in &class[s + 1..] {
                if rel.intersects(a, b) {
                    proper_violations.push((g.edges[a], g.edges[b]));
                }
            }
        }
    }

    let completeness_violations = completeness_scan(rel, &classes);

    let singleton_classes = classes.iter().filter(|cl| cl.len() == 1).count();
    Ok(VerificationReport {
        is_proper: proper_violations.is_empty(),
        is_complete: completeness_violations.is_empty(),
        k: c.k(),
        singleton_classes,
        proper_violations,
        completeness_violations,
    })
}

/// Fully sequential variant of [`verify`], for benchmarking against the
/// parallel default.
pub fn verify_seq(g: &GeometricGraph, c: &Coloring) -> Result<VerificationReport> {
    if c.len() != g.edge_count() {
        return Err(Error::MalformedColoring {
            reason: format!("coloring covers {} edges, graph has {}", c.len(), g.edge_count()),
        });
    }
    let rel = g.relation()?;
    let classes = c.classes();
    let mut proper_violations: Vec<(EdgeId, EdgeId)> = Vec::new();
    for class in &classes {
        for (s, &a) in class.iter().enumerate() {
            for &b in &class[s + 1..] {
                if rel.intersects(a, b) {
                    proper_violations.push((g.edges[a], g.edges[b]));
                }
            }
        }
    }
    let mut completeness_violations = Vec::new();
    for c1 in 0..classes.len() {
        for c2 in (c1 + 1)..classes.len() {
            if !classes_meet(rel, &classes[c1], &classes[c2]) {
                completeness_violations.push((c1 + 1, c2 + 1));
            }
        }
    }
    let singleton_classes = classes.iter().filter(|cl| cl.len() == 1).count();
    Ok(VerificationReport {
        is_proper: proper_violations.is_empty(),
        is_complete: completeness_violations.is_empty(),
        k: c.k(),
        singleton_classes,
        proper_violations,
        completeness_violations,
    })
}

fn classes_meet(rel: &IntersectionRelation, c1: &[usize], c2: &[usize]) -> bool {
    c1.iter().any(|&a| c2.iter().any(|&b| rel.intersects(a, b)))
}

#[cfg(feature = "parallel")]
fn completeness_scan(rel: &IntersectionRelation, classes: &[Vec<usize>]) -> Vec<(Color, Color)> {
    let k = classes.len();
    let mut violations: Vec<(Color, Color)> = (0..k)
        .into_par_iter()
        .flat_map_iter(|c1| {
            ((c1 + 1)..k)
                .filter(move |&c2| !classes_meet(rel, &classes[c1], &classes[c2]))
                .map(move |c2| (c1 + 1, c2 + 1))
        })
        .collect();
    violations.sort_unstable();
    violations
}

#[cfg(not(feature = "parallel"))]
fn completeness_scan(rel: &IntersectionRelation, classes: &[Vec<usize>]) -> Vec<(Color, Color)> {
    let k = classes.len();
    let mut violations = Vec::new();
    for c1 in 0..k {
        for c2 in (c1 + 1)..k {
            if !classes_meet(rel, &classes[c1], &classes[c2]) {
                violations.push((c1 + 1, c2 + 1));
            }
        }
    }
    violations
}

/// Whether a complete coloring has at most n singleton classes.
///
/// Any maximal set of pairwise-intersecting edges has at most n members, and
/// distinct singleton classes of a complete coloring are exactly such a set,
/// so every complete coloring obeys the bound; this re-checks it directly.
pub fn singleton_bound_holds(g: &GeometricGraph, c: &Coloring) -> Result<bool> {
    let report = verify(g, c)?;
    if !report.is_complete {
        return Err(Error::NotComplete { missing: report.completeness_violations.len() });
    }
    Ok(report.singleton_classes <= g.n())
}

/// Whether some two edges of the subset neither share an endpoint nor cross.
pub fn has_disjoint_pair(g: &GeometricGraph, edges: &[EdgeId]) -> Result<bool> {
    let rel = g.relation()?;
    let idx: Vec<usize> = edges
        .iter()
        .map(|&e| {
            g.edge_position(e)
                .ok_or(Error::InvalidEdge { a: e.i(), b: e.j(), n: g.n() })
        })
        .collect::<Result<Vec<_>>>()?;
    for (s, &a) in idx.iter().enumerate() {
        for &b in &idx[s + 1..] {
            if !rel.intersects(a, b) {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

/// Whether every two edges of the subset intersect (the subset is a thrackle).
pub fn is_thrackle(g: &GeometricGraph, edges: &[EdgeId]) -> Result<bool> {
    Ok(!has_disjoint_pair(g, edges)? || edges.len() < 2)
}

/// The completeness surrogate for partial colorings: do every two classes
/// meet on some intersecting edge pair? Checked directly on segments, since
/// a partial coloring touches few of the C(n,2) edges.
pub fn partial_classes_intersect(s: &PointSet, pc: &PartialColoring) -> Result<bool> {
    if pc.n() != s.len() {
        return Err(Error::MalformedColoring {
            reason: format!("coloring names {} points, the set has {}", pc.n(), s.len()),
        });
    }
    let classes = pc.classes();
    let meets = |ca: &[EdgeId], cb: &[EdgeId]| -> Result<bool> {
        for &ea in ca {
            for &eb in cb {
                if ea.shares_endpoint(eb) {
                    return Ok(true);
                }
                let sa = Segment::new(s.point(ea.i()), s.point(ea.j()))?;
                let sb = Segment::new(s.point(eb.i()), s.point(eb.j()))?;
                if segments_intersect(sa, sb)?.intersects() {
                    return Ok(true);
                }
            }
        }
        Ok(false)
    };
    for (a, ca) in classes.iter().enumerate() {
        for cb in &classes[a + 1..] {
            if !meets(ca, cb)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
