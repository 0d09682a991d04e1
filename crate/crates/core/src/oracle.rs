//! Exhaustive maximization of complete-coloring sizes on small edge sets.
//!
//! Ground truth for the constructions and formulas: a branch-and-bound
//! search over set partitions of the edge list, canonicalized so color c+1
//! never opens before color c is populated. Intersections come from the
//! materialized relation as per-edge bitmasks, so feasibility and
//! completeness bookkeeping are single mask operations.

use crate::convex::{color_k4_variant, color_convex, K4Variant};
use crate::error::{Error, Result};
use crate::geom::convex_clockwise_labels;
use crate::graph::{complete_edges, verify, Coloring, EdgeId, GeometricGraph};

#[cfg(feature = "parallel")]
use rayon::prelude::*;
#[cfg(feature = "parallel")]
use std::sync::atomic::{AtomicUsize, Ordering};

/// Hard ceiling on the edge count the solver accepts.
pub const MAX_ORACLE_EDGES: usize = 15;

/// Depth at which the search tree is split into independently explorable
/// subtrees when the parallel feature is active.
#[cfg(feature = "parallel")]
const SPLIT_DEPTH: usize = 5;

/// An exact optimum together with one coloring attaining it.
#[derive(Clone, Debug)]
pub struct OracleOutcome {
    pub k: usize,
    pub witness: Coloring,
}

/// Largest k over all complete colorings of the graph's edges.
pub fn psi_exact(g: &GeometricGraph) -> Result<OracleOutcome> {
    exact(g, false)
}

/// Largest k over all proper complete colorings.
pub fn alpha_exact(g: &GeometricGraph) -> Result<OracleOutcome> {
    exact(g, true)
}

fn exact(g: &GeometricGraph, require_proper: bool) -> Result<OracleOutcome> {
    let m = g.edge_count();
    if m == 0 {
        return Err(Error::MalformedColoring { reason: "cannot color a graph with no edges".into() });
    }
    if m > MAX_ORACLE_EDGES {
        return Err(Error::TooLarge { edges: m, max: MAX_ORACLE_EDGES });
    }
    let rel = g.relation()?;
    let adj: Vec<u16> = (0..m)
        .map(|e| {
            let mut bits = 0u16;
            for f in 0..m {
                if f != e && rel.intersects(e, f) {
                    bits |= 1 << f;
                }
            }
            bits
        })
        .collect();

    let warm = warm_start(g, require_proper)?;
    let floor_k = warm.as_ref().map_or(1, |c| c.k());

    let best = search_best(&adj, m, require_proper, floor_k);

    // The witness: the warm coloring when it already attains the optimum
    // (keeps the output stable and meaningful), otherwise the first leaf at
    // the optimum in canonical branch order — deterministic either way.
    let witness = match warm {
        Some(c) if c.k() == best => c,
        _ => {
            let colors = witness_search(&adj, m, require_proper, best)
                .expect("an attaining assignment exists for the computed optimum");
            Coloring::from_parts(colors.iter().map(|&c| c as usize + 1).collect())?
        }
    };
    let report = verify(g, &witness)?;
    assert!(report.is_complete, "oracle witness must be complete");
    assert!(!require_proper || report.is_proper, "oracle witness must be proper");
    assert_eq!(report.k, best);
    Ok(OracleOutcome { k: best, witness })
}

/// Tight initial bound for convex complete inputs: relabel the constructed
/// coloring through the hull order. Returns None when the input is not a
/// complete graph on convex points (or the mapped coloring unexpectedly
/// fails its flags, in which case the cold search stands on its own).
fn warm_start(g: &GeometricGraph, require_proper: bool) -> Result<Option<Coloring>> {
    let n = g.n();
    if n < 3 || g.edges() != complete_edges(n).as_slice() {
        return Ok(None);
    }
    let Some(order) = convex_clockwise_labels(g.points()) else {
        return Ok(None);
    };
    let canonical = match (n, require_proper) {
        (4, true) => color_k4_variant(K4Variant::Alpha),
        (4, false) => color_k4_variant(K4Variant::Psi),
        _ => color_convex(n)?.0,
    };
    let mut colors = vec![0usize; g.edge_count()];
    for (pos, &e) in complete_edges(n).iter().enumerate() {
        let actual = EdgeId::new(order[e.i() - 1], order[e.j() - 1]);
        let actual_pos = g.edge_position(actual).expect("complete graph contains every edge");
        colors[actual_pos] = canonical.color_at(pos);
    }
    let mapped = Coloring::from_parts(colors)?;
    let report = verify(g, &mapped)?;
    debug_assert!(report.is_complete && (!require_proper || report.is_proper));
    if report.is_complete && (!require_proper || report.is_proper) {
        Ok(Some(mapped))
    } else {
        Ok(None)
    }
}

/// Partial partition of the edge prefix 0..t into color classes.
#[derive(Clone)]
struct State {
    /// Class index per assigned edge.
    color_of: Vec<u8>,
    /// Member bitmask per class.
    mask: Vec<u16>,
    /// Per class: all edges intersecting some member.
    reach: Vec<u16>,
    /// Per class: classes its pair-completeness is already satisfied with.
    sat: Vec<u16>,
    /// Number of unordered class pairs not yet satisfied.
    unsat: usize,
}

impl State {
    fn root(m: usize) -> Self {
        State {
            color_of: Vec::with_capacity(m),
            mask: Vec::new(),
            reach: Vec::new(),
            sat: Vec::new(),
            unsat: 0,
        }
    }

    fn classes(&self) -> usize {
        self.mask.len()
    }

    fn t(&self) -> usize {
        self.color_of.len()
    }

    /// Whether edge e may join class c under the properness regime.
    fn feasible(&self, adj: &[u16], e: usize, c: usize, require_proper: bool) -> bool {
        !require_proper || adj[e] & self.mask[c] == 0
    }

    /// Child state with edge e in class c (c == classes() opens a new one).
    fn place(&self, adj: &[u16], e: usize, c: usize) -> State {
        let mut s = self.clone();
        if c == s.mask.len() {
            s.mask.push(0);
            s.reach.push(0);
            s.sat.push(0);
            s.unsat += c; // new pairs (c, d) for every existing d
        }
        for d in 0..s.mask.len() {
            if d != c && s.sat[c] & (1 << d) == 0 && adj[e] & s.mask[d] != 0 {
                s.sat[c] |= 1 << d;
                s.sat[d] |= 1 << c;
                s.unsat -= 1;
            }
        }
        s.mask[c] |= 1 << e;
        s.reach[c] |= adj[e];
        s.color_of.push(c as u8);
        s
    }

    /// True when some unsatisfied class pair can no longer be satisfied:
    /// no pending edge intersects either class, so no future placement can
    /// make the two classes meet.
    fn hopeless(&self, m: usize) -> bool {
        if self.unsat == 0 {
            return false;
        }
        let pending: u16 = !0u16 >> (16 - m) & !((1u16 << self.t()) - 1);
        let k = self.classes();
        for a in 0..k {
            if pending & self.reach[a] != 0 {
                continue; // every pair containing a is still serviceable
            }
            for b in (a + 1)..k {
                if self.sat[a] & (1 << b) == 0 && pending & self.reach[b] == 0 {
                    return true;
                }
            }
        }
        false
    }
}

/// Phase 1: the optimum value. Parallelizes over depth-[`SPLIT_DEPTH`]
/// subtrees when built with the parallel feature; the maximum is
/// order-independent, so the result is deterministic regardless.
fn search_best(adj: &[u16], m: usize, require_proper: bool, floor_k: usize) -> usize {
    #[cfg(feature = "parallel")]
    {
        if m > SPLIT_DEPTH + 2 {
            let mut frontier = Vec::new();
            let mut best_prefix = floor_k;
            collect_frontier(adj, m, require_proper, State::root(m), &mut best_prefix, &mut frontier);
            let best = AtomicUsize::new(best_prefix);
            frontier.into_par_iter().for_each(|s| dfs_max_atomic(adj, m, require_proper, s, &best));
            return best.load(Ordering::Relaxed);
        }
    }
    let mut best = floor_k;
    dfs_max(adj, m, require_proper, State::root(m), &mut best);
    best
}

#[cfg(feature = "parallel")]
fn collect_frontier(
    adj: &[u16],
    m: usize,
    require_proper: bool,
    state: State,
    best: &mut usize,
    out: &mut Vec<State>,
) {
    let t = state.t();
    if t == SPLIT_DEPTH {
        out.push(state);
        return;
    }
    if state.classes() + (m - t) <= *best || state.hopeless(m) {
        return;
    }
    debug_assert!(t < m);
    for c in 0..=state.classes() {
        if c == state.classes() || state.feasible(adj, t, c, require_proper) {
            collect_frontier(adj, m, require_proper, state.place(adj, t, c), best, out);
        }
    }
}

fn dfs_max(adj: &[u16], m: usize, require_proper: bool, state: State, best: &mut usize) {
    let t = state.t();
    if t == m {
        if state.unsat == 0 {
            *best = (*best).max(state.classes());
        }
        return;
    }
    if state.classes() + (m - t) <= *best || state.hopeless(m) {
        return;
    }
    for c in 0..=state.classes() {
        if c == state.classes() || state.feasible(adj, t, c, require_proper) {
            dfs_max(adj, m, require_proper, state.place(adj, t, c), best);
        }
    }
}

#[cfg(feature = "parallel")]
fn dfs_max_atomic(adj: &[u16], m: usize, require_proper: bool, state: State, best: &AtomicUsize) {
    let t = state.t();
    if t == m {
        if state.unsat == 0 {
            best.fetch_max(state.classes(), Ordering::Relaxed);
        }
        return;
    }
    if state.classes() + (m - t) <= best.load(Ordering::Relaxed) || state.hopeless(m) {
        return;
    }
    for c in 0..=state.classes() {
        if c == state.classes() || state.feasible(adj, t, c, require_proper) {
            dfs_max_atomic(adj, m, require_proper, state.place(adj, t, c), best);
        }
    }
}

/// Phase 2: first complete assignment with exactly `target` classes in
/// canonical branch order. Sequential so the witness is reproducible.
fn witness_search(adj: &[u16], m: usize, require_proper: bool, target: usize) -> Option<Vec<u8>> {
    fn go(adj: &[u16], m: usize, require_proper: bool, target: usize, state: State) -> Option<Vec<u8>> {
        let t = state.t();
        if t == m {
            return (state.unsat == 0 && state.classes() == target).then_some(state.color_of);
        }
        if state.classes() + (m - t) < target || state.hopeless(m) {
            return None;
        }
        let open_limit = state.classes().min(target - 1);
        for c in 0..=open_limit {
            if c == state.classes() || state.feasible(adj, t, c, require_proper) {
                if let Some(hit) = go(adj, m, require_proper, target, state.place(adj, t, c)) {
                    return Some(hit);
                }
            }
        }
        None
    }
    go(adj, m, require_proper, target, State::root(m))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounds::psi_upper_from_crossings;
    use crate::geom::{regular_polygon, Point, PointSet};
    use crate::sample::random_point_set;

    fn convex_complete(n: usize) -> GeometricGraph {
        GeometricGraph::complete(regular_polygon(n).unwrap())
    }

    #[test]
    fn k3_both_indices_are_three() {
        let g = convex_complete(3);
        assert_eq!(psi_exact(&g).unwrap().k, 3);
        assert_eq!(alpha_exact(&g).unwrap().k, 3);
    }

    #[test]
    fn k4_separates_psi_from_alpha() {
        let g = convex_complete(4);
        let psi = psi_exact(&g).unwrap();
        let alpha = alpha_exact(&g).unwrap();
        assert_eq!(psi.k, 5);
        assert_eq!(alpha.k, 4);
        let rp = verify(&g, &psi.witness).unwrap();
        assert!(rp.is_complete);
        let ra = verify(&g, &alpha.witness).unwrap();
        assert!(ra.is_complete && ra.is_proper);
    }

    #[test]
    fn k5_reaches_the_tight_value() {
        let g = convex_complete(5);
        assert_eq!(psi_exact(&g).unwrap().k, 7);
        assert_eq!(alpha_exact(&g).unwrap().k, 7);
    }

    #[test]
    fn star_graph_gets_one_color_per_edge() {
        // All edges share the center, so singletons always work.
        let ps = regular_polygon(5).unwrap();
        let edges: Vec<EdgeId> = (2..=5).map(|j| EdgeId::new(1, j)).collect();
        let g = GeometricGraph::new(ps, edges).unwrap();
        assert_eq!(psi_exact(&g).unwrap().k, 4);
        assert_eq!(alpha_exact(&g).unwrap().k, 4);
    }

    #[test]
    fn two_disjoint_edges_cap_at_one_color() {
        let ps = regular_polygon(4).unwrap();
        let g = GeometricGraph::new(ps, vec![EdgeId::new(1, 2), EdgeId::new(3, 4)]).unwrap();
        assert_eq!(psi_exact(&g).unwrap().k, 1);
        assert_eq!(alpha_exact(&g).unwrap().k, 1);
    }

    #[test]
    fn oversized_graphs_are_refused() {
        let g = convex_complete(7);
        assert!(matches!(psi_exact(&g), Err(Error::TooLarge { edges: 21, max: 15 })));
    }

    #[test]
    fn no_edges_is_an_error() {
        let g = GeometricGraph::new(regular_polygon(3).unwrap(), Vec::new()).unwrap();
        assert!(matches!(psi_exact(&g), Err(Error::MalformedColoring { .. })));
    }

    #[test]
    fn warm_start_handles_permuted_convex_labels() {
        let base = regular_polygon(5).unwrap();
        let pts = base.points();
        let shuffled =
            PointSet::new(vec![pts[2], pts[0], pts[3], pts[1], pts[4]]).unwrap();
        let g = GeometricGraph::complete(shuffled);
        assert_eq!(psi_exact(&g).unwrap().k, 7);
    }

    #[test]
    fn random_drawing_respects_the_crossing_cap() {
        let ps = random_point_set(5, 11).unwrap();
        let g = GeometricGraph::complete(ps);
        let psi = psi_exact(&g).unwrap();
        let alpha = alpha_exact(&g).unwrap();
        assert!(alpha.k <= psi.k);
        assert!(psi.k <= psi_upper_from_crossings(&g).unwrap());
    }

    #[test]
    fn planar_k4_oracle() {
        // One point inside the triangle of the others: no crossings, and
        // the two indices coincide at 4 = the incidence-only optimum.
        let ps = PointSet::new(vec![
            Point::new(0, 0),
            Point::new(1000, 0),
            Point::new(500, 900),
            Point::new(500, 300),
        ])
        .unwrap();
        let g = GeometricGraph::complete(ps);
        let psi = psi_exact(&g).unwrap();
        assert!(psi.k <= psi_upper_from_crossings(&g).unwrap());
        let alpha = alpha_exact(&g).unwrap();
        assert!(alpha.k <= psi.k);
    }
}
