//! JSON documents for every value the command line reads or writes.
//!
//! One fixed shape per document, always emitted via [`to_pretty`] so that
//! identical values produce identical bytes:
//!
//! - point sets: `{"points": [[x, y], …]}` — order defines the labels;
//! - colorings: `{"n", "edges", "colors"}` as parallel arrays, plus
//!   `"partial": true` when only some edges are colored;
//! - construction traces: `{"case", "N1", "N2", "N3", "classes"}`;
//! - line configurations: exact coefficients as decimal strings;
//! - bounds reports: all counted and published quantities.

use serde_json::{json, Map, Value};

use crate::convex::ConstructionTrace;
use crate::error::{Error, Result};
use crate::general::LineConfiguration;
use crate::geom::{Point, PointSet};
use crate::graph::{complete_edge_position, complete_edges, Coloring, EdgeId, PartialColoring};

/// Pretty-print with a trailing newline — the only serializer the crate
/// uses, so byte output is a function of the value alone.
pub fn to_pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable value");
    s.push('\n');
    s
}

/// Parse a JSON document, mapping syntax errors into [`Error::Parse`].
pub fn parse(text: &str) -> Result<Value> {
    serde_json::from_str(text).map_err(|e| Error::Parse { reason: e.to_string() })
}

fn field<'v>(v: &'v Value, key: &str) -> Result<&'v Value> {
    v.get(key).ok_or_else(|| Error::Parse { reason: format!("missing field \"{key}\"") })
}

fn as_usize(v: &Value, what: &str) -> Result<usize> {
    v.as_u64().map(|x| x as usize).ok_or_else(|| Error::Parse {
        reason: format!("{what} must be a nonnegative integer"),
    })
}

fn as_i64(v: &Value, what: &str) -> Result<i64> {
    v.as_i64().ok_or_else(|| Error::Parse { reason: format!("{what} must be an integer") })
}

fn as_array<'v>(v: &'v Value, what: &str) -> Result<&'v Vec<Value>> {
    v.as_array().ok_or_else(|| Error::Parse { reason: format!("{what} must be an array") })
}

fn as_pair<'v>(v: &'v Value, what: &str) -> Result<(&'v Value, &'v Value)> {
    let items = as_array(v, what)?;
    if items.len() != 2 {
        return Err(Error::Parse { reason: format!("{what} must have exactly two entries") });
    }
    Ok((&items[0], &items[1]))
}

// ---------------------------------------------------------------------------
// Point sets

pub fn point_set_to_json(s: &PointSet) -> Value {
    let points: Vec<Value> = s.points().iter().map(|p| json!([p.x, p.y])).collect();
    json!({ "points": points })
}

/// Decode and fully validate a point set (range, distinctness, general
/// position — everything [`PointSet::new`] enforces).
pub fn point_set_from_json(v: &Value) -> Result<PointSet> {
    let raw = as_array(field(v, "points")?, "\"points\"")?;
    let mut points = Vec::with_capacity(raw.len());
    for (idx, entry) in raw.iter().enumerate() {
        let what = format!("point {}", idx + 1);
        let (x, y) = as_pair(entry, &what)?;
        points.push(Point::new(as_i64(x, &what)?, as_i64(y, &what)?));
    }
    PointSet::new(points)
}

pub fn point_set_from_str(text: &str) -> Result<PointSet> {
    point_set_from_json(&parse(text)?)
}

// ---------------------------------------------------------------------------
// Colorings

/// A decoded coloring document: either a total coloring of K_n or a partial
/// one covering a subset of its edges.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ColoringDocument {
    Full { n: usize, coloring: Coloring },
    Partial(PartialColoring),
}

impl ColoringDocument {
    pub fn n(&self) -> usize {
        match self {
            ColoringDocument::Full { n, .. } => *n,
            ColoringDocument::Partial(pc) => pc.n(),
        }
    }

    pub fn k(&self) -> usize {
        match self {
            ColoringDocument::Full { coloring, .. } => coloring.k(),
            ColoringDocument::Partial(pc) => pc.k(),
        }
    }
}

/// Encode a total coloring; edge order is the lexicographic enumeration of
/// E(K_n) that the coloring is indexed by.
pub fn coloring_to_json(n: usize, c: &Coloring) -> Value {
    let edges: Vec<Value> = complete_edges(n).iter().map(|e| json!([e.i(), e.j()])).collect();
    json!({ "n": n, "edges": edges, "colors": c.colors() })
}

/// Encode a partial coloring, flagged `"partial": true`; assignments are
/// listed class by class.
pub fn partial_coloring_to_json(pc: &PartialColoring) -> Value {
    let edges: Vec<Value> = pc.assignments().iter().map(|(e, _)| json!([e.i(), e.j()])).collect();
    let colors: Vec<usize> = pc.assignments().iter().map(|&(_, c)| c).collect();
    json!({ "n": pc.n(), "edges": edges, "colors": colors, "partial": true })
}

pub fn coloring_document_to_json(doc: &ColoringDocument) -> Value {
    match doc {
        ColoringDocument::Full { n, coloring } => coloring_to_json(*n, coloring),
        ColoringDocument::Partial(pc) => partial_coloring_to_json(pc),
    }
}

/// Decode either coloring form. A full document must cover E(K_n) exactly;
/// colors must be 1-based and consecutive in both forms.
pub fn coloring_from_json(v: &Value) -> Result<ColoringDocument> {
    let n = as_usize(field(v, "n")?, "\"n\"")?;
    let raw_edges = as_array(field(v, "edges")?, "\"edges\"")?;
    let raw_colors = as_array(field(v, "colors")?, "\"colors\"")?;
    if raw_edges.len() != raw_colors.len() {
        return Err(Error::Parse {
            reason: format!(
                "\"edges\" and \"colors\" must be parallel ({} vs {} entries)",
                raw_edges.len(),
                raw_colors.len()
            ),
        });
    }
    let partial = match v.get("partial") {
        None => false,
        Some(Value::Bool(b)) => *b,
        Some(_) => {
            return Err(Error::Parse { reason: "\"partial\" must be a boolean".into() });
        }
    };

    let mut pairs: Vec<(EdgeId, usize)> = Vec::with_capacity(raw_edges.len());
    for (idx, (edge, color)) in raw_edges.iter().zip(raw_colors).enumerate() {
        let what = format!("edge {}", idx + 1);
        let (a, b) = as_pair(edge, &what)?;
        let e = EdgeId::try_new(as_usize(a, &what)?, as_usize(b, &what)?, n)?;
        pairs.push((e, as_usize(color, &format!("color {}", idx + 1))?));
    }

    if partial {
        let k = pairs.iter().map(|&(_, c)| c).max().unwrap_or(0);
        if k == 0 {
            return Err(Error::MalformedColoring { reason: "no classes".into() });
        }
        let mut classes: Vec<Vec<EdgeId>> = vec![Vec::new(); k];
        for &(e, c) in &pairs {
            if c == 0 {
                return Err(Error::MalformedColoring { reason: "color 0 is not allowed".into() });
            }
            classes[c - 1].push(e);
        }
        return Ok(ColoringDocument::Partial(PartialColoring::from_classes(n, &classes)?));
    }

    let expected = n * (n - 1) / 2;
    if pairs.len() != expected {
        return Err(Error::Parse {
            reason: format!(
                "a full coloring of K_{n} needs {expected} edges, document has {}",
                pairs.len()
            ),
        });
    }
    let mut colors: Vec<usize> = vec![0; expected];
    for &(e, c) in &pairs {
        let pos = complete_edge_position(n, e);
        if colors[pos] != 0 {
            return Err(Error::DuplicateEdge { a: e.i(), b: e.j() });
        }
        colors[pos] = c;
    }
    // A zero here means some edge of K_n was missing (and another doubled
    // length-wise); from_parts would reject it, but name the cause.
    if let Some(pos) = colors.iter().position(|&c| c == 0) {
        let e = complete_edges(n)[pos];
        return Err(Error::Parse {
            reason: format!("edge ({}, {}) of K_{n} is missing", e.i(), e.j()),
        });
    }
    Ok(ColoringDocument::Full { n, coloring: Coloring::from_parts(colors)? })
}

pub fn coloring_from_str(text: &str) -> Result<ColoringDocument> {
    coloring_from_json(&parse(text)?)
}

// ---------------------------------------------------------------------------
// Construction traces

pub fn trace_to_json(trace: &ConstructionTrace) -> Value {
    let classes: Vec<Value> = trace
        .classes
        .iter()
        .map(|cl| {
            let edges: Vec<Value> = cl.edges.iter().map(|e| json!([e.i(), e.j()])).collect();
            let witness = match cl.witness {
                Some(w) => json!([w.i(), w.j()]),
                None => Value::Null,
            };
            json!({ "edges": edges, "kind": cl.kind.as_str(), "witness": witness })
        })
        .collect();
    json!({
        "case": trace.case.as_str(),
        "N1": trace.n1,
        "N2": trace.n2,
        "N3": trace.n3,
        "classes": classes,
    })
}

// ---------------------------------------------------------------------------
// Line configurations

pub fn configuration_to_json(cfg: &LineConfiguration) -> Value {
    let triple = |s: [String; 3]| json!(s);
    let separators: Vec<Value> =
        cfg.separators().iter().map(|l| triple(l.decimal_strings())).collect();
    let cuts: Vec<Value> = cfg.cut_lines().iter().map(|l| triple(l.decimal_strings())).collect();
    let mut groups = Map::new();
    for (name, members) in ["A", "B", "C", "D", "E", "F"].iter().zip(cfg.groups()) {
        groups.insert((*name).into(), json!(members));
    }
    groups.insert("G".into(), json!(cfg.anchors()));
    json!({
        "m": cfg.m(),
        "r": cfg.r(),
        "shear": cfg.shear(),
        "separators": separators,
        "cuts": cuts,
        "apex": cfg.apex().decimal_strings(),
        "groups": groups,
    })
}

// ---------------------------------------------------------------------------
// Bounds reports

pub fn bounds_report_to_json(report: &crate::bounds::BoundsReport) -> Value {
    json!({
        "n": report.n,
        "incidence_pairs": report.m_incidences,
        "crossings": report.cr_drawing,
        "psi_upper_convex": report.psi_upper_convex,
        "psi_upper_crossing": report.psi_upper_crossing,
        "psi_g_lower_construction": report.psi_g_lower_construction,
        "constants": {
            "c_rect": report.constants.c_rect,
            "coef_upper": report.constants.coef_upper,
            "coef_lower": report.constants.coef_lower,
        },
    })
}
