//! SVG rendering of a colored drawing: one line per colored edge with a
//! stroke drawn from a deterministic palette, vertices as labelled circles.
//! Output bytes are a pure function of the point set and coloring.

use geochroma::codec::ColoringDocument;
use geochroma::graph::complete_edges;
use geochroma::{EdgeId, Error, PointSet, Result};

const VIEW: f64 = 800.0;
const MARGIN: f64 = 40.0;

/// Stroke for a 1-based color index: hues step by the golden angle, and the
/// saturation drops a band every full turn so nearby indices stay apart
/// even past 360 colors.
fn palette(color: usize) -> String {
    let raw = color * 137;
    let hue = raw % 360;
    let sat = 70 - 12 * ((raw / 360) % 3);
    format!("hsl({hue}, {sat}%, 45%)")
}

/// Render a document against its point set.
pub fn render_svg(s: &PointSet, doc: &ColoringDocument) -> Result<String> {
    if doc.n() != s.len() {
        return Err(Error::MalformedColoring {
            reason: format!("coloring names {} points, the set has {}", doc.n(), s.len()),
        });
    }
    let assignments: Vec<(EdgeId, usize)> = match doc {
        ColoringDocument::Full { n, coloring } => complete_edges(*n)
            .into_iter()
            .zip(coloring.colors().iter().copied())
            .collect(),
        ColoringDocument::Partial(pc) => pc.assignments().to_vec(),
    };
    if assignments.is_empty() {
        return Err(Error::MalformedColoring { reason: "no edges to draw".into() });
    }

    let xs = s.points().iter().map(|p| p.x);
    let ys = s.points().iter().map(|p| p.y);
    let (min_x, max_x) = (xs.clone().min().unwrap(), xs.max().unwrap());
    let (min_y, max_y) = (ys.clone().min().unwrap(), ys.max().unwrap());
    let span = ((max_x - min_x).max(max_y - min_y).max(1)) as f64;
    let scale = (VIEW - 2.0 * MARGIN) / span;
    // Center the drawing; SVG y grows downward, the input y upward.
    let off_x = (VIEW - (max_x - min_x) as f64 * scale) / 2.0;
    let off_y = (VIEW - (max_y - min_y) as f64 * scale) / 2.0;
    let place = |label: usize| {
        let p = s.point(label);
        let x = off_x + (p.x - min_x) as f64 * scale;
        let y = VIEW - off_y - (p.y - min_y) as f64 * scale;
        (x, y)
    };

    let mut svg = String::new();
    svg.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" \
         viewBox=\"0 0 {VIEW:.0} {VIEW:.0}\" width=\"{VIEW:.0}\" height=\"{VIEW:.0}\">\n"
    ));
    svg.push_str("  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n");

    for &(e, color) in &assignments {
        let (x1, y1) = place(e.i());
        let (x2, y2) = place(e.j());
        svg.push_str(&format!(
            "  <line x1=\"{x1:.2}\" y1=\"{y1:.2}\" x2=\"{x2:.2}\" y2=\"{y2:.2}\" \
             stroke=\"{}\" stroke-width=\"2\"/>\n",
            palette(color)
        ));
    }

    for label in 1..=s.len() {
        let (x, y) = place(label);
        svg.push_str(&format!(
            "  <circle cx=\"{x:.2}\" cy=\"{y:.2}\" r=\"9\" fill=\"white\" stroke=\"black\"/>\n"
        ));
        svg.push_str(&format!(
            "  <text x=\"{x:.2}\" y=\"{:.2}\" font-family=\"sans-serif\" font-size=\"11\" \
             text-anchor=\"middle\">{label}</text>\n",
            y + 4.0
        ));
    }
    svg.push_str("</svg>\n");
    Ok(svg)
}

#[cfg(test)]
mod tests {
    use super::*;
    use geochroma::convex::color_convex;
    use geochroma::geom::regular_polygon;
    use std::collections::HashSet;

    #[test]
    fn k5_draws_ten_edges_in_seven_strokes() {
        let s = regular_polygon(5).unwrap();
        let (coloring, _) = color_convex(5).unwrap();
        let svg = render_svg(&s, &ColoringDocument::Full { n: 5, coloring }).unwrap();
        assert_eq!(svg.matches("<line ").count(), 10);
        let strokes: HashSet<&str> = svg
            .split("stroke=\"")
            .skip(1)
            .map(|rest| rest.split('"').next().unwrap())
            .filter(|s| s.starts_with("hsl"))
            .collect();
        assert_eq!(strokes.len(), 7);
    }

    #[test]
    fn mismatched_orders_are_rejected() {
        let s = regular_polygon(6).unwrap();
        let (coloring, _) = color_convex(5).unwrap();
        assert!(render_svg(&s, &ColoringDocument::Full { n: 5, coloring }).is_err());
    }

    #[test]
    fn palette_is_stable() {
        assert_eq!(palette(1), "hsl(137, 70%, 45%)");
        assert_eq!(palette(7), "hsl(239, 46%, 45%)");
        // Distinct strokes across a full construction's worth of colors.
        let all: HashSet<String> = (1..=360).map(palette).collect();
        assert_eq!(all.len(), 360);
    }
}
