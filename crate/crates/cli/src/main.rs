//! `geochroma` — build, verify, bound, solve, and draw complete colorings
//! of complete geometric graphs.
//!
//! Subcommands: `generate` point sets, `color` them (convex or general
//! mode), `verify` any coloring document, `bounds` for the counting bounds,
//! `exact` for the small-graph solver, `render` for SVG. All documents are
//! JSON on files or stdin/stdout; every command can record a reproducibility
//! manifest. Exit status: 0 on success, 2 when a verification check fails,
//! 1 on any other error.

mod manifest;
mod render;

use std::io::{Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use geochroma::bounds::{asymptotic_report, report_for};
use geochroma::codec::{self, ColoringDocument};
use geochroma::convex::{color_convex, color_k4_variant, K4Variant};
use geochroma::general::{build_configuration, color_from_quads, enumerate_families};
use geochroma::geom::{convex_clockwise_labels, regular_polygon};
use geochroma::graph::{
    complete_edge_position, partial_classes_intersect, singleton_bound_holds, verify, EdgeId,
    GeometricGraph,
};
use geochroma::oracle::{alpha_exact, psi_exact};
use geochroma::sample::random_point_set;
use geochroma::{Coloring, PointSet};

use manifest::{sha256_hex, RunManifest};

#[derive(Parser)]
#[command(name = "geochroma", version, about = "Complete colorings of geometric graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum PointKind {
    /// Vertices of a regular polygon, labelled clockwise.
    Convex,
    /// Seeded random integer points in general position.
    Random,
}

#[derive(Clone, Copy, ValueEnum)]
enum ColorMode {
    /// The tight construction for points in convex position.
    Convex,
    /// The many-class partial coloring for any drawing with n >= 19.
    General,
}

#[derive(Clone, Copy, ValueEnum)]
enum VariantArg {
    /// The 5-color complete (not proper) K4 coloring.
    Psi,
    /// The 4-color proper complete K4 coloring.
    Alpha,
}

#[derive(Clone, Copy, ValueEnum)]
enum IndexArg {
    /// Maximum complete coloring.
    Psi,
    /// Maximum proper complete coloring.
    Alpha,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a point set document.
    Generate {
        #[arg(value_enum)]
        kind: PointKind,
        /// Number of points.
        n: usize,
        /// RNG seed (random kind only).
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Output path, or - for stdout.
        #[arg(long, default_value = "-")]
        out: String,
        /// Record a run manifest here.
        #[arg(long)]
        manifest: Option<PathBuf>,
    },
    /// Color a point set and emit the verified coloring document.
    Color {
        #[arg(long, value_enum)]
        mode: ColorMode,
        /// Point set document, or - for stdin.
        #[arg(long, default_value = "-")]
        input: String,
        /// Output path for the coloring, or - for stdout.
        #[arg(long, default_value = "-")]
        out: String,
        /// Also write the per-class construction trace (convex mode, n != 4).
        #[arg(long)]
        trace: Option<PathBuf>,
        /// Also write the line configuration (general mode).
        #[arg(long)]
        config: Option<PathBuf>,
        /// Also write the bounds report for this drawing.
        #[arg(long)]
        bounds: Option<PathBuf>,
        /// Which K4 coloring to use when n = 4 (default psi).
        #[arg(long = "k4-variant", value_enum)]
        k4_variant: Option<VariantArg>,
        /// Record a run manifest here.
        #[arg(long)]
        manifest: Option<PathBuf>,
    },
    /// Re-verify a coloring document against its point set.
    Verify {
        /// Point set document, or - for stdin.
        #[arg(long, default_value = "-")]
        points: String,
        /// Coloring document path.
        #[arg(long)]
        coloring: PathBuf,
        /// Report output path, or - for stdout.
        #[arg(long, default_value = "-")]
        out: String,
    },
    /// Emit the bounds report for a drawing, or arithmetically by order.
    Bounds {
        /// Point set document, or - for stdin.
        #[arg(long, conflicts_with = "n")]
        input: Option<String>,
        /// Order for the drawing-free convex report (n > 18).
        #[arg(long)]
        n: Option<usize>,
        /// Output path, or - for stdout.
        #[arg(long, default_value = "-")]
        out: String,
        /// Record a run manifest here.
        #[arg(long)]
        manifest: Option<PathBuf>,
    },
    /// Solve a small drawing exactly and report the optimum.
    Exact {
        #[arg(value_enum)]
        index: IndexArg,
        /// Point set document, or - for stdin.
        #[arg(long, default_value = "-")]
        input: String,
        /// Write one optimal witness coloring here.
        #[arg(long)]
        witness: Option<PathBuf>,
        /// Output path for the result summary, or - for stdout.
        #[arg(long, default_value = "-")]
        out: String,
        /// Record a run manifest here.
        #[arg(long)]
        manifest: Option<PathBuf>,
    },
    /// Render a colored drawing as SVG.
    Render {
        /// Point set document, or - for stdin.
        #[arg(long, default_value = "-")]
        points: String,
        /// Coloring document path.
        #[arg(long)]
        coloring: PathBuf,
        /// Output path, or - for stdout.
        #[arg(long, default_value = "-")]
        out: String,
    },
}

/// Collects input digests and written outputs so a manifest can be recorded
/// at the end of a run.
struct Session {
    input_digest: Option<String>,
    seed: Option<u64>,
    outputs: Vec<(String, String)>,
}

impl Session {
    fn new() -> Self {
        Session { input_digest: None, seed: None, outputs: Vec::new() }
    }

    fn read_input(&mut self, path: &str) -> Result<String, String> {
        let text = if path == "-" {
            let mut buf = String::new();
            std::io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| format!("cannot read stdin: {e}"))?;
            buf
        } else {
            std::fs::read_to_string(path).map_err(|e| format!("cannot read {path}: {e}"))?
        };
        self.input_digest = Some(sha256_hex(text.as_bytes()));
        Ok(text)
    }

    fn write_output(&mut self, path: &str, text: &str) -> Result<(), String> {
        if path == "-" {
            std::io::stdout()
                .write_all(text.as_bytes())
                .map_err(|e| format!("cannot write stdout: {e}"))?;
        } else {
            std::fs::write(path, text).map_err(|e| format!("cannot write {path}: {e}"))?;
        }
        self.outputs.push((path.to_string(), sha256_hex(text.as_bytes())));
        Ok(())
    }

    fn write_manifest(
        &mut self,
        path: Option<&PathBuf>,
        parameters: Value,
    ) -> Result<(), String> {
        let Some(path) = path else { return Ok(()) };
        let m = RunManifest {
            command: std::env::args().skip(1).collect(),
            input_digest: self.input_digest.clone(),
            parameters,
            outputs: self.outputs.clone(),
            seed: self.seed,
        };
        let text = codec::to_pretty(&m.to_json());
        std::fs::write(path, &text)
            .map_err(|e| format!("cannot write {}: {e}", path.display()))
    }
}

fn read_points(session: &mut Session, path: &str) -> Result<PointSet, String> {
    let text = session.read_input(path)?;
    codec::point_set_from_str(&text).map_err(|e| e.to_string())
}

fn read_coloring_file(path: &PathBuf) -> Result<ColoringDocument, String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    codec::coloring_from_str(&text).map_err(|e| e.to_string())
}

/// Map the convex construction onto the input's own labels: build the
/// canonical coloring for clockwise hull order, then pull each input edge
/// back through the relabeling.
fn convex_coloring_for(s: &PointSet, variant: Option<VariantArg>) -> Result<Coloring, String> {
    let n = s.len();
    let order = convex_clockwise_labels(s).ok_or_else(|| {
        geochroma::Error::NotConvex.to_string()
    })?;
    let canonical = if n == 4 {
        let variant = match variant.unwrap_or(VariantArg::Psi) {
            VariantArg::Psi => K4Variant::Psi,
            VariantArg::Alpha => K4Variant::Alpha,
        };
        color_k4_variant(variant)
    } else {
        color_convex(n).map_err(|e| e.to_string())?.0
    };
    // inverse[original label] = canonical position (1-based).
    let mut inverse = vec![0usize; n + 1];
    for (pos, &label) in order.iter().enumerate() {
        inverse[label] = pos + 1;
    }
    let colors: Vec<usize> = geochroma::graph::complete_edges(n)
        .iter()
        .map(|e| {
            let canon = EdgeId::new(inverse[e.i()], inverse[e.j()]);
            canonical.color_at(complete_edge_position(n, canon))
        })
        .collect();
    Coloring::from_parts(colors).map_err(|e| e.to_string())
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    let mut session = Session::new();
    match cli.command {
        Command::Generate { kind, n, seed, out, manifest } => {
            let points = match kind {
                PointKind::Convex => regular_polygon(n).map_err(|e| e.to_string())?,
                PointKind::Random => {
                    session.seed = Some(seed);
                    random_point_set(n, seed).map_err(|e| e.to_string())?
                }
            };
            let text = codec::to_pretty(&codec::point_set_to_json(&points));
            session.write_output(&out, &text)?;
            let kind_name = match kind {
                PointKind::Convex => "convex",
                PointKind::Random => "random",
            };
            session.write_manifest(
                manifest.as_ref(),
                json!({ "kind": kind_name, "n": n, "seed": seed }),
            )?;
            Ok(ExitCode::SUCCESS)
        }

        Command::Color { mode, input, out, trace, config, bounds, k4_variant, manifest } => {
            let points = read_points(&mut session, &input)?;
            let n = points.len();
            let params: Value;
            match mode {
                ColorMode::Convex => {
                    if config.is_some() {
                        return Err("--config applies to general mode only".into());
                    }
                    let coloring = convex_coloring_for(&points, k4_variant)?;
                    let g = GeometricGraph::complete(points.clone());
                    let report = verify(&g, &coloring).map_err(|e| e.to_string())?;
                    let proper_required =
                        n != 4 || matches!(k4_variant, Some(VariantArg::Alpha));
                    if !report.is_complete
                        || (proper_required && !report.is_proper)
                        || !singleton_bound_holds(&g, &coloring).map_err(|e| e.to_string())?
                    {
                        return Err(format!(
                            "internal check failed: construction output did not verify \
                             (proper={}, complete={}, k={})",
                            report.is_proper, report.is_complete, report.k
                        ));
                    }
                    if let Some(ref trace_path) = trace {
                        if n == 4 {
                            return Err("n = 4 uses the fixed K4 colorings; no trace".into());
                        }
                        let (_, t) = color_convex(n).map_err(|e| e.to_string())?;
                        let text = codec::to_pretty(&codec::trace_to_json(&t));
                        session.write_output(&trace_path.display().to_string(), &text)?;
                    }
                    let text = codec::to_pretty(&codec::coloring_to_json(n, &coloring));
                    session.write_output(&out, &text)?;
                    params = json!({ "mode": "convex", "n": n, "k": report.k });
                }
                ColorMode::General => {
                    if trace.is_some() {
                        return Err("--trace applies to convex mode only".into());
                    }
                    let cfg = build_configuration(&points).map_err(|e| e.to_string())?;
                    let quads = enumerate_families(&points, &cfg).map_err(|e| e.to_string())?;
                    let (partial, classes) =
                        color_from_quads(&points, &quads).map_err(|e| e.to_string())?;
                    if !partial_classes_intersect(&points, &partial).map_err(|e| e.to_string())? {
                        return Err("internal check failed: classes do not pairwise meet".into());
                    }
                    if let Some(ref config_path) = config {
                        let text = codec::to_pretty(&codec::configuration_to_json(&cfg));
                        session.write_output(&config_path.display().to_string(), &text)?;
                    }
                    let text = codec::to_pretty(&codec::partial_coloring_to_json(&partial));
                    session.write_output(&out, &text)?;
                    params = json!({ "mode": "general", "n": n, "classes": classes });
                }
            }
            if let Some(ref bounds_path) = bounds {
                let g = GeometricGraph::complete(points);
                let report = report_for(&g).map_err(|e| e.to_string())?;
                let text = codec::to_pretty(&codec::bounds_report_to_json(&report));
                session.write_output(&bounds_path.display().to_string(), &text)?;
            }
            session.write_manifest(manifest.as_ref(), params)?;
            Ok(ExitCode::SUCCESS)
        }

        Command::Verify { points, coloring, out } => {
            let set = read_points(&mut session, &points)?;
            let doc = read_coloring_file(&coloring)?;
            if doc.n() != set.len() {
                return Err(format!(
                    "coloring names {} points, the set has {}",
                    doc.n(),
                    set.len()
                ));
            }
            let (report, ok) = match &doc {
                ColoringDocument::Full { n, coloring } => {
                    let g = GeometricGraph::complete(set);
                    let report = verify(&g, coloring).map_err(|e| e.to_string())?;
                    let singleton_ok = report.singleton_classes <= *n;
                    let ok = report.is_complete && singleton_ok;
                    (
                        json!({
                            "partial": false,
                            "n": n,
                            "k": report.k,
                            "is_proper": report.is_proper,
                            "is_complete": report.is_complete,
                            "singleton_classes": report.singleton_classes,
                            "singleton_bound_ok": singleton_ok,
                            "ok": ok,
                        }),
                        ok,
                    )
                }
                ColoringDocument::Partial(pc) => {
                    let ok =
                        partial_classes_intersect(&set, pc).map_err(|e| e.to_string())?;
                    (
                        json!({
                            "partial": true,
                            "n": pc.n(),
                            "k": pc.k(),
                            "colored_edges": pc.len(),
                            "classes_pairwise_intersect": ok,
                            "ok": ok,
                        }),
                        ok,
                    )
                }
            };
            session.write_output(&out, &codec::to_pretty(&report))?;
            Ok(if ok { ExitCode::SUCCESS } else { ExitCode::from(2) })
        }

        Command::Bounds { input, n, out, manifest } => {
            let (report, params) = match n {
                Some(n) => (
                    asymptotic_report(n).map_err(|e| e.to_string())?,
                    json!({ "n": n, "drawing": false }),
                ),
                None => {
                    let path = input.unwrap_or_else(|| "-".to_string());
                    let points = read_points(&mut session, &path)?;
                    let g = GeometricGraph::complete(points);
                    let report = report_for(&g).map_err(|e| e.to_string())?;
                    (report, json!({ "n": g.n(), "drawing": true }))
                }
            };
            session.write_output(&out, &codec::to_pretty(&codec::bounds_report_to_json(&report)))?;
            session.write_manifest(manifest.as_ref(), params)?;
            Ok(ExitCode::SUCCESS)
        }

        Command::Exact { index, input, witness, out, manifest } => {
            let points = read_points(&mut session, &input)?;
            let g = GeometricGraph::complete(points);
            let (outcome, name) = match index {
                IndexArg::Psi => (psi_exact(&g).map_err(|e| e.to_string())?, "psi"),
                IndexArg::Alpha => (alpha_exact(&g).map_err(|e| e.to_string())?, "alpha"),
            };
            let summary = json!({
                "index": name,
                "n": g.n(),
                "edges": g.edge_count(),
                "k": outcome.k,
            });
            if let Some(ref witness_path) = witness {
                let text =
                    codec::to_pretty(&codec::coloring_to_json(g.n(), &outcome.witness));
                session.write_output(&witness_path.display().to_string(), &text)?;
            }
            session.write_output(&out, &codec::to_pretty(&summary))?;
            session.write_manifest(
                manifest.as_ref(),
                json!({ "index": name, "n": g.n(), "k": outcome.k }),
            )?;
            Ok(ExitCode::SUCCESS)
        }

        Command::Render { points, coloring, out } => {
            let set = read_points(&mut session, &points)?;
            let doc = read_coloring_file(&coloring)?;
            let svg = render::render_svg(&set, &doc).map_err(|e| e.to_string())?;
            session.write_output(&out, &svg)?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::FAILURE
        }
    }
}
