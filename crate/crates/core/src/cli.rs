//! The `ccc` command line: face reports, colorings, bound sweeps, and graph
//! generation. Exit codes: 0 success, 1 usage or parse error, 2 validation
//! or verification failure, 3 a conjecture violation was detected.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;

use crate::bounds::{self, BoundReport};
use crate::coloring::{self, Method, DEFAULT_GUARD};
use crate::embedding::PlaneGraph;
use crate::error::Error;
use crate::format;
use crate::generators;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_VERIFY: i32 = 2;
pub const EXIT_VIOLATION: i32 = 3;

#[derive(Parser)]
#[command(
    name = "ccc",
    about = "Cyclic colorings of plane multigraphs: faces, colorings, bounds, generators"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Json,
    Csv,
    Text,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ColorMethod {
    Exact,
    Constructive,
    Decompose,
}

#[derive(Subcommand)]
enum Command {
    /// Trace faces and report the embedding parameters of a graph file.
    Faces {
        path: PathBuf,
        #[arg(long, value_enum, default_value = "text")]
        format: OutputFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Produce a verified cyclic coloring.
    Color {
        path: PathBuf,
        #[arg(long, value_enum)]
        method: ColorMethod,
        /// Largest instance the exact search accepts.
        #[arg(long, default_value_t = DEFAULT_GUARD)]
        guard: usize,
        /// Palette budget for the decompose method; defaults to
        /// floor(3/2 * Delta*).
        #[arg(long)]
        budget: Option<usize>,
        #[arg(long, value_enum, default_value = "json")]
        format: OutputFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Evaluate every bound and conjecture on a file, or sweep a directory.
    Bounds {
        path: PathBuf,
        #[arg(long, default_value_t = DEFAULT_GUARD)]
        guard: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: OutputFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Report the reduction and the subdivision multigraph of a graph file.
    Reduce {
        path: PathBuf,
        /// Largest edge count for which the exact chromatic index of the
        /// subdivision multigraph is computed.
        #[arg(long, default_value_t = crate::edgecolor::DEFAULT_EDGE_GUARD)]
        guard: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Write a generated graph to a file.
    ///
    /// Families: theta A B C | prism-subdiv T | thm6-prism A B C |
    /// platonic NAME | regular-subdiv BASE K | subdivide BASE E:C... |
    /// glue BASE1 U1 V1 BASE2 U2 V2  (BASE is a platonic name or a file).
    Gen {
        family: String,
        args: Vec<String>,
        #[arg(long)]
        out: PathBuf,
    },
}

pub fn run<I>(args: I) -> i32
where
    I: IntoIterator<Item = OsString>,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            // clap prints help/version through the error path too.
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    if let Some(guard) = match &cli.command {
        Command::Color { guard, .. }
        | Command::Bounds { guard, .. }
        | Command::Reduce { guard, .. } => Some(*guard),
        _ => None,
    } {
        if guard == 0 {
            eprintln!("error: --guard must be at least 1");
            return EXIT_USAGE;
        }
    }
    match cli.command {
        Command::Faces { path, format, out } => cmd_faces(&path, format, out.as_deref()),
        Command::Color {
            path,
            method,
            guard,
            budget,
            format,
            out,
        } => cmd_color(&path, method, guard, budget, format, out.as_deref()),
        Command::Bounds {
            path,
            guard,
            format,
            out,
        } => cmd_bounds(&path, guard, format, out.as_deref()),
        Command::Reduce { path, guard, out } => cmd_reduce(&path, guard, out.as_deref()),
        Command::Gen { family, args, out } => cmd_gen(&family, &args, &out),
    }
}

fn load_graph(path: &Path) -> Result<PlaneGraph, i32> {
    let text = fs::read_to_string(path).map_err(|e| {
        eprintln!("error: cannot read {}: {e}", path.display());
        EXIT_USAGE
    })?;
    format::parse(&text).map_err(|e| {
        eprintln!("error: {}: {e}", path.display());
        EXIT_USAGE
    })
}

fn emit(text: &str, out: Option<&Path>) -> i32 {
    match out {
        None => {
            println!("{text}");
            EXIT_OK
        }
        Some(path) => match fs::write(path, format!("{text}\n")) {
            Ok(()) => EXIT_OK,
            Err(e) => {
                eprintln!("error: cannot write {}: {e}", path.display());
                EXIT_USAGE
            }
        },
    }
}

#[derive(Serialize)]
struct FacesReport {
    graph: String,
    vertices: usize,
    edges: usize,
    valid: bool,
    validation: crate::embedding::ValidationReport,
    face_degrees: Vec<usize>,
    delta_star: usize,
    delta: usize,
    small_delta: usize,
    k_star: Option<usize>,
    t: Option<usize>,
    two_connected: bool,
    simple: bool,
    three_connected_simple: bool,
    locally_connected: bool,
    faces_ge4_pairwise_disjoint: bool,
}

fn cmd_faces(path: &Path, format: OutputFormat, out: Option<&Path>) -> i32 {
    let g = match load_graph(path) {
        Ok(g) => g,
        Err(code) => return code,
    };
    let validation = g.validate();
    let valid = validation.is_valid();
    let report = FacesReport {
        graph: path.display().to_string(),
        vertices: g.vertex_count(),
        edges: g.edge_count(),
        valid,
        validation,
        face_degrees: g.faces().iter().map(|f| f.degree).collect(),
        delta_star: g.delta_star(),
        delta: g.delta(),
        small_delta: g.small_delta(),
        k_star: g.k_star().ok(),
        t: g.t_of().ok(),
        two_connected: g.is_two_connected(),
        simple: g.is_simple(),
        three_connected_simple: g.is_three_connected_simple(),
        locally_connected: g.is_locally_connected(),
        faces_ge4_pairwise_disjoint: g.faces_ge4_pairwise_disjoint(),
    };
    let text = match format {
        OutputFormat::Json => serde_json::to_string_pretty(&report).unwrap(),
        _ => {
            let mut s = String::new();
            s.push_str(&format!(
                "{}: {} vertices, {} edges, {} faces\n",
                report.graph,
                report.vertices,
                report.edges,
                report.face_degrees.len()
            ));
            s.push_str(&format!("face degrees: {:?}\n", report.face_degrees));
            s.push_str(&format!(
                "delta* = {}, delta = {}, small delta = {}, k* = {}, t = {}\n",
                report.delta_star,
                report.delta,
                report.small_delta,
                report
                    .k_star
                    .map(|v| v.to_string())
                    .unwrap_or_else(|| "-".into()),
                report
                    .t
                    .map(|v| v.to_string())
                    .unwrap_or_else(|| "- (cycle or undefined)".into()),
            ));
            s.push_str(&format!(
                "2-connected: {}, simple: {}, 3-connected simple: {}, locally connected: {}, big faces disjoint: {}\n",
                report.two_connected,
                report.simple,
                report.three_connected_simple,
                report.locally_connected,
                report.faces_ge4_pairwise_disjoint
            ));
            if valid {
                s.push_str("embedding: valid");
            } else {
                s.push_str(&format!(
                    "embedding INVALID: {:?}",
                    report.validation.violations
                ));
            }
            s
        }
    };
    let code = emit(&text, out);
    if code != EXIT_OK {
        return code;
    }
    if valid {
        EXIT_OK
    } else {
        EXIT_VERIFY
    }
}

#[derive(Serialize)]
struct ColorReport {
    graph: String,
    method: Method,
    colors_used: usize,
    ccc_bound: usize,
    within_ccc_bound: bool,
    verified: bool,
    palette_budget: Option<usize>,
    budget_exceeded: Option<bool>,
    assignment: BTreeMap<usize, usize>,
}

fn cmd_color(
    path: &Path,
    method: ColorMethod,
    guard: usize,
    budget: Option<usize>,
    format: OutputFormat,
    out: Option<&Path>,
) -> i32 {
    let g = match load_graph(path) {
        Ok(g) => g,
        Err(code) => return code,
    };
    if !g.validate().is_valid() {
        eprintln!("error: {}: invalid embedding", path.display());
        return EXIT_VERIFY;
    }
    let ccc_bound = bounds::bound_ccc(&g);
    let (coloring, palette_budget, budget_exceeded) = match method {
        ColorMethod::Exact => match coloring::chi_c_exact(&g, guard) {
            Ok((_, c)) => (c, None, None),
            Err(e) => return domain_error(path, &e),
        },
        ColorMethod::Constructive => match coloring::color_constructive(&g, guard) {
            Ok(c) => (c, None, None),
            Err(e) => return domain_error(path, &e),
        },
        ColorMethod::Decompose => {
            let budget = budget.unwrap_or(ccc_bound);
            match coloring::color_decomposed(&g, budget, guard) {
                Ok(outcome) => (
                    outcome.coloring,
                    Some(outcome.palette_budget),
                    Some(outcome.budget_exceeded),
                ),
                Err(e) => return domain_error(path, &e),
            }
        }
    };
    let verified = coloring::verify_cyclic(&g, &coloring).unwrap_or(false);
    let report = ColorReport {
        graph: path.display().to_string(),
        method: coloring.method,
        colors_used: coloring.colors_used,
        ccc_bound,
        within_ccc_bound: coloring.colors_used <= ccc_bound,
        verified,
        palette_budget,
        budget_exceeded,
        assignment: coloring
            .assignment
            .iter()
            .enumerate()
            .map(|(v, &c)| (v, c))
            .collect(),
    };
    let text = match format {
        OutputFormat::Json => serde_json::to_string_pretty(&report).unwrap(),
        _ => format!(
            "{}: colors_used = {} vs floor(3/2 delta*) = {} ({}), verified = {}{}",
            report.graph,
            report.colors_used,
            report.ccc_bound,
            if report.within_ccc_bound {
                "within"
            } else {
                "ABOVE"
            },
            report.verified,
            match (report.palette_budget, report.budget_exceeded) {
                (Some(b), Some(true)) => format!(", budget {b} EXCEEDED"),
                (Some(b), Some(false)) => format!(", budget {b} respected"),
                _ => String::new(),
            }
        ),
    };
    let code = emit(&text, out);
    if code != EXIT_OK {
        return code;
    }
    if verified {
        EXIT_OK
    } else {
        EXIT_VERIFY
    }
}

fn domain_error(path: &Path, e: &Error) -> i32 {
    eprintln!("error: {}: {e}", path.display());
    EXIT_VERIFY
}

fn cmd_bounds(path: &Path, guard: usize, format: OutputFormat, out: Option<&Path>) -> i32 {
    let files: Vec<PathBuf> = if path.is_dir() {
        let mut files: Vec<PathBuf> = match fs::read_dir(path) {
            Ok(rd) => rd
                .filter_map(|e| e.ok())
                .map(|e| e.path())
                .filter(|p| p.is_file())
                .collect(),
            Err(e) => {
                eprintln!("error: cannot read {}: {e}", path.display());
                return EXIT_USAGE;
            }
        };
        files.sort();
        files
    } else {
        vec![path.to_path_buf()]
    };
    if files.is_empty() {
        eprintln!("error: {} holds no graph files", path.display());
        return EXIT_USAGE;
    }

    let mut loaded = Vec::new();
    for f in &files {
        match load_graph(f) {
            Ok(g) => loaded.push((f.clone(), g)),
            Err(code) => return code,
        }
    }
    let reports: Vec<BoundReport> = loaded
        .par_iter()
        .map(|(f, g)| bounds::bound_report(g, &f.display().to_string(), guard))
        .collect();

    let text = match format {
        OutputFormat::Json => serde_json::to_string_pretty(&reports).unwrap(),
        OutputFormat::Csv => {
            let mut s = String::from(BoundReport::csv_header());
            for r in &reports {
                s.push('\n');
                s.push_str(&r.csv_row());
            }
            s
        }
        OutputFormat::Text => {
            let mut s = String::new();
            for (i, r) in reports.iter().enumerate() {
                if i > 0 {
                    s.push('\n');
                }
                s.push_str(&render_bound_report(r));
            }
            s
        }
    };
    let code = emit(&text, out);
    if code != EXIT_OK {
        return code;
    }
    if reports.iter().any(|r| r.has_violation()) {
        eprintln!("conjecture VIOLATION detected");
        EXIT_VIOLATION
    } else {
        EXIT_OK
    }
}

fn render_bound_report(r: &BoundReport) -> String {
    let mut s = String::new();
    s.push_str(&format!(
        "{}: delta* = {}, t = {}, k* = {}, exact = {}\n",
        r.graph_id,
        r.delta_star,
        r.t.map(|v| v.to_string()).unwrap_or_else(|| "-".into()),
        r.k_star
            .map(|v| v.to_string())
            .unwrap_or_else(|| "-".into()),
        r.exact.map(|v| v.to_string()).unwrap_or_else(|| "-".into()),
    ));
    for e in &r.entries {
        if let (true, Some(v)) = (e.applicable, e.value) {
            s.push_str(&format!("  {:<26} {v}\n", e.name));
        } else {
            s.push_str(&format!("  {:<26} inapplicable: {}\n", e.name, e.note));
        }
    }
    for c in &r.conjectures {
        s.push_str(&format!(
            "  conjecture {:<15} {:?}{}\n",
            c.name,
            c.status,
            c.bound.map(|b| format!(" (bound {b})")).unwrap_or_default()
        ));
    }
    for v in &r.violations {
        s.push_str(&format!("  !! {v}\n"));
    }
    s.pop();
    s
}

#[derive(Serialize)]
struct ReduceReport {
    graph: String,
    reduced_vertices: usize,
    reduced_edges: usize,
    faces: usize,
    structure: String,
    /// R vertex id -> original vertex id.
    kept: Vec<usize>,
    /// R edge id -> original vertex sequence of its path.
    edge_to_path: Vec<Vec<usize>>,
    /// R face id -> original face id.
    face_map: Vec<usize>,
    regular: bool,
    subdivision_multigraph: SubdivisionReport,
}

#[derive(Serialize)]
struct SubdivisionReport {
    face_count: usize,
    /// (suppressed vertex, its two incident faces).
    links: Vec<(usize, usize, usize)>,
    max_degree: usize,
    multiplicity: usize,
    chromatic_index: Option<usize>,
    edge_colors: Option<Vec<usize>>,
}

fn cmd_reduce(path: &Path, guard: usize, out: Option<&Path>) -> i32 {
    let g = match load_graph(path) {
        Ok(g) => g,
        Err(code) => return code,
    };
    if !g.validate().is_valid() {
        eprintln!("error: {}: invalid embedding", path.display());
        return EXIT_VERIFY;
    }
    let r = match crate::reduction::reduce(&g) {
        Ok(r) => r,
        Err(e) => return domain_error(path, &e),
    };
    let structure = match crate::reduction::classify(&r) {
        Ok(c) => c.tag().to_string(),
        Err(e) => return domain_error(path, &e),
    };
    let s = match crate::reduction::subdivision_multigraph(&g, &r) {
        Ok(s) => s,
        Err(e) => return domain_error(path, &e),
    };
    let m = s.to_multigraph();
    let (chromatic_index, edge_colors) = if m.edge_count() == 0 {
        (Some(0), Some(Vec::new()))
    } else if m.edge_count() <= guard {
        match crate::edgecolor::chromatic_index(&m, guard) {
            Ok(chi) => match crate::edgecolor::edge_color(&m, chi) {
                Ok(c) => (Some(chi), Some(c.colors)),
                Err(e) => return domain_error(path, &e),
            },
            Err(e) => return domain_error(path, &e),
        }
    } else {
        (None, None)
    };
    let report = ReduceReport {
        graph: path.display().to_string(),
        reduced_vertices: r.reduced.vertex_count(),
        reduced_edges: r.reduced.edge_count(),
        faces: r.reduced.faces().len(),
        structure,
        kept: r.kept.clone(),
        edge_to_path: r.edge_to_path.clone(),
        face_map: r.face_map.clone(),
        regular: r.is_regular(),
        subdivision_multigraph: SubdivisionReport {
            face_count: s.face_count,
            links: s
                .links
                .iter()
                .map(|l| (l.vertex, l.faces.0, l.faces.1))
                .collect(),
            max_degree: s.max_degree,
            multiplicity: s.multiplicity,
            chromatic_index,
            edge_colors,
        },
    };
    emit(&serde_json::to_string_pretty(&report).unwrap(), out)
}

fn base_graph(base: &str) -> Result<PlaneGraph, String> {
    if generators::PLATONIC_NAMES.contains(&base) {
        return generators::platonic(base).map_err(|e| e.to_string());
    }
    let text = fs::read_to_string(base).map_err(|e| format!("cannot read {base}: {e}"))?;
    format::parse(&text).map_err(|e| e.to_string())
}

fn cmd_gen(family: &str, args: &[String], out: &Path) -> i32 {
    let parse_usize = |s: &String| -> Result<usize, String> {
        s.parse().map_err(|_| format!("bad number `{s}`"))
    };
    let graph: Result<PlaneGraph, String> = (|| {
        match family {
            "theta" => {
                let [a, b, c] = args else {
                    return Err("theta needs A B C".into());
                };
                generators::theta(parse_usize(a)?, parse_usize(b)?, parse_usize(c)?)
                    .map_err(|e| e.to_string())
            }
            "prism-subdiv" => {
                let [t] = args else {
                    return Err("prism-subdiv needs T".into());
                };
                generators::prism_subdiv(parse_usize(t)?).map_err(|e| e.to_string())
            }
            "thm6-prism" => {
                let [a, b, c] = args else {
                    return Err("thm6-prism needs A B C".into());
                };
                generators::thm6_prism(parse_usize(a)?, parse_usize(b)?, parse_usize(c)?)
                    .map_err(|e| e.to_string())
            }
            "platonic" => {
                let [name] = args else {
                    return Err("platonic needs NAME".into());
                };
                generators::platonic(name).map_err(|e| e.to_string())
            }
            "regular-subdiv" => {
                let [base, k] = args else {
                    return Err("regular-subdiv needs BASE K".into());
                };
                let g = base_graph(base)?;
                generators::regular_subdivide(&g, parse_usize(k)?).map_err(|e| e.to_string())
            }
            "subdivide" => {
                let [base, plan @ ..] = args else {
                    return Err("subdivide needs BASE E:C...".into());
                };
                let g = base_graph(base)?;
                let mut map = BTreeMap::new();
                for item in plan {
                    let (e, c) = item
                        .split_once(':')
                        .ok_or_else(|| format!("bad plan entry `{item}`, expected E:C"))?;
                    map.insert(
                        parse_usize(&e.to_string())?,
                        parse_usize(&c.to_string())?,
                    );
                }
                generators::subdivide_edges(&g, &map).map_err(|e| e.to_string())
            }
            "glue" => {
                let [b1, u1, v1, b2, u2, v2] = args else {
                    return Err("glue needs BASE1 U1 V1 BASE2 U2 V2".into());
                };
                let g1 = base_graph(b1)?;
                let g2 = base_graph(b2)?;
                generators::glue_at_two_cut(
                    &g1,
                    &g2,
                    parse_usize(u1)?,
                    parse_usize(v1)?,
                    parse_usize(u2)?,
                    parse_usize(v2)?,
                )
                .map_err(|e| e.to_string())
            }
            other => Err(format!(
                "unknown family `{other}` (theta, prism-subdiv, thm6-prism, platonic, regular-subdiv, subdivide, glue)"
            )),
        }
    })();
    match graph {
        Ok(g) => match fs::write(out, format::write(&g)) {
            Ok(()) => EXIT_OK,
            Err(e) => {
                eprintln!("error: cannot write {}: {e}", out.display());
                EXIT_USAGE
            }
        },
        Err(msg) => {
            eprintln!("error: {msg}");
            EXIT_USAGE
        }
    }
}
