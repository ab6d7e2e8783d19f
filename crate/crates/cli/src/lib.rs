//! The `hypvol` command line: argument parsing, report assembly and
//! rendering. [`run`] is the whole program; `main` only wires up stdio.
//!
//! Exit codes: 0 on success, 2 on invalid input, 3 when the bound requested
//! with `--bound` does not apply under the given hypotheses.

use std::collections::BTreeMap;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Number, Value};

use hypvol::augment::{augment, AugmentedPolyhedron};
use hypvol::linkdiag::{
    continued_fraction, conway_normal_form, two_bridge_diagram, DiagramFile, TwistDecomposition, TwistReducedDiagram,
};
use hypvol::linkvol::{link_report, LinkExtras, LinkFlags};
use hypvol::numerics::{lobachevsky, lobachevsky_quadrature, v_oct, v_tet};
use hypvol::planar::{CombinatorialMap, Family, MapFile, SkeletonCensus};
use hypvol::polyvol::{
    family_report, prism_crossover_exact, prism_crossover_quoted, rectification_bounds, rectification_volume,
    trivalent_threshold_constants,
};
use hypvol::report::{Bound, BoundReport};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_NOT_APPLICABLE: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "hypvol", version, about = "Volume bounds for hyperbolic polyhedra and link complements")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    format: Format,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Json,
}

#[derive(Debug, Subcommand)]
enum Cmd {
    /// Evaluate the Lobachevsky function.
    Lob {
        /// Angle in radians.
        #[arg(long, allow_hyphen_values = true)]
        theta: f64,
        /// Use the quadrature oracle instead of the series.
        #[arg(long)]
        quadrature: bool,
    },
    /// Print the basic volume constants.
    Constants,
    /// Polyhedron skeletons and their volume bounds.
    #[command(subcommand)]
    Poly(PolyCmd),
    /// Link diagrams and their volume bounds.
    #[command(subcommand)]
    Link(LinkCmd),
}

#[derive(Debug, Args)]
struct BoundSelect {
    /// Include the bound report.
    #[arg(long)]
    bounds: bool,
    /// Report only this bound; exit 3 if it does not apply.
    #[arg(long, value_name = "NAME")]
    bound: Option<String>,
}

#[derive(Debug, Subcommand)]
enum PolyCmd {
    /// A built-in family member.
    Family {
        #[arg(long, value_parser = parse_family)]
        name: Family,
        #[arg(long)]
        n: Option<usize>,
        #[command(flatten)]
        select: BoundSelect,
        /// Write the skeleton as a map file.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// A skeleton read from a map file.
    Graph {
        #[arg(long)]
        file: PathBuf,
        #[command(flatten)]
        select: BoundSelect,
    },
    /// The medial map of a map file.
    Medial {
        #[arg(long)]
        file: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// The dual map of a map file.
    Dual {
        #[arg(long)]
        file: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Args)]
struct Hypotheses {
    #[arg(long)]
    alternating: bool,
    #[arg(long)]
    reduced: bool,
    #[arg(long)]
    not_figure_eight: bool,
    #[arg(long)]
    not_borromean: bool,
    #[arg(long)]
    two_bridge: bool,
    /// The link has one component.
    #[arg(long)]
    knot: bool,
    /// `|a_{n+1}|,|a_{m-1}|`: second and penultimate Jones coefficients.
    #[arg(long, value_name = "A,B")]
    jones: Option<String>,
}

impl Hypotheses {
    fn flags(&self) -> LinkFlags {
        LinkFlags {
            alternating: self.alternating,
            reduced: self.reduced,
            not_figure_eight: self.not_figure_eight,
            not_borromean: self.not_borromean,
            two_bridge: self.two_bridge,
            knot: self.knot,
        }
    }
}

#[derive(Debug, Subcommand)]
enum LinkCmd {
    /// The two-bridge link b(p/q) in Conway normal form.
    TwoBridge {
        #[arg(long, value_name = "P/Q")]
        fraction: String,
        #[arg(long, value_name = "A,B")]
        jones: Option<String>,
        #[arg(long, value_name = "NAME")]
        bound: Option<String>,
        /// Write the twist-reduced diagram file.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// A diagram given only by its twist lengths.
    Twists {
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
        lengths: Vec<i64>,
        /// White face census of the augmentation polyhedron, as `n:f_n,...`.
        #[arg(long, value_name = "N:F,...")]
        census: Option<String>,
        #[command(flatten)]
        hyp: Hypotheses,
        #[arg(long, value_name = "NAME")]
        bound: Option<String>,
    },
    /// The augmentation polyhedron of a twist-reduced diagram.
    Augment {
        #[arg(long, conflicts_with = "fraction", required_unless_present = "fraction")]
        file: Option<PathBuf>,
        #[arg(long, value_name = "P/Q")]
        fraction: Option<String>,
        /// Write the polyhedron (map, red vertices, dark faces, census).
        #[arg(long)]
        out: Option<PathBuf>,
        #[command(flatten)]
        hyp: Hypotheses,
        #[command(flatten)]
        select: BoundSelect,
    },
}

/// A failure with its exit code.
#[derive(Debug)]
struct Failure {
    code: i32,
    msg: String,
}

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure { code: EXIT_INVALID, msg: e.to_string() }
    }
}

fn invalid(msg: impl Into<String>) -> Failure {
    Failure { code: EXIT_INVALID, msg: msg.into() }
}

fn parse_family(s: &str) -> Result<Family, String> {
    Family::from_str(s).map_err(|e| e.to_string())
}

fn parse_fraction(s: &str) -> Result<(i64, i64), Failure> {
    let (p, q) = s.split_once('/').ok_or_else(|| invalid(format!("expected P/Q, got {s:?}")))?;
    Ok((p.trim().parse()?, q.trim().parse()?))
}

fn parse_jones(s: &str) -> Result<(u64, u64), Failure> {
    let (a, b) = s.split_once(',').ok_or_else(|| invalid(format!("expected A,B, got {s:?}")))?;
    let a: i64 = a.trim().parse()?;
    let b: i64 = b.trim().parse()?;
    Ok((a.unsigned_abs(), b.unsigned_abs()))
}

fn parse_census(s: &str) -> Result<BTreeMap<usize, usize>, Failure> {
    let mut out = BTreeMap::new();
    for item in s.split(',').filter(|p| !p.trim().is_empty()) {
        let (n, f) = item.split_once(':').ok_or_else(|| invalid(format!("expected N:F, got {item:?}")))?;
        *out.entry(n.trim().parse()?).or_insert(0) += f.trim().parse::<usize>()?;
    }
    Ok(out)
}

/// Six fractional digits, correctly rounded from the exact binary value.
/// Negative zero prints as `0.000000`.
pub fn fmt6(x: f64) -> String {
    let s = format!("{x:.6}");
    if s == "-0.000000" {
        "0.000000".to_string()
    } else {
        s
    }
}

fn num6(x: f64) -> Value {
    Value::Number(Number::from_str(&fmt6(x)).expect("fixed-point decimal is valid JSON"))
}

/// Everything one invocation prints.
struct Document {
    command: String,
    input: Map<String, Value>,
    census: Map<String, Value>,
    report: Option<BoundReport>,
    /// Generated objects, such as a map when no `--out` was given.
    output: Map<String, Value>,
}

impl Document {
    fn new(command: &str) -> Self {
        Document {
            command: command.to_string(),
            input: Map::new(),
            census: Map::new(),
            report: None,
            output: Map::new(),
        }
    }

    fn bound_json(b: &Bound) -> Value {
        json!({
            "name": b.name,
            "kind": b.kind,
            "applicable": b.applicable(),
            "value": b.numeric().map_or(Value::Null, num6),
            "exact": b.value.as_ref().map(|v| v.to_string()),
            "reason": b.reason,
            "hypotheses": b.hypotheses,
            "citation": b.citation,
        })
    }

    fn to_json(&self) -> Value {
        let mut doc = Map::new();
        doc.insert("command".into(), Value::String(self.command.clone()));
        doc.insert("input".into(), Value::Object(self.input.clone()));
        doc.insert("census".into(), Value::Object(self.census.clone()));
        if !self.output.is_empty() {
            doc.insert("output".into(), Value::Object(self.output.clone()));
        }
        if let Some(rep) = &self.report {
            doc.insert("bounds".into(), rep.bounds.iter().map(Self::bound_json).collect());
            doc.insert("best_upper".into(), json!(rep.best_upper().map(|b| &b.name)));
            doc.insert("best_lower".into(), json!(rep.best_lower().map(|b| &b.name)));
            doc.insert("comparisons".into(), json!(rep.comparisons));
            doc.insert("warnings".into(), json!(rep.warnings));
        }
        Value::Object(doc)
    }

    fn to_table(&self) -> String {
        let mut s = format!("{}\n", self.command);
        let kv = |s: &mut String, title: &str, m: &Map<String, Value>| {
            if m.is_empty() {
                return;
            }
            s.push_str(&format!("\n{title}\n"));
            let w = m.keys().map(String::len).max().unwrap_or(0);
            for (k, v) in m {
                s.push_str(&format!("  {k:<w$}  {}\n", plain(v)));
            }
        };
        kv(&mut s, "input", &self.input);
        kv(&mut s, "census", &self.census);
        kv(&mut s, "output", &self.output);
        let Some(rep) = &self.report else { return s };

        let best_u = rep.best_upper().map(|b| b.name.clone());
        let best_l = rep.best_lower().map(|b| b.name.clone());
        let rows: Vec<[String; 5]> = rep
            .bounds
            .iter()
            .map(|b| {
                let mark = if Some(&b.name) == best_u.as_ref() || Some(&b.name) == best_l.as_ref() { "*" } else { "" };
                [
                    format!("{}{mark}", b.name),
                    b.kind.to_string(),
                    b.numeric().map_or("-".into(), fmt6),
                    b.value.as_ref().map_or("-".into(), |v| v.to_string()),
                    b.reason.as_ref().map_or("applies".into(), |r| format!("n/a: {r}")),
                ]
            })
            .collect();
        let header = ["bound", "kind", "value", "exact", "status"];
        let mut w = header.map(str::len);
        for row in &rows {
            for (wi, cell) in w.iter_mut().zip(row) {
                *wi = (*wi).max(cell.chars().count());
            }
        }
        s.push_str("\nbounds\n");
        let line = |cells: &[String]| {
            let mut l = String::from(" ");
            for (i, c) in cells.iter().enumerate() {
                if i + 1 == cells.len() {
                    l.push_str(&format!(" {c}"));
                } else {
                    let pad = w[i] - c.chars().count();
                    l.push_str(&format!(" {c}{}", " ".repeat(pad)));
                }
                l.push(' ');
            }
            l.trim_end().to_string() + "\n"
        };
        s.push_str(&line(&header.map(String::from)));
        for row in &rows {
            s.push_str(&line(row));
        }
        s.push_str(&format!("\n  best upper  {}\n", best_u.as_deref().unwrap_or("-")));
        s.push_str(&format!("  best lower  {}\n", best_l.as_deref().unwrap_or("-")));
        if !rep.comparisons.is_empty() {
            s.push_str("\ncomparisons\n");
            for c in &rep.comparisons {
                let winner = c.winner.as_deref().unwrap_or("tie");
                s.push_str(&format!("  {} vs {}: {winner} ({})\n", c.left, c.right, c.note));
            }
        }
        if !rep.warnings.is_empty() {
            s.push_str("\nwarnings\n");
            for wmsg in &rep.warnings {
                s.push_str(&format!("  {wmsg}\n"));
            }
        }
        s.push_str("\ncitations\n");
        for b in &rep.bounds {
            s.push_str(&format!("  {}: {}\n", b.name, b.citation));
        }
        s
    }
}

/// Compact one-line rendering for the table's key-value blocks.
fn plain(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(a) => a.iter().map(plain).collect::<Vec<_>>().join(", "),
        Value::Object(m) => m.iter().map(|(k, v)| format!("{k}:{}", plain(v))).collect::<Vec<_>>().join(", "),
        Value::Null => "-".into(),
        other => other.to_string(),
    }
}

fn counts_json(m: &BTreeMap<usize, usize>) -> Value {
    Value::Object(m.iter().map(|(k, v)| (k.to_string(), json!(v))).collect())
}

fn skeleton_census(doc: &mut Document, prefix: &str, c: &SkeletonCensus) {
    doc.census.insert(format!("{prefix}V"), json!(c.v));
    doc.census.insert(format!("{prefix}E"), json!(c.e));
    doc.census.insert(format!("{prefix}F"), json!(c.f));
    doc.census.insert(format!("{prefix}degrees"), counts_json(&c.degree_counts));
    doc.census.insert(format!("{prefix}faces"), counts_json(&c.face_counts));
}

fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T, Failure> {
    let text = fs::read_to_string(path).map_err(|e| invalid(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| invalid(format!("{}: {e}", path.display())))
}

fn write_json<T: serde::Serialize>(path: &Path, value: &T) -> Result<(), Failure> {
    let mut text = serde_json::to_string_pretty(value)?;
    text.push('\n');
    fs::write(path, text).map_err(|e| invalid(format!("{}: {e}", path.display())))
}

fn load_map(path: &Path) -> Result<CombinatorialMap, Failure> {
    let file: MapFile = read_json(path)?;
    Ok(CombinatorialMap::from_file(&file)?)
}

/// Restrict the report to one bound when `--bound` was given.
fn select_bound(doc: &mut Document, bound: Option<&str>) -> Result<i32, Failure> {
    let (Some(name), Some(rep)) = (bound, doc.report.as_mut()) else { return Ok(EXIT_OK) };
    let Some(b) = rep.get(name).cloned() else {
        let names: Vec<&str> = rep.bounds.iter().map(|b| b.name.as_str()).collect();
        return Err(invalid(format!("unknown bound {name:?}; expected one of {}", names.join(", "))));
    };
    rep.bounds = vec![b.clone()];
    rep.comparisons.clear();
    Ok(if b.applicable() { EXIT_OK } else { EXIT_NOT_APPLICABLE })
}

fn poly_document(doc: &mut Document, m: &CombinatorialMap, report: Option<BoundReport>) {
    skeleton_census(doc, "", &m.census());
    let mc = m.medial().census();
    doc.census.insert("medial V".into(), json!(mc.v));
    doc.census.insert("medial faces".into(), counts_json(&mc.face_counts));
    doc.report = report;
}

fn link_document(
    doc: &mut Document,
    d: &TwistDecomposition,
    flags: &LinkFlags,
    extras: &LinkExtras,
    p: Option<&AugmentedPolyhedron>,
) {
    let s = d.stats();
    doc.census.insert("twists".into(), json!(d.lengths()));
    doc.census.insert("t".into(), json!(s.t));
    doc.census.insert("c".into(), json!(s.c));
    let tc: Map<String, Value> = s.t_counts.iter().map(|(k, v)| (k.to_string(), json!(v))).collect();
    doc.census.insert("twist lengths".into(), Value::Object(tc));
    if let Some(p) = p {
        let c = p.map().census();
        doc.census.insert("P V,E,F".into(), json!([c.v, c.e, c.f]));
        doc.census.insert("P dark triangles".into(), json!(p.dark_faces().len()));
    }
    if let Some(w) = &extras.white_census {
        doc.census.insert("white faces".into(), counts_json(w));
    }
    let flag_map: Map<String, Value> =
        serde_json::to_value(flags).expect("flags serialize").as_object().cloned().unwrap_or_default();
    doc.input.insert("flags".into(), Value::Object(flag_map));
    doc.report = Some(link_report(d, flags, extras));
}

fn two_bridge_flags(p: i64) -> LinkFlags {
    // Conway normal form diagrams are reduced and alternating; b(p/q) has
    // at most two components, and p = 5 is the figure-eight.
    LinkFlags {
        alternating: true,
        reduced: true,
        not_figure_eight: p != 5,
        not_borromean: true,
        two_bridge: true,
        knot: p % 2 != 0,
    }
}

fn execute(cli: Cli) -> Result<(Document, i32), Failure> {
    match cli.cmd {
        Cmd::Lob { theta, quadrature } => {
            let mut doc = Document::new(if quadrature { "lob (quadrature)" } else { "lob" });
            let v = if quadrature { lobachevsky_quadrature(theta)? } else { lobachevsky(theta)? };
            doc.input.insert("theta".into(), json!(theta));
            doc.output.insert("value".into(), num6(v));
            Ok((doc, EXIT_OK))
        }
        Cmd::Constants => {
            let mut doc = Document::new("constants");
            let (lo, hi) = trivalent_threshold_constants();
            for (k, v) in [
                ("v_tet", v_tet()),
                ("v_oct", v_oct()),
                ("lob(pi/3)", v_tet() / 3.0),
                ("lob(pi/4)", v_oct() / 8.0),
                ("prism crossover (quoted form)", prism_crossover_quoted()),
                ("prism crossover (exact form)", prism_crossover_exact()),
                ("trivalent threshold lower", lo),
                ("trivalent threshold upper", hi),
            ] {
                doc.output.insert(k.into(), num6(v));
            }
            Ok((doc, EXIT_OK))
        }
        Cmd::Poly(cmd) => poly(cmd),
        Cmd::Link(cmd) => link(cmd),
    }
}

fn poly(cmd: PolyCmd) -> Result<(Document, i32), Failure> {
    match cmd {
        PolyCmd::Family { name, n, select, out } => {
            let n = match (name.takes_n(), n) {
                (true, Some(n)) => n,
                (true, None) => return Err(invalid(format!("family {name} needs --n"))),
                (false, _) => 0,
            };
            let m = name.build(n)?;
            let mut doc = Document::new("poly family");
            doc.input.insert("family".into(), json!(name.name()));
            if name.takes_n() {
                doc.input.insert("n".into(), json!(n));
            }
            if let Some(path) = &out {
                write_json(path, &m.to_file())?;
            }
            let report = if select.bounds || select.bound.is_some() { Some(family_report(name, n)?) } else { None };
            poly_document(&mut doc, &m, report);
            if let Some(v) = rectification_volume(name, n) {
                doc.census.insert("rectification volume".into(), num6(v));
            }
            let code = select_bound(&mut doc, select.bound.as_deref())?;
            Ok((doc, code))
        }
        PolyCmd::Graph { file, select } => {
            let m = load_map(&file)?;
            let mut doc = Document::new("poly graph");
            doc.input.insert("file".into(), json!(file.display().to_string()));
            let report = if select.bounds || select.bound.is_some() { Some(rectification_bounds(&m)?) } else { None };
            poly_document(&mut doc, &m, report);
            let code = select_bound(&mut doc, select.bound.as_deref())?;
            Ok((doc, code))
        }
        PolyCmd::Medial { file, out } => derived_map("poly medial", &file, out.as_deref(), CombinatorialMap::medial),
        PolyCmd::Dual { file, out } => derived_map("poly dual", &file, out.as_deref(), CombinatorialMap::dual),
    }
}

fn derived_map(
    command: &str,
    file: &Path,
    out: Option<&Path>,
    op: fn(&CombinatorialMap) -> CombinatorialMap,
) -> Result<(Document, i32), Failure> {
    let m = op(&load_map(file)?);
    let mut doc = Document::new(command);
    doc.input.insert("file".into(), json!(file.display().to_string()));
    skeleton_census(&mut doc, "", &m.census());
    match out {
        Some(path) => {
            write_json(path, &m.to_file())?;
            doc.input.insert("out".into(), json!(path.display().to_string()));
        }
        None => {
            doc.output.insert("map".into(), serde_json::to_value(m.to_file())?);
        }
    }
    Ok((doc, EXIT_OK))
}

fn extras(hyp: &Hypotheses, white_census: Option<BTreeMap<usize, usize>>) -> Result<LinkExtras, Failure> {
    let jones = hyp.jones.as_deref().map(parse_jones).transpose()?;
    Ok(LinkExtras { white_census, jones })
}

fn merge(a: LinkFlags, b: LinkFlags) -> LinkFlags {
    LinkFlags {
        alternating: a.alternating || b.alternating,
        reduced: a.reduced || b.reduced,
        not_figure_eight: a.not_figure_eight || b.not_figure_eight,
        not_borromean: a.not_borromean || b.not_borromean,
        two_bridge: a.two_bridge || b.two_bridge,
        knot: a.knot || b.knot,
    }
}

fn link(cmd: LinkCmd) -> Result<(Document, i32), Failure> {
    match cmd {
        LinkCmd::TwoBridge { fraction, jones, bound, out } => {
            let (p, q_in) = parse_fraction(&fraction)?;
            let (p, q) = conway_normal_form(p, q_in)?;
            let cf = continued_fraction(p, q)?;
            let d = two_bridge_diagram(p, q)?;
            if let Some(path) = &out {
                write_json(path, &d.to_file())?;
            }
            let aug = augment(&d)?;
            let mut doc = Document::new("link two-bridge");
            doc.input.insert("fraction".into(), json!(format!("{p}/{q_in}")));
            doc.input.insert("continued fraction".into(), json!(cf));
            let jones = jones.as_deref().map(parse_jones).transpose()?;
            if let Some((a, b)) = jones {
                doc.input.insert("jones".into(), json!([a, b]));
            }
            let ex = LinkExtras { white_census: Some(aug.white_face_census().clone()), jones };
            link_document(&mut doc, &d.decomposition(), &two_bridge_flags(p), &ex, Some(&aug));
            if q != q_in {
                if let Some(rep) = doc.report.as_mut() {
                    rep.warn(format!("b({p}/{q_in}) is the mirror image of b({p}/{q}); the latter's diagram is used"));
                }
            }
            let code = select_bound(&mut doc, bound.as_deref())?;
            Ok((doc, code))
        }
        LinkCmd::Twists { lengths, census, hyp, bound } => {
            let d = TwistDecomposition::new(lengths)?;
            let census = census.as_deref().map(parse_census).transpose()?;
            let ex = extras(&hyp, census)?;
            let mut doc = Document::new("link twists");
            link_document(&mut doc, &d, &hyp.flags(), &ex, None);
            let code = select_bound(&mut doc, bound.as_deref())?;
            Ok((doc, code))
        }
        LinkCmd::Augment { file, fraction, out, hyp, select } => {
            let mut doc = Document::new("link augment");
            let (d, flags) = match (&file, &fraction) {
                (Some(path), _) => {
                    doc.input.insert("file".into(), json!(path.display().to_string()));
                    let f: DiagramFile = read_json(path)?;
                    (TwistReducedDiagram::from_file(&f)?, hyp.flags())
                }
                (None, Some(fr)) => {
                    let (p, q) = parse_fraction(fr)?;
                    doc.input.insert("fraction".into(), json!(format!("{p}/{q}")));
                    (two_bridge_diagram(p, q)?, merge(hyp.flags(), two_bridge_flags(p)))
                }
                (None, None) => return Err(invalid("give --file or --fraction")),
            };
            let aug = augment(&d)?;
            if let Some(path) = &out {
                write_json(path, &aug.to_file())?;
                doc.input.insert("out".into(), json!(path.display().to_string()));
            }
            let ex = extras(&hyp, Some(aug.white_face_census().clone()))?;
            link_document(&mut doc, &d.decomposition(), &flags, &ex, Some(&aug));
            doc.census.remove("P V,E,F");
            skeleton_census(&mut doc, "P ", &aug.map().census());
            doc.census.insert("P red vertices".into(), json!(aug.red_vertices()));
            if !(select.bounds || select.bound.is_some()) {
                doc.report = None;
                doc.input.remove("flags");
            }
            let code = select_bound(&mut doc, select.bound.as_deref())?;
            Ok((doc, code))
        }
    }
}

/// Parse `args` (including the program name), run, and write the output.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = out.write_all(text.as_bytes());
                    EXIT_OK
                }
                _ => {
                    let _ = err.write_all(text.as_bytes());
                    EXIT_INVALID
                }
            };
        }
    };
    let format = cli.format;
    match execute(cli) {
        Ok((doc, code)) => {
            let text = match format {
                Format::Table => doc.to_table(),
                Format::Json => {
                    let mut s = serde_json::to_string_pretty(&doc.to_json()).expect("report serializes");
                    s.push('\n');
                    s
                }
            };
            if out.write_all(text.as_bytes()).is_err() {
                return EXIT_INVALID;
            }
            code
        }
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.msg);
            f.code
        }
    }
}
