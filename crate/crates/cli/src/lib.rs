//! The `casson` command line. [`run`] takes the full argument vector and
//! returns the exit status with everything that would be printed, so the
//! binary is a thin wrapper around it.

mod render;

use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};
use kirby_casson::intform::{
    classify_unimodular, inertia, parity_type, parse_matrix_text, rohlin_mu, Parity, SymIntMatrix,
};
use kirby_casson::kirbyrep::{apply_moves, parse_move_script, FramedPresentation, HomologyOrder};
use kirby_casson::knotinv::{knot_invariants, KnotSpec};
use kirby_casson::linkdiag::{parse_pd, trace_components, LinkError};
use kirby_casson::results::{
    appendix_report, bounding_verdict, casson_surgery, surgery_table, AppendixRecord, Citation, TableRecord,
    VerdictValue, SCHEMA_VERSION,
};
use kirby_casson::Sign;
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::Serialize;
use serde_json::Value;

pub use render::render_table;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Parser, Debug)]
#[command(name = "casson", version, about = "Casson invariants and Kirby calculus for twisted Whitehead double surgeries")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// λ' of a knot, or λ of ±1 surgery on it.
    Invariant {
        #[arg(long)]
        knot: String,
        /// Surgery coefficient, +1 or -1.
        #[arg(long, allow_hyphen_values = true, value_parser = parse_sign)]
        surgery: Option<Sign>,
        #[arg(long)]
        json: bool,
    },
    /// Evaluate the surgery table for M_n(K1, K2).
    Table {
        #[command(flatten)]
        n: NSelect,
        #[arg(long)]
        json: bool,
    },
    /// Determinants, indices and Rohlin invariants of the appendix linking matrices.
    Appendix {
        #[command(flatten)]
        n: NSelect,
        #[arg(long)]
        json: bool,
    },
    /// Whether M_n(K1, K2) bounds a contractible 4-manifold.
    Verdict {
        #[arg(long)]
        k1: String,
        #[arg(long)]
        k2: String,
        #[arg(long, allow_negative_numbers = true)]
        n: i64,
        #[arg(long)]
        json: bool,
    },
    /// Apply a Kirby move script to a linking matrix.
    Kirby {
        /// Move script.
        #[arg(long)]
        file: PathBuf,
        /// Starting linking matrix.
        #[arg(long)]
        start: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Linking number of two components of a PD code.
    Lk {
        #[arg(long)]
        pd: PathBuf,
        /// Two 1-based component numbers, as `a,b`.
        #[arg(long, value_parser = parse_pair)]
        components: (usize, usize),
        #[arg(long)]
        json: bool,
    },
    /// Determinant, inertia, parity and class of a symmetric form.
    Classify {
        #[arg(long)]
        matrix: PathBuf,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct NSelect {
    #[arg(long, allow_negative_numbers = true)]
    n: Option<i64>,
    /// Inclusive range `a..b`; write `--range=-12..12` for a negative start.
    #[arg(long, allow_hyphen_values = true, value_parser = parse_range)]
    range: Option<NRange>,
}

impl NSelect {
    fn values(&self) -> Vec<i64> {
        match (self.n, self.range) {
            (Some(n), _) => vec![n],
            (None, Some(r)) => (r.lo..=r.hi).collect(),
            (None, None) => Vec::new(),
        }
    }
}

/// Inclusive integer range `a..b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NRange {
    pub lo: i64,
    pub hi: i64,
}

impl FromStr for NRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let (a, b) = s.split_once("..").ok_or_else(|| format!("expected a..b, got {s:?}"))?;
        let parse = |t: &str| t.trim().parse::<i64>().map_err(|_| format!("{t:?} is not an integer"));
        Ok(NRange { lo: parse(a)?, hi: parse(b)? })
    }
}

fn parse_range(s: &str) -> Result<NRange, String> {
    s.parse()
}

fn parse_sign(s: &str) -> Result<Sign, String> {
    s.parse().map_err(|_| format!("expected +1 or -1, got {s:?}"))
}

fn parse_pair(s: &str) -> Result<(usize, usize), String> {
    let (a, b) = s.split_once(',').ok_or_else(|| format!("expected a,b, got {s:?}"))?;
    let parse = |t: &str| match t.trim().parse::<usize>() {
        Ok(0) | Err(_) => Err(format!("{t:?} is not a component number (counted from 1)")),
        Ok(v) => Ok(v),
    };
    Ok((parse(a)?, parse(b)?))
}

enum Failure {
    Usage(String),
    Domain(String),
}

impl<E: std::error::Error> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Domain(e.to_string())
    }
}

fn read_file(flag: &str, path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path)
        .map_err(|e| Failure::Usage(format!("{flag}: cannot read {}: {e}", path.display())))
}

pub fn run<I, T>(args: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Output { code: 2, stdout: String::new(), stderr: text }
            } else {
                Output { code: 0, stdout: text, stderr: String::new() }
            };
        }
    };
    match dispatch(cli.command) {
        Ok(stdout) => Output { code: 0, stdout, stderr: String::new() },
        Err(Failure::Usage(msg)) => Output { code: 2, stdout: String::new(), stderr: format!("error: {msg}\n") },
        Err(Failure::Domain(msg)) => Output { code: 1, stdout: String::new(), stderr: format!("error: {msg}\n") },
    }
}

fn to_json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("records serialize");
    s.push('\n');
    s
}

fn big_json(v: &BigInt) -> Value {
    v.to_i64().map(Value::from).unwrap_or_else(|| Value::String(v.to_string()))
}

fn citations_text(c: &[Citation]) -> String {
    c.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(", ")
}

fn dispatch(cmd: Command) -> Result<String, Failure> {
    match cmd {
        Command::Invariant { knot, surgery, json } => invariant(knot.parse()?, surgery, json),
        Command::Table { n, json } => table(&n.values(), json),
        Command::Appendix { n, json } => appendix(&n.values(), json),
        Command::Verdict { k1, k2, n, json } => verdict(k1.parse()?, k2.parse()?, n, json),
        Command::Kirby { file, start, json } => kirby(&file, &start, json),
        Command::Lk { pd, components, json } => lk(&pd, components, json),
        Command::Classify { matrix, json } => classify(&matrix, json),
    }
}

#[derive(Serialize)]
struct InvariantJson {
    schema: u32,
    knot: KnotSpec,
    alexander: String,
    a2: i64,
    casson_prime: i64,
    #[serde(skip_serializing_if = "Option::is_none")]
    surgery: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    lambda: Option<i64>,
}

fn invariant(knot: KnotSpec, surgery: Option<Sign>, json: bool) -> Result<String, Failure> {
    let r = knot_invariants(&knot);
    let lambda = surgery.map(|eps| casson_surgery(&knot, eps));
    if json {
        return Ok(to_json(&InvariantJson {
            schema: SCHEMA_VERSION,
            knot,
            alexander: r.alexander.to_string(),
            a2: r.a2,
            casson_prime: r.casson_prime,
            surgery: surgery.map(Sign::as_i64),
            lambda,
        }));
    }
    let mut out = format!(
        "knot: {knot}\nalexander: {}\na2: {}\nlambda': {}\n",
        r.alexander, r.a2, r.casson_prime
    );
    if let (Some(eps), Some(l)) = (surgery, lambda) {
        out.push_str(&format!("lambda(S3_{eps}1({knot})): {l}\n"));
    }
    Ok(out)
}

fn table(ns: &[i64], json: bool) -> Result<String, Failure> {
    let mut records = Vec::new();
    for &n in ns {
        for row in surgery_table() {
            records.push(TableRecord::evaluate(row, n)?);
        }
    }
    if json {
        return Ok(to_json(&records));
    }
    let headers = ["n", "row", "K1", "K2", "presentation", "lambda", "mu", "verdict"];
    let body: Vec<Vec<String>> = records
        .iter()
        .map(|r| {
            let verdict = match (r.verdict, r.citations.is_empty()) {
                (v, true) => v.to_string(),
                (v, false) => format!("{v} ({})", citations_text(&r.citations)),
            };
            vec![
                r.n.to_string(),
                r.row.to_string(),
                r.k1.clone(),
                r.k2.clone(),
                r.presentations.join(" ~= "),
                r.lambda.to_string(),
                r.mu.to_string(),
                verdict,
            ]
        })
        .collect();
    Ok(render_table(&headers, &body, &[0, 1, 5, 6]))
}

fn appendix(ns: &[i64], json: bool) -> Result<String, Failure> {
    let mut records = Vec::new();
    for &n in ns {
        records.push(AppendixRecord::from(&appendix_report(n)?));
    }
    if json {
        return Ok(to_json(&records));
    }
    let headers = ["n", "detA", "indexA", "parityA", "detB", "indexB", "parityB", "mu", "mu_via_casson"];
    let body: Vec<Vec<String>> = records
        .iter()
        .map(|r| {
            vec![
                r.n.to_string(),
                r.det_a.to_string(),
                r.index_a.to_string(),
                r.parity_a.to_string(),
                r.det_b.to_string(),
                r.index_b.to_string(),
                r.parity_b.to_string(),
                r.mu.to_string(),
                r.mu_via_casson.to_string(),
            ]
        })
        .collect();
    Ok(render_table(&headers, &body, &[0, 1, 2, 4, 5, 7, 8]))
}

#[derive(Serialize)]
struct VerdictJson {
    schema: u32,
    k1: KnotSpec,
    k2: KnotSpec,
    n: i64,
    verdict: VerdictValue,
    citations: Vec<Citation>,
}

fn verdict(k1: KnotSpec, k2: KnotSpec, n: i64, json: bool) -> Result<String, Failure> {
    let v = bounding_verdict(&k1, &k2, n)?;
    if json {
        return Ok(to_json(&VerdictJson { schema: SCHEMA_VERSION, k1, k2, n, verdict: v.value, citations: v.citations }));
    }
    Ok(format!("{v}\n"))
}

#[derive(Serialize)]
struct KirbyJson {
    schema: u32,
    moves: usize,
    labels: Vec<String>,
    matrix: Vec<Vec<Value>>,
    determinant: Value,
    first_homology_order: Value,
    is_homology_sphere: bool,
}

fn kirby(file: &Path, start: &Path, json: bool) -> Result<String, Failure> {
    let script = read_file("--file", file)?;
    let matrix = parse_matrix_text(&read_file("--start", start)?)?;
    let moves = parse_move_script(&script)?;
    let end = apply_moves(&FramedPresentation::unlabeled(matrix), &moves)?;
    let report = end.boundary_report();
    if json {
        let rows = end.matrix().as_matrix().to_rows();
        return Ok(to_json(&KirbyJson {
            schema: SCHEMA_VERSION,
            moves: moves.len(),
            labels: end.labels().to_vec(),
            matrix: rows.iter().map(|r| r.iter().map(big_json).collect()).collect(),
            determinant: big_json(&report.determinant),
            first_homology_order: match &report.first_homology_order {
                HomologyOrder::Finite(k) => big_json(k),
                HomologyOrder::Infinite => Value::String("Infinite".into()),
            },
            is_homology_sphere: report.is_homology_sphere,
        }));
    }
    Ok(format!(
        "moves applied: {}\n{end}\ndeterminant: {}\n|H1|: {}\nhomology sphere: {}\n",
        moves.len(),
        report.determinant,
        report.first_homology_order,
        if report.is_homology_sphere { "yes" } else { "no" }
    ))
}

#[derive(Serialize)]
struct LkJson {
    schema: u32,
    components: [usize; 2],
    linking_number: i64,
}

fn lk(pd: &Path, (a, b): (usize, usize), json: bool) -> Result<String, Failure> {
    let code = parse_pd(&read_file("--pd", pd)?)?;
    let diagram = trace_components(&code)?;
    let count = diagram.component_count();
    if let Some(&id) = [a, b].iter().find(|&&id| id > count) {
        return Err(LinkError::UnknownComponent { id, count }.into());
    }
    if a == b {
        return Err(LinkError::SameComponent { id: a }.into());
    }
    let value = diagram.linking_number(a - 1, b - 1)?;
    if json {
        return Ok(to_json(&LkJson { schema: SCHEMA_VERSION, components: [a, b], linking_number: value }));
    }
    Ok(format!("{value}\n"))
}

#[derive(Serialize)]
struct ClassifyJson {
    schema: u32,
    size: usize,
    det: Value,
    positive: usize,
    negative: usize,
    zero: usize,
    index: i64,
    parity: Parity,
    class: Option<String>,
    mu: Option<u8>,
}

struct Classification {
    m: SymIntMatrix,
    class: Result<String, String>,
    mu: Option<u8>,
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let t = inertia(&self.m);
        writeln!(f, "size: {}", self.m.size())?;
        writeln!(f, "det: {}", self.m.det())?;
        writeln!(f, "inertia: ({}, {}, {})", t.positive, t.negative, t.zero)?;
        writeln!(f, "index: {}", t.index())?;
        writeln!(f, "parity: {}", parity_type(&self.m))?;
        match &self.class {
            Ok(c) => writeln!(f, "class: {c}")?,
            Err(e) => writeln!(f, "class: none ({e})")?,
        }
        if let Some(mu) = self.mu {
            writeln!(f, "mu: {mu}")?;
        }
        Ok(())
    }
}

fn classify(path: &Path, json: bool) -> Result<String, Failure> {
    let m = parse_matrix_text(&read_file("--matrix", path)?)?;
    let class = classify_unimodular(&m).map(|c| c.to_string()).map_err(|e| e.to_string());
    let mu = rohlin_mu(&m).ok();
    let c = Classification { m, class, mu };
    if json {
        let t = inertia(&c.m);
        return Ok(to_json(&ClassifyJson {
            schema: SCHEMA_VERSION,
            size: c.m.size(),
            det: big_json(&c.m.det()),
            positive: t.positive,
            negative: t.negative,
            zero: t.zero,
            index: t.index(),
            parity: parity_type(&c.m),
            class: c.class.ok(),
            mu: c.mu,
        }));
    }
    Ok(c.to_string())
}
