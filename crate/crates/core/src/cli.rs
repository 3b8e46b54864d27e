//! The `eqcube` command line.
//!
//! Exit codes: 0 on success, 1 for domain errors (invalid mathematical
//! data, failed checks), 2 for unreadable or unparsable input. Errors are
//! written to stderr as a JSON object `{"error": {...}}`.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use serde::{Deserialize, Serialize};

use crate::algebra::rational::{format_rational, parse_rational};
use crate::algebra::{HLPoly, OneVarFrac, TriVarElem};
use crate::casson::{dedekind_sum, lambda_lens, SurgeryCoefficient};
use crate::diagram::{canonicalize, cs_count, enumerate_cs, normalization_constant, psi, theta, DiagramVector};
use crate::io::codec::{decode_frac, decode_graph, decode_poly, encode_graph, encode_tri, FracCode, GraphCode, PolyCode};
use crate::io::{parse_manifest, report_json};
use crate::selfcheck::{format_table, run_selfcheck};
use crate::surgery::{run_pipeline, CoefficientWindow, ReductionRequest};

#[derive(Parser, Debug)]
#[command(name = "eqcube", version, about = "Exact computations for the equivariant cube invariant")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Run a manifest of moves and write the JSON report.
    Compute {
        #[arg(long)]
        manifest: PathBuf,
        /// Report destination; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Reduce the final Q modulo Q_1..Q_N.
        #[arg(long)]
        kmax: Option<u32>,
        /// Exponent window `A..B` for the reduction.
        #[arg(long, alias = "degree-window", allow_hyphen_values = true)]
        window: Option<String>,
    },
    /// Evaluate psi on a beaded theta diagram.
    Psi {
        /// JSON file `{"delta": poly?, "theta": [P, Q, R]}` or
        /// `{"delta": poly?, "terms": [{"coeff": "c", "graph": {...}}]}`.
        #[arg(long, conflicts_with = "theta")]
        input: Option<PathBuf>,
        /// Inline JSON bead triple `[P, Q, R]`.
        #[arg(long)]
        theta: Option<String>,
    },
    /// Canonical form and sign of a monomial-beaded graph.
    Canon {
        /// JSON file `{"vertices", "orders", "edges"}`.
        #[arg(long, conflicts_with = "graph")]
        input: Option<PathBuf>,
        /// The same graph as inline JSON.
        #[arg(long)]
        graph: Option<String>,
    },
    /// Count, and for small n list, the labeled graphs CS_n.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        count_only: bool,
    },
    /// Casson-Walker invariant lambda of L(p, q), normalized like Casson's.
    Lens {
        #[arg(long, allow_hyphen_values = true)]
        p: i64,
        #[arg(long, allow_hyphen_values = true)]
        q: i64,
    },
    /// Dedekind sum s(q, p).
    Dedekind {
        #[arg(long, allow_hyphen_values = true)]
        q: i64,
        #[arg(long, allow_hyphen_values = true)]
        p: i64,
    },
    /// Run the bundled invariant suite and print a pass/fail table.
    Check {
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CliError {
    #[serde(skip)]
    pub exit_code: i32,
    pub kind: &'static str,
    pub code: String,
    pub message: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub line: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub column: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub move_index: Option<usize>,
}

impl CliError {
    fn parse(code: &str, message: impl ToString) -> Self {
        CliError {
            exit_code: 2,
            kind: "parse",
            code: code.into(),
            message: message.to_string(),
            line: None,
            column: None,
            move_index: None,
        }
    }

    fn domain(code: &str, message: impl ToString) -> Self {
        CliError { exit_code: 1, kind: "domain", ..Self::parse(code, message) }
    }

    fn json(e: serde_json::Error) -> Self {
        let code = if e.is_data() { "schema" } else { "json_syntax" };
        CliError { line: Some(e.line()), column: Some(e.column()), ..Self::parse(code, e) }
    }

    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct Wrapper<'a> {
            error: &'a CliError,
        }
        serde_json::to_string(&Wrapper { error: self }).expect("error serializes")
    }
}

fn read(path: &PathBuf) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::parse("unreadable_input", format!("{}: {e}", path.display())))
}

fn parse_window(s: &str) -> Result<CoefficientWindow, CliError> {
    let bad = || CliError::parse("bad_window", format!("expected A..B, got {s:?}"));
    let (a, b) = s.split_once("..").ok_or_else(bad)?;
    let (a, b): (i64, i64) = (a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?);
    if a > b {
        return Err(bad());
    }
    Ok(CoefficientWindow::new(a, b))
}

fn format_tri(f: &TriVarElem) -> String {
    let at_one = f.eval_111().ok().map(|c| format_rational(&c));
    serde_json::json!({ "psi": encode_tri(f), "eval_111": at_one }).to_string()
}

fn compute(manifest: &PathBuf, out: Option<&PathBuf>, kmax: Option<u32>, window: Option<&str>) -> Result<String, CliError> {
    let text = read(manifest)?;
    let mut m = parse_manifest(&text).map_err(|e| {
        let base =
            if e.is_parse_error() { CliError::parse(e.code(), &e) } else { CliError::domain(e.code(), &e) };
        let (line, column) = e.position().unzip();
        CliError { line, column, ..base }
    })?;
    if kmax.is_some() || window.is_some() {
        let window = match window {
            Some(w) => parse_window(w)?,
            None => CoefficientWindow::default(),
        };
        m.reduction = Some(ReductionRequest { k_max: kmax.unwrap_or(10), window });
    }
    let report = run_pipeline(&m).map_err(|e| {
        let code = match &e.source {
            crate::surgery::SurgeryError::SymmetryViolation => "symmetry_violation",
            crate::surgery::SurgeryError::WindowOverflow { .. } => "window_overflow",
            _ => "pipeline",
        };
        CliError { move_index: e.move_index, ..CliError::domain(code, &e) }
    })?;
    let text = report_json(&report, m.reduction.as_ref());
    match out {
        Some(path) => {
            std::fs::write(path, &text).map_err(|e| CliError::domain("unwritable_output", format!("{}: {e}", path.display())))?;
            Ok(String::new())
        }
        None => Ok(text),
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct PsiInput {
    #[serde(default)]
    delta: Option<PolyCode>,
    #[serde(default)]
    theta: Option<[FracCode; 3]>,
    #[serde(default)]
    terms: Option<Vec<PsiTerm>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct PsiTerm {
    coeff: String,
    graph: GraphCode,
}

fn cmd_psi(input: Option<&PathBuf>, inline: Option<&str>) -> Result<String, CliError> {
    let parsed: PsiInput = match (input, inline) {
        (Some(path), _) => serde_json::from_str(&read(path)?).map_err(CliError::json)?,
        (None, Some(t)) => {
            PsiInput { delta: None, theta: Some(serde_json::from_str(t).map_err(CliError::json)?), terms: None }
        }
        (None, None) => return Err(CliError::parse("missing_input", "pass --input FILE or --theta JSON")),
    };
    let enc = |e: crate::algebra::AlgebraError| CliError::parse("encoding", e);
    let dom = |e: crate::diagram::DiagramError| CliError::domain("diagram", e);
    let delta = match &parsed.delta {
        Some(p) => decode_poly(p).map_err(enc)?,
        None => HLPoly::one(),
    };
    let vector = match (&parsed.theta, &parsed.terms) {
        (Some(beads), None) => {
            let b: Vec<OneVarFrac> = beads.iter().map(decode_frac).collect::<Result<_, _>>().map_err(enc)?;
            theta(&b[0], &b[1], &b[2], &delta).map_err(dom)?
        }
        (None, Some(terms)) => {
            let mut v = DiagramVector::zero();
            for t in terms {
                let g = decode_graph(&t.graph).map_err(|e| CliError::parse("graph", e))?;
                v.add_graph(&g, parse_rational(&t.coeff).map_err(enc)?);
            }
            v
        }
        _ => return Err(CliError::parse("schema", "give exactly one of \"theta\" and \"terms\"")),
    };
    Ok(format!("{}\n", format_tri(&psi(&vector, &delta).map_err(dom)?)))
}

fn cmd_canon(input: Option<&PathBuf>, inline: Option<&str>) -> Result<String, CliError> {
    let text = match (input, inline) {
        (Some(path), _) => read(path)?,
        (None, Some(t)) => t.to_string(),
        (None, None) => return Err(CliError::parse("missing_input", "pass --input FILE or --graph JSON")),
    };
    let code: GraphCode = serde_json::from_str(&text).map_err(CliError::json)?;
    let g = decode_graph(&code).map_err(|e| CliError::parse("graph", e))?;
    let (c, sign) = canonicalize(&g);
    let out = serde_json::json!({ "graph": encode_graph(&c), "sign": sign });
    Ok(format!("{out}\n"))
}

fn cmd_enumerate(n: usize, count_only: bool) -> Result<String, CliError> {
    let dom = |e: crate::diagram::DiagramError| CliError::domain("enumeration", e);
    let count = cs_count(n).map_err(dom)?;
    let mut obj = serde_json::json!({
        "n": n,
        "count": count.to_string(),
        "normalization": format_rational(&normalization_constant(n)),
    });
    if !count_only {
        match enumerate_cs(n) {
            Ok(list) => {
                let graphs: Vec<_> =
                    list.iter().map(|g| serde_json::json!({ "vertices": g.vertices, "edges": g.edges })).collect();
                obj["graphs"] = serde_json::Value::Array(graphs);
            }
            Err(crate::diagram::DiagramError::EnumerationTooLarge(_)) => {
                obj["graphs"] = serde_json::Value::Null;
                obj["note"] = "too many graphs to list; count only".into();
            }
            Err(e) => return Err(dom(e)),
        }
    }
    Ok(format!("{obj}\n"))
}

fn dispatch(cli: Cli) -> Result<String, CliError> {
    let casson = |e: crate::casson::CassonError| CliError::domain("casson", e);
    match cli.command {
        Command::Compute { manifest, out, kmax, window } => compute(&manifest, out.as_ref(), kmax, window.as_deref()),
        Command::Psi { input, theta } => cmd_psi(input.as_ref(), theta.as_deref()),
        Command::Canon { input, graph } => cmd_canon(input.as_ref(), graph.as_deref()),
        Command::Enumerate { n, count_only } => cmd_enumerate(n, count_only),
        Command::Lens { p, q } => {
            let c = SurgeryCoefficient::new(p, q).map_err(casson)?;
            Ok(format!("{}\n", format_rational(&lambda_lens(&c))))
        }
        Command::Dedekind { q, p } => Ok(format!("{}\n", format_rational(&dedekind_sum(q, p).map_err(casson)?))),
        Command::Check { seed } => {
            let results = run_selfcheck(seed);
            let table = format_table(&results);
            if results.iter().all(|r| r.passed) {
                Ok(table)
            } else {
                Err(CliError { message: table, ..CliError::domain("check_failed", "") })
            }
        }
    }
}

/// Parses `args` (including the program name), runs the command and
/// returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{e}");
                return 0;
            }
            let _ = writeln!(err, "{}", CliError::parse("usage", e.to_string().trim_end()).to_json());
            return 2;
        }
    };
    let is_check = matches!(cli.command, Command::Check { .. });
    match dispatch(cli) {
        Ok(text) => {
            let _ = write!(out, "{text}");
            0
        }
        Err(e) => {
            if is_check {
                let _ = write!(out, "{}", e.message);
            }
            let _ = writeln!(err, "{}", e.to_json());
            e.exit_code
        }
    }
}
