//! The `rado` command line: one JSON object per output line, CSV for tables.
//!
//! Exit codes: 0 on success, 1 when a result is not covered by any closed
//! form or the search hit its cutoff, 2 on input errors (including overflow).

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::closed_forms::{r2_single_rhs, Provenance, RadoResult};
use crate::equations::Equation;
use crate::error::{RadoError, Result};
use crate::rado_theorems::{default_search_cutoff, r2_unit, rado_for_equation};
use crate::search::{compute_rado_with, export_cnf, Cnf, Coloring, SearchOptions, SearchOutcome};
use crate::witnesses::{all_witnesses, WitnessColoring, WitnessName};

#[derive(Debug, Parser)]
#[command(
    name = "rado",
    version,
    about = "2-color Rado numbers: closed forms and exhaustive search"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// R2(m, a) for x1 + ... + x_{m-1} = a*y.
    ClosedForm {
        #[arg(long)]
        m: u64,
        #[arg(long)]
        a: u64,
    },
    /// r2(n, k), or the closed-form result for an equation given with --eq.
    Number {
        #[arg(long, requires = "k", conflicts_with = "eq")]
        n: Option<u64>,
        #[arg(long, requires = "n")]
        k: Option<u64>,
        #[arg(long)]
        eq: Option<String>,
        /// Settle bounds by running the search oracle.
        #[arg(long)]
        resolve: bool,
        #[arg(long, env = "RADO_MAX_R")]
        max_r: Option<u64>,
        #[arg(long, default_value_t = 1)]
        threads: usize,
    },
    /// Exhaustive search for the Rado number of an equation.
    Search {
        #[arg(long)]
        eq: String,
        #[arg(long, env = "RADO_MAX_R")]
        max_r: Option<u64>,
        #[arg(long, default_value_t = 1)]
        threads: usize,
    },
    /// Compare r2(n, k) against the search oracle over a grid.
    Verify {
        #[arg(long, default_value_t = 10)]
        n_max: u64,
        #[arg(long, default_value_t = 10)]
        k_max: u64,
        /// Also check n < k (default grid is 2 <= k <= n).
        #[arg(long)]
        all: bool,
        #[arg(long, default_value_t = 1)]
        threads: usize,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Lower-bound colorings for x1 + ... + xn = y1 + ... + yk.
    Witness {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        k: u64,
    },
    /// The r2(n, k) table with provenance per cell.
    Table {
        #[arg(long, default_value_t = 10)]
        n_max: u64,
        #[arg(long, default_value_t = 10)]
        k_max: u64,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// DIMACS CNF whose models are the valid colorings of [r].
    Sat {
        #[arg(long)]
        eq: String,
        #[arg(long)]
        r: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Query {
    ClosedForm { m: u64, a: u64 },
    Unit { n: u64, k: u64 },
    Equation { eq: String },
    Witness { n: u64, k: u64 },
    Sat { eq: String, r: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SatReport {
    pub num_vars: usize,
    pub num_clauses: usize,
    pub out: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Payload {
    Rado(RadoResult<u64>),
    Search(SearchOutcome),
    /// Closed-form bounds settled by the oracle.
    Resolved {
        closed_form: RadoResult<u64>,
        search: SearchOutcome,
    },
    Witness(WitnessColoring),
    Sat(SatReport),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub query: Query,
    pub result: Payload,
    pub witness: Option<Coloring>,
    pub provenance: Option<Provenance>,
    pub timing_ms: u64,
}

impl OutputRecord {
    fn new(query: Query, result: Payload, started: Instant) -> Self {
        let provenance = match &result {
            Payload::Rado(r) => r.provenance(),
            Payload::Search(_) | Payload::Resolved { .. } => Some(Provenance::Search),
            Payload::Witness(w) => w.applicable.then_some(match w.name {
                WitnessName::LemmaColoring => Provenance::LemmaLower,
                WitnessName::ParityColoring3 | WitnessName::Mod3Coloring4 => Provenance::Theorem1,
            }),
            Payload::Sat(_) => None,
        };
        let witness = match &result {
            Payload::Search(s) | Payload::Resolved { search: s, .. } => s.witness.clone(),
            Payload::Witness(w) => Some(w.coloring.clone()),
            _ => None,
        };
        OutputRecord {
            query,
            result,
            witness,
            provenance,
            timing_ms: started.elapsed().as_millis() as u64,
        }
    }

    pub fn exit_code(&self) -> i32 {
        match &self.result {
            Payload::Rado(RadoResult::NotCovered { .. }) => 1,
            Payload::Search(s) | Payload::Resolved { search: s, .. } if s.cutoff_hit => 1,
            _ => 0,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("records always serialize")
    }
}

pub fn cmd_closed_form(m: u64, a: u64) -> Result<OutputRecord> {
    let t = Instant::now();
    let r = r2_single_rhs(&m, &a)?;
    Ok(OutputRecord::new(
        Query::ClosedForm { m, a },
        Payload::Rado(r),
        t,
    ))
}

pub fn cmd_number(n: u64, k: u64) -> Result<OutputRecord> {
    let t = Instant::now();
    let r = r2_unit(&n, &k)?;
    Ok(OutputRecord::new(Query::Unit { n, k }, Payload::Rado(r), t))
}

/// Closed form for `eq`; with `resolve`, bounds are settled by the oracle.
pub fn cmd_number_eq(eq: &Equation, resolve: Option<SearchOptions>) -> Result<OutputRecord> {
    let t = Instant::now();
    let query = Query::Equation { eq: eq.to_string() };
    let closed = rado_for_equation::<u64>(eq)?;
    let Some(opts) = resolve.filter(|_| !matches!(closed, RadoResult::Exact { .. })) else {
        return Ok(OutputRecord::new(query, Payload::Rado(closed), t));
    };
    let search = compute_rado_with(eq, opts)?;
    if let Some(v) = search.rado {
        if !closed.admits(&v) {
            return Err(RadoError::Internal(format!(
                "search value {v} for {eq} contradicts {closed:?}"
            )));
        }
    }
    Ok(OutputRecord::new(
        query,
        Payload::Resolved {
            closed_form: closed,
            search,
        },
        t,
    ))
}

pub fn cmd_search(eq: &Equation, opts: SearchOptions) -> Result<OutputRecord> {
    let t = Instant::now();
    let out = compute_rado_with(eq, opts)?;
    Ok(OutputRecord::new(
        Query::Equation { eq: eq.to_string() },
        Payload::Search(out),
        t,
    ))
}

pub fn cmd_witness(n: u64, k: u64) -> Result<Vec<OutputRecord>> {
    let t = Instant::now();
    all_witnesses(n, k)?
        .into_iter()
        .map(|w| {
            if w.applicable && !w.verify()? {
                return Err(RadoError::Internal(format!(
                    "{:?} fails for ({n},{k})",
                    w.name
                )));
            }
            Ok(OutputRecord::new(
                Query::Witness { n, k },
                Payload::Witness(w),
                t,
            ))
        })
        .collect()
}

/// Writes the DIMACS text to `out`, or returns it for stdout.
pub fn cmd_sat(
    eq: &Equation,
    r: u64,
    out: Option<&std::path::Path>,
) -> Result<(Cnf, OutputRecord)> {
    let t = Instant::now();
    let cnf = export_cnf(eq, r)?;
    if let Some(path) = out {
        std::fs::write(path, cnf.to_dimacs()).map_err(|e| {
            RadoError::Precondition(format!("cannot write {}: {e}", path.display()))
        })?;
    }
    let report = SatReport {
        num_vars: cnf.num_vars,
        num_clauses: cnf.clauses.len(),
        out: out.map(|p| p.display().to_string()),
    };
    let rec = OutputRecord::new(
        Query::Sat {
            eq: eq.to_string(),
            r,
        },
        Payload::Sat(report),
        t,
    );
    Ok((cnf, rec))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableCell {
    pub n: u64,
    pub k: u64,
    pub value: u64,
    pub provenance: Provenance,
}

pub fn cmd_table(n_max: u64, k_max: u64) -> Result<Vec<TableCell>> {
    let mut cells = Vec::new();
    for n in 1..=n_max {
        for k in 1..=k_max {
            if n + k < 3 {
                continue;
            }
            if let RadoResult::Exact { value, provenance } = r2_unit(&n, &k)? {
                cells.push(TableCell {
                    n,
                    k,
                    value,
                    provenance,
                });
            }
        }
    }
    Ok(cells)
}

pub fn table_csv(cells: &[TableCell]) -> String {
    let mut out = String::from("n,k,value,provenance\n");
    for c in cells {
        let _ = writeln!(out, "{},{},{},{}", c.n, c.k, c.value, c.provenance);
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyRow {
    pub n: u64,
    pub k: u64,
    pub formula: u64,
    pub provenance: Provenance,
    pub oracle: Option<u64>,
    pub agree: bool,
    pub witness: Option<Coloring>,
    pub nodes_explored: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub rows: Vec<VerifyRow>,
    pub mismatches: usize,
}

/// Formula against oracle for every `2 <= k <= n` in the box (every
/// `n + k >= 3` with `all`).
pub fn cmd_verify(n_max: u64, k_max: u64, all: bool, threads: usize) -> Result<VerifyReport> {
    let mut rows = Vec::new();
    for n in 1..=n_max {
        for k in 1..=k_max {
            let in_grid = if all { n + k >= 3 } else { k >= 2 && k <= n };
            if !in_grid {
                continue;
            }
            let RadoResult::Exact { value, provenance } = r2_unit(&n, &k)? else {
                unreachable!("r2_unit is always exact");
            };
            let eq = Equation::unit(n as usize, k as usize)?;
            let opts = SearchOptions::new(value.saturating_mul(4).max(1)).threads(threads);
            let search = compute_rado_with(&eq, opts)?;
            rows.push(VerifyRow {
                n,
                k,
                formula: value,
                provenance,
                oracle: search.rado,
                agree: search.rado == Some(value),
                witness: search.witness,
                nodes_explored: search.nodes_explored,
            });
        }
    }
    let mismatches = rows.iter().filter(|r| !r.agree).count();
    Ok(VerifyReport { rows, mismatches })
}

fn verify_csv(report: &VerifyReport) -> String {
    let mut out = String::from("n,k,formula,provenance,oracle,agree,nodes_explored\n");
    for r in &report.rows {
        let oracle = r
            .oracle
            .map_or_else(|| "cutoff".to_string(), |v| v.to_string());
        let _ = writeln!(
            out,
            "{},{},{},{},{},{},{}",
            r.n, r.k, r.formula, r.provenance, oracle, r.agree, r.nodes_explored
        );
    }
    out
}

fn search_options(eq: &Equation, max_r: Option<u64>, threads: usize) -> SearchOptions {
    SearchOptions::new(max_r.unwrap_or_else(|| default_search_cutoff(eq))).threads(threads)
}

/// Runs one invocation, writing to `stdout` and `stderr`. Returns the exit code.
pub fn run(cli: Cli, stdout: &mut String, stderr: &mut String) -> i32 {
    match execute(cli, stdout) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "{}", serde_json::json!({ "error": e.to_string() }));
            2
        }
    }
}

fn emit(stdout: &mut String, rec: &OutputRecord) -> i32 {
    stdout.push_str(&rec.to_json());
    stdout.push('\n');
    rec.exit_code()
}

fn execute(cli: Cli, stdout: &mut String) -> Result<i32> {
    match cli.command {
        Command::ClosedForm { m, a } => Ok(emit(stdout, &cmd_closed_form(m, a)?)),
        Command::Number {
            n,
            k,
            eq,
            resolve,
            max_r,
            threads,
        } => {
            let rec = match (n, k, eq) {
                (_, _, Some(text)) => {
                    let eq: Equation = text.parse()?;
                    let opts = resolve.then(|| search_options(&eq, max_r, threads));
                    cmd_number_eq(&eq, opts)?
                }
                (Some(n), Some(k), None) => cmd_number(n, k)?,
                _ => {
                    return Err(RadoError::Precondition(
                        "number needs --n and --k, or --eq".into(),
                    ))
                }
            };
            Ok(emit(stdout, &rec))
        }
        Command::Search { eq, max_r, threads } => {
            let eq: Equation = eq.parse()?;
            let opts = search_options(&eq, max_r, threads);
            Ok(emit(stdout, &cmd_search(&eq, opts)?))
        }
        Command::Verify {
            n_max,
            k_max,
            all,
            threads,
            format,
        } => {
            let report = cmd_verify(n_max, k_max, all, threads)?;
            match format {
                Format::Json => {
                    for row in &report.rows {
                        stdout.push_str(&serde_json::to_string(row).expect("serializable"));
                        stdout.push('\n');
                    }
                    let summary = serde_json::json!({
                        "checked": report.rows.len(),
                        "mismatches": report.mismatches,
                    });
                    let _ = writeln!(stdout, "{summary}");
                }
                Format::Csv => stdout.push_str(&verify_csv(&report)),
            }
            Ok(if report.mismatches == 0 { 0 } else { 1 })
        }
        Command::Witness { n, k } => {
            let mut code = 0;
            for rec in cmd_witness(n, k)? {
                code = code.max(emit(stdout, &rec));
            }
            Ok(code)
        }
        Command::Table {
            n_max,
            k_max,
            format,
        } => {
            let cells = cmd_table(n_max, k_max)?;
            match format {
                Format::Json => {
                    for c in &cells {
                        stdout.push_str(&serde_json::to_string(c).expect("serializable"));
                        stdout.push('\n');
                    }
                }
                Format::Csv => stdout.push_str(&table_csv(&cells)),
            }
            Ok(0)
        }
        Command::Sat { eq, r, out } => {
            let eq: Equation = eq.parse()?;
            let (cnf, rec) = cmd_sat(&eq, r, out.as_deref())?;
            if out.is_some() {
                Ok(emit(stdout, &rec))
            } else {
                stdout.push_str(&cnf.to_dimacs());
                Ok(0)
            }
        }
    }
}

/// Parses `args` (program name first) and runs. Clap usage errors exit 2.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let (mut out, mut err) = (String::new(), String::new());
    let code = run(cli, &mut out, &mut err);
    print!("{out}");
    eprint!("{err}");
    code
}
