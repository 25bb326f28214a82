//! Command-line front end: per-quantity commands, verification suites and
//! table emitters. Every value is printed as an exact string.

pub mod output;
pub mod tables;
pub mod verify;

use std::ffi::OsString;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use crate::combinat::enumerate_chains;
use crate::combinat::missing_ranks;
use crate::ehrhart::{ehr, EhrMethod};
use crate::error::{Error, Result};
use crate::exactmath::{factorial, Polynomial, Rational};
use crate::faces::{f_vector, face_from_chain, face_vertices, h_poly, is_palindromic, HMethod};
use crate::polytope::{facet_count_formula, facets, vertex_count_formula, vertices, PPSpec};
use crate::volume::{nvol, VolumeMethod};

pub use output::{Format, Report, Table};
pub use tables::Which;
pub use verify::Suite;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_VERIFICATION: i32 = 2;
pub const EXIT_DISAGREEMENT: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "pperm",
    version,
    about = "Exact invariants of partial permutohedra P(m, n)"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct Size {
    /// Dimension m (number of coordinates).
    #[arg(long)]
    pub m: usize,
    /// Largest entry n.
    #[arg(long)]
    pub n: usize,
}

#[derive(Debug, Clone, Args)]
pub struct Out {
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(Debug, Clone, Args)]
pub struct Workers {
    /// Worker threads for lattice-point counting.
    #[arg(long, default_value_t = 1)]
    pub parallel: usize,
}

#[derive(Debug, Clone, Args)]
pub struct MethodChoice {
    /// Engine name.
    #[arg(long, conflicts_with = "all_methods")]
    pub method: Option<String>,
    /// Run every applicable engine and report agreement.
    #[arg(long)]
    pub all_methods: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Vertices of P(m, n).
    Vertices {
        #[command(flatten)]
        size: Size,
        #[command(flatten)]
        out: Out,
    },
    /// Facet inequalities of P(m, n).
    Facets {
        #[command(flatten)]
        size: Size,
        #[command(flatten)]
        out: Out,
    },
    /// Faces of P(m, n) indexed by chains.
    Faces {
        #[command(flatten)]
        size: Size,
        /// Only faces of this dimension.
        #[arg(long)]
        dim: Option<usize>,
        #[command(flatten)]
        out: Out,
    },
    /// Face numbers of P(m, n).
    Fvector {
        #[command(flatten)]
        size: Size,
        #[command(flatten)]
        out: Out,
    },
    /// h-polynomial of P(m, n).
    Hpoly {
        #[command(flatten)]
        size: Size,
        #[command(flatten)]
        choice: MethodChoice,
        #[command(flatten)]
        out: Out,
    },
    /// Normalized volume of P(m, n).
    Volume {
        #[command(flatten)]
        size: Size,
        #[command(flatten)]
        choice: MethodChoice,
        #[command(flatten)]
        workers: Workers,
        #[command(flatten)]
        out: Out,
    },
    /// Ehrhart polynomial of P(m, n).
    Ehrhart {
        #[command(flatten)]
        size: Size,
        #[command(flatten)]
        choice: MethodChoice,
        #[command(flatten)]
        workers: Workers,
        #[command(flatten)]
        out: Out,
    },
    /// Run a battery of cross-checks.
    Verify {
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
        #[arg(long, default_value_t = 3)]
        max_m: usize,
        #[arg(long, default_value_t = 5)]
        max_n: usize,
        #[command(flatten)]
        workers: Workers,
        #[command(flatten)]
        out: Out,
    },
    /// Emit a table of polynomials or counts.
    Table {
        #[arg(long, value_enum, default_value_t = Which::ExFormulas)]
        which: Which,
        #[arg(long)]
        max_m: Option<usize>,
        #[arg(long)]
        max_n: Option<usize>,
        #[command(flatten)]
        workers: Workers,
        #[command(flatten)]
        out: Out,
    },
}

/// Exit code and captured streams of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn error(e: &Error) -> Outcome {
        let code = match e {
            Error::Disagreement(_) | Error::Internal(_) => EXIT_DISAGREEMENT,
            _ => EXIT_USAGE,
        };
        Outcome {
            code,
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        }
    }
}

/// A rendered report with the exit code it calls for and an optional note
/// for the error stream.
struct Done {
    report: Report,
    code: i32,
    note: Option<String>,
}

impl Done {
    fn ok(report: Report) -> Done {
        Done {
            report,
            code: EXIT_OK,
            note: None,
        }
    }
}

/// Parses the arguments (program name first) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code: EXIT_USAGE,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome {
                    code: EXIT_OK,
                    stdout: text,
                    stderr: String::new(),
                }
            };
        }
    };
    let format = match &cli.command {
        Command::Vertices { out, .. }
        | Command::Facets { out, .. }
        | Command::Faces { out, .. }
        | Command::Fvector { out, .. }
        | Command::Hpoly { out, .. }
        | Command::Volume { out, .. }
        | Command::Ehrhart { out, .. }
        | Command::Verify { out, .. }
        | Command::Table { out, .. } => out.format,
    };
    let done = match dispatch(cli.command) {
        Ok(d) => d,
        Err(e) => return Outcome::error(&e),
    };
    match done.report.render(format) {
        Ok(stdout) => Outcome {
            code: done.code,
            stdout,
            stderr: done.note.map(|n| format!("{n}\n")).unwrap_or_default(),
        },
        Err(e) => Outcome::error(&e),
    }
}

fn spec(size: &Size) -> Result<PPSpec> {
    PPSpec::new(size.m, size.n)
}

fn dispatch(command: Command) -> Result<Done> {
    match command {
        Command::Vertices { size, .. } => vertices_cmd(spec(&size)?).map(Done::ok),
        Command::Facets { size, .. } => facets_cmd(spec(&size)?).map(Done::ok),
        Command::Faces { size, dim, .. } => faces_cmd(spec(&size)?, dim).map(Done::ok),
        Command::Fvector { size, .. } => fvector_cmd(spec(&size)?).map(Done::ok),
        Command::Hpoly { size, choice, .. } => hpoly_cmd(spec(&size)?, &choice),
        Command::Volume {
            size,
            choice,
            workers,
            ..
        } => volume_cmd(spec(&size)?, &choice, workers.parallel),
        Command::Ehrhart {
            size,
            choice,
            workers,
            ..
        } => ehrhart_cmd(spec(&size)?, &choice, workers.parallel),
        Command::Verify {
            suite,
            max_m,
            max_n,
            workers,
            ..
        } => {
            if max_m == 0 || max_n == 0 {
                return Err(Error::InvalidParameter(
                    "--max-m and --max-n must be positive".into(),
                ));
            }
            let report = verify::run_suite(suite, max_m, max_n, workers.parallel);
            let first = report
                .first_failure()
                .map(|c| format!("first failure: {} ({})", c.name, c.detail));
            let code = if first.is_some() {
                EXIT_VERIFICATION
            } else {
                EXIT_OK
            };
            Ok(Done {
                report: report.to_report(),
                code,
                note: first,
            })
        }
        Command::Table {
            which,
            max_m,
            max_n,
            workers,
            ..
        } => tables::emit(which, max_m, max_n, workers.parallel).map(Done::ok),
    }
}

fn poly_json(p: &Polynomial, var: &str) -> Value {
    json!({ "coefficients": p.to_strings(), "polynomial": p.render(var) })
}

fn vertices_cmd(spec: PPSpec) -> Result<Report> {
    let v = vertices(spec);
    let header: Vec<String> = (1..=spec.m).map(|i| format!("x{i}")).collect();
    let mut table = Table {
        header,
        rows: Vec::new(),
    };
    for p in &v.points {
        table.push(p.iter().map(|x| x.to_string()).collect());
    }
    Ok(Report {
        json: json!({ "m": spec.m, "n": spec.n, "count": v.len(), "vertices": v.points }),
        table,
    })
}

fn facets_cmd(spec: PPSpec) -> Result<Report> {
    let h = facets(spec);
    let mut header: Vec<String> = (1..=spec.m).map(|i| format!("a{i}")).collect();
    header.push("b".into());
    let mut table = Table {
        header,
        rows: Vec::new(),
    };
    let mut rows = Vec::new();
    for r in &h.rows {
        let mut cells: Vec<String> = r.a.iter().map(|x| x.to_string()).collect();
        cells.push(r.b.to_string());
        table.push(cells);
        rows.push(json!({ "a": r.a, "b": r.b }));
    }
    Ok(Report {
        json: json!({ "m": spec.m, "n": spec.n, "count": rows.len(), "facets": rows }),
        table,
    })
}

fn faces_cmd(spec: PPSpec, dim: Option<usize>) -> Result<Report> {
    let mut table = Table::new(&["chain", "dimension", "vertices"]);
    let mut faces = Vec::new();
    for c in enumerate_chains(spec.m, spec.n, false) {
        let d = missing_ranks(&c)?;
        if dim.is_some_and(|want| want != d) {
            continue;
        }
        let face = face_from_chain(&c, spec.m, spec.n)?;
        let count = face_vertices(&c, spec.m, spec.n)?.len();
        let equations: Vec<Value> = face
            .compact
            .iter()
            .map(|h| json!({ "a": h.a, "b": h.b }))
            .collect();
        table.push(vec![c.to_string(), d.to_string(), count.to_string()]);
        faces.push(json!({
            "chain": c.to_string(),
            "dimension": d,
            "vertex_count": count,
            "equations": equations,
        }));
    }
    Ok(Report {
        json: json!({ "m": spec.m, "n": spec.n, "count": faces.len(), "faces": faces }),
        table,
    })
}

fn fvector_cmd(spec: PPSpec) -> Result<Report> {
    let f = f_vector(spec.m, spec.n);
    let mut table = Table::new(&["k", "f_k"]);
    for (k, v) in f.iter().enumerate() {
        table.push(vec![k.to_string(), v.to_string()]);
    }
    Ok(Report {
        json: json!({
            "m": spec.m,
            "n": spec.n,
            "f": f,
            "vertex_count_formula": vertex_count_formula(spec.m, spec.n),
            "facet_count_formula": facet_count_formula(spec.m, spec.n),
        }),
        table,
    })
}

fn method_table() -> Table {
    Table::new(&["method", "value", "status"])
}

fn hpoly_cmd(spec: PPSpec, choice: &MethodChoice) -> Result<Done> {
    let (m, n) = (spec.m, spec.n);
    let mut table = method_table();
    if !choice.all_methods {
        let method = match &choice.method {
            Some(s) => HMethod::parse(s)?,
            None => HMethod::FromF,
        };
        let h = h_poly(m, n, method)?;
        table.push(vec![method.name().into(), h.render("t"), "proved".into()]);
        let mut body = poly_json(&h, "t");
        body["m"] = json!(m);
        body["n"] = json!(n);
        body["method"] = json!(method.name());
        body["palindromic"] = json!(is_palindromic(&h, m));
        return Ok(Done::ok(Report { json: body, table }));
    }
    let mut results = Vec::new();
    let mut polys = Vec::new();
    for method in HMethod::ALL.into_iter().filter(|h| h.applies(m, n)) {
        let h = h_poly(m, n, method)?;
        table.push(vec![method.name().into(), h.render("t"), "proved".into()]);
        let mut entry = poly_json(&h, "t");
        entry["method"] = json!(method.name());
        results.push(entry);
        polys.push(h);
    }
    let agree = polys.windows(2).all(|w| w[0] == w[1]);
    let body = json!({ "m": m, "n": n, "results": results, "agree": agree });
    Ok(agreement_done(
        Report { json: body, table },
        agree,
        "h-polynomial methods disagree",
    ))
}

fn agreement_done(report: Report, agree: bool, what: &str) -> Done {
    Done {
        report,
        code: if agree { EXIT_OK } else { EXIT_DISAGREEMENT },
        note: (!agree).then(|| what.to_string()),
    }
}

pub fn default_volume_method(m: usize, n: usize) -> VolumeMethod {
    if n + 1 >= m {
        VolumeMethod::Recursive
    } else if n <= 4 {
        VolumeMethod::SmallN
    } else {
        VolumeMethod::Oracle
    }
}

fn volume_cmd(spec: PPSpec, choice: &MethodChoice, workers: usize) -> Result<Done> {
    let (m, n) = (spec.m, spec.n);
    let mut table = method_table();
    if !choice.all_methods {
        let method = match &choice.method {
            Some(s) => VolumeMethod::parse(s)?,
            None => default_volume_method(m, n),
        };
        let v = nvol(m, n, method, workers)?;
        table.push(vec![method.name().into(), v.to_string(), "proved".into()]);
        let body = json!({ "m": m, "n": n, "method": method.name(), "value": v.to_string() });
        return Ok(Done::ok(Report { json: body, table }));
    }
    let mut results = Vec::new();
    let mut values = Vec::new();
    for method in VolumeMethod::ALL.into_iter().filter(|v| v.applies(m, n)) {
        let v = nvol(m, n, method, workers)?;
        table.push(vec![method.name().into(), v.to_string(), "proved".into()]);
        results.push(json!({ "method": method.name(), "value": v.to_string() }));
        values.push(v);
    }
    let agree = values.windows(2).all(|w| w[0] == w[1]);
    let value = if agree {
        values.first().map(|v| v.to_string())
    } else {
        None
    };
    let body = json!({ "m": m, "n": n, "results": results, "agree": agree, "value": value });
    Ok(agreement_done(
        Report { json: body, table },
        agree,
        "volume engines disagree",
    ))
}

pub fn default_ehr_method(m: usize, n: usize) -> Result<EhrMethod> {
    [
        EhrMethod::Interpolate,
        EhrMethod::Draconian,
        EhrMethod::ClosedSmallN,
    ]
    .into_iter()
    .find(|e| e.applies(m, n))
    .ok_or_else(|| {
        Error::OutOfRange(format!(
            "no Ehrhart engine covers m = {m}, n = {n} at desk scale"
        ))
    })
}

fn status(method: EhrMethod) -> &'static str {
    if method.is_conjectural() {
        "conjectural"
    } else {
        "proved"
    }
}

fn volume_of(p: &Polynomial, m: usize) -> String {
    (p.leading() * Rational::from_integer(factorial(m as u32))).to_string()
}

fn ehrhart_cmd(spec: PPSpec, choice: &MethodChoice, workers: usize) -> Result<Done> {
    let (m, n) = (spec.m, spec.n);
    let mut table = Table::new(&["method", "polynomial", "status", "check"]);
    if !choice.all_methods {
        let method = match &choice.method {
            Some(s) => EhrMethod::parse(s)?,
            None => default_ehr_method(m, n)?,
        };
        let p = ehr(m, n, method, workers)?;
        table.push(vec![
            method.name().into(),
            p.render("t"),
            status(method).into(),
            String::new(),
        ]);
        let mut body = poly_json(&p, "t");
        body["m"] = json!(m);
        body["n"] = json!(n);
        body["method"] = json!(method.name());
        body["status"] = json!(status(method));
        body["volume"] = json!(volume_of(&p, m));
        return Ok(Done::ok(Report { json: body, table }));
    }
    let applicable: Vec<EhrMethod> = EhrMethod::ALL
        .into_iter()
        .filter(|e| e.applies(m, n))
        .collect();
    let mut proved: Vec<(EhrMethod, Polynomial)> = Vec::new();
    let mut conjectural: Vec<(EhrMethod, Polynomial)> = Vec::new();
    for method in applicable {
        let p = ehr(m, n, method, workers)?;
        if method.is_conjectural() {
            conjectural.push((method, p));
        } else {
            proved.push((method, p));
        }
    }
    let agree = proved.windows(2).all(|w| w[0].1 == w[1].1);
    let reference = proved.first().map(|(_, p)| p.clone());
    let mut results = Vec::new();
    let mut all_consistent = true;
    for (method, p) in proved.iter().chain(&conjectural) {
        let check = if method.is_conjectural() {
            match &reference {
                Some(r) if r == p => "consistent",
                Some(_) => {
                    all_consistent = false;
                    "inconsistent"
                }
                None => "unchecked",
            }
        } else {
            ""
        };
        table.push(vec![
            method.name().into(),
            p.render("t"),
            status(*method).into(),
            check.into(),
        ]);
        let mut entry = poly_json(p, "t");
        entry["method"] = json!(method.name());
        entry["status"] = json!(status(*method));
        if !check.is_empty() {
            entry["check"] = json!(check);
        }
        results.push(entry);
    }
    let body = json!({
        "m": m,
        "n": n,
        "results": results,
        "agree": agree,
        "conjectures": if all_consistent { "consistent" } else { "inconsistent" },
    });
    let report = Report { json: body, table };
    if !agree {
        return Ok(agreement_done(report, false, "Ehrhart engines disagree"));
    }
    Ok(Done {
        report,
        code: if all_consistent {
            EXIT_OK
        } else {
            EXIT_VERIFICATION
        },
        note: (!all_consistent)
            .then(|| "a conjectured form misses the counted polynomial".to_string()),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn go(args: &[&str]) -> Outcome {
        run(std::iter::once("pperm").chain(args.iter().copied()))
    }

    #[test]
    fn usage_errors_exit_one() {
        assert_eq!(go(&["volume", "--m", "2"]).code, EXIT_USAGE);
        assert_eq!(
            go(&["volume", "--m", "2", "--n", "2", "--bogus"]).code,
            EXIT_USAGE
        );
        assert_eq!(go(&["volume", "--m", "0", "--n", "2"]).code, EXIT_USAGE);
        assert_eq!(
            go(&["volume", "--m", "2", "--n", "2", "--method", "nope"]).code,
            EXIT_USAGE
        );
        assert_eq!(
            go(&[
                "volume",
                "--m",
                "2",
                "--n",
                "2",
                "--method",
                "series",
                "--all-methods"
            ])
            .code,
            EXIT_USAGE
        );
        assert_eq!(go(&["--help"]).code, EXIT_OK);
    }

    #[test]
    fn single_engine_outputs() {
        let out = go(&["ehrhart", "--m", "2", "--n", "2", "--method", "interpolate"]);
        assert_eq!(out.code, 0);
        let v: Value = serde_json::from_str(&out.stdout).unwrap();
        assert_eq!(v["coefficients"], json!(["1", "7/2", "7/2"]));
        assert_eq!(v["volume"], json!("7"));
        let out = go(&["volume", "--m", "4", "--n", "2"]);
        let v: Value = serde_json::from_str(&out.stdout).unwrap();
        assert_eq!(v["value"], json!("77"));
        assert_eq!(v["method"], json!("small_n"));
    }

    #[test]
    fn csv_vertices() {
        let out = go(&["vertices", "--m", "2", "--n", "2", "--format", "csv"]);
        assert_eq!(out.stdout, "x1,x2\n0,0\n0,2\n1,2\n2,0\n2,1\n");
    }
}
