//! Command-line front end for `wfp-core`: the code file format, JSON
//! reports and the `wfp` subcommands.
//!
//! [`run`] executes a command line in-process and returns what the binary
//! would print together with its exit code.

pub mod args;
pub mod codefile;
pub mod report;

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Read as _;
use std::path::Path;
use std::time::Instant;

use clap::Parser;
use rayon::prelude::*;
use wfp_core::bounds::{best_upper_bound, bound_improved, bound_panoui, bound_stinson_wei, BoundReport};
use wfp_core::codes::{analyze, is_2wfp_structural, is_twfp_direct, Code};
use wfp_core::oracles::{
    max_non2cov_sperner, random_code, CodeOracle, EnumerationOrder, Instance, OracleCertificate, OracleStatus, Witness,
};
use wfp_core::search::{SearchParams, SearchPlan, SearchStatus};
use wfp_core::setfam::symmetric_chain_decomposition;

use args::{Cli, Command, Format, Method, NRange, Order, ReportArgs};
use report::{to_json, SCHEMA_VERSION};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILS: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_INCONCLUSIVE: i32 = 3;
/// The two verifiers disagreed. Never expected.
pub const EXIT_INTERNAL: i32 = 4;

/// Environment variable holding the default worker count.
pub const THREADS_ENV: &str = "WFP_THREADS";

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { stdout, stderr: String::new(), code: EXIT_OK }
    }

    fn input_error(message: impl std::fmt::Display) -> Self {
        Outcome { stdout: String::new(), stderr: format!("error: {message}\n"), code: EXIT_INPUT }
    }
}

type Step<T> = Result<T, Outcome>;

fn input<T, E: std::fmt::Display>(r: Result<T, E>) -> Step<T> {
    r.map_err(Outcome::input_error)
}

/// Runs a full command line (program name first).
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { stdout: String::new(), stderr: text, code: EXIT_INPUT }
            } else {
                Outcome::ok(text)
            };
        }
    };
    execute(cli).unwrap_or_else(|o| o)
}

fn threads(cli: &Cli) -> Step<usize> {
    let n = match cli.threads {
        Some(n) => n,
        None => match std::env::var(THREADS_ENV) {
            Ok(v) => input(v.trim().parse::<usize>().map_err(|_| format!("{THREADS_ENV}={v:?} is not a thread count")))?,
            Err(_) => 1,
        },
    };
    if n == 0 {
        return Err(Outcome::input_error("thread count must be at least 1"));
    }
    Ok(n)
}

/// `f(0..count)` in order, on `threads` workers.
fn map_branches<R: Send>(threads: usize, count: u64, f: impl Fn(u64) -> R + Sync + Send) -> Step<Vec<R>> {
    if threads <= 1 {
        return Ok((0..count).map(f).collect());
    }
    let pool = rayon::ThreadPoolBuilder::new().num_threads(threads).build();
    let pool = pool.map_err(|e| Outcome { stderr: format!("error: thread pool: {e}\n"), code: EXIT_INTERNAL, ..Outcome::default() })?;
    Ok(pool.install(|| (0..count).into_par_iter().map(f).collect()))
}

fn load(path: &Path) -> Step<Code> {
    let name = path.display();
    let text = if path.as_os_str() == "-" {
        let mut s = String::new();
        input(std::io::stdin().read_to_string(&mut s).map_err(|e| format!("stdin: {e}")))?;
        s
    } else {
        input(std::fs::read_to_string(path).map_err(|e| format!("{name}: {e}")))?
    };
    input(codefile::parse(&text).map_err(|e| format!("{name}: {e}")))
}

fn write_out(path: &Path, text: &str) -> Step<()> {
    input(std::fs::write(path, text).map_err(|e| format!("{}: {e}", path.display())))
}

fn execute(cli: Cli) -> Step<Outcome> {
    let threads = threads(&cli)?;
    match cli.command {
        Command::Verify { path, t, method, json } => verify(&load(&path)?, t, method, json),
        Command::Analyze { path, json } => analyze_cmd(&load(&path)?, json),
        Command::Bounds { n_range, format } => Ok(bounds(n_range, format)),
        Command::Search { n, q, t, budget, seed, out, report } => {
            search(SearchParams { n, q, t, budget, seed }, out.as_deref(), &report, threads)
        }
        Command::Scd { n } => scd(n),
        Command::Maxfam { n, budget, report } => {
            let start = Instant::now();
            let mut cert = input(max_non2cov_sperner(n, budget))?;
            if report.timing {
                cert.elapsed = Some(start.elapsed());
            }
            Ok(certificate_outcome(&cert, report.json))
        }
        Command::Maxcode { n, q, t, budget, order, report } => {
            let start = Instant::now();
            let order = match order {
                Order::Asc => EnumerationOrder::Ascending,
                Order::Desc => EnumerationOrder::Descending,
            };
            let oracle = input(CodeOracle::new(n, q, t, order))?;
            let branches = map_branches(threads, oracle.branch_count() as u64, |b| oracle.run_branch(b as usize, budget))?;
            let mut cert = oracle.finish(&branches, budget);
            if report.timing {
                cert.elapsed = Some(start.elapsed());
            }
            Ok(certificate_outcome(&cert, report.json))
        }
        Command::Gen { n, q, m, seed, out } => {
            let text = codefile::render(&input(random_code(n, q, m, seed))?);
            match out {
                Some(path) => write_out(&path, &text).map(|_| Outcome::ok(String::new())),
                None => Ok(Outcome::ok(text)),
            }
        }
    }
}

fn verify(code: &Code, t: usize, method: Method, json: bool) -> Step<Outcome> {
    if t == 0 {
        return Err(Outcome::input_error("--t must be at least 1"));
    }
    if method == Method::Structural && t != 2 {
        return Err(Outcome::input_error("--method structural requires --t 2"));
    }
    let mut stderr = String::new();
    if method == Method::Both && t != 2 {
        stderr.push_str("note: structural check skipped, it needs --t 2\n");
    }
    let direct = (method != Method::Structural).then(|| is_twfp_direct(code, t));
    let structural = (method != Method::Direct && t == 2).then(|| is_2wfp_structural(code));
    let verdicts: Vec<bool> = [direct.as_ref().map(|d| d.is_frameproof()), structural.as_ref().map(|s| s.is_frameproof())]
        .into_iter()
        .flatten()
        .collect();
    if verdicts.windows(2).any(|w| w[0] != w[1]) {
        let stderr = format!("internal error: direct and structural verifiers disagree on {code}\n");
        return Err(Outcome { stdout: String::new(), stderr, code: EXIT_INTERNAL });
    }
    let frameproof = verdicts[0];
    let stdout = if json {
        to_json(&report::VerifyJson {
            schema_version: SCHEMA_VERSION,
            t,
            method: match method {
                Method::Direct => "direct",
                Method::Structural => "structural",
                Method::Both => "both",
            },
            frameproof,
            direct: direct.as_ref().map(|d| report::DirectJson::new(d.violation())),
            structural: structural.as_ref().map(|s| report::StructuralJson::new(s.violation())),
        })
    } else if frameproof {
        "OK\n".to_string()
    } else {
        let mut s = String::new();
        if let Some(v) = direct.as_ref().and_then(|d| d.violation()) {
            writeln!(s, "violation: {v}").unwrap();
        }
        if let Some(v) = structural.as_ref().and_then(|d| d.violation()) {
            writeln!(s, "structural: {v}").unwrap();
        }
        s
    };
    Ok(Outcome { stdout, stderr, code: if frameproof { EXIT_OK } else { EXIT_FAILS } })
}

/// Right-aligned columns separated by two spaces.
fn table(header: &[&str], rows: &[Vec<String>]) -> String {
    let widths: Vec<usize> = (0..header.len())
        .map(|c| rows.iter().map(|r| r[c].chars().count()).chain([header[c].len()]).max().unwrap_or(0))
        .collect();
    let mut out = String::new();
    let mut line = |cells: Vec<&str>| {
        let parts: Vec<String> = cells.iter().zip(&widths).map(|(c, w)| format!("{c:>w$}")).collect();
        out.push_str(parts.join("  ").trim_end());
        out.push('\n');
    };
    line(header.to_vec());
    for r in rows {
        line(r.iter().map(String::as_str).collect());
    }
    out
}

fn yes_no(b: bool) -> String {
    if b { "yes" } else { "no" }.to_string()
}

fn analyze_cmd(code: &Code, json: bool) -> Step<Outcome> {
    let a = input(analyze(code))?;
    if json {
        return Ok(Outcome::ok(to_json(&report::AnalyzeJson::new(code, &a))));
    }
    let flag = |f: Option<bool>| f.map_or("-".to_string(), yes_no);
    let rows: Vec<Vec<String>> = a
        .profiles
        .iter()
        .map(|p| {
            let cases: Vec<&str> = p.cases.iter().map(|c| c.label()).collect();
            vec![
                (p.index + 1).to_string(),
                p.min_size.to_string(),
                p.max_size.to_string(),
                p.spread().to_string(),
                yes_no(p.is_sperner),
                yes_no(p.is_non_2_covering),
                flag(p.middle_layer_intersecting),
                flag(p.low_high_cross_intersecting),
                cases.join(","),
            ]
        })
        .collect();
    let header = ["i", "l", "u", "d", "sperner", "non2cov", "mid-int", "cross-int", "cases"];
    let mut out = table(&header, &rows);
    writeln!(out, "d = {}", a.min_spread).unwrap();
    Ok(Outcome::ok(out))
}

fn bound_cell(r: &BoundReport) -> String {
    match (r.value, r.formula_value) {
        (Some(v), _) => v.to_string(),
        (None, Some(_)) => "caveat".to_string(),
        (None, None) => "n-a".to_string(),
    }
}

fn opt(v: Option<u64>) -> String {
    v.map_or(String::new(), |v| v.to_string())
}

fn bounds(range: NRange, format: Format) -> Outcome {
    let rows: Vec<[BoundReport; 4]> = (range.lo..=range.hi)
        .map(|n| [bound_stinson_wei(n), bound_panoui(n), bound_improved(n), best_upper_bound(n)])
        .collect();
    let text = match format {
        Format::Json => to_json(&report::BoundsJson {
            schema_version: SCHEMA_VERSION,
            rows: rows
                .iter()
                .map(|[s, p, i, b]| report::BoundRowJson {
                    n: s.n,
                    stinson_wei: s.into(),
                    panoui: p.into(),
                    improved: i.into(),
                    best: b.value,
                    winner: b.method.label(),
                })
                .collect(),
        }),
        Format::Csv => {
            let mut out = "n,stinson_wei,panoui,panoui_applicable,improved,improved_applicable,best,method\n".to_string();
            for [s, p, i, b] in &rows {
                let cells = [
                    s.n.to_string(),
                    opt(s.value),
                    opt(p.formula_value),
                    p.applicable().to_string(),
                    opt(i.formula_value),
                    i.applicable().to_string(),
                    opt(b.value),
                    b.method.label().to_string(),
                ];
                writeln!(out, "{}", cells.join(",")).unwrap();
            }
            out
        }
        Format::Table => {
            let cells: Vec<Vec<String>> = rows
                .iter()
                .map(|[s, p, i, b]| {
                    let improved = i.value.map_or("n-a".to_string(), |v| v.to_string());
                    vec![s.n.to_string(), bound_cell(s), bound_cell(p), improved, opt(b.value), b.method.label().to_string()]
                })
                .collect();
            table(&["n", "stinson-wei", "panoui", "improved", "best", "method"], &cells)
        }
    };
    Outcome::ok(text)
}

fn search(params: SearchParams, out: Option<&Path>, report: &ReportArgs, threads: usize) -> Step<Outcome> {
    let start = Instant::now();
    let plan = input(SearchPlan::new(params))?;
    let branches = map_branches(threads, plan.branch_count(), |b| plan.run_branch(b))?;
    let mut result = plan.merge(branches);
    if report.timing {
        result.wall_time = Some(start.elapsed());
    }
    let file = codefile::render(&result.best_code);
    if let Some(path) = out {
        write_out(path, &file)?;
    }
    let stdout = match (report.json, out) {
        (true, _) => to_json(&report::SearchJson::new(&result, params.t, params.budget)),
        (false, None) => file,
        (false, Some(_)) => String::new(),
    };
    let mut stderr = format!(
        "size {}, status {}, nodes {}, seed {}",
        result.size,
        result.status.label(),
        result.nodes_explored,
        result.seed
    );
    if let Some(d) = result.wall_time {
        write!(stderr, ", {:.3} s", d.as_secs_f64()).unwrap();
    }
    stderr.push('\n');
    let code = if result.status == SearchStatus::Optimal { EXIT_OK } else { EXIT_INCONCLUSIVE };
    Ok(Outcome { stdout, stderr, code })
}

fn scd(n: usize) -> Step<Outcome> {
    let d = input(symmetric_chain_decomposition(n))?;
    let mut out = String::new();
    for chain in &d.chains {
        let parts: Vec<String> = chain.iter().map(|s| s.to_string()).collect();
        writeln!(out, "{}", parts.join(" ")).unwrap();
    }
    Ok(Outcome::ok(out))
}

fn certificate_outcome(cert: &OracleCertificate, json: bool) -> Outcome {
    let code = match cert.status {
        OracleStatus::Exact => EXIT_OK,
        OracleStatus::Inconclusive => EXIT_INCONCLUSIVE,
    };
    let stdout = if json {
        to_json(&report::CertificateJson::from(cert))
    } else {
        let mut s = String::new();
        match &cert.instance {
            Instance::Code { n, q, t } => writeln!(s, "instance: code n={n} q={q} t={t}"),
            Instance::Family(c) => writeln!(
                s,
                "instance: family n={} sizes={}..={}{}",
                c.n,
                c.sizes.lo,
                c.sizes.hi,
                if c.non_2_covering { " non-2-covering sperner" } else { " sperner" }
            ),
        }
        .unwrap();
        writeln!(s, "status: {}", cert.status.label()).unwrap();
        writeln!(s, "optimum: {}", cert.optimum.map_or("none".to_string(), |v| v.to_string())).unwrap();
        match &cert.witness {
            Some(Witness::Code(c)) => writeln!(s, "witness: {c}"),
            Some(Witness::Family(f)) => writeln!(s, "witness: {f}"),
            None => writeln!(s, "witness: none"),
        }
        .unwrap();
        writeln!(s, "search_space_size: {}", cert.search_space_size).unwrap();
        writeln!(s, "nodes: {}", cert.nodes).unwrap();
        if let Some(d) = cert.elapsed {
            writeln!(s, "elapsed: {:.3} s", d.as_secs_f64()).unwrap();
        }
        s
    };
    Outcome { stdout, stderr: String::new(), code }
}
