//! Command-line surface: `poly`, `table`, `verify`, `scan-unimodal`.
//!
//! Exit codes: 0 success (for `verify`: every adjudicated verdict
//! matched its expected status), 1 verification mismatch, 2 usage or
//! invalid input, 3 resource limit.

use crate::corpus::{default_corpus, family_corpus};
use crate::engine::{Engine, EngineConfig, EngineError};
use crate::families::{generate, Family, FamilySpec};
use crate::graph::Graph;
use crate::methods::{cec_for_graph, cec_for_spec, Method, MethodError};
use crate::oracle::{OracleConfig, OracleError};
use crate::poly::Poly;
use crate::verify::{
    emit_report, render_scan, run_claims, scan_unimodality, Verdict, VerifyError, EXPECTED_REFUTED,
};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use std::path::PathBuf;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;

/// Environment variable supplying the default worker count.
pub const WORKERS_ENV: &str = "CEC_WORKERS";

#[derive(Parser)]
#[command(
    name = "cec",
    version,
    about = "Exact connected edge cover polynomials: brute-force oracle, \
             deletion-contraction engine, closed forms, and a claim verifier"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Compute E_c(G,x) for a family instance or an edge-list file
    Poly(PolyArgs),
    /// Print polynomials/totals for a family across a parameter range
    Table(TableArgs),
    /// Adjudicate the registered closed-form claims against ground truth
    Verify(VerifyArgs),
    /// Scan ground-truth polynomials for unimodality counterexamples
    ScanUnimodal(ScanArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Auto,
    Oracle,
    Engine,
    Formula,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Method {
        match m {
            MethodArg::Auto => Method::Auto,
            MethodArg::Oracle => Method::Oracle,
            MethodArg::Engine => Method::Engine,
            MethodArg::Formula => Method::Formula,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Text,
    Json,
    Csv,
}

#[derive(Args)]
struct BudgetArgs {
    /// Worker threads for the oracle scan (default: CEC_WORKERS or 1)
    #[arg(long)]
    workers: Option<usize>,
    /// Largest edge count the oracle will enumerate
    #[arg(long, default_value_t = 26)]
    max_oracle_edges: usize,
}

impl BudgetArgs {
    fn oracle_config(&self) -> Result<OracleConfig, String> {
        let workers = match self.workers {
            Some(w) => w,
            None => match std::env::var(WORKERS_ENV) {
                Ok(v) => v
                    .parse()
                    .map_err(|_| format!("{WORKERS_ENV} must be a positive integer, got {v:?}"))?,
                Err(_) => 1,
            },
        };
        if workers == 0 {
            return Err("worker count must be >= 1".into());
        }
        Ok(OracleConfig {
            max_edges: self.max_oracle_edges,
            workers,
            ..OracleConfig::default()
        })
    }
}

#[derive(Args)]
struct PolyArgs {
    /// Family name (path, cycle, star, complete, complete-bipartite,
    /// complete-multipartite, friendship, lollipop, fan, wheel,
    /// cocktail-party, hypercube, turan)
    family: Option<String>,
    /// Family parameters
    params: Vec<usize>,
    /// Read the graph from an edge-list file instead
    #[arg(long, conflicts_with = "family")]
    file: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = MethodArg::Auto)]
    method: MethodArg,
    #[arg(long, value_enum, default_value_t = FormatArg::Text)]
    format: FormatArg,
    /// Print engine memo statistics to stderr
    #[arg(long)]
    stats: bool,
    #[command(flatten)]
    budget: BudgetArgs,
}

#[derive(Args)]
struct TableArgs {
    /// Family name
    family: String,
    /// Inclusive parameter range: "2..6", a single value, or
    /// "(3,2)..(5,4)" for turan
    range: String,
    #[arg(long, value_enum, default_value_t = FormatArg::Text)]
    format: FormatArg,
    /// Print totals only (wheel totals use the confirmed closed form)
    #[arg(long)]
    totals_only: bool,
    #[command(flatten)]
    budget: BudgetArgs,
}

#[derive(Args)]
struct VerifyArgs {
    /// Comma-separated claim ids (default: all claims)
    #[arg(long, value_delimiter = ',')]
    claims: Option<Vec<String>>,
    #[arg(long, value_enum, default_value_t = FormatArg::Text)]
    format: FormatArg,
    /// Include per-claim runtimes (makes output nondeterministic)
    #[arg(long)]
    timings: bool,
    #[command(flatten)]
    budget: BudgetArgs,
}

#[derive(Args)]
struct ScanArgs {
    /// Restrict the scan to one family
    #[arg(long)]
    family: Option<String>,
    /// Largest swept parameter when --family is given
    #[arg(long, default_value_t = 10)]
    max: usize,
    #[arg(long, value_enum, default_value_t = FormatArg::Text)]
    format: FormatArg,
    #[command(flatten)]
    budget: BudgetArgs,
}

/// Parses argv and runs; returns the process exit code.
pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_USAGE,
            };
            let _ = e.print();
            return code;
        }
    };
    match cli.cmd {
        Cmd::Poly(args) => cmd_poly(args),
        Cmd::Table(args) => cmd_table(args),
        Cmd::Verify(args) => cmd_verify(args),
        Cmd::ScanUnimodal(args) => cmd_scan(args),
    }
}

fn usage_error(msg: &str) -> i32 {
    eprintln!("error: {msg}");
    EXIT_USAGE
}

fn method_error_code(err: &MethodError) -> i32 {
    match err {
        MethodError::Graph(_) | MethodError::Unsupported(_) => EXIT_USAGE,
        MethodError::Oracle(OracleError::BudgetExceeded { .. }) => EXIT_RESOURCE,
        MethodError::Engine(EngineError::ResourceLimit { .. }) => EXIT_RESOURCE,
    }
}

#[derive(Serialize)]
struct PolyOutput<'a> {
    #[serde(flatten)]
    poly: &'a Poly,
    total: String,
    unimodal: bool,
}

fn render_poly(p: &Poly, format: FormatArg) -> String {
    match format {
        FormatArg::Text => {
            let head = format!("{p} ; total {}", p.total());
            let detail = match (p.min_exp(), p.degree()) {
                (Some(lo), Some(d)) => format!("min exponent {lo} ; degree {d}"),
                _ => "min exponent - ; degree -".into(),
            };
            format!(
                "{head}\n{detail} ; unimodal: {}\n",
                if p.is_unimodal() { "yes" } else { "no" }
            )
        }
        FormatArg::Json => {
            let out = PolyOutput {
                poly: p,
                total: p.total().to_string(),
                unimodal: p.is_unimodal(),
            };
            let mut s = serde_json::to_string_pretty(&out).expect("poly serializes");
            s.push('\n');
            s
        }
        FormatArg::Csv => {
            let mut s = String::from("exponent,coefficient\n");
            for (e, c) in p.coeffs().iter().enumerate() {
                s.push_str(&format!("{e},{c}\n"));
            }
            s
        }
    }
}

fn cmd_poly(args: PolyArgs) -> i32 {
    let ocfg = match args.budget.oracle_config() {
        Ok(cfg) => cfg,
        Err(msg) => return usage_error(&msg),
    };
    let ecfg = EngineConfig::default();
    let method: Method = args.method.into();

    let computed = match (&args.file, &args.family) {
        (Some(path), _) => {
            let text = match std::fs::read_to_string(path) {
                Ok(t) => t,
                Err(e) => return usage_error(&format!("cannot read {}: {e}", path.display())),
            };
            let graph = match Graph::parse_edge_list(&text) {
                Ok(g) => g,
                Err(e) => return usage_error(&format!("{}: {e}", path.display())),
            };
            cec_for_graph(&graph, method, &ocfg, &ecfg)
        }
        (None, Some(name)) => {
            let family: Family = match name.parse() {
                Ok(f) => f,
                Err(e) => return usage_error(&e.to_string()),
            };
            let spec = FamilySpec::new(family, args.params.clone());
            if args.stats {
                return poly_with_stats(&spec, method, &ocfg, &ecfg, args.format);
            }
            cec_for_spec(&spec, method, &ocfg, &ecfg)
        }
        (None, None) => return usage_error("give a family (with parameters) or --file"),
    };

    match computed {
        Ok(result) => {
            for notice in &result.notices {
                eprintln!("note: {notice}");
            }
            print!("{}", render_poly(&result.poly, args.format));
            EXIT_OK
        }
        Err(e) => {
            eprintln!("error: {e}");
            method_error_code(&e)
        }
    }
}

/// Engine run that also reports memo statistics on stderr.
fn poly_with_stats(
    spec: &FamilySpec,
    method: Method,
    ocfg: &OracleConfig,
    ecfg: &EngineConfig,
    format: FormatArg,
) -> i32 {
    if let Err(e) = spec.validate() {
        return usage_error(&e.to_string());
    }
    let graph = match generate(spec) {
        Ok(g) => g,
        Err(e) => return usage_error(&e.to_string()),
    };
    match method {
        Method::Engine | Method::Auto => {
            let mut engine = Engine::new(ecfg.clone());
            match engine.cec_poly(&graph) {
                Ok(p) => {
                    let stats = engine.stats();
                    eprintln!(
                        "memo: {} hits, {} misses, {} peak entries",
                        stats.hits, stats.misses, stats.peak_entries
                    );
                    print!("{}", render_poly(&p, format));
                    EXIT_OK
                }
                Err(e) => {
                    eprintln!("error: {e}");
                    EXIT_RESOURCE
                }
            }
        }
        _ => match cec_for_spec(spec, method, ocfg, ecfg) {
            Ok(result) => {
                eprintln!("memo: not used by this method");
                print!("{}", render_poly(&result.poly, format));
                EXIT_OK
            }
            Err(e) => {
                eprintln!("error: {e}");
                method_error_code(&e)
            }
        },
    }
}

/// Inclusive range of parameter vectors: "4", "2..6", or
/// "(3,2)..(5,4)" (turan pairs in lexicographic order, k < n).
fn parse_range(family: Family, s: &str) -> Result<Vec<Vec<usize>>, String> {
    let parse_pair = |t: &str| -> Result<(usize, usize), String> {
        let inner = t
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .ok_or_else(|| format!("bad pair {t:?}, expected (n,k)"))?;
        let mut it = inner.split(',');
        let a = it
            .next()
            .and_then(|x| x.trim().parse().ok())
            .ok_or_else(|| format!("bad pair {t:?}"))?;
        let b = it
            .next()
            .and_then(|x| x.trim().parse().ok())
            .ok_or_else(|| format!("bad pair {t:?}"))?;
        if it.next().is_some() {
            return Err(format!("bad pair {t:?}"));
        }
        Ok((a, b))
    };

    if s.contains('(') {
        if family != Family::Turan {
            return Err("pair ranges are only for turan".into());
        }
        let (lo, hi) = match s.split_once("..") {
            Some((a, b)) => (parse_pair(a)?, parse_pair(b)?),
            None => {
                let p = parse_pair(s)?;
                (p, p)
            }
        };
        let mut out = Vec::new();
        for n in lo.0..=hi.0 {
            for k in 2..n {
                if (n, k) >= lo && (n, k) <= hi {
                    out.push(vec![n, k]);
                }
            }
        }
        if out.is_empty() {
            return Err(format!("empty range {s:?}"));
        }
        return Ok(out);
    }

    let (lo, hi) = match s.split_once("..") {
        Some((a, b)) => {
            let lo = a.trim().parse().map_err(|_| format!("bad range {s:?}"))?;
            let hi = b.trim().parse().map_err(|_| format!("bad range {s:?}"))?;
            (lo, hi)
        }
        None => {
            let v = s.trim().parse().map_err(|_| format!("bad range {s:?}"))?;
            (v, v)
        }
    };
    if lo > hi {
        return Err(format!("empty range {s:?}"));
    }
    Ok((lo..=hi).map(|v| vec![v]).collect())
}

#[derive(Serialize)]
struct TableRowOut<'a> {
    params: &'a [usize],
    #[serde(skip_serializing_if = "Option::is_none")]
    poly: Option<&'a Poly>,
    total: String,
}

fn cmd_table(args: TableArgs) -> i32 {
    let ocfg = match args.budget.oracle_config() {
        Ok(cfg) => cfg,
        Err(msg) => return usage_error(&msg),
    };
    let ecfg = EngineConfig::default();
    let family: Family = match args.family.parse() {
        Ok(f) => f,
        Err(e) => return usage_error(&e.to_string()),
    };
    let rows = match parse_range(family, &args.range) {
        Ok(r) => r,
        Err(msg) => return usage_error(&msg),
    };

    struct Row {
        spec: FamilySpec,
        poly: Option<Poly>,
        total: num_bigint::BigUint,
    }

    let mut out_rows = Vec::new();
    for params in rows {
        let spec = FamilySpec::new(family, params);
        if let Err(e) = spec.validate() {
            return usage_error(&e.to_string());
        }
        // totals always come from a ground-truth polynomial; the claimed
        // wheel total formula is refuted at n >= 7 and is never used here
        match cec_for_spec(&spec, Method::Auto, &ocfg, &ecfg) {
            Ok(result) => {
                for notice in &result.notices {
                    eprintln!("note: {notice}");
                }
                out_rows.push(Row {
                    spec,
                    total: result.poly.total(),
                    poly: (!args.totals_only).then_some(result.poly),
                });
            }
            Err(e) => {
                eprintln!("error: {}: {e}", spec);
                return method_error_code(&e);
            }
        }
    }

    match args.format {
        FormatArg::Text => {
            for r in &out_rows {
                match &r.poly {
                    Some(p) => println!("{:<18} {} ; total {}", r.spec.to_string(), p, r.total),
                    None => println!("{:<18} {}", r.spec.to_string(), r.total),
                }
            }
        }
        FormatArg::Json => {
            let rows: Vec<TableRowOut> = out_rows
                .iter()
                .map(|r| TableRowOut {
                    params: &r.spec.params,
                    poly: r.poly.as_ref(),
                    total: r.total.to_string(),
                })
                .collect();
            println!(
                "{}",
                serde_json::to_string_pretty(
                    &serde_json::json!({ "family": family.name(), "rows": rows })
                )
                .expect("table serializes")
            );
        }
        FormatArg::Csv => {
            println!("params,total,polynomial");
            for r in &out_rows {
                let params = r
                    .spec
                    .params
                    .iter()
                    .map(|p| p.to_string())
                    .collect::<Vec<_>>()
                    .join(" ");
                let poly = r.poly.as_ref().map(|p| p.to_string()).unwrap_or_default();
                println!("{params},{},{poly}", r.total);
            }
        }
    }
    EXIT_OK
}

fn cmd_verify(args: VerifyArgs) -> i32 {
    let ocfg = match args.budget.oracle_config() {
        Ok(cfg) => cfg,
        Err(msg) => return usage_error(&msg),
    };
    let format = match args.format {
        FormatArg::Text => crate::verify::ReportFormat::Text,
        FormatArg::Json => crate::verify::ReportFormat::Json,
        FormatArg::Csv => return usage_error("verify reports are text or json"),
    };
    let reports = match run_claims(args.claims.as_deref(), &ocfg) {
        Ok(r) => r,
        Err(VerifyError::UnknownClaim(id)) => {
            return usage_error(&format!("unknown claim id {id:?}"))
        }
    };
    print!("{}", emit_report(&reports, format, args.timings));

    let mismatch = reports.iter().any(|r| {
        let expected = if EXPECTED_REFUTED.contains(&r.id.as_str()) {
            Verdict::Refuted
        } else {
            Verdict::Confirmed
        };
        r.verdict != Verdict::Untested && r.verdict != expected
    });
    if mismatch {
        eprintln!("error: at least one claim verdict differs from its expected status");
        EXIT_VERIFY_MISMATCH
    } else {
        EXIT_OK
    }
}

fn cmd_scan(args: ScanArgs) -> i32 {
    let ocfg = match args.budget.oracle_config() {
        Ok(cfg) => cfg,
        Err(msg) => return usage_error(&msg),
    };
    let format = match args.format {
        FormatArg::Text => crate::verify::ReportFormat::Text,
        FormatArg::Json => crate::verify::ReportFormat::Json,
        FormatArg::Csv => return usage_error("scan reports are text or json"),
    };
    let corpus = match &args.family {
        None => default_corpus(),
        Some(name) => match name.parse::<Family>() {
            Ok(f) => family_corpus(f, args.max),
            Err(e) => return usage_error(&e.to_string()),
        },
    };
    let report = scan_unimodality(&corpus, &ocfg);
    print!("{}", render_scan(&report, format));
    EXIT_OK
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn range_parsing() {
        assert_eq!(
            parse_range(Family::Complete, "2..4").unwrap(),
            vec![vec![2], vec![3], vec![4]]
        );
        assert_eq!(parse_range(Family::Complete, "5").unwrap(), vec![vec![5]]);
        assert_eq!(
            parse_range(Family::Turan, "(3,2)..(5,4)").unwrap(),
            vec![
                vec![3, 2],
                vec![4, 2],
                vec![4, 3],
                vec![5, 2],
                vec![5, 3],
                vec![5, 4]
            ]
        );
        assert!(parse_range(Family::Complete, "4..2").is_err());
        assert!(parse_range(Family::Complete, "(3,2)..(5,4)").is_err());
        assert!(parse_range(Family::Turan, "(5,4)").is_ok());
        assert!(parse_range(Family::Complete, "x..y").is_err());
    }

    #[test]
    fn poly_render_matches_documented_shape() {
        let p = Poly::from_u64s(&[0, 0, 0, 0, 5, 1]);
        let text = render_poly(&p, FormatArg::Text);
        assert!(text.starts_with("5x^4 + x^5 ; total 6\n"));
        assert!(text.contains("min exponent 4 ; degree 5 ; unimodal: yes"));

        let json = render_poly(&p, FormatArg::Json);
        let doc: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(
            doc["coeffs"],
            serde_json::json!(["0", "0", "0", "0", "5", "1"])
        );
        assert_eq!(doc["total"], "6");

        let csv = render_poly(&p, FormatArg::Csv);
        assert!(csv.starts_with("exponent,coefficient\n0,0\n"));
        assert!(csv.ends_with("5,1\n"));
    }

    #[test]
    fn zero_poly_render() {
        let text = render_poly(&Poly::zero(), FormatArg::Text);
        assert!(text.starts_with("0 ; total 0\n"));
        assert!(text.contains("min exponent - ; degree -"));
    }
}
