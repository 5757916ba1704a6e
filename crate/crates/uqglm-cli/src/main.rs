//! Command-line driver: batch verification suites, Bethe-root solving,
//! norm checks, and single HC evaluations.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage error,
//! 3 internal error.

use clap::{Args, Parser, Subcommand};
use std::path::PathBuf;
use std::process::ExitCode;
use uqglm_cli::report::SuiteReport;
use uqglm_cli::suites::{run_suite, SuiteCtx};
use uqglm::bethe::BetheParams;
use uqglm::chain::ChainConfig;
use uqglm::onshell::{norm_check, solve_bethe, SolveOptions};
use uqglm::scalar::{Orientation, QParam, Rat, Scalar};
use uqglm::sp::{hc_z, HcContext, HcRequest};

#[derive(Parser)]
#[command(name = "uqglm", version, about = "Exact verification engine for nested Bethe ansatz structures on U_q(gl_m) spin chains")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args)]
struct CommonOpts {
    /// Chain configuration JSON file.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Seed for all randomized draws.
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Mantissa precision for the complex backend.
    #[arg(long, default_value_t = 256)]
    precision_bits: usize,
    /// Write the JSON report here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run a verification suite and emit a JSON report.
    Verify {
        #[arg(long, value_parser = clap::builder::PossibleValuesParser::new(
            uqglm_cli::suites::known_suites()
        ))]
        suite: String,
        #[command(flatten)]
        common: CommonOpts,
    },
    /// Solve the Bethe equations for the given per-color cardinalities.
    SolveBethe {
        /// Per-color cardinalities, comma separated (e.g. "1,1").
        #[arg(long)]
        r: String,
        /// Residual tolerance as a decimal literal.
        #[arg(long, default_value = "1e-25")]
        tol: String,
        #[command(flatten)]
        common: CommonOpts,
    },
    /// Solve the Bethe equations and verify the determinant form of the
    /// squared norm for every solution found.
    NormCheck {
        #[arg(long)]
        r: String,
        #[arg(long, default_value = "1e-25")]
        tol: String,
        #[command(flatten)]
        common: CommonOpts,
    },
    /// Highest-coefficient operations.
    Hc {
        #[command(subcommand)]
        cmd: HcCmd,
    },
}

#[derive(Subcommand)]
enum HcCmd {
    /// Evaluate one highest coefficient Z(s|t).
    Eval {
        /// s-family JSON, e.g. {"t":[["1/2"],["3"]]}.
        #[arg(long)]
        s: String,
        /// t-family JSON, same schema.
        #[arg(long)]
        t: String,
        /// Deformation parameter.
        #[arg(long, default_value = "3/1")]
        q: String,
        /// Rank level of the first color.
        #[arg(long, default_value_t = 1)]
        level: usize,
        /// Orientation: "q" or "q_inv".
        #[arg(long, default_value = "q")]
        orientation: String,
        /// Also dump every memoized HC value reached during evaluation,
        /// keyed by its canonical multisets.
        #[arg(long)]
        table: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn load_config(path: &Option<PathBuf>) -> uqglm::Result<Option<ChainConfig<Rat>>> {
    match path {
        None => Ok(None),
        Some(p) => {
            let text = std::fs::read_to_string(p)
                .map_err(|e| uqglm::Error::Invalid(format!("cannot read {}: {e}", p.display())))?;
            Ok(Some(ChainConfig::from_json(&text)?))
        }
    }
}

fn parse_r(text: &str) -> uqglm::Result<Vec<usize>> {
    text.split(',')
        .map(|p| {
            p.trim()
                .parse::<usize>()
                .map_err(|_| uqglm::Error::Parse(format!("bad cardinality {p:?}")))
        })
        .collect()
}

fn emit(out: &Option<PathBuf>, text: &str) -> uqglm::Result<()> {
    match out {
        None => {
            println!("{text}");
            Ok(())
        }
        Some(p) => std::fs::write(p, text)
            .map_err(|e| uqglm::Error::Invalid(format!("cannot write {}: {e}", p.display()))),
    }
}

fn run_verify(suite: &str, common: &CommonOpts) -> uqglm::Result<bool> {
    let ctx = SuiteCtx {
        seed: common.seed,
        prec: common.precision_bits,
        config: load_config(&common.config)?,
    };
    let report: SuiteReport = run_suite(suite, &ctx)?;
    report.print_timings();
    let passed = report.passed;
    emit(&common.out, &report.to_json())?;
    eprintln!(
        "suite {}: {} ({} cases)",
        report.suite,
        if passed { "PASS" } else { "FAIL" },
        report.cases.len()
    );
    Ok(passed)
}

fn require_config(common: &CommonOpts) -> uqglm::Result<ChainConfig<Rat>> {
    load_config(&common.config)?.ok_or_else(|| {
        uqglm::Error::Invalid("this command needs --config pointing at a chain JSON".into())
    })
}

fn run_solve(r_text: &str, tol: &str, common: &CommonOpts) -> uqglm::Result<bool> {
    let cfg = require_config(common)?;
    let r = parse_r(r_text)?;
    let opts = SolveOptions {
        prec: common.precision_bits,
        tol: tol.to_string(),
        rng_seed: common.seed,
        ..Default::default()
    };
    let outcome = solve_bethe(&cfg, &r, &opts)?;
    let body: Vec<serde_json::Value> = outcome
        .solutions
        .iter()
        .map(|sol| {
            serde_json::json!({
                "roots": sol
                    .params
                    .sets()
                    .iter()
                    .map(|set| set.iter().map(|v| v.serialize()).collect::<Vec<_>>())
                    .collect::<Vec<_>>(),
                "residuals": sol.residuals.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
            })
        })
        .collect();
    let text = serde_json::to_string_pretty(&serde_json::json!({
        "solutions": body,
        "seeds": {
            "converged": outcome.converged_seeds,
            "failed": outcome.failed_seeds,
        },
    }))
    .expect("solver report");
    emit(&common.out, &text)?;
    Ok(!outcome.solutions.is_empty())
}

fn run_norm_check(r_text: &str, tol: &str, common: &CommonOpts) -> uqglm::Result<bool> {
    let cfg = require_config(common)?;
    let r = parse_r(r_text)?;
    let opts = SolveOptions {
        prec: common.precision_bits,
        tol: "1e-40".into(),
        rng_seed: common.seed,
        ..Default::default()
    };
    let solutions = solve_bethe(&cfg, &r, &opts)?.solutions;
    let mut all_pass = !solutions.is_empty();
    let mut body = Vec::new();
    for sol in &solutions {
        let norm = norm_check(&cfg, sol, tol, common.precision_bits)?;
        all_pass &= norm.pass;
        body.push(serde_json::json!({
            "roots": sol
                .params
                .sets()
                .iter()
                .map(|set| set.iter().map(|v| v.serialize()).collect::<Vec<_>>())
                .collect::<Vec<_>>(),
            "residuals": sol.residuals.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
            "norm_lhs": norm.lhs.serialize(),
            "norm_rhs": norm.rhs.serialize(),
            "rel_err": norm.rel_err.to_string(),
            "pass": norm.pass,
        }));
    }
    let text = serde_json::to_string_pretty(&serde_json::json!({ "checks": body }))
        .expect("norm report");
    emit(&common.out, &text)?;
    Ok(all_pass)
}

fn run_hc_eval(
    s: &str,
    t: &str,
    q: &str,
    level: usize,
    orientation: &str,
    table: bool,
    out: &Option<PathBuf>,
) -> uqglm::Result<bool> {
    let s: BetheParams<Rat> = BetheParams::from_json(s)?;
    let t: BetheParams<Rat> = BetheParams::from_json(t)?;
    let q = QParam::new(Rat::parse(q)?)?;
    let orientation = match orientation {
        "q" => Orientation::Direct,
        "q_inv" => Orientation::Inverted,
        other => {
            return Err(uqglm::Error::Parse(format!(
                "orientation must be \"q\" or \"q_inv\", got {other:?}"
            )))
        }
    };
    let ctx = HcContext::new(q);
    let mut req = HcRequest::new(s.sets().to_vec(), t.sets().to_vec(), orientation);
    req.level = level;
    let key = uqglm::combin::multiset_key(
        level,
        &req.s
            .iter()
            .chain(req.t.iter())
            .cloned()
            .collect::<Vec<_>>(),
        orientation,
    );
    let value = hc_z(&ctx, &req)?;
    let mut body = serde_json::json!({
        "level": key.level,
        "orientation": key.orientation.to_string(),
        "multisets": key.sets,
        "value": value.serialize(),
    });
    if table {
        let entries: serde_json::Map<String, serde_json::Value> = ctx
            .table()
            .into_iter()
            .map(|(k, v)| (k, serde_json::Value::String(v)))
            .collect();
        body["table"] = serde_json::Value::Object(entries);
    }
    let text = serde_json::to_string_pretty(&body).expect("hc report");
    emit(out, &text)?;
    Ok(true)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match &cli.cmd {
        Cmd::Verify { suite, common } => run_verify(suite, common),
        Cmd::SolveBethe { r, tol, common } => run_solve(r, tol, common),
        Cmd::NormCheck { r, tol, common } => run_norm_check(r, tol, common),
        Cmd::Hc {
            cmd: HcCmd::Eval {
                s,
                t,
                q,
                level,
                orientation,
                table,
                out,
            },
        } => run_hc_eval(s, t, q, *level, orientation, *table, out),
    };
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(3)
        }
    }
}
