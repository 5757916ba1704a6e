//! Acceptance suite: one test per criterion, each printing a pass/fail
//! line. Exact criteria require bit-exact equality; on-shell criteria pin
//! their tolerances (1e-30 eigenvector residual, 1e-25 norm relative
//! error, 1e-30 root accuracy) at 256 bits.

use std::sync::Mutex;
use std::time::{Duration, Instant};
use uqglm_cli::suites::{run_suite, SuiteCtx};

/// Criteria with wall-clock budgets must not compete for the rayon pool,
/// so the acceptance tests run one at a time.
static GATE: Mutex<()> = Mutex::new(());

fn serial() -> std::sync::MutexGuard<'static, ()> {
    GATE.lock().unwrap_or_else(|e| e.into_inner())
}

fn ctx(seed: u64) -> SuiteCtx {
    SuiteCtx {
        seed,
        prec: 256,
        config: None,
    }
}

fn run_and_report(criterion: &str, suite: &str, seed: u64, budget: Option<Duration>) {
    let _gate = serial();
    let start = Instant::now();
    let report = run_suite(suite, &ctx(seed)).expect("suite ran");
    let elapsed = start.elapsed();
    let failed: Vec<&str> = report
        .cases
        .iter()
        .filter(|c| !c.passed())
        .map(|c| c.name.as_str())
        .collect();
    let within_budget = budget.is_none_or(|b| elapsed <= b);
    let verdict = if failed.is_empty() && within_budget {
        "PASS"
    } else {
        "FAIL"
    };
    println!(
        "ACCEPTANCE {criterion}: {verdict} ({} cases, {:.1}s)",
        report.cases.len(),
        elapsed.as_secs_f64()
    );
    assert!(failed.is_empty(), "failing cases: {failed:?}");
    if let Some(b) = budget {
        assert!(
            elapsed <= b,
            "suite {suite} took {elapsed:?}, budget {b:?}"
        );
    }
}

#[test]
fn acceptance_01_yang_baxter_and_rtt() {
    let _gate = serial();
    // exact for m in {2,3,4}, L in {1,2,3}, 10 random pairs each, < 10 s
    let start = Instant::now();
    let rtt = run_suite("rtt", &ctx(1)).expect("rtt suite");
    let yb = run_suite("yangbaxter", &ctx(1)).expect("yang-baxter suite");
    let elapsed = start.elapsed();
    let ok = rtt.passed && yb.passed && elapsed < Duration::from_secs(10);
    println!(
        "ACCEPTANCE 1 (yang-baxter + rtt): {} ({:.1}s)",
        if ok { "PASS" } else { "FAIL" },
        elapsed.as_secs_f64()
    );
    assert!(rtt.passed && yb.passed);
    assert!(
        elapsed < Duration::from_secs(10),
        "criterion 1 exceeded its 10 s budget: {elapsed:?}"
    );
}

#[test]
fn acceptance_02_one_site_golden_vectors() {
    let _gate = serial();
    let report = run_suite("bv", &ctx(2)).expect("bv suite");
    let golden: Vec<_> = report
        .cases
        .iter()
        .filter(|c| c.name.starts_with("one-site-closed-form"))
        .collect();
    let ok = golden.len() == 3 && golden.iter().all(|c| c.passed());
    println!(
        "ACCEPTANCE 2 (one-site golden vectors m=2,3,4): {}",
        if ok { "PASS" } else { "FAIL" }
    );
    assert!(ok);
}

#[test]
fn acceptance_03_recursion_agreement() {
    run_and_report(
        "3 (recursion agreement, both routes, kets and duals)",
        "bv",
        3,
        Some(Duration::from_secs(60)),
    );
}

#[test]
fn acceptance_04_coproduct() {
    run_and_report("4 (coproduct expansions, ket and bra)", "coproduct", 4, None);
}

#[test]
fn acceptance_05_sum_formula_vs_brute_force() {
    run_and_report(
        "5 (sum formula vs contraction, 5 models per shape)",
        "sp",
        5,
        Some(Duration::from_secs(600)),
    );
}

#[test]
fn acceptance_06_hc_recursions_and_symmetries() {
    run_and_report(
        "6 (HC recursion agreement and symmetries, 20 draws per size)",
        "hc",
        6,
        None,
    );
}

#[test]
fn acceptance_07_hc_residues() {
    run_and_report(
        "7 (HC pole residues by rational reconstruction)",
        "residues",
        7,
        None,
    );
}

#[test]
fn acceptance_08_onshell() {
    run_and_report(
        "8 (analytic roots, eigenvector residual < 1e-30, norm < 1e-25)",
        "onshell",
        8,
        None,
    );
}

#[test]
fn acceptance_09_korepin_criteria() {
    run_and_report("9 (Korepin criteria on det G with free X)", "korepin", 9, None);
}

#[test]
fn acceptance_10_deterministic_reports() {
    let _gate = serial();
    let bin = env!("CARGO_BIN_EXE_uqglm");
    let tmp = std::env::temp_dir();
    let out1 = tmp.join("uqglm-acceptance-report-1.json");
    let out2 = tmp.join("uqglm-acceptance-report-2.json");
    for out in [&out1, &out2] {
        let status = std::process::Command::new(bin)
            .args([
                "verify",
                "--suite",
                "all",
                "--seed",
                "7",
                "--out",
                out.to_str().unwrap(),
            ])
            .stderr(std::process::Stdio::null())
            .status()
            .expect("spawn verifier");
        assert!(status.success(), "verify --suite all failed");
    }
    let a = std::fs::read(&out1).expect("first report");
    let b = std::fs::read(&out2).expect("second report");
    let ok = a == b;
    println!(
        "ACCEPTANCE 10 (byte-identical reports): {}",
        if ok { "PASS" } else { "FAIL" }
    );
    assert!(ok, "reports differ between runs");
    let _ = std::fs::remove_file(&out1);
    let _ = std::fs::remove_file(&out2);
}
