//! The verification suites. Every case checks one identity of the engine
//! on seeded random models and parameters; exact suites require bit-exact
//! equality, on-shell suites verify against explicit tolerances at the
//! requested precision.

use crate::report::{model_digest, CaseReport, Status, SuiteReport};
use rayon::prelude::*;
use std::collections::BTreeMap;
use std::time::Instant;
use uqglm::bethe::{
    build_bethe, build_bethe_alt, build_dual, build_dual_alt, coproduct_check_bra,
    coproduct_check_ket, is_content_homogeneous, BetheParams,
};
use uqglm::chain::{rtt_check, transfer_matrix, yang_baxter_check, ChainConfig, Monodromy};
use uqglm::draws::{distinct_rats, draw_sets, random_q, rng_from_seed};
use uqglm::error::Error;
use uqglm::onshell::{
    eigenvector_check, korepin_suite, norm_check, solve_bethe, x_from_alpha, SolveOptions,
};
use uqglm::scalar::{MpC, MpReal, Orientation, QParam, Rat, Scalar};
use uqglm::sp::{
    brute_force_sp, hc_reflection_check, hc_residue_check, hc_symmetry_check, hc_z, hc_z_alt,
    sum_formula_sp, HcContext, HcRequest,
};

pub struct SuiteCtx {
    pub seed: u64,
    pub prec: usize,
    pub config: Option<ChainConfig<Rat>>,
}

type CaseResult = uqglm::Result<(String, Status, BTreeMap<String, String>)>;
type CaseFn = Box<dyn Fn() -> CaseResult + Send + Sync>;

struct Case {
    name: String,
    run: CaseFn,
}

fn case(name: impl Into<String>, run: impl Fn() -> CaseResult + Send + Sync + 'static) -> Case {
    Case {
        name: name.into(),
        run: Box::new(run),
    }
}

fn witness(pairs: &[(&str, String)]) -> BTreeMap<String, String> {
    pairs
        .iter()
        .map(|(k, v)| (k.to_string(), v.clone()))
        .collect()
}

fn exact_status(ok: bool) -> Status {
    if ok {
        Status::ExactPass
    } else {
        Status::Fail
    }
}

fn tol_status(ok: bool) -> Status {
    if ok {
        Status::PassTol
    } else {
        Status::Fail
    }
}

/// Deterministic per-case seed derived from the suite seed.
fn sub_seed(seed: u64, tag: u64) -> u64 {
    seed.wrapping_mul(0x9e37_79b9_7f4a_7c15).wrapping_add(tag)
}

fn seeded_chain(
    m: usize,
    sites: usize,
    seed: u64,
) -> (ChainConfig<Rat>, uqglm::draws::ChaCha8Rng) {
    let mut rng = rng_from_seed(seed);
    let q = random_q(&mut rng);
    let xi = distinct_rats(&mut rng, &q, sites, &[]);
    let kappa = distinct_rats(&mut rng, &q, m, &[]);
    (
        ChainConfig::new(m, q, xi, kappa).expect("seeded chain is valid"),
        rng,
    )
}

pub fn known_suites() -> &'static [&'static str] {
    &[
        "rtt",
        "yangbaxter",
        "bv",
        "coproduct",
        "sp",
        "hc",
        "residues",
        "onshell",
        "korepin",
        "all",
    ]
}

pub fn run_suite(name: &str, ctx: &SuiteCtx) -> uqglm::Result<SuiteReport> {
    let cases = match name {
        "rtt" => rtt_cases(ctx),
        "yangbaxter" => yang_baxter_cases(ctx),
        "bv" => bv_cases(ctx),
        "coproduct" => coproduct_cases(ctx),
        "sp" => sp_cases(ctx),
        "hc" => hc_cases(ctx),
        "residues" => residue_cases(ctx),
        "onshell" => onshell_cases(ctx),
        "korepin" => korepin_cases(ctx),
        "all" => {
            let mut all = Vec::new();
            all.extend(rtt_cases(ctx));
            all.extend(yang_baxter_cases(ctx));
            all.extend(bv_cases(ctx));
            all.extend(coproduct_cases(ctx));
            all.extend(sp_cases(ctx));
            all.extend(hc_cases(ctx));
            all.extend(residue_cases(ctx));
            all.extend(onshell_cases(ctx));
            all.extend(korepin_cases(ctx));
            all
        }
        other => {
            return Err(Error::Invalid(format!(
                "unknown suite {other:?}; expected one of {:?}",
                known_suites()
            )))
        }
    };

    let reports: Vec<uqglm::Result<CaseReport>> = cases
        .into_par_iter()
        .map(|c| {
            let start = Instant::now();
            let (model, status, wit) = (c.run)()?;
            Ok(CaseReport {
                name: c.name,
                model,
                status,
                witness: wit,
                runtime_ms: start.elapsed().as_millis(),
            })
        })
        .collect();
    let reports = reports.into_iter().collect::<uqglm::Result<Vec<_>>>()?;
    Ok(SuiteReport::new(name, ctx.seed, ctx.prec, reports))
}

fn rtt_cases(ctx: &SuiteCtx) -> Vec<Case> {
    let mut cases = Vec::new();
    for m in 2..=4usize {
        for sites in 1..=3usize {
            let seed = sub_seed(ctx.seed, (100 + m * 10 + sites) as u64);
            cases.push(case(format!("rtt-relation-m{m}-L{sites}"), move || {
                let (cfg, mut rng) = seeded_chain(m, sites, seed);
                let digest = model_digest(&cfg.to_json());
                let mut ok = true;
                for _ in 0..10 {
                    let uv = distinct_rats(&mut rng, cfg.q(), 2, cfg.xi());
                    ok &= rtt_check(&cfg, &uv[0], &uv[1])?;
                }
                Ok((
                    digest,
                    exact_status(ok),
                    witness(&[("pairs", "10".into()), ("q", cfg.q().q().serialize())]),
                ))
            }));
        }
    }
    let seed = sub_seed(ctx.seed, 160);
    cases.push(case("transfer-commutativity-m3-L2", move || {
        let (cfg, mut rng) = seeded_chain(3, 2, seed);
        let digest = model_digest(&cfg.to_json());
        let mut ok = true;
        for _ in 0..5 {
            let uv = distinct_rats(&mut rng, cfg.q(), 2, cfg.xi());
            let a = transfer_matrix(&cfg, &uv[0])?;
            let b = transfer_matrix(&cfg, &uv[1])?;
            ok &= a.commutator(&b).is_zero();
        }
        Ok((digest, exact_status(ok), witness(&[("pairs", "5".into())])))
    }));
    if let Some(cfg) = ctx.config.clone() {
        let seed = sub_seed(ctx.seed, 170);
        cases.push(case("rtt-relation-config", move || {
            let digest = model_digest(&cfg.to_json());
            let mut rng = rng_from_seed(seed);
            let mut ok = true;
            for _ in 0..10 {
                let uv = distinct_rats(&mut rng, cfg.q(), 2, cfg.xi());
                ok &= rtt_check(&cfg, &uv[0], &uv[1])?;
            }
            Ok((digest, exact_status(ok), witness(&[("pairs", "10".into())])))
        }));
    }
    cases
}

fn yang_baxter_cases(ctx: &SuiteCtx) -> Vec<Case> {
    (2..=4usize)
        .map(|m| {
            let seed = sub_seed(ctx.seed, (200 + m) as u64);
            case(format!("yang-baxter-m{m}"), move || {
                let mut rng = rng_from_seed(seed);
                let mut ok = true;
                for _ in 0..10 {
                    let q = random_q(&mut rng);
                    let v = distinct_rats(&mut rng, &q, 3, &[]);
                    ok &= yang_baxter_check(&q, m, &v[0], &v[1], &v[2])?;
                }
                Ok((
                    "r-matrix".into(),
                    exact_status(ok),
                    witness(&[("triples", "10".into())]),
                ))
            })
        })
        .collect()
}

fn one_site_golden(m: usize, seed: u64) -> CaseResult {
    let mut rng = rng_from_seed(seed);
    let q = random_q(&mut rng);
    let xi = distinct_rats(&mut rng, &q, 1, &[]);
    let cfg = ChainConfig::new(m, q.clone(), xi.clone(), vec![Rat::one(); m])?;
    let digest = model_digest(&cfg.to_json());
    let ts = distinct_rats(&mut rng, &q, m - 1, &xi);
    let mut ok = true;
    for k in 2..=m {
        let mut sets = vec![Vec::new(); m - 1];
        for (c, slot) in sets.iter_mut().enumerate().take(k - 1) {
            slot.push(ts[c].clone());
        }
        let built = build_bethe(&cfg, &BetheParams::new(sets.clone()))?.vec;
        // closed form: a single basis vector e_k with explicit coefficient
        let mut coef = uqglm::funcs::g_l(&q, &ts[0], &xi[0])?;
        for nu in 1..k - 1 {
            let ratio = uqglm::funcs::g_l(&q, &ts[nu], &ts[nu - 1])?
                .div(&uqglm::funcs::f(&q, &ts[nu], &ts[nu - 1])?);
            coef = coef.mul(&ratio);
        }
        ok &= built.support() == vec![k - 1] && built.data[k - 1] == coef;
        let alt = build_bethe_alt(&cfg, &BetheParams::new(sets))?.vec;
        ok &= alt == built;
    }
    Ok((
        digest,
        exact_status(ok),
        witness(&[("vectors", format!("{}", m - 1))]),
    ))
}

fn bv_cases(ctx: &SuiteCtx) -> Vec<Case> {
    let mut cases = Vec::new();
    for m in 2..=4usize {
        let seed = sub_seed(ctx.seed, (300 + m) as u64);
        cases.push(case(format!("one-site-closed-form-m{m}"), move || {
            one_site_golden(m, seed)
        }));
    }
    let shapes: [(usize, &[usize]); 4] = [(2, &[2]), (3, &[1, 1]), (3, &[2, 1]), (4, &[1, 1, 1])];
    for (i, (m, r)) in shapes.into_iter().enumerate() {
        for sites in 1..=2usize {
            let seed = sub_seed(ctx.seed, (320 + i * 4 + sites) as u64);
            let rname: String = r.iter().map(|v| v.to_string()).collect();
            cases.push(case(
                format!("recursion-agreement-m{m}-r{rname}-L{sites}"),
                move || {
                    let (cfg, mut rng) = seeded_chain(m, sites, seed);
                    let digest = model_digest(&cfg.to_json());
                    let params = BetheParams::new(draw_sets(&mut rng, cfg.q(), r, cfg.xi()));
                    let ket = build_bethe(&cfg, &params)?.vec;
                    let ket_alt = build_bethe_alt(&cfg, &params)?.vec;
                    let bra = build_dual(&cfg, &params)?.vec;
                    let bra_alt = build_dual_alt(&cfg, &params)?.vec;
                    let ok = ket == ket_alt && bra == bra_alt;
                    let homog = is_content_homogeneous(&ket, r, m, sites)
                        && is_content_homogeneous(&bra, r, m, sites);
                    Ok((
                        digest,
                        exact_status(ok && homog),
                        witness(&[("support", format!("{}", ket.support().len()))]),
                    ))
                },
            ));
        }
    }
    let seed = sub_seed(ctx.seed, 360);
    cases.push(case("within-color-symmetry-m3", move || {
        let (cfg, mut rng) = seeded_chain(3, 2, seed);
        let digest = model_digest(&cfg.to_json());
        let sets = draw_sets(&mut rng, cfg.q(), &[2, 1], cfg.xi());
        let mut swapped = sets.clone();
        swapped[0].swap(0, 1);
        let a = build_bethe(&cfg, &BetheParams::new(sets))?.vec;
        let b = build_bethe(&cfg, &BetheParams::new(swapped))?.vec;
        Ok((digest, exact_status(a == b), BTreeMap::new()))
    }));
    if let Some(cfg) = ctx.config.clone() {
        let seed = sub_seed(ctx.seed, 370);
        cases.push(case("recursion-agreement-config", move || {
            let digest = model_digest(&cfg.to_json());
            let mut rng = rng_from_seed(seed);
            let r = vec![1usize; cfg.m() - 1];
            let params = BetheParams::new(draw_sets(&mut rng, cfg.q(), &r, cfg.xi()));
            let ok = build_bethe(&cfg, &params)?.vec == build_bethe_alt(&cfg, &params)?.vec
                && build_dual(&cfg, &params)?.vec == build_dual_alt(&cfg, &params)?.vec;
            Ok((digest, exact_status(ok), BTreeMap::new()))
        }));
    }
    cases
}

fn coproduct_cases(ctx: &SuiteCtx) -> Vec<Case> {
    let mut cases = Vec::new();
    let shapes: [(usize, &[usize]); 4] = [(2, &[1]), (2, &[2]), (3, &[1, 1]), (3, &[2, 1])];
    for (i, (m, r)) in shapes.into_iter().enumerate() {
        for (j, (l1, l2)) in [(1usize, 1usize), (1, 2), (2, 1), (2, 2)].into_iter().enumerate() {
            let seed = sub_seed(ctx.seed, (400 + i * 8 + j) as u64);
            let rname: String = r.iter().map(|v| v.to_string()).collect();
            cases.push(case(
                format!("coproduct-m{m}-r{rname}-L{l1}+{l2}"),
                move || {
                    let mut rng = rng_from_seed(seed);
                    let q = random_q(&mut rng);
                    let xi = distinct_rats(&mut rng, &q, l1 + l2, &[]);
                    let kappa2 = distinct_rats(&mut rng, &q, m, &[]);
                    let cfg1 =
                        ChainConfig::new(m, q.clone(), xi[..l1].to_vec(), vec![Rat::one(); m])?;
                    let cfg2 = ChainConfig::new(m, q.clone(), xi[l1..].to_vec(), kappa2)?;
                    let digest = format!(
                        "{}+{}",
                        model_digest(&cfg1.to_json()),
                        model_digest(&cfg2.to_json())
                    );
                    let params = BetheParams::new(draw_sets(&mut rng, &q, r, &xi));
                    let ket = coproduct_check_ket(&cfg1, &cfg2, &params)?;
                    let bra = coproduct_check_bra(&cfg1, &cfg2, &params)?;
                    Ok((
                        digest,
                        exact_status(ket && bra),
                        witness(&[("ket", ket.to_string()), ("bra", bra.to_string())]),
                    ))
                },
            ));
        }
    }
    cases
}

fn sp_cases(ctx: &SuiteCtx) -> Vec<Case> {
    let mut cases = Vec::new();
    let grid: [(usize, &[usize], usize); 8] = [
        (2, &[1], 1),
        (2, &[2], 2),
        (2, &[3], 3),
        (3, &[1, 1], 1),
        (3, &[1, 1], 2),
        (3, &[2, 1], 2),
        (3, &[2, 2], 2),
        (4, &[1, 1, 1], 1),
    ];
    for (i, (m, r, sites)) in grid.into_iter().enumerate() {
        for model_idx in 0..5usize {
            let seed = sub_seed(ctx.seed, (500 + i * 8 + model_idx) as u64);
            let rname: String = r.iter().map(|v| v.to_string()).collect();
            cases.push(case(
                format!("sum-formula-m{m}-r{rname}-L{sites}-model{model_idx}"),
                move || {
                    let (cfg, mut rng) = seeded_chain(m, sites, seed);
                    let digest = model_digest(&cfg.to_json());
                    let s = BetheParams::new(draw_sets(&mut rng, cfg.q(), r, cfg.xi()));
                    let mut avoid = cfg.xi().to_vec();
                    avoid.extend(s.flatten());
                    let t = BetheParams::new(draw_sets(&mut rng, cfg.q(), r, &avoid));
                    let ctx_hc = HcContext::new(cfg.q().clone());
                    let brute = brute_force_sp(&cfg, &s, &t)?;
                    let sum = sum_formula_sp(&cfg, &ctx_hc, &s, &t)?;
                    Ok((
                        digest,
                        exact_status(sum == brute),
                        witness(&[("value", brute.serialize())]),
                    ))
                },
            ));
        }
    }
    if let Some(cfg) = ctx.config.clone() {
        let seed = sub_seed(ctx.seed, 590);
        cases.push(case("sum-formula-config", move || {
            let digest = model_digest(&cfg.to_json());
            let mut rng = rng_from_seed(seed);
            let r = vec![1usize; cfg.m() - 1];
            let s = BetheParams::new(draw_sets(&mut rng, cfg.q(), &r, cfg.xi()));
            let mut avoid = cfg.xi().to_vec();
            avoid.extend(s.flatten());
            let t = BetheParams::new(draw_sets(&mut rng, cfg.q(), &r, &avoid));
            let ctx_hc = HcContext::new(cfg.q().clone());
            let ok = sum_formula_sp(&cfg, &ctx_hc, &s, &t)? == brute_force_sp(&cfg, &s, &t)?;
            Ok((digest, exact_status(ok), BTreeMap::new()))
        }));
    }
    cases
}

fn hc_shapes() -> Vec<&'static [usize]> {
    vec![
        &[1],
        &[2],
        &[3],
        &[4],
        &[5],
        &[1, 1],
        &[2, 1],
        &[2, 2],
        &[3, 2],
        &[1, 1, 1],
        &[2, 2, 1],
    ]
}

fn hc_cases(ctx: &SuiteCtx) -> Vec<Case> {
    let mut cases = Vec::new();
    for (i, r) in hc_shapes().into_iter().enumerate() {
        let rname: String = r.iter().map(|v| v.to_string()).collect();
        let seed = sub_seed(ctx.seed, (600 + i * 3) as u64);
        cases.push(case(format!("hc-recursion-agreement-r{rname}"), move || {
            let mut rng = rng_from_seed(seed);
            let mut ok = true;
            for _ in 0..20 {
                let q = random_q(&mut rng);
                let hc = HcContext::new(q.clone());
                let s = draw_sets(&mut rng, &q, r, &[]);
                let avoid: Vec<Rat> = s.iter().flatten().cloned().collect();
                let t = draw_sets(&mut rng, &q, r, &avoid);
                let req = HcRequest::new(s, t, Orientation::Direct);
                ok &= hc_z(&hc, &req)? == hc_z_alt(&hc, &req)?;
            }
            Ok((
                "generic".into(),
                exact_status(ok),
                witness(&[("draws", "20".into())]),
            ))
        }));
        let seed = sub_seed(ctx.seed, (601 + i * 3) as u64);
        cases.push(case(format!("hc-inversion-symmetry-r{rname}"), move || {
            let mut rng = rng_from_seed(seed);
            let mut ok = true;
            for _ in 0..20 {
                let q = random_q(&mut rng);
                let hc = HcContext::new(q.clone());
                let s = draw_sets(&mut rng, &q, r, &[]);
                let avoid: Vec<Rat> = s.iter().flatten().cloned().collect();
                let t = draw_sets(&mut rng, &q, r, &avoid);
                ok &= hc_symmetry_check(&hc, &s, &t)?;
            }
            Ok((
                "generic".into(),
                exact_status(ok),
                witness(&[("draws", "20".into())]),
            ))
        }));
        let seed = sub_seed(ctx.seed, (602 + i * 3) as u64);
        cases.push(case(
            format!("hc-orientation-reflection-r{rname}"),
            move || {
                let mut rng = rng_from_seed(seed);
                let mut ok = true;
                for _ in 0..20 {
                    let q = random_q(&mut rng);
                    let hc = HcContext::new(q.clone());
                    let s = draw_sets(&mut rng, &q, r, &[]);
                    let avoid: Vec<Rat> = s.iter().flatten().cloned().collect();
                    let t = draw_sets(&mut rng, &q, r, &avoid);
                    ok &= hc_reflection_check(&hc, &s, &t)?;
                }
                Ok((
                    "generic".into(),
                    exact_status(ok),
                    witness(&[("draws", "20".into())]),
                ))
            },
        ));
    }
    cases
}

fn residue_cases(ctx: &SuiteCtx) -> Vec<Case> {
    let mut cases = Vec::new();
    let instances: [(&[usize], usize, usize, &str); 5] = [
        (&[1], 0, 0, "r1"),
        (&[2], 0, 0, "r2-j1"),
        (&[2], 0, 1, "r2-j2"),
        (&[1, 1], 0, 0, "r11-color1"),
        (&[1, 1], 1, 0, "r11-color2"),
    ];
    for (i, (r, mu, j, label)) in instances.into_iter().enumerate() {
        let seed = sub_seed(ctx.seed, (700 + i) as u64);
        cases.push(case(format!("hc-residue-{label}"), move || {
            let mut rng = rng_from_seed(seed);
            let q = random_q(&mut rng);
            let hc = HcContext::new(q.clone());
            let s = draw_sets(&mut rng, &q, r, &[]);
            let avoid: Vec<Rat> = s.iter().flatten().cloned().collect();
            let t = draw_sets(&mut rng, &q, r, &avoid);
            let report = hc_residue_check(&hc, &s, &t, mu, j)?;
            Ok((
                "generic".into(),
                exact_status(report.ok),
                witness(&[
                    ("extracted", report.extracted.serialize()),
                    ("predicted", report.predicted.serialize()),
                ]),
            ))
        }));
    }
    cases
}

fn onshell_cases(ctx: &SuiteCtx) -> Vec<Case> {
    let prec = ctx.prec;
    let mut cases = Vec::new();

    let seed = sub_seed(ctx.seed, 800);
    cases.push(case("bethe-root-analytic-m2-L1", move || {
        let cfg = ChainConfig::new(
            2,
            QParam::new(Rat::new(3, 1))?,
            vec![Rat::new(1, 1)],
            vec![Rat::one(); 2],
        )?;
        let digest = model_digest(&cfg.to_json());
        let opts = SolveOptions {
            prec,
            seeds: 40,
            tol: "1e-40".into(),
            rng_seed: seed,
            ..Default::default()
        };
        let roots = solve_bethe(&cfg, &[1], &opts)?.solutions;
        let expected = MpC::from_rat(&Rat::new(-1, 3), prec);
        let ok = roots.len() == 1
            && roots[0].params.set(0)[0]
                .sub(&expected)
                .abs1()
                .cmp(&MpReal::try_parse_dec("1e-30", prec)?)
                == std::cmp::Ordering::Less;
        Ok((
            digest,
            tol_status(ok),
            witness(&[
                ("roots", format!("{}", roots.len())),
                ("expected", "-xi/q".into()),
            ]),
        ))
    }));

    let seed = sub_seed(ctx.seed, 801);
    cases.push(case("bethe-roots-quadratic-m2-L2", move || {
        let cfg = ChainConfig::new(
            2,
            QParam::new(Rat::new(3, 1))?,
            vec![Rat::new(1, 1), Rat::new(7, 2)],
            vec![Rat::one(); 2],
        )?;
        let digest = model_digest(&cfg.to_json());
        let opts = SolveOptions {
            prec,
            seeds: 80,
            tol: "1e-40".into(),
            rng_seed: seed,
            ..Default::default()
        };
        let roots = solve_bethe(&cfg, &[1], &opts)?.solutions;
        let mag = MpReal::from_rat(&Rat::new(7, 2), prec)
            .sqrt()?
            .div(&MpReal::from_i64(3, prec));
        let tol = MpReal::try_parse_dec("1e-30", prec)?;
        let mut ok = true;
        for expected in [MpC::real(mag.clone()), MpC::real(mag.neg())] {
            ok &= roots.iter().any(|r| {
                r.params.set(0)[0].sub(&expected).abs1().cmp(&tol) == std::cmp::Ordering::Less
            });
        }
        Ok((
            digest,
            tol_status(ok),
            witness(&[("roots", format!("{}", roots.len()))]),
        ))
    }));

    // eigenvector + norm instances
    let instances: [(usize, Vec<(i64, i64)>, Vec<i64>, Vec<usize>, usize, u64); 6] = [
        (2, vec![(1, 1)], vec![1, 1], vec![1], 40, 810),
        (2, vec![(1, 1), (7, 2)], vec![2, 3], vec![1], 80, 815),
        (2, vec![(1, 1), (7, 2)], vec![2, 3], vec![2], 200, 811),
        (2, vec![(1, 1), (7, 2), (-2, 3)], vec![1, 1], vec![2], 200, 812),
        (3, vec![(1, 1), (7, 2)], vec![1, 2, 3], vec![1, 1], 160, 813),
        (2, vec![(1, 1), (7, 2), (-2, 3)], vec![2, 5], vec![1], 80, 814),
    ];
    for (m, xi, kappa, r, seeds, tag) in instances {
        let seed = sub_seed(ctx.seed, tag);
        let rname: String = r.iter().map(|v| v.to_string()).collect();
        let sites = xi.len();
        cases.push(case(
            format!("eigenvector-and-norm-m{m}-L{sites}-r{rname}"),
            move || {
                let cfg = ChainConfig::new(
                    m,
                    QParam::new(Rat::new(3, 1))?,
                    xi.iter().map(|&(n, d)| Rat::new(n, d)).collect(),
                    kappa.iter().map(|&k| Rat::from_i64(k)).collect(),
                )?;
                let digest = model_digest(&cfg.to_json());
                let opts = SolveOptions {
                    prec,
                    seeds,
                    tol: "1e-40".into(),
                    rng_seed: seed,
                    ..Default::default()
                };
                let roots = solve_bethe(&cfg, &r, &opts)?.solutions;
                if roots.is_empty() {
                    return Ok((
                        digest,
                        Status::Fail,
                        witness(&[("error", "no admissible roots found".into())]),
                    ));
                }
                let best = &roots[0];
                let eig =
                    eigenvector_check(&cfg, best, &[Rat::new(9, 4), Rat::new(-5, 7)], "1e-30", prec)?;
                let eig_ok = eig.iter().all(|s| s.pass && s.eigenvalue_stable);
                let norm = norm_check(&cfg, best, "1e-25", prec)?;
                Ok((
                    digest,
                    tol_status(eig_ok && norm.pass),
                    witness(&[
                        ("solutions", format!("{}", roots.len())),
                        ("norm_rel_err", norm.rel_err.to_string()),
                        ("max_residual", best.max_residual().to_string()),
                    ]),
                ))
            },
        ));
    }

    let seed = sub_seed(ctx.seed, 820);
    cases.push(case("alpha-derivative-closed-form", move || {
        let (cfg, mut rng) = seeded_chain(2, 2, seed);
        let digest = model_digest(&cfg.to_json());
        let model = cfg.to_mpc(prec);
        let z_rat = distinct_rats(&mut rng, cfg.q(), 1, cfg.xi())[0].clone();
        let z = MpC::from_rat(&z_rat, prec);
        let closed = x_from_alpha(&model, 0, &z)?;
        let alpha = |u: &MpC| -> uqglm::Result<MpC> { model.alpha(1, u) };
        let h = MpReal::parse_dec("1e-18", prec);
        let hz = MpC::real(h.clone());
        let diff = alpha(&z.add(&hz))?.sub(&alpha(&z.sub(&hz))?);
        let dlog = diff.div(&MpC::real(h.mul(&MpReal::from_i64(2, prec))).mul(&alpha(&z)?));
        let fd = model.q().q_minus_qinv().mul(&z).mul(&dlog).neg();
        let rel = closed.sub(&fd).abs1().div(&closed.abs1());
        let ok = rel.cmp(&MpReal::parse_dec("1e-10", prec)) == std::cmp::Ordering::Less;
        Ok((
            digest,
            tol_status(ok),
            witness(&[("rel_diff", rel.to_string())]),
        ))
    }));

    cases
}

fn korepin_cases(ctx: &SuiteCtx) -> Vec<Case> {
    let shapes = hc_shapes();
    let criteria = [
        "pair-symmetry",
        "x-linearity",
        "single-pair",
        "derivative-minor",
        "zero-at-zero-x",
    ];
    criteria
        .iter()
        .enumerate()
        .map(|(ci, crit)| {
            let shapes = shapes.clone();
            let seed = sub_seed(ctx.seed, (900 + ci) as u64);
            case(format!("korepin-{crit}"), move || {
                let mut rng = rng_from_seed(seed);
                let mut ok = true;
                for r in &shapes {
                    let q = random_q(&mut rng);
                    let t = draw_sets(&mut rng, &q, r, &[]);
                    let x = draw_sets(&mut rng, &q, r, &[]);
                    let report = korepin_suite(&q, &t, &x)?;
                    ok &= match ci {
                        0 => report.pair_symmetry,
                        1 => report.x_linearity,
                        2 => report.single_pair_value,
                        3 => report.derivative_identity,
                        _ => report.zero_at_zero_x,
                    };
                }
                Ok((
                    "generic".into(),
                    exact_status(ok),
                    witness(&[("instances", format!("{}", shapes.len()))]),
                ))
            })
        })
        .collect()
}
