//! Scalar products: the partition sum over highest coefficients against
//! brute-force contraction, the HC recursion agreement and symmetry
//! relations, and the HC pole residues.

use uqglm::bethe::BetheParams;
use uqglm::chain::{ChainConfig, Monodromy};
use uqglm::draws::{distinct_rats, draw_sets, random_q, rng_from_seed};
use uqglm::funcs;
use uqglm::scalar::{Orientation, QParam, Rat, Scalar};
use uqglm::sp::{
    brute_force_sp, hc_reflection_check, hc_residue_check, hc_symmetry_check, hc_z, hc_z_alt,
    hc_zbar, sum_formula_sp, HcContext, HcRequest,
};

fn random_chain(
    m: usize,
    sites: usize,
    seed: u64,
) -> (ChainConfig<Rat>, rand_chacha::ChaCha8Rng) {
    let mut rng = rng_from_seed(seed);
    let q = random_q(&mut rng);
    let xi = distinct_rats(&mut rng, &q, sites, &[]);
    let kappa = distinct_rats(&mut rng, &q, m, &[]);
    (ChainConfig::new(m, q, xi, kappa).unwrap(), rng)
}

fn sum_vs_brute_case(m: usize, r: &[usize], sites: usize, seed: u64) {
    let (cfg, mut rng) = random_chain(m, sites, seed);
    let avoid = cfg.xi().to_vec();
    let s = BetheParams::new(draw_sets(&mut rng, cfg.q(), r, &avoid));
    let mut avoid2 = avoid.clone();
    avoid2.extend(s.flatten());
    let t = BetheParams::new(draw_sets(&mut rng, cfg.q(), r, &avoid2));
    let ctx = HcContext::new(cfg.q().clone());
    let brute = brute_force_sp(&cfg, &s, &t).unwrap();
    let sum = sum_formula_sp(&cfg, &ctx, &s, &t).unwrap();
    assert_eq!(sum, brute, "m={m}, r={r:?}, L={sites}, seed={seed}");
}

#[test]
fn hand_checked_rank_one_single_pair() {
    // On one twisted site: C(s)B(t) = (k1/k2) g_l(t,xi) g_r(s,xi), and the
    // two-term partition sum reproduces it through
    // g_l(t,s) (alpha(s) - alpha(t)).
    let q = QParam::new(Rat::new(3, 1)).unwrap();
    let xi = Rat::new(1, 2);
    let cfg = ChainConfig::new(
        2,
        q.clone(),
        vec![xi.clone()],
        vec![Rat::new(2, 1), Rat::new(7, 3)],
    )
    .unwrap();
    let s = Rat::new(5, 3);
    let t = Rat::new(-4, 7);
    let sp = BetheParams::new(vec![vec![s.clone()]]);
    let tp = BetheParams::new(vec![vec![t.clone()]]);

    let twist_ratio = Rat::new(2, 1).div(&Rat::new(7, 3));
    let direct = twist_ratio
        .mul(&funcs::g_l(&q, &t, &xi).unwrap())
        .mul(&funcs::g_r(&q, &s, &xi).unwrap());
    assert_eq!(brute_force_sp(&cfg, &sp, &tp).unwrap(), direct);

    let ctx = HcContext::new(q.clone());
    assert_eq!(sum_formula_sp(&cfg, &ctx, &sp, &tp).unwrap(), direct);

    let alpha = |u: &Rat| cfg.alpha(1, u).unwrap();
    let closed = funcs::g_l(&q, &t, &s)
        .unwrap()
        .mul(&alpha(&s).sub(&alpha(&t)));
    assert_eq!(direct, closed);
}

#[test]
fn mismatched_cardinalities_vanish() {
    let (cfg, mut rng) = random_chain(3, 2, 5);
    let s = BetheParams::new(draw_sets(&mut rng, cfg.q(), &[1, 1], cfg.xi()));
    let t = BetheParams::new(draw_sets(&mut rng, cfg.q(), &[2, 1], cfg.xi()));
    assert!(brute_force_sp(&cfg, &s, &t).unwrap().is_zero());
    let ctx = HcContext::new(cfg.q().clone());
    assert!(sum_formula_sp(&cfg, &ctx, &s, &t).unwrap().is_zero());
    // empty against empty is <0|0> = 1
    let e = BetheParams::empty(2);
    assert_eq!(brute_force_sp(&cfg, &e, &e).unwrap(), Rat::one());
    assert_eq!(sum_formula_sp(&cfg, &ctx, &e, &e).unwrap(), Rat::one());
}

#[test]
fn sum_formula_rank_one() {
    sum_vs_brute_case(2, &[1], 1, 101);
    sum_vs_brute_case(2, &[2], 2, 103);
    sum_vs_brute_case(2, &[3], 3, 105);
}

#[test]
fn sum_formula_rank_two() {
    sum_vs_brute_case(3, &[1, 1], 1, 201);
    sum_vs_brute_case(3, &[1, 1], 2, 203);
    sum_vs_brute_case(3, &[2, 1], 2, 205);
    sum_vs_brute_case(3, &[2, 2], 2, 207);
}

#[test]
fn sum_formula_rank_three() {
    sum_vs_brute_case(4, &[1, 1, 1], 1, 301);
}

#[test]
fn hc_routes_agree_up_to_total_five() {
    let shapes: [&[usize]; 7] = [
        &[1],
        &[3],
        &[5],
        &[1, 1],
        &[2, 2],
        &[3, 2],
        &[2, 2, 1],
    ];
    for (i, r) in shapes.iter().enumerate() {
        let mut rng = rng_from_seed(400 + i as u64);
        let q = random_q(&mut rng);
        let ctx = HcContext::new(q.clone());
        let s = draw_sets(&mut rng, &q, r, &[]);
        let mut avoid: Vec<Rat> = s.iter().flatten().cloned().collect();
        let t = draw_sets(&mut rng, &q, r, &avoid);
        avoid.clear();
        let req = HcRequest::new(s, t, Orientation::Direct);
        assert_eq!(
            hc_z(&ctx, &req).unwrap(),
            hc_z_alt(&ctx, &req).unwrap(),
            "r = {r:?}"
        );
    }
}

#[test]
fn hc_symmetries_on_random_draws() {
    for seed in 0..6u64 {
        let mut rng = rng_from_seed(500 + seed);
        let q = random_q(&mut rng);
        let ctx = HcContext::new(q.clone());
        let r: &[usize] = match seed % 3 {
            0 => &[2],
            1 => &[2, 1],
            _ => &[1, 1, 1],
        };
        let s = draw_sets(&mut rng, &q, r, &[]);
        let avoid: Vec<Rat> = s.iter().flatten().cloned().collect();
        let t = draw_sets(&mut rng, &q, r, &avoid);
        assert!(
            hc_symmetry_check(&ctx, &s, &t).unwrap(),
            "inversion symmetry, seed {seed}"
        );
        assert!(
            hc_reflection_check(&ctx, &s, &t).unwrap(),
            "orientation reflection, seed {seed}"
        );
    }
}

#[test]
fn conjugated_hc_single_pair_closed_form() {
    // Zbar({s}|{t}) evaluates g_l at the inverted orientation on inverted
    // arguments, which simplifies to -t(q - q^{-1})/(t - s) ... i.e. the
    // negative of g_l(t, s) at the direct orientation.
    let q = QParam::new(Rat::new(3, 1)).unwrap();
    let ctx = HcContext::new(q.clone());
    let s = Rat::new(5, 2);
    let t = Rat::new(-7, 3);
    let req = HcRequest::new(
        vec![vec![s.clone()]],
        vec![vec![t.clone()]],
        Orientation::Direct,
    );
    let zbar = hc_zbar(&ctx, &req).unwrap();
    assert_eq!(zbar, funcs::g_l(&q, &t, &s).unwrap().neg());
}

#[test]
fn hc_residues_rank_one() {
    let mut rng = rng_from_seed(601);
    let q = random_q(&mut rng);
    let ctx = HcContext::new(q.clone());
    for r in [1usize, 2] {
        let s = draw_sets(&mut rng, &q, &[r], &[]);
        let avoid: Vec<Rat> = s.iter().flatten().cloned().collect();
        let t = draw_sets(&mut rng, &q, &[r], &avoid);
        for j in 0..r {
            let report = hc_residue_check(&ctx, &s, &t, 0, j).unwrap();
            assert!(
                report.ok,
                "r={r}, j={j}: extracted {} vs predicted {}",
                report.extracted, report.predicted
            );
        }
    }
}

#[test]
fn hc_residues_rank_two_both_colors() {
    let mut rng = rng_from_seed(701);
    let q = random_q(&mut rng);
    let ctx = HcContext::new(q.clone());
    let s = draw_sets(&mut rng, &q, &[1, 1], &[]);
    let avoid: Vec<Rat> = s.iter().flatten().cloned().collect();
    let t = draw_sets(&mut rng, &q, &[1, 1], &avoid);
    for mu in 0..2 {
        let report = hc_residue_check(&ctx, &s, &t, mu, 0).unwrap();
        assert!(
            report.ok,
            "color {mu}: extracted {} vs predicted {}",
            report.extracted, report.predicted
        );
    }
}
