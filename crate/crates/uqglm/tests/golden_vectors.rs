//! Golden cases for the Bethe-vector builders: one-site chains in closed
//! form, the rank-one main-term normalization, dual one-step unrollings,
//! and the structural invariants (content homogeneity, within-color
//! symmetry).

use uqglm::bethe::{
    build_bethe, build_bethe_alt, build_dual, build_dual_alt, is_content_homogeneous, BetheParams,
};
use uqglm::chain::{ChainConfig, Monodromy};
use uqglm::funcs;
use uqglm::linalg::DenseVec;
use uqglm::scalar::{QParam, Rat, Scalar};

fn one_site(m: usize, xi: Rat, q: Rat) -> ChainConfig<Rat> {
    ChainConfig::new(
        m,
        QParam::new(q).unwrap(),
        vec![xi],
        vec![Rat::one(); m],
    )
    .unwrap()
}

/// The closed form of the one-site Bethe vector with colors 1..k-1 filled:
/// a single basis vector e_k with an explicit coefficient.
fn one_site_expected(cfg: &ChainConfig<Rat>, ts: &[Rat], k: usize) -> DenseVec<Rat> {
    let q = cfg.q();
    let xi = &cfg.xi()[0];
    let mut coef = funcs::g_l(q, &ts[0], xi).unwrap();
    for nu in 1..ts.len() {
        let ratio = funcs::g_l(q, &ts[nu], &ts[nu - 1])
            .unwrap()
            .div(&funcs::f(q, &ts[nu], &ts[nu - 1]).unwrap());
        coef = coef.mul(&ratio);
    }
    let mut v = DenseVec::zeros(cfg.m());
    v.data[k - 1] = coef;
    v
}

#[test]
fn one_site_vectors_match_closed_form() {
    let q = Rat::new(5, 2);
    let xi = Rat::new(1, 3);
    let ts = [Rat::new(2, 1), Rat::new(-3, 2), Rat::new(7, 4)];
    for m in 2..=4usize {
        let cfg = one_site(m, xi.clone(), q.clone());
        // the pseudovacuum itself
        let empty = BetheParams::empty(m - 1);
        assert_eq!(build_bethe(&cfg, &empty).unwrap().vec, cfg.vacuum());
        // all m-1 nontrivial vectors
        for k in 2..=m {
            let mut sets = vec![Vec::new(); m - 1];
            for (c, slot) in sets.iter_mut().enumerate().take(k - 1) {
                slot.push(ts[c].clone());
            }
            let params = BetheParams::new(sets);
            let expected = one_site_expected(&cfg, &ts[..k - 1], k);
            let built = build_bethe(&cfg, &params).unwrap().vec;
            assert_eq!(built, expected, "m={m}, k={k}");
            let alt = build_bethe_alt(&cfg, &params).unwrap().vec;
            assert_eq!(alt, expected, "m={m}, k={k}, alt route");
        }
    }
}

#[test]
fn rank_one_vector_is_normalized_operator_string() {
    // For m = 2 the recursion must reproduce T_{12}(t_1)...T_{12}(t_r)|0>
    // normalized by lambda_2(t-bar), with a nontrivial twist.
    let cfg = ChainConfig::new(
        2,
        QParam::new(Rat::new(3, 1)).unwrap(),
        vec![Rat::new(1, 1), Rat::new(7, 2), Rat::new(-2, 3)],
        vec![Rat::new(2, 1), Rat::new(5, 3)],
    )
    .unwrap();
    let ts = [Rat::new(5, 7), Rat::new(-4, 9)];
    let params = BetheParams::new(vec![ts.to_vec()]);
    let built = build_bethe(&cfg, &params).unwrap().vec;

    let mut direct = cfg.vacuum();
    let mut norm = Rat::one();
    for t in &ts {
        let blocks = cfg.entries(t).unwrap();
        direct = blocks[0][1].apply(&direct);
        norm = norm.mul(&cfg.lambda(2, t).unwrap());
    }
    assert_eq!(built, direct.scale(&norm.inv()));

    // and the dual analogue: <0| T_{21}(s) / lambda_2(s)
    let s = Rat::new(9, 5);
    let dual = build_dual(&cfg, &BetheParams::new(vec![vec![s.clone()]]))
        .unwrap()
        .vec;
    let blocks = cfg.entries(&s).unwrap();
    let expected = blocks[1][0]
        .apply_bra(&cfg.vacuum())
        .scale(&cfg.lambda(2, &s).unwrap().inv());
    assert_eq!(dual, expected);
}

#[test]
fn one_site_dual_vector_from_single_unrolling() {
    // C(s; empty) on the one-site m=3 chain is g_r(s, xi) e_2^T
    let cfg = one_site(3, Rat::new(1, 2), Rat::new(3, 1));
    let s = Rat::new(4, 3);
    let dual = build_dual(&cfg, &BetheParams::new(vec![vec![s.clone()], vec![]]))
        .unwrap()
        .vec;
    let mut expected = DenseVec::zeros(3);
    expected.data[1] = funcs::g_r(cfg.q(), &s, &Rat::new(1, 2)).unwrap();
    assert_eq!(dual, expected);
    assert_eq!(
        build_dual_alt(&cfg, &BetheParams::new(vec![vec![s], vec![]]))
            .unwrap()
            .vec,
        expected
    );
}

#[test]
fn vectors_are_content_homogeneous() {
    let cfg = ChainConfig::new(
        3,
        QParam::new(Rat::new(5, 2)).unwrap(),
        vec![Rat::new(1, 1), Rat::new(7, 2)],
        vec![Rat::new(1, 1), Rat::new(2, 1), Rat::new(3, 1)],
    )
    .unwrap();
    for r in [vec![1usize, 1], vec![2, 1], vec![1, 0]] {
        let sets: Vec<Vec<Rat>> = r
            .iter()
            .enumerate()
            .map(|(c, &n)| {
                (0..n)
                    .map(|k| Rat::new(3 + 2 * (c as i64) + 7 * (k as i64), 11))
                    .collect()
            })
            .collect();
        let params = BetheParams::new(sets);
        let ket = build_bethe(&cfg, &params).unwrap().vec;
        assert!(!ket.is_zero(), "r = {r:?}");
        assert!(is_content_homogeneous(&ket, &r, 3, 2), "r = {r:?}");
        let bra = build_dual(&cfg, &params).unwrap().vec;
        assert!(is_content_homogeneous(&bra, &r, 3, 2), "r = {r:?} (dual)");
    }
}

#[test]
fn within_color_symmetry() {
    let cfg = ChainConfig::new(
        3,
        QParam::new(Rat::new(5, 2)).unwrap(),
        vec![Rat::new(1, 1), Rat::new(7, 2)],
        vec![Rat::new(1, 1), Rat::new(1, 1), Rat::new(1, 1)],
    )
    .unwrap();
    let a = Rat::new(2, 5);
    let b = Rat::new(-3, 4);
    let c = Rat::new(9, 7);
    let fwd = BetheParams::new(vec![vec![a.clone(), b.clone()], vec![c.clone()]]);
    let swp = BetheParams::new(vec![vec![b, a], vec![c]]);
    assert_eq!(
        build_bethe(&cfg, &fwd).unwrap().vec,
        build_bethe(&cfg, &swp).unwrap().vec
    );
    assert_eq!(
        build_dual(&cfg, &fwd).unwrap().vec,
        build_dual(&cfg, &swp).unwrap().vec
    );
}

#[test]
fn cross_color_coincidence_rejected() {
    let cfg = one_site(3, Rat::new(1, 2), Rat::new(3, 1));
    let t = Rat::new(2, 1);
    let params = BetheParams::new(vec![vec![t.clone()], vec![t]]);
    assert!(build_bethe(&cfg, &params).is_err());
}
