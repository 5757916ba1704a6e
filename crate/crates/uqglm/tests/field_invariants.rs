//! Property checks on the elementary rational functions: the inversion and
//! reflection identities, exactness, and Yang-Baxter / RTT over random
//! rational draws.

use uqglm::chain::{rtt_check, yang_baxter_check, ChainConfig};
use uqglm::draws::{distinct_rats, random_q, rng_from_seed};
use uqglm::funcs::{f, g_l, g_r};
use uqglm::scalar::{Rat, Scalar};

#[test]
fn inversion_identities_hold_exactly_on_100_draws() {
    let mut rng = rng_from_seed(2024);
    for _ in 0..100 {
        let q = random_q(&mut rng);
        let vals = distinct_rats(&mut rng, &q, 2, &[]);
        let (x, y) = (&vals[0], &vals[1]);
        let (xi, yi) = (x.inv(), y.inv());
        let qi = q.inverted();
        // f(1/x, 1/y) at q equals f(x, y) at q^{-1}
        assert_eq!(f(&q, &xi, &yi).unwrap(), f(&qi, x, y).unwrap());
        // g_r(1/x, 1/y) at q equals g_l(x, y) at q^{-1}
        assert_eq!(g_r(&q, &xi, &yi).unwrap(), g_l(&qi, x, y).unwrap());
        // reflection: f at q^{-1} is f at q with swapped arguments
        assert_eq!(f(&qi, x, y).unwrap(), f(&q, y, x).unwrap());
        assert_eq!(g_r(&qi, x, y).unwrap(), g_l(&q, y, x).unwrap());
    }
}

#[test]
fn exact_backend_is_reproducible() {
    // the same seeded computation twice, compared value by value
    let run = || {
        let mut rng = rng_from_seed(99);
        let q = random_q(&mut rng);
        let vals = distinct_rats(&mut rng, &q, 4, &[]);
        let mut acc = Rat::one();
        for (i, a) in vals.iter().enumerate() {
            for b in &vals[i + 1..] {
                acc = acc.mul(&f(&q, a, b).unwrap()).add(&g_l(&q, b, a).unwrap());
            }
        }
        acc
    };
    assert_eq!(run(), run());
}

#[test]
fn yang_baxter_on_random_triples_all_ranks() {
    for m in 2..=4usize {
        let mut rng = rng_from_seed(300 + m as u64);
        for _ in 0..5 {
            let q = random_q(&mut rng);
            let v = distinct_rats(&mut rng, &q, 3, &[]);
            assert!(
                yang_baxter_check(&q, m, &v[0], &v[1], &v[2]).unwrap(),
                "m = {m}"
            );
        }
    }
}

#[test]
fn rtt_with_random_twists() {
    let mut rng = rng_from_seed(777);
    let q = random_q(&mut rng);
    let xi = distinct_rats(&mut rng, &q, 2, &[]);
    let kappa = distinct_rats(&mut rng, &q, 3, &[]);
    let cfg = ChainConfig::new(3, q.clone(), xi.clone(), kappa).unwrap();
    for _ in 0..3 {
        let uv = distinct_rats(&mut rng, &q, 2, &xi);
        assert!(rtt_check(&cfg, &uv[0], &uv[1]).unwrap());
    }
}
