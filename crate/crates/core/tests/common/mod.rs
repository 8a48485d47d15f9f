//! Shared strategies and helpers for the integration suites.
#![allow(dead_code)]

use std::path::PathBuf;

use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestRng, TestRunner};

use qasa::cartan::Family;
use qasa::scalars::{GaussRational, HalfLaurent, Scalar};
use qasa::superalg::{Algebra, Element, Gen, Monomial, Style};

/// Seed for randomized sampling; `QASA_SEED` overrides the default.
pub fn seed() -> u64 {
    std::env::var("QASA_SEED").ok().and_then(|s| s.parse().ok()).unwrap_or(0x5eed)
}

/// A deterministic runner driven by [`seed`].
pub fn runner(cases: u32) -> TestRunner {
    let mut bytes = [0u8; 32];
    bytes[..8].copy_from_slice(&seed().to_le_bytes());
    let config = Config { cases, failure_persistence: None, ..Config::default() };
    TestRunner::new_with_rng(config, TestRng::from_seed(RngAlgorithm::ChaCha, &bytes))
}

pub fn golden(path: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(path)
}

pub fn gauss() -> impl Strategy<Value = GaussRational> {
    (-4i64..=4, 1i64..=3, -2i64..=2).prop_map(|(a, d, b)| {
        let re = GaussRational::from_ratio(a, d);
        &re + &GaussRational::i().scale_int(b)
    })
}

pub fn laurent() -> impl Strategy<Value = HalfLaurent> {
    prop::collection::vec((-4i32..=4, gauss()), 0..4).prop_map(HalfLaurent::from_terms)
}

/// Elements of `Q(i)(q^{1/2})` with small numerators and denominators.
pub fn scalar() -> impl Strategy<Value = Scalar> {
    (laurent(), laurent()).prop_map(|(n, d)| {
        Scalar::fraction(n.clone(), d).unwrap_or_else(|| Scalar::from_laurent(n))
    })
}

pub fn nonzero_scalar() -> impl Strategy<Value = Scalar> {
    scalar().prop_filter("nonzero", |s| !s.is_zero())
}

/// Every generator of `alg` with loop indices in `[-w, w]`.
pub fn alphabet(alg: &Algebra, w: i32) -> Vec<Gen> {
    let n = alg.rank();
    let mut out = Vec::new();
    for i in 0..=n {
        out.extend([Gen::e(i), Gen::f(i), Gen::k(i), Gen::k_inv(i), Gen::gamma(i), Gen::gamma_inv(i)]);
        for r in -w..=w {
            out.extend([Gen::xi_plus(i, r), Gen::xi_minus(i, r), Gen::kappa(i, r)]);
        }
    }
    out.extend([Gen::gamma_half(), Gen::gamma_half_inv()]);
    out.retain(|g| alg.validate_gen(g).is_ok());
    out
}

pub fn algebras() -> Vec<Algebra> {
    let mut out = Vec::new();
    for f in Family::ALL {
        for n in 1..=2 {
            for style in [Style::Chevalley, Style::Drinfeld] {
                out.push(Algebra::new(f, n, style, true).unwrap());
            }
        }
    }
    out
}

/// A monomial over `alg` with a random σ prefix.
pub fn monomial(alg: &Algebra, max_len: usize) -> impl Strategy<Value = Monomial> {
    let gens = alphabet(alg, 2);
    let n = alg.rank();
    let sigma = if alg.is_smash() { (1u32 << (n + 1)) - 1 } else { 0 };
    (0..=sigma, prop::collection::vec(prop::sample::select(gens), 0..=max_len))
        .prop_map(move |(s, word)| Monomial { sigma: s & !1, word })
}

pub fn element(alg: &Algebra, terms: usize, max_len: usize) -> impl Strategy<Value = Element> {
    let tag = alg.tag();
    let alg = alg.clone();
    prop::collection::vec((monomial(&alg, max_len), scalar()), 0..=terms)
        .prop_map(move |ts| alg.reduce(&Element::from_terms(tag, ts)))
}
