//! Randomized algebraic properties. `QASA_SEED` fixes the sample.

mod common;

use proptest::prelude::*;
use proptest::test_runner::TestCaseError;

use qasa::scalars::{q_binomial, Scalar, UnitMonomial};
use qasa::superalg::{format_element, parse_element, Monomial, Schedule};

use common::{algebras, element, monomial, nonzero_scalar, runner, scalar};

fn check<S: Strategy>(cases: u32, s: S, f: impl Fn(S::Value) -> Result<(), TestCaseError>) {
    runner(cases).run(&s, f).unwrap();
}

#[test]
fn scalar_ring_axioms() {
    check(64, (scalar(), scalar(), scalar()), |(a, b, c)| {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &Scalar::one(), a.clone());
        prop_assert_eq!(&a + &Scalar::zero(), a);
        Ok(())
    });
}

#[test]
fn scalar_inverses_and_canonical_form() {
    check(64, (scalar(), nonzero_scalar()), |(a, b)| {
        let inv = b.inv().unwrap();
        prop_assert!((&b * &inv).is_one());
        // the canonical fraction makes equal values compare equal structurally
        prop_assert_eq!(&(&a * &b) / &b, a);
        Ok(())
    });
}

#[test]
fn q_pascal() {
    for z in [UnitMonomial::q(), UnitMonomial::q_half(), UnitMonomial::t(), UnitMonomial::t_half()] {
        for n in 1..=8u32 {
            for k in 1..n as i64 {
                let lhs = q_binomial(n, k, z).unwrap();
                let a = &Scalar::from(z.pow(-(k as i32))) * &q_binomial(n - 1, k, z).unwrap();
                let b = &Scalar::from(z.pow(n as i32 - k as i32)) * &q_binomial(n - 1, k - 1, z).unwrap();
                assert_eq!(lhs, &a + &b, "z = {z}, n = {n}, k = {k}");
            }
        }
    }
}

#[test]
fn multiplication_is_associative() {
    for alg in algebras() {
        check(8, (element(&alg, 3, 3), element(&alg, 3, 3), element(&alg, 2, 3)), |(a, b, c)| {
            prop_assert_eq!(alg.mul(&alg.mul(&a, &b), &c), alg.mul(&a, &alg.mul(&b, &c)));
            Ok(())
        });
    }
}

#[test]
fn sigma_normalisation() {
    for alg in algebras() {
        let n = alg.rank();
        check(8, (1u32..(1 << n), element(&alg, 3, 4)), |(m, x)| {
            let s = alg.sigma(m << 1);
            prop_assert_eq!(alg.mul(&s, &s), alg.one());
            prop_assert_eq!(alg.product([&s, &s, &x]), x.clone());
            // σ x σ is x up to one χ sign per term
            let y = alg.product([&s, &x, &s]);
            for (mono, c) in x.terms() {
                let chi = alg.chi(m << 1, &mono.word);
                prop_assert_eq!(y.coeff(mono), c * &Scalar::from_int(chi));
            }
            Ok(())
        });
    }
}

#[test]
fn parity_and_weight_are_additive() {
    for alg in algebras() {
        check(16, (monomial(&alg, 4), monomial(&alg, 4)), |(a, b)| {
            let (_, ab) = alg.mul_monomials(&a, &b);
            prop_assert_eq!(alg.monomial_parity(&ab), alg.monomial_parity(&a) ^ alg.monomial_parity(&b));
            let wa = alg.monomial_weight(&a);
            let wb = alg.monomial_weight(&b);
            let sum: Vec<i32> = wa.iter().zip(&wb).map(|(x, y)| x + y).collect();
            prop_assert_eq!(alg.monomial_weight(&ab), sum);
            Ok(())
        });
    }
}

#[test]
fn reduction_is_schedule_independent() {
    for alg in algebras() {
        check(8, element(&alg, 3, 6), |x| {
            let (l, _) = alg.reduce_scheduled(&x, Schedule::LeftmostFirst);
            let (r, _) = alg.reduce_scheduled(&x, Schedule::RightmostFirst);
            prop_assert_eq!(&l, &r);
            prop_assert_eq!(&alg.reduce(&l), &l);
            Ok(())
        });
    }
}

#[test]
fn printed_elements_parse_back() {
    for alg in algebras() {
        check(8, element(&alg, 3, 4), |x| {
            let s = format_element(&x);
            let y = parse_element(&alg, &s).map_err(|e| TestCaseError::fail(format!("{s}: {e}")))?;
            prop_assert_eq!(format_element(&y), s);
            prop_assert_eq!(y, x);
            Ok(())
        });
    }
}

#[test]
fn empty_monomial_is_unit() {
    for alg in algebras() {
        check(8, monomial(&alg, 4), |m| {
            let (sign, out) = alg.mul_monomials(&Monomial::one(), &m);
            prop_assert_eq!(sign, 1);
            prop_assert_eq!(out, m);
            Ok(())
        });
    }
}
