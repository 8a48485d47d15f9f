use std::collections::HashSet;

use super::*;
use crate::scalars::{q_binomial, Scalar, UnitMonomial};
use crate::superalg::{Gen, Monomial};

fn qq() -> Scalar {
    &Scalar::q() - &Scalar::q().inv().unwrap()
}

#[test]
fn kappa_hat_low_orders() {
    let p = drinfeld_relations(Family::Osp1, 2, 3, false).unwrap();
    let a = &p.algebra;
    assert_eq!(kappa_hat(a, 1, 1, 0, 3).unwrap(), a.gen(Gen::gamma(1)));
    assert!(kappa_hat(a, 1, 1, -1, 3).unwrap().is_zero());
    let k2 = kappa_hat(a, 1, 1, 2, 3).unwrap();
    let expect = a.mul(
        &a.gen(Gen::gamma(1)),
        &(a.gen(Gen::kappa(1, 2)).scale(&qq())
            + a.word(&[Gen::kappa(1, 1), Gen::kappa(1, 1)]).scale(&(&(&qq() * &qq()) / &Scalar::from_int(2)))),
    );
    assert_eq!(k2, a.reduce(&expect));
    assert!(matches!(kappa_hat(a, 1, 1, 4, 3), Err(PresentationError::OrderExceeded { .. })));
}

#[test]
fn xx_at_zero_loop_indices() {
    let p = drinfeld_relations(Family::Sl2, 2, 2, false).unwrap();
    let a = &p.algebra;
    for i in 1..=2 {
        let rel = p.by_name("xx").find(|r| r.param("i") == Some(i) && r.param("j") == Some(i) && r.param("r") == Some(0) && r.param("s") == Some(0)).unwrap();
        let xi = |s| a.gen(Gen::xi(s, i as usize, 0));
        let gam = (a.gen(Gen::gamma(i as usize)) - a.gen(Gen::gamma_inv(i as usize))).scale(&qq().inv().unwrap());
        let expect = a.bracket(&xi(1), &xi(-1)).unwrap() - gam;
        assert_eq!(rel.element, a.reduce(&expect));
    }
}

#[test]
fn relations_are_homogeneous() {
    for f in Family::ALL {
        for n in 1..=2 {
            let p = drinfeld_relations(f, n, 2, true).unwrap();
            let c = chevalley_relations(f, n, true).unwrap();
            for (alg, rel) in p.relations.iter().map(|r| (&p.algebra, r)).chain(c.relations.iter().map(|r| (&c.algebra, r))) {
                assert!(alg.parity(&rel.element).is_some(), "{f} {rel}");
                assert!(alg.weight(&rel.element).is_some(), "{f} {rel}");
                alg.validate(&rel.element).unwrap();
            }
        }
    }
}

#[test]
fn catalogue_is_window_monotone() {
    for f in Family::ALL {
        let small = drinfeld_relations(f, 2, 2, false).unwrap();
        let big = drinfeld_relations(f, 2, 3, false).unwrap();
        let keys: HashSet<String> = big.relations.iter().map(|r| r.to_string()).collect();
        assert!(small.relations.iter().all(|r| keys.contains(&r.to_string())), "{f}");
        assert!(big.relations.len() > small.relations.len());
    }
}

#[test]
fn window_too_small() {
    assert_eq!(drinfeld_relations(Family::Osp1, 1, 1, false).unwrap_err(), PresentationError::WindowTooSmall(1));
}

#[test]
fn top_node_exclusion() {
    let p = drinfeld_relations(Family::Osp1, 2, 2, false).unwrap();
    assert!(!p.by_name("xrs").any(|r| r.param("i") == Some(2) && r.param("j") == Some(2)));
    let p = drinfeld_relations(Family::Sl2, 2, 2, false).unwrap();
    assert!(p.by_name("xrs").any(|r| r.param("i") == Some(2) && r.param("j") == Some(2)));
}

#[test]
fn hh_off_diagonal_vanishes_on_right() {
    let p = drinfeld_relations(Family::Osp1, 1, 2, false).unwrap();
    let a = &p.algebra;
    let rel = p.by_name("hh").find(|r| r.param("r") == Some(1) && r.param("s") == Some(2)).unwrap();
    assert_eq!(rel.element, a.bracket(&a.gen(Gen::kappa(1, 1)), &a.gen(Gen::kappa(1, 2))).unwrap());
}

#[test]
fn hx_matches_display() {
    let p = drinfeld_relations(Family::Osp1, 1, 3, false).unwrap();
    let a = &p.algebra;
    let rel = p.by_name("hx").find(|r| r.params == vec![("i", 1), ("j", 1), ("r", 1), ("s", 0), ("sign", 1)]).unwrap();
    // u_{1,1,1} = q^2 - q^-2 - q + q^-1 for n = 1
    let q = Scalar::q();
    let qi = q.inv().unwrap();
    let u = &(&(&q * &q) - &(&qi * &qi)) - &(&q - &qi);
    let c = &u / &qq();
    let expect = a.bracket(&a.gen(Gen::kappa(1, 1)), &a.gen(Gen::xi_plus(1, 0))).unwrap()
        - a.mul(&a.gamma_half_pow(-1), &a.gen(Gen::xi_plus(1, 1))).scale(&c);
    assert_eq!(rel.element, a.reduce(&expect));
    let rel = p.by_name("hx").find(|r| r.params == vec![("i", 1), ("j", 1), ("r", 1), ("s", 0), ("sign", -1)]).unwrap();
    let expect = a.bracket(&a.gen(Gen::kappa(1, 1)), &a.gen(Gen::xi_minus(1, 0))).unwrap()
        + a.mul(&a.gamma_half_pow(1), &a.gen(Gen::xi_minus(1, 1))).scale(&c);
    assert_eq!(rel.element, a.reduce(&expect));
}

#[test]
fn serre_b_uses_imaginary_base() {
    let p = drinfeld_relations(Family::Sl2, 2, 2, false).unwrap();
    let rel = p.by_name("serre-B").find(|r| r.params.iter().filter(|(k, _)| k.starts_with('r')).all(|(_, v)| *v == 0) && r.param("s") == Some(0) && r.param("sign") == Some(1)).unwrap();
    let z = UnitMonomial::new(1, 1);
    let m = Monomial::from_word(vec![Gen::xi_plus(2, 0), Gen::xi_plus(1, 0), Gen::xi_plus(2, 0), Gen::xi_plus(2, 0)]);
    // all six orderings coincide, k = 1 term
    assert_eq!(rel.element.coeff(&m), &Scalar::from_int(6) * &q_binomial(3, 1, z).unwrap());
}

#[test]
fn chevalley_ef_and_serre_depth() {
    let c = chevalley_relations(Family::Osp1, 1, false).unwrap();
    let a = &c.algebra;
    let ef = c.by_name("ef").find(|r| r.param("i") == Some(1) && r.param("j") == Some(1)).unwrap();
    let e = a.gen(Gen::e(1));
    let f = a.gen(Gen::f(1));
    let k = (a.gen(Gen::k(1)) - a.gen(Gen::k_inv(1))).scale(&qq().inv().unwrap());
    assert_eq!(ef.element, a.reduce(&(a.mul(&e, &f) + a.mul(&f, &e) - k)));
    // a_{10} = -4 for osp(1|2)^(1): five e_1 factors
    let s = c.by_name("serre-e").find(|r| r.param("i") == Some(1)).unwrap();
    assert_eq!(s.element.max_len(), 6);
}

#[test]
fn rescale_fixes_most_generators() {
    let pres = chevalley_relations(Family::Osp1, 2, false).unwrap();
    let map = rescale_to_standard(&pres);
    let a = &pres.algebra;
    assert_eq!(map.image(&Gen::k(1)).unwrap(), a.gen(Gen::k(1)));
    assert_eq!(map.image(&Gen::e(1)).unwrap(), a.gen(Gen::e(1)));
    let two = &Scalar::q_half_pow(1) + &Scalar::q_half_pow(-1);
    assert_eq!(map.image(&Gen::e(2)).unwrap(), a.gen(Gen::e(2)).scale(&two));

    let pres = drinfeld_relations(Family::Osp1, 2, 2, false).unwrap();
    let map = rescale_to_standard(&pres);
    let a = &pres.algebra;
    assert_eq!(map.image(&Gen::gamma(2)).unwrap(), a.gen(Gen::gamma(2)));
    assert_eq!(map.image(&Gen::xi_minus(2, 1)).unwrap(), a.gen(Gen::xi_minus(2, 1)));
    // q_1 = q, so node 1 is untouched
    assert_eq!(map.image(&Gen::xi_plus(1, 1)).unwrap(), a.gen(Gen::xi_plus(1, 1)));
    let lambda = &(&Scalar::q() - &Scalar::q_half_pow(-2)) / &(&Scalar::q_half_pow(1) - &Scalar::q_half_pow(-1));
    assert_eq!(map.image(&Gen::kappa(2, 1)).unwrap(), a.gen(Gen::kappa(2, 1)).scale(&lambda));
}
