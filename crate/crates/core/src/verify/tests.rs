use super::*;
use crate::cartan::Family;
use crate::morphisms::{phi_map, psi_map};
use crate::presentations::{chevalley_relations, drinfeld_relations};
use crate::superalg::Gen;

#[test]
fn zero_is_verified_with_empty_certificate() {
    let p = drinfeld_relations(Family::Osp1, 1, 2, true).unwrap();
    let idx = RelationIndex::new(&p);
    let v = check_zero(&p.algebra.zero(), &idx, &Budget::default());
    assert_eq!(v, Verdict::Verified { certificate: Vec::new() });
    let a = &p.algebra;
    let s = a.sigma(1 << 1);
    let x = &a.mul(&s, &s) - &a.one();
    assert!(check_zero(&x, &idx, &Budget::default()).is_verified());
}

#[test]
fn relation_multiples_are_verified() {
    let p = drinfeld_relations(Family::Bn1, 2, 2, false).unwrap();
    let idx = RelationIndex::new(&p);
    let a = &p.algebra;
    let rel = &idx.relations[idx.len() / 2];
    let x = a.product([&a.gen(Gen::xi_plus(1, 1)), rel, &a.gen(Gen::gamma(2))]).scale(&Scalar::q());
    let y = &x + &a.mul(&idx.relations[0], &a.gen(Gen::kappa(2, -1)));
    match check_zero(&y, &idx, &Budget::default()) {
        Verdict::Verified { certificate } => assert!(!certificate.is_empty()),
        v => panic!("{v:?}"),
    }
}

#[test]
fn generator_is_nonzero_at_bound() {
    let p = chevalley_relations(Family::Osp1, 1, false).unwrap();
    let idx = RelationIndex::new(&p);
    let v = check_zero(&p.algebra.gen(Gen::e(1)), &idx, &Budget::default());
    assert!(matches!(v, Verdict::NonzeroAtBound { .. }), "{v:?}");
    let v = check_zero(&p.algebra.gen(Gen::e(1)), &idx, &Budget::zero());
    assert_eq!(v, Verdict::BudgetExceeded);
}

#[test]
fn phi_preserves_hh_and_hx() {
    let phi = phi_map(Family::Osp22, 2).unwrap();
    let src = drinfeld_relations(Family::Osp22, 2, 2, true).unwrap();
    let tgt = drinfeld_relations(Family::Dn12, 2, 2, true).unwrap();
    let f = RelationFilter::names(["hh", "hx"]);
    let r = check_morphism(&phi, &src, &tgt, &f, &Budget::default()).unwrap();
    assert!(r.all_verified, "{:?}", r.summaries);
    assert!(r.summary("hx").unwrap().instances > 0);
}

#[test]
fn psi_preserves_chevalley_relations() {
    let psi = psi_map(Family::Sl2, 1).unwrap();
    let src = chevalley_relations(Family::Sl2, 1, true).unwrap();
    let tgt = chevalley_relations(Family::Bn1, 1, true).unwrap();
    let r = check_morphism(&psi, &src, &tgt, &RelationFilter::default(), &Budget::default()).unwrap();
    assert!(r.all_verified, "{:?}", r.instances.iter().filter(|i| i.verdict != "verified").collect::<Vec<_>>());
}

#[test]
fn window_mismatch_detected() {
    let phi = phi_map(Family::Osp1, 1).unwrap();
    let src = drinfeld_relations(Family::Osp1, 1, 3, true).unwrap();
    let tgt = drinfeld_relations(Family::A2n2, 1, 2, true).unwrap();
    let e = check_morphism(&phi, &src, &tgt, &RelationFilter::default(), &Budget::default()).unwrap_err();
    assert!(matches!(e, VerifyError::WindowMismatch { required: 3, .. }));
}

#[test]
fn drinfeld_catalogue_keeps_gamma_invertible_not_involutive() {
    let p = drinfeld_relations(Family::Osp22, 1, 2, false).unwrap();
    let idx = RelationIndex::new(&p);
    let x = p.algebra.gen(Gen::gamma(1)) - p.algebra.gen(Gen::gamma_inv(1));
    let budget = Budget { max_len: 6, max_rounds: 40, max_basis: 2_000, max_steps: 20_000, ..Budget::default() };
    assert!(!check_zero(&x, &idx, &budget).is_verified());
}
