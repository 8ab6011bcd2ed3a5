use cosetlab::bilinear::*;
use cosetlab::linalg::QMatrix;
use cosetlab::rational::{q, qf};
use cosetlab::rootsys::{RootSystem, Weight};
use cosetlab::{Error, Q};

fn level(s: &str, n: usize, k: Q) -> Level {
    Level::new(&RootSystem::build(s, n).unwrap(), k).unwrap()
}

#[test]
fn small_g_matrices() {
    let a1 = level("A", 1, q(1));
    assert_eq!(a1.g(), &QMatrix::from_rows(vec![vec![q(3)]]));
    assert_eq!(a1.g_star(), &QMatrix::from_rows(vec![vec![qf(1, 3)]]));
    let neg = level("A", 1, qf(-1, 2));
    assert_eq!(neg.g().get(0, 0), &q(-3));
    assert_eq!(neg.g_star().get(0, 0), &qf(-1, 3));
    assert_eq!(a1.big_g().get(0, 0), &qf(-2, 3));
    assert_eq!(a1.big_g_star().get(0, 0), &qf(-3, 2));
}

#[test]
fn inverse_pairs() {
    for (s, n, k) in [("A", 2, q(1)), ("A", 2, q(2)), ("B", 2, qf(5, 2))] {
        let lv = level(s, n, k);
        assert!(lv.g().mul(lv.g_star()).is_identity());
        assert!(lv.big_g().mul(lv.big_g_star()).is_identity());
    }
}

#[test]
fn level_rejections() {
    let a1 = RootSystem::build("A", 1).unwrap();
    assert!(matches!(Level::new(&a1, q(0)), Err(Error::InvalidLevel { .. })));
    let b2 = RootSystem::build("B", 2).unwrap();
    assert!(matches!(Level::new(&b2, q(-3)), Err(Error::InvalidLevel { .. })));
}

#[test]
fn weight_correspondence() {
    let a1 = level("A", 1, q(2));
    assert_eq!(a1.weight_to_sc(&Weight::from_ints(&[1])).j_values(), &[q(1)]);
    assert!(a1.weight_to_sc(&Weight::zero(1)).is_zero());
    let a2 = level("A", 2, q(1));
    assert_eq!(a2.weight_to_sc(&Weight::from_ints(&[1, 0])).j_values(), &[q(2), q(-1), q(1)]);
    assert_eq!(a2.sc_weight_to_af(&a2.sc_zero()), Weight::zero(2));
    let a1 = level("A", 1, q(1));
    let alpha = Weight::from_ints(&[1]);
    assert_eq!(a1.sc_weight_to_af(&a1.weight_to_sc(&alpha)), alpha);
    let a2 = level("A", 2, q(3));
    for i in 0..2 {
        let w = a2.rs().fundamental_weight(i);
        assert_eq!(a2.sc_weight_to_af(&a2.weight_to_sc(&w)), w);
    }
}

#[test]
fn converse_examples() {
    let a1 = level("A", 1, q(1));
    let r = a1.converse_congruence_check(&a1.sc_from_j(vec![qf(2, 7)]));
    assert!(r.hypothesis_holds && r.verdict);
    assert!(r.differences.iter().all(|d| *d == q(0)));

    let a2 = level("A", 2, q(1));
    let r = a2.converse_congruence_check(&a2.weight_to_sc(&Weight::from_ints(&[1, 0])));
    assert!(r.hypothesis_holds && r.verdict);
    assert!(r.differences.iter().all(|d| d.is_integer()));

    // μ(ξ̃(θ)) = μ(J_θ) − μ(J_α1) − μ(J_α2) = 1/2.
    let bad = a2.sc_from_j(vec![q(0), q(0), qf(1, 2)]);
    let r = a2.converse_congruence_check(&bad);
    assert!(!r.hypothesis_holds);
    assert_eq!(r.violations.len(), 1);
    assert_eq!(r.violations[0].root, vec![1, 1]);
    assert_eq!(r.violations[0].value, qf(1, 2));
}

#[test]
fn conformal_weights() {
    let a1 = level("A", 1, q(1));
    assert_eq!(a1.conformal_weight_plus(&Weight::from_ints(&[1])), qf(1, 3));
    assert_eq!(a1.conformal_weight_plus(&Weight::zero(1)), q(0));
    let a2 = level("A", 2, q(2));
    assert_eq!(a2.conformal_weight_plus(&Weight::from_ints(&[1, 1])), qf(1, 5));
    for mu in [Weight::from_ints(&[1, 0]), Weight(vec![qf(1, 3), qf(2, 3)])] {
        assert_eq!(a2.conformal_weight_minus(&a2.weight_to_sc(&mu)), a2.conformal_weight_plus(&mu));
    }
}

#[test]
fn central_charge_examples() {
    let c = level("A", 1, q(1)).central_charges();
    assert_eq!((c.c_af.clone(), c.c_sc.clone()), (q(1), q(1)));
    let c = level("A", 2, q(1)).central_charges();
    assert_eq!((c.c_af.clone(), c.c_sc.clone()), (q(2), q(3)));
    let c = level("A", 1, q(100)).central_charges();
    assert_eq!(c.c_sc, qf(300, 102));
    assert!(c.formulas_agree());
}

#[test]
fn q_sc_membership_stable_under_l_plus() {
    let lv = level("B", 2, qf(5, 3));
    let mu = lv.sc_from_jstar(vec![q(1), q(-2), q(0), q(3)]);
    assert!(mu.in_q_sc());
    let xi = cosetlab::lattice::LatticeVector(vec![2, -1, 4, 0]);
    assert!(mu.add(&lv.g_sc_plus(&xi)).in_q_sc());
}
