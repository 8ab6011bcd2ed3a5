use cosetlab::rational::{q, qf};
use cosetlab::rootsys::{RootSystem, Weight};
use cosetlab::Error;

fn all_types_up_to_rank_8() -> Vec<(&'static str, usize)> {
    let mut v = vec![];
    for n in 1..=8 {
        v.push(("A", n));
    }
    for n in 2..=8 {
        v.push(("B", n));
    }
    for n in 3..=8 {
        v.push(("C", n));
    }
    for n in 4..=8 {
        v.push(("D", n));
    }
    v.extend([("E", 6), ("E", 7), ("E", 8), ("F", 4), ("G", 2)]);
    v
}

#[test]
fn small_type_data() {
    let a1 = RootSystem::build("A", 1).unwrap();
    assert_eq!((a1.num_positive(), a1.rank(), a1.dual_coxeter()), (1, 1, 2));
    assert_eq!(a1.root_norm(&[1]), q(2));

    let g2 = RootSystem::build("G", 2).unwrap();
    assert_eq!((g2.num_positive(), g2.dual_coxeter()), (6, 4));
    let short = g2.positive_roots().iter().map(|r| g2.root_norm(r)).min().unwrap();
    assert_eq!(short, qf(2, 3));

    let a2 = RootSystem::build("A", 2).unwrap();
    assert_eq!(a2.positive_roots(), &[vec![1, 0], vec![0, 1], vec![1, 1]]);
    assert_eq!(a2.dual_coxeter(), 3);
}

#[test]
fn forms() {
    let a1 = RootSystem::build("A", 1).unwrap();
    let alpha = Weight::from_ints(&[1]);
    assert_eq!(a1.normalized_form(&alpha, &alpha), q(2));
    let a2 = RootSystem::build("A", 2).unwrap();
    assert_eq!(a2.normalized_form(&Weight::from_ints(&[1, 0]), &Weight::from_ints(&[0, 1])), q(-1));
    let b2 = RootSystem::build("B", 2).unwrap();
    let short = b2.positive_roots().iter().map(|r| b2.root_norm(r)).min().unwrap();
    assert_eq!(short, q(1));
}

#[test]
fn hvee_identity_examples() {
    let a1 = RootSystem::build("A", 1).unwrap();
    let w = a1.check_hvee_identity(&Weight::from_ints(&[1]));
    assert!(w.holds);
    assert_eq!(w.lhs, Weight::from_ints(&[2]));

    let a2 = RootSystem::build("A", 2).unwrap();
    let w = a2.check_hvee_identity(&Weight::from_ints(&[1, 0]));
    assert!(w.holds);
    assert_eq!(w.lhs, Weight::from_ints(&[3, 0]));

    let g2 = RootSystem::build("G", 2).unwrap();
    for i in 0..2 {
        assert!(g2.check_hvee_identity(&g2.fundamental_weight(i)).holds);
    }
}

#[test]
fn invariants_for_every_type() {
    for (s, n) in all_types_up_to_rank_8() {
        let rs = RootSystem::build(s, n).unwrap();
        // Δ = Δ⁺ ⊔ −Δ⁺.
        assert_eq!(rs.num_roots(), 2 * rs.num_positive());
        for i in 0..rs.num_positive() {
            let neg: Vec<i64> = rs.positive_root(i).iter().map(|x| -x).collect();
            assert!(rs.find_root(&neg).is_some());
        }
        // Long roots have norm 2.
        let max = rs.positive_roots().iter().map(|r| rs.root_norm(r)).max().unwrap();
        assert_eq!(max, q(2), "{s}{n}");
        // Symmetrized Cartan matrix is positive definite.
        let (d, _) = rs.symmetrized_cartan().ldl().unwrap();
        assert!(d.iter().all(|x| *x > q(0)));
        for i in 0..n {
            assert!(rs.check_hvee_identity(&rs.positive_weight(i)).holds, "{s}{n}");
            for j in 0..n {
                let expected = if i == j { q(1) } else { q(0) };
                assert_eq!(rs.pair_coweight(&rs.positive_weight(j), i), expected);
            }
        }
        // Q_l has an even Gram matrix.
        let ql = rs.long_root_lattice_gram();
        for i in 0..n {
            assert!(ql.get(i, i).is_integer() && ql.get(i, i).to_integer() % 2 == 0.into());
        }
    }
}

#[test]
fn invalid_types_name_the_families() {
    for (s, n) in [("A", 0), ("B", 1), ("C", 2), ("D", 3), ("E", 5), ("F", 3), ("G", 3), ("H", 2)] {
        let e = RootSystem::build(s, n).unwrap_err();
        assert!(matches!(e, Error::InvalidType(_)));
        assert!(e.to_string().contains("allowed families"));
    }
}

#[test]
fn coset_test() {
    let a = Weight(vec![qf(1, 3), q(2)]);
    let b = Weight(vec![qf(4, 3), q(-1)]);
    assert!(a.same_coset(&b));
    assert!(!a.same_coset(&Weight(vec![qf(1, 2), q(0)])));
}
