mod common;

use cosetlab::charflow::*;
use cosetlab::lattice::{build_l_minus, build_l_plus, f_af, g_af_plus, LatticeVector, Sign};
use cosetlab::ope::{Field, FreeFields};
use cosetlab::rational::{q, qf};
use cosetlab::rootsys::{RootSystem, Weight};
use cosetlab::Q;
use proptest::prelude::*;

const TYPES: [(&str, usize); 6] = [("A", 1), ("A", 2), ("A", 3), ("B", 2), ("C", 3), ("G", 2)];

fn rat() -> impl Strategy<Value = Q> {
    (-12i64..=12, 1i64..=6).prop_map(|(a, b)| qf(a, b))
}

fn series() -> impl Strategy<Value = QSeries> {
    (prop::collection::vec((0i64..=16, -4i64..=4), 0..6), prop::option::of(8i64..=20)).prop_map(|(terms, v)| {
        let v = v.map(|x| qf(x, 4));
        let terms: Vec<(Q, Q)> = terms
            .into_iter()
            .map(|(e, c)| (qf(e, 4), q(c)))
            .filter(|(e, _)| v.as_ref().is_none_or(|v| e <= v))
            .collect();
        QSeries::from_terms(terms, v)
    })
}

fn cap(xs: &[&QSeries]) -> Option<Q> {
    xs.iter().fold(None, |acc, s| min_bound(&acc, &s.validity_bound()))
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, ..ProptestConfig::default() })]

    #[test]
    fn qseries_ring_laws(a in series(), b in series(), c in series()) {
        let t = cap(&[&a, &b, &c]);
        prop_assert!(a.mul(&b).mul(&c).agrees_up_to(&a.mul(&b.mul(&c)), t.as_ref()));
        prop_assert!(a.mul(&b.add(&c)).agrees_up_to(&a.mul(&b).add(&a.mul(&c)), t.as_ref()));
        prop_assert!(a.mul(&b).agrees_up_to(&b.mul(&a), t.as_ref()));
    }

    #[test]
    fn product_validity_is_never_optimistic(a in series(), b in series(), cut in 4i64..=16) {
        // Truncating the exact operands must not change the product below its recorded validity.
        let full = QSeries::from_terms(a.terms().map(|(e, c)| (e.clone(), c.clone())), None)
            .mul(&QSeries::from_terms(b.terms().map(|(e, c)| (e.clone(), c.clone())), None));
        let t = qf(cut, 4);
        let ta = QSeries::from_terms(a.terms().map(|(e, c)| (e.clone(), c.clone())), None).truncate(&t);
        let tb = QSeries::from_terms(b.terms().map(|(e, c)| (e.clone(), c.clone())), None).truncate(&t);
        let p = ta.mul(&tb);
        prop_assert!(p.agrees_up_to(&full, p.validity()));
    }

    #[test]
    fn eta_inverse(m in 1i64..=6, t in 0i64..=40) {
        let t = qf(t, 4);
        let p = eta_power(m, &t).mul(&eta_power(-m, &t));
        prop_assert!(p.agrees_up_to(&QSeries::one(), p.validity()));
    }

    #[test]
    fn eta_recomputation_is_stable(m in -4i64..=4, t1 in 0i64..=20, extra in 1i64..=20) {
        let lo = eta_power(m, &qf(t1, 2));
        let hi = eta_power(m, &qf(t1 + extra, 2));
        prop_assert!(lo.agrees_up_to(&hi, lo.validity()));
    }

    #[test]
    fn normalized_form_is_symmetric_and_bilinear(ti in 0usize..6, a in prop::collection::vec(rat(), 3), b in prop::collection::vec(rat(), 3), s in rat()) {
        let (ty, n) = TYPES[ti];
        let rs = RootSystem::build(ty, n).unwrap();
        let x = Weight(a[..n.min(3)].iter().cloned().chain(std::iter::repeat(q(0))).take(n).collect());
        let y = Weight(b[..n.min(3)].iter().cloned().chain(std::iter::repeat(q(1))).take(n).collect());
        prop_assert_eq!(rs.normalized_form(&x, &y), rs.normalized_form(&y, &x));
        prop_assert_eq!(rs.normalized_form(&x.scale(&s).add(&y), &y), &s * rs.normalized_form(&x, &y) + rs.normalized_form(&y, &y));
    }

    #[test]
    fn f_norm_cancellation(ti in 0usize..6, a in prop::collection::vec(-3i64..=3, 3), b in prop::collection::vec(-3i64..=3, 3)) {
        let (ty, n) = TYPES[ti];
        let rs = RootSystem::build(ty, n).unwrap();
        let ga = Weight::from_ints(&a[..n.min(3)].iter().copied().chain(std::iter::repeat(1)).take(n).collect::<Vec<_>>());
        let gb = Weight::from_ints(&b[..n.min(3)].iter().copied().chain(std::iter::repeat(0)).take(n).collect::<Vec<_>>());
        let lp = build_l_plus(&rs);
        let lm = build_l_minus(&rs);
        let (pa, pb) = (f_af(&rs, &ga, Sign::Plus).unwrap(), f_af(&rs, &gb, Sign::Plus).unwrap());
        let (ma, mb) = (f_af(&rs, &ga, Sign::Minus).unwrap(), f_af(&rs, &gb, Sign::Minus).unwrap());
        prop_assert_eq!(lp.inner(&pa.0, &pb.0) + lm.inner(&ma.0, &mb.0), 0);
        prop_assert_eq!(g_af_plus(&rs, &pa), ga);
    }

    #[test]
    fn sc_af_roundtrip(ti in 0usize..6, k in prop::sample::select(vec![qf(1, 1), qf(2, 1), qf(1, 2), qf(5, 3), qf(-1, 3)]), a in prop::collection::vec(rat(), 3)) {
        let (ty, n) = TYPES[ti];
        let rs = RootSystem::build(ty, n).unwrap();
        let lv = cosetlab::bilinear::Level::new(&rs, k).unwrap();
        let mu = Weight(a.iter().cloned().chain(std::iter::repeat(q(0))).take(n).collect());
        prop_assert_eq!(lv.sc_weight_to_af(&lv.weight_to_sc(&mu)), mu.clone());
        prop_assert_eq!(lv.conformal_weight_minus(&lv.weight_to_sc(&mu)), lv.conformal_weight_plus(&mu));
    }

    #[test]
    fn q_sc_membership_is_l_plus_invariant(ti in 0usize..6, j in prop::collection::vec(-5i64..=5, 12), xi in prop::collection::vec(-3i64..=3, 12)) {
        let (ty, n) = TYPES[ti];
        let rs = RootSystem::build(ty, n).unwrap();
        let lv = cosetlab::bilinear::Level::new(&rs, qf(7, 3)).unwrap();
        let np = rs.num_positive();
        let base = lv.sc_from_jstar(j.iter().take(np).map(|&x| q(x)).collect());
        let half = lv.sc_from_jstar((0..np).map(|i| if i == 0 { qf(1, 2) } else { q(0) }).collect());
        let v = LatticeVector(xi.iter().copied().cycle().take(np).collect());
        prop_assert!(base.add(&lv.g_sc_plus(&v)).in_q_sc());
        prop_assert!(!base.add(&half).add(&lv.g_sc_plus(&v)).in_q_sc());
    }

    #[test]
    fn ope_is_bilinear(a in prop::collection::vec(-3i64..=3, 5), b in prop::collection::vec(-3i64..=3, 5), e in prop::collection::vec(-1i64..=1, 5), s in rat()) {
        let rs = RootSystem::build("A", 2).unwrap();
        let ff = FreeFields::new(&cosetlab::bilinear::Level::new(&rs, q(2)).unwrap());
        let t = ff.table();
        let ba = ff.boson(&a.iter().map(|&x| q(x)).collect::<Vec<_>>());
        let bb = ff.boson(&b.iter().map(|&x| q(x)).collect::<Vec<_>>());
        let ex = Field::exponential(e.clone());
        let lhs = t.ope(&ba.scale(&s).add(&bb), &ex, 0).unwrap();
        let r1 = t.ope(&ba, &ex, 0).unwrap();
        let r2 = t.ope(&bb, &ex, 0).unwrap();
        for n in 1..=2u32 {
            let zero = Field::zero(ff.dim());
            let want = r1.pole(n).unwrap_or(&zero).scale(&s).add(r2.pole(n).unwrap_or(&zero));
            prop_assert_eq!(lhs.pole(n).cloned().unwrap_or(zero), want);
        }
        prop_assert!(lhs.max_pole() <= 1);
        // e^ξ e^η has pole order at most −⟨ξ,η⟩.
        let e2: Vec<i64> = b.iter().map(|x| x.signum()).collect();
        let r = t.ope(&ex, &Field::exponential(e2.clone()), 0).unwrap();
        let ip = t.lattice().inner(&e, &e2);
        prop_assert!(i64::from(r.max_pole()) <= (-ip).max(0));
        prop_assert!(t.skew_check(&ex, &Field::exponential(e2)).unwrap().holds);
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 16, ..ProptestConfig::default() })]

    #[test]
    fn cf2_roundtrip_random_seeds(seed in any::<u64>(), which in 0usize..3, k in 1i64..=2) {
        let (ty, n) = [("A", 1), ("A", 2), ("B", 2)][which];
        let lv = common::level(ty, n, q(k));
        let base = Weight::zero(n);
        let ch = common::random_seed(&lv, &base, &mut common::rng(seed));
        let r = roundtrip_check(&ch, &base, &q(10)).unwrap();
        prop_assert!(r.holds, "{:?}", r.diffs);
        prop_assert_eq!(r.terms_certified, r.seed_terms);
    }

    #[test]
    fn sc_flows_compose(seed in any::<u64>(), a in prop::collection::vec(-1i64..=1, 2), b in prop::collection::vec(-1i64..=1, 2)) {
        let lv = common::level("A", 2, q(1));
        let base = Weight::zero(2);
        let ch = common::random_seed(&lv, &base, &mut common::rng(seed));
        let m = fermionize_character(&ch, &base, &q(4)).unwrap();
        let (ga, gb) = (Weight::from_ints(&a), Weight::from_ints(&b));
        let two = spectral_flow_sc(&spectral_flow_sc(&m, &ga).unwrap(), &gb).unwrap();
        let one = spectral_flow_sc(&m, &ga.add(&gb)).unwrap();
        prop_assert_eq!(&two.strings, &one.strings);
        let back = spectral_flow_sc(&one, &ga.add(&gb).scale(&q(-1))).unwrap();
        prop_assert_eq!(&back.strings, &m.strings);
    }

    #[test]
    fn af_flows_compose(seed in any::<u64>(), a in prop::collection::vec(-1i64..=1, 3), b in prop::collection::vec(-1i64..=1, 3)) {
        let lv = common::level("A", 2, q(2));
        let base = Weight::zero(2);
        let ch = common::random_seed(&lv, &base, &mut common::rng(seed));
        let (ga, gb) = (lv.sc_from_jstar(a.iter().map(|&x| q(x)).collect()), lv.sc_from_jstar(b.iter().map(|&x| q(x)).collect()));
        let two = spectral_flow_af(&spectral_flow_af(&ch, &ga).unwrap(), &gb).unwrap();
        let one = spectral_flow_af(&ch, &ga.add(&gb)).unwrap();
        prop_assert_eq!(&two.strings, &one.strings);
        prop_assert_eq!(&spectral_flow_af(&one, &ga.add(&gb).neg()).unwrap().strings, &ch.strings);
    }
}
