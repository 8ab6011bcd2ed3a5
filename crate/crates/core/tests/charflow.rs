mod common;

use common::{level, random_seed, rng};
use cosetlab::charflow::*;
use cosetlab::lattice::{build_l_plus, enumerate_by_norm, kernel_k, LatticeVector};
use cosetlab::rational::{q, qf};
use cosetlab::rootsys::Weight;

#[test]
fn eta_inverse_pairs() {
    for m in 1..=6 {
        let p = eta_power(m, &q(12)).mul(&eta_power(-m, &q(12)));
        let v = p.validity().cloned();
        assert!(p.agrees_up_to(&QSeries::one(), v.as_ref()), "m = {m}");
    }
}

#[test]
fn a2_delta_fermionize_matches_kernel_enumeration() {
    let lv = level("A", 2, q(1));
    let ch = delta_character(&lv, Weight::zero(2), q(0), q(1));
    let f = fermionize_character(&ch, &Weight::zero(2), &q(3)).unwrap();
    // Oracle: kernel vectors of norm ≤ 6 (pulled back into L⁺), each carrying q^{|ξ|²/2} η^{-1}.
    let k = kernel_k(lv.rs());
    let kern = enumerate_by_norm(&k.lattice, &q(6)).unwrap();
    assert_eq!(f.strings.len(), kern.len());
    let eta = eta_power(-1, &q(3));
    for v in kern {
        let mut xi = LatticeVector::zero(3);
        for (b, &c) in k.embedding.iter().zip(&v.0) {
            xi = xi.add(&b.scale(c));
        }
        let norm = build_l_plus(lv.rs()).norm(&xi.0);
        let s = &f.strings[&lv.g_sc_plus(&xi)];
        let expected = eta.shift(&qf(norm, 2)).truncate(&q(3));
        assert!(s.series.agrees_up_to(&expected, Some(&q(3))), "{xi}");
        assert_eq!(s.series.validity(), Some(&q(3)));
    }
}

#[test]
fn roundtrip_of_alpha_seed_a1() {
    let lv = level("A", 1, q(1));
    let ch = delta_character(&lv, Weight::from_ints(&[1]), q(0), q(1));
    let f = fermionize_character(&ch, &Weight::zero(1), &q(10)).unwrap();
    let back = defermionize_character(&f, &lv.sc_zero(), &q(10)).unwrap();
    let s = &back.strings[&Weight::from_ints(&[1])];
    assert_eq!(s.series.num_terms(), 1);
    assert_eq!(s.series.coefficient(&q(0)), q(1));
}

#[test]
fn random_roundtrips() {
    for (series, rank) in [("A", 1), ("A", 2)] {
        for k in [1, 2] {
            let lv = level(series, rank, q(k));
            let mut r = rng(1000 * rank as u64 + k as u64);
            for _ in 0..10 {
                let mu = Weight::zero(rank);
                let seed = random_seed(&lv, &mu, &mut r);
                let rep = roundtrip_check(&seed, &mu, &q(10)).unwrap();
                assert!(rep.holds, "{series}{rank} k={k}: {:?}", rep.diffs);
                assert_eq!(rep.terms_certified, rep.seed_terms);
            }
        }
    }
}

#[test]
fn roundtrip_at_shifted_mu() {
    let lv = level("A", 2, q(2));
    let mut r = rng(77);
    let base = Weight(vec![qf(1, 3), qf(2, 3)]);
    let seed = random_seed(&lv, &base, &mut r);
    let mu = base.add(&Weight::from_ints(&[1, -1]));
    assert!(roundtrip_check(&seed, &mu, &q(8)).unwrap().holds);
}

fn heights_up_to(rank: usize, h: i64) -> Vec<Weight> {
    let mut out = vec![];
    let mut v = vec![-h; rank];
    loop {
        if v.iter().map(|x: &i64| x.abs()).sum::<i64>() <= h {
            out.push(Weight::from_ints(&v));
        }
        let mut i = 0;
        loop {
            if i == rank {
                return out;
            }
            v[i] += 1;
            if v[i] <= h {
                break;
            }
            v[i] = -h;
            i += 1;
        }
    }
}

#[test]
fn cflemma_small_gammas() {
    for (series, rank) in [("A", 1), ("A", 2), ("B", 2)] {
        let lv = level(series, rank, q(1));
        let mut r = rng(5 + rank as u64);
        let mu = Weight::zero(rank);
        let seed = random_seed(&lv, &mu, &mut r);
        for g in heights_up_to(rank, 3) {
            let rep = cflemma_check(&seed, &g, &mu, &q(6), 9).unwrap();
            assert!(rep.holds, "{series}{rank} gamma={g}");
            assert_eq!(rep.members.len(), 1);
            assert_eq!(rep.members[0].exponent, q(0));
        }
    }
}

#[test]
fn cflemma_theta_a2() {
    let lv = level("A", 2, q(1));
    let mut r = rng(9);
    let seed = random_seed(&lv, &Weight::zero(2), &mut r);
    let rep = cflemma_check(&seed, &Weight::from_ints(&[1, 1]), &Weight::zero(2), &q(6), 4).unwrap();
    assert!(rep.holds);
    assert_eq!(rep.members[0].xi.0, vec![1, 1, 0]);
}

#[test]
fn sc_flow_equivariance_and_composition_a2() {
    let lv = level("A", 2, q(1));
    let mut r = rng(21);
    let seed = random_seed(&lv, &Weight::zero(2), &mut r);
    let lam = Weight::zero(2);
    let gammas = [vec![1, 0], vec![0, 1], vec![1, 1], vec![2, 0], vec![0, 2]];
    for g in gammas.iter().map(|g| Weight::from_ints(g)) {
        let direct = fermionize_character(&seed, &lam.sub(&g), &q(8)).unwrap();
        let flowed = spectral_flow_sc(&fermionize_character(&seed, &lam, &q(8)).unwrap(), &g).unwrap();
        assert!(compare_characters(&direct, &flowed).is_empty(), "gamma={g}");
        assert!(CharWeight::same_coset(&direct.base, &flowed.base));
    }
    let m = fermionize_character(&seed, &lam, &q(8)).unwrap();
    let a1 = Weight::from_ints(&[1, 0]);
    let a2 = Weight::from_ints(&[0, 1]);
    let two = spectral_flow_sc(&spectral_flow_sc(&m, &a1).unwrap(), &a2).unwrap();
    let one = spectral_flow_sc(&m, &a1.add(&a2)).unwrap();
    assert_eq!(two.strings, one.strings);
}

#[test]
fn af_flow_equivariance_a2() {
    for k in [1, 2] {
        let lv = level("A", 2, q(k));
        let mut r = rng(31 + k as u64);
        let seed = random_seed(&lv, &Weight::zero(2), &mut r);
        let m = fermionize_character(&seed, &Weight::zero(2), &q(8)).unwrap();
        let lam = lv.sc_zero();
        let e = |i: usize| {
            let mut v = vec![0; 3];
            v[i] = 1;
            lv.g_sc_plus(&LatticeVector(v))
        };
        for g in [e(0), e(1), e(0).add(&e(1)), e(0).add(&e(0)), e(2)] {
            let direct = defermionize_character(&m, &lam.add(&g), &q(8)).unwrap();
            let flowed = spectral_flow_af(&defermionize_character(&m, &lam, &q(8)).unwrap(), &g).unwrap();
            let d = compare_characters(&direct, &flowed);
            assert!(d.is_empty(), "k={k} gamma={g}: {:?}", d.first());
        }
        let base = defermionize_character(&m, &lam, &q(8)).unwrap();
        let two = spectral_flow_af(&spectral_flow_af(&base, &e(0)).unwrap(), &e(1)).unwrap();
        let one = spectral_flow_af(&base, &e(0).add(&e(1))).unwrap();
        assert_eq!(two.strings, one.strings);
    }
}

#[test]
fn flows_are_invertible() {
    let lv = level("A", 2, q(1));
    let mut r = rng(41);
    let seed = random_seed(&lv, &Weight::zero(2), &mut r);
    let m = fermionize_character(&seed, &Weight::zero(2), &q(6)).unwrap();
    let g = Weight::from_ints(&[1, 2]);
    let back = spectral_flow_sc(&spectral_flow_sc(&m, &g).unwrap(), &g.scale(&q(-1))).unwrap();
    assert_eq!(back.strings, m.strings);
    assert_eq!(back.base, m.base);
}

#[test]
fn seed_json_roundtrip() {
    let lv = level("A", 2, q(2));
    let mut r = rng(3);
    let seed = random_seed(&lv, &Weight::zero(2), &mut r);
    let doc = emit_character(&seed);
    let text = serde_json::to_string(&doc).unwrap();
    let back = validate_seed(&SeedDoc::from_json(&text).unwrap()).unwrap();
    assert_eq!(back.strings, seed.strings);
}
