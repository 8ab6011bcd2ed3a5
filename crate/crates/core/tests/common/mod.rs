#![allow(dead_code)]

use std::sync::Arc;

use cosetlab::bilinear::Level;
use cosetlab::charflow::{AfCharacter, QSeries, StringFunction};
use cosetlab::rational::{q, qf};
use cosetlab::rootsys::{RootSystem, Weight};
use cosetlab::Q;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

pub fn level(series: &str, rank: usize, k: Q) -> Arc<Level> {
    Arc::new(Level::new(&RootSystem::build(series, rank).unwrap(), k).unwrap())
}

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

/// A finitely supported seed around `base`: up to five weights in a box of
/// radius 2, each with one to three integer-coefficient terms on a quarter grid.
pub fn random_seed(lv: &Arc<Level>, base: &Weight, rng: &mut StdRng) -> AfCharacter {
    let l = lv.rs().rank();
    let mut ch = AfCharacter::new(lv.clone(), base.clone());
    let count = rng.gen_range(1..=5);
    for _ in 0..count {
        let off: Vec<i64> = (0..l).map(|_| rng.gen_range(-2..=2)).collect();
        let w = base.add(&Weight::from_ints(&off));
        let floor = qf(rng.gen_range(0..=4), 4);
        let mut s = QSeries::zero();
        for _ in 0..rng.gen_range(1..=3) {
            let e = &floor + qf(rng.gen_range(0..=12), 4);
            let c = q(rng.gen_range(-3..=5));
            s.add_term(e, c);
        }
        ch.insert(w, StringFunction::new(s, Some(floor)));
    }
    ch
}
