use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::Arc;

use super::qseries::{min_bound, QSeries};
use super::tail::TailBound;
use crate::bilinear::{Level, ScWeight};
use crate::rational::Q;
use crate::rootsys::Weight;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Af,
    Sc,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Af => "af",
            Side::Sc => "sc",
        })
    }
}

/// Weights that can index a character.
pub trait CharWeight: Clone + Ord + fmt::Display {
    const SIDE: Side;
    /// Coordinates fed to the tail bound: simple-root coordinates for affine
    /// weights, J*-values for superconformal ones.
    fn coords(&self) -> Vec<Q>;
    /// Whether `self − base` lies in the offset group of the character.
    fn same_coset(&self, base: &Self) -> bool;
}

impl CharWeight for Weight {
    const SIDE: Side = Side::Af;

    fn coords(&self) -> Vec<Q> {
        self.0.clone()
    }

    fn same_coset(&self, base: &Self) -> bool {
        Weight::same_coset(self, base)
    }
}

impl CharWeight for ScWeight {
    const SIDE: Side = Side::Sc;

    fn coords(&self) -> Vec<Q> {
        self.jstar_values().to_vec()
    }

    fn same_coset(&self, base: &Self) -> bool {
        self.sub(base).in_q_sc()
    }
}

/// A string function with its recorded minimum exponent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StringFunction {
    pub series: QSeries,
    /// Every exponent of the full (untruncated) function is `≥ floor`.
    pub floor: Option<Q>,
}

impl StringFunction {
    pub fn new(series: QSeries, floor: Option<Q>) -> Self {
        StringFunction { series, floor }
    }

    /// Exact series; the floor is its lowest exponent.
    pub fn exact(series: QSeries) -> Self {
        let floor = series.min_exp().cloned();
        StringFunction { series, floor }
    }
}

#[derive(Clone, Debug)]
pub struct FormalCharacter<W: CharWeight> {
    pub level: Arc<Level>,
    pub base: W,
    pub strings: BTreeMap<W, StringFunction>,
    /// Bound for weights absent from `strings`.
    pub tail: TailBound,
}

pub type AfCharacter = FormalCharacter<Weight>;
pub type ScCharacter = FormalCharacter<ScWeight>;

impl<W: CharWeight> FormalCharacter<W> {
    pub fn new(level: Arc<Level>, base: W) -> Self {
        FormalCharacter { level, base, strings: BTreeMap::new(), tail: TailBound::exact() }
    }

    pub fn side(&self) -> Side {
        W::SIDE
    }

    pub fn insert(&mut self, w: W, s: StringFunction) {
        self.strings.insert(w, s);
    }

    pub fn get(&self, w: &W) -> Option<&StringFunction> {
        self.strings.get(w)
    }

    pub fn is_zero(&self) -> bool {
        self.strings.values().all(|s| s.series.is_zero()) && self.tail.is_exact()
    }

    /// Validity order at an arbitrary weight (`None` is exact).
    pub fn validity_at(&self, w: &W) -> Option<Q> {
        match self.strings.get(w) {
            Some(s) => s.series.validity_bound(),
            None => self.tail.eval(&w.coords()),
        }
    }

    /// Smallest validity order over the listed weights.
    pub fn min_validity(&self) -> Option<Q> {
        self.strings.values().fold(None, |acc, s| min_bound(&acc, &s.series.validity_bound()))
    }

    /// The series at `w`, as the zero series with the tail validity if absent.
    pub fn series_at(&self, w: &W) -> QSeries {
        match self.strings.get(w) {
            Some(s) => s.series.clone(),
            None => match self.tail.eval(&w.coords()) {
                Some(t) => QSeries::zero_to(t),
                None => QSeries::zero(),
            },
        }
    }

    /// Removes weights whose series is the exact zero.
    pub fn prune(&mut self) {
        self.strings.retain(|_, s| !(s.series.is_zero() && s.series.is_exact()));
    }
}

/// Per-weight difference on the common certified range.
#[derive(Clone, Debug)]
pub struct WeightDiff<W> {
    pub weight: W,
    pub certified_to: Option<Q>,
    pub diff: QSeries,
}

/// Compares two characters at every weight either lists, up to the smaller of
/// their validity orders there; only nonzero differences are returned.
pub fn compare_characters<W: CharWeight>(a: &FormalCharacter<W>, b: &FormalCharacter<W>) -> Vec<WeightDiff<W>> {
    let weights: BTreeSet<&W> = a.strings.keys().chain(b.strings.keys()).collect();
    let mut out = vec![];
    for w in weights {
        let va = a.validity_at(w);
        let vb = b.validity_at(w);
        let t = min_bound(&va, &vb);
        let diff = a.series_at(w).difference_up_to(&b.series_at(w), t.as_ref());
        if !diff.is_zero() {
            out.push(WeightDiff { weight: w.clone(), certified_to: t, diff });
        }
    }
    out
}

/// Lowest validity order among the weights either character lists; `None`
/// when everything compared is exact.
pub fn common_certified_order<W: CharWeight>(a: &FormalCharacter<W>, b: &FormalCharacter<W>) -> Option<Q> {
    let mut t: Option<Q> = None;
    for w in a.strings.keys().chain(b.strings.keys()) {
        t = min_bound(&t, &min_bound(&a.validity_at(w), &b.validity_at(w)));
    }
    t
}

/// The lowest recorded floor, used to size lattice enumerations.
pub fn lowest_floor<W: CharWeight>(ch: &FormalCharacter<W>) -> Option<Q> {
    ch.strings.values().filter_map(|s| s.floor.clone()).min()
}
