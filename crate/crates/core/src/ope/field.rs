//! Free-field expressions: affine word ⊗ boson monomial ⊗ lattice exponential.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::coeff::Coeff;
use crate::rational::{fmt_q, q, Q};

/// Generators of the affine vertex algebra: `X_α` (α ∈ Δ by index) and
/// the Cartan currents `H_{α_i}` of the simple roots.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AffineSym {
    Root(usize),
    Cartan(usize),
}

/// A normally ordered affine word; each letter carries a derivative order.
pub type Word = Vec<(AffineSym, u32)>;

/// Sorted list of `∂^d b_i` factors, `i` indexing the combined boson basis.
pub type Mono = Vec<(usize, u32)>;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TermKey {
    pub word: Word,
    pub bosons: Mono,
    pub exp: Vec<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Field {
    dim: usize,
    terms: BTreeMap<TermKey, Coeff>,
}

impl Field {
    pub fn zero(dim: usize) -> Self {
        Field { dim, terms: BTreeMap::new() }
    }

    pub fn identity(dim: usize) -> Self {
        Self::monomial(dim, vec![], vec![], vec![0; dim], Coeff::one())
    }

    pub fn monomial(dim: usize, word: Word, mut bosons: Mono, exp: Vec<i64>, c: Coeff) -> Self {
        assert_eq!(exp.len(), dim);
        bosons.sort();
        let mut f = Field::zero(dim);
        f.add_term(TermKey { word, bosons, exp }, &c);
        f
    }

    pub fn affine(dim: usize, sym: AffineSym) -> Self {
        Self::monomial(dim, vec![(sym, 0)], vec![], vec![0; dim], Coeff::one())
    }

    /// `b_v = Σ v_i b_i`.
    pub fn boson(dim: usize, v: &[Q]) -> Self {
        let mut f = Field::zero(dim);
        for (i, c) in v.iter().enumerate() {
            if !c.is_zero() {
                f.add_term(TermKey { word: vec![], bosons: vec![(i, 0)], exp: vec![0; dim] }, &Coeff::scalar(c.clone()));
            }
        }
        f
    }

    pub fn exponential(exp: Vec<i64>) -> Self {
        let dim = exp.len();
        Self::monomial(dim, vec![], vec![], exp, Coeff::one())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn terms(&self) -> impl Iterator<Item = (&TermKey, &Coeff)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, key: TermKey, c: &Coeff) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(key.clone()).or_default();
        e.add_assign(c);
        if e.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn add_assign(&mut self, o: &Field) {
        for (k, c) in &o.terms {
            self.add_term(k.clone(), c);
        }
    }

    pub fn add(&self, o: &Field) -> Field {
        let mut r = self.clone();
        r.add_assign(o);
        r
    }

    pub fn sub(&self, o: &Field) -> Field {
        self.add(&o.scale(&-Q::one()))
    }

    pub fn scale(&self, s: &Q) -> Field {
        self.scale_coeff(&Coeff::scalar(s.clone()))
    }

    pub fn scale_coeff(&self, s: &Coeff) -> Field {
        let mut r = Field::zero(self.dim);
        for (k, c) in &self.terms {
            r.add_term(k.clone(), &c.mul(s));
        }
        r
    }

    /// Normally ordered product of fields living in different tensor factors:
    /// at most one side may carry an affine word, at most one a nonzero exponential.
    pub fn tensor(&self, o: &Field) -> Field {
        let mut r = Field::zero(self.dim);
        for (ka, ca) in &self.terms {
            for (kb, cb) in &o.terms {
                assert!(ka.word.is_empty() || kb.word.is_empty(), "tensor of two affine words");
                assert!(
                    ka.exp.iter().all(|&x| x == 0) || kb.exp.iter().all(|&x| x == 0),
                    "tensor of two exponentials"
                );
                let word = if ka.word.is_empty() { kb.word.clone() } else { ka.word.clone() };
                let mut bosons = ka.bosons.clone();
                bosons.extend_from_slice(&kb.bosons);
                bosons.sort();
                let exp = ka.exp.iter().zip(&kb.exp).map(|(a, b)| a + b).collect();
                r.add_term(TermKey { word, bosons, exp }, &ca.mul(cb));
            }
        }
        r
    }

    /// `∂`, with `∂ e^ξ = b_ξ e^ξ`.
    pub fn derivative(&self) -> Field {
        let mut r = Field::zero(self.dim);
        for (k, c) in &self.terms {
            for i in 0..k.word.len() {
                let mut key = k.clone();
                key.word[i].1 += 1;
                r.add_term(key, c);
            }
            for i in 0..k.bosons.len() {
                let mut key = k.clone();
                key.bosons[i].1 += 1;
                key.bosons.sort();
                r.add_term(key, c);
            }
            for (i, &x) in k.exp.iter().enumerate() {
                if x != 0 {
                    let mut key = k.clone();
                    key.bosons.push((i, 0));
                    key.bosons.sort();
                    r.add_term(key, &c.scale(&q(x)));
                }
            }
        }
        r
    }

    pub fn derivative_n(&self, n: u32) -> Field {
        (0..n).fold(self.clone(), |f, _| f.derivative())
    }

    /// `Some(odd)` if every term has the same parity `⟨ξ,ξ⟩ mod 2`.
    pub fn parity(&self, norm: &dyn Fn(&[i64]) -> i64) -> Option<bool> {
        let mut it = self.terms.keys().map(|k| norm(&k.exp).rem_euclid(2) == 1);
        let first = it.next().unwrap_or(false);
        if it.all(|p| p == first) { Some(first) } else { None }
    }

    /// Maximum over terms of the affine letter count, a crude size measure.
    pub fn max_word_len(&self) -> usize {
        self.terms.keys().map(|k| k.word.len()).max().unwrap_or(0)
    }

    pub fn render(&self, names: &FieldNames) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(k, c)| {
                let mut factors = Vec::new();
                for (s, d) in &k.word {
                    factors.push(format!("{}{}", (names.affine)(*s), primes(*d)));
                }
                for (i, d) in &k.bosons {
                    factors.push(format!("b[{}]{}", (names.boson)(*i), primes(*d)));
                }
                if k.exp.iter().any(|&x| x != 0) {
                    let e: Vec<String> = k.exp.iter().map(|x| x.to_string()).collect();
                    factors.push(format!("e^[{}]", e.join(",")));
                }
                let body = if factors.is_empty() { "1".to_string() } else { factors.join(" ") };
                let coeff = c.render(&*names.root);
                match c.as_scalar() {
                    Some(s) if s.is_one() => body,
                    Some(s) => format!("{} {}", fmt_q(&s), body),
                    None => format!("({coeff}) {body}"),
                }
            })
            .collect();
        parts.join(" + ")
    }
}

fn primes(d: u32) -> String {
    "'".repeat(d as usize)
}

/// Labelling used when printing fields.
pub struct FieldNames {
    pub affine: Box<dyn Fn(AffineSym) -> String>,
    pub boson: Box<dyn Fn(usize) -> String>,
    pub root: Box<dyn Fn(usize) -> String>,
}
