//! Coefficients: polynomials over ℚ in the opaque structure constants `N_{α,β}`.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::rational::{fmt_q, Q};

/// `N_{a,b}` with `a < b` (indices into `Δ`); `N_{b,a} = −N_{a,b}`.
pub type Symbol = (usize, usize);

/// A polynomial in the structure constants. Monomials are sorted symbol lists.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Coeff(BTreeMap<Vec<Symbol>, Q>);

impl Coeff {
    pub fn zero() -> Self {
        Coeff(BTreeMap::new())
    }

    pub fn one() -> Self {
        Self::scalar(Q::one())
    }

    pub fn scalar(c: Q) -> Self {
        let mut m = BTreeMap::new();
        if !c.is_zero() {
            m.insert(vec![], c);
        }
        Coeff(m)
    }

    /// `N_{a,b}` in canonical form.
    pub fn structure_constant(a: usize, b: usize) -> Self {
        assert_ne!(a, b, "N_{{a,a}} is not a structure constant");
        let (key, sign) = if a < b { ((a, b), Q::one()) } else { ((b, a), -Q::one()) };
        let mut m = BTreeMap::new();
        m.insert(vec![key], sign);
        Coeff(m)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_scalar(&self) -> Option<Q> {
        match self.0.len() {
            0 => Some(Q::zero()),
            1 => self.0.get(&vec![]).cloned(),
            _ => None,
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<Symbol>, &Q)> {
        self.0.iter()
    }

    pub fn add_assign(&mut self, o: &Coeff) {
        for (k, v) in &o.0 {
            let e = self.0.entry(k.clone()).or_insert_with(Q::zero);
            *e += v;
            if e.is_zero() {
                self.0.remove(k);
            }
        }
    }

    pub fn add(&self, o: &Coeff) -> Coeff {
        let mut r = self.clone();
        r.add_assign(o);
        r
    }

    pub fn neg(&self) -> Coeff {
        Coeff(self.0.iter().map(|(k, v)| (k.clone(), -v)).collect())
    }

    pub fn scale(&self, s: &Q) -> Coeff {
        if s.is_zero() {
            return Coeff::zero();
        }
        Coeff(self.0.iter().map(|(k, v)| (k.clone(), v * s)).collect())
    }

    pub fn mul(&self, o: &Coeff) -> Coeff {
        let mut r = Coeff::zero();
        for (ka, va) in &self.0 {
            for (kb, vb) in &o.0 {
                let mut k = ka.clone();
                k.extend_from_slice(kb);
                k.sort();
                let e = r.0.entry(k.clone()).or_insert_with(Q::zero);
                *e += va * vb;
                if e.is_zero() {
                    r.0.remove(&k);
                }
            }
        }
        r
    }

    /// Renders symbols through a labelling of `Δ`.
    pub fn render(&self, label: &dyn Fn(usize) -> String) -> String {
        if self.0.is_empty() {
            return "0".into();
        }
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|(k, v)| {
                if k.is_empty() {
                    return fmt_q(v);
                }
                let syms: Vec<String> = k.iter().map(|&(a, b)| format!("N({},{})", label(a), label(b))).collect();
                if v.is_one() {
                    syms.join("*")
                } else if *v == -Q::one() {
                    format!("-{}", syms.join("*"))
                } else {
                    format!("{}*{}", fmt_q(v), syms.join("*"))
                }
            })
            .collect();
        parts.join(" + ")
    }
}

impl fmt::Display for Coeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(&|i| i.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    #[test]
    fn antisymmetry_and_products() {
        let n01 = Coeff::structure_constant(0, 1);
        let n10 = Coeff::structure_constant(1, 0);
        assert!(n01.add(&n10).is_zero());
        let sq = n01.mul(&n10);
        assert_eq!(sq.terms().next().unwrap().1, &q(-1));
        assert_eq!(Coeff::scalar(q(3)).as_scalar(), Some(q(3)));
        assert_eq!(n01.as_scalar(), None);
    }
}
