//! Truncated series in rational powers of `q` with a validity order.
//!
//! A series with validity `T` is correct for every exponent `≤ T`; nothing
//! is stored above `T`. A series without validity is exact (a finite sum).

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::rational::{fmt_q, Q};

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct QSeries {
    coeffs: BTreeMap<Q, Q>,
    validity: Option<Q>,
}

/// `min` where `None` is `+∞`.
pub fn min_bound(a: &Option<Q>, b: &Option<Q>) -> Option<Q> {
    match (a, b) {
        (None, x) | (x, None) => x.clone(),
        (Some(x), Some(y)) => Some(if x < y { x.clone() } else { y.clone() }),
    }
}

/// `a + b` where `None` is `+∞`.
pub fn add_bound(a: &Option<Q>, b: &Option<Q>) -> Option<Q> {
    match (a, b) {
        (Some(x), Some(y)) => Some(x + y),
        _ => None,
    }
}

impl QSeries {
    pub fn zero() -> Self {
        QSeries::default()
    }

    /// Zero, known only up to `T`.
    pub fn zero_to(t: Q) -> Self {
        QSeries { coeffs: BTreeMap::new(), validity: Some(t) }
    }

    pub fn one() -> Self {
        Self::monomial(Q::zero(), Q::one())
    }

    pub fn monomial(exp: Q, coef: Q) -> Self {
        let mut s = QSeries::zero();
        s.add_term(exp, coef);
        s
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Q, Q)>, validity: Option<Q>) -> Self {
        let mut s = QSeries { coeffs: BTreeMap::new(), validity: None };
        for (e, c) in terms {
            s.add_term(e, c);
        }
        s.validity = validity;
        s.enforce_validity();
        s
    }

    fn enforce_validity(&mut self) {
        if let Some(t) = &self.validity {
            let above: Vec<Q> = self.coeffs.range((std::ops::Bound::Excluded(t.clone()), std::ops::Bound::Unbounded)).map(|(e, _)| e.clone()).collect();
            for e in above {
                self.coeffs.remove(&e);
            }
        }
    }

    pub fn add_term(&mut self, exp: Q, coef: Q) {
        if coef.is_zero() {
            return;
        }
        if let Some(t) = &self.validity {
            if exp > *t {
                return;
            }
        }
        let e = self.coeffs.entry(exp.clone()).or_insert_with(Q::zero);
        *e += coef;
        if e.is_zero() {
            self.coeffs.remove(&exp);
        }
    }

    pub fn validity(&self) -> Option<&Q> {
        self.validity.as_ref()
    }

    pub fn validity_bound(&self) -> Option<Q> {
        self.validity.clone()
    }

    pub fn is_exact(&self) -> bool {
        self.validity.is_none()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Q, &Q)> {
        self.coeffs.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coefficient(&self, exp: &Q) -> Q {
        self.coeffs.get(exp).cloned().unwrap_or_else(Q::zero)
    }

    pub fn min_exp(&self) -> Option<&Q> {
        self.coeffs.keys().next()
    }

    /// Lowest exponent that could carry a nonzero coefficient: the first stored
    /// exponent, else the validity order (`None` for the exact zero series).
    pub fn lower_bound(&self) -> Option<Q> {
        self.coeffs.keys().next().cloned().or_else(|| self.validity.clone())
    }

    /// `(offset, D)`: every exponent lies in `offset + ℤ/D`.
    pub fn grid(&self) -> Option<(Q, BigInt)> {
        let first = self.coeffs.keys().next()?.clone();
        let d = self.coeffs.keys().fold(BigInt::one(), |acc, e| acc.lcm((e - &first).denom()));
        Some((first, d))
    }

    /// Drops everything above `t` and lowers the validity to `t` if needed.
    pub fn truncate(&self, t: &Q) -> QSeries {
        let validity = min_bound(&self.validity, &Some(t.clone()));
        QSeries::from_terms(self.coeffs.iter().map(|(e, c)| (e.clone(), c.clone())), validity)
    }

    pub fn with_validity(mut self, v: Option<Q>) -> QSeries {
        self.validity = min_bound(&self.validity, &v);
        self.enforce_validity();
        self
    }

    pub fn neg(&self) -> QSeries {
        self.scale(&-Q::one())
    }

    pub fn scale(&self, s: &Q) -> QSeries {
        if s.is_zero() {
            return QSeries { coeffs: BTreeMap::new(), validity: self.validity.clone() };
        }
        QSeries { coeffs: self.coeffs.iter().map(|(e, c)| (e.clone(), c * s)).collect(), validity: self.validity.clone() }
    }

    /// Multiplication by `q^s`.
    pub fn shift(&self, s: &Q) -> QSeries {
        QSeries {
            coeffs: self.coeffs.iter().map(|(e, c)| (e + s, c.clone())).collect(),
            validity: self.validity.as_ref().map(|v| v + s),
        }
    }

    pub fn add(&self, o: &QSeries) -> QSeries {
        let validity = min_bound(&self.validity, &o.validity);
        let terms = self.coeffs.iter().chain(o.coeffs.iter()).map(|(e, c)| (e.clone(), c.clone()));
        QSeries::from_terms(terms, validity)
    }

    pub fn sub(&self, o: &QSeries) -> QSeries {
        self.add(&o.neg())
    }

    /// Product; valid up to `min(v_a + lb_b, v_b + lb_a)`.
    pub fn mul(&self, o: &QSeries) -> QSeries {
        self.mul_capped(o, None)
    }

    /// Product, additionally truncated at `cap`.
    pub fn mul_capped(&self, o: &QSeries, cap: Option<&Q>) -> QSeries {
        let va = add_bound(&self.validity, &o.lower_bound());
        let vb = add_bound(&o.validity, &self.lower_bound());
        let mut validity = min_bound(&va, &vb);
        // Products with an exact zero are exactly zero.
        if (self.is_zero() && self.is_exact()) || (o.is_zero() && o.is_exact()) {
            validity = None;
        }
        if let Some(c) = cap {
            validity = min_bound(&validity, &Some(c.clone()));
        }
        let mut out = QSeries { coeffs: BTreeMap::new(), validity };
        for (ea, ca) in &self.coeffs {
            for (eb, cb) in &o.coeffs {
                let e = ea + eb;
                if let Some(v) = &out.validity {
                    if e > *v {
                        break;
                    }
                }
                out.add_term(e, ca * cb);
            }
        }
        out
    }

    /// Coefficientwise agreement on exponents `≤ t` (all exponents when `t` is `None`).
    pub fn agrees_up_to(&self, o: &QSeries, t: Option<&Q>) -> bool {
        self.difference_up_to(o, t).is_zero()
    }

    pub fn difference_up_to(&self, o: &QSeries, t: Option<&Q>) -> QSeries {
        let d = self.sub(o);
        let mut out = QSeries::zero();
        for (e, c) in d.terms() {
            if t.is_none_or(|t| e <= t) {
                out.add_term(e.clone(), c.clone());
            }
        }
        out
    }
}

impl fmt::Display for QSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            f.write_str("0")?;
        } else {
            let parts: Vec<String> = self.coeffs.iter().map(|(e, c)| format!("{}*q^{}", fmt_q(c), fmt_q(e))).collect();
            f.write_str(&parts.join(" + "))?;
        }
        match &self.validity {
            Some(v) => write!(f, " + O(q^>{})", fmt_q(v)),
            None => Ok(()),
        }
    }
}
