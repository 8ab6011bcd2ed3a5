//! Operator product expansions of free-field expressions.
//!
//! A term factorises as (affine word) ⊗ (bosons and exponential of the
//! lattice sector). Affine words are even, so the OPE of two terms is the
//! product of the affine OPE and the lattice OPE as Laurent series in
//! `t = z − w`, with all odd signs carried by the lattice cocycle.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::coeff::Coeff;
use super::field::{AffineSym, Field, Mono, TermKey, Word};
use crate::error::{Error, Result};
use crate::lattice::IntegralLattice;
use crate::rational::{binomial, factorial, q, rising, Q};
use crate::rootsys::RootSystem;

/// Affine OPE data for `V^k(𝔤)` plus the lattice sector's form and cocycle.
#[derive(Clone, Debug)]
pub struct ContractionTable {
    rs: RootSystem,
    k: Q,
    lattice: IntegralLattice,
}

/// Coefficients of `(z−w)^{−n}`, `n ≥ 1`, plus requested regular Taylor coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SingularPart {
    pub poles: BTreeMap<u32, Field>,
    pub regular: Vec<Field>,
}

impl SingularPart {
    pub fn pole(&self, n: u32) -> Option<&Field> {
        self.poles.get(&n)
    }

    pub fn max_pole(&self) -> u32 {
        self.poles.keys().next_back().copied().unwrap_or(0)
    }
}

type Poly = BTreeMap<Mono, Q>;
type Series = BTreeMap<i64, Poly>;

impl ContractionTable {
    pub fn new(rs: &RootSystem, k: Q, lattice: IntegralLattice) -> Self {
        ContractionTable { rs: rs.clone(), k, lattice }
    }

    pub fn rs(&self) -> &RootSystem {
        &self.rs
    }

    pub fn k(&self) -> &Q {
        &self.k
    }

    pub fn lattice(&self) -> &IntegralLattice {
        &self.lattice
    }

    pub fn dim(&self) -> usize {
        self.lattice.rank()
    }

    /// `2/(α,α)`, the value of the invariant form on `X_α, X_{−α}` when `[X_α,X_{−α}] = α∨`.
    pub fn kappa(&self, root_idx: usize) -> Q {
        q(2) / self.rs.root_norm(&self.rs.root(root_idx))
    }

    fn parity(&self, f: &Field) -> Result<bool> {
        f.parity(&|x| self.lattice.norm(x)).ok_or(Error::MixedParity)
    }

    fn check_registered(&self, f: &Field) -> Result<()> {
        let n = self.dim();
        let nroots = self.rs.num_roots();
        let l = self.rs.rank();
        if f.dim() != n {
            return Err(Error::UnregisteredVector(format!("field of dimension {} against lattice of rank {n}", f.dim())));
        }
        for (k, _) in f.terms() {
            if let Some((i, _)) = k.bosons.iter().find(|(i, _)| *i >= n) {
                return Err(Error::UnregisteredVector(format!("boson index {i}")));
            }
            for (s, _) in &k.word {
                let ok = match s {
                    AffineSym::Root(a) => *a < nroots,
                    AffineSym::Cartan(i) => *i < l,
                };
                if !ok {
                    return Err(Error::MissingAffineRule(format!("{s:?}")));
                }
            }
        }
        Ok(())
    }

    /// Singular part of `A(z)B(w)` and the first `regular_orders` Taylor coefficients.
    pub fn ope(&self, a: &Field, b: &Field, regular_orders: u32) -> Result<SingularPart> {
        self.check_registered(a)?;
        self.check_registered(b)?;
        self.parity(a)?;
        self.parity(b)?;
        let dim = self.dim();
        let pmax = regular_orders as i64 - 1;
        let mut acc: BTreeMap<i64, Field> = BTreeMap::new();
        for (ka, ca) in a.terms() {
            for (kb, cb) in b.terms() {
                let cab = ca.mul(cb);
                let aff_lb = match (ka.word.len(), kb.word.len()) {
                    (1, 1) => -(2 + ka.word[0].1 as i64 + kb.word[0].1 as i64),
                    _ => 0,
                };
                let lat_lb = self.lattice.inner(&ka.exp, &kb.exp)
                    - ka.bosons.iter().map(|(_, m)| 1 + *m as i64).sum::<i64>()
                    - kb.bosons.iter().map(|(_, n)| 1 + *n as i64).sum::<i64>();
                if aff_lb + lat_lb > pmax {
                    continue;
                }
                let aff = self.affine_series(&ka.word, &kb.word, pmax - lat_lb)?;
                let lat = self.lattice_series(&ka.bosons, &ka.exp, &kb.bosons, &kb.exp, pmax - aff_lb);
                let exp: Vec<i64> = ka.exp.iter().zip(&kb.exp).map(|(x, y)| x + y).collect();
                for (pa, fa) in &aff {
                    for (pl, poly) in &lat {
                        let p = pa + pl;
                        if p > pmax {
                            continue;
                        }
                        debug_assert!(p >= aff_lb + lat_lb);
                        let slot = acc.entry(p).or_insert_with(|| Field::zero(dim));
                        for (kf, cf) in fa.terms() {
                            let c0 = cf.mul(&cab);
                            for (mono, cl) in poly {
                                let mut bosons = kf.bosons.clone();
                                bosons.extend_from_slice(mono);
                                bosons.sort();
                                let key = TermKey { word: kf.word.clone(), bosons, exp: exp.clone() };
                                slot.add_term(key, &c0.scale(cl));
                            }
                        }
                    }
                }
            }
        }
        let mut poles = BTreeMap::new();
        let mut regular = vec![Field::zero(dim); regular_orders as usize];
        for (p, f) in acc {
            if f.is_zero() {
                continue;
            }
            if p < 0 {
                poles.insert((-p) as u32, f);
            } else {
                regular[p as usize] = f;
            }
        }
        Ok(SingularPart { poles, regular })
    }

    /// Pole terms `(p, c_p)` of `S(z)T(w)` for undifferentiated letters.
    fn letter_poles(&self, s: AffineSym, t: AffineSym) -> Vec<(i64, Field)> {
        let dim = self.dim();
        let rs = &self.rs;
        let mut out = Vec::new();
        match (s, t) {
            (AffineSym::Root(a), AffineSym::Root(b)) => {
                let ra = rs.root(a);
                let rb = rs.root(b);
                let sum: Vec<i64> = ra.iter().zip(&rb).map(|(x, y)| x + y).collect();
                if sum.iter().all(|&x| x == 0) {
                    let kappa = self.kappa(a);
                    out.push((2, Field::identity(dim).scale(&(&self.k * &kappa))));
                    let mut h = Field::zero(dim);
                    for (i, &c) in ra.iter().enumerate() {
                        if c != 0 {
                            h.add_assign(&Field::affine(dim, AffineSym::Cartan(i)).scale(&(q(c) * &kappa)));
                        }
                    }
                    out.push((1, h));
                } else if let Some(c) = rs.find_root(&sum) {
                    out.push((1, Field::affine(dim, AffineSym::Root(c)).scale_coeff(&Coeff::structure_constant(a, b))));
                }
            }
            (AffineSym::Cartan(i), AffineSym::Root(b)) => {
                let v = rs.form_int(rs.positive_root(i), &rs.root(b));
                if !v.is_zero() {
                    out.push((1, Field::affine(dim, AffineSym::Root(b)).scale(&v)));
                }
            }
            (AffineSym::Root(a), AffineSym::Cartan(j)) => {
                let v = rs.form_int(rs.positive_root(j), &rs.root(a));
                if !v.is_zero() {
                    out.push((1, Field::affine(dim, AffineSym::Root(a)).scale(&-v)));
                }
            }
            (AffineSym::Cartan(i), AffineSym::Cartan(j)) => {
                let v = rs.root_form(i, j) * &self.k;
                if !v.is_zero() {
                    out.push((2, Field::identity(dim).scale(&v)));
                }
            }
        }
        out
    }

    /// Affine factor as a Laurent series in `t`, up to and including `t^pmax`.
    fn affine_series(&self, wa: &Word, wb: &Word, pmax: i64) -> Result<BTreeMap<i64, Field>> {
        let dim = self.dim();
        let word_field = |w: &Word| Field::monomial(dim, w.clone(), vec![], vec![0; dim], Coeff::one());
        let mut out: BTreeMap<i64, Field> = BTreeMap::new();
        let push = |p: i64, f: Field, out: &mut BTreeMap<i64, Field>| {
            if p <= pmax && !f.is_zero() {
                out.entry(p).or_insert_with(|| Field::zero(dim)).add_assign(&f);
            }
        };
        match (wa.len(), wb.len()) {
            (0, _) => push(0, word_field(wb), &mut out),
            (_, 0) => {
                // a(z) = Σ t^j/j! ∂^j a(w)
                let mut f = word_field(wa);
                for j in 0..=pmax.max(-1) {
                    push(j, f.scale(&(Q::one() / factorial(j as u32))), &mut out);
                    f = f.derivative();
                }
            }
            (1, 1) => {
                let (s, m) = wa[0];
                let (t, n) = wb[0];
                for (p, c) in self.letter_poles(s, t) {
                    // ∂_z^m ∂_w^n [c(w) t^{−p}]
                    let sign = if m % 2 == 0 { q(1) } else { q(-1) };
                    let zfac = sign * rising(p, m);
                    let pm = p + m as i64;
                    for r in 0..=n {
                        let coef = &zfac * binomial(n, r) * rising(pm, r);
                        push(-(pm + r as i64), c.derivative_n(n - r).scale(&coef), &mut out);
                    }
                }
                for j in 0..=pmax.max(-1) {
                    let w = vec![(s, m + j as u32), (t, n)];
                    push(j, word_field(&w).scale(&(Q::one() / factorial(j as u32))), &mut out);
                }
            }
            _ => {
                return Err(Error::MissingAffineRule(format!("composite words {wa:?} and {wb:?}")));
            }
        }
        Ok(out)
    }

    /// Lattice factor of `:P e^ξ:(z) :Q e^η:(w)` up to `t^pmax`, including
    /// `ε(ξ,η) t^{⟨ξ,η⟩}`; monomials are in the bosons at `w`.
    fn lattice_series(&self, pa: &Mono, xi: &[i64], pb: &Mono, eta: &[i64], pmax: i64) -> Series {
        let lat = &self.lattice;
        let base = lat.inner(xi, eta);
        let rel_max = pmax - base;
        let lb: i64 = -pa.iter().map(|(_, m)| 1 + *m as i64).sum::<i64>() - pb.iter().map(|(_, n)| 1 + *n as i64).sum::<i64>();
        if rel_max < lb {
            return Series::new();
        }
        let eps = q(lat.epsilon(xi, eta));
        let unit = |i: usize| {
            let mut v = vec![0; xi.len()];
            v[i] = 1;
            v
        };
        // Unmatched factors.
        let a_factor: Vec<(i64, Series)> = pa
            .iter()
            .map(|&(i, m)| {
                let mut s = Series::new();
                let c = lat.inner(&unit(i), eta);
                let mut min = 0;
                if c != 0 {
                    let sign = if m % 2 == 0 { q(1) } else { q(-1) };
                    add_series_term(&mut s, -1 - m as i64, vec![], q(c) * sign * factorial(m));
                    min = -1 - m as i64;
                }
                (min, s)
            })
            .collect();
        let b_factor: Vec<(i64, Series)> = pb
            .iter()
            .map(|&(j, n)| {
                let mut s = Series::new();
                add_series_term(&mut s, 0, vec![(j, n)], q(1));
                let c = lat.inner(&unit(j), xi);
                let mut min = 0;
                if c != 0 {
                    add_series_term(&mut s, -1 - n as i64, vec![], -q(c) * factorial(n));
                    min = -1 - n as i64;
                }
                (min, s)
            })
            .collect();
        let schur = self.schur(xi, rel_max - lb);

        let mut total = Series::new();
        let mut matched_b = vec![false; pb.len()];
        let mut pairs: Vec<(usize, usize)> = Vec::new();
        self.matchings(pa, pb, 0, &mut matched_b, &mut pairs, &mut |pairs: &[(usize, usize)], matched: &[bool]| {
            let mut scalar = eps.clone();
            let mut shift = 0i64;
            for &(r, s) in pairs {
                let (i, m) = pa[r];
                let (j, n) = pb[s];
                let g = lat.gram()[i][j];
                let sign = if m % 2 == 0 { q(1) } else { q(-1) };
                scalar *= q(g) * sign * factorial(m + n + 1);
                shift += -2 - m as i64 - n as i64;
            }
            if scalar.is_zero() {
                return;
            }
            let mut unmatched_a = vec![true; pa.len()];
            for &(r, _) in pairs {
                unmatched_a[r] = false;
            }
            // Remaining factors and their minima.
            let mut factors: Vec<(i64, Series)> = Vec::new();
            for (r, &(i, m)) in pa.iter().enumerate() {
                if unmatched_a[r] {
                    let (min, mut s) = a_factor[r].clone();
                    // Taylor part of ∂^m b_i(z) around w.
                    let budget = rel_max - shift - lb;
                    for j in 0..=budget.max(-1) {
                        add_series_term(&mut s, j, vec![(i, m + j as u32)], Q::one() / factorial(j as u32));
                    }
                    factors.push((min, s));
                }
            }
            for (s_idx, f) in b_factor.iter().enumerate() {
                if !matched[s_idx] {
                    factors.push(f.clone());
                }
            }
            factors.push((0, schur.clone()));
            let min_total: i64 = shift + factors.iter().map(|(m, _)| *m).sum::<i64>();
            let cap = rel_max - shift;
            if min_total > rel_max {
                return;
            }
            let mut prod = Series::new();
            add_series_term(&mut prod, 0, vec![], scalar);
            let mut min_rest: i64 = factors.iter().map(|(m, _)| *m).sum();
            for (m, s) in &factors {
                min_rest -= m;
                prod = mul_series(&prod, s, cap - min_rest);
            }
            for (p, poly) in prod {
                for (mono, c) in poly {
                    add_series_term(&mut total, p + shift + base, mono, c);
                }
            }
        });
        total
    }

    fn matchings(
        &self,
        pa: &Mono,
        pb: &Mono,
        r: usize,
        matched_b: &mut Vec<bool>,
        pairs: &mut Vec<(usize, usize)>,
        visit: &mut dyn FnMut(&[(usize, usize)], &[bool]),
    ) {
        if r == pa.len() {
            visit(pairs, matched_b);
            return;
        }
        self.matchings(pa, pb, r + 1, matched_b, pairs, visit);
        for s in 0..pb.len() {
            if !matched_b[s] && self.lattice.gram()[pa[r].0][pb[s].0] != 0 {
                matched_b[s] = true;
                pairs.push((r, s));
                self.matchings(pa, pb, r + 1, matched_b, pairs, visit);
                pairs.pop();
                matched_b[s] = false;
            }
        }
    }

    /// `exp(Σ_{n≥1} t^n/n! ∂^{n−1} b_ξ)` up to `t^pmax`.
    fn schur(&self, xi: &[i64], pmax: i64) -> Series {
        let mut x = Series::new();
        for n in 1..=pmax.max(0) {
            for (i, &c) in xi.iter().enumerate() {
                if c != 0 {
                    add_series_term(&mut x, n, vec![(i, (n - 1) as u32)], q(c) / factorial(n as u32));
                }
            }
        }
        let mut out = Series::new();
        add_series_term(&mut out, 0, vec![], q(1));
        let mut power = out.clone();
        for r in 1..=pmax.max(0) {
            power = mul_series(&power, &x, pmax);
            if power.is_empty() {
                break;
            }
            let inv = Q::one() / factorial(r as u32);
            for (p, poly) in &power {
                for (mono, c) in poly {
                    add_series_term(&mut out, *p, mono.clone(), c * &inv);
                }
            }
        }
        out
    }

    /// Compares `B(z)A(w)` with the re-expansion of `A(z)B(w)`:
    /// `c'_n = (−1)^{|A||B|} Σ_j (−1)^{n+j}/j! ∂^j c_{n+j}`.
    pub fn skew_check(&self, a: &Field, b: &Field) -> Result<SkewVerdict> {
        let pa = self.parity(a)?;
        let pb = self.parity(b)?;
        let ab = self.ope(a, b, 0)?;
        let ba = self.ope(b, a, 0)?;
        let koszul = if pa && pb { q(-1) } else { q(1) };
        let top = ab.max_pole().max(ba.max_pole());
        let mut mismatches = Vec::new();
        for n in 1..=top {
            let mut expected = Field::zero(self.dim());
            for j in 0..=(top - n) {
                if let Some(c) = ab.poles.get(&(n + j)) {
                    let sign = if (n + j) % 2 == 0 { q(1) } else { q(-1) };
                    expected.add_assign(&c.derivative_n(j).scale(&(&koszul * sign / factorial(j))));
                }
            }
            let got = ba.poles.get(&n).cloned().unwrap_or_else(|| Field::zero(self.dim()));
            if expected != got {
                mismatches.push((n, expected, got));
            }
        }
        Ok(SkewVerdict { holds: mismatches.is_empty(), mismatches })
    }
}

#[derive(Clone, Debug)]
pub struct SkewVerdict {
    pub holds: bool,
    pub mismatches: Vec<(u32, Field, Field)>,
}

fn add_series_term(s: &mut Series, p: i64, mut mono: Mono, c: Q) {
    if c.is_zero() {
        return;
    }
    mono.sort();
    let poly = s.entry(p).or_default();
    let e = poly.entry(mono.clone()).or_insert_with(Q::zero);
    *e += c;
    if e.is_zero() {
        poly.remove(&mono);
        if poly.is_empty() {
            s.remove(&p);
        }
    }
}

fn mul_series(a: &Series, b: &Series, pmax: i64) -> Series {
    let mut out = Series::new();
    for (pa, fa) in a {
        for (pb, fb) in b {
            if pa + pb > pmax {
                break;
            }
            for (ma, ca) in fa {
                for (mb, cb) in fb {
                    let mut m = ma.clone();
                    m.extend_from_slice(mb);
                    add_series_term(&mut out, pa + pb, m, ca * cb);
                }
            }
        }
    }
    out
}
