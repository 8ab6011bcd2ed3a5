//! Mechanical checks of the OPE identities satisfied by the free fields.

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use serde::Serialize;

use super::coeff::Coeff;
use super::field::Field;
use super::freefield::FreeFields;
use crate::bilinear::Level;
use crate::error::Result;
use crate::lattice::root_label;
use crate::linalg::QMatrix;
use crate::rational::{fmt_q, Q};
use crate::rootsys::Weight;

#[derive(Clone, Debug, Serialize)]
pub struct OpeMismatch {
    pub left: String,
    pub right: String,
    pub pole: u32,
    pub expected: String,
    pub got: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct CentralTerm {
    pub root: String,
    /// `k·2/(α,α)`, forced by `[X_α,X_{−α}] = α∨` and the normalised form.
    pub normalized: String,
    /// The level `k` itself, as displayed for long roots.
    pub literal: String,
    pub differs: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct OpeReport {
    pub check: String,
    pub cartan_type: String,
    pub level: String,
    pub pairs_checked: usize,
    pub skew_checked: usize,
    pub skew_failures: Vec<String>,
    pub mismatches: Vec<OpeMismatch>,
    pub central_terms: Vec<CentralTerm>,
    /// Pole-2 scalar tables read off the engine output, keyed by name.
    #[serde(skip)]
    pub pole2_tables: BTreeMap<String, QMatrix>,
}

impl OpeReport {
    fn new(check: &str, level: &Level) -> Self {
        OpeReport {
            check: check.into(),
            cartan_type: level.rs().cartan_type().to_string(),
            level: fmt_q(level.k()),
            pairs_checked: 0,
            skew_checked: 0,
            skew_failures: vec![],
            mismatches: vec![],
            central_terms: vec![],
            pole2_tables: BTreeMap::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.mismatches.is_empty() && self.skew_failures.is_empty()
    }

    fn merge(&mut self, o: OpeReport) {
        self.pairs_checked += o.pairs_checked;
        self.skew_checked += o.skew_checked;
        self.skew_failures.extend(o.skew_failures);
        self.mismatches.extend(o.mismatches);
        self.central_terms.extend(o.central_terms);
        self.pole2_tables.extend(o.pole2_tables);
    }
}

struct Checker<'a> {
    ff: &'a FreeFields,
    report: OpeReport,
}

impl Checker<'_> {
    /// Compares the singular part of `A(z)B(w)` with `expected` and runs the skew check.
    fn compare(&mut self, la: &str, a: &Field, lb: &str, b: &Field, expected: BTreeMap<u32, Field>) -> Result<BTreeMap<u32, Field>> {
        let table = self.ff.table();
        let names = self.ff.names();
        let got = table.ope(a, b, 0)?.poles;
        self.report.pairs_checked += 1;
        let orders: std::collections::BTreeSet<u32> = got.keys().chain(expected.keys()).copied().collect();
        let zero = Field::zero(self.ff.dim());
        for n in orders {
            let e = expected.get(&n).unwrap_or(&zero);
            let g = got.get(&n).unwrap_or(&zero);
            if e != g {
                self.report.mismatches.push(OpeMismatch {
                    left: la.into(),
                    right: lb.into(),
                    pole: n,
                    expected: e.render(&names),
                    got: g.render(&names),
                });
            }
        }
        let skew = table.skew_check(a, b)?;
        self.report.skew_checked += 1;
        if !skew.holds {
            self.report.skew_failures.push(format!("{la} x {lb}"));
        }
        Ok(got)
    }
}

fn scalar_pole(poles: &BTreeMap<u32, Field>, n: u32) -> Q {
    match poles.get(&n) {
        None => Q::zero(),
        Some(f) => {
            let mut it = f.terms();
            match (it.next(), it.next()) {
                (Some((k, c)), None) if k.word.is_empty() && k.bosons.is_empty() && k.exp.iter().all(|&x| x == 0) => {
                    c.as_scalar().unwrap_or_else(Q::zero)
                }
                _ => Q::zero(),
            }
        }
    }
}

fn only_pole2(dim: usize, c: &Q) -> BTreeMap<u32, Field> {
    let mut m = BTreeMap::new();
    if !c.is_zero() {
        m.insert(2, Field::identity(dim).scale(c));
    }
    m
}

fn pole2_table(
    ck: &mut Checker<'_>,
    name: &str,
    fa: &dyn Fn(usize) -> Field,
    fb: &dyn Fn(usize) -> Field,
    la: &str,
    lb: &str,
    expected: &QMatrix,
) -> Result<()> {
    let n = expected.rows();
    let rs = ck.ff.level().rs().clone();
    let mut table = QMatrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            let li = format!("{la}{}", root_label(rs.positive_root(i)));
            let lj = format!("{lb}{}", root_label(rs.positive_root(j)));
            let got = ck.compare(&li, &fa(i), &lj, &fb(j), only_pole2(ck.ff.dim(), expected.get(i, j)))?;
            table.set(i, j, scalar_pole(&got, 2));
        }
    }
    ck.report.pole2_tables.insert(name.into(), table);
    Ok(())
}

/// `J_α J_β ∼ g_{αβ}/(z−w)²`, `J*_α J_β ∼ δ_{αβ}/(z−w)²`, `J*_α J*_β ∼ g*_{αβ}/(z−w)²`.
pub fn verify_jalpha_heisenberg(level: &Level) -> Result<OpeReport> {
    let ff = FreeFields::new(level);
    let mut ck = Checker { ff: &ff, report: OpeReport::new("jalpha", level) };
    let n = level.rs().num_positive();
    pole2_table(&mut ck, "J.J", &|i| ff.j(i), &|j| ff.j(j), "J", "J", level.g())?;
    pole2_table(&mut ck, "J*.J", &|i| ff.j_star(i), &|j| ff.j(j), "J*", "J", &QMatrix::identity(n))?;
    pole2_table(&mut ck, "J*.J*", &|i| ff.j_star(i), &|j| ff.j_star(j), "J*", "J*", level.g_star())?;
    Ok(ck.report)
}

/// `H⁻_α H⁻_β ∼ G_{αβ}/(z−w)²`.
pub fn verify_hminus_heisenberg(level: &Level) -> Result<OpeReport> {
    let ff = FreeFields::new(level);
    let mut ck = Checker { ff: &ff, report: OpeReport::new("hminus", level) };
    pole2_table(&mut ck, "H-.H-", &|i| ff.h_minus(i), &|j| ff.h_minus(j), "H-", "H-", level.big_g())?;
    Ok(ck.report)
}

/// The tilde map is OPE preserving, and `H⁺`, `H⁻` commute with its image.
pub fn verify_fst_homomorphism(level: &Level) -> Result<OpeReport> {
    let ff = FreeFields::new(level);
    let rs = level.rs().clone();
    let k = level.k().clone();
    let dim = ff.dim();
    let mut ck = Checker { ff: &ff, report: OpeReport::new("fst", level) };
    let nr = rs.num_roots();
    let l = rs.rank();
    let xl = |a: usize| format!("X~{}", root_label(&rs.root(a)));
    let simple = |i: usize| Weight::from_ints(rs.positive_root(i));

    // (i) X̃_α X̃_β for all α, β ∈ Δ.
    for a in 0..nr {
        for b in 0..nr {
            let ra = rs.root(a);
            let rb = rs.root(b);
            let sum: Vec<i64> = ra.iter().zip(&rb).map(|(x, y)| x + y).collect();
            let mut expected = BTreeMap::new();
            if sum.iter().all(|&x| x == 0) {
                let kappa = ck.ff.table().kappa(a);
                expected.insert(2, Field::identity(dim).scale(&(&k * &kappa)));
                expected.insert(1, ff.h_tilde(&rs.coroot(&ra)));
            } else if let Some(c) = rs.find_root(&sum) {
                expected.insert(1, ff.x_tilde(c).scale_coeff(&Coeff::structure_constant(a, b)));
            }
            ck.compare(&xl(a), &ff.x_tilde(a), &xl(b), &ff.x_tilde(b), expected)?;
        }
    }
    for a in 0..rs.num_positive() {
        let kappa = ck.ff.table().kappa(a);
        ck.report.central_terms.push(CentralTerm {
            root: root_label(rs.positive_root(a)),
            normalized: fmt_q(&(&k * &kappa)),
            literal: fmt_q(&k),
            differs: !kappa.is_one(),
        });
    }

    // (ii) H̃_{β'} X̃_α and (iii) H̃_{β'} H̃_{β''}.
    for i in 0..l {
        let hi = ff.h_tilde(&simple(i));
        let hl = format!("H~{}", root_label(rs.positive_root(i)));
        for a in 0..nr {
            let pair = rs.form_int(rs.positive_root(i), &rs.root(a));
            let mut expected = BTreeMap::new();
            if !pair.is_zero() {
                expected.insert(1, ff.x_tilde(a).scale(&pair));
            }
            ck.compare(&hl, &hi, &xl(a), &ff.x_tilde(a), expected)?;
        }
        for j in 0..l {
            let hj = ff.h_tilde(&simple(j));
            let v = rs.root_form(i, j) * &k;
            ck.compare(&hl, &hi, &format!("H~{}", root_label(rs.positive_root(j))), &hj, only_pole2(dim, &v))?;
        }
    }

    // (iv) commutant conditions.
    for a in 0..rs.num_positive() {
        let lab = root_label(rs.positive_root(a));
        for b in 0..nr {
            ck.compare(&format!("H+{lab}"), &ff.h_plus(a), &xl(b), &ff.x_tilde(b), BTreeMap::new())?;
            ck.compare(&format!("H-{lab}"), &ff.h_minus(a), &xl(b), &ff.x_tilde(b), BTreeMap::new())?;
        }
    }
    Ok(ck.report)
}

/// All three checks, concatenated.
pub fn verify_all(level: &Level) -> Result<OpeReport> {
    let mut r = verify_jalpha_heisenberg(level)?;
    r.merge(verify_hminus_heisenberg(level)?);
    r.merge(verify_fst_homomorphism(level)?);
    r.check = "all".into();
    Ok(r)
}

/// `Σ_{α∈Π} γ(J*_α) ξ(α)`-style combinations used by the flow diagnostics.
pub fn scalar_combination(ff: &FreeFields, coeffs: &[Q], fields: &dyn Fn(usize) -> Field) -> Field {
    let mut acc = Field::zero(ff.dim());
    for (i, c) in coeffs.iter().enumerate() {
        if !c.is_zero() {
            acc.add_assign(&fields(i).scale(c));
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{q, qf};
    use crate::rootsys::RootSystem;

    fn level(s: &str, n: usize, k: Q) -> Level {
        Level::new(&RootSystem::build(s, n).unwrap(), k).unwrap()
    }

    #[test]
    fn a1_values() {
        let lv = level("A", 1, q(1));
        let r = verify_jalpha_heisenberg(&lv).unwrap();
        assert!(r.passed(), "{:?}", r.mismatches);
        assert_eq!(r.pole2_tables["J.J"].get(0, 0), &q(3));
        assert_eq!(r.pole2_tables["J*.J"].get(0, 0), &q(1));
        let r = verify_hminus_heisenberg(&lv).unwrap();
        assert!(r.passed());
        assert_eq!(r.pole2_tables["H-.H-"].get(0, 0), &qf(-2, 3));
    }

    #[test]
    fn fst_a1_and_b2() {
        let r = verify_fst_homomorphism(&level("A", 1, q(1))).unwrap();
        assert!(r.passed(), "{:#?}", r.mismatches);
        let r = verify_fst_homomorphism(&level("B", 2, qf(1, 2))).unwrap();
        assert!(r.passed(), "{:#?}", r.mismatches);
        assert!(r.central_terms.iter().any(|c| c.differs));
    }
}
