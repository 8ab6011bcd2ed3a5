//! Spectral flow at the level of characters.
//!
//! Both laws were fixed by demanding the equivariance identities
//! `ch Ω⁺(λ−γ) = flow_sc(ch Ω⁺(λ), γ)` and
//! `ch Ω⁻(λ+γ) = flow_af(ch Ω⁻(λ), γ)` computed through the branching
//! transforms; the tests recheck them that way.

use std::collections::BTreeMap;

use num_traits::Zero;

use super::character::{AfCharacter, FormalCharacter, ScCharacter, StringFunction};
use super::tail::Quadratic;
use crate::bilinear::{Level, ScWeight};
use crate::error::{Error, Result};
use crate::lattice::{xi_alpha, LatticeVector};
use crate::linalg::QMatrix;
use crate::rational::{fmt_q, q, to_i64, Q};
use crate::rootsys::Weight;

fn dot(a: &[Q], b: &[Q]) -> Q {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// J*-values of the weight shift of `flow_sc` by `γ ∈ Q`:
/// `[β∈Π] γ(β*) − (γ,β)/(k+h∨)`.
pub fn sc_flow_shift(level: &Level, gamma: &Weight) -> Result<ScWeight> {
    let rs = level.rs();
    let c = gamma.to_root_coords()?;
    let jstar = (0..rs.num_positive())
        .map(|b| {
            let simple = if b < rs.rank() { q(c[b]) } else { Q::zero() };
            simple - rs.normalized_form(gamma, &rs.positive_weight(b)) / level.shifted()
        })
        .collect();
    Ok(level.sc_from_jstar(jstar))
}

/// `(φ, E) ↦ (φ + s, E + φ(h) + s(h)/2)` with `h = Σ_{α∈Π} γ(α*) J*_α`.
pub fn spectral_flow_sc(ch: &ScCharacter, gamma: &Weight) -> Result<ScCharacter> {
    let level = ch.level.clone();
    let n = level.rs().num_positive();
    let s = sc_flow_shift(&level, gamma)?;
    let mut h = vec![Q::zero(); n];
    for (i, c) in gamma.to_root_coords()?.into_iter().enumerate() {
        h[i] = q(c);
    }
    let s_h = dot(s.jstar_values(), &h) / q(2);

    let mut strings = BTreeMap::new();
    for (phi, sf) in &ch.strings {
        let e = dot(phi.jstar_values(), &h) + &s_h;
        strings.insert(phi.add(&s), StringFunction::new(sf.series.shift(&e), sf.floor.as_ref().map(|f| f + &e)));
    }
    let neg_s: Vec<Q> = s.jstar_values().iter().map(|x| -x).collect();
    let id = QMatrix::identity(n);
    let energy = Quadratic { c: s_h, l: h, qm: QMatrix::zeros(n, n) }.pullback(&id, &neg_s);
    let tail = ch.tail.pullback(&id, &neg_s).add_quadratic(&energy);
    Ok(FormalCharacter { level, base: ch.base.add(&s), strings, tail })
}

/// Coefficients `c_α = γ(J*_α)`, α ∈ Π, of `h_af[γ] = Σ c_α α*`.
fn af_coefficients(level: &Level, gamma: &ScWeight) -> Result<Vec<Q>> {
    if !gamma.in_q_sc() {
        return Err(Error::InvalidArgument(format!("{gamma} is not in Q_sc: J*-values must be integers")));
    }
    Ok(gamma.jstar_values()[..level.rs().rank()].to_vec())
}

/// Root coordinates of `h_af[γ]` viewed in `𝔥*` through the form.
pub fn af_flow_vector(level: &Level, gamma: &ScWeight) -> Result<Weight> {
    let c = af_coefficients(level, gamma)?;
    Ok(Weight(level.rs().inverse_symmetrized_cartan().mul_vec(&c)))
}

/// `(ν, E) ↦ (ν + k h, E + ν(h) + k(h,h)/2)` with `h = h_af[γ]`.
pub fn spectral_flow_af(ch: &AfCharacter, gamma: &ScWeight) -> Result<AfCharacter> {
    let level = ch.level.clone();
    let l = level.rs().rank();
    let c = af_coefficients(&level, gamma)?;
    let hv = af_flow_vector(&level, gamma)?;
    let shift = hv.scale(level.k());
    let quad = level.k() * dot(&c, hv.coords()) / q(2);

    let mut strings = BTreeMap::new();
    for (nu, sf) in &ch.strings {
        let e = dot(nu.coords(), &c) + &quad;
        strings.insert(nu.add(&shift), StringFunction::new(sf.series.shift(&e), sf.floor.as_ref().map(|f| f + &e)));
    }
    let neg: Vec<Q> = shift.0.iter().map(|x| -x).collect();
    let id = QMatrix::identity(l);
    let energy = Quadratic { c: quad, l: c, qm: QMatrix::zeros(l, l) }.pullback(&id, &neg);
    let tail = ch.tail.pullback(&id, &neg).add_quadratic(&energy);
    Ok(FormalCharacter { level, base: ch.base.add(&shift), strings, tail })
}

/// Auxiliary data attached to `γ ∈ Q_sc`.
#[derive(Clone, Debug)]
pub struct FlowDiagnostics {
    /// `c_α = γ(J*_α)` for α ∈ Π.
    pub h_af: Vec<Q>,
    /// `ξ^γ = Σ γ(J*_α) ξ(α)`, an element of `K`.
    pub xi_gamma: LatticeVector,
    /// `ζ^γ = Σ γ(J*_α) f⁻_af(α)`.
    pub zeta_gamma: LatticeVector,
    /// `h^γ = Σ γ(J*_α)(H⁻_α)*`, as coefficients on `H⁻_β`.
    pub h_gamma: Vec<Q>,
    /// Weight shift `k·h_af[γ]`.
    pub weight_shift: Weight,
}

pub fn flow_diagnostics(level: &Level, gamma: &ScWeight) -> Result<FlowDiagnostics> {
    let rs = level.rs();
    let n = rs.num_positive();
    let h_af = af_coefficients(level, gamma)?;
    let coeffs: Vec<i64> = gamma.jstar_values().iter().map(|x| to_i64(x).expect("checked integral")).collect();
    let mut xi = LatticeVector::zero(n);
    let mut zeta = LatticeVector::zero(rs.rank());
    for (a, &c) in coeffs.iter().enumerate() {
        xi = xi.add(&xi_alpha(rs, a).scale(c));
        zeta = zeta.add(&LatticeVector(rs.positive_root(a).to_vec()).scale(c));
    }
    let h_gamma = level.big_g_star().transpose().mul_vec(gamma.jstar_values());
    let weight_shift = af_flow_vector(level, gamma)?.scale(level.k());
    Ok(FlowDiagnostics { h_af, xi_gamma: xi, zeta_gamma: zeta, h_gamma, weight_shift })
}

impl std::fmt::Display for FlowDiagnostics {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let v = |x: &[Q]| x.iter().map(fmt_q).collect::<Vec<_>>().join(", ");
        writeln!(f, "h_af[gamma] coefficients: [{}]", v(&self.h_af))?;
        writeln!(f, "xi^gamma: {}", self.xi_gamma)?;
        writeln!(f, "zeta^gamma: {}", self.zeta_gamma)?;
        writeln!(f, "h^gamma on H-: [{}]", v(&self.h_gamma))?;
        write!(f, "weight shift: {}", self.weight_shift)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::charflow::character::compare_characters;
    use crate::charflow::transforms::{defermionize_character, delta_character, fermionize_character};
    use crate::rootsys::RootSystem;
    use std::sync::Arc;

    fn level(s: &str, n: usize, k: i64) -> Arc<Level> {
        Arc::new(Level::new(&RootSystem::build(s, n).unwrap(), q(k)).unwrap())
    }

    #[test]
    fn sc_equivariance_a1() {
        let lv = level("A", 1, 1);
        let alpha = Weight::from_ints(&[1]);
        let seed = delta_character(&lv, alpha.clone(), q(0), q(1));
        let direct = fermionize_character(&seed, &Weight::zero(1), &q(8)).unwrap();
        let flowed = spectral_flow_sc(&fermionize_character(&seed, &alpha, &q(8)).unwrap(), &alpha).unwrap();
        assert!(compare_characters(&direct, &flowed).is_empty());
        assert_eq!(direct.strings.keys().collect::<Vec<_>>(), flowed.strings.keys().collect::<Vec<_>>());
    }

    #[test]
    fn af_equivariance_a1() {
        let lv = level("A", 1, 1);
        let seed = delta_character(&lv, Weight::zero(1), q(0), q(1));
        let m = fermionize_character(&seed, &Weight::zero(1), &q(8)).unwrap();
        let gamma = lv.g_sc_plus(&LatticeVector(vec![1]));
        let lam = lv.sc_zero();
        let direct = defermionize_character(&m, &lam.add(&gamma), &q(8)).unwrap();
        let flowed = spectral_flow_af(&defermionize_character(&m, &lam, &q(8)).unwrap(), &gamma).unwrap();
        assert!(compare_characters(&direct, &flowed).is_empty());
        assert!(!direct.strings.is_empty());
    }

    #[test]
    fn zero_is_identity() {
        let lv = level("A", 2, 1);
        let seed = delta_character(&lv, Weight::zero(2), q(0), q(1));
        let m = fermionize_character(&seed, &Weight::zero(2), &q(4)).unwrap();
        let f = spectral_flow_sc(&m, &Weight::zero(2)).unwrap();
        assert_eq!(f.strings, m.strings);
        let a = defermionize_character(&m, &lv.sc_zero(), &q(4)).unwrap();
        assert_eq!(spectral_flow_af(&a, &lv.sc_zero()).unwrap().strings, a.strings);
    }

    #[test]
    fn diagnostics_a2() {
        let lv = level("A", 2, 1);
        let theta = lv.g_sc_plus(&LatticeVector(vec![0, 0, 1]));
        let d = flow_diagnostics(&lv, &theta).unwrap();
        assert_eq!(d.xi_gamma.0, vec![-1, -1, 1]);
        assert_eq!(d.zeta_gamma.0, vec![1, 1]);
        assert!(d.h_af.iter().all(|x| x.is_zero()));
    }
}
