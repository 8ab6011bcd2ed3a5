//! The two branching transforms between affine and superconformal characters.

use std::sync::Arc;

use num_traits::{One, Signed, Zero};

use super::character::{lowest_floor, AfCharacter, CharWeight, FormalCharacter, ScCharacter, StringFunction};
use super::eta::eta_power;
use super::tail::Quadratic;
use crate::bilinear::{Level, ScWeight};
use crate::error::{Error, Result};
use crate::lattice::{build_l_plus, enumerate_by_norm, g_af_plus};
use crate::linalg::QMatrix;
use crate::rational::{q, qf, Q};
use crate::rootsys::Weight;

pub(crate) fn require_floors<W: CharWeight>(ch: &FormalCharacter<W>) -> Result<()> {
    match ch.strings.iter().find(|(_, s)| s.floor.is_none()) {
        Some((w, _)) => Err(Error::MissingMinimum(w.to_string())),
        None => Ok(()),
    }
}

/// `N − ℓ`.
pub fn eta_exponent(level: &Level) -> i64 {
    (level.rs().num_positive() - level.rs().rank()) as i64
}

/// `ℓ × N` matrix whose columns are the positive roots.
fn root_columns(level: &Level) -> QMatrix {
    let rs = level.rs();
    QMatrix::from_fn(rs.rank(), rs.num_positive(), |i, a| q(rs.positive_root(a)[i]))
}

/// `N × ℓ` matrix embedding simple-root coordinates at the Π positions.
fn simple_embedding(level: &Level) -> QMatrix {
    let rs = level.rs();
    QMatrix::from_fn(rs.num_positive(), rs.rank(), |a, i| if a == i { Q::one() } else { Q::zero() })
}

/// `(s·q^{e0}) · η^m`, valid up to `t`.
fn dressed(s: &StringFunction, e0: &Q, m: i64, t: &Q) -> StringFunction {
    let floor = s.floor.as_ref().expect("floors checked") + e0;
    let shifted = s.series.shift(e0);
    let eta = eta_power(m, &(t - &floor));
    let series = shifted.mul_capped(&eta, Some(t));
    StringFunction::new(series, Some(floor + qf(m, 24)))
}

/// `ch Ω⁺(μ)(M) = Σ_{ξ∈L⁺} s^{μ+g⁺_af(ξ)} q^{|ξ|²/2 − Δ⁺_μ} η^{−(N−ℓ)} e^{μ_sc + g⁺_sc(ξ)}`,
/// truncated at `t`.
pub fn fermionize_character(ch: &AfCharacter, mu: &Weight, t: &Q) -> Result<ScCharacter> {
    if !mu.same_coset(&ch.base) {
        return Err(Error::NotInCoset { weight: mu.to_string(), base: ch.base.to_string() });
    }
    require_floors(ch)?;
    let level = ch.level.clone();
    let rs = level.rs();
    let m = eta_exponent(&level);
    let delta = level.conformal_weight_plus(mu);
    let mu_sc = level.weight_to_sc(mu);
    let mut out = FormalCharacter::new(level.clone(), mu_sc.clone());

    if let Some(lb) = lowest_floor(ch) {
        let radius = q(2) * (t + &delta - &lb + qf(m, 24));
        if !radius.is_negative() {
            for xi in enumerate_by_norm(&build_l_plus(rs), &radius)? {
                let y = mu.add(&g_af_plus(rs, &xi));
                let Some(s) = ch.strings.get(&y) else { continue };
                let e0 = qf(xi.0.iter().map(|x| x * x).sum::<i64>(), 2) - &delta;
                if s.floor.as_ref().unwrap() + &e0 - qf(m, 24) > *t {
                    continue;
                }
                let phi = mu_sc.add(&level.g_sc_plus(&xi));
                out.insert(phi, dressed(s, &e0, -m, t));
            }
        }
    }

    // Unlisted output weights: either their seed weight is unlisted, or it is
    // listed but its contribution starts above `t`.
    let n = rs.num_positive();
    let shift: Vec<Q> = mu_sc.jstar_values().iter().map(|x| -x).collect();
    let energy = Quadratic { c: -&delta - qf(m, 24), l: vec![Q::zero(); n], qm: QMatrix::identity(n).scale(&qf(1, 2)) }
        .pullback(&QMatrix::identity(n), &shift);
    let cols = root_columns(&level);
    let offset: Vec<Q> = mu.0.iter().zip(cols.mul_vec(&shift)).map(|(a, b)| a + b).collect();
    let mut tail = ch.tail.pullback(&cols, &offset).add_quadratic(&energy);
    if !ch.strings.is_empty() {
        tail = tail.min_with(Quadratic::constant(n, t.clone()));
    }
    out.tail = tail;
    Ok(out)
}

/// `ch Ω⁻(λ)(𝓜) = Σ_{ζ∈L⁻} s^{λ−g⁻_sc(ζ)} q^{⟨ζ,ζ⟩/2 + D(λ)} η^{N−ℓ} e^{λ_af − g⁻_af(ζ)}`,
/// truncated at `t`. Only `ζ` whose source weight is listed contribute terms.
pub fn defermionize_character(ch: &ScCharacter, lambda: &ScWeight, t: &Q) -> Result<AfCharacter> {
    if !CharWeight::same_coset(lambda, &ch.base) {
        return Err(Error::NotInCoset { weight: lambda.to_string(), base: ch.base.to_string() });
    }
    require_floors(ch)?;
    let level = ch.level.clone();
    let rs = level.rs();
    let l = rs.rank();
    let m = eta_exponent(&level);
    let d = level.conformal_weight_minus(lambda);
    let lam_af = level.sc_weight_to_af(lambda);
    let mut out = FormalCharacter::new(level.clone(), lam_af.clone());

    for (phi, s) in &ch.strings {
        let diff: Vec<Q> = phi.jstar_values().iter().zip(lambda.jstar_values()).map(|(a, b)| a - b).collect();
        if diff[l..].iter().any(|x| !x.is_zero()) {
            continue;
        }
        // φ = λ − g⁻_sc(ζ) forces ζ = diff on Π; ⟨ζ,ζ⟩ = −|ζ|².
        let zeta = &diff[..l];
        let norm: Q = zeta.iter().map(|x| x * x).sum();
        let e0 = -norm / q(2) + &d;
        if s.floor.as_ref().unwrap() + &e0 + qf(m, 24) > *t {
            continue;
        }
        let y = Weight(lam_af.0.iter().zip(zeta).map(|(a, b)| a + b).collect());
        out.insert(y, dressed(s, &e0, m, t));
    }

    let emb = simple_embedding(&level);
    let neg_af: Vec<Q> = lam_af.0.iter().map(|x| -x).collect();
    let offset: Vec<Q> = lambda.jstar_values().iter().zip(emb.mul_vec(&neg_af)).map(|(a, b)| a + b).collect();
    let energy = Quadratic { c: &d + qf(m, 24), l: vec![Q::zero(); l], qm: QMatrix::identity(l).scale(&qf(-1, 2)) }
        .pullback(&QMatrix::identity(l), &neg_af);
    let mut tail = ch.tail.pullback(&emb, &offset).add_quadratic(&energy);
    if !ch.strings.is_empty() {
        tail = tail.min_with(Quadratic::constant(l, t.clone()));
    }
    out.tail = tail;
    Ok(out)
}

/// A character concentrated at one weight with a single exact term.
pub fn delta_character(level: &Arc<Level>, weight: Weight, exp: Q, coef: Q) -> AfCharacter {
    let mut ch = FormalCharacter::new(level.clone(), weight.clone());
    ch.insert(weight, StringFunction::exact(super::qseries::QSeries::monomial(exp, coef)));
    ch
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::LatticeVector;
    use crate::rootsys::RootSystem;

    fn level(s: &str, n: usize, k: i64) -> Arc<Level> {
        Arc::new(Level::new(&RootSystem::build(s, n).unwrap(), q(k)).unwrap())
    }

    #[test]
    fn a1_delta_at_zero() {
        let lv = level("A", 1, 1);
        let ch = delta_character(&lv, Weight::zero(1), q(0), q(1));
        let f = fermionize_character(&ch, &Weight::zero(1), &q(10)).unwrap();
        assert_eq!(f.strings.len(), 1);
        let (w, s) = f.strings.iter().next().unwrap();
        assert!(w.is_zero());
        assert_eq!(s.series.coefficient(&q(0)), q(1));
        assert_eq!(s.series.num_terms(), 1);
        let back = defermionize_character(&f, &lv.sc_zero(), &q(10)).unwrap();
        assert_eq!(back.strings.len(), 1);
        assert_eq!(back.strings[&Weight::zero(1)].series.coefficient(&q(0)), q(1));
    }

    #[test]
    fn a1_seed_at_alpha() {
        let lv = level("A", 1, 1);
        let ch = delta_character(&lv, Weight::from_ints(&[1]), q(0), q(1));
        let f = fermionize_character(&ch, &Weight::zero(1), &q(10)).unwrap();
        let target = lv.g_sc_plus(&LatticeVector(vec![1]));
        assert_eq!(f.strings[&target].series.coefficient(&qf(1, 2)), q(1));
        assert_eq!(f.strings.len(), 1);
    }

    #[test]
    fn a2_delta_counts_kernel_vectors() {
        let lv = level("A", 2, 1);
        let ch = delta_character(&lv, Weight::zero(2), q(0), q(1));
        let f = fermionize_character(&ch, &Weight::zero(2), &q(3)).unwrap();
        // One output weight per kernel vector of norm ≤ 6: ξ = c·(−1,−1,1).
        assert_eq!(f.strings.len(), 3);
        let back = defermionize_character(&f, &lv.sc_zero(), &q(3)).unwrap();
        let s = &back.strings[&Weight::zero(2)].series;
        assert_eq!(s.num_terms(), 1);
        assert_eq!(s.coefficient(&q(0)), q(1));
    }

    #[test]
    fn missing_floor_rejected() {
        let lv = level("A", 1, 1);
        let mut ch = delta_character(&lv, Weight::zero(1), q(0), q(1));
        ch.strings.values_mut().for_each(|s| s.floor = None);
        assert!(matches!(fermionize_character(&ch, &Weight::zero(1), &q(3)), Err(Error::MissingMinimum(_))));
    }

    #[test]
    fn wrong_coset_rejected() {
        let lv = level("A", 1, 1);
        let ch = delta_character(&lv, Weight::zero(1), q(0), q(1));
        let half = Weight(vec![qf(1, 2)]);
        assert!(matches!(fermionize_character(&ch, &half, &q(3)), Err(Error::NotInCoset { .. })));
    }
}
