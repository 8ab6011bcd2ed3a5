use num_traits::Zero;

use super::character::{common_certified_order, compare_characters, AfCharacter, WeightDiff};
use super::qseries::QSeries;
use super::transforms::{defermionize_character, fermionize_character, require_floors};
use crate::error::{Error, Result};
use crate::lattice::{build_l_minus, build_l_plus, enumerate_by_norm, g_af_minus, g_af_plus, LatticeVector};
use crate::linalg::QMatrix;
use crate::rational::{q, qf, Q};
use crate::rootsys::Weight;

#[derive(Clone, Debug)]
pub struct RoundtripReport {
    pub holds: bool,
    pub weights_compared: usize,
    /// Lowest validity order among the compared weights.
    pub certified_order: Option<Q>,
    /// Seed terms lying inside the certified range, out of `seed_terms`.
    pub terms_certified: usize,
    pub seed_terms: usize,
    pub diffs: Vec<WeightDiff<Weight>>,
}

/// `defermionize(fermionize(ch, μ), μ_sc)` against `ch`.
pub fn roundtrip_check(ch: &AfCharacter, mu: &Weight, t: &Q) -> Result<RoundtripReport> {
    let level = ch.level.clone();
    let f = fermionize_character(ch, mu, t)?;
    let back = defermionize_character(&f, &level.weight_to_sc(mu), t)?;
    let diffs = compare_characters(ch, &back);
    let weights_compared = ch.strings.keys().chain(back.strings.keys()).collect::<std::collections::BTreeSet<_>>().len();
    let mut terms_certified = 0;
    let mut seed_terms = 0;
    for (w, s) in &ch.strings {
        let v = back.validity_at(w);
        for (e, _) in s.series.terms() {
            seed_terms += 1;
            if v.as_ref().is_none_or(|v| e <= v) {
                terms_certified += 1;
            }
        }
    }
    Ok(RoundtripReport {
        holds: diffs.is_empty(),
        weights_compared,
        certified_order: common_certified_order(ch, &back),
        terms_certified,
        seed_terms,
        diffs,
    })
}

#[derive(Clone, Debug)]
pub struct SMember {
    pub xi: LatticeVector,
    pub zeta: LatticeVector,
    /// `⟨ξ,ξ⟩/2 + ⟨ζ,ζ⟩/2`.
    pub exponent: Q,
}

#[derive(Clone, Debug)]
pub struct CflemmaReport {
    pub gamma: Weight,
    pub members: Vec<SMember>,
    /// Largest norm any solution can have, from the exact solve.
    pub certified_norm: i64,
    pub holds: bool,
    pub diff: QSeries,
}

/// Solves the `S(γ)` constraints `γ = −g⁻_af(ζ)`, `g⁺_sc(ξ) = −g⁻_sc(ζ)`.
///
/// The constraint map `(ξ,ζ) ↦ (−g⁻_af(ζ), g⁺_sc(ξ) + g⁻_sc(ζ))` is linear; when
/// it is injective `S(γ)` has at most one element, which is returned.
fn solve_s_gamma(level: &crate::bilinear::Level, gamma: &[i64]) -> Result<Option<(LatticeVector, LatticeVector)>> {
    let rs = level.rs();
    let n = rs.num_positive();
    let l = rs.rank();
    // Columns: ξ_0..ξ_{N−1}, ζ_0..ζ_{ℓ−1}. Rows: the ℓ affine constraints, then N J*-constraints.
    let map = QMatrix::from_fn(l + n, n + l, |r, c| {
        if r < l {
            // −g⁻_af(ζ) = ζ in root coordinates.
            if c == n + r { q(1) } else { Q::zero() }
        } else {
            let b = r - l;
            if c == b {
                q(1)
            } else if c >= n && b == c - n {
                // J*-value of g⁻_sc(ζ) at simple β is −ζ_β.
                q(-1)
            } else {
                Q::zero()
            }
        }
    });
    if map.rank() != n + l {
        return Err(Error::Uncertifiable("the S(gamma) constraint map is not injective".into()));
    }
    let inv = map.transpose().mul(&map).inverse().expect("injective map has invertible normal matrix");
    let mut rhs = vec![Q::zero(); l + n];
    for (i, &g) in gamma.iter().enumerate() {
        rhs[i] = q(g);
    }
    let sol = inv.mul_vec(&map.transpose().mul_vec(&rhs));
    if map.mul_vec(&sol) != rhs || sol.iter().any(|x| !x.is_integer()) {
        return Ok(None);
    }
    let ints: Vec<i64> = sol.iter().map(|x| crate::rational::to_i64(x).unwrap()).collect();
    Ok(Some((LatticeVector(ints[..n].to_vec()), LatticeVector(ints[n..].to_vec()))))
}

/// `Σ_{(ξ,ζ)∈S(γ)} q^{⟨ξ,ξ⟩/2+⟨ζ,ζ⟩/2} s^{μ+g⁺_af(ξ)} = s^{μ+γ}` up to `t`.
///
/// `S(γ)` is assembled by brute force over the balls `|ξ|², |ζ|² ≤ bound`; the
/// bound is accepted only if the exact solution of the constraints lies inside.
pub fn cflemma_check(seed: &AfCharacter, gamma: &Weight, mu: &Weight, t: &Q, bound: i64) -> Result<CflemmaReport> {
    let level = seed.level.clone();
    let rs = level.rs();
    let gc = gamma.to_root_coords()?;
    if !mu.same_coset(&seed.base) {
        return Err(Error::NotInCoset { weight: mu.to_string(), base: seed.base.to_string() });
    }
    require_floors(seed)?;
    let lp = build_l_plus(rs);
    let lm = build_l_minus(rs);
    let solution = solve_s_gamma(&level, &gc)?;
    let certified_norm = match &solution {
        Some((xi, zeta)) => lp.norm(&xi.0).max(-lm.norm(&zeta.0)),
        None => 0,
    };
    if certified_norm > bound {
        return Err(Error::Uncertifiable(format!(
            "S(gamma) has a member of norm {certified_norm}, outside the enumeration bound {bound}"
        )));
    }

    let target_af: Vec<Q> = gc.iter().map(|&x| q(x)).collect();
    let zetas: Vec<LatticeVector> = enumerate_by_norm(&lm, &q(bound))?
        .into_iter()
        .filter(|z| g_af_minus(rs, z).0.iter().map(|x| -x).collect::<Vec<_>>() == target_af)
        .collect();
    let xis = enumerate_by_norm(&lp, &q(bound))?;
    let mut members = vec![];
    for zeta in &zetas {
        let want: Vec<Q> = crate::lattice::g_sc_minus_jstar(rs, zeta).into_iter().map(|x| -x).collect();
        for xi in &xis {
            if crate::lattice::g_sc_plus_jstar(rs, xi) == want {
                let exponent = qf(lp.norm(&xi.0) + lm.norm(&zeta.0), 2);
                members.push(SMember { xi: xi.clone(), zeta: zeta.clone(), exponent });
            }
        }
    }
    let agrees = match (&solution, members.as_slice()) {
        (None, []) => true,
        (Some((xi, zeta)), [m]) => m.xi == *xi && m.zeta == *zeta,
        _ => false,
    };
    if !agrees {
        return Err(Error::Uncertifiable("brute-force enumeration disagrees with the exact solve".into()));
    }

    let mut lhs = QSeries::zero();
    for mbr in &members {
        lhs = lhs.add(&seed.series_at(&mu.add(&g_af_plus(rs, &mbr.xi))).shift(&mbr.exponent));
    }
    let rhs = seed.series_at(&mu.add(gamma));
    let cap = [lhs.validity_bound(), rhs.validity_bound(), Some(t.clone())].into_iter().flatten().min();
    let diff = lhs.difference_up_to(&rhs, cap.as_ref());
    Ok(CflemmaReport { gamma: gamma.clone(), members, certified_norm, holds: diff.is_zero(), diff })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bilinear::Level;
    use crate::charflow::transforms::delta_character;
    use crate::rootsys::RootSystem;
    use std::sync::Arc;

    fn level(s: &str, n: usize, k: i64) -> Arc<Level> {
        Arc::new(Level::new(&RootSystem::build(s, n).unwrap(), q(k)).unwrap())
    }

    #[test]
    fn a1_s_alpha() {
        let lv = level("A", 1, 1);
        let seed = delta_character(&lv, Weight::from_ints(&[1]), q(0), q(1));
        let r = cflemma_check(&seed, &Weight::from_ints(&[1]), &Weight::zero(1), &q(6), 4).unwrap();
        assert!(r.holds);
        assert_eq!(r.members.len(), 1);
        assert_eq!(r.members[0].xi.0, vec![1]);
        assert_eq!(r.members[0].zeta.0, vec![1]);
        assert_eq!(r.members[0].exponent, q(0));
    }

    #[test]
    fn bound_too_small_refused() {
        let lv = level("A", 2, 1);
        let seed = delta_character(&lv, Weight::zero(2), q(0), q(1));
        let r = cflemma_check(&seed, &Weight::from_ints(&[2, 1]), &Weight::zero(2), &q(6), 3);
        assert!(matches!(r, Err(Error::Uncertifiable(_))));
    }

    #[test]
    fn zero_character_roundtrip() {
        let lv = level("A", 2, 2);
        let ch = AfCharacter::new(lv, Weight::zero(2));
        let r = roundtrip_check(&ch, &Weight::zero(2), &q(5)).unwrap();
        assert!(r.holds);
        assert_eq!(r.weights_compared, 0);
    }

    #[test]
    fn a2_delta_alpha1_roundtrip() {
        let lv = level("A", 2, 2);
        let ch = delta_character(&lv, Weight::from_ints(&[1, 0]), q(0), q(1));
        let r = roundtrip_check(&ch, &Weight::zero(2), &q(8)).unwrap();
        assert!(r.holds, "{:?}", r.diffs);
        assert!(r.weights_compared >= 1);
    }
}
