//! Level-dependent Gram matrices and the weight correspondences between the
//! affine side `𝔥*` and the superconformal Cartan `𝔥_sc*`.
//!
//! With `K = k + h∨`:
//!
//! * `g_{αβ} = (α,β)/k + δ` pairs the currents `J_α`, and `g* = g⁻¹` pairs `J*_α`;
//! * `G` and `G*` are the pairing of `H⁻_α` and its inverse.
//!
//! An [`ScWeight`] is stored through its values on `J_α`; values on `J*_α`
//! are derived with `g*`.

use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::lattice::LatticeVector;
use crate::linalg::QMatrix;
use crate::rational::{fmt_q, fmt_vec, q, Q};
use crate::rootsys::{RootSystem, Weight};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LevelParams {
    k: Q,
    shifted: Q,
}

impl LevelParams {
    pub fn new(rs: &RootSystem, k: Q) -> Result<Self> {
        let hvee = q(rs.dual_coxeter());
        let shifted = &k + &hvee;
        if k.is_zero() || shifted.is_zero() {
            return Err(Error::InvalidLevel { k: fmt_q(&k), neg_hvee: fmt_q(&-hvee) });
        }
        Ok(LevelParams { k, shifted })
    }

    pub fn k(&self) -> &Q {
        &self.k
    }

    /// `k + h∨`
    pub fn shifted(&self) -> &Q {
        &self.shifted
    }
}

/// `g_{αβ} = (α,β)/k + δ_{αβ}` over `Δ⁺`.
pub fn gram_g(rs: &RootSystem, p: &LevelParams) -> QMatrix {
    let n = rs.num_positive();
    QMatrix::from_fn(n, n, |i, j| rs.root_form(i, j) / p.k() + delta(i, j))
}

/// `g*_{αβ} = −(α,β)/(k+h∨) + δ_{αβ}`.
pub fn gram_g_star(rs: &RootSystem, p: &LevelParams) -> QMatrix {
    let n = rs.num_positive();
    QMatrix::from_fn(n, n, |i, j| -rs.root_form(i, j) / p.shifted() + delta(i, j))
}

/// `G_{αβ} = g*_{αβ} − δ_{αβ}` if α or β is simple, else `g*_{αβ}`.
pub fn gram_big_g(rs: &RootSystem, p: &LevelParams) -> QMatrix {
    let l = rs.rank();
    let gs = gram_g_star(rs, p);
    let n = rs.num_positive();
    QMatrix::from_fn(n, n, |i, j| {
        if i < l || j < l {
            gs.get(i, j) - delta(i, j)
        } else {
            gs.get(i, j).clone()
        }
    })
}

/// The inverse of `G` in closed form, with `c` the inverse symmetrised Cartan matrix:
/// `−k c_{αβ} − δ` on `Π×Π`, `−β(α*)` and `−α(β*)` on the mixed blocks, `δ` elsewhere.
pub fn gram_big_g_star(rs: &RootSystem, p: &LevelParams) -> QMatrix {
    let l = rs.rank();
    let n = rs.num_positive();
    let c = rs.inverse_symmetrized_cartan();
    QMatrix::from_fn(n, n, |i, j| match (i < l, j < l) {
        (true, true) => -(p.k() * c.get(i, j)) - delta(i, j),
        (true, false) => q(-rs.positive_root(j)[i]),
        (false, true) => q(-rs.positive_root(i)[j]),
        (false, false) => delta(i, j),
    })
}

fn delta(i: usize, j: usize) -> Q {
    if i == j { Q::one() } else { Q::zero() }
}

/// A weight of `𝔥_sc`, given by its values on `J_α` and `J*_α`, α ∈ Δ⁺.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ScWeight {
    j: Vec<Q>,
    jstar: Vec<Q>,
}

impl ScWeight {
    pub fn j_values(&self) -> &[Q] {
        &self.j
    }

    pub fn jstar_values(&self) -> &[Q] {
        &self.jstar
    }

    pub fn is_zero(&self) -> bool {
        self.j.iter().all(|x| x.is_zero())
    }

    pub fn add(&self, o: &ScWeight) -> ScWeight {
        ScWeight {
            j: self.j.iter().zip(&o.j).map(|(a, b)| a + b).collect(),
            jstar: self.jstar.iter().zip(&o.jstar).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, o: &ScWeight) -> ScWeight {
        ScWeight {
            j: self.j.iter().zip(&o.j).map(|(a, b)| a - b).collect(),
            jstar: self.jstar.iter().zip(&o.jstar).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn neg(&self) -> ScWeight {
        ScWeight { j: self.j.iter().map(|a| -a).collect(), jstar: self.jstar.iter().map(|a| -a).collect() }
    }

    /// Membership in `Q_sc`: all `J*`-values are integers.
    pub fn in_q_sc(&self) -> bool {
        self.jstar.iter().all(|x| x.is_integer())
    }
}

impl fmt::Display for ScWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "J{}", fmt_vec(&self.j))
    }
}

/// A root system at a fixed level together with its four Gram matrices.
#[derive(Clone, Debug)]
pub struct Level {
    rs: RootSystem,
    params: LevelParams,
    g: QMatrix,
    g_star: QMatrix,
    big_g: QMatrix,
    big_g_star: QMatrix,
}

impl Level {
    pub fn new(rs: &RootSystem, k: Q) -> Result<Self> {
        let params = LevelParams::new(rs, k)?;
        Ok(Level {
            g: gram_g(rs, &params),
            g_star: gram_g_star(rs, &params),
            big_g: gram_big_g(rs, &params),
            big_g_star: gram_big_g_star(rs, &params),
            rs: rs.clone(),
            params,
        })
    }

    pub fn rs(&self) -> &RootSystem {
        &self.rs
    }

    pub fn params(&self) -> &LevelParams {
        &self.params
    }

    pub fn k(&self) -> &Q {
        self.params.k()
    }

    pub fn shifted(&self) -> &Q {
        self.params.shifted()
    }

    pub fn g(&self) -> &QMatrix {
        &self.g
    }

    pub fn g_star(&self) -> &QMatrix {
        &self.g_star
    }

    pub fn big_g(&self) -> &QMatrix {
        &self.big_g
    }

    pub fn big_g_star(&self) -> &QMatrix {
        &self.big_g_star
    }

    pub fn sc_from_j(&self, j: Vec<Q>) -> ScWeight {
        let jstar = self.g_star.mul_vec(&j);
        ScWeight { j, jstar }
    }

    pub fn sc_from_jstar(&self, jstar: Vec<Q>) -> ScWeight {
        let j = self.g.mul_vec(&jstar);
        ScWeight { j, jstar }
    }

    pub fn sc_zero(&self) -> ScWeight {
        let n = self.rs.num_positive();
        ScWeight { j: vec![Q::zero(); n], jstar: vec![Q::zero(); n] }
    }

    /// `μ_sc(J_α) = (μ,α)/k`.
    pub fn weight_to_sc(&self, mu: &Weight) -> ScWeight {
        let j = (0..self.rs.num_positive())
            .map(|a| self.rs.normalized_form(mu, &self.rs.positive_weight(a)) / self.k())
            .collect();
        self.sc_from_j(j)
    }

    /// `(μ_af, α) = k μ(J_α)` for α ∈ Π.
    pub fn sc_weight_to_af(&self, mu: &ScWeight) -> Weight {
        let l = self.rs.rank();
        let pairings: Vec<Q> = mu.j[..l].iter().map(|x| x * self.k()).collect();
        Weight(self.rs.inverse_symmetrized_cartan().mul_vec(&pairings))
    }

    /// `g⁺_sc(ξ)`: J*-values `⟨ξ,β⁺⟩`.
    pub fn g_sc_plus(&self, xi: &LatticeVector) -> ScWeight {
        self.sc_from_jstar(crate::lattice::g_sc_plus_jstar(&self.rs, xi))
    }

    /// `g⁻_sc(ζ)`: J*-values `⟨ζ,β⁻⟩` on Π and zero elsewhere.
    pub fn g_sc_minus(&self, zeta: &LatticeVector) -> ScWeight {
        self.sc_from_jstar(crate::lattice::g_sc_minus_jstar(&self.rs, zeta))
    }

    /// `Δ⁺_μ = (μ,μ) / (2(k+h∨))`.
    pub fn conformal_weight_plus(&self, mu: &Weight) -> Q {
        self.rs.normalized_form(mu, mu) / (q(2) * self.shifted())
    }

    /// `−½ λ(J*)ᵀ G* λ(J*)`, the lowest energy of the `H⁻` Fock module attached
    /// to `λ`; equals `Δ⁺_μ` on `λ = μ_sc`.
    pub fn conformal_weight_minus(&self, lambda: &ScWeight) -> Q {
        let v = self.big_g_star.mul_vec(&lambda.jstar);
        let s: Q = lambda.jstar.iter().zip(&v).map(|(a, b)| a * b).sum();
        -s / q(2)
    }

    pub fn central_charges(&self) -> CentralCharges {
        let n = q(self.rs.num_positive() as i64);
        let l = q(self.rs.rank() as i64);
        let dim = q(self.rs.dim() as i64);
        let c_af = self.k() * &dim / self.shifted();
        let c_sc = &c_af + &n - &l;
        // k dim g/(k+h∨) + ½ dim 𝔥⊥ − dim 𝔥, with dim 𝔥⊥ = 2N.
        let c_sc_alt = self.k() * &dim / self.shifted() + (q(2) * &n) / q(2) - &l;
        CentralCharges { c_af, c_sc, c_sc_alt }
    }

    /// Checks `μ(J_α) − (μ_af)_sc(J_α) ∈ ℤ` for all α, after verifying that `μ`
    /// is integral on `ξ̃(α) = J_α − Σ_{β∈Π} α(β*) J_β`.
    pub fn converse_congruence_check(&self, mu: &ScWeight) -> ConverseReport {
        let l = self.rs.rank();
        let mut violations = Vec::new();
        for a in l..self.rs.num_positive() {
            let root = self.rs.positive_root(a);
            let mut v = mu.j[a].clone();
            for (b, &c) in root.iter().enumerate() {
                v -= q(c) * &mu.j[b];
            }
            if !v.is_integer() {
                violations.push(ConverseViolation { root: root.to_vec(), value: v });
            }
        }
        if !violations.is_empty() {
            return ConverseReport { hypothesis_holds: false, violations, differences: vec![], verdict: false };
        }
        let back = self.weight_to_sc(&self.sc_weight_to_af(mu));
        let differences: Vec<Q> = mu.j.iter().zip(&back.j).map(|(a, b)| a - b).collect();
        let verdict = differences.iter().all(|d| d.is_integer());
        ConverseReport { hypothesis_holds: true, violations, differences, verdict }
    }

    /// Rows of the map `i`: `α̌_i ↦ ((α̌_i, α))_{α∈Δ⁺}` and `ε_β ↦ e_β` for β ∉ Π.
    pub fn e_minus_embedding(&self) -> QMatrix {
        let l = self.rs.rank();
        let n = self.rs.num_positive();
        QMatrix::from_fn(n, n, |r, c| {
            if r < l {
                let simple = self.rs.positive_root(r);
                let check = self.rs.coroot(simple);
                self.rs.normalized_form(&check, &self.rs.positive_weight(c))
            } else {
                delta(r, c)
            }
        })
    }

    /// `M G* Mᵀ` for the embedding `M` above; should equal the Gram matrix of `E⁻`.
    pub fn e_minus_pullback_gram(&self) -> QMatrix {
        let m = self.e_minus_embedding();
        m.mul(&self.big_g_star).mul(&m.transpose())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CentralCharges {
    pub c_af: Q,
    pub c_sc: Q,
    pub c_sc_alt: Q,
}

impl CentralCharges {
    pub fn formulas_agree(&self) -> bool {
        self.c_sc == self.c_sc_alt
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConverseViolation {
    pub root: Vec<i64>,
    pub value: Q,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConverseReport {
    pub hypothesis_holds: bool,
    pub violations: Vec<ConverseViolation>,
    /// `μ(J_α) − (μ_af)_sc(J_α)` per α ∈ Δ⁺ (empty when the hypothesis fails).
    pub differences: Vec<Q>,
    pub verdict: bool,
}
