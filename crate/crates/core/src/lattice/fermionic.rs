//! The lattices attached to a root system: `L⁺ = ℤ^Δ⁺`, `L⁻ = ℤ^Π` with
//! negated form, the kernel `K` of `g⁺_af`, `Q∨_sc` and the scaled lattices `E±`.

use num_traits::Zero;

use super::{IntegralLattice, LatticeVector};
use crate::error::{Error, Result};
use crate::rational::{q, to_i64, Q};
use crate::rootsys::{RootSystem, Weight};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

pub fn root_label(coords: &[i64]) -> String {
    let parts: Vec<String> = coords.iter().map(|c| c.to_string()).collect();
    format!("({})", parts.join(","))
}

/// `L⁺` with basis `α⁺` (α ∈ Δ⁺), identity Gram and `ε(e_i,e_j) = −1` iff `i > j`.
pub fn build_l_plus(rs: &RootSystem) -> IntegralLattice {
    let n = rs.num_positive();
    let gram = (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect();
    let labels = rs.positive_roots().iter().map(|r| format!("{}+", root_label(r))).collect();
    IntegralLattice::with_standard_cocycle(labels, gram).expect("L+ is a valid lattice")
}

/// `L⁻` with basis `α⁻` (α ∈ Π), Gram `−I` and `ε⁻ = −ε⁺` on generators.
pub fn build_l_minus(rs: &RootSystem) -> IntegralLattice {
    let l = rs.rank();
    let gram = (0..l).map(|i| (0..l).map(|j| -i64::from(i == j)).collect()).collect();
    let minus = (0..l).map(|i| (0..l).map(|j| i <= j).collect()).collect();
    let labels = (0..l).map(|i| format!("{}-", root_label(rs.positive_root(i)))).collect();
    IntegralLattice::new(labels, gram, minus).expect("L- satisfies the cocycle identity")
}

/// `f±_af(γ) = Σ_{α∈Π} γ(α*) α±` for `γ ∈ Q`.
pub fn f_af(rs: &RootSystem, gamma: &Weight, sign: Sign) -> Result<LatticeVector> {
    let c = gamma.to_root_coords()?;
    Ok(match sign {
        Sign::Plus => {
            let mut v = vec![0; rs.num_positive()];
            v[..rs.rank()].copy_from_slice(&c);
            LatticeVector(v)
        }
        Sign::Minus => LatticeVector(c),
    })
}

/// `g⁺_af(ξ) = Σ_{α∈Δ⁺} ⟨ξ,α⁺⟩ α`.
pub fn g_af_plus(rs: &RootSystem, xi: &LatticeVector) -> Weight {
    let mut acc = vec![0i64; rs.rank()];
    for (a, &x) in rs.positive_roots().iter().zip(&xi.0) {
        for (s, &c) in acc.iter_mut().zip(a) {
            *s += x * c;
        }
    }
    Weight::from_ints(&acc)
}

/// `g⁻_af(ζ) = Σ_{α∈Π} ⟨ζ,α⁻⟩ α`; since `⟨α⁻,α⁻⟩ = −1` this is `−ζ` in root coordinates.
pub fn g_af_minus(_rs: &RootSystem, zeta: &LatticeVector) -> Weight {
    Weight(zeta.0.iter().map(|&x| q(-x)).collect())
}

/// J*-values `⟨ξ,β⁺⟩` of `g⁺_sc(ξ)`, β ∈ Δ⁺.
pub fn g_sc_plus_jstar(_rs: &RootSystem, xi: &LatticeVector) -> Vec<Q> {
    xi.0.iter().map(|&x| q(x)).collect()
}

/// J*-values of `g⁻_sc(ζ)`: `⟨ζ,β⁻⟩` on Π, zero elsewhere.
pub fn g_sc_minus_jstar(rs: &RootSystem, zeta: &LatticeVector) -> Vec<Q> {
    let mut v = vec![Q::zero(); rs.num_positive()];
    for (i, &z) in zeta.0.iter().enumerate() {
        v[i] = q(-z);
    }
    v
}

/// `α_f = Σ_{β∈Δ⁺} (α,β) β⁺`, a vector of `L⁺ ⊗ ℚ`.
pub fn alpha_f(rs: &RootSystem, alpha: &Weight) -> Vec<Q> {
    (0..rs.num_positive())
        .map(|j| rs.normalized_form(alpha, &rs.positive_weight(j)))
        .collect()
}

/// The kernel `K ⊂ L⁺` with its basis `ξ(α) = α⁺ − f⁺_af(α)`, α ∈ Δ⁺∖Π.
#[derive(Clone, Debug)]
pub struct KernelLattice {
    pub lattice: IntegralLattice,
    /// Basis vectors written in `L⁺` coordinates.
    pub embedding: Vec<LatticeVector>,
}

pub fn xi_alpha(rs: &RootSystem, positive_idx: usize) -> LatticeVector {
    let mut v = LatticeVector::unit(rs.num_positive(), positive_idx);
    for (i, &c) in rs.positive_root(positive_idx).iter().enumerate() {
        v.0[i] -= c;
    }
    v
}

pub fn kernel_k(rs: &RootSystem) -> KernelLattice {
    let lp = build_l_plus(rs);
    let embedding: Vec<LatticeVector> = (rs.rank()..rs.num_positive()).map(|i| xi_alpha(rs, i)).collect();
    if embedding.is_empty() {
        return KernelLattice { lattice: IntegralLattice::zero(), embedding };
    }
    let m = embedding.len();
    let gram = (0..m).map(|i| (0..m).map(|j| lp.inner(&embedding[i].0, &embedding[j].0)).collect()).collect();
    let minus = (0..m)
        .map(|i| (0..m).map(|j| lp.epsilon(&embedding[i].0, &embedding[j].0) == -1).collect())
        .collect();
    let labels = (rs.rank()..rs.num_positive()).map(|i| format!("xi{}", root_label(rs.positive_root(i)))).collect();
    let lattice = IntegralLattice::new(labels, gram, minus).expect("restriction of the L+ cocycle");
    KernelLattice { lattice, embedding }
}

/// `Q∨_sc = ⊕ ℤ J_α` with `⟨J_α,J_β⟩ = (α,β) + δ_{α,β}`; simply-laced types only.
pub fn build_qsc_dual_lattice(rs: &RootSystem) -> Result<IntegralLattice> {
    if !rs.is_simply_laced() {
        return Err(Error::NotSimplyLaced(rs.cartan_type().to_string()));
    }
    let n = rs.num_positive();
    let gram = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| to_i64(&rs.root_form(i, j)).expect("simply laced forms are integral") + i64::from(i == j))
                .collect()
        })
        .collect();
    let labels = rs.positive_roots().iter().map(|r| format!("J{}", root_label(r))).collect();
    IntegralLattice::with_standard_cocycle(labels, gram)
}

fn positive_integer_level(rs: &RootSystem, k: &Q) -> Result<i64> {
    match to_i64(k) {
        Some(v) if v > 0 => Ok(v + rs.dual_coxeter()),
        _ => Err(Error::NonPositiveIntegerLevel(crate::rational::fmt_q(k))),
    }
}

fn long_root_gram_int(rs: &RootSystem) -> Vec<Vec<i64>> {
    let g = rs.long_root_lattice_gram();
    (0..rs.rank()).map(|i| (0..rs.rank()).map(|j| to_i64(g.get(i, j)).expect("Q_l is integral")).collect()).collect()
}

/// `√(k+h∨) Q_l`: Gram `(k+h∨)·((α̌_i, α̌_j))`.
pub fn build_e_plus_lattice(rs: &RootSystem, k: &Q) -> Result<IntegralLattice> {
    let kk = positive_integer_level(rs, k)?;
    let gram = long_root_gram_int(rs).into_iter().map(|r| r.into_iter().map(|x| kk * x).collect()).collect();
    let labels = (0..rs.rank()).map(|i| format!("a{}", i + 1)).collect();
    IntegralLattice::with_standard_cocycle(labels, gram)
}

/// `√(−(k+h∨)) Q_l ⊕ ℤ^(N−ℓ)`.
pub fn build_e_minus_lattice(rs: &RootSystem, k: &Q) -> Result<IntegralLattice> {
    let kk = positive_integer_level(rs, k)?;
    let l = rs.rank();
    let n = rs.num_positive();
    let ql = long_root_gram_int(rs);
    let mut gram = vec![vec![0i64; n]; n];
    for i in 0..l {
        for j in 0..l {
            gram[i][j] = -kk * ql[i][j];
        }
    }
    for i in l..n {
        gram[i][i] = 1;
    }
    let mut labels: Vec<String> = (0..l).map(|i| format!("a{}", i + 1)).collect();
    labels.extend((l..n).map(|i| format!("eps{}", root_label(rs.positive_root(i)))));
    IntegralLattice::with_standard_cocycle(labels, gram)
}

/// `{ξ ∈ L⁺ : |ξ|² ≤ bound, g⁺_af(ξ) = 0}` by scanning the L⁺ ball.
pub fn brute_force_kernel(rs: &RootSystem, bound: i64) -> Result<Vec<LatticeVector>> {
    let lp = build_l_plus(rs);
    let all = super::enumerate_by_norm(&lp, &q(bound))?;
    Ok(all.into_iter().filter(|v| g_af_plus(rs, v).0.iter().all(|x| x.is_zero())).collect())
}

/// Whether `v ∈ ℤ^N` lies in the ℤ-span of the given kernel basis. The basis
/// is unitriangular on the non-simple coordinates, so membership is
/// decided by those coordinates alone.
pub fn in_kernel_span(rs: &RootSystem, k: &KernelLattice, v: &LatticeVector) -> bool {
    let l = rs.rank();
    let mut acc = LatticeVector::zero(rs.num_positive());
    for (b, &c) in k.embedding.iter().zip(&v.0[l..]) {
        acc = acc.add(&b.scale(c));
    }
    acc == *v
}

pub fn abs_norm(l: &IntegralLattice, v: &LatticeVector) -> i64 {
    l.norm(&v.0).abs()
}
