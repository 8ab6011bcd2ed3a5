//! The free-field realisation inside `V^k(𝔤) ⊗ V_{L⁺} ⊗ V_{L⁻}`.
//!
//! Boson index `i < N` is `α_i⁺` (Δ⁺ order), index `N + i` is `α_i⁻` (α_i ∈ Π).

use num_traits::{One, Zero};

use super::engine::ContractionTable;
use super::field::{AffineSym, Field, FieldNames};
use crate::bilinear::Level;
use crate::lattice::{alpha_f, build_l_minus, build_l_plus, root_label};
use crate::rational::{q, Q};
use crate::rootsys::Weight;

#[derive(Clone, Debug)]
pub struct FreeFields {
    level: Level,
    table: ContractionTable,
}

impl FreeFields {
    pub fn new(level: &Level) -> Self {
        let rs = level.rs();
        let lattice = build_l_plus(rs).orthogonal_sum(&build_l_minus(rs));
        FreeFields { table: ContractionTable::new(rs, level.k().clone(), lattice), level: level.clone() }
    }

    pub fn level(&self) -> &Level {
        &self.level
    }

    pub fn table(&self) -> &ContractionTable {
        &self.table
    }

    pub fn dim(&self) -> usize {
        self.table.dim()
    }

    fn n(&self) -> usize {
        self.level.rs().num_positive()
    }

    fn l(&self) -> usize {
        self.level.rs().rank()
    }

    /// `X_α`, α ∈ Δ by index.
    pub fn x(&self, root_idx: usize) -> Field {
        Field::affine(self.dim(), AffineSym::Root(root_idx))
    }

    /// `H_λ = Σ λ_i H_{α_i}`, `λ` in simple-root coordinates.
    pub fn h(&self, lambda: &Weight) -> Field {
        let mut f = Field::zero(self.dim());
        for (i, c) in lambda.coords().iter().enumerate() {
            if !c.is_zero() {
                f.add_assign(&Field::affine(self.dim(), AffineSym::Cartan(i)).scale(c));
            }
        }
        f
    }

    pub fn boson(&self, v: &[Q]) -> Field {
        Field::boson(self.dim(), v)
    }

    fn plus_boson(&self, a: usize) -> Field {
        let mut v = vec![Q::zero(); self.dim()];
        v[a] = Q::one();
        self.boson(&v)
    }

    fn minus_boson(&self, i: usize) -> Field {
        let mut v = vec![Q::zero(); self.dim()];
        v[self.n() + i] = Q::one();
        self.boson(&v)
    }

    /// `b_{f⁺λ} ` and `b_{f⁻λ}` for rational `λ`, extended linearly.
    fn f_bosons(&self, lambda: &Weight) -> (Field, Field) {
        let mut vp = vec![Q::zero(); self.dim()];
        let mut vm = vec![Q::zero(); self.dim()];
        for (i, c) in lambda.coords().iter().enumerate() {
            vp[i] = c.clone();
            vm[self.n() + i] = c.clone();
        }
        (self.boson(&vp), self.boson(&vm))
    }

    /// `b_{α_f}` with `α_f = Σ_β (α,β) β⁺`.
    pub fn alpha_f(&self, a: usize) -> Field {
        let rs = self.level.rs();
        let mut v = alpha_f(rs, &rs.positive_weight(a));
        v.resize(self.dim(), Q::zero());
        self.boson(&v)
    }

    /// `J_α = k⁻¹ H_α + b_{α⁺}`.
    pub fn j(&self, a: usize) -> Field {
        let h = self.h(&self.level.rs().positive_weight(a));
        h.scale(&(Q::one() / self.level.k())).add(&self.plus_boson(a))
    }

    /// `H⁺_α = H_α − b_{α_f}`.
    pub fn h_plus(&self, a: usize) -> Field {
        self.h(&self.level.rs().positive_weight(a)).sub(&self.alpha_f(a))
    }

    /// `J*_α = (k+h∨)⁻¹ H⁺_α + b_{α⁺}`.
    pub fn j_star(&self, a: usize) -> Field {
        self.h_plus(a).scale(&(Q::one() / self.level.shifted())).add(&self.plus_boson(a))
    }

    /// `H⁻_α = J*_α + b_{α⁻}` for simple α, `J*_α` otherwise.
    pub fn h_minus(&self, a: usize) -> Field {
        let base = self.j_star(a);
        if a < self.l() { base.add(&self.minus_boson(a)) } else { base }
    }

    /// `(H⁻_α)* = Σ_β G*_{αβ} H⁻_β`, the dual basis under `G`.
    pub fn h_minus_dual(&self, a: usize) -> Field {
        let gs = self.level.big_g_star();
        let mut f = Field::zero(self.dim());
        for b in 0..self.n() {
            let c = gs.get(a, b);
            if !c.is_zero() {
                f.add_assign(&self.h_minus(b).scale(c));
            }
        }
        f
    }

    /// `ξ̃(α) = J_α − Σ_{β∈Π} α(β*) J_β`.
    pub fn xi_tilde(&self, a: usize) -> Field {
        let root = self.level.rs().positive_root(a).to_vec();
        let mut f = self.j(a);
        for (b, &c) in root.iter().enumerate() {
            if c != 0 {
                f = f.sub(&self.j(b).scale(&q(c)));
            }
        }
        f
    }

    /// Exponent `f⁺(γ) ⊕ f⁻(γ)` for integral `γ` in root coordinates.
    pub fn f_exp(&self, gamma: &[i64]) -> Vec<i64> {
        let mut e = vec![0; self.dim()];
        for (i, &c) in gamma.iter().enumerate() {
            e[i] = c;
            e[self.n() + i] = c;
        }
        e
    }

    /// `X̃_α = X_α ⊗ e^{f⁺α} ⊗ e^{f⁻α}`.
    pub fn x_tilde(&self, root_idx: usize) -> Field {
        let e = Field::exponential(self.f_exp(&self.level.rs().root(root_idx)));
        self.x(root_idx).tensor(&e)
    }

    /// `H̃_λ = H_λ + k b_{f⁺λ} + k b_{f⁻λ}`.
    pub fn h_tilde(&self, lambda: &Weight) -> Field {
        let (p, m) = self.f_bosons(lambda);
        self.h(lambda).add(&p.add(&m).scale(self.level.k()))
    }

    pub fn names(&self) -> FieldNames {
        let rs = self.level.rs().clone();
        let rs_roots = rs.clone();
        let n = self.n();
        let labels: Vec<String> = (0..self.dim())
            .map(|i| {
                if i < n {
                    format!("{}+", root_label(rs.positive_root(i)))
                } else {
                    format!("{}-", root_label(rs.positive_root(i - n)))
                }
            })
            .collect();
        FieldNames {
            affine: Box::new(move |s| match s {
                AffineSym::Root(a) => format!("X{}", root_label(&rs.root(a))),
                AffineSym::Cartan(i) => format!("H{}", root_label(rs.positive_root(i))),
            }),
            boson: Box::new(move |i| labels[i].clone()),
            root: Box::new(move |a| root_label(&rs_roots.root(a))),
        }
    }
}
