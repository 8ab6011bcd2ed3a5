//! Finite root systems with the normalised invariant form.
//!
//! Roots are stored as integer coordinates in the basis of simple roots.
//! The form `(·,·)` is normalised so that long roots have norm 2. Positive
//! roots are ordered by height and, within a height, by descending
//! lexicographic coordinates; the simple roots therefore occupy the first
//! `ℓ` slots of every `Δ⁺`-indexed layout, in the order `α₁, …, α_ℓ`.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::QMatrix;
use crate::rational::{fmt_vec, q, qf, Q};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Series {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl FromStr for Series {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" => Ok(Series::A),
            "B" => Ok(Series::B),
            "C" => Ok(Series::C),
            "D" => Ok(Series::D),
            "E" => Ok(Series::E),
            "F" => Ok(Series::F),
            "G" => Ok(Series::G),
            _ => Err(Error::InvalidType(s.to_string())),
        }
    }
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CartanType {
    pub series: Series,
    pub rank: usize,
}

impl CartanType {
    pub fn new(series: Series, rank: usize) -> Result<Self> {
        let ok = match series {
            Series::A => rank >= 1,
            Series::B => rank >= 2,
            Series::C => rank >= 3,
            Series::D => rank >= 4,
            Series::E => (6..=8).contains(&rank),
            Series::F => rank == 4,
            Series::G => rank == 2,
        };
        if ok {
            Ok(CartanType { series, rank })
        } else {
            Err(Error::InvalidType(format!("{series}{rank}")))
        }
    }

    pub fn parse(series: &str, rank: usize) -> Result<Self> {
        Self::new(series.parse()?, rank)
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.series, self.rank)
    }
}

/// A weight in `𝔥*`, in simple-root coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight(pub Vec<Q>);

impl Weight {
    pub fn zero(rank: usize) -> Self {
        Weight(vec![Q::zero(); rank])
    }

    pub fn from_ints(v: &[i64]) -> Self {
        Weight(v.iter().map(|&x| q(x)).collect())
    }

    pub fn coords(&self) -> &[Q] {
        &self.0
    }

    pub fn is_in_root_lattice(&self) -> bool {
        self.0.iter().all(|x| x.is_integer())
    }

    /// Same coset of `Q` iff the difference has integer coordinates.
    pub fn same_coset(&self, other: &Weight) -> bool {
        self.0.len() == other.0.len() && self.0.iter().zip(&other.0).all(|(a, b)| (a - b).is_integer())
    }

    pub fn add(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, s: &Q) -> Weight {
        Weight(self.0.iter().map(|a| a * s).collect())
    }

    /// Integer coordinates, if the weight lies in `Q`.
    pub fn to_root_coords(&self) -> Result<Vec<i64>> {
        self.0
            .iter()
            .map(|x| crate::rational::to_i64(x).ok_or_else(|| Error::NotInRootLattice(self.to_string())))
            .collect()
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&fmt_vec(&self.0))
    }
}

#[derive(Clone, Debug)]
pub struct RootSystem {
    ty: CartanType,
    /// `((α_i, α_j))` for simple roots.
    sym: QMatrix,
    /// Inverse of `sym`; row `i` is the fundamental coweight `α_i*` in root coordinates.
    sym_inv: QMatrix,
    positive: Vec<Vec<i64>>,
    root_index: HashMap<Vec<i64>, usize>,
    hvee: i64,
}

impl RootSystem {
    pub fn new(ty: CartanType) -> Result<Self> {
        let sym = symmetrized_cartan(ty);
        let sym_inv = sym.inverse().expect("symmetrized Cartan matrix is nonsingular");
        let positive = positive_roots(&sym);
        let mut root_index = HashMap::new();
        let n = positive.len();
        for (i, r) in positive.iter().enumerate() {
            root_index.insert(r.clone(), i);
            root_index.insert(r.iter().map(|x| -x).collect(), n + i);
        }
        let mut rs = RootSystem { ty, sym, sym_inv, positive, root_index, hvee: 0 };
        rs.hvee = rs.dual_coxeter_from_highest_root();
        let table = dual_coxeter_table(ty);
        assert_eq!(rs.hvee, table, "h^vee from (rho, theta) disagrees with the classification table for {ty}");
        Ok(rs)
    }

    pub fn build(series: &str, rank: usize) -> Result<Self> {
        Self::new(CartanType::parse(series, rank)?)
    }

    pub fn cartan_type(&self) -> CartanType {
        self.ty
    }

    /// `ℓ`
    pub fn rank(&self) -> usize {
        self.ty.rank
    }

    /// `N = |Δ⁺|`
    pub fn num_positive(&self) -> usize {
        self.positive.len()
    }

    pub fn dim(&self) -> usize {
        self.rank() + 2 * self.num_positive()
    }

    pub fn dual_coxeter(&self) -> i64 {
        self.hvee
    }

    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.positive
    }

    pub fn positive_root(&self, i: usize) -> &[i64] {
        &self.positive[i]
    }

    pub fn positive_weight(&self, i: usize) -> Weight {
        Weight::from_ints(&self.positive[i])
    }

    /// `Δ`, indexed as `Δ⁺` followed by `−Δ⁺` in the same order.
    pub fn root(&self, idx: usize) -> Vec<i64> {
        let n = self.num_positive();
        if idx < n {
            self.positive[idx].clone()
        } else {
            self.positive[idx - n].iter().map(|x| -x).collect()
        }
    }

    pub fn num_roots(&self) -> usize {
        2 * self.num_positive()
    }

    pub fn find_root(&self, coords: &[i64]) -> Option<usize> {
        self.root_index.get(coords).copied()
    }

    /// Index of `−α` in `Δ`.
    pub fn negative_of(&self, idx: usize) -> usize {
        let n = self.num_positive();
        if idx < n { idx + n } else { idx - n }
    }

    pub fn is_simple(&self, positive_idx: usize) -> bool {
        positive_idx < self.rank()
    }

    pub fn height(&self, coords: &[i64]) -> i64 {
        coords.iter().sum()
    }

    /// The symmetrised Cartan matrix `((α_i, α_j))`.
    pub fn symmetrized_cartan(&self) -> &QMatrix {
        &self.sym
    }

    /// `c = ((α_i, α_j))⁻¹`.
    pub fn inverse_symmetrized_cartan(&self) -> &QMatrix {
        &self.sym_inv
    }

    pub fn form(&self, a: &[Q], b: &[Q]) -> Q {
        let l = self.rank();
        let mut acc = Q::zero();
        for i in 0..l {
            if a[i].is_zero() {
                continue;
            }
            for j in 0..l {
                if !b[j].is_zero() {
                    acc += &a[i] * self.sym.get(i, j) * &b[j];
                }
            }
        }
        acc
    }

    /// `(λ, μ)` in the normalised form.
    pub fn normalized_form(&self, lambda: &Weight, mu: &Weight) -> Q {
        self.form(&lambda.0, &mu.0)
    }

    pub fn form_int(&self, a: &[i64], b: &[i64]) -> Q {
        let a: Vec<Q> = a.iter().map(|&x| q(x)).collect();
        let b: Vec<Q> = b.iter().map(|&x| q(x)).collect();
        self.form(&a, &b)
    }

    /// `(α, β)` for positive roots by index.
    pub fn root_form(&self, i: usize, j: usize) -> Q {
        self.form_int(&self.positive[i], &self.positive[j])
    }

    pub fn root_norm(&self, coords: &[i64]) -> Q {
        self.form_int(coords, coords)
    }

    pub fn is_long(&self, coords: &[i64]) -> bool {
        self.root_norm(coords) == q(2)
    }

    pub fn is_simply_laced(&self) -> bool {
        matches!(self.ty.series, Series::A | Series::D | Series::E)
    }

    /// `α∨ = 2α/(α,α)` in `𝔥*` coordinates.
    pub fn coroot(&self, coords: &[i64]) -> Weight {
        let s = q(2) / self.root_norm(coords);
        Weight(coords.iter().map(|&x| q(x) * &s).collect())
    }

    /// `H_α = ((α,α)/2) α∨`, identified with `α` itself.
    pub fn h_alpha(&self, coords: &[i64]) -> Weight {
        Weight::from_ints(coords)
    }

    /// Fundamental coweight `α_i*` (dual to the simple roots) in `𝔥*` coordinates.
    pub fn fundamental_coweight(&self, i: usize) -> Weight {
        Weight(self.sym_inv.row(i).to_vec())
    }

    /// Fundamental weight `ϖ_i` with `⟨ϖ_i, α_j∨⟩ = δ_ij`.
    pub fn fundamental_weight(&self, i: usize) -> Weight {
        let half = self.form_int(&unit(self.rank(), i), &unit(self.rank(), i)) / q(2);
        self.fundamental_coweight(i).scale(&half)
    }

    /// `β(α_i*)`: the `i`-th simple-root coordinate of `β`.
    pub fn pair_coweight(&self, beta: &Weight, i: usize) -> Q {
        beta.0[i].clone()
    }

    pub fn rho(&self) -> Weight {
        let l = self.rank();
        let mut acc = vec![Q::zero(); l];
        for r in &self.positive {
            for (a, &x) in acc.iter_mut().zip(r) {
                *a += q(x);
            }
        }
        Weight(acc.into_iter().map(|x| x / q(2)).collect())
    }

    pub fn highest_root(&self) -> &[i64] {
        self.positive.last().expect("nonempty root system")
    }

    /// Gram matrix of `Q_l = ⊕ ℤ α̌`, `α̌ = 2α/(α,α)` for simple `α`.
    pub fn long_root_lattice_gram(&self) -> QMatrix {
        let l = self.rank();
        QMatrix::from_fn(l, l, |i, j| {
            let ni = self.sym.get(i, i);
            let nj = self.sym.get(j, j);
            q(4) * self.sym.get(i, j) / (ni * nj)
        })
    }

    /// `Σ_{α∈Δ⁺} (λ, α) α` and `h∨ λ`.
    pub fn check_hvee_identity(&self, lambda: &Weight) -> HveeWitness {
        let l = self.rank();
        let mut lhs = vec![Q::zero(); l];
        for r in &self.positive {
            let rq: Vec<Q> = r.iter().map(|&x| q(x)).collect();
            let c = self.form(&lambda.0, &rq);
            for (a, x) in lhs.iter_mut().zip(&rq) {
                *a += &c * x;
            }
        }
        let rhs = lambda.scale(&q(self.hvee));
        let holds = lhs == rhs.0;
        HveeWitness { lhs: Weight(lhs), rhs, holds }
    }

    fn dual_coxeter_from_highest_root(&self) -> i64 {
        let theta: Vec<Q> = self.highest_root().iter().map(|&x| q(x)).collect();
        let theta_norm = self.form(&theta, &theta);
        assert_eq!(theta_norm, q(2), "highest root must be long");
        // ⟨ρ, θ∨⟩ with θ∨ = 2θ/(θ,θ) = θ.
        let pairing = self.form(&self.rho().0, &theta);
        let h = Q::one() + pairing;
        crate::rational::to_i64(&h).expect("h^vee is an integer")
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HveeWitness {
    pub lhs: Weight,
    pub rhs: Weight,
    pub holds: bool,
}

fn unit(n: usize, i: usize) -> Vec<i64> {
    let mut v = vec![0; n];
    v[i] = 1;
    v
}

fn dual_coxeter_table(ty: CartanType) -> i64 {
    let n = ty.rank as i64;
    match ty.series {
        Series::A => n + 1,
        Series::B => 2 * n - 1,
        Series::C => n + 1,
        Series::D => 2 * n - 2,
        Series::E => match n {
            6 => 12,
            7 => 18,
            _ => 30,
        },
        Series::F => 9,
        Series::G => 4,
    }
}

/// Norms of the simple roots and the off-diagonal bonds, Bourbaki labelling.
fn symmetrized_cartan(ty: CartanType) -> QMatrix {
    let n = ty.rank;
    let mut norms = vec![q(2); n];
    let mut bonds: Vec<(usize, usize, Q)> = Vec::new();
    let chain = |bonds: &mut Vec<(usize, usize, Q)>, upto: usize, w: Q| {
        for i in 0..upto {
            bonds.push((i, i + 1, w.clone()));
        }
    };
    match ty.series {
        Series::A => chain(&mut bonds, n - 1, q(-1)),
        Series::B => {
            norms[n - 1] = q(1);
            chain(&mut bonds, n - 1, q(-1));
        }
        Series::C => {
            for x in norms.iter_mut().take(n - 1) {
                *x = q(1);
            }
            chain(&mut bonds, n - 2, qf(-1, 2));
            bonds.push((n - 2, n - 1, q(-1)));
        }
        Series::D => {
            chain(&mut bonds, n - 2, q(-1));
            bonds.push((n - 3, n - 1, q(-1)));
        }
        Series::E => {
            // α1-α3-α4-α5-α6(-α7(-α8)), α2-α4
            bonds.push((0, 2, q(-1)));
            bonds.push((1, 3, q(-1)));
            for i in 2..n - 1 {
                bonds.push((i, i + 1, q(-1)));
            }
        }
        Series::F => {
            norms[2] = q(1);
            norms[3] = q(1);
            bonds.push((0, 1, q(-1)));
            bonds.push((1, 2, q(-1)));
            bonds.push((2, 3, qf(-1, 2)));
        }
        Series::G => {
            norms[0] = qf(2, 3);
            bonds.push((0, 1, q(-1)));
        }
    }
    let mut m = QMatrix::zeros(n, n);
    for (i, x) in norms.into_iter().enumerate() {
        m.set(i, i, x);
    }
    for (i, j, w) in bonds {
        m.set(i, j, w.clone());
        m.set(j, i, w);
    }
    m
}

/// Closure of the simple roots under simple reflections, positive part only.
fn positive_roots(sym: &QMatrix) -> Vec<Vec<i64>> {
    let l = sym.rows();
    let mut seen: BTreeSet<Vec<i64>> = BTreeSet::new();
    let mut frontier: Vec<Vec<i64>> = (0..l).map(|i| unit(l, i)).collect();
    seen.extend(frontier.iter().cloned());
    while let Some(beta) = frontier.pop() {
        for i in 0..l {
            // ⟨β, α_i∨⟩ = 2(β, α_i)/(α_i, α_i)
            let mut pair = Q::zero();
            for (j, &b) in beta.iter().enumerate() {
                pair += q(b) * sym.get(j, i);
            }
            let c = q(2) * pair / sym.get(i, i);
            let c = crate::rational::to_i64(&c).expect("Cartan integers are integral");
            let mut image = beta.clone();
            image[i] -= c;
            if image.iter().all(|&x| x >= 0) && image.iter().any(|&x| x > 0) && seen.insert(image.clone()) {
                frontier.push(image);
            }
        }
    }
    let mut roots: Vec<Vec<i64>> = seen.into_iter().collect();
    roots.sort_by(|a, b| {
        let ha: i64 = a.iter().sum();
        let hb: i64 = b.iter().sum();
        ha.cmp(&hb).then_with(|| b.cmp(a))
    });
    roots
}
