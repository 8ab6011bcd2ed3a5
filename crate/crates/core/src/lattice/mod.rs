//! Integral lattices with a bimultiplicative `{±1}`-valued 2-cocycle.

mod enumerate;
mod fermionic;
mod snf;

pub use enumerate::enumerate_by_norm;
pub use fermionic::*;
pub use snf::{discriminant_group, smith_diagonal};

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::QMatrix;
use crate::rational::q;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Signature {
    PositiveDefinite,
    NegativeDefinite,
    Indefinite,
    Zero,
}

/// Integer coordinates over the basis of some lattice.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LatticeVector(pub Vec<i64>);

impl LatticeVector {
    pub fn zero(n: usize) -> Self {
        LatticeVector(vec![0; n])
    }

    pub fn unit(n: usize, i: usize) -> Self {
        let mut v = vec![0; n];
        v[i] = 1;
        LatticeVector(v)
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    pub fn add(&self, o: &Self) -> Self {
        LatticeVector(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, o: &Self) -> Self {
        LatticeVector(self.0.iter().zip(&o.0).map(|(a, b)| a - b).collect())
    }

    pub fn neg(&self) -> Self {
        LatticeVector(self.0.iter().map(|a| -a).collect())
    }

    pub fn scale(&self, s: i64) -> Self {
        LatticeVector(self.0.iter().map(|a| a * s).collect())
    }

    pub fn concat(&self, o: &Self) -> Self {
        let mut v = self.0.clone();
        v.extend_from_slice(&o.0);
        LatticeVector(v)
    }
}

impl fmt::Display for LatticeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegralLattice {
    labels: Vec<String>,
    gram: Vec<Vec<i64>>,
    /// `minus[i][j]` is true when `ε(e_i, e_j) = −1`.
    minus: Vec<Vec<bool>>,
    signature: Signature,
}

impl IntegralLattice {
    /// Installs the cocycle `ε(e_i,e_j) = 1` for `i ≤ j` and
    /// `(−1)^(G_ij + G_ii G_jj)` for `i > j`.
    pub fn with_standard_cocycle(labels: Vec<String>, gram: Vec<Vec<i64>>) -> Result<Self> {
        let n = gram.len();
        let minus = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| i > j && (gram[i][j] + gram[i][i] * gram[j][j]).rem_euclid(2) == 1)
                    .collect()
            })
            .collect();
        Self::new(labels, gram, minus)
    }

    pub fn new(labels: Vec<String>, gram: Vec<Vec<i64>>, minus: Vec<Vec<bool>>) -> Result<Self> {
        let n = gram.len();
        if labels.len() != n || minus.len() != n {
            return Err(Error::InvalidLattice("basis size mismatch".into()));
        }
        for i in 0..n {
            if gram[i].len() != n || minus[i].len() != n {
                return Err(Error::InvalidLattice("Gram matrix is not square".into()));
            }
            for j in 0..n {
                if gram[i][j] != gram[j][i] {
                    return Err(Error::InvalidLattice("Gram matrix is not symmetric".into()));
                }
            }
        }
        // On basis pairs the identity extends bimultiplicatively to all vectors.
        for i in 0..n {
            for j in 0..n {
                let lhs = minus[i][j] ^ minus[j][i];
                let rhs = (gram[i][j] + gram[i][i] * gram[j][j]).rem_euclid(2) == 1;
                if lhs != rhs {
                    return Err(Error::CocycleIdentity(i, j));
                }
            }
        }
        let signature = signature_of(&gram);
        Ok(IntegralLattice { labels, gram, minus, signature })
    }

    pub fn zero() -> Self {
        IntegralLattice { labels: vec![], gram: vec![], minus: vec![], signature: Signature::Zero }
    }

    pub fn rank(&self) -> usize {
        self.gram.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn gram(&self) -> &[Vec<i64>] {
        &self.gram
    }

    pub fn gram_q(&self) -> QMatrix {
        QMatrix::from_i64(&self.gram)
    }

    pub fn signature(&self) -> Signature {
        self.signature
    }

    pub fn is_definite(&self) -> bool {
        matches!(self.signature, Signature::PositiveDefinite | Signature::NegativeDefinite | Signature::Zero)
    }

    pub fn inner(&self, x: &[i64], y: &[i64]) -> i64 {
        let mut acc = 0;
        for (i, &a) in x.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in y.iter().enumerate() {
                acc += a * self.gram[i][j] * b;
            }
        }
        acc
    }

    pub fn norm(&self, x: &[i64]) -> i64 {
        self.inner(x, x)
    }

    /// Parity `⟨x,x⟩ mod 2`; `true` for odd vectors.
    pub fn is_odd(&self, x: &[i64]) -> bool {
        self.norm(x).rem_euclid(2) == 1
    }

    /// `ε(x, y) ∈ {±1}`, extended bimultiplicatively.
    pub fn epsilon(&self, x: &[i64], y: &[i64]) -> i64 {
        let mut parity = 0i64;
        for (i, &a) in x.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in y.iter().enumerate() {
                if self.minus[i][j] {
                    parity += a * b;
                }
            }
        }
        if parity.rem_euclid(2) == 0 { 1 } else { -1 }
    }

    pub fn epsilon_basis(&self, i: usize, j: usize) -> i64 {
        if self.minus[i][j] { -1 } else { 1 }
    }

    /// Checks `ε(x,y)ε(y,x) = (−1)^(⟨x,y⟩ + ⟨x,x⟩⟨y,y⟩)`.
    pub fn cocycle_identity_holds(&self, x: &[i64], y: &[i64]) -> bool {
        let lhs = self.epsilon(x, y) * self.epsilon(y, x);
        let e = self.inner(x, y) + self.norm(x) * self.norm(y);
        let rhs = if e.rem_euclid(2) == 0 { 1 } else { -1 };
        lhs == rhs
    }

    /// `self ⊕ other` with the super tensor-product sign: moving an element of
    /// the second summand past one of the first costs `(−1)^(|x||y|)`.
    pub fn orthogonal_sum(&self, other: &IntegralLattice) -> IntegralLattice {
        let (n1, n2) = (self.rank(), other.rank());
        let n = n1 + n2;
        let mut gram = vec![vec![0; n]; n];
        let mut minus = vec![vec![false; n]; n];
        for i in 0..n1 {
            for j in 0..n1 {
                gram[i][j] = self.gram[i][j];
                minus[i][j] = self.minus[i][j];
            }
        }
        for i in 0..n2 {
            for j in 0..n2 {
                gram[n1 + i][n1 + j] = other.gram[i][j];
                minus[n1 + i][n1 + j] = other.minus[i][j];
            }
        }
        for i in 0..n2 {
            for j in 0..n1 {
                minus[n1 + i][j] = (other.gram[i][i] * self.gram[j][j]).rem_euclid(2) == 1;
            }
        }
        let mut labels = self.labels.clone();
        labels.extend(other.labels.iter().cloned());
        IntegralLattice::new(labels, gram, minus).expect("orthogonal sum of valid lattices is valid")
    }

    /// Same Gram matrix, all entries multiplied by `s`, with the standard cocycle.
    pub fn scaled(&self, s: i64) -> Result<IntegralLattice> {
        let gram = self.gram.iter().map(|r| r.iter().map(|x| x * s).collect()).collect();
        Self::with_standard_cocycle(self.labels.clone(), gram)
    }

    pub fn determinant(&self) -> crate::rational::Q {
        if self.rank() == 0 {
            return q(1);
        }
        self.gram_q().determinant()
    }
}

fn signature_of(gram: &[Vec<i64>]) -> Signature {
    let n = gram.len();
    if n == 0 {
        return Signature::Zero;
    }
    let m = QMatrix::from_i64(gram);
    let pos = m.ldl().map(|(d, _)| d.iter().all(|x| *x > q(0))).unwrap_or(false);
    if pos {
        return Signature::PositiveDefinite;
    }
    let neg = m.scale(&q(-1)).ldl().map(|(d, _)| d.iter().all(|x| *x > q(0))).unwrap_or(false);
    if neg { Signature::NegativeDefinite } else { Signature::Indefinite }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn identity(n: usize) -> IntegralLattice {
        let gram = (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect();
        IntegralLattice::with_standard_cocycle((0..n).map(|i| format!("e{i}")).collect(), gram).unwrap()
    }

    #[test]
    fn standard_cocycle_on_odd_unimodular() {
        let l = identity(3);
        assert_eq!(l.epsilon_basis(0, 1), 1);
        assert_eq!(l.epsilon_basis(1, 0), -1);
        assert_eq!(l.epsilon_basis(1, 1), 1);
        assert_eq!(l.signature(), Signature::PositiveDefinite);
    }

    #[test]
    fn bad_cocycle_rejected() {
        let gram = vec![vec![1, 0], vec![0, 1]];
        let minus = vec![vec![false, false], vec![false, false]];
        assert_eq!(IntegralLattice::new(vec!["a".into(), "b".into()], gram, minus), Err(Error::CocycleIdentity(0, 1)));
    }

    #[test]
    fn cocycle_identity_on_composite_vectors() {
        let l = identity(3).orthogonal_sum(&identity(2).scaled(-1).unwrap());
        let vs: Vec<Vec<i64>> = vec![vec![1, 0, 2, -1, 0], vec![0, 1, 1, 1, 1], vec![3, -2, 0, 0, 1], vec![0, 0, 0, 1, 0]];
        for x in &vs {
            for y in &vs {
                assert!(l.cocycle_identity_holds(x, y));
            }
        }
    }

    #[test]
    fn indefinite_detected() {
        let l = IntegralLattice::with_standard_cocycle(vec!["a".into(), "b".into()], vec![vec![0, 1], vec![1, 0]]).unwrap();
        assert_eq!(l.signature(), Signature::Indefinite);
    }
}
