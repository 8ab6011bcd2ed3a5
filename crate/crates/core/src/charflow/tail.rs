//! Lower bounds on the exponents a character may carry at weights it does not list.
//!
//! A bound is the pointwise minimum of quadratic functions `c + l·x + xᵀQx` of
//! the weight coordinates; the empty minimum is `+∞` (the weight is known to be
//! absent).

use num_traits::Zero;

use crate::linalg::QMatrix;
use crate::rational::Q;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quadratic {
    pub c: Q,
    pub l: Vec<Q>,
    pub qm: QMatrix,
}

impl Quadratic {
    pub fn constant(dim: usize, c: Q) -> Self {
        Quadratic { c, l: vec![Q::zero(); dim], qm: QMatrix::zeros(dim, dim) }
    }

    pub fn dim(&self) -> usize {
        self.l.len()
    }

    pub fn eval(&self, x: &[Q]) -> Q {
        let qx = self.qm.mul_vec(x);
        let quad: Q = x.iter().zip(&qx).map(|(a, b)| a * b).sum();
        let lin: Q = self.l.iter().zip(x).map(|(a, b)| a * b).sum();
        &self.c + lin + quad
    }

    /// `x ↦ self(A x + b)`.
    pub fn pullback(&self, a: &QMatrix, b: &[Q]) -> Quadratic {
        let at = a.transpose();
        let qb = self.qm.mul_vec(b);
        // c' = c + l·b + bᵀQb
        let c = &self.c + self.l.iter().zip(b).map(|(x, y)| x * y).sum::<Q>() + b.iter().zip(&qb).map(|(x, y)| x * y).sum::<Q>();
        // l' = Aᵀ(l + 2Qb), taking Q symmetric.
        let lin: Vec<Q> = self.l.iter().zip(&qb).map(|(x, y)| x + y + y).collect();
        let l = at.mul_vec(&lin);
        let qm = at.mul(&self.qm).mul(a);
        Quadratic { c, l, qm }
    }

    pub fn add(&self, o: &Quadratic) -> Quadratic {
        Quadratic {
            c: &self.c + &o.c,
            l: self.l.iter().zip(&o.l).map(|(a, b)| a + b).collect(),
            qm: self.qm.add(&o.qm),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct TailBound {
    pieces: Vec<Quadratic>,
}

impl TailBound {
    /// No unlisted weight carries anything.
    pub fn exact() -> Self {
        TailBound { pieces: vec![] }
    }

    pub fn constant(dim: usize, t: Q) -> Self {
        TailBound { pieces: vec![Quadratic::constant(dim, t)] }
    }

    pub fn is_exact(&self) -> bool {
        self.pieces.is_empty()
    }

    pub fn pieces(&self) -> &[Quadratic] {
        &self.pieces
    }

    /// `None` is `+∞`.
    pub fn eval(&self, x: &[Q]) -> Option<Q> {
        self.pieces.iter().map(|p| p.eval(x)).min()
    }

    pub fn pullback(&self, a: &QMatrix, b: &[Q]) -> TailBound {
        TailBound { pieces: self.pieces.iter().map(|p| p.pullback(a, b)).collect() }
    }

    pub fn add_quadratic(&self, q: &Quadratic) -> TailBound {
        TailBound { pieces: self.pieces.iter().map(|p| p.add(q)).collect() }
    }

    pub fn min_with(mut self, piece: Quadratic) -> TailBound {
        if piece.l.iter().all(|x| x.is_zero()) && piece.qm.max_abs().is_zero() {
            // Constant pieces dominated by the new constant are redundant.
            self.pieces.retain(|p| !(p.l.iter().all(|x| x.is_zero()) && p.qm.max_abs().is_zero() && p.c >= piece.c));
        }
        self.pieces.push(piece);
        self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{q, qf};

    #[test]
    fn pullback_matches_composition() {
        let qd = Quadratic {
            c: q(1),
            l: vec![q(2), q(-1)],
            qm: QMatrix::from_rows(vec![vec![qf(1, 2), q(0)], vec![q(0), q(-1)]]),
        };
        let a = QMatrix::from_i64(&[vec![1, 2], vec![0, -1]]);
        let b = vec![q(3), qf(1, 3)];
        let pb = qd.pullback(&a, &b);
        for x in [[q(0), q(0)], [q(1), q(-2)], [qf(5, 7), q(4)]] {
            let y: Vec<Q> = a.mul_vec(&x).iter().zip(&b).map(|(u, v)| u + v).collect();
            assert_eq!(pb.eval(&x), qd.eval(&y));
        }
    }

    #[test]
    fn min_of_pieces() {
        let t = TailBound::constant(1, q(5)).min_with(Quadratic {
            c: q(0),
            l: vec![q(0)],
            qm: QMatrix::from_rows(vec![vec![q(1)]]),
        });
        assert_eq!(t.eval(&[q(1)]), Some(q(1)));
        assert_eq!(t.eval(&[q(3)]), Some(q(5)));
        assert_eq!(TailBound::exact().eval(&[q(3)]), None);
    }
}
