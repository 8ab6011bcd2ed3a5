use num_traits::{Signed, Zero};

use super::{IntegralLattice, LatticeVector, Signature};
use crate::error::{Error, Result};
use crate::linalg::QMatrix;
use crate::rational::{floor_i64, isqrt_floor, q, Q};

/// All `v` with `|⟨v,v⟩| ≤ bound`, sorted by `(|norm|, coordinates)`.
///
/// Works coordinate by coordinate from the last one down, bounding each
/// coordinate exactly through the `L D Lᵀ` decomposition of the Gram matrix.
pub fn enumerate_by_norm(lattice: &IntegralLattice, bound: &Q) -> Result<Vec<LatticeVector>> {
    if bound.is_negative() {
        return Err(Error::InvalidArgument("norm bound must be nonnegative".into()));
    }
    let n = lattice.rank();
    let sign = match lattice.signature() {
        Signature::Zero => return Ok(vec![LatticeVector(vec![])]),
        Signature::PositiveDefinite => q(1),
        Signature::NegativeDefinite => q(-1),
        Signature::Indefinite => return Err(Error::IndefiniteLattice),
    };
    let gram = lattice.gram_q().scale(&sign);
    let (d, l) = gram.ldl().ok_or(Error::IndefiniteLattice)?;
    let mut out = Vec::new();
    let mut x = vec![0i64; n];
    search(n, &d, &l, bound.clone(), &mut x, &mut out);
    out.sort_by(|a, b| {
        let na = lattice.norm(&a.0).abs();
        let nb = lattice.norm(&b.0).abs();
        na.cmp(&nb).then_with(|| a.cmp(b))
    });
    Ok(out)
}

fn search(level: usize, d: &[Q], l: &QMatrix, budget: Q, x: &mut Vec<i64>, out: &mut Vec<LatticeVector>) {
    if level == 0 {
        out.push(LatticeVector(x.clone()));
        return;
    }
    let i = level - 1;
    let n = x.len();
    let mut center = Q::zero();
    for j in i + 1..n {
        if x[j] != 0 {
            center -= l.get(j, i) * q(x[j]);
        }
    }
    let radius_sq = &budget / &d[i];
    let r = isqrt_floor(&radius_sq) + 1;
    let c = floor_i64(&center);
    for xi in c - r..=c + r + 1 {
        let t = q(xi) - &center;
        let used = &d[i] * &t * &t;
        if used <= budget {
            x[i] = xi;
            search(level - 1, d, l, &budget - &used, x, out);
        }
    }
    x[i] = 0;
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lat(gram: Vec<Vec<i64>>) -> IntegralLattice {
        let labels = (0..gram.len()).map(|i| i.to_string()).collect();
        IntegralLattice::with_standard_cocycle(labels, gram).unwrap()
    }

    /// Independent oracle: scan a coordinate box large enough to contain the ball.
    fn brute(l: &IntegralLattice, bound: i64, box_r: i64) -> Vec<Vec<i64>> {
        let n = l.rank();
        let mut res = Vec::new();
        let mut x = vec![-box_r; n];
        loop {
            if l.norm(&x).abs() <= bound {
                res.push(x.clone());
            }
            let mut i = 0;
            loop {
                if i == n {
                    res.sort();
                    return res;
                }
                x[i] += 1;
                if x[i] > box_r {
                    x[i] = -box_r;
                    i += 1;
                } else {
                    break;
                }
            }
        }
    }

    fn sorted(v: Vec<LatticeVector>) -> Vec<Vec<i64>> {
        let mut v: Vec<Vec<i64>> = v.into_iter().map(|x| x.0).collect();
        v.sort();
        v
    }

    #[test]
    fn rank_one_examples() {
        assert_eq!(sorted(enumerate_by_norm(&lat(vec![vec![1]]), &q(1)).unwrap()), vec![vec![-1], vec![0], vec![1]]);
        assert_eq!(sorted(enumerate_by_norm(&lat(vec![vec![3]]), &q(3)).unwrap()), vec![vec![-1], vec![0], vec![1]]);
    }

    #[test]
    fn unit_ball_in_z3() {
        let l = lat(vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]);
        assert_eq!(enumerate_by_norm(&l, &q(1)).unwrap().len(), 7);
    }

    #[test]
    fn matches_box_oracle() {
        // A2 root lattice, a skewed form, and a negative definite one.
        let cases = vec![
            (vec![vec![2, -1], vec![-1, 2]], 8, 4),
            (vec![vec![3, -1, 1], vec![-1, 3, 1], vec![1, 1, 3]], 9, 4),
            (vec![vec![5, 4], vec![4, 5]], 12, 8),
            (vec![vec![-2, 1], vec![1, -2]], 6, 4),
        ];
        for (g, bound, r) in cases {
            let l = lat(g);
            assert_eq!(sorted(enumerate_by_norm(&l, &q(bound)).unwrap()), brute(&l, bound, r));
        }
    }

    #[test]
    fn indefinite_rejected() {
        let l = lat(vec![vec![1, 0], vec![0, -1]]);
        assert_eq!(enumerate_by_norm(&l, &q(1)), Err(Error::IndefiniteLattice));
    }
}
