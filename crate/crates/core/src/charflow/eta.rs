use num_traits::Zero;

use super::qseries::QSeries;
use crate::rational::{floor_i64, q, qf, Q};

/// `η(q)^m = q^{m/24} Π_{n≥1} (1 − q^n)^m`, valid up to `T`.
///
/// When `T < m/24` the result is the zero series with validity `T`.
pub fn eta_power(m: i64, t: &Q) -> QSeries {
    let offset = qf(m, 24);
    if *t < offset {
        return QSeries::zero_to(t.clone());
    }
    let deg = floor_i64(&(t - &offset)) as usize;
    // Euler product truncated at degree `deg`.
    let mut euler = vec![Q::zero(); deg + 1];
    euler[0] = q(1);
    for n in 1..=deg {
        for i in (n..=deg).rev() {
            let v = euler[i - n].clone();
            euler[i] -= v;
        }
    }
    let base = if m >= 0 { euler } else { invert(&euler) };
    let mut acc = vec![Q::zero(); deg + 1];
    acc[0] = q(1);
    for _ in 0..m.unsigned_abs() {
        acc = mul_trunc(&acc, &base);
    }
    let terms = acc.into_iter().enumerate().map(|(i, c)| (&offset + q(i as i64), c));
    QSeries::from_terms(terms, Some(t.clone()))
}

fn mul_trunc(a: &[Q], b: &[Q]) -> Vec<Q> {
    let n = a.len();
    let mut out = vec![Q::zero(); n];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate().take(n - i) {
            out[i + j] += x * y;
        }
    }
    out
}

/// Inverse of a power series with constant term 1.
fn invert(a: &[Q]) -> Vec<Q> {
    let n = a.len();
    let mut inv = vec![Q::zero(); n];
    inv[0] = q(1);
    for i in 1..n {
        let mut s = Q::zero();
        for j in 1..=i {
            s += &a[j] * &inv[i - j];
        }
        inv[i] = -s;
    }
    inv
}

#[cfg(test)]
mod tests {
    use super::*;

    fn coeffs(s: &QSeries, m: i64, n: usize) -> Vec<Q> {
        (0..n).map(|i| s.coefficient(&(qf(m, 24) + q(i as i64)))).collect()
    }

    /// Euler's pentagonal theorem: Π(1−q^n) = Σ_k (−1)^k q^{k(3k−1)/2}.
    fn pentagonal(n: usize) -> Vec<Q> {
        let mut out = vec![Q::zero(); n];
        for k in -20i64..=20 {
            let e = k * (3 * k - 1) / 2;
            if (0..n as i64).contains(&e) {
                out[e as usize] += if k % 2 == 0 { q(1) } else { q(-1) };
            }
        }
        out
    }

    /// Partition numbers by the recurrence over parts of bounded size.
    fn partitions(n: usize) -> Vec<Q> {
        let mut p = vec![0i64; n];
        p[0] = 1;
        for part in 1..n {
            for i in part..n {
                p[i] += p[i - part];
            }
        }
        p.into_iter().map(q).collect()
    }

    #[test]
    fn eta_matches_pentagonal() {
        let s = eta_power(1, &q(30));
        assert_eq!(coeffs(&s, 1, 8), [1, -1, -1, 0, 0, 1, 0, 1].map(q).to_vec());
        assert_eq!(coeffs(&s, 1, 30), pentagonal(30));
    }

    #[test]
    fn inverse_eta_matches_partitions() {
        let s = eta_power(-1, &q(25));
        assert_eq!(coeffs(&s, -1, 6), [1, 1, 2, 3, 5, 7].map(q).to_vec());
        assert_eq!(coeffs(&s, -1, 25), partitions(25));
    }

    #[test]
    fn eta_zero_power() {
        let s = eta_power(0, &q(5));
        assert_eq!(s.num_terms(), 1);
        assert_eq!(s.coefficient(&q(0)), q(1));
    }

    #[test]
    fn powers_cancel() {
        for m in 1..=6 {
            let p = eta_power(m, &q(10)).mul(&eta_power(-m, &q(10)));
            let v = p.validity().unwrap().clone();
            assert!(v >= q(9));
            assert!(p.agrees_up_to(&QSeries::one(), Some(&v)));
        }
    }
}
