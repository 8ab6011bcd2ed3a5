use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::IntegralLattice;
use crate::error::{Error, Result};

/// Diagonal of the Smith normal form of an integer matrix, each entry dividing the next.
/// Zero entries (from rank deficiency) come last.
pub fn smith_diagonal(mut a: Vec<Vec<BigInt>>) -> Vec<BigInt> {
    let rows = a.len();
    let cols = if rows == 0 { 0 } else { a[0].len() };
    let n = rows.min(cols);
    let mut diag = Vec::with_capacity(n);
    for t in 0..n {
        // Smallest nonzero entry in the trailing block becomes the pivot.
        let pivot = (t..rows)
            .flat_map(|i| (t..cols).map(move |j| (i, j)))
            .filter(|&(i, j)| !a[i][j].is_zero())
            .min_by_key(|&(i, j)| a[i][j].abs());
        let Some((pi, pj)) = pivot else {
            diag.extend(std::iter::repeat(BigInt::zero()).take(n - t));
            break;
        };
        a.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }
        loop {
            let mut dirty = false;
            for i in t + 1..rows {
                let f = a[i][t].div_floor(&a[t][t]);
                if !f.is_zero() {
                    for j in t..cols {
                        let v = &a[t][j] * &f;
                        a[i][j] -= v;
                    }
                }
                if !a[i][t].is_zero() {
                    dirty = true;
                }
            }
            for j in t + 1..cols {
                let f = a[t][j].div_floor(&a[t][t]);
                if !f.is_zero() {
                    for i in t..rows {
                        let v = &a[i][t] * &f;
                        a[i][j] -= v;
                    }
                }
                if !a[t][j].is_zero() {
                    dirty = true;
                }
            }
            if !dirty {
                // Divisibility: fold in a row whose entries the pivot does not divide.
                let bad = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !(&a[i][j] % &a[t][t]).is_zero()));
                match bad {
                    Some(i) => {
                        for j in t..cols {
                            let v = a[i][j].clone();
                            a[t][j] += v;
                        }
                    }
                    None => break,
                }
            }
            // Re-pivot on the smallest nonzero entry of row t / column t.
            let mut best = (t, t);
            for i in t..rows {
                if !a[i][t].is_zero() && a[i][t].abs() < a[best.0][best.1].abs() {
                    best = (i, t);
                }
            }
            for j in t..cols {
                if !a[t][j].is_zero() && a[t][j].abs() < a[best.0][best.1].abs() {
                    best = (t, j);
                }
            }
            a.swap(t, best.0);
            for row in a.iter_mut() {
                row.swap(t, best.1);
            }
        }
        diag.push(a[t][t].abs());
    }
    diag
}

/// Elementary divisors greater than one of the Gram matrix, i.e. the invariant
/// factors of `L*/L`.
pub fn discriminant_group(lattice: &IntegralLattice) -> Result<Vec<BigInt>> {
    let rows: Vec<Vec<BigInt>> = lattice.gram().iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
    let diag = smith_diagonal(rows);
    if diag.iter().any(|d| d.is_zero()) {
        return Err(Error::SingularGram);
    }
    Ok(diag.into_iter().filter(|d| !d.is_one()).collect())
}
