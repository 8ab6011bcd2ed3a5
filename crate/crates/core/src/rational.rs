//! Exact rationals and their string form `p/q`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn qf(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `"p"`, `"-p"`, `"p/q"`. Whitespace around the parts is ignored.
pub fn parse_q(s: &str) -> Result<Q> {
    let s = s.trim();
    let bad = || Error::ParseRational(s.to_string());
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = num.parse().map_err(|_| bad())?;
    let d: BigInt = den.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(bad());
    }
    Ok(Q::new(n, d))
}

/// `p/q` in lowest terms, or `p` for integers.
pub fn fmt_q(x: &Q) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

pub fn fmt_vec(v: &[Q]) -> String {
    let parts: Vec<String> = v.iter().map(fmt_q).collect();
    format!("[{}]", parts.join(", "))
}

pub fn is_integer(x: &Q) -> bool {
    x.is_integer()
}

pub fn to_i64(x: &Q) -> Option<i64> {
    if x.is_integer() {
        x.numer().to_i64()
    } else {
        None
    }
}

pub fn floor_i64(x: &Q) -> i64 {
    x.floor().numer().to_i64().expect("floor out of i64 range")
}

pub fn factorial(n: u32) -> Q {
    let mut acc = BigInt::one();
    for i in 2..=n {
        acc *= i;
    }
    Q::from_integer(acc)
}

/// Rising factorial `p (p+1) ... (p+r-1)`.
pub fn rising(p: i64, r: u32) -> Q {
    let mut acc = BigInt::one();
    for i in 0..r as i64 {
        acc *= p + i;
    }
    Q::from_integer(acc)
}

pub fn binomial(n: u32, k: u32) -> Q {
    factorial(n) / (factorial(k) * factorial(n - k))
}

pub fn lcm_denominators<'a>(xs: impl IntoIterator<Item = &'a Q>) -> BigInt {
    xs.into_iter()
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()))
}

/// Largest integer `m >= 0` with `m^2 <= x`, for `x >= 0`.
pub fn isqrt_floor(x: &Q) -> i64 {
    if !x.is_positive() {
        return 0;
    }
    let approx = x.to_f64().unwrap_or(f64::MAX).sqrt().floor() as i64;
    let mut m = approx.max(0);
    while Q::from_integer(BigInt::from(m) * BigInt::from(m)) > *x {
        m -= 1;
    }
    while Q::from_integer(BigInt::from(m + 1) * BigInt::from(m + 1)) <= *x {
        m += 1;
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format() {
        assert_eq!(parse_q("5/3").unwrap(), qf(5, 3));
        assert_eq!(parse_q(" -1/3 ").unwrap(), qf(-1, 3));
        assert_eq!(parse_q("4/2").unwrap(), q(2));
        assert_eq!(fmt_q(&qf(-6, 4)), "-3/2");
        assert_eq!(fmt_q(&q(7)), "7");
        assert!(parse_q("1/0").is_err());
        assert!(parse_q("0.5").is_err());
        assert!(parse_q("").is_err());
    }

    #[test]
    fn integer_square_root() {
        assert_eq!(isqrt_floor(&q(0)), 0);
        assert_eq!(isqrt_floor(&q(15)), 3);
        assert_eq!(isqrt_floor(&q(16)), 4);
        assert_eq!(isqrt_floor(&qf(17, 4)), 2);
        assert_eq!(isqrt_floor(&qf(-1, 2)), 0);
    }

    #[test]
    fn rising_and_binomial() {
        assert_eq!(rising(2, 3), q(24));
        assert_eq!(rising(5, 0), q(1));
        assert_eq!(binomial(5, 2), q(10));
    }
}
