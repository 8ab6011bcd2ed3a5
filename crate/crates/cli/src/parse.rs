use cosetlab::rational::parse_q;
use cosetlab::{Error, Result, Q};

/// Comma-separated exact rationals with a fixed length.
pub fn parse_vec(s: &str, len: usize, what: &str) -> Result<Vec<Q>> {
    let v: Vec<Q> = if s.trim().is_empty() { vec![] } else { s.split(',').map(|p| parse_q(p.trim())).collect::<Result<_>>()? };
    if v.len() != len {
        return Err(Error::InvalidArgument(format!("{what} needs {len} comma-separated values, got {}", v.len())));
    }
    Ok(v)
}

pub fn parse_ints(s: &str) -> Result<Vec<i64>> {
    if s.trim().is_empty() {
        return Ok(vec![]);
    }
    s.split(',')
        .map(|p| p.trim().parse::<i64>().map_err(|_| Error::InvalidArgument(format!("expected an integer, got {p:?}"))))
        .collect()
}
