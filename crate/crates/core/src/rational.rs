//! The scalar field. Serialized as `"p/q"`, with `q` omitted when it is 1.

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `p/q` reduced. Panics when `q == 0`.
pub fn ratio(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

pub fn parse(s: &str) -> Result<Rational> {
    let s = s.trim();
    let valid = !s.is_empty()
        && s.split('/').count() <= 2
        && s.split('/').all(|part| {
            let digits = part.strip_prefix('-').unwrap_or(part);
            !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit())
        });
    if !valid {
        return Err(Error::Parse(format!("`{s}` is not a rational of the form p/q")));
    }
    s.parse::<Rational>()
        .map_err(|_| Error::Parse(format!("`{s}` is not a rational of the form p/q")))
}

pub fn format(r: &Rational) -> String {
    r.to_string()
}

pub fn vector(entries: &[i64]) -> Vec<Rational> {
    entries.iter().map(|&e| int(e)).collect()
}
