use alloc::string::ToString;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator.
pub type Rational = num_rational::BigRational;

/// Parses `"p"` or `"p/q"` with integer `p`, nonzero integer `q`.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let bad = || Error::InvalidRational(text.to_string());
    let text = text.trim();
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text, "1"),
    };
    let valid = |s: &str| {
        let digits = s.strip_prefix(['-', '+']).unwrap_or(s);
        !digits.is_empty() && digits.bytes().all(|c| c.is_ascii_digit())
    };
    if !valid(num) || !valid(den) {
        return Err(bad());
    }
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(num, den))
}

pub(crate) fn from_i64(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

#[cfg(test)]
pub(crate) fn is_integral(q: &Rational) -> bool {
    num_traits::One::is_one(q.denom())
}
