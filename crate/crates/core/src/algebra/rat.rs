//! Arbitrary-precision rationals and their textual form.

use alloc::format;
use alloc::string::String;
use core::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::AlgebraError;

/// Exact rational number in lowest terms with a positive denominator.
pub type Rat = num_rational::BigRational;

pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Parses `"p/q"`, `"p"` or `"-p/q"`.
pub fn parse_rat(s: &str) -> Result<Rat, AlgebraError> {
    let s = s.trim();
    let bad = || AlgebraError::Parse(String::from(s));
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (
            BigInt::from_str(n.trim()).map_err(|_| bad())?,
            BigInt::from_str(d.trim()).map_err(|_| bad())?,
        ),
        None => (BigInt::from_str(s).map_err(|_| bad())?, BigInt::one()),
    };
    if d.is_zero() {
        return Err(bad());
    }
    Ok(Rat::new(n, d))
}

/// Canonical `"num/den"` form; the denominator is always written.
pub fn format_rat(r: &Rat) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Bit-size measure used to rank pivots: bits of numerator plus bits of denominator.
pub fn rat_height(r: &Rat) -> u64 {
    r.numer().bits() + r.denom().bits()
}

/// Least common multiple of the denominators of `coeffs`.
pub fn denom_lcm<'a>(coeffs: impl IntoIterator<Item = &'a Rat>) -> BigInt {
    coeffs
        .into_iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()))
}

/// Greatest common divisor of the numerators of `coeffs` (zero when all vanish).
pub fn numer_gcd<'a>(coeffs: impl IntoIterator<Item = &'a Rat>) -> BigInt {
    coeffs
        .into_iter()
        .fold(BigInt::zero(), |acc, c| acc.gcd(c.numer()))
        .abs()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format() {
        assert_eq!(parse_rat("6/4").unwrap(), rat(3, 2));
        assert_eq!(parse_rat("-5").unwrap(), rat_int(-5));
        assert_eq!(format_rat(&rat(-6, 4)), "-3/2");
        assert_eq!(format_rat(&rat_int(2)), "2/1");
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("x").is_err());
    }

    #[test]
    fn lowest_terms_invariant() {
        let r = rat(10, -4);
        assert_eq!(r.numer(), &BigInt::from(-5));
        assert_eq!(r.denom(), &BigInt::from(2));
    }
}
