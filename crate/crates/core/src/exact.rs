//! Exact scalar helpers shared by every module.
//!
//! Integers are arbitrary precision [`BigInt`]s and rationals are [`BigRational`]s;
//! nothing in the crate touches floating point.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Rational = BigRational;

pub fn int(n: i64) -> BigInt {
    BigInt::from(n)
}

pub fn q(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn from_int(n: &BigInt) -> Rational {
    Rational::from_integer(n.clone())
}

/// Returns the integer value when the rational has denominator one.
pub fn to_integer(x: &Rational) -> Option<BigInt> {
    x.is_integer().then(|| x.to_integer())
}

/// Canonical text form: `p/q` with `q > 0` and `gcd(p, q) = 1`, or a bare integer when `q = 1`.
pub fn format_rational(x: &Rational) -> String {
    // BigRational is kept reduced with a positive denominator.
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Parses the canonical text form, also accepting unreduced or negative-denominator input.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        None => s.parse::<BigInt>().ok().map(Rational::from_integer),
        Some((p, d)) => {
            let p: BigInt = p.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                None
            } else {
                Some(Rational::new(p, d))
            }
        }
    }
}

pub(crate) fn rational_sign(x: &Rational) -> i8 {
    if x.is_positive() {
        1
    } else if x.is_negative() {
        -1
    } else {
        0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_form() {
        assert_eq!(format_rational(&frac(6, -4)), "-3/2");
        assert_eq!(format_rational(&q(7)), "7");
        assert_eq!(format_rational(&frac(0, 5)), "0");
    }

    #[test]
    fn parse_inverse_of_format() {
        for (n, d) in [(1, 2), (-5, 4), (0, 1), (12, 3), (7, -9)] {
            let x = frac(n, d);
            assert_eq!(parse_rational(&format_rational(&x)), Some(x));
        }
        assert_eq!(parse_rational("1/0"), None);
        assert_eq!(parse_rational("abc"), None);
    }
}
