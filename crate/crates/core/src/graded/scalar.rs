//! Exact rational scalars.
//!
//! Every coefficient in the library is a [`BigRational`]; values are always
//! kept in lowest terms with a positive denominator, so structural equality
//! is mathematical equality.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::Parity;

pub type Scalar = BigRational;

pub fn int(n: i64) -> Scalar {
    BigRational::from_integer(BigInt::from(n))
}

pub fn ratio(num: i64, den: i64) -> Scalar {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub fn zero() -> Scalar {
    Scalar::zero()
}

pub fn one() -> Scalar {
    Scalar::one()
}

/// `(-1)^p` as a scalar.
pub fn sign(p: Parity) -> Scalar {
    if p.is_odd() {
        -Scalar::one()
    } else {
        Scalar::one()
    }
}

/// Multiplies `x` by `(-1)^p` without allocating a sign scalar.
pub fn signed(p: Parity, x: Scalar) -> Scalar {
    if p.is_odd() {
        -x
    } else {
        x
    }
}

/// Parses `p` or `p/q` with an optional leading sign. Rejects a zero denominator.
pub fn parse_scalar(text: &str) -> Option<Scalar> {
    let text = text.trim();
    if text.is_empty() {
        return None;
    }
    let ok = |s: &str| {
        let digits = s.strip_prefix(['-', '+']).unwrap_or(s);
        !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit())
    };
    match text.split_once('/') {
        Some((n, d)) => {
            if !ok(n) || !d.bytes().all(|b| b.is_ascii_digit()) || d.is_empty() {
                return None;
            }
            let n: BigInt = n.trim_start_matches('+').parse().ok()?;
            let d: BigInt = d.parse().ok()?;
            if d.is_zero() {
                return None;
            }
            Some(BigRational::new(n, d))
        }
        None => {
            if !ok(text) {
                return None;
            }
            let n: BigInt = text.trim_start_matches('+').parse().ok()?;
            Some(BigRational::from_integer(n))
        }
    }
}

pub fn format_scalar(x: &Scalar) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

pub fn is_negative(x: &Scalar) -> bool {
    x.is_negative()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_integers_and_fractions() {
        assert_eq!(parse_scalar("3"), Some(int(3)));
        assert_eq!(parse_scalar("-2/4"), Some(ratio(-1, 2)));
        assert_eq!(parse_scalar("+5/1"), Some(int(5)));
        assert_eq!(parse_scalar("1/0"), None);
        assert_eq!(parse_scalar("x"), None);
        assert_eq!(parse_scalar("1/-2"), None);
        assert_eq!(parse_scalar("--1"), None);
    }

    #[test]
    fn lowest_terms_positive_denominator() {
        let x = BigRational::new(BigInt::from(6), BigInt::from(-4));
        assert_eq!(format_scalar(&x), "-3/2");
        assert!(x.denom().is_positive());
    }

    #[test]
    fn sign_helpers() {
        assert_eq!(sign(Parity::Odd), int(-1));
        assert_eq!(signed(Parity::Even, int(4)), int(4));
        assert_eq!(signed(Parity::Odd, int(4)), int(-4));
    }
}
