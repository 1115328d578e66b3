//! Exact rational scalars.
//!
//! All arithmetic in this crate is exact. `Scalar` is an arbitrary-precision
//! rational; values are always stored in lowest terms with a positive
//! denominator (guaranteed by construction in `num`).

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};
use std::str::FromStr;
use thiserror::Error;

pub type Scalar = BigRational;

/// Integer scalar.
pub fn s_int(n: i64) -> Scalar {
    BigRational::from_integer(BigInt::from(n))
}

/// Ratio scalar. Panics if `q == 0`; use [`parse_scalar`] for untrusted input.
pub fn s_ratio(p: i64, q: i64) -> Scalar {
    assert!(q != 0, "zero denominator");
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ScalarParseError {
    #[error("empty scalar literal")]
    Empty,
    #[error("invalid integer in scalar literal {0:?}")]
    BadInteger(String),
    #[error("zero denominator in scalar literal {0:?}")]
    ZeroDenominator(String),
}

/// Parses `"n"` or `"p/q"` with optional leading sign. Rejects `q == 0`.
pub fn parse_scalar(text: &str) -> Result<Scalar, ScalarParseError> {
    let text = text.trim();
    if text.is_empty() {
        return Err(ScalarParseError::Empty);
    }
    let (num_str, den_str) = match text.split_once('/') {
        Some((p, q)) => (p.trim(), Some(q.trim())),
        None => (text, None),
    };
    let p =
        BigInt::from_str(num_str).map_err(|_| ScalarParseError::BadInteger(text.to_string()))?;
    let q = match den_str {
        Some(q_str) => {
            BigInt::from_str(q_str).map_err(|_| ScalarParseError::BadInteger(text.to_string()))?
        }
        None => BigInt::one(),
    };
    if q.is_zero() {
        return Err(ScalarParseError::ZeroDenominator(text.to_string()));
    }
    Ok(BigRational::new(p, q))
}

/// Formats in the same syntax [`parse_scalar`] accepts: `"n"` for integers,
/// `"p/q"` otherwise (lowest terms, sign on the numerator).
pub fn format_scalar(x: &Scalar) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Sign as -1, 0, or 1.
pub fn sign(x: &Scalar) -> i32 {
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format_round_trip() {
        for text in ["0", "5", "-7", "3/4", "-3/4", "22/7"] {
            let x = parse_scalar(text).unwrap();
            assert_eq!(format_scalar(&x), text);
        }
    }

    #[test]
    fn parse_normalizes_to_lowest_terms_positive_denominator() {
        assert_eq!(format_scalar(&parse_scalar("4/6").unwrap()), "2/3");
        assert_eq!(format_scalar(&parse_scalar("4/-6").unwrap()), "-2/3");
        assert_eq!(format_scalar(&parse_scalar("-4/-6").unwrap()), "2/3");
        assert_eq!(format_scalar(&parse_scalar("0/9").unwrap()), "0");
        assert_eq!(format_scalar(&parse_scalar("6/3").unwrap()), "2");
    }

    #[test]
    fn parse_rejects_zero_denominator() {
        assert_eq!(
            parse_scalar("1/0"),
            Err(ScalarParseError::ZeroDenominator("1/0".to_string()))
        );
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(parse_scalar("").is_err());
        assert!(parse_scalar("a/b").is_err());
        assert!(parse_scalar("1/2/3").is_err());
        assert!(parse_scalar("1.5").is_err());
    }

    #[test]
    fn arithmetic_stays_reduced() {
        let a = s_ratio(1, 6);
        let b = s_ratio(1, 3);
        let c = &a + &b; // 1/2
        assert_eq!(format_scalar(&c), "1/2");
        let d = &c - &c;
        assert!(d.is_zero());
        assert_eq!(format_scalar(&d), "0");
    }
}
