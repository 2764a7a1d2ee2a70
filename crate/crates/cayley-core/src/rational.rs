//! Arbitrary-precision rational scalars.
//!
//! Every numeric quantity in this crate is a `Rational`; no floating point
//! arithmetic occurs anywhere in the library. The text syntax is `p/q` or
//! `p` (denominator 1), with the sign carried by the numerator.

use num::bigint::BigInt;
use num::rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Rational = BigRational;

/// Shorthand constructor from machine integers. Panics on zero denominator.
pub fn rat(numer: i64, denom: i64) -> Rational {
    assert!(denom != 0, "zero denominator");
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parses `p/q` or `p`. Rejects empty input, a zero denominator and any
/// sign placed on the denominator.
pub fn parse_rational(text: &str) -> Option<Rational> {
    let text = text.trim();
    let (numer_text, denom_text) = match text.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (text, None),
    };
    let numer: BigInt = numer_text.parse().ok()?;
    let denom: BigInt = match denom_text {
        Some(d) => {
            if d.starts_with('+') || d.starts_with('-') {
                return None;
            }
            d.parse().ok()?
        }
        None => BigInt::one(),
    };
    if denom.is_zero() {
        return None;
    }
    Some(Rational::new(numer, denom))
}

/// Renders `p/q`, or just `p` when the denominator is 1.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Presentation-layer conversion; never used in any computation.
pub fn to_f64(r: &Rational) -> f64 {
    let numer = r.numer();
    let denom = r.denom();
    // Exact when the values fit; falls back to a string round-trip for
    // very large operands, which only affects display.
    match (numer.to_string().parse::<f64>(), denom.to_string().parse::<f64>()) {
        (Ok(n), Ok(d)) => n / d,
        _ => {
            if r.is_negative() {
                f64::NEG_INFINITY
            } else {
                f64::INFINITY
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format_round_trip() {
        for text in ["3/2", "-7", "0", "22/7", "-9/8"] {
            let r = parse_rational(text).unwrap();
            assert_eq!(format_rational(&r), text);
        }
    }

    #[test]
    fn parse_normalizes() {
        assert_eq!(parse_rational("6/4").unwrap(), rat(3, 2));
        assert_eq!(format_rational(&parse_rational("4/2").unwrap()), "2");
    }

    #[test]
    fn parse_rejects_garbage() {
        for text in ["", "1/0", "1/-2", "a/b", "1/2/3", "1.5"] {
            assert!(parse_rational(text).is_none(), "accepted {text:?}");
        }
    }
}
