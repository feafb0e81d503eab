//! Exact non-negative rationals for toughness thresholds.

use num_traits::Zero;

use crate::error::{Error, Result};

/// Non-negative rational in lowest terms. Comparisons are exact.
pub type Rational = num_rational::Ratio<u64>;

pub fn ratio(numer: usize, denom: usize) -> Rational {
    Rational::new(numer as u64, denom as u64)
}

/// Parses `"p/q"` or `"p"` with `p, q >= 1`; nothing else is accepted
/// (no signs, spaces, decimals or zero).
pub fn parse_rational(text: &str) -> Result<Rational> {
    let bad = || Error::InvalidArgument(format!("expected a positive rational p/q, got {text:?}"));
    let digits = |s: &str| -> Result<u64> {
        if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let v: u64 = s.parse().map_err(|_| bad())?;
        if v == 0 {
            return Err(bad());
        }
        Ok(v)
    };
    match text.split_once('/') {
        Some((p, q)) => Ok(Rational::new(digits(p)?, digits(q)?)),
        None => Ok(Rational::from_integer(digits(text)?)),
    }
}

/// `t * count <= size`, by cross-multiplication.
pub fn scaled_le(t: Rational, count: usize, size: usize) -> bool {
    u128::from(*t.numer()) * count as u128 <= u128::from(*t.denom()) * size as u128
}

/// `ceil(2t)`.
pub fn ceil_double(t: Rational) -> u64 {
    (2 * t.numer()).div_ceil(*t.denom())
}

pub(crate) fn require_positive(t: Rational) -> Result<()> {
    if t.is_zero() {
        Err(Error::InvalidArgument("t must be positive".into()))
    } else {
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parsing_is_strict() {
        assert_eq!(parse_rational("1/3").unwrap(), ratio(1, 3));
        assert_eq!(parse_rational("4/2").unwrap(), ratio(2, 1));
        assert_eq!(parse_rational("7").unwrap(), ratio(7, 1));
        for bad in ["", "0", "0/3", "3/0", "-1/2", "1/-2", "1.5", " 1/2", "1/2 ", "1//2", "/2", "a"] {
            assert!(parse_rational(bad).is_err(), "{bad:?}");
        }
    }

    #[test]
    fn display_uses_lowest_terms() {
        assert_eq!(ratio(2, 4).to_string(), "1/2");
        assert_eq!(ratio(3, 3).to_string(), "1");
        assert_eq!(ratio(4, 3).to_string(), "4/3");
    }

    #[test]
    fn ceilings() {
        assert_eq!(ceil_double(ratio(1, 3)), 1);
        assert_eq!(ceil_double(ratio(1, 2)), 1);
        assert_eq!(ceil_double(ratio(2, 3)), 2);
        assert_eq!(ceil_double(ratio(1, 1)), 2);
        assert_eq!(ceil_double(ratio(4, 3)), 3);
    }

    #[test]
    fn scaled_comparison() {
        assert!(scaled_le(ratio(1, 2), 2, 1));
        assert!(!scaled_le(ratio(1, 2), 3, 1));
        assert!(scaled_le(ratio(3, 2), 2, 3));
    }
}
