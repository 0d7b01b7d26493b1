//! Exact rational numbers.
//!
//! Every weight, objective value, dual value and game value in this crate is a
//! [`Rational`]. Text form is `p/q` or a plain integer, both signed.

use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

pub type Rational = num_rational::BigRational;

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

pub fn frac(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn zero() -> Rational {
    Rational::zero()
}

pub fn one() -> Rational {
    Rational::one()
}

/// Parses `"p/q"` or `"p"`; surrounding whitespace is ignored.
pub fn parse(text: &str) -> Option<Rational> {
    Rational::from_str(text.trim()).ok()
}

/// Renders `p/q` in lowest terms, or just `p` for integers.
pub fn format(value: &Rational) -> String {
    value.to_string()
}

pub fn is_nonnegative(value: &Rational) -> bool {
    !value.is_negative()
}

pub fn max_of<'a>(values: impl IntoIterator<Item = &'a Rational>) -> Option<Rational> {
    values.into_iter().max().cloned()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_integer_and_fraction_forms() {
        assert_eq!(parse("3"), Some(int(3)));
        assert_eq!(parse("-1/2"), Some(frac(-1, 2)));
        assert_eq!(parse(" 4/6 "), Some(frac(2, 3)));
        assert_eq!(parse("1/0"), None);
        assert_eq!(parse("0.5"), None);
    }

    #[test]
    fn formats_in_lowest_terms() {
        assert_eq!(format(&frac(4, 6)), "2/3");
        assert_eq!(format(&frac(-6, 3)), "-2");
        assert_eq!(format(&zero()), "0");
    }
}
