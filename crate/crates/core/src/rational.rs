//! Exact rational scalars and the handful of conversions the crate needs.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Arbitrary-precision rational; always kept in lowest terms with a positive
/// denominator by `num_rational`.
pub type Rational = BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn from_bigint(n: BigInt) -> Rational {
    Rational::from_integer(n)
}

pub fn floor(r: &Rational) -> BigInt {
    r.floor().to_integer()
}

pub fn ceil(r: &Rational) -> BigInt {
    r.ceil().to_integer()
}

/// `num/den`, always with an explicit denominator.
pub fn format_exact(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Decimal rendering rounded half away from zero to `places` digits.
pub fn format_decimal(r: &Rational, places: u32) -> String {
    let scale = BigInt::from(10u32).pow(places);
    let scaled = r * Rational::from_integer(scale.clone());
    let half = Rational::new(BigInt::one(), BigInt::from(2));
    let rounded = if scaled.is_negative() {
        -floor(&(-scaled + half))
    } else {
        floor(&(scaled + half))
    };
    let negative = rounded.is_negative();
    let (int_part, frac_part) = rounded.abs().div_rem(&scale);
    let sign = if negative { "-" } else { "" };
    if places == 0 {
        format!("{sign}{int_part}")
    } else {
        format!(
            "{sign}{int_part}.{:0>width$}",
            frac_part.to_string(),
            width = places as usize
        )
    }
}

/// Parses `n` or `n/d` with `d != 0`.
pub fn parse(s: &str) -> Option<Rational> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().ok()?;
    let den: BigInt = den.parse().ok()?;
    if den.is_zero() {
        return None;
    }
    Some(Rational::new(num, den))
}

/// Smallest rational upper bound `u` with `u^2 >= r` on the grid `1/den(r)`.
pub(crate) fn sqrt_upper(r: &Rational) -> Rational {
    debug_assert!(!r.is_negative());
    let prod = r.numer() * r.denom();
    let mut s = prod.sqrt();
    if &s * &s < prod {
        s += 1;
    }
    Rational::new(s, r.denom().clone())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_forms() {
        assert_eq!(parse("3/2"), Some(rat(3, 2)));
        assert_eq!(parse("-4"), Some(int(-4)));
        assert_eq!(parse("6/-4"), Some(rat(-3, 2)));
        assert_eq!(parse("1/0"), None);
        assert_eq!(parse("x"), None);
    }

    #[test]
    fn exact_and_decimal_formatting() {
        assert_eq!(format_exact(&int(2)), "2/1");
        assert_eq!(format_exact(&rat(-11, 10)), "-11/10");
        assert_eq!(format_decimal(&rat(2, 3), 4), "0.6667");
        assert_eq!(format_decimal(&rat(-5, 2), 0), "-3");
        assert_eq!(format_decimal(&rat(1, 200), 2), "0.01");
    }

    #[test]
    fn sqrt_upper_is_an_upper_bound() {
        for (n, d) in [(2, 1), (9, 4), (1, 3), (0, 1), (50, 7)] {
            let r = rat(n, d);
            let u = sqrt_upper(&r);
            assert!(&u * &u >= r);
        }
        assert_eq!(sqrt_upper(&rat(9, 4)), rat(6, 4));
    }
}
