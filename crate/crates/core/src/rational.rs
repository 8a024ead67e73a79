//! Exact rational scalars.
//!
//! Every coordinate in the crate is a [`Rational`]. The type is a thin alias for
//! `num::BigRational`, which keeps values in lowest terms with a positive
//! denominator and never overflows.

use std::str::FromStr;

use num::{BigInt, BigRational, One, Signed, ToPrimitive, Zero};

pub type Rational = BigRational;

/// `n / d` as an exact rational. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn zero() -> Rational {
    Rational::zero()
}

pub fn one() -> Rational {
    Rational::one()
}

pub fn half() -> Rational {
    rat(1, 2)
}

pub fn midpoint(a: &Rational, b: &Rational) -> Rational {
    (a + b) / int(2)
}

/// `a + (b - a) * t`.
pub fn lerp(a: &Rational, b: &Rational, t: &Rational) -> Rational {
    a + (b - a) * t
}

pub fn in_unit(r: &Rational) -> bool {
    !r.is_negative() && *r <= one()
}

/// Parses `p/q` or an integer shorthand `p`.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    if s.is_empty() {
        return None;
    }
    match s.split_once('/') {
        Some((n, d)) => {
            let n = BigInt::from_str(n.trim()).ok()?;
            let d = BigInt::from_str(d.trim()).ok()?;
            if d.is_zero() {
                return None;
            }
            Some(Rational::new(n, d))
        }
        None => BigInt::from_str(s).ok().map(Rational::from_integer),
    }
}

/// Always `p/q`, including integers (`1/1`).
pub fn to_pq(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

pub fn to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// Decimal rendering rounded half-up at `places` fractional digits, with
/// trailing zeros trimmed. Computed exactly; used only for display output.
pub fn to_decimal(r: &Rational, places: u32) -> String {
    let scale = BigInt::from(10u32).pow(places);
    let neg = r.is_negative();
    let a = r.abs() * Rational::from_integer(scale.clone());
    let rounded = (a + half()).floor().to_integer();
    let int_part = &rounded / &scale;
    let frac_part = &rounded % &scale;
    let mut frac = format!("{:0>width$}", frac_part.to_string(), width = places as usize);
    while frac.ends_with('0') {
        frac.pop();
    }
    let sign = if neg && !rounded.is_zero() { "-" } else { "" };
    if frac.is_empty() {
        format!("{sign}{int_part}")
    } else {
        format!("{sign}{int_part}.{frac}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_fraction_and_integer_shorthand() {
        assert_eq!(parse_rational("2/4"), Some(rat(1, 2)));
        assert_eq!(parse_rational("1"), Some(one()));
        assert_eq!(parse_rational("-3/9"), Some(rat(-1, 3)));
        assert_eq!(parse_rational("1/0"), None);
        assert_eq!(parse_rational("x"), None);
        assert_eq!(parse_rational(""), None);
    }

    #[test]
    fn lowest_terms_with_positive_denominator() {
        let r = rat(6, -8);
        assert_eq!(r.numer(), &BigInt::from(-3));
        assert_eq!(r.denom(), &BigInt::from(4));
        assert_eq!(to_pq(&one()), "1/1");
    }

    #[test]
    fn decimal_rendering() {
        assert_eq!(to_decimal(&rat(1, 3), 12), "0.333333333333");
        assert_eq!(to_decimal(&rat(2, 3), 12), "0.666666666667");
        assert_eq!(to_decimal(&one(), 12), "1");
        assert_eq!(to_decimal(&rat(1, 4), 12), "0.25");
    }
}
