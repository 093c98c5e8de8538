//! Arbitrary-precision rationals.
//!
//! `Rational` is `num_rational::BigRational`, which keeps every value in
//! lowest terms with a positive denominator. This module only adds the
//! parsing and formatting conventions used by the file formats.

use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub type Rational = num_rational::BigRational;

/// An endpoint of a real interval, possibly infinite.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExtendedRational {
    NegInfinity,
    Finite(Rational),
    PosInfinity,
}

impl From<Rational> for ExtendedRational {
    fn from(value: Rational) -> Self {
        ExtendedRational::Finite(value)
    }
}

impl From<i64> for ExtendedRational {
    fn from(value: i64) -> Self {
        ExtendedRational::Finite(int(value))
    }
}

/// gcd with a machine-word fast path.
pub(crate) fn gcd(a: &BigInt, b: &BigInt) -> BigInt {
    match (a.magnitude().to_u64(), b.magnitude().to_u64()) {
        (Some(x), Some(y)) => BigInt::from(num_integer::Integer::gcd(&x, &y)),
        _ => num_integer::Integer::gcd(a, b),
    }
}

pub(crate) fn lcm(a: &BigInt, b: &BigInt) -> BigInt {
    if a.is_one() {
        return b.abs();
    }
    if b.is_one() {
        return a.abs();
    }
    (a / gcd(a, b) * b).abs()
}

/// `n / d` in lowest terms; `d` must be nonzero.
pub(crate) fn reduced(n: BigInt, d: BigInt) -> Rational {
    if n.is_zero() {
        return Rational::zero();
    }
    let g = gcd(&n, &d);
    let (mut n, mut d) = if g.is_one() { (n, d) } else { (n / &g, d / &g) };
    if d.is_negative() {
        n = -n;
        d = -d;
    }
    Rational::new_raw(n, d)
}

/// Integers `v * L` for the lcm `L` of the denominators, together with `L`.
pub(crate) fn integer_scaled<'a>(values: impl Iterator<Item = &'a Rational> + Clone) -> (Vec<BigInt>, BigInt) {
    let l = values.clone().fold(BigInt::one(), |acc, v| {
        if v.denom().is_one() {
            acc
        } else {
            lcm(&acc, v.denom())
        }
    });
    let ints = values
        .map(|v| {
            if v.denom().is_one() {
                v.numer() * &l
            } else {
                v.numer() * (&l / v.denom())
            }
        })
        .collect();
    (ints, l)
}

/// `sum a_i b_i` over integer vectors, skipping zeros.
pub(crate) fn int_dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    let mut acc = BigInt::zero();
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            acc += x * y;
        }
    }
    acc
}

#[inline]
pub fn int(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

#[inline]
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

#[inline]
pub fn zero() -> Rational {
    Rational::zero()
}

#[inline]
pub fn one() -> Rational {
    Rational::one()
}

/// Parses `"p/q"`, `"p"`, or a finite decimal like `"-1.25"`.
pub fn parse_rational(text: &str) -> Option<Rational> {
    let text = text.trim();
    if text.is_empty() {
        return None;
    }
    if let Some((num, den)) = text.split_once('/') {
        let num = BigInt::from_str(num.trim()).ok()?;
        let den = BigInt::from_str(den.trim()).ok()?;
        if den.is_zero() {
            return None;
        }
        return Some(Rational::new(num, den));
    }
    if let Some((whole, frac)) = text.split_once('.') {
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return None;
        }
        let negative = whole.trim_start().starts_with('-');
        let whole_val = if whole.is_empty() || whole == "-" || whole == "+" {
            BigInt::zero()
        } else {
            BigInt::from_str(whole).ok()?
        };
        let scale = num_traits::pow(BigInt::from(10), frac.len());
        let frac_val = BigInt::from_str(frac).ok()?;
        let mut num = whole_val.abs() * &scale + frac_val;
        if negative {
            num = -num;
        }
        return Some(Rational::new(num, scale));
    }
    BigInt::from_str(text).ok().map(Rational::from_integer)
}

/// Formats as `"p"` for integers and `"p/q"` otherwise.
pub fn format_rational(value: &Rational) -> String {
    if value.is_integer() {
        value.numer().to_string()
    } else {
        format!("{}/{}", value.numer(), value.denom())
    }
}

pub fn to_f64(value: &Rational) -> f64 {
    use num_traits::ToPrimitive;
    value.to_f64().unwrap_or(f64::NAN)
}

/// Parses a comma-separated list of rationals.
pub fn parse_vector(text: &str) -> Option<Vec<Rational>> {
    let text = text.trim();
    if text.is_empty() {
        return Some(Vec::new());
    }
    text.split(',').map(parse_rational).collect()
}

pub fn format_vector(values: &[Rational]) -> String {
    values.iter().map(format_rational).collect::<Vec<_>>().join(",")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_forms() {
        assert_eq!(parse_rational("3"), Some(int(3)));
        assert_eq!(parse_rational("-6/4"), Some(ratio(-3, 2)));
        assert_eq!(parse_rational("0.25"), Some(ratio(1, 4)));
        assert_eq!(parse_rational("-1.5"), Some(ratio(-3, 2)));
        assert_eq!(parse_rational("1/0"), None);
        assert_eq!(parse_rational("x"), None);
        assert_eq!(parse_rational(""), None);
    }

    #[test]
    fn canonical_zero() {
        let z = ratio(0, -7);
        assert_eq!(z, zero());
        assert_eq!(format_rational(&z), "0");
        assert!(z.denom().is_positive());
    }

    #[test]
    fn vector_round_trip() {
        let v = parse_vector("1, -2/3, 0").unwrap();
        assert_eq!(format_vector(&v), "1,-2/3,0");
    }
}
