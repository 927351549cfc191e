//! Exact rational helpers for threshold comparisons.
//!
//! Every finite `f64` is a dyadic rational, so comparisons between exact
//! densities and floating-point parameters are decided without rounding by
//! lifting the float to its exact value.

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use std::cmp::Ordering;

/// The exact value of a finite float.
pub fn exact_f64(x: f64) -> BigRational {
    BigRational::from_float(x).expect("finite float")
}

/// Compares `num/den` with `x` exactly. `den` must be positive.
pub fn cmp_fraction_f64(num: i128, den: i128, x: f64) -> Ordering {
    assert!(den > 0, "denominator must be positive");
    let lhs = BigRational::new(BigInt::from(num), BigInt::from(den));
    lhs.cmp(&exact_f64(x))
}

/// Parses a decimal (`0.25`, `1e-4`, `-3.5E2`) or a fraction (`3/7`) into an
/// exact rational.
pub fn parse_rational(text: &str) -> Result<BigRational> {
    let t = text.trim();
    let bad = || Error::arg(format!("not a rational number: {text:?}"));
    if let Some((a, b)) = t.split_once('/') {
        let num: BigInt = a.trim().parse().map_err(|_| bad())?;
        let den: BigInt = b.trim().parse().map_err(|_| bad())?;
        if den.is_zero() {
            return Err(Error::arg("zero denominator"));
        }
        return Ok(BigRational::new(num, den));
    }

    let (mantissa, exponent) = match t.find(['e', 'E']) {
        Some(i) => (&t[..i], t[i + 1..].parse::<i32>().map_err(|_| bad())?),
        None => (t, 0),
    };
    let (neg, digits) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (int_part, frac_part) = digits.split_once('.').unwrap_or((digits, ""));
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(bad());
    }
    if !int_part
        .chars()
        .chain(frac_part.chars())
        .all(|c| c.is_ascii_digit())
    {
        return Err(bad());
    }
    let all: BigInt = format!("0{int_part}{frac_part}")
        .parse()
        .map_err(|_| bad())?;
    let scale = exponent - frac_part.len() as i32;
    let ten = BigInt::from(10);
    let mut value = BigRational::from_integer(all);
    if scale >= 0 {
        value *= BigRational::from_integer(num_traits::pow(ten, scale as usize));
    } else {
        value /= BigRational::from_integer(num_traits::pow(ten, (-scale) as usize));
    }
    Ok(if neg { -value } else { value })
}

/// An exact rational together with its nearest float.
#[derive(Clone, Debug, PartialEq)]
pub struct ExactReal {
    pub exact: BigRational,
    pub approx: f64,
}

impl ExactReal {
    pub fn from_f64(x: f64) -> Self {
        ExactReal {
            exact: exact_f64(x),
            approx: x,
        }
    }

    pub fn from_rational(exact: BigRational) -> Self {
        let approx = ratio_to_f64(&exact);
        ExactReal { exact, approx }
    }

    pub fn parse(text: &str) -> Result<Self> {
        parse_rational(text).map(Self::from_rational)
    }

    pub fn is_positive(&self) -> bool {
        self.exact.is_positive()
    }
}

pub fn ratio_to_f64(r: &BigRational) -> f64 {
    match (r.numer().to_f64(), r.denom().to_f64()) {
        (Some(a), Some(b)) if a.is_finite() && b.is_finite() => a / b,
        _ => {
            // Scale down huge numerators/denominators before dividing.
            let shift = r.numer().bits().max(r.denom().bits()) as i64 - 1000;
            let shift = shift.max(0) as u32;
            let a = (r.numer() >> shift).to_f64().unwrap_or(0.0);
            let b = (r.denom() >> shift).to_f64().unwrap_or(1.0);
            if b == 0.0 {
                if a.is_sign_negative() {
                    f64::NEG_INFINITY
                } else {
                    f64::INFINITY
                }
            } else {
                a / b
            }
        }
    }
}
