//! Exact Gaussian rationals `p/q + (r/s) i`.
//!
//! Text form is `"p/q"` for real values, `"r/s i"` for purely imaginary ones
//! and `"p/q+r/s i"` (or `-`) otherwise. Integers drop the denominator.

use num_bigint::BigInt;
use num_complex::Complex;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{HopfError, Result};

pub type Scalar = Complex<BigRational>;

pub fn from_int(v: i64) -> Scalar {
    Complex::new(BigRational::from_integer(BigInt::from(v)), BigRational::zero())
}

pub fn from_ratio(num: i64, den: i64) -> Scalar {
    Complex::new(
        BigRational::new(BigInt::from(num), BigInt::from(den)),
        BigRational::zero(),
    )
}

pub fn gaussian(re: BigRational, im: BigRational) -> Scalar {
    Complex::new(re, im)
}

pub fn one() -> Scalar {
    Scalar::one()
}

pub fn zero() -> Scalar {
    Scalar::zero()
}

fn parse_rational(s: &str) -> Result<BigRational> {
    let bad = || HopfError::InvalidInput(format!("cannot parse rational `{s}`"));
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s.trim(), "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(HopfError::InvalidInput(format!("zero denominator in `{s}`")));
    }
    Ok(BigRational::new(num, den))
}

/// Parses `"p/q"`, `"p/q+r/s i"`, `"r/s i"`, `"i"`, `"-i"`; whitespace and
/// parentheses are ignored.
pub fn parse_scalar(text: &str) -> Result<Scalar> {
    let s: String = text
        .chars()
        .filter(|c| !c.is_whitespace() && *c != '(' && *c != ')')
        .collect();
    if s.is_empty() {
        return Err(HopfError::InvalidInput("empty coefficient string".into()));
    }
    let Some(body) = s.strip_suffix('i') else {
        return Ok(Complex::new(parse_rational(&s)?, BigRational::zero()));
    };
    // split at the last sign that is not the leading character
    let split = body
        .char_indices()
        .skip(1)
        .filter(|(_, c)| *c == '+' || *c == '-')
        .map(|(i, _)| i)
        .last();
    let (re, im) = match split {
        Some(i) => (&body[..i], &body[i..]),
        None => ("", body),
    };
    let im = match im {
        "" | "+" => BigRational::one(),
        "-" => -BigRational::one(),
        other => parse_rational(other.strip_prefix('+').unwrap_or(other))?,
    };
    let re = if re.is_empty() {
        BigRational::zero()
    } else {
        parse_rational(re)?
    };
    Ok(Complex::new(re, im))
}

fn fmt_rational(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn format_scalar(c: &Scalar) -> String {
    match (c.re.is_zero(), c.im.is_zero()) {
        (_, true) => fmt_rational(&c.re),
        (true, false) => format!("{} i", fmt_rational(&c.im)),
        (false, false) => {
            let sign = if c.im.is_negative() { '-' } else { '+' };
            format!("{}{}{} i", fmt_rational(&c.re), sign, fmt_rational(&c.im.abs()))
        }
    }
}

/// True when the value is a real number, as opposed to a genuinely complex one.
pub fn is_real(c: &Scalar) -> bool {
    c.im.is_zero()
}
