//! Exact rational scalars.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational number.
pub type Q = BigRational;

pub fn q(num: i64, den: i64) -> Q {
    Q::new(BigInt::from(num), BigInt::from(den))
}

pub fn qi(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn to_f64(x: &Q) -> f64 {
    x.to_f64().unwrap_or_else(|| {
        // Fall back to a scaled division for values outside the direct range.
        let n = x.numer().to_f64().unwrap_or(f64::NAN);
        let d = x.denom().to_f64().unwrap_or(f64::NAN);
        n / d
    })
}

/// Exact conversion of a finite double to a rational.
pub fn from_f64(x: f64) -> Option<Q> {
    Q::from_float(x)
}

pub fn factorial(n: u64) -> Q {
    let mut acc = BigInt::one();
    for k in 2..=n {
        acc *= BigInt::from(k);
    }
    Q::from_integer(acc)
}

/// `ceil(x) - 1` as an integer, i.e. the largest integer strictly below `x`.
pub fn largest_integer_below(x: &Q) -> BigInt {
    x.ceil().to_integer() - BigInt::one()
}

pub fn is_integer(x: &Q) -> bool {
    x.is_integer()
}

/// Parses `"p/q"`, an integer, or a decimal literal such as `-0.75` or `1e-3`.
///
/// Decimal literals are read as exact decimal fractions, so `"0.1"` is
/// exactly `1/10`. The boolean is `true` when the input used decimal form.
pub fn parse_rational_with_form(s: &str) -> Result<(Q, bool)> {
    let t = s.trim();
    if t.is_empty() {
        return Err(Error::Parse(s.to_string()));
    }
    if let Some((n, d)) = t.split_once('/') {
        let n: BigInt = n.trim().parse().map_err(|_| Error::Parse(s.to_string()))?;
        let d: BigInt = d.trim().parse().map_err(|_| Error::Parse(s.to_string()))?;
        if d.is_zero() {
            return Err(Error::Parse(s.to_string()));
        }
        return Ok((Q::new(n, d), false));
    }
    if let Ok(n) = t.parse::<BigInt>() {
        return Ok((Q::from_integer(n), false));
    }
    // Decimal / scientific notation.
    let (mantissa, exp) = match t.find(['e', 'E']) {
        Some(i) => {
            let e: i64 = t[i + 1..].parse().map_err(|_| Error::Parse(s.to_string()))?;
            (&t[..i], e)
        }
        None => (t, 0),
    };
    let (neg, body) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (int_part, frac_part) = body.split_once('.').unwrap_or((body, ""));
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(Error::Parse(s.to_string()));
    }
    if !int_part.chars().chain(frac_part.chars()).all(|c| c.is_ascii_digit()) {
        return Err(Error::Parse(s.to_string()));
    }
    let digits = format!("{int_part}{frac_part}");
    let mut num: BigInt = if digits.is_empty() {
        BigInt::zero()
    } else {
        digits.parse().map_err(|_| Error::Parse(s.to_string()))?
    };
    if neg {
        num = -num;
    }
    let scale = exp - frac_part.len() as i64;
    let ten = BigInt::from(10);
    let value = if scale >= 0 {
        Q::from_integer(num * num_traits::pow(ten, scale as usize))
    } else {
        Q::new(num, num_traits::pow(ten, (-scale) as usize))
    };
    Ok((value, true))
}

pub fn parse_rational(s: &str) -> Result<Q> {
    parse_rational_with_form(s).map(|(v, _)| v)
}

/// Canonical `p/q` text (or `p` for integers); round-trips through [`parse_rational`].
pub fn format_rational(x: &Q) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

pub fn abs(x: &Q) -> Q {
    x.abs()
}
