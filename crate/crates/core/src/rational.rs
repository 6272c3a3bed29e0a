//! Exact rational scalar type and conversions.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// The scalar used everywhere: arbitrary-precision rational.
pub type Rat = BigRational;

pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn frac(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// 2^e as a rational, e ≥ 0.
pub fn pow2(e: u32) -> Rat {
    Rat::from_integer(BigInt::one() << e)
}

/// If `x` is a power of two (2^e, e ≥ 0), return e.
pub fn log2_exact(x: &Rat) -> Option<u32> {
    if !x.is_integer() || !x.is_positive() {
        return None;
    }
    let n = x.to_integer();
    let bits = n.bits();
    let e = (bits - 1) as u32;
    if &(BigInt::one() << e) == &n {
        Some(e)
    } else {
        None
    }
}

/// Parse a plain decimal literal ("3", "-1.25", "0.5") into an exact rational.
pub fn parse_decimal(s: &str) -> Option<Rat> {
    let s = s.trim();
    if s.is_empty() {
        return None;
    }
    let (sign, body) = match s.strip_prefix('-') {
        Some(rest) => (-1i64, rest),
        None => (1, s.strip_prefix('+').unwrap_or(s)),
    };
    let (int_part, frac_part) = match body.split_once('.') {
        Some((a, b)) => (a, b),
        None => (body, ""),
    };
    if int_part.is_empty() && frac_part.is_empty() {
        return None;
    }
    if !int_part.chars().all(|c| c.is_ascii_digit())
        || !frac_part.chars().all(|c| c.is_ascii_digit())
    {
        return None;
    }
    let digits = format!("{int_part}{frac_part}");
    let numer: BigInt = digits.parse().ok()?;
    let denom = BigInt::from(10u32).pow(frac_part.len() as u32);
    Some(Rat::new(BigInt::from(sign) * numer, denom))
}

/// Parse "p/q", "p", or a decimal into an exact rational.
pub fn parse_ratio(s: &str) -> Option<Rat> {
    let s = s.trim();
    if let Some((p, q)) = s.split_once('/') {
        let p: BigInt = p.trim().parse().ok()?;
        let q: BigInt = q.trim().parse().ok()?;
        if q.is_zero() {
            return None;
        }
        Some(Rat::new(p, q))
    } else {
        parse_decimal(s)
    }
}

/// Canonical text form: reduced "p/q", or "p" when the denominator is 1.
pub fn format_ratio(x: &Rat) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}
