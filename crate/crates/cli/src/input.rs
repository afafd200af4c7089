//! Complex numbers and fractions given on the command line.
//!
//! A complex number is either Cartesian, `re+imi` (`0.3-0.4i`, `-1`, `2i`), or
//! polar, `modulus@turns`, where `turns` is a fraction of a full turn such as
//! `7/24`. Rational turns keep Farey angles exact.

use std::f64::consts::TAU;

use karpelevich::poly::root_of_unity;
use karpelevich::{Complex64, FareyPair, Fraction};

fn parse_f64(s: &str) -> Result<f64, String> {
    let x: f64 = s.trim().parse().map_err(|_| format!("invalid number `{s}`"))?;
    if x.is_finite() {
        Ok(x)
    } else {
        Err(format!("non-finite number `{s}`"))
    }
}

fn parse_u64(s: &str) -> Result<u64, String> {
    s.trim().parse().map_err(|_| format!("invalid integer `{s}`"))
}

/// `e^{2πi·turns}` for `turns` given as `a/b`, an integer or a decimal.
fn unit_from_turns(s: &str) -> Result<Complex64, String> {
    let s = s.trim();
    if let Some((a, b)) = s.split_once('/') {
        let a: i64 = a.trim().parse().map_err(|_| format!("invalid numerator in `{s}`"))?;
        let b = parse_u64(b)?;
        if b == 0 {
            return Err(format!("zero denominator in `{s}`"));
        }
        return Ok(root_of_unity(a, b));
    }
    if let Ok(k) = s.parse::<i64>() {
        return Ok(root_of_unity(k, 1));
    }
    Ok(Complex64::from_polar(1.0, TAU * parse_f64(s)?))
}

/// Index where the imaginary part of `a±bi` starts, if there is a real part.
fn split_point(s: &str) -> Option<usize> {
    let b = s.as_bytes();
    (1..b.len())
        .rev()
        .find(|&i| (b[i] == b'+' || b[i] == b'-') && !matches!(b[i - 1], b'e' | b'E'))
}

fn parse_imag(s: &str) -> Result<f64, String> {
    match s {
        "" | "+" => Ok(1.0),
        "-" => Ok(-1.0),
        _ => parse_f64(s),
    }
}

pub fn parse_complex(s: &str) -> Result<Complex64, String> {
    let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if t.is_empty() {
        return Err("empty complex number".into());
    }
    if let Some((m, turns)) = t.split_once('@') {
        let m = parse_f64(m)?;
        if m < 0.0 {
            return Err(format!("negative modulus in `{s}`"));
        }
        return Ok(unit_from_turns(turns)? * m);
    }
    let Some(body) = t.strip_suffix('i') else {
        return Ok(Complex64::new(parse_f64(&t)?, 0.0));
    };
    match split_point(body) {
        Some(k) => Ok(Complex64::new(parse_f64(&body[..k])?, parse_imag(&body[k..])?)),
        None => Ok(Complex64::new(0.0, parse_imag(body)?)),
    }
}

pub fn parse_fraction(s: &str) -> Result<Fraction, String> {
    let (a, b) = s
        .trim()
        .split_once('/')
        .ok_or_else(|| format!("expected a fraction p/q, got `{s}`"))?;
    Fraction::new(parse_u64(a)?, parse_u64(b)?).ok_or_else(|| format!("`{s}` is not a fraction in [0, 1]"))
}

/// Parses `"a/b,c/d"` as a Farey pair of order `n`.
pub fn parse_pair(s: &str, n: u64) -> Result<FareyPair, String> {
    let (a, b) = s
        .split_once(',')
        .ok_or_else(|| format!("expected `p/q,r/s`, got `{s}`"))?;
    FareyPair::new(parse_fraction(a)?, parse_fraction(b)?, n).map_err(|e| e.to_string())
}
