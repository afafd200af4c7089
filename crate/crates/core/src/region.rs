//! Membership and minimal-order queries.
//!
//! The region is star-shaped about the origin, so `z` belongs to it exactly
//! when `|z|` does not exceed the modulus of the boundary point with the same
//! argument.

use std::f64::consts::TAU;

use num_complex::Complex64;

use crate::boundary::{boundary_point_with, BoundaryConfig};
use crate::error::{Error, Result};
use crate::farey::{reduce_angle, Fraction};

pub const DEFAULT_TOL_MEMBER: f64 = 1e-9;
pub const DEFAULT_CAP: u64 = 1000;

/// Points with `|z|` beyond `1 + UNIT_DISC_SLACK` are rejected outright.
pub const UNIT_DISC_SLACK: f64 = 1e-6;

/// Points with `||z| - 1|` below this are located by their rational argument.
pub const UNIT_CIRCLE_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MembershipVerdict {
    pub inside: bool,
    pub boundary_modulus: f64,
    /// `boundary_modulus - |z|`; for `n = 1` it is `-|z - 1|`.
    pub margin: f64,
}

fn check_disc(z: Complex64) -> Result<()> {
    let r = z.norm();
    if r > 1.0 + UNIT_DISC_SLACK || !r.is_finite() {
        Err(Error::OutsideUnitDisc(r))
    } else {
        Ok(())
    }
}

pub fn contains(n: u64, z: Complex64, tol_member: f64) -> Result<MembershipVerdict> {
    contains_with(n, z, tol_member, &BoundaryConfig::default())
}

pub fn contains_with(
    n: u64,
    z: Complex64,
    tol_member: f64,
    cfg: &BoundaryConfig,
) -> Result<MembershipVerdict> {
    if n == 0 {
        return Err(Error::OrderTooSmall { n, min: 1 });
    }
    check_disc(z)?;
    if n == 1 {
        // Only the 1×1 matrix [1].
        let margin = -(z - 1.0).norm();
        let on_ray = reduce_angle(z.arg()).min(TAU - reduce_angle(z.arg())) <= cfg.tol_angle;
        return Ok(MembershipVerdict {
            inside: margin >= -tol_member,
            boundary_modulus: if on_ray { 1.0 } else { 0.0 },
            margin,
        });
    }
    let b = boundary_point_with(n, z.arg(), cfg)?;
    let margin = b.rho - z.norm();
    Ok(MembershipVerdict {
        inside: margin >= -tol_member,
        boundary_modulus: b.rho,
        margin,
    })
}

/// Smallest-denominator fraction within `tol` of `x ∈ [0, 1]`, searched down
/// the Stern–Brocot tree up to denominator `cap`.
pub fn rational_turns(x: f64, cap: u64, tol: f64) -> Option<Fraction> {
    if x.abs() <= tol {
        return Some(Fraction::ZERO);
    }
    if (1.0 - x).abs() <= tol {
        return Some(Fraction::ONE);
    }
    let (mut lp, mut lq, mut hp, mut hq) = (0u64, 1u64, 1u64, 1u64);
    loop {
        let (mp, mq) = (lp + hp, lq + hq);
        if mq > cap {
            return None;
        }
        let m = mp as f64 / mq as f64;
        if (m - x).abs() <= tol {
            return Fraction::new(mp, mq);
        }
        if m < x {
            (lp, lq) = (mp, mq);
        } else {
            (hp, hq) = (mp, mq);
        }
    }
}

pub fn min_order(z: Complex64, cap: u64) -> Result<u64> {
    min_order_with(z, cap, DEFAULT_TOL_MEMBER, &BoundaryConfig::default())
}

/// Smallest `n <= cap` whose region contains `z`.
pub fn min_order_with(
    z: Complex64,
    cap: u64,
    tol_member: f64,
    cfg: &BoundaryConfig,
) -> Result<u64> {
    check_disc(z)?;
    if (z.norm() - 1.0).abs() <= UNIT_CIRCLE_TOL {
        // On the unit circle only the points e^{2πi·p/q} with q <= n occur.
        let turns = reduce_angle(z.arg()) / TAU;
        return rational_turns(turns, cap, cfg.tol_angle.max(UNIT_CIRCLE_TOL) / TAU)
            .map(|f| if f.is_full_turn() { 1 } else { f.denom() })
            .ok_or(Error::NotFoundBelowCap { cap });
    }
    for n in 1..=cap {
        if contains_with(n, z, tol_member, cfg)?.inside {
            return Ok(n);
        }
    }
    Err(Error::NotFoundBelowCap { cap })
}

/// Largest `c ∈ [0, 1]` with `c·z` in the region of order `n`.
pub fn scale_into(n: u64, z: Complex64) -> Result<f64> {
    scale_into_with(n, z, &BoundaryConfig::default())
}

pub fn scale_into_with(n: u64, z: Complex64, cfg: &BoundaryConfig) -> Result<f64> {
    let r = z.norm();
    if r == 0.0 {
        return Ok(1.0);
    }
    let b = boundary_point_with(n, z.arg(), cfg)?;
    Ok((b.rho / r).min(1.0))
}
