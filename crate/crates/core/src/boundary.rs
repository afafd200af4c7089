//! The boundary point of the region at a prescribed argument.
//!
//! Inside the sector of an arc with `q >= 2` the boundary point is
//! `ρ̂^{d1} e^{iθ}`, where `ρ̂ ∈ (0, 1]` is the unique positive root of the
//! radial equation
//!
//! ```text
//! F(ρ) = ρ^{s1} sin(q·d1·τ) - ρ^{q·d1} sin(s1·τ - φ) - sin((q·d1 - s1)·τ + φ)
//! ```
//!
//! at `τ = (θ + 2π·l0)/d1`, `φ = 2π·j0/(δ·d1)`. The arc parameter follows from
//! `α·sin((q·d1 - s1)·τ + φ) = ρ̂^{s1} sin(q·d1·τ)`.
//!
//! Sectors whose smaller-denominator endpoint is on the right are solved with
//! the same formula: there `F` is the negated radial function of the
//! conjugate sector at `2π - θ`, so the root is the same and only the sign
//! pattern of `F` flips. The solver therefore only requires a sign change.

use std::f64::consts::TAU;

use num_complex::Complex64;
use rayon::prelude::*;

use crate::arcs::{arc_params, ArcParams, ArcType};
use crate::error::{Error, Result};
use crate::farey::{bracket_in, farey_sequence, reduce_angle, Bracket, FareyPair, Fraction};
use crate::poly::root_of_unity;

/// Lower end of the bisection bracket for `ρ̂`.
const RHO_FLOOR: f64 = 1e-15;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundaryConfig {
    /// Bisection stops once the bracket is narrower than this.
    pub tol_rho: f64,
    /// Angles within this distance of a Farey angle snap to it.
    pub tol_angle: f64,
}

impl Default for BoundaryConfig {
    fn default() -> Self {
        Self {
            tol_rho: 1e-13,
            tol_angle: crate::farey::DEFAULT_ANGLE_TOL,
        }
    }
}

/// One point of the boundary.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundaryPoint {
    pub theta: f64,
    /// Modulus of the point.
    pub rho: f64,
    /// Positive root of the radial equation; `rho = rho_hat^{d1}`.
    pub rho_hat: f64,
    pub theta_hat: f64,
    pub alpha: f64,
    pub value: Complex64,
    /// Arc whose closed sector contains the point.
    pub params: ArcParams,
    /// Set when the point is `e^{2πi·p/q}` for a Farey fraction `p/q`.
    pub vertex: Option<Fraction>,
}

/// The radial equation `F(ρ) = a·ρ^{s1} + b·ρ^{q·d1} + c` for fixed `τ` and `j`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RadialEquation {
    pub s1: u64,
    pub qd1: u64,
    /// Coefficient of `ρ^{s1}`: `sin(q·d1·τ)`.
    pub coef_s1: f64,
    /// Coefficient of `ρ^{q·d1}`: `-sin(s1·τ - φ)`.
    pub coef_qd1: f64,
    /// `-sin((q·d1 - s1)·τ + φ)`.
    pub constant: f64,
}

impl RadialEquation {
    pub fn new(params: &ArcParams, j: u64, tau: f64) -> Self {
        let qd1 = params.qd1();
        let s1 = params.s1;
        let phase = TAU * j as f64 / (params.delta * params.d1) as f64;
        let diff = qd1 as f64 - s1 as f64;
        Self {
            s1,
            qd1,
            coef_s1: (qd1 as f64 * tau).sin(),
            coef_qd1: -(s1 as f64 * tau - phase).sin(),
            constant: -(diff * tau + phase).sin(),
        }
    }

    pub fn eval(&self, rho: f64) -> f64 {
        self.coef_s1 * rho.powi(self.s1 as i32) + self.coef_qd1 * rho.powi(self.qd1 as i32)
            + self.constant
    }

    /// `α` from the imaginary part of `ĝ(ρ e^{iτ}) = 0`.
    pub fn alpha(&self, rho: f64) -> f64 {
        rho.powi(self.s1 as i32) * self.coef_s1 / -self.constant
    }
}

/// `F_{τ,j}(ρ)`.
pub fn f_value(params: &ArcParams, j: u64, rho: f64, tau: f64) -> f64 {
    RadialEquation::new(params, j, tau).eval(rho)
}

pub fn solve_rho(params: &ArcParams, theta: f64) -> Result<BoundaryPoint> {
    solve_rho_with(params, theta, &BoundaryConfig::default())
}

/// Boundary point at `theta` on an arc with `q >= 2`; `theta` must lie
/// strictly inside the arc's sector.
pub fn solve_rho_with(params: &ArcParams, theta: f64, cfg: &BoundaryConfig) -> Result<BoundaryPoint> {
    if params.arc_type == ArcType::Type0 {
        return Err(Error::WrongArcType {
            expected: "TypeI, TypeII or TypeIII",
            actual: params.arc_type.name(),
        });
    }
    let theta = reduce_angle(theta);
    if !params.pair.contains_angle(theta) {
        return Err(Error::OutsideSector { theta });
    }
    let theta_hat = (theta + TAU * params.l0 as f64) / params.d1 as f64;
    let eq = RadialEquation::new(params, params.j0, theta_hat);

    let (mut lo, mut hi) = (RHO_FLOOR, 1.0);
    let (f_lo, f_hi) = (eq.eval(lo), eq.eval(hi));
    let rho_hat = if f_hi == 0.0 {
        1.0
    } else if f_lo == 0.0 {
        lo
    } else if f_lo.signum() == f_hi.signum() {
        return Err(Error::NoSignChange {
            theta,
            lo,
            hi,
            f_lo,
            f_hi,
        });
    } else {
        let lo_sign = f_lo.signum();
        while hi - lo >= cfg.tol_rho {
            let mid = 0.5 * (lo + hi);
            let f_mid = eq.eval(mid);
            if f_mid == 0.0 {
                lo = mid;
                hi = mid;
                break;
            }
            if f_mid.signum() == lo_sign {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        0.5 * (lo + hi)
    };

    let alpha = eq.alpha(rho_hat).clamp(0.0, 1.0);
    let rho = rho_hat.powi(params.d1 as i32);
    Ok(BoundaryPoint {
        theta,
        rho,
        rho_hat,
        theta_hat,
        alpha,
        value: Complex64::from_polar(rho, theta),
        params: *params,
        vertex: None,
    })
}

/// Intersection of the ray at `theta` with the chord from `1` to `e^{2πi·r/s}`
/// of a Type 0 arc.
fn chord_point(params: &ArcParams, theta: f64) -> BoundaryPoint {
    let w = root_of_unity(params.r as i64, params.s);
    let (sin, cos) = theta.sin_cos();
    // r·e^{iθ} = 1 + α(w - 1), solved by Cramer's rule.
    let det = -cos * w.im + sin * (w.re - 1.0);
    let rho = -w.im / det;
    let alpha = (-sin / det).clamp(0.0, 1.0);
    BoundaryPoint {
        theta,
        rho,
        rho_hat: rho,
        theta_hat: theta,
        alpha,
        value: Complex64::from_polar(rho, theta),
        params: *params,
        vertex: None,
    }
}

fn vertex_point(seq: &[Fraction], n: u64, f: Fraction) -> Result<BoundaryPoint> {
    // Attach the arc that starts at this vertex.
    let idx = seq
        .iter()
        .position(|&x| x == f)
        .expect("vertex is a Farey fraction of the sequence");
    let pair = FareyPair::new(seq[idx], seq[idx + 1], n)?;
    let params = arc_params(&pair)?;
    let alpha = if params.q_endpoint() == f { 0.0 } else { 1.0 };
    let theta = f.angle();
    Ok(BoundaryPoint {
        theta,
        rho: 1.0,
        rho_hat: 1.0,
        theta_hat: (theta + TAU * params.l0 as f64) / params.d1 as f64,
        alpha,
        value: root_of_unity(f.numer() as i64, f.denom()),
        params,
        vertex: Some(f),
    })
}

pub(crate) fn boundary_in(
    seq: &[Fraction],
    n: u64,
    theta: f64,
    cfg: &BoundaryConfig,
) -> Result<BoundaryPoint> {
    let theta = reduce_angle(theta);
    match bracket_in(seq, n, theta, cfg.tol_angle) {
        Bracket::Exact(f) => vertex_point(seq, n, f),
        Bracket::Pair(pair) => {
            let params = arc_params(&pair)?;
            match params.arc_type {
                ArcType::Type0 => Ok(chord_point(&params, theta)),
                _ => solve_rho_with(&params, theta, cfg),
            }
        }
    }
}

pub fn boundary_point(n: u64, theta: f64) -> Result<BoundaryPoint> {
    boundary_point_with(n, theta, &BoundaryConfig::default())
}

/// The point of the boundary of the order-`n` region with argument `theta`.
pub fn boundary_point_with(n: u64, theta: f64, cfg: &BoundaryConfig) -> Result<BoundaryPoint> {
    if n < 2 {
        return Err(Error::OrderTooSmall { n, min: 2 });
    }
    boundary_in(&farey_sequence(n), n, theta, cfg)
}

pub fn sample_boundary(n: u64, m: usize) -> Result<Vec<BoundaryPoint>> {
    sample_boundary_with(n, m, &BoundaryConfig::default())
}

/// Boundary points at `m` equally spaced arguments in `[0, 2π)` together with
/// every Farey angle of order `n`, sorted by argument. Points are computed in
/// parallel; the output order does not depend on scheduling.
pub fn sample_boundary_with(n: u64, m: usize, cfg: &BoundaryConfig) -> Result<Vec<BoundaryPoint>> {
    if n < 2 {
        return Err(Error::OrderTooSmall { n, min: 2 });
    }
    if m < 3 {
        return Err(Error::TooFewSamples(m));
    }
    let seq = farey_sequence(n);
    let farey: Vec<f64> = seq
        .iter()
        .filter(|f| !f.is_full_turn())
        .map(|f| f.angle())
        .collect();
    // Uniform angles that would snap onto a Farey angle are already covered.
    let near_farey = |t: f64| {
        let i = farey.partition_point(|&f| f < t);
        let close = |k: usize| farey.get(k).is_some_and(|&f| (f - t).abs() <= cfg.tol_angle);
        close(i) || (i > 0 && close(i - 1)) || TAU - t <= cfg.tol_angle
    };
    let mut thetas: Vec<f64> = (0..m)
        .map(|k| TAU * k as f64 / m as f64)
        .filter(|&t| !near_farey(t))
        .collect();
    thetas.extend_from_slice(&farey);
    thetas.sort_by(f64::total_cmp);

    thetas
        .par_iter()
        .map(|&t| boundary_in(&seq, n, t, cfg))
        .collect()
}
