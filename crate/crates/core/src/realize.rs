//! Stochastic matrices with a prescribed subdominant eigenvalue.
//!
//! A point `z = c·z₀` of the region, with `z₀` on the boundary, is realized by
//! a small matrix having `z₀` as an eigenvalue, inflated to order `n` and then
//! pulled towards the averaging matrix, which multiplies every eigenvalue
//! other than 1 by `c`. Only Type 0 and Type I arcs have a matrix built here;
//! for Type II and III the result is the characteristic polynomial together
//! with a numerical check that `z₀` is a subdominant root.

use num_complex::Complex64;

use crate::arcs::{ito_roots, reduced_ito_poly, ArcParams, ArcType};
use crate::boundary::boundary_point;
use crate::error::{Error, Result};
use crate::matrix::StochasticMatrix;
use crate::poly::{root_of_unity, roots, Poly, RootSet};
use crate::region::{contains, DEFAULT_TOL_MEMBER};

/// Distance below which a root counts as the Perron root or as `t`.
pub const SUBDOMINANCE_TOL: f64 = 1e-8;
/// Roots of equal modulus must lie this close to `t` or its conjugate.
pub const RIGIDITY_TOL: f64 = 1e-6;

fn check_unit(x: f64, err: fn(f64) -> Error) -> Result<()> {
    if (0.0..=1.0).contains(&x) {
        Ok(())
    } else {
        Err(err(x))
    }
}

/// `(1 - α)I + αP` with `P` the cycle `i -> i+1`.
pub fn cyclic_combo(n: usize, alpha: f64) -> Result<StochasticMatrix> {
    check_unit(alpha, Error::AlphaOutOfRange)?;
    let rows = (0..n)
        .map(|i| {
            let mut row = vec![0.0; n];
            row[i] += 1.0 - alpha;
            row[(i + 1) % n] += alpha;
            row
        })
        .collect();
    Ok(StochasticMatrix::from_rows_unchecked(rows))
}

/// Companion matrix of `t^s - βt^{s-q} - α`.
pub fn companion_type_i(params: &ArcParams, alpha: f64) -> Result<StochasticMatrix> {
    if params.arc_type != ArcType::TypeI {
        return Err(Error::WrongArcType {
            expected: "TypeI",
            actual: params.arc_type.name(),
        });
    }
    check_unit(alpha, Error::AlphaOutOfRange)?;
    let s = params.s as usize;
    let q = params.q as usize;
    let mut rows = vec![vec![0.0; s]; s];
    for (i, row) in rows.iter_mut().enumerate().take(s - 1) {
        row[i + 1] = 1.0;
    }
    rows[s - 1][0] = alpha;
    rows[s - 1][s - q] += 1.0 - alpha;
    Ok(StochasticMatrix::from_rows_unchecked(rows))
}

/// `XTY` of order `n`: the first row of `T` is repeated `n - m + 1` times and
/// its first column is spread evenly over as many columns. The spectrum is
/// that of `T` plus `n - m` zeros.
pub fn inflate(t: &StochasticMatrix, n: usize) -> Result<StochasticMatrix> {
    let m = t.order();
    if m > n || m == 0 {
        return Err(Error::InflateTooSmall { m, n });
    }
    let k = n - m + 1;
    let rows = (0..n)
        .map(|a| {
            let src = t.row(a.saturating_sub(k - 1));
            (0..n)
                .map(|b| if b < k { src[0] / k as f64 } else { src[b - k + 1] })
                .collect()
        })
        .collect();
    Ok(StochasticMatrix::from_rows_unchecked(rows))
}

/// `cT + (1 - c)/n · J`; the eigenvalues become `1, cλ₂, …, cλₙ`.
pub fn brauer_scale(t: &StochasticMatrix, c: f64) -> Result<StochasticMatrix> {
    check_unit(c, Error::ScaleOutOfRange)?;
    if c == 1.0 {
        return Ok(t.clone());
    }
    let n = t.order();
    let avg = (1.0 - c) / n as f64;
    let rows = (0..n)
        .map(|i| t.row(i).iter().map(|&x| c * x + avg).collect())
        .collect();
    Ok(StochasticMatrix::from_rows_unchecked(rows))
}

/// True when `t` is among `roots` and every root other than the Perron root 1
/// is no larger than `t` in modulus, with ties only at `t` and its conjugate.
pub fn verify_subdominant(roots: &RootSet, t: Complex64) -> bool {
    let present = roots
        .roots
        .iter()
        .any(|z| (z - t).norm() <= SUBDOMINANCE_TOL);
    if !present {
        return false;
    }
    let bound = t.norm();
    roots.roots.iter().all(|z| {
        if (z - 1.0).norm() <= SUBDOMINANCE_TOL {
            return true;
        }
        let r = z.norm();
        if r > bound + SUBDOMINANCE_TOL {
            return false;
        }
        if (r - bound).abs() <= SUBDOMINANCE_TOL {
            return (z - t).norm() <= RIGIDITY_TOL || (z - t.conj()).norm() <= RIGIDITY_TOL;
        }
        true
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RealizationKind {
    Matrix,
    PolynomialCertificate,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Certificate {
    pub f_alpha: Poly,
    pub roots: RootSet,
    pub subdominance_ok: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RealizationResult {
    pub kind: RealizationKind,
    pub matrix: Option<StochasticMatrix>,
    pub certificate: Option<Certificate>,
    pub target: Complex64,
    /// `c` times the eigenvalue of the building block that sits at the
    /// boundary point, i.e. the eigenvalue the construction places at `target`.
    pub achieved: Complex64,
    /// Radial factor `|z| / |z₀|`.
    pub scale: f64,
    pub params: Option<ArcParams>,
}

fn matrix_result(
    block: StochasticMatrix,
    n: usize,
    c: f64,
    eigen: Complex64,
    target: Complex64,
    params: Option<ArcParams>,
) -> Result<RealizationResult> {
    let m = brauer_scale(&inflate(&block, n)?, c)?;
    Ok(RealizationResult {
        kind: RealizationKind::Matrix,
        matrix: Some(m),
        certificate: None,
        target,
        achieved: eigen * c,
        scale: c,
        params,
    })
}

/// Realizes `z` as a subdominant eigenvalue of a stochastic matrix of order `n`.
pub fn realize_subdominant(n: u64, z: Complex64) -> Result<RealizationResult> {
    let inside = match contains(n, z, DEFAULT_TOL_MEMBER) {
        Ok(v) => v.inside,
        Err(Error::OutsideUnitDisc(_)) => false,
        Err(e) => return Err(e),
    };
    if !inside {
        return Err(Error::NotInRegion { n });
    }
    let size = n as usize;
    if n == 1 {
        return matrix_result(StochasticMatrix::identity(1), 1, 1.0, Complex64::new(1.0, 0.0), z, None);
    }
    let b = boundary_point(n, z.arg())?;
    let c = (z.norm() / b.rho).min(1.0);

    if let Some(f) = b.vertex {
        let eigen = root_of_unity(f.numer() as i64, f.denom());
        let block = if f.denom() == 1 {
            StochasticMatrix::identity(size)
        } else {
            StochasticMatrix::cycle(f.denom() as usize)
        };
        return matrix_result(block, size, c, eigen, z, None);
    }

    let params = b.params;
    let alpha = b.alpha;
    match params.arc_type {
        ArcType::Type0 => {
            let w = root_of_unity(params.r as i64, params.s);
            let eigen = (1.0 - alpha) + alpha * w;
            matrix_result(cyclic_combo(params.s as usize, alpha)?, size, c, eigen, z, Some(params))
        }
        ArcType::TypeI => {
            let block = companion_type_i(&params, alpha)?;
            let f = reduced_ito_poly(&params, alpha)?;
            let eigen = roots(&f)?.nearest(b.value).unwrap_or(b.value);
            matrix_result(block, size, c, eigen, z, Some(params))
        }
        ArcType::TypeII | ArcType::TypeIII => {
            let f_alpha = reduced_ito_poly(&params, alpha)?;
            let root_set = ito_roots(&params, alpha)?;
            let eigen = root_set.nearest(b.value).unwrap_or(b.value);
            let subdominance_ok = verify_subdominant(&root_set, eigen);
            Ok(RealizationResult {
                kind: RealizationKind::PolynomialCertificate,
                matrix: None,
                certificate: Some(Certificate {
                    f_alpha,
                    roots: root_set,
                    subdominance_ok,
                }),
                target: z,
                achieved: eigen * c,
                scale: c,
                params: Some(params),
            })
        }
    }
}
