//! Dense complex polynomials and a simultaneous (Durand–Kerner) root finder.

use std::f64::consts::TAU;
use std::fmt;

use num_complex::Complex64;

use crate::error::{Error, Result};

pub const DEFAULT_ROOT_TOL: f64 = 1e-13;
pub const DEFAULT_MAX_ITER: usize = 2000;

/// Roots closer than this are treated as one cluster by [`RootSet::clusters`].
pub const CLUSTER_RADIUS: f64 = 1e-5;

/// Polynomial with complex coefficients, constant term first.
#[derive(Debug, Clone, PartialEq)]
pub struct Poly {
    coeffs: Vec<Complex64>,
}

impl Poly {
    /// Trailing (highest-degree) exact zeros are dropped; the zero polynomial
    /// is kept as a single zero coefficient.
    pub fn new(mut coeffs: Vec<Complex64>) -> Self {
        while coeffs.len() > 1 && coeffs.last() == Some(&Complex64::new(0.0, 0.0)) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(Complex64::new(0.0, 0.0));
        }
        Self { coeffs }
    }

    pub fn from_real(coeffs: &[f64]) -> Self {
        Self::new(coeffs.iter().map(|&c| Complex64::new(c, 0.0)).collect())
    }

    /// `c·t^k`.
    pub fn monomial(c: Complex64, k: usize) -> Self {
        let mut coeffs = vec![Complex64::new(0.0, 0.0); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    /// Monic polynomial `∏ (t - r)`.
    pub fn from_roots(roots: &[Complex64]) -> Self {
        let mut coeffs = vec![Complex64::new(1.0, 0.0)];
        for &r in roots {
            let mut next = vec![Complex64::new(0.0, 0.0); coeffs.len() + 1];
            for (i, &c) in coeffs.iter().enumerate() {
                next[i + 1] += c;
                next[i] -= c * r;
            }
            coeffs = next;
        }
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn leading(&self) -> Complex64 {
        self.coeffs[self.degree()]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0] == Complex64::new(0.0, 0.0)
    }

    /// Horner evaluation.
    pub fn eval(&self, z: Complex64) -> Complex64 {
        self.coeffs
            .iter()
            .rev()
            .fold(Complex64::new(0.0, 0.0), |acc, &c| acc * z + c)
    }

    /// `Σ |c_i| |z|^i`, the scale of rounding error in [`Poly::eval`].
    pub fn eval_abs(&self, z: Complex64) -> f64 {
        let r = z.norm();
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * r + c.norm())
    }

    pub fn derivative(&self) -> Poly {
        if self.degree() == 0 {
            return Poly::from_real(&[0.0]);
        }
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, &c)| c * i as f64)
                .collect(),
        )
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        let mut out = vec![Complex64::new(0.0, 0.0); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(out)
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let len = self.coeffs.len().max(other.coeffs.len());
        let get = |v: &[Complex64], i: usize| v.get(i).copied().unwrap_or_default();
        Poly::new(
            (0..len)
                .map(|i| get(&self.coeffs, i) + get(&other.coeffs, i))
                .collect(),
        )
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.scale(Complex64::new(-1.0, 0.0)))
    }

    pub fn scale(&self, c: Complex64) -> Poly {
        Poly::new(self.coeffs.iter().map(|&a| a * c).collect())
    }

    /// Multiplies by `t^k`.
    pub fn shift(&self, k: usize) -> Poly {
        let mut coeffs = vec![Complex64::new(0.0, 0.0); k];
        coeffs.extend_from_slice(&self.coeffs);
        Poly::new(coeffs)
    }

    /// Largest coefficient-wise distance, relative to the largest coefficient of `self`.
    pub fn relative_distance(&self, other: &Poly) -> f64 {
        let diff = self.sub(other);
        let scale = self
            .coeffs
            .iter()
            .map(|c| c.norm())
            .fold(0.0_f64, f64::max)
            .max(f64::MIN_POSITIVE);
        diff.coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max) / scale
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if *c == Complex64::new(0.0, 0.0) && self.degree() > 0 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})t")?,
                _ => write!(f, "({c})t^{i}")?,
            }
        }
        Ok(())
    }
}

/// `e^{2πi·k/m}`, exact on the real and imaginary axes.
pub fn root_of_unity(k: i64, m: u64) -> Complex64 {
    let m = m as i64;
    let k = k.rem_euclid(m);
    if (4 * k) % m == 0 {
        return match 4 * k / m {
            0 => Complex64::new(1.0, 0.0),
            1 => Complex64::new(0.0, 1.0),
            2 => Complex64::new(-1.0, 0.0),
            _ => Complex64::new(0.0, -1.0),
        };
    }
    Complex64::from_polar(1.0, TAU * k as f64 / m as f64)
}

/// The roots of a polynomial together with the largest residual `|p(root)|`.
#[derive(Debug, Clone, PartialEq)]
pub struct RootSet {
    pub roots: Vec<Complex64>,
    pub residual: f64,
}

impl RootSet {
    pub fn new(roots: Vec<Complex64>, poly: &Poly) -> Self {
        let residual = roots
            .iter()
            .map(|&z| poly.eval(z).norm())
            .fold(0.0, f64::max);
        Self { roots, residual }
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    /// Root nearest to `z`.
    pub fn nearest(&self, z: Complex64) -> Option<Complex64> {
        self.roots
            .iter()
            .copied()
            .min_by(|a, b| (a - z).norm().total_cmp(&(b - z).norm()))
    }

    /// Groups roots lying within `radius` of a cluster's first member.
    /// Returns `(centroid, multiplicity)` pairs.
    pub fn clusters(&self, radius: f64) -> Vec<(Complex64, usize)> {
        let mut groups: Vec<Vec<Complex64>> = Vec::new();
        for &z in &self.roots {
            match groups.iter_mut().find(|g| (g[0] - z).norm() <= radius) {
                Some(g) => g.push(z),
                None => groups.push(vec![z]),
            }
        }
        groups
            .into_iter()
            .map(|g| {
                let c = g.iter().sum::<Complex64>() / g.len() as f64;
                (c, g.len())
            })
            .collect()
    }
}

/// Consecutive sweeps at rounding-level residual after which the iteration
/// is stopped even if the update has not fallen below `tol`.
const STALL_SWEEPS: usize = 10;

/// All roots by Durand–Kerner (Weierstrass) iteration.
///
/// Starting points lie on the circle of radius `1 + max |c_i / c_lead|`,
/// rotated by 0.4 rad. Iteration stops once the largest relative update is
/// below `tol`, or once every residual has been at rounding level for a few
/// sweeps (the only attainable accuracy near multiple roots).
pub fn all_roots(poly: &Poly, tol: f64, max_iter: usize) -> Result<RootSet> {
    if poly.degree() == 0 {
        return Err(Error::ConstantPolynomial);
    }
    let lead = poly.leading();
    let monic: Vec<Complex64> = poly.coeffs().iter().map(|&c| c / lead).collect();

    let zeros = monic
        .iter()
        .take_while(|c| **c == Complex64::new(0.0, 0.0))
        .count();
    let reduced = Poly::new(monic[zeros..].to_vec());
    let mut roots = vec![Complex64::new(0.0, 0.0); zeros];
    roots.extend(durand_kerner(&reduced, tol, max_iter)?);
    Ok(RootSet::new(roots, poly))
}

/// Same as [`all_roots`] with default tolerance and iteration cap.
pub fn roots(poly: &Poly) -> Result<RootSet> {
    all_roots(poly, DEFAULT_ROOT_TOL, DEFAULT_MAX_ITER)
}

fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let t = s - a;
    (s, (a - (s - t)) + (b - t))
}

fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    (p, a.mul_add(b, -p))
}

/// Unevaluated sum `hi + lo` of two doubles.
#[derive(Clone, Copy)]
struct Dd(f64, f64);

impl Dd {
    fn renorm(hi: f64, lo: f64) -> Dd {
        let s = hi + lo;
        Dd(s, lo - (s - hi))
    }

    fn mul_f(self, y: f64) -> Dd {
        let (p, e) = two_prod(self.0, y);
        Dd::renorm(p, e + self.1 * y)
    }

    fn add(self, y: Dd) -> Dd {
        let (s, e) = two_sum(self.0, y.0);
        Dd::renorm(s, e + self.1 + y.1)
    }

    fn neg(self) -> Dd {
        Dd(-self.0, -self.1)
    }
}

/// Horner evaluation carried in double-double arithmetic; the result is
/// accurate to about `ε² Σ|c_i||z|^i`, which lets iterates settle much closer
/// to multiple roots than plain Horner allows.
fn eval_compensated(coeffs: &[Complex64], z: Complex64) -> Complex64 {
    let (mut re, mut im) = (Dd(0.0, 0.0), Dd(0.0, 0.0));
    for c in coeffs.iter().rev() {
        let nre = re.mul_f(z.re).add(im.mul_f(z.im).neg()).add(Dd(c.re, 0.0));
        let nim = re.mul_f(z.im).add(im.mul_f(z.re)).add(Dd(c.im, 0.0));
        re = nre;
        im = nim;
    }
    Complex64::new(re.0 + re.1, im.0 + im.1)
}

enum Sweep {
    Converged,
    Stalled,
}

/// Weierstrass sweeps with Gauss-Seidel updates until the relative update
/// falls below `tol` or the residuals sit at the evaluation's rounding level.
fn dk_sweeps(
    monic: &Poly,
    z: &mut [Complex64],
    tol: f64,
    max_iter: usize,
    compensated: bool,
) -> Result<Sweep> {
    let deg = z.len();
    let c = monic.coeffs();
    let gamma = 8.0 * (deg as f64) * f64::EPSILON;
    let rounding = if compensated { gamma * gamma } else { gamma };
    let mut stalled = 0;
    let mut last_update = f64::INFINITY;
    for _ in 0..max_iter {
        let mut max_update: f64 = 0.0;
        let mut at_rounding = true;
        for k in 0..deg {
            let zk = z[k];
            let value = if compensated {
                eval_compensated(c, zk)
            } else {
                monic.eval(zk)
            };
            if value.norm() > rounding * monic.eval_abs(zk) {
                at_rounding = false;
            }
            let mut denom = Complex64::new(1.0, 0.0);
            for (j, &zj) in z.iter().enumerate() {
                if j != k {
                    denom *= zk - zj;
                }
            }
            if denom == Complex64::new(0.0, 0.0) {
                // Coincident iterates: nudge apart.
                z[k] = zk + Complex64::new(tol.sqrt(), tol.sqrt());
                max_update = f64::INFINITY;
                continue;
            }
            let step = value / denom;
            z[k] = zk - step;
            max_update = max_update.max(step.norm() / zk.norm().max(1.0));
        }
        last_update = max_update;
        if !z.iter().all(|w| w.is_finite()) {
            break;
        }
        if max_update < tol {
            return Ok(Sweep::Converged);
        }
        stalled = if at_rounding { stalled + 1 } else { 0 };
        if stalled >= STALL_SWEEPS {
            return Ok(Sweep::Stalled);
        }
    }
    Err(Error::NonConvergence {
        iterations: max_iter,
        last_update,
    })
}

fn durand_kerner(monic: &Poly, tol: f64, max_iter: usize) -> Result<Vec<Complex64>> {
    let deg = monic.degree();
    let c = monic.coeffs();
    match deg {
        0 => return Ok(Vec::new()),
        1 => return Ok(vec![-c[0]]),
        _ => {}
    }
    let radius = 1.0 + c[..deg].iter().map(|a| a.norm()).fold(0.0, f64::max);
    let mut z: Vec<Complex64> = (0..deg)
        .map(|k| Complex64::from_polar(radius, TAU * k as f64 / deg as f64 + 0.4))
        .collect();

    if let Sweep::Stalled = dk_sweeps(monic, &mut z, tol, max_iter, false)? {
        // Stalling means clustered roots; refine them with extra precision.
        let fallback = z.clone();
        if dk_sweeps(monic, &mut z, tol, max_iter, true).is_err() {
            return Ok(fallback);
        }
    }
    Ok(z)
}
