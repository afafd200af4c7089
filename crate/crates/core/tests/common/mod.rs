//! Independent reference computations shared by the integration tests.
//!
//! Nothing here calls the bisection solver; the oracles work directly from
//! the arc polynomials.

#![allow(dead_code)]

use std::f64::consts::TAU;

use karpelevich::arcs::{all_arcs, g_factor, ArcParams, ArcType};
use karpelevich::matrix::StochasticMatrix;
use karpelevich::poly::roots;
use num_complex::Complex64;
use rand::Rng;

pub fn wrap(x: f64) -> f64 {
    let y = x.rem_euclid(TAU);
    if y > std::f64::consts::PI {
        y - TAU
    } else {
        y
    }
}

pub fn arg01(z: Complex64) -> f64 {
    let a = z.arg().rem_euclid(TAU);
    if a >= TAU {
        0.0
    } else {
        a
    }
}

/// `ĝ_j(t)` for `t != 0`, written with a possibly negative exponent, and its derivative.
pub fn g_hat_eval(p: &ArcParams, j: u64, alpha: f64, t: Complex64) -> (Complex64, Complex64) {
    let qd1 = (p.q * p.d1) as i32;
    let e = qd1 - p.s1 as i32;
    let w = Complex64::from_polar(1.0, TAU * j as f64 / (p.delta * p.d1) as f64) * alpha;
    let f = t.powi(qd1) - (1.0 - alpha) - w * t.powi(e);
    let df = t.powi(qd1 - 1) * qd1 as f64 - w * t.powi(e - 1) * e as f64;
    (f, df)
}

pub fn newton_hat(p: &ArcParams, j: u64, alpha: f64, mut t: Complex64) -> Complex64 {
    for _ in 0..100 {
        let (f, df) = g_hat_eval(p, j, alpha, t);
        let step = f / df;
        t -= step;
        if step.norm() < 1e-16 {
            break;
        }
    }
    t
}

/// Follows the root of `ĝ_j` that starts at `start` when `α = 0` up to `alpha`.
pub fn track_hat(p: &ArcParams, j: u64, start: Complex64, alpha: f64, steps: usize) -> Complex64 {
    let mut t = start;
    for k in 1..=steps {
        t = newton_hat(p, j, alpha * k as f64 / steps as f64, t);
    }
    t
}

/// Row-stochastic matrix with rows drawn uniformly from the simplex.
pub fn random_stochastic<R: Rng>(rng: &mut R, n: usize) -> StochasticMatrix {
    let rows = (0..n)
        .map(|_| {
            let e: Vec<f64> = (0..n).map(|_| -(1.0 - rng.gen::<f64>()).ln()).collect();
            let total: f64 = e.iter().sum();
            e.iter().map(|x| x / total).collect()
        })
        .collect();
    StochasticMatrix::new(rows).expect("normalized rows")
}

/// Assigns each root of `cur` to one of the `predicted` positions, closest
/// pairs first. Returns, for each prediction, the index into `cur`.
fn match_roots(predicted: &[Complex64], cur: &[Complex64]) -> Vec<usize> {
    let mut cand: Vec<(f64, usize, usize)> = Vec::with_capacity(predicted.len() * cur.len());
    for (i, a) in predicted.iter().enumerate() {
        for (k, b) in cur.iter().enumerate() {
            cand.push(((a - b).norm(), i, k));
        }
    }
    cand.sort_by(|x, y| x.0.total_cmp(&y.0));
    let mut assigned = vec![usize::MAX; predicted.len()];
    let mut used = vec![false; cur.len()];
    for (_, i, k) in cand {
        if assigned[i] == usize::MAX && !used[k] {
            assigned[i] = k;
            used[k] = true;
        }
    }
    assigned
}

fn cross(a: Complex64, b: Complex64) -> f64 {
    a.re * b.im - a.im * b.re
}

/// Outer envelope of every root locus of every arc polynomial of order `n`,
/// sampled on an `α` grid. Consecutive samples of one locus are joined by
/// straight segments, and the envelope at `θ` is the largest modulus at which
/// one of them meets the ray `arg z = θ`.
pub struct Envelope {
    buckets: Vec<Vec<(Complex64, Complex64)>>,
    points: Vec<Vec<Complex64>>,
    /// Segments dropped because their endpoints were too far apart to be one locus.
    pub dropped: usize,
}

const MIN_MODULUS: f64 = 1e-3;
const MAX_STEP: f64 = 0.05;

impl Envelope {
    fn bucket(&self, theta: f64) -> usize {
        let nb = self.buckets.len();
        ((theta.rem_euclid(TAU) / TAU * nb as f64) as usize).min(nb - 1)
    }

    fn insert(&mut self, a: Complex64, b: Complex64) {
        if a.norm() < MIN_MODULUS || b.norm() < MIN_MODULUS {
            return;
        }
        if (a - b).norm() > MAX_STEP {
            self.dropped += 1;
            return;
        }
        let nb = self.buckets.len() as f64;
        let (ta, d) = (arg01(a), wrap(arg01(b) - arg01(a)));
        let (lo, hi) = if d >= 0.0 { (ta, ta + d) } else { (ta + d, ta) };
        let first = (lo / TAU * nb).floor() as i64 - 1;
        let last = (hi / TAU * nb).floor() as i64 + 1;
        for k in first..=last {
            let idx = k.rem_euclid(nb as i64) as usize;
            self.buckets[idx].push((a, b));
        }
    }

    fn add_point(&mut self, z: Complex64) {
        let idx = self.bucket(arg01(z));
        self.points[idx].push(z);
    }

    pub fn build(n: u64, alpha_steps: usize, buckets: usize) -> Envelope {
        let mut env = Envelope {
            buckets: vec![Vec::new(); buckets],
            points: vec![Vec::new(); buckets],
            dropped: 0,
        };
        for params in all_arcs(n).expect("arcs") {
            let loci: Vec<Box<dyn Fn(f64) -> Vec<Complex64>>> = if params.arc_type == ArcType::Type0 {
                let m = params.n;
                vec![Box::new(move |a: f64| {
                    (0..m)
                        .map(|k| Complex64::new(1.0 - a, 0.0) + Complex64::from_polar(a, TAU * k as f64 / m as f64))
                        .collect()
                })]
            } else {
                (0..params.delta)
                    .map(|j| {
                        let p = params;
                        Box::new(move |a: f64| roots(&g_factor(&p, a, j).expect("factor")).expect("roots").roots)
                            as Box<dyn Fn(f64) -> Vec<Complex64>>
                    })
                    .collect()
            };
            for locus in loci {
                // Each path is extrapolated linearly to tell crossing loci apart.
                let first = locus(0.0);
                let mut prev2: Option<Vec<Complex64>> = None;
                let mut prev = first.clone();
                for &z in &first {
                    env.add_point(z);
                }
                for k in 1..=alpha_steps {
                    let cur = locus(k as f64 / alpha_steps as f64);
                    let predicted: Vec<Complex64> = match &prev2 {
                        Some(pp) => prev.iter().zip(pp).map(|(a, b)| a * 2.0 - b).collect(),
                        None => prev.clone(),
                    };
                    let order = match_roots(&predicted, &cur);
                    let next: Vec<Complex64> = order.iter().map(|&i| cur[i]).collect();
                    for (&a, &b) in prev.iter().zip(&next) {
                        env.insert(a, b);
                    }
                    for &z in &next {
                        env.add_point(z);
                    }
                    prev2 = Some(std::mem::replace(&mut prev, next));
                }
            }
        }
        env
    }

    /// Envelope modulus on the ray at `theta`, or `None` when no sampled locus meets it.
    pub fn at(&self, theta: f64) -> Option<f64> {
        let u = Complex64::from_polar(1.0, theta);
        let idx = self.bucket(theta);
        let mut best: Option<f64> = None;
        let mut offer = |r: f64| best = Some(best.map_or(r, |b: f64| b.max(r)));
        for &z in &self.points[idx] {
            if wrap(arg01(z) - theta).abs() <= 1e-9 {
                offer(z.norm());
            }
        }
        for &(a, b) in &self.buckets[idx] {
            let d = wrap(arg01(b) - arg01(a));
            let x = wrap(theta - arg01(a));
            let inside = if d >= 0.0 { (-1e-12..=d + 1e-12).contains(&x) } else { (d - 1e-12..=1e-12).contains(&x) };
            if !inside {
                continue;
            }
            let (ca, cb) = (cross(a, u), cross(b, u));
            if ca == cb {
                continue;
            }
            let t = (ca / (ca - cb)).clamp(0.0, 1.0);
            let z = a + (b - a) * t;
            if z.re * u.re + z.im * u.im > 0.0 {
                offer(z.norm());
            }
        }
        best
    }
}

/// `α` in `(0, 1)` at which the root of `λ^6 - αλ - (1 - α)` leaving `e^{4πi/3}`
/// reaches argument `13π/10`, so that its square leaves the sector `[3π/5, 2π/3]`.
pub fn order_twelve_exit_alpha() -> f64 {
    let lam = |alpha: f64| {
        let mut t = Complex64::from_polar(1.0, 2.0 * TAU / 3.0);
        let steps = 200;
        for k in 1..=steps {
            let a = alpha * k as f64 / steps as f64;
            for _ in 0..60 {
                let f = t.powu(6) - t * a - (1.0 - a);
                let df = t.powu(5) * 6.0 - a;
                t -= f / df;
            }
        }
        t
    };
    let target = 13.0 * std::f64::consts::PI / 10.0;
    let gap = |alpha: f64| arg01(lam(alpha)) - target;
    let (mut lo, mut hi) = (0.0, 1.0);
    assert!(gap(lo) > 0.0 && gap(hi) < 0.0, "exit not bracketed");
    for _ in 0..60 {
        let mid = 0.5 * (lo + hi);
        if gap(mid) > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}
