//! Farey fractions of order `n` and the pairs of consecutive fractions that
//! delimit the arcs of the region boundary.
//!
//! Angles are measured in radians as `2π·p/q`. The sequence carries `1/1` as
//! its last element so that the circle can be traversed without a special
//! case; for angle lookups `1/1` is the same point as `0/1`.

use std::cmp::Ordering;
use std::f64::consts::TAU;
use std::fmt;

use crate::error::{Error, Result};

/// Snapping tolerance (radians) for recognising a Farey angle.
pub const DEFAULT_ANGLE_TOL: f64 = 1e-12;

/// A reduced fraction `p/q` with `0 <= p <= q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Fraction {
    p: u64,
    q: u64,
}

impl Fraction {
    /// Builds `p/q` in lowest terms. Returns `None` for `q == 0` or `p > q`.
    pub fn new(p: u64, q: u64) -> Option<Self> {
        if q == 0 || p > q {
            return None;
        }
        let g = gcd(p, q);
        Some(Self { p: p / g, q: q / g })
    }

    pub const ZERO: Fraction = Fraction { p: 0, q: 1 };
    pub const ONE: Fraction = Fraction { p: 1, q: 1 };

    pub fn numer(&self) -> u64 {
        self.p
    }

    pub fn denom(&self) -> u64 {
        self.q
    }

    /// Value as a fraction of a full turn.
    pub fn turns(&self) -> f64 {
        self.p as f64 / self.q as f64
    }

    /// `2π·p/q`, in `[0, 2π]`.
    pub fn angle(&self) -> f64 {
        TAU * self.turns()
    }

    /// `1/1` and `0/1` name the same point on the circle.
    pub fn is_full_turn(&self) -> bool {
        self.p == self.q
    }

    /// Reflection across the real axis: `p/q -> (q-p)/q`, with `0/1` fixed.
    pub fn conjugate(&self) -> Self {
        if self.p == 0 || self.p == self.q {
            Fraction::ZERO
        } else {
            Fraction {
                p: self.q - self.p,
                q: self.q,
            }
        }
    }
}

impl PartialOrd for Fraction {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Fraction {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.p as u128 * other.q as u128).cmp(&(other.p as u128 * self.q as u128))
    }
}

impl fmt::Display for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.p, self.q)
    }
}

/// Two consecutive Farey fractions of order `n`, `left < right`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FareyPair {
    left: Fraction,
    right: Fraction,
    order: u64,
}

impl FareyPair {
    pub fn new(left: Fraction, right: Fraction, order: u64) -> Result<Self> {
        if left < right && is_farey_pair(left, right, order) {
            Ok(Self { left, right, order })
        } else {
            Err(Error::NotAFareyPair {
                left: left.to_string(),
                right: right.to_string(),
                n: order,
            })
        }
    }

    pub fn left(&self) -> Fraction {
        self.left
    }

    pub fn right(&self) -> Fraction {
        self.right
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    /// Open angular sector `(2π·left, 2π·right)`.
    pub fn sector(&self) -> (f64, f64) {
        (self.left.angle(), self.right.angle())
    }

    pub fn contains_angle(&self, theta: f64) -> bool {
        let (a, b) = self.sector();
        a < theta && theta < b
    }
}

impl fmt::Display for FareyPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.left, self.right)
    }
}

/// Result of locating an angle among the Farey angles of order `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Bracket {
    /// The angle is (within tolerance) `2π·p/q` for a Farey fraction.
    Exact(Fraction),
    /// The angle lies strictly inside the sector of this pair.
    Pair(FareyPair),
}

impl Bracket {
    pub fn conjugate(&self) -> Bracket {
        match self {
            Bracket::Exact(f) => Bracket::Exact(f.conjugate()),
            Bracket::Pair(p) => Bracket::Pair(conjugate_pair(p)),
        }
    }
}

pub(crate) fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// All reduced `p/q` with `0 <= p < q <= n` in increasing order, followed by `1/1`.
pub fn farey_sequence(n: u64) -> Vec<Fraction> {
    assert!(n >= 1, "Farey order must be positive");
    // Next-term recurrence: from neighbours a/b < c/d the successor is
    // (k·c - a)/(k·d - b) with k = ⌊(n + b)/d⌋.
    let (mut a, mut b, mut c, mut d) = (0u64, 1u64, 1u64, n);
    let mut out = vec![Fraction { p: a, q: b }];
    loop {
        out.push(Fraction { p: c, q: d });
        if c == d {
            break;
        }
        let k = (n + b) / d;
        (a, b, c, d) = (c, d, k * c - a, k * d - b);
    }
    out
}

/// `a = p/q`, `b = r/s` are consecutive in the Farey sequence of order `n`
/// iff `q + s > n` and `qr - ps = 1`.
pub fn is_farey_pair(a: Fraction, b: Fraction, n: u64) -> bool {
    let (p, q) = (a.p as i128, a.q as i128);
    let (r, s) = (b.p as i128, b.q as i128);
    q + s > n as i128 && q * r - p * s == 1
}

/// Reflection of a pair across the real axis: `(p/q, r/s) -> ((s-r)/s, (q-p)/q)`.
pub fn conjugate_pair(pair: &FareyPair) -> FareyPair {
    let (p, q) = (pair.left.p, pair.left.q);
    let (r, s) = (pair.right.p, pair.right.q);
    FareyPair {
        left: Fraction { p: s - r, q: s },
        right: Fraction { p: q - p, q },
        order: pair.order,
    }
}

/// Reduces an angle to `[0, 2π)`.
pub fn reduce_angle(theta: f64) -> f64 {
    let t = theta.rem_euclid(TAU);
    // rem_euclid can round up to exactly TAU for tiny negative inputs.
    if t >= TAU {
        0.0
    } else {
        t
    }
}

/// Locates `theta` among the Farey angles of order `n`.
pub fn bracketing_pair(n: u64, theta: f64) -> Bracket {
    bracketing_pair_with(n, theta, DEFAULT_ANGLE_TOL)
}

pub fn bracketing_pair_with(n: u64, theta: f64, angle_tol: f64) -> Bracket {
    let seq = farey_sequence(n);
    bracket_in(&seq, n, theta, angle_tol)
}

/// Lookup against a precomputed `farey_sequence(n)`.
///
/// Full enumeration plus binary search is adequate up to `n ~ 1e4`; beyond
/// that a Stern–Brocot descent towards `theta/2π` would avoid materialising
/// the sequence.
pub(crate) fn bracket_in(seq: &[Fraction], n: u64, theta: f64, angle_tol: f64) -> Bracket {
    let theta = reduce_angle(theta);
    let x = theta / TAU;
    // First index whose value exceeds x; seq[0] = 0 <= x so idx >= 1.
    let idx = seq.partition_point(|f| f.turns() <= x).clamp(1, seq.len() - 1);
    let left = seq[idx - 1];
    let right = seq[idx];
    if (theta - left.angle()).abs() <= angle_tol {
        return Bracket::Exact(left);
    }
    if (right.angle() - theta).abs() <= angle_tol {
        return Bracket::Exact(if right.is_full_turn() {
            Fraction::ZERO
        } else {
            right
        });
    }
    Bracket::Pair(FareyPair {
        left,
        right,
        order: n,
    })
}

/// All consecutive pairs of `farey_sequence(n)`, in circular order.
pub fn farey_pairs(n: u64) -> Vec<FareyPair> {
    farey_sequence(n)
        .windows(2)
        .map(|w| FareyPair {
            left: w[0],
            right: w[1],
            order: n,
        })
        .collect()
}
