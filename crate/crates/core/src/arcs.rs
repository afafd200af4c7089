//! Integer data attached to a boundary arc and the polynomials whose roots
//! trace it.
//!
//! For a Farey pair of order `n` write `p/q` for the endpoint with the smaller
//! denominator and `r/s` for the other one. With `d = ⌊n/q⌋`, `δ = gcd(d, s)`:
//!
//! ```text
//! s = s1·δ,  d = d1·δ,  r = r1·δ + j0   (0 <= j0 < δ)
//! r1 = d1·r̂ - l0·s1                      (0 <= r̂ < s1, 0 <= l0 < d1)
//! ```
//!
//! The arc polynomial `(t^q - β)^d - α^d t^{qd-s}` (`β = 1 - α`) splits into
//! `δ` factors `g_j`, and the roots of `g_j` are the `d1`-th powers of the roots
//! of the trinomial `ĝ_j = t^{q·d1} - β - α t^{q·d1-s1} e^{2πij/(δ·d1)}`.

use std::fmt;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::farey::{farey_pairs, gcd, FareyPair, Fraction};
use crate::poly::{root_of_unity, roots, Poly, RootSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ArcType {
    /// `q = 1`: the chord from `1` to `e^{2πi/n}` (or its conjugate).
    Type0,
    /// `d = 1`: `t^s - β t^{s-q} - α`.
    TypeI,
    /// `d > 1`, `qd > s`: `(t^q - β)^d - α^d t^{qd-s}`.
    TypeII,
    /// `d > 1`, `qd < s`: `t^{s-qd} (t^q - β)^d - α^d`.
    TypeIII,
}

impl ArcType {
    pub fn name(&self) -> &'static str {
        match self {
            ArcType::Type0 => "Type0",
            ArcType::TypeI => "TypeI",
            ArcType::TypeII => "TypeII",
            ArcType::TypeIII => "TypeIII",
        }
    }

    pub fn parse(s: &str) -> Option<ArcType> {
        match s {
            "Type0" => Some(ArcType::Type0),
            "TypeI" => Some(ArcType::TypeI),
            "TypeII" => Some(ArcType::TypeII),
            "TypeIII" => Some(ArcType::TypeIII),
            _ => None,
        }
    }
}

impl fmt::Display for ArcType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Parameter block of one arc.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ArcParams {
    pub pair: FareyPair,
    pub n: u64,
    pub p: u64,
    pub q: u64,
    pub r: u64,
    pub s: u64,
    pub d: u64,
    pub delta: u64,
    pub d1: u64,
    pub s1: u64,
    pub r1: u64,
    pub j0: u64,
    pub rhat: u64,
    pub l0: u64,
    /// `n - d·q`.
    pub y: u64,
    pub arc_type: ArcType,
}

impl ArcParams {
    /// True when `p/q` is the left endpoint of the sector.
    pub fn is_canonical(&self) -> bool {
        self.pair.left().denom() == self.q && self.pair.left().numer() == self.p
    }

    /// Endpoint with the smaller denominator.
    pub fn q_endpoint(&self) -> Fraction {
        if self.is_canonical() {
            self.pair.left()
        } else {
            self.pair.right()
        }
    }

    /// Endpoint with the larger denominator.
    pub fn s_endpoint(&self) -> Fraction {
        if self.is_canonical() {
            self.pair.right()
        } else {
            self.pair.left()
        }
    }

    /// `q·d1`, the degree of `ĝ` when `q·d1 >= s1`.
    pub fn qd1(&self) -> u64 {
        self.q * self.d1
    }
}

/// Computes the parameter block of a Farey pair of order `n >= 2`. Order 1
/// has the single pair `(0/1, 1/1)`, for which `r̂ < s1 = 1` has no solution.
pub fn arc_params(pair: &FareyPair) -> Result<ArcParams> {
    let n = pair.order();
    if n < 2 {
        return Err(Error::OrderTooSmall { n, min: 2 });
    }
    let (a, b) = (pair.left(), pair.right());
    let (pq, rs) = if a.denom() <= b.denom() { (a, b) } else { (b, a) };
    let (p, q) = (pq.numer(), pq.denom());
    let (r, s) = (rs.numer(), rs.denom());

    let d = n / q;
    let delta = gcd(d, s);
    let d1 = d / delta;
    let s1 = s / delta;
    let r1 = r / delta;
    let j0 = r % delta;
    // gcd(d1, s1) = 1, so exactly one l0 in 0..d1 makes r1 + l0·s1 divisible by d1.
    let (rhat, l0) = (0..d1)
        .find_map(|l0| {
            let num = r1 + l0 * s1;
            (num.is_multiple_of(d1) && num / d1 < s1).then_some((num / d1, l0))
        })
        .ok_or_else(|| Error::NotAFareyPair {
            left: a.to_string(),
            right: b.to_string(),
            n,
        })?;

    let arc_type = if q == 1 {
        ArcType::Type0
    } else if d == 1 {
        ArcType::TypeI
    } else if q * d > s {
        ArcType::TypeII
    } else {
        ArcType::TypeIII
    };

    Ok(ArcParams {
        pair: *pair,
        n,
        p,
        q,
        r,
        s,
        d,
        delta,
        d1,
        s1,
        r1,
        j0,
        rhat,
        l0,
        y: n - d * q,
        arc_type,
    })
}

/// Parameters of every arc of order `n`, in circular order.
pub fn all_arcs(n: u64) -> Result<Vec<ArcParams>> {
    farey_pairs(n).iter().map(arc_params).collect()
}

fn binomial(n: u64, k: u64) -> u128 {
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

/// `(t^q - c)^d` with integer binomial coefficients.
fn shifted_power(q: u64, c: f64, d: u64) -> Poly {
    let mut coeffs = vec![Complex64::new(0.0, 0.0); (q * d) as usize + 1];
    for k in 0..=d {
        let sign_pow = (-c).powi((d - k) as i32);
        coeffs[(q * k) as usize] = Complex64::new(binomial(d, k) as f64 * sign_pow, 0.0);
    }
    Poly::new(coeffs)
}

fn check_alpha(alpha: f64) -> Result<()> {
    if (0.0..=1.0).contains(&alpha) {
        Ok(())
    } else {
        Err(Error::AlphaOutOfRange(alpha))
    }
}

fn real(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

/// Reduced Ito polynomial `f_α` of the arc.
pub fn reduced_ito_poly(params: &ArcParams, alpha: f64) -> Result<Poly> {
    check_alpha(alpha)?;
    let beta = 1.0 - alpha;
    let ArcParams { n, q, s, d, .. } = *params;
    let ad = alpha.powi(d as i32);
    let poly = match params.arc_type {
        ArcType::Type0 => shifted_power(1, beta, n).sub(&Poly::from_real(&[alpha.powi(n as i32)])),
        ArcType::TypeI => Poly::monomial(real(1.0), s as usize)
            .sub(&Poly::monomial(real(beta), (s - q) as usize))
            .sub(&Poly::from_real(&[alpha])),
        ArcType::TypeII => {
            shifted_power(q, beta, d).sub(&Poly::monomial(real(ad), (q * d - s) as usize))
        }
        ArcType::TypeIII => shifted_power(q, beta, d)
            .shift((s - q * d) as usize)
            .sub(&Poly::from_real(&[ad])),
    };
    Ok(poly)
}

/// Numerator of the Ito rational function `(t^q - β)^d - α^d t^{qd-s}`, scaled
/// by `t^{max(0, s-qd)}` so that it is a polynomial with the same nonzero roots.
pub fn ito_numerator(params: &ArcParams, alpha: f64) -> Result<Poly> {
    check_alpha(alpha)?;
    let (q, s, d) = (params.q, params.s, params.d);
    binomial_difference(q, d, s, alpha, real(1.0))
}

/// `(t^q - β)^e - α^e·phase·t^{qe - m}`, multiplied through by `t^{max(0, m - qe)}`.
fn binomial_difference(q: u64, e: u64, m: u64, alpha: f64, phase: Complex64) -> Result<Poly> {
    let beta = 1.0 - alpha;
    let qe = q * e;
    let lift = m.saturating_sub(qe) as usize;
    let low = qe.saturating_sub(m) as usize;
    Ok(shifted_power(q, beta, e)
        .shift(lift)
        .sub(&Poly::monomial(phase * alpha.powi(e as i32), low)))
}

fn check_factor(params: &ArcParams, alpha: f64, j: u64) -> Result<()> {
    check_alpha(alpha)?;
    if params.q < 2 {
        return Err(Error::WrongArcType {
            expected: "q >= 2",
            actual: params.arc_type.name(),
        });
    }
    if j >= params.delta {
        return Err(Error::FactorIndexOutOfRange {
            j,
            delta: params.delta,
        });
    }
    Ok(())
}

/// Factor `g_j = (t^q - β)^{d1} - α^{d1} t^{q·d1 - s1} e^{2πij/δ}` (polynomial form).
pub fn g_factor(params: &ArcParams, alpha: f64, j: u64) -> Result<Poly> {
    check_factor(params, alpha, j)?;
    let phase = root_of_unity(j as i64, params.delta);
    binomial_difference(params.q, params.d1, params.s1, alpha, phase)
}

/// Trinomial `ĝ_j = t^{q·d1} - β - α t^{q·d1 - s1} e^{2πij/(δ·d1)}` (polynomial form).
pub fn g_hat(params: &ArcParams, alpha: f64, j: u64) -> Result<Poly> {
    check_factor(params, alpha, j)?;
    let beta = 1.0 - alpha;
    let qd1 = params.qd1();
    let s1 = params.s1;
    let lift = s1.saturating_sub(qd1) as usize;
    let low = qd1.saturating_sub(s1) as usize;
    let phase = root_of_unity(j as i64, params.delta * params.d1);
    Ok(Poly::monomial(real(1.0), qd1 as usize)
        .sub(&Poly::from_real(&[beta]))
        .shift(lift)
        .sub(&Poly::monomial(phase * alpha, low)))
}

/// All roots of `f_α`, each computed from a well-conditioned piece: the closed
/// form `1 - α + α e^{2πik/n}` for Type 0 arcs, otherwise the `d1`-th powers
/// of the roots of the trinomials `ĝ_j`, `j = 0..δ`.
pub fn ito_roots(params: &ArcParams, alpha: f64) -> Result<RootSet> {
    let f = reduced_ito_poly(params, alpha)?;
    let all = match params.arc_type {
        ArcType::Type0 => (0..params.n)
            .map(|k| real(1.0 - alpha) + root_of_unity(k as i64, params.n) * alpha)
            .collect(),
        _ => {
            let mut all = Vec::with_capacity(f.degree());
            for j in 0..params.delta {
                let hat = roots(&g_hat(params, alpha, j)?)?;
                all.extend(hat.roots.iter().map(|z| z.powu(params.d1 as u32)));
            }
            all
        }
    };
    Ok(RootSet::new(all, &f))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::farey::is_farey_pair;

    fn pair(a: (u64, u64), b: (u64, u64), n: u64) -> FareyPair {
        FareyPair::new(
            Fraction::new(a.0, a.1).unwrap(),
            Fraction::new(b.0, b.1).unwrap(),
            n,
        )
        .unwrap()
    }

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn params_pair_3_10_1_3() {
        let a = arc_params(&pair((3, 10), (1, 3), 12)).unwrap();
        assert_eq!((a.p, a.q, a.r, a.s), (1, 3, 3, 10));
        assert_eq!((a.d, a.delta, a.d1, a.s1), (4, 2, 2, 5));
        assert_eq!((a.r1, a.j0, a.l0, a.rhat), (1, 1, 1, 3));
        assert_eq!(a.arc_type, ArcType::TypeII);
        assert_eq!(a.y, 0);
        assert!(!a.is_canonical());
    }

    #[test]
    fn params_pair_1_4_1_3() {
        let a = arc_params(&pair((1, 4), (1, 3), 5)).unwrap();
        assert_eq!((a.q, a.s, a.d, a.delta, a.d1, a.s1), (3, 4, 1, 1, 1, 4));
        assert_eq!((a.j0, a.l0), (0, 0));
        assert_eq!(a.arc_type, ArcType::TypeI);

        let a = arc_params(&pair((1, 4), (1, 3), 6)).unwrap();
        assert_eq!((a.d, a.delta, a.d1, a.s1, a.j0, a.l0), (2, 2, 1, 2, 1, 0));
        assert_eq!(a.arc_type, ArcType::TypeII);
    }

    #[test]
    fn half_pairs_switch_type_with_parity() {
        for m in 2..12u64 {
            let p = pair((1, 2), (m, 2 * m - 1), 2 * m);
            assert_eq!(arc_params(&p).unwrap().arc_type, ArcType::TypeII, "m={m}");
            let p = pair((1, 2), (m, 2 * m - 1), 2 * m - 1);
            let want = if m == 2 { ArcType::TypeI } else { ArcType::TypeIII };
            assert_eq!(arc_params(&p).unwrap().arc_type, want, "m={m}");
        }
    }

    #[test]
    fn definitional_identities_hold_for_all_arcs() {
        for n in 2..=40 {
            for a in all_arcs(n).unwrap() {
                assert_eq!(a.s, a.s1 * a.delta);
                assert_eq!(a.d, a.d1 * a.delta);
                assert_eq!(a.r, a.r1 * a.delta + a.j0);
                assert!(a.j0 < a.delta);
                assert!(a.rhat < a.s1 && a.l0 < a.d1);
                assert_eq!(a.r1 as i64, (a.d1 * a.rhat) as i64 - (a.l0 * a.s1) as i64);
                assert!(a.q <= a.s);
                assert_eq!(a.n, a.d * a.q + a.y);
                assert!(a.y < a.q);
                assert!(is_farey_pair(a.pair.left(), a.pair.right(), n));
            }
        }
    }

    #[test]
    fn type_i_at_alpha_one() {
        let a = arc_params(&pair((1, 4), (1, 3), 5)).unwrap();
        let f = reduced_ito_poly(&a, 1.0).unwrap();
        assert_eq!(f, Poly::from_real(&[-1.0, 0.0, 0.0, 0.0, 1.0]));
    }

    #[test]
    fn type_ii_example_expansion() {
        let a = arc_params(&pair((3, 10), (1, 3), 12)).unwrap();
        let alpha: f64 = 0.3;
        let beta = 1.0 - alpha;
        let f = reduced_ito_poly(&a, alpha).unwrap();
        // (t^3 - β)^4 - α^4 t^2
        let cube = Poly::from_real(&[-beta, 0.0, 0.0, 1.0]);
        let want = cube
            .mul(&cube)
            .mul(&cube)
            .mul(&cube)
            .sub(&Poly::monomial(c(alpha.powi(4), 0.0), 2));
        assert!(f.relative_distance(&want) < 1e-15);
    }

    #[test]
    fn q2_even_order() {
        for m in 2..8u64 {
            let a = arc_params(&pair((1, 2), (m, 2 * m - 1), 2 * m)).unwrap();
            let alpha: f64 = 0.45;
            let sq = Poly::from_real(&[-(1.0 - alpha), 0.0, 1.0]);
            let mut want = Poly::from_real(&[1.0]);
            for _ in 0..m {
                want = want.mul(&sq);
            }
            let want = want.sub(&Poly::monomial(c(alpha.powi(m as i32), 0.0), 1));
            let f = reduced_ito_poly(&a, alpha).unwrap();
            assert!(f.relative_distance(&want) < 1e-14, "m={m}");
        }
    }

    #[test]
    fn alpha_out_of_range() {
        let a = arc_params(&pair((1, 4), (1, 3), 5)).unwrap();
        assert_eq!(
            reduced_ito_poly(&a, 1.5).unwrap_err(),
            Error::AlphaOutOfRange(1.5)
        );
        assert!(g_factor(&a, -0.1, 0).is_err());
    }

    #[test]
    fn g_factor_examples() {
        let a = arc_params(&pair((3, 10), (1, 3), 12)).unwrap();
        let alpha: f64 = 0.6;
        let beta = 1.0 - alpha;
        let g1 = g_factor(&a, alpha, 1).unwrap();
        let cube = Poly::from_real(&[-beta, 0.0, 0.0, 1.0]);
        let want = cube.mul(&cube).add(&Poly::monomial(c(alpha * alpha, 0.0), 1));
        assert!(g1.relative_distance(&want) < 1e-15);
        assert_eq!(
            g_factor(&a, alpha, 2).unwrap_err(),
            Error::FactorIndexOutOfRange { j: 2, delta: 2 }
        );

        // δ = 1: g_0 is the whole numerator.
        let b = arc_params(&pair((1, 4), (1, 3), 5)).unwrap();
        assert_eq!(
            g_factor(&b, alpha, 0).unwrap(),
            ito_numerator(&b, alpha).unwrap()
        );
    }

    #[test]
    fn g_hat_examples_exact() {
        let a = arc_params(&pair((3, 10), (1, 3), 12)).unwrap();
        let alpha = 0.37;
        let beta = 1.0 - alpha;
        let zero = c(0.0, 0.0);
        let one = c(1.0, 0.0);
        // λ^6 - iαλ - β
        let want1 = Poly::new(vec![c(-beta, 0.0), c(0.0, -alpha), zero, zero, zero, zero, one]);
        assert_eq!(g_hat(&a, alpha, 1).unwrap(), want1);
        // λ^6 - αλ - β
        let want0 = Poly::new(vec![c(-beta, 0.0), c(-alpha, 0.0), zero, zero, zero, zero, one]);
        assert_eq!(g_hat(&a, alpha, 0).unwrap(), want0);
    }

    #[test]
    fn g_hat_unimodular_at_alpha_one() {
        for n in 3..=10 {
            for a in all_arcs(n).unwrap().iter().filter(|a| a.q >= 2) {
                for j in 0..a.delta {
                    let rs = roots(&g_hat(a, 1.0, j).unwrap()).unwrap();
                    for z in rs.roots.iter().filter(|z| z.norm() > 1e-6) {
                        assert!((z.norm() - 1.0).abs() < 1e-12, "n={n} {} {z}", a.pair);
                    }
                }
            }
        }
    }

    #[test]
    fn factor_product_is_numerator() {
        for n in 3..=14 {
            for a in all_arcs(n).unwrap().iter().filter(|a| a.q >= 2) {
                for &alpha in &[0.0, 0.21, 0.5, 0.93, 1.0] {
                    let prod = (0..a.delta).fold(Poly::from_real(&[1.0]), |acc, j| {
                        acc.mul(&g_factor(a, alpha, j).unwrap())
                    });
                    let phi = ito_numerator(a, alpha).unwrap();
                    assert!(
                        phi.relative_distance(&prod) < 1e-10,
                        "n={n} {} α={alpha}",
                        a.pair
                    );
                }
            }
        }
    }

    #[test]
    fn numerator_matches_reduced_poly() {
        for n in 2..=14 {
            for a in all_arcs(n).unwrap() {
                let f = reduced_ito_poly(&a, 0.4).unwrap();
                let phi = ito_numerator(&a, 0.4).unwrap();
                assert!(f.relative_distance(&phi) < 1e-14, "n={n} {}", a.pair);
            }
        }
    }

    #[test]
    fn one_is_always_a_root() {
        for n in 2..=12 {
            for a in all_arcs(n).unwrap() {
                for &alpha in &[0.0, 0.3, 1.0] {
                    let f = ito_numerator(&a, alpha).unwrap();
                    assert!(f.eval(c(1.0, 0.0)).norm() < 1e-13, "n={n} {} α={alpha}", a.pair);
                }
            }
        }
    }

    #[test]
    fn type0_roots_closed_form() {
        let a = arc_params(&pair((0, 1), (1, 6), 6)).unwrap();
        assert_eq!(a.arc_type, ArcType::Type0);
        let alpha = 0.35;
        let rs = ito_roots(&a, alpha).unwrap();
        assert_eq!(rs.len(), 6);
        assert!(rs.residual < 1e-14);
        // Independent check on the expanded polynomial.
        let dk = roots(&reduced_ito_poly(&a, alpha).unwrap()).unwrap();
        for z in &rs.roots {
            assert!((dk.nearest(*z).unwrap() - z).norm() < 1e-9);
        }
    }

    #[test]
    fn factor_roots_agree_with_expanded_roots() {
        for n in 3..=9 {
            for a in all_arcs(n).unwrap().iter().filter(|a| a.q >= 2) {
                for &alpha in &[0.25, 0.5, 0.75] {
                    let fast = ito_roots(a, alpha).unwrap();
                    let f = reduced_ito_poly(a, alpha).unwrap();
                    assert_eq!(fast.len(), f.degree(), "n={n} {}", a.pair);
                    assert!(fast.residual < 1e-12, "n={n} {} {}", a.pair, fast.residual);
                    let dk = roots(&f).unwrap();
                    for z in &fast.roots {
                        let e = (dk.nearest(*z).unwrap() - z).norm();
                        assert!(e < 1e-7, "n={n} {} α={alpha} {z} {e}", a.pair);
                    }
                }
            }
        }
    }
}
