//! Closed-form constants attached to a puncture index n: the sharp Landau
//! constant gamma_n, the metric coefficients K2 and K3, the Schwarz radius
//! R_n and its growth factor, the covering-map derivative at the origin, and
//! their large-n asymptotics.

use num_complex::Complex64;

use crate::dd::Dd;
use crate::error::{Error, Result};
use crate::specfun::{gamma_ratio, log_gamma, series, series_dd_real};

/// The integer n >= 2 selecting the root set S_n = { e^{2 pi i j / n} }.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub struct PunctureIndex(u32);

impl PunctureIndex {
    pub fn new(n: u32) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidIndex(n));
        }
        Ok(Self(n))
    }

    #[inline]
    pub fn get(self) -> u32 {
        self.0
    }

    #[inline]
    pub(crate) fn as_f64(self) -> f64 {
        f64::from(self.0)
    }
}

impl std::fmt::Display for PunctureIndex {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.0.fmt(f)
    }
}

/// The constant bundle for one n. Recomputation is bit-identical: every field
/// is a pure function of n evaluated along a fixed code path.
#[derive(Copy, Clone, Debug, PartialEq)]
pub struct RootConstants {
    pub n: PunctureIndex,
    pub gamma_n: f64,
    pub k2: f64,
    pub k3: f64,
    pub r_n: f64,
    pub schwarz_factor: f64,
    pub covering_derivative: f64,
    pub lambda_at_zero: f64,
}

impl RootConstants {
    pub fn for_n(n: PunctureIndex) -> Result<Self> {
        let gamma = gamma_n(n)?;
        let (k2, k3) = k_constants(n)?;
        let r = r_n_from_gamma(gamma);
        let sf = schwarz_factor_from_gamma(gamma);
        let cov = covering_derivative(n)?;
        Ok(Self {
            n,
            gamma_n: gamma,
            k2,
            k3,
            r_n: r,
            schwarz_factor: sf,
            covering_derivative: cov,
            lambda_at_zero: 2.0 / cov,
        })
    }
}

/// The two hypergeometric factors of the gamma_n formula at argument 1/2:
/// F1 = 2F1(a,a,1;1/2) and Fc = 2F1(a,a,(n-1)/n;1/2) with a = (n-1)/(2n).
///
/// Above n = 50 the series are accumulated in double-double arithmetic: the
/// parameter geometry degenerates (c - a - b -> 0) and plain f64 accumulation
/// sheds digits the table reproduction at n = 1000 cannot spare.
fn gamma_n_series_factors(n: PunctureIndex) -> Result<(f64, f64)> {
    let nf = n.as_f64();
    let a = (nf - 1.0) / (2.0 * nf);
    let c1 = (nf - 1.0) / nf;
    if n.get() <= 50 {
        let f1 = series(a, a, 1.0, Complex64::new(0.5, 0.0))?.re;
        let fc = series(a, a, c1, Complex64::new(0.5, 0.0))?.re;
        Ok((f1, fc))
    } else {
        let f1 = series_dd_real(a, a, 1.0, 0.5)?;
        let fc = series_dd_real(a, a, c1, 0.5)?;
        Ok((f1.to_f64(), fc.to_f64()))
    }
}

/// The sharp constant gamma_n: reciprocal hyperbolic density of C \ S_n at
/// e^{i pi / n}, via its closed form
///
///   gamma_n = 2^{1/n} sin(pi/n) Gamma(1/n) Gamma((n-1)/2n)^2 / (n pi) * F1 * Fc
///           - 2^{1/n} pi tan(pi/2n) / n * F1^2 .
pub fn gamma_n(n: PunctureIndex) -> Result<f64> {
    let nf = n.as_f64();
    let a = (nf - 1.0) / (2.0 * nf);
    let (f1, fc) = gamma_n_series_factors(n)?;
    let two_pow = (2.0f64).powf(1.0 / nf);
    let pref1 = (std::f64::consts::PI / nf).sin() * gamma_ratio(&[1.0 / nf], &[])?
        * gamma_ratio(&[a], &[])?.powi(2)
        / (nf * std::f64::consts::PI);
    let t1 = two_pow * pref1 * f1 * fc;
    let t2 = two_pow * std::f64::consts::PI * (std::f64::consts::PI / (2.0 * nf)).tan() / nf * f1 * f1;
    Ok(t1 - t2)
}

/// K2 = -Gamma((n+1)/2n)^2 / Gamma(1/n) and K3 = Gamma((n-1)/n) / Gamma((n-1)/2n)^2.
pub fn k_constants(n: PunctureIndex) -> Result<(f64, f64)> {
    let nf = n.as_f64();
    let k2 = -gamma_ratio(&[(nf + 1.0) / (2.0 * nf); 2], &[1.0 / nf])?;
    let k3 = gamma_ratio(&[(nf - 1.0) / nf], &[(nf - 1.0) / (2.0 * nf); 2])?;
    Ok((k2, k3))
}

#[inline]
fn r_n_from_gamma(gamma: f64) -> f64 {
    1.0 + gamma - (gamma * gamma + 2.0 * gamma).sqrt()
}

#[inline]
fn schwarz_factor_from_gamma(gamma: f64) -> f64 {
    ((gamma * gamma + 2.0 * gamma).sqrt() - gamma).exp() / r_n_from_gamma(gamma)
}

/// The radius R_n = 1 + gamma_n - sqrt(gamma_n^2 + 2 gamma_n) of validity of
/// the Schwarz-type bound; strictly increasing in n with limit 1.
pub fn r_n(n: PunctureIndex) -> Result<f64> {
    Ok(r_n_from_gamma(gamma_n(n)?))
}

/// The Schwarz growth factor (1/R_n) exp(sqrt(gamma_n^2 + 2 gamma_n) - gamma_n);
/// strictly decreasing in n with limit 1.
pub fn schwarz_factor(n: PunctureIndex) -> Result<f64> {
    Ok(schwarz_factor_from_gamma(gamma_n(n)?))
}

/// Derivative modulus of the normalized universal covering map at the origin:
///
///   |f_n'(0)| = Gamma((1-1/n)/2)^2 Gamma(1/n) / (n Gamma(1-1/n) Gamma((1+1/n)/2)^2).
pub fn covering_derivative(n: PunctureIndex) -> Result<f64> {
    let nf = n.as_f64();
    let inv = 1.0 / nf;
    let v = gamma_ratio(
        &[(1.0 - inv) / 2.0, (1.0 - inv) / 2.0, inv],
        &[1.0 - inv, (1.0 + inv) / 2.0, (1.0 + inv) / 2.0],
    )?;
    Ok(v / nf)
}

/// Gamma(1/4)^4 / (4 pi^2): the sharp constant for functions omitting {0,1}
/// and the limit of n * gamma_n as n grows.
pub fn hempel_constant() -> f64 {
    let lg = log_gamma(Complex64::new(0.25, 0.0)).expect("1/4 is not a pole").re;
    (4.0 * lg).exp() / (4.0 * std::f64::consts::PI * std::f64::consts::PI)
}

/// (schwarz_factor(n) - 1) sqrt(n) - 8 Gamma(5/4)/Gamma(3/4): the deviation
/// of the Schwarz factor from its square-root asymptote. Its magnitude
/// decreases along growing n.
pub fn schwarz_factor_asymptotic_residual(n: PunctureIndex) -> Result<f64> {
    let sf = schwarz_factor(n)?;
    let limit = 8.0 * gamma_ratio(&[1.25], &[0.75])?;
    Ok((sf - 1.0) * n.as_f64().sqrt() - limit)
}

/// High-precision gamma_n used by the oracle suite: double-double series
/// factors combined with the same closed form. Shares only the prefactor
/// log-gamma with the main path; the series accumulation is independent.
pub(crate) fn gamma_n_dd(n: PunctureIndex) -> Result<Dd> {
    let nf = n.as_f64();
    let a = (nf - 1.0) / (2.0 * nf);
    let c1 = (nf - 1.0) / nf;
    let f1 = series_dd_real(a, a, 1.0, 0.5)?;
    let fc = series_dd_real(a, a, c1, 0.5)?;
    let two_pow = (2.0f64).powf(1.0 / nf);
    let pref1 = (std::f64::consts::PI / nf).sin() * gamma_ratio(&[1.0 / nf], &[])?
        * gamma_ratio(&[a], &[])?.powi(2)
        / (nf * std::f64::consts::PI);
    let pref2 = std::f64::consts::PI * (std::f64::consts::PI / (2.0 * nf)).tan() / nf;
    let t1 = f1.mul(fc).mul_f64(two_pow * pref1);
    let t2 = f1.mul(f1).mul_f64(two_pow * pref2);
    Ok(t1.sub(t2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    /// gamma_n rows printed in the source tables, 6 significant digits.
    pub(crate) const GAMMA_TABLE: [(u32, f64); 7] = [
        (2, 3.52993),
        (3, 1.79372),
        (4, 1.22801),
        (5, 0.942245),
        (10, 0.445789),
        (100, 0.0437768),
        (1000, 0.00437689),
    ];

    const RN_TABLE: [(u32, f64, f64); 7] = [
        (2, 0.111756, 21.7516),
        (3, 0.185105, 12.2035),
        (4, 0.237023, 9.0483),
        (5, 0.277218, 7.43155),
        (10, 0.401612, 4.5297),
        (100, 0.744661, 1.73354),
        (1000, 0.910713, 1.20059),
    ];

    #[test]
    fn index_validation() {
        assert!(PunctureIndex::new(0).is_err());
        assert!(PunctureIndex::new(1).is_err());
        assert!(PunctureIndex::new(2).is_ok());
    }

    #[test]
    fn gamma_table_reproduction() {
        for (n, expect) in GAMMA_TABLE {
            let g = gamma_n(PunctureIndex::new(n).unwrap()).unwrap();
            assert_relative_eq!(g, expect, max_relative = 5e-6);
        }
    }

    #[test]
    fn rn_and_factor_table_reproduction() {
        for (n, rn_expect, sf_expect) in RN_TABLE {
            let idx = PunctureIndex::new(n).unwrap();
            assert_relative_eq!(r_n(idx).unwrap(), rn_expect, max_relative = 5e-6);
            assert_relative_eq!(schwarz_factor(idx).unwrap(), sf_expect, max_relative = 5e-6);
        }
    }

    #[test]
    fn k_constants_alternate_forms() {
        for n in 2u32..=1000 {
            let idx = PunctureIndex::new(n).unwrap();
            let nf = n as f64;
            let (k2, k3) = k_constants(idx).unwrap();
            // K3 = pi / sin(pi/n) / (Gamma(1/n) Gamma((n-1)/2n)^2).
            let k3_alt = std::f64::consts::PI / (std::f64::consts::PI / nf).sin()
                / gamma_ratio(&[1.0 / nf, (nf - 1.0) / (2.0 * nf), (nf - 1.0) / (2.0 * nf)], &[]).unwrap();
            assert_relative_eq!(k3, k3_alt, max_relative = 1e-12);
            // K2/K3 = -2 pi tan(pi/2n).
            let ratio_alt = -2.0 * std::f64::consts::PI * (std::f64::consts::PI / (2.0 * nf)).tan();
            assert_relative_eq!(k2 / k3, ratio_alt, max_relative = 1e-12);
        }
    }

    #[test]
    fn k_ratio_at_two_is_minus_two_pi() {
        let (k2, k3) = k_constants(PunctureIndex::new(2).unwrap()).unwrap();
        assert_relative_eq!(k2 / k3, -2.0 * std::f64::consts::PI, max_relative = 1e-13);
    }

    #[test]
    fn k_ratio_large_n_asymptote() {
        // k2/k3 -> -pi^2/n with an O(1/n^3) gap; assert within 1/n^2 at n = 1000.
        let (k2, k3) = k_constants(PunctureIndex::new(1000).unwrap()).unwrap();
        let nf = 1000.0;
        assert!((k2 / k3 + std::f64::consts::PI.powi(2) / nf).abs() <= 1.0 / (nf * nf));
    }

    #[test]
    fn gamma_strictly_decreasing() {
        let mut prev = f64::INFINITY;
        for n in 2..=50 {
            let g = gamma_n(PunctureIndex::new(n).unwrap()).unwrap();
            assert!(g > 0.0 && g < prev, "gamma_n not strictly decreasing at n = {n}");
            prev = g;
        }
    }

    #[test]
    fn rn_increasing_factor_decreasing() {
        let mut prev_r = 0.0;
        let mut prev_sf = f64::INFINITY;
        for n in 2..=50 {
            let idx = PunctureIndex::new(n).unwrap();
            let r = r_n(idx).unwrap();
            let sf = schwarz_factor(idx).unwrap();
            assert!(r > prev_r && r < 1.0);
            assert!(sf < prev_sf && sf > 1.0);
            prev_r = r;
            prev_sf = sf;
        }
    }

    #[test]
    fn n_gamma_n_decreases_onto_hempel_limit() {
        // n gamma_n = 1 / lambda_{1-1/n,1,1}(-1) decreases to Gamma(1/4)^4/(4 pi^2)
        // because the generalized densities increase with n.
        let h = hempel_constant();
        let mut prev = f64::INFINITY;
        for n in [2u32, 10, 100, 1000] {
            let g = gamma_n(PunctureIndex::new(n).unwrap()).unwrap();
            let ng = n as f64 * g;
            assert!(ng < prev, "n gamma_n must decrease, n = {n}");
            assert!(ng > h, "n gamma_n must stay above the limit, n = {n}");
            prev = ng;
        }
        let g1000 = gamma_n(PunctureIndex::new(1000).unwrap()).unwrap();
        assert!((1000.0 * g1000 - h).abs() <= 1e-4);
    }

    #[test]
    fn hempel_equals_covering_derivative_at_two() {
        let h = hempel_constant();
        let cov = covering_derivative(PunctureIndex::new(2).unwrap()).unwrap();
        assert_relative_eq!(h, cov, max_relative = 1e-10);
        assert!(h > 0.0);
    }

    #[test]
    fn covering_derivative_asymptote() {
        // (cov - 1) n -> 4 ln 2, monotone deviation over the tested decades.
        let target = 4.0 * std::f64::consts::LN_2;
        let mut prev_dev = f64::INFINITY;
        for n in [100u32, 1000, 10000] {
            let cov = covering_derivative(PunctureIndex::new(n).unwrap()).unwrap();
            let dev = ((cov - 1.0) * n as f64 - target).abs();
            assert!(dev < prev_dev, "deviation must shrink at n = {n}");
            prev_dev = dev;
        }
        assert!(prev_dev <= 0.1 * target);
    }

    #[test]
    fn schwarz_residual_decreases() {
        let mut prev = f64::INFINITY;
        for n in [100u32, 1000, 10_000, 100_000] {
            let r = schwarz_factor_asymptotic_residual(PunctureIndex::new(n).unwrap()).unwrap();
            assert!(r.abs() < prev, "residual magnitude must decrease at n = {n}");
            prev = r.abs();
        }
    }

    #[test]
    fn schwarz_residual_scale_at_1000() {
        // Order 1/sqrt(n): approximately 0.43 at n = 1000.
        let r = schwarz_factor_asymptotic_residual(PunctureIndex::new(1000).unwrap()).unwrap();
        assert!(r > 0.3 && r < 0.6, "residual {r} out of the expected band");
    }

    #[test]
    fn bundle_consistency_and_determinism() {
        let idx = PunctureIndex::new(7).unwrap();
        let a = RootConstants::for_n(idx).unwrap();
        let b = RootConstants::for_n(idx).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.lambda_at_zero, 2.0 / a.covering_derivative);
        assert_relative_eq!(
            a.r_n,
            1.0 + a.gamma_n - (a.gamma_n * a.gamma_n + 2.0 * a.gamma_n).sqrt(),
            max_relative = 1e-15
        );
        assert!(a.covering_derivative > 1.0);
        assert!(a.schwarz_factor > 1.0);
        assert!(a.k2 < 0.0 && a.k3 > 0.0);
    }

    #[test]
    fn dd_gamma_matches_f64_gamma() {
        for n in [2u32, 17, 256] {
            let idx = PunctureIndex::new(n).unwrap();
            let g = gamma_n(idx).unwrap();
            let gdd = gamma_n_dd(idx).unwrap().to_f64();
            assert_relative_eq!(g, gdd, max_relative = 1e-13);
        }
    }
}
