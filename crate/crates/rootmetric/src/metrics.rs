//! The generalized hyperbolic density with singularity orders
//! (1 - 1/n, 1, 1) at (0, 1, infinity), its pullback to the plane punctured
//! at the n-th roots of unity, and the sharp elementary lower bound.
//!
//! The generalized density on C \ {0, 1} is
//!
//!   lambda(w) = 1 / ( |w|^{1-1/n} |1-w| *
//!       [ K2/(2 K3) |phi2(w)|^2 + (1/K3) Re( phi1(w) conj(phi2(w)) ) ] )
//!
//! (phi2 has real Taylor coefficients on (0, infinity), so phi2(conj w) =
//! conj(phi2(w)) and the published Re(phi1(w) phi2(conj w)) combination is
//! evaluated through a single phi2 call). The pullback under w = z^n gives
//! the hyperbolic density of C \ S_n:
//!
//!   lambda_{C \ S_n}(z) = n |z|^{n-1} lambda(z^n),  lambda_{C \ S_n}(0) by limit.

use num_complex::Complex64;

use crate::constants::{covering_derivative, gamma_n, k_constants, PunctureIndex};
use crate::error::{Error, Result};
use crate::specfun::{eval, eval_at_one_minus, phi_params, CutSide, HypergeometricParams};

/// A strictly positive metric density together with the equality-locus flag
/// of the sharp lower bound (points with z^n = -1).
#[derive(Copy, Clone, Debug, PartialEq)]
pub struct DensityValue {
    pub value: f64,
    pub at_equality_locus: bool,
}

/// Tolerance below which a point counts as a puncture.
const PUNCTURE_TOL: f64 = 1e-12;
/// Equality-locus tolerance in z: |z^n + 1| <= n * LOCUS_TOL, which keeps the
/// angular resolution uniform across n.
const LOCUS_TOL: f64 = 1e-9;

/// Precomputed evaluator for one puncture index. All methods are pure; the
/// struct only caches the constants so grids do not recompute them per point.
#[derive(Copy, Clone, Debug)]
pub struct Metric {
    n: PunctureIndex,
    nf: f64,
    p1: HypergeometricParams,
    p2: HypergeometricParams,
    k2_over_2k3: f64,
    inv_k3: f64,
    gamma_n: f64,
    lambda_at_zero: f64,
}

impl Metric {
    pub fn new(n: PunctureIndex) -> Result<Self> {
        let (a, c1) = phi_params(n);
        let (k2, k3) = k_constants(n)?;
        let gamma = gamma_n(n)?;
        let cov = covering_derivative(n)?;
        Ok(Self {
            n,
            nf: n.as_f64(),
            p1: HypergeometricParams { a, b: a, c: c1 },
            p2: HypergeometricParams { a, b: a, c: 1.0 },
            k2_over_2k3: k2 / (2.0 * k3),
            inv_k3: 1.0 / k3,
            gamma_n: gamma,
            lambda_at_zero: 2.0 / cov,
        })
    }

    #[inline]
    pub fn index(&self) -> PunctureIndex {
        self.n
    }

    #[inline]
    pub fn gamma_n(&self) -> f64 {
        self.gamma_n
    }

    #[inline]
    pub fn lambda_at_zero(&self) -> f64 {
        self.lambda_at_zero
    }

    /// The generalized density at w. Points of (1, infinity) are defined by
    /// the limit from above; per the evaluation policy they are computed at
    /// w + i eps and w + i eps/2 and Richardson-extrapolated.
    pub fn general(&self, w: Complex64) -> Result<DensityValue> {
        if w.norm() <= PUNCTURE_TOL {
            return Err(Error::Puncture(Complex64::new(0.0, 0.0)));
        }
        let value = self.density_core(w)? / w.norm().powf(1.0 - 1.0 / self.nf);
        Ok(DensityValue {
            value,
            at_equality_locus: (w + 1.0).norm() <= LOCUS_TOL,
        })
    }

    /// |w|^{1-1/n} lambda(w) = 1 / (|1-w| D(w)): the density stripped of its
    /// corner factor at 0, which cancels exactly against the pullback
    /// Jacobian. Handles the one-sided limit on (1, infinity).
    fn density_core(&self, w: Complex64) -> Result<f64> {
        if (w - 1.0).norm() <= PUNCTURE_TOL {
            return Err(Error::Puncture(Complex64::new(1.0, 0.0)));
        }
        if w.im == 0.0 && w.re > 1.0 {
            let eps = 1e-8 * w.re.max(1.0);
            let f1 = self.density_core_off(Complex64::new(w.re, eps))?;
            let f2 = self.density_core_off(Complex64::new(w.re, 0.5 * eps))?;
            return Ok(2.0 * f2 - f1);
        }
        self.density_core_off(w)
    }

    fn density_core_off(&self, w: Complex64) -> Result<f64> {
        let f1 = eval(&self.p1, w, CutSide::Upper)?.value;
        let f2 = eval_at_one_minus(&self.p2, w, CutSide::Lower)?.value;
        let denom = self.k2_over_2k3 * f2.norm_sqr() + self.inv_k3 * (f1 * f2.conj()).re;
        if denom <= 0.0 || denom.is_nan() {
            return Err(Error::Domain(format!(
                "non-positive metric denominator at w = {w}; evaluation failure"
            )));
        }
        Ok(1.0 / ((Complex64::new(1.0, 0.0) - w).norm() * denom))
    }

    /// Hyperbolic density of C \ S_n at z; z = 0 returns the closed-form
    /// limit 2 / |f_n'(0)|.
    ///
    /// Computed as n |w|^{1-1/n} lambda(w) at w = z^n: the pullback Jacobian
    /// n |z|^{n-1} cancels the corner factor of the generalized density
    /// exactly, so no |z| powers enter at all.
    pub fn punctured(&self, z: Complex64) -> Result<DensityValue> {
        if z.norm() == 0.0 {
            return Ok(DensityValue { value: self.lambda_at_zero, at_equality_locus: false });
        }
        if let Some(root) = self.nearest_root(z) {
            if (z - root).norm() <= PUNCTURE_TOL {
                return Err(Error::Puncture(z));
            }
        }
        let w = z.powu(self.n.get());
        let value = self.nf * self.density_core(w)?;
        Ok(DensityValue {
            value,
            at_equality_locus: (w + 1.0).norm() <= LOCUS_TOL * self.nf,
        })
    }

    /// The nearest n-th root of unity, when z is close enough to the unit
    /// circle for any root to be within reach.
    fn nearest_root(&self, z: Complex64) -> Option<Complex64> {
        if (z.norm() - 1.0).abs() > 1e-6 {
            return None;
        }
        let j = (self.nf * z.arg() / (2.0 * std::f64::consts::PI)).round();
        Some(Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * j / self.nf))
    }

    /// Sharp elementary lower bound for the punctured density:
    ///
    ///   1 / (|z| sinh(arcsinh(gamma_n) - ln |z|))   for |z| <= 1
    ///   1 / (|z| (gamma_n + ln |z|))                for |z| >  1
    ///
    /// continuous across |z| = 1 where both branches give 1/gamma_n; at the
    /// origin the limit 2/(gamma_n + sqrt(1 + gamma_n^2)).
    pub fn lower_bound(&self, z: Complex64) -> f64 {
        let r = z.norm();
        let g = self.gamma_n;
        if r <= 1.0 {
            // |z| sinh(arcsinh g - ln r) = [g (1 + r^2) + sqrt(1+g^2) (1 - r^2)] / 2,
            // a form that is stable down to r = 0 where it gives (g + sqrt(1+g^2))/2.
            let s = (1.0 + g * g).sqrt();
            2.0 / (g * (1.0 + r * r) + s * (1.0 - r * r))
        } else {
            1.0 / (r * (g + r.ln()))
        }
    }

    /// Minimize the punctured density over the unit circle on the fundamental
    /// arc [0, 2 pi / n]: a 256-point coarse scan guards the golden-section
    /// refinement. Returns (argmin angle, minimal density).
    pub fn circle_min(&self) -> Result<(f64, f64)> {
        let arc = 2.0 * std::f64::consts::PI / self.nf;
        let m = 256usize;
        let f = |theta: f64| -> Result<f64> {
            Ok(self.punctured(Complex64::from_polar(1.0, theta))?.value)
        };
        let mut best = (0usize, f64::INFINITY);
        let mut values = Vec::with_capacity(m);
        for j in 0..m {
            let theta = (j as f64 + 0.5) * arc / m as f64;
            let v = f(theta)?;
            values.push(v);
            if v < best.1 {
                best = (j, v);
            }
        }
        if best.0 == 0 || best.0 == m - 1 {
            return Err(Error::OptimizationFailure(self.n.get()));
        }
        let theta_of = |j: usize| (j as f64 + 0.5) * arc / m as f64;
        let (mut lo, mut hi) = (theta_of(best.0 - 1), theta_of(best.0 + 1));
        // Golden-section refinement to 1e-10 in angle.
        let inv_phi = 0.618_033_988_749_894_9;
        let mut x1 = hi - inv_phi * (hi - lo);
        let mut x2 = lo + inv_phi * (hi - lo);
        let mut f1 = f(x1)?;
        let mut f2 = f(x2)?;
        while hi - lo > 1e-10 {
            if f1 < f2 {
                hi = x2;
                x2 = x1;
                f2 = f1;
                x1 = hi - inv_phi * (hi - lo);
                f1 = f(x1)?;
            } else {
                lo = x1;
                x1 = x2;
                f1 = f2;
                x2 = lo + inv_phi * (hi - lo);
                f2 = f(x2)?;
            }
        }
        let theta = 0.5 * (lo + hi);
        Ok((theta, f(theta)?))
    }
}

/// The generalized density lambda_{1-1/n,1,1}(w) on C \ {0, 1}.
pub fn lambda_general(n: PunctureIndex, w: Complex64) -> Result<DensityValue> {
    Metric::new(n)?.general(w)
}

/// The hyperbolic density of C \ S_n at z.
pub fn lambda_punctured(n: PunctureIndex, z: Complex64) -> Result<DensityValue> {
    Metric::new(n)?.punctured(z)
}

/// The sharp elementary lower bound for lambda_{C \ S_n}(z).
pub fn lower_bound(n: PunctureIndex, z: Complex64) -> Result<f64> {
    Ok(Metric::new(n)?.lower_bound(z))
}

/// Minimum of the punctured density over the unit circle (argmin angle, density).
pub fn circle_min(n: PunctureIndex) -> Result<(f64, f64)> {
    Metric::new(n)?.circle_min()
}
