//! Special-function layer: complex log-gamma, the Gauss hypergeometric
//! function with analytic continuation, and the two particular solutions
//! phi1, phi2 entering the metric formula.
//!
//! For the puncture index n the parameters are a = b = (n-1)/(2n) with
//! c = (n-1)/n for phi1 and c = 1 for phi2:
//!
//!   phi1(z) = 2F1((n-1)/2n, (n-1)/2n, (n-1)/n; z)    analytic on C \ [1, inf)
//!   phi2(z) = 2F1((n-1)/2n, (n-1)/2n, 1; 1-z)        analytic on C \ (-inf, 0]
//!
//! Everything here is a pure function of its arguments and safe to call
//! concurrently.

mod hyp2f1;
mod loggamma;

pub use hyp2f1::{hyp2f1, BranchedValue, HypergeometricParams};
pub use loggamma::{log_gamma, reflection_check};

pub(crate) use hyp2f1::{eval, eval_at_one_minus, series, series_dd_real, CutSide};
pub(crate) use loggamma::gamma_ratio;

use num_complex::Complex64;

use crate::constants::PunctureIndex;
use crate::error::Result;

/// Digamma B_{2k}/(2k) tail coefficients.
const DIGAMMA_COEF: [f64; 8] = [
    1.0 / 12.0,
    -1.0 / 120.0,
    1.0 / 252.0,
    -1.0 / 240.0,
    1.0 / 132.0,
    -691.0 / 32760.0,
    1.0 / 12.0,
    -3617.0 / 8160.0,
];

/// Digamma for real x > 0 via upward shift and the asymptotic series.
pub(crate) fn digamma(x: f64) -> f64 {
    debug_assert!(x > 0.0, "digamma shift path requires x > 0");
    let mut acc = 0.0;
    let mut w = x;
    while w < 12.0 {
        acc -= 1.0 / w;
        w += 1.0;
    }
    let iw2 = 1.0 / (w * w);
    let mut s = w.ln() - 0.5 / w;
    let mut p = iw2;
    for c in DIGAMMA_COEF {
        s -= c * p;
        p *= iw2;
    }
    s + acc
}

/// The hypergeometric parameters (a, a, c1) attached to a puncture index.
pub(crate) fn phi_params(n: PunctureIndex) -> (f64, f64) {
    let nf = f64::from(n.get());
    ((nf - 1.0) / (2.0 * nf), (nf - 1.0) / nf)
}

/// phi1: solution with the cut along [1, +inf); on-cut requests return the
/// limit from the upper half-plane.
pub fn phi1(n: PunctureIndex, z: Complex64) -> Result<BranchedValue> {
    let (a, c1) = phi_params(n);
    let p = HypergeometricParams { a, b: a, c: c1 };
    eval(&p, z, CutSide::Upper)
}

/// phi2: solution with the cut along (-infty, 0]; on-cut requests return the
/// limit from the upper half-plane in z, which is the lower side of the
/// transformed argument 1 - z. The caller's z is forwarded exactly so that
/// the branch factor (1-(1-z))^{1/n} = z^{1/n} keeps full precision.
pub fn phi2(n: PunctureIndex, z: Complex64) -> Result<BranchedValue> {
    let (a, _) = phi_params(n);
    let p = HypergeometricParams { a, b: a, c: 1.0 };
    eval_at_one_minus(&p, z, CutSide::Lower)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn digamma_known_values() {
        // psi(1) = -gamma, psi(2) = 1 - gamma, psi(1/2) = -gamma - 2 ln 2.
        let g = 0.577_215_664_901_532_9;
        assert_relative_eq!(digamma(1.0), -g, max_relative = 1e-14);
        assert_relative_eq!(digamma(2.0), 1.0 - g, max_relative = 1e-14);
        assert_relative_eq!(
            digamma(0.5),
            -g - 2.0 * std::f64::consts::LN_2,
            max_relative = 1e-14
        );
    }

    #[test]
    fn phi_values_at_their_regular_fixed_points() {
        let n = PunctureIndex::new(3).unwrap();
        let v1 = phi1(n, Complex64::new(0.0, 0.0)).unwrap();
        assert_eq!(v1.value, Complex64::new(1.0, 0.0));
        assert!(!v1.on_cut);
        let v2 = phi2(n, Complex64::new(1.0, 0.0)).unwrap();
        assert_eq!(v2.value, Complex64::new(1.0, 0.0));
        assert!(!v2.on_cut);
    }

    #[test]
    fn phi_cut_flags() {
        let n = PunctureIndex::new(2).unwrap();
        assert!(phi1(n, Complex64::new(2.5, 0.0)).unwrap().on_cut);
        assert!(!phi1(n, Complex64::new(-2.5, 0.0)).unwrap().on_cut);
        assert!(phi2(n, Complex64::new(-1.0, 0.0)).unwrap().on_cut);
        assert!(!phi2(n, Complex64::new(4.0, 0.0)).unwrap().on_cut);
    }

    #[test]
    fn phi2_reflection_symmetry() {
        // phi2 is real on (0, inf), so conjugate arguments give conjugate values.
        let n = PunctureIndex::new(5).unwrap();
        let z = Complex64::new(-0.7, 1.3);
        let a = phi2(n, z).unwrap().value;
        let b = phi2(n, z.conj()).unwrap().value;
        assert_relative_eq!(a.re, b.re, max_relative = 1e-13);
        assert_relative_eq!(a.im, -b.im, max_relative = 1e-13);
    }
}
