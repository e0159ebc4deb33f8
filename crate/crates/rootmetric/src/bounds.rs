//! Sharp Landau-, Schottky- and Schwarz-type bounds for analytic functions
//! on the unit disk omitting the n-th roots of unity, and the comparison of
//! the n = 2 Landau bound against the classical bound transported from the
//! {0,1}-omitting setting.

use num_complex::Complex64;

use crate::constants::{gamma_n, hempel_constant, r_n, schwarz_factor, PunctureIndex};
use crate::error::{Error, Result};

/// Which estimate wins a pointwise comparison.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum BoundWinner {
    LandauSharper,
    HempelSharper,
    Tie,
}

/// Landau bound against the transported classical bound at one a0, n = 2.
#[derive(Copy, Clone, Debug, PartialEq)]
pub struct BoundComparison {
    pub a0: Complex64,
    pub landau_bound: f64,
    pub hempel_bound: f64,
    /// Set at a0 = -1 where the transported bound degenerates to 0.
    pub hempel_degenerate: bool,
    pub winner: BoundWinner,
}

/// Absolute tolerance classifying a comparison as a tie.
pub const TIE_TOLERANCE: f64 = 1e-12;

/// Sharp bound for |a1| over analytic f = a0 + a1 z + ... omitting S_n:
///
///   2 |a0| sinh(arcsinh(gamma_n) - ln |a0|)   for |a0| <= 1
///   2 |a0| (gamma_n + ln |a0|)                for |a0| >  1
///
/// The inner branch closes to gamma (1 + r^2) + sqrt(1 + gamma^2) (1 - r^2),
/// which extends continuously to the a0 = 0 limit value
/// (1 + 2 gamma^2 + 2 gamma sqrt(1 + gamma^2)) / (gamma + sqrt(1 + gamma^2)).
/// The formula depends on a0 only through |a0| and is kept total: a0 in S_n
/// is allowed even though no admissible function attains it there.
pub fn landau_bound(n: PunctureIndex, a0: Complex64) -> Result<f64> {
    let g = gamma_n(n)?;
    Ok(landau_from_gamma(g, a0.norm()))
}

pub(crate) fn landau_from_gamma(g: f64, r: f64) -> f64 {
    if r <= 1.0 {
        let s = (1.0 + g * g).sqrt();
        g * (1.0 + r * r) + s * (1.0 - r * r)
    } else {
        2.0 * r * (g + r.ln())
    }
}

/// Sharp growth bound: log |f(z)| <= (gamma_n + log+ |f(0)|) (1+|z|)/(1-|z|) - gamma_n.
///
/// The sharpness constant is gamma_n itself: no smaller M satisfies the same
/// estimate for every admissible f.
pub fn schottky_bound(n: PunctureIndex, abs_f0: f64, abs_z: f64) -> Result<f64> {
    if !(0.0..1.0).contains(&abs_z) {
        return Err(Error::Domain(format!(
            "schottky bound requires 0 <= |z| < 1, got |z| = {abs_z}"
        )));
    }
    if abs_f0 < 0.0 || !abs_f0.is_finite() {
        return Err(Error::Domain(format!(
            "schottky bound requires finite |f(0)| >= 0, got {abs_f0}"
        )));
    }
    let g = gamma_n(n)?;
    let log_plus = if abs_f0 > 1.0 { abs_f0.ln() } else { 0.0 };
    Ok((g + log_plus) * (1.0 + abs_z) / (1.0 - abs_z) - g)
}

/// Schwarz-type bound for f(0) = 0: |f(z)| <= schwarz_factor(n) |z| on |z| < R_n.
pub fn schwarz_bound(n: PunctureIndex, abs_z: f64) -> Result<f64> {
    let radius = r_n(n)?;
    if !(0.0..1.0).contains(&abs_z) || abs_z >= radius {
        return Err(Error::Domain(format!(
            "schwarz bound is valid only for |z| < R_{} = {:.6}, got |z| = {abs_z}",
            n.get(),
            radius
        )));
    }
    Ok(schwarz_factor(n)? * abs_z)
}

/// The classical {0,1}-omitting bound transported to the S_2 setting:
///
///   |a1| <= 2 |a0 + 1| ( |ln(|a0 + 1| / 2)| + Gamma(1/4)^4/(4 pi^2) ).
///
/// Returns (value, degenerate): at a0 = -1 the bound collapses to 0 and the
/// degenerate flag is set.
pub fn hempel_landau_bound(a0: Complex64) -> (f64, bool) {
    let m = (a0 + 1.0).norm();
    if m == 0.0 {
        return (0.0, true);
    }
    (2.0 * m * ((m / 2.0).ln().abs() + hempel_constant()), false)
}

/// Compare the n = 2 Landau bound with the transported classical bound at a0.
pub fn compare_bounds(a0: Complex64) -> Result<BoundComparison> {
    let n2 = PunctureIndex::new(2)?;
    let landau = landau_bound(n2, a0)?;
    let (hempel, degenerate) = hempel_landau_bound(a0);
    let winner = if landau < hempel - TIE_TOLERANCE {
        BoundWinner::LandauSharper
    } else if hempel < landau - TIE_TOLERANCE {
        BoundWinner::HempelSharper
    } else {
        BoundWinner::Tie
    };
    Ok(BoundComparison {
        a0,
        landau_bound: landau,
        hempel_bound: hempel,
        hempel_degenerate: degenerate,
        winner,
    })
}
