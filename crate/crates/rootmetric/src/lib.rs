//! Hyperbolic geometry of the complex plane punctured at the n-th roots of
//! unity, and the sharp function-theoretic bounds that follow from it.
//!
//! For an integer n >= 2 let S_n = { e^{2 pi i j / n} : j = 1..n } and let
//! lambda(z)|dz| denote the (curvature -1) hyperbolic metric of C \ S_n. This
//! crate computes:
//!
//! - the density lambda(z) itself, through the closed hypergeometric formula
//!   for the generalized metric with singularity orders (1 - 1/n, 1, 1) on
//!   C \ {0, 1} and its pullback under w = z^n ([`metrics`]);
//! - the sharp constant gamma_n = 1 / lambda(e^{i pi / n}) together with the
//!   metric coefficients K2, K3, the Schwarz validity radius R_n, its growth
//!   factor, and the covering-map derivative |f_n'(0)| ([`constants`]);
//! - the sharp Landau-, Schottky- and Schwarz-type bounds for analytic
//!   functions on the unit disk omitting S_n, plus the comparison against the
//!   classical bound for functions omitting {0, 1} ([`bounds`]);
//! - the special-function layer those formulas need: principal-branch complex
//!   log-gamma and the Gauss hypergeometric function continued to the cut
//!   plane ([`specfun`]);
//! - independent high-precision oracles (double-double series summation, ODE
//!   continuation, AGM-anchored gamma) wired into a verification suite
//!   ([`verify`]);
//! - deterministic CSV grid emission for region and surface plots ([`grid`])
//!   and the command-line front end ([`cli`]).
//!
//! # Quick start
//!
//! ```
//! use num_complex::Complex64;
//! use rootmetric::{lambda_punctured, landau_bound, PunctureIndex};
//!
//! let n = PunctureIndex::new(2)?;
//! // The density at i, an equality point of the sharp lower bound.
//! let density = lambda_punctured(n, Complex64::new(0.0, 1.0))?;
//! assert!(density.at_equality_locus);
//! assert!((density.value - 1.0 / 3.52993).abs() < 1e-5);
//!
//! // The sharp bound on |f'(0)| over analytic f omitting {-1, 1} with f(0) = 0.
//! let bound = landau_bound(n, Complex64::new(0.0, 0.0))?;
//! assert!((bound - 7.19877).abs() < 1e-4);
//! # Ok::<(), rootmetric::Error>(())
//! ```
//!
//! Every function in this crate is a pure function of its arguments with no
//! shared mutable state; all of it is safe to call from any number of threads.

pub mod bounds;
pub mod cli;
pub mod constants;
pub(crate) mod dd;
pub mod error;
pub mod grid;
pub mod metrics;
pub mod specfun;
pub mod verify;

pub use bounds::{
    compare_bounds, hempel_landau_bound, landau_bound, schottky_bound, schwarz_bound,
    BoundComparison, BoundWinner,
};
pub use constants::{
    covering_derivative, gamma_n, hempel_constant, k_constants, r_n, schwarz_factor,
    schwarz_factor_asymptotic_residual, PunctureIndex, RootConstants,
};
pub use error::{Error, Result};
pub use grid::{GridQuantity, GridSpec};
pub use metrics::{circle_min, lambda_general, lambda_punctured, lower_bound, DensityValue, Metric};
pub use specfun::{hyp2f1, log_gamma, phi1, phi2, reflection_check, BranchedValue, HypergeometricParams};
pub use verify::{ode_continuation, run_oracle_suite, series_2f1_highprec, OracleReport, OracleValue};
