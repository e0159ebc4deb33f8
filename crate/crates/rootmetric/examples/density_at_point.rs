//! Evaluate the hyperbolic density of C \ S_n at a few points and compare it
//! with the sharp elementary lower bound. The ratio is 1 exactly on the
//! equality locus z^n = -1 and strictly above 1 everywhere else.
//!
//! Run: cargo run --example density_at_point

use num_complex::Complex64;
use rootmetric::{Metric, PunctureIndex, Result};

fn main() -> Result<()> {
    let n = PunctureIndex::new(2)?;
    let metric = Metric::new(n)?;
    let points = [
        Complex64::new(0.0, 1.0),   // on the equality locus: i^2 = -1
        Complex64::new(0.0, 0.0),   // the origin (closed-form limit value)
        Complex64::new(0.5, 0.5),
        Complex64::new(-2.0, 0.7),
        Complex64::new(0.0, 30.0),
        Complex64::new(1.0, 1e-3),  // close to the puncture at 1
    ];
    println!("n = 2, punctures at -1 and +1");
    println!("{:>16}  {:>13}  {:>13}  {:>10}  locus", "z", "lambda", "lower bound", "ratio");
    for z in points {
        let lam = metric.punctured(z)?;
        let bound = metric.lower_bound(z);
        println!(
            "{:>16}  {:>13.8}  {:>13.8}  {:>10.6}  {}",
            format!("{:.3}+{:.3}i", z.re, z.im),
            lam.value,
            bound,
            lam.value / bound,
            if lam.at_equality_locus { "yes" } else { "no" }
        );
    }

    // Evaluation directly at a puncture is rejected.
    let err = metric.punctured(Complex64::new(1.0, 0.0)).unwrap_err();
    println!("\nat the puncture itself: {err}");
    Ok(())
}
