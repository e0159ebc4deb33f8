//! Large-n behavior of the constants: n gamma_n falls onto Gamma(1/4)^4/(4 pi^2)
//! from above, the covering derivative approaches 1 at rate (4 ln 2)/n, and
//! the Schwarz factor approaches 1 only at the slower square-root rate
//! 8 Gamma(5/4)/Gamma(3/4) / sqrt(n).
//!
//! Run: cargo run --example asymptotics

use rootmetric::{
    covering_derivative, gamma_n, hempel_constant, schwarz_factor,
    schwarz_factor_asymptotic_residual, PunctureIndex, Result,
};

fn main() -> Result<()> {
    let h = hempel_constant();
    println!("limit constant Gamma(1/4)^4/(4 pi^2) = {h:.10}");
    println!("\n{:>8}  {:>14}  {:>12}", "n", "n gamma_n", "excess over limit");
    for n in [2u32, 10, 100, 1000] {
        let ng = f64::from(n) * gamma_n(PunctureIndex::new(n)?)?;
        println!("{n:>8}  {ng:>14.8}  {:>12.3e}", ng - h);
    }

    println!("\ncovering derivative: (value - 1) n -> 4 ln 2 = {:.6}", 4.0 * std::f64::consts::LN_2);
    println!("{:>8}  {:>14}  {:>12}", "n", "(cov - 1) n", "deviation");
    for n in [100u32, 1000, 10_000] {
        let cov = covering_derivative(PunctureIndex::new(n)?)?;
        let scaled = (cov - 1.0) * f64::from(n);
        println!("{n:>8}  {scaled:>14.8}  {:>12.3e}", scaled - 4.0 * std::f64::consts::LN_2);
    }

    println!("\nSchwarz factor: (value - 1) sqrt(n) -> 8 Gamma(5/4)/Gamma(3/4) = 5.9174...");
    println!("{:>8}  {:>14}  {:>14}  {:>12}", "n", "factor", "(f-1) sqrt n", "residual");
    for n in [100u32, 1000, 10_000, 100_000] {
        let idx = PunctureIndex::new(n)?;
        let f = schwarz_factor(idx)?;
        let res = schwarz_factor_asymptotic_residual(idx)?;
        println!(
            "{n:>8}  {f:>14.8}  {:>14.8}  {res:>12.4}",
            (f - 1.0) * f64::from(n).sqrt()
        );
    }
    println!("\nthe 1/sqrt(n) rate of the Schwarz factor against the 1/n rate of the");
    println!("covering derivative is the gap between the linear bound and the extremal map.");
    Ok(())
}
