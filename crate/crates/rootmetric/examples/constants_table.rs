//! Reproduce the two constant tables: gamma_n, and R_n with its Schwarz
//! growth factor, for n in {2, 3, 4, 5, 10, 100, 1000}.
//!
//! Run: cargo run --example constants_table

use rootmetric::{PunctureIndex, Result, RootConstants};

fn main() -> Result<()> {
    println!("{:>5}  {:>12}  {:>10}  {:>14}  {:>20}", "n", "gamma_n", "R_n", "schwarz factor", "covering derivative");
    for n in [2u32, 3, 4, 5, 10, 100, 1000] {
        let c = RootConstants::for_n(PunctureIndex::new(n)?)?;
        println!(
            "{:>5}  {:>12.6}  {:>10.6}  {:>14.6}  {:>20.6}",
            n, c.gamma_n, c.r_n, c.schwarz_factor, c.covering_derivative
        );
    }
    println!();
    println!("gamma_n is the reciprocal hyperbolic density of C \\ S_n at e^(i pi/n);");
    println!("|f(z)| <= schwarz_factor * |z| holds for |z| < R_n whenever f omits S_n and f(0) = 0.");
    Ok(())
}
