//! The Schwarz-type bound |f(z)| <= factor * |z| for functions omitting S_n
//! with f(0) = 0 is valid only inside |z| < R_n; outside, the operation
//! reports the radius in its error. Schottky growth control works on the
//! whole disk.
//!
//! Run: cargo run --example schwarz_radius

use rootmetric::{r_n, schottky_bound, schwarz_bound, PunctureIndex, Result};

fn main() -> Result<()> {
    let n = PunctureIndex::new(2)?;
    let radius = r_n(n)?;
    println!("validity radius R_2 = {radius:.6}");
    for abs_z in [0.02, 0.05, 0.08, 0.10, 0.111] {
        match schwarz_bound(n, abs_z) {
            Ok(v) => println!("  |z| = {abs_z:<6} ->  |f(z)| <= {v:.6}"),
            Err(e) => println!("  |z| = {abs_z:<6} ->  {e}"),
        }
    }
    println!();
    match schwarz_bound(n, 0.2) {
        Err(e) => println!("outside the radius: {e}"),
        Ok(_) => unreachable!("0.2 exceeds R_2"),
    }

    println!("\nSchottky growth bound for log|f(z)|, |f(0)| = 1:");
    for abs_z in [0.0, 0.25, 0.5, 0.75, 0.9] {
        let b = schottky_bound(n, 1.0, abs_z)?;
        println!("  |z| = {abs_z:<5} ->  log|f(z)| <= {b:.6}");
    }
    Ok(())
}
