//! Compare the sharp Landau bound for functions omitting {-1, +1} against
//! the classical bound for functions omitting {0, 1} transported to the same
//! setting. The Landau bound wins near the origin and in the right half
//! plane; the transported bound wins close to a0 = -1.
//!
//! Run: cargo run --example landau_vs_hempel

use num_complex::Complex64;
use rootmetric::{compare_bounds, BoundWinner, Result};

fn main() -> Result<()> {
    println!("{:>14}  {:>12}  {:>12}  winner", "a0", "landau", "transported");
    for (re, im) in [
        (0.0, 0.0),
        (2.0, 0.0),
        (1.0, 1.0),
        (0.0, 1.5),
        (-0.5, 0.0),
        (-0.9, 0.0),
        (-0.99, 0.0),
        (-1.01, 0.0),
        (-1.0, 0.05),
        (-3.0, 0.0),
    ] {
        let cmp = compare_bounds(Complex64::new(re, im))?;
        let winner = match cmp.winner {
            BoundWinner::LandauSharper => "landau",
            BoundWinner::HempelSharper => "transported",
            BoundWinner::Tie => "tie",
        };
        println!(
            "{:>14}  {:>12.6}  {:>12.6}  {winner}",
            format!("{re}+{im}i"),
            cmp.landau_bound,
            cmp.hempel_bound
        );
    }

    // A coarse sign map of the comparison region around the punctures.
    println!("\nwinner map on [-2, 2] x [-1.5, 1.5]  (#: landau, .: transported)");
    for iy in (0..13).rev() {
        let y = -1.5 + 3.0 * f64::from(iy) / 12.0;
        let mut row = String::new();
        for ix in 0..41 {
            let x = -2.0 + 4.0 * f64::from(ix) / 40.0;
            let cmp = compare_bounds(Complex64::new(x, y))?;
            row.push(match cmp.winner {
                BoundWinner::LandauSharper => '#',
                _ => '.',
            });
        }
        println!("  {row}");
    }
    Ok(())
}
