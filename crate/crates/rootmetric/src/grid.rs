//! Rectangular grid emission as CSV, serving the region-comparison and
//! density-surface figures. Output is deterministic: row-major with the y
//! loop outer ascending and x inner ascending, 17 significant digits in
//! scientific notation, one writer.

use std::io::Write;

use num_complex::Complex64;

use crate::bounds::{compare_bounds, BoundWinner};
use crate::constants::PunctureIndex;
use crate::error::{Error, Result};
use crate::metrics::Metric;

/// What to evaluate on the grid.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum GridQuantity {
    /// Hyperbolic density of C \ S_n.
    Density,
    /// The sharp elementary lower bound.
    LowerBound,
    /// density / lower bound (>= 1, equality on z^n = -1).
    DensityRatio,
    /// Sign grid of the bound comparison at n = 2: +1 Landau, 0 tie, -1 Hempel.
    BoundWinner,
}

impl std::str::FromStr for GridQuantity {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "density" => Ok(Self::Density),
            "lower_bound" | "lower-bound" => Ok(Self::LowerBound),
            "density_ratio" | "density-ratio" | "ratio" => Ok(Self::DensityRatio),
            "bound_winner" | "bound-winner" | "winner" => Ok(Self::BoundWinner),
            other => Err(Error::Domain(format!(
                "unknown grid quantity '{other}' (expected density, lower_bound, density_ratio or bound_winner)"
            ))),
        }
    }
}

/// Axis-aligned rectangular grid specification.
#[derive(Copy, Clone, Debug, PartialEq)]
pub struct GridSpec {
    pub x_min: f64,
    pub x_max: f64,
    pub y_min: f64,
    pub y_max: f64,
    pub nx: u32,
    pub ny: u32,
    pub quantity: GridQuantity,
}

/// Cells within this distance of a puncture print the flag token instead of
/// an ill-conditioned number.
const PUNCTURE_FLAG_DISTANCE: f64 = 1e-3;
const MAX_CELLS: u64 = 100_000_000;

impl GridSpec {
    pub fn validate(&self) -> Result<()> {
        for v in [self.x_min, self.x_max, self.y_min, self.y_max] {
            if !v.is_finite() {
                return Err(Error::Domain("grid extents must be finite".into()));
            }
        }
        if self.nx == 0 || self.ny == 0 {
            return Err(Error::Domain("grid needs nx >= 1 and ny >= 1".into()));
        }
        // A single column or row may be degenerate; multiple samples need an extent.
        if self.nx > 1 && self.x_min >= self.x_max {
            return Err(Error::Domain("x_min must be < x_max when nx > 1".into()));
        }
        if self.ny > 1 && self.y_min >= self.y_max {
            return Err(Error::Domain("y_min must be < y_max when ny > 1".into()));
        }
        if u64::from(self.nx) * u64::from(self.ny) > MAX_CELLS {
            return Err(Error::Domain(format!(
                "grid of {} x {} exceeds the {MAX_CELLS}-cell cap",
                self.nx, self.ny
            )));
        }
        Ok(())
    }

    fn coord(min: f64, max: f64, count: u32, i: u32) -> f64 {
        if count == 1 {
            min
        } else {
            min + f64::from(i) * (max - min) / f64::from(count - 1)
        }
    }
}

fn distance_to_roots(n: PunctureIndex, z: Complex64) -> f64 {
    if (z.norm() - 1.0).abs() > PUNCTURE_FLAG_DISTANCE {
        return f64::INFINITY;
    }
    let nf = n.as_f64();
    let j = (nf * z.arg() / (2.0 * std::f64::consts::PI)).round();
    let root = Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * j / nf);
    (z - root).norm()
}

/// Evaluate the grid and write `x,y,value` CSV rows to `out`.
pub fn write_grid<W: Write + ?Sized>(spec: &GridSpec, n: PunctureIndex, out: &mut W) -> Result<()> {
    spec.validate()?;
    let metric = match spec.quantity {
        GridQuantity::BoundWinner => None,
        _ => Some(Metric::new(n)?),
    };
    let io_err = |e: std::io::Error| Error::Domain(format!("grid output failed: {e}"));
    writeln!(out, "x,y,value").map_err(io_err)?;
    for iy in 0..spec.ny {
        let y = GridSpec::coord(spec.y_min, spec.y_max, spec.ny, iy);
        for ix in 0..spec.nx {
            let x = GridSpec::coord(spec.x_min, spec.x_max, spec.nx, ix);
            let z = Complex64::new(x, y);
            let cell = match spec.quantity {
                GridQuantity::BoundWinner => {
                    let cmp = compare_bounds(z)?;
                    let w = match cmp.winner {
                        BoundWinner::LandauSharper => 1,
                        BoundWinner::Tie => 0,
                        BoundWinner::HempelSharper => -1,
                    };
                    w.to_string()
                }
                quantity => {
                    let metric = metric.as_ref().expect("metric built for density quantities");
                    if distance_to_roots(n, z) < PUNCTURE_FLAG_DISTANCE {
                        "inf-flagged".to_string()
                    } else {
                        let v = match quantity {
                            GridQuantity::Density => metric.punctured(z)?.value,
                            GridQuantity::LowerBound => metric.lower_bound(z),
                            GridQuantity::DensityRatio => {
                                metric.punctured(z)?.value / metric.lower_bound(z)
                            }
                            GridQuantity::BoundWinner => unreachable!(),
                        };
                        format!("{v:.16e}")
                    }
                }
            };
            writeln!(out, "{x:.16e},{y:.16e},{cell}").map_err(io_err)?;
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn idx(n: u32) -> PunctureIndex {
        PunctureIndex::new(n).unwrap()
    }

    fn render(spec: &GridSpec, n: u32) -> String {
        let mut buf = Vec::new();
        write_grid(spec, idx(n), &mut buf).unwrap();
        String::from_utf8(buf).unwrap()
    }

    #[test]
    fn single_cell_at_origin() {
        let spec = GridSpec {
            x_min: 0.0,
            x_max: 0.0,
            y_min: 0.0,
            y_max: 0.0,
            nx: 1,
            ny: 1,
            quantity: GridQuantity::Density,
        };
        let out = render(&spec, 2);
        let mut lines = out.lines();
        assert_eq!(lines.next(), Some("x,y,value"));
        let row = lines.next().unwrap();
        let value: f64 = row.split(',').nth(2).unwrap().parse().unwrap();
        let expect = Metric::new(idx(2)).unwrap().lambda_at_zero();
        assert!((value - expect).abs() < 1e-15);
        assert!(lines.next().is_none());
    }

    #[test]
    fn winner_grid_signs() {
        let spec = GridSpec {
            x_min: -1.0,
            x_max: 0.0,
            y_min: 0.0,
            y_max: 0.0,
            nx: 2,
            ny: 1,
            quantity: GridQuantity::BoundWinner,
        };
        let out = render(&spec, 2);
        let rows: Vec<&str> = out.lines().skip(1).collect();
        assert!(rows[0].ends_with(",-1"), "near -1 the transported bound wins: {}", rows[0]);
        assert!(rows[1].ends_with(",1"), "at the origin the Landau bound wins: {}", rows[1]);
    }

    #[test]
    fn puncture_cells_flagged() {
        let spec = GridSpec {
            x_min: 1.0,
            x_max: 1.0,
            y_min: 0.0,
            y_max: 0.0,
            nx: 1,
            ny: 1,
            quantity: GridQuantity::Density,
        };
        let out = render(&spec, 2);
        assert!(out.lines().nth(1).unwrap().ends_with(",inf-flagged"));
    }

    #[test]
    fn row_order_and_determinism() {
        let spec = GridSpec {
            x_min: -0.4,
            x_max: 0.4,
            y_min: -0.3,
            y_max: 0.3,
            nx: 3,
            ny: 2,
            quantity: GridQuantity::LowerBound,
        };
        let a = render(&spec, 3);
        let b = render(&spec, 3);
        assert_eq!(a, b);
        let ys: Vec<f64> = a
            .lines()
            .skip(1)
            .map(|l| l.split(',').nth(1).unwrap().parse().unwrap())
            .collect();
        assert_eq!(ys.len(), 6);
        assert!(ys[0] == ys[1] && ys[1] == ys[2], "y is the outer loop");
        assert!(ys[0] < ys[3], "y ascends");
        let xs: Vec<f64> = a
            .lines()
            .skip(1)
            .take(3)
            .map(|l| l.split(',').next().unwrap().parse().unwrap())
            .collect();
        assert!(xs[0] < xs[1] && xs[1] < xs[2], "x ascends within a row");
    }

    #[test]
    fn oversize_rejected() {
        let spec = GridSpec {
            x_min: 0.0,
            x_max: 1.0,
            y_min: 0.0,
            y_max: 1.0,
            nx: 20_000,
            ny: 20_000,
            quantity: GridQuantity::Density,
        };
        assert!(spec.validate().is_err());
    }

    #[test]
    fn quantity_parsing() {
        assert_eq!("density".parse::<GridQuantity>().unwrap(), GridQuantity::Density);
        assert_eq!("BOUND_WINNER".parse::<GridQuantity>().unwrap(), GridQuantity::BoundWinner);
        assert!("nonsense".parse::<GridQuantity>().is_err());
    }

    #[test]
    fn ratio_at_least_one() {
        let spec = GridSpec {
            x_min: -1.4,
            x_max: 1.4,
            y_min: -1.4,
            y_max: 1.4,
            nx: 8,
            ny: 8,
            quantity: GridQuantity::DensityRatio,
        };
        let out = render(&spec, 4);
        for line in out.lines().skip(1) {
            let cell = line.split(',').nth(2).unwrap();
            if cell == "inf-flagged" {
                continue;
            }
            let v: f64 = cell.parse().unwrap();
            assert!(v >= 1.0 - 1e-9, "ratio below 1: {line}");
        }
    }
}
