//! Command-line surface. One thin binary delegates here; everything is
//! writer-parameterized so the commands are testable in-process and output is
//! bit-identical across runs.
//!
//! Subcommands: `constants`, `density`, `bound {landau,schottky,schwarz,hempel}`,
//! `compare`, `grid`, `verify`. Global flags: `--format {text,csv,json}`,
//! `--out FILE`, `--tol T` (display precision only, never computation).

use std::io::Write;

use num_complex::Complex64;

use crate::bounds::{self, BoundWinner};
use crate::constants::{PunctureIndex, RootConstants};
use crate::error::Error;
use crate::grid::{write_grid, GridQuantity, GridSpec};
use crate::metrics::Metric;
use crate::verify::run_oracle_suite;

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
enum Format {
    Text,
    Csv,
    Json,
}

enum CliError {
    Usage(String),
    Runtime(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidIndex(_) => CliError::Usage(e.to_string()),
            other => CliError::Runtime(other.to_string()),
        }
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

struct Options {
    format: Format,
    out: Option<String>,
    /// Display tolerance: sets the number of printed significant digits in
    /// text output. Computation tolerances are never affected.
    digits: usize,
    lower_bound: bool,
    empty: bool,
    /// Alternative to the leading positional n of single-index commands.
    n_flag: Option<u32>,
    positional: Vec<String>,
}

impl Options {
    /// The puncture index for commands taking one: either --n or the first
    /// of the given positional arguments. Returns the remaining positionals.
    fn take_index<'a>(&self, args: &'a [String]) -> CliResult<(PunctureIndex, &'a [String])> {
        if let Some(n) = self.n_flag {
            return Ok((index(n)?, args));
        }
        let Some((first, rest)) = args.split_first() else {
            return Err(CliError::Usage("missing puncture index n (positional or --n)".into()));
        };
        Ok((index(parse_u32(first, "n")?)?, rest))
    }
}

const USAGE: &str = "usage: rootmetric <command> [args] [--n N] [--format text|csv|json] [--out FILE] [--tol T]
commands:
  constants [n ...]                               constant table rows for each n
  density <n> <re> <im> [--lower-bound]           hyperbolic density at re+im*i
  bound landau <n> <re> <im>                      sharp |a1| bound at a0 = re+im*i
  bound schottky <n> <abs_f0> <abs_z>             growth bound for log|f(z)|
  bound schwarz <n> <abs_z>                       linear bound inside |z| < R_n
  bound hempel <re> <im>                          transported {0,1} bound at a0
  compare <re> <im>                               Landau vs transported bound at a0
  grid <n> <x_min> <x_max> <y_min> <y_max> <nx> <ny> <quantity>   CSV grid
  verify [n ...] [--empty]                        oracle suite (JSON lines)
the puncture index of density, bound and grid may be given as --n N instead
of the leading positional; --tol affects displayed digits only";

fn parse_options(args: &[String]) -> CliResult<Options> {
    let mut opts = Options {
        format: Format::Text,
        out: None,
        digits: 6,
        lower_bound: false,
        empty: false,
        n_flag: None,
        positional: Vec::new(),
    };
    let mut it = args.iter();
    while let Some(arg) = it.next() {
        match arg.as_str() {
            "--n" => {
                let v = it.next().ok_or_else(|| CliError::Usage("--n needs a value".into()))?;
                opts.n_flag = Some(parse_u32(v, "--n")?);
            }
            "--format" => {
                let v = it.next().ok_or_else(|| CliError::Usage("--format needs a value".into()))?;
                opts.format = match v.as_str() {
                    "text" => Format::Text,
                    "csv" => Format::Csv,
                    "json" => Format::Json,
                    other => return Err(CliError::Usage(format!("unknown format '{other}'"))),
                };
            }
            "--out" => {
                let v = it.next().ok_or_else(|| CliError::Usage("--out needs a path".into()))?;
                opts.out = Some(v.clone());
            }
            "--tol" => {
                let v = it.next().ok_or_else(|| CliError::Usage("--tol needs a value".into()))?;
                let tol: f64 = v
                    .parse()
                    .map_err(|_| CliError::Usage(format!("--tol expects a number, got '{v}'")))?;
                if !(tol > 0.0 && tol < 1.0) {
                    return Err(CliError::Usage("--tol must lie in (0, 1)".into()));
                }
                opts.digits = (-tol.log10()).ceil().clamp(1.0, 17.0) as usize;
            }
            "--lower-bound" => opts.lower_bound = true,
            "--empty" => opts.empty = true,
            other if other.starts_with("--") => {
                return Err(CliError::Usage(format!("unknown flag '{other}'")));
            }
            other => opts.positional.push(other.to_string()),
        }
    }
    Ok(opts)
}

fn parse_u32(s: &str, what: &str) -> CliResult<u32> {
    s.parse()
        .map_err(|_| CliError::Usage(format!("{what} expects a non-negative integer, got '{s}'")))
}

fn parse_f64(s: &str, what: &str) -> CliResult<f64> {
    let v: f64 = s
        .parse()
        .map_err(|_| CliError::Usage(format!("{what} expects a number, got '{s}'")))?;
    if !v.is_finite() {
        return Err(CliError::Usage(format!("{what} must be finite")));
    }
    Ok(v)
}

fn index(n: u32) -> CliResult<PunctureIndex> {
    PunctureIndex::new(n).map_err(|e| CliError::Usage(e.to_string()))
}

/// %g-style significant-digit formatting, deterministic and locale-free.
fn sig(v: f64, digits: usize) -> String {
    if v == 0.0 {
        return "0".into();
    }
    let formatted = format!("{:.*e}", digits.saturating_sub(1), v);
    // Move small exponents back to fixed notation for table readability.
    if let Some(epos) = formatted.find('e') {
        let exp: i32 = formatted[epos + 1..].parse().unwrap_or(0);
        if (-4..=6).contains(&exp) {
            let decimals = (digits as i32 - 1 - exp).max(0) as usize;
            return format!("{v:.decimals$}");
        }
    }
    formatted
}

/// Run the CLI: parse `args` (without the program name), write results to
/// `stdout`/`stderr`, return the process exit code (0 ok, 1 runtime/verify
/// failure, 2 usage error).
pub fn run(args: &[String], stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32 {
    let code = match dispatch(args, stdout, stderr) {
        Ok(code) => code,
        Err(CliError::Usage(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            2
        }
        Err(CliError::Runtime(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            1
        }
    };
    code
}

fn dispatch(args: &[String], stdout: &mut dyn Write, stderr: &mut dyn Write) -> CliResult<i32> {
    let Some((command, rest)) = args.split_first() else {
        return Err(CliError::Usage(USAGE.into()));
    };
    let opts = parse_options(rest)?;
    let mut sink: Vec<u8> = Vec::new();
    let code = {
        let out: &mut dyn Write = if opts.out.is_some() { &mut sink } else { stdout };
        match command.as_str() {
            "constants" => cmd_constants(&opts, out)?,
            "density" => cmd_density(&opts, out)?,
            "bound" => cmd_bound(&opts, out, stderr)?,
            "compare" => cmd_compare(&opts, out)?,
            "grid" => cmd_grid(&opts, out)?,
            "verify" => cmd_verify(&opts, out, stderr)?,
            "help" | "--help" | "-h" => {
                writeln!(out, "{USAGE}").map_err(io_err)?;
                0
            }
            other => return Err(CliError::Usage(format!("unknown command '{other}'\n{USAGE}"))),
        }
    };
    if let Some(path) = &opts.out {
        std::fs::write(path, &sink)
            .map_err(|e| CliError::Runtime(format!("cannot write {path}: {e}")))?;
    }
    Ok(code)
}

fn io_err(e: std::io::Error) -> CliError {
    CliError::Runtime(format!("output failed: {e}"))
}

const CONSTANT_COLUMNS: [&str; 6] = [
    "n",
    "gamma_n",
    "r_n",
    "schwarz_factor",
    "covering_derivative",
    "lambda_at_zero",
];

fn cmd_constants(opts: &Options, out: &mut dyn Write) -> CliResult<i32> {
    let mut rows = Vec::new();
    for s in &opts.positional {
        let n = parse_u32(s, "n")?;
        rows.push(RootConstants::for_n(index(n)?)?);
    }
    match opts.format {
        Format::Text => {
            let cells: Vec<[String; 6]> = rows
                .iter()
                .map(|r| {
                    [
                        r.n.get().to_string(),
                        sig(r.gamma_n, opts.digits),
                        sig(r.r_n, opts.digits),
                        sig(r.schwarz_factor, opts.digits),
                        sig(r.covering_derivative, opts.digits),
                        sig(r.lambda_at_zero, opts.digits),
                    ]
                })
                .collect();
            let mut widths: Vec<usize> = CONSTANT_COLUMNS.iter().map(|h| h.len()).collect();
            for row in &cells {
                for (w, cell) in widths.iter_mut().zip(row.iter()) {
                    *w = (*w).max(cell.len());
                }
            }
            let header: Vec<String> = CONSTANT_COLUMNS
                .iter()
                .zip(&widths)
                .map(|(h, w)| format!("{h:>w$}"))
                .collect();
            writeln!(out, "{}", header.join("  ")).map_err(io_err)?;
            for row in &cells {
                let line: Vec<String> =
                    row.iter().zip(&widths).map(|(c, w)| format!("{c:>w$}")).collect();
                writeln!(out, "{}", line.join("  ")).map_err(io_err)?;
            }
        }
        Format::Csv => {
            writeln!(out, "{}", CONSTANT_COLUMNS.join(",")).map_err(io_err)?;
            for r in &rows {
                writeln!(
                    out,
                    "{},{:.16e},{:.16e},{:.16e},{:.16e},{:.16e}",
                    r.n.get(),
                    r.gamma_n,
                    r.r_n,
                    r.schwarz_factor,
                    r.covering_derivative,
                    r.lambda_at_zero
                )
                .map_err(io_err)?;
            }
        }
        Format::Json => {
            let body: Vec<String> = rows
                .iter()
                .map(|r| {
                    format!(
                        "{{\"n\":{},\"gamma_n\":{:e},\"k2\":{:e},\"k3\":{:e},\"r_n\":{:e},\"schwarz_factor\":{:e},\"covering_derivative\":{:e},\"lambda_at_zero\":{:e}}}",
                        r.n.get(), r.gamma_n, r.k2, r.k3, r.r_n, r.schwarz_factor, r.covering_derivative, r.lambda_at_zero
                    )
                })
                .collect();
            writeln!(out, "[{}]", body.join(",")).map_err(io_err)?;
        }
    }
    Ok(0)
}

/// A typed output field: text formatting honors the display tolerance, while
/// CSV keeps the pinned 17-significant-digit scientific form and JSON keeps
/// full round-trip precision.
enum Field {
    Num(f64),
    Bool(bool),
    Text(&'static str),
}

fn cmd_density(opts: &Options, out: &mut dyn Write) -> CliResult<i32> {
    let (n, rest) = opts.take_index(&opts.positional)?;
    let [re, im] = rest else {
        return Err(CliError::Usage("density needs: <n> <re> <im>".into()));
    };
    let z = Complex64::new(parse_f64(re, "re")?, parse_f64(im, "im")?);
    let metric = Metric::new(n)?;
    let lam = metric.punctured(z)?;
    let mut fields: Vec<(&str, Field)> = vec![("lambda", Field::Num(lam.value))];
    if opts.lower_bound {
        let bound = metric.lower_bound(z);
        fields.push(("lower_bound", Field::Num(bound)));
        fields.push(("ratio", Field::Num(lam.value / bound)));
    }
    fields.push(("at_equality_locus", Field::Bool(lam.at_equality_locus)));
    write_fields(opts, out, &fields)?;
    Ok(0)
}

fn write_fields(opts: &Options, out: &mut dyn Write, fields: &[(&str, Field)]) -> CliResult<()> {
    match opts.format {
        Format::Text => {
            for (k, v) in fields {
                match v {
                    Field::Num(x) => writeln!(out, "{k} = {}", sig(*x, opts.digits)),
                    Field::Bool(b) => writeln!(out, "{k} = {b}"),
                    Field::Text(s) => writeln!(out, "{k} = {s}"),
                }
                .map_err(io_err)?;
            }
        }
        Format::Csv => {
            let header: Vec<&str> = fields.iter().map(|(k, _)| *k).collect();
            let values: Vec<String> = fields
                .iter()
                .map(|(_, v)| match v {
                    Field::Num(x) => format!("{x:.16e}"),
                    Field::Bool(b) => b.to_string(),
                    Field::Text(s) => s.to_string(),
                })
                .collect();
            writeln!(out, "{}", header.join(",")).map_err(io_err)?;
            writeln!(out, "{}", values.join(",")).map_err(io_err)?;
        }
        Format::Json => {
            let body: Vec<String> = fields
                .iter()
                .map(|(k, v)| match v {
                    Field::Num(x) => format!("\"{k}\":{x:e}"),
                    Field::Bool(b) => format!("\"{k}\":{b}"),
                    Field::Text(s) => format!("\"{k}\":\"{s}\""),
                })
                .collect();
            writeln!(out, "{{{}}}", body.join(",")).map_err(io_err)?;
        }
    }
    Ok(())
}

fn cmd_bound(opts: &Options, out: &mut dyn Write, stderr: &mut dyn Write) -> CliResult<i32> {
    let Some((which, rest)) = opts.positional.split_first() else {
        return Err(CliError::Usage("bound needs a subcommand: landau, schottky, schwarz or hempel".into()));
    };
    match which.as_str() {
        "landau" => {
            let (n, rest) = opts.take_index(rest)?;
            let [re, im] = rest else {
                return Err(CliError::Usage("bound landau needs: <n> <re> <im>".into()));
            };
            let a0 = Complex64::new(parse_f64(re, "re")?, parse_f64(im, "im")?);
            if (a0.norm() - 1.0).abs() <= 1e-9 {
                let nf = n.as_f64();
                let j = (nf * a0.arg() / (2.0 * std::f64::consts::PI)).round();
                let root = Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * j / nf);
                if (a0 - root).norm() <= 1e-9 {
                    writeln!(stderr, "warning: a0 lies in S_{n}; no admissible function attains this value").map_err(io_err)?;
                }
            }
            let v = bounds::landau_bound(n, a0)?;
            write_fields(opts, out, &[("landau_bound", Field::Num(v))])?;
        }
        "schottky" => {
            let (n, rest) = opts.take_index(rest)?;
            let [f0, z] = rest else {
                return Err(CliError::Usage("bound schottky needs: <n> <abs_f0> <abs_z>".into()));
            };
            let v = bounds::schottky_bound(n, parse_f64(f0, "abs_f0")?, parse_f64(z, "abs_z")?)?;
            write_fields(opts, out, &[("schottky_bound", Field::Num(v))])?;
        }
        "schwarz" => {
            let (n, rest) = opts.take_index(rest)?;
            let [z] = rest else {
                return Err(CliError::Usage("bound schwarz needs: <n> <abs_z>".into()));
            };
            let v = bounds::schwarz_bound(n, parse_f64(z, "abs_z")?)?;
            write_fields(opts, out, &[("schwarz_bound", Field::Num(v))])?;
        }
        "hempel" => {
            let [re, im] = rest else {
                return Err(CliError::Usage("bound hempel needs: <re> <im>".into()));
            };
            let a0 = Complex64::new(parse_f64(re, "re")?, parse_f64(im, "im")?);
            let (v, degenerate) = bounds::hempel_landau_bound(a0);
            write_fields(
                opts,
                out,
                &[("hempel_bound", Field::Num(v)), ("degenerate", Field::Bool(degenerate))],
            )?;
        }
        other => return Err(CliError::Usage(format!("unknown bound subcommand '{other}'"))),
    }
    Ok(0)
}

fn cmd_compare(opts: &Options, out: &mut dyn Write) -> CliResult<i32> {
    let [re, im] = opts.positional.as_slice() else {
        return Err(CliError::Usage("compare needs: <re> <im>".into()));
    };
    let a0 = Complex64::new(parse_f64(re, "re")?, parse_f64(im, "im")?);
    let cmp = bounds::compare_bounds(a0)?;
    let winner = match cmp.winner {
        BoundWinner::LandauSharper => "landau_sharper",
        BoundWinner::HempelSharper => "hempel_sharper",
        BoundWinner::Tie => "tie",
    };
    write_fields(
        opts,
        out,
        &[
            ("landau_bound", Field::Num(cmp.landau_bound)),
            ("hempel_bound", Field::Num(cmp.hempel_bound)),
            ("winner", Field::Text(winner)),
        ],
    )?;
    Ok(0)
}

fn cmd_grid(opts: &Options, out: &mut dyn Write) -> CliResult<i32> {
    let (n, rest) = opts.take_index(&opts.positional)?;
    let [x_min, x_max, y_min, y_max, nx, ny, quantity] = rest else {
        return Err(CliError::Usage(
            "grid needs: <n> <x_min> <x_max> <y_min> <y_max> <nx> <ny> <quantity>".into(),
        ));
    };
    let spec = GridSpec {
        x_min: parse_f64(x_min, "x_min")?,
        x_max: parse_f64(x_max, "x_max")?,
        y_min: parse_f64(y_min, "y_min")?,
        y_max: parse_f64(y_max, "y_max")?,
        nx: parse_u32(nx, "nx")?,
        ny: parse_u32(ny, "ny")?,
        quantity: quantity.parse::<GridQuantity>().map_err(|e| CliError::Usage(e.to_string()))?,
    };
    spec.validate().map_err(|e| CliError::Usage(e.to_string()))?;
    write_grid(&spec, n, out)?;
    Ok(0)
}

fn cmd_verify(opts: &Options, out: &mut dyn Write, stderr: &mut dyn Write) -> CliResult<i32> {
    let ns: Vec<u32> = if opts.empty {
        Vec::new()
    } else if opts.positional.is_empty() {
        vec![2, 3, 5, 10]
    } else {
        opts.positional
            .iter()
            .map(|s| parse_u32(s, "n"))
            .collect::<CliResult<_>>()?
    };
    let reports = run_oracle_suite(&ns);
    let mut passed = 0usize;
    for r in &reports {
        writeln!(out, "{}", r.json_line()).map_err(io_err)?;
        if r.pass {
            passed += 1;
        }
    }
    writeln!(stderr, "verify: {passed}/{} passed", reports.len()).map_err(io_err)?;
    Ok(if passed == reports.len() { 0 } else { 1 })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_cli(args: &[&str]) -> (i32, String, String) {
        let args: Vec<String> = args.iter().map(|s| s.to_string()).collect();
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(&args, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn constants_empty_header_only() {
        let (code, out, _) = run_cli(&["constants"]);
        assert_eq!(code, 0);
        assert_eq!(out.lines().count(), 1);
        assert!(out.contains("gamma_n"));
    }

    #[test]
    fn constants_single_row_and_determinism() {
        let (code, out, _) = run_cli(&["constants", "2"]);
        assert_eq!(code, 0);
        assert_eq!(out.lines().count(), 2);
        assert!(out.contains("3.52993"));
        let (_, out2, _) = run_cli(&["constants", "2"]);
        assert_eq!(out, out2);
    }

    #[test]
    fn constants_rejects_small_n() {
        let (code, _, err) = run_cli(&["constants", "1"]);
        assert_eq!(code, 2);
        assert!(err.starts_with("error: "));
        assert_eq!(err.lines().count(), 1);
    }

    #[test]
    fn density_at_equality_point() {
        let (code, out, _) = run_cli(&["density", "2", "0", "1", "--lower-bound"]);
        assert_eq!(code, 0);
        assert!(out.contains("lambda = 0.283292"), "got: {out}");
        assert!(out.contains("ratio = 1.00000"), "got: {out}");
        assert!(out.contains("at_equality_locus = true"));
    }

    #[test]
    fn density_puncture_fails() {
        let (code, _, err) = run_cli(&["density", "2", "1", "0"]);
        assert_eq!(code, 1);
        assert!(err.starts_with("error: "));
    }

    #[test]
    fn density_at_origin_n3() {
        let (code, out, _) = run_cli(&["density", "3", "0", "0", "--format", "json"]);
        assert_eq!(code, 0);
        let cov = crate::constants::covering_derivative(PunctureIndex::new(3).unwrap()).unwrap();
        let expect = 2.0 / cov;
        let lam: f64 = out
            .split("\"lambda\":")
            .nth(1)
            .unwrap()
            .split([',', '}'])
            .next()
            .unwrap()
            .parse()
            .unwrap();
        assert!((lam - expect).abs() <= 1e-5 * expect);
    }

    #[test]
    fn bound_commands() {
        let (code, out, _) = run_cli(&["bound", "landau", "2", "0", "0"]);
        assert_eq!(code, 0);
        assert!(out.contains("7.1987"), "landau at origin: {out}");

        let (code, out, _) = run_cli(&["bound", "schottky", "2", "1", "0.5"]);
        assert_eq!(code, 0);
        assert!(out.contains("7.0598"), "schottky: {out}");

        let (code, _, err) = run_cli(&["bound", "schwarz", "2", "0.2"]);
        assert_eq!(code, 1);
        assert!(err.contains("0.111756"), "must cite R_2: {err}");

        let (code, out, _) = run_cli(&["bound", "schwarz", "2", "0.1"]);
        assert_eq!(code, 0);
        assert!(out.contains("2.17516"));

        let (code, out, _) = run_cli(&["bound", "hempel", "-1", "0"]);
        assert_eq!(code, 0);
        assert!(out.contains("degenerate = true"));
    }

    #[test]
    fn landau_warns_on_root() {
        let (code, _, err) = run_cli(&["bound", "landau", "2", "1", "0"]);
        assert_eq!(code, 0);
        assert!(err.contains("warning:"));
    }

    #[test]
    fn compare_winners() {
        let (code, out, _) = run_cli(&["compare", "0", "0"]);
        assert_eq!(code, 0);
        assert!(out.contains("winner = landau_sharper"));
        let (_, out, _) = run_cli(&["compare", "-0.99", "0"]);
        assert!(out.contains("winner = hempel_sharper"));
    }

    #[test]
    fn grid_to_file() {
        let dir = std::env::temp_dir().join("rootmetric-cli-test");
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("grid.csv");
        let path_str = path.to_str().unwrap();
        let (code, out, _) = run_cli(&[
            "grid", "2", "0", "0", "0", "0", "1", "1", "density", "--out", path_str,
        ]);
        assert_eq!(code, 0);
        assert!(out.is_empty());
        let content = std::fs::read_to_string(&path).unwrap();
        assert!(content.starts_with("x,y,value"));
        std::fs::remove_file(&path).unwrap();
    }

    #[test]
    fn verify_empty_exits_zero() {
        let (code, out, err) = run_cli(&["verify", "--empty"]);
        assert_eq!(code, 0);
        assert!(out.is_empty());
        assert!(err.contains("0/0"));
    }

    #[test]
    fn usage_errors() {
        let (code, _, err) = run_cli(&["nonsense"]);
        assert_eq!(code, 2);
        assert!(err.starts_with("error: "));
        let (code, _, _) = run_cli(&[]);
        assert_eq!(code, 2);
        let (code, _, _) = run_cli(&["density", "2", "abc", "0"]);
        assert_eq!(code, 2);
    }

    #[test]
    fn n_flag_is_equivalent_to_positional() {
        let (_, a, _) = run_cli(&["density", "3", "0.4", "0.2"]);
        let (_, b, _) = run_cli(&["density", "0.4", "0.2", "--n", "3"]);
        assert_eq!(a, b);
        let (_, c, _) = run_cli(&["bound", "schwarz", "5", "0.1"]);
        let (_, d, _) = run_cli(&["bound", "schwarz", "0.1", "--n", "5"]);
        assert_eq!(c, d);
    }

    #[test]
    fn tol_changes_display_only() {
        let (_, coarse, _) = run_cli(&["bound", "landau", "3", "0.5", "0", "--tol", "1e-2"]);
        let (_, fine, _) = run_cli(&["bound", "landau", "3", "0.5", "0", "--tol", "1e-12"]);
        assert_ne!(coarse, fine);
        let a: f64 = coarse.trim().rsplit(' ').next().unwrap().parse().unwrap();
        let b: f64 = fine.trim().rsplit(' ').next().unwrap().parse().unwrap();
        assert!((a - b).abs() <= 1e-2 * b.abs());
    }
}
