//! Acceptance suite: one test per criterion, each printing a PASS/FAIL line
//! (run with `cargo test --test acceptance -- --nocapture` to see them).
//! Every tolerance is pinned in the assertions below.

use std::time::Instant;

use num_complex::Complex64;
use rootmetric::{
    cli, compare_bounds, covering_derivative, gamma_n, hempel_constant, landau_bound,
    schwarz_factor_asymptotic_residual, BoundWinner, Metric, PunctureIndex,
};

/// Deterministic SplitMix64 stream for the sampling criteria.
struct SplitMix64(u64);

impl SplitMix64 {
    fn next_u64(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 / (1u64 << 53) as f64
    }
}

fn idx(n: u32) -> PunctureIndex {
    PunctureIndex::new(n).unwrap()
}

fn report(criterion: &str, pass: bool) {
    println!("{} {criterion}", if pass { "PASS" } else { "FAIL" });
    assert!(pass, "{criterion}");
}

const GAMMA_TABLE: [(u32, f64); 7] = [
    (2, 3.52993),
    (3, 1.79372),
    (4, 1.22801),
    (5, 0.942245),
    (10, 0.445789),
    (100, 0.0437768),
    (1000, 0.00437689),
];

const RN_FACTOR_TABLE: [(u32, f64, f64); 7] = [
    (2, 0.111756, 21.7516),
    (3, 0.185105, 12.2035),
    (4, 0.237023, 9.0483),
    (5, 0.277218, 7.43155),
    (10, 0.401612, 4.5297),
    (100, 0.744661, 1.73354),
    (1000, 0.910713, 1.20059),
];

#[test]
fn criterion_01_gamma_table() {
    let start = Instant::now();
    let mut ok = true;
    for (n, expect) in GAMMA_TABLE {
        let g = gamma_n(idx(n)).unwrap();
        ok &= (g - expect).abs() <= 5e-6 * expect;
    }
    let within_time = start.elapsed().as_secs_f64() < 5.0;
    report(
        "criterion 1: gamma_n table at n in {2,3,4,5,10,100,1000}, rel 5e-6, < 5 s",
        ok && within_time,
    );
}

#[test]
fn criterion_02_rn_and_factor_table() {
    let mut ok = true;
    for (n, rn_expect, sf_expect) in RN_FACTOR_TABLE {
        let c = rootmetric::RootConstants::for_n(idx(n)).unwrap();
        ok &= (c.r_n - rn_expect).abs() <= 5e-6 * rn_expect;
        ok &= (c.schwarz_factor - sf_expect).abs() <= 5e-6 * sf_expect;
    }
    report("criterion 2: R_n and Schwarz-factor tables, rel 5e-6", ok);
}

#[test]
fn criterion_03_hempel_limit() {
    let h = hempel_constant();
    let g1000 = gamma_n(idx(1000)).unwrap();
    let mut ok = (1000.0 * g1000 - h).abs() <= 1e-4;
    // n gamma_n = 1/lambda_{1-1/n,1,1}(-1) converges onto the limit
    // monotonically from above (the generalized densities grow with n), as
    // the published table confirms: 7.05986, 4.45789, 4.37768, 4.37689.
    let mut prev = f64::INFINITY;
    for n in [2u32, 10, 100, 1000] {
        let ng = n as f64 * gamma_n(idx(n)).unwrap();
        ok &= ng < prev && ng > h;
        prev = ng;
    }
    report(
        "criterion 3: 1000 gamma_1000 within 1e-4 of Gamma(1/4)^4/(4 pi^2); n gamma_n monotone onto it",
        ok,
    );
}

#[test]
fn criterion_04_reflection_identity() {
    let cov = covering_derivative(idx(2)).unwrap();
    let h = hempel_constant();
    report(
        "criterion 4: covering_derivative(2) equals Gamma(1/4)^4/(4 pi^2) to rel 1e-10",
        (cov - h).abs() <= 1e-10 * h,
    );
}

#[test]
fn criterion_05_covering_asymptote() {
    let target = 4.0 * std::f64::consts::LN_2;
    let mut ok = true;
    let mut prev = f64::INFINITY;
    let mut last = f64::NAN;
    for n in [100u32, 1000, 10_000] {
        let cov = covering_derivative(idx(n)).unwrap();
        let scaled = (cov - 1.0) * n as f64;
        let dev = (scaled - target).abs();
        ok &= dev < prev;
        prev = dev;
        last = dev;
    }
    ok &= last <= 0.1 * target;
    report(
        "criterion 5: (covering_derivative(n)-1) n -> 4 ln 2, deviation monotone, 10% at n = 10^4",
        ok,
    );
}

#[test]
fn criterion_06_schwarz_asymptote() {
    let mut ok = true;
    let mut prev = f64::INFINITY;
    for n in [100u32, 1000, 10_000, 100_000] {
        let r = schwarz_factor_asymptotic_residual(idx(n)).unwrap().abs();
        ok &= r < prev;
        prev = r;
    }
    report(
        "criterion 6: |(schwarz_factor - 1) sqrt n - 8 Gamma(5/4)/Gamma(3/4)| strictly decreasing",
        ok,
    );
}

/// Distance from z to the nearest point of the equality locus z^n = -1.
fn locus_distance(n: u32, z: Complex64) -> f64 {
    let nf = n as f64;
    let j = ((nf * z.arg() / std::f64::consts::PI - 1.0) / 2.0).round();
    let angle = std::f64::consts::PI * (2.0 * j + 1.0) / nf;
    (z - Complex64::from_polar(1.0, angle)).norm()
}

/// Distance from z to the nearest n-th root of unity.
fn root_distance(n: u32, z: Complex64) -> f64 {
    let nf = n as f64;
    let j = (nf * z.arg() / (2.0 * std::f64::consts::PI)).round();
    let root = Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * j / nf);
    (z - root).norm()
}

#[test]
fn criterion_07_dominance() {
    let start = Instant::now();
    let mut ok = true;
    for n in [2u32, 5, 10] {
        let metric = Metric::new(idx(n)).unwrap();
        let mut rng = SplitMix64(0x5EED_0000 + u64::from(n));
        let mut accepted = 0usize;
        while accepted < 10_000 {
            let modulus = 1e-3 * (10f64).powf(6.0 * rng.next_f64());
            let angle = 2.0 * std::f64::consts::PI * rng.next_f64();
            let z = Complex64::from_polar(modulus, angle);
            if root_distance(n, z) <= 1e-2 {
                continue;
            }
            accepted += 1;
            let lam = metric.punctured(z).unwrap().value;
            let bound = metric.lower_bound(z);
            if lam < bound * (1.0 - 1e-9) {
                ok = false;
                eprintln!("dominance violated at n = {n}, z = {z}: {lam} < {bound}");
            }
            let gap = lam / bound - 1.0;
            if gap < 1e-6 && locus_distance(n, z) > 1e-2 {
                ok = false;
                eprintln!("near-equality off the locus at n = {n}, z = {z}: gap {gap}");
            }
        }
    }
    let within_time = start.elapsed().as_secs_f64() < 60.0;
    report(
        "criterion 7: density >= bound (1 - 1e-9) on 10^4 points per n in {2,5,10}; equality only near the locus; < 60 s",
        ok && within_time,
    );
}

#[test]
fn criterion_08_circle_minimum() {
    let mut ok = true;
    for n in [2u32, 3, 10] {
        let metric = Metric::new(idx(n)).unwrap();
        let (angle, density) = metric.circle_min().unwrap();
        ok &= (angle - std::f64::consts::PI / n as f64).abs() <= 1e-6;
        let expected = 1.0 / metric.gamma_n();
        ok &= (density - expected).abs() <= 1e-8 * expected;
    }
    report(
        "criterion 8: circle argmin within 1e-6 of pi/n and min density within 1e-8 of 1/gamma_n",
        ok,
    );
}

#[test]
fn criterion_09_symmetries() {
    let mut ok = true;

    // Moebius functional equation at 100 points, n = 4.
    let metric = Metric::new(idx(4)).unwrap();
    let mut rng = SplitMix64(0x0A0E_B105);
    let mut accepted = 0usize;
    while accepted < 100 {
        let modulus = 0.1 * (30f64).powf(rng.next_f64());
        let angle = 2.0 * std::f64::consts::PI * rng.next_f64();
        let w = Complex64::from_polar(modulus, angle);
        if (w - 1.0).norm() < 0.1 || w.norm() < 0.05 || (w.im.abs() < 1e-3 && w.re > 0.9) {
            continue;
        }
        accepted += 1;
        let t = w / (w - 1.0);
        let jac = ((w - 1.0) * (w - 1.0)).norm_sqr().sqrt().recip();
        let lhs = metric.general(w).unwrap().value;
        let rhs = metric.general(t).unwrap().value * jac;
        if (lhs - rhs).abs() > 1e-8 * lhs {
            ok = false;
            eprintln!("Moebius equation residual at w = {w}: {}", (lhs - rhs).abs() / lhs);
        }
    }

    // Rotation and conjugation symmetry at 100 points, n = 5.
    let metric = Metric::new(idx(5)).unwrap();
    let rot = Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI / 5.0);
    let mut rng = SplitMix64(0xC0_FFEE);
    let mut accepted = 0usize;
    while accepted < 100 {
        let modulus = 0.2 * (15f64).powf(rng.next_f64());
        let angle = 2.0 * std::f64::consts::PI * rng.next_f64();
        let z = Complex64::from_polar(modulus, angle);
        if root_distance(5, z) <= 1e-2 {
            continue;
        }
        accepted += 1;
        let v = metric.punctured(z).unwrap().value;
        let vr = metric.punctured(z * rot).unwrap().value;
        let vc = metric.punctured(z.conj()).unwrap().value;
        if (v - vr).abs() > 1e-12 * v || (v - vc).abs() > 1e-12 * v {
            ok = false;
            eprintln!("symmetry residual at z = {z}");
        }
    }

    report(
        "criterion 9: Moebius functional equation <= 1e-8 (100 pts); rotation/conjugation <= 1e-12 (100 pts)",
        ok,
    );
}

#[test]
fn criterion_10_curvature() {
    // Five-point Laplacian of log lambda at interior points; the defining
    // property of curvature -1 is Delta log lambda = lambda^2. Stencil
    // centers keep |z^n| inside one evaluation zone so the finite difference
    // sees a single smooth code path.
    let h = 1e-3;
    let mut ok = true;
    for n in [2u32, 7] {
        let metric = Metric::new(idx(n)).unwrap();
        let f = |z: Complex64| metric.punctured(z).unwrap().value.ln();
        let points: Vec<Complex64> = if n == 2 {
            (0..20)
                .map(|k| {
                    let r = if k % 2 == 0 { 0.70 } else { 0.74 };
                    let theta = 0.5 + (std::f64::consts::PI - 1.0) * (k as f64) / 19.0;
                    Complex64::from_polar(r, theta)
                })
                .collect()
        } else {
            (0..20)
                .map(|k| {
                    let r = if k % 2 == 0 { 0.88 } else { 0.91 };
                    let theta = std::f64::consts::PI * (2.0 * ((k % 7) as f64) + 1.0) / 7.0
                        + 0.04 * ((k / 7) as f64);
                    Complex64::from_polar(r, theta)
                })
                .collect()
        };
        for z in points {
            let lap = (f(z + h) + f(z - h) + f(z + Complex64::new(0.0, h))
                + f(z - Complex64::new(0.0, h))
                - 4.0 * f(z))
                / (h * h);
            let lam2 = metric.punctured(z).unwrap().value.powi(2);
            let ratio = lap / lam2;
            if (ratio - 1.0).abs() > 1e-4 {
                ok = false;
                eprintln!("curvature off at n = {n}, z = {z}: ratio {ratio}");
            }
        }
    }
    report(
        "criterion 10: finite-difference Delta log lambda / lambda^2 = 1 within 1e-4, n in {2,7}",
        ok,
    );
}

#[test]
fn criterion_11_region_comparison() {
    let mut ok = true;
    for (re, im) in [(0.0, 0.0), (2.0, 0.0), (1.0, 1.0)] {
        let cmp = compare_bounds(Complex64::new(re, im)).unwrap();
        ok &= cmp.winner == BoundWinner::LandauSharper;
    }
    for (re, im) in [(-0.99, 0.0), (-1.01, 0.0), (-1.0, 0.05)] {
        let cmp = compare_bounds(Complex64::new(re, im)).unwrap();
        ok &= cmp.winner == BoundWinner::HempelSharper;
    }
    report(
        "criterion 11: Landau sharper at {0, 2, 1+i}; transported bound sharper at {-0.99, -1.01, -1+0.05i}",
        ok,
    );
}

#[test]
fn criterion_12_origin_strictness() {
    let mut ok = true;
    for n in 2..=50u32 {
        let bound = landau_bound(idx(n), Complex64::new(0.0, 0.0)).unwrap();
        let cov = covering_derivative(idx(n)).unwrap();
        ok &= bound > cov;
    }
    report(
        "criterion 12: landau_bound(n, 0) > covering_derivative(n) for all n in [2, 50]",
        ok,
    );
}

#[test]
fn criterion_13_oracle_suite() {
    let args: Vec<String> = vec!["verify".into(), "2".into(), "3".into(), "5".into(), "10".into()];
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = cli::run(&args, &mut out, &mut err);
    let stdout = String::from_utf8(out).unwrap();
    let lines: Vec<&str> = stdout.lines().collect();
    let all_pass = lines.iter().all(|l| l.contains("\"pass\":true"));
    // The catalog must actually cover the derived examples, not be empty.
    let expected_markers = [
        "log_gamma(1/4)",
        "reflection identity residual at z = 0.3+0.7i",
        "2F1 Gauss value",
        "2F1(1,1,2;0.3)",
        "phi1(2, -3) vs ODE",
        "phi2(3, 4) vs ODE",
        "phi1(2, 1/2) vs high-precision series",
        "phi2(2, 1/2) vs high-precision series",
        "covering_derivative(2) vs AGM",
        "k3(2) vs sqrt(pi)/Gamma(1/4)^2",
        "k2/k3 + pi^2/n",
        "8 Gamma(5/4)/Gamma(3/4)",
        "schwarz residual magnitude decreases",
        "landau bound at a0 = 0",
        "hempel-type bound at a0 = 1",
        "lambda_general(2, 1/2) vs double-double assembly",
        "lambda_punctured(2, 0)",
        "density at z = i",
        "gamma_n vs published table row",
        "metric pullback limit at the origin",
        "circle minimum density",
    ];
    let coverage = expected_markers.iter().all(|m| stdout.contains(m));
    report(
        "criterion 13: oracle suite over {2,3,5,10} exits 0 with every derived example passing",
        code == 0 && all_pass && coverage && lines.len() >= 40,
    );
}
