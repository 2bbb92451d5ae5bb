//! Acceptance suite: one test per release criterion, each printing a
//! PASS line on success. Run with
//!   cargo test -p clausen --test acceptance -- --nocapture

use std::f64::consts::PI;

use clausen::bootstrap::{compute_alphas, repeat_log_int, ALPHA_TOL};
use clausen::dispatch::{direct_sum, reduce, terms_needed};
use clausen::oracle::{oracle_cl2, oracle_sum_with, KahanSum, OracleConfig};
use clausen::{clausen, clausen_cos, clausen_sin, Kind};
use rayon::prelude::*;

const TWO_PI: f64 = 2.0 * PI;

/// Golden-ratio low-discrepancy sequence on (lo, hi).
fn ld_points(n: usize, lo: f64, hi: f64) -> Vec<f64> {
    let inv_phi = 0.618_033_988_749_894_9_f64;
    (1..=n)
        .map(|i| lo + (i as f64 * inv_phi).fract() * (hi - lo))
        .collect()
}

/// Brute-force terms count giving a tail below 1e-14, within the
/// configured oracle bounds.
fn oracle_terms(j: u32) -> usize {
    let n = (1e-14 * (j as f64 - 1.0)).powf(-1.0 / (j as f64 - 1.0));
    (n.ceil() as usize).clamp(100_000, 5_000_000)
}

#[test]
fn criterion_1_oracle_agreement_sweep() {
    // j in 3..=15, both kinds, 100 low-discrepancy points
    let points = ld_points(100, 1e-3, TWO_PI - 1e-3);
    for j in 3..=15u32 {
        let cfg = OracleConfig {
            sum_terms: oracle_terms(j),
            quad_tol: 1e-15,
        };
        for kind in [Kind::Sin, Kind::Cos] {
            let worst = points
                .par_iter()
                .map(|&x| {
                    let lib = match kind {
                        Kind::Sin => clausen_sin(j as i32, x),
                        Kind::Cos => clausen_cos(j as i32, x),
                    };
                    let reference = oracle_sum_with(kind, j, x, &cfg).unwrap().value;
                    (lib - reference).abs()
                })
                .reduce(|| 0.0, f64::max);
            assert!(worst <= 1e-12, "({kind:?}, {j}): worst residual {worst:e}");
        }
    }
    // (sin, 2) against the quadrature oracle at 500 points
    let worst = ld_points(500, 1e-3, TWO_PI - 1e-3)
        .par_iter()
        .map(|&x| (clausen_sin(2, x) - oracle_cl2(x).unwrap()).abs())
        .reduce(|| 0.0, f64::max);
    assert!(worst <= 1e-13, "(sin, 2): worst residual {worst:e}");
    // (cos, 2) against direct Horner evaluation of the exact quadratic
    for &x in &points {
        let horner = (0.25 * x - PI / 2.0) * x + PI * PI / 6.0;
        let lib = clausen_cos(2, x);
        // two-ulp budget on the Horner error model (sum of term magnitudes)
        let scale = 0.25 * x * x + PI / 2.0 * x + PI * PI / 6.0;
        assert!(
            (lib - horner).abs() <= 2.0 * f64::EPSILON * scale,
            "(cos, 2) at {x}: {lib} vs {horner}"
        );
    }
    println!("criterion 1 (oracle agreement sweep): PASS");
}

#[test]
fn criterion_2_golden_values() {
    assert!((clausen(2, PI / 2.0) - 0.915965594177219).abs() <= 1e-13);
    assert!((clausen(3, 0.0) - 1.2020569031595943).abs() <= 1e-14);
    let c1 = clausen_cos(1, PI);
    let want = -std::f64::consts::LN_2;
    assert!((c1 - want).abs() <= f64::EPSILON * want.abs());
    for (m, want) in [(1u32, 0.25), (2, 5.0 / 36.0), (3, 13.0 / 288.0)] {
        assert!((repeat_log_int(m, 1.0).unwrap() - want).abs() <= 1e-15, "m = {m}");
    }
    println!("criterion 2 (golden values): PASS");
}

#[test]
fn criterion_3_dual_representation() {
    let table = compute_alphas(ALPHA_TOL).unwrap();
    let series = table.series();
    let mut worst = 0.0f64;
    for i in 0..=1000 {
        let x = PI * i as f64 / 1000.0;
        let log_part = if x == 0.0 { 0.0 } else { -x * x.ln() };
        let recon = log_part + series.eval(x / PI).unwrap();
        let direct = clausen::cl2::cl2(x).unwrap();
        worst = worst.max((recon - direct).abs());
    }
    assert!(worst <= 2e-15, "worst dual-representation residual {worst:e}");
    println!("criterion 3 (dual Cl_2 representation): PASS");
}

#[test]
fn criterion_4_multiplication_identity() {
    // f_j(2x) = 2^(j-1) [f_j(x) + f_j(x + pi)]
    let points = ld_points(100, 1e-3, TWO_PI - 1e-3);
    for j in 2..=12i32 {
        let scale = 2f64.powi(j - 1);
        for &x in &points {
            let s = scale * (clausen_sin(j, x) + clausen_sin(j, x + PI));
            let s2 = clausen_sin(j, 2.0 * x);
            let mag = s.abs() + s2.abs() + 1.0;
            assert!((s2 - s).abs() <= 1e-11 * mag, "S_{j}({x})");
            let c = scale * (clausen_cos(j, x) + clausen_cos(j, x + PI));
            let c2 = clausen_cos(j, 2.0 * x);
            let mag = c.abs() + c2.abs() + 1.0;
            assert!((c2 - c).abs() <= 1e-11 * mag, "C_{j}({x})");
        }
    }
    println!("criterion 4 (multiplication identity): PASS");
}

#[test]
fn criterion_5_derivative_ladder() {
    // d/dx Cl_{j+1}(x) = -(-1)^j Cl_j(x)
    let h = 1e-5;
    let points = ld_points(20, 0.2, PI - 0.2);
    for j in 2..=9i32 {
        let sign = if j % 2 == 0 { -1.0 } else { 1.0 };
        for &x in &points {
            let d = (clausen(j + 1, x + h) - clausen(j + 1, x - h)) / (2.0 * h);
            let want = sign * clausen(j, x);
            assert!(
                (d - want).abs() <= 1e-6 * want.abs().max(1.0),
                "j = {j}, x = {x}: {d} vs {want}"
            );
        }
    }
    println!("criterion 5 (derivative ladder): PASS");
}

#[test]
fn criterion_6_branch_seam() {
    // j = 10 (last Chebyshev/polynomial order) against a 10^6-term sum
    let cfg = OracleConfig {
        sum_terms: 1_000_000,
        quad_tol: 1e-15,
    };
    for &x in &ld_points(20, 1e-3, TWO_PI - 1e-3) {
        let s = clausen_sin(10, x);
        let s_ref = oracle_sum_with(Kind::Sin, 10, x, &cfg).unwrap().value;
        assert!((s - s_ref).abs() <= 1e-12, "S_10({x})");
        let c = clausen_cos(10, x);
        let c_ref = oracle_sum_with(Kind::Cos, 10, x, &cfg).unwrap().value;
        assert!((c - c_ref).abs() <= 1e-12, "C_10({x})");
    }
    // j = 11 production direct sum against a 10x longer compensated sum
    let n_long = 10 * terms_needed(11);
    let tol = 2f64.powi(-50);
    for &x in &ld_points(20, 1e-3, TWO_PI - 1e-3) {
        for kind in [Kind::Sin, Kind::Cos] {
            let r = reduce(x, kind);
            let prod = direct_sum(kind, 11, r.xr);
            let mut acc = KahanSum::default();
            for k in (1..=n_long).rev() {
                let t = match kind {
                    Kind::Sin => (k as f64 * r.xr).sin(),
                    Kind::Cos => (k as f64 * r.xr).cos(),
                };
                acc.add(t / (k as f64).powi(11));
            }
            assert!(
                (prod - acc.value()).abs() <= tol,
                "{kind:?} j=11 at {x}: {prod} vs {}",
                acc.value()
            );
        }
    }
    println!("criterion 6 (branch seam): PASS");
}

#[test]
fn criterion_7_contract_suite() {
    let points = ld_points(40, 0.1, 6.1);
    // periodicity for shifts up to 200 pi
    for n in [1.0f64, 10.0, 100.0] {
        for j in 1..=15i32 {
            for &x in &points {
                let shift = x + n * TWO_PI;
                assert!(
                    (clausen_sin(j, shift) - clausen_sin(j, x)).abs() <= 1e-11,
                    "S_{j} period at {x} + {n} 2pi"
                );
                if j != 1 || x.min((TWO_PI - x).abs()) > 0.05 {
                    assert!(
                        (clausen_cos(j, shift) - clausen_cos(j, x)).abs() <= 1e-11,
                        "C_{j} period at {x} + {n} 2pi"
                    );
                }
            }
        }
    }
    // fold symmetries
    for j in 1..=15i32 {
        for &x in &ld_points(40, 0.05, PI - 0.05) {
            assert!(
                (clausen_sin(j, TWO_PI - x) + clausen_sin(j, x)).abs() <= 1e-12,
                "S_{j} fold at {x}"
            );
            assert!(
                (clausen_cos(j, TWO_PI - x) - clausen_cos(j, x)).abs() <= 1e-12,
                "C_{j} fold at {x}"
            );
        }
    }
    // NaN cases, exactly these
    assert!(clausen_sin(0, 1.0).is_nan());
    assert!(clausen_cos(0, 1.0).is_nan());
    assert!(clausen(-1, 1.0).is_nan());
    assert!(clausen_sin(3, f64::NAN).is_nan());
    assert!(clausen_cos(3, f64::INFINITY).is_nan());
    assert!(clausen_cos(1, 0.0).is_nan());
    assert!(clausen_cos(1, TWO_PI).is_nan());
    assert!(clausen_cos(1, -TWO_PI).is_nan());
    assert!(!clausen_cos(1, PI).is_nan());
    for j in 1..=40i32 {
        for &x in &points {
            assert!(!clausen_sin(j, x).is_nan(), "spurious NaN S_{j}({x})");
            assert!(!clausen_cos(j, x).is_nan(), "spurious NaN C_{j}({x})");
        }
    }
    // endpoint values
    for j in 1..=15i32 {
        assert_eq!(clausen_sin(j, 0.0), 0.0, "S_{j}(0)");
    }
    for j in [2u32, 4, 6, 8, 10] {
        let z = clausen::constants::zeta(j).unwrap();
        let got = clausen_cos(j as i32, 0.0);
        assert!((got - z).abs() <= 2.0 * f64::EPSILON * z, "C_{j}(0)");
    }
    println!("criterion 7 (contract suite): PASS");
}

#[test]
fn criterion_8_cli_golden_tables() {
    let exe = env!("CARGO_BIN_EXE_clausen");
    let cases = [
        ("sin", "2", "golden/table_sin2.csv"),
        ("cos", "4", "golden/table_cos4.csv"),
    ];
    for (kind, order, golden) in cases {
        let out = std::process::Command::new(exe)
            .args([
                "table", "--kind", kind, "--order", order, "--from", "0", "--to",
                "6.283185307179586", "--steps", "64",
            ])
            .output()
            .expect("run clausen binary");
        assert!(out.status.success());
        let path = std::path::Path::new(env!("CARGO_MANIFEST_DIR"))
            .join("tests")
            .join(golden);
        let want = std::fs::read(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
        assert_eq!(
            out.stdout,
            want,
            "CLI table ({kind}, {order}) differs from {golden}"
        );
    }
    println!("criterion 8 (CLI golden tables): PASS");
}
