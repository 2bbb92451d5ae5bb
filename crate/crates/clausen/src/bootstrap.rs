//! Full-period Chebyshev machinery for Cl_s, 3 ≤ s ≤ 10.
//!
//! Cl_2 is written on [−π, π] as −x ln x + Σ_{r odd} α_r T_r(x/π); the
//! α_r come from projecting the Cl_2 power series onto Chebyshev
//! polynomials. Repeated definite integration lifts this to higher
//! orders: the T_r part through the coefficient transform of the
//! chebyshev module (a factor π per integration from the x = πt
//! substitution), the −x ln x part through the closed-form lift of
//! x^n(−ln x/n! + α) terms.

use std::f64::consts::PI;
use std::sync::OnceLock;

use crate::chebyshev::ChebSeries;
use crate::cl2;
use crate::constants::zeta;
use crate::{Error, Result};

/// Default coefficient truncation tolerance for the α table.
pub const ALPHA_TOL: f64 = 1e-18;

/// One repeatedly-integrated logarithmic kernel term x^n(−ln x/n! + α).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LogTerm {
    n: u32,
    alpha: f64,
}

impl LogTerm {
    /// The kernel −x ln x that seeds the lift chain.
    pub fn seed() -> LogTerm {
        LogTerm { n: 1, alpha: 0.0 }
    }

    pub fn power(&self) -> u32 {
        self.n
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    /// ∫_0^x of this term: (n, α) ↦ (n+1, (1 + α (n+1)!) / ((n+1)! (n+1))).
    pub fn lift(&self) -> Result<LogTerm> {
        let n1 = self.n + 1;
        if n1 >= 170 {
            return Err(Error::domain("lift_log_term: factorial overflow"));
        }
        let mut fact = 1.0f64; // (n+1)!
        for k in 2..=n1 {
            fact *= k as f64;
        }
        Ok(LogTerm {
            n: n1,
            alpha: (1.0 + self.alpha * fact) / (fact * n1 as f64),
        })
    }

    /// Value x^n(−ln x/n! + α), with x ln x := 0 at x = 0.
    pub fn eval(&self, x: f64) -> f64 {
        if x == 0.0 {
            return 0.0;
        }
        let mut fact = 1.0f64;
        for k in 2..=self.n {
            fact *= k as f64;
        }
        x.powi(self.n as i32) * (-x.ln() / fact + self.alpha)
    }
}

/// The m-fold repeated integral from 0 of −t ln t, evaluated at x ∈ [0, π].
pub fn repeat_log_int(m: u32, x: f64) -> Result<f64> {
    if !(0.0..=PI).contains(&x) {
        return Err(Error::domain(format!(
            "repeat_log_int: x = {x} outside [0, pi]"
        )));
    }
    let mut term = LogTerm::seed();
    for _ in 0..m {
        term = term.lift()?;
    }
    Ok(term.eval(x))
}

/// The α_r coefficients of the full-period Cl_2 expansion, stored as a
/// Chebyshev series with exact zeros at the even indices.
#[derive(Debug, Clone)]
pub struct AlphaTable {
    alphas: ChebSeries,
    r_max: usize,
    tol: f64,
}

impl AlphaTable {
    pub fn series(&self) -> &ChebSeries {
        &self.alphas
    }

    pub fn r_max(&self) -> usize {
        self.r_max
    }

    pub fn tol(&self) -> f64 {
        self.tol
    }
}

/// ζ(j) extended past the stored table; for j > 40 a few leading terms
/// of the defining sum already reach full double precision.
fn zeta_ext(j: u32) -> f64 {
    match zeta(j) {
        Ok(z) => z,
        Err(_) => {
            let j = -(j as i32);
            1.0 + 2f64.powi(j) + 3f64.powi(j) + 4f64.powi(j) + 5f64.powi(j)
        }
    }
}

fn binomial(n: u32, k: u32) -> f64 {
    if k > n {
        return 0.0;
    }
    let k = k.min(n - k);
    let mut acc = 1.0f64;
    for i in 0..k {
        acc = acc * (n - i) as f64 / (i + 1) as f64;
    }
    acc
}

/// α_r for one odd r:
/// α_r/π = δ_{1,r} + Σ_n binom(2n+3, n+(3−r)/2) ζ(2n+2) / ((n+1)(2n+3) 2^{4n+4}),
/// the sum starting at n = max(0, (r−3)/2) and truncated once a term
/// drops below `term_tol` (terms shrink roughly 4× per step).
fn alpha_r(r: u32, term_tol: f64) -> f64 {
    debug_assert!(r % 2 == 1);
    let mut sum = if r == 1 { 1.0 } else { 0.0 };
    let n0 = if r >= 3 { (r - 3) / 2 } else { 0 };
    for n in n0.. {
        let k = (n as i64 + (3 - r as i64) / 2) as u32;
        let term = binomial(2 * n + 3, k) * zeta_ext(2 * n + 2)
            / ((n as f64 + 1.0) * (2.0 * n as f64 + 3.0) * 2f64.powi(4 * n as i32 + 4));
        sum += term;
        if term < term_tol {
            break;
        }
    }
    sum * PI
}

/// Generate the α table at tolerance `tol`: odd r retained while
/// |α_r| ≥ tol · |α_1|.
pub fn compute_alphas(tol: f64) -> Result<AlphaTable> {
    if !(tol > 0.0 && tol <= 1e-12) {
        return Err(Error::domain(format!(
            "compute_alphas: tolerance {tol} outside (0, 1e-12]"
        )));
    }
    let term_tol = tol / 10.0;
    let alpha_1 = alpha_r(1, term_tol);
    let mut coeffs = vec![0.0, alpha_1];
    let mut r_max = 1usize;
    for r in (3u32..200).step_by(2) {
        let a = alpha_r(r, term_tol);
        if a.abs() < tol * alpha_1.abs() {
            break;
        }
        coeffs.push(0.0);
        coeffs.push(a);
        r_max = r as usize;
    }
    Ok(AlphaTable {
        alphas: ChebSeries::new(coeffs)?,
        r_max,
        tol,
    })
}

fn alpha_table() -> &'static AlphaTable {
    static TABLE: OnceLock<AlphaTable> = OnceLock::new();
    TABLE.get_or_init(|| compute_alphas(ALPHA_TOL).expect("alpha generation at default tolerance"))
}

/// Lift the order-2 α series to the Chebyshev part of Cl_s, working on
/// a private copy so the base table is never mutated.
///
/// Each step j → j+1 integrates in t, emits a factor π (dx = π dt),
/// applies the −(−1)^j sign of the integral recurrence, and pins the
/// constant term to Cl_{j+1}(0): ζ(j+1) for odd j+1, zero for even.
pub fn lift_alphas(table: &AlphaTable, target_s: u32) -> Result<ChebSeries> {
    if !(3..=10).contains(&target_s) {
        return Err(Error::domain(format!(
            "lift_alphas: target order {target_s} outside 3..=10"
        )));
    }
    let mut series = table.series().clone();
    for j in 2..target_s {
        let sign = if j % 2 == 0 { -1.0 } else { 1.0 }; // -(-1)^j
        series = series.integrate().scale(PI * sign);
        let next = j + 1;
        if next % 2 == 1 {
            series = series.add_constant(zeta(next)?);
        }
    }
    Ok(series)
}

fn lifted_cache() -> &'static [OnceLock<ChebSeries>; 11] {
    static CACHE: OnceLock<[OnceLock<ChebSeries>; 11]> = OnceLock::new();
    CACHE.get_or_init(|| std::array::from_fn(|_| OnceLock::new()))
}

/// Accumulated sign in front of the lifted log kernel for order s.
fn log_sign(s: u32) -> f64 {
    let mut sigma = 1.0;
    for j in 2..s {
        sigma *= if j % 2 == 0 { -1.0 } else { 1.0 };
    }
    sigma
}

/// Cl_s(x) for 2 ≤ s ≤ 10 and x ∈ [0, π] through the Chebyshev branch.
///
/// s = 2 delegates to the dedicated sub-range series, which needs fewer
/// coefficients near the origin.
pub fn clausen_cheby(s: u32, x: f64) -> Result<f64> {
    if !(2..=10).contains(&s) {
        return Err(Error::domain(format!(
            "clausen_cheby: order {s} outside 2..=10"
        )));
    }
    if !(0.0..=PI).contains(&x) {
        return Err(Error::domain(format!(
            "clausen_cheby: x = {x} outside [0, pi]"
        )));
    }
    if s == 2 {
        return cl2::cl2(x);
    }
    let cell = &lifted_cache()[s as usize];
    if cell.get().is_none() {
        let lifted = lift_alphas(alpha_table(), s)?;
        let _ = cell.set(lifted);
    }
    let series = cell.get().expect("lifted cache populated");
    Ok(log_sign(s) * repeat_log_int(s - 2, x)? + series.eval(x / PI)?)
}
