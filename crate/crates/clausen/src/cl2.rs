//! Cl_2(x) on the reduced interval [0, π] from its two power series:
//! the x − x ln x series around the origin and the (π − x) series
//! around π, split at π/2.

use std::f64::consts::{FRAC_PI_2, PI};
use std::sync::OnceLock;

use crate::constants::bernoulli_abs;
use crate::{Error, Result};

/// Coefficient-level truncation target at the worst-case argument.
const TRUNC_TOL: f64 = 1e-18;

/// Precomputed series weights for the two half-intervals.
#[derive(Debug)]
pub struct Cl2Kernel {
    /// g_n = |B_{2n+2}| / (2 (n+1) (2n+3)!), weights of the x^(2n+3) series.
    inner: Vec<f64>,
    /// h_n = (2^{2n} − 1)|B_{2n}| / (2n (2n+1)!), weights of the (π−x)^{2n}
    /// series; h_0 is unused and stored as 0 so the index matches n.
    outer: Vec<f64>,
}

impl Cl2Kernel {
    fn build() -> Result<Cl2Kernel> {
        // inner: keep terms while the bound g_n (pi/2)^(2n+3) >= tol
        let mut inner = Vec::new();
        let mut fact = 6.0f64; // (2n+3)! at n = 0
        for n in 0u32.. {
            let m = 2 * n + 2;
            let g = bernoulli_abs(m)? / (2.0 * (n as f64 + 1.0) * fact);
            if g * FRAC_PI_2.powi(2 * n as i32 + 3) < TRUNC_TOL {
                break;
            }
            inner.push(g);
            // advance to (2n+5)!
            fact *= (2 * n + 4) as f64 * (2 * n + 5) as f64;
        }
        // outer: keep terms while h_n (pi/2)^(2n) * (pi/2) >= tol
        let mut outer = vec![0.0];
        let mut fact = 6.0f64; // (2n+1)! at n = 1
        for n in 1u32.. {
            let h = (4f64.powi(n as i32) - 1.0) * bernoulli_abs(2 * n)?
                / (2.0 * n as f64 * fact);
            if h * FRAC_PI_2.powi(2 * n as i32 + 1) < TRUNC_TOL {
                break;
            }
            outer.push(h);
            fact *= (2 * n + 2) as f64 * (2 * n + 3) as f64;
        }
        Ok(Cl2Kernel { inner, outer })
    }

    pub fn get() -> &'static Cl2Kernel {
        static KERNEL: OnceLock<Cl2Kernel> = OnceLock::new();
        KERNEL.get_or_init(|| Cl2Kernel::build().expect("Bernoulli table covers Cl2 truncation"))
    }

    pub fn inner_coeffs(&self) -> &[f64] {
        &self.inner
    }

    pub fn outer_coeffs(&self) -> &[f64] {
        &self.outer
    }
}

/// Cl_2(x) = Σ sin(kx)/k² for x ∈ [0, π].
pub fn cl2(x: f64) -> Result<f64> {
    if !(0.0..=PI).contains(&x) {
        return Err(Error::domain(format!("cl2: x = {x} outside [0, pi]")));
    }
    let k = Cl2Kernel::get();
    if x <= FRAC_PI_2 {
        // x - x ln x + x^3 sum g_n x^(2n), with x ln x := 0 at x = 0
        let xlnx = if x == 0.0 { 0.0 } else { x * x.ln() };
        let x2 = x * x;
        let mut sum = 0.0f64;
        for &g in k.inner.iter().rev() {
            sum = sum * x2 + g;
        }
        Ok(x - xlnx + x * x2 * sum)
    } else {
        // (pi - x) [ln 2 - sum_{n>=1} h_n (pi - x)^(2n)]
        let u = PI - x;
        let u2 = u * u;
        let mut sum = 0.0f64;
        for &h in k.outer.iter().skip(1).rev() {
            sum = sum * u2 + h;
        }
        Ok(u * (std::f64::consts::LN_2 - u2 * sum))
    }
}
