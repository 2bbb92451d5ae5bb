//! Public entry points and branch selection: argument reduction to
//! [0, π], closed forms for j = 1, polynomial and Chebyshev branches
//! for 2 ≤ j ≤ 10, truncated direct summation for j > 10.
//!
//! Out-of-domain requests (j < 1, non-finite x, and the C_1 pole at
//! x ≡ 0 mod 2π) return NaN instead of an error.

use std::f64::consts::PI;

use crate::bootstrap::clausen_cheby;
use crate::polybranch::{build_poly, eval_poly};
use crate::Kind;

/// 2π split into a high and a low word so that k·2π can be subtracted
/// with an error well below one ulp of the reduced argument.
const TWO_PI_HI: f64 = 6.283185307179586;
const TWO_PI_LO: f64 = 2.449293598294706e-16;

/// Residuals of this size around 0 after reduction are treated as an
/// exact multiple of 2π rather than as a genuine tiny argument.
const REDUCE_SNAP: f64 = 4.0 * f64::EPSILON * TWO_PI_HI;

/// An argument folded into the fundamental interval [0, π].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ReducedArg {
    /// Reduced argument in [0, π].
    pub xr: f64,
    /// ±1; applies to sin-kind values only (folding negates the sine sum).
    pub sign: f64,
}

/// Reduce x modulo 2π into [0, π] using S_j(x) = −S_j(2π−x) resp.
/// C_j(x) = C_j(2π−x). Accuracy degrades for |x| beyond about 1e8.
pub fn reduce(x: f64, kind: Kind) -> ReducedArg {
    let k = (x / TWO_PI_HI).floor();
    let mut xr = if k == 0.0 {
        x // already in [0, 2pi), exact
    } else {
        let r = (x - k * TWO_PI_HI) - k * TWO_PI_LO;
        // residuals this close to 0 or 2pi are reduction rounding of an
        // exact multiple, not a genuine tiny offset
        let snap = REDUCE_SNAP * (1.0 + k.abs());
        if r.abs() < snap || (r - TWO_PI_HI).abs() < snap {
            0.0
        } else if r < 0.0 {
            r + TWO_PI_HI
        } else {
            r
        }
    };
    if xr >= TWO_PI_HI {
        xr = 0.0;
    }
    if xr > PI {
        // fold: 2pi - xr, keeping the low word of 2pi
        let folded = (TWO_PI_HI - xr) + TWO_PI_LO;
        let folded = if folded < 0.0 { 0.0 } else { folded };
        ReducedArg {
            xr: folded,
            sign: match kind {
                Kind::Sin => -1.0,
                Kind::Cos => 1.0,
            },
        }
    } else {
        ReducedArg { xr, sign: 1.0 }
    }
}

/// Number of leading terms whose tail Σ_{k>N} k^(−j) falls below one
/// ulp: N = max(5, ceil((ε(j−1))^(−1/(j−1)))) with ε = 2^−53.
pub fn terms_needed(j: u32) -> u32 {
    debug_assert!(j >= 11);
    let eps = 2f64.powi(-53);
    let jm1 = (j - 1) as f64;
    let n = (eps * jm1).powf(-1.0 / jm1).ceil() as u32;
    n.max(5)
}

/// Truncated partial sum Σ_{k=1}^{N} trig(k xr)/k^j, accumulated from
/// the smallest terms upward.
pub fn direct_sum(kind: Kind, j: u32, xr: f64) -> f64 {
    debug_assert!(j >= 11);
    debug_assert!((0.0..=PI).contains(&xr));
    let n = terms_needed(j);
    let mut sum = 0.0f64;
    for k in (1..=n).rev() {
        let t = match kind {
            Kind::Sin => (k as f64 * xr).sin(),
            Kind::Cos => (k as f64 * xr).cos(),
        };
        sum += t / (k as f64).powi(j as i32);
    }
    sum
}

/// S_j(x) = Σ_{k≥1} sin(kx)/k^j for j ≥ 1; NaN for j < 1 or non-finite x.
///
/// S_1 is the sawtooth (π−x)/2 on (0, 2π); at its discontinuity
/// x ≡ 0 mod 2π the symmetric value 0 is returned.
pub fn clausen_sin(j: i32, x: f64) -> f64 {
    if j < 1 || !x.is_finite() {
        return f64::NAN;
    }
    let j = j as u32;
    let r = reduce(x, Kind::Sin);
    let value = if j == 1 {
        if r.xr == 0.0 {
            return 0.0;
        }
        (PI - r.xr) / 2.0
    } else if j > 10 {
        direct_sum(Kind::Sin, j, r.xr)
    } else if j % 2 == 1 {
        // odd j in 3..=9: exact polynomial
        eval_poly(build_poly(Kind::Sin, j).expect("sin poly branch"), r.xr)
            .expect("reduced argument in range")
    } else {
        // even j in 2..=10: Chebyshev branch (Cl_j)
        clausen_cheby(j, r.xr).expect("reduced argument in range")
    };
    r.sign * value
}

/// C_j(x) = Σ_{k≥1} cos(kx)/k^j for j ≥ 1; NaN for j < 1, non-finite x,
/// and for j = 1 at x ≡ 0 mod 2π where the sum diverges like ζ(1).
pub fn clausen_cos(j: i32, x: f64) -> f64 {
    if j < 1 || !x.is_finite() {
        return f64::NAN;
    }
    let j = j as u32;
    let r = reduce(x, Kind::Cos);
    if j == 1 {
        if r.xr == 0.0 {
            return f64::NAN;
        }
        return -(2.0 * (r.xr / 2.0).sin()).ln();
    }
    if j > 10 {
        direct_sum(Kind::Cos, j, r.xr)
    } else if j % 2 == 0 {
        eval_poly(build_poly(Kind::Cos, j).expect("cos poly branch"), r.xr)
            .expect("reduced argument in range")
    } else {
        clausen_cheby(j, r.xr).expect("reduced argument in range")
    }
}

/// The standard Clausen function Cl_j(x): the sine sum for even j, the
/// cosine sum for odd j.
pub fn clausen(j: i32, x: f64) -> f64 {
    if j < 1 {
        return f64::NAN;
    }
    if j % 2 == 0 {
        clausen_sin(j, x)
    } else {
        clausen_cos(j, x)
    }
}
