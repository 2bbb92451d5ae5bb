//! Chebyshev series container, backward-recurrence evaluation and the
//! definite-integration coefficient transform.
//!
//! Convention: the series value is Σ_r c_r T_r(t) with a FULL-WEIGHT
//! leading coefficient -- c_0 is not halved, unlike most classical
//! tables. This keeps the constant-term bookkeeping of the integration
//! transform and of `add_constant` literal.

use crate::{Error, Result};

/// Slack on |t| beyond 1 absorbed by clamping; covers argument-reduction
/// rounding at interval endpoints.
const T_SLACK: f64 = 1e-12;

/// A truncated Chebyshev series over the scaled argument t ∈ [−1, 1].
#[derive(Debug, Clone, PartialEq)]
pub struct ChebSeries {
    coeffs: Vec<f64>,
}

impl ChebSeries {
    pub fn new(coeffs: Vec<f64>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::domain("ChebSeries: empty coefficient vector"));
        }
        if coeffs.iter().any(|c| !c.is_finite()) {
            return Err(Error::domain("ChebSeries: non-finite coefficient"));
        }
        Ok(ChebSeries { coeffs })
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        false // length >= 1 by construction
    }

    /// Evaluate Σ_r c_r T_r(t) by the backward recurrence
    /// T_{n+1} = 2t T_n − T_{n−1}, gathering the high-index terms first.
    pub fn eval(&self, t: f64) -> Result<f64> {
        if t.abs() > 1.0 + T_SLACK {
            return Err(Error::domain(format!("eval_cheby: |t| = {} > 1", t.abs())));
        }
        let t = t.clamp(-1.0, 1.0);
        let two_t = 2.0 * t;
        let mut b1 = 0.0f64;
        let mut b2 = 0.0f64;
        for &c in self.coeffs.iter().skip(1).rev() {
            let b0 = two_t * b1 - b2 + c;
            b2 = b1;
            b1 = b0;
        }
        Ok(t * b1 - b2 + self.coeffs[0])
    }

    /// Coefficients of t ↦ ∫_0^t p(u) du in the same scaled variable.
    ///
    /// Per-coefficient transform of the definite integrals of T_n from 0:
    /// even n contributes to indices n±1 only, odd n ≥ 3 additionally
    /// contributes the constant (−1)^((n−1)/2) n/(n²−1), and n = 1 maps to
    /// T_2/4 + 1/4. No π factor is applied here; the caller owns the
    /// substitution x = πt.
    pub fn integrate(&self) -> ChebSeries {
        let n_in = self.coeffs.len();
        let mut out = vec![0.0f64; n_in + 1];
        for (n, &c) in self.coeffs.iter().enumerate() {
            if c == 0.0 {
                continue;
            }
            match n {
                0 => {
                    // T_1/2 - T_1/(2 * (0-1)) = T_1
                    out[1] += c;
                }
                1 => {
                    out[2] += c / 4.0;
                    out[0] += c / 4.0;
                }
                n if n % 2 == 0 => {
                    out[n + 1] += c / (2.0 * (n as f64 + 1.0));
                    out[n - 1] -= c / (2.0 * (n as f64 - 1.0));
                }
                n => {
                    // odd n >= 3
                    out[n + 1] += c / (2.0 * (n as f64 + 1.0));
                    out[n - 1] -= c / (2.0 * (n as f64 - 1.0));
                    let sign = if (n - 1) / 2 % 2 == 0 { 1.0 } else { -1.0 };
                    out[0] += sign * n as f64 / ((n * n - 1) as f64) * c;
                }
            }
        }
        ChebSeries { coeffs: out }
    }

    /// Shift the series value by `c` at every t.
    pub fn add_constant(&self, c: f64) -> ChebSeries {
        let mut coeffs = self.coeffs.clone();
        coeffs[0] += c;
        ChebSeries { coeffs }
    }

    /// Multiply every coefficient by `s`.
    pub fn scale(&self, s: f64) -> ChebSeries {
        ChebSeries {
            coeffs: self.coeffs.iter().map(|c| c * s).collect(),
        }
    }
}
