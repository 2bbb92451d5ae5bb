//! Double-precision evaluation of the trigonometric sums
//! C_j(x) = Σ_{k≥1} cos(kx)/k^j and S_j(x) = Σ_{k≥1} sin(kx)/k^j
//! and the standard Clausen functions Cl_j(x) for integer j ≥ 1.
//!
//! Evaluation is split into three branches after reduction of the
//! argument to the fundamental interval [0, π]:
//!
//! * closed forms for j = 1 and truncated direct summation for j > 10,
//! * exact degree-j polynomials for S_j (odd j) and C_j (even j),
//!   2 ≤ j ≤ 10, generated by repeated integration of
//!   C_2(x) = π²/6 − πx/2 + x²/4,
//! * Chebyshev series for Cl_j, 2 ≤ j ≤ 10, bootstrapped by repeated
//!   integration of a full-period expansion of Cl_2 together with a
//!   repeatedly integrated −x ln x kernel.
//!
//! The public entry points are [`clausen`], [`clausen_sin`] and
//! [`clausen_cos`]; out-of-domain requests follow a NaN contract
//! rather than returning errors.

pub mod bootstrap;
pub mod chebyshev;
pub mod cl2;
pub mod constants;
pub mod dispatch;
pub mod oracle;
pub mod polybranch;

pub use dispatch::{clausen, clausen_cos, clausen_sin};

/// Which of the two trigonometric sums a request refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Kind {
    Sin,
    Cos,
}

/// Errors raised by the lower-level building blocks. The public
/// dispatch functions never return these; they map failures to NaN.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}
