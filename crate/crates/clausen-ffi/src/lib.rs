//! C ABI over the clausen crate.
//!
//! All functions are pure and thread-safe. Out-of-domain requests
//! (order < 1, non-finite argument, the C_1 pole at x ≡ 0 mod 2π)
//! return NaN, mirroring the Rust API; no error codes are needed.
//!
//! The header `include/clausen.h` is generated by cbindgen at build
//! time.

use std::os::raw::c_int;

/// Clausen function Cl_j(x): the sine sum for even j, the cosine sum
/// for odd j. NaN for j < 1 or non-finite x.
#[no_mangle]
pub extern "C" fn clausen_cl(order: c_int, x: f64) -> f64 {
    clausen::clausen(order, x)
}

/// S_j(x) = sum_{k>=1} sin(k x)/k^j. NaN for j < 1 or non-finite x.
#[no_mangle]
pub extern "C" fn clausen_sin_sum(order: c_int, x: f64) -> f64 {
    clausen::clausen_sin(order, x)
}

/// C_j(x) = sum_{k>=1} cos(k x)/k^j. NaN for j < 1, non-finite x, and
/// for j = 1 when x is a multiple of 2 pi.
#[no_mangle]
pub extern "C" fn clausen_cos_sum(order: c_int, x: f64) -> f64 {
    clausen::clausen_cos(order, x)
}
