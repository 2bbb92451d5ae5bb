//! Exact polynomial representations of S_j (odd j) and C_j (even j)
//! on [0, 2π], built by repeated term-wise integration from
//! C_2(x) = π²/6 − πx/2 + x²/4.

use std::f64::consts::PI;
use std::sync::OnceLock;

use crate::constants::zeta;
use crate::{Error, Kind, Result};

/// A dense power-basis polynomial representing S_j or C_j on [0, 2π].
#[derive(Debug, Clone, PartialEq)]
pub struct Poly {
    coeffs: Vec<f64>,
    order: u32,
    kind: Kind,
}

impl Poly {
    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }
}

const TWO_PI: f64 = 2.0 * PI;
/// Reduction rounding can land a hair above 2π; clamp within this margin.
const TWO_PI_SLACK: f64 = 4.0 * f64::EPSILON * TWO_PI;

fn poly_cache() -> &'static [OnceLock<Poly>; 11] {
    static CACHE: OnceLock<[OnceLock<Poly>; 11]> = OnceLock::new();
    CACHE.get_or_init(|| std::array::from_fn(|_| OnceLock::new()))
}

fn construct(kind: Kind, j: u32) -> Result<Poly> {
    // C_2 base case, then alternate
    //   S_{m+1}(x) =             int_0^x C_m(t) dt
    //   C_{m+2}(x) = zeta(m+2) - int_0^x S_{m+1}(t) dt
    // (the sign flip comes from integrating sin into -cos).
    let mut coeffs = vec![zeta(2)?, -PI / 2.0, 0.25];
    let mut cur_order = 2u32;
    let mut cur_kind = Kind::Cos;
    while cur_order < j {
        let mut next = vec![0.0f64; coeffs.len() + 1];
        for (m, &a) in coeffs.iter().enumerate() {
            next[m + 1] = a / (m as f64 + 1.0);
        }
        cur_order += 1;
        match cur_kind {
            Kind::Cos => {
                cur_kind = Kind::Sin; // S_{m+1}(0) = 0, no constant
            }
            Kind::Sin => {
                for a in next.iter_mut() {
                    *a = -*a;
                }
                next[0] = zeta(cur_order)?;
                cur_kind = Kind::Cos;
            }
        }
        coeffs = next;
    }
    debug_assert_eq!(cur_kind, kind);
    Ok(Poly {
        coeffs,
        order: j,
        kind,
    })
}

/// The polynomial for (kind, j); built once and cached.
///
/// Valid requests are (Cos, even j) with 2 ≤ j ≤ 10 and (Sin, odd j)
/// with 3 ≤ j ≤ 9; everything else belongs to another branch.
pub fn build_poly(kind: Kind, j: u32) -> Result<&'static Poly> {
    let ok = match kind {
        Kind::Cos => j % 2 == 0 && (2..=10).contains(&j),
        Kind::Sin => j % 2 == 1 && (3..=9).contains(&j),
    };
    if !ok {
        return Err(Error::domain(format!(
            "build_poly: no polynomial branch for ({kind:?}, {j})"
        )));
    }
    let cell = &poly_cache()[j as usize];
    // construction is idempotent, so a race just rebuilds the same value
    if cell.get().is_none() {
        let p = construct(kind, j)?;
        let _ = cell.set(p);
    }
    Ok(cell.get().expect("poly cache populated"))
}

/// Horner evaluation of the polynomial at x ∈ [0, 2π].
pub fn eval_poly(p: &Poly, x: f64) -> Result<f64> {
    if !(0.0..=TWO_PI + TWO_PI_SLACK).contains(&x) {
        return Err(Error::domain(format!(
            "eval_poly: x = {x} outside [0, 2*pi]"
        )));
    }
    let x = x.min(TWO_PI);
    let mut acc = 0.0f64;
    for &a in p.coeffs.iter().rev() {
        acc = acc * x + a;
    }
    Ok(acc)
}
