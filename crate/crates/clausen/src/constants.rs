//! Precomputed Riemann zeta values ζ(j) for 2 ≤ j ≤ 40 and Bernoulli
//! number magnitudes |B_2n| for 2 ≤ 2n ≤ 60.
//!
//! The tables were generated offline: the Bernoulli numbers from the
//! exact rational recurrence Σ_{k=0}^{m} binom(m+1,k) B_k = 0, the zeta
//! values by direct summation with an Euler–Maclaurin tail correction,
//! both rounded to nearest double. Nothing is computed at runtime.

use crate::{Error, Result};

/// ζ(j) for j = 2, 3, ..., 40.
static ZETA: [f64; 39] = [
    1.6449340668482264,  // zeta(2) = pi^2/6
    1.2020569031595942,  // zeta(3)
    1.0823232337111381,  // zeta(4) = pi^4/90
    1.03692775514337,    // zeta(5)
    1.0173430619844492,  // zeta(6)
    1.008349277381923,   // zeta(7)
    1.0040773561979444,  // zeta(8)
    1.0020083928260821,  // zeta(9)
    1.000994575127818,   // zeta(10)
    1.0004941886041194,  // zeta(11)
    1.000246086553308,   // zeta(12)
    1.0001227133475785,  // zeta(13)
    1.0000612481350588,  // zeta(14)
    1.000030588236307,   // zeta(15)
    1.0000152822594086,  // zeta(16)
    1.0000076371976379,  // zeta(17)
    1.000003817293265,   // zeta(18)
    1.0000019082127165,  // zeta(19)
    1.0000009539620338,  // zeta(20)
    1.0000004769329869,  // zeta(21)
    1.0000002384505027,  // zeta(22)
    1.000000119219926,   // zeta(23)
    1.000000059608189,   // zeta(24)
    1.0000000298035034,  // zeta(25)
    1.0000000149015549,  // zeta(26)
    1.0000000074507118,  // zeta(27)
    1.000000003725334,   // zeta(28)
    1.0000000018626598,  // zeta(29)
    1.0000000009313275,  // zeta(30)
    1.0000000004656628,  // zeta(31)
    1.000000000232831,   // zeta(32)
    1.0000000001164155,  // zeta(33)
    1.0000000000582077,  // zeta(34)
    1.0000000000291038,  // zeta(35)
    1.000000000014552,   // zeta(36)
    1.000000000007276,   // zeta(37)
    1.000000000003638,   // zeta(38)
    1.000000000001819,   // zeta(39)
    1.0000000000009095,  // zeta(40)
];

/// |B_2n| for 2n = 2, 4, ..., 60.
static BERN_ABS: [f64; 30] = [
    0.16666666666666666,     // |B_2|  = 1/6
    0.03333333333333333,     // |B_4|  = 1/30
    0.023809523809523808,    // |B_6|  = 1/42
    0.03333333333333333,     // |B_8|  = 1/30
    0.07575757575757576,     // |B_10| = 5/66
    0.2531135531135531,      // |B_12| = 691/2730
    1.1666666666666667,      // |B_14| = 7/6
    7.092156862745098,       // |B_16| = 3617/510
    54.971177944862156,      // |B_18| = 43867/798
    529.1242424242424,       // |B_20| = 174611/330
    6192.123188405797,       // |B_22| = 854513/138
    86580.25311355312,       // |B_24|
    1425517.1666666667,      // |B_26|
    27298231.067816094,      // |B_28|
    601580873.9006424,       // |B_30|
    15116315767.092157,      // |B_32|
    429614643061.1667,       // |B_34|
    13711655205088.332,      // |B_36|
    488332318973593.2,       // |B_38|
    1.9296579341940068e16,   // |B_40|
    8.416930475736826e17,    // |B_42|
    4.0338071854059454e19,   // |B_44|
    2.1150748638081993e21,   // |B_46|
    1.2086626522296526e23,   // |B_48|
    7.500866746076964e24,    // |B_50|
    5.038778101481069e26,    // |B_52|
    3.6528776484818122e28,   // |B_54|
    2.849876930245088e30,    // |B_56|
    2.3865427499683627e32,   // |B_58|
    2.1399949257225335e34,   // |B_60|
];

/// Highest order stored in the zeta table.
pub const ZETA_MAX: u32 = 40;
/// Highest even index stored in the Bernoulli table.
pub const BERN_MAX: u32 = 60;

/// ζ(j) for integer 2 ≤ j ≤ 40, accurate to the nearest double.
pub fn zeta(j: u32) -> Result<f64> {
    if !(2..=ZETA_MAX).contains(&j) {
        return Err(Error::domain(format!("zeta: order {j} outside 2..=40")));
    }
    Ok(ZETA[(j - 2) as usize])
}

/// |B_m| for even 2 ≤ m ≤ 60.
pub fn bernoulli_abs(m: u32) -> Result<f64> {
    if m % 2 != 0 || !(2..=BERN_MAX).contains(&m) {
        return Err(Error::domain(format!(
            "bernoulli_abs: index {m} not even in 2..=60"
        )));
    }
    Ok(BERN_ABS[(m / 2 - 1) as usize])
}
