//! Euler Gamma function via the Lanczos approximation (g = 7, 9 terms) with
//! the reflection formula below 1/2.

use std::f64::consts::PI;

use super::dd::DoubleDouble;
use crate::error::{Error, Result};

const LANCZOS_G: f64 = 7.0;
const LANCZOS_COEF: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

/// (n-1)! for n = 1..=23, all exactly representable.
const FACTORIALS: [f64; 23] = [
    1.0,
    1.0,
    2.0,
    6.0,
    24.0,
    120.0,
    720.0,
    5040.0,
    40320.0,
    362880.0,
    3628800.0,
    39916800.0,
    479001600.0,
    6227020800.0,
    87178291200.0,
    1307674368000.0,
    20922789888000.0,
    355687428096000.0,
    6402373705728000.0,
    121645100408832000.0,
    2432902008176640000.0,
    51090942171709440000.0,
    1124000727777607680000.0,
];

/// sin(pi x) with the argument reduced exactly, so that integers give 0.
fn sin_pi(x: f64) -> f64 {
    let n = x.round();
    let r = x - n;
    let s = (PI * r).sin();
    if (n as i64) % 2 == 0 {
        s
    } else {
        -s
    }
}

fn is_nonpositive_integer(x: f64) -> bool {
    x <= 0.0 && x == x.floor()
}

fn lanczos(x: f64) -> f64 {
    // Valid for x >= 0.5.
    let x = x - 1.0;
    let mut a = LANCZOS_COEF[0];
    let t = x + LANCZOS_G + 0.5;
    for (i, c) in LANCZOS_COEF.iter().enumerate().skip(1) {
        a += c / (x + i as f64);
    }
    // Split the power to postpone overflow for large x.
    let half = t.powf(0.5 * (x + 0.5));
    (2.0 * PI).sqrt() * half * (half * (-t).exp()) * a
}

/// Gamma for `x >= 2`: Lanczos on `[1, 2)` times the rising product, the
/// latter accumulated in double-double so large arguments keep full accuracy.
fn gamma_upward(x: f64) -> f64 {
    let n = (x.floor() - 1.0) as usize;
    let f = x - n as f64;
    let mut p = DoubleDouble::ONE;
    for i in 0..n {
        // x - (n - i) is exact
        p = p.mul_f64(x - (n - i) as f64);
        if !p.hi.is_finite() {
            return f64::INFINITY;
        }
    }
    p.mul_f64(lanczos(f)).to_f64()
}

fn gamma_positive(x: f64) -> f64 {
    if x >= 2.0 {
        gamma_upward(x)
    } else {
        lanczos(x)
    }
}

/// Euler Gamma function.
///
/// Returns [`Error::Pole`] at `0, -1, -2, ...`. Overflows to `+inf` above
/// roughly 171.6.
pub fn gamma(x: f64) -> Result<f64> {
    if x.is_nan() {
        return Err(Error::Domain("gamma of NaN".into()));
    }
    if is_nonpositive_integer(x) {
        return Err(Error::Pole(x));
    }
    if x == x.floor() && x >= 1.0 && x <= FACTORIALS.len() as f64 {
        return Ok(FACTORIALS[x as usize - 1]);
    }
    if x < 0.5 {
        // Gamma(x) Gamma(1-x) = pi / sin(pi x)
        Ok(PI / (sin_pi(x) * gamma_positive(1.0 - x)))
    } else {
        Ok(gamma_positive(x))
    }
}

/// Reciprocal Gamma, entire: returns 0 at the poles of Gamma.
pub fn rgamma(x: f64) -> f64 {
    if is_nonpositive_integer(x) {
        return 0.0;
    }
    if x < 0.5 {
        // 1/Gamma(x) = sin(pi x) Gamma(1-x) / pi
        sin_pi(x) * gamma_positive(1.0 - x) / PI
    } else if x == x.floor() && x <= FACTORIALS.len() as f64 {
        1.0 / FACTORIALS[x as usize - 1]
    } else {
        1.0 / gamma_positive(x)
    }
}
