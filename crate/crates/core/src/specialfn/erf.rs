//! Error functions. `erf`/`erfc` are the musl implementations from `libm`;
//! `erfcx` is the exponentially scaled complement used where `erfc` underflows.

use std::f64::consts::PI;

pub fn erf(x: f64) -> f64 {
    libm::erf(x)
}

pub fn erfc(x: f64) -> f64 {
    libm::erfc(x)
}

/// Scaled complementary error function `exp(x^2) erfc(x)`.
pub fn erfcx(x: f64) -> f64 {
    if x < 25.0 {
        return (x * x).exp() * erfc(x);
    }
    // Laplace continued fraction, evaluated bottom-up.
    let mut tail = x;
    for k in (1..=40).rev() {
        tail = x + (k as f64 / 2.0) / tail;
    }
    1.0 / (PI.sqrt() * tail)
}
