//! Thin wrappers over `libm` so the rest of the crate stays `no_std`-clean.

pub const TAU: f64 = 2.0 * core::f64::consts::PI;

#[cfg(test)]
pub fn sin(x: f64) -> f64 {
    libm::sin(x)
}

#[cfg(test)]
pub fn cos(x: f64) -> f64 {
    libm::cos(x)
}

#[cfg(test)]
pub fn exp(x: f64) -> f64 {
    libm::exp(x)
}

#[inline]
pub fn sincos(x: f64) -> (f64, f64) {
    libm::sincos(x)
}

#[inline]
pub fn atan2(y: f64, x: f64) -> f64 {
    libm::atan2(y, x)
}

#[inline]
pub fn sqrt(x: f64) -> f64 {
    libm::sqrt(x)
}

#[inline]
pub fn fabs(x: f64) -> f64 {
    libm::fabs(x)
}

#[inline]
pub fn floor(x: f64) -> f64 {
    libm::floor(x)
}

/// Reduce an angle to `[0, 2π)`. The upper boundary folds to `0`.
#[inline]
pub fn wrap_angle(t: f64) -> f64 {
    let mut r = t - TAU * floor(t / TAU);
    if r >= TAU {
        r -= TAU;
    }
    if r < 0.0 {
        r += TAU;
    }
    if r == TAU {
        0.0
    } else {
        r
    }
}

/// Map an angle difference to the representative in `(-π, π]`.
#[inline]
pub fn wrap_symmetric(t: f64) -> f64 {
    let r = wrap_angle(t);
    if r > core::f64::consts::PI {
        r - TAU
    } else {
        r
    }
}
