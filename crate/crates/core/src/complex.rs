//! Complex scalar helpers.
//!
//! All roots and intermediates are `Complex64`. The square and cube roots
//! here are the principal branches with a fixed convention for signed zeros:
//! an imaginary part of `-0.0` is treated as `+0.0`, so the negative real
//! axis always maps to the upper half plane.

pub use num_complex::Complex64 as Complex;

use std::f64::consts::PI;

/// `ω = exp(2πi/3)`, a primitive third root of unity.
pub const OMEGA: Complex = Complex {
    re: -0.5,
    im: 0.866_025_403_784_438_6,
};

/// `ω² = conj(ω)`.
pub const OMEGA2: Complex = Complex {
    re: -0.5,
    im: -0.866_025_403_784_438_6,
};

#[inline]
pub fn c(re: f64, im: f64) -> Complex {
    Complex::new(re, im)
}

#[inline]
pub fn real(re: f64) -> Complex {
    Complex::new(re, 0.0)
}

#[inline]
fn canonical_zero(z: Complex) -> Complex {
    // collapses -0.0 to +0.0 on both components
    Complex::new(z.re + 0.0, z.im + 0.0)
}

/// Principal square root, `Re ≥ 0`, with the branch cut approached from above.
pub fn principal_sqrt(z: Complex) -> Complex {
    let z = canonical_zero(z);
    if z.im == 0.0 {
        return if z.re >= 0.0 {
            real(z.re.sqrt())
        } else {
            c(0.0, (-z.re).sqrt())
        };
    }
    let m = z.norm();
    // stable half-angle form; avoids cancellation in (m - re)
    if z.re >= 0.0 {
        let t = (0.5 * (m + z.re)).sqrt();
        c(t, z.im / (2.0 * t))
    } else {
        let t = (0.5 * (m - z.re)).sqrt();
        c(z.im.abs() / (2.0 * t), t.copysign(z.im))
    }
}

/// Principal cube root, `arg ∈ (-π/3, π/3]`.
pub fn principal_cbrt(z: Complex) -> Complex {
    let z = canonical_zero(z);
    if z.re == 0.0 && z.im == 0.0 {
        return Complex::new(0.0, 0.0);
    }
    if z.im == 0.0 && z.re > 0.0 {
        return real(z.re.cbrt());
    }
    let r = z.norm().cbrt();
    let theta = if z.im == 0.0 { PI } else { z.im.atan2(z.re) };
    Complex::from_polar(r, theta / 3.0)
}

/// `true` when both components are finite.
#[inline]
pub fn is_finite(z: Complex) -> bool {
    z.re.is_finite() && z.im.is_finite()
}

/// Total order used for sorting root lists: by real part, then imaginary.
pub fn lex_cmp(a: &Complex, b: &Complex) -> std::cmp::Ordering {
    a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im))
}
