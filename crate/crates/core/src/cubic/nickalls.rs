//! Geometric parameters of a cubic's graph: the stationary-point offset `δ`
//! and half-height `h`, with `Δ = 27(h² - q²)`.

use crate::complex::{principal_sqrt, real, Complex};
use crate::error::Result;
use crate::poly::{depress_cubic, Poly};

use super::real::CubicKind;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NickallsParams {
    /// `δ = √(-p/3)`; real for `p ≤ 0`, imaginary for `p > 0`.
    pub delta_g: Complex,
    /// `h = 2δ³`.
    pub h: Complex,
    /// `-b/3`, abscissa of the inflection point.
    pub inflection_x: f64,
    /// `q`, ordinate of the inflection point.
    pub inflection_y: f64,
    q: Complex,
}

impl NickallsParams {
    /// `27(h² - q²)`, equal to the discriminant.
    pub fn discriminant(&self) -> Complex {
        27.0 * (self.h * self.h - self.q * self.q)
    }

    /// `true` when `δ` is real, i.e. the cubic has real stationary points.
    pub fn has_real_stationary_points(&self) -> bool {
        self.delta_g.im == 0.0
    }

    /// Root structure read off the sign of `h² - q²` (real cubics only).
    pub fn kind(&self, zero_tol: f64) -> CubicKind {
        let diff = (self.h * self.h - self.q * self.q).re;
        let scale = 1.0 + (self.h * self.h).norm().max((self.q * self.q).norm());
        if diff.abs() <= zero_tol * scale {
            if self.delta_g.norm() <= zero_tol && self.q.norm() <= zero_tol {
                CubicKind::TripleReal
            } else {
                CubicKind::DoubleAndSimpleReal
            }
        } else if diff > 0.0 {
            CubicKind::ThreeSimpleReal
        } else {
            CubicKind::OneRealTwoComplexConjugate
        }
    }
}

/// Computes `δ`, `h` and the inflection point of a cubic.
pub fn nickalls_params(poly: &Poly) -> Result<NickallsParams> {
    let form = depress_cubic(poly)?;
    let delta_g = principal_sqrt(-form.p / 3.0);
    Ok(NickallsParams {
        delta_g,
        h: 2.0 * delta_g * delta_g * delta_g,
        inflection_x: -form.shift.re,
        inflection_y: form.q.re,
        q: form.q,
    })
}

/// `f(-b/3 ± δ)` for the two stationary points, in that order.
pub fn stationary_values(poly: &Poly, params: &NickallsParams) -> (Complex, Complex) {
    let x0 = real(params.inflection_x);
    (
        poly.eval(x0 + params.delta_g),
        poly.eval(x0 - params.delta_g),
    )
}
