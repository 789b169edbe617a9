//! Cubic solution paths.
//!
//! Every path reduces `f(x) = x³ + bx² + cx + d` to the depressed cubic
//! `g(y) = y³ + py + q` with `x = y - b/3`, solves `g`, and shifts back.
//!
//! * [`solve_cardano`]: cube roots of the quadratic-resolvent roots `u³`, `v³`
//!   paired so that `uv = -p/3`.
//! * [`solve_viete`]: the substitution `y = u - p/(3u)`, solved as a quadratic
//!   in `u³`.
//! * [`solve_trig`], [`solve_trig_all`]: real cosine formulas for three real
//!   roots.
//! * [`solve_hyperbolic`]: real cosh/sinh formulas for one real root.
//! * [`solve_double_root_shortcut`]: the `Δ = 0` case.
//!
//! [`classify_real_cubic`] and [`nickalls_params`] describe the real root
//! structure without solving.

mod cardano;
mod nickalls;
mod real;

pub use cardano::{quadratic_resolvent, solve_cardano, solve_viete, CubicIntermediates};
pub use nickalls::{nickalls_params, stationary_values, NickallsParams};
pub use real::{
    classify_real_cubic, hyperbolic_case, solve_double_root_shortcut, solve_hyperbolic, solve_trig,
    solve_trig_all, trig_cos_roots, trig_sin_roots, CubicClassification, CubicKind, HyperbolicCase,
};

use crate::error::{Error, Result};
use crate::poly::{discriminant, Poly};
use crate::roots::{RootSet, SolveOptions};

/// Solves a cubic with the most appropriate closed form: the double-root
/// shortcut for real cubics with `Δ = 0`, Cardano otherwise.
pub fn solve_cubic(poly: &Poly, opts: &SolveOptions) -> Result<RootSet> {
    if poly.degree() != 3 {
        return Err(Error::UnsupportedDegree(poly.degree()));
    }
    if poly.is_real() {
        let delta = discriminant(poly)?.re;
        if delta.abs() <= zero_threshold(poly, opts.zero_tol) {
            return solve_double_root_shortcut(poly, opts);
        }
    }
    solve_cardano(poly, opts).map(|(roots, _)| roots)
}

/// `zero_tol · max(1, |b|, |c|, |d|)⁴`.
pub(crate) fn zero_threshold(poly: &Poly, zero_tol: f64) -> f64 {
    zero_tol * poly.scale().powi(4)
}
