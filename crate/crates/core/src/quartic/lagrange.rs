use crate::complex::{real, Complex};
use crate::error::Result;
use crate::poly::{depress_quartic, make_poly, Poly};
use crate::roots::{finish, RootSet, SolveOptions};

use super::{
    assemble_from_gammas, biquadratic, cubic_roots, is_quadruple, require_quartic, signed_gammas,
};

fn coeffs(poly: &Poly) -> [Complex; 4] {
    [poly.coeff(1), poly.coeff(2), poly.coeff(3), poly.coeff(4)]
}

/// `R̃(z) = z³ - cz² + (bd - 4e)z - d² - b²e + 4ce`, whose roots are the pair
/// products `sₖ = αᵢαⱼ + αₖαₗ` of the roots of `f`.
pub fn lagrange_resolvent(poly: &Poly) -> Result<Poly> {
    require_quartic(poly)?;
    let [b, c, d, e] = coeffs(poly);
    make_poly(&[
        real(1.0),
        -c,
        b * d - 4.0 * e,
        -d * d - b * b * e + 4.0 * c * e,
    ])
}

/// `x̃³ - (c/2)x̃² + ((bd - 4e)/4)x̃ + ((4c - b²)e - d²)/8`, with roots `sₖ/2`.
pub fn general_resolvent(poly: &Poly) -> Result<Poly> {
    require_quartic(poly)?;
    let [b, c, d, e] = coeffs(poly);
    make_poly(&[
        real(1.0),
        -c / 2.0,
        (b * d - 4.0 * e) / 4.0,
        ((4.0 * c - b * b) * e - d * d) / 8.0,
    ])
}

/// Solves `R̃(z) = 0` for `s₁, s₂, s₃`, sets `γₖ = √(sₖ - c + b²/4)` with the
/// sign rule `γ₂γ₃γ₄ = -q`, and assembles the roots as in
/// [`solve_fourier`](super::solve_fourier).
pub fn solve_lagrange(poly: &Poly, opts: &SolveOptions) -> Result<RootSet> {
    solve_lagrange_with_s(poly, opts).map(|(rs, _)| rs)
}

/// As [`solve_lagrange`], also returning `s₁, s₂, s₃`.
pub fn solve_lagrange_with_s(poly: &Poly, opts: &SolveOptions) -> Result<(RootSet, [Complex; 3])> {
    let resolvent = lagrange_resolvent(poly)?;
    let form = depress_quartic(poly)?;
    let [b, c, _, _] = coeffs(poly);
    let s = cubic_roots(&resolvent, opts)?;
    let betas = if is_quadruple(poly, &form, opts.zero_tol) {
        [Complex::new(0.0, 0.0); 4]
    } else if form.q == Complex::new(0.0, 0.0) {
        biquadratic(form.p, form.r)
    } else {
        let uvw = s.map(|sk| sk - c + b * b / 4.0);
        assemble_from_gammas(signed_gammas(uvw, form.q))
    };
    let alphas: Vec<Complex> = betas.iter().map(|&y| y - form.shift).collect();
    Ok((finish(poly, &alphas, opts), s))
}
