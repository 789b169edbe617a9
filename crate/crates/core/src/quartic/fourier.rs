use crate::complex::{principal_sqrt, real, Complex};
use crate::error::Result;
use crate::poly::{depress_quartic, make_poly, Poly};
use crate::roots::{finish, RootSet, SolveOptions};

use super::{
    assemble_from_gammas, biquadratic, cubic_resolvent, cubic_roots, is_quadruple, require_quartic,
    signed_gammas, QuarticIntermediates,
};

/// Roots of a quartic from the three resolvent roots.
///
/// `γₖ = √uₖ` with signs chosen so `γ₂γ₃γ₄ = -q`, then
/// `β₁ = ½(γ₂+γ₃+γ₄)`, `β₂ = ½(γ₂-γ₃-γ₄)`, `β₃ = ½(-γ₂+γ₃-γ₄)`,
/// `β₄ = ½(-γ₂-γ₃+γ₄)` and `αᵢ = βᵢ - b/4`. When `q = 0` the quartic is
/// solved as a quadratic in `y²`.
pub fn solve_fourier(poly: &Poly, opts: &SolveOptions) -> Result<(RootSet, QuarticIntermediates)> {
    require_quartic(poly)?;
    let form = depress_quartic(poly)?;
    let resolvent = cubic_resolvent(form.p, form.q, form.r);
    let zero = Complex::new(0.0, 0.0);

    if is_quadruple(poly, &form, opts.zero_tol) {
        let inter = QuarticIntermediates {
            resolvent,
            uvw: [zero; 3],
            gammas: [zero; 3],
            chosen_u: zero,
        };
        return Ok((finish(poly, &[-form.shift; 4], opts), inter));
    }

    let uvw = cubic_roots(&resolvent, opts)?;
    let gammas = signed_gammas(uvw, form.q);
    let betas = if form.q == zero {
        biquadratic(form.p, form.r)
    } else {
        assemble_from_gammas(gammas)
    };
    let alphas: Vec<Complex> = betas.iter().map(|&y| y - form.shift).collect();
    let inter = QuarticIntermediates {
        resolvent,
        uvw,
        gammas,
        chosen_u: uvw[0],
    };
    Ok((finish(poly, &alphas, opts), inter))
}

/// Euler's normalization: roots `±√A ± √B ± √C` where `A, B, C` solve
/// `R(4x) = 0`, with the sign product fixed by `8√A√B√C = -q`.
pub fn solve_euler(poly: &Poly, opts: &SolveOptions) -> Result<RootSet> {
    require_quartic(poly)?;
    let form = depress_quartic(poly)?;
    let (p, q, r) = (form.p, form.q, form.r);
    if is_quadruple(poly, &form, opts.zero_tol) {
        return Ok(finish(poly, &[-form.shift; 4], opts));
    }
    let betas = if q == Complex::new(0.0, 0.0) {
        biquadratic(p, r)
    } else {
        // R(4x)/64
        let scaled = make_poly(&[real(1.0), p / 2.0, (p * p - 4.0 * r) / 16.0, -q * q / 64.0])?;
        let abc = cubic_roots(&scaled, opts)?;
        let mut s = abc.map(principal_sqrt);
        let prod = 8.0 * s[0] * s[1] * s[2];
        if (prod + q).norm() > (prod - q).norm() {
            s[2] = -s[2];
        }
        let [a, b, c] = s;
        [a + b + c, a - b - c, -a + b - c, -a - b + c]
    };
    let alphas: Vec<Complex> = betas.iter().map(|&y| y - form.shift).collect();
    Ok(finish(poly, &alphas, opts))
}
