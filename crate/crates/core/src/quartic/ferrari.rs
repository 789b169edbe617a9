use crate::complex::{principal_sqrt, Complex};
use crate::error::Result;
use crate::poly::{depress_quartic, DepressedForm, Poly};
use crate::roots::{finish, quadratic_roots, RootSet, SolveOptions};

use super::{
    biquadratic, cubic_resolvent, cubic_roots, is_quadruple, require_quartic, signed_gammas,
    QuarticIntermediates,
};

/// `g(y) = (y² + ky + l)(y² + my + n)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DescartesFactorization {
    pub k: Complex,
    pub l: Complex,
    pub m: Complex,
    pub n: Complex,
}

impl DescartesFactorization {
    /// Coefficients of the product, highest degree first.
    pub fn expand(&self) -> [Complex; 5] {
        let (k, l, m, n) = (self.k, self.l, self.m, self.n);
        [
            Complex::new(1.0, 0.0),
            k + m,
            l + n + k * m,
            k * n + l * m,
            l * n,
        ]
    }

    /// Largest coefficient mismatch between the product and `g`.
    pub fn residual(&self, form: &DepressedForm) -> f64 {
        self.expand()
            .iter()
            .zip(form.coeffs())
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }
}

/// Resolvent root of largest magnitude, or `None` if all three vanish.
fn largest_root(uvw: &[Complex; 3]) -> Option<Complex> {
    let u = uvw
        .iter()
        .copied()
        .max_by(|a, b| a.norm().total_cmp(&b.norm()))?;
    (u.norm() > 0.0).then_some(u)
}

struct Setup {
    form: DepressedForm,
    resolvent: Poly,
    uvw: [Complex; 3],
    u: Option<Complex>,
}

fn setup(poly: &Poly, opts: &SolveOptions) -> Result<Setup> {
    require_quartic(poly)?;
    let form = depress_quartic(poly)?;
    let resolvent = cubic_resolvent(form.p, form.q, form.r);
    let zero = Complex::new(0.0, 0.0);
    if is_quadruple(poly, &form, opts.zero_tol) {
        return Ok(Setup {
            form,
            resolvent,
            uvw: [zero; 3],
            u: None,
        });
    }
    let uvw = cubic_roots(&resolvent, opts)?;
    let u = largest_root(&uvw);
    Ok(Setup {
        form,
        resolvent,
        uvw,
        u,
    })
}

/// Factors `g` for a nonzero resolvent root `u`, with `k = √u = -m`.
pub fn descartes_factorization(form: &DepressedForm, u: Complex) -> DescartesFactorization {
    let gamma = principal_sqrt(u);
    let half = (form.p + u) / 2.0;
    let t = form.q / (2.0 * gamma);
    DescartesFactorization {
        k: gamma,
        l: half - t,
        m: -gamma,
        n: half + t,
    }
}

fn factor_roots(f: &DescartesFactorization) -> [Complex; 4] {
    let [a, b] = quadratic_roots(f.k, f.l);
    let [c, d] = quadratic_roots(f.m, f.n);
    [a, b, c, d]
}

fn degenerate(poly: &Poly, s: &Setup, opts: &SolveOptions) -> RootSet {
    let betas = if is_quadruple(poly, &s.form, opts.zero_tol) {
        [Complex::new(0.0, 0.0); 4]
    } else {
        biquadratic(s.form.p, s.form.r)
    };
    let alphas: Vec<Complex> = betas.iter().map(|&y| y - s.form.shift).collect();
    finish(poly, &alphas, opts)
}

/// Ferrari's method: completing the square gives
/// `(y² + (p+u)/2)² = (γy - q/(2γ))²` with `γ = √u`, which splits into
/// `y² - γy + (p+u)/2 + q/(2γ) = 0` and `y² + γy + (p+u)/2 - q/(2γ) = 0`.
pub fn solve_ferrari(poly: &Poly, opts: &SolveOptions) -> Result<(RootSet, QuarticIntermediates)> {
    let s = setup(poly, opts)?;
    let zero = Complex::new(0.0, 0.0);
    let gammas = signed_gammas(s.uvw, s.form.q);
    let Some(u) = s.u else {
        let rs = degenerate(poly, &s, opts);
        let inter = QuarticIntermediates {
            resolvent: s.resolvent,
            uvw: s.uvw,
            gammas,
            chosen_u: zero,
        };
        return Ok((rs, inter));
    };
    let fact = descartes_factorization(&s.form, u);
    let alphas: Vec<Complex> = factor_roots(&fact)
        .iter()
        .map(|&y| y - s.form.shift)
        .collect();
    let inter = QuarticIntermediates {
        resolvent: s.resolvent,
        uvw: s.uvw,
        gammas,
        chosen_u: u,
    };
    Ok((finish(poly, &alphas, opts), inter))
}

/// Descartes' factorization of `g` into two monic quadratics; roots are the
/// union of the factors' roots.
pub fn solve_descartes(poly: &Poly, opts: &SolveOptions) -> Result<RootSet> {
    solve_descartes_with_factors(poly, opts).map(|(rs, _)| rs)
}

/// As [`solve_descartes`], also returning the factorization when one exists.
pub fn solve_descartes_with_factors(
    poly: &Poly,
    opts: &SolveOptions,
) -> Result<(RootSet, Option<DescartesFactorization>)> {
    let s = setup(poly, opts)?;
    let Some(u) = s.u else {
        return Ok((degenerate(poly, &s, opts), None));
    };
    let fact = descartes_factorization(&s.form, u);
    let alphas: Vec<Complex> = factor_roots(&fact)
        .iter()
        .map(|&y| y - s.form.shift)
        .collect();
    Ok((finish(poly, &alphas, opts), Some(fact)))
}
