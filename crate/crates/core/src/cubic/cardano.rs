use crate::complex::{principal_cbrt, principal_sqrt, real, Complex, OMEGA, OMEGA2};
use crate::error::{Error, Result};
use crate::poly::{depress_cubic, discriminant, make_poly, Poly};
use crate::roots::{finish, quadratic_roots_with_discriminant, RootSet, SolveOptions};

/// Cube-root magnitude below which `v` is taken as a cube root of `v³`
/// instead of `-p/(3u)`.
const TINY: f64 = 1e-300;

/// Quantities produced on the way to Cardano's roots.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CubicIntermediates {
    /// Root of the quadratic resolvent with the larger magnitude.
    pub u3: Complex,
    /// The other resolvent root, `(-p/3)³ / u³`.
    pub v3: Complex,
    /// Principal cube root of `u3`.
    pub u: Complex,
    /// Cube root of `v3` paired with `u` so that `uv = -p/3`.
    pub v: Complex,
    /// Principal square root of Δ.
    pub delta_sqrt: Complex,
    pub omega: Complex,
}

/// `r(x) = x² + qx - p³/27`, whose roots are `u³` and `v³`.
pub fn quadratic_resolvent(p: Complex, q: Complex) -> Poly {
    make_poly(&[real(1.0), q, -p * p * p / 27.0]).expect("monic quadratic")
}

/// Roots of a cubic from `u³ = -q/2 + √(-Δ/108)` and the pairing `uv = -p/3`.
///
/// `α₁ = -b/3 + u + v`, `α₂ = -b/3 + ωu + ω²v`, `α₃ = -b/3 + ω²u + ωv`.
/// When `p = q = 0` all three roots are `-b/3`; when only `p = 0` the roots
/// are `-b/3` plus the cube roots of `-q`.
pub fn solve_cardano(poly: &Poly, opts: &SolveOptions) -> Result<(RootSet, CubicIntermediates)> {
    let form = depress_cubic(poly)?;
    let (p, q) = (form.p, form.q);
    let delta = discriminant(poly)?;

    let half = -q / 2.0;
    let mut s = principal_sqrt(-delta / 108.0);
    if (half * s.conj()).re < 0.0 {
        // take the larger-magnitude resolvent root; same as swapping u and v
        s = -s;
    }
    let u3 = half + s;
    let minus_p3 = -p / 3.0;
    let v3 = if u3.norm() == 0.0 {
        Complex::new(0.0, 0.0)
    } else {
        minus_p3 * minus_p3 * minus_p3 / u3
    };

    let u = principal_cbrt(u3);
    let v = if u.norm() > TINY {
        minus_p3 / u
    } else {
        principal_cbrt(v3)
    };

    let betas = [u + v, OMEGA * u + OMEGA2 * v, OMEGA2 * u + OMEGA * v];
    let alphas: Vec<Complex> = betas.iter().map(|&y| y - form.shift).collect();
    let inter = CubicIntermediates {
        u3,
        v3,
        u,
        v,
        delta_sqrt: principal_sqrt(delta),
        omega: OMEGA,
    };
    Ok((finish(poly, &alphas, opts), inter))
}

/// Viète's substitution `y = u - p/(3u)`: `u³` solves `z² + qz + (-p/3)³ = 0`,
/// and the three cube roots `ωᵏu` give the three roots.
pub fn solve_viete(poly: &Poly, opts: &SolveOptions) -> Result<RootSet> {
    if poly.degree() != 3 {
        return Err(Error::UnsupportedDegree(poly.degree()));
    }
    let form = depress_cubic(poly)?;
    let (p, q) = (form.p, form.q);
    let minus_p3 = -p / 3.0;
    // q² + 4p³/27 = -Δ/27, taken from the coefficients of f so that exact
    // double roots stay exact
    let disc = -discriminant(poly)? / 27.0;
    let [z, _] = quadratic_roots_with_discriminant(q, minus_p3 * minus_p3 * minus_p3, disc);
    let u = principal_cbrt(z);
    let ys: Vec<Complex> = if u.norm() > TINY {
        [real(1.0), OMEGA, OMEGA2]
            .iter()
            .map(|&w| {
                let uk = w * u;
                uk + minus_p3 / uk
            })
            .collect()
    } else {
        vec![Complex::new(0.0, 0.0); 3]
    };
    let alphas: Vec<Complex> = ys.iter().map(|&y| y - form.shift).collect();
    Ok(finish(poly, &alphas, opts))
}
