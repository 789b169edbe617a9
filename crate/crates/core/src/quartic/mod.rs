//! Quartic solution paths.
//!
//! `f(x) = x⁴ + bx³ + cx² + dx + e` is shifted to `g(y) = y⁴ + py² + qy + r`
//! with `x = y - b/4`. Writing the roots of `g` as `β₁..β₄`, the quantities
//! `γ₂ = β₁+β₂`, `γ₃ = β₁+β₃`, `γ₄ = β₁+β₄` have squares `u, v, w` that solve
//! the cubic resolvent `R(x) = x³ + 2px² + (p²-4r)x - q²`, and
//! `γ₂γ₃γ₄ = -q` fixes their signs. The roots are then half-sums of the `γ`s.
//!
//! Each solver reaches the `γ`s, or an equivalent factorization, by a
//! different route:
//!
//! | solver              | cubic solved                      |
//! |---------------------|-----------------------------------|
//! | [`solve_fourier`]   | `R(x)`                            |
//! | [`solve_euler`]     | `R(4x)`, roots `u/4, v/4, w/4`    |
//! | [`solve_lagrange`]  | `R̃(z) = R(z - p - b²/8)`          |
//! | [`solve_ferrari`]   | `R(x)`, one nonzero root          |
//! | [`solve_descartes`] | `R(x)`, one nonzero root          |

mod ferrari;
mod fourier;
mod lagrange;

pub use ferrari::{
    descartes_factorization, solve_descartes, solve_descartes_with_factors, solve_ferrari,
    DescartesFactorization,
};
pub use fourier::{solve_euler, solve_fourier};
pub use lagrange::{general_resolvent, lagrange_resolvent, solve_lagrange, solve_lagrange_with_s};

use crate::complex::{principal_sqrt, real, Complex};
use crate::cubic::solve_cardano;
use crate::error::{Error, Result};
use crate::poly::{make_poly, DepressedForm, Poly};
use crate::roots::{quadratic_roots, RootSet, SolveOptions};

/// Resolvent data shared by the quartic solvers.
#[derive(Debug, Clone, PartialEq)]
pub struct QuarticIntermediates {
    /// The cubic that was solved (`R`, `R(4x)` or `R̃` depending on method).
    pub resolvent: Poly,
    /// Roots `u, v, w` of `R`, whatever cubic was actually solved.
    pub uvw: [Complex; 3],
    /// `γ₂, γ₃, γ₄` with `γ₂γ₃γ₄ = -q`.
    pub gammas: [Complex; 3],
    /// Resolvent root used to build the quadratic factors.
    pub chosen_u: Complex,
}

/// `R(x) = x³ + 2px² + (p² - 4r)x - q²`.
pub fn cubic_resolvent(p: Complex, q: Complex, r: Complex) -> Poly {
    make_poly(&[real(1.0), 2.0 * p, p * p - 4.0 * r, -q * q]).expect("monic cubic")
}

/// The three roots of a monic cubic, solved by Cardano with polishing on.
pub(crate) fn cubic_roots(cubic: &Poly, opts: &SolveOptions) -> Result<[Complex; 3]> {
    let inner = SolveOptions {
        polish: true,
        ..*opts
    };
    let (rs, _) = solve_cardano(cubic, &inner)?;
    let all = rs.expanded();
    Ok([all[0], all[1], all[2]])
}

/// Principal square roots of `u, v, w`, with one sign flipped if needed so
/// that `γ₂γ₃γ₄` is closer to `-q` than to `q`.
pub fn signed_gammas(uvw: [Complex; 3], q: Complex) -> [Complex; 3] {
    let mut g = uvw.map(principal_sqrt);
    let prod = g[0] * g[1] * g[2];
    if (prod + q).norm() > (prod - q).norm() {
        g[2] = -g[2];
    }
    g
}

/// `β = ½(±γ₂ ± γ₃ ± γ₄)` with an even number of minus signs.
pub fn assemble_from_gammas(g: [Complex; 3]) -> [Complex; 4] {
    let [a, b, c] = g;
    [
        (a + b + c) / 2.0,
        (a - b - c) / 2.0,
        (-a + b - c) / 2.0,
        (-a - b + c) / 2.0,
    ]
}

/// `βᵢβⱼ + βₖβₗ` for the three pairings of the roots of `g`, where the roots
/// of `f` are shifted by `b/4`. These equal `u + p`, `v + p`, `w + p`.
pub fn pair_sum_products(roots: &[Complex], b: Complex) -> Result<[Complex; 3]> {
    if roots.len() != 4 {
        return Err(Error::PreconditionViolated(format!(
            "pair sums need four roots, got {}",
            roots.len()
        )));
    }
    let y: Vec<Complex> = roots.iter().map(|&a| a + b / 4.0).collect();
    Ok([
        y[0] * y[1] + y[2] * y[3],
        y[0] * y[2] + y[1] * y[3],
        y[0] * y[3] + y[1] * y[2],
    ])
}

/// Roots of `y⁴ + py² + r` from the quadratic `z² + pz + r` in `z = y²`.
pub(crate) fn biquadratic(p: Complex, r: Complex) -> [Complex; 4] {
    let [z1, z2] = quadratic_roots(p, r);
    let (s1, s2) = (principal_sqrt(z1), principal_sqrt(z2));
    [s1, -s1, s2, -s2]
}

/// `true` when `g(y)` is `y⁴` to within `zero_tol` relative to the scale of
/// `f`, so every resolvent root vanishes.
pub(crate) fn is_quadruple(poly: &Poly, form: &DepressedForm, zero_tol: f64) -> bool {
    let s = poly.scale();
    form.p.norm() <= zero_tol * s * s
        && form.q.norm() <= zero_tol * s * s * s
        && form.r.norm() <= zero_tol * s * s * s * s
}

pub(crate) fn require_quartic(poly: &Poly) -> Result<()> {
    match poly.degree() {
        4 => Ok(()),
        n => Err(Error::UnsupportedDegree(n)),
    }
}

/// Solves a quartic through the resolvent `γ`s (see [`solve_fourier`]).
pub fn solve_quartic(poly: &Poly, opts: &SolveOptions) -> Result<RootSet> {
    solve_fourier(poly, opts).map(|(rs, _)| rs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::c;
    use crate::poly::{depress_quartic, discriminant, discriminant_depressed};

    #[test]
    fn resolvent_of_known_biquadratic() {
        let r = cubic_resolvent(real(-5.0), real(0.0), real(4.0));
        assert_eq!(r.coeffs(), &[real(1.0), real(-10.0), real(9.0), real(0.0)]);
        // u, v, w are squared pair sums of {1, -1, 2, -2}
        for y in [0.0, 1.0, 9.0] {
            assert_eq!(r.eval(real(y)), real(0.0));
        }
        let z = cubic_resolvent(real(0.0), real(0.0), real(0.0));
        assert_eq!(z.coeffs(), &[real(1.0), real(0.0), real(0.0), real(0.0)]);
    }

    #[test]
    fn resolvent_discriminant_matches_quartic() {
        let f = Poly::from_real(&[1.0, 2.0, 0.0, -1.0, -1.0]).unwrap();
        let g = depress_quartic(&f).unwrap();
        let r = cubic_resolvent(g.p, g.q, g.r);
        let dr = discriminant(&r).unwrap();
        let dg = discriminant_depressed(&g);
        assert!((dr - dg).norm() <= 1e-9 * dg.norm());
    }

    #[test]
    fn sign_rule_and_flip_closure() {
        let uvw = [real(0.0), real(1.0), real(9.0)];
        let g = signed_gammas(uvw, real(0.0));
        let mut a = assemble_from_gammas(g).to_vec();
        let mut b = assemble_from_gammas([-g[0], -g[1], g[2]]).to_vec();
        a.sort_by(crate::complex::lex_cmp);
        b.sort_by(crate::complex::lex_cmp);
        assert_eq!(a, b);
        assert_eq!(a, vec![real(-2.0), real(-1.0), real(1.0), real(2.0)]);

        let g = signed_gammas([real(4.0), real(9.0), real(1.0)], real(6.0));
        assert_eq!(g[0] * g[1] * g[2], real(-6.0));
    }

    #[test]
    fn pair_sums() {
        let roots = [real(1.0), real(-1.0), real(2.0), real(-2.0)];
        let s = pair_sum_products(&roots, real(0.0)).unwrap();
        assert_eq!(s, [real(-5.0), real(4.0), real(-4.0)]);
        let z = pair_sum_products(&[real(0.0); 4], real(0.0)).unwrap();
        assert_eq!(z, [real(0.0); 3]);
        assert!(pair_sum_products(&roots[..3], real(0.0)).is_err());
    }

    #[test]
    fn biquadratic_roots() {
        let mut r = biquadratic(real(2.0), real(1.0)).to_vec();
        r.sort_by(crate::complex::lex_cmp);
        assert_eq!(
            r,
            vec![c(0.0, -1.0), c(0.0, -1.0), c(0.0, 1.0), c(0.0, 1.0)]
        );
    }
}
