//! Real-coefficient cubics: classification by the sign of Δ and the solution
//! formulas that stay in real arithmetic.

use crate::complex::{c, real, Complex};
use crate::error::{Error, Result};
use crate::poly::{depress_cubic, discriminant, DepressedForm, Poly};
use crate::roots::{finish, RootSet, SolveOptions};

use super::zero_threshold;

/// How far outside `[-1, 1]` an `arccos`/`arcsin` argument may drift before it
/// is rejected instead of clamped.
const ARG_SLACK: f64 = 1e-12;

const SQRT3: f64 = 1.732_050_807_568_877_2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub enum CubicKind {
    ThreeSimpleReal,
    OneRealTwoComplexConjugate,
    DoubleAndSimpleReal,
    TripleReal,
    NotRealCoefficients,
}

impl CubicKind {
    /// Number of distinct real roots implied by the kind.
    pub fn distinct_real_roots(self) -> Option<usize> {
        match self {
            CubicKind::ThreeSimpleReal => Some(3),
            CubicKind::OneRealTwoComplexConjugate => Some(1),
            CubicKind::DoubleAndSimpleReal => Some(2),
            CubicKind::TripleReal => Some(1),
            CubicKind::NotRealCoefficients => None,
        }
    }

    /// Number of real roots counted with multiplicity.
    pub fn real_roots_with_multiplicity(self) -> Option<usize> {
        match self {
            CubicKind::OneRealTwoComplexConjugate => Some(1),
            CubicKind::NotRealCoefficients => None,
            _ => Some(3),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CubicClassification {
    pub kind: CubicKind,
    pub delta: f64,
}

fn require_real(poly: &Poly) -> Result<()> {
    if poly.degree() != 3 {
        return Err(Error::UnsupportedDegree(poly.degree()));
    }
    if !poly.is_real() {
        return Err(Error::NotRealCoefficients);
    }
    Ok(())
}

fn is_triple(poly: &Poly, form: &DepressedForm, zero_tol: f64) -> bool {
    let s = poly.scale();
    form.p.norm() <= zero_tol * s * s && form.q.norm() <= zero_tol * s * s * s
}

/// Classifies the real root structure of a real cubic by the sign of Δ.
///
/// `|Δ| ≤ zero_tol · max(1, |b|, |c|, |d|)⁴` counts as zero; a zero Δ is a
/// triple root when `p` and `q` also vanish, a double root otherwise.
pub fn classify_real_cubic(poly: &Poly, zero_tol: f64) -> Result<CubicClassification> {
    require_real(poly)?;
    let delta = discriminant(poly)?.re;
    let kind = if delta.abs() <= zero_threshold(poly, zero_tol) {
        let form = depress_cubic(poly)?;
        if is_triple(poly, &form, zero_tol) {
            CubicKind::TripleReal
        } else {
            CubicKind::DoubleAndSimpleReal
        }
    } else if delta > 0.0 {
        CubicKind::ThreeSimpleReal
    } else {
        CubicKind::OneRealTwoComplexConjugate
    };
    Ok(CubicClassification { kind, delta })
}

/// Roots of a real cubic with `Δ = 0`: `-b/3 + δ` twice and `-b/3 - 2δ`, with
/// `δ = ±√(-p/3)` carrying the sign of `q`.
pub fn solve_double_root_shortcut(poly: &Poly, opts: &SolveOptions) -> Result<RootSet> {
    require_real(poly)?;
    let delta = discriminant(poly)?.re;
    if delta.abs() > zero_threshold(poly, opts.zero_tol) {
        return Err(Error::PreconditionViolated(format!(
            "double-root shortcut requires Δ=0, got Δ={delta}"
        )));
    }
    let form = depress_cubic(poly)?;
    let center = -form.shift.re;
    let values = if is_triple(poly, &form, opts.zero_tol) {
        vec![real(center); 3]
    } else {
        let mag = (-form.p.re / 3.0).max(0.0).sqrt();
        let d = if form.q.re < 0.0 { -mag } else { mag };
        vec![real(center + d), real(center + d), real(center - 2.0 * d)]
    };
    Ok(finish(poly, &values, opts))
}

/// The three real roots from the cosine formula, indexed by `arccos` branch
/// `k`: `-b/3 + 2√(-p/3) cos((φ + 2πk)/3)` with `φ` the principal value.
///
/// Requires `p < 0` and `|q/2| ≤ |p/3|^{3/2}`; this also covers the `Δ = 0`,
/// `p ≠ 0` boundary where two of the roots coincide.
pub fn trig_cos_roots(form: &DepressedForm) -> Result<[f64; 3]> {
    let (p, q, shift) = (form.p.re, form.q.re, form.shift.re);
    let (s, arg) = trig_argument(p, -q / 2.0)?;
    let third = arg.acos() / 3.0;
    let (cos, sin) = (third.cos(), third.sin());
    Ok([
        -shift + 2.0 * s * cos,
        -shift - s * (cos + SQRT3 * sin),
        -shift - s * (cos - SQRT3 * sin),
    ])
}

/// The sine-family counterpart of [`trig_cos_roots`]:
/// `-b/3 + 2√(-p/3) sin(ψ/3)` and `-b/3 - √(-p/3)(sin(ψ/3) ± √3 cos(ψ/3))`.
pub fn trig_sin_roots(form: &DepressedForm) -> Result<[f64; 3]> {
    let (p, q, shift) = (form.p.re, form.q.re, form.shift.re);
    let (s, arg) = trig_argument(p, q / 2.0)?;
    let third = arg.asin() / 3.0;
    let (sin, cos) = (third.sin(), third.cos());
    Ok([
        -shift + 2.0 * s * sin,
        -shift - s * (sin + SQRT3 * cos),
        -shift - s * (sin - SQRT3 * cos),
    ])
}

/// Returns `(√(-p/3), numerator / (-p/3)^{3/2})`, clamped into `[-1, 1]`.
fn trig_argument(p: f64, numerator: f64) -> Result<(f64, f64)> {
    if p >= 0.0 || p.is_nan() {
        return Err(Error::DomainError(format!(
            "trigonometric formula requires p<0, got p={p}"
        )));
    }
    let s = (-p / 3.0).sqrt();
    let arg = numerator / (s * s * s);
    if arg.abs() > 1.0 + ARG_SLACK || arg.is_nan() {
        return Err(Error::DomainError(format!(
            "arccos argument {arg} outside [-1, 1]"
        )));
    }
    Ok((s, arg.clamp(-1.0, 1.0)))
}

fn require_positive_delta(poly: &Poly, zero_tol: f64) -> Result<DepressedForm> {
    require_real(poly)?;
    let delta = discriminant(poly)?.re;
    if delta <= zero_threshold(poly, zero_tol) {
        return Err(Error::PreconditionViolated(format!(
            "trig requires Δ>0, got Δ={delta}"
        )));
    }
    depress_cubic(poly)
}

/// One real root of a cubic with `Δ > 0`, selected by `arccos` branch
/// `0..=2`.
pub fn solve_trig(poly: &Poly, branch: usize, opts: &SolveOptions) -> Result<f64> {
    if branch > 2 {
        return Err(Error::PreconditionViolated(format!(
            "trig branch must be 0, 1 or 2, got {branch}"
        )));
    }
    let form = require_positive_delta(poly, opts.zero_tol)?;
    let x = trig_cos_roots(&form)?[branch];
    if opts.polish {
        Ok(crate::roots::newton_polish(poly, real(x)).re)
    } else {
        Ok(x)
    }
}

/// All three real roots of a cubic with `Δ > 0` via the cosine formula.
pub fn solve_trig_all(poly: &Poly, opts: &SolveOptions) -> Result<RootSet> {
    let form = require_positive_delta(poly, opts.zero_tol)?;
    let values: Vec<Complex> = trig_cos_roots(&form)?.iter().map(|&x| real(x)).collect();
    Ok(finish(poly, &values, opts))
}

/// Which of the three hyperbolic formulas applies to a real cubic with
/// `Δ < 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HyperbolicCase {
    /// `p < 0`, `q/2 < -|p/3|^{3/2}`: arccosh form.
    NegativeP,
    /// `p < 0`, `q/2 > |p/3|^{3/2}`: arccosh form, sign mirrored.
    NegativePMirrored,
    /// `p > 0`: arcsinh form.
    PositiveP,
}

/// Case selection for [`solve_hyperbolic`]; `None` when `p = 0` or the
/// cubic sits on the `|q/2| = |p/3|^{3/2}` boundary.
pub fn hyperbolic_case(form: &DepressedForm) -> Option<HyperbolicCase> {
    let (p, q) = (form.p.re, form.q.re);
    if p > 0.0 {
        return Some(HyperbolicCase::PositiveP);
    }
    if p == 0.0 {
        return None;
    }
    let s = (-p / 3.0).sqrt();
    let bound = s * s * s;
    if q / 2.0 < -bound {
        Some(HyperbolicCase::NegativeP)
    } else if q / 2.0 > bound {
        Some(HyperbolicCase::NegativePMirrored)
    } else {
        None
    }
}

/// One real and two conjugate roots of a cubic with `Δ < 0` and `p ≠ 0`,
/// using cosh/arccosh (`p < 0`) or sinh/arcsinh (`p > 0`).
pub fn solve_hyperbolic(poly: &Poly, opts: &SolveOptions) -> Result<RootSet> {
    require_real(poly)?;
    let delta = discriminant(poly)?.re;
    if delta >= -zero_threshold(poly, opts.zero_tol) {
        return Err(Error::PreconditionViolated(format!(
            "hyperbolic requires Δ<0, got Δ={delta}"
        )));
    }
    let form = depress_cubic(poly)?;
    let (p, q, shift) = (form.p.re, form.q.re, form.shift.re);
    if p == 0.0 {
        return Err(Error::PreconditionViolated(
            "hyperbolic requires p≠0; use the cube root of -q".into(),
        ));
    }
    let case = hyperbolic_case(&form).ok_or_else(|| {
        Error::PreconditionViolated(format!(
            "hyperbolic formula undefined at |q/2|=|p/3|^(3/2) (p={p}, q={q})"
        ))
    })?;
    let s = (p.abs() / 3.0).sqrt();
    let s3 = s * s * s;
    let x0 = -shift;
    let values = match case {
        HyperbolicCase::NegativeP => {
            let t = ((-q / 2.0) / s3).max(1.0).acosh() / 3.0;
            let (ch, sh) = (t.cosh(), t.sinh());
            [
                real(x0 + 2.0 * s * ch),
                c(x0 - s * ch, -s * SQRT3 * sh),
                c(x0 - s * ch, s * SQRT3 * sh),
            ]
        }
        HyperbolicCase::NegativePMirrored => {
            let t = ((q / 2.0) / s3).max(1.0).acosh() / 3.0;
            let (ch, sh) = (t.cosh(), t.sinh());
            [
                real(x0 - 2.0 * s * ch),
                c(x0 + s * ch, s * SQRT3 * sh),
                c(x0 + s * ch, -s * SQRT3 * sh),
            ]
        }
        HyperbolicCase::PositiveP => {
            let t = ((q / 2.0) / s3).asinh() / 3.0;
            let (ch, sh) = (t.cosh(), t.sinh());
            [
                real(x0 - 2.0 * s * sh),
                c(x0 + s * sh, s * SQRT3 * ch),
                c(x0 + s * sh, -s * SQRT3 * ch),
            ]
        }
    };
    Ok(finish(poly, &values, opts))
}
