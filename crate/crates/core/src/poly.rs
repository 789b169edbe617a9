//! Monic polynomials of degree 1 to 4, their depressed forms and discriminants.

use crate::complex::{real, Complex};
use crate::error::{Error, Result};
use crate::roots::RootSet;

/// A polynomial of degree 1..=4 stored in monic form.
///
/// Coefficients are kept highest degree first, so for a cubic the stored
/// vector is `[1, b, c, d]`. The leading coefficient of the original input is
/// retained in [`Poly::leading`]; all evaluation and residuals use the monic
/// form.
#[derive(Debug, Clone, PartialEq)]
pub struct Poly {
    coeffs: Vec<Complex>,
    leading: Complex,
    is_real: bool,
}

impl Poly {
    /// Builds a monic polynomial from coefficients given highest degree first.
    pub fn new(coeffs: &[Complex]) -> Result<Self> {
        make_poly(coeffs)
    }

    /// Convenience constructor for real coefficients.
    pub fn from_real(coeffs: &[f64]) -> Result<Self> {
        let cs: Vec<Complex> = coeffs.iter().map(|&x| real(x)).collect();
        make_poly(&cs)
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Monic coefficients, highest degree first.
    pub fn coeffs(&self) -> &[Complex] {
        &self.coeffs
    }

    /// The `k`-th monic coefficient counted from the top (`coeff(0) == 1`).
    pub fn coeff(&self, k: usize) -> Complex {
        self.coeffs[k]
    }

    pub fn leading(&self) -> Complex {
        self.leading
    }

    pub fn is_real(&self) -> bool {
        self.is_real
    }

    /// Real parts of the monic coefficients.
    pub fn real_coeffs(&self) -> Vec<f64> {
        self.coeffs.iter().map(|z| z.re).collect()
    }

    /// `max(1, max |coeff|)` over the monic coefficients.
    pub fn scale(&self) -> f64 {
        self.coeffs[1..]
            .iter()
            .map(|z| z.norm())
            .fold(1.0, f64::max)
    }

    /// Horner evaluation of the monic polynomial.
    pub fn eval(&self, x: Complex) -> Complex {
        eval(self, x)
    }

    /// Value and first derivative at `x`.
    pub fn eval_with_derivative(&self, x: Complex) -> (Complex, Complex) {
        let mut f = self.coeffs[0];
        let mut df = Complex::new(0.0, 0.0);
        for &a in &self.coeffs[1..] {
            df = df * x + f;
            f = f * x + a;
        }
        (f, df)
    }

    /// Builds the monic polynomial whose roots are `roots`.
    pub fn from_roots(roots: &[Complex]) -> Result<Self> {
        make_poly(&expand_roots(roots))
    }
}

/// Validates and normalizes coefficients (highest degree first).
pub fn make_poly(coeffs: &[Complex]) -> Result<Poly> {
    if coeffs.len() < 2 || coeffs.len() > 5 {
        return Err(Error::UnsupportedDegree(coeffs.len().saturating_sub(1)));
    }
    let leading = coeffs[0];
    if leading.re == 0.0 && leading.im == 0.0 {
        return Err(Error::ZeroLeadingCoefficient);
    }
    let is_real = coeffs.iter().all(|z| z.im == 0.0);
    let mut monic: Vec<Complex> = coeffs.iter().map(|&z| z / leading).collect();
    monic[0] = real(1.0);
    if is_real {
        for z in &mut monic {
            z.im = 0.0;
        }
    }
    Ok(Poly {
        coeffs: monic,
        leading,
        is_real,
    })
}

pub fn eval(poly: &Poly, x: Complex) -> Complex {
    poly.coeffs[1..]
        .iter()
        .fold(poly.coeffs[0], |acc, &a| acc * x + a)
}

/// Coefficients (highest first) of `∏ (x - rᵢ)`.
pub fn expand_roots(roots: &[Complex]) -> Vec<Complex> {
    let mut out = vec![real(1.0)];
    for &r in roots {
        out.push(Complex::new(0.0, 0.0));
        for k in (1..out.len()).rev() {
            let prev = out[k - 1];
            out[k] -= r * prev;
        }
    }
    out
}

/// Coefficients of `f(z + t)` given those of `f(z)`, both highest degree first.
pub fn taylor_shift(coeffs: &[Complex], t: Complex) -> Vec<Complex> {
    let mut a = coeffs.to_vec();
    let n = a.len();
    // repeated synthetic division by (z - t)
    for i in 0..n {
        for j in 1..n - i {
            let prev = a[j - 1];
            a[j] += t * prev;
        }
    }
    a
}

/// A depressed cubic `y³ + py + q` or quartic `y⁴ + py² + qy + r`.
///
/// `g(y) = f(y - shift)` where `shift = b/3` or `b/4`. For cubics `r` is zero.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DepressedForm {
    pub degree: usize,
    pub p: Complex,
    pub q: Complex,
    pub r: Complex,
    pub shift: Complex,
}

impl DepressedForm {
    /// Monic coefficients of the depressed polynomial, highest first.
    pub fn coeffs(&self) -> Vec<Complex> {
        let z = Complex::new(0.0, 0.0);
        match self.degree {
            3 => vec![real(1.0), z, self.p, self.q],
            _ => vec![real(1.0), z, self.p, self.q, self.r],
        }
    }

    pub fn eval(&self, y: Complex) -> Complex {
        match self.degree {
            3 => (y * y + self.p) * y + self.q,
            _ => ((y * y + self.p) * y + self.q) * y + self.r,
        }
    }

    pub fn to_poly(&self) -> Poly {
        make_poly(&self.coeffs()).expect("depressed form is monic")
    }
}

/// `p = c - b²/3`, `q = d - bc/3 + 2b³/27`, `shift = b/3`.
pub fn depress_cubic(poly: &Poly) -> Result<DepressedForm> {
    if poly.degree() != 3 {
        return Err(Error::UnsupportedDegree(poly.degree()));
    }
    let (b, c, d) = (poly.coeff(1), poly.coeff(2), poly.coeff(3));
    let p = c - b * b / 3.0;
    let q = d - b * c / 3.0 + 2.0 * b * b * b / 27.0;
    Ok(DepressedForm {
        degree: 3,
        p,
        q,
        r: Complex::new(0.0, 0.0),
        shift: b / 3.0,
    })
}

/// `g(y) = f(y - b/4) = y⁴ + py² + qy + r`.
pub fn depress_quartic(poly: &Poly) -> Result<DepressedForm> {
    if poly.degree() != 4 {
        return Err(Error::UnsupportedDegree(poly.degree()));
    }
    let (b, c, d, e) = (poly.coeff(1), poly.coeff(2), poly.coeff(3), poly.coeff(4));
    let b2 = b * b;
    let p = c - 3.0 * b2 / 8.0;
    let q = d - b * c / 2.0 + b2 * b / 8.0;
    let r = e - b * d / 4.0 + b2 * c / 16.0 - 3.0 * b2 * b2 / 256.0;
    Ok(DepressedForm {
        degree: 4,
        p,
        q,
        r,
        shift: b / 4.0,
    })
}

/// Depresses a cubic or quartic.
pub fn depress(poly: &Poly) -> Result<DepressedForm> {
    match poly.degree() {
        3 => depress_cubic(poly),
        4 => depress_quartic(poly),
        n => Err(Error::UnsupportedDegree(n)),
    }
}

/// Terms of the raw-coefficient discriminant; the sum is Δ.
fn raw_terms(poly: &Poly) -> Result<Vec<Complex>> {
    let k = |i| poly.coeff(i);
    match poly.degree() {
        2 => {
            let (b, c) = (k(1), k(2));
            Ok(vec![b * b, -4.0 * c])
        }
        3 => {
            let (b, c, d) = (k(1), k(2), k(3));
            Ok(vec![
                b * b * c * c,
                -4.0 * c * c * c,
                -4.0 * b * b * b * d,
                18.0 * b * c * d,
                -27.0 * d * d,
            ])
        }
        4 => {
            let (b, c, d, e) = (k(1), k(2), k(3), k(4));
            let (b2, c2, d2, e2) = (b * b, c * c, d * d, e * e);
            Ok(vec![
                b2 * c2 * d2,
                -4.0 * b2 * c2 * c * e,
                -4.0 * b2 * b * d2 * d,
                18.0 * b2 * b * c * d * e,
                -27.0 * b2 * b2 * e2,
                -4.0 * c2 * c * d2,
                16.0 * c2 * c2 * e,
                18.0 * b * c * d2 * d,
                -80.0 * b * c2 * d * e,
                -6.0 * b2 * d2 * e,
                144.0 * b2 * c * e2,
                -27.0 * d2 * d2,
                144.0 * c * d2 * e,
                -128.0 * c2 * e2,
                -192.0 * b * d * e2,
                256.0 * e2 * e,
            ])
        }
        n => Err(Error::UnsupportedDegree(n)),
    }
}

fn depressed_terms(form: &DepressedForm) -> Vec<Complex> {
    let (p, q, r) = (form.p, form.q, form.r);
    match form.degree {
        3 => vec![-4.0 * p * p * p, -27.0 * q * q],
        _ => {
            let (p2, q2) = (p * p, q * q);
            vec![
                -4.0 * p2 * p * q2,
                -27.0 * q2 * q2,
                16.0 * p2 * p2 * r,
                144.0 * p * q2 * r,
                -128.0 * p2 * r * r,
                256.0 * r * r * r,
            ]
        }
    }
}

/// Discriminant from the raw monic coefficients.
///
/// Defined for degrees 2, 3 and 4; the quadratic case is `b² - 4c`.
pub fn discriminant(poly: &Poly) -> Result<Complex> {
    Ok(raw_terms(poly)?.into_iter().sum())
}

/// Discriminant from the depressed coefficients: `-4p³ - 27q²` for cubics,
/// the six-term `(p, q, r)` form for quartics.
pub fn discriminant_depressed(form: &DepressedForm) -> Complex {
    depressed_terms(form).into_iter().sum()
}

/// Sum of absolute values of the terms of the raw discriminant formula.
///
/// This is the natural magnitude against which roundoff in Δ is measured;
/// when Δ is small compared to it the computed value is dominated by
/// cancellation.
pub fn discriminant_magnitude(poly: &Poly) -> Result<f64> {
    Ok(raw_terms(poly)?.iter().map(|t| t.norm()).sum())
}

/// Same as [`discriminant_magnitude`] for the depressed formula.
pub fn discriminant_depressed_magnitude(form: &DepressedForm) -> f64 {
    depressed_terms(form).iter().map(|t| t.norm()).sum()
}

/// Largest coefficient mismatch between `poly` and `∏ (x - rᵢ)` over the
/// expanded roots; each coefficient is `±eₖ` of the roots.
pub fn vieta_residual(poly: &Poly, roots: &RootSet) -> f64 {
    let expanded = roots.expanded();
    if expanded.len() != poly.degree() {
        return f64::INFINITY;
    }
    expand_roots(&expanded)
        .iter()
        .zip(poly.coeffs())
        .map(|(a, b)| (a - b).norm())
        .fold(0.0, f64::max)
}
