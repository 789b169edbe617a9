//! Root multisets, Newton polishing and the degree 1/2 solvers.

use crate::complex::{is_finite, lex_cmp, principal_sqrt, Complex};
use crate::error::{Error, Result};
use crate::poly::Poly;

/// Default relative threshold for merging roots into one cluster.
pub const DEFAULT_CLUSTER_TOL: f64 = 1e-8;

/// Default relative threshold for treating a discriminant as zero.
pub const DEFAULT_ZERO_TOL: f64 = 1e-10;

/// Knobs shared by every closed-form solver.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SolveOptions {
    /// Apply one guarded Newton step to every root after assembly.
    pub polish: bool,
    /// `|Δ| ≤ zero_tol · scale⁴` counts as `Δ = 0`.
    pub zero_tol: f64,
    /// Roots within `cluster_tol · (1 + max|rᵢ|)` are merged.
    pub cluster_tol: f64,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            polish: true,
            zero_tol: DEFAULT_ZERO_TOL,
            cluster_tol: DEFAULT_CLUSTER_TOL,
        }
    }
}

impl SolveOptions {
    /// Options with polishing disabled, for formula-faithful output.
    pub fn raw() -> Self {
        SolveOptions {
            polish: false,
            ..Self::default()
        }
    }
}

/// A multiset of roots with multiplicities and per-root residuals.
///
/// Distinct roots are sorted by real part, then imaginary part.
#[derive(Debug, Clone, PartialEq)]
pub struct RootSet {
    roots: Vec<Complex>,
    multiplicities: Vec<usize>,
    residuals: Vec<f64>,
}

impl RootSet {
    /// Clusters `values` and records `|f(root)|` for each cluster.
    pub fn new(poly: &Poly, values: &[Complex], cluster_tol: f64) -> Self {
        let clusters = cluster(values, cluster_tol);
        let residuals = clusters.iter().map(|(z, _)| poly.eval(*z).norm()).collect();
        let (roots, multiplicities) = clusters.into_iter().unzip();
        RootSet {
            roots,
            multiplicities,
            residuals,
        }
    }

    /// Distinct roots.
    pub fn roots(&self) -> &[Complex] {
        &self.roots
    }

    pub fn multiplicities(&self) -> &[usize] {
        &self.multiplicities
    }

    pub fn residuals(&self) -> &[f64] {
        &self.residuals
    }

    /// Number of roots counted with multiplicity.
    pub fn total(&self) -> usize {
        self.multiplicities.iter().sum()
    }

    pub fn max_residual(&self) -> f64 {
        self.residuals.iter().copied().fold(0.0, f64::max)
    }

    /// Roots repeated according to multiplicity.
    pub fn expanded(&self) -> Vec<Complex> {
        self.roots
            .iter()
            .zip(&self.multiplicities)
            .flat_map(|(&z, &m)| std::iter::repeat_n(z, m))
            .collect()
    }

    /// Iterates `(root, multiplicity, residual)`.
    pub fn iter(&self) -> impl Iterator<Item = (Complex, usize, f64)> + '_ {
        self.roots
            .iter()
            .zip(&self.multiplicities)
            .zip(&self.residuals)
            .map(|((&z, &m), &r)| (z, m, r))
    }
}

/// Greedy single-linkage clustering; each cluster is represented by the mean
/// of its members.
fn cluster(values: &[Complex], tol: f64) -> Vec<(Complex, usize)> {
    let mut sorted = values.to_vec();
    sorted.sort_by(lex_cmp);
    let mut members: Vec<Vec<Complex>> = Vec::new();
    for z in sorted {
        let hit = members.iter_mut().find(|group| {
            group.iter().any(|w| {
                let bound = tol * (1.0 + z.norm().max(w.norm()));
                (z - w).norm() <= bound
            })
        });
        match hit {
            Some(group) => group.push(z),
            None => members.push(vec![z]),
        }
    }
    let mut out: Vec<(Complex, usize)> = members
        .into_iter()
        .map(|g| {
            let n = g.len();
            let mean = g.iter().sum::<Complex>() / n as f64;
            (mean, n)
        })
        .collect();
    out.sort_by(|a, b| lex_cmp(&a.0, &b.0));
    out
}

/// One Newton step, kept only if it is finite and strictly reduces `|f|`.
pub fn newton_polish(poly: &Poly, x: Complex) -> Complex {
    let (f, df) = poly.eval_with_derivative(x);
    if f.norm() == 0.0 || df.norm() == 0.0 {
        return x;
    }
    let next = x - f / df;
    if !is_finite(next) {
        return x;
    }
    if poly.eval(next).norm() < f.norm() {
        next
    } else {
        x
    }
}

/// Optionally polishes `values` and clusters them into a [`RootSet`].
pub fn finish(poly: &Poly, values: &[Complex], opts: &SolveOptions) -> RootSet {
    let polished: Vec<Complex> = if opts.polish {
        values.iter().map(|&x| newton_polish(poly, x)).collect()
    } else {
        values.to_vec()
    };
    RootSet::new(poly, &polished, opts.cluster_tol)
}

/// The two roots of `z² + bz + c`, larger magnitude first.
///
/// The larger root is formed without cancellation and the smaller one from
/// the product `c`.
pub fn quadratic_roots(b: Complex, c: Complex) -> [Complex; 2] {
    quadratic_roots_with_discriminant(b, c, b * b - 4.0 * c)
}

/// As [`quadratic_roots`], with `b² - 4c` supplied by the caller (e.g. from a
/// more accurate formula).
pub fn quadratic_roots_with_discriminant(b: Complex, c: Complex, disc: Complex) -> [Complex; 2] {
    let s = principal_sqrt(disc);
    // pick the sign that adds magnitudes: Re(b · conj(s)) ≥ 0
    let s = if (b * s.conj()).re >= 0.0 { s } else { -s };
    let big = -(b + s) / 2.0;
    if big.norm() == 0.0 {
        return [big, big];
    }
    [big, c / big]
}

/// Solves a degree 1 or 2 polynomial.
pub fn solve_low_degree(poly: &Poly, opts: &SolveOptions) -> Result<RootSet> {
    let values = match poly.degree() {
        1 => vec![-poly.coeff(1)],
        2 => quadratic_roots(poly.coeff(1), poly.coeff(2)).to_vec(),
        n => return Err(Error::UnsupportedDegree(n)),
    };
    Ok(finish(poly, &values, opts))
}
