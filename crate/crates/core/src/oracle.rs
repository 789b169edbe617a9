//! Independent iterative root finder used as ground truth.
//!
//! Weierstrass (Durand–Kerner) simultaneous iteration: each estimate `zᵢ` is
//! corrected by `f(zᵢ) / ∏_{j≠i}(zᵢ - zⱼ)` until no root moves more than
//! `tol` in a sweep. Nothing here shares code with the closed-form solvers
//! beyond polynomial evaluation.

use std::f64::consts::TAU;

use itertools::Itertools;

use crate::complex::Complex;
use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::roots::{RootSet, DEFAULT_CLUSTER_TOL};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OracleConfig {
    pub max_iters: usize,
    /// Largest per-sweep movement, relative to `max(1, |z|)`, that counts as
    /// converged.
    pub tol: f64,
    pub seed_radius_factor: f64,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            max_iters: 200,
            tol: 1e-13,
            seed_radius_factor: 1.5,
        }
    }
}

// keeps seeds off the real axis and away from conjugate symmetry
const SEED_ANGLE_OFFSET: f64 = 0.4;

fn seeds(poly: &Poly, cfg: &OracleConfig) -> Vec<Complex> {
    let n = poly.degree();
    let max_coeff = poly.coeffs()[1..]
        .iter()
        .map(|z| z.norm())
        .fold(0.0, f64::max);
    let radius = cfg.seed_radius_factor * (1.0 + max_coeff).powf(1.0 / n as f64);
    (0..n)
        .map(|k| Complex::from_polar(radius, TAU * k as f64 / n as f64 + SEED_ANGLE_OFFSET))
        .collect()
}

/// Raw root estimates without clustering, in iteration order.
pub fn oracle_values(poly: &Poly, cfg: &OracleConfig) -> Result<Vec<Complex>> {
    let n = poly.degree();
    if !(1..=4).contains(&n) {
        return Err(Error::UnsupportedDegree(n));
    }
    if cfg.tol <= 0.0 || cfg.max_iters == 0 {
        return Err(Error::PreconditionViolated(
            "oracle needs tol > 0 and max_iters ≥ 1".into(),
        ));
    }
    if n == 1 {
        return Ok(vec![-poly.coeff(1)]);
    }
    let mut z = seeds(poly, cfg);
    let mut movement = f64::INFINITY;
    for _ in 0..cfg.max_iters {
        movement = 0.0;
        for i in 0..n {
            let denom: Complex = (0..n).filter(|&j| j != i).map(|j| z[i] - z[j]).product();
            if denom.norm() == 0.0 {
                continue;
            }
            let step = poly.eval(z[i]) / denom;
            if !(step.re.is_finite() && step.im.is_finite()) {
                continue;
            }
            z[i] -= step;
            movement = movement.max(step.norm() / z[i].norm().max(1.0));
        }
        if movement <= cfg.tol {
            return Ok(z);
        }
    }
    Err(Error::NoConvergence {
        iterations: cfg.max_iters,
        movement,
    })
}

/// All roots of `poly` (degree 1 to 4), clustered into a [`RootSet`].
pub fn oracle_roots(poly: &Poly, cfg: &OracleConfig) -> Result<RootSet> {
    let values = oracle_values(poly, cfg)?;
    Ok(RootSet::new(poly, &values, DEFAULT_CLUSTER_TOL))
}

/// A bijection between two root lists: `pairs[i] = (i, j)` maps `a[i]` to `b[j]`.
#[derive(Debug, Clone, PartialEq)]
pub struct Matching {
    pub pairs: Vec<(usize, usize)>,
    pub max_distance: f64,
}

fn greedy(a: &[Complex], b: &[Complex]) -> Option<Matching> {
    let mut used = vec![false; b.len()];
    let mut pairs = Vec::with_capacity(a.len());
    let mut max_distance: f64 = 0.0;
    for (i, x) in a.iter().enumerate() {
        let (j, d) = b
            .iter()
            .enumerate()
            .filter(|(j, _)| !used[*j])
            .map(|(j, y)| (j, (x - y).norm()))
            .min_by(|p, q| p.1.total_cmp(&q.1))?;
        used[j] = true;
        pairs.push((i, j));
        max_distance = max_distance.max(d);
    }
    Some(Matching {
        pairs,
        max_distance,
    })
}

/// The permutation minimizing the largest pair distance.
fn optimal(a: &[Complex], b: &[Complex]) -> Matching {
    (0..b.len())
        .permutations(b.len())
        .map(|perm| {
            let max_distance = perm
                .iter()
                .enumerate()
                .map(|(i, &j)| (a[i] - b[j]).norm())
                .fold(0.0, f64::max);
            Matching {
                pairs: perm.into_iter().enumerate().collect(),
                max_distance,
            }
        })
        .min_by(|p, q| p.max_distance.total_cmp(&q.max_distance))
        .expect("at least one permutation")
}

/// Matches two root lists with max pair distance ≤ `tol`, or `None`.
///
/// Tries greedy nearest-neighbour first and falls back to all permutations.
pub fn match_roots(a: &[Complex], b: &[Complex], tol: f64) -> Option<Matching> {
    if a.len() != b.len() {
        return None;
    }
    if let Some(m) = greedy(a, b) {
        if m.max_distance <= tol {
            return Some(m);
        }
    }
    let m = optimal(a, b);
    (m.max_distance <= tol).then_some(m)
}

/// Optimal bottleneck distance between two root lists of equal length.
pub fn multiset_distance(a: &[Complex], b: &[Complex]) -> f64 {
    if a.len() != b.len() {
        return f64::INFINITY;
    }
    if a.is_empty() {
        return 0.0;
    }
    optimal(a, b).max_distance
}

/// [`match_roots`] on the expanded (with multiplicity) roots of two sets.
pub fn match_multisets(a: &RootSet, b: &RootSet, tol: f64) -> Option<Matching> {
    match_roots(&a.expanded(), &b.expanded(), tol)
}

/// `max |coeffᵢ(∏(x - rᵢ)) - coeffᵢ(f)|`.
pub fn reconstruction_error(poly: &Poly, roots: &[Complex]) -> f64 {
    let rebuilt = crate::poly::expand_roots(roots);
    if rebuilt.len() != poly.coeffs().len() {
        return f64::INFINITY;
    }
    rebuilt
        .iter()
        .zip(poly.coeffs())
        .map(|(a, b)| (a - b).norm())
        .fold(0.0, f64::max)
}
