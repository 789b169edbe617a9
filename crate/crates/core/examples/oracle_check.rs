//! Cross-checks the closed forms against the iterative Weierstrass oracle on
//! random quartics.
//!
//! cargo run --example oracle_check

use quartica::oracle::{match_multisets, oracle_roots, OracleConfig};
use quartica::quartic::solve_quartic;
use quartica::{Poly, SolveOptions};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn main() -> quartica::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let cfg = OracleConfig::default();
    let mut worst: f64 = 0.0;
    for _ in 0..1000 {
        let mut coeffs = vec![1.0];
        coeffs.extend((0..4).map(|_| rng.gen_range(-10.0..10.0)));
        let f = Poly::from_real(&coeffs)?;
        let closed = solve_quartic(&f, &SolveOptions::default())?;
        let iter = oracle_roots(&f, &cfg)?;
        match match_multisets(&closed, &iter, 1e-6) {
            Some(m) => worst = worst.max(m.max_distance / f.scale()),
            None => println!("mismatch on {coeffs:?}"),
        }
    }
    println!("1000 quartics, worst scaled distance {worst:.2e}");
    Ok(())
}
