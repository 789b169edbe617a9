//! Root-structure classification of real cubics and the Nickalls geometry
//! behind it.
//!
//! cargo run --example classify

use quartica::cubic::{classify_real_cubic, nickalls_params, solve_cubic, stationary_values};
use quartica::{Poly, SolveOptions};

fn main() -> quartica::Result<()> {
    let cubics: [&[f64]; 5] = [
        &[1.0, 0.0, -1.0, 0.0],
        &[1.0, 0.0, 1.0, 0.0],
        &[1.0, -4.0, 5.0, -2.0],
        &[1.0, -3.0, 3.0, -1.0],
        &[2.0, -3.0, -12.0, 20.0],
    ];
    for coeffs in cubics {
        let f = Poly::from_real(coeffs)?;
        let cl = classify_real_cubic(&f, 1e-10)?;
        let n = nickalls_params(&f)?;
        let (lo, hi) = stationary_values(&f, &n);
        println!("{coeffs:?}");
        println!("  {:?}, Δ = {:.6}", cl.kind, cl.delta);
        println!(
            "  inflection ({:.4}, {:.4}), δ² = {:.4}, h = {:.4}",
            n.inflection_x, n.inflection_y, n.delta_g.re, n.h.re
        );
        println!("  stationary values {:.4} and {:.4}", lo.re, hi.re);
        let roots = solve_cubic(&f, &SolveOptions::default())?;
        for (z, m, _) in roots.iter() {
            println!("  root {z:.10} x{m}");
        }
    }
    Ok(())
}
