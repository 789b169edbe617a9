//! All five quartic solvers on the same input, with their resolvent data.
//!
//! cargo run --example quartic_methods [a b c d e]

use quartica::quartic::{
    solve_descartes_with_factors, solve_euler, solve_ferrari, solve_fourier, solve_lagrange,
};
use quartica::{Poly, RootSet, SolveOptions};

fn show(name: &str, rs: &RootSet) {
    let listed: Vec<String> = rs.expanded().iter().map(|z| format!("{z:.12}")).collect();
    println!("{name:>9}: {}  (max |f| {:.1e})", listed.join(", "), rs.max_residual());
}

fn main() -> quartica::Result<()> {
    let args: Vec<f64> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let coeffs = if args.len() == 5 { args } else { vec![1.0, 2.0, 0.0, -1.0, -1.0] };
    let f = Poly::from_real(&coeffs)?;
    let opts = SolveOptions::default();
    println!("coefficients {coeffs:?}");

    let (fourier, it) = solve_fourier(&f, &opts)?;
    println!("resolvent roots u, v, w = {:.6}, {:.6}, {:.6}", it.uvw[0], it.uvw[1], it.uvw[2]);
    show("fourier", &fourier);

    let (ferrari, it) = solve_ferrari(&f, &opts)?;
    println!("ferrari picked u = {:.6}", it.chosen_u);
    show("ferrari", &ferrari);

    let (descartes, fact) = solve_descartes_with_factors(&f, &opts)?;
    if let Some(d) = fact {
        println!("(y² + {:.4}y + {:.4})(y² + {:.4}y + {:.4})", d.k, d.l, d.m, d.n);
    }
    show("descartes", &descartes);
    show("lagrange", &solve_lagrange(&f, &opts)?);
    show("euler", &solve_euler(&f, &opts)?);
    Ok(())
}
