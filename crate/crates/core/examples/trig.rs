//! Real-only cosine and sine forms for cubics with three real roots.
//!
//! cargo run --example trig

use quartica::cubic::{solve_trig, trig_cos_roots, trig_sin_roots};
use quartica::poly::depress_cubic;
use quartica::{Poly, SolveOptions};

fn main() -> quartica::Result<()> {
    let f = Poly::from_real(&[1.0, 0.0, -9.0, -10.0])?;
    let g = depress_cubic(&f)?;
    println!("x³ - 9x - 10, depressed p = {}, q = {}", g.p.re, g.q.re);
    println!("cos form: {:?}", trig_cos_roots(&g)?);
    println!("sin form: {:?}", trig_sin_roots(&g)?);
    for k in 0..3 {
        println!("branch {k}: {:.15}", solve_trig(&f, k, &SolveOptions::default())?);
    }

    // Δ < 0 has only one real root, so the trig path refuses.
    let f = Poly::from_real(&[1.0, 0.0, 6.0, -20.0])?;
    match solve_trig(&f, 0, &SolveOptions::default()) {
        Ok(x) => println!("unexpected: {x}"),
        Err(e) => println!("x³ + 6x - 20: {e}"),
    }
    Ok(())
}
