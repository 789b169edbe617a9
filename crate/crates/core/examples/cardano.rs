//! Cardano and Viète on a few cubics, showing the resolvent intermediates.
//!
//! cargo run --example cardano

use quartica::cubic::{solve_cardano, solve_viete};
use quartica::{Poly, SolveOptions};

fn main() -> quartica::Result<()> {
    let cubics: [&[f64]; 4] = [
        &[1.0, 0.0, -7.0, -6.0],
        &[1.0, 0.0, -9.0, -10.0],
        &[1.0, 0.0, 6.0, -20.0],
        &[1.0, -3.0, 3.0, -1.0],
    ];
    let opts = SolveOptions::default();
    for coeffs in cubics {
        let f = Poly::from_real(coeffs)?;
        let (roots, it) = solve_cardano(&f, &opts)?;
        println!("{coeffs:?}");
        println!("  u³ = {:.6}, v³ = {:.6}, uv = {:.6}", it.u3, it.v3, it.u * it.v);
        for (z, m, res) in roots.iter() {
            println!("  cardano  {z:.12}  x{m}  |f| = {res:.1e}");
        }
        let viete = solve_viete(&f, &opts)?;
        let listed: Vec<String> = viete.expanded().iter().map(|z| format!("{z:.12}")).collect();
        println!("  viete    {}", listed.join(", "));
    }
    Ok(())
}
