//! The resolvent cubics of a quartic and how they relate.
//!
//! cargo run --example resolvents

use quartica::poly::{depress_quartic, discriminant, discriminant_depressed};
use quartica::quartic::{cubic_resolvent, general_resolvent, lagrange_resolvent, pair_sum_products};
use quartica::{Complex, Poly};

fn show(name: &str, p: &Poly) {
    let cs: Vec<String> = p.coeffs().iter().map(|z| format!("{}", z.re)).collect();
    println!("{name:<18} [{}]", cs.join(", "));
}

fn main() -> quartica::Result<()> {
    // (x - 1)(x + 1)(x - 2)(x + 2)
    let f = Poly::from_real(&[1.0, 0.0, -5.0, 0.0, 4.0])?;
    let g = depress_quartic(&f)?;
    let r = cubic_resolvent(g.p, g.q, g.r);
    show("R", &r);
    show("shifted resolvent", &lagrange_resolvent(&f)?);
    show("pair products", &general_resolvent(&f)?);

    let roots: Vec<Complex> = [1.0, -1.0, 2.0, -2.0].map(Complex::from).to_vec();
    let sums = pair_sum_products(&roots, f.coeff(1))?;
    println!("pair-sum products  {:?}", sums.map(|z| z.re));
    println!(
        "Δ(R) = {}, Δ(f) = {}, Δ(depressed) = {}",
        discriminant(&r)?.re,
        discriminant(&f)?.re,
        discriminant_depressed(&g).re
    );
    Ok(())
}
