//! The arccosh and arcsinh forms for cubics with one real root.
//!
//! cargo run --example hyperbolic

use quartica::cubic::{hyperbolic_case, solve_hyperbolic};
use quartica::poly::depress_cubic;
use quartica::{Poly, SolveOptions};

fn main() -> quartica::Result<()> {
    let cubics: [&[f64]; 3] = [
        &[1.0, 0.0, 6.0, -20.0],
        &[1.0, 0.0, -3.0, 52.0],
        &[1.0, 0.0, -3.0, -52.0],
    ];
    for coeffs in cubics {
        let f = Poly::from_real(coeffs)?;
        let case = hyperbolic_case(&depress_cubic(&f)?);
        let roots = solve_hyperbolic(&f, &SolveOptions::raw())?;
        let listed: Vec<String> = roots.expanded().iter().map(|z| format!("{z:.12}")).collect();
        println!("{coeffs:?} {case:?}: {}", listed.join(", "));
    }
    Ok(())
}
