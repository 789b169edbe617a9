//! Closed-form roots of monic polynomials of degree at most four.
//!
//! Cubics are solved by Cardano's formula, Viète's substitution, the
//! trigonometric and hyperbolic real forms, and a double-root shortcut.
//! Quartics are solved through the cubic resolvent by the half-sum
//! construction, Ferrari, Descartes, Euler and Lagrange. An independent
//! Weierstrass iteration in [`oracle`] serves as ground truth.
//!
//! ```
//! use quartica::{cubic::solve_cardano, Poly, SolveOptions};
//!
//! let f = Poly::from_real(&[1.0, 0.0, -7.0, -6.0]).unwrap();
//! let (roots, _) = solve_cardano(&f, &SolveOptions::default()).unwrap();
//! let re: Vec<f64> = roots.roots().iter().map(|z| z.re.round()).collect();
//! assert_eq!(re, [-2.0, -1.0, 3.0]);
//! ```

pub mod cli;
pub mod complex;
pub mod cubic;
pub mod error;
pub mod oracle;
pub mod poly;
pub mod quartic;
pub mod roots;

pub use complex::Complex;
pub use error::{Error, Result};
pub use poly::{depress, discriminant, make_poly, DepressedForm, Poly};
pub use roots::{RootSet, SolveOptions};
