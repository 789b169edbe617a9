use proptest::prelude::*;
use quartica::complex::{c, real};
use quartica::poly::{
    depress, discriminant, discriminant_depressed, discriminant_magnitude, eval, expand_roots,
    make_poly, taylor_shift,
};
use quartica::{Complex, Poly};

fn coeff() -> impl Strategy<Value = f64> {
    -10.0..10.0f64
}

fn real_poly(degree: usize) -> impl Strategy<Value = Poly> {
    prop::collection::vec(coeff(), degree).prop_map(|mut v| {
        v.insert(0, 1.0);
        Poly::from_real(&v).unwrap()
    })
}

fn complex_poly(degree: usize) -> impl Strategy<Value = Poly> {
    prop::collection::vec((coeff(), coeff()), degree).prop_map(|v| {
        let mut cs = vec![real(1.0)];
        cs.extend(v.into_iter().map(|(a, b)| c(a, b)));
        make_poly(&cs).unwrap()
    })
}

fn roots(n: usize) -> impl Strategy<Value = Vec<Complex>> {
    prop::collection::vec((-5.0..5.0f64, -5.0..5.0f64), n)
        .prop_map(|v| v.into_iter().map(|(a, b)| c(a, b)).collect())
}

proptest! {
    #[test]
    fn depressed_form_agrees_at_sample_points(f in prop_oneof![real_poly(3), real_poly(4), complex_poly(3), complex_poly(4)]) {
        let g = depress(&f).unwrap();
        for t in [-2.0, -0.5, 0.0, 1.0, 3.0] {
            let y = c(t, 0.3 * t);
            let lhs = g.eval(y);
            let rhs = f.eval(y - g.shift);
            prop_assert!((lhs - rhs).norm() <= 1e-9 * (1.0 + rhs.norm()));
        }
    }

    #[test]
    fn discriminant_is_shift_invariant(f in prop_oneof![real_poly(3), real_poly(4), complex_poly(3), complex_poly(4)]) {
        let g = depress(&f).unwrap();
        let d = discriminant(&f).unwrap();
        let dg = discriminant_depressed(&g);
        let mag = discriminant_magnitude(&f).unwrap();
        prop_assert!((d - dg).norm() <= 1e-10 * mag, "{d} vs {dg}");
    }

    #[test]
    fn discriminant_is_squared_root_differences(r in prop_oneof![roots(3), roots(4)]) {
        let f = Poly::from_roots(&r).unwrap();
        let mut prod = real(1.0);
        for i in 0..r.len() {
            for j in i + 1..r.len() {
                prod *= (r[i] - r[j]) * (r[i] - r[j]);
            }
        }
        let d = discriminant(&f).unwrap();
        let mag = discriminant_magnitude(&f).unwrap();
        prop_assert!((d - prod).norm() <= 1e-9 * mag.max(1.0), "{d} vs {prod}");
    }

    #[test]
    fn taylor_shift_matches_evaluation(f in prop_oneof![real_poly(3), complex_poly(4)], t in coeff(), x in coeff()) {
        let shifted = make_poly(&taylor_shift(f.coeffs(), real(t))).unwrap();
        let lhs = shifted.eval(real(x));
        let rhs = eval(&f, real(x + t));
        prop_assert!((lhs - rhs).norm() <= 1e-9 * (1.0 + rhs.norm()));
    }

    #[test]
    fn expand_roots_vanishes_on_roots(r in prop_oneof![roots(2), roots(3), roots(4)]) {
        let f = make_poly(&expand_roots(&r)).unwrap();
        for z in &r {
            prop_assert!(f.eval(*z).norm() <= 1e-9 * f.scale().powi(2));
        }
    }
}

#[test]
fn depressed_quartic_example() {
    let f = Poly::from_real(&[1.0, 2.0, 0.0, -1.0, -1.0]).unwrap();
    let g = depress(&f).unwrap();
    assert_eq!((g.p, g.q, g.r), (real(-1.5), real(0.0), real(-0.6875)));
    for t in [-1.0, 0.0, 0.5, 2.0, 3.5] {
        assert!((g.eval(real(t)) - f.eval(real(t - 0.5))).norm() < 1e-12);
    }
}
