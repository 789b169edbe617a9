use proptest::prelude::*;
use quartica::complex::{c, real};
use quartica::cubic::{
    classify_real_cubic, nickalls_params, quadratic_resolvent, solve_cardano, solve_cubic,
    solve_double_root_shortcut, solve_hyperbolic, solve_trig_all, solve_viete, trig_cos_roots,
    trig_sin_roots, CubicKind,
};
use quartica::oracle::{match_multisets, match_roots};
use quartica::poly::{depress_cubic, discriminant, make_poly, vieta_residual};
use quartica::{Poly, SolveOptions};

fn real_cubic() -> impl Strategy<Value = Poly> {
    prop::collection::vec(-10.0..10.0f64, 3).prop_map(|v| {
        Poly::from_real(&[1.0, v[0], v[1], v[2]]).unwrap()
    })
}

fn complex_cubic() -> impl Strategy<Value = Poly> {
    prop::collection::vec((-10.0..10.0f64, -10.0..10.0f64), 3).prop_map(|v| {
        let mut cs = vec![real(1.0)];
        cs.extend(v.into_iter().map(|(a, b)| c(a, b)));
        make_poly(&cs).unwrap()
    })
}

fn delta_threshold(f: &Poly) -> f64 {
    1e-10 * f.scale().powi(4)
}

proptest! {
    #[test]
    fn vieta_residual_is_small(f in prop_oneof![real_cubic(), complex_cubic()]) {
        let (rs, _) = solve_cardano(&f, &SolveOptions::default()).unwrap();
        prop_assert!(vieta_residual(&f, &rs) <= 1e-9 * f.scale());
        let rs = solve_viete(&f, &SolveOptions::default()).unwrap();
        prop_assert!(vieta_residual(&f, &rs) <= 1e-9 * f.scale());
    }

    #[test]
    fn cardano_pairing(f in prop_oneof![real_cubic(), complex_cubic()]) {
        let g = depress_cubic(&f).unwrap();
        let (_, it) = solve_cardano(&f, &SolveOptions::raw()).unwrap();
        let s = f.scale();
        prop_assert!((it.u * it.v + g.p / 3.0).norm() <= 1e-9 * s * s);
        prop_assert!((it.u3 + it.v3 + g.q).norm() <= 1e-9 * s * s * s);
        let r = quadratic_resolvent(g.p, g.q);
        prop_assert!(r.eval(it.u3).norm() <= 1e-8 * s.powi(6));
    }

    #[test]
    fn real_cubics_have_conjugate_closed_roots(f in real_cubic()) {
        let (rs, _) = solve_cardano(&f, &SolveOptions::default()).unwrap();
        let roots = rs.expanded();
        let conj: Vec<_> = roots.iter().map(|z| z.conj()).collect();
        prop_assert!(match_roots(&roots, &conj, 1e-9 * f.scale()).is_some());
    }

    #[test]
    fn nickalls_identity(f in real_cubic()) {
        let n = nickalls_params(&f).unwrap();
        let d = discriminant(&f).unwrap();
        prop_assert!((n.discriminant() - d).norm() <= 1e-9 * f.scale().powi(4));
    }

    #[test]
    fn classification_matches_cardano_real_count(f in real_cubic()) {
        let cl = classify_real_cubic(&f, 1e-10).unwrap();
        prop_assume!(cl.delta.abs() > 1e-6 * f.scale());
        let (rs, _) = solve_cardano(&f, &SolveOptions::default()).unwrap();
        let real_count = rs
            .expanded()
            .iter()
            .filter(|z| z.im.abs() <= 1e-8 * f.scale())
            .count();
        prop_assert_eq!(Some(real_count), cl.kind.real_roots_with_multiplicity());
    }

    #[test]
    fn real_forms_agree_with_cardano(f in real_cubic()) {
        let delta = discriminant(&f).unwrap().re;
        let opts = SolveOptions::default();
        let (cardano, _) = solve_cardano(&f, &opts).unwrap();
        if delta > delta_threshold(&f) {
            let trig = solve_trig_all(&f, &opts).unwrap();
            prop_assert!(match_multisets(&trig, &cardano, 1e-8).is_some());
            let g = depress_cubic(&f).unwrap();
            let mut cos = trig_cos_roots(&g).unwrap();
            let mut sin = trig_sin_roots(&g).unwrap();
            cos.sort_by(f64::total_cmp);
            sin.sort_by(f64::total_cmp);
            for (a, b) in cos.iter().zip(&sin) {
                prop_assert!((a - b).abs() <= 1e-8);
            }
        } else if delta < -delta_threshold(&f) && depress_cubic(&f).unwrap().p.re != 0.0 {
            let hyp = solve_hyperbolic(&f, &opts).unwrap();
            prop_assert!(match_multisets(&hyp, &cardano, 1e-8).is_some());
        }
    }

    #[test]
    fn double_root_constructions(a in -20i32..20, b in -20i32..20) {
        prop_assume!(a != b);
        let (a, b) = (a as f64 / 4.0, b as f64 / 4.0);
        let f = Poly::from_roots(&[real(a), real(a), real(b)]).unwrap();
        let cl = classify_real_cubic(&f, 1e-10).unwrap();
        prop_assert_eq!(cl.kind, CubicKind::DoubleAndSimpleReal);
        for rs in [
            solve_double_root_shortcut(&f, &SolveOptions::default()).unwrap(),
            solve_cubic(&f, &SolveOptions::default()).unwrap(),
        ] {
            let want = [real(a), real(a), real(b)];
            prop_assert!(match_roots(&rs.expanded(), &want, 1e-9).is_some());
            let mut m = rs.multiplicities().to_vec();
            m.sort_unstable();
            prop_assert_eq!(m, vec![1, 2]);
        }
    }
}

#[test]
fn classification_examples() {
    let cases = [
        (vec![1.0, 0.0, -1.0, 0.0], CubicKind::ThreeSimpleReal),
        (vec![1.0, 0.0, 1.0, 0.0], CubicKind::OneRealTwoComplexConjugate),
        (vec![1.0, -4.0, 5.0, -2.0], CubicKind::DoubleAndSimpleReal),
        (vec![1.0, -3.0, 3.0, -1.0], CubicKind::TripleReal),
    ];
    for (coeffs, kind) in cases {
        let f = Poly::from_real(&coeffs).unwrap();
        assert_eq!(classify_real_cubic(&f, 1e-10).unwrap().kind, kind, "{coeffs:?}");
    }
}
