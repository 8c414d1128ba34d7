use confluent_core::suite::{
    pochhammer_report, run_exact_suite, run_identity, run_ode_residual_suite, run_suite, verify_bessel_sum,
    verify_gamma_identities, verify_integral_repr, verify_kummer_bessel_relation, verify_mellin_barnes,
    verify_sin_expansion, verify_sum_formula, Axis, GridSpec, IdentityReport, SuiteConfig,
};
use confluent_core::{BigRational, Complex64, Error, IdentityId};
use proptest::prelude::*;
use std::f64::consts::PI;

fn grid(tol: f64, axes: &[(&str, &[f64])]) -> GridSpec {
    axes.iter().fold(GridSpec::new(tol), |g, (name, vals)| {
        g.with_axis(name, Axis::reals(vals))
    })
}

fn small_config() -> SuiteConfig {
    let mut cfg = SuiteConfig::default();
    cfg.exact.samples = 10;
    cfg
}

fn json(reports: &[IdentityReport]) -> String {
    serde_json::to_string(reports).unwrap()
}

#[test]
fn suite_touches_every_identity_and_passes() {
    let reports = run_suite(&small_config()).unwrap();
    let ids: Vec<IdentityId> = reports.iter().map(|r| r.id).collect();
    assert_eq!(ids, IdentityId::ALL.to_vec());
    for r in &reports {
        assert!(r.all_passed(), "{} max rel err {}", r.id, r.summary.max_rel_err);
        assert!(r.summary.total > 0);
    }
}

#[test]
fn reports_do_not_depend_on_worker_count() {
    let cfg = small_config();
    let run = |threads| {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .unwrap()
            .install(|| json(&run_suite(&cfg).unwrap()))
    };
    let one = run(1);
    assert_eq!(one, run(4));
    assert_eq!(one, run(7));
}

#[test]
fn json_round_trip_is_bit_exact() {
    let reports = run_suite(&small_config()).unwrap();
    let text = json(&reports);
    let back: Vec<IdentityReport> = serde_json::from_str(&text).unwrap();
    for (a, b) in reports.iter().zip(&back) {
        assert_eq!(a.entries.len(), b.entries.len());
        for (x, y) in a.entries.iter().zip(&b.entries) {
            assert_eq!(x.lhs.re.to_bits(), y.lhs.re.to_bits());
            assert_eq!(x.lhs.im.to_bits(), y.lhs.im.to_bits());
            assert_eq!(x.rhs.re.to_bits(), y.rhs.re.to_bits());
            assert_eq!(x.rhs.im.to_bits(), y.rhs.im.to_bits());
            assert_eq!(x.abs_err.to_bits(), y.abs_err.to_bits());
            assert_eq!(x.rel_err.to_bits(), y.rel_err.to_bits());
            assert_eq!(x.params, y.params);
            assert_eq!(x.pass, y.pass);
        }
        assert_eq!(a, b);
    }
    assert_eq!(json(&back), text);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(20))]

    #[test]
    fn looser_tolerance_never_fails_more(t1 in -16.0f64..-6.0, dt in 0.0f64..4.0) {
        let mut report = verify_bessel_sum(&GridSpec::default_for(IdentityId::BesselSum).unwrap()).unwrap();
        report.rethreshold(10f64.powf(t1));
        let tight: Vec<bool> = report.entries.iter().map(|e| e.pass).collect();
        report.rethreshold(10f64.powf(t1 + dt));
        for (was, now) in tight.iter().zip(report.entries.iter().map(|e| e.pass)) {
            prop_assert!(!was || now);
        }
    }
}

#[test]
fn bessel_sum_at_nu_zero_is_the_sine_closed_form() {
    let g = GridSpec::default_for(IdentityId::BesselSum).unwrap();
    let report = verify_bessel_sum(&g.with_axis("nu", Axis::reals(&[0.0]))).unwrap();
    for e in &report.entries {
        let z = match e.params[1] {
            confluent_core::suite::ParamValue::Real(z) => z,
            ref p => panic!("{p:?}"),
        };
        let closed = (2.0 / (PI * z)).sqrt() * z.sin();
        assert!((e.lhs.re - closed).abs() <= 1e-11 * closed.abs(), "z = {z}");
    }
}

#[test]
fn integral_repr_examples() {
    let ok = verify_integral_repr(&grid(1e-10, &[("kappa", &[0.0]), ("mu", &[0.5]), ("z", &[2.0])])).unwrap();
    assert!(ok.all_passed());
    assert!((ok.entries[0].lhs.re - 2.0 * 1f64.sinh()).abs() < 1e-14);
    let mut edge = grid(1e-8, &[("kappa", &[0.49]), ("mu", &[0.01]), ("z", &[1.0])]);
    edge.quad_order = 256;
    assert!(verify_integral_repr(&edge).unwrap().all_passed());
    edge.quad_order = 512;
    assert!(verify_integral_repr(&edge).unwrap().all_passed());
    let bad = grid(1e-10, &[("kappa", &[0.0, 1.0]), ("mu", &[0.2]), ("z", &[1.0, 2.0])]);
    match verify_integral_repr(&bad) {
        Err(Error::GridValidation(problems)) => {
            assert_eq!(problems.len(), 1, "{problems:?}");
            assert!(problems[0].contains("kappa = 1"), "{problems:?}");
        }
        other => panic!("{other:?}"),
    }
}

#[test]
fn sum_formula_examples() {
    let g = grid(1e-10, &[("a", &[0.5]), ("b", &[1.25]), ("z", &[1.0])]);
    assert!(verify_sum_formula(&g).unwrap().all_passed());
    let g = grid(1e-12, &[("a", &[0.7]), ("b", &[0.7]), ("z", &[1.5])]);
    let r = verify_sum_formula(&g).unwrap();
    assert!(r.all_passed());
    assert!((r.entries[0].rhs.re - 1.5f64.exp()).abs() <= 1e-15 * 1.5f64.exp());
    let mut g = GridSpec::new(1e-9)
        .with_axis("a", Axis::Values(vec![Complex64::new(0.3, 0.2)]))
        .with_axis("b", Axis::Values(vec![Complex64::new(1.1, -0.4)]))
        .with_axis("z", Axis::Values(vec![Complex64::new(1.0, 1.0)]));
    assert!(verify_sum_formula(&g).unwrap().all_passed());
    g.set_axis("b", Axis::reals(&[-1.5]));
    assert!(matches!(verify_sum_formula(&g), Err(Error::GridValidation(_))));
}

#[test]
fn bessel_examples() {
    let r = verify_bessel_sum(&grid(1e-11, &[("nu", &[0.0]), ("z", &[1.0])])).unwrap();
    assert!(r.all_passed());
    assert!(verify_bessel_sum(&grid(1e-10, &[("nu", &[1.5]), ("z", &[10.0])]))
        .unwrap()
        .all_passed());
    let r = verify_bessel_sum(&grid(1e-10, &[("nu", &[0.5]), ("z", &[PI])])).unwrap();
    assert!(r.all_passed());
    assert!((r.entries[0].lhs.re - 2f64.sqrt() / PI).abs() < 1e-15);
    let kb = verify_kummer_bessel_relation(&grid(1e-11, &[("nu", &[0.0]), ("z", &[1.0])])).unwrap();
    assert!(kb.all_passed());
    assert_eq!(kb.entries.len(), 3);
    assert!(
        verify_kummer_bessel_relation(&grid(1e-10, &[("nu", &[2.5]), ("z", &[5.0])]))
            .unwrap()
            .all_passed()
    );
}

#[test]
fn sine_examples() {
    let mut g = grid(1e-12, &[("z", &[1.0])]);
    g.terms = 25;
    assert!(verify_sin_expansion(&g).unwrap().all_passed());
    let mut g = grid(1e-11, &[("z", &[PI])]);
    g.terms = 30;
    let r = verify_sin_expansion(&g).unwrap();
    assert!(r.all_passed());
    assert!(r.entries[0].abs_err <= 1e-11);
    let mut g = grid(1e-9, &[("z", &[15.0])]);
    g.terms = 60;
    assert!(verify_sin_expansion(&g).unwrap().all_passed());
}

#[test]
fn gamma_identity_examples() {
    let r = verify_gamma_identities(&GridSpec::default_for(IdentityId::GammaIdentities).unwrap()).unwrap();
    assert!(r.all_passed());
    assert_eq!(r.entries.len(), 6 + 5 + 50);
    let mut g = grid(
        1e-14,
        &[
            ("beta_x", &[2.0]),
            ("beta_y", &[3.0]),
            ("duplication", &[1.0]),
            ("reflection", &[0.5]),
        ],
    );
    g.quad_order = 4;
    let r = verify_gamma_identities(&g).unwrap();
    assert!((r.entries[0].lhs.re - 1.0 / 12.0).abs() < 1e-16);
    assert!((r.entries[0].rhs.re - 1.0 / 12.0).abs() < 1e-15);
}

#[test]
fn mellin_barnes_examples() {
    assert!(verify_mellin_barnes(&grid(1e-5, &[("nu", &[3.0]), ("z", &[2.0])]))
        .unwrap()
        .all_passed());
    assert!(verify_mellin_barnes(&grid(1e-4, &[("nu", &[2.0]), ("z", &[0.5])]))
        .unwrap()
        .all_passed());
    assert!(matches!(
        verify_mellin_barnes(&grid(1e-5, &[("nu", &[1.0]), ("z", &[1.0])])),
        Err(Error::GridValidation(_))
    ));
}

#[test]
fn exact_suite_examples() {
    let [poch, saal] = run_exact_suite(42, 40, 20, 200).unwrap();
    assert_eq!(poch.summary.passed, poch.summary.total);
    assert_eq!(poch.summary.total, 200 * 41);
    assert_eq!(poch.summary.max_rel_err, 0.0);
    assert_eq!(saal.summary.passed, saal.summary.total);
    assert_eq!(saal.summary.total, 200 * 21);
    assert!(poch.rejected_draws.is_some() && saal.rejected_draws.is_some());

    let forced = pochhammer_report(
        &[(
            BigRational::from_integer(0.into()),
            BigRational::new(1.into(), 2.into()),
        )],
        3,
    )
    .unwrap();
    assert!(forced.all_passed());
    assert_eq!(forced.entries[3].lhs.re, 0.0);
    assert_eq!(forced.entries[3].rhs.re, 0.0);
    assert_eq!(forced.entries[0].lhs.re, 1.0);
}

#[test]
fn ode_residual_examples() {
    assert!(
        run_ode_residual_suite(&grid(1e-10, &[("kappa", &[0.0]), ("mu", &[0.5]), ("z", &[2.0])]))
            .unwrap()
            .all_passed()
    );
    assert!(run_ode_residual_suite(&grid(
        1e-9,
        &[("kappa", &[0.7]), ("mu", &[1.5]), ("z", &[0.1, 1.0, 5.0, 10.0])]
    ))
    .unwrap()
    .all_passed());
    assert!(
        run_ode_residual_suite(&grid(1e-9, &[("kappa", &[-0.3]), ("mu", &[2.25]), ("z", &[10.0])]))
            .unwrap()
            .all_passed()
    );
}

#[test]
fn tolerance_below_rounding_fails() {
    let mut cfg = small_config();
    cfg.set_tolerance(1e-18);
    let r = run_identity(IdentityId::SumFormula, &cfg).unwrap();
    assert!(!r.all_passed());
}

#[test]
fn missing_axis_is_a_validation_error() {
    let g = grid(1e-10, &[("nu", &[1.0])]);
    assert!(matches!(verify_bessel_sum(&g), Err(Error::GridValidation(_))));
}
