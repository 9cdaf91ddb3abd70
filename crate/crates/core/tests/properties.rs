use nu_forge::catalog;
use nu_forge::nucore::SolvableSystem;
use nu_forge::orthopoly::{
    eval_poly, eval_poly_derivative, ode_residual, poly_coefficients, rodrigues_reference,
    PolynomialFamily, WeightFunction,
};
use proptest::prelude::*;

fn family() -> impl Strategy<Value = PolynomialFamily> {
    prop_oneof![
        (-0.9f64..5.0, -0.9f64..5.0)
            .prop_map(|(alpha, beta)| PolynomialFamily::Jacobi { alpha, beta }),
        (-0.9f64..5.0).prop_map(|alpha| PolynomialFamily::Laguerre { alpha }),
        Just(PolynomialFamily::Hermite),
    ]
}

/// A point in the natural interval, kept inside `(-5, 20)` for the unbounded ones.
fn point(family: PolynomialFamily, t: f64) -> f64 {
    match family {
        PolynomialFamily::Jacobi { .. } => -0.999 + 1.998 * t,
        PolynomialFamily::Laguerre { .. } => 20.0 * t,
        PolynomialFamily::Hermite => -5.0 + 10.0 * t,
    }
}

fn sign_changes(system: &SolvableSystem, n: usize, lo: f64, hi: f64) -> usize {
    let level = system.level(n).unwrap();
    let mut prev = 0.0f64;
    let mut changes = 0;
    for i in 1..2000 {
        let r = lo + (hi - lo) * i as f64 / 2000.0;
        let v = level.wavefunction(r).unwrap().psi;
        if v != 0.0 {
            if prev != 0.0 && (v > 0.0) != (prev > 0.0) {
                changes += 1;
            }
            prev = v;
        }
    }
    changes
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn classical_equation_is_satisfied(f in family(), n in 0usize..=8, t in 0.0f64..1.0) {
        let s = point(f, t);
        let y = eval_poly(f, n, s).unwrap();
        let y1 = eval_poly_derivative(f, n, s, 1).unwrap();
        let y2 = eval_poly_derivative(f, n, s, 2).unwrap();
        let res = ode_residual(f, n, s).unwrap();
        prop_assert!(res.abs() < 1e-9 * (1.0 + y.abs() + y1.abs() + y2.abs()), "{f} n={n} s={s}: {res}");
    }

    #[test]
    fn rodrigues_agrees_with_recurrence(f in family(), n in 0usize..=8, t in 0.0f64..1.0) {
        let s = point(f, t);
        let reference = rodrigues_reference(f, n, s).unwrap();
        let value = eval_poly(f, n, s).unwrap();
        let scale: f64 = poly_coefficients(f, n)
            .unwrap()
            .iter()
            .enumerate()
            .map(|(k, c)| c.abs() * s.abs().powi(k as i32))
            .sum();
        prop_assert!((reference - value).abs() <= 1e-12 * scale.max(1.0), "{f} n={n} s={s}: {reference} vs {value}");
    }

    #[test]
    fn weight_satisfies_pearson_equation(f in family(), t in 0.05f64..0.95) {
        // (σρ)' = τρ with a five-point stencil
        let s = point(f, t).max(0.05);
        let w = WeightFunction::new(f).unwrap();
        let sigma = f.classical_sigma();
        let g = |x: f64| sigma.eval(x) * w.eval(x);
        let h = 1e-3;
        let d = (-g(s + 2.0 * h) + 8.0 * g(s + h) - 8.0 * g(s - h) + g(s - 2.0 * h)) / (12.0 * h);
        let rhs = f.classical_tau().eval(s) * w.eval(s);
        prop_assert!((d - rhs).abs() < 1e-6 * (1.0 + rhs.abs() + g(s).abs()), "{f} s={s}: {d} vs {rhs}");
    }

    #[test]
    fn weighted_and_standard_spectra_coincide(alpha in 0.51f64..4.0, beta in 0.51f64..4.0, a in 0.2f64..3.0) {
        let p = catalog::poschl_teller(alpha, beta, a).unwrap();
        let q = catalog::poschl_teller_alt(alpha, beta, a).unwrap();
        for n in 0..=8 {
            let (e, f) = (p.energy(n).unwrap(), q.energy(n).unwrap());
            prop_assert!((e - f).abs() < 1e-12 * e.abs().max(1.0));
        }
    }

    #[test]
    fn oscillator_spectrum_is_exact(ell in 0u32..=4, w in 0.1f64..3.0) {
        let s = catalog::radial_oscillator(ell, w).unwrap();
        for n in 0..=10 {
            let exact = w * (2.0 * n as f64 + ell as f64 + 1.5);
            prop_assert!((s.energy(n).unwrap() - exact).abs() < 1e-13 * exact.max(1.0));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn node_count_equals_degree(alpha in 0.51f64..3.0, beta in 0.51f64..3.0, a in 0.5f64..2.0, ell in 0u32..3, w in 0.5f64..2.0) {
        let pt = catalog::poschl_teller(alpha, beta, a).unwrap();
        let osc = catalog::radial_oscillator(ell, w).unwrap();
        let r_max = 12.0 / w.sqrt() + 6.0;
        for n in 0..=8 {
            prop_assert_eq!(sign_changes(&pt, n, 0.0, std::f64::consts::PI / a), n);
            prop_assert_eq!(sign_changes(&osc, n, 0.0, r_max), n);
        }
    }

    #[test]
    fn wavefunctions_vanish_at_both_ends(alpha in 0.51f64..3.0, beta in 0.51f64..3.0, n in 0usize..=6) {
        let pt = catalog::poschl_teller(alpha, beta, 1.0).unwrap();
        let level = pt.level(n).unwrap();
        let right = std::f64::consts::PI;
        let mut prev = (f64::INFINITY, f64::INFINITY);
        let first = (level.wavefunction(1e-2).unwrap().psi.abs(), level.wavefunction(right - 1e-2).unwrap().psi.abs());
        for k in 2..8 {
            let eps = 10f64.powi(-k);
            let l = level.wavefunction(eps).unwrap().psi.abs();
            let r = level.wavefunction(right - eps).unwrap().psi.abs();
            prop_assert!(l < prev.0 && r < prev.1);
            prev = (l, r);
        }
        // Ψ ~ r^{(2α+1)/4} with exponent above 1/2
        prop_assert!(prev.0 < 1e-2 * first.0 && prev.1 < 1e-2 * first.1);
    }
}

#[test]
fn oscillator_vanishes_at_origin_and_infinity() {
    for ell in 0..3 {
        let s = catalog::radial_oscillator(ell, 1.0).unwrap();
        for n in 0..=4 {
            let level = s.level(n).unwrap();
            let mut prev = f64::INFINITY;
            for k in 2..8 {
                let v = level.wavefunction(10f64.powi(-k)).unwrap().psi.abs();
                assert!(v < prev);
                prev = v;
            }
            let mut prev = f64::INFINITY;
            for r in [10.0, 15.0, 20.0, 30.0] {
                let v = level.wavefunction(r).unwrap().psi.abs();
                assert!(v < prev);
                prev = v;
            }
            assert!(prev < 1e-30);
        }
    }
}

#[test]
fn inversely_linear_members_have_half_as_many_nodes() {
    // s = √(2ar) only covers s > 0, where H_n has ⌊n/2⌋ zeros
    for n in 0..=8 {
        let s = catalog::inversely_linear_nonrel(1.0, n).unwrap();
        assert_eq!(sign_changes(&s, n, 0.0, 40.0), n / 2, "n={n}");
    }
}

#[test]
fn systems_are_thread_safe() {
    fn assert_send_sync<T: Send + Sync>() {}
    assert_send_sync::<SolvableSystem>();
    assert_send_sync::<nu_forge::kg::KgLevel>();
    assert_send_sync::<nu_forge::oracle::Grid>();
    assert_send_sync::<nu_forge::Error>();
    let s = catalog::poschl_teller(1.0, 1.0, 1.0).unwrap();
    let e = std::thread::scope(|scope| scope.spawn(|| s.energy(2).unwrap()).join().unwrap());
    assert_eq!(e, s.energy(2).unwrap());
}
