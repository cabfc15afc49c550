use qho_tunnel::analysis::{compare_sweep, figure_dataset, ratio_sweep, rescaled_density, Cell, FigureParams};
use qho_tunnel::asymptotics::{big_f_n, leading_term, tunneling_olver, AsymptoticCoefficients};
use qho_tunnel::quadrature::{integrate_semi_infinite, integrate_with_breaks, tunneling_exact, TunnelingMethod};
use qho_tunnel::specfun::{airy_ai, airy_ai_prime};
use qho_tunnel::QuadratureConfigF64;

fn cfg() -> QuadratureConfigF64 {
    QuadratureConfigF64::default()
}

#[test]
fn exact_probabilities_at_larger_n() {
    // 30-digit quadrature of H_n(x)² e^{-x²} with explicit normalization
    for (n, p) in [
        (20usize, 0.048397662846232382083),
        (100, 0.028697315849775204762),
        (500, 0.016849904784065804481),
    ] {
        let r = tunneling_exact(n, &cfg()).unwrap();
        assert!(((r.value - p) / p).abs() < 1e-10, "n={n}: {} vs {p}", r.value);
        assert!(r.err_estimate < 1e-10);
    }
}

#[test]
fn second_state_closed_form() {
    // ψ₂² = π^{-1/2}(2x²−1)² e^{-x²}/2; integrate the closed form independently
    let density = |x: f64| (2.0 * x * x - 1.0).powi(2) * (-x * x).exp() / (2.0 * std::f64::consts::PI.sqrt());
    let oracle = 2.0 * integrate_semi_infinite(density, 5f64.sqrt(), &cfg()).unwrap().value;
    let r = tunneling_exact(2, &cfg()).unwrap();
    assert!((r.value - oracle).abs() < 1e-13);
    assert!((r.value - 0.09507).abs() < 1e-5);
}

#[test]
fn exact_is_decreasing_over_first_fifty_states() {
    let vals: Vec<f64> = (0..=50).map(|n| tunneling_exact(n, &cfg()).unwrap().value).collect();
    assert!(vals.iter().all(|&p| p > 0.0 && p < 1.0));
    assert!(vals.windows(2).all(|w| w[1] < w[0]));
}

#[test]
fn subdivision_budget_does_not_move_result() {
    let doubled = QuadratureConfigF64 {
        max_subdivisions: 4000,
        ..cfg()
    };
    for n in [0usize, 10, 100, 1000] {
        let a = tunneling_exact(n, &cfg()).unwrap();
        let b = tunneling_exact(n, &doubled).unwrap();
        assert!((a.value - b.value).abs() <= a.err_estimate, "n={n}");
    }
}

#[test]
fn olver_route_brackets_exact_value() {
    for n in [1usize, 4, 10, 40, 200] {
        let exact = tunneling_exact(n, &cfg()).unwrap().value;
        let olver = tunneling_olver(n, &cfg()).unwrap();
        assert_eq!(olver.method, TunnelingMethod::Olver);
        assert!(
            (olver.value - exact).abs() <= olver.err_estimate,
            "n={n}: {} vs {exact} ± {}",
            olver.value,
            olver.err_estimate
        );
    }
}

#[test]
fn f_integral_matches_exact_route() {
    for (n, tol) in [(100usize, 0.03), (500, 0.015)] {
        let big_f = big_f_n(n, &cfg()).unwrap().value;
        let approx = 2f64.powf(5.0 / 3.0) * (n as f64).powf(-1.0 / 3.0) * big_f;
        let exact = tunneling_exact(n, &cfg()).unwrap().value;
        assert!(((approx - exact) / exact).abs() < tol, "n={n}");
    }
}

#[test]
fn f_integral_below_limit_with_first_correction() {
    let k = AsymptoticCoefficients::<f64>::new();
    for n in [6usize, 50, 500] {
        let f = big_f_n(n, &cfg()).unwrap().value;
        assert!(f > 0.0 && f < k.f_infinity, "n={n}");
    }
    // (F_∞ − F_n) n^{2/3} → 2^{-2/3}/5 · ∫tAi² ≈ 0.003861
    let expect = 2f64.powf(-2.0 / 3.0) / 5.0 * 0.030629383078988447195;
    let f500 = big_f_n(500, &cfg()).unwrap().value;
    let scaled = (k.f_infinity - f500) * 500f64.powf(2.0 / 3.0);
    assert!((scaled / expect - 1.0).abs() < 0.1, "{scaled} vs {expect}");
}

#[test]
fn ratio_correction_scales_as_n_to_minus_two_thirds() {
    let scaled: Vec<f64> = [64usize, 216, 512]
        .iter()
        .map(|&n| {
            let r = ratio_sweep(n, n, &cfg()).unwrap()[0].ratio;
            (r - 1.0) * (n as f64).powf(2.0 / 3.0)
        })
        .collect();
    let (lo, hi) = scaled
        .iter()
        .fold((f64::MAX, f64::MIN), |(l, h), &v| (l.min(v), h.max(v)));
    assert!(hi / lo < 1.15, "{scaled:?}");
    let sweep = ratio_sweep(6, 12, &cfg()).unwrap();
    assert!(sweep.iter().all(|p| p.ratio > 1.0));
    assert!(sweep[0].ratio > ratio_sweep(500, 500, &cfg()).unwrap()[0].ratio);
}

#[test]
fn comparison_examples() {
    let rows = compare_sweep(&[1, 512], &cfg()).unwrap();
    assert!((rows[0].p_exact - 0.1116).abs() < 5e-5);
    assert!(rows[1].err_second < rows[1].err_leading);
    // err_second ≤ err_leading from n = 64 on
    let ns: Vec<usize> = (64..=160).step_by(8).collect();
    for r in compare_sweep(&ns, &cfg()).unwrap() {
        assert!(r.err_second <= r.err_leading, "n={}", r.n);
    }
    assert!(
        (leading_term::<f64>(64).unwrap().value - rows[1].p_leading * 2.0).abs() < 1e-15,
        "n^(-1/3) scaling"
    );
}

#[test]
fn comparison_sweep_is_bit_reproducible() {
    let ns: Vec<usize> = (5..40).collect();
    let a = compare_sweep(&ns, &cfg()).unwrap();
    let b = compare_sweep(&ns, &cfg()).unwrap();
    for (x, y) in a.iter().zip(&b) {
        assert_eq!(x.p_exact.to_bits(), y.p_exact.to_bits());
        assert_eq!(x.err_second.to_bits(), y.err_second.to_bits());
    }
}

#[test]
fn airy_matches_ode_integration() {
    // RK4 on Ai″ = t·Ai from the closed-form initial data at 0
    let (mut y, mut dy) = (0.35502805388781723926, -0.25881940379280679841);
    let h = 1e-3;
    let mut t = 0.0_f64;
    for step in 1..=5000 {
        let f = |t: f64, y: f64, dy: f64| (dy, t * y);
        let k1 = f(t, y, dy);
        let k2 = f(t + h / 2.0, y + h / 2.0 * k1.0, dy + h / 2.0 * k1.1);
        let k3 = f(t + h / 2.0, y + h / 2.0 * k2.0, dy + h / 2.0 * k2.1);
        let k4 = f(t + h, y + h * k3.0, dy + h * k3.1);
        y += h / 6.0 * (k1.0 + 2.0 * k2.0 + 2.0 * k3.0 + k4.0);
        dy += h / 6.0 * (k1.1 + 2.0 * k2.1 + 2.0 * k3.1 + k4.1);
        t = step as f64 * h;
        if step % 250 == 0 {
            assert!((airy_ai(t).unwrap().value - y).abs() < 1e-8, "t={t}");
        }
    }
}

#[test]
fn airy_derivative_matches_central_differences() {
    let h = 1e-5;
    for t in [0.5_f64, 2.0, 8.0] {
        let fd = (airy_ai(t + h).unwrap().value - airy_ai(t - h).unwrap().value) / (2.0 * h);
        assert!((fd - airy_ai_prime(t).unwrap()).abs() < 1e-6, "t={t}");
    }
}

#[test]
fn figure_four_has_495_rows() {
    let f = figure_dataset(4, &FigureParams::default(), &cfg()).unwrap();
    let t = &f.tables[0];
    assert_eq!(t.columns, vec!["n", "ratio"]);
    assert_eq!(t.rows.len(), 495);
    assert_eq!(t.rows[0][0], Cell::Int(6));
    assert_eq!(t.rows[494][0], Cell::Int(500));
}

#[test]
fn rescaled_density_is_normalized() {
    let n = 40;
    let breaks: Vec<f64> = (0..=48).map(|k| -3.0 + 6.0 * k as f64 / 48.0).collect();
    let mass = integrate_with_breaks(|u| rescaled_density(n, u).unwrap(), &breaks, &cfg())
        .unwrap()
        .value;
    assert!((mass - 1.0).abs() < 1e-6);
}

#[test]
fn figure_five_covers_upper_range() {
    let f = figure_dataset(5, &FigureParams::default(), &cfg()).unwrap();
    let rows = &f.tables[0].rows;
    assert_eq!(rows.len(), 100);
    assert_eq!(rows[0][0], Cell::Int(513));
}
