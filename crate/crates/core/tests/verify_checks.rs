use fracstefan_core::stefan::{solve_front, DimensionlessConfig, Flavor, SolutionTriple};
use fracstefan_core::verify::{
    alpha_sweep, default_points, h_alpha, limit_interchange_gap, limit_interchange_trace,
    pde_convergence, stefan_condition_residual, PdeOptions,
};
use proptest::prelude::*;

fn triple(cfg: &DimensionlessConfig, flavor: Flavor) -> SolutionTriple {
    SolutionTriple::new(cfg, solve_front(cfg, flavor).unwrap()).unwrap()
}

#[test]
fn residuals_converge_under_grid_doubling() {
    let cfg = DimensionlessConfig::preset("test3", 0.8).unwrap();
    for flavor in [Flavor::Caputo, Flavor::Rl] {
        let sol = triple(&cfg, flavor);
        for phase in [1, 2] {
            let pts = default_points(&sol, phase).unwrap();
            let opts = PdeOptions { grid: 512, ..PdeOptions::default() };
            let (coarse, fine) = pde_convergence(&sol, phase, &pts, opts).unwrap();
            assert!(coarse.norm_inf <= 1e-3, "{flavor} phase {phase}: {}", coarse.norm_inf);
            let ratio = coarse.norm_inf / fine.norm_inf;
            assert!(ratio >= 1.8, "{flavor} phase {phase}: ratio {ratio}");
            assert!(fine.grid_resolution > coarse.grid_resolution);
        }
    }
}

#[test]
fn coarse_grid_is_detected() {
    let cfg = DimensionlessConfig::preset("test2", 0.5).unwrap();
    let sol = triple(&cfg, Flavor::Rl);
    let pts = default_points(&sol, 2).unwrap();
    let (coarse, _) =
        pde_convergence(&sol, 2, &pts, PdeOptions { grid: 32, ..PdeOptions::default() }).unwrap();
    assert!(coarse.norm_inf > 1e-3, "{}", coarse.norm_inf);
}

#[test]
fn interchange_values_differ_then_merge() {
    for name in DimensionlessConfig::PRESET_NAMES {
        let cfg = DimensionlessConfig::preset(name, 0.5).unwrap();
        let coef = solve_front(&cfg, Flavor::Rl).unwrap();
        let g = limit_interchange_gap(&cfg, &coef, 1.0).unwrap();
        assert!(g.relative_gap() > 1e-6, "{name}");
        let trace = limit_interchange_trace(&cfg, &coef, 1.0, 2048).unwrap();
        assert!((trace - g.derivative_first).abs() <= 1e-3, "{name}: {trace} vs {g:?}");
        assert!((trace - g.limit_first).abs() > 1e-2, "{name}");

        let cfg = DimensionlessConfig::preset(name, 0.999).unwrap();
        let coef = solve_front(&cfg, Flavor::Rl).unwrap();
        let g = limit_interchange_gap(&cfg, &coef, 1.0).unwrap();
        assert!(g.relative_gap() <= 1e-2, "{name}: {}", g.relative_gap());
    }
}

#[test]
fn h_alpha_sign_and_limits() {
    // Gamma(d) W(-x; -r; d) < Gamma(m) W(-x; -r; m) with m = r, d = 1 - r
    for i in 1..=19 {
        let alpha = i as f64 * 0.05;
        for j in 1..=60 {
            let x = j as f64 * 0.25;
            let h = h_alpha(x, alpha).unwrap();
            assert!(h > 0.0, "alpha {alpha} x {x}: {h}");
        }
    }
    assert!(h_alpha(1.0, 0.5).unwrap() > 0.0);
    for x in [0.1, 1.0, 3.0, 10.0] {
        assert!(h_alpha(x, 0.999).unwrap().abs() <= 1e-2);
    }
    assert!(h_alpha(25.0, 0.5).unwrap().abs() < 1e-12);
}

#[test]
fn sweep_rows() {
    let alphas: Vec<f64> = (1..=9).map(|i| i as f64 / 10.0).chain([0.95, 0.99, 0.999]).collect();
    let base = DimensionlessConfig::preset("test1", 0.5).unwrap();
    let rows = alpha_sweep(&base, &alphas).unwrap();
    assert_eq!(rows.len(), alphas.len());
    let last = rows.last().unwrap();
    assert!(last.gap_xi_eta() <= 5e-3 && last.gap_eta_classical() <= 5e-3);
    assert!((last.xi - last.eta_classical).abs() <= 5e-3);
    let tail: Vec<f64> = rows.iter().filter(|r| r.alpha >= 0.9).map(|r| r.gap_eta_classical()).collect();
    assert!(tail.windows(2).all(|w| w[1] < w[0]), "{tail:?}");

    let sym = DimensionlessConfig::new(1.0, 1.0, 1.0, 0.5, 0.5).unwrap();
    for row in alpha_sweep(&sym, &alphas).unwrap() {
        assert!(row.gap_xi_eta() > 0.0, "alpha {}", row.alpha);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn stefan_condition_closes_for_converged_roots(
        lam in 0.2f64..5.0, k_ratio in 0.2f64..5.0, u in 0.2f64..3.0, ste in 0.1f64..3.0,
        alpha in 0.05f64..1.0, pick in 0usize..3,
    ) {
        let flavor = Flavor::ALL[pick];
        let cfg = DimensionlessConfig::new(lam, k_ratio, u, ste, alpha).unwrap();
        let r = stefan_condition_residual(&triple(&cfg, flavor)).unwrap();
        prop_assert!(r.abs() <= 1e-9, "{flavor}: {r}");
    }
}
