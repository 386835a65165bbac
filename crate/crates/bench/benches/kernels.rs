use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use fracstefan_core::fraccalc::{caputo_derivative_num, rl_integral_num, SampledFn};
use fracstefan_core::specialfn::{wright, WrightArgs};
use fracstefan_core::stefan::solve_front;
use fracstefan_core::verify::{default_points, pde_residual_with, PdeOptions};
use fracstefan_core::{DimensionlessConfig, Flavor, SolutionTriple};

fn wright_eval(c: &mut Criterion) {
    let mut g = c.benchmark_group("wright");
    // small |x| takes the series, large |x| the contour
    for x in [-0.5, -3.0, -12.0] {
        g.bench_with_input(BenchmarkId::new("rho=-0.5", x), &x, |b, &x| {
            b.iter(|| wright(WrightArgs::new(black_box(x), -0.5, 0.5)).unwrap())
        });
    }
    g.finish();
}

fn quadrature(c: &mut Criterion) {
    let f = SampledFn::uniform(|t| t.sqrt(), 1.0, 2048).unwrap();
    c.bench_function("rl_integral_2048", |b| b.iter(|| rl_integral_num(black_box(&f), 0.5, 1.0).unwrap()));
    c.bench_function("caputo_2048", |b| b.iter(|| caputo_derivative_num(black_box(&f), 0.5, 1.0).unwrap()));
}

fn front(c: &mut Criterion) {
    let cfg = DimensionlessConfig::preset("test1", 0.5).unwrap();
    let mut g = c.benchmark_group("solve_front");
    for flavor in [Flavor::Caputo, Flavor::Rl, Flavor::Classical] {
        g.bench_function(flavor.as_str(), |b| b.iter(|| solve_front(black_box(&cfg), flavor).unwrap()));
    }
    g.finish();
}

fn pde(c: &mut Criterion) {
    let cfg = DimensionlessConfig::preset("test3", 0.8).unwrap();
    let sol = SolutionTriple::new(&cfg, solve_front(&cfg, Flavor::Rl).unwrap()).unwrap();
    let points = default_points(&sol, 2).unwrap();
    let opts = PdeOptions { grid: 256, ..PdeOptions::default() };
    let mut g = c.benchmark_group("pde_residual");
    g.sample_size(10);
    g.bench_function("rl_phase2_grid256", |b| b.iter(|| pde_residual_with(&sol, 2, &points, opts).unwrap()));
    g.finish();
}

criterion_group!(benches, wright_eval, quadrature, front, pde);
criterion_main!(benches);
