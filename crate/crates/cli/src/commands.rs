use std::fmt::Write as _;
use std::io::Write;
use std::path::Path;

use fracstefan_core::specialfn::{wright, WrightArgs};
use fracstefan_core::stefan::{solve_front_in, ScanWindow};
use fracstefan_core::verify::{
    alpha_sweep, default_points, limit_interchange_gap, pde_convergence,
    stefan_condition_residual, PdeOptions, DEFAULT_GRID,
};
use fracstefan_core::{Error, Flavor, SolutionTriple};
use rayon::prelude::*;
use serde::Serialize;

use crate::args::{FieldCmd, SolveCmd, SweepCmd, VerifyCmd, WrightCmd};
use crate::config::RunConfig;
use crate::error::{config, CliError};
use crate::format::{g15, to_json, Num};

/// Orders used by `sweep` when none are given.
pub fn default_alphas() -> Vec<f64> {
    (1..=19).map(|i| i as f64 * 0.05).chain([0.99]).collect()
}

fn emit(path: Option<&Path>, text: &str) -> Result<(), CliError> {
    match path {
        Some(p) => std::fs::write(p, text)?,
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes())?;
            out.flush()?;
        }
    }
    Ok(())
}

pub fn wright_cmd(cmd: &WrightCmd, file: &RunConfig) -> Result<(), CliError> {
    let w = |x: f64| wright(WrightArgs::new(x, cmd.rho, cmd.beta));
    let out = file.output(&cmd.output);
    match (cmd.x, cmd.from, cmd.to) {
        (Some(x), _, _) => emit(out.as_deref(), &format!("{}\n", g15(w(x)?))),
        (None, Some(a), Some(b)) => {
            if cmd.rows < 2 || !(a.is_finite() && b.is_finite()) {
                return config(format!("table mode needs finite bounds and --rows >= 2, got {}", cmd.rows));
            }
            let n = cmd.rows - 1;
            let xs: Vec<f64> = (0..=n)
                .map(|i| if i == n { b } else { a + (b - a) * i as f64 / n as f64 })
                .collect();
            let values = xs.par_iter().map(|&x| w(x)).collect::<Result<Vec<_>, Error>>()?;
            let mut s = String::from("x,value\n");
            for (x, v) in xs.iter().zip(values) {
                writeln!(s, "{},{}", g15(*x), g15(v)).unwrap();
            }
            emit(out.as_deref(), &s)
        }
        _ => config("give either --x or both --from and --to"),
    }
}

#[derive(Serialize)]
struct SolveReport {
    flavor: &'static str,
    alpha: Num,
    coefficient: Num,
    residual: Num,
    iterations: usize,
    roots_found: usize,
    bracket: [Num; 2],
}

pub fn solve_cmd(cmd: &SolveCmd, file: &RunConfig) -> Result<(), CliError> {
    let flavor = file.flavor(cmd.flavor)?;
    let alpha = file.alpha(cmd.alpha, flavor)?;
    let cfg = file.model(&cmd.model, alpha)?;
    let d = ScanWindow::default();
    let window = ScanWindow {
        lo: cmd.scan_lo.unwrap_or(d.lo),
        hi: cmd.scan_hi.unwrap_or(d.hi),
        points: cmd.scan_points.unwrap_or(d.points),
    };
    let c = solve_front_in(&cfg, flavor, &window)?;
    let report = SolveReport {
        flavor: flavor.as_str(),
        alpha: Num(alpha),
        coefficient: Num(c.value),
        residual: Num(c.residual),
        iterations: c.iterations,
        roots_found: c.roots_found,
        bracket: [Num(c.bracket_lo), Num(c.bracket_hi)],
    };
    emit(file.output(&cmd.output).as_deref(), &to_json(&report)?)
}

pub fn sweep_cmd(cmd: &SweepCmd, file: &RunConfig) -> Result<(), CliError> {
    let alphas = cmd.alphas.clone().or_else(|| file.alphas.clone()).unwrap_or_else(default_alphas);
    if alphas.is_empty() {
        return config("empty alpha list");
    }
    // the base order is replaced row by row
    let base = file.model(&cmd.model, alphas[0])?;
    let rows = alpha_sweep(&base, &alphas)?;
    let mut s = String::from("alpha,xi,eta,eta_classical,gap_xi_eta,gap_eta_classical\n");
    for r in &rows {
        let cells = [r.alpha, r.xi, r.eta, r.eta_classical, r.gap_xi_eta(), r.gap_eta_classical()];
        let line: Vec<String> = cells.iter().map(|v| g15(*v)).collect();
        s.push_str(&line.join(","));
        s.push('\n');
    }
    emit(file.output(&cmd.output).as_deref(), &s)?;
    let failed: Vec<&_> = rows.iter().filter(|r| r.failed()).collect();
    for r in &failed {
        eprintln!("alpha {}: {}", g15(r.alpha), r.error.as_ref().unwrap());
    }
    if !failed.is_empty() {
        return Err(CliError::RowsFailed(failed.len(), rows.len()));
    }
    Ok(())
}

/// Field grid parameters after merging flags, file and defaults.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FieldGrid {
    pub nx: usize,
    pub nt: usize,
    pub t_max: f64,
    pub y_max: f64,
}

impl FieldGrid {
    pub fn ys(&self) -> Vec<f64> {
        let n = self.nx - 1;
        (0..=n).map(|i| if i == n { self.y_max } else { self.y_max * i as f64 / n as f64 }).collect()
    }

    pub fn taus(&self) -> Vec<f64> {
        (1..=self.nt)
            .map(|j| if j == self.nt { self.t_max } else { self.t_max * j as f64 / self.nt as f64 })
            .collect()
    }
}

pub fn field_cmd(cmd: &FieldCmd, file: &RunConfig) -> Result<(), CliError> {
    let flavor = file.flavor(cmd.flavor)?;
    let alpha = file.alpha(cmd.alpha, flavor)?;
    let cfg = file.model(&cmd.model, alpha)?;
    let grid = FieldGrid {
        nx: cmd.nx.or(file.nx).unwrap_or(101),
        nt: cmd.nt.or(file.nt).unwrap_or(100),
        t_max: cmd.t_max.or(file.t_max).unwrap_or(1.0),
        y_max: cmd.y_max.or(file.y_max).unwrap_or(2.0),
    };
    if grid.nx < 2 || grid.nt < 1 || !(grid.t_max > 0.0 && grid.t_max.is_finite())
        || !(grid.y_max > 0.0 && grid.y_max.is_finite())
    {
        return Err(Error::Grid(format!(
            "need nx >= 2, nt >= 1 and positive finite t_max, y_max; got {grid:?}"
        ))
        .into());
    }
    let sol = SolutionTriple::new(&cfg, solve_front_in(&cfg, flavor, &ScanWindow::default())?)?;
    let ys = grid.ys();
    let taus = grid.taus();

    let blocks = taus
        .par_iter()
        .map(|&tau| -> Result<String, Error> {
            let mut s = String::new();
            let tau_s = g15(tau);
            for &y in &ys {
                writeln!(s, "{},{},{}", g15(y), tau_s, g15(sol.u(y, tau)?)).unwrap();
            }
            Ok(s)
        })
        .collect::<Result<Vec<_>, _>>()?;
    let mut s = String::from("y,tau,u\n");
    blocks.iter().for_each(|b| s.push_str(b));
    emit(file.output(&cmd.output).as_deref(), &s)?;

    if let Some(p) = cmd.front_output.clone().or_else(|| file.front_output.clone()) {
        let mut f = String::from("tau,front\n");
        for &tau in &taus {
            writeln!(f, "{},{}", g15(tau), g15(sol.front(tau)?)).unwrap();
        }
        emit(Some(&p), &f)?;
    }
    Ok(())
}

#[derive(Serialize)]
struct PhaseCheck {
    phase: u8,
    grid: usize,
    norm_inf: Num,
    norm_inf_doubled: Num,
    ratio: Num,
    pass: bool,
}

#[derive(Serialize)]
struct StefanCheck {
    residual: Num,
    threshold: Num,
    pass: bool,
}

#[derive(Serialize)]
struct InterchangeCheck {
    derivative_first: Num,
    limit_first: Num,
    relative_gap: Num,
    threshold: Num,
    pass: bool,
}

#[derive(Serialize)]
struct Thresholds {
    pde: Num,
    halving: Option<Num>,
}

#[derive(Serialize)]
struct VerifyReport {
    flavor: &'static str,
    alpha: Num,
    coefficient: Num,
    thresholds: Thresholds,
    pde: Vec<PhaseCheck>,
    stefan_condition: StefanCheck,
    limit_interchange: Option<InterchangeCheck>,
    pass: bool,
}

pub fn verify_cmd(cmd: &VerifyCmd, file: &RunConfig) -> Result<(), CliError> {
    let flavor = file.flavor(cmd.flavor)?;
    let alpha = file.alpha(cmd.alpha, flavor)?;
    let cfg = file.model(&cmd.model, alpha)?;
    let tol = file.tolerances;
    let coef = solve_front_in(&cfg, flavor, &ScanWindow::default())?;
    let sol = SolutionTriple::new(&cfg, coef)?;
    let classical = flavor == Flavor::Classical;
    let (pde_tol, stefan_tol) = if classical {
        (tol.classical_pde, tol.classical_stefan)
    } else {
        (tol.pde, tol.stefan)
    };
    let opts = if cmd.coarse {
        PdeOptions { grid: 32, grading: 1.0, ..PdeOptions::default() }
    } else {
        PdeOptions { grid: cmd.grid.or(file.grid).unwrap_or(DEFAULT_GRID), ..PdeOptions::default() }
    };

    let mut pde = Vec::new();
    for phase in [1, 2] {
        let points = default_points(&sol, phase)?;
        let (coarse, fine) = pde_convergence(&sol, phase, &points, opts)?;
        let ratio = coarse.norm_inf / fine.norm_inf;
        // without a time quadrature there is nothing to refine
        let halves = classical || ratio >= tol.halving;
        pde.push(PhaseCheck {
            phase,
            grid: coarse.grid_resolution,
            norm_inf: Num(coarse.norm_inf),
            norm_inf_doubled: Num(fine.norm_inf),
            ratio: Num(if classical { f64::NAN } else { ratio }),
            pass: coarse.norm_inf <= pde_tol && halves,
        });
    }
    let r = stefan_condition_residual(&sol)?;
    let stefan = StefanCheck { residual: Num(r), threshold: Num(stefan_tol), pass: r.abs() <= stefan_tol };
    let interchange = if flavor == Flavor::Rl && alpha < 1.0 {
        let g = limit_interchange_gap(&cfg, &coef, 1.0)?;
        Some(InterchangeCheck {
            derivative_first: Num(g.derivative_first),
            limit_first: Num(g.limit_first),
            relative_gap: Num(g.relative_gap()),
            threshold: Num(tol.interchange),
            pass: g.relative_gap() > tol.interchange,
        })
    } else {
        None
    };
    let pass = pde.iter().all(|p| p.pass)
        && stefan.pass
        && interchange.as_ref().map_or(true, |i| i.pass);
    let report = VerifyReport {
        flavor: flavor.as_str(),
        alpha: Num(alpha),
        coefficient: Num(coef.value),
        thresholds: Thresholds {
            pde: Num(pde_tol),
            halving: (!classical).then_some(Num(tol.halving)),
        },
        pde,
        stefan_condition: stefan,
        limit_interchange: interchange,
        pass,
    };
    emit(file.output(&cmd.output).as_deref(), &to_json(&report)?)?;
    if !pass {
        return Err(CliError::VerifyFailed(format!("{} alpha {}", flavor, g15(alpha))));
    }
    Ok(())
}
