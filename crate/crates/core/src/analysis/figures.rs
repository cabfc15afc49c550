//! Numeric datasets behind the five figures. Styling is left to whatever
//! consumes the tables.

use crate::asymptotics::zeta_of_x;
use crate::error::{Error, Result};
use crate::quadrature::{tunneling_exact, QuadratureConfig};
use crate::specfun::{hermite_psi_squared, OscillatorState};

use super::compare::{compare_sweep, ratio_sweep};

pub const FIGURE_IDS: [u8; 5] = [1, 2, 3, 4, 5];

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Cell {
    Int(i64),
    Real(f64),
    Empty,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    pub name: String,
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    fn new(name: &str, columns: Vec<&'static str>) -> Self {
        Table {
            name: name.to_owned(),
            columns,
            rows: Vec::new(),
        }
    }

    pub fn column(&self, name: &str) -> Option<Vec<Cell>> {
        let idx = self.columns.iter().position(|c| *c == name)?;
        Some(self.rows.iter().map(|r| r[idx]).collect())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Figure {
    pub id: u8,
    pub title: &'static str,
    /// The first table is the figure's main dataset.
    pub tables: Vec<Table>,
}

/// Ranges and grid resolutions of the figure datasets.
#[derive(Debug, Clone, PartialEq)]
pub struct FigureParams {
    /// State whose density is drawn in figure 1.
    pub density_n: usize,
    /// Half-width of the rescaled position grid for figure 1.
    pub density_half_width: f64,
    pub density_points: usize,
    /// Largest `n` of the tunneling curve in figure 1.
    pub tunneling_n_max: usize,
    /// Figure 2 covers `fit_n_min..=fit_n_max`.
    pub fit_n_min: usize,
    pub fit_n_max: usize,
    /// Figure 3 covers `x ∈ [1, zeta_x_max]`.
    pub zeta_x_max: f64,
    pub zeta_points: usize,
    /// Figure 4 covers `ratio_n_min..=ratio_n_max`.
    pub ratio_n_min: usize,
    pub ratio_n_max: usize,
    /// Figure 5 covers `detail_n_min..=detail_n_max`.
    pub detail_n_min: usize,
    pub detail_n_max: usize,
}

impl Default for FigureParams {
    fn default() -> Self {
        FigureParams {
            density_n: 40,
            density_half_width: 1.5,
            density_points: 601,
            tunneling_n_max: 40,
            fit_n_min: 5,
            fit_n_max: 612,
            zeta_x_max: 6.0,
            zeta_points: 501,
            ratio_n_min: 6,
            ratio_n_max: 500,
            detail_n_min: 513,
            detail_n_max: 612,
        }
    }
}

/// Density of the `n`-th state in the coordinate `u = x/ν`, where the
/// turning points sit at `u = ±1`: `ν ψ_n(νu)²`.
pub fn rescaled_density(n: usize, u: f64) -> Result<f64> {
    let nu = OscillatorState::<f64>::new(n).nu;
    Ok(nu * hermite_psi_squared(n, nu * u)?)
}

/// Classical position density `1/(π√(1−u²))` on `|u| < 1`.
pub fn classical_density(u: f64) -> Option<f64> {
    (u.abs() < 1.0).then(|| 1.0 / (std::f64::consts::PI * (1.0 - u * u).sqrt()))
}

fn linspace(a: f64, b: f64, points: usize) -> impl Iterator<Item = f64> {
    let step = (b - a) / (points - 1) as f64;
    (0..points).map(move |i| if i + 1 == points { b } else { a + step * i as f64 })
}

pub fn figure_dataset(id: u8, params: &FigureParams, cfg: &QuadratureConfig<f64>) -> Result<Figure> {
    match id {
        1 => density_figure(params, cfg),
        2 => comparison_figure(
            2,
            "Exact tunneling probabilities and the leading-order formula",
            params.fit_n_min,
            params.fit_n_max,
            cfg,
        ),
        3 => zeta_figure(params),
        4 => ratio_figure(params, cfg),
        5 => comparison_figure(
            5,
            "Exact data against leading and second-order formulas",
            params.detail_n_min,
            params.detail_n_max,
            cfg,
        ),
        other => Err(Error::domain("figure id", other as f64, "1..=5")),
    }
}

fn density_figure(p: &FigureParams, cfg: &QuadratureConfig<f64>) -> Result<Figure> {
    if p.density_points < 2 {
        return Err(Error::domain("density_points", p.density_points as f64, ">= 2"));
    }
    let mut density = Table::new("density", vec!["x", "p_density", "p_class"]);
    for u in linspace(-p.density_half_width, p.density_half_width, p.density_points) {
        density.rows.push(vec![
            Cell::Real(u),
            Cell::Real(rescaled_density(p.density_n, u)?),
            classical_density(u).map_or(Cell::Empty, Cell::Real),
        ]);
    }
    let mut tunneling = Table::new("tunneling", vec!["n", "p_tun"]);
    for n in 0..=p.tunneling_n_max {
        let r = tunneling_exact(n, cfg)?;
        tunneling.rows.push(vec![Cell::Int(n as i64), Cell::Real(r.value)]);
    }
    Ok(Figure {
        id: 1,
        title: "Rescaled probability density with classical overlay and tunneling curve",
        tables: vec![density, tunneling],
    })
}

fn comparison_figure(
    id: u8,
    title: &'static str,
    n_min: usize,
    n_max: usize,
    cfg: &QuadratureConfig<f64>,
) -> Result<Figure> {
    let ns: Vec<usize> = (n_min..=n_max).collect();
    let rows = compare_sweep(&ns, cfg)?;
    let mut t = Table::new("comparison", vec!["n", "p_exact", "p_leading", "p_second"]);
    for r in rows {
        t.rows.push(vec![
            Cell::Int(r.n as i64),
            Cell::Real(r.p_exact),
            Cell::Real(r.p_leading),
            Cell::Real(r.p_second),
        ]);
    }
    Ok(Figure {
        id,
        title,
        tables: vec![t],
    })
}

fn zeta_figure(p: &FigureParams) -> Result<Figure> {
    if p.zeta_points < 2 || !(p.zeta_x_max > 1.0) {
        return Err(Error::domain("zeta_x_max", p.zeta_x_max, "> 1 with >= 2 points"));
    }
    let mut zeta = Table::new("zeta", vec!["x", "zeta"]);
    let mut ratio = Table::new("f", vec!["x", "f"]);
    for x in linspace(1.0, p.zeta_x_max, p.zeta_points) {
        let z = zeta_of_x(x)?;
        zeta.rows.push(vec![Cell::Real(x), Cell::Real(z.zeta)]);
        ratio.rows.push(vec![
            Cell::Real(x),
            Cell::Real(crate::asymptotics::f_of_x(x)?),
        ]);
    }
    Ok(Figure {
        id: 3,
        title: "The turning-point map zeta(x) and zeta/(x^2-1)",
        tables: vec![zeta, ratio],
    })
}

fn ratio_figure(p: &FigureParams, cfg: &QuadratureConfig<f64>) -> Result<Figure> {
    let mut t = Table::new("ratio", vec!["n", "ratio"]);
    for r in ratio_sweep(p.ratio_n_min, p.ratio_n_max, cfg)? {
        t.rows.push(vec![Cell::Int(r.n as i64), Cell::Real(r.ratio)]);
    }
    Ok(Figure {
        id: 4,
        title: "Ratios F_inf/F_n",
        tables: vec![t],
    })
}
