//! Monte-Carlo bias/RMSE study of the projection MLE, amplitude file
//! ingestion and result output (CSV and SVG).

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::estimators::{projection_mle_estimate, OptimizerSpec};
use crate::rng::RngStream;
use crate::sampling::sample_amplitude;
use crate::stable::AmplitudeParams;

/// Environment variable holding the worker count.
pub const WORKERS_ENV: &str = "AMPSTABLE_WORKERS";

/// A cell is flagged when more than this fraction of its trials fail.
pub const FAILURE_FLAG_FRACTION: f64 = 0.05;

/// The `(α, σ, n)` grid and the number of trials per cell.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExperimentGrid {
    pub alphas: Vec<f64>,
    pub sigmas: Vec<f64>,
    pub ns: Vec<usize>,
    pub trials: usize,
    pub master_seed: u64,
}

impl Default for ExperimentGrid {
    fn default() -> Self {
        ExperimentGrid {
            alphas: vec![1.0, 1.25, 1.5, 1.75],
            sigmas: vec![0.5, 2.0],
            ns: vec![50, 100, 200, 500],
            trials: 1000,
            master_seed: 0,
        }
    }
}

impl ExperimentGrid {
    pub fn validate(&self) -> Result<()> {
        if self.alphas.is_empty() || self.sigmas.is_empty() || self.ns.is_empty() {
            return Err(Error::domain("experiment grid has an empty axis"));
        }
        for &a in &self.alphas {
            for &s in &self.sigmas {
                AmplitudeParams::new(a, s)?;
            }
        }
        if self.ns.contains(&0) {
            return Err(Error::domain("sample sizes must be positive"));
        }
        if self.trials < 2 {
            return Err(Error::domain(format!("at least 2 trials per cell are required, got {}", self.trials)));
        }
        Ok(())
    }

    /// Cells in output order: α outermost, then σ, then n.
    pub fn cells(&self) -> Vec<(f64, f64, usize)> {
        let mut out = Vec::with_capacity(self.alphas.len() * self.sigmas.len() * self.ns.len());
        for &a in &self.alphas {
            for &s in &self.sigmas {
                for &n in &self.ns {
                    out.push((a, s, n));
                }
            }
        }
        out
    }
}

/// Summary of one grid cell.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CellResult {
    pub alpha: f64,
    pub sigma: f64,
    pub n: usize,
    pub bias_alpha: f64,
    /// `√(m⁻¹ Σ (α̂ₖ − α)²)` over the `m` completed trials.
    pub rmse_alpha: f64,
    pub bias_sigma: f64,
    pub rmse_sigma: f64,
    pub trials_completed: usize,
    /// `(m − 1)⁻¹ Σ (α̂ₖ − α)²`.
    pub mse_alpha: f64,
    /// `(m − 1)⁻¹ Σ (σ̂ₖ − σ)²`.
    pub mse_sigma: f64,
    /// More than 5% of the trials failed.
    pub flagged: bool,
}

/// Worker count from `AMPSTABLE_WORKERS`, else the available cores.
pub fn default_workers() -> usize {
    std::env::var(WORKERS_ENV)
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .filter(|&w| w > 0)
        .unwrap_or_else(|| std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1))
}

fn trial(
    psi: &AmplitudeParams,
    n: usize,
    seed: u64,
    stream: u64,
    n_projections: usize,
    opt: &OptimizerSpec,
) -> Option<AmplitudeParams> {
    let mut rng = RngStream::new(seed, stream);
    let r = sample_amplitude(n, psi, &mut rng).ok()?;
    match projection_mle_estimate(&r, n_projections, &mut rng, opt) {
        Ok(est) => Some(est),
        Err(e) => {
            log::debug!("trial {stream} failed: {e}");
            None
        }
    }
}

fn summarize(alpha: f64, sigma: f64, n: usize, trials: usize, fits: &[Option<AmplitudeParams>]) -> CellResult {
    let done: Vec<&AmplitudeParams> = fits.iter().flatten().collect();
    let m = done.len();
    let (mut ea, mut ea2, mut es, mut es2) = (0.0, 0.0, 0.0, 0.0);
    for p in &done {
        let da = p.alpha - alpha;
        let ds = p.sigma - sigma;
        ea += da;
        ea2 += da * da;
        es += ds;
        es2 += ds * ds;
    }
    let mf = m as f64;
    let mse_denominator = if m >= 2 { mf - 1.0 } else { f64::NAN };
    CellResult {
        alpha,
        sigma,
        n,
        bias_alpha: ea / mf,
        rmse_alpha: (ea2 / mf).sqrt(),
        bias_sigma: es / mf,
        rmse_sigma: (es2 / mf).sqrt(),
        trials_completed: m,
        mse_alpha: ea2 / mse_denominator,
        mse_sigma: es2 / mse_denominator,
        flagged: (trials - m) as f64 > FAILURE_FLAG_FRACTION * trials as f64,
    }
}

/// Runs every `(cell, trial)` unit of the grid on a pool of `workers`
/// threads. Trial `k` of cell `c` uses stream `c·M + k` for both the
/// amplitude sample and the projection phases, so results do not depend on
/// the worker count.
pub fn run_experiment(
    grid: &ExperimentGrid,
    n_projections: usize,
    opt: &OptimizerSpec,
    workers: usize,
) -> Result<Vec<CellResult>> {
    grid.validate()?;
    if n_projections == 0 {
        return Err(Error::domain("at least one projection is required"));
    }
    let cells = grid.cells();
    let m = grid.trials;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers.max(1))
        .build()
        .map_err(|e| Error::domain(format!("cannot start worker pool: {e}")))?;
    let fits: Vec<Option<AmplitudeParams>> = pool.install(|| {
        (0..cells.len() * m)
            .into_par_iter()
            .map(|unit| {
                let (alpha, sigma, n) = cells[unit / m];
                let psi = AmplitudeParams { alpha, sigma };
                trial(&psi, n, grid.master_seed, unit as u64, n_projections, opt)
            })
            .collect()
    });
    Ok(cells
        .iter()
        .zip(fits.chunks(m))
        .map(|(&(alpha, sigma, n), chunk)| {
            let cell = summarize(alpha, sigma, n, m, chunk);
            if cell.flagged {
                log::warn!(
                    "cell alpha={alpha} sigma={sigma} n={n}: {} of {m} trials failed",
                    m - cell.trials_completed
                );
            }
            cell
        })
        .collect())
}

/// Reads one positive amplitude per line; blank lines and lines starting
/// with `#` are skipped.
pub fn load_amplitude_file(path: &Path) -> Result<Vec<f64>> {
    let text = fs::read_to_string(path)?;
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let v: f64 = line.parse().map_err(|_| Error::Parse {
            path: path.to_path_buf(),
            line: i + 1,
            message: format!("not a number: {line:?}"),
        })?;
        if !(v > 0.0 && v.is_finite()) {
            return Err(Error::domain(format!(
                "{}:{}: amplitude must be positive and finite, got {v}",
                path.display(),
                i + 1
            )));
        }
        out.push(v);
    }
    if out.is_empty() {
        return Err(Error::domain(format!("{}: no amplitude values", path.display())));
    }
    log::info!("read {} amplitudes from {}", out.len(), path.display());
    Ok(out)
}

fn csv_error(e: csv::Error) -> Error {
    match e.into_kind() {
        csv::ErrorKind::Io(e) => Error::Io(e),
        other => Error::domain(format!("csv: {other:?}")),
    }
}

/// Writes the CSV table and, if requested, an SVG chart of `rmse_alpha`
/// against `n` with one polyline per `(α, σ)`.
pub fn emit_results(cells: &[CellResult], out_csv: &Path, out_svg: Option<&Path>) -> Result<()> {
    if cells.is_empty() {
        return Err(Error::domain("no results to write"));
    }
    let mut w = csv::Writer::from_path(out_csv).map_err(csv_error)?;
    for c in cells {
        w.serialize(c).map_err(csv_error)?;
    }
    w.flush()?;
    if let Some(svg) = out_svg {
        fs::write(svg, render_svg(cells))?;
    }
    Ok(())
}

/// Parses a CSV written by [`emit_results`].
pub fn read_results(path: &Path) -> Result<Vec<CellResult>> {
    let mut r = csv::Reader::from_path(path).map_err(csv_error)?;
    r.deserialize().map(|row| row.map_err(csv_error)).collect()
}

const PALETTE: [&str; 8] = [
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf", "#8c564b", "#e377c2",
];

/// SVG line chart of `rmse_alpha` against `n` on a log-n axis.
pub fn render_svg(cells: &[CellResult]) -> String {
    let (width, height, margin) = (640.0, 420.0, 60.0);
    let mut series: Vec<((f64, f64), Vec<(usize, f64)>)> = Vec::new();
    for c in cells {
        let key = (c.alpha, c.sigma);
        match series.iter_mut().find(|(k, _)| *k == key) {
            Some((_, pts)) => pts.push((c.n, c.rmse_alpha)),
            None => series.push((key, vec![(c.n, c.rmse_alpha)])),
        }
    }
    for (_, pts) in &mut series {
        pts.sort_by_key(|p| p.0);
    }
    let finite = || cells.iter().map(|c| c.rmse_alpha).filter(|v| v.is_finite());
    let y_max = finite().fold(0.0, f64::max).max(1e-12) * 1.05;
    let ln_n = |n: usize| (n.max(1) as f64).ln();
    let x_lo = cells.iter().map(|c| ln_n(c.n)).fold(f64::INFINITY, f64::min);
    let x_hi = cells.iter().map(|c| ln_n(c.n)).fold(f64::NEG_INFINITY, f64::max);
    let x_span = if x_hi > x_lo { x_hi - x_lo } else { 1.0 };
    let px = |n: usize| margin + (ln_n(n) - x_lo) / x_span * (width - 2.0 * margin);
    let py = |v: f64| height - margin - v / y_max * (height - 2.0 * margin);

    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    );
    let _ = writeln!(s, r#"<rect width="{width}" height="{height}" fill="white"/>"#);
    let _ = writeln!(
        s,
        r#"<line x1="{m}" y1="{b}" x2="{r}" y2="{b}" stroke="black"/><line x1="{m}" y1="{m}" x2="{m}" y2="{b}" stroke="black"/>"#,
        m = margin,
        b = height - margin,
        r = width - margin
    );
    let mut ns: Vec<usize> = cells.iter().map(|c| c.n).collect();
    ns.sort_unstable();
    ns.dedup();
    for n in ns {
        let _ = writeln!(
            s,
            r#"<text x="{:.2}" y="{:.2}" font-size="11" text-anchor="middle">{n}</text>"#,
            px(n),
            height - margin + 16.0
        );
    }
    let _ = writeln!(
        s,
        r#"<text x="{:.2}" y="{:.2}" font-size="12" text-anchor="middle">n</text>"#,
        width / 2.0,
        height - 16.0
    );
    let _ = writeln!(
        s,
        r#"<text x="16" y="{:.2}" font-size="12" transform="rotate(-90 16 {:.2})" text-anchor="middle">RMSE of alpha</text>"#,
        height / 2.0,
        height / 2.0
    );
    let _ = writeln!(s, r#"<text x="{:.2}" y="{:.2}" font-size="11" text-anchor="end">{y_max:.3}</text>"#, margin - 4.0, margin + 4.0);
    for (i, ((alpha, sigma), pts)) in series.iter().enumerate() {
        let colour = PALETTE[i % PALETTE.len()];
        let points: Vec<String> = pts
            .iter()
            .filter(|p| p.1.is_finite())
            .map(|&(n, v)| format!("{:.2},{:.2}", px(n), py(v)))
            .collect();
        let _ = writeln!(
            s,
            r#"<polyline fill="none" stroke="{colour}" stroke-width="1.5" points="{}"><title>alpha={alpha} sigma={sigma}</title></polyline>"#,
            points.join(" ")
        );
        let _ = writeln!(
            s,
            r#"<text x="{:.2}" y="{:.2}" font-size="11" fill="{colour}">alpha={alpha} sigma={sigma}</text>"#,
            width - margin - 130.0,
            margin + 14.0 * i as f64
        );
    }
    s.push_str("</svg>\n");
    s
}
