use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use ampstable::estimators::{fit_amplitude, Method, OptimizerSpec, ProjectionConfig};
use ampstable::gof::gof_statistics;
use ampstable::harness::{default_workers, emit_results, load_amplitude_file, run_experiment, ExperimentGrid};
use ampstable::rng::RngStream;
use ampstable::sampling::sample_amplitude;
use ampstable::{AmplitudeParams, Error, QuadratureSpec, Result};
use clap::{Parser, Subcommand};
use serde_json::json;

/// Alpha-stable amplitude distribution: fitting, simulation and diagnostics.
#[derive(Debug, Parser)]
#[command(name = "ampstable", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Estimate (alpha, sigma) from an amplitude file.
    Fit {
        /// One positive amplitude per line; '#' starts a comment line.
        #[arg(long)]
        input: PathBuf,
        /// Estimator: mle, lme or chf.
        #[arg(long, default_value = "mle", value_parser = parse_method)]
        method: Method,
        /// Number of random projection directions.
        #[arg(long, default_value_t = 20, value_parser = clap::value_parser!(u64).range(1..))]
        projections: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Also report KS, AD and CVM statistics at the estimate.
        #[arg(long)]
        gof: bool,
        /// Write a JSON report to this path.
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Monte-Carlo bias/RMSE study of the projection MLE.
    Simulate {
        #[arg(long, value_delimiter = ',', default_values_t = [1.0, 1.25, 1.5, 1.75])]
        alphas: Vec<f64>,
        #[arg(long, value_delimiter = ',', default_values_t = [0.5, 2.0])]
        sigmas: Vec<f64>,
        #[arg(long, value_delimiter = ',', default_values_t = [50, 100, 200, 500])]
        ns: Vec<usize>,
        /// Trials per cell.
        #[arg(long, default_value_t = 200, conflicts_with = "full")]
        trials: usize,
        /// Use 1000 trials per cell.
        #[arg(long)]
        full: bool,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 20, value_parser = clap::value_parser!(u64).range(1..))]
        projections: u64,
        #[arg(long)]
        out_csv: PathBuf,
        #[arg(long)]
        out_svg: Option<PathBuf>,
    },
    /// Draw amplitudes from the model.
    Sample {
        #[arg(long)]
        alpha: f64,
        #[arg(long)]
        sigma: f64,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Output file; standard output when absent.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Goodness of fit of an amplitude file against given parameters.
    Gof {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        alpha: f64,
        #[arg(long)]
        sigma: f64,
    },
}

fn parse_method(s: &str) -> std::result::Result<Method, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn fit(
    input: PathBuf,
    method: Method,
    projections: usize,
    seed: u64,
    gof: bool,
    json_path: Option<PathBuf>,
) -> Result<()> {
    let r = load_amplitude_file(&input)?;
    let quad = QuadratureSpec::default();
    let cfg = ProjectionConfig::new(projections, RngStream::new(seed, 0))?;
    let fit = fit_amplitude(&r, method, &cfg, &OptimizerSpec::default(), &quad)?;
    let report = if gof {
        Some(gof_statistics(&r, &fit.psi_hat, &quad)?)
    } else {
        None
    };

    println!("method      {}", fit.method);
    println!("alpha_hat   {}", fit.psi_hat.alpha);
    println!("sigma_hat   {}", fit.psi_hat.sigma);
    if let Some(ll) = fit.loglik {
        println!("loglik      {ll}");
    }
    println!("n           {}", fit.n_used);
    println!("wall_time_s {}", fit.wall_time);
    if fit.clipped {
        println!("note        alpha estimate clipped");
    }
    if let Some(g) = &report {
        println!("ks          {}", g.ks);
        println!("ad          {}", g.ad);
        println!("cvm         {}", g.cvm);
    }

    if let Some(path) = json_path {
        let mut doc = json!({
            "method": fit.method.as_str(),
            "alpha_hat": fit.psi_hat.alpha,
            "sigma_hat": fit.psi_hat.sigma,
            "loglik": fit.loglik,
            "n": fit.n_used,
            "n_projections": projections,
            "seed": seed,
            "wall_time_s": fit.wall_time,
            "clipped": fit.clipped,
        });
        if let Some(g) = &report {
            doc["ks"] = json!(g.ks);
            doc["ad"] = json!(g.ad);
            doc["cvm"] = json!(g.cvm);
        }
        let mut w = BufWriter::new(File::create(&path)?);
        serde_json::to_writer_pretty(&mut w, &doc).map_err(io::Error::from)?;
        writeln!(w)?;
        w.flush()?;
    }
    Ok(())
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Fit {
            input,
            method,
            projections,
            seed,
            gof,
            json,
        } => fit(input, method, projections as usize, seed, gof, json),
        Command::Simulate {
            alphas,
            sigmas,
            ns,
            trials,
            full,
            seed,
            projections,
            out_csv,
            out_svg,
        } => {
            let grid = ExperimentGrid {
                alphas,
                sigmas,
                ns,
                trials: if full { 1000 } else { trials },
                master_seed: seed,
            };
            let workers = default_workers();
            log::info!("running {} cells x {} trials on {workers} workers", grid.cells().len(), grid.trials);
            let cells = run_experiment(&grid, projections as usize, &OptimizerSpec::default(), workers)?;
            emit_results(&cells, &out_csv, out_svg.as_deref())?;
            let flagged = cells.iter().filter(|c| c.flagged).count();
            if flagged > 0 {
                eprintln!("warning: {flagged} cell(s) had more than 5% failed trials");
            }
            Ok(())
        }
        Command::Sample {
            alpha,
            sigma,
            n,
            seed,
            out,
        } => {
            let psi = AmplitudeParams::new(alpha, sigma)?;
            let r = sample_amplitude(n as usize, &psi, &mut RngStream::new(seed, 0))?;
            let sink: Box<dyn Write> = match out {
                Some(p) => Box::new(File::create(p)?),
                None => Box::new(io::stdout().lock()),
            };
            let mut w = BufWriter::new(sink);
            for v in r {
                writeln!(w, "{v}")?;
            }
            w.flush()?;
            Ok(())
        }
        Command::Gof { input, alpha, sigma } => {
            let psi = AmplitudeParams::new(alpha, sigma)?;
            let r = load_amplitude_file(&input)?;
            let g = gof_statistics(&r, &psi, &QuadratureSpec::default())?;
            println!("n   {}", g.n);
            println!("ks  {}", g.ks);
            println!("ad  {}", g.ad);
            println!("cvm {}", g.cvm);
            if g.clamped {
                println!("note probabilities clamped for AD");
            }
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
