//! `mci`: multichannel interpolation of periodic signals from the command
//! line. Subcommands: `table`, `reconstruct`, `sisr`, `degrade`, `kernels`.

mod complexfmt;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use mci::channels::{build_kernel, ChannelBankConfig, Kernel};
use mci::engine;
use mci::sisr::{self, DegradeConfig, Extension};
use mci::spectrum::{uniform_grid, BandSpec};
use mci::table::{default_rows, run_rows, TableRow, DEFAULT_GRID};
use mci::{pnm, Complex64};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Deserialize;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

#[derive(Parser)]
#[command(
    name = "mci",
    about = "Multichannel interpolation of periodic signals",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the signal-approximation benchmark and write it as CSV.
    Table {
        /// JSON config: {"rows": [[mu, f, hf, d1, d2], ...], "grid": 2048}.
        #[arg(long)]
        config: Option<PathBuf>,
        /// Output CSV path.
        #[arg(long, default_value = "table.csv")]
        out: PathBuf,
        /// Evaluation grid size (overrides the config file).
        #[arg(long)]
        grid: Option<usize>,
        /// Significant digits for the error columns.
        #[arg(long, default_value_t = 4)]
        digits: usize,
    },
    /// Reconstruct a signal from channel samples read from CSV
    /// (one column per channel; cells like `1.5`, `2+0.5i`).
    Reconstruct {
        /// Input CSV of channel samples.
        #[arg(long)]
        input: PathBuf,
        /// Frequency window as n1:n2:m.
        #[arg(long, allow_hyphen_values = true)]
        band: String,
        /// Channel bank: inline JSON or a path to a JSON file.
        #[arg(long)]
        channels: String,
        /// Output grid size (defaults to the window width).
        #[arg(long)]
        grid: Option<usize>,
        /// Output CSV path.
        #[arg(long, default_value = "reconstruction.csv")]
        out: PathBuf,
        /// Also emit the Hilbert transform of the reconstruction.
        #[arg(long)]
        hilbert: bool,
        /// Significant digits (default: full round-trip precision).
        #[arg(long)]
        digits: Option<usize>,
    },
    /// Upscale an image by separable multichannel interpolation.
    Sisr {
        /// Input PGM (P5) or PPM (P6) image.
        #[arg(long)]
        input: PathBuf,
        /// Output PGM path.
        #[arg(long, default_value = "upscaled.pgm")]
        out: PathBuf,
        /// Upscaling factor.
        #[arg(long, default_value_t = 3)]
        factor: usize,
        /// Line continuation past image borders.
        #[arg(long, value_enum, default_value_t = ExtendArg::Periodic)]
        extend: ExtendArg,
        /// Reference image; when given, PSNR/CC are reported.
        #[arg(long)]
        reference: Option<PathBuf>,
        /// Metrics JSON path (with --reference; default: stdout).
        #[arg(long)]
        metrics: Option<PathBuf>,
    },
    /// Blur, optionally add noise, and downsample an image.
    Degrade {
        /// Input PGM (P5) or PPM (P6) image.
        #[arg(long)]
        input: PathBuf,
        /// Output PGM path.
        #[arg(long, default_value = "degraded.pgm")]
        out: PathBuf,
        /// Downsampling factor.
        #[arg(long, default_value_t = 3)]
        factor: usize,
        /// Gaussian window size (odd).
        #[arg(long, default_value_t = 5)]
        kernel_size: usize,
        /// Gaussian standard deviation.
        #[arg(long, default_value_t = 1.0)]
        sigma: f64,
        /// Additive Gaussian noise standard deviation.
        #[arg(long, default_value_t = 0.0)]
        noise_sigma: f64,
        /// Noise seed.
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Dump the interpolation kernels y_m(t) on a dense grid as CSV.
    Kernels {
        /// Frequency window as n1:n2:m.
        #[arg(long, allow_hyphen_values = true)]
        band: String,
        /// Channel bank: inline JSON or a path to a JSON file.
        #[arg(long)]
        channels: String,
        /// Number of grid points over one period.
        #[arg(long, default_value_t = 1024)]
        grid: usize,
        /// Output CSV path.
        #[arg(long, default_value = "kernels.csv")]
        out: PathBuf,
        /// Significant digits (default: full round-trip precision).
        #[arg(long)]
        digits: Option<usize>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ExtendArg {
    Periodic,
    Mirror,
}

impl From<ExtendArg> for Extension {
    fn from(a: ExtendArg) -> Self {
        match a {
            ExtendArg::Periodic => Extension::Periodic,
            ExtendArg::Mirror => Extension::Mirror,
        }
    }
}

fn main() -> Result<()> {
    match Cli::parse().command {
        Command::Table {
            config,
            out,
            grid,
            digits,
        } => cmd_table(config.as_deref(), &out, grid, digits),
        Command::Reconstruct {
            input,
            band,
            channels,
            grid,
            out,
            hilbert,
            digits,
        } => cmd_reconstruct(&input, &band, &channels, grid, &out, hilbert, digits),
        Command::Sisr {
            input,
            out,
            factor,
            extend,
            reference,
            metrics,
        } => cmd_sisr(&input, &out, factor, extend.into(), reference.as_deref(), metrics.as_deref()),
        Command::Degrade {
            input,
            out,
            factor,
            kernel_size,
            sigma,
            noise_sigma,
            seed,
        } => cmd_degrade(&input, &out, factor, kernel_size, sigma, noise_sigma, seed),
        Command::Kernels {
            band,
            channels,
            grid,
            out,
            digits,
        } => cmd_kernels(&band, &channels, grid, &out, digits),
    }
}

#[derive(Deserialize, Default)]
struct TableConfig {
    rows: Option<Vec<(usize, usize, usize, usize, usize)>>,
    grid: Option<usize>,
}

fn format_sig(v: f64, digits: usize) -> String {
    format!("{:.*e}", digits.saturating_sub(1), v)
}

fn format_full(v: f64) -> String {
    let mut s = format!("{v}");
    if !s.contains(['.', 'e', 'E']) {
        s.push_str(".0");
    }
    s
}

fn format_opt(v: f64, digits: Option<usize>) -> String {
    match digits {
        Some(d) => format_sig(v, d),
        None => format_full(v),
    }
}

fn cmd_table(config: Option<&Path>, out: &Path, grid: Option<usize>, digits: usize) -> Result<()> {
    let cfg: TableConfig = match config {
        Some(path) => serde_json::from_str(
            &fs::read_to_string(path)
                .with_context(|| format!("reading config {}", path.display()))?,
        )
        .with_context(|| format!("parsing config {}", path.display()))?,
        None => TableConfig::default(),
    };
    let rows: Vec<TableRow> = match cfg.rows {
        Some(rows) => rows
            .into_iter()
            .map(|(mu, f, hf, d1, d2)| TableRow { mu, f, hf, d1, d2 })
            .collect(),
        None => default_rows(),
    };
    let grid = grid.or(cfg.grid).unwrap_or(DEFAULT_GRID);
    let results = run_rows(&rows, grid).context("running benchmark rows")?;
    let mut csv = String::from("mu,f,hf,d1,d2,delta1,delta2\n");
    for r in &results {
        csv.push_str(&format!(
            "{},{},{},{},{},{},{}\n",
            r.row.mu,
            r.row.f,
            r.row.hf,
            r.row.d1,
            r.row.d2,
            format_sig(r.delta1, digits),
            format_sig(r.delta2, digits),
        ));
    }
    fs::write(out, csv).with_context(|| format!("writing {}", out.display()))?;
    eprintln!("wrote {} rows to {}", results.len(), out.display());
    Ok(())
}

fn parse_band(spec: &str) -> Result<BandSpec> {
    let parts: Vec<&str> = spec.split(':').collect();
    if parts.len() != 3 {
        bail!("band must be n1:n2:m, got {spec:?}");
    }
    let n1: i64 = parts[0].parse().with_context(|| format!("band n1 {:?}", parts[0]))?;
    let n2: i64 = parts[1].parse().with_context(|| format!("band n2 {:?}", parts[1]))?;
    let m: usize = parts[2].parse().with_context(|| format!("band m {:?}", parts[2]))?;
    Ok(BandSpec::new(n1, n2, m)?)
}

fn parse_channels(arg: &str) -> Result<ChannelBankConfig> {
    let json = if arg.trim_start().starts_with('{') {
        arg.to_string()
    } else {
        fs::read_to_string(arg).with_context(|| format!("reading channel bank {arg}"))?
    };
    Ok(ChannelBankConfig::from_json(&json)?)
}

fn build_kernel_checked(band: &BandSpec, bank: &ChannelBankConfig) -> Result<Kernel> {
    let kernel = build_kernel(band, &bank.channels, &bank.null_band)?;
    if kernel.cond_max() > 1e8 {
        eprintln!(
            "warning: worst channel-matrix condition number {:.2e} exceeds 1e8; \
             reconstruction amplifies sample noise accordingly",
            kernel.cond_max()
        );
    }
    Ok(kernel)
}

fn cmd_reconstruct(
    input: &Path,
    band: &str,
    channels: &str,
    grid: Option<usize>,
    out: &Path,
    hilbert: bool,
    digits: Option<usize>,
) -> Result<()> {
    let band = parse_band(band)?;
    let bank = parse_channels(channels)?;
    let kernel = build_kernel_checked(&band, &bank)?;

    let text = fs::read_to_string(input)
        .with_context(|| format!("reading samples {}", input.display()))?;
    let columns = complexfmt::parse_columns(&text)
        .with_context(|| format!("parsing samples {}", input.display()))?;
    if columns.len() != band.channels() {
        bail!(
            "{} has {} channel columns, band {band} needs {}",
            input.display(),
            columns.len(),
            band.channels()
        );
    }
    let input_real = columns
        .iter()
        .all(|col| col.iter().all(|v| v.im == 0.0));
    let samples = engine::ingest(columns, &band)?;

    let grid = grid.unwrap_or(band.width());
    let rec = engine::evaluate(&samples, &kernel, grid)?;
    if input_real && rec.max_imag() > 1e-6 {
        eprintln!(
            "warning: real input produced an imaginary residual of {:.2e} \
             (window edge coefficients are unpaired; real parts are still exact)",
            rec.max_imag()
        );
    }
    let hil = if hilbert {
        Some(engine::hilbert_evaluate(&samples, &kernel, grid)?)
    } else {
        None
    };

    let mut csv = String::from("t,re,im");
    if hilbert {
        csv.push_str(",hilbert_re,hilbert_im");
    }
    csv.push('\n');
    let ts = uniform_grid(grid);
    for (j, &t) in ts.iter().enumerate() {
        let v = rec.values()[j];
        csv.push_str(&format!(
            "{},{},{}",
            format_opt(t, digits),
            format_opt(v.re, digits),
            format_opt(v.im, digits)
        ));
        if let Some(h) = &hil {
            let hv = h.values()[j];
            csv.push_str(&format!(
                ",{},{}",
                format_opt(hv.re, digits),
                format_opt(hv.im, digits)
            ));
        }
        csv.push('\n');
    }
    fs::write(out, csv).with_context(|| format!("writing {}", out.display()))?;
    eprintln!("wrote {grid}-point reconstruction to {}", out.display());
    Ok(())
}

fn cmd_sisr(
    input: &Path,
    out: &Path,
    factor: usize,
    extend: Extension,
    reference: Option<&Path>,
    metrics: Option<&Path>,
) -> Result<()> {
    let img = pnm::read(input).with_context(|| format!("reading image {}", input.display()))?;
    let up = sisr::upscale(&img, factor, extend)?;
    pnm::write(out, &up).with_context(|| format!("writing {}", out.display()))?;
    eprintln!(
        "upscaled {}x{} -> {}x{}, wrote {}",
        img.width(),
        img.height(),
        up.width(),
        up.height(),
        out.display()
    );
    if let Some(ref_path) = reference {
        let truth =
            pnm::read(ref_path).with_context(|| format!("reading reference {}", ref_path.display()))?;
        let psnr = sisr::psnr(&truth, &up, factor)?;
        let cc = sisr::cc(&truth, &up, factor)?;
        let report = serde_json::json!({ "psnr": psnr, "cc": cc });
        match metrics {
            Some(path) => {
                fs::write(path, serde_json::to_string_pretty(&report)?)
                    .with_context(|| format!("writing {}", path.display()))?;
                eprintln!("metrics written to {}", path.display());
            }
            None => {
                let mut stdout = std::io::stdout().lock();
                writeln!(stdout, "{report}")?;
            }
        }
    }
    Ok(())
}

fn cmd_degrade(
    input: &Path,
    out: &Path,
    factor: usize,
    kernel_size: usize,
    sigma: f64,
    noise_sigma: f64,
    seed: u64,
) -> Result<()> {
    let img = pnm::read(input).with_context(|| format!("reading image {}", input.display()))?;
    let cfg = DegradeConfig {
        kernel_size,
        sigma,
        factor,
        noise_sigma,
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let low = sisr::degrade(&img, &cfg, &mut rng)?;
    pnm::write(out, &low).with_context(|| format!("writing {}", out.display()))?;
    eprintln!(
        "degraded {}x{} -> {}x{}, wrote {}",
        img.width(),
        img.height(),
        low.width(),
        low.height(),
        out.display()
    );
    Ok(())
}

fn cmd_kernels(
    band: &str,
    channels: &str,
    grid: usize,
    out: &Path,
    digits: Option<usize>,
) -> Result<()> {
    let band = parse_band(band)?;
    let bank = parse_channels(channels)?;
    let kernel = build_kernel_checked(&band, &bank)?;
    let m = band.channels();
    let mut csv = String::from("t");
    for i in 1..=m {
        csv.push_str(&format!(",y{i}_re,y{i}_im"));
    }
    csv.push('\n');
    for t in uniform_grid(grid) {
        csv.push_str(&format_opt(t, digits));
        for mi in 0..m {
            let v: Complex64 = kernel.eval_y(mi, t);
            csv.push_str(&format!(
                ",{},{}",
                format_opt(v.re, digits),
                format_opt(v.im, digits)
            ));
        }
        csv.push('\n');
    }
    fs::write(out, csv).with_context(|| format!("writing {}", out.display()))?;
    eprintln!("wrote {m} kernels on a {grid}-point grid to {}", out.display());
    Ok(())
}
