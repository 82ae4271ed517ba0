//! Signal-approximation benchmark: reconstruct the analytic test signal and
//! its Hilbert transform from different sample types and report relative
//! RMS errors on a dense grid.
//!
//! Each row fixes a total sample budget `mu` and splits it across channel
//! types (direct samples, Hilbert samples, first/second derivatives); the
//! nonzero counts must be equal, one per channel, and the window is the
//! DFT-centered band of width `mu`. The test signal is real, so the
//! reconstruction is projected to its real part before scoring.

use crate::analysis::rmse;
use crate::channels::{build_kernel, ChannelSpec};
use crate::engine;
use crate::oracle;
use crate::spectrum::{uniform_grid, BandSpec, GridSignal};
use crate::{Complex64, Error, Result};
use serde::{Deserialize, Serialize};

/// One benchmark configuration: a sample budget and its split across
/// channel types.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    /// Total sample count (window width).
    pub mu: usize,
    /// Samples of the signal itself.
    pub f: usize,
    /// Samples of its Hilbert transform.
    pub hf: usize,
    /// Samples of its first derivative.
    pub d1: usize,
    /// Samples of its second derivative.
    pub d2: usize,
}

/// A scored row: relative RMS errors of the reconstruction and of its
/// Hilbert transform against the true signal on the evaluation grid.
#[derive(Debug, Clone, Serialize)]
pub struct RowResult {
    #[serde(flatten)]
    pub row: TableRow,
    pub delta1: f64,
    pub delta2: f64,
}

/// The sixteen standard benchmark rows.
pub fn default_rows() -> Vec<TableRow> {
    const ROWS: [(usize, usize, usize, usize, usize); 16] = [
        (16, 16, 0, 0, 0),
        (24, 24, 0, 0, 0),
        (32, 16, 16, 0, 0),
        (32, 32, 0, 0, 0),
        (48, 16, 0, 16, 16),
        (48, 24, 24, 0, 0),
        (48, 48, 0, 0, 0),
        (72, 24, 0, 24, 24),
        (72, 36, 36, 0, 0),
        (72, 72, 0, 0, 0),
        (96, 32, 0, 32, 32),
        (96, 48, 48, 0, 0),
        (96, 96, 0, 0, 0),
        (108, 36, 0, 36, 36),
        (108, 54, 54, 0, 0),
        (108, 108, 0, 0, 0),
    ];
    ROWS.iter()
        .map(|&(mu, f, hf, d1, d2)| TableRow { mu, f, hf, d1, d2 })
        .collect()
}

/// Standard evaluation grid size.
pub const DEFAULT_GRID: usize = 2048;

fn bank_for_row(row: &TableRow) -> Result<Vec<ChannelSpec>> {
    let mut bank = Vec::new();
    let mut counts = Vec::new();
    if row.f > 0 {
        bank.push(ChannelSpec::Identity);
        counts.push(row.f);
    }
    if row.hf > 0 {
        bank.push(ChannelSpec::Hilbert);
        counts.push(row.hf);
    }
    if row.d1 > 0 {
        bank.push(ChannelSpec::Derivative { order: 1 });
        counts.push(row.d1);
    }
    if row.d2 > 0 {
        bank.push(ChannelSpec::Derivative { order: 2 });
        counts.push(row.d2);
    }
    if bank.is_empty() {
        return Err(Error::InvalidConfig("row has no samples".into()));
    }
    let per = counts[0];
    if counts.iter().any(|&c| c != per) || per * bank.len() != row.mu {
        return Err(Error::InvalidConfig(format!(
            "row sample counts {counts:?} must be equal and sum to mu = {}",
            row.mu
        )));
    }
    Ok(bank)
}

/// True test-signal values on the evaluation grid, computed once and shared
/// across rows.
pub struct Reference {
    grid: usize,
    f: GridSignal,
    hf: GridSignal,
}

impl Reference {
    pub fn on_grid(grid: usize) -> Self {
        let mut fv = Vec::with_capacity(grid);
        let mut hv = Vec::with_capacity(grid);
        for t in uniform_grid(grid) {
            let (f, hf) = oracle::phi_eval(t);
            fv.push(Complex64::new(f, 0.0));
            hv.push(Complex64::new(hf, 0.0));
        }
        Self {
            grid,
            f: GridSignal::new(fv),
            hf: GridSignal::new(hv),
        }
    }

    pub fn grid(&self) -> usize {
        self.grid
    }
}

/// Run one row: sample the test signal's channels, reconstruct on the
/// reference grid, and score both outputs.
pub fn run_row(row: &TableRow, reference: &Reference) -> Result<RowResult> {
    let bank = bank_for_row(row)?;
    let band = BandSpec::centered(row.mu, bank.len())?;
    let l = band.samples_per_channel();
    let grid_points = uniform_grid(l);
    let rows: Vec<Vec<Complex64>> = bank
        .iter()
        .map(|ch| {
            grid_points
                .iter()
                .map(|&t| {
                    let v = match ch {
                        ChannelSpec::Identity => oracle::phi_eval(t).0,
                        ChannelSpec::Hilbert => oracle::phi_eval(t).1,
                        ChannelSpec::Derivative { order: 1 } => oracle::phi_prime(t),
                        ChannelSpec::Derivative { order: 2 } => oracle::phi_second(t),
                        _ => unreachable!("bank_for_row only emits these channels"),
                    };
                    Complex64::new(v, 0.0)
                })
                .collect()
        })
        .collect();
    let samples = engine::ingest(rows, &band)?;
    let kernel = build_kernel(&band, &bank, &[])?;

    let approx = engine::evaluate(&samples, &kernel, reference.grid)?;
    let approx_re = GridSignal::from_real(&approx.real_values());
    let delta1 = rmse(&reference.f, &approx_re)?;

    let happrox = engine::hilbert_evaluate(&samples, &kernel, reference.grid)?;
    let happrox_re = GridSignal::from_real(&happrox.real_values());
    let delta2 = rmse(&reference.hf, &happrox_re)?;

    Ok(RowResult {
        row: *row,
        delta1,
        delta2,
    })
}

/// Run a list of rows against a shared reference grid.
pub fn run_rows(rows: &[TableRow], grid: usize) -> Result<Vec<RowResult>> {
    let reference = Reference::on_grid(grid);
    rows.iter().map(|r| run_row(r, &reference)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bank_assembly_and_validation() {
        let row = TableRow {
            mu: 48,
            f: 16,
            hf: 0,
            d1: 16,
            d2: 16,
        };
        let bank = bank_for_row(&row).unwrap();
        assert_eq!(bank.len(), 3);
        assert_eq!(bank[0], ChannelSpec::Identity);
        assert_eq!(bank[1], ChannelSpec::Derivative { order: 1 });

        let bad = TableRow {
            mu: 48,
            f: 20,
            hf: 28,
            d1: 0,
            d2: 0,
        };
        assert!(bank_for_row(&bad).is_err());
    }

    #[test]
    fn first_row_matches_reference_value() {
        let reference = Reference::on_grid(DEFAULT_GRID);
        let r = run_row(
            &TableRow {
                mu: 16,
                f: 16,
                hf: 0,
                d1: 0,
                d2: 0,
            },
            &reference,
        )
        .unwrap();
        assert!(
            (r.delta1 - 1.482).abs() / 1.482 < 5e-3,
            "delta1 = {}",
            r.delta1
        );
        assert!(
            (r.delta2 - 1.393).abs() / 1.393 < 5e-3,
            "delta2 = {}",
            r.delta2
        );
    }

    #[test]
    fn single_row_matches_full_run() {
        let rows = vec![
            TableRow {
                mu: 48,
                f: 24,
                hf: 24,
                d1: 0,
                d2: 0,
            },
            TableRow {
                mu: 24,
                f: 24,
                hf: 0,
                d1: 0,
                d2: 0,
            },
        ];
        let both = run_rows(&rows, 512).unwrap();
        let alone = run_rows(&rows[..1], 512).unwrap();
        assert_eq!(both[0].delta1, alone[0].delta1);
        assert_eq!(both[0].delta2, alone[0].delta2);
    }
}
