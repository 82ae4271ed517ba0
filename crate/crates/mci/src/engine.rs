//! The reconstruction pipeline: channel sampling, demodulation, spectrum
//! recovery, and grid/pointwise evaluation.
//!
//! For a bandlimited input the pipeline is exact; for anything else the
//! result is the approximation operator `T_N f` (the orthogonal data still
//! fold into the window), never a claim of recovering `f` itself.

use crate::channels::{ChannelSpec, Kernel};
use crate::spectrum::{self, BandSpec, GridSignal, Spectrum};
use crate::{Complex64, Error, Result};

/// The `M x L` array of channel samples `g_m(2*pi*p/L)`.
#[derive(Debug, Clone, PartialEq)]
pub struct SampleSet {
    band: BandSpec,
    g: Vec<Vec<Complex64>>,
}

impl SampleSet {
    pub fn band(&self) -> &BandSpec {
        &self.band
    }

    pub fn rows(&self) -> &[Vec<Complex64>] {
        &self.g
    }

    pub fn row(&self, m: usize) -> &[Complex64] {
        &self.g[m]
    }
}

/// Wrap raw per-channel sample lists; every list must hold `L` values.
pub fn ingest(raw: Vec<Vec<Complex64>>, band: &BandSpec) -> Result<SampleSet> {
    if raw.len() != band.channels() {
        return Err(Error::SizeMismatch {
            expected: band.channels(),
            got: raw.len(),
        });
    }
    let l = band.samples_per_channel();
    for row in &raw {
        if row.len() != l {
            return Err(Error::SizeMismatch {
                expected: l,
                got: row.len(),
            });
        }
    }
    Ok(SampleSet {
        band: *band,
        g: raw,
    })
}

/// Per-channel folded coefficients `d_m(n)`, each supported on the first
/// sub-band.
#[derive(Debug, Clone)]
pub struct DemodTable {
    band: BandSpec,
    d: Vec<Spectrum>,
}

impl DemodTable {
    pub fn band(&self) -> &BandSpec {
        &self.band
    }

    /// `d_m(n)` for `n` in the first sub-band.
    pub fn value(&self, m: usize, n: i64) -> Complex64 {
        self.d[m].coeff(n)
    }

    pub fn row(&self, m: usize) -> &Spectrum {
        &self.d[m]
    }
}

/// Sub-band window `I_1` viewed as a one-channel band, the index space of
/// demodulated coefficients.
fn first_sub_band(band: &BandSpec) -> BandSpec {
    BandSpec::new(
        band.n1(),
        band.n1() + band.samples_per_channel() as i64 - 1,
        1,
    )
    .expect("first sub-band is a valid window")
}

/// Synthetically sample every channel of a spectrum on the `L`-point grid.
///
/// The spectrum may exceed the band's window; all of its support folds into
/// the first sub-band exactly as physical sampling would alias it.
pub fn sample_channels(spec: &Spectrum, channels: &[ChannelSpec], band: &BandSpec) -> SampleSet {
    let l = band.samples_per_channel();
    let sub = first_sub_band(band);
    let rows = channels
        .iter()
        .map(|ch| {
            // fold c_m(n) = a(n) b_m(n) onto I_1 modulo L
            let mut folded = vec![Complex64::new(0.0, 0.0); l];
            for (n, a) in spec.iter() {
                let j = (n - band.n1()).rem_euclid(l as i64) as usize;
                folded[j] += a * ch.multiplier(n);
            }
            let d = Spectrum::new(sub.n1(), folded);
            spectrum::synthesize(&d, l)
                .expect("sub-band synthesis cannot alias")
                .into_values()
        })
        .collect();
    SampleSet {
        band: *band,
        g: rows,
    }
}

/// Recover the folded coefficients from the samples: one length-`L` forward
/// transform per channel, `d_m(n) = (1/L) sum_p g_m(t_p) e^{-i n t_p}`.
pub fn demodulate(samples: &SampleSet) -> DemodTable {
    let sub = first_sub_band(&samples.band);
    let d = samples
        .g
        .iter()
        .map(|row| {
            spectrum::analyze(&GridSignal::new(row.clone()), &sub)
                .expect("row length matches sub-band width")
        })
        .collect();
    DemodTable {
        band: samples.band,
        d,
    }
}

fn check_bands(samples: &SampleSet, kernel: &Kernel) -> Result<()> {
    if samples.band != *kernel.band() {
        return Err(Error::BandMismatch {
            samples: samples.band.to_string(),
            kernel: kernel.band().to_string(),
        });
    }
    Ok(())
}

/// Solve for the window coefficients: `a(n + k*L) = sum_m d_m(n) q_mk(n)`
/// per first-sub-band frequency `n`. Exempted frequencies come out zero.
pub fn reconstruct_spectrum(samples: &SampleSet, kernel: &Kernel) -> Result<Spectrum> {
    check_bands(samples, kernel)?;
    let band = &samples.band;
    let m = band.channels();
    let l = band.samples_per_channel();
    let d = demodulate(samples);
    let mut coeffs = vec![Complex64::new(0.0, 0.0); band.width()];
    for j in 0..l {
        let n = band.n1() + j as i64;
        for k in 0..m {
            let mut acc = Complex64::new(0.0, 0.0);
            for mi in 0..m {
                acc += d.value(mi, n) * kernel.q(mi, k, n);
            }
            coeffs[j + k * l] = acc;
        }
    }
    Ok(Spectrum::new(band.n1(), coeffs))
}

/// Reconstruct and evaluate on a uniform output grid (FFT path).
///
/// `grid_size` must be at least the window width `L*M`; it need not be a
/// multiple of `L`.
pub fn evaluate(samples: &SampleSet, kernel: &Kernel, grid_size: usize) -> Result<GridSignal> {
    let spec = reconstruct_spectrum(samples, kernel)?;
    spectrum::synthesize(&spec, grid_size)
}

/// Reconstruction value at an arbitrary point, through the stable kernel
/// sums: `sum_m sum_{n in I_1} d_m(n) v_{m,n}(t)`.
pub fn evaluate_at(samples: &SampleSet, kernel: &Kernel, t: f64) -> Result<Complex64> {
    check_bands(samples, kernel)?;
    let d = demodulate(samples);
    let table = combined_table(&d, kernel);
    Ok(direct_point(&table, samples.band(), t))
}

/// The translate-sum path on a whole grid: per-point kernel sums with no
/// transform on the output side. Reference-grade; `evaluate` computes the
/// same values through one FFT.
pub fn evaluate_direct(
    samples: &SampleSet,
    kernel: &Kernel,
    grid_size: usize,
) -> Result<GridSignal> {
    check_bands(samples, kernel)?;
    let d = demodulate(samples);
    let table = combined_table(&d, kernel);
    let band = samples.band();
    let values = spectrum::uniform_grid(grid_size)
        .into_iter()
        .map(|t| direct_point(&table, band, t))
        .collect();
    Ok(GridSignal::new(values))
}

/// The t-independent weights of the kernel sums,
/// `table[j*M + k] = sum_m d_m(n1+j) q_mk(n1+j)`.
fn combined_table(d: &DemodTable, kernel: &Kernel) -> Vec<Complex64> {
    let band = d.band();
    let m = band.channels();
    let l = band.samples_per_channel();
    let mut table = vec![Complex64::new(0.0, 0.0); l * m];
    for j in 0..l {
        let n = band.n1() + j as i64;
        for k in 0..m {
            let mut acc = Complex64::new(0.0, 0.0);
            for mi in 0..m {
                acc += d.value(mi, n) * kernel.q(mi, k, n);
            }
            table[j * m + k] = acc;
        }
    }
    table
}

fn direct_point(table: &[Complex64], band: &BandSpec, t: f64) -> Complex64 {
    let m = band.channels();
    let l = band.samples_per_channel() as i64;
    // the exponents n1 + j + k*L walk two phasor ladders
    let step = Complex64::from_polar(1.0, t);
    let block = Complex64::from_polar(1.0, l as f64 * t);
    let mut base = Complex64::from_polar(1.0, band.n1() as f64 * t);
    let mut acc = Complex64::new(0.0, 0.0);
    for j in 0..band.samples_per_channel() {
        let mut phase = base;
        for k in 0..m {
            acc += table[j * m + k] * phase;
            phase *= block;
        }
        base *= step;
    }
    acc
}

/// Reconstruct, apply the Hilbert multiplier, and synthesize: grid samples
/// of the circular Hilbert transform of the reconstruction.
pub fn hilbert_evaluate(
    samples: &SampleSet,
    kernel: &Kernel,
    grid_size: usize,
) -> Result<GridSignal> {
    let spec = reconstruct_spectrum(samples, kernel)?.hilbert();
    spectrum::synthesize(&spec, grid_size)
}

/// How to estimate the DC coefficient `a(0)` from channel samples.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum A0Mode {
    /// Mean of the signal's own samples; exact for a signal bandlimited to
    /// the sampled window (one identity channel covering it).
    FromF,
    /// Mean of `f + i*Hf` over an identity/Hilbert channel pair; exact on
    /// half the grid the first mode needs.
    FromFAndHf,
}

/// Estimate `a(0)` from the sample rows of the named channels.
pub fn estimate_a0(
    samples: &SampleSet,
    channels: &[ChannelSpec],
    mode: A0Mode,
) -> Result<Complex64> {
    let find = |want: &ChannelSpec| {
        channels
            .iter()
            .position(|c| c == want)
            .map(|i| samples.row(i))
    };
    let mean = |row: &[Complex64]| row.iter().sum::<Complex64>() / row.len() as f64;
    match mode {
        A0Mode::FromF => {
            let f = find(&ChannelSpec::Identity).ok_or(Error::ModeMismatch("FromF"))?;
            Ok(mean(f))
        }
        A0Mode::FromFAndHf => {
            let f = find(&ChannelSpec::Identity).ok_or(Error::ModeMismatch("FromFAndHf"))?;
            let hf = find(&ChannelSpec::Hilbert).ok_or(Error::ModeMismatch("FromFAndHf"))?;
            let i = Complex64::new(0.0, 1.0);
            Ok(mean(f) + i * mean(hf))
        }
    }
}
