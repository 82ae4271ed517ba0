//! Fourier-series core: frequency windows, coefficient containers, and the
//! uniform-grid transforms connecting them.
//!
//! Conventions used throughout the crate (all other modules rely on them):
//!
//! - A signal on the circle is `f(t) = sum_n a(n) e^{int}`, `t in [0, 2*pi)`.
//! - Frequency `n` occupies bin `n mod J` in a length-`J` transform; negative
//!   frequencies wrap to the upper half of the bin range.
//! - The forward transform is unnormalized and the inverse carries `1/J`, so
//!   [`analyze`] returns Fourier coefficients directly.

use crate::fft;
use crate::{Error, Result};
use num_complex::Complex64;
use std::f64::consts::TAU;
use std::ops::RangeInclusive;

/// A frequency window `{n1..n2}` split into `m` equal sub-bands.
///
/// The window width `n2 - n1 + 1` must be divisible by the channel count `m`;
/// the quotient `l` is the number of samples taken from each channel. The
/// sub-bands `I_k = {n1 + (k-1)l .. n1 + kl - 1}`, `k = 1..m`, partition the
/// window.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BandSpec {
    n1: i64,
    n2: i64,
    m: usize,
}

impl BandSpec {
    pub fn new(n1: i64, n2: i64, m: usize) -> Result<Self> {
        if m == 0 {
            return Err(Error::InvalidBand("channel count must be positive".into()));
        }
        if n2 < n1 {
            return Err(Error::InvalidBand(format!("n2 = {n2} < n1 = {n1}")));
        }
        let width = (n2 - n1 + 1) as usize;
        if width % m != 0 {
            return Err(Error::InvalidBand(format!(
                "window width {width} is not divisible by channel count {m}"
            )));
        }
        Ok(Self { n1, n2, m })
    }

    /// The window `{-floor(width/2) .. }` of the given width, the standard
    /// DFT-centered placement for both even and odd widths.
    pub fn centered(width: usize, m: usize) -> Result<Self> {
        if width == 0 {
            return Err(Error::InvalidBand("window width must be positive".into()));
        }
        let n1 = -((width / 2) as i64);
        Self::new(n1, n1 + width as i64 - 1, m)
    }

    pub fn n1(&self) -> i64 {
        self.n1
    }

    pub fn n2(&self) -> i64 {
        self.n2
    }

    /// Channel count `M`.
    pub fn channels(&self) -> usize {
        self.m
    }

    /// Samples per channel `L`.
    pub fn samples_per_channel(&self) -> usize {
        self.width() / self.m
    }

    /// Total window width `L*M`.
    pub fn width(&self) -> usize {
        (self.n2 - self.n1 + 1) as usize
    }

    pub fn contains(&self, n: i64) -> bool {
        self.n1 <= n && n <= self.n2
    }

    /// The sub-bands `I_1..I_M` in order; their concatenation is the window.
    pub fn partition(&self) -> Vec<RangeInclusive<i64>> {
        let l = self.samples_per_channel() as i64;
        (0..self.m as i64)
            .map(|k| (self.n1 + k * l)..=(self.n1 + (k + 1) * l - 1))
            .collect()
    }

    /// 0-based sub-band index of an in-window frequency.
    pub fn block_of(&self, n: i64) -> Option<usize> {
        if !self.contains(n) {
            return None;
        }
        Some(((n - self.n1) as usize) / self.samples_per_channel())
    }

    /// 0-based sub-band index for any frequency, extending the `I_k` grid
    /// over all of `Z` (negative and `>= M` values mark out-of-window blocks).
    pub fn block_of_unbounded(&self, n: i64) -> i64 {
        let l = self.samples_per_channel() as i64;
        (n - self.n1).div_euclid(l)
    }
}

impl std::fmt::Display for BandSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}:{}:{}", self.n1, self.n2, self.m)
    }
}

/// Finitely supported Fourier coefficients `a(offset), a(offset+1), ...`.
///
/// Coefficients outside the stored range are implicitly zero.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    offset: i64,
    coeffs: Vec<Complex64>,
}

impl Spectrum {
    pub fn new(offset: i64, coeffs: Vec<Complex64>) -> Self {
        assert!(!coeffs.is_empty(), "spectrum must store at least one coefficient");
        Self { offset, coeffs }
    }

    pub fn zero(offset: i64, len: usize) -> Self {
        Self::new(offset, vec![Complex64::new(0.0, 0.0); len])
    }

    /// Build from `(frequency, coefficient)` pairs; the stored range is the
    /// tight hull of the given frequencies.
    pub fn from_pairs(pairs: &[(i64, Complex64)]) -> Self {
        assert!(!pairs.is_empty(), "spectrum must store at least one coefficient");
        let lo = pairs.iter().map(|&(n, _)| n).min().unwrap();
        let hi = pairs.iter().map(|&(n, _)| n).max().unwrap();
        let mut coeffs = vec![Complex64::new(0.0, 0.0); (hi - lo + 1) as usize];
        for &(n, v) in pairs {
            coeffs[(n - lo) as usize] += v;
        }
        Self::new(lo, coeffs)
    }

    /// Frequency of the first stored coefficient.
    pub fn offset(&self) -> i64 {
        self.offset
    }

    /// Width of the stored range.
    pub fn width(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    /// Coefficient at frequency `n` (zero outside the stored range).
    pub fn coeff(&self, n: i64) -> Complex64 {
        let i = n - self.offset;
        if i < 0 || i >= self.coeffs.len() as i64 {
            Complex64::new(0.0, 0.0)
        } else {
            self.coeffs[i as usize]
        }
    }

    /// Iterate `(frequency, coefficient)` over the stored range.
    pub fn iter(&self) -> impl Iterator<Item = (i64, Complex64)> + '_ {
        let offset = self.offset;
        self.coeffs.iter().enumerate().map(move |(i, &c)| (offset + i as i64, c))
    }

    /// `sum_n |a(n)|^2`.
    pub fn energy(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm_sqr()).sum()
    }

    /// Coefficient-wise product with a frequency-domain multiplier.
    pub fn apply_multiplier(&self, mult: impl Fn(i64) -> Complex64) -> Spectrum {
        let coeffs = self
            .iter()
            .map(|(n, c)| c * mult(n))
            .collect();
        Spectrum::new(self.offset, coeffs)
    }

    /// Circular Hilbert transform: the multiplier `-i*sgn(n)`.
    pub fn hilbert(&self) -> Spectrum {
        self.apply_multiplier(hilbert_multiplier)
    }

    /// Direct summation `sum_n a(n) e^{int}`; reference-grade, `O(width)`.
    pub fn eval_at(&self, t: f64) -> Complex64 {
        // incremental phasor: e^{i(offset+j)t} = e^{i*offset*t} * (e^{it})^j
        let step = Complex64::from_polar(1.0, t);
        let mut phase = Complex64::from_polar(1.0, self.offset as f64 * t);
        let mut acc = Complex64::new(0.0, 0.0);
        for &c in &self.coeffs {
            acc += c * phase;
            phase *= step;
        }
        acc
    }
}

/// `-i*sgn(n)`, the circular Hilbert transform multiplier.
pub fn hilbert_multiplier(n: i64) -> Complex64 {
    Complex64::new(0.0, -(n.signum() as f64))
}

/// Complex samples on the uniform grid `t_j = 2*pi*j/J`, `j = 0..J-1`.
#[derive(Debug, Clone, PartialEq)]
pub struct GridSignal {
    values: Vec<Complex64>,
}

impl GridSignal {
    pub fn new(values: Vec<Complex64>) -> Self {
        assert!(!values.is_empty(), "grid must have at least one point");
        Self { values }
    }

    pub fn from_real(values: &[f64]) -> Self {
        Self::new(values.iter().map(|&v| Complex64::new(v, 0.0)).collect())
    }

    pub fn grid_size(&self) -> usize {
        self.values.len()
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    pub fn into_values(self) -> Vec<Complex64> {
        self.values
    }

    /// Largest `|Im|` over the grid, the diagnostic consulted before a caller
    /// discards imaginary parts.
    pub fn max_imag(&self) -> f64 {
        self.values.iter().map(|v| v.im.abs()).fold(0.0, f64::max)
    }

    /// Real parts of the grid values.
    pub fn real_values(&self) -> Vec<f64> {
        self.values.iter().map(|v| v.re).collect()
    }
}

/// Evaluate a spectrum on the uniform grid of the given size by zero-embedding
/// the coefficients into length-`grid_size` bins and running one inverse
/// transform of that length.
pub fn synthesize(spec: &Spectrum, grid_size: usize) -> Result<GridSignal> {
    if grid_size < spec.width() {
        return Err(Error::Alias {
            grid: grid_size,
            width: spec.width(),
        });
    }
    let mut bins = vec![Complex64::new(0.0, 0.0); grid_size];
    for (n, c) in spec.iter() {
        bins[n.rem_euclid(grid_size as i64) as usize] = c;
    }
    fft::inverse(&mut bins);
    Ok(GridSignal::new(bins))
}

/// Recover the unique spectrum supported on the band's window whose synthesis
/// on the `L*M`-point grid reproduces the signal: one forward transform plus
/// bin-to-frequency relabeling.
pub fn analyze(signal: &GridSignal, band: &BandSpec) -> Result<Spectrum> {
    let j = signal.grid_size();
    if j != band.width() {
        return Err(Error::SizeMismatch {
            expected: band.width(),
            got: j,
        });
    }
    let mut bins = signal.values().to_vec();
    fft::forward(&mut bins);
    let scale = 1.0 / j as f64;
    let coeffs = (band.n1()..=band.n2())
        .map(|n| bins[n.rem_euclid(j as i64) as usize] * scale)
        .collect();
    Ok(Spectrum::new(band.n1(), coeffs))
}

/// The uniform grid `t_p = 2*pi*p/len`.
pub fn uniform_grid(len: usize) -> Vec<f64> {
    (0..len).map(|p| TAU * p as f64 / len as f64).collect()
}
