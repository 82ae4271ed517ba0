//! Channel definitions and the per-frequency reconstruction tables.
//!
//! Each channel acts on the signal as a Fourier multiplier `b_m(n)`. For a
//! band with `M` channels and `L` samples per channel, the `M x M` matrix at
//! frequency `n` in the first sub-band is `H_n[j][k] = b_k(n + j*L)` (0-based
//! `j`, `k`); its inverse supplies the kernel coefficients `q_mk(n)` from
//! which the interpolation kernels `v_{m,n}(t)` and `y_m(t)` are built.

use crate::spectrum::BandSpec;
use crate::{Error, Result};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;

/// A channel's Fourier multiplier `b(n)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ChannelSpec {
    /// `b(n) = 1`: the channel passes the signal through.
    Identity,
    /// `b(n) = (i*n)^order`: the order-th derivative.
    Derivative { order: u32 },
    /// `b(n) = -i*sgn(n)`: the circular Hilbert transform.
    Hilbert,
    /// `b(n) = 1` for `n >= 0`, `0` for `n < 0`: projection onto
    /// nonnegative frequencies.
    AnalyticProjection,
    /// Explicit `(n, re, im)` entries; absent frequencies map to 0.
    Table { entries: Vec<(i64, f64, f64)> },
}

impl ChannelSpec {
    /// The multiplier value `b(n)`.
    pub fn multiplier(&self, n: i64) -> Complex64 {
        match self {
            ChannelSpec::Identity => Complex64::new(1.0, 0.0),
            ChannelSpec::Derivative { order } => Complex64::new(0.0, n as f64).powu(*order),
            ChannelSpec::Hilbert => Complex64::new(0.0, -(n.signum() as f64)),
            ChannelSpec::AnalyticProjection => {
                Complex64::new(if n >= 0 { 1.0 } else { 0.0 }, 0.0)
            }
            ChannelSpec::Table { entries } => entries
                .iter()
                .find(|&&(f, _, _)| f == n)
                .map(|&(_, re, im)| Complex64::new(re, im))
                .unwrap_or_else(|| Complex64::new(0.0, 0.0)),
        }
    }
}

/// JSON description of a channel bank, the exchange format used by the CLI:
/// `{"channels":[{"kind":"derivative","order":1}, ...], "null_band":[0]}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ChannelBankConfig {
    pub channels: Vec<ChannelSpec>,
    #[serde(default)]
    pub null_band: Vec<i64>,
}

impl ChannelBankConfig {
    pub fn from_json(json: &str) -> Result<Self> {
        serde_json::from_str(json).map_err(|e| Error::InvalidConfig(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("channel bank serializes")
    }
}

/// Precomputed reconstruction operator: the inverse-matrix tables `q_mk(n)`
/// for `n` in the first sub-band, with exempted frequencies zero-filled.
///
/// Immutable after [`build_kernel`]; all evaluation methods are pure.
#[derive(Debug, Clone)]
pub struct Kernel {
    band: BandSpec,
    channels: Vec<ChannelSpec>,
    /// `q[(m*M + k)*L + j] = q_mk(n1 + j)`.
    q: Vec<Complex64>,
    null_band: BTreeSet<i64>,
    cond_max: f64,
}

/// The matrix `H_n` for `n` in the first sub-band, row-major `M x M`:
/// entry `(j, k)` is `b_k(n + j*L)` with 0-based indices.
pub fn build_matrix(band: &BandSpec, channels: &[ChannelSpec], n: i64) -> Vec<Complex64> {
    let m = channels.len();
    let l = band.width() as i64 / m as i64;
    let mut h = Vec::with_capacity(m * m);
    for j in 0..m as i64 {
        for ch in channels {
            h.push(ch.multiplier(n + j * l));
        }
    }
    h
}

/// Relative pivot threshold below which `H_n` is declared singular.
const PIVOT_TOLERANCE: f64 = 1e-12;

/// Invert an `M x M` row-major matrix by Gauss-Jordan elimination with
/// partial pivoting. A pivot below `PIVOT_TOLERANCE` times the largest
/// initial row max-norm signals singularity.
fn invert(h: &[Complex64], m: usize) -> Option<Vec<Complex64>> {
    let mut a = h.to_vec();
    let mut inv: Vec<Complex64> = (0..m * m)
        .map(|i| {
            if i / m == i % m {
                Complex64::new(1.0, 0.0)
            } else {
                Complex64::new(0.0, 0.0)
            }
        })
        .collect();
    let scale = h.iter().map(|v| v.norm()).fold(0.0, f64::max);
    if scale == 0.0 {
        return None;
    }
    let tol = PIVOT_TOLERANCE * scale;
    for col in 0..m {
        let pivot_row = (col..m)
            .max_by(|&r1, &r2| {
                a[r1 * m + col]
                    .norm()
                    .total_cmp(&a[r2 * m + col].norm())
            })
            .unwrap();
        if a[pivot_row * m + col].norm() < tol {
            return None;
        }
        if pivot_row != col {
            for j in 0..m {
                a.swap(col * m + j, pivot_row * m + j);
                inv.swap(col * m + j, pivot_row * m + j);
            }
        }
        let p = a[col * m + col];
        for j in 0..m {
            a[col * m + j] /= p;
            inv[col * m + j] /= p;
        }
        for row in 0..m {
            if row == col {
                continue;
            }
            let factor = a[row * m + col];
            if factor.norm() == 0.0 {
                continue;
            }
            for j in 0..m {
                let av = a[col * m + j];
                let iv = inv[col * m + j];
                a[row * m + j] -= factor * av;
                inv[row * m + j] -= factor * iv;
            }
        }
    }
    Some(inv)
}

/// Max absolute column sum (the matrix 1-norm).
fn one_norm(a: &[Complex64], m: usize) -> f64 {
    (0..m)
        .map(|col| (0..m).map(|row| a[row * m + col].norm()).sum::<f64>())
        .fold(0.0, f64::max)
}

/// Build the reconstruction kernel for a band and channel bank.
///
/// Every frequency in the first sub-band must either yield an invertible
/// `H_n` or be listed in `null_band`; exempted frequencies get zero-filled
/// tables, which is only consistent if the signal's coefficients vanish on
/// the sub-band column through that frequency (the caller's responsibility,
/// unverifiable from raw samples).
pub fn build_kernel(
    band: &BandSpec,
    channels: &[ChannelSpec],
    null_band: &[i64],
) -> Result<Kernel> {
    let m = channels.len();
    if m != band.channels() {
        return Err(Error::SizeMismatch {
            expected: band.channels(),
            got: m,
        });
    }
    let l = band.samples_per_channel();
    let null_band: BTreeSet<i64> = null_band.iter().copied().collect();
    let mut q = vec![Complex64::new(0.0, 0.0); m * m * l];
    let mut cond_max = 0.0f64;
    for j in 0..l {
        let n = band.n1() + j as i64;
        if null_band.contains(&n) {
            continue;
        }
        let h = build_matrix(band, channels, n);
        let inv = invert(&h, m).ok_or(Error::SingularMatrix(n))?;
        cond_max = cond_max.max(one_norm(&h, m) * one_norm(&inv, m));
        for mi in 0..m {
            for k in 0..m {
                q[(mi * m + k) * l + j] = inv[mi * m + k];
            }
        }
    }
    Ok(Kernel {
        band: *band,
        channels: channels.to_vec(),
        q,
        null_band,
        cond_max,
    })
}

impl Kernel {
    pub fn band(&self) -> &BandSpec {
        &self.band
    }

    pub fn channels(&self) -> &[ChannelSpec] {
        &self.channels
    }

    pub fn null_band(&self) -> &BTreeSet<i64> {
        &self.null_band
    }

    /// Largest estimated 1-norm condition number among the inverted matrices.
    /// Values above ~1e8 mean the reconstruction amplifies sample noise
    /// correspondingly.
    pub fn cond_max(&self) -> f64 {
        self.cond_max
    }

    /// `q_mk(n)` for `n` in the first sub-band (0-based `m`, `k`).
    pub fn q(&self, m: usize, k: usize, n: i64) -> Complex64 {
        let mm = self.channels.len();
        let l = self.band.samples_per_channel();
        let j = (n - self.band.n1()) as usize;
        debug_assert!(j < l, "frequency {n} outside the first sub-band");
        self.q[(m * mm + k) * l + j]
    }

    /// The flattened kernel coefficient `r_m(n)` over the whole window
    /// (zero outside it).
    pub fn r_value(&self, m: usize, n: i64) -> Complex64 {
        match self.band.block_of(n) {
            None => Complex64::new(0.0, 0.0),
            Some(k) => {
                let l = self.band.samples_per_channel() as i64;
                self.q(m, k, n - k as i64 * l)
            }
        }
    }

    /// `v_{m,n}(t) = sum_k q_mk(n) e^{i(n + k*L)t}` for `n` in the first
    /// sub-band; the numerically stable building block for kernel evaluation.
    pub fn eval_v(&self, m: usize, n: i64, t: f64) -> Complex64 {
        let mm = self.channels.len();
        let l = self.band.samples_per_channel() as i64;
        let step = Complex64::from_polar(1.0, l as f64 * t);
        let mut phase = Complex64::from_polar(1.0, n as f64 * t);
        let mut acc = Complex64::new(0.0, 0.0);
        for k in 0..mm {
            acc += self.q(m, k, n) * phase;
            phase *= step;
        }
        acc
    }

    /// The interpolation kernel `y_m(t) = sum_n r_m(n) e^{int}`, evaluated
    /// through the `v_{m,n}` sums (`y_m(t) = sum_{n in I_1} v_{m,n}(t)`).
    pub fn eval_y(&self, m: usize, t: f64) -> Complex64 {
        let n1 = self.band.n1();
        let l = self.band.samples_per_channel();
        (0..l)
            .map(|j| self.eval_v(m, n1 + j as i64, t))
            .sum()
    }

    #[cfg(test)]
    pub(crate) fn perturb_q(&mut self, m: usize, k: usize, n: i64, delta: Complex64) {
        let mm = self.channels.len();
        let l = self.band.samples_per_channel();
        let j = (n - self.band.n1()) as usize;
        self.q[(m * mm + k) * l + j] += delta;
    }
}
