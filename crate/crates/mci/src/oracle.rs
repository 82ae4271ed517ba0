//! Reference-grade counterparts of the fast paths: closed-form interpolation
//! kernels, direct translate-sum formulas for Hilbert-transform sampling, and
//! the analytic test signal driving the benchmark harness.
//!
//! Everything here trades speed for independence. The closed forms are 0/0
//! at grid-aligned points, so evaluation near a removable singularity is
//! refused (guard radius 1e-6) instead of patched; the stable engine paths
//! are the production implementation and only need agreement at generic
//! points.

use crate::spectrum::Spectrum;
use crate::{Complex64, Error, Result};
use std::f64::consts::TAU;

/// Distance of `t` to the nearest multiple of 2*pi.
fn dist_to_period(t: f64) -> f64 {
    let r = t.rem_euclid(TAU);
    r.min(TAU - r)
}

const SINGULARITY_GUARD: f64 = 1e-6;

fn guard_singularity(t: f64) -> Result<()> {
    if dist_to_period(t) < SINGULARITY_GUARD {
        Err(Error::NearSingularity {
            at: t,
            guard: SINGULARITY_GUARD,
        })
    } else {
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// analytic test signal
// ---------------------------------------------------------------------------

/// Polynomial with real coefficients, ascending powers.
#[derive(Clone)]
struct Poly(Vec<f64>);

impl Poly {
    fn eval(&self, z: Complex64) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for &c in self.0.iter().rev() {
            acc = acc * z + c;
        }
        acc
    }

    fn derivative(&self) -> Poly {
        Poly(
            self.0
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, &c)| i as f64 * c)
                .collect(),
        )
    }

    fn mul(&self, other: &Poly) -> Poly {
        let mut out = vec![0.0; self.0.len() + other.0.len() - 1];
        for (i, &a) in self.0.iter().enumerate() {
            for (j, &b) in other.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly(out)
    }

    fn sub(&self, other: &Poly) -> Poly {
        let n = self.0.len().max(other.0.len());
        let mut out = vec![0.0; n];
        for (i, v) in out.iter_mut().enumerate() {
            *v = self.0.get(i).copied().unwrap_or(0.0) - other.0.get(i).copied().unwrap_or(0.0);
        }
        Poly(out)
    }
}

/// A rational function as a sum of numerator/denominator pairs.
#[derive(Clone)]
struct Rational {
    terms: Vec<(Poly, Poly)>,
}

impl Rational {
    fn eval(&self, z: Complex64) -> Complex64 {
        self.terms
            .iter()
            .map(|(num, den)| num.eval(z) / den.eval(z))
            .sum()
    }

    fn derivative(&self) -> Rational {
        Rational {
            terms: self
                .terms
                .iter()
                .map(|(num, den)| {
                    let n = num.derivative().mul(den).sub(&num.mul(&den.derivative()));
                    (n, den.mul(den))
                })
                .collect(),
        }
    }
}

/// The test function: a rational function of `z` analytic on the closed unit
/// disk, with samples taken along `z = e^{it}`.
fn test_rational() -> Rational {
    // (0.08 z^2 + 0.06 z^10) / ((1.3 - z)(1.5 - z))
    let mut num1 = vec![0.0; 11];
    num1[2] = 0.08;
    num1[10] = 0.06;
    let den1 = Poly(vec![1.3, -1.0]).mul(&Poly(vec![1.5, -1.0]));
    // (0.05 z^3 + 0.09 z^10) / ((1.2 + z)(1.3 + z))
    let mut num2 = vec![0.0; 11];
    num2[3] = 0.05;
    num2[10] = 0.09;
    let den2 = Poly(vec![1.2, 1.0]).mul(&Poly(vec![1.3, 1.0]));
    Rational {
        terms: vec![(Poly(num1), den1), (Poly(num2), den2)],
    }
}

/// The test rational together with its first two derivatives.
fn cached_rational() -> &'static (Rational, Rational, Rational) {
    static CELL: std::sync::OnceLock<(Rational, Rational, Rational)> = std::sync::OnceLock::new();
    CELL.get_or_init(|| {
        let r = test_rational();
        let d1 = r.derivative();
        let d2 = d1.derivative();
        (r, d1, d2)
    })
}

fn phi_value(z: Complex64) -> Complex64 {
    cached_rational().0.eval(z)
}

/// Real part and Hilbert transform of the test signal at `t`: since the
/// underlying rational function is analytic on the closed unit disk with
/// real Taylor coefficients and no constant term, the imaginary part of its
/// boundary values is exactly the circular Hilbert transform of the real
/// part.
pub fn phi_eval(t: f64) -> (f64, f64) {
    let v = phi_value(Complex64::from_polar(1.0, t));
    (v.re, v.im)
}

/// First derivative of the real part of the test signal.
pub fn phi_prime(t: f64) -> f64 {
    let z = Complex64::from_polar(1.0, t);
    let d1 = &cached_rational().1;
    (Complex64::new(0.0, 1.0) * z * d1.eval(z)).re
}

/// Second derivative of the real part of the test signal.
pub fn phi_second(t: f64) -> f64 {
    let z = Complex64::from_polar(1.0, t);
    let (_, d1, d2) = cached_rational();
    (-z * d1.eval(z) - z * z * d2.eval(z)).re
}

/// Taylor coefficients of the test rational function via partial fractions:
/// `c(n) = 0.08 s1(n-2) + 0.06 s1(n-10) + 0.05 s2(n-3) + 0.09 s2(n-10)` with
/// `s1(n) = 5/1.3^{n+1} - 5/1.5^{n+1}` and
/// `s2(n) = (-1)^n (10/1.2^{n+1} - 10/1.3^{n+1})`.
fn phi_taylor(n: i64) -> f64 {
    let s1 = |k: i64| -> f64 {
        if k < 0 {
            0.0
        } else {
            5.0 / 1.3f64.powi(k as i32 + 1) - 5.0 / 1.5f64.powi(k as i32 + 1)
        }
    };
    let s2 = |k: i64| -> f64 {
        if k < 0 {
            0.0
        } else {
            let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
            sign * (10.0 / 1.2f64.powi(k as i32 + 1) - 10.0 / 1.3f64.powi(k as i32 + 1))
        }
    };
    0.08 * s1(n - 2) + 0.06 * s1(n - 10) + 0.05 * s2(n - 3) + 0.09 * s2(n - 10)
}

/// Fourier spectrum of the real part of the test signal, truncated where
/// the coefficient magnitude drops below `tol`: `a(n) = c(|n|)/2` for
/// `n != 0` (the Taylor coefficients are real), `a(0) = 0`.
pub fn phi_spectrum(tol: f64) -> Spectrum {
    let mut last = 0i64;
    for n in 1..2000 {
        if phi_taylor(n).abs() >= tol {
            last = n;
        }
    }
    let mut pairs = vec![(0i64, Complex64::new(0.0, 0.0))];
    for n in 1..=last {
        let half = Complex64::new(phi_taylor(n) / 2.0, 0.0);
        pairs.push((n, half));
        pairs.push((-n, half));
    }
    Spectrum::from_pairs(&pairs)
}

// ---------------------------------------------------------------------------
// closed-form kernels
// ---------------------------------------------------------------------------

/// The printed closed forms of the interpolation kernels for the classic
/// channel banks. Parameters follow each bank's natural band convention.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClosedFormKernel {
    /// Order-`n` Dirichlet kernel (single identity channel on `{-n..n}`).
    Dirichlet { n: u32 },
    /// Identity-channel kernel of the (f, f', f'') bank on `{-N..N}` with
    /// `N = 3*n0 + 1`.
    DerivativeBankY1 { n0: u32 },
    /// First-derivative-channel kernel of the same bank.
    DerivativeBankY2 { n0: u32 },
    /// Second-derivative-channel kernel of the same bank.
    DerivativeBankY3 { n0: u32 },
    /// Kernel of the single Hilbert channel on `{-n..n}` with frequency 0
    /// exempted.
    HilbertChannel { n: u32 },
    /// Real part of the analytic-projection kernel `sum_{k=0}^{n} e^{ikt}`.
    AnalyticReal { n: u32 },
    /// Imaginary part of the analytic-projection kernel.
    AnalyticImag { n: u32 },
    /// Identity-channel kernel of the (f, Hf) pair on `{-n..n+1}`.
    HilbertPairY1 { n: u32 },
    /// Hilbert-channel kernel of the (f, Hf) pair, as printed; differs from
    /// the exact inverse-table kernel by `(i-1)e^{i(n+1)t}`, which cancels in
    /// the full interpolation formula whenever `a(n+1) = 0`.
    HilbertPairY2 { n: u32 },
}

/// Literal evaluation of a printed kernel expression. Errors within 1e-6 of
/// a removable singularity; use the engine's kernel evaluation for stable
/// values everywhere.
pub fn closed_form_y(which: ClosedFormKernel, t: f64) -> Result<Complex64> {
    guard_singularity(t)?;
    use ClosedFormKernel::*;
    let re = |x: f64| Complex64::new(x, 0.0);
    Ok(match which {
        Dirichlet { n } => {
            let n = n as f64;
            re(((n + 0.5) * t).sin() / (0.5 * t).sin())
        }
        DerivativeBankY1 { n0 } => {
            let n0 = n0 as f64;
            let s = ((n0 + 0.5) * t).sin();
            re(s * s * s * (n0 * n0 + n0 + 1.0 - (n0 + 1.0) * n0 * t.cos())
                / ((2.0 * n0 + 1.0).powi(2) * (0.5 * t).sin().powi(3)))
        }
        DerivativeBankY2 { n0 } => {
            let n0 = n0 as f64;
            re(t.sin() * ((n0 + 0.5) * t).sin().powi(3)
                / ((2.0 * n0 + 1.0).powi(2) * (0.5 * t).sin().powi(3)))
        }
        DerivativeBankY3 { n0 } => {
            let n0 = n0 as f64;
            re(2.0 * ((n0 + 0.5) * t).sin().powi(3)
                / ((2.0 * n0 + 1.0).powi(2) * (0.5 * t).sin()))
        }
        HilbertChannel { n } => {
            let n = n as f64;
            re(-2.0 / (0.5 * t).sin() * (0.5 * n * t).sin() * (0.5 * (1.0 + n) * t).sin())
        }
        AnalyticReal { n } => {
            let n = n as f64;
            re((0.5 * n * t).cos() * (0.5 * (1.0 + n) * t).sin() / (0.5 * t).sin())
        }
        AnalyticImag { n } => {
            let n = n as f64;
            re((0.5 * n * t).sin() * (0.5 * (1.0 + n) * t).sin() / (0.5 * t).sin())
        }
        HilbertPairY1 { n } => {
            let n = n as f64;
            re((((n + 1.0) * t).cos() - (n * t).cos() + t.cos() - 1.0) / (2.0 * t.cos() - 2.0))
        }
        HilbertPairY2 { n } => {
            let i = Complex64::new(0.0, 1.0);
            let z = Complex64::from_polar(1.0, t);
            let n = n as i32;
            z.powi(n + 1) - i
                - i * (z.powi(-n) - 1.0) * (z.powi(n + 1) - 1.0) / ((z - 1.0) * 2.0)
        }
    })
}

// ---------------------------------------------------------------------------
// translate-sum references
// ---------------------------------------------------------------------------

/// Interpolate `2N+1` uniform samples with the Dirichlet kernel:
/// `(1/(2N+1)) sum_p values[p] D_N(t - t_p)`. Near a grid-aligned shift the
/// kernel is evaluated by its series instead of the 0/0 closed form.
pub fn dirichlet_interpolate(values: &[Complex64], t: f64) -> Result<Complex64> {
    let count = values.len();
    if count % 2 == 0 || count == 0 {
        return Err(Error::TooShort {
            need: count + 1,
            got: count,
        });
    }
    let n = (count - 1) / 2;
    let mut acc = Complex64::new(0.0, 0.0);
    for (p, &v) in values.iter().enumerate() {
        let dt = t - TAU * p as f64 / count as f64;
        let d = if dist_to_period(dt) < 1e-8 {
            // series value: sum over |k| <= n of e^{ik dt}
            (-(n as i64)..=n as i64)
                .map(|k| Complex64::from_polar(1.0, k as f64 * dt))
                .sum::<Complex64>()
                .re
        } else {
            ((n as f64 + 0.5) * dt).sin() / (0.5 * dt).sin()
        };
        acc += v * d;
    }
    Ok(acc / count as f64)
}

fn hilbert_channel_kernel(n: usize, dt: f64) -> f64 {
    if dist_to_period(dt) < 1e-8 {
        // odd series: the limit at grid-aligned shifts is zero
        0.0
    } else {
        -2.0 / (0.5 * dt).sin() * (0.5 * n as f64 * dt).sin() * (0.5 * (1 + n) as f64 * dt).sin()
    }
}

fn require_odd(len: usize) -> Result<usize> {
    if len % 2 == 0 || len == 0 {
        Err(Error::TooShort {
            need: len + 1,
            got: len,
        })
    } else {
        Ok((len - 1) / 2)
    }
}

/// Recover the signal from `2N+1` samples of its Hilbert transform
/// (valid when the signal is bandlimited to `{-N..N}` with `a(0) = 0`).
pub fn f_from_hilbert_samples(hf: &[Complex64], t: f64) -> Result<Complex64> {
    let n = require_odd(hf.len())?;
    let count = hf.len() as f64;
    let mut acc = Complex64::new(0.0, 0.0);
    for (p, &v) in hf.iter().enumerate() {
        acc += v * hilbert_channel_kernel(n, t - TAU * p as f64 / count);
    }
    Ok(acc / count)
}

/// Hilbert transform from `2N+1` samples of the signal itself; the DC term
/// is estimated from the same samples, so a nonzero `a(0)` is fine.
pub fn hilbert_from_f_samples(f: &[Complex64], t: f64) -> Result<Complex64> {
    let n = require_odd(f.len())?;
    let count = f.len() as f64;
    let a0 = f.iter().sum::<Complex64>() / count;
    let mut acc = Complex64::new(0.0, 0.0);
    for (p, &v) in f.iter().enumerate() {
        acc += (v - a0) * hilbert_channel_kernel(n, t - TAU * p as f64 / count);
    }
    Ok(-acc / count)
}

fn analytic_pair_kernels(n: usize, dt: f64) -> (f64, f64) {
    if dist_to_period(dt) < 1e-8 {
        // limits of the series sum_{k=0}^{n} e^{ik dt}
        ((n + 1) as f64, 0.0)
    } else {
        let s = (0.5 * (1 + n) as f64 * dt).sin() / (0.5 * dt).sin();
        ((0.5 * n as f64 * dt).cos() * s, (0.5 * n as f64 * dt).sin() * s)
    }
}

/// Real-valued signal from `N+1` samples of `(f, Hf)`; valid for real
/// signals bandlimited to `{-N..N}`.
pub fn f_from_real_pair(f: &[f64], hf: &[f64], t: f64) -> Result<f64> {
    let (n, count) = real_pair_shape(f, hf)?;
    let mut acc = 0.0;
    for p in 0..=n {
        let (yr, yi) = analytic_pair_kernels(n, t - TAU * p as f64 / count);
        acc += f[p] * yr - hf[p] * yi;
    }
    Ok(acc / count)
}

/// Hilbert transform of a real-valued signal from `N+1` samples of `(f, Hf)`.
pub fn hilbert_from_real_pair(f: &[f64], hf: &[f64], t: f64) -> Result<f64> {
    let (n, count) = real_pair_shape(f, hf)?;
    let mut acc = 0.0;
    for p in 0..=n {
        let (yr, yi) = analytic_pair_kernels(n, t - TAU * p as f64 / count);
        acc += f[p] * yi + hf[p] * yr;
    }
    Ok(acc / count)
}

fn real_pair_shape(f: &[f64], hf: &[f64]) -> Result<(usize, f64)> {
    if f.len() != hf.len() {
        return Err(Error::SizeMismatch {
            expected: f.len(),
            got: hf.len(),
        });
    }
    if f.is_empty() {
        return Err(Error::TooShort { need: 1, got: 0 });
    }
    Ok((f.len() - 1, f.len() as f64))
}

fn complex_pair_shape(f: &[Complex64], hf: &[Complex64]) -> Result<(u32, f64)> {
    if f.len() != hf.len() {
        return Err(Error::SizeMismatch {
            expected: f.len(),
            got: hf.len(),
        });
    }
    if f.is_empty() {
        return Err(Error::TooShort { need: 1, got: 0 });
    }
    Ok(((f.len() - 1) as u32, f.len() as f64))
}

fn pair_kernels(n: u32, dt: f64) -> (Complex64, Complex64) {
    if dist_to_period(dt) < 1e-8 {
        // series limits at grid-aligned shifts: y1 -> n+1, y2 -> 1 - i
        (
            Complex64::new((n + 1) as f64, 0.0),
            Complex64::new(1.0, -1.0),
        )
    } else {
        let y1 = closed_form_y(ClosedFormKernel::HilbertPairY1 { n }, dt)
            .expect("guarded above");
        let y2 = closed_form_y(ClosedFormKernel::HilbertPairY2 { n }, dt)
            .expect("guarded above");
        (y1, y2)
    }
}

/// Complex-valued signal from `N+1` samples of `(f, Hf)`; valid for signals
/// bandlimited to `{-N..N}`.
pub fn f_from_complex_pair(f: &[Complex64], hf: &[Complex64], t: f64) -> Result<Complex64> {
    let (n, count) = complex_pair_shape(f, hf)?;
    let mut acc = Complex64::new(0.0, 0.0);
    for p in 0..f.len() {
        let (y1, y2) = pair_kernels(n, t - TAU * p as f64 / count);
        acc += f[p] * y1 + hf[p] * y2;
    }
    Ok(acc / count)
}

/// Hilbert transform of a complex-valued signal from `N+1` samples of
/// `(f, Hf)`; the DC term is estimated from the same samples.
pub fn hilbert_from_complex_pair(f: &[Complex64], hf: &[Complex64], t: f64) -> Result<Complex64> {
    let (n, count) = complex_pair_shape(f, hf)?;
    let i = Complex64::new(0.0, 1.0);
    let a0 = f
        .iter()
        .zip(hf)
        .map(|(&fv, &hv)| fv + i * hv)
        .sum::<Complex64>()
        / count;
    let mut acc = Complex64::new(0.0, 0.0);
    for p in 0..f.len() {
        let (y1, y2) = pair_kernels(n, t - TAU * p as f64 / count);
        acc += hf[p] * y1 + (a0 - f[p]) * y2;
    }
    Ok(acc / count)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::channels::{build_kernel, ChannelSpec};
    use crate::engine;
    use crate::spectrum::{self, BandSpec};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn generic_points(count: usize, seed: u64) -> Vec<f64> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        (0..count)
            .map(|_| 1e-3 + rng.gen::<f64>() * (TAU - 2e-3))
            .collect()
    }

    fn random_real_band_spec(rng: &mut impl Rng, n: i64, a0: f64) -> Spectrum {
        let mut pairs = vec![(0i64, Complex64::new(a0, 0.0))];
        for f in 1..=n {
            let v = Complex64::new(rng.gen::<f64>() - 0.5, rng.gen::<f64>() - 0.5);
            pairs.push((f, v));
            pairs.push((-f, v.conj()));
        }
        Spectrum::from_pairs(&pairs)
    }

    #[test]
    fn phi_is_real_with_zero_mean() {
        let (f0, _) = phi_eval(0.0);
        assert!(f0.is_finite());
        let grid = 4096;
        let mean: f64 = (0..grid)
            .map(|j| phi_eval(TAU * j as f64 / grid as f64).0)
            .sum::<f64>()
            / grid as f64;
        assert!(mean.abs() < 1e-12, "mean {mean}");
    }

    #[test]
    fn phi_spectrum_matches_high_resolution_transform() {
        // spectral route on an 8192 grid vs partial-fraction coefficients
        let grid = 8192usize;
        let values: Vec<Complex64> = (0..grid)
            .map(|j| Complex64::new(phi_eval(TAU * j as f64 / grid as f64).0, 0.0))
            .collect();
        let band = BandSpec::new(-(grid as i64) / 2, grid as i64 / 2 - 1, 1).unwrap();
        let fine = spectrum::analyze(&spectrum::GridSignal::new(values), &band).unwrap();
        let spec = phi_spectrum(1e-14);
        for n in -300..=300 {
            assert!(
                (spec.coeff(n) - fine.coeff(n)).norm() < 1e-12,
                "coefficient mismatch at n = {n}"
            );
        }
    }

    #[test]
    fn phi_hilbert_self_consistent() {
        // Hilbert of the real part via the spectral multiplier on a dense
        // grid equals the imaginary part
        let grid = 8192usize;
        let values: Vec<Complex64> = (0..grid)
            .map(|j| Complex64::new(phi_eval(TAU * j as f64 / grid as f64).0, 0.0))
            .collect();
        let band = BandSpec::new(-(grid as i64) / 2, grid as i64 / 2 - 1, 1).unwrap();
        let spec = spectrum::analyze(&spectrum::GridSignal::new(values), &band).unwrap();
        let h = spectrum::synthesize(&spec.hilbert(), grid).unwrap();
        for j in (0..grid).step_by(97) {
            let t = TAU * j as f64 / grid as f64;
            let (_, hf) = phi_eval(t);
            assert!(
                (h.values()[j].re - hf).abs() < 1e-8,
                "Hilbert mismatch at t = {t}"
            );
        }
    }

    #[test]
    fn phi_derivatives_match_finite_differences() {
        let h = 1e-5;
        for &t in &[0.3, 1.9, 4.0] {
            let fd1 = (phi_eval(t + h).0 - phi_eval(t - h).0) / (2.0 * h);
            assert!((phi_prime(t) - fd1).abs() < 1e-7);
            let fd2 = (phi_eval(t + h).0 - 2.0 * phi_eval(t).0 + phi_eval(t - h).0) / (h * h);
            assert!((phi_second(t) - fd2).abs() < 1e-4);
        }
    }

    #[test]
    fn dirichlet_interpolation_properties() {
        let n = 5usize;
        let count = 2 * n + 1;
        // constant data stays constant
        let c = Complex64::new(2.0, -0.5);
        let v = vec![c; count];
        assert!((dirichlet_interpolate(&v, 1.234).unwrap() - c).norm() < 1e-12);
        // interpolation property at the sample points
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let data: Vec<Complex64> = (0..count)
            .map(|_| Complex64::new(rng.gen(), rng.gen()))
            .collect();
        for p in 0..count {
            let t = TAU * p as f64 / count as f64;
            assert!((dirichlet_interpolate(&data, t).unwrap() - data[p]).norm() < 1e-11);
        }
        assert!(dirichlet_interpolate(&data[..4], 0.5).is_err());
    }

    #[test]
    fn dirichlet_matches_engine_identity_bank() {
        let n = 6i64;
        let band = BandSpec::new(-n, n, 1).unwrap();
        let bank = vec![ChannelSpec::Identity];
        let kernel = build_kernel(&band, &bank, &[]).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let raw: Vec<Complex64> = (0..band.width())
            .map(|_| Complex64::new(rng.gen(), rng.gen()))
            .collect();
        let s = engine::ingest(vec![raw.clone()], &band).unwrap();
        for &t in &generic_points(200, 3) {
            let fast = engine::evaluate_at(&s, &kernel, t).unwrap();
            let slow = dirichlet_interpolate(&raw, t).unwrap();
            assert!((fast - slow).norm() < 1e-9, "mismatch at t = {t}");
        }
    }

    #[test]
    fn closed_forms_match_their_series() {
        for &t in &generic_points(100, 4) {
            // Dirichlet
            let n = 7u32;
            let series: Complex64 = (-(n as i64)..=n as i64)
                .map(|k| Complex64::from_polar(1.0, k as f64 * t))
                .sum();
            let cf = closed_form_y(ClosedFormKernel::Dirichlet { n }, t).unwrap();
            assert!((cf - series).norm() < 1e-9);

            // single Hilbert channel: sum of i*sgn(k) e^{ikt}
            let series: Complex64 = (-(n as i64)..=n as i64)
                .filter(|&k| k != 0)
                .map(|k| {
                    Complex64::new(0.0, k.signum() as f64) * Complex64::from_polar(1.0, k as f64 * t)
                })
                .sum();
            let cf = closed_form_y(ClosedFormKernel::HilbertChannel { n }, t).unwrap();
            assert!((cf - series).norm() < 1e-9);

            // analytic projection: sum_{k=0}^{n} e^{ikt}
            let series: Complex64 = (0..=n as i64)
                .map(|k| Complex64::from_polar(1.0, k as f64 * t))
                .sum();
            let yr = closed_form_y(ClosedFormKernel::AnalyticReal { n }, t).unwrap();
            let yi = closed_form_y(ClosedFormKernel::AnalyticImag { n }, t).unwrap();
            assert!((yr.re - series.re).abs() < 1e-9);
            assert!((yi.re - series.im).abs() < 1e-9);

            // identity/Hilbert pair kernels against their coefficient series
            let nn = 6u32;
            let mut y1_series = Complex64::new(1.0, 0.0); // r_1(0) = 1
            let mut y2_series = Complex64::new(0.0, -1.0); // r_2(0) = -i
            for k in 1..=nn as i64 {
                let half = Complex64::new(0.5, 0.0);
                let ih = Complex64::new(0.0, 0.5);
                y1_series += half * Complex64::from_polar(1.0, k as f64 * t);
                y1_series += half * Complex64::from_polar(1.0, -(k as f64) * t);
                y2_series += ih * Complex64::from_polar(1.0, k as f64 * t);
                y2_series -= ih * Complex64::from_polar(1.0, -(k as f64) * t);
            }
            // printed pair kernel carries coefficient 1 at the top frequency
            y2_series += Complex64::from_polar(1.0, (nn + 1) as f64 * t);
            let y1 = closed_form_y(ClosedFormKernel::HilbertPairY1 { n: nn }, t).unwrap();
            let y2 = closed_form_y(ClosedFormKernel::HilbertPairY2 { n: nn }, t).unwrap();
            assert!((y1 - y1_series).norm() < 1e-9, "pair y1 at t = {t}");
            assert!((y2 - y2_series).norm() < 1e-9, "pair y2 at t = {t}");
        }
    }

    #[test]
    fn derivative_bank_closed_forms_match_kernel() {
        let n0 = 5u32;
        let n = 3 * n0 as i64 + 1;
        let band = BandSpec::new(-n, n, 3).unwrap();
        let bank = vec![
            ChannelSpec::Identity,
            ChannelSpec::Derivative { order: 1 },
            ChannelSpec::Derivative { order: 2 },
        ];
        let kernel = build_kernel(&band, &bank, &[]).unwrap();
        for &t in &generic_points(1000, 5) {
            for (m, which) in [
                ClosedFormKernel::DerivativeBankY1 { n0 },
                ClosedFormKernel::DerivativeBankY2 { n0 },
                ClosedFormKernel::DerivativeBankY3 { n0 },
            ]
            .into_iter()
            .enumerate()
            {
                let cf = closed_form_y(which, t).unwrap();
                let fast = kernel.eval_y(m, t);
                let scale = cf.norm().max(1.0);
                assert!(
                    (cf - fast).norm() / scale < 1e-8,
                    "kernel {m} mismatch at t = {t}: {fast} vs {cf}"
                );
            }
        }
    }

    #[test]
    fn singularity_guard_refuses_grid_points() {
        assert!(matches!(
            closed_form_y(ClosedFormKernel::Dirichlet { n: 3 }, 1e-9),
            Err(Error::NearSingularity { .. })
        ));
        assert!(closed_form_y(ClosedFormKernel::Dirichlet { n: 3 }, 1e-3).is_ok());
    }

    #[test]
    fn hilbert_sampling_on_sine() {
        // f = sin t on a 5-point grid: Hf = -cos t
        let n = 2usize;
        let count = 2 * n + 1;
        let f: Vec<Complex64> = (0..count)
            .map(|p| Complex64::new((TAU * p as f64 / count as f64).sin(), 0.0))
            .collect();
        for &t in &[0.3, 1.9, 4.4] {
            let h = hilbert_from_f_samples(&f, t).unwrap();
            assert!((h.re + t.cos()).abs() < 1e-9, "H{{sin}} at t = {t}: {h}");
            assert!(h.im.abs() < 1e-12);
        }
    }

    #[test]
    fn hilbert_sampling_round_trips() {
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        let n = 5i64;
        let spec = random_real_band_spec(&mut rng, n, 0.0);
        let hspec = spec.hilbert();
        let count = (2 * n + 1) as usize;
        let grid = spectrum::uniform_grid(count);
        let f: Vec<Complex64> = grid.iter().map(|&t| spec.eval_at(t)).collect();
        let hf: Vec<Complex64> = grid.iter().map(|&t| hspec.eval_at(t)).collect();
        for &t in &generic_points(100, 7) {
            let fr = f_from_hilbert_samples(&hf, t).unwrap();
            assert!((fr - spec.eval_at(t)).norm() < 1e-9);
            let hr = hilbert_from_f_samples(&f, t).unwrap();
            assert!((hr - hspec.eval_at(t)).norm() < 1e-9);
        }
    }

    #[test]
    fn hilbert_chain_reproduces_involution() {
        // two passes through the sampling formula equal -f + a(0) for
        // data with zero mean
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        let n = 4i64;
        let spec = random_real_band_spec(&mut rng, n, 0.0);
        let count = (2 * n + 1) as usize;
        let grid = spectrum::uniform_grid(count);
        let f: Vec<Complex64> = grid.iter().map(|&t| spec.eval_at(t)).collect();
        let h1: Vec<Complex64> = grid
            .iter()
            .map(|&t| hilbert_from_f_samples(&f, t).unwrap())
            .collect();
        for &t in &generic_points(50, 9) {
            let h2 = hilbert_from_f_samples(&h1, t).unwrap();
            assert!(
                (h2 + spec.eval_at(t)).norm() < 1e-8,
                "double transform at t = {t}"
            );
        }
    }

    #[test]
    fn real_pair_formulas_round_trip() {
        let mut rng = ChaCha8Rng::seed_from_u64(10);
        let n = 6i64;
        let a0: f64 = rng.gen();
        let spec = random_real_band_spec(&mut rng, n, a0);
        let hspec = spec.hilbert();
        let count = (n + 1) as usize;
        let grid = spectrum::uniform_grid(count);
        let f: Vec<f64> = grid.iter().map(|&t| spec.eval_at(t).re).collect();
        let hf: Vec<f64> = grid.iter().map(|&t| hspec.eval_at(t).re).collect();
        for &t in &generic_points(100, 11) {
            let fr = f_from_real_pair(&f, &hf, t).unwrap();
            assert!((fr - spec.eval_at(t).re).abs() < 1e-9);
            let hr = hilbert_from_real_pair(&f, &hf, t).unwrap();
            assert!((hr - hspec.eval_at(t).re).abs() < 1e-9);
        }
    }

    #[test]
    fn complex_pair_formulas_round_trip() {
        // complex-valued bandlimited signal, nonzero DC
        let mut rng = ChaCha8Rng::seed_from_u64(12);
        let n = 6i64;
        let pairs: Vec<(i64, Complex64)> = (-n..=n)
            .map(|k| (k, Complex64::new(rng.gen::<f64>() - 0.5, rng.gen::<f64>() - 0.5)))
            .collect();
        let spec = Spectrum::from_pairs(&pairs);
        let hspec = spec.hilbert();
        let count = (n + 1) as usize;
        let grid = spectrum::uniform_grid(count);
        let f: Vec<Complex64> = grid.iter().map(|&t| spec.eval_at(t)).collect();
        let hf: Vec<Complex64> = grid.iter().map(|&t| hspec.eval_at(t)).collect();
        for &t in &generic_points(100, 13) {
            let fr = f_from_complex_pair(&f, &hf, t).unwrap();
            assert!((fr - spec.eval_at(t)).norm() < 1e-9, "f at t = {t}");
            let hr = hilbert_from_complex_pair(&f, &hf, t).unwrap();
            assert!((hr - hspec.eval_at(t)).norm() < 1e-9, "Hf at t = {t}");
        }
    }

    #[test]
    fn complex_pair_matches_engine_bank() {
        // the pair formulas and the engine's (identity, Hilbert) bank agree
        let mut rng = ChaCha8Rng::seed_from_u64(14);
        let n = 6i64;
        let band = BandSpec::new(-n, n + 1, 2).unwrap();
        let bank = vec![ChannelSpec::Identity, ChannelSpec::Hilbert];
        let kernel = build_kernel(&band, &bank, &[]).unwrap();
        let pairs: Vec<(i64, Complex64)> = (-n..=n)
            .map(|k| (k, Complex64::new(rng.gen::<f64>() - 0.5, rng.gen::<f64>() - 0.5)))
            .collect();
        let spec = Spectrum::from_pairs(&pairs);
        let s = engine::sample_channels(&spec, &bank, &band);
        let f = s.row(0).to_vec();
        let hf = s.row(1).to_vec();
        for &t in &generic_points(100, 15) {
            let engine_v = engine::evaluate_at(&s, &kernel, t).unwrap();
            let formula_v = f_from_complex_pair(&f, &hf, t).unwrap();
            assert!(
                (engine_v - formula_v).norm() < 1e-9,
                "engine vs formula at t = {t}"
            );
        }
    }
}
