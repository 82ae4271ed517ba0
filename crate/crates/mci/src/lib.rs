//! Multichannel interpolation (MCI) of periodic signals.
//!
//! A trigonometric polynomial with coefficients supported on a frequency
//! window `I = {N1..N2}` can be recovered exactly from `L = (N2-N1+1)/M`
//! uniform samples of each of `M` filtered versions of the signal, where
//! every filter acts as a Fourier multiplier `b_m(n)`. This crate builds the
//! per-frequency reconstruction tables, runs the sampling/reconstruction
//! pipeline through FFTs, computes circular Hilbert transforms, quantifies
//! the approximation error for signals that are not bandlimited, and applies
//! the 3-channel `(f, f', f'')` configuration to single-image
//! super-resolution.
//!
//! # Modules
//!
//! - [`spectrum`]: frequency windows, coefficient containers, uniform-grid
//!   analysis/synthesis transforms, frequency-domain multipliers.
//! - [`channels`]: channel multipliers, per-frequency matrix assembly and
//!   inversion, interpolation kernels.
//! - [`engine`]: channel sampling, demodulation, spectrum reconstruction,
//!   grid/pointwise evaluation, Hilbert output, DC estimation.
//! - [`analysis`]: consistency residual, exact shift-averaged error and its
//!   upper bound, empirical error oracle, relative RMSE.
//! - [`oracle`]: reference-grade brute-force and closed-form twins for the
//!   fast paths, plus the analytic test signal used by the examples.
//! - [`sisr`]: Gaussian degradation harness, separable row/column MCI
//!   upscaling, PSNR/CC metrics.
//! - [`pnm`]: binary PGM/PPM image I/O.
//! - [`table`]: the signal-approximation benchmark harness driven by the
//!   `mci table` subcommand.
//!
//! # Concurrency
//!
//! Every public type is immutable after construction and every operation is
//! a pure function, so values can be shared across threads freely; batch
//! work (many spectra, many image lines) parallelizes on the caller's side
//! with no synchronization. Results are deterministic regardless of thread
//! count.
//!
//! # Quick start
//!
//! ```
//! use mci::{channels, engine, spectrum};
//! use mci::spectrum::{BandSpec, Spectrum};
//! use mci::channels::ChannelSpec;
//! use mci::Complex64;
//!
//! // f(t) = e^{-it} + 2 e^{2it} on the window {-4..4}, M = 3 channels
//! let band = BandSpec::new(-4, 4, 3).unwrap();
//! let mut coeffs = vec![Complex64::new(0.0, 0.0); 9];
//! coeffs[3] = Complex64::new(1.0, 0.0); // n = -1
//! coeffs[6] = Complex64::new(2.0, 0.0); // n = +2
//! let spec = Spectrum::new(-4, coeffs);
//!
//! let bank = vec![
//!     ChannelSpec::Identity,
//!     ChannelSpec::Derivative { order: 1 },
//!     ChannelSpec::Derivative { order: 2 },
//! ];
//! let kernel = channels::build_kernel(&band, &bank, &[]).unwrap();
//! let samples = engine::sample_channels(&spec, &bank, &band);
//! let recovered = engine::reconstruct_spectrum(&samples, &kernel).unwrap();
//! for n in -4..=4 {
//!     assert!((recovered.coeff(n) - spec.coeff(n)).norm() < 1e-12);
//! }
//! ```

pub mod analysis;
pub mod channels;
pub mod engine;
mod error;
mod fft;
pub mod oracle;
pub mod pnm;
pub mod sisr;
pub mod spectrum;
pub mod table;

pub use error::{Error, Result};
pub use num_complex::Complex64;
