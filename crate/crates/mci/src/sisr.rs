//! Separable image super-resolution on the 3-channel `(f, f', f'')`
//! configuration, plus the degradation harness and scoring metrics.
//!
//! Every row of the image is treated as one period of a signal sampled at
//! `t_p = 2*pi*p/W`; its first two derivatives are estimated by three-point
//! centered differences and the three lines feed the derivative-bank
//! reconstruction, evaluated on a `factor` times denser grid. Rows first,
//! then columns of the intermediate. Intermediate values stay unclamped in
//! floating point; clamping to [0, 255] happens once at the end.

use crate::channels::{build_kernel, ChannelSpec, Kernel};
use crate::engine;
use crate::spectrum::{self, BandSpec};
use crate::{Complex64, Error, Result};
use rand::Rng;
use rand_distr::{Distribution, Normal};
use std::f64::consts::TAU;

/// A single luminance plane with row-major pixels in [0, 255].
#[derive(Debug, Clone, PartialEq)]
pub struct ImagePlane {
    width: usize,
    height: usize,
    pixels: Vec<f64>,
}

impl ImagePlane {
    pub fn new(width: usize, height: usize, pixels: Vec<f64>) -> Result<Self> {
        if pixels.len() != width * height {
            return Err(Error::SizeMismatch {
                expected: width * height,
                got: pixels.len(),
            });
        }
        if pixels.iter().any(|p| !p.is_finite()) {
            return Err(Error::Pnm("non-finite pixel value".into()));
        }
        Ok(Self {
            width,
            height,
            pixels,
        })
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn pixels(&self) -> &[f64] {
        &self.pixels
    }

    pub fn get(&self, x: usize, y: usize) -> f64 {
        self.pixels[y * self.width + x]
    }

    pub fn row(&self, y: usize) -> &[f64] {
        &self.pixels[y * self.width..(y + 1) * self.width]
    }
}

/// Parameters of the blur/noise/downsample degradation.
#[derive(Debug, Clone, Copy)]
pub struct DegradeConfig {
    /// Odd Gaussian window size.
    pub kernel_size: usize,
    /// Gaussian standard deviation (pixels).
    pub sigma: f64,
    /// Downsampling stride.
    pub factor: usize,
    /// Standard deviation of additive Gaussian noise (0 = none).
    pub noise_sigma: f64,
}

impl Default for DegradeConfig {
    /// The standard protocol: 5x5 Gaussian at sigma 1.0, factor 3, no noise.
    fn default() -> Self {
        Self {
            kernel_size: 5,
            sigma: 1.0,
            factor: 3,
            noise_sigma: 0.0,
        }
    }
}

fn gaussian_window(size: usize, sigma: f64) -> Vec<f64> {
    let r = (size / 2) as i64;
    let mut k: Vec<f64> = (-r..=r)
        .map(|x| (-((x * x) as f64) / (2.0 * sigma * sigma)).exp())
        .collect();
    let sum: f64 = k.iter().sum();
    for v in &mut k {
        *v /= sum;
    }
    k
}

/// Separable Gaussian blur with replicate-edge padding; equals the full 2-D
/// clamp-padded convolution because the coordinates clamp independently.
fn blur(img: &ImagePlane, size: usize, sigma: f64) -> ImagePlane {
    let k = gaussian_window(size, sigma);
    let r = (size / 2) as i64;
    let (w, h) = (img.width as i64, img.height as i64);
    let mut tmp = vec![0.0; img.pixels.len()];
    for y in 0..h {
        for x in 0..w {
            let mut acc = 0.0;
            for (i, &kv) in k.iter().enumerate() {
                let xx = (x - (i as i64 - r)).clamp(0, w - 1);
                acc += kv * img.get(xx as usize, y as usize);
            }
            tmp[(y * w + x) as usize] = acc;
        }
    }
    let mut out = vec![0.0; img.pixels.len()];
    for y in 0..h {
        for x in 0..w {
            let mut acc = 0.0;
            for (i, &kv) in k.iter().enumerate() {
                let yy = (y - (i as i64 - r)).clamp(0, h - 1);
                acc += kv * tmp[(yy * w + x) as usize];
            }
            out[(y * w + x) as usize] = acc;
        }
    }
    ImagePlane {
        width: img.width,
        height: img.height,
        pixels: out,
    }
}

/// Blur, optionally add Gaussian noise, keep every `factor`-th pixel in both
/// directions, and clamp to [0, 255]. Dimensions must divide by the factor.
pub fn degrade(img: &ImagePlane, cfg: &DegradeConfig, rng: &mut impl Rng) -> Result<ImagePlane> {
    if cfg.kernel_size % 2 == 0 || cfg.kernel_size == 0 {
        return Err(Error::InvalidConfig(format!(
            "blur window size {} must be odd",
            cfg.kernel_size
        )));
    }
    if cfg.factor == 0 {
        return Err(Error::InvalidConfig("factor must be positive".into()));
    }
    if img.width % cfg.factor != 0 || img.height % cfg.factor != 0 {
        return Err(Error::DimensionNotDivisible {
            width: img.width,
            height: img.height,
            factor: cfg.factor,
        });
    }
    let blurred = blur(img, cfg.kernel_size, cfg.sigma);
    let (w, h) = (img.width / cfg.factor, img.height / cfg.factor);
    let noise = if cfg.noise_sigma > 0.0 {
        Some(Normal::new(0.0, cfg.noise_sigma).expect("valid sigma"))
    } else {
        None
    };
    let mut pixels = Vec::with_capacity(w * h);
    for y in 0..h {
        for x in 0..w {
            let mut v = blurred.get(x * cfg.factor, y * cfg.factor);
            if let Some(n) = &noise {
                v += n.sample(rng);
            }
            pixels.push(v.clamp(0.0, 255.0));
        }
    }
    ImagePlane::new(w, h, pixels)
}

/// Periodic three-point centered differences scaled to the `t`-domain:
/// the row holds samples at `t_p = 2*pi*p/W`, so pixel-index derivatives
/// pick up `W/(2*pi)` per order to match what the derivative channels
/// expect.
pub fn row_derivatives(row: &[f64]) -> Result<(Vec<f64>, Vec<f64>)> {
    let w = row.len();
    if w < 3 {
        return Err(Error::TooShort { need: 3, got: w });
    }
    let scale = w as f64 / TAU;
    let mut d1 = Vec::with_capacity(w);
    let mut d2 = Vec::with_capacity(w);
    for p in 0..w {
        let prev = row[(p + w - 1) % w];
        let next = row[(p + 1) % w];
        d1.push(scale * (next - prev) / 2.0);
        d2.push(scale * scale * (next - 2.0 * row[p] + prev));
    }
    Ok((d1, d2))
}

/// How a line is continued past its ends before interpolation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Extension {
    /// Wrap around, the model's native continuation.
    Periodic,
    /// Reflect the line to twice its length first; reduces boundary ringing
    /// on non-periodic content.
    Mirror,
}

fn derivative_bank() -> Vec<ChannelSpec> {
    vec![
        ChannelSpec::Identity,
        ChannelSpec::Derivative { order: 1 },
        ChannelSpec::Derivative { order: 2 },
    ]
}

/// The kernel serving every line of a given length.
fn line_kernel(len: usize) -> Result<Kernel> {
    let band = BandSpec::centered(3 * len, 3)?;
    build_kernel(&band, &derivative_bank(), &[])
}

/// Interpolate one line to `factor` times its length through the
/// 3-channel bank. Output index `p*factor` reproduces input index `p`.
fn upscale_line(line: &[f64], factor: usize, kernel: &Kernel) -> Result<Vec<f64>> {
    let w = line.len();
    let (d1, d2) = row_derivatives(line)?;
    let to_complex = |v: &[f64]| v.iter().map(|&x| Complex64::new(x, 0.0)).collect();
    let samples = engine::ingest(
        vec![to_complex(line), to_complex(&d1), to_complex(&d2)],
        kernel.band(),
    )?;
    let spec = engine::reconstruct_spectrum(&samples, kernel)?;
    // the output grid factor*W may undersample the 3W-wide window; render on
    // a stride-multiple grid that holds it and keep every stride-th point
    let stride = 3usize.div_ceil(factor);
    let dense = spectrum::synthesize(&spec, stride * factor * w)?;
    Ok(dense
        .values()
        .iter()
        .step_by(stride)
        .map(|v| v.re)
        .collect())
}

fn upscale_lines(
    lines: impl Iterator<Item = Vec<f64>>,
    factor: usize,
    extend: Extension,
    kernel: &Kernel,
) -> Result<Vec<Vec<f64>>> {
    lines
        .map(|line| match extend {
            Extension::Periodic => upscale_line(&line, factor, kernel),
            Extension::Mirror => {
                let mut mirrored = line.clone();
                mirrored.extend(line.iter().rev());
                let full = upscale_line(&mirrored, factor, kernel)?;
                Ok(full[..line.len() * factor].to_vec())
            }
        })
        .collect()
}

fn extended_len(len: usize, extend: Extension) -> usize {
    match extend {
        Extension::Periodic => len,
        Extension::Mirror => 2 * len,
    }
}

fn upscale_inner(
    img: &ImagePlane,
    factor: usize,
    extend: Extension,
    clamp: bool,
) -> Result<ImagePlane> {
    if img.width < 3 || img.height < 3 {
        return Err(Error::TooShort {
            need: 3,
            got: img.width.min(img.height),
        });
    }
    // one kernel per distinct line length, shared across all lines of it
    let row_len = extended_len(img.width, extend);
    let row_kernel = line_kernel(row_len)?;
    let rows = upscale_lines(
        (0..img.height).map(|y| img.row(y).to_vec()),
        factor,
        extend,
        &row_kernel,
    )?;

    let out_w = img.width * factor;
    let col_len = extended_len(img.height, extend);
    let col_kernel = if col_len == row_len {
        row_kernel
    } else {
        line_kernel(col_len)?
    };
    let cols = upscale_lines(
        (0..out_w).map(|x| rows.iter().map(|r| r[x]).collect()),
        factor,
        extend,
        &col_kernel,
    )?;

    let out_h = img.height * factor;
    let mut pixels = vec![0.0; out_w * out_h];
    for (x, col) in cols.iter().enumerate() {
        for (y, &v) in col.iter().enumerate() {
            pixels[y * out_w + x] = if clamp { v.clamp(0.0, 255.0) } else { v };
        }
    }
    ImagePlane::new(out_w, out_h, pixels)
}

/// Separable row-then-column interpolation by the given factor. Factor 1
/// returns a copy; the result is clamped to [0, 255] at the end only.
pub fn upscale(img: &ImagePlane, factor: usize, extend: Extension) -> Result<ImagePlane> {
    if factor == 0 {
        return Err(Error::InvalidConfig("factor must be positive".into()));
    }
    if factor == 1 {
        return Ok(img.clone());
    }
    upscale_inner(img, factor, extend, true)
}

/// Upscale without the final clamp; for consistency checks on raw values.
pub fn upscale_unclamped(img: &ImagePlane, factor: usize, extend: Extension) -> Result<ImagePlane> {
    if factor <= 1 {
        return upscale(img, factor, extend);
    }
    upscale_inner(img, factor, extend, false)
}

fn cropped_pair<'a>(
    a: &'a ImagePlane,
    b: &'a ImagePlane,
    crop: usize,
) -> Result<impl Iterator<Item = (f64, f64)> + 'a> {
    if a.width != b.width || a.height != b.height {
        return Err(Error::SizeMismatch {
            expected: a.width * a.height,
            got: b.width * b.height,
        });
    }
    if a.width <= 2 * crop || a.height <= 2 * crop {
        return Err(Error::TooShort {
            need: 2 * crop + 1,
            got: a.width.min(a.height),
        });
    }
    Ok((crop..a.height - crop).flat_map(move |y| {
        (crop..a.width - crop).map(move |x| (a.get(x, y), b.get(x, y)))
    }))
}

/// Peak signal-to-noise ratio in dB over the images with a `crop`-pixel
/// border excluded on all sides (fix the crop at the upscale factor).
/// Identical images return positive infinity.
pub fn psnr(a: &ImagePlane, b: &ImagePlane, crop: usize) -> Result<f64> {
    let mut sum = 0.0;
    let mut count = 0usize;
    for (x, y) in cropped_pair(a, b, crop)? {
        sum += (x - y) * (x - y);
        count += 1;
    }
    let mse = sum / count as f64;
    if mse == 0.0 {
        Ok(f64::INFINITY)
    } else {
        Ok(10.0 * (255.0 * 255.0 / mse).log10())
    }
}

/// Pearson correlation coefficient over the same cropped region as [`psnr`].
pub fn cc(a: &ImagePlane, b: &ImagePlane, crop: usize) -> Result<f64> {
    let pairs: Vec<(f64, f64)> = cropped_pair(a, b, crop)?.collect();
    let n = pairs.len() as f64;
    let mean_a = pairs.iter().map(|p| p.0).sum::<f64>() / n;
    let mean_b = pairs.iter().map(|p| p.1).sum::<f64>() / n;
    let mut cov = 0.0;
    let mut var_a = 0.0;
    let mut var_b = 0.0;
    for (x, y) in pairs {
        cov += (x - mean_a) * (y - mean_b);
        var_a += (x - mean_a) * (x - mean_a);
        var_b += (y - mean_b) * (y - mean_b);
    }
    if var_a == 0.0 || var_b == 0.0 {
        return Err(Error::ZeroVariance);
    }
    Ok(cov / (var_a * var_b).sqrt())
}
