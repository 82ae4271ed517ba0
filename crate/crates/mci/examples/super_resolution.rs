//! Single-image super-resolution with the (f, f', f'') channel bank:
//! degrade a synthetic scene (5x5 Gaussian blur, factor-3 downsample),
//! upscale it back, and score against nearest-neighbor and bilinear.
//!
//! Writes the images as PGM files under a temporary directory.
//!
//! ```bash
//! cargo run --release -p mci --example super_resolution
//! ```

use mci::pnm;
use mci::sisr::{self, DegradeConfig, Extension, ImagePlane};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::f64::consts::TAU;

fn synthetic_scene(size: usize) -> ImagePlane {
    let mut pixels = Vec::with_capacity(size * size);
    for y in 0..size {
        for x in 0..size {
            let (xf, yf) = (x as f64, y as f64);
            let mut v = 115.0
                + 50.0 * (TAU * xf / 41.0).sin() * (TAU * yf / 59.0).cos()
                + 22.0 * (TAU * (2.0 * xf + yf) / 31.0).cos()
                + 45.0 * (-((xf - 70.0).powi(2) + (yf - 40.0).powi(2)) / 450.0).exp();
            let r = ((xf - 34.0).powi(2) + (yf - 68.0).powi(2)).sqrt();
            v += 30.0 / (1.0 + ((r - 18.0) / 2.0).exp());
            pixels.push(v.clamp(0.0, 255.0));
        }
    }
    ImagePlane::new(size, size, pixels).unwrap()
}

fn nearest(img: &ImagePlane, factor: usize) -> ImagePlane {
    let (w, h) = (img.width() * factor, img.height() * factor);
    let mut pixels = Vec::with_capacity(w * h);
    for y in 0..h {
        for x in 0..w {
            let sx = ((x as f64 / factor as f64).round() as usize).min(img.width() - 1);
            let sy = ((y as f64 / factor as f64).round() as usize).min(img.height() - 1);
            pixels.push(img.get(sx, sy));
        }
    }
    ImagePlane::new(w, h, pixels).unwrap()
}

fn bilinear(img: &ImagePlane, factor: usize) -> ImagePlane {
    let (w, h) = (img.width() * factor, img.height() * factor);
    let mut pixels = Vec::with_capacity(w * h);
    for y in 0..h {
        let fy = y as f64 / factor as f64;
        let (y0, wy) = ((fy.floor() as usize).min(img.height() - 1), fy.fract());
        let y1 = (y0 + 1).min(img.height() - 1);
        for x in 0..w {
            let fx = x as f64 / factor as f64;
            let (x0, wx) = ((fx.floor() as usize).min(img.width() - 1), fx.fract());
            let x1 = (x0 + 1).min(img.width() - 1);
            let top = img.get(x0, y0) * (1.0 - wx) + img.get(x1, y0) * wx;
            let bot = img.get(x0, y1) * (1.0 - wx) + img.get(x1, y1) * wx;
            pixels.push(top * (1.0 - wy) + bot * wy);
        }
    }
    ImagePlane::new(w, h, pixels).unwrap()
}

fn main() {
    let truth = synthetic_scene(120);
    let factor = 3usize;
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    let lr = sisr::degrade(&truth, &DegradeConfig::default(), &mut rng).unwrap();
    println!(
        "degraded {}x{} -> {}x{} (5x5 Gaussian, sigma 1.0, factor 3)",
        truth.width(),
        truth.height(),
        lr.width(),
        lr.height()
    );

    let up = sisr::upscale(&lr, factor, Extension::Periodic).unwrap();
    let up_mirror = sisr::upscale(&lr, factor, Extension::Mirror).unwrap();
    let up_nn = nearest(&lr, factor);
    let up_bl = bilinear(&lr, factor);

    println!("\n{:<22} {:>9} {:>9}", "method", "PSNR dB", "CC");
    for (label, img) in [
        ("multichannel", &up),
        ("multichannel (mirror)", &up_mirror),
        ("bilinear", &up_bl),
        ("nearest neighbor", &up_nn),
    ] {
        println!(
            "{label:<22} {:>9.2} {:>9.4}",
            sisr::psnr(&truth, img, factor).unwrap(),
            sisr::cc(&truth, img, factor).unwrap()
        );
    }

    let dir = std::env::temp_dir().join("mci_super_resolution");
    std::fs::create_dir_all(&dir).unwrap();
    for (name, img) in [
        ("truth.pgm", &truth),
        ("low_res.pgm", &lr),
        ("upscaled.pgm", &up),
    ] {
        pnm::write(&dir.join(name), img).unwrap();
    }
    println!("\nimages written to {}", dir.display());
}
