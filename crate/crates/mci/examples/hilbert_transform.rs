//! Compute circular Hilbert transforms from uniform samples.
//!
//! Shows the engine route (reconstruct, multiply by -i*sgn, synthesize), the
//! translate-sum reference formulas, DC estimation, and the involution
//! H(Hf) = -f + a(0).
//!
//! ```bash
//! cargo run -p mci --example hilbert_transform
//! ```

use mci::channels::{build_kernel, ChannelSpec};
use mci::engine::{self, A0Mode};
use mci::oracle;
use mci::spectrum::{uniform_grid, BandSpec, Spectrum};
use mci::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn fmt(v: Complex64) -> String {
    format!("{:.6}{:+.6}i", v.re, v.im)
}

fn main() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let n = 8i64;

    // random real signal bandlimited to {-n..n}, nonzero mean
    let mut pairs = vec![(0i64, Complex64::new(0.6, 0.0))];
    for f in 1..=n {
        let v = Complex64::new(rng.gen::<f64>() - 0.5, rng.gen::<f64>() - 0.5);
        pairs.push((f, v));
        pairs.push((-f, v.conj()));
    }
    let spec = Spectrum::from_pairs(&pairs);
    let hspec = spec.hilbert();

    let band = BandSpec::new(-n, n, 1).unwrap();
    let bank = vec![ChannelSpec::Identity];
    let kernel = build_kernel(&band, &bank, &[]).unwrap();
    let samples = engine::sample_channels(&spec, &bank, &band);

    // engine route: multiplier on the reconstructed coefficients
    let grid = 64usize;
    let h = engine::hilbert_evaluate(&samples, &kernel, grid).unwrap();
    let err = uniform_grid(grid)
        .iter()
        .zip(h.values())
        .map(|(&t, v)| (v - hspec.eval_at(t)).norm())
        .fold(0.0f64, f64::max);
    println!("engine Hilbert output on a {grid}-point grid: max deviation {err:.2e}");

    // translate-sum reference at arbitrary points
    let f_row = samples.row(0).to_vec();
    let t = 1.2345;
    let via_formula = oracle::hilbert_from_f_samples(&f_row, t).unwrap();
    println!(
        "translate-sum Hilbert at t = {t}: {} (true {})",
        fmt(via_formula),
        fmt(hspec.eval_at(t))
    );

    // DC estimation from samples
    let a0 = engine::estimate_a0(&samples, &bank, A0Mode::FromF).unwrap();
    println!(
        "a(0) from the signal's own samples: {} (true {})",
        fmt(a0),
        fmt(spec.coeff(0))
    );

    // involution: applying the transform twice negates and restores the mean
    let l = band.width();
    let h1 = engine::hilbert_evaluate(&samples, &kernel, l).unwrap();
    let s2 = engine::ingest(vec![h1.into_values()], &band).unwrap();
    let h2 = engine::hilbert_evaluate(&s2, &kernel, l).unwrap();
    let inv_err = uniform_grid(l)
        .iter()
        .zip(h2.values())
        .map(|(&t, v)| (v - (-spec.eval_at(t) + spec.coeff(0))).norm())
        .fold(0.0f64, f64::max);
    println!("double transform vs -f + a(0): max deviation {inv_err:.2e}");

    // complex-valued pair route: f and Hf sampled together on half the grid
    let pair = vec![ChannelSpec::Identity, ChannelSpec::Hilbert];
    let pband = BandSpec::new(-n, n + 1, 2).unwrap();
    let pkernel = build_kernel(&pband, &pair, &[]).unwrap();
    let psamples = engine::sample_channels(&spec, &pair, &pband);
    let rec = engine::reconstruct_spectrum(&psamples, &pkernel).unwrap();
    let pair_err: f64 = (pband.n1()..=pband.n2())
        .map(|k| (rec.coeff(k) - spec.coeff(k)).norm_sqr())
        .sum::<f64>()
        .sqrt();
    println!(
        "(f, Hf) pair with {} samples per channel: coefficient error {pair_err:.2e}",
        pband.samples_per_channel()
    );
    let a0_pair = engine::estimate_a0(&psamples, &pair, A0Mode::FromFAndHf).unwrap();
    println!("a(0) from the (f, Hf) pair: {}", fmt(a0_pair));
}
