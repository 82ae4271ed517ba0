//! Inspect the interpolation kernels y_m(t) and check the stable evaluator
//! against the printed closed forms at generic points.
//!
//! ```bash
//! cargo run -p mci --example interpolation_kernels
//! ```

use mci::channels::{build_kernel, ChannelSpec};
use mci::oracle::{closed_form_y, ClosedFormKernel};
use mci::spectrum::BandSpec;

fn main() {
    // Dirichlet kernel: single identity channel
    let n = 7u32;
    let band = BandSpec::new(-(n as i64), n as i64, 1).unwrap();
    let kernel = build_kernel(&band, &[ChannelSpec::Identity], &[]).unwrap();
    println!("single identity channel on {{-{n}..{n}}} (Dirichlet kernel):");
    println!("{:>8} {:>12} {:>12}", "t", "eval_y", "closed form");
    for &t in &[0.5, 1.0, 2.2, 3.9] {
        let fast = kernel.eval_y(0, t).re;
        let slow = closed_form_y(ClosedFormKernel::Dirichlet { n }, t).unwrap().re;
        println!("{t:>8.3} {fast:>12.6} {slow:>12.6}");
    }
    println!("at t = 0 the closed form is 0/0; the evaluator gives {}", kernel.eval_y(0, 0.0).re);

    // three-channel derivative bank
    let n0 = 5u32;
    let nn = 3 * n0 as i64 + 1;
    let band = BandSpec::new(-nn, nn, 3).unwrap();
    let bank = vec![
        ChannelSpec::Identity,
        ChannelSpec::Derivative { order: 1 },
        ChannelSpec::Derivative { order: 2 },
    ];
    let kernel = build_kernel(&band, &bank, &[]).unwrap();
    println!("\n(f, f', f'') bank on {{-{nn}..{nn}}}: kernels vs closed forms");
    println!("{:>8} {:>12} {:>12} {:>12} {:>12} {:>12} {:>12}", "t", "y1", "closed", "y2", "closed", "y3", "closed");
    for &t in &[0.7, 1.5, 2.9] {
        let c1 = closed_form_y(ClosedFormKernel::DerivativeBankY1 { n0 }, t).unwrap().re;
        let c2 = closed_form_y(ClosedFormKernel::DerivativeBankY2 { n0 }, t).unwrap().re;
        let c3 = closed_form_y(ClosedFormKernel::DerivativeBankY3 { n0 }, t).unwrap().re;
        println!(
            "{t:>8.3} {:>12.6} {c1:>12.6} {:>12.6} {c2:>12.6} {:>12.6} {c3:>12.6}",
            kernel.eval_y(0, t).re,
            kernel.eval_y(1, t).re,
            kernel.eval_y(2, t).re,
        );
    }

    // identity/Hilbert pair: the first kernel matches its printed form; the
    // flattened table kernels r_m(n) are also inspectable directly
    let np = 6u32;
    let band = BandSpec::new(-(np as i64), np as i64 + 1, 2).unwrap();
    let bank = vec![ChannelSpec::Identity, ChannelSpec::Hilbert];
    let kernel = build_kernel(&band, &bank, &[]).unwrap();
    let t = 1.1;
    println!(
        "\n(f, Hf) pair on {{-{np}..{}}}: y1({t}) = {:.6} vs closed form {:.6}",
        np + 1,
        kernel.eval_y(0, t).re,
        closed_form_y(ClosedFormKernel::HilbertPairY1 { n: np }, t).unwrap().re,
    );
    println!("flattened kernel values r_1(n):");
    for f in -(np as i64)..=np as i64 + 1 {
        print!(" {:.2}", kernel.r_value(0, f).re);
    }
    println!();
}
