//! End-to-end tests of the `mci` binary: output formats, pipeline wiring,
//! determinism, and failure modes.

use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn mci(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mci"))
        .args(args)
        .current_dir(dir)
        .output()
        .expect("binary runs")
}

fn assert_ok(out: &Output) {
    assert!(
        out.status.success(),
        "command failed: {}\n{}",
        String::from_utf8_lossy(&out.stderr),
        String::from_utf8_lossy(&out.stdout)
    );
}

fn write_pgm(path: &Path, width: usize, height: usize, pixel: impl Fn(usize, usize) -> u8) {
    let mut data = format!("P5\n{width} {height}\n255\n").into_bytes();
    for y in 0..height {
        for x in 0..width {
            data.push(pixel(x, y));
        }
    }
    fs::write(path, data).unwrap();
}

#[test]
fn table_single_row_matches_reference_values() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("row.json");
    fs::write(&cfg, r#"{"rows": [[48, 24, 24, 0, 0]]}"#).unwrap();
    let out_csv = dir.path().join("table.csv");
    let out = mci(
        &[
            "table",
            "--config",
            cfg.to_str().unwrap(),
            "--out",
            out_csv.to_str().unwrap(),
        ],
        dir.path(),
    );
    assert_ok(&out);
    let text = fs::read_to_string(&out_csv).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next().unwrap(), "mu,f,hf,d1,d2,delta1,delta2");
    let row = lines.next().unwrap();
    assert_eq!(row, "48,24,24,0,0,2.861e-1,2.400e-1");
}

#[test]
fn table_default_runs_all_rows() {
    let dir = tempfile::tempdir().unwrap();
    let out_csv = dir.path().join("table.csv");
    let out = mci(&["table", "--out", out_csv.to_str().unwrap()], dir.path());
    assert_ok(&out);
    let text = fs::read_to_string(&out_csv).unwrap();
    assert_eq!(text.lines().count(), 17); // header + 16 rows
    assert!(text.lines().nth(1).unwrap().starts_with("16,16,0,0,0,1.482e0,"));
    assert!(text.lines().nth(16).unwrap().starts_with("108,108,0,0,0,1.189e-3,"));
}

#[test]
fn reconstruct_round_trips_samples() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("samples.csv");
    // f(t) = 1 + e^{it} on the two-point window {0, 1}
    fs::write(&input, "g1\n2\n0\n").unwrap();
    let out_csv = dir.path().join("rec.csv");
    let out = mci(
        &[
            "reconstruct",
            "--input",
            input.to_str().unwrap(),
            "--band",
            "0:1:1",
            "--channels",
            r#"{"channels":[{"kind":"identity"}]}"#,
            "--grid",
            "4",
            "--hilbert",
            "--out",
            out_csv.to_str().unwrap(),
        ],
        dir.path(),
    );
    assert_ok(&out);
    let text = fs::read_to_string(&out_csv).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next().unwrap(), "t,re,im,hilbert_re,hilbert_im");
    // t = 0: f = 2; t = pi/2: f = 1 + i
    let first: Vec<&str> = lines.next().unwrap().split(',').collect();
    assert_eq!(first[1], "2.0");
    let second: Vec<&str> = lines.next().unwrap().split(',').collect();
    assert_eq!(second[1], "1.0");
    assert_eq!(second[2], "1.0");
    // Hilbert of e^{it} is -i e^{it}: at t = 0 that is -i
    let first_h: Vec<&str> = text.lines().nth(1).unwrap().split(',').collect();
    assert_eq!(first_h[3], "0.0");
    assert_eq!(first_h[4], "-1.0");
}

#[test]
fn reconstruct_reports_bad_input() {
    let dir = tempfile::tempdir().unwrap();
    let out = mci(
        &[
            "reconstruct",
            "--input",
            "missing.csv",
            "--band",
            "0:1:1",
            "--channels",
            r#"{"channels":[{"kind":"identity"}]}"#,
        ],
        dir.path(),
    );
    assert!(!out.status.success());
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("missing.csv"), "stderr: {err}");
}

#[test]
fn reconstruct_rejects_wrong_column_count() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("samples.csv");
    fs::write(&input, "1,2\n3,4\n").unwrap();
    let out = mci(
        &[
            "reconstruct",
            "--input",
            input.to_str().unwrap(),
            "--band",
            "0:1:1",
            "--channels",
            r#"{"channels":[{"kind":"identity"}]}"#,
        ],
        dir.path(),
    );
    assert!(!out.status.success());
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("channel columns"), "stderr: {err}");
}

#[test]
fn degrade_shrinks_by_factor() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("in.pgm");
    write_pgm(&input, 510, 510, |x, y| ((x * 7 + y * 3) % 256) as u8);
    let out_pgm = dir.path().join("lr.pgm");
    let out = mci(
        &[
            "degrade",
            "--input",
            input.to_str().unwrap(),
            "--out",
            out_pgm.to_str().unwrap(),
        ],
        dir.path(),
    );
    assert_ok(&out);
    let bytes = fs::read(&out_pgm).unwrap();
    assert!(bytes.starts_with(b"P5\n170 170\n255\n"));
}

#[test]
fn degrade_is_deterministic_per_seed() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("in.pgm");
    write_pgm(&input, 12, 12, |x, y| ((x * 19 + y * 5) % 256) as u8);
    let run = |name: &str, seed: &str| {
        let path = dir.path().join(name);
        let out = mci(
            &[
                "degrade",
                "--input",
                input.to_str().unwrap(),
                "--out",
                path.to_str().unwrap(),
                "--noise-sigma",
                "3.0",
                "--seed",
                seed,
            ],
            dir.path(),
        );
        assert_ok(&out);
        fs::read(path).unwrap()
    };
    let a = run("a.pgm", "7");
    let b = run("b.pgm", "7");
    let c = run("c.pgm", "8");
    assert_eq!(a, b, "same seed must give byte-identical output");
    assert_ne!(a, c, "different seed should perturb the noise");
}

#[test]
fn sisr_pipeline_with_metrics() {
    let dir = tempfile::tempdir().unwrap();
    let truth = dir.path().join("truth.pgm");
    write_pgm(&truth, 30, 30, |x, y| {
        let v = 120.0
            + 60.0 * (x as f64 * 0.35).sin()
            + 40.0 * (y as f64 * 0.22).cos();
        v.clamp(0.0, 255.0) as u8
    });
    let lr = dir.path().join("lr.pgm");
    assert_ok(&mci(
        &[
            "degrade",
            "--input",
            truth.to_str().unwrap(),
            "--out",
            lr.to_str().unwrap(),
        ],
        dir.path(),
    ));
    let hr = dir.path().join("hr.pgm");
    let metrics = dir.path().join("metrics.json");
    let out = mci(
        &[
            "sisr",
            "--input",
            lr.to_str().unwrap(),
            "--out",
            hr.to_str().unwrap(),
            "--reference",
            truth.to_str().unwrap(),
            "--metrics",
            metrics.to_str().unwrap(),
        ],
        dir.path(),
    );
    assert_ok(&out);
    let bytes = fs::read(&hr).unwrap();
    assert!(bytes.starts_with(b"P5\n30 30\n255\n"));
    let report: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(&metrics).unwrap()).unwrap();
    let psnr = report["psnr"].as_f64().unwrap();
    let cc = report["cc"].as_f64().unwrap();
    assert!(psnr > 20.0, "pipeline PSNR {psnr}");
    assert!(cc > 0.9, "pipeline CC {cc}");
}

#[test]
fn sisr_mirror_flag_accepted() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("in.pgm");
    write_pgm(&input, 8, 8, |x, y| (x * 30 + y) as u8);
    let out_pgm = dir.path().join("up.pgm");
    let out = mci(
        &[
            "sisr",
            "--input",
            input.to_str().unwrap(),
            "--out",
            out_pgm.to_str().unwrap(),
            "--factor",
            "2",
            "--extend",
            "mirror",
        ],
        dir.path(),
    );
    assert_ok(&out);
    assert!(fs::read(&out_pgm).unwrap().starts_with(b"P5\n16 16\n255\n"));
}

#[test]
fn kernels_dump_matches_closed_form() {
    let dir = tempfile::tempdir().unwrap();
    let out_csv = dir.path().join("kernels.csv");
    // (f, f', f'') bank with 23 samples per channel on {-34..34}
    let out = mci(
        &[
            "kernels",
            "--band",
            "-34:34:3",
            "--channels",
            r#"{"channels":[{"kind":"identity"},{"kind":"derivative","order":1},{"kind":"derivative","order":2}]}"#,
            "--grid",
            "64",
            "--out",
            out_csv.to_str().unwrap(),
        ],
        dir.path(),
    );
    assert_ok(&out);
    let text = fs::read_to_string(&out_csv).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next().unwrap(), "t,y1_re,y1_im,y2_re,y2_im,y3_re,y3_im");
    // generic interior rows against the closed form with n0 = 11, L = 23
    let n0 = 11.0f64;
    for line in lines.skip(5).step_by(7) {
        let cells: Vec<f64> = line.split(',').map(|c| c.parse().unwrap()).collect();
        let t = cells[0];
        if t.sin().abs() < 1e-3 {
            continue;
        }
        let y2_closed = t.sin() * ((n0 + 0.5) * t).sin().powi(3)
            / ((2.0 * n0 + 1.0).powi(2) * (0.5 * t).sin().powi(3));
        assert!(
            (cells[3] - y2_closed).abs() < 1e-8 * y2_closed.abs().max(1.0),
            "y2({t}) = {} vs closed form {y2_closed}",
            cells[3]
        );
        assert!(cells[4].abs() < 1e-10, "y2 imaginary part at t = {t}");
    }
}

#[test]
fn kernels_rejects_singular_bank_without_null_band() {
    let dir = tempfile::tempdir().unwrap();
    let out = mci(
        &[
            "kernels",
            "--band",
            "-3:3:1",
            "--channels",
            r#"{"channels":[{"kind":"hilbert"}]}"#,
        ],
        dir.path(),
    );
    assert!(!out.status.success());
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("singular"), "stderr: {err}");

    // exempting the offending frequency makes it build
    let out_csv = dir.path().join("k.csv");
    let out = mci(
        &[
            "kernels",
            "--band",
            "-3:3:1",
            "--channels",
            r#"{"channels":[{"kind":"hilbert"}],"null_band":[0]}"#,
            "--grid",
            "16",
            "--out",
            out_csv.to_str().unwrap(),
        ],
        dir.path(),
    );
    assert_ok(&out);
}

#[test]
fn rerun_is_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("cfg.json");
    fs::write(&cfg, r#"{"rows": [[16, 16, 0, 0, 0]], "grid": 256}"#).unwrap();
    let run = |name: &str| {
        let path = dir.path().join(name);
        assert_ok(&mci(
            &[
                "table",
                "--config",
                cfg.to_str().unwrap(),
                "--out",
                path.to_str().unwrap(),
            ],
            dir.path(),
        ));
        fs::read(path).unwrap()
    };
    assert_eq!(run("t1.csv"), run("t2.csv"));
}
