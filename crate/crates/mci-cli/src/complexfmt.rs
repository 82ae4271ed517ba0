//! Parsing of complex-valued CSV cells: `1.5`, `-2e-3`, `1+2i`, `0.5-1e-4i`,
//! `2i`, `-i`.

use anyhow::{bail, Context, Result};
use mci::Complex64;

/// Parse one cell.
pub fn parse_complex(cell: &str) -> Result<Complex64> {
    let s = cell.trim();
    if s.is_empty() {
        bail!("empty cell");
    }
    if let Some(body) = s.strip_suffix(['i', 'j']) {
        // split at the sign that separates real and imaginary parts: the last
        // '+'/'-' that is not leading and not part of an exponent
        let bytes = body.as_bytes();
        let mut split = None;
        for (idx, &b) in bytes.iter().enumerate().skip(1).rev() {
            if (b == b'+' || b == b'-') && !matches!(bytes[idx - 1], b'e' | b'E') {
                split = Some(idx);
                break;
            }
        }
        match split {
            Some(idx) => {
                let re: f64 = body[..idx]
                    .trim()
                    .parse()
                    .with_context(|| format!("real part of {s:?}"))?;
                let im = parse_signed_imag(&body[idx..])?;
                Ok(Complex64::new(re, im))
            }
            None => Ok(Complex64::new(0.0, parse_signed_imag(body)?)),
        }
    } else {
        let re: f64 = s.parse().with_context(|| format!("number {s:?}"))?;
        Ok(Complex64::new(re, 0.0))
    }
}

fn parse_signed_imag(s: &str) -> Result<f64> {
    let t = s.trim();
    match t {
        "" | "+" => Ok(1.0),
        "-" => Ok(-1.0),
        _ => t.parse().with_context(|| format!("imaginary part {s:?}")),
    }
}

/// Parse CSV text into columns of complex values. A non-numeric first row is
/// treated as a header and skipped.
pub fn parse_columns(text: &str) -> Result<Vec<Vec<Complex64>>> {
    let mut rows = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let cells: Vec<&str> = line.split(',').collect();
        if rows.is_empty() && lineno == 0 && cells.iter().any(|c| parse_complex(c).is_err()) {
            continue; // header
        }
        let parsed: Vec<Complex64> = cells
            .iter()
            .map(|c| parse_complex(c).with_context(|| format!("line {}", lineno + 1)))
            .collect::<Result<_>>()?;
        rows.push(parsed);
    }
    if rows.is_empty() {
        bail!("no data rows");
    }
    let width = rows[0].len();
    if let Some(bad) = rows.iter().position(|r| r.len() != width) {
        bail!("row {} has {} cells, expected {width}", bad + 1, rows[bad].len());
    }
    let mut columns = vec![Vec::with_capacity(rows.len()); width];
    for row in rows {
        for (col, v) in columns.iter_mut().zip(row) {
            col.push(v);
        }
    }
    Ok(columns)
}

/// Format a complex value for CSV output (`re` when purely real, else
/// `re+imi`).
#[allow(dead_code)]
pub fn format_complex(v: Complex64) -> String {
    if v.im == 0.0 {
        format!("{}", v.re)
    } else if v.im < 0.0 {
        format!("{}{}i", v.re, v.im)
    } else {
        format!("{}+{}i", v.re, v.im)
    }
}
