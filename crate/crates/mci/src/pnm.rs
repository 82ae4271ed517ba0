//! Binary PGM/PPM image I/O.
//!
//! Grayscale planes round-trip through binary PGM (magic `P5`, maxval 255).
//! Color PPM (`P6`) inputs are converted to a luminance plane with
//! `Y = 0.299 R + 0.587 G + 0.114 B`, rounded to nearest.

use crate::sisr::ImagePlane;
use crate::{Error, Result};
use std::fs;
use std::path::Path;

struct HeaderReader<'a> {
    data: &'a [u8],
    pos: usize,
}

impl<'a> HeaderReader<'a> {
    fn new(data: &'a [u8]) -> Self {
        Self { data, pos: 0 }
    }

    /// Next whitespace-delimited token, skipping `#` comments.
    fn token(&mut self) -> Result<&'a [u8]> {
        loop {
            while self.pos < self.data.len() && self.data[self.pos].is_ascii_whitespace() {
                self.pos += 1;
            }
            if self.pos < self.data.len() && self.data[self.pos] == b'#' {
                while self.pos < self.data.len() && self.data[self.pos] != b'\n' {
                    self.pos += 1;
                }
                continue;
            }
            break;
        }
        if self.pos >= self.data.len() {
            return Err(Error::Pnm("unexpected end of header".into()));
        }
        let start = self.pos;
        while self.pos < self.data.len() && !self.data[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
        Ok(&self.data[start..self.pos])
    }

    fn number(&mut self) -> Result<usize> {
        let tok = self.token()?;
        std::str::from_utf8(tok)
            .ok()
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| Error::Pnm(format!("bad header number {:?}", String::from_utf8_lossy(tok))))
    }

    /// Consume the single whitespace byte separating header and raster.
    fn finish_header(&mut self) -> Result<usize> {
        if self.pos >= self.data.len() || !self.data[self.pos].is_ascii_whitespace() {
            return Err(Error::Pnm("missing raster separator".into()));
        }
        Ok(self.pos + 1)
    }
}

/// Decode a binary PGM (`P5`) or PPM (`P6`) buffer into a luminance plane.
pub fn decode(data: &[u8]) -> Result<ImagePlane> {
    let mut hdr = HeaderReader::new(data);
    let magic = hdr.token()?;
    let channels = match magic {
        b"P5" => 1usize,
        b"P6" => 3usize,
        other => {
            return Err(Error::Pnm(format!(
                "unsupported magic {:?} (want P5 or P6)",
                String::from_utf8_lossy(other)
            )))
        }
    };
    let width = hdr.number()?;
    let height = hdr.number()?;
    let maxval = hdr.number()?;
    if width == 0 || height == 0 {
        return Err(Error::Pnm("zero image dimension".into()));
    }
    if maxval != 255 {
        return Err(Error::Pnm(format!("unsupported maxval {maxval} (want 255)")));
    }
    let raster_start = hdr.finish_header()?;
    let need = width * height * channels;
    let raster = data
        .get(raster_start..raster_start + need)
        .ok_or_else(|| Error::Pnm(format!("raster truncated: need {need} bytes")))?;
    let pixels = if channels == 1 {
        raster.iter().map(|&b| b as f64).collect()
    } else {
        raster
            .chunks_exact(3)
            .map(|rgb| {
                let y = 0.299 * rgb[0] as f64 + 0.587 * rgb[1] as f64 + 0.114 * rgb[2] as f64;
                y.round().clamp(0.0, 255.0)
            })
            .collect()
    };
    ImagePlane::new(width, height, pixels)
}

/// Encode a plane as binary PGM, rounding pixels to the nearest byte.
pub fn encode(img: &ImagePlane) -> Vec<u8> {
    let mut out = format!("P5\n{} {}\n255\n", img.width(), img.height()).into_bytes();
    out.extend(
        img.pixels()
            .iter()
            .map(|&p| p.round().clamp(0.0, 255.0) as u8),
    );
    out
}

pub fn read(path: &Path) -> Result<ImagePlane> {
    decode(&fs::read(path)?)
}

pub fn write(path: &Path, img: &ImagePlane) -> Result<()> {
    fs::write(path, encode(img))?;
    Ok(())
}
