//! Deterministic CSV output: 12 significant digits, '.' decimal separator,
//! '\n' line endings, '#'-prefixed parameter echo in the header.

use std::fs::File;
use std::io::{self, BufWriter, Write};

/// Format with 12 significant digits; positional notation where reasonable,
/// normalized scientific otherwise. Identical inputs always produce
/// identical bytes.
pub fn sig12(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        return format!("{x}");
    }
    let exp = x.abs().log10().floor() as i32;
    if !(-5..=14).contains(&exp) {
        return format!("{:.11e}", x);
    }
    let decimals = (11 - exp).max(0) as usize;
    format!("{:.*}", decimals, x)
}

/// Either stdout or a file, buffered.
pub enum Sink {
    Stdout(io::Stdout),
    File(BufWriter<File>),
}

impl Sink {
    pub fn open(path: Option<&str>) -> io::Result<Self> {
        match path {
            Some(p) => Ok(Self::File(BufWriter::new(File::create(p)?))),
            None => Ok(Self::Stdout(io::stdout())),
        }
    }
}

impl Write for Sink {
    fn write(&mut self, buf: &[u8]) -> io::Result<usize> {
        match self {
            Self::Stdout(s) => s.write(buf),
            Self::File(f) => f.write(buf),
        }
    }
    fn flush(&mut self) -> io::Result<()> {
        match self {
            Self::Stdout(s) => s.flush(),
            Self::File(f) => f.flush(),
        }
    }
}
