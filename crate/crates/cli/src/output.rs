//! Output formatting: significant-digit decimal notation and CSV/JSON
//! table writers.

use std::fs::File;
use std::io::{self, Write};

use clap::ValueEnum;
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

/// Formats with up to `sig` significant digits, decimal notation where the
/// magnitude allows, trailing zeros trimmed. Locale-free by construction.
pub fn format_sig(v: f64, sig: usize) -> String {
    assert!(sig >= 1);
    if v == 0.0 {
        return "0".to_string();
    }
    if !v.is_finite() {
        return format!("{v}");
    }
    let exponent = v.abs().log10().floor() as i32;
    if exponent < -4 || exponent >= sig as i32 {
        let formatted = format!("{:.*e}", sig - 1, v);
        let (mantissa, exp) = formatted
            .split_once('e')
            .expect("scientific notation contains an exponent");
        let mantissa = if mantissa.contains('.') {
            mantissa.trim_end_matches('0').trim_end_matches('.')
        } else {
            mantissa
        };
        format!("{mantissa}e{exp}")
    } else {
        let decimals = (sig as i32 - 1 - exponent).max(0) as usize;
        let formatted = format!("{:.*}", decimals, v);
        if formatted.contains('.') {
            formatted
                .trim_end_matches('0')
                .trim_end_matches('.')
                .to_string()
        } else {
            formatted
        }
    }
}

/// A table row that knows its column names and CSV cells; JSON encoding
/// comes from the `Serialize` impl so both formats share one source.
pub trait TableRow: Serialize {
    fn header() -> &'static [&'static str];
    fn cells(&self) -> Vec<String>;
}

#[derive(Debug, Serialize)]
pub struct Figure1Row {
    pub x: f64,
    pub k: u32,
    pub l: u32,
    pub p_pure: f64,
    pub p_coherent: f64,
}

impl TableRow for Figure1Row {
    fn header() -> &'static [&'static str] {
        &["x", "k", "l", "p_pure", "p_coherent"]
    }

    fn cells(&self) -> Vec<String> {
        vec![
            format_sig(self.x, 15),
            self.k.to_string(),
            self.l.to_string(),
            format_sig(self.p_pure, 15),
            format_sig(self.p_coherent, 15),
        ]
    }
}

#[derive(Debug, Serialize)]
pub struct Figure2Row {
    pub d: u32,
    pub k: u32,
    pub p_avg: f64,
}

impl TableRow for Figure2Row {
    fn header() -> &'static [&'static str] {
        &["d", "k", "p_avg"]
    }

    fn cells(&self) -> Vec<String> {
        vec![
            self.d.to_string(),
            self.k.to_string(),
            format_sig(self.p_avg, 15),
        ]
    }
}

/// Opens the table sink: `-` is standard output.
pub fn open_output(path: &str) -> Result<Box<dyn Write>, String> {
    if path == "-" {
        Ok(Box::new(io::stdout()))
    } else {
        File::create(path)
            .map(|f| Box::new(f) as Box<dyn Write>)
            .map_err(|e| format!("cannot write {path}: {e}"))
    }
}

pub fn write_table<R: TableRow>(
    target: &mut dyn Write,
    format: Format,
    rows: &[R],
) -> io::Result<()> {
    match format {
        Format::Csv => {
            writeln!(target, "{}", R::header().join(","))?;
            for row in rows {
                writeln!(target, "{}", row.cells().join(","))?;
            }
        }
        Format::Json => {
            serde_json::to_writer(&mut *target, rows)?;
            writeln!(target)?;
        }
    }
    target.flush()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn significant_digit_formatting() {
        assert_eq!(format_sig(0.0, 15), "0");
        assert_eq!(format_sig(0.5, 15), "0.5");
        assert_eq!(format_sig(0.65625, 15), "0.65625");
        assert_eq!(format_sig(1.0, 15), "1");
        assert_eq!(format_sig(0.3934693402873666, 15), "0.393469340287367");
        assert_eq!(format_sig(3.21986e-15, 6), "3.21986e-15");
        assert_eq!(format_sig(-0.25, 15), "-0.25");
        assert_eq!(format_sig(1e-15, 6), "1e-15");
    }
}
