use std::io::Write;

use anyhow::Result;
use serde::Serialize;

use crate::args::Format;

/// A flat record with a fixed CSV header.
pub trait Row: Serialize {
    const HEADER: &'static [&'static str];
    fn text(&self) -> String;
}

/// Writes `rows` as an aligned text listing, a JSON array or CSV with a
/// header line (also when `rows` is empty).
pub fn emit_rows<R: Row>(out: &mut dyn Write, format: Format, rows: &[R]) -> Result<()> {
    match format {
        Format::Text => {
            for r in rows {
                writeln!(out, "{}", r.text())?;
            }
        }
        Format::Json => {
            serde_json::to_writer_pretty(&mut *out, rows)?;
            writeln!(out)?;
        }
        Format::Csv => {
            let mut w = csv::WriterBuilder::new().has_headers(false).from_writer(out);
            w.write_record(R::HEADER)?;
            for r in rows {
                w.serialize(r)?;
            }
            w.flush()?;
        }
    }
    Ok(())
}

/// A single structured value: `Display` for text, serde for JSON, and a
/// one-line CSV through `row`.
pub fn emit_one<T, R>(out: &mut dyn Write, format: Format, value: &T, row: impl FnOnce(&T) -> R) -> Result<()>
where
    T: Serialize + std::fmt::Display,
    R: Row,
{
    match format {
        Format::Text => write!(out, "{value}")?,
        Format::Json => {
            serde_json::to_writer_pretty(&mut *out, value)?;
            writeln!(out)?;
        }
        Format::Csv => emit_rows(out, format, &[row(value)])?,
    }
    Ok(())
}

/// `Some(x)` as `x`, `None` as `-`.
pub fn opt<T: ToString>(v: Option<T>) -> String {
    v.map_or_else(|| "-".into(), |x| x.to_string())
}
