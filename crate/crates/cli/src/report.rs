//! Output formatting. JSON goes out on one line with every float printed as
//! a 17-significant-digit scientific literal, so parsing the output back
//! reproduces the exact bit pattern; CSV uses the same float format.

use std::io;

use serde::Serialize;
use serde_json::ser::{CompactFormatter, Formatter};
use serde_json::Value;

struct SciFormatter;

impl Formatter for SciFormatter {
    fn write_f64<W>(&mut self, writer: &mut W, value: f64) -> io::Result<()>
    where
        W: ?Sized + io::Write,
    {
        write!(writer, "{value:.16e}")
    }

    fn write_f32<W>(&mut self, writer: &mut W, value: f32) -> io::Result<()>
    where
        W: ?Sized + io::Write,
    {
        write!(writer, "{value:e}")
    }

    // Everything else keeps the compact defaults.
    fn write_null<W>(&mut self, writer: &mut W) -> io::Result<()>
    where
        W: ?Sized + io::Write,
    {
        CompactFormatter.write_null(writer)
    }
}

/// Serializes a report to a single JSON line (trailing newline included).
pub fn json_line(value: &Value) -> String {
    let mut buf = Vec::new();
    let mut ser = serde_json::Serializer::with_formatter(&mut buf, SciFormatter);
    value
        .serialize(&mut ser)
        .expect("in-memory serialization cannot fail");
    buf.push(b'\n');
    String::from_utf8(buf).expect("serialized JSON is UTF-8")
}

pub fn float(x: f64) -> String {
    format!("{x:.16e}")
}

/// One CSV line of floats.
pub fn csv_row(values: &[f64]) -> String {
    let mut line = values
        .iter()
        .map(|v| float(*v))
        .collect::<Vec<_>>()
        .join(",");
    line.push('\n');
    line
}
