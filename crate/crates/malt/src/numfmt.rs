//! Locale-independent numeric formatting for report files.
//!
//! Every fp64 written to CSV or JSON goes through [`fmt_f64`]: scientific
//! notation with 17 significant digits, which round-trips any finite f64
//! exactly and never depends on locale.

use serde::Serialize;

/// Format a finite f64 with 17 significant digits (round-trip exact).
pub fn fmt_f64(x: f64) -> String {
    format!("{x:.16e}")
}

struct SigDigitFormatter;

impl serde_json::ser::Formatter for SigDigitFormatter {
    fn write_f64<W>(&mut self, writer: &mut W, value: f64) -> std::io::Result<()>
    where
        W: ?Sized + std::io::Write,
    {
        writer.write_all(fmt_f64(value).as_bytes())
    }
}

/// Serialize to a JSON string whose floats use [`fmt_f64`] formatting.
pub fn to_json_string<T: Serialize>(value: &T) -> serde_json::Result<String> {
    let mut out = Vec::new();
    let mut ser = serde_json::Serializer::with_formatter(&mut out, SigDigitFormatter);
    value.serialize(&mut ser)?;
    Ok(String::from_utf8(out).expect("serde_json emits utf-8"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fmt_round_trips_exactly() {
        for &x in &[
            0.0,
            1.0,
            -1.5,
            8.0 / 255.0,
            std::f64::consts::PI,
            1e-300,
            -9.87e280,
            f64::MIN_POSITIVE,
        ] {
            let s = fmt_f64(x);
            let back: f64 = s.parse().unwrap();
            assert_eq!(back.to_bits(), x.to_bits(), "{s}");
        }
    }

    #[test]
    fn json_floats_use_17_digits() {
        #[derive(Serialize)]
        struct Row {
            v: f64,
        }
        let s = to_json_string(&Row { v: 0.5 }).unwrap();
        assert_eq!(s, "{\"v\":5.0000000000000000e-1}");
        let parsed: serde_json::Value = serde_json::from_str(&s).unwrap();
        assert_eq!(parsed["v"].as_f64().unwrap(), 0.5);
    }

    #[test]
    fn json_integers_untouched() {
        #[derive(Serialize)]
        struct Row {
            n: u64,
        }
        let s = to_json_string(&Row { n: 1900 }).unwrap();
        assert_eq!(s, "{\"n\":1900}");
    }
}
