use std::fmt::Write as _;
use std::path::PathBuf;

use clap::ValueEnum;
use num_complex::Complex64;
use serde::Serialize;
use serde_json::Value;

/// Environment variable naming the directory that relative `--out` paths resolve against.
pub const OUT_DIR_ENV: &str = "GALQ_OUT_DIR";

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    /// Nothing was checked.
    Info,
    Pass,
    Fail,
}

impl Verdict {
    pub fn from_pass(pass: bool) -> Self {
        if pass {
            Self::Pass
        } else {
            Self::Fail
        }
    }
}

pub struct Report {
    pub verdict: Verdict,
    pub json: Value,
    pub text: String,
    pub csv: Option<String>,
}

impl Report {
    pub fn new<T: Serialize>(verdict: Verdict, body: &T, text: String) -> Self {
        Self {
            verdict,
            json: serde_json::to_value(body).expect("report bodies serialize"),
            text,
            csv: None,
        }
    }

    pub fn with_csv(mut self, csv: String) -> Self {
        self.csv = Some(csv);
        self
    }

    pub fn render(&self, format: Format) -> Option<String> {
        match format {
            Format::Text => Some(self.text.clone()),
            Format::Json => {
                let mut json = serde_json::to_string_pretty(&round_floats(self.json.clone()))
                    .expect("values serialize");
                json.push('\n');
                Some(json)
            }
            Format::Csv => self.csv.clone(),
        }
    }
}

/// Rounds to 12 significant digits.
pub fn sig(x: f64) -> f64 {
    if !x.is_finite() || x == 0.0 {
        return x;
    }
    format!("{x:.11e}").parse().unwrap_or(x)
}

/// 12 significant digits, in exponent form for very small or large magnitudes.
pub fn real(x: f64) -> String {
    let r = sig(x);
    if r != 0.0 && r.is_finite() && !(1e-4..1e15).contains(&r.abs()) {
        format!("{r:e}")
    } else {
        format!("{r}")
    }
}

pub fn complex(z: Complex64) -> String {
    if z.im < 0.0 {
        format!("{}-{}i", real(z.re), real(-z.im))
    } else {
        format!("{}+{}i", real(z.re), real(z.im))
    }
}

fn round_floats(value: Value) -> Value {
    match value {
        Value::Number(n) if n.is_f64() => {
            let x = sig(n.as_f64().unwrap_or(0.0));
            serde_json::Number::from_f64(x).map_or(Value::Null, Value::Number)
        }
        Value::Array(items) => Value::Array(items.into_iter().map(round_floats).collect()),
        Value::Object(map) => {
            Value::Object(map.into_iter().map(|(k, v)| (k, round_floats(v))).collect())
        }
        other => other,
    }
}

pub fn out_path(name: &str) -> PathBuf {
    let path = PathBuf::from(name);
    match std::env::var_os(OUT_DIR_ENV) {
        Some(dir) if path.is_relative() => PathBuf::from(dir).join(path),
        _ => path,
    }
}

/// Builds CSV text from a header and rows of already formatted cells.
pub fn csv<I, R>(header: &[&str], rows: I) -> String
where
    I: IntoIterator<Item = R>,
    R: IntoIterator<Item = String>,
{
    let mut out = header.join(",");
    out.push('\n');
    for row in rows {
        let cells: Vec<String> = row.into_iter().map(quote).collect();
        let _ = writeln!(out, "{}", cells.join(","));
    }
    out
}

fn quote(cell: String) -> String {
    if cell.contains([',', '"', '\n']) {
        format!("\"{}\"", cell.replace('"', "\"\""))
    } else {
        cell
    }
}

pub fn pass_label(pass: bool) -> &'static str {
    if pass {
        "PASS"
    } else {
        "FAIL"
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn twelve_significant_digits() {
        assert_eq!(real(std::f64::consts::PI), "3.14159265359");
        assert_eq!(real(1e-20), "1e-20");
        assert_eq!(real(2.5e-9), "2.5e-9");
        assert_eq!(complex(Complex64::new(0.5, -2.0)), "0.5-2i");
    }

    #[test]
    fn json_floats_are_rounded() {
        let report = Report::new(
            Verdict::Info,
            &serde_json::json!({"x": 2f64.sqrt(), "n": 3}),
            String::new(),
        );
        let text = report.render(Format::Json).unwrap();
        assert!(text.contains("1.41421356237"));
        assert!(text.contains("\"n\": 3"));
    }

    #[test]
    fn csv_quotes_cells() {
        let text = csv(&["a", "b"], vec![vec!["1,2".to_string(), "x".to_string()]]);
        assert_eq!(text, "a,b\n\"1,2\",x\n");
    }
}
