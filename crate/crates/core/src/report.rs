//! Measure-series reports: a fixed-layout JSON serialization built for
//! golden-file stability, and a reader that preserves each number's
//! serialized token verbatim so downstream artifacts never re-round.
//!
//! Layout contract: fields appear in a fixed order (`question_id`,
//! `config`, `points`, `extrema`; point keys `t, S, S_max, I, delta,
//! omega, gamma, D, C, F`), numbers carry 10 significant digits, and
//! saturated values serialize as the string `"inf"`. Reports contain no
//! wall-clock metadata, so identical inputs produce identical bytes.

use std::fmt::Write as _;

use thiserror::Error;

use crate::measures::{Measure, MeasureValue};
use crate::series::{ExtremumKind, MeasureSeries};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ReportError {
    #[error("report is not valid JSON: {0}")]
    Json(String),
    #[error("report field {0} is missing or has the wrong type")]
    Field(String),
    #[error("report has no points")]
    NoPoints,
}

/// One report point read back with each measure's serialized token
/// (`"inf"` for saturated values) kept byte-for-byte.
#[derive(Debug, Clone, PartialEq)]
pub struct ReportPoint {
    pub t: i64,
    tokens: Vec<String>,
}

impl ReportPoint {
    /// The exact token the report carried for `measure`.
    pub fn token(&self, measure: Measure) -> &str {
        let index = Measure::ALL.iter().position(|m| *m == measure).unwrap();
        &self.tokens[index]
    }

    /// The token as a number, mapping `"inf"` to `+inf`.
    pub fn numeric(&self, measure: Measure) -> f64 {
        token_to_f64(self.token(measure))
    }
}

/// One extremum read back from a report.
#[derive(Debug, Clone, PartialEq)]
pub struct ReportExtremum {
    pub measure: Measure,
    pub kind: ExtremumKind,
    pub t: i64,
    pub token: String,
}

impl ReportExtremum {
    pub fn numeric(&self) -> f64 {
        token_to_f64(&self.token)
    }
}

/// A report as read back from disk, value tokens preserved.
#[derive(Debug, Clone, PartialEq)]
pub struct ReportDoc {
    pub question_id: String,
    pub points: Vec<ReportPoint>,
    pub extrema: Vec<ReportExtremum>,
}

fn token_to_f64(token: &str) -> f64 {
    if token == "inf" {
        f64::INFINITY
    } else {
        token.parse().unwrap_or(f64::NAN)
    }
}

/// Formats a finite value with 10 significant digits, matching C's
/// `%.10g`: positional notation while the decimal exponent is in
/// `[-4, 9]`, scientific (`1.5e+12`, two-digit exponent) outside it,
/// trailing zeros trimmed.
pub fn format_sig10(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    if x < 0.0 {
        return format!("-{}", format_sig10(-x));
    }
    let rendered = format!("{x:.9e}");
    let (mantissa, exponent) = rendered.split_once('e').expect("{:.9e} always carries e");
    let exponent: i32 = exponent.parse().expect("{:.9e} exponent is an integer");
    let digits: String = mantissa.chars().filter(|c| *c != '.').collect();
    let digits = digits.trim_end_matches('0');

    if (-4..10).contains(&exponent) {
        let point = exponent + 1;
        if point <= 0 {
            format!("0.{}{}", "0".repeat(-point as usize), digits)
        } else if point as usize >= digits.len() {
            format!("{}{}", digits, "0".repeat(point as usize - digits.len()))
        } else {
            let (int_part, frac_part) = digits.split_at(point as usize);
            format!("{int_part}.{frac_part}")
        }
    } else {
        let (first, rest) = digits.split_at(1);
        let head = if rest.is_empty() {
            first.to_string()
        } else {
            format!("{first}.{rest}")
        };
        let sign = if exponent < 0 { '-' } else { '+' };
        format!("{}e{}{:02}", head, sign, exponent.abs())
    }
}

fn render_value(value: MeasureValue) -> String {
    match value {
        MeasureValue::Finite(x) => format_sig10(x),
        MeasureValue::Saturated => "\"inf\"".to_string(),
    }
}

fn escape_json(text: &str) -> String {
    let mut out = String::with_capacity(text.len());
    for c in text.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            c if (c as u32) < 0x20 => {
                let _ = write!(out, "\\u{:04x}", c as u32);
            }
            c => out.push(c),
        }
    }
    out
}

/// Serializes a [`MeasureSeries`] to the report JSON layout.
pub fn write_report(series: &MeasureSeries) -> String {
    let config = series.config_used();
    let mut out = String::new();
    out.push_str("{\n");
    let _ = writeln!(
        out,
        "  \"question_id\": \"{}\",",
        escape_json(series.question_id())
    );
    out.push_str("  \"config\": {\n");
    let _ = writeln!(out, "    \"log_base\": {},", format_sig10(config.log_base));
    let _ = writeln!(out, "    \"alpha\": {},", format_sig10(config.alpha));
    let _ = writeln!(out, "    \"beta\": {},", format_sig10(config.beta));
    let _ = writeln!(
        out,
        "    \"normalization_tolerance\": {},",
        format_sig10(config.normalization_tolerance)
    );
    let _ = writeln!(
        out,
        "    \"singularity_policy\": \"{}\"",
        config.singularity_policy.as_str()
    );
    out.push_str("  },\n");

    out.push_str("  \"points\": [\n");
    for (index, point) in series.points().iter().enumerate() {
        let _ = write!(out, "    {{\"t\": {}", point.t);
        for measure in Measure::ALL {
            let _ = write!(
                out,
                ", \"{}\": {}",
                measure.as_str(),
                render_value(point.measures.value_of(measure))
            );
        }
        let comma = if index + 1 < series.points().len() {
            ","
        } else {
            ""
        };
        let _ = writeln!(out, "}}{comma}");
    }
    out.push_str("  ],\n");

    out.push_str("  \"extrema\": [\n");
    for (index, record) in series.extrema().iter().enumerate() {
        let comma = if index + 1 < series.extrema().len() {
            ","
        } else {
            ""
        };
        let _ = writeln!(
            out,
            "    {{\"measure\": \"{}\", \"kind\": \"{}\", \"t\": {}, \"value\": {}}}{}",
            record.measure.as_str(),
            record.kind.as_str(),
            record.t,
            render_value(record.value),
            comma
        );
    }
    out.push_str("  ]\n");
    out.push_str("}\n");
    out
}

/// Reads a report back, keeping every value's exact serialized token.
///
/// Numbers survive as written (the JSON parser is configured to preserve
/// arbitrary precision), so a token written into a plot CSV is
/// byte-identical to the report's.
pub fn read_report(json: &str) -> Result<ReportDoc, ReportError> {
    let field = |name: &str| ReportError::Field(name.to_string());
    let value: serde_json::Value =
        serde_json::from_str(json).map_err(|e| ReportError::Json(e.to_string()))?;
    let root = value.as_object().ok_or_else(|| field("(root)"))?;

    let question_id = root
        .get("question_id")
        .and_then(|v| v.as_str())
        .ok_or_else(|| field("question_id"))?
        .to_string();

    let token_of = |v: &serde_json::Value, name: &str| -> Result<String, ReportError> {
        match v {
            serde_json::Value::Number(n) => Ok(n.to_string()),
            serde_json::Value::String(s) if s == "inf" => Ok("inf".to_string()),
            _ => Err(field(name)),
        }
    };

    let mut points = Vec::new();
    for entry in root
        .get("points")
        .and_then(|v| v.as_array())
        .ok_or_else(|| field("points"))?
    {
        let obj = entry.as_object().ok_or_else(|| field("points[]"))?;
        let t = obj
            .get("t")
            .and_then(|v| v.as_i64())
            .ok_or_else(|| field("points[].t"))?;
        let mut tokens = Vec::with_capacity(Measure::ALL.len());
        for measure in Measure::ALL {
            let v = obj
                .get(measure.as_str())
                .ok_or_else(|| field(measure.as_str()))?;
            tokens.push(token_of(v, measure.as_str())?);
        }
        points.push(ReportPoint { t, tokens });
    }
    if points.is_empty() {
        return Err(ReportError::NoPoints);
    }

    let mut extrema = Vec::new();
    for entry in root
        .get("extrema")
        .and_then(|v| v.as_array())
        .ok_or_else(|| field("extrema"))?
    {
        let obj = entry.as_object().ok_or_else(|| field("extrema[]"))?;
        let measure: Measure = obj
            .get("measure")
            .and_then(|v| v.as_str())
            .ok_or_else(|| field("extrema[].measure"))?
            .parse()
            .map_err(|_| field("extrema[].measure"))?;
        let kind = match obj.get("kind").and_then(|v| v.as_str()) {
            Some("min") => ExtremumKind::Min,
            Some("max") => ExtremumKind::Max,
            _ => return Err(field("extrema[].kind")),
        };
        let t = obj
            .get("t")
            .and_then(|v| v.as_i64())
            .ok_or_else(|| field("extrema[].t"))?;
        let token = token_of(
            obj.get("value").ok_or_else(|| field("extrema[].value"))?,
            "extrema[].value",
        )?;
        extrema.push(ReportExtremum {
            measure,
            kind,
            t,
            token,
        });
    }

    Ok(ReportDoc {
        question_id,
        points,
        extrema,
    })
}
