//! Poll time series: CSV ingestion, percentage-row normalization,
//! per-point measure evaluation, and global extrema.
//!
//! The input is a table of raw percentages per outcome at integer month
//! offsets `t`. Rows are renormalized to probabilities (poll tables often
//! drop a small undecided slice, so sums near but not exactly 100 are
//! accepted within a tolerance), the full measure battery is evaluated at
//! every `t`, and each measure's global minimum and maximum are recorded.

use std::str::FromStr;

use thiserror::Error;

use crate::measures::{
    measure_vector, AnalysisConfig, Distribution, Measure, MeasureError, MeasureValue,
    MeasureVector,
};

/// Errors from turning CSV text into a [`PollSeries`]. Row-level variants
/// carry 1-based line numbers into the original input.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum ParseError {
    #[error("input is empty: missing header line")]
    EmptyInput,
    #[error("line {line}: header must start with a \"t\" column, got \"{first}\"")]
    BadHeader { line: usize, first: String },
    #[error("line {line}: header needs at least 2 outcome labels, got {got}")]
    TooFewLabels { line: usize, got: usize },
    #[error("line {line}: outcome label in field {column} is empty")]
    EmptyLabel { line: usize, column: usize },
    #[error("line {line}: expected {expected} fields, found {found}")]
    RaggedRow {
        line: usize,
        expected: usize,
        found: usize,
    },
    #[error("line {line}: t value \"{cell}\" is not an integer")]
    BadT { line: usize, cell: String },
    #[error("line {line}: t = {t} does not increase over previous t = {prev}")]
    NonIncreasingT { line: usize, t: i64, prev: i64 },
    #[error("line {line}: field {column} value \"{cell}\" is not a number")]
    BadNumber {
        line: usize,
        column: usize,
        cell: String,
    },
    #[error("line {line}: percentage {value} in field {column} is outside [0, 100]")]
    PercentOutOfRange {
        line: usize,
        column: usize,
        value: f64,
    },
    #[error("no data rows after the header")]
    NoRows,
}

/// Errors from normalizing one raw percentage row into a [`Distribution`].
#[derive(Debug, Clone, PartialEq, Error)]
pub enum NormalizeError {
    #[error("raw value {value} at index {index} is negative or not finite")]
    BadValue { index: usize, value: f64 },
    #[error("row has no positive mass")]
    NoMass,
    #[error("row sums to {sum}, outside 100 +/- {tolerance}")]
    SumOutOfTolerance { sum: f64, tolerance: f64 },
    #[error("values sum to {sum}: expected about 1 (probabilities) or about 100 (percentages)")]
    UnclassifiedSum { sum: f64 },
    #[error(transparent)]
    Distribution(#[from] MeasureError),
}

/// Errors from building or evaluating a series. Row-scoped variants carry
/// the offending `t`.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum SeriesError {
    #[error("series needs at least 2 outcome labels, got {0}")]
    TooFewLabels(usize),
    #[error("series has no rows")]
    NoRows,
    #[error("t = {t} does not increase over previous t = {prev}")]
    NonIncreasingT { t: i64, prev: i64 },
    #[error("row t = {t}: expected {expected} values, found {found}")]
    RaggedRow {
        t: i64,
        expected: usize,
        found: usize,
    },
    #[error("row t = {t}: raw value {value} at index {index} is negative or not finite")]
    BadRawValue { t: i64, index: usize, value: f64 },
    #[error("invalid configuration: {0}")]
    Config(MeasureError),
    #[error("row t = {t}: {source}")]
    Normalize { t: i64, source: NormalizeError },
    #[error("row t = {t}: {source}")]
    Measure { t: i64, source: MeasureError },
}

/// One observed poll: month offset and raw percentages in label order.
#[derive(Debug, Clone, PartialEq)]
pub struct PollRow {
    pub t: i64,
    pub raw: Vec<f64>,
}

/// A time-indexed table of raw poll percentages for one question.
///
/// Invariants: at least 2 labels, strictly increasing `t`, every row as
/// wide as the label list with finite non-negative values.
#[derive(Debug, Clone, PartialEq)]
pub struct PollSeries {
    question_id: String,
    question_text: String,
    epoch_note: String,
    labels: Vec<String>,
    rows: Vec<PollRow>,
}

impl PollSeries {
    pub fn new(
        question_id: impl Into<String>,
        question_text: impl Into<String>,
        epoch_note: impl Into<String>,
        labels: Vec<String>,
        rows: Vec<PollRow>,
    ) -> Result<Self, SeriesError> {
        if labels.len() < 2 {
            return Err(SeriesError::TooFewLabels(labels.len()));
        }
        if rows.is_empty() {
            return Err(SeriesError::NoRows);
        }
        let mut prev: Option<i64> = None;
        for row in &rows {
            if let Some(prev) = prev {
                if row.t <= prev {
                    return Err(SeriesError::NonIncreasingT { t: row.t, prev });
                }
            }
            prev = Some(row.t);
            if row.raw.len() != labels.len() {
                return Err(SeriesError::RaggedRow {
                    t: row.t,
                    expected: labels.len(),
                    found: row.raw.len(),
                });
            }
            for (index, &value) in row.raw.iter().enumerate() {
                if !value.is_finite() || value < 0.0 {
                    return Err(SeriesError::BadRawValue {
                        t: row.t,
                        index,
                        value,
                    });
                }
            }
        }
        Ok(Self {
            question_id: question_id.into(),
            question_text: question_text.into(),
            epoch_note: epoch_note.into(),
            labels,
            rows,
        })
    }

    pub fn question_id(&self) -> &str {
        &self.question_id
    }

    pub fn question_text(&self) -> &str {
        &self.question_text
    }

    pub fn epoch_note(&self) -> &str {
        &self.epoch_note
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn rows(&self) -> &[PollRow] {
        &self.rows
    }
}

/// Whether an extremum is the global minimum or maximum.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExtremumKind {
    Min,
    Max,
}

impl ExtremumKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            ExtremumKind::Min => "min",
            ExtremumKind::Max => "max",
        }
    }
}

/// A global extremum of one scalar series.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Extremum {
    pub kind: ExtremumKind,
    pub t: i64,
    pub value: f64,
}

/// A global extremum of one measure over the series.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExtremumRecord {
    pub measure: Measure,
    pub kind: ExtremumKind,
    pub t: i64,
    pub value: MeasureValue,
}

/// The measure battery at one `t`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MeasurePoint {
    pub t: i64,
    pub measures: MeasureVector,
}

/// Measures evaluated over a whole [`PollSeries`], plus each measure's
/// global extrema. Points keep the source rows' `t` values and order.
#[derive(Debug, Clone, PartialEq)]
pub struct MeasureSeries {
    question_id: String,
    config_used: AnalysisConfig,
    points: Vec<MeasurePoint>,
    extrema: Vec<ExtremumRecord>,
}

impl MeasureSeries {
    pub fn question_id(&self) -> &str {
        &self.question_id
    }

    pub fn config_used(&self) -> &AnalysisConfig {
        &self.config_used
    }

    pub fn points(&self) -> &[MeasurePoint] {
        &self.points
    }

    pub fn extrema(&self) -> &[ExtremumRecord] {
        &self.extrema
    }
}

/// Normalizes one raw percentage row into probabilities by dividing by
/// the row sum.
///
/// The sum must stay within `tolerance` of 100; larger deviations are
/// rejected as data corruption rather than silently absorbed.
pub fn normalize_row(raw: &[f64], tolerance: f64) -> Result<Distribution, NormalizeError> {
    for (index, &value) in raw.iter().enumerate() {
        if !value.is_finite() || value < 0.0 {
            return Err(NormalizeError::BadValue { index, value });
        }
    }
    let sum: f64 = raw.iter().sum();
    if sum <= 0.0 {
        return Err(NormalizeError::NoMass);
    }
    if (sum - 100.0).abs() > tolerance {
        return Err(NormalizeError::SumOutOfTolerance { sum, tolerance });
    }
    Ok(Distribution::from_probs(
        raw.iter().map(|&v| v / sum).collect(),
    )?)
}

/// Builds a [`Distribution`] from raw shares given either as
/// probabilities (sum near 1) or percentages (sum near 100).
///
/// The percentage reading uses `tolerance` directly; the probability
/// reading scales it to `tolerance / 100`. Sums matching neither are
/// rejected.
pub fn distribution_from_shares(
    values: &[f64],
    tolerance: f64,
) -> Result<Distribution, NormalizeError> {
    for (index, &value) in values.iter().enumerate() {
        if !value.is_finite() || value < 0.0 {
            return Err(NormalizeError::BadValue { index, value });
        }
    }
    let sum: f64 = values.iter().sum();
    if sum <= 0.0 {
        return Err(NormalizeError::NoMass);
    }
    if (sum - 100.0).abs() <= tolerance {
        normalize_row(values, tolerance)
    } else if (sum - 1.0).abs() <= tolerance / 100.0 {
        let scaled: Vec<f64> = values.iter().map(|&v| v * 100.0).collect();
        normalize_row(&scaled, tolerance)
    } else {
        Err(NormalizeError::UnclassifiedSum { sum })
    }
}

/// Parses the poll CSV format into a [`PollSeries`].
///
/// Expected shape: optional `#` comment lines, then a header
/// `t,<label_1>,...,<label_n>`, then one `t,<pct_1>,...,<pct_n>` row per
/// poll with integer `t` strictly increasing and percentages in
/// `[0, 100]`. Comments of the form `# question: ...` and `# epoch: ...`
/// ahead of the header populate the series metadata. The CSV itself
/// carries no question identifier, so the caller supplies one.
pub fn parse_poll_csv(input: &str, question_id: &str) -> Result<PollSeries, ParseError> {
    let mut question_text = String::new();
    let mut epoch_note = String::new();
    let mut labels: Vec<String> = Vec::new();
    let mut rows: Vec<PollRow> = Vec::new();
    let mut prev_t: Option<i64> = None;

    for (index, raw_line) in input.lines().enumerate() {
        let line = index + 1;
        let text = raw_line.trim_end_matches('\r');
        if labels.is_empty() {
            if let Some(comment) = text.strip_prefix('#') {
                let comment = comment.trim();
                if let Some(value) = comment.strip_prefix("question:") {
                    question_text = value.trim().to_string();
                } else if let Some(value) = comment.strip_prefix("epoch:") {
                    epoch_note = value.trim().to_string();
                }
                continue;
            }
            let fields: Vec<&str> = text.split(',').map(str::trim).collect();
            if fields[0] != "t" {
                return Err(ParseError::BadHeader {
                    line,
                    first: fields[0].to_string(),
                });
            }
            if fields.len() < 3 {
                return Err(ParseError::TooFewLabels {
                    line,
                    got: fields.len() - 1,
                });
            }
            for (column, field) in fields.iter().enumerate().skip(1) {
                if field.is_empty() {
                    return Err(ParseError::EmptyLabel {
                        line,
                        column: column + 1,
                    });
                }
            }
            labels = fields[1..].iter().map(|s| s.to_string()).collect();
            continue;
        }

        let fields: Vec<&str> = text.split(',').map(str::trim).collect();
        if fields.len() != labels.len() + 1 {
            return Err(ParseError::RaggedRow {
                line,
                expected: labels.len() + 1,
                found: fields.len(),
            });
        }
        let t = i64::from_str(fields[0]).map_err(|_| ParseError::BadT {
            line,
            cell: fields[0].to_string(),
        })?;
        if let Some(prev) = prev_t {
            if t <= prev {
                return Err(ParseError::NonIncreasingT { line, t, prev });
            }
        }
        prev_t = Some(t);
        let mut raw = Vec::with_capacity(labels.len());
        for (offset, cell) in fields[1..].iter().enumerate() {
            let column = offset + 2;
            let value = f64::from_str(cell).map_err(|_| ParseError::BadNumber {
                line,
                column,
                cell: cell.to_string(),
            })?;
            if !value.is_finite() || !(0.0..=100.0).contains(&value) {
                return Err(ParseError::PercentOutOfRange {
                    line,
                    column,
                    value,
                });
            }
            raw.push(value);
        }
        rows.push(PollRow { t, raw });
    }

    if labels.is_empty() {
        return Err(ParseError::EmptyInput);
    }
    if rows.is_empty() {
        return Err(ParseError::NoRows);
    }
    Ok(PollSeries {
        question_id: question_id.to_string(),
        question_text,
        epoch_note,
        labels,
        rows,
    })
}

/// Global minimum and maximum of a scalar series, ties broken by the
/// smallest `t`. Values must be NaN-free; `+inf` (saturated measures)
/// participates normally. An empty input yields no records.
pub fn find_extrema(values: &[(i64, f64)]) -> Vec<Extremum> {
    let Some(&first) = values.first() else {
        return Vec::new();
    };
    let mut min = first;
    let mut max = first;
    for &(t, v) in &values[1..] {
        if v < min.1 || (v == min.1 && t < min.0) {
            min = (t, v);
        }
        if v > max.1 || (v == max.1 && t < max.0) {
            max = (t, v);
        }
    }
    vec![
        Extremum {
            kind: ExtremumKind::Min,
            t: min.0,
            value: min.1,
        },
        Extremum {
            kind: ExtremumKind::Max,
            t: max.0,
            value: max.1,
        },
    ]
}

/// Evaluates the measure battery at every row of `series` and locates
/// each measure's global extrema.
///
/// Each row goes through [`normalize_row`] with the configured tolerance,
/// then [`measure_vector`]; computed vectors are swept with
/// [`MeasureVector::check_invariants`]. Errors carry the offending `t`.
/// Extrema are recorded for every measure, minimum before maximum, in
/// report column order; saturated values compare as `+inf`.
pub fn compute_series(
    series: &PollSeries,
    config: &AnalysisConfig,
) -> Result<MeasureSeries, SeriesError> {
    config.validate().map_err(SeriesError::Config)?;
    let mut points = Vec::with_capacity(series.rows().len());
    for row in series.rows() {
        let dist = normalize_row(&row.raw, config.normalization_tolerance)
            .map_err(|source| SeriesError::Normalize { t: row.t, source })?;
        let measures = measure_vector(&dist, config)
            .map_err(|source| SeriesError::Measure { t: row.t, source })?;
        measures
            .check_invariants(dist.len())
            .map_err(|source| SeriesError::Measure { t: row.t, source })?;
        points.push(MeasurePoint { t: row.t, measures });
    }

    let mut extrema = Vec::with_capacity(Measure::ALL.len() * 2);
    for measure in Measure::ALL {
        let values: Vec<(i64, f64)> = points
            .iter()
            .map(|p| (p.t, p.measures.value_of(measure).to_f64()))
            .collect();
        for e in find_extrema(&values) {
            extrema.push(ExtremumRecord {
                measure,
                kind: e.kind,
                t: e.t,
                value: MeasureValue::from_f64(e.value),
            });
        }
    }

    Ok(MeasureSeries {
        question_id: series.question_id().to_string(),
        config_used: *config,
        points,
        extrema,
    })
}
