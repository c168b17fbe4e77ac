//! Information-theoretic and complexity measures for categorical
//! opinion-poll time series.
//!
//! The pipeline: parse a poll CSV into a [`series::PollSeries`],
//! normalize each percentage row into a probability
//! [`measures::Distribution`], evaluate Shannon entropy, reciprocal
//! information, disorder/order, SDL and LMC complexities,
//! disequilibrium, and discrete Fisher information at every time point
//! ([`series::compute_series`]), locate global extrema, and serialize a
//! byte-stable JSON report ([`report::write_report`]) that plot
//! extraction ([`plot`]) projects without re-rounding.

pub mod measures;
pub mod plot;
pub mod report;
pub mod series;

pub use measures::{
    measure_vector, AnalysisConfig, Distribution, Measure, MeasureError, MeasureValue,
    MeasureVector, SingularityPolicy,
};
pub use report::{read_report, write_report, ReportDoc, ReportError};
pub use series::{
    compute_series, distribution_from_shares, find_extrema, normalize_row, parse_poll_csv,
    ExtremumKind, ExtremumRecord, MeasurePoint, MeasureSeries, NormalizeError, ParseError, PollRow,
    PollSeries, SeriesError,
};
