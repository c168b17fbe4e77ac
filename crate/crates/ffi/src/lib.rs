//! C ABI for the pollinfo measure library.
//!
//! Conventions:
//! - Every fallible function returns a [`PollinfoStatus`]; results land
//!   in out-parameters that are written only on `Ok`.
//! - The analysis configuration is an opaque handle created by
//!   [`pollinfo_config_new`] and released by [`pollinfo_config_free`].
//!   A null config pointer means "defaults" wherever one is accepted.
//! - Saturated measures (`I` at zero entropy, Fisher over a zero bin
//!   under the saturate policy) are reported as `+INFINITY`.
//! - Strings returned through out-parameters are heap-allocated and must
//!   be released with [`pollinfo_string_free`]; `pollinfo_version` and
//!   `pollinfo_status_message` return static storage that must not be
//!   freed.

use std::ffi::{c_char, CStr, CString};
use std::ptr;

use pollinfo::measures::{measure_vector, AnalysisConfig, Distribution, SingularityPolicy};
use pollinfo::report::write_report;
use pollinfo::series::{compute_series, parse_poll_csv};

/// Result code for every fallible entry point.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PollinfoStatus {
    /// Success.
    Ok = 0,
    /// A required pointer argument was null.
    NullArgument = 1,
    /// A configuration value was rejected (base, exponents, tolerance).
    InvalidConfig = 2,
    /// The probability array was rejected (length, range, normalization).
    InvalidDistribution = 3,
    /// The CSV input failed to parse or a row failed ingestion.
    ParseFailed = 4,
    /// Measure evaluation failed (singular value under the error policy,
    /// or an internal invariant violation).
    ComputeFailed = 5,
    /// A string argument was not valid UTF-8.
    InvalidUtf8 = 6,
}

/// Opaque analysis configuration.
pub struct PollinfoConfig {
    inner: AnalysisConfig,
}

/// The full measure battery for one distribution.
#[repr(C)]
#[derive(Debug, Clone, Copy)]
pub struct PollinfoMeasures {
    /// Shannon entropy S in units of the configured base.
    pub entropy: f64,
    /// S_max = log n.
    pub max_entropy: f64,
    /// I = 1/S; +INFINITY when saturated.
    pub information: f64,
    /// Disorder = S/S_max.
    pub disorder: f64,
    /// Order = 1 - disorder.
    pub order: f64,
    /// SDL complexity disorder^alpha * order^beta.
    pub sdl: f64,
    /// Disequilibrium D.
    pub disequilibrium: f64,
    /// LMC complexity C = S * D.
    pub lmc: f64,
    /// Discrete Fisher information; +INFINITY when saturated.
    pub fisher: f64,
}

/// Allocates a configuration with the defaults: base 10, alpha = beta = 1,
/// row tolerance 5.0, saturate on division by zero.
#[no_mangle]
pub extern "C" fn pollinfo_config_new() -> *mut PollinfoConfig {
    Box::into_raw(Box::new(PollinfoConfig {
        inner: AnalysisConfig::default(),
    }))
}

/// Releases a configuration. Null is a no-op.
///
/// # Safety
/// `config` must be null or a pointer from [`pollinfo_config_new`] not
/// yet freed.
#[no_mangle]
pub unsafe extern "C" fn pollinfo_config_free(config: *mut PollinfoConfig) {
    if !config.is_null() {
        drop(Box::from_raw(config));
    }
}

unsafe fn config_or_default(config: *const PollinfoConfig) -> AnalysisConfig {
    if config.is_null() {
        AnalysisConfig::default()
    } else {
        (*config).inner
    }
}

unsafe fn update_config(
    config: *mut PollinfoConfig,
    apply: impl FnOnce(&mut AnalysisConfig),
) -> PollinfoStatus {
    if config.is_null() {
        return PollinfoStatus::NullArgument;
    }
    let mut candidate = (*config).inner;
    apply(&mut candidate);
    if candidate.validate().is_err() {
        return PollinfoStatus::InvalidConfig;
    }
    (*config).inner = candidate;
    PollinfoStatus::Ok
}

/// Sets the entropy logarithm base (must be finite and > 1).
///
/// # Safety
/// `config` must be a live pointer from [`pollinfo_config_new`].
#[no_mangle]
pub unsafe extern "C" fn pollinfo_config_set_base(
    config: *mut PollinfoConfig,
    base: f64,
) -> PollinfoStatus {
    update_config(config, |c| c.log_base = base)
}

/// Sets the SDL exponents (each must be finite and >= 0).
///
/// # Safety
/// `config` must be a live pointer from [`pollinfo_config_new`].
#[no_mangle]
pub unsafe extern "C" fn pollinfo_config_set_exponents(
    config: *mut PollinfoConfig,
    alpha: f64,
    beta: f64,
) -> PollinfoStatus {
    update_config(config, |c| {
        c.alpha = alpha;
        c.beta = beta;
    })
}

/// Sets the allowed deviation of a raw percentage row's sum from 100.
///
/// # Safety
/// `config` must be a live pointer from [`pollinfo_config_new`].
#[no_mangle]
pub unsafe extern "C" fn pollinfo_config_set_tolerance(
    config: *mut PollinfoConfig,
    tolerance: f64,
) -> PollinfoStatus {
    update_config(config, |c| c.normalization_tolerance = tolerance)
}

/// Chooses the division-by-zero policy: saturate to +INFINITY (true,
/// the default) or fail with `ComputeFailed` (false).
///
/// # Safety
/// `config` must be a live pointer from [`pollinfo_config_new`].
#[no_mangle]
pub unsafe extern "C" fn pollinfo_config_set_saturate(
    config: *mut PollinfoConfig,
    saturate: bool,
) -> PollinfoStatus {
    update_config(config, |c| {
        c.singularity_policy = if saturate {
            SingularityPolicy::Saturate
        } else {
            SingularityPolicy::Error
        };
    })
}

/// Evaluates the measure battery on `probs[0..len]`, which must hold
/// probabilities in [0, 1] summing to 1 within 1e-9, with 2 <= len <= 64.
///
/// # Safety
/// `probs` must point to `len` readable doubles and `out` to writable
/// storage for one [`PollinfoMeasures`]; `config` must be null or live.
#[no_mangle]
pub unsafe extern "C" fn pollinfo_measures_compute(
    probs: *const f64,
    len: usize,
    config: *const PollinfoConfig,
    out: *mut PollinfoMeasures,
) -> PollinfoStatus {
    if probs.is_null() || out.is_null() {
        return PollinfoStatus::NullArgument;
    }
    if !(2..=64).contains(&len) {
        return PollinfoStatus::InvalidDistribution;
    }
    let config = config_or_default(config);
    if config.validate().is_err() {
        return PollinfoStatus::InvalidConfig;
    }
    let slice = std::slice::from_raw_parts(probs, len);
    let dist = match Distribution::from_probs(slice.to_vec()) {
        Ok(d) => d,
        Err(_) => return PollinfoStatus::InvalidDistribution,
    };
    let vector = match measure_vector(&dist, &config) {
        Ok(v) => v,
        Err(_) => return PollinfoStatus::ComputeFailed,
    };
    ptr::write(
        out,
        PollinfoMeasures {
            entropy: vector.entropy,
            max_entropy: vector.max_entropy,
            information: vector.information.to_f64(),
            disorder: vector.disorder,
            order: vector.order,
            sdl: vector.sdl,
            disequilibrium: vector.disequilibrium,
            lmc: vector.lmc,
            fisher: vector.fisher.to_f64(),
        },
    );
    PollinfoStatus::Ok
}

/// Parses poll CSV text, evaluates the measure series, and returns the
/// report JSON through `out_json`.
///
/// The returned string must be released with [`pollinfo_string_free`].
///
/// # Safety
/// `csv` and `question_id` must be null-terminated strings; `out_json`
/// must be writable; `config` must be null or live.
#[no_mangle]
pub unsafe extern "C" fn pollinfo_analyze_csv(
    csv: *const c_char,
    question_id: *const c_char,
    config: *const PollinfoConfig,
    out_json: *mut *mut c_char,
) -> PollinfoStatus {
    if csv.is_null() || question_id.is_null() || out_json.is_null() {
        return PollinfoStatus::NullArgument;
    }
    let Ok(csv) = CStr::from_ptr(csv).to_str() else {
        return PollinfoStatus::InvalidUtf8;
    };
    let Ok(question_id) = CStr::from_ptr(question_id).to_str() else {
        return PollinfoStatus::InvalidUtf8;
    };
    let config = config_or_default(config);
    if config.validate().is_err() {
        return PollinfoStatus::InvalidConfig;
    }
    let series = match parse_poll_csv(csv, question_id) {
        Ok(s) => s,
        Err(_) => return PollinfoStatus::ParseFailed,
    };
    let measures = match compute_series(&series, &config) {
        Ok(m) => m,
        Err(e) => {
            return match e {
                pollinfo::series::SeriesError::Normalize { .. } => PollinfoStatus::ParseFailed,
                _ => PollinfoStatus::ComputeFailed,
            }
        }
    };
    let json = write_report(&measures);
    let Ok(json) = CString::new(json) else {
        return PollinfoStatus::ComputeFailed;
    };
    *out_json = json.into_raw();
    PollinfoStatus::Ok
}

/// Releases a string returned by this library. Null is a no-op.
///
/// # Safety
/// `text` must be null or a pointer produced by this library and not
/// yet freed.
#[no_mangle]
pub unsafe extern "C" fn pollinfo_string_free(text: *mut c_char) {
    if !text.is_null() {
        drop(CString::from_raw(text));
    }
}

/// Library version as a static string; do not free.
#[no_mangle]
pub extern "C" fn pollinfo_version() -> *const c_char {
    const VERSION: &str = concat!(env!("CARGO_PKG_VERSION"), "\0");
    VERSION.as_ptr().cast()
}

/// Static description of a status code; do not free.
#[no_mangle]
pub extern "C" fn pollinfo_status_message(status: PollinfoStatus) -> *const c_char {
    let message: &'static str = match status {
        PollinfoStatus::Ok => "ok\0",
        PollinfoStatus::NullArgument => "a required pointer argument was null\0",
        PollinfoStatus::InvalidConfig => "configuration value rejected\0",
        PollinfoStatus::InvalidDistribution => "probability array rejected\0",
        PollinfoStatus::ParseFailed => "CSV input rejected\0",
        PollinfoStatus::ComputeFailed => "measure evaluation failed\0",
        PollinfoStatus::InvalidUtf8 => "string argument was not valid UTF-8\0",
    };
    message.as_ptr().cast()
}
