//! Command-line front end: analyze poll CSVs into measure reports,
//! project reports into plot artifacts, and evaluate one-shot scenarios.
//!
//! Exit codes: 0 success, 1 usage error, 2 data error (unreadable or
//! malformed input, rejected rows), 3 internal invariant violation.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};

use pollinfo::measures::{
    measure_vector, AnalysisConfig, Measure, MeasureError, SingularityPolicy,
};
use pollinfo::plot::{plot_csv, plot_svg, smax_companion_csv};
use pollinfo::report::{format_sig10, read_report, write_report};
use pollinfo::series::{compute_series, distribution_from_shares, parse_poll_csv, SeriesError};

#[derive(Parser)]
#[command(
    name = "pollinfo",
    version,
    about = "Entropy, order/disorder, and complexity measures for opinion-poll time series"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze poll CSV files into measure-series JSON reports
    Analyze {
        /// Poll CSV files (header `t,<label>,...`, one percentage row per poll)
        #[arg(required = true)]
        inputs: Vec<PathBuf>,
        #[command(flatten)]
        config: ConfigArgs,
        /// Directory receiving reports and the run manifest
        #[arg(long, default_value = ".")]
        out: PathBuf,
    },
    /// Project a report into a plot CSV or a static SVG chart
    Plot {
        /// Report JSON written by `analyze`
        report: PathBuf,
        /// Measure to plot: S, S_max, I, delta, omega, gamma, D, C, F
        measure: String,
        /// Plot artifact format
        #[arg(long, value_enum, default_value_t = PlotFormat::Csv)]
        format: PlotFormat,
        /// Directory receiving the artifact
        #[arg(long, default_value = ".")]
        out: PathBuf,
    },
    /// Evaluate the measure battery on a single distribution
    Scenario {
        /// Outcome shares: probabilities (sum near 1) or percentages (sum near 100)
        #[arg(required = true)]
        values: Vec<f64>,
        #[command(flatten)]
        config: ConfigArgs,
    },
}

#[derive(Args)]
struct ConfigArgs {
    /// Logarithm base: 2 (bits), e (nats), or 10 (hartleys)
    #[arg(long, default_value = "10", value_parser = parse_base)]
    base: f64,
    /// Disorder exponent in gamma = delta^alpha * omega^beta
    #[arg(long, default_value_t = 1.0)]
    alpha: f64,
    /// Order exponent in gamma = delta^alpha * omega^beta
    #[arg(long, default_value_t = 1.0)]
    beta: f64,
    /// Allowed deviation of a row's percentage sum from 100
    #[arg(long, default_value_t = 5.0)]
    tolerance: f64,
    /// Handling of division by zero in I and F
    #[arg(long, value_enum, default_value_t = SingularityArg::Saturate)]
    singularity: SingularityArg,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SingularityArg {
    Saturate,
    Error,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum PlotFormat {
    Csv,
    Svg,
}

fn parse_base(text: &str) -> Result<f64, String> {
    match text {
        "2" => Ok(2.0),
        "e" => Ok(std::f64::consts::E),
        "10" => Ok(10.0),
        _ => Err("must be one of 2, e, 10".to_string()),
    }
}

impl ConfigArgs {
    fn build(&self) -> Result<AnalysisConfig, CliError> {
        let config = AnalysisConfig {
            log_base: self.base,
            alpha: self.alpha,
            beta: self.beta,
            normalization_tolerance: self.tolerance,
            singularity_policy: match self.singularity {
                SingularityArg::Saturate => SingularityPolicy::Saturate,
                SingularityArg::Error => SingularityPolicy::Error,
            },
        };
        config
            .validate()
            .map_err(|e| CliError::Usage(e.to_string()))?;
        Ok(config)
    }
}

enum CliError {
    Usage(String),
    Data(String),
    Internal(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Data(_) => 2,
            CliError::Internal(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Usage(m) | CliError::Data(m) | CliError::Internal(m) => m,
        }
    }
}

/// Distinguishes self-inconsistency in computed values (an internal bug)
/// from data problems in the input.
fn from_series_error(path: &Path, err: SeriesError) -> CliError {
    match &err {
        SeriesError::Measure {
            source: MeasureError::InvariantViolation(_),
            ..
        } => CliError::Internal(format!("{}: {err}", path.display())),
        SeriesError::Config(_) => CliError::Usage(err.to_string()),
        _ => CliError::Data(format!("{}: {err}", path.display())),
    }
}

fn file_stem(path: &Path) -> Result<String, CliError> {
    path.file_stem()
        .and_then(|s| s.to_str())
        .map(str::to_string)
        .ok_or_else(|| {
            CliError::Usage(format!(
                "{}: cannot derive an identifier from the file name",
                path.display()
            ))
        })
}

fn read_input(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::Data(format!("{}: {e}", path.display())))
}

fn write_output(path: &Path, contents: &str) -> Result<(), CliError> {
    fs::write(path, contents).map_err(|e| CliError::Data(format!("{}: {e}", path.display())))?;
    println!("wrote {}", path.display());
    Ok(())
}

fn ensure_out_dir(dir: &Path) -> Result<(), CliError> {
    fs::create_dir_all(dir).map_err(|e| CliError::Data(format!("{}: {e}", dir.display())))
}

/// Provenance record written next to analyze outputs: what ran, on what,
/// with which effective configuration. Wall-clock data lives here so the
/// reports themselves stay byte-stable.
struct RunManifest {
    generated_at: String,
    inputs: Vec<String>,
    config: AnalysisConfig,
    outputs: Vec<String>,
}

impl RunManifest {
    fn to_json(&self) -> String {
        let manifest = serde_json::json!({
            "tool": "pollinfo",
            "version": env!("CARGO_PKG_VERSION"),
            "generated_at": self.generated_at,
            "inputs": self.inputs,
            "config": {
                "log_base": self.config.log_base,
                "alpha": self.config.alpha,
                "beta": self.config.beta,
                "normalization_tolerance": self.config.normalization_tolerance,
                "singularity_policy": self.config.singularity_policy.as_str(),
            },
            "outputs": self.outputs,
        });
        let mut text =
            serde_json::to_string_pretty(&manifest).expect("manifest serializes to JSON");
        text.push('\n');
        text
    }
}

fn cmd_analyze(inputs: &[PathBuf], args: &ConfigArgs, out: &Path) -> Result<(), CliError> {
    let config = args.build()?;

    // Parse and compute everything before writing anything, so a bad
    // input never leaves partial outputs behind.
    let mut reports: Vec<(PathBuf, String)> = Vec::with_capacity(inputs.len());
    for input in inputs {
        let stem = file_stem(input)?;
        let report_path = out.join(format!("{stem}.json"));
        if reports.iter().any(|(p, _)| *p == report_path) {
            return Err(CliError::Usage(format!(
                "input file names collide on {}",
                report_path.display()
            )));
        }
        let text = read_input(input)?;
        let series = parse_poll_csv(&text, &stem)
            .map_err(|e| CliError::Data(format!("{}: {e}", input.display())))?;
        let measures = compute_series(&series, &config).map_err(|e| from_series_error(input, e))?;
        reports.push((report_path, write_report(&measures)));
    }

    ensure_out_dir(out)?;
    let mut outputs = Vec::with_capacity(reports.len() + 1);
    for (path, json) in &reports {
        write_output(path, json)?;
        outputs.push(path.display().to_string());
    }

    let manifest_path = out.join("run_manifest.json");
    outputs.push(manifest_path.display().to_string());
    let manifest = RunManifest {
        generated_at: chrono::Utc::now().to_rfc3339_opts(chrono::SecondsFormat::Secs, true),
        inputs: inputs.iter().map(|p| p.display().to_string()).collect(),
        config,
        outputs,
    };
    write_output(&manifest_path, &manifest.to_json())
}

fn cmd_plot(report: &Path, measure: &str, format: PlotFormat, out: &Path) -> Result<(), CliError> {
    let measure: Measure = measure
        .parse()
        .map_err(|e: MeasureError| CliError::Usage(e.to_string()))?;
    let stem = file_stem(report)?;
    let text = read_input(report)?;
    let doc =
        read_report(&text).map_err(|e| CliError::Data(format!("{}: {e}", report.display())))?;

    ensure_out_dir(out)?;
    match format {
        PlotFormat::Csv => {
            let path = out.join(format!("{stem}_{measure}.csv"));
            write_output(&path, &plot_csv(&doc, measure))?;
            if measure == Measure::S {
                let companion = out.join(format!("{stem}_S_max.csv"));
                write_output(&companion, &smax_companion_csv(&doc))?;
            }
        }
        PlotFormat::Svg => {
            let path = out.join(format!("{stem}_{measure}.svg"));
            write_output(&path, &plot_svg(&doc, measure))?;
        }
    }
    Ok(())
}

fn cmd_scenario(values: &[f64], args: &ConfigArgs) -> Result<(), CliError> {
    if !(2..=16).contains(&values.len()) {
        return Err(CliError::Usage(format!(
            "scenario takes between 2 and 16 values, got {}",
            values.len()
        )));
    }
    let config = args.build()?;
    let dist = distribution_from_shares(values, config.normalization_tolerance)
        .map_err(|e| CliError::Data(e.to_string()))?;
    let vector = measure_vector(&dist, &config).map_err(|e| match e {
        MeasureError::InvariantViolation(_) => CliError::Internal(e.to_string()),
        MeasureError::SingularInformation | MeasureError::SingularFisher { .. } => {
            CliError::Data(e.to_string())
        }
        other => CliError::Usage(other.to_string()),
    })?;
    vector
        .check_invariants(dist.len())
        .map_err(|e| CliError::Internal(e.to_string()))?;

    for measure in Measure::ALL {
        let value = vector.value_of(measure);
        let rendered = match value.finite() {
            Some(x) => format_sig10(x),
            None => "inf".to_string(),
        };
        println!("{} = {}", measure.as_str(), rendered);
    }
    let drop = (vector.max_entropy - vector.entropy) / vector.max_entropy * 100.0;
    println!("drop = {}%", format_sig10(drop));
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };

    let result = match &cli.command {
        Command::Analyze {
            inputs,
            config,
            out,
        } => cmd_analyze(inputs, config, out),
        Command::Plot {
            report,
            measure,
            format,
            out,
        } => cmd_plot(report, measure, *format, out),
        Command::Scenario { values, config } => cmd_scenario(values, config),
    };

    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("pollinfo: {}", e.message());
            ExitCode::from(e.exit_code())
        }
    }
}
