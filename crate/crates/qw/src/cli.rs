//! Command-line front end: expression evaluation, verification sweeps, and
//! the cocycle solver.
//!
//! - Exit codes are a stable contract: 0 = success, 1 = verification
//!   failure, 2 = usage, parse, or configuration error.
//! - All commands are deterministic given their flags; randomness enters
//!   only through `--seed`.
//! - `--format json` emits the report types from the verify module
//!   unchanged; `latex` applies to `eval` output and falls back to text for
//!   reports.
//! - The relation mode is always an explicit per-command flag, so a
//!   strict_paper run never leaks into the next invocation.
//!
//! The `cmd_*` functions return captured output instead of printing, which
//! keeps them directly testable; `run` is the thin binary entry point.

use clap::builder::PossibleValue;
use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::rewrite::RelationMode;
use crate::textio::render::{render, OutputFormat};
use crate::textio::{evaluate, parse};
use crate::verify::{run_solve, run_suite, SolveReport, Suite, SuiteReport};

impl ValueEnum for RelationMode {
    fn value_variants<'a>() -> &'a [Self] {
        &[RelationMode::Central, RelationMode::StrictPaper]
    }

    fn to_possible_value(&self) -> Option<PossibleValue> {
        Some(PossibleValue::new(self.as_str()))
    }
}

impl ValueEnum for OutputFormat {
    fn value_variants<'a>() -> &'a [Self] {
        &[OutputFormat::Text, OutputFormat::Json, OutputFormat::Latex]
    }

    fn to_possible_value(&self) -> Option<PossibleValue> {
        Some(PossibleValue::new(self.as_str()))
    }
}

impl ValueEnum for Suite {
    fn value_variants<'a>() -> &'a [Self] {
        &Suite::ALL
    }

    fn to_possible_value(&self) -> Option<PossibleValue> {
        Some(PossibleValue::new(self.as_str()))
    }
}

/// Resolved configuration shared by every subcommand.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliConfig {
    pub mode: RelationMode,
    pub output_format: OutputFormat,
    pub window: i64,
    pub seed: u64,
    pub samples: usize,
}

impl Default for CliConfig {
    fn default() -> Self {
        CliConfig {
            mode: RelationMode::Central,
            output_format: OutputFormat::Text,
            window: 4,
            seed: 0,
            samples: 500,
        }
    }
}

#[derive(Args, Debug, Clone)]
struct ConfigArgs {
    /// Handling of the central element when it crosses T
    #[arg(long, value_enum, default_value_t = RelationMode::Central)]
    mode: RelationMode,

    /// Output format
    #[arg(long = "format", value_enum, default_value_t = OutputFormat::Text)]
    format: OutputFormat,

    /// Index window for exhaustive sweeps (positive)
    #[arg(long, env = "QW_DEFAULT_WINDOW", default_value_t = 4)]
    window: i64,

    /// Seed for the sampled checks
    #[arg(long, default_value_t = 0)]
    seed: u64,

    /// Number of random samples for the sampled checks (positive)
    #[arg(long, default_value_t = 500)]
    samples: usize,
}

impl From<ConfigArgs> for CliConfig {
    fn from(a: ConfigArgs) -> Self {
        CliConfig {
            mode: a.mode,
            output_format: a.format,
            window: a.window,
            seed: a.seed,
            samples: a.samples,
        }
    }
}

#[derive(Parser, Debug)]
#[command(
    name = "qw",
    version,
    about = "Exact symbolic kernel for a q-deformed W(2,2) algebra and its Hopf structure"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Parse and evaluate an expression, then render it
    Eval {
        /// Expression, e.g. "[L(2),W(-2)]_q" or "Delta(L(1))"
        expr: String,
        #[command(flatten)]
        cfg: ConfigArgs,
    },
    /// Run one verification suite over the configured window
    Verify {
        /// Suite to run
        #[arg(value_enum)]
        suite: Suite,
        #[command(flatten)]
        cfg: ConfigArgs,
    },
    /// Solve the cocycle system on the window and compare with the closed form
    SolveCocycle {
        #[command(flatten)]
        cfg: ConfigArgs,
    },
}

/// Captured outcome of one command invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CmdResult {
    pub exit_code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl CmdResult {
    fn success(stdout: String) -> Self {
        CmdResult {
            exit_code: 0,
            stdout,
            stderr: String::new(),
        }
    }

    fn usage_error(message: String) -> Self {
        CmdResult {
            exit_code: 2,
            stdout: String::new(),
            stderr: message,
        }
    }
}

fn validate_common(cfg: &CliConfig) -> Option<CmdResult> {
    if cfg.window < 1 {
        return Some(CmdResult::usage_error(format!(
            "error: window must be positive, got {}\n",
            cfg.window
        )));
    }
    if cfg.samples < 1 {
        return Some(CmdResult::usage_error(
            "error: samples must be positive\n".to_string(),
        ));
    }
    None
}

/// Evaluate an expression and render the value.
pub fn cmd_eval(expr: &str, cfg: &CliConfig) -> CmdResult {
    let ast = match parse(expr) {
        Ok(ast) => ast,
        Err(e) => {
            return CmdResult::usage_error(format!("error: syntax: {}\n", e));
        }
    };
    match evaluate(&ast, cfg.mode) {
        Ok(value) => CmdResult::success(format!("{}\n", render(&value, cfg.output_format))),
        Err(e) => CmdResult::usage_error(format!("error: evaluation: {}\n", e)),
    }
}

fn suite_report_text(report: &SuiteReport) -> String {
    let mut out = String::new();
    out.push_str(&format!("suite: {}\n", report.suite));
    out.push_str(&format!("mode: {}\n", report.mode));
    out.push_str(&format!(
        "window: {}  seed: {}  samples: {}\n",
        report.window, report.seed, report.samples
    ));
    out.push_str(&format!(
        "checks: {} total, {} failed\n",
        report.total, report.failures
    ));
    if let Some(first) = report.first_failure() {
        out.push_str(&format!(
            "first failure: {} at {}\n",
            first.check, first.instance
        ));
        if let Some(ce) = &first.counterexample {
            out.push_str(&format!("counterexample: {}\n", ce));
        }
    }
    out.push_str(&format!(
        "result: {}\n",
        if report.pass { "PASS" } else { "FAIL" }
    ));
    out
}

/// Run a verification suite and render its report.
pub fn cmd_verify(suite: Suite, cfg: &CliConfig) -> CmdResult {
    if let Some(err) = validate_common(cfg) {
        return err;
    }
    let report = run_suite(suite, cfg.mode, cfg.window, cfg.seed, cfg.samples);
    let stdout = match cfg.output_format {
        OutputFormat::Json => {
            let mut s = serde_json::to_string_pretty(&report)
                .expect("suite reports always serialize");
            s.push('\n');
            s
        }
        OutputFormat::Text | OutputFormat::Latex => suite_report_text(&report),
    };
    CmdResult {
        exit_code: if report.pass { 0 } else { 1 },
        stdout,
        stderr: String::new(),
    }
}

fn solve_report_text(report: &SolveReport) -> String {
    let mut out = String::new();
    out.push_str(&format!("window: {}\n", report.window));
    out.push_str(&format!(
        "unknowns: {}  rows: {}\n",
        report.unknowns.len(),
        report.rows
    ));
    out.push_str(&format!("nullspace dimension: {}\n", report.nullspace_dim));
    out.push_str(&format!(
        "gauge-fixed dimension: {}\n",
        report.gauge_fixed_dim
    ));
    if let Some(m) = &report.multiple {
        out.push_str(&format!("multiple of closed form: {}\n", m));
    }
    if let Some(m) = &report.normalized_multiple {
        out.push_str(&format!("normalized multiple: {}\n", m));
    }
    if let Some(m) = &report.mismatch {
        out.push_str(&format!("mismatch: {}\n", m));
    }
    out.push_str(&format!(
        "result: {}\n",
        if report.pass { "PASS" } else { "FAIL" }
    ));
    out
}

/// Solve the cocycle system on the configured window.
pub fn cmd_solve_cocycle(cfg: &CliConfig) -> CmdResult {
    if let Some(err) = validate_common(cfg) {
        return err;
    }
    if cfg.window < 2 {
        return CmdResult::usage_error(format!(
            "error: the cocycle system needs window >= 2, got {}\n",
            cfg.window
        ));
    }
    let report = run_solve(cfg.window);
    let stdout = match cfg.output_format {
        OutputFormat::Json => {
            let mut s = serde_json::to_string_pretty(&report)
                .expect("solver reports always serialize");
            s.push('\n');
            s
        }
        OutputFormat::Text | OutputFormat::Latex => solve_report_text(&report),
    };
    CmdResult {
        exit_code: if report.pass { 0 } else { 1 },
        stdout,
        stderr: String::new(),
    }
}

fn dispatch(cli: Cli) -> CmdResult {
    match cli.command {
        Command::Eval { expr, cfg } => cmd_eval(&expr, &CliConfig::from(cfg)),
        Command::Verify { suite, cfg } => cmd_verify(suite, &CliConfig::from(cfg)),
        Command::SolveCocycle { cfg } => cmd_solve_cocycle(&CliConfig::from(cfg)),
    }
}

/// Binary entry point: parse arguments, run, print, and return the exit code.
pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // clap renders help and version on stdout with code 0, usage
            // errors on stderr; route through its printer either way
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let result = dispatch(cli);
    print!("{}", result.stdout);
    eprint!("{}", result.stderr);
    result.exit_code
}
