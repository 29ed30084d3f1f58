//! Batch verification front end.
//!
//! Exit codes: 0 all checks pass; 1 at least one check fails (report is
//! still emitted); 2 configuration or usage errors; 3 internal errors.

mod config;
mod emit;
mod suites;

use std::io::Write;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};

#[derive(Parser)]
#[command(
    name = "ywkit",
    version,
    about = "Exact verification suites for truncated Yangians, their twisted and super \
             variants, finite-dimensional modules, and integrable-model Fock sectors"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a verification suite and emit a deterministic report.
    Verify(VerifyArgs),
    /// Build an evaluation tensor module and export it as JSON.
    ExportModule(ExportArgs),
}

#[derive(Args)]
struct VerifyArgs {
    /// Suite name: ybe | poisson | center | drinfeld-fit | twist | fold |
    /// super | reps | nls | all
    suite: String,
    /// Declarative TOML configuration file
    #[arg(long)]
    config: Option<String>,
    /// Signature override, e.g. `2` or `1|2`
    #[arg(long)]
    sig: Option<String>,
    /// Truncation level override
    #[arg(long)]
    p: Option<u32>,
    /// Twist class override: plus | minus
    #[arg(long)]
    theta: Option<String>,
    /// Report output path (stdout when omitted)
    #[arg(long)]
    out: Option<String>,
    /// Report format: json | text
    #[arg(long, default_value = "json")]
    format: String,
    /// Parallel job width (default: YWKIT_JOBS or the CPU count)
    #[arg(long)]
    jobs: Option<usize>,
}

#[derive(Args)]
struct ExportArgs {
    /// Signature, e.g. `2` or `1|1`
    #[arg(long, default_value = "2")]
    sig: String,
    /// Comma-separated rational evaluation parameters, e.g. `0,5` or `1/2`
    #[arg(long)]
    params: String,
    /// Output path (stdout when omitted)
    #[arg(long)]
    out: Option<String>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = std::panic::catch_unwind(|| match cli.command {
        Command::Verify(args) => verify(args),
        Command::ExportModule(args) => export_module(args),
    });
    match result {
        Ok(code) => code,
        Err(panic) => {
            let msg = panic
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| panic.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "unknown panic".into());
            eprintln!("internal error: {msg}");
            ExitCode::from(3)
        }
    }
}

fn verify(args: VerifyArgs) -> ExitCode {
    if !suites::SUITES.contains(&args.suite.as_str()) {
        eprintln!(
            "configuration error: unknown suite `{}` (expected one of {})",
            args.suite,
            suites::SUITES.join(", ")
        );
        return ExitCode::from(2);
    }
    if args.format != "json" && args.format != "text" {
        eprintln!("configuration error: format must be `json` or `text`");
        return ExitCode::from(2);
    }
    let file_cfg = match &args.config {
        Some(path) => match config::load_file(path) {
            Ok(c) => c,
            Err(e) => {
                eprintln!("{e}");
                return ExitCode::from(2);
            }
        },
        None => config::FileConfig::default(),
    };
    let overrides = config::Overrides {
        sig: args.sig.clone(),
        p: args.p,
        theta: args.theta.clone(),
    };
    let resolved = match config::resolve(&args.suite, &file_cfg, &overrides) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("{e}");
            return ExitCode::from(2);
        }
    };
    let jobs = args
        .jobs
        .or_else(|| {
            std::env::var("YWKIT_JOBS")
                .ok()
                .and_then(|v| v.parse().ok())
        })
        .unwrap_or_else(|| {
            std::thread::available_parallelism()
                .map(|n| n.get())
                .unwrap_or(1)
        });
    let started = Instant::now();
    let report = match suites::run_suite(&args.suite, &resolved, jobs) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("configuration error: {e}");
            return ExitCode::from(2);
        }
    };
    let wall = started.elapsed().as_millis();
    let all_passed = report.all_passed();
    let config_value = serde_json::to_value(&resolved).expect("config serializes");
    let doc = emit::document(report, config_value, wall);
    let rendered = match args.format.as_str() {
        "json" => emit::to_json(&doc),
        _ => emit::to_text(&doc),
    };
    if let Err(e) = write_output(args.out.as_deref(), &rendered) {
        eprintln!("internal error: {e}");
        return ExitCode::from(3);
    }
    if all_passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn export_module(args: ExportArgs) -> ExitCode {
    let sig: ywkit::Signature = match args.sig.parse() {
        Ok(s) => s,
        Err(e) => {
            eprintln!("configuration error: {e}");
            return ExitCode::from(2);
        }
    };
    let params: Result<Vec<ywkit::Scalar>, _> =
        args.params.split(',').map(|s| s.trim().parse()).collect();
    let params = match params {
        Ok(p) if !p.is_empty() => p,
        Ok(_) => {
            eprintln!("configuration error: at least one evaluation parameter is required");
            return ExitCode::from(2);
        }
        Err(e) => {
            eprintln!("configuration error: {e}");
            return ExitCode::from(2);
        }
    };
    let module = match ywkit::reps::tensor_modules(sig, params) {
        Ok(m) => m,
        Err(e) => {
            eprintln!("configuration error: {e}");
            return ExitCode::from(2);
        }
    };
    let json = ywkit::reps::export_module(&module);
    let mut rendered = serde_json::to_string_pretty(&json).expect("module export serializes");
    rendered.push('\n');
    if let Err(e) = write_output(args.out.as_deref(), &rendered) {
        eprintln!("internal error: {e}");
        return ExitCode::from(3);
    }
    ExitCode::SUCCESS
}

fn write_output(path: Option<&str>, content: &str) -> std::io::Result<()> {
    match path {
        Some(p) => std::fs::write(p, content),
        None => std::io::stdout().write_all(content.as_bytes()),
    }
}
