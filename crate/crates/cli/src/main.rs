use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{bail, Context as _, Result};
use clap::{Parser, Subcommand, ValueEnum};
use holim::graded::Window;
use holim::specfile::parse_spec;
use holim::suites::{run_suite, BuiltIn, RunParams, RunReport, Suite};

/// Exact check batteries for cobar constructions, homotopy limits of
/// comodule categories and their monoidal structure.
#[derive(Parser)]
#[command(name = "holim", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a check suite; exits 0 iff no check fails.
    Run(RunArgs),
    /// Print the spec-file serialization of a finite built-in algebra.
    Render {
        #[arg(long)]
        algebra: String,
    },
    /// List suites and built-in algebras.
    List,
}

#[derive(clap::Args)]
struct RunArgs {
    /// axioms, cobar, mc, holim, ainfty, monoidal, appendix, ext-example or all
    #[arg(long)]
    suite: String,
    /// A built-in name (z2, s3, exterior, sweedler, upper-triangular) or a spec-file path
    #[arg(long)]
    algebra: String,
    #[arg(long, default_value_t = 4)]
    truncation: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Laurent and polynomial exponent bounds for infinite algebras, as `L,P`
    #[arg(long, value_parser = parse_window)]
    window: Option<Window>,
    /// Random inputs per sampled check
    #[arg(long, default_value_t = 100)]
    samples: usize,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Kv,
}

fn parse_window(s: &str) -> Result<Window, String> {
    let (l, p) = s.split_once(',').ok_or("expected L,P")?;
    let l = l.trim().parse().map_err(|e| format!("laurent bound: {e}"))?;
    let p = p.trim().parse().map_err(|e| format!("polynomial bound: {e}"))?;
    Ok(Window::new(l, p))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn execute(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Run(args) => run(args),
        Command::Render { algebra } => {
            let b: BuiltIn = algebra.parse()?;
            match b.render() {
                Some(text) => print!("{text}"),
                None => bail!("`{b}` is infinite-dimensional and has no spec-file form"),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::List => {
            println!("suites:");
            for s in Suite::ALL {
                println!("  {s}");
            }
            println!("algebras:");
            for b in BuiltIn::ALL {
                println!("  {b}");
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn run(args: RunArgs) -> Result<ExitCode> {
    let suite: Suite = args.suite.parse()?;
    let params = RunParams {
        truncation: args.truncation,
        seed: args.seed,
        window: args.window.unwrap_or_default(),
        samples: args.samples,
    };
    let start = Instant::now();
    let report = load_and_run(&args.algebra, suite, &params)?;
    let out = match args.format {
        Format::Text => report.render_text(),
        Format::Kv => report.render_kv(),
    };
    print!("{out}");
    eprintln!("elapsed {:.3}s", start.elapsed().as_secs_f64());
    Ok(if report.passed() { ExitCode::SUCCESS } else { ExitCode::FAILURE })
}

fn load_and_run(algebra: &str, suite: Suite, params: &RunParams) -> Result<RunReport> {
    if let Ok(b) = algebra.parse::<BuiltIn>() {
        return Ok(b.run(suite, params));
    }
    let path = PathBuf::from(algebra);
    if !path.exists() {
        bail!("`{algebra}` is neither a built-in algebra nor an existing spec file");
    }
    let text = std::fs::read_to_string(&path).with_context(|| format!("reading {}", path.display()))?;
    let spec = parse_spec(&text).with_context(|| format!("parsing {}", path.display()))?;
    if spec.flagged() {
        eprintln!("warning: {} loaded with failing axioms", path.display());
        eprintln!("{}", spec.axioms);
    }
    Ok(run_suite(&spec.algebra, suite, params))
}
