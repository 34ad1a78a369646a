use clap::{Parser, Subcommand};
use cli::{Format, Level, Options};
use std::path::PathBuf;
use std::process::ExitCode;

/// Builds and checks a 3/2-tough plane triangulation without a 2-factor.
#[derive(Parser)]
#[command(name = "toughtri", version)]
struct Args {
    /// Emit machine-readable JSON.
    #[arg(long, global = true)]
    json: bool,
    /// Use this component-graph file instead of the bundled one.
    #[arg(long, global = true, value_name = "PATH")]
    g0: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build the triangulation and write it out.
    Build {
        #[arg(long, value_enum, default_value = "json-embedding")]
        format: Format,
        /// Output file; stdout if absent.
        #[arg(long, short)]
        out: Option<PathBuf>,
    },
    /// Run the verification suite.
    Verify {
        #[arg(long, value_enum, default_value = "fast")]
        level: Level,
        /// A JSON embedding to check instead of a fresh build.
        #[arg(long)]
        input: Option<PathBuf>,
    },
    /// Decide whether a 2-factor exists.
    TwoFactor {
        /// A graph6 file or JSON embedding; the construction if absent.
        #[arg(long)]
        input: Option<PathBuf>,
    },
    /// Search for cuts of small ratio.
    Search {
        /// Number of cut evaluations.
        #[arg(long, default_value_t = 100_000)]
        budget: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// A graph6 file or JSON embedding to search instead of the construction.
        #[arg(long)]
        input: Option<PathBuf>,
    },
    /// Print sizes of every stage.
    Stats,
    /// Export the ring graph D.
    ExportD {
        /// Ring length.
        #[arg(long, default_value_t = 39)]
        m: usize,
        #[arg(long, value_enum, default_value = "json-embedding")]
        format: Format,
        /// Output file; stdout if absent.
        #[arg(long, short)]
        out: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let args = Args::parse();
    let opts = Options {
        json: args.json,
        g0: args.g0,
    };
    let mut out = std::io::stdout().lock();
    let result = match &args.command {
        Command::Build { format, out: path } => {
            cli::cmd_build(&opts, *format, path.as_deref(), &mut out)
        }
        Command::Verify { level, input } => {
            cli::cmd_verify(&opts, *level, input.as_deref(), &mut out)
        }
        Command::TwoFactor { input } => cli::cmd_two_factor(&opts, input.as_deref(), &mut out),
        Command::Search {
            budget,
            seed,
            input,
        } => cli::cmd_search(&opts, *budget, *seed, input.as_deref(), &mut out),
        Command::Stats => cli::cmd_stats(&opts, &mut out),
        Command::ExportD {
            m,
            format,
            out: path,
        } => cli::cmd_export_d(*m, *format, path.as_deref(), &mut out),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(cli::EXIT_INPUT)
        }
    }
}
