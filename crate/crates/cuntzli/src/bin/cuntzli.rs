//! Flag wrapper around the pure command layer. Exit codes: 0 pass,
//! 1 mathematical failure or obstruction, 2 usage or parse trouble.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use cuntzli::cli::{cmd_check, cmd_mul, cmd_run, cmd_verify, DEFAULT_WINDOW_BOUND};

#[derive(Parser)]
#[command(name = "cuntzli", about = "Checkers and verification suites for integer-matrix dilation systems", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// Path to the JSON system document.
    #[arg(long)]
    spec: PathBuf,
    /// Seed for the deterministic sample streams.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Scale factor for sample counts.
    #[arg(long, default_value_t = 1)]
    level: u32,
    /// Half-width of the lattice window used by the oracle.
    #[arg(long, default_value_t = DEFAULT_WINDOW_BOUND)]
    window: i64,
}

#[derive(Subcommand)]
enum Command {
    /// Run the directedness, index, and trivial-core checks.
    Check {
        #[command(flatten)]
        common: Common,
    },
    /// Multiply two element expressions and print the canonical form.
    Mul {
        #[command(flatten)]
        common: Common,
        /// First factor: an element name from the document or a literal
        /// expression such as "u[1] s[2]".
        expr1: String,
        /// Second factor (applied first, as with operators).
        expr2: String,
    },
    /// Run a verification suite: relations, semigroup, groupoid, duality.
    Verify {
        #[command(flatten)]
        common: Common,
        suite: String,
    },
    /// Execute the task list embedded in the document.
    Run {
        #[command(flatten)]
        common: Common,
    },
}

fn verbose() -> bool {
    std::env::var("CUNTZLI_VERBOSE").map(|v| !v.is_empty()).unwrap_or(false)
}

fn read_doc(path: &PathBuf) -> Result<String, ExitCode> {
    std::fs::read_to_string(path).map_err(|e| {
        eprintln!("error: cannot read {}: {e}", path.display());
        ExitCode::from(2)
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out = match &cli.command {
        Command::Check { common } => match read_doc(&common.spec) {
            Ok(text) => cmd_check(&text),
            Err(code) => return code,
        },
        Command::Mul { common, expr1, expr2 } => match read_doc(&common.spec) {
            Ok(text) => cmd_mul(&text, expr1, expr2, common.window),
            Err(code) => return code,
        },
        Command::Verify { common, suite } => match read_doc(&common.spec) {
            Ok(text) => cmd_verify(&text, suite, common.seed, common.level, common.window, verbose()),
            Err(code) => return code,
        },
        Command::Run { common } => match read_doc(&common.spec) {
            Ok(text) => cmd_run(&text, common.seed, common.level, common.window, verbose()),
            Err(code) => return code,
        },
    };
    print!("{}", out.report);
    ExitCode::from(out.code.clamp(0, 255) as u8)
}
