//! `prm`: parameters, encoding, decoding, simulation and worked examples for
//! projective Reed-Muller codes.

mod commands;
mod demo;

use std::fmt;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};

/// Exit statuses: 0 success, 1 golden mismatch, 2 decode failure, 64 usage.
pub struct Exit {
    pub code: u8,
    pub message: String,
}

impl Exit {
    pub const MISMATCH: u8 = 1;
    pub const DECODE_FAILURE: u8 = 2;
    pub const USAGE: u8 = 64;

    pub fn usage(msg: impl fmt::Display) -> Self {
        Exit { code: Self::USAGE, message: msg.to_string() }
    }
}

impl From<prm_core::Error> for Exit {
    fn from(e: prm_core::Error) -> Self {
        Exit::usage(e)
    }
}

impl From<anyhow::Error> for Exit {
    fn from(e: anyhow::Error) -> Self {
        Exit::usage(format!("{e:#}"))
    }
}

#[derive(Parser)]
#[command(name = "prm", version, about = "Projective Reed-Muller codes over small finite fields")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
pub enum FamilyArg {
    Prm,
    Rm,
}

impl From<FamilyArg> for prm_core::Family {
    fn from(f: FamilyArg) -> Self {
        match f {
            FamilyArg::Prm => prm_core::Family::Prm,
            FamilyArg::Rm => prm_core::Family::Rm,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
pub enum AlgArg {
    Alg1,
    Alg2,
}

impl From<AlgArg> for prm_core::Algorithm {
    fn from(a: AlgArg) -> Self {
        match a {
            AlgArg::Alg1 => prm_core::Algorithm::Basic,
            AlgArg::Alg2 => prm_core::Algorithm::Guarded,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
pub enum DecoderArg {
    /// Berlekamp-Welch for m = 1, exhaustive search otherwise.
    Auto,
    /// Exhaustive search at every level.
    Exhaustive,
}

#[derive(Clone, Copy, ValueEnum)]
pub enum DemoName {
    Ex41,
    Ex33,
}

#[derive(Args)]
pub struct CodeArgs {
    /// Field size, a prime power.
    #[arg(long)]
    pub q: u32,
    /// Dimension of the ambient (projective or affine) space.
    #[arg(long)]
    pub m: usize,
    /// Degree.
    #[arg(long)]
    pub d: usize,
    #[arg(long, value_enum, default_value = "prm")]
    pub family: FamilyArg,
}

#[derive(Subcommand)]
enum Command {
    /// Print n, k, minimum distance, eta and the capabilities T, T0 as CSV.
    Params(CodeArgs),
    /// Encode a polynomial or a message over the monomial basis.
    #[command(group(ArgGroup::new("source").required(true).args(["poly", "message"])))]
    Encode {
        #[command(flatten)]
        code: CodeArgs,
        /// Polynomial such as `x0^3+x1^3+x2^3`.
        #[arg(long)]
        poly: Option<String>,
        /// Comma-separated message of length k.
        #[arg(long)]
        message: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Decode a received word read from a file (or stdin).
    Decode {
        #[command(flatten)]
        code: CodeArgs,
        #[arg(long = "in")]
        input: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "alg1")]
        alg: AlgArg,
        #[arg(long, value_enum, default_value = "auto")]
        decoder: DecoderArg,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Monte-Carlo decoding of random codewords with errors of fixed weight.
    Simulate {
        #[arg(long)]
        q: u32,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        d: usize,
        /// Error weight.
        #[arg(long)]
        errors: usize,
        #[arg(long, default_value_t = 1000)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value = "alg1")]
        alg: AlgArg,
        #[arg(long, value_enum, default_value = "auto")]
        decoder: DecoderArg,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// T0/T for every degree as CSV.
    RatioTable {
        #[arg(long)]
        q: u32,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Step-by-step trace of a worked example, checked against known values.
    Demo {
        #[arg(value_enum)]
        name: DemoName,
    },
}

fn run(cli: Cli) -> Result<(), Exit> {
    match cli.command {
        Command::Params(code) => commands::params(&code),
        Command::Encode { code, poly, message, out } => {
            commands::encode(&code, poly.as_deref(), message.as_deref(), out)
        }
        Command::Decode { code, input, alg, decoder, out } => commands::decode(&code, input, alg, decoder, out),
        Command::Simulate { q, m, d, errors, trials, seed, alg, decoder, out } => {
            commands::simulate(q, m, d, errors, trials, seed, alg, decoder, out)
        }
        Command::RatioTable { q, m, out } => commands::ratio_table(q, m, out),
        Command::Demo { name } => demo::run(name),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { Exit::USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(exit) => {
            if !exit.message.is_empty() {
                eprintln!("prm: {}", exit.message);
            }
            ExitCode::from(exit.code)
        }
    }
}
