//! `hilbext`: lengths of Hilbert schemes of infinitesimal extensions of the
//! projective line, and the exact algebra behind them.

mod commands;
mod input;
mod table;

use std::fmt;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use hilbext_core::Error;

#[derive(Parser, Debug)]
#[command(name = "hilbext", version, about = "Exact Groebner-basis and P^1 computations for Hilbert-scheme lengths")]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub verb: Verb,
}

#[derive(Args, Debug, Clone)]
pub struct Global {
    /// Machine-readable output
    #[arg(long, global = true)]
    pub json: bool,
    /// Coefficient field: q or fp:P
    #[arg(long, global = true, default_value = "q")]
    pub field: String,
    /// Monomial order: lex, grlex, grevlex or block:K
    #[arg(long, global = true, default_value = "grevlex")]
    pub order: String,
    /// Comma-separated variable names, most significant first
    /// (default: every identifier in the input, in natural order)
    #[arg(long, global = true)]
    pub vars: Option<String>,
}

#[derive(Subcommand, Debug)]
pub enum Verb {
    /// Length of the Hilbert scheme of the trivial extension by the given twists
    Length {
        #[arg(long, allow_hyphen_values = true)]
        twists: String,
        /// Include the equations in the report
        #[arg(long)]
        show_ideal: bool,
    },
    /// The equations cutting out the local ring
    Equations {
        #[arg(long, allow_hyphen_values = true)]
        twists: String,
    },
    /// Reduced Groebner basis of an ideal file (one generator per line)
    Gb { file: std::path::PathBuf },
    /// Normal forms modulo an ideal
    Nf {
        file: std::path::PathBuf,
        /// Polynomial to reduce (repeatable)
        #[arg(long = "poly", required = true)]
        polys: Vec<String>,
    },
    /// Length of R/I, or the ideal quotient I : f with --by
    Quotient {
        file: std::path::PathBuf,
        #[arg(long)]
        by: Option<String>,
        /// Count only standard monomials of degree below K
        #[arg(long)]
        truncate: Option<u32>,
    },
    /// Saturation I : f^∞
    Saturate {
        file: std::path::PathBuf,
        #[arg(long)]
        by: String,
    },
    /// Generators of I ∩ k[remaining variables]
    Eliminate {
        file: std::path::PathBuf,
        /// Comma-separated variables to eliminate
        #[arg(long)]
        drop: String,
    },
    /// Symbolic power of the line on the D5 cubic surface
    SymbolicPower {
        #[arg(long)]
        n: u32,
    },
    /// Hochschild dimensions for extensions of O(-d) by O^a
    Hochschild {
        #[arg(long)]
        d: usize,
        #[arg(long, default_value_t = 1)]
        a: usize,
    },
    /// Lower and upper bounds for the extension of O(-d) by the given twists
    Bounds {
        #[arg(long)]
        d: u32,
        #[arg(long, allow_hyphen_values = true)]
        twists: String,
    },
    /// Re-run the checks behind the worked examples and identities
    Verify {
        /// A check name, or `all`
        check: String,
        #[arg(long)]
        max: Option<usize>,
    },
    /// Sweep lengths over shapes
    Table {
        /// Single summands O(-d) for d in A..B
        #[arg(long, conflicts_with_all = ["repeat", "shapes"])]
        d: Option<String>,
        /// Repeated twist T, n copies for n in --n A..B
        #[arg(long, allow_hyphen_values = true, requires = "n")]
        repeat: Option<i64>,
        #[arg(long)]
        n: Option<String>,
        /// Explicit twist lists separated by `;`, e.g. "-1,-1;-1,-2"
        #[arg(long, allow_hyphen_values = true)]
        shapes: Option<String>,
    },
}

/// Everything that can end a run early, with its exit status.
#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Compute(String),
    Verification(usize),
}

impl Failure {
    pub fn usage(msg: String) -> Self {
        Failure::Usage(msg)
    }

    pub fn compute(e: Error) -> Self {
        match e {
            Error::Syntax { .. } | Error::UnknownVariable(_) | Error::InvalidField(_) | Error::InvalidRing(_) => {
                Failure::Usage(e.to_string())
            }
            Error::InvalidArgument(_) => Failure::Usage(e.to_string()),
            e => Failure::Compute(e.to_string()),
        }
    }

    fn status(&self) -> u8 {
        match self {
            Failure::Verification(_) => 1,
            Failure::Usage(_) => 2,
            Failure::Compute(_) => 3,
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Usage(m) => write!(f, "usage: {m}"),
            Failure::Compute(m) => write!(f, "error: {m}"),
            Failure::Verification(n) => write!(f, "{n} verification record(s) failed"),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::compute(e)
    }
}

/// Result text in both renderings; the status is decided by the verb.
pub struct Output {
    pub json: serde_json::Value,
    pub text: String,
    pub failure: Option<Failure>,
}

fn configure_threads() {
    if let Some(n) = std::env::var("HILBEXT_THREADS").ok().and_then(|v| v.parse::<usize>().ok()) {
        // a second initialisation is harmless to ignore
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build_global();
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    configure_threads();
    match commands::run(&cli) {
        Ok(out) => {
            if cli.global.json {
                println!("{}", serde_json::to_string_pretty(&out.json).expect("serializable"));
            } else {
                print!("{}", out.text);
            }
            match out.failure {
                None => ExitCode::SUCCESS,
                Some(f) => {
                    eprintln!("{f}");
                    ExitCode::from(f.status())
                }
            }
        }
        Err(f) => {
            eprintln!("{f}");
            ExitCode::from(f.status())
        }
    }
}
