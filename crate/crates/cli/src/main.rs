mod commands;
mod input;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use braidkit::Error;

#[derive(Parser, Debug)]
#[command(name = "braidkit", version, about = "Exact computations with bialgebras, braided systems and their homology")]
pub struct Cli {
    /// Coefficient field, `q` or `fp:P`; overrides BRAIDKIT_FIELD and the file.
    #[arg(long, global = true)]
    pub field: Option<String>,
    /// Worker threads for internal parallelism.
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    /// Suppress metadata on stderr.
    #[arg(long, short, global = true)]
    pub quiet: bool,
    /// Skip axiom checks when loading files.
    #[arg(long, global = true)]
    pub unchecked: bool,
    /// Largest number of basis elements a single materialized space may have.
    #[arg(long, global = true, default_value_t = 1 << 20)]
    pub memory_cap: usize,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Axiom report for a structure-constant file.
    Check {
        file: String,
        #[arg(long, value_enum)]
        axioms: Option<Axioms>,
    },
    /// Yang-Baxter report for B(H) or B'(H).
    Ybe {
        file: String,
        #[arg(long, value_enum, default_value = "B")]
        system: SystemKind,
    },
    /// Braided tensor product algebra with an associativity certificate.
    Build {
        #[arg(value_enum)]
        construction: Construction,
        files: Vec<String>,
        /// Permutation for thetaW: one-line, `s1 s3`, cycles, or X/Y/Z.
        #[arg(long)]
        theta: Option<String>,
        #[arg(short, long)]
        output: Option<String>,
    },
    /// Apply a factor permutation to a built product, e.g. `heisenberg(kz2)`.
    Permute {
        product: String,
        #[arg(long)]
        theta: String,
        #[arg(short, long)]
        output: Option<String>,
    },
    /// Antipode by linear solve or from the inverse braiding.
    Antipode {
        file: String,
        #[arg(long, value_enum, default_value = "solve")]
        method: AntipodeMethod,
    },
    /// Homology dimension table as TSV.
    Homology {
        #[arg(value_enum)]
        kind: HomologyKind,
        file: String,
        #[arg(long)]
        max_degree: usize,
        /// Bicomplex variant 1..4 for `gs`.
        #[arg(long, default_value_t = 4)]
        variant: u8,
        #[arg(long, value_enum, default_value = "total")]
        direction: DirectionArg,
        #[arg(long, value_enum)]
        coefficients: Option<Coefficients>,
    },
    /// Quantum shuffle associativity on basis inputs.
    ShuffleTest {
        file: String,
        #[arg(long)]
        max_degree: usize,
        #[arg(long, value_enum, default_value = "B")]
        system: SystemKind,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Axioms {
    Uaa,
    Coalg,
    Bialg,
    Hopf,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum SystemKind {
    #[value(name = "B")]
    B,
    #[value(name = "Bprime")]
    BPrime,
    /// The rank-one associativity braiding of the algebra.
    #[value(name = "ass")]
    Ass,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Construction {
    #[value(name = "heisenberg")]
    Heisenberg,
    #[value(name = "enveloping")]
    Enveloping,
    #[value(name = "W")]
    W,
    #[value(name = "thetaW")]
    ThetaW,
    #[value(name = "smash")]
    Smash,
    #[value(name = "two-sided")]
    TwoSided,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum AntipodeMethod {
    Solve,
    Braiding,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum HomologyKind {
    Gs,
    Bar,
    Hochschild,
    Ps,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum DirectionArg {
    Total,
    Rows,
    Columns,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Coefficients {
    /// The ground field through the counit.
    Trivial,
    /// The algebra over itself.
    Regular,
    /// Regular on the left, the dual counit on the right (`ps` only).
    Character,
}

/// What a command found: `Clean` exits 0, `Violation` exits 1.
pub enum Outcome {
    Clean,
    Violation,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    match commands::run(&cli) {
        Ok(Outcome::Clean) => ExitCode::SUCCESS,
        Ok(Outcome::Violation) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Axiom(_) | Error::NotInvertible(_) => 1,
        _ => 2,
    }
}
