mod commands;
mod report;

use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};
use serde_json::json;

use commands::SpecializeArgs;

/// Exact computations with refined Bloch groups. Output is always JSON.
#[derive(Parser)]
#[command(name = "bloch", version)]
struct Cli {
    /// Add wall-clock time to the output.
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Structure of a tower node over F_q (RB, RBtilde, RBhat, RBbar, B, RedB,
    /// RedBbar for Bloch kernels; RP, RPtilde, ... for the pre-Bloch groups).
    Finite {
        #[arg(long)]
        q: u64,
        #[arg(long, default_value = "RB")]
        node: String,
    },
    /// Checks an identity (or `all`) over F_q, exhaustively unless parameters are given.
    Verify {
        #[arg(long)]
        q: u64,
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long)]
        i: Option<u8>,
        #[arg(long)]
        x: Option<String>,
        #[arg(long)]
        y: Option<String>,
    },
    /// Specializes a symbol sum at a place; dyadic sums go to the odd part.
    Specialize {
        #[arg(long)]
        field: String,
        #[arg(long)]
        place: String,
        #[arg(long, default_value_t = -1, allow_negative_numbers = true)]
        eps: i8,
        #[arg(long)]
        uniformizer: Option<String>,
        /// RPhat or RedP.
        #[arg(long, default_value = "RPhat")]
        node: String,
        /// SymbolSum JSON file, or `-` for standard input.
        #[arg(long)]
        input: Option<String>,
        /// Evaluate in the odd localization even for integral sums.
        #[arg(long)]
        odd: bool,
        /// Image of the relator for a pair `x,y`.
        #[arg(long)]
        relation: Option<String>,
        /// Number of random relator pairs to test.
        #[arg(long)]
        fuzz: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Local images of a symbol sum at every place where it can be nonzero.
    Global {
        #[arg(long)]
        field: String,
        #[arg(long)]
        input: String,
    },
    /// Sizes of the square/nonsquare partition classes and their orbit laws.
    Counts {
        #[arg(long)]
        q: u64,
    },
    /// H_3 image of a cyclic subgroup of SL_2(F_q) in RB(F_q).
    H3cyclic {
        #[arg(long)]
        q: u64,
        /// Order of the nonsplit torus element.
        #[arg(long)]
        order: Option<u64>,
        /// Use the order-3 matrix [[-1,1],[-1,0]] instead.
        #[arg(long)]
        t0: bool,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Upper bound on the 3-rank of the S-integer Bloch group over Q.
    Rankbound {
        #[arg(long)]
        primes: String,
    },
    /// Witness matrix for the 3-rank bound over Q.
    Witness {
        #[arg(long)]
        primes: String,
    },
}

fn run(cmd: &Command) -> bloch_core::Result<report::RunReport> {
    match cmd {
        Command::Finite { q, node } => commands::finite(*q, node),
        Command::Verify { q, suite, i, x, y } => commands::verify(*q, suite, *i, x.as_deref(), y.as_deref()),
        Command::Specialize { field, place, eps, uniformizer, node, input, odd, relation, fuzz, seed } => {
            commands::specialize(&SpecializeArgs {
                field,
                place,
                eps: *eps,
                uniformizer: uniformizer.as_deref(),
                node,
                input: input.as_deref(),
                odd: *odd,
                relation: relation.as_deref(),
                fuzz: *fuzz,
                seed: *seed,
            })
        }
        Command::Global { field, input } => commands::global(field, input),
        Command::Counts { q } => commands::counts(*q),
        Command::H3cyclic { q, order, t0, seed } => commands::h3cyclic(*q, *order, *t0, *seed),
        Command::Rankbound { primes } => commands::rankbound(primes),
        Command::Witness { primes } => commands::witness(primes),
    }
}

fn main() -> ExitCode {
    let argv: Vec<String> = std::env::args().collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(c) => c,
        Err(e) => e.exit(),
    };
    let command = argv[1..].to_vec();
    let start = Instant::now();
    match run(&cli.command) {
        Ok(rep) => {
            let timing = cli.timing.then(|| start.elapsed().as_secs_f64() * 1000.0);
            println!("{}", rep.render(&command, timing));
            if rep.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            println!("{}", json!({ "command": command, "error": e.to_string() }));
            ExitCode::from(2)
        }
    }
}
