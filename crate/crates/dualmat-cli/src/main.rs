//! Command-line calculator for exact dual-number matrix algebra.
//!
//! One subcommand per capability; matrices travel as JSON documents (see
//! `doc`). Exit codes: 0 for success or a true predicate, 1 for a checked
//! false answer or a non-existence result, 2 for usage, parse, or shape
//! errors. Diagnostics go to the error stream; stdout carries only
//! documents.

mod doc;

use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use dualmat::{decomp, dmpgi, membership, penrose_profile, special, DualMatrix, Error, RealMatrix};

#[derive(Parser)]
#[command(name = "dualmat", version, about = "Exact dual-number matrix calculator")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Io {
    /// Input document path (stdin when omitted)
    #[arg(long, short = 'i')]
    input: Option<PathBuf>,
    /// Output path (stdout when omitted)
    #[arg(long, short = 'o')]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, Default, ValueEnum)]
enum Method {
    #[default]
    Direct,
    Factor,
    Explicit,
}

#[derive(Subcommand)]
enum Command {
    /// Rank of the real part
    Rank(Io),
    /// Full rank decomposition A = F G of a real matrix
    Fullrank(Io),
    /// Moore-Penrose inverse of a real matrix
    Pinv(Io),
    /// Test whether the rank decomposition and Moore-Penrose inverse exist
    Exists(Io),
    /// Rank decomposition of a dual matrix
    Ddecomp {
        #[command(flatten)]
        io: Io,
        /// Parameter matrix document (real, rank x rank; zero when omitted)
        #[arg(long)]
        p: Option<PathBuf>,
    },
    /// Dual Moore-Penrose inverse
    Dmpgi {
        #[command(flatten)]
        io: Io,
        /// Computation route; all routes produce identical output
        #[arg(long, value_enum, default_value_t)]
        method: Method,
    },
    /// Test whether a square dual matrix squares to itself
    CheckIdempotent(Io),
    /// Test whether a square dual matrix commutes with its Moore-Penrose inverse
    CheckEp(Io),
    /// Which Penrose equations a candidate inverse satisfies
    PenroseProfile {
        #[command(flatten)]
        io: Io,
        /// Candidate inverse document
        #[arg(long)]
        candidate: PathBuf,
    },
    /// Randomized membership report over factor-inverse products
    MixedMembership {
        #[command(flatten)]
        io: Io,
        /// Parameter draws per claim
        #[arg(long, default_value_t = 100)]
        samples: usize,
        /// Seed for reproducible reports
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

enum Failure {
    /// Usage, parse, or shape problem: exit 2.
    Usage(String),
    /// Well-posed question with a negative or impossible answer: exit 1.
    Checked(String),
}

fn library_failure(e: Error) -> Failure {
    match e {
        Error::Dimension(_) | Error::ZeroDenominator => Failure::Usage(e.to_string()),
        Error::FormulaDiscrepancy(_) => Failure::Usage(format!("internal error: {e}")),
        _ => Failure::Checked(e.to_string()),
    }
}

fn read_text(path: &Option<PathBuf>) -> Result<String, Failure> {
    match path {
        Some(p) => std::fs::read_to_string(p)
            .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", p.display()))),
        None => {
            let mut text = String::new();
            std::io::stdin()
                .read_to_string(&mut text)
                .map_err(|e| Failure::Usage(format!("cannot read stdin: {e}")))?;
            Ok(text)
        }
    }
}

fn read_dual(path: &Option<PathBuf>) -> Result<DualMatrix, Failure> {
    doc::parse_dual_matrix(&read_text(path)?).map_err(Failure::Usage)
}

fn read_real(path: &Option<PathBuf>) -> Result<RealMatrix, Failure> {
    doc::parse_real_matrix(&read_text(path)?).map_err(Failure::Usage)
}

fn write_out<T: Serialize>(path: &Option<PathBuf>, value: &T) -> Result<(), Failure> {
    let mut text = serde_json::to_string_pretty(value)
        .map_err(|e| Failure::Usage(format!("cannot serialize output: {e}")))?;
    text.push('\n');
    match path {
        Some(p) => std::fs::write(p, text)
            .map_err(|e| Failure::Usage(format!("cannot write {}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

#[derive(Serialize)]
struct RankReport {
    rank: usize,
}

#[derive(Serialize)]
struct FullRankReport {
    rank: usize,
    f: doc::MatrixOut,
    g: doc::MatrixOut,
}

#[derive(Serialize)]
struct ExistsReport {
    exists: bool,
    residual: doc::MatrixOut,
}

#[derive(Serialize)]
struct DecompReport {
    rank: usize,
    left: doc::MatrixOut,
    right: doc::MatrixOut,
}

#[derive(Serialize)]
struct IdempotentReport {
    idempotent: bool,
}

#[derive(Serialize)]
struct EpReport {
    ep: bool,
}

#[derive(Serialize)]
struct ProfileReport {
    equations: Vec<u8>,
    full: bool,
}

#[derive(Serialize)]
struct MembershipOut {
    samples: usize,
    seed: u64,
    rank: usize,
    all_hold: bool,
    claims: Vec<ClaimOut>,
}

#[derive(Serialize)]
struct ClaimOut {
    claim: &'static str,
    equation: u8,
    passes: usize,
    failures: usize,
    first_counterexample: Option<CounterexampleOut>,
}

#[derive(Serialize)]
struct CounterexampleOut {
    sample: usize,
    candidate: doc::MatrixOut,
    equations: Vec<u8>,
}

fn run(cli: Cli) -> Result<u8, Failure> {
    match cli.command {
        Command::Rank(io) => {
            let a = read_dual(&io.input)?;
            write_out(&io.output, &RankReport { rank: a.real().rank() })?;
            Ok(0)
        }
        Command::Fullrank(io) => {
            let a = read_real(&io.input)?;
            let f = a.full_rank_decompose().map_err(library_failure)?;
            write_out(
                &io.output,
                &FullRankReport {
                    rank: f.rank(),
                    f: doc::real_doc(&f.f),
                    g: doc::real_doc(&f.g),
                },
            )?;
            Ok(0)
        }
        Command::Pinv(io) => {
            let a = read_real(&io.input)?;
            write_out(&io.output, &doc::real_doc(&a.pinv()))?;
            Ok(0)
        }
        Command::Exists(io) => {
            let a = read_dual(&io.input)?;
            let check = dmpgi::exists(&a);
            write_out(
                &io.output,
                &ExistsReport { exists: check.holds, residual: doc::real_doc(&check.residual) },
            )?;
            Ok(u8::from(!check.holds))
        }
        Command::Ddecomp { io, p } => {
            let a = read_dual(&io.input)?;
            let rank = a.real().rank();
            if rank == 0 {
                return Err(Failure::Checked(
                    "a zero real part admits no rank decomposition".into(),
                ));
            }
            let parameter = match &p {
                Some(path) => read_real(&Some(path.clone()))?,
                None => RealMatrix::zeros(rank, rank),
            };
            let f = decomp::decompose(&a, &parameter).map_err(library_failure)?;
            write_out(
                &io.output,
                &DecompReport {
                    rank,
                    left: doc::dual_doc(f.left()),
                    right: doc::dual_doc(f.right()),
                },
            )?;
            Ok(0)
        }
        Command::Dmpgi { io, method } => {
            let a = read_dual(&io.input)?;
            let x = match method {
                Method::Direct => dmpgi::direct(&a),
                Method::Factor => {
                    decomp::decompose_canonical(&a).and_then(|f| dmpgi::factor(&f))
                }
                Method::Explicit => {
                    decomp::decompose_canonical(&a).and_then(|f| dmpgi::explicit(&f))
                }
            }
            .map_err(library_failure)?;
            write_out(&io.output, &doc::dual_doc(&x))?;
            Ok(0)
        }
        Command::CheckIdempotent(io) => {
            let a = read_dual(&io.input)?;
            let idempotent = special::is_dual_idempotent(&a).map_err(library_failure)?;
            write_out(&io.output, &IdempotentReport { idempotent })?;
            Ok(u8::from(!idempotent))
        }
        Command::CheckEp(io) => {
            let a = read_dual(&io.input)?;
            let ep = special::is_dual_ep(&a).map_err(library_failure)?;
            write_out(&io.output, &EpReport { ep })?;
            Ok(u8::from(!ep))
        }
        Command::PenroseProfile { io, candidate } => {
            let a = read_dual(&io.input)?;
            let x = read_dual(&Some(candidate))?;
            let profile = penrose_profile(&a, &x).map_err(library_failure)?;
            write_out(
                &io.output,
                &ProfileReport { equations: profile.equations(), full: profile.is_full() },
            )?;
            Ok(u8::from(!profile.is_full()))
        }
        Command::MixedMembership { io, samples, seed } => {
            let a = read_dual(&io.input)?;
            let f = decomp::decompose_canonical(&a).map_err(library_failure)?;
            let report = membership::verify_mixed_membership(&f, samples, seed);
            let claims = report
                .claims
                .iter()
                .map(|c| ClaimOut {
                    claim: c.label,
                    equation: c.equation,
                    passes: c.passes,
                    failures: c.failures,
                    first_counterexample: c.first_counterexample.as_ref().map(|ce| {
                        CounterexampleOut {
                            sample: ce.sample,
                            candidate: doc::dual_doc(&ce.candidate),
                            equations: ce.profile.equations(),
                        }
                    }),
                })
                .collect();
            let all_hold = report.all_hold();
            write_out(
                &io.output,
                &MembershipOut { samples, seed, rank: f.rank(), all_hold, claims },
            )?;
            Ok(u8::from(!all_hold))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Checked(msg)) => {
            eprintln!("{msg}");
            ExitCode::from(1)
        }
    }
}
