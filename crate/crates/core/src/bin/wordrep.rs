use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

use wordrep::cli::{self, ProductOp, ReportDocument, EXIT_INPUT, EXIT_NEGATIVE, EXIT_OK, EXIT_UNDECIDED};
use wordrep::representation::{Caps, DEFAULT_WORD_CAP};
use wordrep::orientation::DEFAULT_ORACLE_CAP;
use wordrep::Error;

#[derive(Parser)]
#[command(name = "wordrep", version, about = "Word-representability of graphs via modular decomposition")]
struct Args {
    /// Include wall-clock time in the report (makes output nondeterministic).
    #[arg(long, global = true)]
    timing: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify a graph: word-representable, comparability, or not.
    Check {
        path: PathBuf,
        #[arg(long, env = "WORDREP_ORACLE_CAP", default_value_t = DEFAULT_ORACLE_CAP)]
        oracle_cap: usize,
        #[arg(long, env = "WORDREP_WORD_CAP", default_value_t = DEFAULT_WORD_CAP)]
        word_cap: usize,
    },
    /// Representation number by exhaustive uniform-word search.
    Repnum {
        path: PathBuf,
        #[arg(long, env = "WORDREP_WORD_CAP", default_value_t = DEFAULT_WORD_CAP)]
        cap: usize,
    },
    /// Permutation-representation number (poset dimension).
    Prn {
        path: PathBuf,
        #[arg(long, env = "WORDREP_WORD_CAP", default_value_t = DEFAULT_WORD_CAP)]
        cap: usize,
    },
    /// Maximal modular partition and quotient graph.
    Decompose { path: PathBuf },
    /// Lexicographic product G[H] or substitution of H for a vertex of G.
    Product {
        graph: PathBuf,
        inner: PathBuf,
        #[arg(long, value_enum, default_value_t = Op::Lex)]
        op: Op,
        /// Vertex of G to replace (substitute only).
        #[arg(long)]
        at: Option<usize>,
        /// Also compute composed numbers and certificates.
        #[arg(long)]
        numbers: bool,
        /// Write the resulting graph file here.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, env = "WORDREP_ORACLE_CAP", default_value_t = DEFAULT_ORACLE_CAP)]
        oracle_cap: usize,
        #[arg(long, env = "WORDREP_WORD_CAP", default_value_t = DEFAULT_WORD_CAP)]
        word_cap: usize,
    },
    /// Replay the certificates of a report against a graph file.
    Verify { path: PathBuf, report: PathBuf },
}

#[derive(Clone, Copy, ValueEnum)]
enum Op {
    Lex,
    Substitute,
}

fn read(path: &Path) -> Result<String, Error> {
    fs::read_to_string(path).map_err(|e| Error::Input(format!("{}: {e}", path.display())))
}

fn run(args: Args) -> Result<i32, Error> {
    let started = Instant::now();
    let doc: ReportDocument = match args.command {
        Command::Check { path, oracle_cap, word_cap } => {
            cli::cmd_check(&read(&path)?, Caps { word: word_cap, oracle: oracle_cap })?
        }
        Command::Repnum { path, cap } => cli::cmd_repnum(&read(&path)?, cap)?,
        Command::Prn { path, cap } => cli::cmd_prn(&read(&path)?, cap)?,
        Command::Decompose { path } => cli::cmd_decompose(&read(&path)?)?,
        Command::Product { graph, inner, op, at, numbers, out, oracle_cap, word_cap } => {
            let op = match (op, at) {
                (Op::Lex, None) => ProductOp::Lex,
                (Op::Substitute, Some(at)) => ProductOp::Substitute { at },
                (Op::Lex, Some(_)) => return Err(Error::Input("--at only applies to --op substitute".into())),
                (Op::Substitute, None) => return Err(Error::Input("--op substitute needs --at".into())),
            };
            let caps = Caps { word: word_cap, oracle: oracle_cap };
            let doc = cli::cmd_product(&read(&graph)?, &read(&inner)?, op, numbers, caps)?;
            if let (Some(out), Some(text)) = (out, &doc.graph) {
                fs::write(&out, text).map_err(|e| Error::Input(format!("{}: {e}", out.display())))?;
            }
            doc
        }
        Command::Verify { path, report } => {
            let doc = ReportDocument::from_json(&read(&report)?)?;
            let ok = cli::verify_report(&doc, &read(&path)?)?;
            println!("{}", if ok { "verified" } else { "FAILED" });
            return Ok(if ok { EXIT_OK } else { EXIT_NEGATIVE });
        }
    };
    let doc = if args.timing { doc.with_timing(started.elapsed()) } else { doc };
    print!("{}", doc.to_json());
    Ok(doc.exit_code())
}

fn main() -> ExitCode {
    let args = Args::parse();
    let code = match run(args) {
        Ok(code) => code,
        Err(e @ Error::Input(_)) => {
            eprintln!("wordrep: {e}");
            EXIT_INPUT
        }
        Err(e) => {
            eprintln!("wordrep: {e}");
            EXIT_UNDECIDED
        }
    };
    ExitCode::from(code as u8)
}
