//! JSON-speaking command line for the multitilde crate.

mod examples_suite;
mod input;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};
use multitilde::{
    act_tilde, compile_star_free, count_ptt, count_ptt_parallel, enumerate_ptt,
    enumerate_ptt_parallel, equivalent, eval_emtre, parse, pseudo_closure, vectorize,
    FiniteLanguage, Multitilde,
};

use input::{parse_json, resolve_workers, CliError, EXIT_NEGATIVE, EXIT_USAGE};

#[derive(Parser)]
#[command(
    name = "multitilde",
    version,
    about = "Compose multitilde operators, apply them to finite languages, \
             decide equivalence, enumerate the distinct ones, and compile \
             star-free expressions"
)]
struct Cli {
    /// Write the result here instead of standard output
    #[arg(short, long, global = true, value_name = "FILE")]
    output: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Plug the second operator into slot K of the first
    Compose {
        /// First operator, as inline JSON or a path to a JSON file
        t1: String,
        /// Slot of the first operator to fill, 1-based
        k: usize,
        /// Second operator
        t2: String,
    },
    /// Apply an operator to a tuple of languages
    Act {
        /// The operator
        tilde: String,
        /// JSON array of languages, one per slot
        langs: String,
    },
    /// Print the boolean vector set of an operator
    Vectorize { tilde: String },
    /// Print the pseudotransitive closure of an operator
    Closure { tilde: String },
    /// Exit 0 when the operators have the same action, 3 when not
    Equiv { t1: String, t2: String },
    /// Count the pseudotransitive operators of arity K
    Count {
        k: usize,
        /// Threads to use (default: TILDE_WORKERS or 1)
        #[arg(long)]
        workers: Option<usize>,
    },
    /// Stream every pseudotransitive operator of arity K, one JSON record
    /// per line
    Enumerate {
        k: usize,
        /// Threads to use (default: TILDE_WORKERS or 1)
        #[arg(long)]
        workers: Option<usize>,
    },
    /// Reduce a star-free expression to one operator over letter leaves
    Compile {
        /// Expression text, e.g. "(a+b)c"
        expr: String,
    },
    /// Evaluate an expression, keeping words up to a length bound
    Eval {
        /// Expression text; stars are allowed here
        expr: String,
        /// Keep exactly the words of length at most this bound
        #[arg(long, value_name = "M")]
        max_len: usize,
    },
    /// Run the bundled worked-example checks and report pass/fail
    PaperExamples,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{e}");
                return ExitCode::SUCCESS;
            }
            eprint!("{e}");
            return ExitCode::from(EXIT_USAGE);
        }
    };
    let mut out = match open_output(cli.output.as_deref()) {
        Ok(out) => out,
        Err(e) => {
            eprintln!("error: {}", e.message);
            return ExitCode::from(e.code);
        }
    };
    let result = run(cli, &mut out);
    if let Err(e) = out.flush() {
        eprintln!("error: {e}");
        return ExitCode::from(input::EXIT_INPUT);
    }
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}

fn open_output(path: Option<&std::path::Path>) -> Result<Box<dyn Write>, CliError> {
    match path {
        Some(path) => {
            let file = std::fs::File::create(path)
                .map_err(|e| CliError::input(format!("cannot create {}: {e}", path.display())))?;
            Ok(Box::new(std::io::BufWriter::new(file)))
        }
        None => Ok(Box::new(std::io::BufWriter::new(std::io::stdout()))),
    }
}

fn emit<T: serde::Serialize>(out: &mut dyn Write, value: &T) -> Result<(), CliError> {
    serde_json::to_writer(&mut *out, value)
        .map_err(|e| CliError::input(format!("cannot write output: {e}")))?;
    writeln!(out).map_err(|e| CliError::input(format!("cannot write output: {e}")))
}

fn run(cli: Cli, out: &mut dyn Write) -> Result<u8, CliError> {
    match cli.command {
        Command::Compose { t1, k, t2 } => {
            let t1: Multitilde = parse_json("the first operator", &t1)?;
            let t2: Multitilde = parse_json("the second operator", &t2)?;
            emit(out, &t1.compose_partial(k, &t2)?)?;
            Ok(0)
        }
        Command::Act { tilde, langs } => {
            let tilde: Multitilde = parse_json("the operator", &tilde)?;
            let langs: Vec<FiniteLanguage> = parse_json("the language tuple", &langs)?;
            emit(out, &act_tilde(&tilde, &langs)?)?;
            Ok(0)
        }
        Command::Vectorize { tilde } => {
            let tilde: Multitilde = parse_json("the operator", &tilde)?;
            emit(out, &vectorize(&tilde)?)?;
            Ok(0)
        }
        Command::Closure { tilde } => {
            let tilde: Multitilde = parse_json("the operator", &tilde)?;
            emit(out, &pseudo_closure(&tilde))?;
            Ok(0)
        }
        Command::Equiv { t1, t2 } => {
            let t1: Multitilde = parse_json("the first operator", &t1)?;
            let t2: Multitilde = parse_json("the second operator", &t2)?;
            let same = equivalent(&t1, &t2);
            emit(out, &serde_json::json!({ "equivalent": same }))?;
            Ok(if same { 0 } else { EXIT_NEGATIVE })
        }
        Command::Count { k, workers } => {
            let workers = resolve_workers(workers)?;
            let report = if workers == 1 {
                count_ptt(k)?
            } else {
                count_ptt_parallel(k, workers)?
            };
            emit(out, &report)?;
            Ok(0)
        }
        Command::Enumerate { k, workers } => {
            let workers = resolve_workers(workers)?;
            let stream = if workers == 1 {
                enumerate_ptt(k)?
            } else {
                enumerate_ptt_parallel(k, workers)?
            };
            for tilde in stream {
                emit(out, &tilde)?;
            }
            Ok(0)
        }
        Command::Compile { expr } => {
            let parsed = parse(&expr)?;
            emit(out, &compile_star_free(&parsed)?)?;
            Ok(0)
        }
        Command::Eval { expr, max_len } => {
            let parsed = parse(&expr)?;
            emit(out, &eval_emtre(&parsed, max_len)?)?;
            Ok(0)
        }
        Command::PaperExamples => {
            let all_passed = examples_suite::run(out)
                .map_err(|e| CliError::input(format!("cannot write report: {e}")))?;
            Ok(if all_passed { 0 } else { EXIT_NEGATIVE })
        }
    }
}
