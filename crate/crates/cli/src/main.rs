mod commands;
mod report;

use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use revgrob::SearchBudget;

use commands::{CancelMethod, Method, SideArg};
use report::Report;

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Input(String),
    Io(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 64,
            CliError::Input(_) => 65,
            CliError::Io(_) => 74,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Usage(m) | CliError::Input(m) | CliError::Io(m) => m,
        }
    }
}

#[derive(Parser)]
#[command(
    name = "revgrob",
    version,
    about = "Gröbner-basis and word-reversing completion for monoid presentations"
)]
struct Cli {
    /// Print the report as JSON.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Copy)]
struct BudgetArgs {
    /// Largest relation set a completion may build (originals included).
    #[arg(long)]
    max_relations: Option<usize>,
    /// Longest positive word: new leading words, oracle words.
    #[arg(long)]
    max_len: Option<usize>,
    /// Steps per search.
    #[arg(long)]
    max_steps: Option<usize>,
    /// Largest visited set of a search.
    #[arg(long)]
    max_frontier: Option<usize>,
    /// Longest signed word while reversing.
    #[arg(long)]
    max_signed_len: Option<usize>,
}

impl BudgetArgs {
    fn budget(self) -> Result<SearchBudget, CliError> {
        let d = SearchBudget::default();
        SearchBudget {
            max_relations: self.max_relations.unwrap_or(d.max_relations),
            max_word_len: self.max_len.unwrap_or(d.max_word_len),
            max_steps: self.max_steps.unwrap_or(d.max_steps),
            max_frontier: self.max_frontier.unwrap_or(d.max_frontier),
            max_signed_len: self.max_signed_len.unwrap_or(d.max_signed_len),
        }
        .validated()
        .map_err(|l| CliError::Usage(format!("--{l} must be positive")))
    }
}

#[derive(Subcommand)]
enum Command {
    /// Alphabet, relations and homogeneity of a presentation file.
    Info { file: PathBuf },
    /// Gröbner-basis completion.
    Gcomplete {
        file: PathBuf,
        #[command(flatten)]
        budget: BudgetArgs,
        /// Print the event log.
        #[arg(long)]
        log: bool,
    },
    /// Reversing completion.
    Rcomplete {
        file: PathBuf,
        #[command(flatten)]
        budget: BudgetArgs,
        /// Run without a pseudolength certificate.
        #[arg(long)]
        uncertified: bool,
        #[arg(long)]
        log: bool,
    },
    /// Completeness criterion for reversing.
    Rcheck {
        file: PathBuf,
        #[command(flatten)]
        budget: BudgetArgs,
        #[arg(long)]
        uncertified: bool,
    },
    /// Decide whether two words represent the same element.
    Equiv {
        file: PathBuf,
        w1: String,
        w2: String,
        #[arg(long, value_enum, default_value = "groebner")]
        method: Method,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Reverse a signed word (inverse letters written `a'`).
    Reverse {
        file: PathBuf,
        word: String,
        /// List every terminal form instead of following one trace.
        #[arg(long)]
        all: bool,
        /// Write the diagram of the single trace in DOT format.
        #[arg(long)]
        dot: Option<PathBuf>,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Cancellativity test.
    Cancel {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "left")]
        side: SideArg,
        #[arg(long, value_enum, default_value = "reversing")]
        method: CancelMethod,
        #[arg(long)]
        uncertified: bool,
        /// Longest words tried by the witness search.
        #[arg(long, default_value_t = 4)]
        max_witness_len: usize,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Direct product of two presentations.
    Product {
        file1: PathBuf,
        file2: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

fn run(cli: Cli) -> Result<(Report, Option<String>), CliError> {
    use commands::*;
    Ok(match cli.command {
        Command::Info { file } => (info(&load(&file)?), None),
        Command::Gcomplete { file, budget, log } => {
            (gcomplete(&load(&file)?, budget.budget()?, log), None)
        }
        Command::Rcomplete {
            file,
            budget,
            uncertified,
            log,
        } => (
            rcomplete(&load(&file)?, budget.budget()?, uncertified, log)?,
            None,
        ),
        Command::Rcheck {
            file,
            budget,
            uncertified,
        } => (rcheck(&load(&file)?, budget.budget()?, uncertified)?, None),
        Command::Equiv {
            file,
            w1,
            w2,
            method,
            budget,
        } => (
            equiv(&load(&file)?, &w1, &w2, method, budget.budget()?)?,
            None,
        ),
        Command::Reverse {
            file,
            word,
            all,
            dot,
            budget,
        } => (
            reverse(&load(&file)?, &word, all, dot.as_deref(), budget.budget()?)?,
            None,
        ),
        Command::Cancel {
            file,
            side,
            method,
            uncertified,
            max_witness_len,
            budget,
        } => (
            cancel(
                &load(&file)?,
                side,
                method,
                uncertified,
                max_witness_len,
                budget.budget()?,
            )?,
            None,
        ),
        Command::Product {
            file1,
            file2,
            output,
        } => product(&load(&file1)?, &load(&file2)?, output.as_deref())?,
    })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 64 } else { 0 });
        }
    };
    let json = cli.json;
    match run(cli) {
        Ok((rep, raw)) => {
            let mut out = std::io::stdout().lock();
            let _ = match (json, raw) {
                (true, _) => writeln!(
                    out,
                    "{}",
                    serde_json::to_string_pretty(&rep.to_json()).expect("reports serialize")
                ),
                (false, Some(text)) => write!(out, "{text}"),
                (false, None) => write!(out, "{}", rep.to_text()),
            };
            ExitCode::from(rep.status.code())
        }
        Err(e) => {
            eprintln!("error: {}", e.message());
            ExitCode::from(e.code())
        }
    }
}
