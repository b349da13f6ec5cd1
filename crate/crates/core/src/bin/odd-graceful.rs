use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use odd_graceful::cli::{self, exit, CommandOutput, ConstructMethod, SearchInput};
use odd_graceful::io::bench::{DEFAULT_Q_VALUES, DEFAULT_REPETITIONS};
use odd_graceful::io::Format;
use odd_graceful::search::{SearchBudget, DEFAULT_MAX_NODES};

/// Odd graceful labelings of C_m ∪ P_n.
#[derive(Parser)]
#[command(name = "odd-graceful", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Construct, verify and print a labeling of C<m>+P<n>.
    Generate {
        #[arg(long)]
        spec: String,
        #[arg(long, value_enum, default_value_t = MethodArg::Closed)]
        method: MethodArg,
        #[arg(long, value_enum, default_value_t = FormatArg::Json)]
        format: FormatArg,
        /// Build even when the path is too short; the failure is reported.
        #[arg(long)]
        force: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check a JSON labeling document.
    Verify {
        #[arg(long)]
        input: PathBuf,
        /// Print the report as JSON.
        #[arg(long)]
        json: bool,
    },
    /// Exhaustively search a small graph for a labeling.
    Search {
        #[arg(long, conflicts_with = "edges", required_unless_present = "edges")]
        spec: Option<String>,
        #[arg(long)]
        edges: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_MAX_NODES)]
        max_nodes: u64,
        #[arg(long)]
        timeout_ms: Option<u64>,
        /// Write the certificate document here when one is found.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Time both constructions over a range of sizes.
    Bench {
        #[arg(long, value_delimiter = ',')]
        q_list: Option<Vec<usize>>,
        #[arg(long, default_value_t = DEFAULT_REPETITIONS)]
        reps: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Closed,
    Algorithmic,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    Dot,
    Csv,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() {
                exit::USAGE
            } else {
                exit::SUCCESS
            };
            let _ = e.print();
            return ExitCode::from(code as u8);
        }
    };
    let out = match cli.command {
        Command::Generate {
            spec,
            method,
            format,
            force,
            out,
        } => {
            let method = match method {
                MethodArg::Closed => ConstructMethod::Closed,
                MethodArg::Algorithmic => ConstructMethod::Algorithmic,
            };
            let format = match format {
                FormatArg::Json => Format::Json,
                FormatArg::Dot => Format::Dot,
                FormatArg::Csv => Format::Csv,
            };
            redirect(
                cli::run_generate(&spec, method, format, force),
                out.as_ref(),
            )
        }
        Command::Verify { input, json } => match std::fs::read_to_string(&input) {
            Ok(text) => cli::run_verify(&text, json),
            Err(e) => usage(format!("{}: {e}", input.display())),
        },
        Command::Search {
            spec,
            edges,
            max_nodes,
            timeout_ms,
            out,
        } => {
            let budget = SearchBudget::new(max_nodes, timeout_ms);
            let input = match (&spec, &edges) {
                (Some(s), _) => SearchInput::Spec(s),
                (None, Some(p)) => SearchInput::EdgeFile(p),
                (None, None) => unreachable!("clap requires one of --spec/--edges"),
            };
            let (result, certificate) = cli::run_search(input, budget);
            match (out, certificate) {
                (Some(path), Some(doc)) => match std::fs::write(&path, doc) {
                    Ok(()) => result,
                    Err(e) => usage(format!("{}: {e}", path.display())),
                },
                _ => result,
            }
        }
        Command::Bench { q_list, reps, out } => {
            let q_values = q_list.unwrap_or_else(|| DEFAULT_Q_VALUES.to_vec());
            let mut result = cli::run_bench_command(&q_values, reps);
            if result.code == exit::SUCCESS {
                let summary = std::mem::take(&mut result.stderr);
                result = redirect(result, out.as_ref());
                result.stdout.push_str(&summary);
            }
            result
        }
    };
    print!("{}", out.stdout);
    eprint!("{}", out.stderr);
    ExitCode::from(out.code as u8)
}

/// Moves stdout into `path`, if given.
fn redirect(mut result: CommandOutput, path: Option<&PathBuf>) -> CommandOutput {
    if let Some(path) = path {
        if let Err(e) = std::fs::write(path, &result.stdout) {
            return usage(format!("{}: {e}", path.display()));
        }
        result.stdout.clear();
    }
    result
}

fn usage(message: String) -> CommandOutput {
    CommandOutput {
        stdout: String::new(),
        stderr: format!("error: {message}\n"),
        code: exit::USAGE,
    }
}
