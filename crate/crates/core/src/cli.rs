//! Command implementations for the `odd-graceful` binary.
//!
//! Each command returns its stdout text, stderr text and exit status so it
//! can be driven in-process. File reading and writing stay in the binary.

use std::fmt::Write as _;

use crate::construct::{
    algorithmic_labeling, closed_form_labeling, validate_params, ConstructionParams,
};
use crate::io::bench::run_bench;
use crate::io::format::{render, Format, LabelingDocument};
use crate::io::spec::{parse_graph_spec, GraphSpec};
use crate::search::{exhaustive_search, SearchBudget, SearchStatus};
use crate::verify::verify_odd_graceful;

pub mod exit {
    pub const SUCCESS: i32 = 0;
    pub const FAILURE: i32 = 1;
    pub const EXHAUSTED_NONE: i32 = 2;
    pub const BUDGET_EXHAUSTED: i32 = 3;
    pub const USAGE: i32 = 64;
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConstructMethod {
    Closed,
    Algorithmic,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CommandOutput {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl CommandOutput {
    fn fail(code: i32, message: impl std::fmt::Display) -> Self {
        CommandOutput {
            stdout: String::new(),
            stderr: format!("error: {message}\n"),
            code,
        }
    }
}

pub fn run_generate(
    spec: &str,
    method: ConstructMethod,
    format: Format,
    force: bool,
) -> CommandOutput {
    let spec = match parse_graph_spec(spec) {
        Ok(s) => s,
        Err(e) => return CommandOutput::fail(exit::USAGE, e),
    };
    let (m, n) = match spec.as_union() {
        Ok(mn) => mn,
        Err(e) => return CommandOutput::fail(exit::USAGE, e),
    };
    let params = match validate_params(m, n) {
        Ok(p) => p,
        Err(e) if force => match ConstructionParams::forced(m, n) {
            Ok(p) => p,
            Err(_) => return CommandOutput::fail(exit::FAILURE, e),
        },
        Err(e) => return CommandOutput::fail(exit::FAILURE, e),
    };
    let labeling = match method {
        ConstructMethod::Closed => closed_form_labeling(&params),
        ConstructMethod::Algorithmic => algorithmic_labeling(&params),
    };
    let topology = params.topology();
    let report =
        verify_odd_graceful(&topology, &labeling).expect("construction labels every vertex");
    let stdout = render(format, &topology, &labeling).expect("construction labels every vertex");
    if report.is_odd_graceful {
        CommandOutput {
            stdout,
            stderr: String::new(),
            code: exit::SUCCESS,
        }
    } else {
        CommandOutput {
            stdout,
            stderr: report.to_string(),
            code: exit::FAILURE,
        }
    }
}

/// Verifies a JSON labeling document. With `json`, the report is printed as
/// JSON instead of text.
pub fn run_verify(document: &str, json: bool) -> CommandOutput {
    let parsed = LabelingDocument::from_json(document).and_then(|d| d.to_graph());
    let (topology, labeling) = match parsed {
        Ok(g) => g,
        Err(e) => return CommandOutput::fail(exit::USAGE, e),
    };
    let report = match verify_odd_graceful(&topology, &labeling) {
        Ok(r) => r,
        Err(e) => return CommandOutput::fail(exit::USAGE, e),
    };
    let stdout = if json {
        let mut s = serde_json::to_string_pretty(&report).expect("report serializes");
        s.push('\n');
        s
    } else {
        report.to_string()
    };
    let code = if report.is_odd_graceful {
        exit::SUCCESS
    } else {
        exit::FAILURE
    };
    CommandOutput {
        stdout,
        stderr: String::new(),
        code,
    }
}

pub enum SearchInput<'a> {
    Spec(&'a str),
    EdgeFile(&'a std::path::Path),
}

/// Runs the oracle. On `Found`, `certificate` holds the JSON document.
pub fn run_search(input: SearchInput<'_>, budget: SearchBudget) -> (CommandOutput, Option<String>) {
    let spec = match input {
        SearchInput::Spec(text) => parse_graph_spec(text),
        SearchInput::EdgeFile(path) => Ok(GraphSpec {
            terms: vec![crate::io::spec::Term::EdgeFile(path.to_path_buf())],
        }),
    };
    let topology = match spec.and_then(|s| s.to_topology()) {
        Ok(t) => t,
        Err(e) => return (CommandOutput::fail(exit::USAGE, e), None),
    };
    let outcome = exhaustive_search(&topology, budget);
    let mut stdout = String::new();
    writeln!(stdout, "status: {:?}", outcome.status).unwrap();
    writeln!(stdout, "q: {}", topology.q()).unwrap();
    writeln!(stdout, "nodes_expanded: {}", outcome.stats.nodes_expanded).unwrap();
    writeln!(
        stdout,
        "assignments_tried: {}",
        outcome.stats.assignments_tried
    )
    .unwrap();
    let certificate = outcome.labeling.as_ref().map(|l| {
        LabelingDocument::new(&topology, l)
            .expect("certificate is total")
            .to_json()
    });
    if let Some(l) = &outcome.labeling {
        let labels: Vec<String> = l.iter().map(|(v, x)| format!("{v}={x}")).collect();
        writeln!(stdout, "certificate: {}", labels.join(" ")).unwrap();
    }
    let code = match outcome.status {
        SearchStatus::Found => exit::SUCCESS,
        SearchStatus::ExhaustedNone => exit::EXHAUSTED_NONE,
        SearchStatus::BudgetExhausted => exit::BUDGET_EXHAUSTED,
    };
    (
        CommandOutput {
            stdout,
            stderr: String::new(),
            code,
        },
        certificate,
    )
}

/// CSV samples in `stdout`; the fitted slopes, as `#` lines, in `stderr`.
pub fn run_bench_command(q_values: &[usize], repetitions: usize) -> CommandOutput {
    match run_bench(q_values, repetitions) {
        Ok(report) => CommandOutput {
            stdout: report.to_csv(),
            stderr: report.summary(),
            code: exit::SUCCESS,
        },
        Err(e) => CommandOutput::fail(exit::USAGE, e),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generate_then_verify() {
        let out = run_generate("C6+P3", ConstructMethod::Closed, Format::Json, false);
        assert_eq!(out.code, exit::SUCCESS, "{}", out.stderr);
        assert_eq!(run_verify(&out.stdout, false).code, exit::SUCCESS);
    }

    #[test]
    fn generate_rejects_short_path() {
        let out = run_generate("C10+P6", ConstructMethod::Closed, Format::Json, false);
        assert_eq!(out.code, exit::FAILURE);
        assert!(out.stderr.contains("need n >= 7"), "{}", out.stderr);
        assert!(out.stdout.is_empty());
    }

    #[test]
    fn forced_generate_still_serializes() {
        let out = run_generate("C10+P6", ConstructMethod::Algorithmic, Format::Json, true);
        assert_eq!(out.code, exit::FAILURE);
        assert!(
            out.stderr.contains("DuplicateVertexLabel: 8 on u9, v6"),
            "{}",
            out.stderr
        );
        let verified = run_verify(&out.stdout, false);
        assert_eq!(verified.code, exit::FAILURE);
        assert!(verified
            .stdout
            .contains("DuplicateVertexLabel: 8 on u9, v6"));
    }

    #[test]
    fn force_cannot_fix_odd_cycle() {
        let out = run_generate("C5+P6", ConstructMethod::Closed, Format::Json, true);
        assert_eq!(out.code, exit::FAILURE);
    }

    #[test]
    fn generate_needs_one_cycle_one_path() {
        let out = run_generate("C4+C4", ConstructMethod::Closed, Format::Json, false);
        assert_eq!(out.code, exit::USAGE);
    }

    #[test]
    fn search_exit_codes() {
        let budget = SearchBudget::default();
        assert_eq!(
            run_search(SearchInput::Spec("C3"), budget).0.code,
            exit::EXHAUSTED_NONE
        );
        let (out, cert) = run_search(SearchInput::Spec("C4"), budget);
        assert_eq!(out.code, exit::SUCCESS);
        assert_eq!(run_verify(&cert.unwrap(), false).code, exit::SUCCESS);
        let tight = SearchBudget::new(1, None);
        assert_eq!(
            run_search(SearchInput::Spec("C7"), tight).0.code,
            exit::BUDGET_EXHAUSTED
        );
        assert_eq!(
            run_search(SearchInput::Spec("C4+"), budget).0.code,
            exit::USAGE
        );
    }

    #[test]
    fn bench_errors_are_usage() {
        assert_eq!(run_bench_command(&[1000], 0).code, exit::USAGE);
        assert_eq!(run_bench_command(&[5], 1).code, exit::USAGE);
    }
}
