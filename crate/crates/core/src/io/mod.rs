//! Graph-spec parsing, labeling document formats and the benchmark harness.

pub mod bench;
pub mod format;
pub mod spec;

pub use bench::{run_bench, BenchError, BenchReport, BenchSample, LogLogFit, Method};
pub use format::{render, DocumentError, Format, LabelingDocument};
pub use spec::{parse_graph_spec, GraphSpec, SpecError, Term};
