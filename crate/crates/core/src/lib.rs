//! Odd graceful labelings of the disjoint union of an even cycle and a path.
//!
//! - [`graph`]: topologies for `C_m ∪ P_n` and arbitrary small graphs.
//! - [`construct`]: closed-form and linear-time algorithmic labelings.
//! - [`verify`]: certificate checking with itemized violations.
//! - [`search`]: exhaustive backtracking oracle for small graphs.
//! - [`io`]: graph-spec parsing, JSON/DOT/CSV formats, benchmarking.
//! - [`cli`]: the command implementations behind the `odd-graceful` binary.

pub mod cli;
pub mod construct;
pub mod graph;
pub mod io;
pub mod search;
pub mod verify;

pub use construct::{
    algorithmic_labeling, closed_form_labeling, validate_params, ConstructionParams, ParamError,
};
pub use graph::{
    build_free_graph, build_union_graph, Edge, EdgeLabelMap, GraphError, GraphTopology, Label,
    Labeling, VertexId, VertexKind,
};
pub use search::{exhaustive_search, SearchBudget, SearchOutcome, SearchStatus};
pub use verify::{edge_labels, verify_odd_graceful, VerificationReport, VerifyError, Violation};
