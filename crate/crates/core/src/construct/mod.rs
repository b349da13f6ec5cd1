//! Odd graceful labelings of `C_m ∪ P_n`, built two ways.
//!
//! [`closed_form_labeling`] evaluates the per-vertex formulas directly.
//! [`algorithmic_labeling`] runs the linear three-pass procedure: compute the
//! two markers, label the cycle, then walk the path edge by edge. The two
//! must agree on every vertex.

mod algorithm;
mod closed_form;

pub use algorithm::{algorithmic_labeling, cycle_pass, init_markers, path_pass, Markers, Pass};
pub use closed_form::{closed_form_labeling, label_cycle_vertices, label_path_vertices};

use thiserror::Error;

use crate::graph::{build_union_graph, GraphError, GraphTopology, Label};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParamError {
    #[error("odd cycle C_{0}: every graph with an odd cycle is not odd graceful")]
    OddCycle(usize),
    #[error("cycle C_{0} is too small, need m >= 4")]
    CycleTooSmall(usize),
    #[error("path P_{n} is too short for C_{m}: need n >= {required}")]
    PathTooShort { m: usize, n: usize, required: usize },
}

/// A validated `(m, n)` pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ConstructionParams {
    m: usize,
    n: usize,
}

/// Smallest path length the construction supports for `C_m`.
///
/// The smallest even path label must stay above `m - 2`, the largest even
/// cycle label. That gives `n > m - 2` when `m/2` is even and `n > m - 4`
/// when it is odd.
pub fn min_path_len(m: usize) -> usize {
    if (m / 2).is_multiple_of(2) {
        m - 1
    } else {
        m - 3
    }
}

pub fn validate_params(m: usize, n: usize) -> Result<ConstructionParams, ParamError> {
    if m % 2 == 1 {
        return Err(ParamError::OddCycle(m));
    }
    if m < 4 {
        return Err(ParamError::CycleTooSmall(m));
    }
    let required = min_path_len(m);
    if n < required {
        return Err(ParamError::PathTooShort { m, n, required });
    }
    Ok(ConstructionParams { m, n })
}

impl ConstructionParams {
    /// Skips the path-length bound so out-of-range instances can be built
    /// and shown to fail verification. `m` must still be even and `>= 4`.
    pub fn forced(m: usize, n: usize) -> Result<Self, GraphError> {
        build_union_graph(m, n)?;
        Ok(ConstructionParams { m, n })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn q(&self) -> usize {
        self.m + self.n - 1
    }

    pub fn k(&self) -> usize {
        self.m / 2
    }

    /// Whether the path-length bound holds.
    pub fn is_in_range(&self) -> bool {
        self.n >= min_path_len(self.m)
    }

    pub fn topology(&self) -> GraphTopology {
        build_union_graph(self.m, self.n).expect("params hold m even, m >= 4, n >= 1")
    }

    pub(crate) fn two_q(&self) -> Label {
        2 * self.q() as Label
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validate_examples() {
        let p = validate_params(4, 3).unwrap();
        assert_eq!((p.q(), p.k()), (6, 2));
        assert_eq!(
            validate_params(8, 6),
            Err(ParamError::PathTooShort {
                m: 8,
                n: 6,
                required: 7
            })
        );
        assert_eq!(
            validate_params(10, 6),
            Err(ParamError::PathTooShort {
                m: 10,
                n: 6,
                required: 7
            })
        );
        assert_eq!(validate_params(7, 9), Err(ParamError::OddCycle(7)));
        assert_eq!(validate_params(2, 9), Err(ParamError::CycleTooSmall(2)));
        assert_eq!(validate_params(0, 9), Err(ParamError::CycleTooSmall(0)));
    }

    #[test]
    fn bound_by_parity_of_half_cycle() {
        assert_eq!(min_path_len(4), 3);
        assert_eq!(min_path_len(6), 3);
        assert_eq!(min_path_len(8), 7);
        assert_eq!(min_path_len(10), 7);
        assert_eq!(min_path_len(12), 11);
        assert_eq!(min_path_len(14), 11);
        assert!(validate_params(12, 10).is_err());
        assert!(validate_params(14, 11).is_ok());
    }

    #[test]
    fn forced_keeps_structural_checks() {
        let p = ConstructionParams::forced(10, 6).unwrap();
        assert!(!p.is_in_range());
        assert!(ConstructionParams::forced(5, 6).is_err());
        assert!(ConstructionParams::forced(4, 0).is_err());
    }

    #[test]
    fn error_message_names_minimum() {
        let msg = validate_params(10, 6).unwrap_err().to_string();
        assert!(msg.contains("need n >= 7"), "{msg}");
    }
}
