//! Exhaustive backtracking search for odd graceful labelings.
//!
//! Vertices are labeled depth-first from `{0, …, 2q - 1}` in an order that
//! keeps each new vertex adjacent to an earlier one, so edge labels become
//! known (and prunable) as early as possible. Only complement symmetry is
//! broken: the first vertex takes a label `<= q - 1`.

use std::time::{Duration, Instant};

use serde::Serialize;

use crate::graph::{GraphTopology, Label, Labeling};
use crate::verify::verify_odd_graceful;

pub const DEFAULT_MAX_NODES: u64 = 100_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchBudget {
    max_nodes: u64,
    timeout: Option<Duration>,
}

impl SearchBudget {
    /// `max_nodes` is clamped to at least 1.
    pub fn new(max_nodes: u64, timeout_ms: Option<u64>) -> Self {
        SearchBudget {
            max_nodes: max_nodes.max(1),
            timeout: timeout_ms.map(Duration::from_millis),
        }
    }

    pub fn max_nodes(&self) -> u64 {
        self.max_nodes
    }
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget::new(DEFAULT_MAX_NODES, None)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum SearchStatus {
    Found,
    ExhaustedNone,
    BudgetExhausted,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub struct SearchStats {
    /// Partial assignments that survived pruning.
    pub nodes_expanded: u64,
    /// Candidate labels considered.
    pub assignments_tried: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchOutcome {
    pub status: SearchStatus,
    pub labeling: Option<Labeling>,
    pub stats: SearchStats,
}

pub fn exhaustive_search(topology: &GraphTopology, budget: SearchBudget) -> SearchOutcome {
    search_with_symmetry(topology, budget, true)
}

/// Like [`exhaustive_search`], with complement symmetry breaking optional.
pub fn search_with_symmetry(
    topology: &GraphTopology,
    budget: SearchBudget,
    break_complement: bool,
) -> SearchOutcome {
    let mut s = Searcher::new(topology, budget, break_complement);
    let status = match s.descend(0) {
        Step::Found => SearchStatus::Found,
        Step::Exhausted => SearchStatus::ExhaustedNone,
        Step::OutOfBudget => SearchStatus::BudgetExhausted,
    };
    let labeling = (status == SearchStatus::Found).then(|| {
        let mut pairs = Vec::with_capacity(s.order.len());
        for (slot, &pos) in s.order.iter().enumerate() {
            pairs.push((topology.vertices()[pos], s.assigned[slot]));
        }
        let labeling = Labeling::from_pairs(pairs).expect("each vertex assigned once");
        let report = verify_odd_graceful(topology, &labeling).expect("labeling is total");
        assert!(
            report.is_odd_graceful,
            "search produced an invalid certificate: {report}"
        );
        labeling
    });
    SearchOutcome {
        status,
        labeling,
        stats: s.stats,
    }
}

/// Assignment order: breadth-first through each component in vertex order,
/// isolated vertices last.
fn assignment_order(topology: &GraphTopology) -> Vec<usize> {
    let adj = topology.adjacency();
    let count = adj.len();
    let mut seen = vec![false; count];
    let mut order = Vec::with_capacity(count);
    for root in 0..count {
        if seen[root] || adj[root].is_empty() {
            continue;
        }
        seen[root] = true;
        let mut queue = std::collections::VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            order.push(v);
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
    }
    order.extend((0..count).filter(|&v| adj[v].is_empty()));
    order
}

enum Step {
    Found,
    Exhausted,
    OutOfBudget,
}

struct Searcher {
    order: Vec<usize>,
    /// For each slot in `order`, the slots of earlier neighbors.
    back_edges: Vec<Vec<usize>>,
    assigned: Vec<Label>,
    vertex_used: Vec<bool>,
    edge_used: Vec<bool>,
    q: Label,
    break_complement: bool,
    budget: SearchBudget,
    started: Instant,
    stats: SearchStats,
}

impl Searcher {
    fn new(topology: &GraphTopology, budget: SearchBudget, break_complement: bool) -> Self {
        let order = assignment_order(topology);
        let mut slot_of = vec![0; order.len()];
        for (slot, &pos) in order.iter().enumerate() {
            slot_of[pos] = slot;
        }
        let mut back_edges = vec![Vec::new(); order.len()];
        for &(a, b) in topology.edge_positions() {
            let (sa, sb) = (slot_of[a], slot_of[b]);
            back_edges[sa.max(sb)].push(sa.min(sb));
        }
        let q = topology.q() as Label;
        Searcher {
            assigned: vec![0; order.len()],
            order,
            back_edges,
            vertex_used: vec![false; 2 * q as usize],
            edge_used: vec![false; 2 * q as usize],
            q,
            break_complement,
            budget,
            started: Instant::now(),
            stats: SearchStats::default(),
        }
    }

    fn descend(&mut self, slot: usize) -> Step {
        if slot == self.order.len() {
            return Step::Found;
        }
        let limit = if slot == 0 && self.break_complement {
            self.q
        } else {
            2 * self.q
        };
        let mut fresh = Vec::with_capacity(self.back_edges[slot].len());
        for label in 0..limit {
            if self.vertex_used[label as usize] {
                continue;
            }
            self.stats.assignments_tried += 1;
            fresh.clear();
            if !self.edges_ok(slot, label, &mut fresh) {
                continue;
            }
            self.stats.nodes_expanded += 1;
            if self.stats.nodes_expanded > self.budget.max_nodes || self.timed_out() {
                return Step::OutOfBudget;
            }
            self.assigned[slot] = label;
            self.vertex_used[label as usize] = true;
            for &d in &fresh {
                self.edge_used[d as usize] = true;
            }
            let step = self.descend(slot + 1);
            self.vertex_used[label as usize] = false;
            for &d in &fresh {
                self.edge_used[d as usize] = false;
            }
            match step {
                Step::Exhausted => {}
                other => return other,
            }
        }
        Step::Exhausted
    }

    /// Labels of the edges completed by `label` at `slot`; false if any is
    /// even, already used, or repeated among themselves.
    fn edges_ok(&self, slot: usize, label: Label, fresh: &mut Vec<Label>) -> bool {
        for &earlier in &self.back_edges[slot] {
            let d = label.abs_diff(self.assigned[earlier]);
            if d.is_multiple_of(2) || self.edge_used[d as usize] || fresh.contains(&d) {
                return false;
            }
            fresh.push(d);
        }
        true
    }

    fn timed_out(&self) -> bool {
        match self.budget.timeout {
            Some(t) if self.stats.nodes_expanded.is_multiple_of(1024) => {
                self.started.elapsed() >= t
            }
            _ => false,
        }
    }
}
