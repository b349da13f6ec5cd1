use super::ConstructionParams;
use crate::graph::{Label, Labeling};

/// Labels fixed before either pass runs.
///
/// The ACTIVE vertex is `u_m`, the one cycle vertex off the alternating
/// pattern. The DOUBLE-JUMP edge is `e_{m-1} = u_{m-1} u_m`; its label is the
/// one odd value the path pass has to skip.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Markers {
    pub active_vertex_label: i64,
    pub double_jump_edge_label: i64,
}

/// Vertex and edge labels produced by one pass.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pass {
    pub labeling: Labeling,
    pub edge_labels: Vec<Label>,
}

/// Depends on `q` and `m` only.
pub fn init_markers(params: &ConstructionParams) -> Markers {
    let q = params.q() as i64;
    let m = params.m() as i64;
    Markers {
        active_vertex_label: 2 * q - (2 * m - 3),
        double_jump_edge_label: 2 * q - 3 * m + 5,
    }
}

/// Labels `u_1 … u_m` and `e_1 … e_m`.
pub fn cycle_pass(params: &ConstructionParams, markers: &Markers) -> Pass {
    let m = params.m();
    let two_q = params.two_q();
    let mut f: Vec<Label> = vec![0; m];
    f[0] = 0;
    // Odd indices climb by two up to u_{m-1}.
    for i in (3..m).step_by(2) {
        f[i - 1] = f[i - 3] + 2;
    }
    for i in (2..m).step_by(2) {
        f[i - 1] = two_q - i as Label + 1;
    }
    f[m - 1] = to_label(markers.active_vertex_label);

    let edge_labels = (0..m).map(|i| f[i].abs_diff(f[(i + 1) % m])).collect();
    Pass {
        labeling: Labeling::from_cycle_labels(f),
        edge_labels,
    }
}

/// Labels `v_1 … v_n` and `e'_1 … e'_{n-1}`.
///
/// Each path edge takes the next odd value below its predecessor, starting
/// from the ACTIVE label, and steps over the DOUBLE-JUMP label once it meets
/// it. Vertices alternate: `v_{j+1} = v_j + e'_j` for odd `j`, `v_j - e'_j`
/// for even `j`.
pub fn path_pass(params: &ConstructionParams, markers: &Markers) -> Pass {
    let n = params.n();
    let mut f: Vec<i64> = Vec::with_capacity(n);
    let mut edge_labels = Vec::with_capacity(n.saturating_sub(1));
    f.push(1);
    let mut edge = markers.active_vertex_label;
    for j in 1..n {
        edge -= 2;
        if edge == markers.double_jump_edge_label {
            edge -= 2;
        }
        let prev = f[j - 1];
        f.push(if j % 2 == 1 { prev + edge } else { prev - edge });
        edge_labels.push(to_label(edge));
    }
    Pass {
        labeling: Labeling::from_path_labels(f.into_iter().map(to_label)),
        edge_labels,
    }
}

pub fn algorithmic_labeling(params: &ConstructionParams) -> Labeling {
    let markers = init_markers(params);
    let cycle = cycle_pass(params, &markers);
    let path = path_pass(params, &markers);
    cycle
        .labeling
        .merge(path.labeling)
        .expect("cycle and path vertices are disjoint")
}

fn to_label(value: i64) -> Label {
    Label::try_from(value).expect("pass produced a negative label")
}
