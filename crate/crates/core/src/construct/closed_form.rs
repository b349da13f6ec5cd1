use super::ConstructionParams;
use crate::graph::{Label, Labeling};

/// `f(u_i) = i - 1` for odd `i`, `2q - (i - 1)` for even `i < m`, and the
/// exceptional `f(u_m) = 2q - 2m + 3`.
pub fn label_cycle_vertices(params: &ConstructionParams) -> Labeling {
    let m = params.m();
    let two_q = params.two_q();
    Labeling::from_cycle_labels((1..=m).map(|i| {
        let i = i as Label;
        if i == m as Label {
            two_q - 2 * i + 3
        } else if i % 2 == 1 {
            i - 1
        } else {
            two_q - (i - 1)
        }
    }))
}

/// Path labels; odd positions get small odd labels and even positions large
/// even ones. The formulas split on the parity of `k = m/2`.
pub fn label_path_vertices(params: &ConstructionParams) -> Labeling {
    let k = params.k() as Label;
    let two_m = 2 * params.m() as Label;
    let two_q = params.two_q();
    let k_odd = k % 2 == 1;
    Labeling::from_path_labels((1..=params.n()).map(|i| {
        let i = i as Label;
        match (k_odd, i % 2 == 1) {
            // The odd run shifts up by two once it passes v_{k-2}.
            (true, true) if i + 2 <= k => i,
            (true, true) => i + 2,
            (true, false) => two_q + 4 - two_m - i,
            (false, true) => i,
            // The even run drops an extra two from v_k onwards.
            (false, false) if i + 2 <= k => two_q + 4 - two_m - i,
            (false, false) => two_q + 2 - two_m - i,
        }
    }))
}

pub fn closed_form_labeling(params: &ConstructionParams) -> Labeling {
    label_cycle_vertices(params)
        .merge(label_path_vertices(params))
        .expect("cycle and path vertices are disjoint")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::validate_params;
    use crate::graph::VertexKind;

    fn cycle(m: usize, n: usize) -> Vec<Label> {
        label_cycle_vertices(&validate_params(m, n).unwrap()).labels_of(VertexKind::Cycle)
    }

    fn path(m: usize, n: usize) -> Vec<Label> {
        label_path_vertices(&validate_params(m, n).unwrap()).labels_of(VertexKind::Path)
    }

    #[test]
    fn cycle_examples() {
        assert_eq!(cycle(4, 3), [0, 11, 2, 7]);
        assert_eq!(cycle(6, 3), [0, 15, 2, 13, 4, 7]);
        assert_eq!(cycle(10, 7), [0, 31, 2, 29, 4, 27, 6, 25, 8, 15]);
    }

    #[test]
    fn path_examples() {
        assert_eq!(path(8, 7), [1, 14, 3, 10, 5, 8, 7]);
        assert_eq!(path(6, 3), [1, 6, 5]);
        assert_eq!(path(4, 3), [1, 4, 3]);
    }

    #[test]
    fn labels_stay_in_range() {
        for m in (4..=20).step_by(2) {
            for n in crate::construct::min_path_len(m)..40 {
                let p = validate_params(m, n).unwrap();
                let top = p.two_q() - 1;
                assert!(closed_form_labeling(&p).iter().all(|(_, l)| l <= top));
            }
        }
    }

    #[test]
    fn parity_structure() {
        let p = validate_params(14, 30).unwrap();
        for (v, l) in closed_form_labeling(&p).iter() {
            let odd_index = v.index % 2 == 1;
            match v.kind {
                VertexKind::Cycle => assert_eq!(l % 2 == 0, odd_index, "{v}"),
                _ => assert_eq!(l % 2 == 1, odd_index, "{v}"),
            }
        }
    }
}
