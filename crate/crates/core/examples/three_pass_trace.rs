//! Traces the linear-time construction: markers, cycle pass, path pass.
//!
//!     cargo run --example three_pass_trace -- 10 7

use odd_graceful::construct::{cycle_pass, init_markers, path_pass};
use odd_graceful::validate_params;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1).map(|a| a.parse::<usize>());
    let m = args.next().transpose()?.unwrap_or(10);
    let n = args.next().transpose()?.unwrap_or(7);
    let params = validate_params(m, n)?;

    let markers = init_markers(&params);
    println!("ACTIVE vertex u{m} = {}", markers.active_vertex_label);
    println!(
        "DOUBLE-JUMP edge e{} = {}",
        m - 1,
        markers.double_jump_edge_label
    );

    let cycle = cycle_pass(&params, &markers);
    println!(
        "cycle vertices: {:?}",
        cycle.labeling.iter().map(|(_, l)| l).collect::<Vec<_>>()
    );
    println!("cycle edges:    {:?}", cycle.edge_labels);

    let path = path_pass(&params, &markers);
    println!(
        "path vertices:  {:?}",
        path.labeling.iter().map(|(_, l)| l).collect::<Vec<_>>()
    );
    println!("path edges:     {:?}", path.edge_labels);
    if let Some(j) = path.edge_labels.windows(2).position(|w| w[0] - w[1] == 4) {
        println!(
            "skipped {} between e'{} and e'{}",
            markers.double_jump_edge_label,
            j + 1,
            j + 2
        );
    } else {
        println!("skipped {} before e'1", markers.double_jump_edge_label);
    }
    Ok(())
}
