//! Builds the labeling of C_8 ∪ P_12 by both routes and prints it.
//!
//!     cargo run --example construct -- 8 12

use odd_graceful::{algorithmic_labeling, closed_form_labeling, edge_labels, validate_params};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1).map(|a| a.parse::<usize>());
    let m = args.next().transpose()?.unwrap_or(8);
    let n = args.next().transpose()?.unwrap_or(12);

    let params = validate_params(m, n)?;
    let closed = closed_form_labeling(&params);
    let algorithmic = algorithmic_labeling(&params);
    assert_eq!(closed, algorithmic);

    let topology = params.topology();
    println!("C{m} ∪ P{n}: q = {}, k = {}", params.q(), params.k());
    for (v, label) in closed.iter() {
        println!("  f({v}) = {label}");
    }
    for (i, (edge, label)) in edge_labels(&topology, &closed)?.labels.iter().enumerate() {
        println!("  f*({}) = f*({edge}) = {label}", topology.edge_name(i));
    }
    Ok(())
}
