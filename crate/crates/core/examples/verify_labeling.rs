//! Checks a valid labeling, a corrupted copy, and an out-of-range instance.

use odd_graceful::construct::ConstructionParams;
use odd_graceful::{build_free_graph, closed_form_labeling, validate_params, verify_odd_graceful};
use odd_graceful::{Labeling, VertexId};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let params = validate_params(6, 5)?;
    let topology = params.topology();
    let good = closed_form_labeling(&params);
    print!(
        "C6 ∪ P5, constructed: {}",
        verify_odd_graceful(&topology, &good)?
    );

    // Give v_1 the label of u_1.
    let mut pairs: Vec<_> = good.iter().collect();
    let u1 = good.get(VertexId::cycle(1)).unwrap();
    pairs[6].1 = u1;
    let bad = Labeling::from_pairs(pairs)?;
    print!(
        "C6 ∪ P5, corrupted: {}",
        verify_odd_graceful(&topology, &bad)?
    );

    let forced = ConstructionParams::forced(10, 6)?;
    let report = verify_odd_graceful(&forced.topology(), &closed_form_labeling(&forced))?;
    print!("C10 ∪ P6, forced below the bound: {report}");

    let triangle = build_free_graph(&[(1, 2), (2, 3), (3, 1)])?;
    let labels =
        Labeling::from_pairs((1..=3).map(|i| (VertexId::free(i), i as u64 - 1)).collect())?;
    print!(
        "triangle (0, 1, 2): {}",
        verify_odd_graceful(&triangle, &labels)?
    );
    Ok(())
}
