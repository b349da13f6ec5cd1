//! Runs the exhaustive oracle on small cycles and cycle-path unions.

use odd_graceful::io::parse_graph_spec;
use odd_graceful::{exhaustive_search, SearchBudget};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let specs: Vec<String> = std::env::args().skip(1).collect();
    let specs = if specs.is_empty() {
        ["C3", "C4", "C5", "C6", "C7", "C4+P3", "C6+P3"]
            .map(String::from)
            .to_vec()
    } else {
        specs
    };
    for spec in specs {
        let topology = parse_graph_spec(&spec)?.to_topology()?;
        let outcome = exhaustive_search(&topology, SearchBudget::default());
        print!(
            "{spec:>6}: {:?} after {} nodes",
            outcome.status, outcome.stats.nodes_expanded
        );
        if let Some(labeling) = outcome.labeling {
            let labels: Vec<String> = labeling.iter().map(|(v, l)| format!("{v}={l}")).collect();
            print!(" [{}]", labels.join(" "));
        }
        println!();
    }
    Ok(())
}
