//! Writes a labeling as JSON, DOT and CSV into a directory.
//!
//!     cargo run --example export_formats -- C8+P12 out/

use std::path::PathBuf;

use odd_graceful::io::{parse_graph_spec, render, Format};
use odd_graceful::{closed_form_labeling, validate_params};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let spec = args.next().unwrap_or_else(|| "C8+P12".to_string());
    let dir = PathBuf::from(args.next().unwrap_or_else(|| ".".to_string()));

    let (m, n) = parse_graph_spec(&spec)?.as_union()?;
    let params = validate_params(m, n)?;
    let topology = params.topology();
    let labeling = closed_form_labeling(&params);

    std::fs::create_dir_all(&dir)?;
    for (format, ext) in [
        (Format::Json, "json"),
        (Format::Dot, "dot"),
        (Format::Csv, "csv"),
    ] {
        let path = dir.join(format!("c{m}_p{n}.{ext}"));
        std::fs::write(&path, render(format, &topology, &labeling)?)?;
        println!("wrote {}", path.display());
    }
    Ok(())
}
