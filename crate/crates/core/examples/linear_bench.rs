//! Times both constructions for growing q and fits the log-log slope.
//! Run with `--release` for representative numbers.

use odd_graceful::io::bench::{run_bench, DEFAULT_Q_VALUES};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let report = run_bench(&DEFAULT_Q_VALUES, 7)?;
    print!("{}", report.summary());
    Ok(())
}
