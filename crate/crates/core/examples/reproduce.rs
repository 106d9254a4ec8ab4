//! Regenerate the deviation/avalanche grid for levels 3 and 4.
use modack::experiment::{reproduce, rows_to_csv, ExperimentConfig};

fn main() -> modack::Result<()> {
    let seed = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(0);
    let config = ExperimentConfig::table1(seed);
    let rows = reproduce(&config)?;
    print!("{}", rows_to_csv(&config, &rows));
    Ok(())
}
