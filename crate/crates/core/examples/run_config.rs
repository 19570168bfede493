//! Run a bundled experiment config end to end and summarize its manifest.
//! Usage: `cargo run --release --example run_config -- [config.toml]`.

use std::path::PathBuf;

use tat_sampling::experiment::{run_experiment, ExperimentConfig};

fn main() -> tat_sampling::error::Result<()> {
    let path = std::env::args().nth(1).map(PathBuf::from).unwrap_or_else(|| {
        PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("configs/empty.toml")
    });
    let mut cfg = ExperimentConfig::load(&path)?;
    cfg.output_dir = std::env::temp_dir().join(format!("tatsim_{}", cfg.name));
    let m = run_experiment(&cfg)?;
    println!("{}: trivial = {}, band limit = {:?}", m.name, m.trivial, m.band_limit);
    println!("achieved s_t = {:.4}, decimation {:?}", m.achieved.s_t, m.decimation);
    for s in &m.sources {
        println!("source at {:?}: retained {:?}", s.source.x, s.retained);
    }
    for a in &m.artifacts {
        println!("artifact k = {:+} at ({:.3}, {:.3})", a.k, a.x[0], a.x[1]);
    }
    println!("{} files in {}", m.outputs.len(), cfg.output_dir.display());
    Ok(())
}
