//! Cross-checks the deletion–contraction engine against the brute-force
//! oracle on the whole default corpus, then pushes the engine past the
//! oracle budget.
//!
//! Run with: cargo run --release -p cec --example oracle_vs_engine

use cec::corpus::default_corpus;
use cec::engine::{Engine, EngineConfig};
use cec::families::{generate, Family, FamilySpec};
use cec::oracle::{cec_poly_oracle, OracleConfig};
use std::time::Instant;

fn main() {
    let cfg = OracleConfig {
        workers: 4,
        ..OracleConfig::default()
    };
    let mut engine = Engine::new(EngineConfig::default());

    let started = Instant::now();
    let corpus = default_corpus();
    for spec in &corpus {
        let g = generate(spec).unwrap();
        let by_oracle = cec_poly_oracle(&g, &cfg).unwrap();
        let by_engine = engine.cec_poly(&g).unwrap();
        assert_eq!(by_oracle, by_engine, "{spec}");
    }
    println!(
        "engine == oracle on all {} corpus graphs ({:?})",
        corpus.len(),
        started.elapsed()
    );
    let stats = engine.stats();
    println!(
        "memo after the sweep: {} hits, {} misses, {} peak entries",
        stats.hits, stats.misses, stats.peak_entries
    );

    // K_8 has 28 edges, past the oracle budget; the engine still runs
    let k8 = generate(&FamilySpec::new(Family::Complete, [8])).unwrap();
    let started = Instant::now();
    let p = engine.cec_poly(&k8).unwrap();
    println!(
        "K_8 (28 edges, oracle-infeasible): total {} in {:?}",
        p.total(),
        started.elapsed()
    );
}
