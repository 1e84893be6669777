//! Edge-list file round trip: generate a graph, serialize it, parse it
//! back, and compute its polynomial — the same path `cec poly --file`
//! takes.
//!
//! Run with: cargo run -p cec --example edge_list_io

use cec::engine::cec_poly_engine;
use cec::families::{generate, Family, FamilySpec};
use cec::Graph;

fn main() {
    let q3 = generate(&FamilySpec::new(Family::Hypercube, [3])).unwrap();
    let text = q3.to_edge_list();
    println!("Q_3 in edge-list form:\n{text}");

    let parsed = Graph::parse_edge_list(&text).unwrap();
    assert_eq!(parsed, q3);
    println!(
        "parsed back: {} vertices, {} edges, connected: {}",
        parsed.vertex_count(),
        parsed.edge_count(),
        parsed.is_connected()
    );
    println!("E_c = {}", cec_poly_engine(&parsed).unwrap());

    // parse errors carry line numbers
    for bad in ["2 1\n0 0\n", "3 2\n0 1\n0 9\n", "3 2\n0 1\n0 1\n"] {
        println!("{:?} -> {}", bad, Graph::parse_edge_list(bad).unwrap_err());
    }
}
