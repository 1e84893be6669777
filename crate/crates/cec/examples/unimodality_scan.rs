//! Scans ground-truth E_c coefficient sequences over the default corpus
//! for unimodality; a counterexample would print with its full
//! coefficient list.
//!
//! Run with: cargo run --release -p cec --example unimodality_scan

use cec::corpus::default_corpus;
use cec::oracle::OracleConfig;
use cec::verify::{render_scan, scan_unimodality, ReportFormat};

fn main() {
    let budget = OracleConfig {
        workers: 4,
        ..OracleConfig::default()
    };
    let report = scan_unimodality(&default_corpus(), &budget);
    print!("{}", render_scan(&report, ReportFormat::Text));
}
