//! Runs the full claim registry: every closed-form statement is
//! adjudicated against ground-truth enumeration and reported as
//! CONFIRMED or REFUTED with a witness. Six claims come out REFUTED,
//! including the wheel-total recurrence, whose extrapolation diverges
//! from enumeration at n = 7.
//!
//! Run with: cargo run --release -p cec --example closed_form_audit

use cec::oracle::OracleConfig;
use cec::verify::{emit_report, run_claims, ReportFormat};

fn main() {
    let budget = OracleConfig {
        workers: 4,
        ..OracleConfig::default()
    };
    let reports = run_claims(None, &budget).expect("no filter, no unknown ids");
    print!("{}", emit_report(&reports, ReportFormat::Text, false));
}
