//! Computes E_c(G,x) for one instance of every built-in family.
//!
//! Run with: cargo run -p cec --example family_polynomials

use cec::engine::EngineConfig;
use cec::families::{Family, FamilySpec};
use cec::methods::{cec_for_spec, Method};
use cec::oracle::OracleConfig;

fn main() {
    let ocfg = OracleConfig::default();
    let ecfg = EngineConfig::default();
    let instances = [
        FamilySpec::new(Family::Path, [6]),
        FamilySpec::new(Family::Cycle, [6]),
        FamilySpec::new(Family::Star, [5]),
        FamilySpec::new(Family::Complete, [5]),
        FamilySpec::new(Family::CompleteBipartite, [2, 4]),
        FamilySpec::new(Family::CompleteMultipartite, [1, 2, 2]),
        FamilySpec::new(Family::Friendship, [3]),
        FamilySpec::new(Family::Lollipop, [4, 2]),
        FamilySpec::new(Family::Fan, [5]),
        FamilySpec::new(Family::Wheel, [6]),
        FamilySpec::new(Family::CocktailParty, [3]),
        FamilySpec::new(Family::Hypercube, [3]),
        FamilySpec::new(Family::Turan, [6, 3]),
    ];
    for spec in instances {
        let result = cec_for_spec(&spec, Method::Auto, &ocfg, &ecfg).expect("desk-scale instance");
        for note in &result.notices {
            println!("  [{spec}] note: {note}");
        }
        println!(
            "{:<28} E_c = {} ; total {}",
            spec.to_string(),
            result.poly,
            result.poly.total()
        );
    }
}
