//! Spanning trees three ways: the matrix-tree determinant, the
//! closed-form product formulas for hypercubes and Turán graphs, and
//! the lowest coefficient of E_c (minimal connected edge covers are
//! exactly the spanning trees).
//!
//! Run with: cargo run -p cec --example spanning_trees

use cec::engine::{cec_poly_engine, spanning_tree_count};
use cec::families::{generate, Family, FamilySpec};
use cec::formulas::{hypercube_spanning_trees, turan_spanning_trees};

fn main() {
    for d in 1..=4 {
        let g = generate(&FamilySpec::new(Family::Hypercube, [d])).unwrap();
        let kirchhoff = spanning_tree_count(&g);
        println!(
            "t(Q_{d}) = {kirchhoff} (formula: {})",
            hypercube_spanning_trees(d)
        );
        assert_eq!(kirchhoff, hypercube_spanning_trees(d));
    }

    for (n, k) in [(4, 2), (4, 3), (5, 3), (7, 3), (9, 4)] {
        let g = generate(&FamilySpec::new(Family::Turan, [n, k])).unwrap();
        let kirchhoff = spanning_tree_count(&g);
        println!(
            "t(T({n},{k})) = {kirchhoff} (formula: {})",
            turan_spanning_trees(n, k)
        );
        assert_eq!(kirchhoff, turan_spanning_trees(n, k));
    }

    // the lowest nonzero coefficient of E_c counts spanning trees
    let q3 = generate(&FamilySpec::new(Family::Hypercube, [3])).unwrap();
    let p = cec_poly_engine(&q3).unwrap();
    println!(
        "E_c(Q_3,x) = {p}; lowest coefficient {} = t(Q_3)",
        p.coeff(p.min_exp().unwrap())
    );
    assert_eq!(p.coeff(p.min_exp().unwrap()), spanning_tree_count(&q3));
}
