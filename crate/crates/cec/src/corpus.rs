//! The desk-scale test corpus: every family at the parameter ranges the
//! verification suite and the unimodality scanner sweep by default.

use crate::families::{Family, FamilySpec};

/// Turán parameters whose polynomials are pinned as fixtures.
pub const TURAN_TABLE_PARAMS: [(usize, usize); 6] =
    [(3, 2), (4, 2), (4, 3), (5, 2), (5, 3), (5, 4)];

/// Default corpus: all graphs are within the default oracle budget.
pub fn default_corpus() -> Vec<FamilySpec> {
    let mut corpus = Vec::new();
    for n in 2..=10 {
        corpus.push(FamilySpec::new(Family::Path, [n]));
    }
    for n in 3..=10 {
        corpus.push(FamilySpec::new(Family::Cycle, [n]));
    }
    for n in 1..=10 {
        corpus.push(FamilySpec::new(Family::Star, [n]));
    }
    for n in 2..=6 {
        corpus.push(FamilySpec::new(Family::Complete, [n]));
    }
    for n in 2..=6 {
        corpus.push(FamilySpec::new(Family::CompleteBipartite, [2, n]));
    }
    for k in 1..=4 {
        corpus.push(FamilySpec::new(Family::Friendship, [k]));
    }
    for m in 2..=4 {
        for n in 1..=3 {
            corpus.push(FamilySpec::new(Family::Lollipop, [m, n]));
        }
    }
    for n in 4..=8 {
        corpus.push(FamilySpec::new(Family::Fan, [n]));
    }
    for n in 4..=7 {
        corpus.push(FamilySpec::new(Family::Wheel, [n]));
    }
    for n in 2..=3 {
        corpus.push(FamilySpec::new(Family::CocktailParty, [n]));
    }
    for d in 2..=3 {
        corpus.push(FamilySpec::new(Family::Hypercube, [d]));
    }
    for (n, k) in TURAN_TABLE_PARAMS {
        corpus.push(FamilySpec::new(Family::Turan, [n, k]));
    }
    corpus
}

/// Corpus restricted to one family, for `scan-unimodal --family`.
/// `max` bounds the single swept parameter (the last one for lollipop).
pub fn family_corpus(family: Family, max: usize) -> Vec<FamilySpec> {
    let start = match family {
        Family::Path => 1,
        Family::Cycle => 3,
        Family::Star | Family::Complete | Family::Hypercube => 1,
        Family::Friendship => 1,
        Family::Fan => 2,
        Family::Wheel => 4,
        Family::CocktailParty => 2,
        _ => 0,
    };
    match family {
        Family::CompleteBipartite => (1..=max).map(|n| FamilySpec::new(family, [2, n])).collect(),
        Family::CompleteMultipartite => {
            (1..=max).map(|n| FamilySpec::new(family, [n, n])).collect()
        }
        Family::Lollipop => (1..=max).map(|n| FamilySpec::new(family, [3, n])).collect(),
        Family::Turan => (3..=max.max(3))
            .flat_map(|n| (2..n).map(move |k| FamilySpec::new(family, [n, k])))
            .collect(),
        _ => (start..=max.max(start))
            .map(|n| FamilySpec::new(family, [n]))
            .collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::generate;

    #[test]
    fn corpus_generates_within_oracle_budget() {
        let corpus = default_corpus();
        assert!(corpus.len() > 50);
        for spec in &corpus {
            let g = generate(spec).unwrap();
            assert!(g.edge_count() <= 26, "{spec} has {} edges", g.edge_count());
        }
    }

    #[test]
    fn family_corpus_respects_ranges() {
        assert_eq!(family_corpus(Family::Cycle, 12).len(), 10);
        assert!(family_corpus(Family::Wheel, 3).len() == 1); // clamped to n = 4
        for spec in family_corpus(Family::Turan, 6) {
            spec.validate().unwrap();
        }
    }
}
