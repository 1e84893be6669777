//! Ground-truth enumeration of (connected) edge covers by exhaustive
//! edge-subset search.
//!
//! The point of this module is to be trivially right, not fast: subsets
//! are machine-word bit sets, coverage is an OR of per-edge vertex
//! masks, and connectivity is a union-find rebuilt from scratch for
//! every subset. The subset space is partitioned by fixing the top
//! `chunking` edge bits, which gives independent work units for the
//! worker threads; partial coefficient vectors are merged by addition,
//! so the result is identical for any worker count and chunking.

use crate::graph::Graph;
use crate::poly::Poly;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OracleError {
    #[error("graph has {edges} edges, above the oracle budget of {max}")]
    BudgetExceeded { edges: usize, max: usize },
}

/// Budget and work-splitting knobs for the exhaustive scan.
#[derive(Clone, Debug)]
pub struct OracleConfig {
    /// Largest edge count the oracle will enumerate (hard cap 63).
    pub max_edges: usize,
    /// Worker threads; values below 1 behave like 1.
    pub workers: usize,
    /// Number of fixed high-order edge choices per work unit.
    pub chunking: usize,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            max_edges: 26,
            workers: 1,
            chunking: 8,
        }
    }
}

/// Connected edge cover polynomial by definition-level enumeration:
/// coefficient i counts subsets S of exactly i edges that cover every
/// vertex and induce a connected subgraph. For a connected graph on
/// n >= 2 vertices this is the same as S being a connected spanning
/// subgraph. Disconnected input yields the zero polynomial; a single
/// vertex yields the constant 1 (empty cover convention).
pub fn cec_poly_oracle(g: &Graph, cfg: &OracleConfig) -> Result<Poly, OracleError> {
    check_budget(g, cfg)?;
    if g.vertex_count() == 1 {
        return Ok(Poly::one());
    }
    if !g.is_connected() {
        return Ok(Poly::zero());
    }
    Ok(scan(g, cfg, true))
}

/// Edge cover polynomial: connectivity is not required, every vertex
/// just needs an incident chosen edge. A single vertex has no edge
/// cover, so the result there is the zero polynomial.
pub fn ec_poly_oracle(g: &Graph, cfg: &OracleConfig) -> Result<Poly, OracleError> {
    check_budget(g, cfg)?;
    Ok(scan(g, cfg, false))
}

/// Smallest size of a connected edge cover, or `None` if none exists.
pub fn min_cec_size(g: &Graph, cfg: &OracleConfig) -> Result<Option<usize>, OracleError> {
    Ok(cec_poly_oracle(g, cfg)?.min_exp())
}

fn check_budget(g: &Graph, cfg: &OracleConfig) -> Result<(), OracleError> {
    let max = cfg.max_edges.min(63);
    if g.edge_count() > max {
        return Err(OracleError::BudgetExceeded {
            edges: g.edge_count(),
            max,
        });
    }
    Ok(())
}

fn scan(g: &Graph, cfg: &OracleConfig, require_connected: bool) -> Poly {
    let n = g.vertex_count();
    let m = g.edge_count();
    let vmask: Vec<u64> = g
        .edges()
        .iter()
        .map(|&(u, v)| (1u64 << u) | (1u64 << v))
        .collect();
    let full: u64 = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    // a connected spanning subgraph needs >= n-1 edges; a cover needs
    // >= ceil(n/2) since each edge covers at most two vertices
    let min_size = if require_connected {
        n - 1
    } else {
        n.div_ceil(2)
    };

    let chunk_bits = cfg.chunking.min(m);
    let low_bits = m - chunk_bits;
    let units: u64 = 1u64 << chunk_bits;
    let workers = cfg.workers.max(1).min(units as usize);

    let unit_counts = |unit: u64| -> Vec<u64> {
        let mut counts = vec![0u64; m + 1];
        let mut parent = vec![0usize; n];
        let high = unit << low_bits;
        for low in 0..(1u64 << low_bits) {
            let mask = high | low;
            let size = mask.count_ones() as usize;
            if size < min_size {
                continue;
            }
            if covers_and_connects(mask, &vmask, full, n, require_connected, &mut parent) {
                counts[size] += 1;
            }
        }
        counts
    };

    let merged: Vec<u64> = if workers <= 1 {
        let mut total = vec![0u64; m + 1];
        for unit in 0..units {
            for (t, c) in total.iter_mut().zip(unit_counts(unit)) {
                *t += c;
            }
        }
        total
    } else {
        let partials: Vec<Vec<u64>> = std::thread::scope(|scope| {
            let handles: Vec<_> = (0..workers)
                .map(|w| {
                    let unit_counts = &unit_counts;
                    scope.spawn(move || {
                        let mut acc = vec![0u64; m + 1];
                        let mut unit = w as u64;
                        while unit < units {
                            for (t, c) in acc.iter_mut().zip(unit_counts(unit)) {
                                *t += c;
                            }
                            unit += workers as u64;
                        }
                        acc
                    })
                })
                .collect();
            handles.into_iter().map(|h| h.join().unwrap()).collect()
        });
        let mut total = vec![0u64; m + 1];
        for part in partials {
            for (t, c) in total.iter_mut().zip(part) {
                *t += c;
            }
        }
        total
    };

    Poly::from_coeffs(merged.into_iter().map(Into::into).collect())
}

fn covers_and_connects(
    mask: u64,
    vmask: &[u64],
    full: u64,
    n: usize,
    require_connected: bool,
    parent: &mut [usize],
) -> bool {
    let mut covered = 0u64;
    let mut bits = mask;
    while bits != 0 {
        covered |= vmask[bits.trailing_zeros() as usize];
        bits &= bits - 1;
    }
    if covered != full {
        return false;
    }
    if !require_connected {
        return true;
    }
    for (v, p) in parent.iter_mut().enumerate() {
        *p = v;
    }
    let mut components = n;
    let mut bits = mask;
    while bits != 0 {
        let e = bits.trailing_zeros() as usize;
        bits &= bits - 1;
        let vm = vmask[e];
        let u = vm.trailing_zeros() as usize;
        let v = (63 - vm.leading_zeros()) as usize;
        let (ru, rv) = (find(parent, u), find(parent, v));
        if ru != rv {
            parent[ru] = rv;
            components -= 1;
        }
    }
    components == 1
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{generate, Family, FamilySpec};
    use crate::poly::binomial;
    use num_bigint::BigUint;
    use num_traits::One;
    use proptest::prelude::*;

    fn gen(family: Family, params: &[usize]) -> Graph {
        generate(&FamilySpec::new(family, params)).unwrap()
    }

    fn cec(g: &Graph) -> Poly {
        cec_poly_oracle(g, &OracleConfig::default()).unwrap()
    }

    fn ec(g: &Graph) -> Poly {
        ec_poly_oracle(g, &OracleConfig::default()).unwrap()
    }

    // Definition-level re-enumeration with none of the production
    // shortcuts: recursive subset walk plus DFS connectivity.
    fn naive_cec(g: &Graph) -> Poly {
        let n = g.vertex_count();
        if n == 1 {
            return Poly::one();
        }
        let m = g.edge_count();
        let mut counts = vec![0u64; m + 1];
        for mask in 0u64..(1 << m) {
            let chosen: Vec<(usize, usize)> = g
                .edges()
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            let mut adj = vec![Vec::new(); n];
            for &(u, v) in &chosen {
                adj[u].push(v);
                adj[v].push(u);
            }
            if adj.iter().any(|a| a.is_empty()) {
                continue;
            }
            let mut seen = vec![false; n];
            let mut stack = vec![0];
            seen[0] = true;
            while let Some(u) = stack.pop() {
                for &w in &adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            if seen.iter().all(|&s| s) {
                counts[chosen.len()] += 1;
            }
        }
        Poly::from_coeffs(counts.into_iter().map(Into::into).collect())
    }

    #[test]
    fn path_star_cycle() {
        assert_eq!(cec(&gen(Family::Path, &[4])), Poly::x_pow(3));
        assert_eq!(cec(&gen(Family::Star, &[4])), Poly::x_pow(4));
        assert_eq!(
            cec(&gen(Family::Cycle, &[5])),
            Poly::from_u64s(&[0, 0, 0, 0, 5, 1])
        );
    }

    #[test]
    fn fan_4_ground_truth() {
        // 2^5 subsets checked two independent ways
        let f4 = gen(Family::Fan, &[4]);
        let expected = Poly::from_u64s(&[0, 0, 0, 8, 5, 1]);
        assert_eq!(cec(&f4), expected);
        assert_eq!(naive_cec(&f4), expected);
    }

    #[test]
    fn matches_naive_enumeration_on_mixed_graphs() {
        for spec in [
            FamilySpec::new(Family::Cycle, &[6][..]),
            FamilySpec::new(Family::Complete, &[4][..]),
            FamilySpec::new(Family::Wheel, &[5][..]),
            FamilySpec::new(Family::Friendship, &[2][..]),
            FamilySpec::new(Family::CompleteBipartite, &[2, 3][..]),
            FamilySpec::new(Family::Turan, &[5, 3][..]),
        ] {
            let g = generate(&spec).unwrap();
            assert_eq!(cec(&g), naive_cec(&g), "{spec}");
        }
    }

    #[test]
    fn octahedron_ground_truth() {
        // CP(3), 2^12 subsets, checked two independent ways; the last
        // coefficients are forced (the graph is 4-edge-connected, so
        // e_c(10) = C(12,2) = 66, e_c(11) = 12, e_c(12) = 1)
        let cp3 = gen(Family::CocktailParty, &[3]);
        let expected = Poly::from_u64s(&[0, 0, 0, 0, 0, 384, 740, 744, 489, 220, 66, 12, 1]);
        assert_eq!(cec(&cp3), expected);
        assert_eq!(naive_cec(&cp3), expected);
        assert_eq!(expected.total(), BigUint::from(2656u32));
    }

    #[test]
    fn wheel_7_ground_truth() {
        // 2^12 subsets, checked two independent ways; the leading
        // coefficient is the wheel spanning-tree count L_12 - 2 = 320
        // (Lucas), and 66, 12, 1 are forced by 3-edge-connectivity.
        // Total 1582: the claimed wheel recurrence value 1526 is wrong.
        let w7 = gen(Family::Wheel, &[7]);
        let expected = Poly::from_u64s(&[0, 0, 0, 0, 0, 0, 320, 534, 435, 214, 66, 12, 1]);
        assert_eq!(cec(&w7), expected);
        assert_eq!(naive_cec(&w7), expected);
        assert_eq!(expected.total(), BigUint::from(1582u32));
    }

    #[test]
    fn edge_cover_examples() {
        assert_eq!(
            ec(&gen(Family::CompleteBipartite, &[2, 2])).total(),
            BigUint::from(7u32)
        );
        assert_eq!(
            ec(&gen(Family::Complete, &[3])).total(),
            BigUint::from(4u32)
        );
        assert_eq!(ec(&gen(Family::Complete, &[2])), Poly::x_pow(1));
    }

    #[test]
    fn k22_edge_cover_poly() {
        // edge covers of C_4: 2 perfect matchings, 4 triples, the full set
        assert_eq!(
            ec(&gen(Family::CompleteBipartite, &[2, 2])),
            Poly::from_u64s(&[0, 0, 2, 4, 1])
        );
    }

    #[test]
    fn min_sizes() {
        let cfg = OracleConfig::default();
        assert_eq!(
            min_cec_size(&gen(Family::Cycle, &[6]), &cfg).unwrap(),
            Some(5)
        );
        assert_eq!(
            min_cec_size(&gen(Family::Star, &[4]), &cfg).unwrap(),
            Some(4)
        );
        assert_eq!(
            min_cec_size(&gen(Family::Complete, &[4]), &cfg).unwrap(),
            Some(3)
        );
    }

    #[test]
    fn disconnected_and_tiny() {
        let cfg = OracleConfig::default();
        let disjoint = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(cec_poly_oracle(&disjoint, &cfg).unwrap(), Poly::zero());
        // edge covers do not need connectivity
        assert_eq!(ec_poly_oracle(&disjoint, &cfg).unwrap(), Poly::x_pow(2));
        let single = Graph::new(1, []).unwrap();
        assert_eq!(cec_poly_oracle(&single, &cfg).unwrap(), Poly::one());
        assert_eq!(ec_poly_oracle(&single, &cfg).unwrap(), Poly::zero());
        assert_eq!(min_cec_size(&disjoint, &cfg).unwrap(), None);
    }

    #[test]
    fn budget_enforced() {
        let g = gen(Family::Complete, &[8]); // 28 edges
        let err = cec_poly_oracle(&g, &OracleConfig::default()).unwrap_err();
        assert_eq!(err, OracleError::BudgetExceeded { edges: 28, max: 26 });
    }

    #[test]
    fn cec_below_ec_coefficientwise() {
        for spec in [
            FamilySpec::new(Family::Complete, &[4][..]),
            FamilySpec::new(Family::CompleteBipartite, &[2, 3][..]),
            FamilySpec::new(Family::Wheel, &[5][..]),
        ] {
            let g = generate(&spec).unwrap();
            let c = cec(&g);
            let e = ec(&g);
            for i in 0..=g.edge_count() {
                assert!(c.coeff(i) <= e.coeff(i), "{spec} at {i}");
            }
            assert_eq!(c.coeff(g.edge_count()), BigUint::one());
        }
    }

    #[test]
    fn independent_of_workers_and_chunking() {
        let g = gen(Family::Wheel, &[6]);
        let baseline = cec(&g);
        for workers in [1, 2, 4] {
            for chunking in [0, 3, 8, 20] {
                let cfg = OracleConfig {
                    max_edges: 26,
                    workers,
                    chunking,
                };
                assert_eq!(cec_poly_oracle(&g, &cfg).unwrap(), baseline);
                assert_eq!(
                    ec_poly_oracle(&g, &cfg).unwrap(),
                    ec_poly_oracle(&g, &OracleConfig::default()).unwrap()
                );
            }
        }
    }

    #[test]
    fn bounds_hold_on_sample() {
        for spec in [
            FamilySpec::new(Family::Path, &[7][..]),
            FamilySpec::new(Family::Cycle, &[8][..]),
            FamilySpec::new(Family::Complete, &[5][..]),
            FamilySpec::new(Family::Friendship, &[3][..]),
            FamilySpec::new(Family::Hypercube, &[3][..]),
        ] {
            let g = generate(&spec).unwrap();
            let n = g.vertex_count();
            let lo = min_cec_size(&g, &OracleConfig::default()).unwrap().unwrap();
            assert!(n.div_ceil(2) <= lo && lo < n, "{spec}");
        }
    }

    #[test]
    fn coefficients_bounded_by_subset_counts() {
        let g = gen(Family::Hypercube, &[3]);
        let p = cec(&g);
        let m = g.edge_count() as u64;
        for i in 0..=g.edge_count() {
            assert!(p.coeff(i) <= binomial(m, i as u64));
        }
    }

    // tree from a Prüfer sequence; any labeled tree arises this way
    fn tree_from_pruefer(seq: &[usize]) -> Graph {
        let n = seq.len() + 2;
        let mut degree = vec![1usize; n];
        for &v in seq {
            degree[v] += 1;
        }
        let mut edges = Vec::with_capacity(n - 1);
        for &v in seq {
            let leaf = (0..n).find(|&u| degree[u] == 1).unwrap();
            edges.push((leaf.min(v), leaf.max(v)));
            degree[leaf] -= 1;
            degree[v] -= 1;
        }
        let mut rest = (0..n).filter(|&u| degree[u] == 1);
        let (a, b) = (rest.next().unwrap(), rest.next().unwrap());
        edges.push((a.min(b), a.max(b)));
        Graph::new(n, edges).unwrap()
    }

    proptest! {
        #[test]
        fn trees_have_single_cover(seq in proptest::collection::vec(0usize..8, 0..7)) {
            let seq: Vec<usize> = seq.iter().map(|&v| v % (seq.len() + 2)).collect();
            let t = tree_from_pruefer(&seq);
            let n = t.vertex_count();
            prop_assert_eq!(cec(&t), Poly::x_pow(n - 1));
        }
    }
}
