//! Exact connected edge cover polynomials by deletion–contraction on
//! multigraphs, and spanning-tree counts by the matrix-tree theorem.
//!
//! The recursion computes R(G) = sum over spanning connected edge
//! subsets A of x^|A|. For a bundle of mu parallel edges between u and
//! v: either no copy is kept (delete the bundle, same vertex set, zero
//! if that disconnects the graph) or at least one copy is kept (contract
//! u and v; the kept subsets of the bundle contribute (1+x)^mu - 1).
//! Loops never affect connectivity, so each loop contributes an
//! independent (1+x) factor. Base case: one vertex, no edges, R = 1.
//!
//! Results are memoized on an isomorphism-invariant key. Up to a
//! configurable size the key is the exact minimum encoding over all
//! invariant-respecting vertex relabelings; beyond that a weaker key is
//! used (invariant-sorted relabeling without minimization), which can
//! only reduce memo hits, never change results.

use crate::graph::Graph;
use crate::poly::Poly;
use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};
use std::collections::HashMap;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum EngineError {
    #[error("engine resource limit exceeded: {what}")]
    ResourceLimit { what: String },
}

/// Which bundle the recursion branches on next. All heuristics give the
/// same polynomial; they differ only in recursion shape.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum EdgeHeuristic {
    /// Bundle of highest multiplicity, ties broken by endpoint order.
    #[default]
    DensestFirst,
    /// First bundle in endpoint order.
    FirstBundle,
    /// Bundle of lowest multiplicity, ties broken by endpoint order.
    SparsestFirst,
}

#[derive(Clone, Debug)]
pub struct EngineConfig {
    /// Memo table entry budget; exceeding it is a loud error, never a
    /// wrong answer.
    pub max_memo_entries: usize,
    /// Recursion depth budget.
    pub max_depth: usize,
    /// Largest vertex count for exact canonical labeling.
    pub canon_vertex_limit: usize,
    /// Cap on relabelings tried during exact canonicalization; graphs
    /// whose symmetry class exceeds it fall back to the weak key.
    pub canon_perm_budget: u64,
    pub heuristic: EdgeHeuristic,
}

impl Default for EngineConfig {
    fn default() -> Self {
        EngineConfig {
            max_memo_entries: 1 << 20,
            max_depth: 10_000,
            canon_vertex_limit: 10,
            canon_perm_budget: 50_000,
            heuristic: EdgeHeuristic::DensestFirst,
        }
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct MemoStats {
    pub hits: u64,
    pub misses: u64,
    pub peak_entries: usize,
}

/// Undirected multigraph: edge multiplicities plus per-vertex loop
/// counts. Contraction creates parallel edges, so the engine works here
/// even though its inputs are simple graphs.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MultiGraph {
    n: usize,
    loops: Vec<u32>,
    mult: Vec<u32>, // upper triangle, row-major
}

impl MultiGraph {
    pub fn from_graph(g: &Graph) -> MultiGraph {
        let mut mg = MultiGraph::empty(g.vertex_count());
        for &(u, v) in g.edges() {
            mg.add_edges(u, v, 1);
        }
        mg
    }

    pub fn empty(n: usize) -> MultiGraph {
        assert!(n >= 1, "multigraph needs at least one vertex");
        MultiGraph {
            n,
            loops: vec![0; n],
            mult: vec![0; n * (n - 1) / 2],
        }
    }

    fn idx(&self, u: usize, v: usize) -> usize {
        debug_assert!(u < v && v < self.n);
        u * (2 * self.n - u - 1) / 2 + (v - u - 1)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn multiplicity(&self, u: usize, v: usize) -> u32 {
        if u == v {
            return 0;
        }
        self.mult[self.idx(u.min(v), u.max(v))]
    }

    pub fn loop_count(&self, v: usize) -> u32 {
        self.loops[v]
    }

    pub fn add_edges(&mut self, u: usize, v: usize, count: u32) {
        if u == v {
            self.loops[u] += count;
        } else {
            let i = self.idx(u.min(v), u.max(v));
            self.mult[i] += count;
        }
    }

    pub fn total_loops(&self) -> u64 {
        self.loops.iter().map(|&l| l as u64).sum()
    }

    /// Bundles (u, v, multiplicity) with multiplicity >= 1 in endpoint
    /// order.
    pub fn bundles(&self) -> impl Iterator<Item = (usize, usize, u32)> + '_ {
        (0..self.n).flat_map(move |u| {
            (u + 1..self.n).filter_map(move |v| {
                let m = self.mult[self.idx(u, v)];
                (m > 0).then_some((u, v, m))
            })
        })
    }

    pub fn is_connected(&self) -> bool {
        let mut seen = vec![false; self.n];
        let mut stack = vec![0usize];
        seen[0] = true;
        while let Some(u) = stack.pop() {
            for v in (0..self.n).filter(|&v| v != u) {
                if !seen[v] && self.multiplicity(u, v) > 0 {
                    seen[v] = true;
                    stack.push(v);
                }
            }
        }
        seen.iter().all(|&s| s)
    }

    /// Removes every parallel copy between u and v; the vertex set stays.
    pub fn delete_bundle(&self, u: usize, v: usize) -> MultiGraph {
        let mut out = self.clone();
        let i = out.idx(u.min(v), u.max(v));
        out.mult[i] = 0;
        out
    }

    /// Contracts u and v (u < v), consuming the whole bundle between
    /// them: v merges into u, parallel edges toward a common neighbor
    /// collapse into multiplicities, loops carry over.
    pub fn contract(&self, u: usize, v: usize) -> MultiGraph {
        debug_assert!(u < v);
        let map = |w: usize| -> usize {
            if w == v {
                u
            } else if w > v {
                w - 1
            } else {
                w
            }
        };
        let mut out = MultiGraph::empty(self.n - 1);
        for (w, &l) in self.loops.iter().enumerate() {
            out.loops[map(w)] += l;
        }
        for (a, b, m) in self.bundles() {
            if (a, b) == (u, v) {
                continue;
            }
            out.add_edges(map(a), map(b), m);
        }
        out
    }
}

/// Isomorphism-invariant memo key. Equal keys always describe
/// isomorphic multigraphs; within the exact canonicalization regime,
/// isomorphic multigraphs also receive equal keys.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct MemoKey(Vec<u32>);

fn vertex_invariants(mg: &MultiGraph) -> Vec<Vec<u32>> {
    (0..mg.vertex_count())
        .map(|v| {
            let mut incident: Vec<u32> = (0..mg.vertex_count())
                .filter(|&w| w != v)
                .map(|w| mg.multiplicity(v, w))
                .filter(|&m| m > 0)
                .collect();
            incident.sort_unstable();
            let degree: u32 = incident.iter().sum();
            let mut inv = vec![mg.loop_count(v), degree];
            inv.extend(incident);
            inv
        })
        .collect()
}

fn encode(mg: &MultiGraph, perm: &[usize]) -> Vec<u32> {
    let n = mg.vertex_count();
    let mut key = Vec::with_capacity(1 + n + n * (n - 1) / 2);
    key.push(n as u32);
    for &v in perm {
        key.push(mg.loop_count(v));
    }
    for i in 0..n {
        for j in i + 1..n {
            key.push(mg.multiplicity(perm[i], perm[j]));
        }
    }
    key
}

fn canonical_key(mg: &MultiGraph, cfg: &EngineConfig) -> MemoKey {
    let n = mg.vertex_count();
    let inv = vertex_invariants(mg);
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| inv[a].cmp(&inv[b]).then(a.cmp(&b)));

    let mut classes: Vec<Vec<usize>> = Vec::new();
    for &v in &order {
        match classes.last_mut() {
            Some(class) if inv[class[0]] == inv[v] => class.push(v),
            _ => classes.push(vec![v]),
        }
    }

    let mut perm_count: u64 = 1;
    for class in &classes {
        for i in 2..=class.len() as u64 {
            perm_count = perm_count.saturating_mul(i);
        }
    }

    if n > cfg.canon_vertex_limit || perm_count > cfg.canon_perm_budget {
        return MemoKey(encode(mg, &order));
    }

    let mut best: Option<Vec<u32>> = None;
    let mut perm = order.clone();
    minimize(mg, &classes, 0, &mut perm, &mut best);
    MemoKey(best.expect("at least one relabeling"))
}

/// Walks every permutation that keeps each invariant class in place and
/// keeps the lexicographically smallest encoding.
fn minimize(
    mg: &MultiGraph,
    classes: &[Vec<usize>],
    class_idx: usize,
    perm: &mut Vec<usize>,
    best: &mut Option<Vec<u32>>,
) {
    if class_idx == classes.len() {
        let key = encode(mg, perm);
        if best.as_ref().is_none_or(|b| key < *b) {
            *best = Some(key);
        }
        return;
    }
    let offset: usize = classes[..class_idx].iter().map(|c| c.len()).sum();
    permute_span(mg, classes, class_idx, offset, 0, perm, best);
}

fn permute_span(
    mg: &MultiGraph,
    classes: &[Vec<usize>],
    class_idx: usize,
    offset: usize,
    pos: usize,
    perm: &mut Vec<usize>,
    best: &mut Option<Vec<u32>>,
) {
    let len = classes[class_idx].len();
    if pos == len {
        minimize(mg, classes, class_idx + 1, perm, best);
        return;
    }
    for i in pos..len {
        perm.swap(offset + pos, offset + i);
        permute_span(mg, classes, class_idx, offset, pos + 1, perm, best);
        perm.swap(offset + pos, offset + i);
    }
}

/// Deletion–contraction evaluator with a memo table. Reuse one engine
/// across calls to share the table; `stats` reports hit counts on
/// demand.
pub struct Engine {
    cfg: EngineConfig,
    memo: HashMap<MemoKey, Poly>,
    stats: MemoStats,
}

impl Default for Engine {
    fn default() -> Self {
        Engine::new(EngineConfig::default())
    }
}

impl Engine {
    pub fn new(cfg: EngineConfig) -> Engine {
        Engine {
            cfg,
            memo: HashMap::new(),
            stats: MemoStats::default(),
        }
    }

    pub fn stats(&self) -> MemoStats {
        self.stats
    }

    /// E_c(G,x) for a simple graph: zero when disconnected, constant 1
    /// for a single vertex, otherwise equal to the oracle wherever both
    /// are defined.
    pub fn cec_poly(&mut self, g: &Graph) -> Result<Poly, EngineError> {
        if g.vertex_count() == 1 {
            return Ok(Poly::one());
        }
        if !g.is_connected() {
            return Ok(Poly::zero());
        }
        self.connected_spanning_poly(&MultiGraph::from_graph(g))
    }

    /// R(G) over a multigraph: sum of x^|A| over spanning connected edge
    /// subsets A (loops allowed in A but never needed for connectivity).
    /// Zero for disconnected input.
    pub fn connected_spanning_poly(&mut self, mg: &MultiGraph) -> Result<Poly, EngineError> {
        if !mg.is_connected() {
            return Ok(Poly::zero());
        }
        self.recurse(mg, 0)
    }

    fn recurse(&mut self, mg: &MultiGraph, depth: usize) -> Result<Poly, EngineError> {
        if depth > self.cfg.max_depth {
            return Err(EngineError::ResourceLimit {
                what: format!("recursion depth {} exceeded", self.cfg.max_depth),
            });
        }

        // loops factor out as independent (1+x) choices
        let loops = mg.total_loops();
        if loops > 0 {
            let mut core = mg.clone();
            core.loops.iter_mut().for_each(|l| *l = 0);
            let base = self.recurse(&core, depth + 1)?;
            return Ok(base.mul(&Poly::binom_power(1, loops as usize)));
        }

        let n = mg.vertex_count();
        if n == 1 {
            return Ok(Poly::one());
        }
        if n == 2 {
            // a two-vertex bundle: keep any nonempty subset of the copies
            let mu = mg.multiplicity(0, 1) as usize;
            return Ok(nonempty_subsets_poly(mu));
        }

        let key = canonical_key(mg, &self.cfg);
        if let Some(hit) = self.memo.get(&key) {
            self.stats.hits += 1;
            return Ok(hit.clone());
        }
        self.stats.misses += 1;

        let (u, v, mu) = self.pick_bundle(mg);

        let deleted = mg.delete_bundle(u, v);
        let deletion_part = if deleted.is_connected() {
            self.recurse(&deleted, depth + 1)?
        } else {
            Poly::zero() // the bundle is a bridge; only contraction survives
        };

        let contracted = mg.contract(u, v);
        let contraction_part = self.recurse(&contracted, depth + 1)?;

        let result = deletion_part.add(&nonempty_subsets_poly(mu as usize).mul(&contraction_part));

        if self.memo.len() >= self.cfg.max_memo_entries {
            return Err(EngineError::ResourceLimit {
                what: format!("memo table budget {} exceeded", self.cfg.max_memo_entries),
            });
        }
        self.memo.insert(key, result.clone());
        self.stats.peak_entries = self.stats.peak_entries.max(self.memo.len());
        Ok(result)
    }

    fn pick_bundle(&self, mg: &MultiGraph) -> (usize, usize, u32) {
        let mut bundles = mg.bundles();
        let first = bundles
            .next()
            .expect("connected multigraph on >= 2 vertices has a bundle");
        match self.cfg.heuristic {
            EdgeHeuristic::FirstBundle => first,
            EdgeHeuristic::DensestFirst => {
                std::iter::once(first)
                    .chain(bundles)
                    .fold(first, |best, b| if b.2 > best.2 { b } else { best })
            }
            EdgeHeuristic::SparsestFirst => {
                std::iter::once(first)
                    .chain(bundles)
                    .fold(first, |best, b| if b.2 < best.2 { b } else { best })
            }
        }
    }
}

/// (1+x)^mu - 1: one term per nonempty subset of a mu-edge bundle.
fn nonempty_subsets_poly(mu: usize) -> Poly {
    let mut p = Poly::binom_power(1, mu);
    p = Poly::from_coeffs(
        p.coeffs()
            .iter()
            .enumerate()
            .map(|(i, c)| if i == 0 { BigUint::zero() } else { c.clone() })
            .collect(),
    );
    p
}

/// One-shot evaluation with default configuration.
pub fn cec_poly_engine(g: &Graph) -> Result<Poly, EngineError> {
    Engine::default().cec_poly(g)
}

/// Number of spanning trees via the matrix-tree theorem: fraction-free
/// integer determinant of a Laplacian minor. Zero for disconnected
/// graphs, one for a single vertex.
pub fn spanning_tree_count(g: &Graph) -> BigUint {
    let n = g.vertex_count();
    if n == 1 {
        return BigUint::one();
    }
    let k = n - 1;
    let mut a = vec![vec![BigInt::zero(); k]; k];
    for &(u, v) in g.edges() {
        if u > 0 {
            a[u - 1][u - 1] += 1;
        }
        if v > 0 {
            a[v - 1][v - 1] += 1;
        }
        if u > 0 && v > 0 {
            a[u - 1][v - 1] -= 1;
            a[v - 1][u - 1] -= 1;
        }
    }
    let det = bareiss_determinant(a);
    assert!(!det.is_negative(), "Laplacian minor determinant is a count");
    det.to_biguint().unwrap()
}

fn bareiss_determinant(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let k = a.len();
    if k == 0 {
        return BigInt::one();
    }
    let mut sign = false;
    let mut prev = BigInt::one();
    for i in 0..k - 1 {
        if a[i][i].is_zero() {
            match (i + 1..k).find(|&j| !a[j][i].is_zero()) {
                Some(j) => {
                    a.swap(i, j);
                    sign = !sign;
                }
                None => return BigInt::zero(),
            }
        }
        for r in i + 1..k {
            for c in i + 1..k {
                let num = &a[r][c] * &a[i][i] - &a[r][i] * &a[i][c];
                a[r][c] = num / &prev;
            }
            a[r][i] = BigInt::zero();
        }
        prev = a[i][i].clone();
    }
    let det = a[k - 1][k - 1].clone();
    if sign {
        -det
    } else {
        det
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{generate, Family, FamilySpec};
    use crate::oracle::{cec_poly_oracle, OracleConfig};

    fn gen(family: Family, params: &[usize]) -> Graph {
        generate(&FamilySpec::new(family, params)).unwrap()
    }

    #[test]
    fn k4_row() {
        let got = cec_poly_engine(&gen(Family::Complete, &[4])).unwrap();
        assert_eq!(got, Poly::from_u64s(&[0, 0, 0, 16, 15, 6, 1]));
    }

    #[test]
    fn c4_row() {
        let got = cec_poly_engine(&gen(Family::Cycle, &[4])).unwrap();
        assert_eq!(got, Poly::from_u64s(&[0, 0, 0, 4, 1]));
    }

    #[test]
    fn q3_extreme_terms() {
        let got = cec_poly_engine(&gen(Family::Hypercube, &[3])).unwrap();
        assert_eq!(got.min_exp(), Some(7));
        assert_eq!(got.coeff(7), BigUint::from(384u32));
        assert_eq!(got.degree(), Some(12));
        assert_eq!(got.coeff(12), BigUint::one());
    }

    #[test]
    fn matches_oracle_on_sample() {
        let cfg = OracleConfig::default();
        for spec in [
            FamilySpec::new(Family::Path, &[6][..]),
            FamilySpec::new(Family::Star, &[5][..]),
            FamilySpec::new(Family::Cycle, &[7][..]),
            FamilySpec::new(Family::Complete, &[5][..]),
            FamilySpec::new(Family::Wheel, &[6][..]),
            FamilySpec::new(Family::Friendship, &[3][..]),
            FamilySpec::new(Family::CompleteBipartite, &[2, 4][..]),
            FamilySpec::new(Family::Lollipop, &[4, 2][..]),
            FamilySpec::new(Family::Fan, &[6][..]),
            FamilySpec::new(Family::Turan, &[5, 3][..]),
            FamilySpec::new(Family::CocktailParty, &[3][..]),
        ] {
            let g = generate(&spec).unwrap();
            assert_eq!(
                cec_poly_engine(&g).unwrap(),
                cec_poly_oracle(&g, &cfg).unwrap(),
                "{spec}"
            );
        }
    }

    #[test]
    fn heuristic_invariance() {
        for heuristic in [
            EdgeHeuristic::DensestFirst,
            EdgeHeuristic::FirstBundle,
            EdgeHeuristic::SparsestFirst,
        ] {
            let mut engine = Engine::new(EngineConfig {
                heuristic,
                ..EngineConfig::default()
            });
            let got = engine.cec_poly(&gen(Family::Wheel, &[7])).unwrap();
            assert_eq!(got, cec_poly_engine(&gen(Family::Wheel, &[7])).unwrap());
        }
    }

    #[test]
    fn disconnected_and_single_vertex() {
        let disjoint = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(cec_poly_engine(&disjoint).unwrap(), Poly::zero());
        let single = Graph::new(1, []).unwrap();
        assert_eq!(cec_poly_engine(&single).unwrap(), Poly::one());
    }

    #[test]
    fn lowest_coefficient_counts_spanning_trees() {
        for spec in [
            FamilySpec::new(Family::Complete, &[6][..]),
            FamilySpec::new(Family::Hypercube, &[3][..]),
            FamilySpec::new(Family::Wheel, &[6][..]),
            FamilySpec::new(Family::Turan, &[6, 3][..]),
        ] {
            let g = generate(&spec).unwrap();
            let p = cec_poly_engine(&g).unwrap();
            let n = g.vertex_count();
            assert_eq!(p.min_exp(), Some(n - 1), "{spec}");
            assert_eq!(p.coeff(n - 1), spanning_tree_count(&g), "{spec}");
        }
    }

    #[test]
    fn spanning_tree_counts() {
        assert_eq!(
            spanning_tree_count(&gen(Family::Hypercube, &[3])),
            BigUint::from(384u32)
        );
        assert_eq!(
            spanning_tree_count(&gen(Family::Turan, &[4, 3])),
            BigUint::from(8u32)
        );
        assert_eq!(
            spanning_tree_count(&gen(Family::Hypercube, &[4])),
            BigUint::from(42_467_328u64)
        );
        assert_eq!(
            spanning_tree_count(&gen(Family::Cycle, &[4])),
            BigUint::from(4u32)
        );
        assert_eq!(
            spanning_tree_count(&gen(Family::Path, &[7])),
            BigUint::one()
        );
        assert_eq!(
            spanning_tree_count(&Graph::new(1, []).unwrap()),
            BigUint::one()
        );
        assert_eq!(
            spanning_tree_count(&Graph::new(4, [(0, 1), (2, 3)]).unwrap()),
            BigUint::zero()
        );
        // Cayley: n^(n-2) spanning trees of K_n
        assert_eq!(
            spanning_tree_count(&gen(Family::Complete, &[7])),
            BigUint::from(7u32).pow(5)
        );
    }

    #[test]
    fn loops_contribute_independent_factors() {
        // triangle with two loops at vertex 0: (3x^2 + x^3)(1+x)^2
        let mut mg = MultiGraph::from_graph(&gen(Family::Complete, &[3]));
        mg.add_edges(0, 0, 2);
        let got = Engine::default().connected_spanning_poly(&mg).unwrap();
        let expected = Poly::from_u64s(&[0, 0, 3, 1]).mul(&Poly::binom_power(1, 2));
        assert_eq!(got, expected);
    }

    #[test]
    fn parallel_bundle_two_vertices() {
        let mut mg = MultiGraph::empty(2);
        mg.add_edges(0, 1, 3);
        let got = Engine::default().connected_spanning_poly(&mg).unwrap();
        assert_eq!(got, Poly::from_u64s(&[0, 3, 3, 1]));
    }

    #[test]
    fn memo_budget_errors_loudly() {
        let mut engine = Engine::new(EngineConfig {
            max_memo_entries: 2,
            ..EngineConfig::default()
        });
        let err = engine.cec_poly(&gen(Family::Complete, &[6])).unwrap_err();
        assert!(matches!(err, EngineError::ResourceLimit { .. }));
    }

    #[test]
    fn depth_budget_errors_loudly() {
        let mut engine = Engine::new(EngineConfig {
            max_depth: 2,
            ..EngineConfig::default()
        });
        let err = engine.cec_poly(&gen(Family::Complete, &[6])).unwrap_err();
        assert!(matches!(err, EngineError::ResourceLimit { .. }));
    }

    #[test]
    fn memo_reuse_reports_hits() {
        let mut engine = Engine::default();
        engine.cec_poly(&gen(Family::Complete, &[6])).unwrap();
        let first = engine.stats();
        engine.cec_poly(&gen(Family::Complete, &[6])).unwrap();
        let second = engine.stats();
        assert!(second.hits > first.hits);
        assert!(second.peak_entries >= first.peak_entries);
    }

    #[test]
    fn weak_key_regime_still_correct() {
        // force the fallback key on everything
        let mut engine = Engine::new(EngineConfig {
            canon_vertex_limit: 0,
            ..EngineConfig::default()
        });
        let g = gen(Family::Complete, &[5]);
        assert_eq!(
            engine.cec_poly(&g).unwrap(),
            cec_poly_oracle(&g, &OracleConfig::default()).unwrap()
        );
    }

    #[test]
    fn canonical_key_identifies_isomorphic_labelings() {
        let cfg = EngineConfig::default();
        // the same 4-cycle under two labelings
        let a = MultiGraph::from_graph(&Graph::new(4, [(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap());
        let b = MultiGraph::from_graph(&Graph::new(4, [(0, 2), (2, 1), (1, 3), (0, 3)]).unwrap());
        assert_eq!(canonical_key(&a, &cfg), canonical_key(&b, &cfg));
        // path vs star on 4 vertices differ
        let p = MultiGraph::from_graph(&gen(Family::Path, &[4]));
        let s = MultiGraph::from_graph(&gen(Family::Star, &[3]));
        assert_ne!(canonical_key(&p, &cfg), canonical_key(&s, &cfg));
    }
}
