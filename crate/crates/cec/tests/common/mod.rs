//! Independent ground-truth enumerators for the acceptance suite.
//!
//! Both are deliberately written against the definitions with none of
//! the production shortcuts, so they can arbitrate the library's own
//! oracle and engine.

use cec::poly::Poly;
use cec::Graph;
use num_bigint::BigUint;

/// Connected edge cover polynomial by a plain subset walk with DFS
/// connectivity. Only for small edge counts.
pub fn naive_cec_poly(g: &Graph) -> Poly {
    let n = g.vertex_count();
    if n == 1 {
        return Poly::one();
    }
    let m = g.edge_count();
    assert!(m <= 22, "naive enumerator is for small graphs");
    let mut counts = vec![0u64; m + 1];
    for mask in 0u64..(1 << m) {
        let mut adj = vec![Vec::new(); n];
        for (i, &(u, v)) in g.edges().iter().enumerate() {
            if mask >> i & 1 == 1 {
                adj[u].push(v);
                adj[v].push(u);
            }
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
            counts[mask.count_ones() as usize] += 1;
        }
    }
    Poly::from_coeffs(counts.into_iter().map(Into::into).collect())
}

/// Edge cover polynomial by dynamic programming over edges with a
/// covered-vertex bitmask state: O(m * 2^n) exact, so it reaches graphs
/// far past any subset-enumeration budget (K_{3,3,3,3} has 54 edges but
/// only 12 vertices).
pub fn ec_poly_dp(g: &Graph) -> Poly {
    let n = g.vertex_count();
    let m = g.edge_count();
    assert!(n <= 20, "state space is 2^n");
    let states = 1usize << n;
    let mut dp = vec![vec![0u128; m + 1]; states];
    dp[0][0] = 1;
    for &(u, v) in g.edges() {
        let emask = (1usize << u) | (1usize << v);
        let mut next = vec![vec![0u128; m + 1]; states];
        for (state, row) in dp.iter().enumerate() {
            for (size, &count) in row.iter().enumerate() {
                if count == 0 {
                    continue;
                }
                next[state][size] += count; // edge left out
                next[state | emask][size + 1] += count; // edge chosen
            }
        }
        dp = next;
    }
    Poly::from_coeffs(
        dp[states - 1]
            .iter()
            .map(|&c| {
                let (hi, lo) = ((c >> 64) as u64, c as u64);
                (BigUint::from(hi) << 64) | BigUint::from(lo)
            })
            .collect(),
    )
}

/// All nondecreasing part lists with at most `max_parts` parts of size
/// at most `max_size`, at least two parts.
pub fn part_lists(max_parts: usize, max_size: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut stack: Vec<Vec<usize>> = vec![vec![]];
    while let Some(prefix) = stack.pop() {
        if prefix.len() >= 2 {
            out.push(prefix.clone());
        }
        if prefix.len() == max_parts {
            continue;
        }
        let lo = prefix.last().copied().unwrap_or(1);
        for size in lo..=max_size {
            let mut next = prefix.clone();
            next.push(size);
            stack.push(next);
        }
    }
    out.sort();
    out
}
