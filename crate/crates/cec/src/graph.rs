//! Simple undirected labeled graphs and edge-list file I/O.

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("invalid parameter for {family}: {msg}")]
    InvalidParameter { family: String, msg: String },
    #[error("invalid graph: {0}")]
    Invalid(String),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("line {line}: loop edge {u} {u}")]
    LoopEdge { line: usize, u: usize },
    #[error("line {line}: vertex {v} out of range (n = {n})")]
    OutOfRange { line: usize, v: usize, n: usize },
    #[error("line {line}: duplicate edge {u} {v}")]
    DuplicateEdge { line: usize, u: usize, v: usize },
}

/// Simple undirected graph on vertices 0..n-1.
///
/// Edges are stored as pairs (u, v) with u < v, lexicographically sorted,
/// with no duplicates and no loops.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    /// Builds a graph, normalizing each pair to u < v and sorting the edge
    /// list. Rejects loops, duplicates, out-of-range endpoints, and n = 0.
    pub fn new(
        n: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Graph, GraphError> {
        if n == 0 {
            return Err(GraphError::Invalid(
                "graph needs at least one vertex".into(),
            ));
        }
        let mut norm: Vec<(usize, usize)> = Vec::new();
        for (a, b) in edges {
            if a == b {
                return Err(GraphError::Invalid(format!("loop edge {a} {b}")));
            }
            if a >= n || b >= n {
                return Err(GraphError::Invalid(format!(
                    "edge {a} {b} out of range (n = {n})"
                )));
            }
            norm.push((a.min(b), a.max(b)));
        }
        norm.sort_unstable();
        if let Some(w) = norm.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::Invalid(format!(
                "duplicate edge {} {}",
                w[0].0, w[0].1
            )));
        }
        Ok(Graph { n, edges: norm })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edge list in canonical order.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges
            .iter()
            .filter(|&&(a, b)| a == v || b == v)
            .count()
    }

    /// True iff the graph has a single connected component. A one-vertex
    /// graph counts as connected.
    pub fn is_connected(&self) -> bool {
        let mut seen = vec![false; self.n];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut adj = vec![Vec::new(); self.n];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        while let Some(u) = stack.pop() {
            for &w in &adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen.iter().all(|&s| s)
    }

    /// Parses the edge-list text format: optional '#' comment lines, a
    /// header line "n m", then exactly m lines "u v". Blank lines are
    /// skipped.
    pub fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

        let (header_line, header) = lines.next().ok_or(GraphError::Parse {
            line: 1,
            msg: "missing header line \"n m\"".into(),
        })?;
        let mut it = header.split_whitespace();
        let n: usize = parse_field(it.next(), header_line, "vertex count")?;
        let m: usize = parse_field(it.next(), header_line, "edge count")?;
        if it.next().is_some() {
            return Err(GraphError::Parse {
                line: header_line,
                msg: "header has trailing tokens".into(),
            });
        }
        if n == 0 {
            return Err(GraphError::Parse {
                line: header_line,
                msg: "graph needs at least one vertex".into(),
            });
        }

        let mut edges = Vec::with_capacity(m);
        let mut seen = std::collections::HashSet::new();
        for _ in 0..m {
            let (line, body) = lines.next().ok_or(GraphError::Parse {
                line: header_line,
                msg: format!("expected {m} edge lines, found {}", edges.len()),
            })?;
            let mut it = body.split_whitespace();
            let u: usize = parse_field(it.next(), line, "edge endpoint")?;
            let v: usize = parse_field(it.next(), line, "edge endpoint")?;
            if it.next().is_some() {
                return Err(GraphError::Parse {
                    line,
                    msg: "edge line has trailing tokens".into(),
                });
            }
            if u == v {
                return Err(GraphError::LoopEdge { line, u });
            }
            if u >= n {
                return Err(GraphError::OutOfRange { line, v: u, n });
            }
            if v >= n {
                return Err(GraphError::OutOfRange { line, v, n });
            }
            let e = (u.min(v), u.max(v));
            if !seen.insert(e) {
                return Err(GraphError::DuplicateEdge {
                    line,
                    u: e.0,
                    v: e.1,
                });
            }
            edges.push(e);
        }
        if let Some((line, _)) = lines.next() {
            return Err(GraphError::Parse {
                line,
                msg: "unexpected content after edge list".into(),
            });
        }
        Graph::new(n, edges)
    }

    /// Serializes in the edge-list format with edges in canonical order.
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{} {}\n", self.n, self.edges.len());
        for &(u, v) in &self.edges {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }
}

fn parse_field(tok: Option<&str>, line: usize, what: &str) -> Result<usize, GraphError> {
    let tok = tok.ok_or_else(|| GraphError::Parse {
        line,
        msg: format!("missing {what}"),
    })?;
    tok.parse().map_err(|_| GraphError::Parse {
        line,
        msg: format!("bad {what} {tok:?}"),
    })
}
