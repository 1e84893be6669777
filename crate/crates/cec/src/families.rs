//! Generators for the named graph families.
//!
//! Labelings are fixed so that every generated graph is reproducible:
//! the hub is vertex 0 for stars, wheels, fans and friendship graphs; a
//! hypercube vertex is its coordinate word read as a binary number; part
//! p of a multipartite graph occupies a consecutive label block.

use crate::graph::{Graph, GraphError};
use std::fmt;
use std::str::FromStr;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Family {
    Path,
    Cycle,
    Star,
    Complete,
    CompleteBipartite,
    CompleteMultipartite,
    Friendship,
    Lollipop,
    Fan,
    Wheel,
    CocktailParty,
    Hypercube,
    Turan,
}

impl Family {
    pub const ALL: [Family; 13] = [
        Family::Path,
        Family::Cycle,
        Family::Star,
        Family::Complete,
        Family::CompleteBipartite,
        Family::CompleteMultipartite,
        Family::Friendship,
        Family::Lollipop,
        Family::Fan,
        Family::Wheel,
        Family::CocktailParty,
        Family::Hypercube,
        Family::Turan,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Family::Path => "path",
            Family::Cycle => "cycle",
            Family::Star => "star",
            Family::Complete => "complete",
            Family::CompleteBipartite => "complete-bipartite",
            Family::CompleteMultipartite => "complete-multipartite",
            Family::Friendship => "friendship",
            Family::Lollipop => "lollipop",
            Family::Fan => "fan",
            Family::Wheel => "wheel",
            Family::CocktailParty => "cocktail-party",
            Family::Hypercube => "hypercube",
            Family::Turan => "turan",
        }
    }
}

impl FromStr for Family {
    type Err = GraphError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let norm = s.to_ascii_lowercase().replace('_', "-");
        Family::ALL
            .iter()
            .copied()
            .find(|f| f.name() == norm)
            .ok_or_else(|| GraphError::InvalidParameter {
                family: s.to_string(),
                msg: "unknown family".into(),
            })
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A family name plus its integer parameters.
///
/// Parameter semantics: path/cycle/complete/fan/wheel take the vertex
/// count; star takes the leaf count; complete-bipartite takes both part
/// sizes and complete-multipartite all part sizes; friendship takes the
/// triangle count; lollipop takes (clique size m, path edge count n);
/// cocktail-party takes the pair count; hypercube the dimension; turan
/// takes (n, k).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct FamilySpec {
    pub family: Family,
    pub params: Vec<usize>,
}

impl FamilySpec {
    pub fn new(family: Family, params: impl Into<Vec<usize>>) -> Self {
        FamilySpec {
            family,
            params: params.into(),
        }
    }

    fn err(&self, msg: impl Into<String>) -> GraphError {
        GraphError::InvalidParameter {
            family: self.family.name().to_string(),
            msg: msg.into(),
        }
    }

    fn arity(&self, k: usize) -> Result<(), GraphError> {
        if self.params.len() == k {
            Ok(())
        } else {
            Err(self.err(format!(
                "expected {k} parameter(s), got {}",
                self.params.len()
            )))
        }
    }

    pub fn validate(&self) -> Result<(), GraphError> {
        match self.family {
            Family::Path => {
                self.arity(1)?;
                if self.params[0] < 1 {
                    return Err(self.err("path needs n >= 1"));
                }
            }
            Family::Cycle => {
                self.arity(1)?;
                if self.params[0] < 3 {
                    return Err(self.err("cycle needs n >= 3"));
                }
            }
            Family::Star => {
                self.arity(1)?;
                if self.params[0] < 1 {
                    return Err(self.err("star needs >= 1 leaf"));
                }
            }
            Family::Complete => {
                self.arity(1)?;
                if self.params[0] < 1 {
                    return Err(self.err("complete needs n >= 1"));
                }
            }
            Family::CompleteBipartite => {
                self.arity(2)?;
                if self.params.iter().any(|&p| p < 1) {
                    return Err(self.err("part sizes must be >= 1"));
                }
            }
            Family::CompleteMultipartite => {
                if self.params.len() < 2 {
                    return Err(self.err("needs >= 2 part sizes"));
                }
                if self.params.iter().any(|&p| p < 1) {
                    return Err(self.err("part sizes must be >= 1"));
                }
            }
            Family::Friendship => {
                self.arity(1)?;
                if self.params[0] < 1 {
                    return Err(self.err("friendship needs k >= 1"));
                }
            }
            Family::Lollipop => {
                self.arity(2)?;
                if self.params[0] < 2 {
                    return Err(self.err("lollipop needs clique size m >= 2"));
                }
                if self.params[1] < 1 {
                    return Err(self.err("lollipop needs path edge count n >= 1"));
                }
            }
            Family::Fan => {
                self.arity(1)?;
                if self.params[0] < 2 {
                    return Err(self.err("fan needs n >= 2 vertices"));
                }
            }
            Family::Wheel => {
                self.arity(1)?;
                if self.params[0] < 4 {
                    return Err(self.err("wheel needs n >= 4 vertices"));
                }
            }
            Family::CocktailParty => {
                self.arity(1)?;
                if self.params[0] < 2 {
                    return Err(self.err("cocktail-party needs n >= 2 pairs"));
                }
            }
            Family::Hypercube => {
                self.arity(1)?;
                if self.params[0] < 1 {
                    return Err(self.err("hypercube needs d >= 1"));
                }
                if self.params[0] > 20 {
                    return Err(self.err("hypercube dimension too large"));
                }
            }
            Family::Turan => {
                self.arity(2)?;
                let (n, k) = (self.params[0], self.params[1]);
                if !(2 <= k && k < n) {
                    return Err(self.err("turan needs 2 <= k < n"));
                }
            }
        }
        Ok(())
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}(", self.family)?;
        for (i, p) in self.params.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// Balanced Turán part sizes: the first n mod k parts get ceil(n/k)
/// vertices, the rest floor(n/k).
pub fn turan_parts(n: usize, k: usize) -> Vec<usize> {
    let big = n.div_ceil(k);
    let small = n / k;
    let n_big = n % k;
    (0..k)
        .map(|i| if i < n_big { big } else { small })
        .collect()
}

/// Builds the canonical labeled graph of a family. Deterministic:
/// identical specs yield identical edge lists.
pub fn generate(spec: &FamilySpec) -> Result<Graph, GraphError> {
    spec.validate()?;
    let p = &spec.params;
    match spec.family {
        Family::Path => {
            let n = p[0];
            Graph::new(n, (1..n).map(|i| (i - 1, i)))
        }
        Family::Cycle => {
            let n = p[0];
            Graph::new(n, (1..n).map(|i| (i - 1, i)).chain([(0, n - 1)]))
        }
        Family::Star => {
            let leaves = p[0];
            Graph::new(leaves + 1, (1..=leaves).map(|i| (0, i)))
        }
        Family::Complete => complete(p[0]),
        Family::CompleteBipartite => multipartite(&[p[0], p[1]]),
        Family::CompleteMultipartite => multipartite(p),
        Family::Friendship => {
            let k = p[0];
            let mut edges = Vec::with_capacity(3 * k);
            for i in 0..k {
                let (u, v) = (2 * i + 1, 2 * i + 2);
                edges.push((0, u));
                edges.push((0, v));
                edges.push((u, v));
            }
            Graph::new(2 * k + 1, edges)
        }
        Family::Lollipop => {
            let (m, n) = (p[0], p[1]);
            let mut edges = Vec::new();
            for u in 0..m {
                for v in u + 1..m {
                    edges.push((u, v));
                }
            }
            // path of n edges attached at vertex 0
            edges.push((0, m));
            for i in 1..n {
                edges.push((m + i - 1, m + i));
            }
            Graph::new(m + n, edges)
        }
        Family::Fan => {
            let n = p[0];
            let mut edges: Vec<_> = (1..n).map(|i| (0, i)).collect();
            edges.extend((2..n).map(|i| (i - 1, i)));
            Graph::new(n, edges)
        }
        Family::Wheel => {
            let n = p[0];
            let mut edges: Vec<_> = (1..n).map(|i| (0, i)).collect();
            edges.extend((2..n).map(|i| (i - 1, i)));
            edges.push((1, n - 1));
            Graph::new(n, edges)
        }
        Family::CocktailParty => {
            let pairs = p[0];
            let n = 2 * pairs;
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if u / 2 != v / 2 {
                        edges.push((u, v));
                    }
                }
            }
            Graph::new(n, edges)
        }
        Family::Hypercube => {
            let d = p[0];
            let n = 1usize << d;
            let mut edges = Vec::with_capacity(d << (d - 1));
            for v in 0..n {
                for b in 0..d {
                    let w = v ^ (1 << b);
                    if v < w {
                        edges.push((v, w));
                    }
                }
            }
            Graph::new(n, edges)
        }
        Family::Turan => multipartite(&turan_parts(p[0], p[1])),
    }
}

fn complete(n: usize) -> Result<Graph, GraphError> {
    let mut edges = Vec::with_capacity(n * (n - 1) / 2);
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    Graph::new(n, edges)
}

fn multipartite(parts: &[usize]) -> Result<Graph, GraphError> {
    let n: usize = parts.iter().sum();
    let mut part_of = vec![0usize; n];
    let mut next = 0;
    for (p, &size) in parts.iter().enumerate() {
        for _ in 0..size {
            part_of[next] = p;
            next += 1;
        }
    }
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if part_of[u] != part_of[v] {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, edges)
}
