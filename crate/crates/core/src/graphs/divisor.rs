use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::arith::{gcd, prime_divisors};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum GraphKind {
    /// Bipartite divisor graph on primes and numbers.
    B,
    /// Prime graph.
    Delta,
    /// Common-divisor graph.
    Gamma,
}

impl fmt::Display for GraphKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GraphKind::B => "B",
            GraphKind::Delta => "Delta",
            GraphKind::Gamma => "Gamma",
        })
    }
}

impl FromStr for GraphKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "B" | "b" => Ok(GraphKind::B),
            "Delta" | "delta" => Ok(GraphKind::Delta),
            "Gamma" | "gamma" => Ok(GraphKind::Gamma),
            other => Err(Error::invalid(format!(
                "unknown graph kind {other:?} (expected B, Delta or Gamma)"
            ))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Vertex {
    Prime(u64),
    Number(u64),
}

impl Vertex {
    pub fn value(self) -> u64 {
        match self {
            Vertex::Prime(v) | Vertex::Number(v) => v,
        }
    }
}

/// One of B(X), Δ(X), Γ(X). Vertices are indexed primes first, then
/// numbers, each block in increasing order. Edges are index pairs `(a, b)`
/// with `a < b`, sorted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DivisorGraph {
    pub kind: GraphKind,
    pub prime_vertices: Vec<u64>,
    pub number_vertices: Vec<u64>,
    pub edges: Vec<(usize, usize)>,
}

/// Sorted, deduplicated copy of `set`; rejects entries below 2.
pub fn normalize_set(set: &[u64]) -> Result<Vec<u64>> {
    if let Some(&bad) = set.iter().find(|&&x| x < 2) {
        return Err(Error::invalid(format!(
            "graph vertices must be integers greater than 1, got {bad}"
        )));
    }
    let mut xs = set.to_vec();
    xs.sort_unstable();
    xs.dedup();
    Ok(xs)
}

pub fn build_graph(set: &[u64], kind: GraphKind) -> Result<DivisorGraph> {
    let numbers = normalize_set(set)?;
    let mut primes: Vec<u64> = Vec::new();
    let mut divisors_of: Vec<Vec<u64>> = Vec::with_capacity(numbers.len());
    for &x in &numbers {
        let ps = prime_divisors(x)?;
        primes.extend(&ps);
        divisors_of.push(ps);
    }
    primes.sort_unstable();
    primes.dedup();
    let prime_index = |p: u64| primes.binary_search(&p).expect("prime collected above");

    let mut edges = Vec::new();
    let graph = match kind {
        GraphKind::B => {
            let offset = primes.len();
            for (n, ps) in divisors_of.iter().enumerate() {
                for &p in ps {
                    edges.push((prime_index(p), offset + n));
                }
            }
            DivisorGraph {
                kind,
                prime_vertices: primes.clone(),
                number_vertices: numbers,
                edges,
            }
        }
        GraphKind::Delta => {
            for ps in &divisors_of {
                for (i, &p) in ps.iter().enumerate() {
                    for &q in &ps[i + 1..] {
                        edges.push((prime_index(p), prime_index(q)));
                    }
                }
            }
            DivisorGraph {
                kind,
                prime_vertices: primes.clone(),
                number_vertices: Vec::new(),
                edges,
            }
        }
        GraphKind::Gamma => {
            for i in 0..numbers.len() {
                for j in i + 1..numbers.len() {
                    if gcd(numbers[i], numbers[j]) != 1 {
                        edges.push((i, j));
                    }
                }
            }
            DivisorGraph {
                kind,
                prime_vertices: Vec::new(),
                number_vertices: numbers,
                edges,
            }
        }
    };
    let mut graph = graph;
    graph.edges.sort_unstable();
    graph.edges.dedup();
    Ok(graph)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GraphStats {
    pub order: usize,
    pub edge_count: usize,
    pub components: usize,
    /// Largest eccentricity over all components; 0 for the empty graph.
    pub diameter: usize,
    /// Vertex degrees in vertex order.
    pub degrees: Vec<usize>,
    /// Vertex and edge counts per component, sorted by vertex count then
    /// edge count, descending.
    pub component_sizes: Vec<(usize, usize)>,
    /// `Some(k)` when every vertex has degree `k` (and there is a vertex).
    pub regular: Option<usize>,
}

impl DivisorGraph {
    pub fn order(&self) -> usize {
        self.prime_vertices.len() + self.number_vertices.len()
    }

    pub fn vertex(&self, index: usize) -> Vertex {
        let np = self.prime_vertices.len();
        if index < np {
            Vertex::Prime(self.prime_vertices[index])
        } else {
            Vertex::Number(self.number_vertices[index - np])
        }
    }

    pub fn vertices(&self) -> Vec<Vertex> {
        (0..self.order()).map(|i| self.vertex(i)).collect()
    }

    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.order()];
        for &(a, b) in &self.edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        adj.iter_mut().for_each(|n| n.sort_unstable());
        adj
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        let key = (a.min(b), a.max(b));
        self.edges.binary_search(&key).is_ok()
    }

    /// Component label per vertex, labels assigned in vertex order.
    pub fn component_labels(&self) -> Vec<usize> {
        let adj = self.adjacency();
        let mut label = vec![usize::MAX; self.order()];
        let mut next = 0;
        for start in 0..self.order() {
            if label[start] != usize::MAX {
                continue;
            }
            label[start] = next;
            let mut queue = VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                for &w in &adj[v] {
                    if label[w] == usize::MAX {
                        label[w] = next;
                        queue.push_back(w);
                    }
                }
            }
            next += 1;
        }
        label
    }

    fn eccentricity(adj: &[Vec<usize>], start: usize) -> usize {
        let mut dist = vec![usize::MAX; adj.len()];
        dist[start] = 0;
        let mut queue = VecDeque::from([start]);
        let mut far = 0;
        while let Some(v) = queue.pop_front() {
            far = far.max(dist[v]);
            for &w in &adj[v] {
                if dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
            }
        }
        far
    }

    pub fn stats(&self) -> GraphStats {
        let adj = self.adjacency();
        let labels = self.component_labels();
        let components = labels.iter().map(|&l| l + 1).max().unwrap_or(0);
        let mut sizes = vec![(0usize, 0usize); components];
        for &l in &labels {
            sizes[l].0 += 1;
        }
        for &(a, _) in &self.edges {
            sizes[labels[a]].1 += 1;
        }
        sizes.sort_unstable_by(|a, b| b.cmp(a));
        let diameter = (0..self.order())
            .map(|v| Self::eccentricity(&adj, v))
            .max()
            .unwrap_or(0);
        let degrees: Vec<usize> = adj.iter().map(Vec::len).collect();
        let regular = match degrees.first() {
            Some(&k) if degrees.iter().all(|&d| d == k) => Some(k),
            _ => None,
        };
        GraphStats {
            order: self.order(),
            edge_count: self.edges.len(),
            components,
            diameter,
            degrees,
            component_sizes: sizes,
            regular,
        }
    }

    /// A proper 2-colouring (colour per vertex) if the graph is bipartite.
    pub fn two_coloring(&self) -> Option<Vec<u8>> {
        let adj = self.adjacency();
        let mut color = vec![u8::MAX; self.order()];
        for start in 0..self.order() {
            if color[start] != u8::MAX {
                continue;
            }
            color[start] = 0;
            let mut queue = VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                for &w in &adj[v] {
                    if color[w] == u8::MAX {
                        color[w] = 1 - color[v];
                        queue.push_back(w);
                    } else if color[w] == color[v] {
                        return None;
                    }
                }
            }
        }
        Some(color)
    }

    pub fn has_triangle(&self) -> bool {
        let adj = self.adjacency();
        self.edges.iter().any(|&(a, b)| {
            adj[a]
                .iter()
                .any(|&c| c != b && adj[b].binary_search(&c).is_ok())
        })
    }
}
