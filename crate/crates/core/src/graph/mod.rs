//! Signed and plain graphs, vertex partitions, and the transformations between
//! them.

mod canon;
mod coloring;

pub use canon::{canonical_form, canonical_labeling, CanonicalLabeling};
pub use coloring::{chi_at_most, chromatic_number, ColoringOutcome};

use std::collections::BTreeSet;

use crate::algebra::ExactMatrix;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GraphError {
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("vertex {0} out of range for {1} vertices")]
    IndexOutOfRange(usize, usize),
    #[error("edge sign must be +1 or -1, got {0}")]
    BadSign(i64),
    #[error("invalid coloring: {0}")]
    InvalidColoring(String),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
}

/// Signed graph stored as a dense symmetric matrix with entries in {−1, 0, +1}.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SignedGraph {
    n: usize,
    adj: Vec<i8>,
}

impl SignedGraph {
    pub fn new(n: usize, edges: &[(usize, usize, i8)]) -> Result<Self, GraphError> {
        let mut adj = vec![0i8; n * n];
        for &(u, v, s) in edges {
            if u >= n {
                return Err(GraphError::IndexOutOfRange(u, n));
            }
            if v >= n {
                return Err(GraphError::IndexOutOfRange(v, n));
            }
            if u == v {
                return Err(GraphError::Loop(u));
            }
            if s != 1 && s != -1 {
                return Err(GraphError::BadSign(s as i64));
            }
            if adj[u * n + v] != 0 {
                return Err(GraphError::DuplicateEdge(u.min(v), u.max(v)));
            }
            adj[u * n + v] = s;
            adj[v * n + u] = s;
        }
        Ok(SignedGraph { n, adj })
    }

    /// Wraps a symmetric zero-diagonal {−1,0,1} matrix. Panics otherwise.
    pub fn from_adjacency(n: usize, adj: Vec<i8>) -> Self {
        assert_eq!(adj.len(), n * n);
        for i in 0..n {
            assert_eq!(adj[i * n + i], 0, "loop at {i}");
            for j in 0..n {
                assert_eq!(adj[i * n + j], adj[j * n + i], "asymmetric at {i},{j}");
                assert!((-1..=1).contains(&adj[i * n + j]));
            }
        }
        SignedGraph { n, adj }
    }

    pub fn empty(n: usize) -> Self {
        SignedGraph {
            n,
            adj: vec![0; n * n],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn sign(&self, u: usize, v: usize) -> i8 {
        self.adj[u * self.n + v]
    }

    pub fn adjacency(&self) -> &[i8] {
        &self.adj
    }

    pub fn adjacency_i64(&self) -> Vec<i64> {
        self.adj.iter().map(|&x| x as i64).collect()
    }

    pub fn adjacency_matrix(&self) -> ExactMatrix {
        ExactMatrix::from_ints(self.n, self.n, &self.adjacency_i64())
    }

    /// Edges `(u, v, sign)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize, i8)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                let s = self.sign(u, v);
                if s != 0 {
                    out.push((u, v, s));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().filter(|&&x| x != 0).count() / 2
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v * self.n..(v + 1) * self.n].iter().filter(|&&x| x != 0).count()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn underlying(&self) -> Graph {
        Graph {
            n: self.n,
            adj: self.adj.iter().map(|&x| x != 0).collect(),
        }
    }

    /// Subgraph on `s` with the original signs, relabeled in the order of `s`.
    pub fn induced_subgraph(&self, s: &[usize]) -> Result<Self, GraphError> {
        let mut seen = BTreeSet::new();
        for &v in s {
            if v >= self.n {
                return Err(GraphError::IndexOutOfRange(v, self.n));
            }
            if !seen.insert(v) {
                return Err(GraphError::InvalidPartition(format!("vertex {v} repeated")));
            }
        }
        let k = s.len();
        let mut adj = vec![0i8; k * k];
        for (i, &u) in s.iter().enumerate() {
            for (j, &v) in s.iter().enumerate() {
                adj[i * k + j] = self.sign(u, v);
            }
        }
        Ok(SignedGraph { n: k, adj })
    }

    /// Deletes one vertex, keeping the order of the rest.
    pub fn delete_vertex(&self, v: usize) -> Self {
        let rest: Vec<usize> = (0..self.n).filter(|&u| u != v).collect();
        self.induced_subgraph(&rest).expect("valid subset")
    }

    pub fn disjoint_union(&self, other: &Self) -> Self {
        let n = self.n + other.n;
        let mut adj = vec![0i8; n * n];
        for u in 0..self.n {
            for v in 0..self.n {
                adj[u * n + v] = self.sign(u, v);
            }
        }
        for u in 0..other.n {
            for v in 0..other.n {
                adj[(u + self.n) * n + v + self.n] = other.sign(u, v);
            }
        }
        SignedGraph { n, adj }
    }

    /// `ℓ` disjoint copies; copy `c` occupies vertices `c·n .. (c+1)·n`.
    pub fn disjoint_copies(&self, ell: usize) -> Self {
        assert!(ell >= 1, "at least one copy");
        (1..ell).fold(self.clone(), |acc, _| acc.disjoint_union(self))
    }

    /// Negates every edge between `s` and its complement.
    pub fn switch(&self, s: &[usize]) -> Self {
        let mut side = vec![false; self.n];
        for &v in s {
            side[v] = true;
        }
        let mut adj = self.adj.clone();
        for u in 0..self.n {
            for v in 0..self.n {
                if side[u] != side[v] {
                    adj[u * self.n + v] = -adj[u * self.n + v];
                }
            }
        }
        SignedGraph { n: self.n, adj }
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Self {
        let n = self.n;
        let mut adj = vec![0i8; n * n];
        for u in 0..n {
            for v in 0..n {
                adj[perm[u] * n + perm[v]] = self.sign(u, v);
            }
        }
        SignedGraph { n, adj }
    }

    pub fn negate(&self) -> Self {
        SignedGraph {
            n: self.n,
            adj: self.adj.iter().map(|&x| -x).collect(),
        }
    }

    pub fn is_connected(&self) -> bool {
        self.underlying().is_connected()
    }

    /// Signed triangle count `Σ σ(uv)σ(vw)σ(uw)`.
    pub fn signed_triangle_sum(&self) -> i64 {
        let mut s = 0i64;
        for u in 0..self.n {
            for v in u + 1..self.n {
                let a = self.sign(u, v);
                if a == 0 {
                    continue;
                }
                for w in v + 1..self.n {
                    s += (a * self.sign(v, w) * self.sign(u, w)) as i64;
                }
            }
        }
        s
    }
}

/// Simple undirected graph.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Graph {
    n: usize,
    adj: Vec<bool>,
}

impl Graph {
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let signed: Vec<(usize, usize, i8)> = edges.iter().map(|&(u, v)| (u, v, 1)).collect();
        Ok(SignedGraph::new(n, &signed)?.underlying())
    }

    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            adj: vec![false; n * n],
        }
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph {
            n,
            adj: vec![true; n * n],
        };
        for i in 0..n {
            g.adj[i * n + i] = false;
        }
        g
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u * self.n + v]
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if self.has_edge(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().filter(|&&x| x).count() / 2
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v * self.n..(v + 1) * self.n].iter().filter(|&&x| x).count()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn adjacency_i64(&self) -> Vec<i64> {
        self.adj.iter().map(|&x| x as i64).collect()
    }

    pub fn adjacency_matrix(&self) -> ExactMatrix {
        ExactMatrix::from_ints(self.n, self.n, &self.adjacency_i64())
    }

    pub fn complement(&self) -> Self {
        let n = self.n;
        let mut adj: Vec<bool> = self.adj.iter().map(|&x| !x).collect();
        for i in 0..n {
            adj[i * n + i] = false;
        }
        Graph { n, adj }
    }

    /// Every edge gets sign `s`.
    pub fn with_sign(&self, s: i8) -> SignedGraph {
        SignedGraph {
            n: self.n,
            adj: self.adj.iter().map(|&x| if x { s } else { 0 }).collect(),
        }
    }

    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut i = 0;
            while i < comp.len() {
                let u = comp[i];
                for v in 0..self.n {
                    if self.has_edge(u, v) && !seen[v] {
                        seen[v] = true;
                        comp.push(v);
                    }
                }
                i += 1;
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components().len() == 1
    }
}

/// Ordered list of disjoint non-empty parts covering `0..n`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Partition {
    parts: Vec<Vec<usize>>,
}

impl Partition {
    pub fn new(n: usize, parts: Vec<Vec<usize>>) -> Result<Self, GraphError> {
        let mut seen = vec![false; n];
        for p in &parts {
            if p.is_empty() {
                return Err(GraphError::InvalidPartition("empty part".into()));
            }
            for &v in p {
                if v >= n {
                    return Err(GraphError::IndexOutOfRange(v, n));
                }
                if seen[v] {
                    return Err(GraphError::InvalidPartition(format!("vertex {v} in two parts")));
                }
                seen[v] = true;
            }
        }
        if let Some(v) = seen.iter().position(|&s| !s) {
            return Err(GraphError::InvalidPartition(format!("vertex {v} uncovered")));
        }
        let mut parts = parts;
        for p in &mut parts {
            p.sort_unstable();
        }
        Ok(Partition { parts })
    }

    pub fn singletons(n: usize) -> Self {
        Partition {
            parts: (0..n).map(|v| vec![v]).collect(),
        }
    }

    /// Parts from a color vector; colors must be `0..t` with every color used.
    pub fn from_colors(colors: &[usize]) -> Result<Self, GraphError> {
        let t = colors.iter().map(|&c| c + 1).max().unwrap_or(0);
        let mut parts = vec![Vec::new(); t];
        for (v, &c) in colors.iter().enumerate() {
            parts[c].push(v);
        }
        Partition::new(colors.len(), parts)
    }

    pub fn parts(&self) -> &[Vec<usize>] {
        &self.parts
    }

    pub fn t(&self) -> usize {
        self.parts.len()
    }

    pub fn n(&self) -> usize {
        self.parts.iter().map(|p| p.len()).sum()
    }

    pub fn colors(&self) -> Vec<usize> {
        let mut c = vec![0; self.n()];
        for (i, p) in self.parts.iter().enumerate() {
            for &v in p {
                c[v] = i;
            }
        }
        c
    }

    /// The same coloring on `ℓ` disjoint copies, color classes merged across copies.
    pub fn repeat(&self, ell: usize) -> Self {
        let n = self.n();
        Partition {
            parts: self
                .parts
                .iter()
                .map(|p| (0..ell).flat_map(|c| p.iter().map(move |&v| c * n + v)).collect::<Vec<_>>())
                .map(|mut p| {
                    p.sort_unstable();
                    p
                })
                .collect(),
        }
    }

    /// First violated constraint of a valid coloring, if any.
    pub fn coloring_violation(&self, g: &SignedGraph) -> Option<(usize, usize, i8)> {
        if self.n() != g.n() {
            return Some((usize::MAX, usize::MAX, 0));
        }
        let c = self.colors();
        g.edges().into_iter().find(|&(u, v, s)| (s > 0) != (c[u] == c[v]))
    }

    pub fn is_valid_coloring(&self, g: &SignedGraph) -> bool {
        self.coloring_violation(g).is_none()
    }
}

/// `A_{G±} + J′` where `J′` is the complete multipartite graph on `parts`.
pub fn overlay_multipartite(g: &SignedGraph, parts: &Partition) -> Result<Graph, GraphError> {
    if parts.n() != g.n() {
        return Err(GraphError::InvalidColoring(format!(
            "partition covers {} vertices, graph has {}",
            parts.n(),
            g.n()
        )));
    }
    if let Some((u, v, s)) = parts.coloring_violation(g) {
        return Err(GraphError::InvalidColoring(format!(
            "{} edge {u}-{v} {} parts",
            if s > 0 { "positive" } else { "negative" },
            if s > 0 { "crosses" } else { "inside" }
        )));
    }
    let c = parts.colors();
    let n = g.n();
    let mut adj = vec![false; n * n];
    for u in 0..n {
        for v in 0..n {
            if u != v {
                let j = i8::from(c[u] != c[v]);
                adj[u * n + v] = g.sign(u, v) + j == 1;
            }
        }
    }
    Ok(Graph { n, adj })
}

/// `A_G − A_{G′}` restricted to the partition: +1 for edges of `g` inside a part,
/// −1 for non-edges of `g` across parts.
pub fn split_by_partition(g: &Graph, parts: &Partition) -> SignedGraph {
    let c = parts.colors();
    let n = g.n();
    let mut adj = vec![0i8; n * n];
    for u in 0..n {
        for v in 0..n {
            if u == v {
                continue;
            }
            adj[u * n + v] = match (c[u] == c[v], g.has_edge(u, v)) {
                (true, true) => 1,
                (false, false) => -1,
                _ => 0,
            };
        }
    }
    SignedGraph { n, adj }
}
