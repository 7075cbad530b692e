//! Finite simple undirected graphs on the vertex labels `0..n`.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{input, Result};

/// A set of vertex labels, kept sorted.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexSet(BTreeSet<usize>);

impl VertexSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn singleton(v: usize) -> Self {
        Self(BTreeSet::from([v]))
    }

    pub fn full(n: usize) -> Self {
        (0..n).collect()
    }

    pub fn insert(&mut self, v: usize) -> bool {
        self.0.insert(v)
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.contains(&v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn first(&self) -> Option<usize> {
        self.0.first().copied()
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.0.is_subset(&other.0)
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.0.is_disjoint(&other.0)
    }

    /// True when neither set contains the other but they intersect.
    pub fn overlaps(&self, other: &VertexSet) -> bool {
        !self.is_disjoint(other) && !self.is_subset(other) && !other.is_subset(self)
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.0.iter().copied().collect()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        Self(iter.into_iter().collect())
    }
}

impl<const N: usize> From<[usize; N]> for VertexSet {
    fn from(values: [usize; N]) -> Self {
        values.into_iter().collect()
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = std::collections::btree_set::IntoIter<usize>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.into_iter()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// How two disjoint vertex sets see each other.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SetAdjacency {
    Adjacent,
    Nonadjacent,
    Mixed,
}

/// Immutable simple graph. Construct with [`Graph::new`]; there are no
/// mutating methods.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    nbrs: Vec<Vec<usize>>,
    matrix: Vec<bool>,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges (in either
    /// orientation) collapse to one.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut matrix = vec![false; n * n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return input(format!("edge ({u}, {v}) has an endpoint outside 0..{n}"));
            }
            if u == v {
                return input(format!("loop at vertex {u}"));
            }
            matrix[u * n + v] = true;
            matrix[v * n + u] = true;
        }
        Ok(Self::from_matrix(n, matrix))
    }

    fn from_matrix(n: usize, matrix: Vec<bool>) -> Self {
        let nbrs = (0..n)
            .map(|u| (0..n).filter(|&v| matrix[u * n + v]).collect())
            .collect();
        Self { n, nbrs, matrix }
    }

    /// Builds a graph from an adjacency predicate evaluated on every pair `u < v`.
    pub fn from_fn(n: usize, mut adjacent: impl FnMut(usize, usize) -> bool) -> Self {
        let mut matrix = vec![false; n * n];
        for u in 0..n {
            for v in u + 1..n {
                if adjacent(u, v) {
                    matrix[u * n + v] = true;
                    matrix[v * n + u] = true;
                }
            }
        }
        Self::from_matrix(n, matrix)
    }

    pub fn empty(n: usize) -> Self {
        Self::from_fn(n, |_, _| false)
    }

    pub fn complete(n: usize) -> Self {
        Self::from_fn(n, |_, _| true)
    }

    pub fn path(n: usize) -> Self {
        Self::from_fn(n, |u, v| v == u + 1)
    }

    /// Cycle `0 - 1 - ... - (n-1) - 0`; needs `n >= 3`.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least three vertices");
        Self::from_fn(n, |u, v| v == u + 1 || (u == 0 && v == n - 1))
    }

    /// Wheel with hub `0` and rim cycle `1 - 2 - ... - n - 1`.
    pub fn wheel(n: usize) -> Self {
        assert!(n >= 3, "a wheel needs a rim of at least three vertices");
        Self::from_fn(n + 1, |u, v| u == 0 || v == u + 1 || (u == 1 && v == n))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.nbrs.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    /// Edges as pairs `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for &v in &self.nbrs[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.matrix[u * self.n + v]
    }

    /// Sorted neighbour list of `v`. Panics on an invalid vertex.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.nbrs[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.nbrs[v].len()
    }

    pub fn neighborhood(&self, v: usize) -> Result<VertexSet> {
        self.check_vertex(v)?;
        Ok(self.nbrs[v].iter().copied().collect())
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n {
            return input(format!("vertex {v} is not in 0..{}", self.n));
        }
        Ok(())
    }

    pub fn check_set(&self, set: &VertexSet) -> Result<()> {
        match set.iter().find(|&v| v >= self.n) {
            Some(v) => input(format!("vertex {v} is not in 0..{}", self.n)),
            None => Ok(()),
        }
    }

    /// Subgraph induced by `set`, relabelled to `0..|set|` in increasing
    /// order of the original labels. The returned map sends new labels to
    /// old ones.
    pub fn induced_subgraph(&self, set: &VertexSet) -> Result<(Graph, Vec<usize>)> {
        self.check_set(set)?;
        let map = set.to_vec();
        let sub = Graph::from_fn(map.len(), |i, j| self.has_edge(map[i], map[j]));
        Ok((sub, map))
    }

    /// Same graph with vertex `v` renamed to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n {
            return input("relabelling has the wrong length");
        }
        let mut seen = vec![false; self.n];
        for &p in perm {
            if p >= self.n || std::mem::replace(&mut seen[p], true) {
                return input("relabelling is not a permutation");
            }
        }
        let edges: Vec<_> = self.edges().into_iter().map(|(u, v)| (perm[u], perm[v])).collect();
        Graph::new(self.n, &edges)
    }

    pub fn complement(&self) -> Graph {
        Graph::from_fn(self.n, |u, v| !self.has_edge(u, v))
    }

    /// Connected components, each sorted, ordered by smallest member.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut comp = vec![usize::MAX; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if comp[s] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut set = VertexSet::new();
            let mut stack = vec![s];
            comp[s] = id;
            while let Some(u) = stack.pop() {
                set.insert(u);
                for &v in &self.nbrs[u] {
                    if comp[v] == usize::MAX {
                        comp[v] = id;
                        stack.push(v);
                    }
                }
            }
            out.push(set);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components().len() == 1
    }

    pub fn set_adjacency(&self, a: &VertexSet, b: &VertexSet) -> Result<SetAdjacency> {
        self.check_set(a)?;
        self.check_set(b)?;
        if a.is_empty() || b.is_empty() {
            return input("set_adjacency needs two nonempty sets");
        }
        if !a.is_disjoint(b) {
            return input("set_adjacency needs disjoint sets");
        }
        let mut any = false;
        let mut all = true;
        for u in a.iter() {
            for v in b.iter() {
                if self.has_edge(u, v) {
                    any = true;
                } else {
                    all = false;
                }
            }
        }
        Ok(match (any, all) {
            (_, true) => SetAdjacency::Adjacent,
            (false, _) => SetAdjacency::Nonadjacent,
            _ => SetAdjacency::Mixed,
        })
    }

    /// Adjacency rows as bitmasks, for the exhaustive searches.
    pub(crate) fn masks(&self) -> Result<Vec<u64>> {
        if self.n > 64 {
            return crate::error::resource(format!(
                "exhaustive search supports at most 64 vertices, got {}",
                self.n
            ));
        }
        Ok(self
            .nbrs
            .iter()
            .map(|ns| ns.iter().fold(0u64, |m, &v| m | 1 << v))
            .collect())
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}
