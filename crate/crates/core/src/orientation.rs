//! Orientations of graphs: transitive orientations (comparability graphs),
//! semi-transitive orientations (word-representable graphs), the poset a
//! transitive orientation induces, and exhaustive poset dimension.

use std::collections::HashSet;

use crate::error::{input, resource, Result};
use crate::graph::Graph;

/// Default edge limit for [`exists_semi_transitive_orientation`].
pub const DEFAULT_ORACLE_CAP: usize = 24;

/// Linear extensions enumerated before [`poset_dimension`] gives up.
pub const MAX_LINEAR_EXTENSIONS: usize = 200_000;

/// A direction on every edge of `base`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Orientation {
    base: Graph,
    arc: Vec<bool>,
}

impl Orientation {
    /// Builds an orientation from directed pairs; each edge of `base` must be
    /// covered exactly once.
    pub fn from_arcs(base: &Graph, arcs: &[(usize, usize)]) -> Result<Self> {
        let n = base.n();
        let mut arc = vec![false; n * n];
        for &(u, v) in arcs {
            if u >= n || v >= n || !base.has_edge(u, v) {
                return input(format!("arc {u}->{v} is not an edge of the base graph"));
            }
            if arc[u * n + v] || arc[v * n + u] {
                return input(format!("edge {u}-{v} is oriented twice"));
            }
            arc[u * n + v] = true;
        }
        if arcs.len() != base.edge_count() {
            return input("some edge of the base graph has no direction");
        }
        Ok(Self { base: base.clone(), arc })
    }

    fn from_matrix(base: &Graph, arc: Vec<bool>) -> Self {
        Self { base: base.clone(), arc }
    }

    /// Orients every edge from the smaller label to the larger one.
    pub fn by_labels(base: &Graph) -> Self {
        let arcs = base.edges();
        Self::from_arcs(base, &arcs).expect("label order orients every edge once")
    }

    pub fn base(&self) -> &Graph {
        &self.base
    }

    #[inline]
    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        self.arc[u * self.base.n() + v]
    }

    /// Directed pairs in lexicographic order of the underlying edges.
    pub fn arcs(&self) -> Vec<(usize, usize)> {
        self.base
            .edges()
            .into_iter()
            .map(|(u, v)| if self.has_arc(u, v) { (u, v) } else { (v, u) })
            .collect()
    }

    pub fn is_transitive(&self) -> bool {
        let n = self.base.n();
        for a in 0..n {
            for &b in self.base.neighbors(a) {
                if !self.has_arc(a, b) {
                    continue;
                }
                for &c in self.base.neighbors(b) {
                    if self.has_arc(b, c) && !self.has_arc(a, c) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Acyclic and free of shortcuts.
    pub fn is_semi_transitive(&self) -> Result<bool> {
        let adj = self.base.masks()?;
        Ok(!has_violation(&adj, &self.arc, self.base.n()))
    }
}

/// A strict partial order on `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poset {
    n: usize,
    less: Vec<bool>,
}

impl Poset {
    /// Validates irreflexivity, antisymmetry and transitivity of `pairs`
    /// (each `(x, y)` meaning `x < y`).
    pub fn new(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let mut less = vec![false; n * n];
        for &(x, y) in pairs {
            if x >= n || y >= n {
                return input(format!("pair ({x}, {y}) is outside 0..{n}"));
            }
            if x == y {
                return input(format!("relation is reflexive at {x}"));
            }
            less[x * n + y] = true;
        }
        let p = Self { n, less };
        for x in 0..n {
            for y in 0..n {
                if p.lt(x, y) && p.lt(y, x) {
                    return input(format!("relation is not antisymmetric on {x}, {y}"));
                }
                if !p.lt(x, y) {
                    continue;
                }
                for z in 0..n {
                    if p.lt(y, z) && !p.lt(x, z) {
                        return input(format!("relation is not transitive on {x} < {y} < {z}"));
                    }
                }
            }
        }
        Ok(p)
    }

    pub fn chain(n: usize) -> Self {
        let pairs: Vec<_> = (0..n).flat_map(|x| (x + 1..n).map(move |y| (x, y))).collect();
        Self::new(n, &pairs).expect("a chain is a strict order")
    }

    pub fn antichain(n: usize) -> Self {
        Self { n, less: vec![false; n * n] }
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    #[inline]
    pub fn lt(&self, x: usize, y: usize) -> bool {
        self.less[x * self.n + y]
    }

    pub fn comparable(&self, x: usize, y: usize) -> bool {
        self.lt(x, y) || self.lt(y, x)
    }

    pub fn relations(&self) -> Vec<(usize, usize)> {
        (0..self.n)
            .flat_map(|x| (0..self.n).map(move |y| (x, y)))
            .filter(|&(x, y)| self.lt(x, y))
            .collect()
    }

    pub fn is_linear_extension(&self, order: &[usize]) -> bool {
        if order.len() != self.n {
            return false;
        }
        let mut pos = vec![usize::MAX; self.n];
        for (i, &x) in order.iter().enumerate() {
            if x >= self.n || pos[x] != usize::MAX {
                return false;
            }
            pos[x] = i;
        }
        self.relations().into_iter().all(|(x, y)| pos[x] < pos[y])
    }

    /// All linear extensions in lexicographic order, up to `limit`.
    pub fn linear_extensions(&self, limit: usize) -> Result<Vec<Vec<usize>>> {
        let mut out = Vec::new();
        let mut prefix = Vec::with_capacity(self.n);
        let mut placed = vec![false; self.n];
        if !self.extend(&mut prefix, &mut placed, &mut out, limit) {
            return resource(format!("poset on {} elements has more than {limit} linear extensions", self.n));
        }
        Ok(out)
    }

    fn extend(&self, prefix: &mut Vec<usize>, placed: &mut [bool], out: &mut Vec<Vec<usize>>, limit: usize) -> bool {
        if prefix.len() == self.n {
            if out.len() == limit {
                return false;
            }
            out.push(prefix.clone());
            return true;
        }
        for x in 0..self.n {
            if placed[x] || (0..self.n).any(|y| !placed[y] && self.lt(y, x)) {
                continue;
            }
            placed[x] = true;
            prefix.push(x);
            let ok = self.extend(prefix, placed, out, limit);
            prefix.pop();
            placed[x] = false;
            if !ok {
                return false;
            }
        }
        true
    }
}

/// The order induced by a transitive orientation: `u < v` iff `u -> v`.
pub fn poset_of(o: &Orientation) -> Result<Poset> {
    if !o.is_transitive() {
        return input("orientation is not transitive");
    }
    Poset::new(o.base().n(), &o.arcs())
}

/// Smallest realizer of `p` with at most `cap` linear extensions, or `None`
/// if the dimension exceeds `cap`.
///
/// A family of linear extensions realizes `p` iff every incomparable pair
/// appears in both orders somewhere in the family, so the search is a cover
/// of the ordered incomparable pairs by extensions, tried for k = 1, 2, ...
pub fn poset_dimension(p: &Poset, cap: usize) -> Result<Option<Vec<Vec<usize>>>> {
    if cap == 0 {
        return input("dimension cap must be at least 1");
    }
    let n = p.len();
    if n == 0 {
        return Ok(Some(vec![Vec::new()]));
    }
    let mut pair_index = vec![usize::MAX; n * n];
    let mut pairs = 0;
    for x in 0..n {
        for y in 0..n {
            if x != y && !p.comparable(x, y) {
                pair_index[x * n + y] = pairs;
                pairs += 1;
            }
        }
    }
    let extensions = p.linear_extensions(MAX_LINEAR_EXTENSIONS)?;
    if pairs == 0 {
        return Ok(Some(vec![extensions[0].clone()]));
    }
    let words = pairs.div_ceil(64);
    let covers: Vec<Vec<u64>> = extensions
        .iter()
        .map(|ext| {
            let mut mask = vec![0u64; words];
            for i in 0..n {
                for j in i + 1..n {
                    let idx = pair_index[ext[i] * n + ext[j]];
                    if idx != usize::MAX {
                        mask[idx / 64] |= 1 << (idx % 64);
                    }
                }
            }
            mask
        })
        .collect();
    // covering[pair] = extensions that put the pair in that order
    let mut covering = vec![Vec::new(); pairs];
    for (e, mask) in covers.iter().enumerate() {
        for (idx, list) in covering.iter_mut().enumerate() {
            if mask[idx / 64] >> (idx % 64) & 1 == 1 {
                list.push(e);
            }
        }
    }
    let mut uncovered = vec![0u64; words];
    for idx in 0..pairs {
        uncovered[idx / 64] |= 1 << (idx % 64);
    }
    for k in 1..=cap {
        let mut chosen = Vec::with_capacity(k);
        let mut failed = HashSet::new();
        if cover(&uncovered, k, &covers, &covering, &mut chosen, &mut failed) {
            return Ok(Some(chosen.into_iter().map(|e| extensions[e].clone()).collect()));
        }
    }
    Ok(None)
}

fn cover(
    uncovered: &[u64],
    budget: usize,
    covers: &[Vec<u64>],
    covering: &[Vec<usize>],
    chosen: &mut Vec<usize>,
    failed: &mut HashSet<(Vec<u64>, usize)>,
) -> bool {
    let Some(first) = uncovered
        .iter()
        .enumerate()
        .find(|(_, w)| **w != 0)
        .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
    else {
        return true;
    };
    if budget == 0 || failed.contains(&(uncovered.to_vec(), budget)) {
        return false;
    }
    for &e in &covering[first] {
        let rest: Vec<u64> = uncovered.iter().zip(&covers[e]).map(|(u, c)| u & !c).collect();
        chosen.push(e);
        if cover(&rest, budget - 1, covers, covering, chosen, failed) {
            return true;
        }
        chosen.pop();
    }
    failed.insert((uncovered.to_vec(), budget));
    false
}

/// A transitive orientation of `g`, if `g` is a comparability graph.
///
/// Backtracking over edge directions. Each choice is propagated through the
/// forcing rules: two edges `ab`, `bc` with `ac` a non-edge must both point
/// into `b` or both out of it, and `a -> b -> c` with `ac` an edge forces
/// `a -> c`. A conflict prunes the branch.
pub fn find_transitive_orientation(g: &Graph) -> Option<Orientation> {
    let n = g.n();
    let edges = g.edges();
    let arc = vec![false; n * n];
    search_transitive(g, &edges, 0, arc).map(|arc| {
        let o = Orientation::from_matrix(g, arc);
        debug_assert!(o.is_transitive());
        o
    })
}

fn search_transitive(g: &Graph, edges: &[(usize, usize)], from: usize, arc: Vec<bool>) -> Option<Vec<bool>> {
    let n = g.n();
    let Some(i) = (from..edges.len()).find(|&i| {
        let (u, v) = edges[i];
        !arc[u * n + v] && !arc[v * n + u]
    }) else {
        return Some(arc);
    };
    let (u, v) = edges[i];
    for (a, b) in [(u, v), (v, u)] {
        let mut next = arc.clone();
        if force(g, &mut next, a, b) {
            if let Some(done) = search_transitive(g, edges, i + 1, next) {
                return Some(done);
            }
        }
    }
    None
}

/// Sets `a -> b` and everything it forces. Returns false on a conflict.
fn force(g: &Graph, arc: &mut [bool], a: usize, b: usize) -> bool {
    let n = g.n();
    let mut queue = vec![(a, b)];
    while let Some((a, b)) = queue.pop() {
        if arc[b * n + a] {
            return false;
        }
        if arc[a * n + b] {
            continue;
        }
        arc[a * n + b] = true;
        for &c in g.neighbors(b) {
            if c == a {
                continue;
            }
            if !g.has_edge(a, c) {
                queue.push((c, b));
            } else if arc[b * n + c] {
                queue.push((a, c));
            }
        }
        for &c in g.neighbors(a) {
            if c == b {
                continue;
            }
            if !g.has_edge(b, c) {
                queue.push((a, c));
            } else if arc[c * n + a] {
                queue.push((c, b));
            }
        }
    }
    true
}

pub fn is_comparability(g: &Graph) -> bool {
    find_transitive_orientation(g).is_some()
}

/// A semi-transitive orientation of `g`, searched exhaustively. Graphs with
/// more than `edge_cap` edges are refused.
///
/// Reversing every arc maps semi-transitive orientations to semi-transitive
/// orientations, so the first edge is fixed in one direction.
pub fn find_semi_transitive_orientation(g: &Graph, edge_cap: usize) -> Result<Option<Orientation>> {
    let m = g.edge_count();
    if m > edge_cap {
        return resource(format!(
            "semi-transitive search refused: {m} edges exceeds the cap of {edge_cap}"
        ));
    }
    let adj = g.masks()?;
    let n = g.n();
    let edges = g.edges();
    let mut arc = vec![false; n * n];
    if edges.is_empty() {
        return Ok(Some(Orientation::from_matrix(g, arc)));
    }
    let (u, v) = edges[0];
    arc[u * n + v] = true;
    if search_semi(&adj, &edges, 1, &mut arc, n) {
        Ok(Some(Orientation::from_matrix(g, arc)))
    } else {
        Ok(None)
    }
}

/// Whether `g` is word-representable, decided by semi-transitive orientation search.
pub fn exists_semi_transitive_orientation(g: &Graph, edge_cap: usize) -> Result<bool> {
    find_semi_transitive_orientation(g, edge_cap).map(|o| o.is_some())
}

fn search_semi(adj: &[u64], edges: &[(usize, usize)], next: usize, arc: &mut [bool], n: usize) -> bool {
    if has_violation(adj, arc, n) {
        return false;
    }
    if next == edges.len() {
        return true;
    }
    let (u, v) = edges[next];
    for (a, b) in [(u, v), (v, u)] {
        arc[a * n + b] = true;
        if search_semi(adj, edges, next + 1, arc, n) {
            return true;
        }
        arc[a * n + b] = false;
    }
    false
}

/// Cycle or shortcut among the arcs set so far. Unoriented edges are
/// ignored, so a violation found here survives any completion.
fn has_violation(adj: &[u64], arc: &[bool], n: usize) -> bool {
    let out: Vec<u64> = (0..n)
        .map(|u| (0..n).filter(|&v| arc[u * n + v]).fold(0u64, |m, v| m | 1 << v))
        .collect();
    // Kahn's algorithm; leftover vertices lie on a cycle.
    let mut indeg: Vec<u32> = (0..n).map(|v| out.iter().filter(|&&m| m >> v & 1 == 1).count() as u32).collect();
    let mut order = Vec::with_capacity(n);
    let mut stack: Vec<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
    while let Some(u) = stack.pop() {
        order.push(u);
        let mut m = out[u];
        while m != 0 {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            indeg[v] -= 1;
            if indeg[v] == 0 {
                stack.push(v);
            }
        }
    }
    if order.len() < n {
        return true;
    }
    let mut below = vec![0u64; n];
    for &u in order.iter().rev() {
        let mut m = out[u];
        let mut reach = m;
        while m != 0 {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            reach |= below[v];
        }
        below[u] = reach;
    }
    let violated = |p: usize, q: usize| adj[p] >> q & 1 == 0 || arc[q * n + p];
    let mut path = Vec::with_capacity(n);
    for u in 0..n {
        let mut m = out[u];
        while m != 0 {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            path.clear();
            path.push(u);
            if shortcut_from(v, &out, &below, &violated, &mut path) {
                return true;
            }
        }
    }
    false
}

/// Extends `path` (starting at the arc's tail) towards `end`; true once a
/// path of at least four vertices closes on `end` with some pair of path
/// vertices other than the two endpoints not oriented forward.
fn shortcut_from(
    end: usize,
    out: &[u64],
    below: &[u64],
    violated: &dyn Fn(usize, usize) -> bool,
    path: &mut Vec<usize>,
) -> bool {
    let start = path[0];
    let w = *path.last().unwrap();
    let mut m = out[w];
    while m != 0 {
        let x = m.trailing_zeros() as usize;
        m &= m - 1;
        if x != end && below[x] >> end & 1 == 0 {
            continue;
        }
        let bad = path.iter().any(|&p| !(x == end && p == start) && violated(p, x));
        if x == end {
            if path.len() >= 3 && bad {
                return true;
            }
            continue;
        }
        // consecutive vertices never violate, so `bad` means at least three
        // vertices so far and the remainder reaches `end`
        if bad {
            return true;
        }
        path.push(x);
        if shortcut_from(end, out, below, violated, path) {
            return true;
        }
        path.pop();
    }
    false
}
