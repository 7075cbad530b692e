//! Independent brute-force oracles for integration tests. Nothing here calls
//! into the search code of the library; only `Graph` is shared.

#![allow(dead_code)]

use std::collections::BTreeSet;

use wordrep::Graph;

/// x and y alternate in w: the subword on {x, y} has no repeated letter
/// next to itself.
pub fn alternates(w: &[usize], x: usize, y: usize) -> bool {
    let mut last = None;
    for &c in w {
        if c == x || c == y {
            if last == Some(c) {
                return false;
            }
            last = Some(c);
        }
    }
    true
}

/// Word over exactly 0..n whose alternation graph is `g`.
pub fn word_represents(w: &[usize], g: &Graph) -> bool {
    let letters: BTreeSet<usize> = w.iter().copied().collect();
    if letters != (0..g.n()).collect() {
        return false;
    }
    for x in 0..g.n() {
        for y in x + 1..g.n() {
            if alternates(w, x, y) != g.has_edge(x, y) {
                return false;
            }
        }
    }
    true
}

/// Every letter appears exactly k times.
pub fn uniformity(w: &[usize], n: usize) -> Option<usize> {
    let mut counts = vec![0; n];
    for &c in w {
        counts[c] += 1;
    }
    let k = *counts.first()?;
    counts.iter().all(|&c| c == k).then_some(k)
}

/// Splits a word into consecutive permutations of 0..n.
pub fn as_permutations(w: &[usize], n: usize) -> Option<Vec<Vec<usize>>> {
    if n == 0 || !w.len().is_multiple_of(n) {
        return None;
    }
    let perms: Vec<Vec<usize>> = w.chunks(n).map(<[usize]>::to_vec).collect();
    let full: BTreeSet<usize> = (0..n).collect();
    perms
        .iter()
        .all(|p| p.iter().copied().collect::<BTreeSet<_>>() == full)
        .then_some(perms)
}

/// All orientations of `g` as arc lists, `2^m` of them.
fn orientations(g: &Graph) -> impl Iterator<Item = Vec<(usize, usize)>> + '_ {
    let edges = g.edges();
    assert!(edges.len() <= 20, "orientation brute force limited to 20 edges");
    (0u32..1 << edges.len()).map(move |bits| {
        edges
            .iter()
            .enumerate()
            .map(|(i, &(u, v))| if bits >> i & 1 == 1 { (v, u) } else { (u, v) })
            .collect()
    })
}

fn arc_matrix(n: usize, arcs: &[(usize, usize)]) -> Vec<Vec<bool>> {
    let mut m = vec![vec![false; n]; n];
    for &(u, v) in arcs {
        m[u][v] = true;
    }
    m
}

fn transitive(m: &[Vec<bool>]) -> bool {
    let n = m.len();
    (0..n).all(|a| (0..n).all(|b| !m[a][b] || (0..n).all(|c| !m[b][c] || m[a][c])))
}

/// Comparability by trying every orientation.
pub fn comparability(g: &Graph) -> bool {
    orientations(g).any(|arcs| transitive(&arc_matrix(g.n(), &arcs)))
}

fn acyclic(m: &[Vec<bool>]) -> bool {
    let n = m.len();
    let mut indeg: Vec<usize> = (0..n).map(|v| (0..n).filter(|&u| m[u][v]).count()).collect();
    let mut stack: Vec<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
    let mut seen = 0;
    while let Some(u) = stack.pop() {
        seen += 1;
        for v in 0..n {
            if m[u][v] {
                indeg[v] -= 1;
                if indeg[v] == 0 {
                    stack.push(v);
                }
            }
        }
    }
    seen == n
}

/// Some directed path v0 -> ... -> vt with t >= 3, arc v0 -> vt present,
/// and some vi -> vj (i < j) missing.
fn has_shortcut(m: &[Vec<bool>]) -> bool {
    fn extend(m: &[Vec<bool>], path: &mut Vec<usize>) -> bool {
        let last = *path.last().unwrap();
        let n = m.len();
        if path.len() >= 4 && m[path[0]][last] {
            let complete = (0..path.len()).all(|i| (i + 1..path.len()).all(|j| m[path[i]][path[j]]));
            if !complete {
                return true;
            }
        }
        for v in 0..n {
            if m[last][v] && !path.contains(&v) {
                path.push(v);
                if extend(m, path) {
                    return true;
                }
                path.pop();
            }
        }
        false
    }
    (0..m.len()).any(|s| extend(m, &mut vec![s]))
}

/// Word-representability through semi-transitive orientations, trying all
/// `2^m` orientations.
pub fn semi_transitive(g: &Graph) -> bool {
    orientations(g).any(|arcs| {
        let m = arc_matrix(g.n(), &arcs);
        acyclic(&m) && !has_shortcut(&m)
    })
}

/// Some vertex outside `w` is adjacent to all of it. With `w` inducing a
/// non-comparability graph this rules out word-representability, since
/// neighbourhoods of word-representable graphs are comparability graphs.
pub fn has_apex(g: &Graph, w: &BTreeSet<usize>) -> bool {
    (0..g.n()).any(|v| !w.contains(&v) && w.iter().all(|&u| g.has_edge(u, v)))
}

/// Every vertex outside `m` sees all of `m` or none of it.
pub fn is_module(g: &Graph, m: &BTreeSet<usize>) -> bool {
    (0..g.n())
        .filter(|v| !m.contains(v))
        .all(|v| {
            let hits = m.iter().filter(|&&u| g.has_edge(u, v)).count();
            hits == 0 || hits == m.len()
        })
}

/// Has a module with at least two and fewer than n vertices.
pub fn decomposable(g: &Graph) -> bool {
    let n = g.n();
    (1u64..(1 << n) - 1).any(|bits| {
        let set: BTreeSet<usize> = (0..n).filter(|&v| bits >> v & 1 == 1).collect();
        set.len() >= 2 && is_module(g, &set)
    })
}

pub fn connected(g: &Graph) -> bool {
    let n = g.n();
    if n == 0 {
        return true;
    }
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(u) = stack.pop() {
        for v in 0..n {
            if !seen[v] && g.has_edge(u, v) {
                seen[v] = true;
                stack.push(v);
            }
        }
    }
    seen.into_iter().all(|s| s)
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(prefix: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                prefix.push(v);
                rec(prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// One representative per isomorphism class of connected graphs on n
/// vertices: the labeled graph whose edge mask is smallest in its class.
pub fn connected_graphs_up_to_iso(n: usize) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let index = |u: usize, v: usize| pairs.iter().position(|&p| p == (u.min(v), u.max(v))).unwrap();
    let perms = permutations(n);
    // images[p][i] = index of pair i under permutation p
    let images: Vec<Vec<usize>> = perms
        .iter()
        .map(|p| pairs.iter().map(|&(u, v)| index(p[u], p[v])).collect())
        .collect();
    let mut out = Vec::new();
    for mask in 0u64..1 << pairs.len() {
        let canonical = images.iter().all(|img| {
            let mut image = 0u64;
            for (i, &j) in img.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    image |= 1 << j;
                }
            }
            image >= mask
        });
        if !canonical {
            continue;
        }
        let edges: Vec<(usize, usize)> = (0..pairs.len()).filter(|&i| mask >> i & 1 == 1).map(|i| pairs[i]).collect();
        let g = Graph::new(n, &edges).unwrap();
        if connected(&g) {
            out.push(g);
        }
    }
    out
}
