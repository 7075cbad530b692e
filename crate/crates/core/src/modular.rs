//! Modules, the maximal modular partition, quotient graphs, substitution of
//! a graph for a vertex, and the lexicographic product.

use crate::error::{input, resource, Result};
use crate::graph::{Graph, SetAdjacency, VertexSet};

/// Largest vertex count [`all_modules`] will enumerate subsets of.
pub const ALL_MODULES_LIMIT: usize = 15;

/// A partition of the vertices into modules, with its quotient graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModularPartition {
    pub base: Graph,
    /// Blocks ordered by smallest member.
    pub blocks: Vec<VertexSet>,
    /// Graph on block indices; `i ~ j` iff the blocks are fully joined.
    pub quotient: Graph,
    /// `block_map[v]` is the index of the block containing `v`.
    pub block_map: Vec<usize>,
}

impl ModularPartition {
    /// Validates `blocks` as a modular partition of `base` and attaches the
    /// quotient. Blocks are reordered by smallest member.
    pub fn new(base: &Graph, blocks: Vec<VertexSet>) -> Result<Self> {
        let (quotient, block_map, blocks) = quotient_parts(base, blocks)?;
        Ok(Self { base: base.clone(), blocks, quotient, block_map })
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// Every block is a single vertex.
    pub fn is_trivial(&self) -> bool {
        self.blocks.iter().all(|b| b.len() == 1)
    }

    /// Smallest vertex of each block.
    pub fn representatives(&self) -> Vec<usize> {
        self.blocks.iter().map(|b| b.first().expect("blocks are nonempty")).collect()
    }

    pub fn block_graph(&self, i: usize) -> Graph {
        self.base.induced_subgraph(&self.blocks[i]).expect("blocks are valid vertex sets").0
    }
}

pub fn is_module(g: &Graph, m: &VertexSet) -> Result<bool> {
    g.check_set(m)?;
    if m.is_empty() {
        return input("a module must be nonempty");
    }
    Ok(splitter(g, m).is_none())
}

/// An outside vertex adjacent to some but not all of `m`.
fn splitter(g: &Graph, m: &VertexSet) -> Option<usize> {
    g.vertices().filter(|&x| !m.contains(x)).find(|&x| {
        let seen = m.iter().filter(|&y| g.has_edge(x, y)).count();
        seen != 0 && seen != m.len()
    })
}

/// Every module of `g`, by checking all nonempty subsets. Ordered by the
/// subset bitmask.
pub fn all_modules(g: &Graph) -> Result<Vec<VertexSet>> {
    let n = g.n();
    if n > ALL_MODULES_LIMIT {
        return resource(format!("module enumeration supports at most {ALL_MODULES_LIMIT} vertices, got {n}"));
    }
    let adj = g.masks()?;
    let modules = (1u64..1 << n)
        .filter(|&set| {
            (0..n).filter(|&x| set >> x & 1 == 0).all(|x| {
                let seen = adj[x] & set;
                seen == 0 || seen == set
            })
        })
        .map(|set| (0..n).filter(|&x| set >> x & 1 == 1).collect())
        .collect();
    Ok(modules)
}

/// Smallest module containing `seed`, by repeatedly absorbing splitters.
pub fn module_closure(g: &Graph, seed: &VertexSet) -> VertexSet {
    let mut m = seed.clone();
    while let Some(x) = splitter(g, &m) {
        m.insert(x);
    }
    m
}

/// The unique partition of a connected graph into its maximal strong modules.
///
/// When the complement is disconnected the blocks are its components.
/// Otherwise every proper module sits inside one maximal strong module, so
/// two vertices share a block iff the smallest module containing both is
/// not the whole vertex set. A complete graph therefore decomposes into
/// singletons.
pub fn maximal_modular_partition(g: &Graph) -> Result<ModularPartition> {
    let n = g.n();
    if n < 2 {
        return input("maximal modular partition needs at least two vertices");
    }
    if !g.is_connected() {
        return input("maximal modular partition needs a connected graph");
    }
    let co = g.complement().components();
    let blocks = if co.len() > 1 {
        co
    } else {
        let mut block_of: Vec<Option<usize>> = vec![None; n];
        let mut blocks: Vec<VertexSet> = Vec::new();
        for u in 0..n {
            if block_of[u].is_some() {
                continue;
            }
            let id = blocks.len();
            let mut block = VertexSet::singleton(u);
            block_of[u] = Some(id);
            for v in u + 1..n {
                if block_of[v].is_none() && module_closure(g, &VertexSet::from([u, v])).len() < n {
                    block.insert(v);
                    block_of[v] = Some(id);
                }
            }
            blocks.push(block);
        }
        blocks
    };
    ModularPartition::new(g, blocks)
}

/// Quotient of `g` by a modular partition, with the vertex-to-block map.
pub fn quotient(g: &Graph, blocks: &[VertexSet]) -> Result<(Graph, Vec<usize>)> {
    let (q, map, _) = quotient_parts(g, blocks.to_vec())?;
    Ok((q, map))
}

fn quotient_parts(g: &Graph, mut blocks: Vec<VertexSet>) -> Result<(Graph, Vec<usize>, Vec<VertexSet>)> {
    let n = g.n();
    let mut block_map = vec![usize::MAX; n];
    blocks.sort_by_key(|b| b.first());
    for (i, b) in blocks.iter().enumerate() {
        g.check_set(b)?;
        if b.is_empty() {
            return input("partition has an empty block");
        }
        for v in b.iter() {
            if block_map[v] != usize::MAX {
                return input(format!("vertex {v} lies in two blocks"));
            }
            block_map[v] = i;
        }
    }
    if let Some(v) = block_map.iter().position(|&b| b == usize::MAX) {
        return input(format!("vertex {v} is in no block"));
    }
    for b in &blocks {
        if !is_module(g, b)? {
            return input(format!("block {b} is not a module"));
        }
    }
    let mut q_edges = Vec::new();
    for i in 0..blocks.len() {
        for j in i + 1..blocks.len() {
            match g.set_adjacency(&blocks[i], &blocks[j])? {
                SetAdjacency::Adjacent => q_edges.push((i, j)),
                SetAdjacency::Nonadjacent => {}
                SetAdjacency::Mixed => unreachable!("disjoint modules are never mixed"),
            }
        }
    }
    let q = Graph::new(blocks.len(), &q_edges)?;
    Ok((q, block_map, blocks))
}

/// Result of replacing a vertex by a graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Substitution {
    pub graph: Graph,
    /// Image of each vertex of the outer graph; `None` for the replaced vertex.
    pub outer_map: Vec<Option<usize>>,
    /// Image of each vertex of the inserted graph.
    pub inner_map: Vec<usize>,
}

impl Substitution {
    pub fn inner_image(&self) -> VertexSet {
        self.inner_map.iter().copied().collect()
    }
}

/// Replaces vertex `a` of `g` by the graph `m`, joining every vertex of `m`
/// to every neighbour of `a`.
///
/// The remaining vertices of `g` keep their relative order and take labels
/// `0..n-1`; the vertices of `m` follow in their own order.
pub fn substitute(g: &Graph, a: usize, m: &Graph) -> Result<Substitution> {
    g.check_vertex(a)?;
    if m.n() == 0 {
        return input("the inserted graph must be nonempty");
    }
    let outer_map: Vec<Option<usize>> = g
        .vertices()
        .map(|v| match v.cmp(&a) {
            std::cmp::Ordering::Less => Some(v),
            std::cmp::Ordering::Equal => None,
            std::cmp::Ordering::Greater => Some(v - 1),
        })
        .collect();
    let offset = g.n() - 1;
    let inner_map: Vec<usize> = m.vertices().map(|v| offset + v).collect();
    let mut edges = Vec::new();
    for (u, v) in g.edges() {
        match (outer_map[u], outer_map[v]) {
            (Some(x), Some(y)) => edges.push((x, y)),
            (None, Some(x)) | (Some(x), None) => edges.extend(inner_map.iter().map(|&y| (x, y))),
            (None, None) => unreachable!("no loops"),
        }
    }
    edges.extend(m.edges().into_iter().map(|(u, v)| (inner_map[u], inner_map[v])));
    let graph = Graph::new(offset + m.n(), &edges)?;
    Ok(Substitution { graph, outer_map, inner_map })
}

/// Lexicographic product: `(a, x) ~ (b, y)` iff `a ~ b` in `g`, or `a = b`
/// and `x ~ y` in `h`. Vertex `(a, x)` gets label `a * |h| + x`; the map
/// returned sends labels back to pairs.
pub fn lex_product(g: &Graph, h: &Graph) -> (Graph, Vec<(usize, usize)>) {
    let k = h.n();
    let pairs: Vec<(usize, usize)> = (0..g.n()).flat_map(|a| (0..k).map(move |x| (a, x))).collect();
    let graph = Graph::from_fn(pairs.len(), |i, j| {
        let ((a, x), (b, y)) = (pairs[i], pairs[j]);
        g.has_edge(a, b) || (a == b && h.has_edge(x, y))
    });
    (graph, pairs)
}

/// Rebuilds a graph from a partition's quotient by substituting
/// `block_graphs[i]` for quotient vertex `i`, then naming the vertices of
/// block graph `i` after the members of `blocks[i]` in increasing order.
pub fn reconstruct(p: &ModularPartition, block_graphs: &[Graph]) -> Result<Graph> {
    if block_graphs.len() != p.len() {
        return input(format!("expected {} block graphs, got {}", p.len(), block_graphs.len()));
    }
    for (i, (b, h)) in p.blocks.iter().zip(block_graphs).enumerate() {
        if b.len() != h.n() {
            return input(format!("block {i} has {} vertices but its graph has {}", b.len(), h.n()));
        }
    }
    // current[i] = label of quotient vertex i while it is still unexpanded
    let mut current: Vec<Option<usize>> = (0..p.len()).map(Some).collect();
    // origin[label] = (block, index within block graph) for expanded vertices
    let mut origin: Vec<Option<(usize, usize)>> = vec![None; p.len()];
    let mut graph = p.quotient.clone();
    for (i, h) in block_graphs.iter().enumerate() {
        let a = current[i].expect("each block is expanded once");
        let sub = substitute(&graph, a, h)?;
        let mut next_origin = vec![None; sub.graph.n()];
        for (old, new) in sub.outer_map.iter().enumerate() {
            if let Some(new) = new {
                next_origin[*new] = origin[old];
            }
        }
        for (x, &new) in sub.inner_map.iter().enumerate() {
            next_origin[new] = Some((i, x));
        }
        current[i] = None;
        for c in current.iter_mut().flatten() {
            *c = sub.outer_map[*c].expect("only the pivot disappears");
        }
        origin = next_origin;
        graph = sub.graph;
    }
    let members: Vec<Vec<usize>> = p.blocks.iter().map(VertexSet::to_vec).collect();
    let perm: Vec<usize> = origin
        .iter()
        .map(|o| {
            let (b, x) = o.expect("every vertex comes from a block");
            members[b][x]
        })
        .collect();
    graph.relabel(&perm)
}
