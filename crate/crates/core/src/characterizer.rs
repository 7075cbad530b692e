//! Decides word-representability through the maximal modular partition.
//!
//! A connected graph with a nontrivial maximal modular partition is
//! word-representable iff every block induces a comparability graph and
//! the quotient is word-representable. Its representation number is the
//! maximum of the quotient's representation number and the blocks'
//! permutation-representation numbers, and the same holds for the
//! permutation-representation number of a comparability graph. The
//! recursion bottoms out at graphs whose maximal modular partition is all
//! singletons (prime graphs and complete graphs), which are decided by
//! comparability, word search and the semi-transitive oracle in that order.

use serde::Serialize;

use crate::error::{input, resource, Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::modular::{maximal_modular_partition, quotient, ModularPartition};
use crate::orientation::{find_semi_transitive_orientation, find_transitive_orientation};
pub use crate::representation::Caps;
use crate::representation::{
    prn, rep_number, substitute_representation, Mode, Representation, SubstitutionPlan,
};
use crate::word::Word;

/// Largest witness edge count replayed by [`verify`].
pub const WITNESS_EDGE_LIMIT: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Status {
    NotWordRepresentable,
    WordRepresentable,
    /// Word-representable and, in addition, a comparability graph.
    Comparability,
    /// Every block is a comparability graph, but the caps stopped the
    /// decision on a quotient.
    ReducedToQuotient,
}

impl Status {
    pub fn is_word_representable(self) -> Option<bool> {
        match self {
            Status::NotWordRepresentable => Some(false),
            Status::WordRepresentable | Status::Comparability => Some(true),
            Status::ReducedToQuotient => None,
        }
    }
}

/// Numbers established for the graph. `None` means not determined within
/// the caps.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Numbers {
    pub r: Option<usize>,
    pub prn: Option<usize>,
    /// Permutation-representation number of each top-level block.
    pub block_prn: Vec<Option<usize>>,
    /// Representation number of the top-level quotient.
    pub quotient_r: Option<usize>,
}

/// An undecided quotient: the graph and, for each of its vertices, the
/// vertices of the classified graph it stands for.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReducedQuotient {
    pub graph: Graph,
    pub blocks: Vec<VertexSet>,
    /// Semi-transitive oracle result, when it ran.
    pub oracle: Option<bool>,
}

#[derive(Debug, Clone)]
pub struct Verdict {
    pub status: Status,
    /// Vertex set inducing a non-comparability graph; present iff not
    /// word-representable.
    pub witness: Option<VertexSet>,
    /// Minimal-k word when `numbers.r` is known, otherwise any uniform one.
    pub certificate: Option<Representation>,
    /// Concatenation of permutations, for comparability graphs.
    pub permutational: Option<Representation>,
    pub numbers: Numbers,
    /// Top-level maximal modular partition, if the graph is decomposable.
    pub blocks: Vec<VertexSet>,
    pub quotient: Option<ReducedQuotient>,
    pub caps: Caps,
}

impl Verdict {
    fn empty(status: Status, caps: Caps) -> Self {
        Self {
            status,
            witness: None,
            certificate: None,
            permutational: None,
            numbers: Numbers::default(),
            blocks: Vec::new(),
            quotient: None,
            caps,
        }
    }
}

/// For each block of the maximal modular partition, whether it induces a
/// comparability graph. Prime graphs have nothing to report.
pub fn module_comparability_test(g: &Graph) -> Result<Vec<(VertexSet, bool)>> {
    let p = maximal_modular_partition(g)?;
    if p.is_trivial() {
        return Err(Error::Domain("prime: no nontrivial modules".into()));
    }
    Ok(p.blocks
        .iter()
        .enumerate()
        .map(|(i, b)| (b.clone(), find_transitive_orientation(&p.block_graph(i)).is_some()))
        .collect())
}

/// Polynomial non-word-representability screen: a block of the maximal
/// modular partition that is not a comparability graph proves the graph is
/// not word-representable. `None` carries no information.
pub fn nonwr_screen(g: &Graph) -> Result<Option<VertexSet>> {
    if !g.is_connected() {
        return input("the screen needs a connected graph");
    }
    if g.n() < 2 {
        return Ok(None);
    }
    let p = maximal_modular_partition(g)?;
    Ok((0..p.len())
        .find(|&i| p.blocks[i].len() > 1 && find_transitive_orientation(&p.block_graph(i)).is_none())
        .map(|i| p.blocks[i].clone()))
}

/// Classifies a connected graph.
pub fn classify(g: &Graph, caps: Caps) -> Result<Verdict> {
    if g.n() == 0 {
        return input("cannot classify the empty graph");
    }
    if !g.is_connected() {
        return input("classification needs a connected graph");
    }
    if caps.word < 1 {
        return input("word cap must be at least 1");
    }
    classify_connected(g, caps)
}

fn classify_connected(g: &Graph, caps: Caps) -> Result<Verdict> {
    if g.n() == 1 {
        return base_case(g, caps);
    }
    let p = maximal_modular_partition(g)?;
    if p.is_trivial() {
        return base_case(g, caps);
    }
    let mut verdict = Verdict::empty(Status::WordRepresentable, caps);
    verdict.blocks = p.blocks.clone();

    let mut block_reps = Vec::with_capacity(p.len());
    for i in 0..p.len() {
        let h = p.block_graph(i);
        if find_transitive_orientation(&h).is_none() {
            verdict.status = Status::NotWordRepresentable;
            verdict.witness = Some(p.blocks[i].clone());
            return Ok(verdict);
        }
        // Hiraguchi: dimension is at most max(2, n/2), so this always succeeds
        let rep = prn(&h, caps.word.max(h.n()))?.expect("comparability graph has a realizer");
        block_reps.push(rep);
    }
    verdict.numbers.block_prn = block_reps.iter().map(Representation::k).collect();
    let max_block = block_reps.iter().filter_map(Representation::k).max().unwrap_or(1);

    let q = classify_connected(&p.quotient, caps)?;
    verdict.numbers.quotient_r = q.numbers.r;
    match q.status {
        Status::NotWordRepresentable => {
            verdict.status = Status::NotWordRepresentable;
            let reps = p.representatives();
            verdict.witness = q.witness.map(|w| w.iter().map(|x| reps[x]).collect());
            return Ok(verdict);
        }
        Status::ReducedToQuotient => {
            verdict.status = Status::ReducedToQuotient;
            let mut reduced = q.quotient.expect("reduced verdicts carry their quotient");
            reduced.blocks = reduced
                .blocks
                .iter()
                .map(|qb| qb.iter().flat_map(|x| p.blocks[x].iter()).collect())
                .collect();
            verdict.quotient = Some(reduced);
            return Ok(verdict);
        }
        Status::WordRepresentable | Status::Comparability => {}
    }

    let q_cert = q.certificate.expect("word-representable verdicts carry a word");
    let word = expand(&p, q_cert, &block_reps)?;
    verdict.numbers.r = q.numbers.r.map(|r| r.max(max_block));
    verdict.certificate = Some(word);
    if let (Status::Comparability, Some(q_perm)) = (q.status, q.permutational) {
        verdict.status = Status::Comparability;
        let perm = expand(&p, q_perm, &block_reps)?;
        verdict.numbers.prn = q.numbers.prn.map(|k| k.max(max_block));
        verdict.permutational = Some(perm);
    }
    Ok(verdict)
}

/// Substitutes each block's permutational word for its quotient vertex and
/// renames the result to the labels of `p.base`.
fn expand(p: &ModularPartition, outer: Representation, blocks: &[Representation]) -> Result<Representation> {
    // current[i] = label of quotient vertex i while unexpanded
    let mut current: Vec<Option<usize>> = (0..p.len()).map(Some).collect();
    let mut origin: Vec<Option<usize>> = vec![None; p.len()];
    let members: Vec<Vec<usize>> = p.blocks.iter().map(VertexSet::to_vec).collect();
    let mut rep = outer;
    for (i, inner) in blocks.iter().enumerate() {
        let pivot = current[i].expect("each block is expanded once");
        let plan = SubstitutionPlan::new(rep, inner.clone(), pivot)?;
        let outer_n = plan.outer.target().n();
        let next = substitute_representation(&plan)?;
        let inner_n = inner.target().n();
        // labels other than the pivot shift down past it; the block follows
        let shift = |c: usize| if c > pivot { c - 1 } else { c };
        let mut next_origin = vec![None; next.target().n()];
        for old in (0..outer_n).filter(|&c| c != pivot) {
            next_origin[shift(old)] = origin[old];
        }
        for x in 0..inner_n {
            next_origin[outer_n - 1 + x] = Some(members[i][x]);
        }
        for c in current.iter_mut().flatten() {
            *c = shift(*c);
        }
        current[i] = None;
        origin = next_origin;
        rep = next;
    }
    let perm: Vec<usize> = origin.into_iter().map(|o| o.expect("all blocks expanded")).collect();
    let word = Word::new(rep.word().letters().iter().map(|&c| perm[c]).collect());
    Representation::new(word, p.base.clone(), rep.mode())
}

/// Graphs whose maximal modular partition is all singletons.
fn base_case(g: &Graph, caps: Caps) -> Result<Verdict> {
    let mut verdict = Verdict::empty(Status::WordRepresentable, caps);
    if find_transitive_orientation(g).is_some() {
        let perm = prn(g, caps.word.max(g.n()))?.expect("comparability graph has a realizer");
        let prn_k = perm.k().expect("uniform");
        // R <= prn, so only smaller k need searching
        let below_cap = caps.word.min(prn_k - 1);
        let below = if below_cap >= 1 { rep_number(g, below_cap)? } else { None };
        let (r, cert) = match below {
            Some(rep) => (rep.k(), rep),
            None if prn_k - 1 <= caps.word => (Some(prn_k), general(&perm)),
            None => (None, general(&perm)),
        };
        verdict.status = Status::Comparability;
        verdict.numbers.r = r;
        verdict.numbers.prn = Some(prn_k);
        verdict.certificate = Some(cert);
        verdict.permutational = Some(perm);
        return Ok(verdict);
    }
    // the oracle runs before the word search: the search can only fail to
    // find a word, and on non-representable graphs it exhausts every k
    let oracle = match find_semi_transitive_orientation(g, caps.oracle) {
        Ok(found) => Some(found.is_some()),
        Err(Error::Resource(_)) => None,
        Err(e) => return Err(e),
    };
    if oracle == Some(false) {
        verdict.status = Status::NotWordRepresentable;
        verdict.witness = Some(VertexSet::full(g.n()));
        return Ok(verdict);
    }
    if let Some(rep) = rep_number(g, caps.word)? {
        verdict.numbers.r = rep.k();
        verdict.certificate = Some(rep);
        return Ok(verdict);
    }
    verdict.status = Status::ReducedToQuotient;
    verdict.quotient = Some(ReducedQuotient {
        graph: g.clone(),
        blocks: g.vertices().map(VertexSet::singleton).collect(),
        oracle,
    });
    Ok(verdict)
}

fn general(rep: &Representation) -> Representation {
    Representation::new(rep.word().clone(), rep.target().clone(), Mode::General).expect("already verified")
}

/// Replays a verdict's certificates against `g`.
pub fn verify(verdict: &Verdict, g: &Graph) -> Result<bool> {
    match verdict.status {
        Status::WordRepresentable | Status::Comparability => {
            let Some(cert) = &verdict.certificate else {
                return Ok(false);
            };
            if cert.target() != g || !cert.word().represents(g)? {
                return Ok(false);
            }
            if verdict.numbers.r.is_some() && cert.k() != verdict.numbers.r {
                return Ok(false);
            }
            if verdict.status == Status::Comparability {
                let Some(perm) = &verdict.permutational else {
                    return Ok(false);
                };
                if perm.target() != g || perm.word().split_permutations().is_none() || !perm.word().represents(g)? {
                    return Ok(false);
                }
            }
            Ok(true)
        }
        Status::NotWordRepresentable => {
            let Some(w) = &verdict.witness else {
                return Ok(false);
            };
            verify_witness(g, w)
        }
        Status::ReducedToQuotient => {
            let Some(q) = &verdict.quotient else {
                return Ok(false);
            };
            verify_reduction(g, &q.blocks, &q.graph)
        }
    }
}

/// True when `witness` proves `g` is not word-representable: either it lies
/// in the neighbourhood of some vertex and induces a graph with no
/// transitive orientation (neighbourhoods in word-representable graphs are
/// comparability graphs), or it induces a graph with no semi-transitive
/// orientation.
pub fn verify_witness(g: &Graph, witness: &VertexSet) -> Result<bool> {
    if witness.is_empty() {
        return Ok(false);
    }
    let (h, _) = g.induced_subgraph(witness)?;
    if h.edge_count() > WITNESS_EDGE_LIMIT {
        return resource(format!(
            "witness has {} edges; replay is limited to {WITNESS_EDGE_LIMIT}",
            h.edge_count()
        ));
    }
    let apex = g.vertices().any(|v| !witness.contains(v) && witness.iter().all(|u| g.has_edge(u, v)));
    if apex && find_transitive_orientation(&h).is_none() {
        return Ok(true);
    }
    Ok(find_semi_transitive_orientation(&h, WITNESS_EDGE_LIMIT)?.is_none())
}

/// True when `blocks` is a modular partition of `g` whose quotient is `q`.
pub fn verify_reduction(g: &Graph, blocks: &[VertexSet], q: &Graph) -> Result<bool> {
    let mut sorted = blocks.to_vec();
    sorted.sort_by_key(|b| b.first());
    if sorted != blocks {
        return Ok(false);
    }
    match quotient(g, blocks) {
        Ok((got, _)) => Ok(&got == q),
        Err(Error::Input(_)) => Ok(false),
        Err(e) => Err(e),
    }
}
