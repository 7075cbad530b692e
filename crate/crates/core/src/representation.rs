//! Representation numbers, permutation-representation numbers, and the
//! substitution constructions that compose them.

use serde::{Deserialize, Serialize};

use crate::error::{domain, input, resource, Error, Result};
use crate::graph::Graph;
use crate::modular::{lex_product, substitute};
use crate::orientation::{exists_semi_transitive_orientation, find_transitive_orientation, poset_dimension, poset_of};
use crate::word::Word;

/// Default bound on k for the representation searches.
pub const DEFAULT_WORD_CAP: usize = 4;

/// Search limits shared by every operation that may fall back to
/// exhaustive search.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Caps {
    /// Largest k tried by the word and realizer searches.
    pub word: usize,
    /// Largest edge count handed to the semi-transitive orientation search.
    pub oracle: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Self { word: DEFAULT_WORD_CAP, oracle: crate::orientation::DEFAULT_ORACLE_CAP }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    General,
    Permutational,
}

/// A word together with the graph it represents.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Representation {
    word: Word,
    k: Option<usize>,
    mode: Mode,
    target: Graph,
}

impl Representation {
    /// Checks that `word` represents `target` (and, for the permutational
    /// mode, that it splits into permutations).
    pub fn new(word: Word, target: Graph, mode: Mode) -> Result<Self> {
        if !word.represents(&target)? {
            return input(format!("word does not represent the target graph: {word}"));
        }
        if mode == Mode::Permutational && word.split_permutations().is_none() {
            return input("word is not a concatenation of permutations");
        }
        let k = word.uniformity().uniform_k;
        Ok(Self { word, k, mode, target })
    }

    #[cfg(test)]
    pub(crate) fn unchecked(word: Word, target: Graph, mode: Mode) -> Self {
        let k = word.uniformity().uniform_k;
        Self { word, k, mode, target }
    }

    pub fn word(&self) -> &Word {
        &self.word
    }

    /// Common occurrence count, when the word is uniform.
    pub fn k(&self) -> Option<usize> {
        self.k
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn target(&self) -> &Graph {
        &self.target
    }

    pub fn permutations(&self) -> Option<Vec<Word>> {
        match self.mode {
            Mode::Permutational => self.word.split_permutations(),
            Mode::General => None,
        }
    }

    /// Re-checks the certificate.
    pub fn verify(&self) -> bool {
        self.word.represents(&self.target).unwrap_or(false)
            && (self.mode == Mode::General || self.word.split_permutations().is_some())
    }

    /// Same representation made `t`-uniform. A permutational word repeats its
    /// last permutation; a general uniform word gets its letters appended in
    /// order of last occurrence, which keeps alternating pairs alternating.
    pub fn pad_to(&self, t: usize) -> Result<Representation> {
        let Some(k) = self.k else {
            return input("only uniform words can be padded");
        };
        if t < k {
            return input(format!("cannot pad a {k}-uniform word down to {t}"));
        }
        let mut letters = self.word.letters().to_vec();
        let m = self.target.n();
        for _ in k..t {
            let tail = match self.mode {
                Mode::Permutational => letters[letters.len() - m..].to_vec(),
                Mode::General => Word::new(letters.clone()).last_occurrence_order(),
            };
            letters.extend(tail);
        }
        Representation::new(Word::new(letters), self.target.clone(), self.mode)
    }
}

/// Minimal-k uniform representing word with k at most `cap`, or `None`.
///
/// Depth-first search over k-uniform words in lexicographic order, so the
/// certificate is the smallest minimal-k word. A partial word is abandoned
/// as soon as an adjacent pair repeats a letter, or a non-adjacent pair
/// can no longer fail to alternate.
pub fn rep_number(g: &Graph, cap: usize) -> Result<Option<Representation>> {
    if cap < 1 {
        return input("representation cap must be at least 1");
    }
    if g.n() == 0 {
        return input("the empty graph has no representing word");
    }
    for k in 1..=cap {
        if let Some(word) = uniform_word(g, k)? {
            return Representation::new(word, g.clone(), Mode::General).map(Some);
        }
    }
    Ok(None)
}

/// Smallest k-uniform word representing `g`, if any.
pub fn uniform_word(g: &Graph, k: usize) -> Result<Option<Word>> {
    let adj = g.masks()?;
    let n = g.n();
    if k == 1 {
        // a permutation makes every pair alternate
        return Ok((g.edge_count() == n * (n - 1) / 2).then(|| Word::new((0..n).collect())));
    }
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut search = UniformSearch {
        adj: adj.clone(),
        non: (0..n).map(|v| !adj[v] & all & !(1 << v)).collect(),
        k: k as u32,
        placed: vec![0; n],
        since: vec![0; n],
        broken: vec![0; n],
        word: Vec::with_capacity(n * k),
        len: n * k,
    };
    Ok(search.run().then(|| Word::new(search.word)))
}

struct UniformSearch {
    adj: Vec<u64>,
    non: Vec<u64>,
    k: u32,
    placed: Vec<u32>,
    /// Letters seen since the latest occurrence of each letter.
    since: Vec<u64>,
    /// Non-adjacent pairs already shown not to alternate.
    broken: Vec<u64>,
    word: Vec<usize>,
    len: usize,
}

impl UniformSearch {
    fn run(&mut self) -> bool {
        if self.word.len() == self.len {
            return (0..self.adj.len()).all(|x| self.non[x] & !self.broken[x] == 0);
        }
        let n = self.adj.len();
        for x in 0..n {
            let p = self.placed[x];
            if p == self.k {
                continue;
            }
            let mut newly = 0u64;
            if p > 0 {
                if self.adj[x] & !self.since[x] != 0 {
                    continue;
                }
                newly = self.non[x] & !self.since[x] & !self.broken[x];
            }
            if p + 1 == self.k {
                // after the last x, the pair breaks only if y occurs twice more
                let mut open = self.non[x] & !self.broken[x] & !newly;
                let mut dead = false;
                while open != 0 {
                    let y = open.trailing_zeros() as usize;
                    open &= open - 1;
                    if self.k - self.placed[y] <= 1 {
                        dead = true;
                        break;
                    }
                }
                if dead {
                    continue;
                }
            }
            let saved_since = self.since.clone();
            self.broken[x] |= newly;
            let mut m = newly;
            while m != 0 {
                let y = m.trailing_zeros() as usize;
                m &= m - 1;
                self.broken[y] |= 1 << x;
            }
            for s in self.since.iter_mut() {
                *s |= 1 << x;
            }
            self.since[x] = 0;
            self.placed[x] += 1;
            self.word.push(x);
            if self.run() {
                return true;
            }
            self.word.pop();
            self.placed[x] -= 1;
            self.since = saved_since;
            self.broken[x] &= !newly;
            let mut m = newly;
            while m != 0 {
                let y = m.trailing_zeros() as usize;
                m &= m - 1;
                self.broken[y] &= !(1 << x);
            }
        }
        false
    }
}

/// Minimal concatenation of permutations representing `g`, with at most
/// `cap` permutations. `None` when `g` is not a comparability graph or
/// needs more than `cap`.
///
/// The permutations are a minimum realizer of the poset induced by a
/// transitive orientation of `g`.
pub fn prn(g: &Graph, cap: usize) -> Result<Option<Representation>> {
    if cap < 1 {
        return input("representation cap must be at least 1");
    }
    if g.n() == 0 {
        return input("the empty graph has no representing word");
    }
    let n = g.n();
    let edges = g.edge_count();
    if edges == n * (n - 1) / 2 || (edges == 0 && cap >= 2) {
        // complete: one permutation; edgeless: a permutation and its reverse
        let mut perms = vec![Word::new((0..n).collect())];
        if edges == 0 && n > 1 {
            perms.push(Word::new((0..n).rev().collect()));
        }
        let word = Word::concat_permutations(&perms)?;
        return Representation::new(word, g.clone(), Mode::Permutational).map(Some);
    }
    let Some(o) = find_transitive_orientation(g) else {
        return Ok(None);
    };
    let poset = poset_of(&o)?;
    let Some(realizer) = poset_dimension(&poset, cap)? else {
        return Ok(None);
    };
    let perms: Vec<Word> = realizer.into_iter().map(Word::new).collect();
    let word = Word::concat_permutations(&perms)?;
    Representation::new(word, g.clone(), Mode::Permutational).map(Some)
}

/// Inputs of the vertex-substitution construction: a representation of the
/// outer graph, a permutational representation of the graph inserted at
/// `pivot`.
#[derive(Debug, Clone)]
pub struct SubstitutionPlan {
    pub outer: Representation,
    pub inner: Representation,
    pub pivot: usize,
}

impl SubstitutionPlan {
    pub fn new(outer: Representation, inner: Representation, pivot: usize) -> Result<Self> {
        outer.target().check_vertex(pivot)?;
        if outer.k().is_none() {
            return input("outer representation must be uniform");
        }
        if inner.mode() != Mode::Permutational {
            return input("inner representation must be a concatenation of permutations");
        }
        Ok(Self { outer, inner, pivot })
    }

    /// Number of copies used: the larger of the two uniformities.
    pub fn t(&self) -> usize {
        self.outer.k().unwrap_or(0).max(self.inner.k().unwrap_or(0))
    }

    /// For a permutational outer word padded to `t()`, the prefix and suffix
    /// of each permutation around the pivot.
    pub fn splits(&self) -> Result<Option<Vec<(Word, Word)>>> {
        let outer = self.outer.pad_to(self.t())?;
        Ok(outer.permutations().map(|perms| {
            perms
                .iter()
                .map(|p| {
                    let at = p.letters().iter().position(|&c| c == self.pivot).expect("permutation holds the pivot");
                    (Word::new(p.letters()[..at].to_vec()), Word::new(p.letters()[at + 1..].to_vec()))
                })
                .collect()
        }))
    }
}

/// Builds a representation of the outer graph with the pivot replaced by
/// the inner graph: both words are padded to `t` copies and the i-th
/// occurrence of the pivot becomes the i-th inner permutation.
///
/// The result is permutational when the outer word is, and is checked
/// against the substituted graph before it is returned.
pub fn substitute_representation(plan: &SubstitutionPlan) -> Result<Representation> {
    let t = plan.t();
    let outer = plan.outer.pad_to(t)?;
    let inner = plan.inner.pad_to(t)?;
    let sub = substitute(outer.target(), plan.pivot, inner.target())?;
    let perms = inner.permutations().expect("inner is permutational");
    let mut copy = 0;
    let mut letters = Vec::with_capacity(outer.word().len() - t + t * inner.target().n());
    for &c in outer.word().letters() {
        match sub.outer_map[c] {
            Some(x) => letters.push(x),
            None => {
                letters.extend(perms[copy].letters().iter().map(|&y| sub.inner_map[y]));
                copy += 1;
            }
        }
    }
    Representation::new(Word::new(letters), sub.graph, outer.mode())
        .map_err(|e| Error::Input(format!("substitution certificate failed to verify: {e}")))
}

/// A number obtained by composition, with the certificate that realizes it.
#[derive(Debug, Clone)]
pub struct Composed {
    pub k: usize,
    pub outer_k: usize,
    pub inner_k: usize,
    pub certificate: Representation,
}

fn require_rep(g: &Graph, caps: Caps, side: &str) -> Result<Representation> {
    if let Some(rep) = rep_number(g, caps.word)? {
        return Ok(rep);
    }
    if !exists_semi_transitive_orientation(g, caps.oracle)? {
        return domain(format!("{side} graph is not word-representable"));
    }
    resource(format!("{side} graph needs more than {} copies per letter", caps.word))
}

fn require_prn(g: &Graph, caps: Caps, side: &str) -> Result<Representation> {
    if let Some(rep) = prn(g, caps.word)? {
        return Ok(rep);
    }
    if find_transitive_orientation(g).is_none() {
        return domain(format!("{side} graph is not a comparability graph"));
    }
    resource(format!("{side} graph needs more than {} permutations", caps.word))
}

/// Representation number of `g` with vertex `a` replaced by `m`: the larger
/// of R(g) and the permutation-representation number of `m`.
pub fn rep_number_composed(g: &Graph, a: usize, m: &Graph, caps: Caps) -> Result<Composed> {
    g.check_vertex(a)?;
    let outer = require_rep(g, caps, "outer")?;
    let inner = require_prn(m, caps, "inserted")
        .map_err(|e| retag(e, "the substitution is word-representable only if the inserted graph is a comparability graph"))?;
    compose(outer, inner, a)
}

/// Permutation-representation number of `g` with `a` replaced by `m`.
pub fn prn_composed(g: &Graph, a: usize, m: &Graph, caps: Caps) -> Result<Composed> {
    g.check_vertex(a)?;
    let outer = require_prn(g, caps, "outer")?;
    let inner = require_prn(m, caps, "inserted")?;
    compose(outer, inner, a)
}

fn compose(outer: Representation, inner: Representation, a: usize) -> Result<Composed> {
    let (outer_k, inner_k) = (outer.k().expect("uniform"), inner.k().expect("uniform"));
    let plan = SubstitutionPlan::new(outer, inner, a)?;
    let certificate = substitute_representation(&plan)?;
    Ok(Composed { k: outer_k.max(inner_k), outer_k, inner_k, certificate })
}

fn retag(e: Error, note: &str) -> Error {
    match e {
        Error::Domain(msg) => Error::Domain(format!("{msg}; {note}")),
        other => other,
    }
}

/// Representation number of the lexicographic product `g[h]`.
pub fn lex_rep_number(g: &Graph, h: &Graph, caps: Caps) -> Result<Composed> {
    let outer = require_rep(g, caps, "outer")?;
    let inner = require_prn(h, caps, "inner")
        .map_err(|e| retag(e, "the lexicographic product is word-representable only if the inner graph is a comparability graph"))?;
    lex_compose(outer, inner)
}

/// Permutation-representation number of the lexicographic product `g[h]`.
pub fn lex_prn(g: &Graph, h: &Graph, caps: Caps) -> Result<Composed> {
    let outer = require_prn(g, caps, "outer")?;
    let inner = require_prn(h, caps, "inner")?;
    lex_compose(outer, inner)
}

/// Substitutes the inner representation for every outer vertex in turn,
/// then renames vertices to the product's `(a, x) -> a * |h| + x` labels.
fn lex_compose(outer: Representation, inner: Representation) -> Result<Composed> {
    let (outer_k, inner_k) = (outer.k().expect("uniform"), inner.k().expect("uniform"));
    let g = outer.target().clone();
    let h = inner.target().clone();
    let mut pos: Vec<Option<usize>> = g.vertices().map(Some).collect();
    // origin[label] = product label of each already expanded vertex
    let mut origin: Vec<Option<usize>> = vec![None; g.n()];
    let mut current = outer;
    for v in g.vertices() {
        let pivot = pos[v].expect("each vertex is expanded once");
        let plan = SubstitutionPlan::new(current, inner.clone(), pivot)?;
        let next = substitute_representation(&plan)?;
        let sub = substitute(plan.outer.target(), pivot, &h)?;
        let mut next_origin = vec![None; sub.graph.n()];
        for (old, new) in sub.outer_map.iter().enumerate() {
            if let Some(new) = new {
                next_origin[*new] = origin[old];
            }
        }
        for (x, &new) in sub.inner_map.iter().enumerate() {
            next_origin[new] = Some(v * h.n() + x);
        }
        pos[v] = None;
        for p in pos.iter_mut().flatten() {
            *p = sub.outer_map[*p].expect("only the pivot disappears");
        }
        origin = next_origin;
        current = next;
    }
    let perm: Vec<usize> = origin.into_iter().map(|o| o.expect("all vertices expanded")).collect();
    let (product, _) = lex_product(&g, &h);
    let word = Word::new(current.word().letters().iter().map(|&c| perm[c]).collect());
    let certificate = Representation::new(word, product, current.mode())?;
    Ok(Composed { k: outer_k.max(inner_k), outer_k, inner_k, certificate })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::VertexSet;

    /// Every arrangement of k copies of each letter, checked with
    /// `represents`. No pruning; only for tiny inputs.
    fn unpruned_min_k(g: &Graph, max_k: usize) -> Option<usize> {
        fn arrangements(counts: &mut [usize], word: &mut Vec<usize>, g: &Graph) -> bool {
            if counts.iter().all(|&c| c == 0) {
                return Word::new(word.clone()).represents(g).unwrap();
            }
            for x in 0..counts.len() {
                if counts[x] == 0 {
                    continue;
                }
                counts[x] -= 1;
                word.push(x);
                let found = arrangements(counts, word, g);
                word.pop();
                counts[x] += 1;
                if found {
                    return true;
                }
            }
            false
        }
        (1..=max_k).find(|&k| arrangements(&mut vec![k; g.n()], &mut Vec::new(), g))
    }

    fn connected_graphs(n: usize) -> impl Iterator<Item = Graph> {
        let m = n * (n - 1) / 2;
        (0u32..1 << m)
            .map(move |bits| {
                let mut it = (0..m).map(|i| bits >> i & 1 == 1);
                Graph::from_fn(n, |_, _| it.next().unwrap())
            })
            .filter(Graph::is_connected)
    }

    #[test]
    fn rep_number_examples() {
        assert_eq!(rep_number(&Graph::complete(2), 4).unwrap().unwrap().k(), Some(1));
        let c6 = rep_number(&Graph::cycle(6), 4).unwrap().unwrap();
        assert_eq!(c6.k(), Some(2));
        assert!(c6.verify());
        let w6 = rep_number(&Graph::wheel(6), 4).unwrap().unwrap();
        assert_eq!(w6.k(), Some(3));
        assert!(w6.verify());
        assert!(rep_number(&Graph::cycle(6), 1).unwrap().is_none());
        assert!(rep_number(&Graph::wheel(5), 3).unwrap().is_none());
        assert!(rep_number(&Graph::cycle(6), 0).is_err());
    }

    #[test]
    fn rep_number_matches_unpruned_search() {
        for n in 1..=4 {
            for g in connected_graphs(n) {
                let k = rep_number(&g, 3).unwrap().map(|r| r.k().unwrap());
                assert_eq!(k, unpruned_min_k(&g, 3), "{g:?}");
            }
        }
        for g in connected_graphs(5).step_by(7) {
            let k = rep_number(&g, 2).unwrap().map(|r| r.k().unwrap());
            assert_eq!(k, unpruned_min_k(&g, 2), "{g:?}");
        }
    }

    #[test]
    fn prn_examples() {
        let c6 = prn(&Graph::cycle(6), 4).unwrap().unwrap();
        assert_eq!(c6.k(), Some(3));
        assert_eq!(c6.mode(), Mode::Permutational);
        assert!(c6.verify());
        assert_eq!(prn(&Graph::complete(5), 4).unwrap().unwrap().k(), Some(1));
        assert!(prn(&Graph::cycle(5), 4).unwrap().is_none());
        assert!(prn(&Graph::cycle(6), 2).unwrap().is_none());
        assert_eq!(prn(&Graph::path(3), 4).unwrap().unwrap().k(), Some(2));
        assert_eq!(prn(&Graph::complete(1), 4).unwrap().unwrap().word().letters(), &[0]);
    }

    #[test]
    fn prn_is_minimal_among_permutation_concatenations() {
        fn perms(n: usize) -> Vec<Vec<usize>> {
            if n == 0 {
                return vec![vec![]];
            }
            let mut out = Vec::new();
            for p in perms(n - 1) {
                for i in 0..=p.len() {
                    let mut q = p.clone();
                    q.insert(i, n - 1);
                    out.push(q);
                }
            }
            out
        }
        for n in 2..=4 {
            let all = perms(n);
            for g in connected_graphs(n) {
                let Some(rep) = prn(&g, 4).unwrap() else { continue };
                let k = rep.k().unwrap();
                // no concatenation of k-1 permutations represents g
                if k == 2 {
                    assert!(all.iter().all(|p| !Word::new(p.clone()).represents(&g).unwrap()));
                }
                if k == 3 {
                    for p in &all {
                        for q in &all {
                            let w = Word::new(p.iter().chain(q).copied().collect());
                            assert!(!w.represents(&g).unwrap());
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn padding_keeps_the_graph() {
        let c6 = prn(&Graph::cycle(6), 4).unwrap().unwrap();
        let padded = c6.pad_to(5).unwrap();
        assert_eq!(padded.k(), Some(5));
        assert!(padded.verify());

        let general = rep_number(&Graph::cycle(6), 4).unwrap().unwrap();
        let padded = general.pad_to(4).unwrap();
        assert_eq!(padded.k(), Some(4));
        assert!(padded.verify());
        assert!(general.pad_to(1).is_err());
    }

    #[test]
    fn substitution_plans() {
        let k2 = Representation::new(Word::new(vec![0, 1]), Graph::complete(2), Mode::Permutational).unwrap();
        let k1 = Representation::new(Word::new(vec![0]), Graph::complete(1), Mode::Permutational).unwrap();
        let out = substitute_representation(&SubstitutionPlan::new(k2.clone(), k1, 0).unwrap()).unwrap();
        assert_eq!(out.target(), &Graph::complete(2));
        assert_eq!(out.word().len(), 2);

        let c6 = prn(&Graph::cycle(6), 4).unwrap().unwrap();
        let plan = SubstitutionPlan::new(k2.clone(), c6, 0).unwrap();
        assert_eq!(plan.t(), 3);
        let splits = plan.splits().unwrap().unwrap();
        assert_eq!(splits, vec![(Word::default(), Word::new(vec![1])); 3]);
        let w6 = substitute_representation(&plan).unwrap();
        assert_eq!(w6.target(), &Graph::wheel(6));
        assert_eq!(w6.k(), Some(3));
        assert!(w6.verify());

        let k2p = Representation::new(Word::new(vec![0, 1]), Graph::complete(2), Mode::Permutational).unwrap();
        let k3 = substitute_representation(&SubstitutionPlan::new(k2.clone(), k2p, 1).unwrap()).unwrap();
        assert_eq!(k3.target(), &Graph::complete(3));
        assert_eq!(k3.k(), Some(1));

        let general = Representation::new(Word::new(vec![0, 1, 0, 1]), Graph::complete(2), Mode::General).unwrap();
        assert!(SubstitutionPlan::new(k2.clone(), general, 0).is_err());
        let k1 = Representation::new(Word::new(vec![0]), Graph::complete(1), Mode::Permutational).unwrap();
        assert!(SubstitutionPlan::new(k2, k1, 2).is_err());
    }

    #[test]
    fn composed_numbers() {
        let caps = Caps::default();
        let r = rep_number_composed(&Graph::complete(2), 0, &Graph::cycle(6), caps).unwrap();
        assert_eq!(r.k, 3);
        assert_eq!(r.certificate.target(), &Graph::wheel(6));
        assert_eq!(rep_number_composed(&Graph::complete(2), 0, &Graph::complete(2), caps).unwrap().k, 1);

        let r = rep_number_composed(&Graph::cycle(6), 0, &Graph::complete(2), caps).unwrap();
        assert_eq!(r.k, 2);
        assert!(r.certificate.verify());

        let err = rep_number_composed(&Graph::complete(2), 0, &Graph::cycle(5), caps).unwrap_err();
        assert!(matches!(err, Error::Domain(_)));
        let err = rep_number_composed(&Graph::wheel(5), 0, &Graph::complete(2), caps).unwrap_err();
        assert!(matches!(err, Error::Domain(_)));

        assert_eq!(prn_composed(&Graph::complete(2), 0, &Graph::cycle(6), caps).unwrap().k, 3);
        assert_eq!(prn_composed(&Graph::complete(2), 0, &Graph::complete(2), caps).unwrap().k, 1);
        let r = prn_composed(&Graph::path(3), 1, &Graph::complete(2), caps).unwrap();
        assert_eq!(r.k, 2);
        assert_eq!(r.certificate.mode(), Mode::Permutational);
        assert!(matches!(prn_composed(&Graph::cycle(5), 0, &Graph::complete(2), caps), Err(Error::Domain(_))));
    }

    #[test]
    fn lexicographic_numbers() {
        let caps = Caps::default();
        let r = lex_rep_number(&Graph::complete(2), &Graph::cycle(6), caps).unwrap();
        assert_eq!(r.k, 3);
        assert_eq!(r.certificate.target().n(), 12);
        assert!(r.certificate.verify());
        assert_eq!(lex_rep_number(&Graph::complete(2), &Graph::complete(2), caps).unwrap().k, 1);
        let r = lex_rep_number(&Graph::cycle(6), &Graph::complete(2), caps).unwrap();
        assert_eq!(r.k, 2);
        assert!(r.certificate.verify());
        assert!(matches!(lex_rep_number(&Graph::complete(2), &Graph::cycle(5), caps), Err(Error::Domain(_))));

        assert_eq!(lex_prn(&Graph::complete(2), &Graph::cycle(6), caps).unwrap().k, 3);
        assert_eq!(lex_prn(&Graph::complete(2), &Graph::complete(2), caps).unwrap().k, 1);
        let r = lex_prn(&Graph::cycle(6), &Graph::cycle(6), caps).unwrap();
        assert_eq!(r.k, 3);
        assert_eq!(r.certificate.target().n(), 36);
        assert_eq!(r.certificate.mode(), Mode::Permutational);
        assert!(r.certificate.verify());
    }

    #[test]
    fn composed_certificate_restricts_to_both_parts() {
        let caps = Caps::default();
        let r = rep_number_composed(&Graph::path(4), 1, &Graph::cycle(4), caps).unwrap();
        let target = r.certificate.target();
        // the inserted vertices are the last four labels
        let inner: VertexSet = (3..7).collect();
        let (m, _) = target.induced_subgraph(&inner).unwrap();
        assert_eq!(m, Graph::cycle(4));
        assert!(crate::modular::is_module(target, &inner).unwrap());
    }
}
