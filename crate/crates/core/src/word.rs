//! Words over vertex alphabets and the alternation relation.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use crate::error::{input, Error, Result};
use crate::graph::{Graph, VertexSet};

/// A finite sequence of vertex labels.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word {
    letters: Vec<usize>,
}

/// Occurrence counts of each letter, plus the common count if there is one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniformityProfile {
    pub counts: BTreeMap<usize, usize>,
    pub uniform_k: Option<usize>,
}

impl Word {
    pub fn new(letters: Vec<usize>) -> Self {
        Self { letters }
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn alphabet(&self) -> BTreeSet<usize> {
        self.letters.iter().copied().collect()
    }

    /// Keeps only the letters in `keep`, in order. Letters of `keep` that do
    /// not occur contribute nothing.
    pub fn project(&self, keep: &VertexSet) -> Word {
        Word::new(self.letters.iter().copied().filter(|&x| keep.contains(x)).collect())
    }

    /// Whether `x` and `y` alternate: the two-letter projection never repeats
    /// a letter back to back.
    pub fn alternate(&self, x: usize, y: usize) -> Result<bool> {
        if x == y {
            return input(format!("alternation needs two distinct letters, got {x} twice"));
        }
        let mut last = None;
        let (mut saw_x, mut saw_y) = (false, false);
        let mut ok = true;
        for &c in &self.letters {
            if c != x && c != y {
                continue;
            }
            saw_x |= c == x;
            saw_y |= c == y;
            if last == Some(c) {
                ok = false;
            }
            last = Some(c);
        }
        if !saw_x || !saw_y {
            return input(format!("letters {x} and {y} must both occur in the word"));
        }
        Ok(ok)
    }

    /// The graph this word represents, on its sorted alphabet. The returned
    /// map sends graph vertex `i` to its letter.
    pub fn alternation_graph(&self) -> Result<(Graph, Vec<usize>)> {
        if self.letters.is_empty() {
            return input("the empty word represents no graph");
        }
        let alphabet: Vec<usize> = self.alphabet().into_iter().collect();
        let index: BTreeMap<usize, usize> = alphabet.iter().enumerate().map(|(i, &c)| (c, i)).collect();
        let m = alphabet.len();
        let occ = self.occurrence_lists(|c| index[&c], m);
        let g = Graph::from_fn(m, |i, j| interleave(&occ[i], &occ[j]));
        Ok((g, alphabet))
    }

    fn occurrence_lists(&self, slot: impl Fn(usize) -> usize, m: usize) -> Vec<Vec<usize>> {
        let mut occ = vec![Vec::new(); m];
        for (pos, &c) in self.letters.iter().enumerate() {
            occ[slot(c)].push(pos);
        }
        occ
    }

    /// Whether this word represents `g`: its alphabet is exactly `0..n` and
    /// two letters alternate iff the vertices are adjacent.
    pub fn represents(&self, g: &Graph) -> Result<bool> {
        let n = g.n();
        if self.letters.iter().any(|&c| c >= n) || self.alphabet().len() != n {
            return input(format!("word alphabet does not equal the vertex set 0..{n}"));
        }
        let occ = self.occurrence_lists(|c| c, n);
        for u in 0..n {
            for v in u + 1..n {
                if interleave(&occ[u], &occ[v]) != g.has_edge(u, v) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    pub fn uniformity(&self) -> UniformityProfile {
        let mut counts = BTreeMap::new();
        for &c in &self.letters {
            *counts.entry(c).or_insert(0) += 1;
        }
        let mut values = counts.values().copied();
        let uniform_k = match values.next() {
            Some(first) if values.all(|v| v == first) => Some(first),
            _ => None,
        };
        UniformityProfile { counts, uniform_k }
    }

    /// Concatenates permutations of one common alphabet.
    pub fn concat_permutations(perms: &[Word]) -> Result<Word> {
        let Some(first) = perms.first() else {
            return input("need at least one permutation");
        };
        let alphabet = first.alphabet();
        let mut letters = Vec::with_capacity(perms.len() * alphabet.len());
        for (i, p) in perms.iter().enumerate() {
            if !p.is_permutation() {
                return input(format!("block {i} repeats a letter"));
            }
            if p.alphabet() != alphabet {
                return input(format!("block {i} is over a different alphabet"));
            }
            letters.extend_from_slice(&p.letters);
        }
        Ok(Word::new(letters))
    }

    pub fn is_permutation(&self) -> bool {
        self.alphabet().len() == self.letters.len()
    }

    /// Splits a word into consecutive permutations of its alphabet, if it is
    /// such a concatenation.
    pub fn split_permutations(&self) -> Option<Vec<Word>> {
        let m = self.alphabet().len();
        if m == 0 || !self.letters.len().is_multiple_of(m) {
            return None;
        }
        let blocks: Vec<Word> = self.letters.chunks(m).map(|c| Word::new(c.to_vec())).collect();
        blocks.iter().all(Word::is_permutation).then_some(blocks)
    }

    /// Letters in order of their last occurrence.
    pub(crate) fn last_occurrence_order(&self) -> Vec<usize> {
        let mut seen = BTreeSet::new();
        let mut order: Vec<usize> = self.letters.iter().rev().copied().filter(|&c| seen.insert(c)).collect();
        order.reverse();
        order
    }
}

/// Two sorted occurrence lists alternate iff merging them never puts two
/// positions of the same list next to each other.
fn interleave(a: &[usize], b: &[usize]) -> bool {
    let (mut i, mut j) = (0, 0);
    let mut last_from_a = None;
    while i < a.len() || j < b.len() {
        let from_a = j == b.len() || (i < a.len() && a[i] < b[j]);
        if last_from_a == Some(from_a) {
            return false;
        }
        last_from_a = Some(from_a);
        if from_a {
            i += 1;
        } else {
            j += 1;
        }
    }
    true
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.letters.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = Error;

    /// Parses decimal labels separated by single spaces.
    fn from_str(s: &str) -> Result<Self> {
        if s.is_empty() {
            return Ok(Word::default());
        }
        s.split(' ')
            .map(|tok| {
                tok.parse::<usize>()
                    .map_err(|_| Error::Input(format!("bad letter {tok:?} in word")))
            })
            .collect::<Result<Vec<_>>>()
            .map(Word::new)
    }
}

impl From<Vec<usize>> for Word {
    fn from(letters: Vec<usize>) -> Self {
        Word::new(letters)
    }
}
