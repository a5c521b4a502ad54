//! Pure factor decomposition and centralizers.

use super::{
    commutes, conjugate, cyclically_reduce, mul, normalize, power, Letter, NormalForm,
};
use crate::error::{Error, Result};
use crate::graph::Graph;
use std::collections::{BTreeSet, HashSet};

/// `g = conjugator^-1 · Π factor_i^exponent_i · conjugator`, with each
/// factor cyclically reduced, supported on one anticonnected block, and not
/// a proper power. Factors are ordered lexicographically by normal form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PureFactorDecomposition {
    pub conjugator: NormalForm,
    pub factors: Vec<(NormalForm, i64)>,
}

impl PureFactorDecomposition {
    /// Recomposes the element the decomposition came from.
    pub fn reassemble(&self, g: &Graph) -> NormalForm {
        let mut core = NormalForm::identity(g);
        for (f, e) in &self.factors {
            core = mul(g, &core, &power(g, f, *e));
        }
        conjugate(g, &core, &self.conjugator)
    }
}

/// Distinct left divisors of `w` of length `m` (all `h` with
/// `|w| = m + |h^-1 w|`).
fn left_divisors_of_length(g: &Graph, w: &NormalForm, m: usize) -> Vec<NormalForm> {
    let mut states: HashSet<(Vec<Letter>, Vec<Letter>)> =
        HashSet::from([(Vec::new(), w.letters().to_vec())]);
    for _ in 0..m {
        let mut next = HashSet::new();
        for (head, rest) in &states {
            let mut seen_letters = BTreeSet::new();
            for i in super::initial_positions(g, rest) {
                if !seen_letters.insert(rest[i]) {
                    continue;
                }
                let mut h = head.clone();
                h.push(rest[i]);
                let mut r = rest.clone();
                r.remove(i);
                let r = normalize(g, &r).expect("validated letters").letters().to_vec();
                next.insert((h, r));
            }
        }
        states = next;
    }
    states
        .into_iter()
        .map(|(h, _)| normalize(g, &h).expect("validated letters"))
        .collect()
}

/// The primitive root: `w = root^e` with `e` maximal (so the root is not a
/// proper power). Tries every divisor of the length, testing every left
/// divisor of the corresponding length.
pub fn extract_root(g: &Graph, w: &NormalForm) -> (NormalForm, i64) {
    let len = w.len();
    if len == 0 {
        return (w.clone(), 1);
    }
    for e in (2..=len).rev() {
        if len % e != 0 {
            continue;
        }
        let m = len / e;
        for cand in left_divisors_of_length(g, w, m) {
            if &power(g, &cand, e as i64) == w {
                return (cand, e as i64);
            }
        }
    }
    (w.clone(), 1)
}

/// Pure factor decomposition of a nontrivial element.
pub fn pure_factor_decomposition(g: &Graph, w: &NormalForm) -> Result<PureFactorDecomposition> {
    w.check_graph(g)?;
    if w.is_empty() {
        return Err(Error::IdentityWord);
    }
    let (conjugator, core) = cyclically_reduce(g, w);
    // blocks = connected components of the complement restricted to the support
    let support: Vec<usize> = core.support().into_iter().collect();
    let mut block_of = vec![usize::MAX; g.n()];
    let mut nblocks = 0;
    for &s in &support {
        if block_of[s] != usize::MAX {
            continue;
        }
        let mut stack = vec![s];
        block_of[s] = nblocks;
        while let Some(v) = stack.pop() {
            for &u in &support {
                if block_of[u] == usize::MAX && !g.adjacent(v, u) {
                    block_of[u] = nblocks;
                    stack.push(u);
                }
            }
        }
        nblocks += 1;
    }
    let mut factors = Vec::with_capacity(nblocks);
    for b in 0..nblocks {
        let letters: Vec<Letter> = core
            .letters()
            .iter()
            .copied()
            .filter(|l| block_of[l.vertex] == b)
            .collect();
        let block_word = normalize(g, &letters)?;
        let (root, e) = extract_root(g, &block_word);
        factors.push((root, e));
    }
    factors.sort_by(|a, b| a.0.letters().cmp(b.0.letters()));
    Ok(PureFactorDecomposition { conjugator, factors })
}

/// Generators of the centralizer of `w`, per the centralizer theorem: the
/// conjugated pure factors together with the conjugated vertices adjacent to
/// the whole factor support.
pub fn centralizer_generators(g: &Graph, w: &NormalForm) -> Result<Vec<NormalForm>> {
    let d = pure_factor_decomposition(g, w)?;
    let mut support = BTreeSet::new();
    for (f, _) in &d.factors {
        support.extend(f.support());
    }
    let mut gens = Vec::new();
    for (f, _) in &d.factors {
        gens.push(conjugate(g, f, &d.conjugator));
    }
    for v in 0..g.n() {
        if support.iter().all(|&s| g.adjacent(v, s)) {
            let letter = normalize(g, &[Letter::new(v, false)])?;
            gens.push(conjugate(g, &letter, &d.conjugator));
        }
    }
    Ok(gens)
}

/// One vertex per listed word (duplicates kept distinct), edges between
/// commuting pairs.
pub fn commutation_graph(g: &Graph, words: &[NormalForm]) -> Result<Graph> {
    if words.is_empty() {
        return Err(Error::EmptyInput("commutation graph of no words".into()));
    }
    let labels: Vec<String> = (0..words.len()).map(|i| format!("w{i}")).collect();
    let mut z = Graph::new(labels)?;
    for i in 0..words.len() {
        for j in i + 1..words.len() {
            if commutes(g, &words[i], &words[j])? {
                z.set_edge(i, j);
            }
        }
    }
    Ok(z)
}
