//! Exact word algebra in A(Γ).
//!
//! Elements are kept in a canonical normal form: the lexicographically least
//! word among all words of minimal length representing the element, under
//! the total order (vertex index, then sign with positive first). Minimal
//! length is reached by cancelling letter pairs `x^e .. x^-e` whose
//! separator commutes with `x`; the lexicographic representative is then
//! extracted greedily, one initial letter at a time. Equality of group
//! elements is syntactic equality of normal forms.

mod factor;

pub use factor::{
    centralizer_generators, commutation_graph, extract_root, pure_factor_decomposition,
    PureFactorDecomposition,
};

use crate::error::{Error, Result};
use crate::graph::Graph;
use fixedbitset::FixedBitSet;
use std::collections::BTreeSet;
use std::fmt;

/// A generator or its inverse.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub vertex: usize,
    pub inverse: bool,
}

impl Letter {
    pub fn new(vertex: usize, inverse: bool) -> Self {
        Letter { vertex, inverse }
    }

    pub fn inverted(self) -> Self {
        Letter {
            vertex: self.vertex,
            inverse: !self.inverse,
        }
    }
}

impl fmt::Debug for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.vertex, if self.inverse { "-" } else { "+" })
    }
}

/// Canonical representative of an element of A(Γ).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NormalForm {
    letters: Vec<Letter>,
    graph_fp: u64,
}

impl fmt::Debug for NormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NormalForm({:?})", self.letters)
    }
}

impl NormalForm {
    pub fn identity(g: &Graph) -> Self {
        NormalForm {
            letters: Vec::new(),
            graph_fp: g.fingerprint(),
        }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Vertices occurring in the word, sign-insensitive.
    pub fn support(&self) -> BTreeSet<usize> {
        self.letters.iter().map(|l| l.vertex).collect()
    }

    pub fn support_in(&self, s: &FixedBitSet) -> bool {
        self.letters.iter().all(|l| s.contains(l.vertex))
    }

    pub fn graph_fp(&self) -> u64 {
        self.graph_fp
    }

    pub(crate) fn check_graph(&self, g: &Graph) -> Result<()> {
        if self.graph_fp != g.fingerprint() {
            return Err(Error::GraphMismatch);
        }
        Ok(())
    }

    /// `e` / space-separated letters, `a^-1` for inverses.
    pub fn render(&self, g: &Graph) -> String {
        if self.letters.is_empty() {
            return "e".into();
        }
        self.letters
            .iter()
            .map(|l| {
                if l.inverse {
                    format!("{}^-1", g.label(l.vertex))
                } else {
                    g.label(l.vertex).to_string()
                }
            })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

/// Parses the CLI word syntax: whitespace-separated letters, each
/// `v`, `v'` (inverse), or `v^k` for an integer exponent.
pub fn parse_word(g: &Graph, text: &str) -> Result<Vec<Letter>> {
    let mut out = Vec::new();
    for tok in text.split_whitespace() {
        if tok == "e" || tok == "1" {
            continue;
        }
        let (name, exp) = if let Some((base, pow)) = tok.split_once('^') {
            let e: i64 = pow
                .parse()
                .map_err(|_| Error::Parse(format!("bad exponent in `{tok}`")))?;
            (base, e)
        } else if let Some(base) = tok.strip_suffix('\'') {
            (base, -1)
        } else {
            (tok, 1)
        };
        let v = g.vertex(name)?;
        for _ in 0..exp.unsigned_abs() {
            out.push(Letter::new(v, exp < 0));
        }
    }
    Ok(out)
}

/// One free/commutation cancellation pass. True when a pair was removed.
fn cancel_once(g: &Graph, w: &mut Vec<Letter>) -> bool {
    for i in 0..w.len() {
        let x = w[i];
        for j in i + 1..w.len() {
            let y = w[j];
            if y.vertex == x.vertex {
                if y.inverse != x.inverse {
                    w.remove(j);
                    w.remove(i);
                    return true;
                }
                break; // same-vertex letter blocks further movement
            }
            if !g.adjacent(x.vertex, y.vertex) {
                break;
            }
        }
    }
    false
}

/// Positions of letters movable to the front by commutations.
pub(crate) fn initial_positions(g: &Graph, w: &[Letter]) -> Vec<usize> {
    let mut out = Vec::new();
    'outer: for i in 0..w.len() {
        for j in 0..i {
            if w[j].vertex == w[i].vertex || !g.adjacent(w[j].vertex, w[i].vertex) {
                continue 'outer;
            }
        }
        out.push(i);
    }
    out
}

/// The canonical normal form of an arbitrary word.
pub fn normalize(g: &Graph, word: &[Letter]) -> Result<NormalForm> {
    for l in word {
        if l.vertex >= g.n() {
            return Err(Error::UnknownVertex(format!("#{}", l.vertex)));
        }
    }
    let mut w = word.to_vec();
    while cancel_once(g, &mut w) {}
    // greedy lexicographic extraction
    let mut out = Vec::with_capacity(w.len());
    while !w.is_empty() {
        let pos = *initial_positions(g, &w)
            .iter()
            .min_by_key(|&&i| w[i])
            .expect("nonempty word has an initial letter");
        out.push(w.remove(pos));
    }
    Ok(NormalForm {
        letters: out,
        graph_fp: g.fingerprint(),
    })
}

pub fn normalize_str(g: &Graph, text: &str) -> Result<NormalForm> {
    let w = parse_word(g, text)?;
    normalize(g, &w)
}

pub fn mul(g: &Graph, a: &NormalForm, b: &NormalForm) -> NormalForm {
    let mut w = a.letters.clone();
    w.extend_from_slice(&b.letters);
    normalize(g, &w).expect("letters already validated")
}

pub fn inverse(g: &Graph, a: &NormalForm) -> NormalForm {
    let w: Vec<Letter> = a.letters.iter().rev().map(|l| l.inverted()).collect();
    normalize(g, &w).expect("letters already validated")
}

pub fn power(g: &Graph, a: &NormalForm, e: i64) -> NormalForm {
    let base = if e < 0 { inverse(g, a) } else { a.clone() };
    let mut acc = NormalForm::identity(g);
    for _ in 0..e.unsigned_abs() {
        acc = mul(g, &acc, &base);
    }
    acc
}

/// Conjugate `a^c = c^-1 a c`.
pub fn conjugate(g: &Graph, a: &NormalForm, c: &NormalForm) -> NormalForm {
    let ci = inverse(g, c);
    mul(g, &mul(g, &ci, a), c)
}

pub fn letter_word(g: &Graph, vertex: usize, inverse: bool) -> NormalForm {
    normalize(g, &[Letter::new(vertex, inverse)]).expect("single letter")
}

/// Splits `w = core^conjugator` with the core cyclically reduced and of
/// minimal length in the conjugacy class.
pub fn cyclically_reduce(g: &Graph, w: &NormalForm) -> (NormalForm, NormalForm) {
    let mut core = w.letters.clone();
    let mut conj: Vec<Letter> = Vec::new();
    loop {
        let initials = initial_positions(g, &core);
        let finals: Vec<usize> = {
            let rev: Vec<Letter> = core.iter().rev().copied().collect();
            initial_positions(g, &rev)
                .into_iter()
                .map(|i| core.len() - 1 - i)
                .collect()
        };
        let mut found = None;
        'search: for &i in &initials {
            for &j in &finals {
                if i != j && core[j] == core[i].inverted() {
                    found = Some((i, j));
                    break 'search;
                }
            }
        }
        let Some((i, j)) = found else { break };
        // w = x^e · u · x^-e  =>  w = u^(x^-e)
        let x = core[i];
        let (lo, hi) = (i.min(j), i.max(j));
        core.remove(hi);
        core.remove(lo);
        let mut new_conj = vec![x.inverted()];
        new_conj.extend_from_slice(&conj);
        conj = new_conj;
    }
    let conjugator = normalize(g, &conj).expect("validated letters");
    let core = normalize(g, &core).expect("validated letters");
    (conjugator, core)
}

/// Maximal left divisor of `w` with support inside `s`; the rest has no
/// initial letter in `s`. Lengths add: |w| = |head| + |rest|.
pub fn max_head(g: &Graph, w: &NormalForm, s: &FixedBitSet) -> (NormalForm, NormalForm) {
    let mut remaining = w.letters.clone();
    let mut head = Vec::new();
    loop {
        let pick = initial_positions(g, &remaining)
            .into_iter()
            .filter(|&i| s.contains(remaining[i].vertex))
            .min_by_key(|&i| remaining[i]);
        match pick {
            Some(i) => head.push(remaining.remove(i)),
            None => break,
        }
    }
    (
        normalize(g, &head).expect("validated letters"),
        normalize(g, &remaining).expect("validated letters"),
    )
}

pub fn vertex_set(g: &Graph, vs: &[usize]) -> FixedBitSet {
    let mut s = FixedBitSet::with_capacity(g.n());
    for &v in vs {
        s.insert(v);
    }
    s
}

/// Membership of `z` in the double coset `⟨a⟩·⟨b⟩` of two parabolic
/// subgroups: strip the maximal `a`-head and test that the rest lies in
/// `⟨b⟩`.
///
/// Any witnessing product can be made geodesic by cancelling shared letters,
/// after which the `a`-part is a left divisor with support in `a`; the
/// maximal head absorbs it, and what remains is a suffix of the `b`-part,
/// whose support stays in `b`.
pub fn double_coset_member(g: &Graph, z: &NormalForm, a: &FixedBitSet, b: &FixedBitSet) -> bool {
    let (_, rest) = max_head(g, z, a);
    rest.support_in(b)
}

/// Membership in the parabolic subgroup generated by `s`.
pub fn parabolic_member(z: &NormalForm, s: &FixedBitSet) -> bool {
    z.support_in(s)
}

/// `[x, y] = 1` in A(Γ).
pub fn commutes(g: &Graph, x: &NormalForm, y: &NormalForm) -> Result<bool> {
    x.check_graph(g)?;
    y.check_graph(g)?;
    if x.graph_fp != y.graph_fp {
        return Err(Error::GraphMismatch);
    }
    let lhs = mul(g, x, y);
    let rhs = mul(g, y, x);
    Ok(lhs == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{standard_graph, StandardKind};

    fn p4() -> Graph {
        // a - b - c - d
        Graph::from_edges(vec!["a", "b", "c", "d"], &[("a", "b"), ("b", "c"), ("c", "d")])
            .unwrap()
    }
    fn c5() -> Graph {
        standard_graph(StandardKind::Cycle, &[5]).unwrap()
    }

    fn nf(g: &Graph, s: &str) -> NormalForm {
        normalize_str(g, s).unwrap()
    }

    #[test]
    fn normalize_basics() {
        let g = p4();
        assert_eq!(nf(&g, "b a b^-1"), nf(&g, "a"));
        let c4 = standard_graph(StandardKind::Cycle, &[4]).unwrap();
        assert!(nf(&c4, "v0 v1 v0^-1 v1^-1").is_empty());
        let w = nf(&g, "a c a^-1");
        assert_eq!(w.len(), 3);
        assert_eq!(w.render(&g), "a c a^-1");
    }

    #[test]
    fn normalize_is_canonical_on_commuting_letters() {
        let g = p4();
        assert_eq!(nf(&g, "b a"), nf(&g, "a b"));
        assert_eq!(nf(&g, "b a").render(&g), "a b");
        assert_eq!(nf(&g, "b a c"), nf(&g, "a b c"));
        // non-commuting letters stay put
        assert_eq!(nf(&g, "d b").render(&g), "d b");
    }

    #[test]
    fn unknown_vertex_rejected() {
        let g = p4();
        assert!(normalize_str(&g, "z").is_err());
    }

    #[test]
    fn group_axioms() {
        let g = c5();
        let w = nf(&g, "v0 v2 v1^-1 v3");
        assert!(mul(&g, &w, &inverse(&g, &w)).is_empty());
        let u = nf(&g, "v1 v4");
        let v = nf(&g, "v2^-1 v0");
        let z = nf(&g, "v3 v3");
        let left = mul(&g, &mul(&g, &u, &v), &z);
        let right = mul(&g, &u, &mul(&g, &v, &z));
        assert_eq!(left, right);
    }

    #[test]
    fn cyclic_reduction() {
        let g = p4();
        // d c d^-1 = c since [c,d]=1: already collapses in normalize
        let w = nf(&g, "d c d^-1");
        assert_eq!(w, nf(&g, "c"));
        let (conj, core) = cyclically_reduce(&g, &w);
        assert!(conj.is_empty());
        assert_eq!(core, nf(&g, "c"));

        let (conj, core) = cyclically_reduce(&g, &nf(&g, "a d a^-1"));
        assert_eq!(core, nf(&g, "d"));
        assert_eq!(conj, nf(&g, "a^-1"));
        // g = core^conj
        assert_eq!(conjugate(&g, &core, &conj), nf(&g, "a d a^-1"));

        let g5 = c5();
        let acac = normalize_str(&g5, "v0 v2 v0 v2").unwrap();
        let (conj, core) = cyclically_reduce(&g5, &acac);
        assert!(conj.is_empty());
        assert_eq!(core.len(), 4);
    }

    #[test]
    fn heads() {
        let g = p4();
        let s = vertex_set(&g, &[0, 1, 2]); // {a,b,c}
        let (head, rest) = max_head(&g, &nf(&g, "b a d"), &s);
        assert_eq!(head, nf(&g, "b a"));
        assert_eq!(rest, nf(&g, "d"));

        let (head, rest) = max_head(&g, &nf(&g, "d a"), &s);
        assert!(head.is_empty());
        assert_eq!(rest, nf(&g, "d a"));

        let w = nf(&g, "a b^-1 c");
        let (head, rest) = max_head(&g, &w, &s);
        assert_eq!(head, w);
        assert!(rest.is_empty());
    }

    #[test]
    fn double_cosets() {
        let g = p4();
        let st_c = vertex_set(&g, &[1, 2, 3]); // {b,c,d}
        let st_b = vertex_set(&g, &[0, 1, 2]); // {a,b,c}
        assert!(double_coset_member(&g, &nf(&g, "a a a"), &st_c, &st_b));
        assert!(!double_coset_member(&g, &nf(&g, "a a d^-1"), &st_c, &st_b));
        assert!(double_coset_member(&g, &NormalForm::identity(&g), &st_c, &st_b));
    }

    #[test]
    fn commuting() {
        let g = p4();
        assert!(commutes(&g, &nf(&g, "a"), &nf(&g, "b")).unwrap());
        assert!(!commutes(&g, &nf(&g, "a"), &nf(&g, "c")).unwrap());
        assert!(commutes(&g, &nf(&g, "a c"), &nf(&g, "b")).unwrap());
        let other = c5();
        let w = nf(&other, "v0");
        assert!(commutes(&g, &nf(&g, "a"), &w).is_err());
    }
}
