//! Words over vertex alphabets and their alternation semantics.
//!
//! A word `w` represents a graph when two letters alternate in `w` exactly
//! if the corresponding vertices are adjacent. This module carries the
//! alternation queries, the representation checker, the BFS construction of
//! a minimum word for an oriented arborescence, the two-sided composition
//! for double-arborescences (always of length `2n - k`, `k` the longest
//! chain), and a brute-force minimum-length oracle used to cross-validate
//! optimality on small graphs.

use crate::bitset::VertexSet;
use crate::error::Error;
use crate::graph::Graph;
use crate::orientation::{
    double_arborescence_orientation, Direction, DoubleArbOrientation, RootedForestPoset,
};
use serde_json::{json, Value};
use std::collections::{HashMap, VecDeque};
use std::fmt;

/// A finite sequence of vertex ids.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Word {
    letters: Vec<usize>,
}

impl Word {
    pub fn new(letters: Vec<usize>) -> Self {
        Word { letters }
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

    pub fn reversed(&self) -> Word {
        Word::new(self.letters.iter().rev().copied().collect())
    }

    /// The subsequence of exactly the occurrences of letters in `keep`.
    pub fn restrict(&self, keep: &VertexSet) -> Word {
        Word::new(self.letters.iter().copied().filter(|&l| keep.contains(l)).collect())
    }

    pub fn occurrences(&self, letter: usize) -> usize {
        self.letters.iter().filter(|&&l| l == letter).count()
    }

    /// Parses a space-separated sequence of vertex labels (names or decimal
    /// ids) against a graph.
    pub fn parse(text: &str, g: &Graph) -> Result<Word, Error> {
        text.split_whitespace()
            .map(|tok| {
                g.vertex_by_name(tok)
                    .ok_or_else(|| Error::WordUnknownLetter(tok.to_string()))
            })
            .collect::<Result<Vec<_>, _>>()
            .map(Word::new)
    }

    /// Space-separated labels under the graph's naming.
    pub fn display_with(&self, g: &Graph) -> String {
        self.letters.iter().map(|&l| g.name(l)).collect::<Vec<_>>().join(" ")
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

/// True iff the occurrences of `a` and `b` strictly alternate in `w`
/// (vacuously true with zero or one occurrence in total).
pub fn alternates(w: &Word, a: usize, b: usize) -> bool {
    debug_assert_ne!(a, b);
    let mut last = usize::MAX;
    for &l in w.letters() {
        if l == a || l == b {
            if l == last {
                return false;
            }
            last = l;
        }
    }
    true
}

/// A pair on which representation fails, and in which direction.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PairFailure {
    pub a: usize,
    pub b: usize,
    /// True: adjacent but not alternating. False: alternating but not
    /// adjacent.
    pub adjacent: bool,
}

impl PairFailure {
    pub fn reason(&self) -> &'static str {
        if self.adjacent {
            "adjacent but not alternating"
        } else {
            "alternating but not adjacent"
        }
    }
}

/// Outcome of checking a word against a graph.
#[derive(Clone, Debug)]
pub struct RepresentationCheck {
    pub ok: bool,
    /// First failing pair in ascending order, when `!ok`.
    pub failure: Option<PairFailure>,
}

/// Per-letter occurrence positions, with the usage checks every verifier
/// needs: all letters are vertices, all vertices occur.
fn letter_positions(w: &Word, g: &Graph) -> Result<Vec<Vec<usize>>, Error> {
    let mut pos: Vec<Vec<usize>> = vec![Vec::new(); g.n()];
    for (i, &l) in w.letters().iter().enumerate() {
        if l >= g.n() {
            return Err(Error::WordUnknownLetter(l.to_string()));
        }
        pos[l].push(i);
    }
    if let Some(v) = pos.iter().position(|p| p.is_empty()) {
        return Err(Error::WordMissingVertex(g.name(v)));
    }
    Ok(pos)
}

/// Alternation of two letters given their sorted position lists.
fn alternate_positions(pa: &[usize], pb: &[usize]) -> bool {
    let (mut i, mut j) = (0, 0);
    let mut last_was_a = None;
    while i < pa.len() || j < pb.len() {
        let take_a = j == pb.len() || (i < pa.len() && pa[i] < pb[j]);
        if Some(take_a) == last_was_a {
            return false;
        }
        last_was_a = Some(take_a);
        if take_a {
            i += 1;
        } else {
            j += 1;
        }
    }
    true
}

/// Checks `adjacency ⟺ alternation` over all vertex pairs, reporting the
/// first failure. Errors when the word does not cover the graph.
pub fn represents(w: &Word, g: &Graph) -> Result<RepresentationCheck, Error> {
    let pos = letter_positions(w, g)?;
    for a in 0..g.n() {
        for b in a + 1..g.n() {
            if alternate_positions(&pos[a], &pos[b]) != g.has_edge(a, b) {
                return Ok(RepresentationCheck {
                    ok: false,
                    failure: Some(PairFailure {
                        a,
                        b,
                        adjacent: g.has_edge(a, b),
                    }),
                });
            }
        }
    }
    Ok(RepresentationCheck { ok: true, failure: None })
}

// ---- minimum-word construction ---------------------------------------------

/// Tracks the one or two positions each letter currently holds while the
/// word is being spliced, so occurrences are never re-scanned.
struct OccurrenceIndex {
    slots: HashMap<usize, (usize, Option<usize>)>,
}

impl OccurrenceIndex {
    fn new() -> Self {
        OccurrenceIndex { slots: HashMap::new() }
    }

    fn record_first(&mut self, letter: usize, pos: usize) {
        let prev = self.slots.insert(letter, (pos, None));
        debug_assert!(prev.is_none(), "letter {letter} placed twice");
    }

    fn record_second(&mut self, letter: usize, pos: usize) {
        let slot = self.slots.get_mut(&letter).expect("first occurrence recorded");
        debug_assert!(slot.1.is_none());
        slot.1 = Some(pos);
    }

    fn get(&self, letter: usize) -> (usize, Option<usize>) {
        self.slots[&letter]
    }

    /// Accounts for `inserted` letters spliced in just before `at`.
    fn shift(&mut self, at: usize, inserted: usize) {
        for (first, second) in self.slots.values_mut() {
            if *first >= at {
                *first += inserted;
            }
            if let Some(s) = second {
                if *s >= at {
                    *s += inserted;
                }
            }
        }
    }
}

fn validate_chain(p: &RootedForestPoset, chain: &[usize]) -> Result<(), Error> {
    let invalid = |msg: String| Error::InvalidChain(msg);
    if chain.first() != Some(&p.root()) {
        return Err(invalid(format!("chain must start at the root {}", p.root())));
    }
    for pair in chain.windows(2) {
        if p.parent_of(pair[1]) != Some(pair[0]) {
            return Err(invalid(format!("{} is not the parent of {}", pair[0], pair[1])));
        }
    }
    let max = p.longest_chain().len();
    if chain.len() != max {
        return Err(invalid(format!(
            "chain has {} vertices but the deepest chain has {max}",
            chain.len()
        )));
    }
    Ok(())
}

/// Builds a minimum word-representant for an oriented arborescence by a
/// breadth-first sweep of its tree.
///
/// Starting from `w = root`, each dequeued vertex `a` with children
/// `a1..at` (`a1` the chain child when `a` lies on `chain`) either wraps the
/// word as `a1..at ⋅ w ⋅ at..a2` (chain vertices) or splices `a1..at⋅a` over
/// its first occurrence and `at..a1⋅a` over its second. Chain letters end up
/// occurring once and all others twice, so the output length is
/// `2n - |chain|`.
pub fn algorithm1_minword(p: &RootedForestPoset, chain: &[usize]) -> Result<Word, Error> {
    if p.direction() != Direction::RootGreatest {
        return Err(Error::BadConfig(
            "word construction needs a root-greatest poset; flip the order first".into(),
        ));
    }
    validate_chain(p, chain)?;

    let children = p.children_map();
    let chain_next: HashMap<usize, usize> =
        chain.windows(2).map(|pair| (pair[0], pair[1])).collect();

    let mut w: Vec<usize> = vec![p.root()];
    let mut occ = OccurrenceIndex::new();
    occ.record_first(p.root(), 0);

    let mut queue: VecDeque<usize> = VecDeque::from([p.root()]);
    while let Some(a) = queue.pop_front() {
        let Some(base_kids) = children.get(&a) else { continue };
        // Children sorted by id, chain child promoted to the front.
        let mut kids = base_kids.clone();
        if let Some(&next) = chain_next.get(&a) {
            let at = kids.iter().position(|&k| k == next).expect("chain child present");
            kids.remove(at);
            kids.insert(0, next);
        }
        queue.extend(kids.iter().copied());
        let t = kids.len();

        if chain_next.contains_key(&a) {
            // Wrap: kids in front (all first occurrences), kids except the
            // chain child mirrored at the back (their second occurrences).
            occ.shift(0, t);
            for (i, &k) in kids.iter().enumerate() {
                w.insert(i, k);
                occ.record_first(k, i);
            }
            let base = w.len();
            for (i, &k) in kids.iter().skip(1).rev().enumerate() {
                w.push(k);
                occ.record_second(k, base + i);
            }
        } else {
            // Splice over both occurrences of a: first becomes a1..at⋅a,
            // second becomes at..a1⋅a.
            let (p1, p2) = occ.get(a);
            let p2 = p2.expect("non-chain vertices occur twice");
            occ.shift(p1, t);
            for (i, &k) in kids.iter().enumerate() {
                w.insert(p1 + i, k);
                occ.record_first(k, p1 + i);
            }
            let p2 = p2 + t;
            occ.shift(p2, t);
            for (i, &k) in kids.iter().rev().enumerate() {
                w.insert(p2 + i, k);
                occ.record_second(k, p2 + i);
            }
        }
    }
    Ok(Word::new(w))
}

/// Splits a word around the single occurrence of `pivot`.
fn split_around(w: &Word, pivot: usize) -> (Vec<usize>, Vec<usize>) {
    let at = w
        .letters()
        .iter()
        .position(|&l| l == pivot)
        .expect("pivot occurs in the word");
    debug_assert_eq!(w.occurrences(pivot), 1);
    (w.letters()[..at].to_vec(), w.letters()[at + 1..].to_vec())
}

/// Builds a minimum word-representant for a double-arborescence by running
/// the arborescence construction on both sides and interleaving the halves.
///
/// With `u = u1⋅r⋅u2` from the lower tree and `v = v1⋅r⋅v2` from the upper
/// tree read root-greatest, the result is `u2ᴿ⋅v1⋅r⋅u1ᴿ⋅v2`. Every vertex
/// off the combined chain occurs twice and chain vertices once, giving
/// length `2n - k`. Note the one-sided case (`above` trivial) yields the
/// reversal of the plain arborescence word, which represents the same graph.
pub fn double_arb_minword(o: &DoubleArbOrientation) -> Word {
    let chain_a = o.below().longest_chain();
    let u = algorithm1_minword(o.below(), &chain_a).expect("chain from longest_chain");
    let upper = o.above().flipped();
    let chain_b = upper.longest_chain();
    let v = algorithm1_minword(&upper, &chain_b).expect("chain from longest_chain");

    let (u1, u2) = split_around(&u, o.root());
    let (v1, v2) = split_around(&v, o.root());
    let mut letters = Vec::with_capacity(u.len() + v.len() - 1);
    letters.extend(u2.iter().rev());
    letters.extend(v1);
    letters.push(o.root());
    letters.extend(u1.iter().rev());
    letters.extend(v2);
    Word::new(letters)
}

// ---- brute-force oracle ------------------------------------------------------

/// Exhaustive search for the minimum length of a representing word.
///
/// Words are enumerated in first-appearance canonical form (the first new
/// letter is always the smallest unused id), and each candidate's
/// alternation graph is matched against `g` up to isomorphism; the witness
/// is relabeled back, so `represents(witness, g)` always holds. The search
/// refuses `n > 5` with `cap > 2n` unless `force` is set.
pub fn brute_force_min_length(
    g: &Graph,
    cap: usize,
    force: bool,
) -> Result<Option<(usize, Word)>, Error> {
    let n = g.n();
    if cap < n {
        return Err(Error::BadConfig(format!(
            "cap {cap} cannot cover all {n} vertices"
        )));
    }
    if !force && n > 5 && cap > 2 * n {
        return Err(Error::OracleGuard { n, cap });
    }
    for len in n..=cap {
        let mut buf = vec![0usize; len];
        if let Some(word) = search_words(g, &mut buf, 0, 0, len) {
            return Ok(Some((len, word)));
        }
    }
    Ok(None)
}

/// Depth-first enumeration of canonical words of length `len`; returns a
/// relabeled witness for the first alternation graph isomorphic to `g`.
fn search_words(g: &Graph, buf: &mut Vec<usize>, at: usize, used: usize, len: usize) -> Option<Word> {
    let n = g.n();
    if n - used > len - at {
        return None; // not enough room for the missing letters
    }
    if at == len {
        return check_candidate(g, buf);
    }
    let choices = if used < n { used + 1 } else { used };
    for letter in 0..choices {
        buf[at] = letter;
        let next_used = used.max(letter + 1);
        if let Some(w) = search_words(g, buf, at + 1, next_used, len) {
            return Some(w);
        }
    }
    None
}

/// Alternation graph of `buf` compared with `g` up to isomorphism.
fn check_candidate(g: &Graph, buf: &[usize]) -> Option<Word> {
    let n = g.n();
    let mut pos: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (i, &l) in buf.iter().enumerate() {
        pos[l].push(i);
    }
    let mut h = Graph::empty(n);
    for a in 0..n {
        for b in a + 1..n {
            if alternate_positions(&pos[a], &pos[b]) {
                h.add_edge(a, b);
            }
        }
    }
    if h.edge_count() != g.edge_count() {
        return None;
    }
    let iso = find_isomorphism(&h, g)?;
    Some(Word::new(buf.iter().map(|&l| iso[l]).collect()))
}

/// Backtracking isomorphism search; `map[h-vertex] = g-vertex`.
fn find_isomorphism(h: &Graph, g: &Graph) -> Option<Vec<usize>> {
    debug_assert_eq!(h.n(), g.n());
    let mut hd: Vec<usize> = (0..h.n()).map(|v| h.degree(v)).collect();
    let mut gd: Vec<usize> = (0..g.n()).map(|v| g.degree(v)).collect();
    hd.sort_unstable();
    gd.sort_unstable();
    if hd != gd {
        return None;
    }
    fn extend(h: &Graph, g: &Graph, map: &mut Vec<usize>, used: &mut VertexSet, i: usize) -> bool {
        if i == h.n() {
            return true;
        }
        'cand: for c in 0..g.n() {
            if used.contains(c) || g.degree(c) != h.degree(i) {
                continue;
            }
            for j in 0..i {
                if h.has_edge(j, i) != g.has_edge(map[j], c) {
                    continue 'cand;
                }
            }
            map[i] = c;
            used.insert(c);
            if extend(h, g, map, used, i + 1) {
                return true;
            }
            used.remove(c);
        }
        false
    }
    let mut map = vec![usize::MAX; h.n()];
    let mut used = VertexSet::empty(g.n());
    extend(h, g, &mut map, &mut used, 0).then_some(map)
}

// ---- verification report -----------------------------------------------------

/// Full verification of a word against a graph as a JSON report:
/// `{ok, length, expected_length, chain, failures: [{a, b, reason}]}`.
///
/// `expected_length` and `chain` come from the double-arborescence
/// orientation when the graph has one (`2n - k` and the longest chain), and
/// are `null` otherwise.
pub fn verification_report(w: &Word, g: &Graph) -> Result<Value, Error> {
    let pos = letter_positions(w, g)?;
    let mut failures = Vec::new();
    for a in 0..g.n() {
        for b in a + 1..g.n() {
            if alternate_positions(&pos[a], &pos[b]) != g.has_edge(a, b) {
                let f = PairFailure { a, b, adjacent: g.has_edge(a, b) };
                failures.push(json!({
                    "a": g.name(a),
                    "b": g.name(b),
                    "reason": f.reason(),
                }));
            }
        }
    }
    let double = if g.is_connected() {
        double_arborescence_orientation(g)?
    } else {
        None
    };
    let (expected, chain) = match double {
        Some(o) => {
            let k = o.longest_chain().len();
            let chain: Vec<Value> = o.longest_chain().iter().map(|&v| json!(g.name(v))).collect();
            (json!(2 * g.n() - k), json!(chain))
        }
        None => (Value::Null, Value::Null),
    };
    Ok(json!({
        "ok": failures.is_empty(),
        "length": w.len(),
        "expected_length": expected,
        "chain": chain,
        "failures": failures,
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::orientation::arborescence_orientation;

    /// The running example word: letters a=0, b=1, c=2 in "abbcacbba".
    fn example_word() -> Word {
        Word::new(vec![0, 1, 1, 2, 0, 2, 1, 1, 0])
    }

    #[test]
    fn restriction_keeps_exact_occurrences() {
        let w = example_word();
        let bc = w.restrict(&VertexSet::from_iter(3, [1, 2]));
        assert_eq!(bc.letters(), &[1, 1, 2, 2, 1, 1]); // "bbccbb"
        let ac = w.restrict(&VertexSet::from_iter(3, [0, 2]));
        assert_eq!(ac.letters(), &[0, 2, 0, 2, 0]); // "acaca"
        assert!(w.restrict(&VertexSet::empty(3)).is_empty());
    }

    #[test]
    fn alternation_queries() {
        let w = example_word();
        assert!(alternates(&w, 0, 2));
        assert!(!alternates(&w, 1, 2));
        assert!(alternates(&Word::new(vec![0, 1]), 0, 1));
        assert!(alternates(&Word::new(vec![0]), 0, 1)); // single occurrence
    }

    #[test]
    fn represents_star_word() {
        // Star with center r=0 over a=1, b=2, word "abrb".
        let g = Graph::star(2);
        let w = Word::new(vec![1, 2, 0, 2]);
        assert!(represents(&w, &g).unwrap().ok);
    }

    #[test]
    fn represents_reports_first_failure() {
        let edge = Graph::path(2);
        assert!(represents(&Word::new(vec![0, 1, 0, 1]), &edge).unwrap().ok);
        let check = represents(&Word::new(vec![0, 1, 1, 0]), &edge).unwrap();
        assert!(!check.ok);
        assert_eq!(
            check.failure,
            Some(PairFailure { a: 0, b: 1, adjacent: true })
        );
    }

    #[test]
    fn represents_requires_full_coverage() {
        let g = Graph::path(3);
        match represents(&Word::new(vec![0, 1]), &g) {
            Err(Error::WordMissingVertex(v)) => assert_eq!(v, "2"),
            other => panic!("expected missing-vertex error, got {other:?}"),
        }
        assert!(matches!(
            represents(&Word::new(vec![0, 1, 2, 9]), &g),
            Err(Error::WordUnknownLetter(_))
        ));
    }

    fn chain_poset() -> RootedForestPoset {
        RootedForestPoset::from_parents(
            0,
            [(1, 0), (2, 1)].into_iter().collect(),
            Direction::RootGreatest,
        )
        .unwrap()
    }

    #[test]
    fn word_for_a_three_chain() {
        let w = algorithm1_minword(&chain_poset(), &[0, 1, 2]).unwrap();
        assert_eq!(w.letters(), &[2, 1, 0]);
        assert!(represents(&w, &Graph::complete(3)).unwrap().ok);
    }

    #[test]
    fn word_for_a_star() {
        let g = Graph::star(2);
        let p = arborescence_orientation(&g).unwrap().unwrap();
        let w = algorithm1_minword(&p, &p.longest_chain()).unwrap();
        assert_eq!(w.letters(), &[1, 2, 0, 2]); // "abrb"
        assert!(represents(&w, &g).unwrap().ok);
    }

    #[test]
    fn word_for_a_single_vertex() {
        let p = RootedForestPoset::trivial(0, Direction::RootGreatest);
        let w = algorithm1_minword(&p, &[0]).unwrap();
        assert_eq!(w.letters(), &[0]);
    }

    #[test]
    fn chains_are_validated() {
        let p = chain_poset();
        assert!(matches!(
            algorithm1_minword(&p, &[1, 2]),
            Err(Error::InvalidChain(_))
        ));
        assert!(matches!(
            algorithm1_minword(&p, &[0, 1]),
            Err(Error::InvalidChain(_))
        ));
        assert!(matches!(
            algorithm1_minword(&p, &[0, 2]),
            Err(Error::InvalidChain(_))
        ));
        assert!(matches!(
            algorithm1_minword(&p.flipped(), &[0, 1, 2]),
            Err(Error::BadConfig(_))
        ));
    }

    /// Wheel with hub 0, lower rim pair {1,2}, upper rim pair {3,4}.
    fn small_wheel() -> (Graph, DoubleArbOrientation) {
        let g = Graph::from_edges(
            5,
            &[(0, 1), (0, 2), (0, 3), (0, 4), (1, 3), (1, 4), (2, 3), (2, 4)],
        );
        let below = RootedForestPoset::from_parents(
            0,
            [(1, 0), (2, 0)].into_iter().collect(),
            Direction::RootGreatest,
        )
        .unwrap();
        let above = RootedForestPoset::from_parents(
            0,
            [(3, 0), (4, 0)].into_iter().collect(),
            Direction::RootLeast,
        )
        .unwrap();
        (g, DoubleArbOrientation::new(below, above).unwrap())
    }

    #[test]
    fn composed_word_for_the_wheel() {
        let (g, o) = small_wheel();
        let w = double_arb_minword(&o);
        assert_eq!(w.letters(), &[2, 3, 4, 0, 2, 1, 4]);
        assert_eq!(w.len(), 2 * 5 - 3);
        assert!(represents(&w, &g).unwrap().ok);
    }

    #[test]
    fn one_sided_composition_reverses_the_plain_word() {
        let g = Graph::star(3);
        let o = double_arborescence_orientation(&g).unwrap().unwrap();
        let w = double_arb_minword(&o);
        let p = arborescence_orientation(&g).unwrap().unwrap();
        let u = algorithm1_minword(&p, &p.longest_chain()).unwrap();
        assert_eq!(w, u.reversed());
        assert!(represents(&w, &g).unwrap().ok);
    }

    #[test]
    fn complete_graph_composes_to_a_permutation() {
        let g = Graph::complete(4);
        let o = double_arborescence_orientation(&g).unwrap().unwrap();
        let w = double_arb_minword(&o);
        assert_eq!(w.len(), 4);
        assert!(represents(&w, &g).unwrap().ok);
    }

    #[test]
    fn reversal_preserves_representation() {
        let (g, o) = small_wheel();
        let w = double_arb_minword(&o);
        assert!(represents(&w.reversed(), &g).unwrap().ok);
    }

    #[test]
    fn oracle_minimums() {
        let (len, w) = brute_force_min_length(&Graph::complete(2), 4, false).unwrap().unwrap();
        assert_eq!(len, 2);
        assert!(represents(&w, &Graph::complete(2)).unwrap().ok);

        let (len, w) = brute_force_min_length(&Graph::path(3), 6, false).unwrap().unwrap();
        assert_eq!(len, 4);
        assert!(represents(&w, &Graph::path(3)).unwrap().ok);

        let (len, w) = brute_force_min_length(&Graph::path(4), 8, false).unwrap().unwrap();
        assert_eq!(len, 6);
        assert!(represents(&w, &Graph::path(4)).unwrap().ok);
    }

    #[test]
    fn oracle_guard_and_overrides() {
        let g = Graph::path(6);
        assert!(matches!(
            brute_force_min_length(&g, 13, false),
            Err(Error::OracleGuard { n: 6, cap: 13 })
        ));
        // Small caps and the force flag both open the gate.
        assert!(brute_force_min_length(&g, 6, false).unwrap().is_none());
        assert!(matches!(
            brute_force_min_length(&Graph::path(3), 2, false),
            Err(Error::BadConfig(_))
        ));
        let (len, _) = brute_force_min_length(&g, 13, true).unwrap().unwrap();
        assert_eq!(len, 2 * 6 - 2);
    }

    #[test]
    fn verification_report_shape() {
        let (g, o) = small_wheel();
        let w = double_arb_minword(&o);
        let report = verification_report(&w, &g).unwrap();
        assert_eq!(report["ok"], true);
        assert_eq!(report["length"], 7);
        assert_eq!(report["expected_length"], 7);
        assert_eq!(report["chain"].as_array().unwrap().len(), 3);
        assert!(report["failures"].as_array().unwrap().is_empty());

        let bad = Word::new(vec![0, 1, 2, 3, 4, 0, 1, 2, 3, 4]);
        let report = verification_report(&bad, &g).unwrap();
        assert_eq!(report["ok"], false);
        assert!(!report["failures"].as_array().unwrap().is_empty());
    }
}
