//! Word-level machinery for the monoid of an arbitrary oriented graph:
//! relation-set generation, bounded normalization, a budgeted equality
//! oracle, and exhaustive enumeration when the monoid is finite.
//!
//! All defining relations are length-non-increasing in their collapse
//! direction, so saturation explores relation applications in both
//! directions while pruning words longer than the query. Incompleteness is
//! surfaced through `EqualityVerdict::Unknown` or a saturation flag, never
//! silently.

use std::cmp::Reverse;
use std::collections::{BTreeMap, BTreeSet, BinaryHeap};

use thiserror::Error;

use crate::cycle::{affine_action, AffineMap};
use crate::graph::OrientedGraph;
use crate::word::Word;

/// Default saturation budget: visited words per query.
pub const DEFAULT_BUDGET: usize = 200_000;

/// Length overshoot allowed during equality search and enumeration
/// reduction. Some equalities need intermediates slightly longer than both
/// endpoints (already on four-vertex acyclic graphs), so a strict
/// never-grow cap would miss them.
const LENGTH_SLACK: usize = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RelationKind {
    /// `x_i x_i = x_i`.
    Idempotency,
    /// `x_i x_j = x_j x_i` for vertices with no arrow either way.
    Commutation,
    /// `x_i x_j x_i = x_i x_j` and `x_j x_i x_j = x_i x_j` for an arrow `i -> j`.
    Collapse,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relation {
    pub lhs: Word,
    pub rhs: Word,
    pub kind: RelationKind,
}

/// The defining relations of the monoid attached to a graph, derived
/// deterministically: one idempotency rule per generator, one commutation
/// per unconnected unordered pair, two collapse rules per arrow.
#[derive(Debug, Clone)]
pub struct RelationSet {
    rules: Vec<Relation>,
}

impl RelationSet {
    pub fn for_graph(g: &OrientedGraph) -> Self {
        let n = g.n();
        let mut rules = Vec::new();
        for i in 1..=n {
            rules.push(Relation {
                lhs: Word::new(vec![i, i]),
                rhs: Word::letter(i),
                kind: RelationKind::Idempotency,
            });
        }
        for u in 1..=n {
            for v in (u + 1)..=n {
                if !g.connected(u, v) {
                    rules.push(Relation {
                        lhs: Word::new(vec![v, u]),
                        rhs: Word::new(vec![u, v]),
                        kind: RelationKind::Commutation,
                    });
                }
            }
        }
        for (u, v) in g.arrows() {
            rules.push(Relation {
                lhs: Word::new(vec![u, v, u]),
                rhs: Word::new(vec![u, v]),
                kind: RelationKind::Collapse,
            });
            rules.push(Relation {
                lhs: Word::new(vec![v, u, v]),
                rhs: Word::new(vec![u, v]),
                kind: RelationKind::Collapse,
            });
        }
        RelationSet { rules }
    }

    pub fn rules(&self) -> &[Relation] {
        &self.rules
    }

    pub fn count_of(&self, kind: RelationKind) -> usize {
        self.rules.iter().filter(|r| r.kind == kind).count()
    }

    /// Both orientations of every rule, in rule order.
    fn directed(&self) -> Vec<(Vec<usize>, Vec<usize>)> {
        let mut out = Vec::with_capacity(self.rules.len() * 2);
        for r in &self.rules {
            out.push((r.lhs.letters().to_vec(), r.rhs.letters().to_vec()));
            out.push((r.rhs.letters().to_vec(), r.lhs.letters().to_vec()));
        }
        out
    }

    /// Words reachable from `w` by one relation application (either
    /// direction, any position) whose length stays within `cap`.
    pub fn neighbors(&self, w: &Word, cap: usize) -> Vec<Word> {
        let mut out = Vec::new();
        neighbors_into(w, &self.directed(), cap, &mut out);
        out
    }
}

/// Convenience wrapper matching the module-level operation set.
pub fn relations(g: &OrientedGraph) -> RelationSet {
    RelationSet::for_graph(g)
}

fn neighbors_into(
    w: &Word,
    directed: &[(Vec<usize>, Vec<usize>)],
    cap: usize,
    out: &mut Vec<Word>,
) {
    let ls = w.letters();
    for (pat, rep) in directed {
        if pat.len() > ls.len() {
            continue;
        }
        let new_len = ls.len() - pat.len() + rep.len();
        if new_len > cap {
            continue;
        }
        for pos in 0..=(ls.len() - pat.len()) {
            if &ls[pos..pos + pat.len()] == pat.as_slice() {
                let mut letters = Vec::with_capacity(new_len);
                letters.extend_from_slice(&ls[..pos]);
                letters.extend_from_slice(rep);
                letters.extend_from_slice(&ls[pos + pat.len()..]);
                out.push(Word::new(letters));
            }
        }
    }
}

/// Result of `normalize`: the shortlex-least word found, plus whether the
/// bounded saturation ran to completion within its budget.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Normalized {
    pub word: Word,
    pub saturated: bool,
}

/// Returns the shortlex-least word among all words reachable from `w` by
/// relation applications that never exceed `|w|` in length, saturated within
/// `budget` visited words. Budget exhaustion is not an error: the least word
/// found so far is returned with `saturated = false`.
pub fn normalize(w: &Word, g: &OrientedGraph, budget: usize) -> Normalized {
    assert!(budget >= 1, "budget must be at least 1");
    assert!(w.max_letter() <= g.n(), "word mentions a generator outside the graph");
    let cap = w.len();
    let directed = RelationSet::for_graph(g).directed();
    let mut seen: BTreeSet<Word> = BTreeSet::new();
    seen.insert(w.clone());
    let mut heap = BinaryHeap::new();
    heap.push(Reverse(w.clone()));
    let mut best = w.clone();
    let mut visited = 1usize;
    let mut saturated = true;
    let mut nb = Vec::new();
    'outer: while let Some(Reverse(word)) = heap.pop() {
        nb.clear();
        neighbors_into(&word, &directed, cap, &mut nb);
        for nw in nb.drain(..) {
            if seen.contains(&nw) {
                continue;
            }
            if visited >= budget {
                saturated = false;
                break 'outer;
            }
            visited += 1;
            if nw < best {
                best = nw.clone();
            }
            seen.insert(nw.clone());
            heap.push(Reverse(nw));
        }
    }
    Normalized { word: best, saturated }
}

/// Verdict of the bounded word-equality oracle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EqualityVerdict {
    Equal,
    Distinct(DistinctWitness),
    /// Budget exhausted before a decision was reached.
    Unknown,
}

/// A separating certificate. Both kinds re-verify independently: affine
/// images can be recomputed, canonical forms re-looked-up.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DistinctWitness {
    /// The exact affine images differ (standard oriented cycle only).
    AffineImages { left: AffineMap, right: AffineMap },
    /// Distinct canonical forms in a fully enumerated finite monoid.
    CanonicalForms { left: Word, right: Word },
}

struct SideState {
    parents: BTreeMap<Word, Option<Word>>,
    heap: BinaryHeap<Reverse<Word>>,
}

impl SideState {
    fn new(root: &Word) -> Self {
        let mut parents = BTreeMap::new();
        parents.insert(root.clone(), None);
        let mut heap = BinaryHeap::new();
        heap.push(Reverse(root.clone()));
        SideState { parents, heap }
    }

    fn path_to_root(&self, from: &Word) -> Vec<Word> {
        let mut path = vec![from.clone()];
        loop {
            let cur = path.last().expect("path is nonempty").clone();
            match self.parents.get(&cur) {
                Some(Some(parent)) => path.push(parent.clone()),
                _ => break,
            }
        }
        path
    }
}

/// Searches for a chain of relation applications connecting `u` and `v`,
/// meeting in the middle. Exploration never exceeds `max(|u|, |v|)` plus a
/// small slack in word length, and `budget` in visited words. On success the
/// returned chain starts at `u`, ends at `v`, and every consecutive pair
/// differs by one relation application.
pub fn equality_chain(
    u: &Word,
    v: &Word,
    g: &OrientedGraph,
    budget: usize,
) -> Option<Vec<Word>> {
    if u == v {
        return Some(vec![u.clone()]);
    }
    let cap = u.len().max(v.len()) + LENGTH_SLACK;
    let directed = RelationSet::for_graph(g).directed();
    let mut a = SideState::new(u);
    let mut b = SideState::new(v);
    let mut visited = 2usize;
    let mut nb: Vec<Word> = Vec::new();
    let mut meet: Option<(Word, bool)> = None;

    'search: while meet.is_none() {
        // Expand the side whose smallest unexplored word is larger: that
        // side is the one still waiting to be reduced, so this greedily
        // drives long words down toward the other class.
        let expand_a = match (a.heap.peek(), b.heap.peek()) {
            (None, None) => return None,
            (Some(_), None) => true,
            (None, Some(_)) => false,
            (Some(Reverse(x)), Some(Reverse(y))) => x >= y,
        };
        let (cur, other) = if expand_a { (&mut a, &b) } else { (&mut b, &a) };
        let Reverse(word) = cur.heap.pop()?;
        nb.clear();
        neighbors_into(&word, &directed, cap, &mut nb);
        for nw in nb.drain(..) {
            if cur.parents.contains_key(&nw) {
                continue;
            }
            if visited >= budget {
                break 'search;
            }
            visited += 1;
            cur.parents.insert(nw.clone(), Some(word.clone()));
            if other.parents.contains_key(&nw) {
                meet = Some((nw, expand_a));
                break 'search;
            }
            cur.heap.push(Reverse(nw));
        }
    }

    let (meet, _) = meet?;
    let mut chain = a.path_to_root(&meet);
    chain.reverse(); // u ... meet
    let tail = b.path_to_root(&meet); // meet ... v
    chain.extend(tail.into_iter().skip(1));
    Some(chain)
}

/// Canonical form tuned for monoid enumeration: greedily restarts from any
/// strictly shorter word found, so the expensive full saturation only ever
/// runs at the minimal length, where no collapse applies and the class is a
/// commutation class. Falls back to the best word seen if the budget runs
/// out.
fn reduce_with(directed: &[(Vec<usize>, Vec<usize>)], w: &Word, budget: usize) -> Word {
    let mut cur = w.clone();
    let mut spent = 0usize;
    let mut nb: Vec<Word> = Vec::new();
    'restart: loop {
        let cap = cur.len() + LENGTH_SLACK;
        let mut seen: BTreeSet<Word> = BTreeSet::new();
        seen.insert(cur.clone());
        let mut heap = BinaryHeap::new();
        heap.push(Reverse(cur.clone()));
        let mut best = cur.clone();
        while let Some(Reverse(word)) = heap.pop() {
            nb.clear();
            neighbors_into(&word, directed, cap, &mut nb);
            for nw in nb.drain(..) {
                if seen.contains(&nw) {
                    continue;
                }
                spent += 1;
                if spent >= budget {
                    return best;
                }
                if nw.len() < cur.len() {
                    cur = nw;
                    continue 'restart;
                }
                if nw < best {
                    best = nw.clone();
                }
                seen.insert(nw.clone());
                heap.push(Reverse(nw));
            }
        }
        return best;
    }
}

/// Bounded equality decision. `Equal` means the saturation classes of the
/// two words intersect (a concrete rewrite chain exists) or, for an acyclic
/// graph, that the fully enumerated monoid identifies them. `Distinct`
/// carries a separating certificate. `Unknown` means the budget ran out.
pub fn are_equal(u: &Word, v: &Word, g: &OrientedGraph, budget: usize) -> EqualityVerdict {
    assert!(u.max_letter() <= g.n() && v.max_letter() <= g.n());
    if equality_chain(u, v, g, budget).is_some() {
        return EqualityVerdict::Equal;
    }
    if g.is_acyclic() {
        if let Ok(m) = enumerate_monoid(g, budget) {
            let (iu, iv) = (m.eval(u), m.eval(v));
            return if iu == iv {
                EqualityVerdict::Equal
            } else {
                EqualityVerdict::Distinct(DistinctWitness::CanonicalForms {
                    left: m.element(iu).clone(),
                    right: m.element(iv).clone(),
                })
            };
        }
    }
    if g.is_standard_cycle() {
        let left = affine_action(u, g.n()).expect("letters checked above");
        let right = affine_action(v, g.n()).expect("letters checked above");
        if left != right {
            return EqualityVerdict::Distinct(DistinctWitness::AffineImages { left, right });
        }
    }
    EqualityVerdict::Unknown
}

#[derive(Debug, Error)]
pub enum EnumerateError {
    #[error("element cap exceeded after finding {} elements", found.len())]
    CapExceeded { found: Vec<Word> },
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("graph has a directed cycle; this operation needs an acyclic graph")]
pub struct NotAcyclic;

/// A finite monoid realized as canonical words with full multiplication
/// tables (closure of the generators under both actions).
#[derive(Debug, Clone)]
pub struct EnumeratedMonoid {
    n: usize,
    elements: Vec<Word>,
    right_mul: Vec<Vec<usize>>,
    left_mul: Vec<Vec<usize>>,
}

impl EnumeratedMonoid {
    pub fn size(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Word] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Word {
        &self.elements[i]
    }

    pub const IDENTITY: usize = 0;

    /// Index of the element a word evaluates to.
    pub fn eval(&self, w: &Word) -> usize {
        let mut cur = Self::IDENTITY;
        for &letter in w.letters() {
            cur = self.right_mul[cur][letter - 1];
        }
        cur
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        let letters: Vec<usize> = self.elements[b].letters().to_vec();
        let mut cur = a;
        for letter in letters {
            cur = self.right_mul[cur][letter - 1];
        }
        cur
    }

    /// Indices of the idempotent elements.
    pub fn idempotents(&self) -> Vec<usize> {
        (0..self.size()).filter(|&i| self.mul(i, i) == i).collect()
    }

    /// The two-sided principal ideal generated by an element.
    pub fn two_sided_ideal(&self, m: usize) -> BTreeSet<usize> {
        let mut seen = BTreeSet::new();
        seen.insert(m);
        let mut todo = vec![m];
        while let Some(x) = todo.pop() {
            for gen in 0..self.n {
                for y in [self.right_mul[x][gen], self.left_mul[x][gen]] {
                    if seen.insert(y) {
                        todo.push(y);
                    }
                }
            }
        }
        seen
    }
}

/// Enumerates the monoid of a graph by closing `{1, x_1, ..., x_n}` under
/// right multiplication with normalization. Fails with the elements found so
/// far when the closure does not stabilize within `cap` elements (the cycle
/// monoid, for instance, is infinite).
pub fn enumerate_monoid(g: &OrientedGraph, cap: usize) -> Result<EnumeratedMonoid, EnumerateError> {
    let n = g.n();
    let directed = RelationSet::for_graph(g).directed();
    let mut elements = vec![Word::empty()];
    let mut index: BTreeMap<Word, usize> = BTreeMap::new();
    index.insert(Word::empty(), 0);
    let mut right_mul: Vec<Vec<usize>> = Vec::new();
    let mut i = 0;
    while i < elements.len() {
        let mut row = Vec::with_capacity(n);
        for gen in 1..=n {
            let prod = elements[i].concat(&Word::letter(gen));
            let norm = reduce_with(&directed, &prod, DEFAULT_BUDGET);
            let idx = match index.get(&norm) {
                Some(&j) => j,
                None => {
                    if elements.len() >= cap {
                        return Err(EnumerateError::CapExceeded { found: elements });
                    }
                    let j = elements.len();
                    elements.push(norm.clone());
                    index.insert(norm, j);
                    j
                }
            };
            row.push(idx);
        }
        right_mul.push(row);
        i += 1;
    }
    let mut left_mul = Vec::with_capacity(elements.len());
    for elem in &elements {
        let mut row = Vec::with_capacity(n);
        for gen in 1..=n {
            let prod = Word::letter(gen).concat(elem);
            // Evaluate through the right table so the result always lands on
            // an enumerated element.
            let mut cur = 0usize;
            for &letter in prod.letters() {
                cur = right_mul[cur][letter - 1];
            }
            row.push(cur);
        }
        left_mul.push(row);
    }
    Ok(EnumeratedMonoid { n, elements, right_mul, left_mul })
}

/// The `2^n` canonical idempotents of an acyclic graph's monoid: for each
/// vertex subset, the product of its generators in topological order.
pub fn idempotents_acyclic(g: &OrientedGraph) -> Result<Vec<Word>, NotAcyclic> {
    let order = g.topological_order().ok_or(NotAcyclic)?;
    let n = g.n();
    let mut pos = vec![0usize; n + 1];
    for (p, &v) in order.iter().enumerate() {
        pos[v] = p;
    }
    assert!(n < 64);
    let mut out = Vec::with_capacity(1 << n);
    for mask in 0u64..(1u64 << n) {
        let mut verts: Vec<usize> = (1..=n).filter(|&v| mask & (1 << (v - 1)) != 0).collect();
        verts.sort_by_key(|&v| pos[v]);
        out.push(Word::new(verts));
    }
    Ok(out)
}
