//! Switches, switchboards, and their symmetric functions.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::ideal::{degree_basis, IdealSpec, PairClass, Semimatched, TripleClass};
use crate::poly::NCPoly;
use crate::symfunc::{fund_from_dual, schur_expand, FundExpansion, SchurExpansion};
use crate::word::{Letter, Word};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SwitchType {
    Knuth,
    Rotation,
    BraidIdempotent,
}

impl SwitchType {
    pub fn is_knuth(self) -> bool {
        self == SwitchType::Knuth
    }
}

impl fmt::Display for SwitchType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SwitchType::Knuth => "knuth",
            SwitchType::Rotation => "rotation",
            SwitchType::BraidIdempotent => "braid",
        })
    }
}

type Window = [Letter; 3];

/// Type of the switch between two windows, if any.
fn window_type(x: Window, y: Window) -> Option<SwitchType> {
    if x == y {
        return None;
    }
    let pair = |p: Window, q: Window| (x == p && y == q) || (x == q && y == p);
    let mut letters: Vec<Letter> = x.iter().chain(y.iter()).copied().collect();
    letters.sort_unstable();
    letters.dedup();
    match letters[..] {
        [a, b, c] => {
            if pair([b, a, c], [b, c, a]) || pair([a, c, b], [c, a, b]) {
                Some(SwitchType::Knuth)
            } else if pair([b, a, c], [a, c, b]) || pair([b, c, a], [c, a, b]) {
                Some(SwitchType::Rotation)
            } else {
                None
            }
        }
        [a, b] => {
            if pair([b, a, b], [b, b, a]) || pair([a, b, a], [b, a, a]) {
                Some(SwitchType::Knuth)
            } else if b == a + 1 && (pair([b, a, b], [a, b, a]) || pair([b, b, a], [b, a, a])) {
                Some(SwitchType::BraidIdempotent)
            } else {
                None
            }
        }
        _ => None,
    }
}

/// Windows reachable from `x` by a switch, with the switch type.
fn window_partners(x: Window) -> Vec<(SwitchType, Window)> {
    let mut letters = x.to_vec();
    letters.sort_unstable();
    letters.dedup();
    let mut out = Vec::new();
    for &p in &letters {
        for &q in &letters {
            for &r in &letters {
                if let Some(t) = window_type(x, [p, q, r]) {
                    out.push((t, [p, q, r]));
                }
            }
        }
    }
    out
}

fn window(w: &Word, i: usize) -> Window {
    let l = w.letters();
    [l[i - 2], l[i - 1], l[i]]
}

/// Type of the switch between `w` and `w2` at position `i` (1-based centre).
pub fn classify_switch(w: &Word, w2: &Word, i: usize) -> Option<SwitchType> {
    let n = w.len();
    if w2.len() != n || i < 2 || i + 1 > n {
        return None;
    }
    let (a, b) = (w.letters(), w2.letters());
    if (0..n).any(|j| (j + 2 < i || j > i) && a[j] != b[j]) {
        return None;
    }
    window_type(window(w, i), window(w2, i))
}

/// Exactly one descent among positions `i - 1` and `i`.
pub fn lone_descent(w: &Word, i: usize) -> bool {
    let l = w.letters();
    if i < 2 || i + 1 > l.len() {
        return false;
    }
    (l[i - 2] > l[i - 1]) != (l[i - 1] > l[i])
}

fn replace_window(w: &Word, i: usize, y: Window) -> Word {
    let mut l = w.letters().to_vec();
    l[i - 2..=i].copy_from_slice(&y);
    Word::from_slice(&l)
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    pub i: usize,
    pub a: Word,
    pub b: Word,
}

impl Edge {
    pub fn new(i: usize, x: Word, y: Word) -> Self {
        if x <= y {
            Edge { i, a: x, b: y }
        } else {
            Edge { i, a: y, b: x }
        }
    }

    pub fn switch_type(&self) -> Option<SwitchType> {
        classify_switch(&self.a, &self.b, self.i)
    }

    pub fn other(&self, v: &Word) -> &Word {
        if *v == self.a {
            &self.b
        } else {
            &self.a
        }
    }
}

/// Which class of switchboards to validate against.
#[derive(Clone, Debug, PartialEq)]
pub enum Flavor {
    Plain,
    /// Repeat-free words.
    D0,
    /// No rotation switches.
    RotationFree,
    Assaf(u8),
    Semimatched(Box<Semimatched>),
}

impl Flavor {
    /// `plain`, `d0`, `rotation-free`, `assaf:K`, or `ideal:SPEC`.
    pub fn parse(s: &str, n: u8) -> Result<Self> {
        match s {
            "plain" => Ok(Flavor::Plain),
            "d0" | "D0" => Ok(Flavor::D0),
            "rotation-free" => Ok(Flavor::RotationFree),
            _ => {
                if let Some(k) = s.strip_prefix("assaf:") {
                    let k = k.parse().map_err(|_| Error::Parse(format!("bad level in {s:?}")))?;
                    return Ok(Flavor::Assaf(k));
                }
                if let Some(spec) = s.strip_prefix("ideal:") {
                    let spec = IdealSpec::parse(spec, n)?;
                    let view = spec
                        .semimatched_view()
                        .ok_or_else(|| Error::InvalidSpec(format!("{spec} is not semimatched")))?;
                    return Ok(Flavor::Semimatched(Box::new(view)));
                }
                Err(Error::Parse(format!("unknown flavor {s:?}")))
            }
        }
    }

    fn semimatched(&self, n: u8) -> Option<Semimatched> {
        match self {
            Flavor::RotationFree => Some(Semimatched::uniform(TripleClass::Knuth, PairClass::Undecided, None)),
            Flavor::Assaf(k) => Some(Semimatched::assaf(n, *k)),
            Flavor::Semimatched(s) => Some((**s).clone()),
            _ => None,
        }
    }
}

/// Does a switch of this shape fit the patterns allowed by `s`?
fn allowed(s: &Semimatched, x: Window, t: SwitchType) -> bool {
    let mut l = x;
    l.sort_unstable();
    match t {
        SwitchType::Knuth | SwitchType::Rotation if l[0] < l[1] && l[1] < l[2] => {
            let class = s.triple(l);
            class == TripleClass::Undecided
                || (class == TripleClass::Knuth && t == SwitchType::Knuth)
                || (class == TripleClass::Rotation && t == SwitchType::Rotation)
        }
        _ => {
            let (a, b) = if l[0] == l[1] { (l[0], l[2]) } else { (l[0], l[1]) };
            if b - a > 1 {
                return t == SwitchType::Knuth;
            }
            let class = s.pair(a);
            class == PairClass::Undecided
                || (class == PairClass::Knuth && t == SwitchType::Knuth)
                || (class == PairClass::Braid && t == SwitchType::BraidIdempotent)
        }
    }
}

/// An edge-labelled graph on words of one length.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Switchboard {
    n: u8,
    len: usize,
    vertices: BTreeSet<Word>,
    edges: BTreeSet<Edge>,
}

impl Switchboard {
    pub fn new(n: u8, vertices: BTreeSet<Word>, edges: BTreeSet<Edge>) -> Result<Self> {
        let len = vertices.iter().next().map_or(0, Word::len);
        for v in &vertices {
            if v.len() != len {
                return Err(Error::InvalidBoard(format!("word {v} has length {} not {len}", v.len())));
            }
            v.check_alphabet(n)?;
        }
        for e in &edges {
            if !vertices.contains(&e.a) || !vertices.contains(&e.b) {
                return Err(Error::InvalidBoard(format!("edge {} {} {} leaves the vertex set", e.i, e.a, e.b)));
            }
        }
        Ok(Switchboard { n, len, vertices, edges })
    }

    pub fn empty(n: u8) -> Self {
        Switchboard { n, len: 0, vertices: BTreeSet::new(), edges: BTreeSet::new() }
    }

    pub fn n(&self) -> u8 {
        self.n
    }

    pub fn word_len(&self) -> usize {
        self.len
    }

    pub fn vertices(&self) -> &BTreeSet<Word> {
        &self.vertices
    }

    pub fn edges(&self) -> &BTreeSet<Edge> {
        &self.edges
    }

    fn adjacency(&self) -> BTreeMap<(&Word, usize), Vec<&Word>> {
        let mut adj: BTreeMap<(&Word, usize), Vec<&Word>> = BTreeMap::new();
        for e in &self.edges {
            adj.entry((&e.a, e.i)).or_default().push(&e.b);
            adj.entry((&e.b, e.i)).or_default().push(&e.a);
        }
        adj
    }

    /// The `i`-neighbour of `v`, when it has exactly one.
    pub fn partner(&self, v: &Word, i: usize) -> Option<&Word> {
        let mut it = self
            .edges
            .iter()
            .filter(|e| e.i == i && (e.a == *v || e.b == *v))
            .map(|e| e.other(v));
        let first = it.next()?;
        it.next().is_none().then_some(first)
    }

    /// Every failed requirement, in a fixed order; empty when valid.
    pub fn violations(&self, flavor: &Flavor) -> Vec<String> {
        let mut out = Vec::new();
        let adj = self.adjacency();
        for e in &self.edges {
            if e.i < 2 || e.i + 1 > self.len {
                out.push(format!("edge label {} outside 2..{}", e.i, self.len.saturating_sub(1)));
                continue;
            }
            match e.switch_type() {
                None => out.push(format!("{}-edge {} {} is not a switch", e.i, e.a, e.b)),
                Some(t) => {
                    if let Some(s) = flavor.semimatched(self.n) {
                        if !allowed(&s, window(&e.a, e.i), t) {
                            out.push(format!("{}-edge {} {} is a {t} switch not allowed here", e.i, e.a, e.b));
                        }
                    }
                }
            }
        }
        for v in &self.vertices {
            for i in 2..self.len {
                let deg = adj.get(&(v, i)).map_or(0, Vec::len);
                if lone_descent(v, i) && deg != 1 {
                    out.push(format!("vertex {v} lies on {deg} {i}-edges"));
                }
            }
            if *flavor == Flavor::D0 && v.has_repeated_letter() {
                out.push(format!("vertex {v} has a repeated letter"));
            }
            if let Some(m) = flavor.semimatched(self.n).and_then(|s| s.monomials) {
                if m.contains(v) {
                    out.push(format!("vertex {v} is a monomial of the ideal"));
                }
            }
        }
        out
    }

    pub fn validate(&self, flavor: &Flavor) -> bool {
        self.violations(flavor).is_empty()
    }

    /// Connected components, ordered by least vertex.
    pub fn components(&self) -> Vec<Switchboard> {
        let mut nbrs: BTreeMap<&Word, Vec<&Word>> = BTreeMap::new();
        for e in &self.edges {
            nbrs.entry(&e.a).or_default().push(&e.b);
            nbrs.entry(&e.b).or_default().push(&e.a);
        }
        let mut seen: BTreeSet<&Word> = BTreeSet::new();
        let mut out = Vec::new();
        for v in &self.vertices {
            if seen.contains(v) {
                continue;
            }
            let mut comp = BTreeSet::new();
            let mut stack = vec![v];
            seen.insert(v);
            while let Some(x) = stack.pop() {
                comp.insert(x.clone());
                for y in nbrs.get(x).into_iter().flatten() {
                    if seen.insert(y) {
                        stack.push(y);
                    }
                }
            }
            let edges = self
                .edges
                .iter()
                .filter(|e| comp.contains(&e.a))
                .cloned()
                .collect();
            out.push(Switchboard { n: self.n, len: self.len, vertices: comp, edges });
        }
        out
    }

    pub fn vertex_sum(&self) -> NCPoly<BigInt> {
        NCPoly::sum_of_words(&self.vertices)
    }

    pub fn fundamental(&self) -> FundExpansion<BigInt> {
        fund_from_dual(&self.vertex_sum()).expect("equal-length vertices")
    }

    pub fn symfunc(&self) -> Result<SchurExpansion<BigInt>> {
        schur_expand(&self.fundamental())
    }

    /// Failures of "non-overlapping switches commute", least first.
    pub fn axiom5_violations(&self) -> Vec<Axiom5Violation> {
        let mut out = Vec::new();
        for v in &self.vertices {
            for i in 2..self.len {
                let Some(w) = self.partner(v, i) else { continue };
                for j in i + 3..self.len {
                    let Some(w2) = self.partner(v, j) else { continue };
                    let via_i = self.partner(w, j).cloned();
                    let via_j = self.partner(w2, i).cloned();
                    if via_i.is_none() || via_i != via_j {
                        out.push(Axiom5Violation {
                            v: v.clone(),
                            i,
                            j,
                            via_i_then_j: via_i,
                            via_j_then_i: via_j,
                        });
                    }
                }
            }
        }
        out
    }

    pub fn check_axiom5(&self) -> Option<Axiom5Violation> {
        self.axiom5_violations().into_iter().next()
    }

    /// Pairs `(i, v, w)` agreeing in positions `i-1..=i+1` whose `i`-edges differ in Knuth-ness.
    pub fn locality_violations(&self) -> Vec<(usize, Word, Word)> {
        let mut out = Vec::new();
        for i in 2..self.len {
            let typed: Vec<(&Word, bool)> = self
                .vertices
                .iter()
                .filter_map(|v| {
                    let w = self.partner(v, i)?;
                    let t = classify_switch(v, w, i)?;
                    Some((v, t.is_knuth()))
                })
                .collect();
            for (x, (v, kv)) in typed.iter().enumerate() {
                for (w, kw) in &typed[x + 1..] {
                    if kv != kw && window(v, i) == window(w, i) {
                        out.push((i, (*v).clone(), (*w).clone()));
                    }
                }
            }
        }
        out
    }

    pub fn check_locality(&self) -> bool {
        self.locality_violations().is_empty()
    }

    /// Labels `i` whose edges are neither all Knuth nor all non-Knuth.
    pub fn strong_locality_violations(&self) -> Vec<usize> {
        let mut kinds: BTreeMap<usize, BTreeSet<bool>> = BTreeMap::new();
        for e in &self.edges {
            if let Some(t) = e.switch_type() {
                kinds.entry(e.i).or_default().insert(t.is_knuth());
            }
        }
        kinds.into_iter().filter(|(_, s)| s.len() > 1).map(|(i, _)| i).collect()
    }

    pub fn check_strong_locality(&self) -> bool {
        self.strong_locality_violations().is_empty()
    }

    /// Union with a vertex-disjoint board of the same word length.
    pub fn union(&self, other: &Switchboard) -> Result<Switchboard> {
        if !self.vertices.is_empty() && !other.vertices.is_empty() && self.len != other.len {
            return Err(Error::LengthMismatch(self.len, other.len));
        }
        if self.vertices.intersection(&other.vertices).next().is_some() {
            return Err(Error::InvalidBoard("vertex sets overlap".into()));
        }
        let mut vertices = self.vertices.clone();
        vertices.extend(other.vertices.iter().cloned());
        let mut edges = self.edges.clone();
        edges.extend(other.edges.iter().cloned());
        Switchboard::new(self.n.max(other.n), vertices, edges)
    }

    /// Lines `v <word>` and `e <i> <word> <word>`; `#` comments; optional `N <n>`.
    pub fn parse(text: &str) -> Result<Self> {
        let mut n: Option<u8> = None;
        let mut vertices = BTreeSet::new();
        let mut edges = BTreeSet::new();
        for (no, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let bad = || Error::Parse(format!("line {}: {raw:?}", no + 1));
            let toks: Vec<&str> = line.split_whitespace().collect();
            match toks.as_slice() {
                ["N", x] => n = Some(x.parse().map_err(|_| bad())?),
                ["v", w] => {
                    vertices.insert(Word::parse(w)?);
                }
                ["e", i, a, b] => {
                    let i: usize = i.parse().map_err(|_| bad())?;
                    edges.insert(Edge::new(i, Word::parse(a)?, Word::parse(b)?));
                }
                _ => return Err(bad()),
            }
        }
        let n = n.unwrap_or_else(|| vertices.iter().map(Word::max_letter).max().unwrap_or(1).max(1));
        Switchboard::new(n, vertices, edges)
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for v in &self.vertices {
            s.push_str(&format!("v {}\n", v.to_text(self.n)));
        }
        for e in &self.edges {
            s.push_str(&format!("e {} {} {}\n", e.i, e.a.to_text(self.n), e.b.to_text(self.n)));
        }
        s
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Axiom5Violation {
    pub v: Word,
    pub i: usize,
    pub j: usize,
    pub via_i_then_j: Option<Word>,
    pub via_j_then_i: Option<Word>,
}

/// The unique `I`-switchboard on `vertices` for a semimatched ideal.
pub fn build_unique(vertices: &BTreeSet<Word>, spec: &IdealSpec) -> Result<Switchboard> {
    let view = spec
        .semimatched_view()
        .ok_or_else(|| Error::InvalidSpec(format!("{spec} is not semimatched")))?;
    let Some(len) = vertices.iter().next().map(Word::len) else {
        return Ok(Switchboard::empty(spec.n));
    };
    let gamma: NCPoly<BigRational> = NCPoly::sum_of_words(vertices);
    gamma.homogeneous_degree()?;
    let basis = degree_basis::<BigRational>(spec, len, None)?;
    if let Some(wit) = basis.perp_witness(&gamma)? {
        return Err(Error::PerpViolation { witness: wit.to_text(spec.n) });
    }
    let mut edges = BTreeSet::new();
    for v in vertices {
        for i in 2..len {
            if !lone_descent(v, i) {
                continue;
            }
            let found: Vec<Word> = window_partners(window(v, i))
                .into_iter()
                .filter(|(t, y)| allowed(&view, *y, *t))
                .map(|(_, y)| replace_window(v, i, y))
                .filter(|x| vertices.contains(x))
                .collect();
            match found.as_slice() {
                [x] => {
                    edges.insert(Edge::new(i, v.clone(), x.clone()));
                }
                [] => {
                    return Err(Error::PerpViolation {
                        witness: format!("no {i}-switch partner for {}", v.to_text(spec.n)),
                    })
                }
                _ => return Err(Error::Ambiguous { word: v.clone(), position: i }),
            }
        }
    }
    Switchboard::new(spec.n, vertices.clone(), edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::w;

    #[test]
    fn switch_patterns() {
        assert_eq!(classify_switch(&w("213"), &w("231"), 2), Some(SwitchType::Knuth));
        assert_eq!(classify_switch(&w("213"), &w("132"), 2), Some(SwitchType::Rotation));
        assert_eq!(classify_switch(&w("212"), &w("121"), 2), Some(SwitchType::BraidIdempotent));
        assert_eq!(classify_switch(&w("313"), &w("131"), 2), None);
        assert_eq!(classify_switch(&w("313"), &w("331"), 2), Some(SwitchType::Knuth));
        assert_eq!(classify_switch(&w("4213"), &w("5231"), 3), None);
    }

    #[test]
    fn lone_vertex_is_invalid() {
        let mut vs = BTreeSet::new();
        vs.insert(w("213"));
        let b = Switchboard::new(3, vs, BTreeSet::new()).unwrap();
        assert!(!b.validate(&Flavor::Plain));
    }

    #[test]
    fn window_partner_counts() {
        let p = window_partners([2, 1, 3]);
        assert_eq!(p.len(), 2);
        let p = window_partners([2, 1, 2]);
        assert_eq!(p.len(), 2);
        let p = window_partners([3, 1, 3]);
        assert_eq!(p.len(), 1);
    }
}
