//! Degree components of homogeneous ideals, computed lazily per content block.

use std::any::{Any, TypeId};
use std::collections::{BTreeSet, HashMap, VecDeque};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;

use super::echelon::{to_row, Echelon, Row};
use super::spec::{IdealSpec, MonomialIdeal};
use crate::error::{Error, Result};
use crate::poly::NCPoly;
use crate::scalar::{Embed, Field};
use crate::word::{Content, Word};

/// The coordinate block of a union of contents closed under the generators.
#[derive(Debug)]
pub struct Block<F> {
    contents: BTreeSet<Content>,
    /// Words of the block that are not killed by the monomial part.
    words: Vec<Word>,
    killed: usize,
    ech: Echelon<Word, F>,
}

impl<F: Field> Block<F> {
    pub fn contents(&self) -> &BTreeSet<Content> {
        &self.contents
    }

    /// Words not killed by monomial generators, in increasing order.
    pub fn live_words(&self) -> &[Word] {
        &self.words
    }

    pub fn killed_count(&self) -> usize {
        self.killed
    }

    pub fn echelon(&self) -> &Echelon<Word, F> {
        &self.ech
    }

    /// Dimension of the ideal inside the block.
    pub fn rank(&self) -> usize {
        self.ech.rank() + self.killed
    }

    /// Total number of words in the block.
    pub fn dimension(&self) -> usize {
        self.words.len() + self.killed
    }
}

struct Single<F> {
    spec: IdealSpec,
    gens: Vec<NCPoly<F>>,
    term_contents: Vec<Vec<Content>>,
    monomials: Option<MonomialIdeal>,
}

enum Source<F> {
    Single(Single<F>),
    Cap(Vec<Arc<DegreeBasis<F>>>),
}

type Slot<F> = Arc<OnceLock<Arc<Block<F>>>>;

/// A block together with the part of a polynomial that lives on it.
type Grouped<F> = (Arc<Block<F>>, Row<Word, F>);

/// The degree `d` component `I_d` of an ideal (or of an intersection of ideals).
pub struct DegreeBasis<F> {
    source: Source<F>,
    n: u8,
    degree: usize,
    restrict: Option<Content>,
    blocks: Mutex<HashMap<Content, Slot<F>>>,
}

impl<F: Field> std::fmt::Debug for DegreeBasis<F> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "DegreeBasis({}, d={})", self.describe(), self.degree)
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
enum CacheKey {
    Single(IdealSpec, usize, Option<Content>),
    Cap(Vec<IdealSpec>, usize, Option<Content>),
}

type Cache = Mutex<HashMap<(TypeId, CacheKey), Arc<dyn Any + Send + Sync>>>;

fn cache() -> &'static Cache {
    static CACHE: OnceLock<Cache> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

fn cached<F: Field>(
    key: CacheKey,
    build: impl FnOnce() -> Result<DegreeBasis<F>>,
) -> Result<Arc<DegreeBasis<F>>> {
    let k = (TypeId::of::<F>(), key);
    if let Some(hit) = cache().lock().unwrap().get(&k) {
        return Ok(hit.clone().downcast::<DegreeBasis<F>>().expect("cache type"));
    }
    let fresh = Arc::new(build()?);
    let mut guard = cache().lock().unwrap();
    let entry = guard.entry(k).or_insert_with(|| fresh.clone() as Arc<dyn Any + Send + Sync>);
    Ok(entry.clone().downcast::<DegreeBasis<F>>().expect("cache type"))
}

/// Check that restricting to a repeat-free content cannot lose information.
fn check_restriction<F: Field>(spec: &IdealSpec, gens: &[NCPoly<F>], mono: &Option<MonomialIdeal>, c: &Content) -> Result<()> {
    if c.has_repeat() {
        return Err(Error::UnsoundRestriction(format!("content {c} has a repeated letter")));
    }
    let has_st = mono
        .as_ref()
        .is_some_and(|m| m.kills_every_arrangement(&Content::of(&[1, 1])));
    if !has_st {
        return Err(Error::UnsoundRestriction(format!("{spec} does not contain Ist")));
    }
    for g in gens {
        let contents: BTreeSet<Content> = g.words().map(Word::content).collect();
        if contents.len() > 1 && g.words().any(|w| !w.has_repeated_letter()) {
            return Err(Error::UnsoundRestriction(format!(
                "generator {g} mixes contents through a repeat-free word"
            )));
        }
    }
    Ok(())
}

/// Cached degree component of `spec`, optionally restricted to one repeat-free
/// content in the presence of `Ist`.
pub fn degree_basis<F: Field>(
    spec: &IdealSpec,
    d: usize,
    restrict: Option<Content>,
) -> Result<Arc<DegreeBasis<F>>>
where
    BigInt: Embed<F>,
{
    if let Some(c) = &restrict {
        if c.len() != d {
            return Err(Error::DegreeMismatch { expected: d, found: c.len() });
        }
    }
    cached(CacheKey::Single(spec.clone(), d, restrict.clone()), || {
        let g = spec.generators::<F>()?;
        let gens: Vec<NCPoly<F>> = g
            .polys
            .into_iter()
            .filter(|p| p.degree().is_some_and(|e| e <= d))
            .collect();
        if let Some(c) = &restrict {
            check_restriction(spec, &gens, &g.monomials, c)?;
        }
        let term_contents = gens
            .iter()
            .map(|p| {
                p.words()
                    .map(Word::content)
                    .collect::<BTreeSet<_>>()
                    .into_iter()
                    .collect()
            })
            .collect();
        Ok(DegreeBasis {
            source: Source::Single(Single {
                spec: spec.clone(),
                gens,
                term_contents,
                monomials: g.monomials,
            }),
            n: spec.n,
            degree: d,
            restrict,
            blocks: Mutex::new(HashMap::new()),
        })
    })
}

/// Degree component of the intersection of the listed ideals.
pub fn intersect_degree<F: Field>(
    specs: &[IdealSpec],
    d: usize,
    restrict: Option<Content>,
) -> Result<Arc<DegreeBasis<F>>>
where
    BigInt: Embed<F>,
{
    let n = specs
        .first()
        .ok_or_else(|| Error::InvalidSpec("empty intersection".into()))?
        .n;
    if specs.iter().any(|s| s.n != n) {
        return Err(Error::InvalidSpec("intersection over different alphabets".into()));
    }
    if specs.len() == 1 {
        return degree_basis(&specs[0], d, restrict);
    }
    let parts = specs
        .iter()
        .map(|s| degree_basis::<F>(s, d, restrict.clone()))
        .collect::<Result<Vec<_>>>()?;
    cached(CacheKey::Cap(specs.to_vec(), d, restrict.clone()), || {
        Ok(DegreeBasis {
            source: Source::Cap(parts),
            n,
            degree: d,
            restrict,
            blocks: Mutex::new(HashMap::new()),
        })
    })
}

/// Intersection of two row spaces over the same coordinates.
fn intersect_rows<F: Field>(a: &[Row<Word, F>], b: &[Row<Word, F>]) -> Vec<Row<Word, F>> {
    let mut ech: Echelon<(u8, Word), F> = Echelon::new();
    for r in a {
        let mut row: Row<(u8, Word), F> = r.iter().map(|(w, c)| ((1, w.clone()), c.clone())).collect();
        row.extend(r.iter().map(|(w, c)| ((0, w.clone()), c.clone())));
        ech.insert(row);
    }
    for r in b {
        ech.insert(r.iter().map(|(w, c)| ((1, w.clone()), c.clone())).collect());
    }
    ech.rows()
        .filter(|r| r[0].0 .0 == 0)
        .map(|r| r.iter().map(|((_, w), c)| (w.clone(), c.clone())).collect())
        .collect()
}

impl<F: Field> DegreeBasis<F> {
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn n(&self) -> u8 {
        self.n
    }

    pub fn restriction(&self) -> Option<&Content> {
        self.restrict.as_ref()
    }

    pub fn describe(&self) -> String {
        match &self.source {
            Source::Single(s) => s.spec.to_string(),
            Source::Cap(parts) => format!(
                "cap({})",
                parts.iter().map(|p| p.describe()).collect::<Vec<_>>().join(", ")
            ),
        }
    }

    /// Is the monomial `u_w` in the ideal?
    pub fn kills(&self, w: &Word) -> bool {
        match &self.source {
            Source::Single(s) => s.monomials.as_ref().is_some_and(|m| m.contains(w)),
            Source::Cap(parts) => parts.iter().all(|p| p.kills(w)),
        }
    }

    fn is_dead(&self, c: &Content) -> bool {
        match &self.source {
            Source::Single(s) => s.monomials.as_ref().is_some_and(|m| m.kills_every_arrangement(c)),
            Source::Cap(parts) => parts.iter().all(|p| p.is_dead(c)),
        }
    }

    fn check_content(&self, c: &Content) -> Result<()> {
        if c.len() != self.degree {
            return Err(Error::DegreeMismatch { expected: self.degree, found: c.len() });
        }
        if let Some(r) = &self.restrict {
            if r != c {
                return Err(Error::ContentMismatch(c.to_string()));
            }
        }
        Ok(())
    }

    /// The block containing content `c`.
    pub fn block(&self, c: &Content) -> Result<Arc<Block<F>>> {
        self.check_content(c)?;
        let slot = self.blocks.lock().unwrap().entry(c.clone()).or_default().clone();
        let block = slot.get_or_init(|| Arc::new(self.build(c))).clone();
        if block.contents.len() > 1 {
            let mut map = self.blocks.lock().unwrap();
            for other in &block.contents {
                let _ = map.entry(other.clone()).or_default().set(block.clone());
            }
        }
        Ok(block)
    }

    fn closure(&self, c: &Content) -> BTreeSet<Content> {
        let mut seen = BTreeSet::new();
        seen.insert(c.clone());
        if self.is_dead(c) {
            return seen;
        }
        match &self.source {
            Source::Single(s) => {
                let mut queue = VecDeque::from([c.clone()]);
                while let Some(cur) = queue.pop_front() {
                    for tcs in &s.term_contents {
                        if tcs.len() < 2 {
                            continue;
                        }
                        for t in tcs {
                            let Some(pad) = cur.minus(t) else { continue };
                            for t2 in tcs {
                                let next = pad.plus(t2);
                                if !self.is_dead(&next) && seen.insert(next.clone()) {
                                    queue.push_back(next);
                                }
                            }
                        }
                    }
                }
            }
            Source::Cap(parts) => loop {
                let mut grew = false;
                for p in parts {
                    for cur in seen.clone() {
                        for other in p.closure(&cur) {
                            grew |= seen.insert(other);
                        }
                    }
                }
                if !grew {
                    break;
                }
            },
        }
        seen
    }

    fn build(&self, c: &Content) -> Block<F> {
        let contents = self.closure(c);
        let mut words = Vec::new();
        let mut killed = 0;
        for ct in &contents {
            if self.is_dead(ct) {
                killed += ct.arrangement_count() as usize;
                continue;
            }
            for w in ct.arrangements() {
                if self.kills(&w) {
                    killed += 1;
                } else {
                    words.push(w);
                }
            }
        }
        words.sort();
        let mut ech = Echelon::new();
        match &self.source {
            Source::Single(s) => {
                for row in self.spanning_rows(s, &contents) {
                    ech.insert(row);
                }
            }
            Source::Cap(parts) => {
                let mut acc: Option<Vec<Row<Word, F>>> = None;
                for p in parts {
                    let mine = p.rows_on(&contents, |w| !self.kills(w));
                    acc = Some(match acc {
                        None => mine,
                        Some(prev) => intersect_rows(&prev, &mine),
                    });
                }
                for row in acc.unwrap_or_default() {
                    ech.insert(row);
                }
            }
        }
        ech.finalize();
        Block { contents, words, killed, ech }
    }

    /// Rows `u_L g u_R` landing in the given contents, each produced once.
    fn spanning_rows<'a>(
        &'a self,
        s: &'a Single<F>,
        contents: &'a BTreeSet<Content>,
    ) -> impl Iterator<Item = Row<Word, F>> + 'a {
        contents.iter().flat_map(move |c| {
            s.gens.iter().zip(&s.term_contents).flat_map(move |(g, tcs)| {
                tcs.iter().filter_map(move |t| {
                    let pad = c.minus(t)?;
                    let first_live = tcs
                        .iter()
                        .map(|t2| pad.plus(t2))
                        .filter(|x| !self.is_dead(x))
                        .min()?;
                    (first_live == *c).then_some(pad)
                })
                .flat_map(move |pad| {
                    pad.arrangements().into_iter().flat_map(move |arr| {
                        (0..=arr.len()).filter_map(move |split| {
                            let l = Word::from_slice(&arr.letters()[..split]);
                            let r = Word::from_slice(&arr.letters()[split..]);
                            let row = to_row(
                                g.terms()
                                    .map(|(w, x)| (l.concat(w).concat(&r), x.clone()))
                                    .filter(|(w, _)| !self.kills(w)),
                            );
                            (!row.is_empty()).then_some(row)
                        })
                    })
                })
            })
        })
    }

    /// A spanning set of `I_d` restricted to the coordinates of `contents`,
    /// keeping only coordinates accepted by `keep`.
    fn rows_on(&self, contents: &BTreeSet<Content>, keep: impl Fn(&Word) -> bool) -> Vec<Row<Word, F>> {
        let mut out = Vec::new();
        let mut done: BTreeSet<Content> = BTreeSet::new();
        for c in contents {
            if done.contains(c) {
                continue;
            }
            let b = self.block(c).expect("content checked by caller");
            done.extend(b.contents.iter().cloned());
            for r in b.ech.rows() {
                let row: Row<Word, F> = r.iter().filter(|(w, _)| keep(w)).cloned().collect();
                if !row.is_empty() {
                    out.push(row);
                }
            }
            for ct in &b.contents {
                for w in ct.arrangements() {
                    if self.kills(&w) && keep(&w) {
                        out.push(vec![(w, F::one())]);
                    }
                }
            }
        }
        out
    }

    fn check_poly(&self, f: &NCPoly<F>) -> Result<()> {
        if let Some(w) = f.words().find(|w| w.len() != self.degree) {
            return Err(Error::DegreeMismatch { expected: self.degree, found: w.len() });
        }
        for w in f.words() {
            w.check_alphabet(self.n)?;
        }
        Ok(())
    }

    fn grouped(&self, f: &NCPoly<F>) -> Result<Vec<Grouped<F>>> {
        self.check_poly(f)?;
        let mut groups: Vec<Grouped<F>> = Vec::new();
        let mut by_content: HashMap<Content, usize> = HashMap::new();
        for (w, c) in f.terms() {
            if self.kills(w) {
                continue;
            }
            let ct = w.content();
            let idx = match by_content.get(&ct) {
                Some(&i) => i,
                None => {
                    let b = self.block(&ct)?;
                    let i = groups
                        .iter()
                        .position(|(g, _)| Arc::ptr_eq(g, &b))
                        .unwrap_or_else(|| {
                            groups.push((b.clone(), Vec::new()));
                            groups.len() - 1
                        });
                    for other in &b.contents {
                        by_content.insert(other.clone(), i);
                    }
                    i
                }
            };
            groups[idx].1.push((w.clone(), c.clone()));
        }
        Ok(groups.into_iter().map(|(b, t)| (b, to_row(t))).collect())
    }

    /// The normal form of `f` modulo `I_d`.
    pub fn reduce(&self, f: &NCPoly<F>) -> Result<NCPoly<F>> {
        let mut out = NCPoly::zero();
        for (b, row) in self.grouped(f)? {
            for (w, c) in b.ech.reduce(row) {
                out.add_term(w, c);
            }
        }
        Ok(out)
    }

    /// Normal form with the decomposition `f = nf + sum c_p row_p + sum c_w u_w`,
    /// rows named by pivot word, `u_w` killed monomials.
    pub fn reduce_tracking(&self, f: &NCPoly<F>) -> Result<Reduction<F>> {
        let mut nf = NCPoly::zero();
        let mut rows = Vec::new();
        let killed: Vec<(Word, F)> = f
            .terms()
            .filter(|(w, _)| self.kills(w))
            .map(|(w, c)| (w.clone(), c.clone()))
            .collect();
        for (b, row) in self.grouped(f)? {
            let (r, t) = b.ech.reduce_tracking(row);
            for (w, c) in r {
                nf.add_term(w, c);
            }
            rows.extend(t);
        }
        Ok(Reduction { nf, rows, killed })
    }

    pub fn is_member(&self, f: &NCPoly<F>) -> Result<bool> {
        Ok(self.reduce(f)?.is_zero())
    }

    /// The basis row with the given pivot, as a polynomial.
    pub fn row(&self, pivot: &Word) -> Result<Option<NCPoly<F>>> {
        let b = self.block(&pivot.content())?;
        Ok(b.ech.pivot_row(pivot).map(|r| NCPoly::from_terms(r.iter().cloned())))
    }

    /// `dim I_d`; over the restricted content only when restricted.
    pub fn rank(&self) -> Result<usize> {
        let contents = match &self.restrict {
            Some(c) => vec![c.clone()],
            None => crate::word::all_contents(self.n, self.degree),
        };
        let mut done: BTreeSet<Content> = BTreeSet::new();
        let mut total = 0;
        for c in contents {
            if done.contains(&c) {
                continue;
            }
            let b = self.block(&c)?;
            done.extend(b.contents.iter().cloned());
            total += b.rank();
        }
        Ok(total)
    }

    /// Basis of the perp space on the block of `c`: one vector per live non-pivot word.
    pub fn perp_basis(&self, c: &Content) -> Result<Vec<NCPoly<F>>> {
        let b = self.block(c)?;
        let mut out = Vec::new();
        for w in &b.words {
            if b.ech.is_pivot(w) {
                continue;
            }
            let mut g = NCPoly::word(w.clone());
            for r in b.ech.rows() {
                if let Some((_, x)) = r.iter().find(|(k, _)| k == w) {
                    g.add_term(r[0].0.clone(), -x.clone());
                }
            }
            out.push(g);
        }
        Ok(out)
    }

    /// An element of `I_d` pairing nonzero with `gamma`, if any.
    pub fn perp_witness(&self, gamma: &NCPoly<F>) -> Result<Option<NCPoly<F>>> {
        self.check_poly(gamma)?;
        if let Some(r) = &self.restrict {
            if let Some(w) = gamma.words().find(|w| w.content() != *r) {
                return Err(Error::ContentMismatch(w.content().to_string()));
            }
        }
        if let Some(w) = gamma.words().find(|w| self.kills(w)) {
            return Ok(Some(NCPoly::word(w.clone())));
        }
        match &self.source {
            Source::Single(s) => Ok(self.local_witness(s, gamma)),
            Source::Cap(_) => self.row_witness(gamma),
        }
    }

    /// Pair `gamma` with every spanning element `u_L g u_R` touching its support.
    fn local_witness(&self, s: &Single<F>, gamma: &NCPoly<F>) -> Option<NCPoly<F>> {
        for v in gamma.words() {
            let letters = v.letters();
            for g in &s.gens {
                for tw in g.words() {
                    let m = tw.len();
                    if m > letters.len() {
                        continue;
                    }
                    for p in 0..=letters.len() - m {
                        if &letters[p..p + m] != tw.letters() {
                            continue;
                        }
                        let l = Word::from_slice(&letters[..p]);
                        let r = Word::from_slice(&letters[p + m..]);
                        let elem = g.pad(&l, &r);
                        if !elem.pair(gamma).is_zero() {
                            return Some(elem);
                        }
                    }
                }
            }
        }
        None
    }

    /// Pair `gamma` with the echelon rows of each block it meets.
    pub fn row_witness(&self, gamma: &NCPoly<F>) -> Result<Option<NCPoly<F>>> {
        for (b, _) in self.grouped(gamma)? {
            for r in b.ech.rows() {
                let p = NCPoly::from_terms(r.iter().cloned());
                if !p.pair(gamma).is_zero() {
                    return Ok(Some(p));
                }
            }
        }
        Ok(None)
    }

    pub fn in_perp(&self, gamma: &NCPoly<F>) -> Result<bool> {
        Ok(self.perp_witness(gamma)?.is_none())
    }
}

/// Output of [`DegreeBasis::reduce_tracking`].
#[derive(Clone)]
pub struct Reduction<F> {
    pub nf: NCPoly<F>,
    pub rows: Vec<(Word, F)>,
    pub killed: Vec<(Word, F)>,
}

fn homogeneous<F: Field>(f: &NCPoly<F>) -> Result<Option<usize>> {
    f.homogeneous_degree()
}

/// `f - g` in `I`?
pub fn congruent<F: Field>(f: &NCPoly<F>, g: &NCPoly<F>, spec: &IdealSpec) -> Result<bool>
where
    BigInt: Embed<F>,
{
    let diff = f.sub(g);
    match homogeneous(&diff)? {
        None => Ok(true),
        Some(d) => degree_basis::<F>(spec, d, None)?.is_member(&diff),
    }
}

/// Congruence modulo every listed ideal, hence modulo their intersection.
pub fn congruent_all<F: Field>(f: &NCPoly<F>, g: &NCPoly<F>, specs: &[IdealSpec]) -> Result<bool>
where
    BigInt: Embed<F>,
{
    for s in specs {
        if !congruent(f, g, s)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// First generator of `b` (up to degree `dmax`) outside `a`, if any.
pub fn containment_failure<F: Field>(
    a: &IdealSpec,
    b: &IdealSpec,
    dmax: usize,
) -> Result<Option<NCPoly<F>>>
where
    BigInt: Embed<F>,
{
    if a.n != b.n {
        return Err(Error::InvalidSpec("ideals over different alphabets".into()));
    }
    for g in b.generator_list::<F>(dmax)? {
        let Some(d) = homogeneous(&g)? else { continue };
        if !degree_basis::<F>(a, d, None)?.is_member(&g)? {
            return Ok(Some(g));
        }
    }
    Ok(None)
}

/// `a ⊇ b`, checked on the generators of `b` of degree at most `dmax`.
pub fn contains<F: Field>(a: &IdealSpec, b: &IdealSpec, dmax: usize) -> Result<bool>
where
    BigInt: Embed<F>,
{
    Ok(containment_failure::<F>(a, b, dmax)?.is_none())
}

/// `e_k(u_S) e_l(u_S) ≡ e_l(u_S) e_k(u_S)` for all `S ⊆ [n]` and `k + l ≤ dmax`.
pub fn commutation_suite<F: Field>(spec: &IdealSpec, dmax: usize) -> Result<bool>
where
    BigInt: Embed<F>,
{
    Ok(commutation_failure::<F>(spec, dmax)?.is_none())
}

/// The first failing `(S, k, l)`.
pub fn commutation_failure<F: Field>(spec: &IdealSpec, dmax: usize) -> Result<Option<(Vec<u8>, usize, usize)>>
where
    BigInt: Embed<F>,
{
    use crate::nc_schur::elementary;
    let n = spec.n;
    for mask in 1u64..(1u64 << n) {
        let s: Vec<u8> = (1..=n).filter(|&i| mask >> (i - 1) & 1 == 1).collect();
        for k in 1..=s.len() {
            for l in k + 1..=s.len() {
                if k + l > dmax {
                    continue;
                }
                let ek = elementary(k, &s);
                let el = elementary(l, &s);
                let lhs = ek.mul(&el).embed::<F>();
                let rhs = el.mul(&ek).embed::<F>();
                if !congruent(&lhs, &rhs, spec)? {
                    return Ok(Some((s, k, l)));
                }
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::w;
    use num_rational::BigRational;

    type Q = BigRational;

    fn spec(s: &str, n: u8) -> IdealSpec {
        IdealSpec::parse(s, n).unwrap()
    }

    #[test]
    fn rank_of_ist() {
        let b = degree_basis::<Q>(&spec("Ist", 3), 2, None).unwrap();
        assert_eq!(b.rank().unwrap(), 3);
    }

    #[test]
    fn in_perp_local_matches_rows() {
        let b = degree_basis::<Q>(&spec("IS", 3), 3, None).unwrap();
        let gamma = NCPoly::from_terms([(w("213"), Q::from_integer(1.into())), (w("231"), Q::from_integer(1.into()))]);
        let local = b.perp_witness(&gamma).unwrap();
        let rows = b.row_witness(&gamma).unwrap();
        assert_eq!(local.is_none(), rows.is_none());
        assert!(local.is_none());
        let lone = NCPoly::word(w("213"));
        assert!(b.perp_witness(&lone).unwrap().is_some());
        assert!(b.row_witness(&lone).unwrap().is_some());
    }

    #[test]
    fn restricted_mode() {
        let s = spec("IS+Ist", 4);
        let c = Content::of(&[1, 2, 3, 4]);
        let b = degree_basis::<Q>(&s, 4, Some(c)).unwrap();
        assert!(b.block(&Content::of(&[1, 1, 2, 3])).is_err());
        assert!(degree_basis::<Q>(&spec("IS", 4), 4, Some(Content::of(&[1, 2, 3, 4]))).is_err());
    }

    #[test]
    fn ic_congruences() {
        let ic = spec("IC", 2);
        let a = NCPoly::<Q>::word(w("121"));
        let b = NCPoly::<Q>::word(w("212"));
        assert!(!congruent(&a, &b, &ic).unwrap());
        assert!(contains::<Q>(&spec("IS", 3), &spec("IC", 3), 4).unwrap());
        assert!(!contains::<Q>(&spec("IC", 3), &spec("IS", 3), 3).unwrap());
    }
}
