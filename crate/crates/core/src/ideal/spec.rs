//! Named two-sided ideals of the free algebra and their generators.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::llt::nonzero_k_word;
use crate::poly::NCPoly;
use crate::scalar::{Embed, Field};
use crate::word::{all_words, Letter, Word};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TripleClass {
    Knuth,
    Rotation,
    Undecided,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PairClass {
    Knuth,
    Braid,
    Undecided,
}

/// A monomial ideal described by a membership test on words.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum MonomialIdeal {
    /// Generated by the listed words.
    Words(BTreeSet<Word>),
    /// Words with a repeated letter.
    RepeatedLetter,
    /// Words that are not nonzero `k`-words.
    LamZero(u8),
    Union(Vec<MonomialIdeal>),
}

impl MonomialIdeal {
    pub fn contains(&self, w: &Word) -> bool {
        match self {
            MonomialIdeal::Words(gens) => gens.iter().any(|g| w.contains_factor(g.letters())),
            MonomialIdeal::RepeatedLetter => w.has_repeated_letter(),
            MonomialIdeal::LamZero(k) => !nonzero_k_word(w, *k),
            MonomialIdeal::Union(parts) => parts.iter().any(|p| p.contains(w)),
        }
    }

    /// True when every arrangement of a content is in the ideal, checked cheaply.
    pub(crate) fn kills_every_arrangement(&self, content: &crate::word::Content) -> bool {
        match self {
            MonomialIdeal::RepeatedLetter => content.has_repeat(),
            MonomialIdeal::Union(parts) => parts.iter().any(|p| p.kills_every_arrangement(content)),
            _ => false,
        }
    }

    pub(crate) fn union(parts: Vec<MonomialIdeal>) -> Option<MonomialIdeal> {
        let mut flat = Vec::new();
        for p in parts {
            match p {
                MonomialIdeal::Union(inner) => flat.extend(inner),
                other => flat.push(other),
            }
        }
        match flat.len() {
            0 => None,
            1 => flat.pop(),
            _ => Some(MonomialIdeal::Union(flat)),
        }
    }

    /// Minimal monomial generators up to degree `dmax` over `[n]`.
    pub fn minimal_words(&self, n: u8, dmax: usize) -> Vec<Word> {
        let mut out = Vec::new();
        for d in 1..=dmax {
            for w in all_words(n, d) {
                if self.contains(&w) {
                    let l = w.letters();
                    let prefix = Word::from_slice(&l[..d - 1]);
                    let suffix = Word::from_slice(&l[1..]);
                    if d == 1 || (!self.contains(&prefix) && !self.contains(&suffix)) {
                        out.push(w);
                    }
                }
            }
        }
        out
    }
}

/// Triple and pair classification of a semimatched ideal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Semimatched {
    pub triples: BTreeMap<[Letter; 3], TripleClass>,
    pub default_triple: TripleClass,
    /// Keyed by the smaller letter `a` of `{a, a + 1}`.
    pub pairs: BTreeMap<Letter, PairClass>,
    pub default_pair: PairClass,
    pub monomials: Option<MonomialIdeal>,
}

impl Semimatched {
    pub fn uniform(t: TripleClass, p: PairClass, monomials: Option<MonomialIdeal>) -> Self {
        Semimatched {
            triples: BTreeMap::new(),
            default_triple: t,
            pairs: BTreeMap::new(),
            default_pair: p,
            monomials,
        }
    }

    /// Knuth for `c - a > k`, rotation otherwise; pairs Knuth.
    pub fn assaf(n: u8, k: u8) -> Self {
        let mut triples = BTreeMap::new();
        for [a, b, c] in triples_of(n) {
            let class = if c - a > k {
                TripleClass::Knuth
            } else {
                TripleClass::Rotation
            };
            triples.insert([a, b, c], class);
        }
        Semimatched {
            triples,
            default_triple: TripleClass::Knuth,
            pairs: BTreeMap::new(),
            default_pair: PairClass::Knuth,
            monomials: Some(MonomialIdeal::LamZero(k)),
        }
    }

    /// The triples ideal: listed triples are rotation, the rest Knuth, pairs Knuth.
    pub fn triples_ideal(rotation: &BTreeSet<[Letter; 3]>) -> Self {
        Semimatched {
            triples: rotation.iter().map(|t| (*t, TripleClass::Rotation)).collect(),
            default_triple: TripleClass::Knuth,
            pairs: BTreeMap::new(),
            default_pair: PairClass::Knuth,
            monomials: None,
        }
    }

    pub fn triple(&self, t: [Letter; 3]) -> TripleClass {
        self.triples.get(&t).copied().unwrap_or(self.default_triple)
    }

    pub fn pair(&self, a: Letter) -> PairClass {
        self.pairs.get(&a).copied().unwrap_or(self.default_pair)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    Zero,
    IC,
    IB,
    IS,
    /// `IB + IS`.
    IFG,
    Ist,
    Iplac,
    Inplac,
    InCox,
    IH,
    Iaba(u8),
    Iassaf(u8),
    JlamQ(u8),
    IlamLE(u8),
    Semimatched(Box<Semimatched>),
    Custom { name: String, gens: Vec<NCPoly<BigInt>> },
    Sum(Vec<Family>),
}

/// A family instantiated over the alphabet `[n]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IdealSpec {
    pub family: Family,
    pub n: u8,
}

/// Finite polynomial generators plus an optional monomial ideal.
#[derive(Clone)]
pub struct Generators<F> {
    pub polys: Vec<NCPoly<F>>,
    pub monomials: Option<MonomialIdeal>,
}

pub(crate) fn triples_of(n: u8) -> impl Iterator<Item = [Letter; 3]> {
    (1..=n).flat_map(move |a| {
        (a + 1..=n).flat_map(move |b| (b + 1..=n).map(move |c| [a, b, c]))
    })
}

fn pairs_of(n: u8) -> impl Iterator<Item = (Letter, Letter)> {
    (1..=n).flat_map(move |a| (a + 1..=n).map(move |b| (a, b)))
}

/// Integer combination of words given as digit strings over named letters.
struct Builder<'a> {
    vals: &'a [(char, Letter)],
}

impl Builder<'_> {
    fn word(&self, pattern: &str) -> Word {
        Word::from_slice(
            &pattern
                .chars()
                .map(|ch| self.vals.iter().find(|(c, _)| *c == ch).unwrap().1)
                .collect::<Vec<_>>(),
        )
    }

    /// `(+1, "bba"), (-1, "bab")`, ...
    fn poly(&self, terms: &[(i64, &str)]) -> NCPoly<BigInt> {
        NCPoly::from_terms(terms.iter().map(|(c, p)| (self.word(p), BigInt::from(*c))))
    }
}

fn gens2(n: u8, keep: impl Fn(Letter, Letter) -> bool, terms: &[(i64, &str)]) -> Vec<NCPoly<BigInt>> {
    pairs_of(n)
        .filter(|&(a, b)| keep(a, b))
        .map(|(a, b)| Builder { vals: &[('a', a), ('b', b)] }.poly(terms))
        .collect()
}

fn gens3(
    n: u8,
    keep: impl Fn(Letter, Letter, Letter) -> bool,
    terms: &[(i64, &str)],
) -> Vec<NCPoly<BigInt>> {
    triples_of(n)
        .filter(|&[a, b, c]| keep(a, b, c))
        .map(|[a, b, c]| Builder { vals: &[('a', a), ('b', b), ('c', c)] }.poly(terms))
        .collect()
}

const EQ_QUAD: &[(i64, &str)] = &[(1, "bba"), (1, "aba"), (-1, "bab"), (-1, "baa")];
const EQ_CUBIC3: &[(i64, &str)] = &[(1, "bca"), (1, "acb"), (-1, "bac"), (-1, "cab")];
const EQ_QUARTIC: &[(i64, &str)] = &[(1, "cbca"), (1, "bcac"), (-1, "cbac"), (-1, "bcca")];
const KNUTH_1: &[(i64, &str)] = &[(1, "bac"), (-1, "bca")];
const KNUTH_2: &[(i64, &str)] = &[(1, "acb"), (-1, "cab")];
const ROT_1: &[(i64, &str)] = &[(1, "bac"), (-1, "acb")];
const ROT_2: &[(i64, &str)] = &[(1, "bca"), (-1, "cab")];

fn ic_gens(n: u8) -> Vec<NCPoly<BigInt>> {
    let mut g = gens2(n, |_, _| true, EQ_QUAD);
    g.extend(gens3(n, |_, _, _| true, EQ_CUBIC3));
    g.extend(gens3(n, |_, _, _| true, EQ_QUARTIC));
    g
}

fn is_gens(n: u8) -> Vec<NCPoly<BigInt>> {
    let mut g = gens2(n, |a, b| b - a == 1, EQ_QUAD);
    g.extend(gens2(n, |a, b| b - a >= 2, &[(1, "bba"), (-1, "bab")]));
    g.extend(gens2(n, |a, b| b - a >= 2, &[(1, "baa"), (-1, "aba")]));
    g.extend(gens3(n, |_, _, _| true, EQ_CUBIC3));
    g
}

fn ib_gens(n: u8) -> Vec<NCPoly<BigInt>> {
    let mut g = gens2(n, |_, _| true, EQ_QUAD);
    g.extend(gens3(n, |_, _, _| true, &[(1, "bca"), (-1, "bac")]));
    g.extend(gens3(n, |_, _, _| true, &[(1, "acb"), (-1, "cab")]));
    g
}

fn knuth_gens(n: u8) -> Vec<NCPoly<BigInt>> {
    let mut g = gens3(n, |_, _, _| true, KNUTH_1);
    g.extend(gens3(n, |_, _, _| true, KNUTH_2));
    g
}

fn assaf_binomials(n: u8, k: u8) -> Vec<NCPoly<BigInt>> {
    let mut g = gens3(n, |a, _, c| c - a > k, KNUTH_1);
    g.extend(gens3(n, |a, _, c| c - a > k, KNUTH_2));
    g.extend(gens3(n, |a, _, c| c - a <= k, ROT_1));
    g.extend(gens3(n, |a, _, c| c - a <= k, ROT_2));
    g
}

fn mono_words(ws: impl IntoIterator<Item = Vec<Letter>>) -> Vec<NCPoly<BigInt>> {
    ws.into_iter()
        .map(|w| NCPoly::word(Word::from_slice(&w)))
        .collect()
}

fn squares(n: u8) -> Vec<Vec<Letter>> {
    (1..=n).map(|a| vec![a, a]).collect()
}

fn plac_gens(n: u8) -> Vec<NCPoly<BigInt>> {
    let mut g = Vec::new();
    // u_a u_c u_b - u_c u_a u_b for a <= b < c
    for a in 1..=n {
        for b in a..=n {
            for c in b + 1..=n {
                let w = |x: &[Letter]| Word::from_slice(x);
                g.push(NCPoly::from_terms([
                    (w(&[a, c, b]), BigInt::from(1)),
                    (w(&[c, a, b]), BigInt::from(-1)),
                ]));
            }
        }
    }
    // u_b u_a u_c - u_b u_c u_a for a < b <= c
    for a in 1..=n {
        for b in a + 1..=n {
            for c in b..=n {
                let w = |x: &[Letter]| Word::from_slice(x);
                g.push(NCPoly::from_terms([
                    (w(&[b, a, c]), BigInt::from(1)),
                    (w(&[b, c, a]), BigInt::from(-1)),
                ]));
            }
        }
    }
    g
}

fn semimatched_gens(n: u8, s: &Semimatched) -> Vec<NCPoly<BigInt>> {
    let mut g = is_gens(n);
    for t @ [a, b, c] in triples_of(n) {
        let bld = Builder { vals: &[('a', a), ('b', b), ('c', c)] };
        match s.triple(t) {
            TripleClass::Knuth => {
                g.push(bld.poly(&[(1, "acb"), (-1, "cab")]));
                g.push(bld.poly(&[(1, "bac"), (-1, "bca")]));
            }
            TripleClass::Rotation => {
                g.push(bld.poly(&[(1, "acb"), (-1, "bac")]));
                g.push(bld.poly(&[(1, "cab"), (-1, "bca")]));
            }
            TripleClass::Undecided => {}
        }
    }
    for a in 1..n {
        let bld = Builder { vals: &[('a', a), ('b', a + 1)] };
        match s.pair(a) {
            PairClass::Knuth => {
                g.push(bld.poly(&[(1, "aba"), (-1, "baa")]));
                g.push(bld.poly(&[(1, "bab"), (-1, "bba")]));
            }
            PairClass::Braid => {
                g.push(bld.poly(&[(1, "aba"), (-1, "bab")]));
                g.push(bld.poly(&[(1, "baa"), (-1, "bba")]));
            }
            PairClass::Undecided => {}
        }
    }
    g
}

impl IdealSpec {
    pub fn new(family: Family, n: u8) -> Result<Self> {
        if n == 0 || n > crate::word::MAX_LETTER {
            return Err(Error::AlphabetBound(n as usize));
        }
        let spec = IdealSpec { family, n };
        spec.validate(&spec.family)?;
        Ok(spec)
    }

    fn validate(&self, f: &Family) -> Result<()> {
        match f {
            Family::Iaba(k) | Family::Iassaf(k) | Family::JlamQ(k) | Family::IlamLE(k) if *k == 0 => {
                Err(Error::InvalidSpec("k must be positive".into()))
            }
            Family::Custom { gens, .. } => {
                for g in gens {
                    g.homogeneous_degree()?;
                    if g.max_letter() > self.n {
                        return Err(Error::InvalidSpec(format!(
                            "generator {g} uses letters beyond {}",
                            self.n
                        )));
                    }
                }
                Ok(())
            }
            Family::Sum(parts) => parts.iter().try_for_each(|p| self.validate(p)),
            _ => Ok(()),
        }
    }

    pub fn sum(parts: Vec<IdealSpec>) -> Result<Self> {
        let n = parts.first().map(|p| p.n).ok_or_else(|| Error::InvalidSpec("empty sum".into()))?;
        if parts.iter().any(|p| p.n != n) {
            return Err(Error::InvalidSpec("sum of ideals over different alphabets".into()));
        }
        Ok(IdealSpec {
            family: Family::Sum(parts.into_iter().map(|p| p.family).collect()),
            n,
        })
    }

    pub fn plus(&self, other: Family) -> IdealSpec {
        IdealSpec {
            family: Family::Sum(vec![self.family.clone(), other]),
            n: self.n,
        }
    }

    /// Whether generators need coefficients in `Q(q)`.
    pub fn needs_q(&self) -> bool {
        fn rec(f: &Family) -> bool {
            match f {
                Family::JlamQ(_) => true,
                Family::Sum(parts) => parts.iter().any(rec),
                _ => false,
            }
        }
        rec(&self.family)
    }

    pub fn generators<F: Field>(&self) -> Result<Generators<F>>
    where
        BigInt: Embed<F>,
    {
        let mut polys = Vec::new();
        let mut monos = Vec::new();
        self.collect::<F>(&self.family, &mut polys, &mut monos)?;
        let mut seen = BTreeSet::new();
        let mut unique = Vec::new();
        for p in polys {
            let key = format!("{p:?}");
            if !p.is_zero() && seen.insert(key) {
                unique.push(p);
            }
        }
        Ok(Generators {
            polys: unique,
            monomials: MonomialIdeal::union(monos),
        })
    }

    fn collect<F: Field>(
        &self,
        f: &Family,
        polys: &mut Vec<NCPoly<F>>,
        monos: &mut Vec<MonomialIdeal>,
    ) -> Result<()>
    where
        BigInt: Embed<F>,
    {
        let n = self.n;
        let ints: Vec<NCPoly<BigInt>> = match f {
            Family::Zero => vec![],
            Family::IC => ic_gens(n),
            Family::IB => ib_gens(n),
            Family::IS => is_gens(n),
            Family::IFG => {
                let mut g = ib_gens(n);
                g.extend(is_gens(n));
                g
            }
            Family::Ist => {
                monos.push(MonomialIdeal::RepeatedLetter);
                vec![]
            }
            Family::Iplac => plac_gens(n),
            Family::Inplac => {
                let mut g = mono_words(squares(n));
                g.extend(mono_words(
                    pairs_of(n)
                        .filter(|(a, c)| c - a >= 2)
                        .flat_map(|(a, c)| [vec![a, c, a], vec![c, a, c]]),
                ));
                g.extend(knuth_gens(n));
                g.extend(gens2(n, |a, b| b - a == 1, &[(1, "aba"), (-1, "bab")]));
                g
            }
            Family::InCox => {
                let mut g = mono_words(squares(n));
                g.extend(gens2(n, |a, b| b - a >= 2, &[(1, "ab"), (-1, "ba")]));
                g.extend(gens2(n, |a, b| b - a == 1, &[(1, "aba"), (-1, "bab")]));
                g
            }
            Family::IH => {
                let mut g = knuth_gens(n);
                g.extend(gens2(n, |a, b| b - a == 1, &[(1, "aba"), (-1, "bab")]));
                g.extend(gens2(n, |a, b| b - a == 1, &[(1, "bba"), (-1, "baa")]));
                // The switchboard relations, so that IH contains IB + IS.
                g.extend(is_gens(n));
                g
            }
            Family::Iaba(k) => {
                let mut g = mono_words(squares(n));
                g.extend(mono_words(
                    pairs_of(n).flat_map(|(a, b)| [vec![a, b, a], vec![b, a, b]]),
                ));
                g.extend(assaf_binomials(n, *k));
                g
            }
            Family::Iassaf(k) => {
                monos.push(MonomialIdeal::LamZero(*k));
                assaf_binomials(n, *k)
            }
            Family::IlamLE(k) => {
                monos.push(MonomialIdeal::LamZero(*k));
                let mut g = gens2(n, |a, b| b - a > *k, &[(1, "ab"), (-1, "ba")]);
                g.extend(gens3(
                    n,
                    |a, _, c| c - a <= *k,
                    &[(1, "bac"), (1, "cab"), (-1, "bca"), (-1, "acb")],
                ));
                g
            }
            Family::JlamQ(k) => {
                let q = F::q().ok_or_else(|| Error::NeedsQ(format!("JlamQ:{k}")))?;
                let k = *k;
                let one = || F::from_i64(1);
                let w = |x: &[Letter]| Word::from_slice(x);
                for a in 1..=n {
                    polys.push(NCPoly::word(w(&[a, a])));
                    if a as usize + k as usize <= n as usize {
                        let b = a + k;
                        polys.push(NCPoly::word(w(&[b, a, b])));
                        polys.push(NCPoly::word(w(&[a, b, a])));
                    }
                }
                for (a, b) in pairs_of(n) {
                    if b - a > k {
                        polys.push(NCPoly::from_terms([(w(&[a, b]), one()), (w(&[b, a]), -one())]));
                    } else if b - a < k {
                        // q u_a u_b - u_b u_a, a unit multiple of u_a u_b - q^{-1} u_b u_a
                        polys.push(NCPoly::from_terms([(w(&[a, b]), q.clone()), (w(&[b, a]), -one())]));
                    }
                }
                vec![]
            }
            Family::Semimatched(s) => {
                if let Some(m) = &s.monomials {
                    monos.push(m.clone());
                }
                semimatched_gens(n, s)
            }
            Family::Custom { gens, .. } => gens.clone(),
            Family::Sum(parts) => {
                for p in parts {
                    self.collect(p, polys, monos)?;
                }
                vec![]
            }
        };
        polys.extend(ints.iter().map(|g| g.embed::<F>()));
        Ok(())
    }

    /// Generator list for display: polynomial generators plus the minimal
    /// monomial generators of degree at most `dmax`.
    pub fn generator_list<F: Field>(&self, dmax: usize) -> Result<Vec<NCPoly<F>>>
    where
        BigInt: Embed<F>,
    {
        let g = self.generators::<F>()?;
        let mut out = g.polys;
        out.retain(|p| p.degree().is_some_and(|d| d <= dmax));
        if let Some(m) = &g.monomials {
            out.extend(m.minimal_words(self.n, dmax).into_iter().map(NCPoly::word));
        }
        Ok(out)
    }

    /// The triple and pair classification, when the ideal is semimatched.
    pub fn semimatched_view(&self) -> Option<Semimatched> {
        fn view(f: &Family, n: u8) -> Option<(Option<Semimatched>, Vec<MonomialIdeal>)> {
            use PairClass as P;
            use TripleClass as T;
            let words = |ws: Vec<Vec<Letter>>| {
                MonomialIdeal::Words(ws.into_iter().map(|w| Word::from_slice(&w)).collect())
            };
            let s = match f {
                Family::IS => Semimatched::uniform(T::Undecided, P::Undecided, None),
                Family::IFG => Semimatched::uniform(T::Knuth, P::Undecided, None),
                Family::Iplac => Semimatched::uniform(T::Knuth, P::Knuth, None),
                Family::IH => Semimatched::uniform(T::Knuth, P::Braid, None),
                Family::Inplac => {
                    let mut ws = squares(n);
                    ws.extend(
                        pairs_of(n)
                            .filter(|(a, c)| c - a >= 2)
                            .flat_map(|(a, c)| [vec![a, c, a], vec![c, a, c]]),
                    );
                    Semimatched::uniform(T::Knuth, P::Braid, Some(words(ws)))
                }
                Family::Iaba(k) => {
                    let mut s = Semimatched::assaf(n, *k);
                    let mut ws = squares(n);
                    ws.extend(pairs_of(n).flat_map(|(a, b)| [vec![a, b, a], vec![b, a, b]]));
                    s.monomials = Some(words(ws));
                    s
                }
                Family::Iassaf(k) => Semimatched::assaf(n, *k),
                Family::Semimatched(s) => (**s).clone(),
                Family::Ist => return Some((None, vec![MonomialIdeal::RepeatedLetter])),
                Family::Sum(parts) => {
                    let mut base: Option<Semimatched> = None;
                    let mut monos = Vec::new();
                    for p in parts {
                        let (s, m) = view(p, n)?;
                        monos.extend(m);
                        if let Some(s) = s {
                            if base.is_some() {
                                return None;
                            }
                            base = Some(s);
                        }
                    }
                    return Some((base, monos));
                }
                _ => return None,
            };
            Some((Some(s), vec![]))
        }
        let (base, monos) = view(&self.family, self.n)?;
        let mut s = base?;
        let mut all = monos;
        if let Some(m) = s.monomials.take() {
            all.push(m);
        }
        s.monomials = MonomialIdeal::union(all);
        Some(s)
    }

    /// Grammar: sums of family names joined by `+`, e.g. `IS+Ist`, `Iaba:3`.
    pub fn parse(s: &str, n: u8) -> Result<Self> {
        let parts: Vec<Family> = s
            .split('+')
            .map(|p| parse_family(p.trim()))
            .collect::<Result<_>>()?;
        let family = if parts.len() == 1 {
            parts.into_iter().next().unwrap()
        } else {
            Family::Sum(parts)
        };
        IdealSpec::new(family, n)
    }
}

fn parse_family(s: &str) -> Result<Family> {
    let (name, param) = match s.split_once(':') {
        Some((a, b)) => (a.trim(), Some(b.trim())),
        None => (s, None),
    };
    let k = || -> Result<u8> {
        param
            .ok_or_else(|| Error::Parse(format!("{name} needs a parameter, as in {name}:3")))?
            .parse::<u8>()
            .map_err(|_| Error::Parse(format!("bad parameter in {s:?}")))
    };
    let plain = |f: Family| -> Result<Family> {
        if param.is_some() {
            Err(Error::Parse(format!("{name} takes no parameter")))
        } else {
            Ok(f)
        }
    };
    match name {
        "0" | "Zero" => plain(Family::Zero),
        "IC" => plain(Family::IC),
        "IB" => plain(Family::IB),
        "IS" => plain(Family::IS),
        "IFG" => plain(Family::IFG),
        "Ist" => plain(Family::Ist),
        "Iplac" => plain(Family::Iplac),
        "Inplac" => plain(Family::Inplac),
        "InCox" => plain(Family::InCox),
        "IH" => plain(Family::IH),
        "Iaba" => Ok(Family::Iaba(k()?)),
        "Iassaf" => Ok(Family::Iassaf(k()?)),
        "JlamQ" => Ok(Family::JlamQ(k()?)),
        "IlamLE" => Ok(Family::IlamLE(k()?)),
        _ => Err(Error::Parse(format!("unknown ideal family {name:?}"))),
    }
}

/// An ideal or an intersection of ideals, as accepted by the CLI.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum IdealExpr {
    Spec(IdealSpec),
    Cap(Vec<IdealSpec>),
}

impl IdealExpr {
    /// `IS+Ist`, `cap(IS, IB)`, or `cap(Iassaf:1..5 + Ist)` which expands the range.
    pub fn parse(s: &str, n: u8) -> Result<Self> {
        let s = s.trim();
        let Some(inner) = s.strip_prefix("cap(").and_then(|r| r.strip_suffix(')')) else {
            return Ok(IdealExpr::Spec(IdealSpec::parse(s, n)?));
        };
        let mut specs = Vec::new();
        for item in inner.split(',') {
            let item = item.trim();
            match find_range(item) {
                Some((start, end, lo, hi)) => {
                    for k in lo..=hi {
                        let text = format!("{}{}{}", &item[..start], k, &item[end..]);
                        specs.push(IdealSpec::parse(&text, n)?);
                    }
                }
                None => specs.push(IdealSpec::parse(item, n)?),
            }
        }
        if specs.is_empty() {
            return Err(Error::Parse("empty intersection".into()));
        }
        Ok(IdealExpr::Cap(specs))
    }

    pub fn specs(&self) -> Vec<IdealSpec> {
        match self {
            IdealExpr::Spec(s) => vec![s.clone()],
            IdealExpr::Cap(v) => v.clone(),
        }
    }

    pub fn n(&self) -> u8 {
        match self {
            IdealExpr::Spec(s) => s.n,
            IdealExpr::Cap(v) => v[0].n,
        }
    }

    pub fn needs_q(&self) -> bool {
        self.specs().iter().any(IdealSpec::needs_q)
    }
}

/// Locate `lo..hi` in an item; returns byte span and bounds.
fn find_range(s: &str) -> Option<(usize, usize, u8, u8)> {
    let dots = s.find("..")?;
    let start = s[..dots]
        .rfind(|c: char| !c.is_ascii_digit())
        .map_or(0, |p| p + 1);
    let rest = &s[dots + 2..];
    let len = rest
        .find(|c: char| !c.is_ascii_digit())
        .unwrap_or(rest.len());
    let lo = s[start..dots].parse().ok()?;
    let hi = rest[..len].parse().ok()?;
    Some((start, dots + 2 + len, lo, hi))
}

impl fmt::Display for IdealSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn name(f: &Family) -> String {
            match f {
                Family::Zero => "0".into(),
                Family::IC => "IC".into(),
                Family::IB => "IB".into(),
                Family::IS => "IS".into(),
                Family::IFG => "IFG".into(),
                Family::Ist => "Ist".into(),
                Family::Iplac => "Iplac".into(),
                Family::Inplac => "Inplac".into(),
                Family::InCox => "InCox".into(),
                Family::IH => "IH".into(),
                Family::Iaba(k) => format!("Iaba:{k}"),
                Family::Iassaf(k) => format!("Iassaf:{k}"),
                Family::JlamQ(k) => format!("JlamQ:{k}"),
                Family::IlamLE(k) => format!("IlamLE:{k}"),
                Family::Semimatched(_) => "Semimatched".into(),
                Family::Custom { name, .. } => name.clone(),
                Family::Sum(parts) => parts.iter().map(name).collect::<Vec<_>>().join("+"),
            }
        }
        write!(f, "{} (N={})", name(&self.family), self.n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    #[test]
    fn generator_counts() {
        let ic = IdealSpec::parse("IC", 2).unwrap();
        assert_eq!(ic.generators::<BigRational>().unwrap().polys.len(), 1);
        let is = IdealSpec::parse("IS", 3).unwrap();
        assert_eq!(is.generators::<BigRational>().unwrap().polys.len(), 5);
        let st = IdealSpec::parse("Ist", 2).unwrap();
        let list = st.generator_list::<BigRational>(2).unwrap();
        let words: Vec<String> = list.iter().map(|p| format!("{p}")).collect();
        assert_eq!(words, vec!["u11", "u22"]);
    }

    #[test]
    fn jlam_needs_q() {
        let j = IdealSpec::parse("JlamQ:3", 4).unwrap();
        assert!(matches!(j.generators::<BigRational>(), Err(Error::NeedsQ(_))));
        assert!(j.generators::<crate::scalar::RatFunc>().is_ok());
    }

    #[test]
    fn cap_grammar() {
        let e = IdealExpr::parse("cap(Iassaf:1..5 + Ist)", 6).unwrap();
        let IdealExpr::Cap(v) = e else { panic!() };
        assert_eq!(v.len(), 5);
        assert_eq!(v[2].to_string(), "Iassaf:3+Ist (N=6)");
        assert!(IdealSpec::parse("Ifoo", 3).is_err());
        assert!(IdealSpec::parse("Iaba", 3).is_err());
    }
}
