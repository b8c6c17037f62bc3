//! Plactic classes, reduced words, Stanley symmetric functions and the
//! switchboards built from them.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::ideal::{degree_basis, Family, IdealSpec, Semimatched};
use crate::partition::Partition;
use crate::poly::NCPoly;
use crate::switchboard::{build_unique, Flavor, Switchboard};
use crate::symfunc::{fund_from_dual, schur_expand, SchurExpansion};
use crate::tableau::{enumerate, Tableau, TableauKind};
use crate::word::{Content, Letter, Word};

/// Largest permutation size for reduced-word enumeration.
pub const MAX_PERMUTATION: usize = 8;

/// One-line notation of a permutation of `1..=n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<u8>);

impl Permutation {
    pub fn new(one_line: Vec<u8>) -> Result<Self> {
        let n = one_line.len();
        let mut seen = vec![false; n + 1];
        for &x in &one_line {
            let x = x as usize;
            if x == 0 || x > n || seen[x] {
                return Err(Error::Parse(format!("{one_line:?} is not a permutation")));
            }
            seen[x] = true;
        }
        Ok(Permutation(one_line))
    }

    /// `32154`, or comma separated.
    pub fn parse(s: &str) -> Result<Self> {
        Permutation::new(Word::parse(s)?.letters().to_vec())
    }

    pub fn one_line(&self) -> &[u8] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.len()
    }

    pub fn length(&self) -> usize {
        let p = &self.0;
        (0..p.len())
            .flat_map(|i| (i + 1..p.len()).map(move |j| (i, j)))
            .filter(|&(i, j)| p[i] > p[j])
            .count()
    }

    /// Product with the simple transposition `s_i` on the right.
    pub fn times_simple(&self, i: usize) -> Permutation {
        let mut p = self.0.clone();
        p.swap(i - 1, i);
        Permutation(p)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.0.len() as u8;
        write!(f, "{}", Word::from_slice(&self.0).to_text(n))
    }
}

/// Row insertion; the tableau is stored as rows.
pub fn knuth_insert(w: &Word) -> Tableau {
    let mut rows: Vec<Vec<Letter>> = Vec::new();
    for &x in w.letters() {
        let mut x = x;
        let mut r = 0;
        loop {
            if r == rows.len() {
                rows.push(vec![x]);
                break;
            }
            match rows[r].iter().position(|&y| y > x) {
                Some(p) => {
                    std::mem::swap(&mut rows[r][p], &mut x);
                    r += 1;
                }
                None => {
                    rows[r].push(x);
                    break;
                }
            }
        }
    }
    Tableau::from_rows(rows.into_iter().map(|r| r.into_iter().map(Some).collect()).collect())
}

/// All rearrangements of the entries of `t` that insert to `t`.
pub fn plactic_class(t: &Tableau) -> BTreeSet<Word> {
    let letters: Vec<Letter> = t.cells().map(|(_, _, v)| v).collect();
    Content::of(&letters)
        .arrangements()
        .into_iter()
        .filter(|w| knuth_insert(w) == *t)
        .collect()
}

/// Reduced words, as sequences of simple-transposition indices.
pub fn reduced_words(pi: &Permutation) -> Result<BTreeSet<Word>> {
    if pi.size() > MAX_PERMUTATION {
        return Err(Error::InvalidShape(format!(
            "reduced words are enumerated up to size {MAX_PERMUTATION}, got {}",
            pi.size()
        )));
    }
    fn rec(p: &Permutation, memo: &mut HashMap<Permutation, BTreeSet<Word>>) -> BTreeSet<Word> {
        if let Some(hit) = memo.get(p) {
            return hit.clone();
        }
        let mut out = BTreeSet::new();
        let right_descents: Vec<usize> = (1..p.size()).filter(|&i| p.0[i - 1] > p.0[i]).collect();
        if right_descents.is_empty() {
            out.insert(Word::empty());
        }
        for i in right_descents {
            for mut v in rec(&p.times_simple(i), memo) {
                v.push(i as Letter);
                out.insert(v);
            }
        }
        memo.insert(p.clone(), out.clone());
        out
    }
    Ok(rec(pi, &mut HashMap::new()))
}

fn simple_alphabet(pi: &Permutation) -> u8 {
    (pi.size().saturating_sub(1)).max(1) as u8
}

/// Stanley symmetric function computed two ways; they must agree.
pub struct Stanley {
    pub from_descents: SchurExpansion<BigInt>,
    pub from_tableaux: SchurExpansion<BigInt>,
}

pub fn stanley_symmetric(pi: &Permutation) -> Result<Stanley> {
    let red = reduced_words(pi)?;
    let from_descents = schur_expand(&fund_from_dual(&NCPoly::<BigInt>::sum_of_words(&red))?)?;
    let n = simple_alphabet(pi);
    let mut from_tableaux = SchurExpansion::zero();
    for lambda in Partition::all(pi.length()) {
        let count = enumerate(&TableauKind::Ssyt { n }, &lambda)
            .iter()
            .filter(|t| red.contains(&t.colword()))
            .count();
        if count > 0 {
            from_tableaux.add_term(lambda, BigInt::from(count));
        }
    }
    Ok(Stanley { from_descents, from_tableaux })
}

/// The plactic switchboard on the class of `t`.
pub fn plactic_board(t: &Tableau) -> Result<Switchboard> {
    let class = plactic_class(t);
    let n = class.iter().map(Word::max_letter).max().unwrap_or(1).max(1);
    build_unique(&class, &IdealSpec::new(Family::Iplac, n)?)
}

/// The nilplactic switchboard on the reduced words of `pi`.
pub fn nilplactic_board(pi: &Permutation) -> Result<Switchboard> {
    let red = reduced_words(pi)?;
    build_unique(&red, &IdealSpec::new(Family::Inplac, simple_alphabet(pi))?)
}

/// Validity, perp membership for the Hecke ideal, and F of one bundled board.
pub struct HeckeReport {
    pub valid: bool,
    pub in_perp: bool,
    pub symfunc: SchurExpansion<BigInt>,
}

pub fn hecke_report(board: &Switchboard) -> Result<HeckeReport> {
    let spec = IdealSpec::new(Family::IH, board.n())?;
    let gamma: NCPoly<BigRational> = NCPoly::sum_of_words(board.vertices());
    let basis = degree_basis::<BigRational>(&spec, board.word_len(), None)?;
    Ok(HeckeReport {
        valid: board.validate(&Flavor::Plain),
        in_perp: basis.in_perp(&gamma)?,
        symfunc: board.symfunc()?,
    })
}

/// Check the three bundled Hecke boards against their expected functions.
pub fn hecke_fixture_check() -> Result<bool> {
    let expected = ["s31+s22", "s31", "s31"];
    for (text, want) in crate::fixtures::HECKE.iter().zip(expected) {
        let r = hecke_report(&crate::fixtures::board(text))?;
        if !(r.valid && r.in_perp && r.symfunc == SchurExpansion::parse_compact(want)?) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// All permutations of `1..=n` as words, in increasing order.
pub fn permutation_words(n: u8) -> BTreeSet<Word> {
    let letters: Vec<Letter> = (1..=n).collect();
    Content::of(&letters).arrangements().into_iter().collect()
}

/// The triples switchboard on `S_n` with the given rotation triples.
pub fn triples_switchboard(n: u8, rotation: &BTreeSet<[Letter; 3]>) -> Result<Switchboard> {
    let spec = IdealSpec::new(Family::Semimatched(Box::new(Semimatched::triples_ideal(rotation))), n)?;
    build_unique(&permutation_words(n), &spec)
}

/// Multiset of component functions, keyed by their compact text.
pub fn component_functions(board: &Switchboard) -> Result<BTreeMap<SchurKey, usize>> {
    let mut out = BTreeMap::new();
    for c in board.components() {
        *out.entry(SchurKey(c.symfunc()?)).or_insert(0) += 1;
    }
    Ok(out)
}

/// Integer Schur expansion ordered by its terms, usable as a map key.
#[derive(Clone, PartialEq)]
pub struct SchurKey(pub SchurExpansion<BigInt>);

impl SchurKey {
    fn key(&self) -> Vec<(Partition, BigInt)> {
        self.0.terms().map(|(l, c)| (l.clone(), c.clone())).collect()
    }
}

impl Eq for SchurKey {}

impl PartialOrd for SchurKey {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for SchurKey {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.key().cmp(&other.key())
    }
}

impl fmt::Debug for SchurKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::w;

    #[test]
    fn insertion_shapes() {
        assert_eq!(knuth_insert(&w("1234")).shape(), Partition::parse("4").unwrap());
        assert_eq!(knuth_insert(&w("4321")).shape(), Partition::parse("1111").unwrap());
        let t = Tableau::from_full_rows(&[&[1, 1, 2, 2], &[2, 2, 3], &[5, 6, 7]]);
        assert_eq!(knuth_insert(&t.colword()), t);
    }

    #[test]
    fn small_reduced_words() {
        let red = reduced_words(&Permutation::parse("321").unwrap()).unwrap();
        let got: Vec<String> = red.iter().map(|x| x.to_string()).collect();
        assert_eq!(got, vec!["121", "212"]);
        assert_eq!(reduced_words(&Permutation::parse("2134").unwrap()).unwrap().len(), 1);
        assert!(Permutation::parse("1224").is_err());
    }
}
