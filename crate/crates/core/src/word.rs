//! Words in the letters `1..=N` and their combinatorics.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use smallvec::SmallVec;

use crate::error::{Error, Result};

pub type Letter = u8;

pub const MAX_LETTER: u8 = 63;
pub const MAX_LEN: usize = 63;

/// A word `w_1 w_2 ... w_n`. Ordered by length, then lexicographically.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Word(SmallVec<[Letter; 16]>);

impl Word {
    pub fn empty() -> Self {
        Word(SmallVec::new())
    }

    pub fn new(letters: &[Letter]) -> Result<Self> {
        if letters.len() > MAX_LEN {
            return Err(Error::WordTooLong(letters.len()));
        }
        if let Some(&bad) = letters.iter().find(|&&l| l == 0 || l > MAX_LETTER) {
            return Err(Error::LetterOutOfRange(bad as u32, MAX_LETTER));
        }
        Ok(Word(SmallVec::from_slice(letters)))
    }

    /// Build without validation; letters must be in `1..=63`.
    pub fn from_slice(letters: &[Letter]) -> Self {
        debug_assert!(letters.iter().all(|&l| (1..=MAX_LETTER).contains(&l)));
        Word(SmallVec::from_slice(letters))
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn max_letter(&self) -> Letter {
        self.0.iter().copied().max().unwrap_or(0)
    }

    /// Check every letter lies in `1..=n`.
    pub fn check_alphabet(&self, n: u8) -> Result<()> {
        match self.0.iter().find(|&&l| l > n) {
            Some(&l) => Err(Error::LetterOutOfRange(l as u32, n)),
            None => Ok(()),
        }
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn push(&mut self, l: Letter) {
        self.0.push(l);
    }

    /// Positions `i` (1-based) with `w_i > w_{i+1}`.
    pub fn descent_set(&self) -> BTreeSet<usize> {
        descent_set(&self.0)
    }

    pub fn has_repeated_letter(&self) -> bool {
        let mut seen = 0u64;
        for &l in &self.0 {
            let bit = 1u64 << l;
            if seen & bit != 0 {
                return true;
            }
            seen |= bit;
        }
        false
    }

    pub fn content(&self) -> Content {
        Content::of(&self.0)
    }

    /// Does `other` occur as a contiguous factor?
    pub fn contains_factor(&self, other: &[Letter]) -> bool {
        other.is_empty() || self.0.windows(other.len()).any(|w| w == other)
    }

    /// Text form: digits when every letter is below 10 and `n <= 9`,
    /// otherwise comma separated. The empty word prints as `()`.
    pub fn to_text(&self, n: u8) -> String {
        if self.0.is_empty() {
            return "()".into();
        }
        if n <= 9 && self.max_letter() <= 9 {
            self.0.iter().map(|l| char::from(b'0' + l)).collect()
        } else {
            self.0
                .iter()
                .map(|l| l.to_string())
                .collect::<Vec<_>>()
                .join(",")
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "()" || s.is_empty() {
            return Ok(Word::empty());
        }
        let bad = || Error::Parse(format!("bad word {s:?}"));
        let letters: Vec<u8> = if s.contains(',') {
            s.split(',')
                .map(|p| p.trim().parse::<u8>().map_err(|_| bad()))
                .collect::<Result<_>>()?
        } else {
            s.chars()
                .map(|c| c.to_digit(10).map(|d| d as u8).ok_or_else(bad))
                .collect::<Result<_>>()?
        };
        Word::new(&letters)
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text(self.max_letter()))
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "u{self}")
    }
}

impl From<&[Letter]> for Word {
    fn from(v: &[Letter]) -> Self {
        Word::from_slice(v)
    }
}

/// Shorthand for tests and fixtures: `w("4174")`. Panics on bad input.
pub fn w(s: &str) -> Word {
    Word::parse(s).expect("valid word literal")
}

pub fn descent_set(letters: &[Letter]) -> BTreeSet<usize> {
    letters
        .windows(2)
        .enumerate()
        .filter(|(_, p)| p[0] > p[1])
        .map(|(i, _)| i + 1)
        .collect()
}

/// Multiset of letters, stored sorted.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Content(SmallVec<[Letter; 16]>);

impl Content {
    pub fn of(letters: &[Letter]) -> Content {
        let mut v = SmallVec::from_slice(letters);
        v.sort_unstable();
        Content(v)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn has_repeat(&self) -> bool {
        self.0.windows(2).any(|p| p[0] == p[1])
    }

    /// Multiset difference, if `other` is contained in `self`.
    pub fn minus(&self, other: &Content) -> Option<Content> {
        let mut out = SmallVec::new();
        let mut j = 0;
        for &l in &self.0 {
            if j < other.0.len() && other.0[j] == l {
                j += 1;
            } else if j < other.0.len() && other.0[j] < l {
                return None;
            } else {
                out.push(l);
            }
        }
        (j == other.0.len()).then_some(Content(out))
    }

    pub fn plus(&self, other: &Content) -> Content {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        v.sort_unstable();
        Content(v)
    }

    /// All distinct arrangements of the multiset, in increasing order.
    pub fn arrangements(&self) -> Vec<Word> {
        let mut out = Vec::new();
        let mut cur = self.0.clone();
        loop {
            out.push(Word(cur.clone()));
            if !next_permutation(&mut cur) {
                break;
            }
        }
        out
    }

    /// Number of distinct arrangements.
    pub fn arrangement_count(&self) -> u128 {
        let mut total: u128 = 1;
        let mut k: u128 = 0;
        let mut i = 0;
        while i < self.0.len() {
            let mut j = i;
            while j < self.0.len() && self.0[j] == self.0[i] {
                j += 1;
                k += 1;
                total = total * k / (j - i) as u128;
            }
            i = j;
        }
        total
    }
}

impl fmt::Debug for Content {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", Word(self.0.clone()).to_text(63))
    }
}

impl fmt::Display for Content {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Lexicographic successor in place; false when already the last arrangement.
pub fn next_permutation<T: Ord>(v: &mut [T]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// All words of length `len` over `1..=n`, in lexicographic order.
pub fn all_words(n: u8, len: usize) -> impl Iterator<Item = Word> {
    let total = (n as u64).checked_pow(len as u32).unwrap_or(0);
    (0..total).map(move |mut idx| {
        let mut letters = vec![0u8; len];
        for slot in letters.iter_mut().rev() {
            *slot = (idx % n as u64) as u8 + 1;
            idx /= n as u64;
        }
        Word::from_slice(&letters)
    })
}

/// All multisets of size `len` drawn from `1..=n`.
pub fn all_contents(n: u8, len: usize) -> Vec<Content> {
    fn rec(start: u8, n: u8, left: usize, cur: &mut Vec<u8>, out: &mut Vec<Content>) {
        if left == 0 {
            out.push(Content::of(cur));
            return;
        }
        for l in start..=n {
            cur.push(l);
            rec(l, n, left - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(1, n, len, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn descents() {
        let d: Vec<usize> = w("42173845").descent_set().into_iter().collect();
        assert_eq!(d, vec![1, 2, 4, 6]);
    }

    #[test]
    fn order_is_length_then_lex() {
        assert!(w("9") < w("11"));
        assert!(w("12") < w("21"));
    }

    #[test]
    fn text_forms() {
        assert_eq!(w("321").to_text(3), "321");
        let big = Word::new(&[10, 2]).unwrap();
        assert_eq!(big.to_text(12), "10,2");
        assert_eq!(Word::parse("10,2").unwrap(), big);
        assert!(Word::new(&[64]).is_err());
    }

    #[test]
    fn arrangements_count() {
        let c = Content::of(&[1, 1, 2, 3]);
        assert_eq!(c.arrangements().len(), 12);
        assert_eq!(c.arrangement_count(), 12);
        assert_eq!(all_contents(3, 2).len(), 6);
        assert_eq!(all_words(3, 3).count(), 27);
    }

    #[test]
    fn multiset_minus() {
        let c = Content::of(&[1, 2, 2, 4]);
        assert_eq!(c.minus(&Content::of(&[2, 4])), Some(Content::of(&[1, 2])));
        assert_eq!(c.minus(&Content::of(&[3])), None);
    }
}
