//! Sparse elements of the free associative algebra and of its graded dual.

use std::collections::BTreeMap;
use std::fmt;


use crate::error::{Error, Result};
use crate::scalar::{Embed, Ring};
use crate::word::{Content, Word};

/// Finite sum of words with nonzero coefficients, kept in canonical order.
///
/// The same type represents dual vectors `gamma = sum gamma_w w`; the pairing
/// is the coefficientwise inner product.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct NCPoly<R> {
    terms: BTreeMap<Word, R>,
}

impl<R: Ring> Default for NCPoly<R> {
    fn default() -> Self {
        NCPoly {
            terms: BTreeMap::new(),
        }
    }
}

impl<R: Ring> NCPoly<R> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::word(Word::empty())
    }

    pub fn word(w: Word) -> Self {
        Self::term(w, R::one())
    }

    pub fn term(w: Word, c: R) -> Self {
        let mut p = Self::zero();
        p.add_term(w, c);
        p
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Word, R)>) -> Self {
        let mut p = Self::zero();
        for (w, c) in terms {
            p.add_term(w, c);
        }
        p
    }

    /// Sum of the listed words, each with coefficient one.
    pub fn sum_of_words<'a>(ws: impl IntoIterator<Item = &'a Word>) -> Self {
        Self::from_terms(ws.into_iter().map(|w| (w.clone(), R::one())))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Word, &R)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> impl Iterator<Item = (Word, R)> {
        self.terms.into_iter()
    }

    pub fn words(&self) -> impl Iterator<Item = &Word> {
        self.terms.keys()
    }

    pub fn coeff(&self, w: &Word) -> R {
        self.terms.get(w).cloned().unwrap_or_else(R::zero)
    }

    pub fn get(&self, w: &Word) -> Option<&R> {
        self.terms.get(w)
    }

    pub fn add_term(&mut self, w: Word, c: R) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&w) {
            Some(slot) => {
                let v = std::mem::replace(slot, R::zero()) + c;
                if v.is_zero() {
                    self.terms.remove(&w);
                } else {
                    *slot = v;
                }
            }
            None => {
                self.terms.insert(w, c);
            }
        }
    }

    /// `self += c * other`.
    pub fn add_scaled(&mut self, c: &R, other: &NCPoly<R>) {
        for (w, x) in &other.terms {
            self.add_term(w.clone(), c.clone() * x.clone());
        }
    }

    pub fn scale(&self, c: &R) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        NCPoly {
            terms: self
                .terms
                .iter()
                .map(|(w, x)| (w.clone(), c.clone() * x.clone()))
                .filter(|(_, x)| !x.is_zero())
                .collect(),
        }
    }

    pub fn neg(&self) -> Self {
        self.scale(&-R::one())
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_scaled(&R::one(), other);
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_scaled(&-R::one(), other);
        out
    }

    /// Concatenation product.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                out.add_term(a.concat(b), x.clone() * y.clone());
            }
        }
        out
    }

    /// `u_left * self * u_right`.
    pub fn pad(&self, left: &Word, right: &Word) -> Self {
        NCPoly {
            terms: self
                .terms
                .iter()
                .map(|(w, c)| (left.concat(w).concat(right), c.clone()))
                .collect(),
        }
    }

    /// Coefficientwise inner product, the pairing `<f, gamma>`.
    pub fn pair(&self, gamma: &Self) -> R {
        let (small, big) = if self.len() <= gamma.len() {
            (self, gamma)
        } else {
            (gamma, self)
        };
        let mut acc = R::zero();
        for (w, c) in &small.terms {
            if let Some(d) = big.terms.get(w) {
                acc = acc + c.clone() * d.clone();
            }
        }
        acc
    }

    /// Degree if homogeneous (`None` for zero).
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().next().map(Word::len)
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut it = self.terms.keys();
        match it.next() {
            None => true,
            Some(first) => it.all(|w| w.len() == first.len()),
        }
    }

    pub fn homogeneous_degree(&self) -> Result<Option<usize>> {
        let d = self.degree();
        if let Some(bad) = self.terms.keys().find(|w| Some(w.len()) != d) {
            return Err(Error::DegreeMismatch {
                expected: d.unwrap_or(0),
                found: bad.len(),
            });
        }
        Ok(d)
    }

    pub fn max_letter(&self) -> u8 {
        self.terms.keys().map(Word::max_letter).max().unwrap_or(0)
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> NCPoly<S> {
        NCPoly::from_terms(self.terms.iter().map(|(w, c)| (w.clone(), f(c))))
    }

    pub fn embed<S: Ring>(&self) -> NCPoly<S>
    where
        R: Embed<S>,
    {
        self.map(|c| c.embed())
    }

    /// Keep only the terms whose word satisfies `keep`.
    pub fn filter(&self, keep: impl Fn(&Word) -> bool) -> Self {
        NCPoly {
            terms: self
                .terms
                .iter()
                .filter(|(w, _)| keep(w))
                .map(|(w, c)| (w.clone(), c.clone()))
                .collect(),
        }
    }

    /// Split into content-homogeneous pieces.
    pub fn by_content(&self) -> BTreeMap<Content, NCPoly<R>> {
        let mut out: BTreeMap<Content, NCPoly<R>> = BTreeMap::new();
        for (w, c) in &self.terms {
            out.entry(w.content())
                .or_default()
                .terms
                .insert(w.clone(), c.clone());
        }
        out
    }

    /// Render as `c u_w + ...` for messages.
    pub fn to_text(&self, n: u8) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut s = String::new();
        for (i, (w, c)) in self.terms.iter().enumerate() {
            let cs = c.to_string();
            let neg = cs.starts_with('-');
            if i > 0 {
                s.push_str(if neg { " - " } else { " + " });
            } else if neg {
                s.push('-');
            }
            let mag = if neg { &cs[1..] } else { &cs[..] };
            if mag != "1" {
                if mag.contains(['+', '-', '/']) {
                    s.push_str(&format!("({mag})"));
                } else {
                    s.push_str(mag);
                }
                s.push('*');
            }
            s.push('u');
            s.push_str(&w.to_text(n));
        }
        s
    }

    /// Vector-file lines: `<coefficient> <word>`.
    pub fn to_vec_file(&self, n: u8) -> String {
        let mut s = String::new();
        for (w, c) in &self.terms {
            s.push_str(&format!("{} {}\n", c, w.to_text(n)));
        }
        s
    }

    /// Parse vector-file text; `#` starts a comment. A bare word means coefficient one.
    pub fn parse_vec_file(text: &str) -> Result<Self> {
        let mut p = Self::zero();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (c, w) = match line.rsplit_once(char::is_whitespace) {
                Some((c, w)) => (R::parse_scalar(c)?, Word::parse(w)?),
                None => (R::one(), Word::parse(line)?),
            };
            if w.len() > crate::word::MAX_LEN {
                return Err(Error::Parse(format!("line {}: word too long", lineno + 1)));
            }
            p.add_term(w, c);
        }
        Ok(p)
    }
}

impl<R: Ring> fmt::Debug for NCPoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text(self.max_letter()))
    }
}

impl<R: Ring> fmt::Display for NCPoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text(self.max_letter()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::w;
    use num_bigint::BigInt;

    type P = NCPoly<BigInt>;

    #[test]
    fn product_and_pairing() {
        let a = P::from_terms([(w("1"), 1.into()), (w("2"), 2.into())]);
        let b = P::from_terms([(w("1"), 3.into())]);
        let ab = a.mul(&b);
        assert_eq!(ab.coeff(&w("21")), BigInt::from(6));
        assert_eq!(ab.pair(&P::word(w("11"))), BigInt::from(3));
        assert!(a.sub(&a).is_zero());
    }

    #[test]
    fn vec_file_round_trip() {
        let p = P::from_terms([(w("321"), 2.into()), (w("123"), (-1).into())]);
        let q = P::parse_vec_file(&p.to_vec_file(3)).unwrap();
        assert_eq!(p, q);
        let r = P::parse_vec_file("# header\n12\n-3 21  # trailing\n").unwrap();
        assert_eq!(r.coeff(&w("21")), BigInt::from(-3));
    }
}
