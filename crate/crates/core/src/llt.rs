//! Skew shape tuples, k-inversions and LLT polynomials.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::ideal::{Family, IdealSpec};
use crate::partition::{parse_parts, Composition, Partition};
use crate::poly::NCPoly;
use crate::scalar::Laurent;
use crate::switchboard::{build_unique, Switchboard};
use crate::symfunc::{schur_expand, FundExpansion, SchurExpansion};
use crate::tableau::rsst_with_content;
use crate::word::{Letter, Word};

/// For every `i < j` with `v_i = v_j` there are `i < s < t < j` with
/// `{v_s, v_t} = {v_i - k, v_i + k}`.
pub fn nonzero_k_word(v: &Word, k: u8) -> bool {
    let l = v.letters();
    let k = k as i32;
    for i in 0..l.len() {
        for j in i + 1..l.len() {
            if l[i] != l[j] {
                continue;
            }
            let a = l[i] as i32;
            let (lo, hi) = (a - k, a + k);
            let mut seen_lo = false;
            let mut seen_hi = false;
            let mut ok = false;
            for &x in &l[i + 1..j] {
                let x = x as i32;
                if (x == lo && seen_hi) || (x == hi && seen_lo) {
                    ok = true;
                    break;
                }
                seen_lo |= x == lo;
                seen_hi |= x == hi;
            }
            if !ok {
                return false;
            }
        }
    }
    true
}

/// Pairs `i < j` with `0 < v_i - v_j < k`.
pub fn inv_k(v: &Word, k: u8) -> usize {
    let l = v.letters();
    let mut n = 0;
    for i in 0..l.len() {
        for j in i + 1..l.len() {
            let d = l[i] as i32 - l[j] as i32;
            if d > 0 && d < k as i32 {
                n += 1;
            }
        }
    }
    n
}

/// `outer / inner` placed in the quadrant; rows and columns are 1-based.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SkewShape {
    outer: Vec<usize>,
    inner: Vec<usize>,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::InvalidShape(format!("{inner} is not inside {outer}")));
        }
        let outer = outer.parts().to_vec();
        let mut inner = inner.parts().to_vec();
        inner.resize(outer.len(), 0);
        Ok(SkewShape { outer, inner })
    }

    pub fn straight(outer: Partition) -> Self {
        SkewShape::new(outer, Partition::empty()).expect("empty inner shape")
    }

    pub fn outer(&self) -> Partition {
        Partition::new(self.outer.clone()).expect("weakly decreasing")
    }

    pub fn inner(&self) -> Partition {
        Partition::new(self.inner.clone()).expect("weakly decreasing")
    }

    /// Shift `dx` columns right and `dy` rows down.
    pub fn translate(&self, dx: usize, dy: usize) -> SkewShape {
        let top = self.outer.first().map_or(0, |r| r + dx);
        let mut outer = vec![top; dy];
        let mut inner = vec![top; dy];
        outer.extend(self.outer.iter().map(|r| r + dx));
        inner.extend(self.inner.iter().map(|r| r + dx));
        SkewShape { outer, inner }
    }

    pub fn cells(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (i, (&o, &n)) in self.outer.iter().zip(&self.inner).enumerate() {
            for j in n + 1..=o {
                out.push((i + 1, j));
            }
        }
        out
    }

    pub fn size(&self) -> usize {
        self.outer.iter().sum::<usize>() - self.inner.iter().sum::<usize>()
    }

    /// Content `column - row` of a cell.
    pub fn content(row: usize, col: usize) -> i64 {
        col as i64 - row as i64
    }

    /// `outer` or `outer/inner`, optionally followed by `@dx` or `@dx,dy`.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        let (body, shift) = match s.split_once('@') {
            Some((b, t)) => (b, Some(t)),
            None => (s, None),
        };
        let (o, i) = body.split_once('/').unwrap_or((body, ""));
        let part = |x: &str| {
            if x.trim().is_empty() {
                Ok(Partition::empty())
            } else {
                Partition::new(parse_parts(x.trim())?)
            }
        };
        let shape = SkewShape::new(part(o)?, part(i)?)?;
        match shift {
            None => Ok(shape),
            Some(t) => {
                let bad = || Error::Parse(format!("bad translation in {s:?}"));
                let nums: Vec<usize> = t
                    .split(',')
                    .map(|x| x.trim().parse().map_err(|_| bad()))
                    .collect::<Result<_>>()?;
                match nums[..] {
                    [dx] => Ok(shape.translate(dx, 0)),
                    [dx, dy] => Ok(shape.translate(dx, dy)),
                    _ => Err(bad()),
                }
            }
        }
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let j = |v: &[usize]| v.iter().map(ToString::to_string).collect::<Vec<_>>().join(",");
        let inner: Vec<usize> = self.inner.iter().copied().filter(|&x| x > 0).collect();
        if inner.is_empty() {
            write!(f, "{}", j(&self.outer))
        } else {
            write!(f, "{}/{}", j(&self.outer), j(&inner))
        }
    }
}

/// A `k`-tuple of skew shapes; `k` is the number of components.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SkewTuple {
    shapes: Vec<SkewShape>,
}

/// A cell of a tuple with its shifted content.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct ContentCell {
    pub component: usize,
    pub row: usize,
    pub col: usize,
    pub shifted: i64,
}

impl SkewTuple {
    pub fn new(shapes: Vec<SkewShape>) -> Result<Self> {
        if shapes.is_empty() {
            return Err(Error::InvalidShape("empty tuple".into()));
        }
        Ok(SkewTuple { shapes })
    }

    /// Components separated by `;`.
    pub fn parse(s: &str) -> Result<Self> {
        SkewTuple::new(s.split(';').map(SkewShape::parse).collect::<Result<_>>()?)
    }

    pub fn level(&self) -> usize {
        self.shapes.len()
    }

    pub fn shapes(&self) -> &[SkewShape] {
        &self.shapes
    }

    pub fn size(&self) -> usize {
        self.shapes.iter().map(SkewShape::size).sum()
    }

    /// Move every component `dx` columns right.
    pub fn translate(&self, dx: usize) -> SkewTuple {
        SkewTuple { shapes: self.shapes.iter().map(|s| s.translate(dx, 0)).collect() }
    }

    /// `c(z) k + r` for every cell `z` of component `r`.
    pub fn shifted_contents(&self) -> Vec<ContentCell> {
        let k = self.level() as i64;
        let mut out = Vec::new();
        for (r, s) in self.shapes.iter().enumerate() {
            for (row, col) in s.cells() {
                out.push(ContentCell {
                    component: r,
                    row,
                    col,
                    shifted: SkewShape::content(row, col) * k + r as i64,
                });
            }
        }
        out
    }

    /// The shifted contents as letters; every one must lie in `1..=63`.
    pub fn letter_multiset(&self) -> Result<Vec<Letter>> {
        let mut out = Vec::new();
        for c in self.shifted_contents() {
            if !(1..=63).contains(&c.shifted) {
                return Err(Error::InvalidShape(format!(
                    "shifted content {} of cell ({}, {}) in component {} is outside 1..=63",
                    c.shifted, c.row, c.col, c.component
                )));
            }
            out.push(c.shifted as Letter);
        }
        out.sort_unstable();
        Ok(out)
    }

    /// Largest shifted content, the natural alphabet size.
    pub fn alphabet(&self) -> Result<u8> {
        Ok(self.letter_multiset()?.last().copied().unwrap_or(1).max(1))
    }

    /// Words acting on the inner tuple to give the outer tuple, sorted.
    pub fn words(&self) -> Result<Vec<Word>> {
        let total = self.letter_multiset()?.len();
        let k = self.level();
        let mut state: Vec<Vec<usize>> = self.shapes.iter().map(|s| s.inner.clone()).collect();
        let mut out = Vec::new();
        let mut cur: Vec<Letter> = Vec::with_capacity(total);
        self.extend(k, total, &mut state, &mut cur, &mut out);
        out.sort();
        Ok(out)
    }

    fn extend(
        &self,
        k: usize,
        total: usize,
        state: &mut [Vec<usize>],
        cur: &mut Vec<Letter>,
        out: &mut Vec<Word>,
    ) {
        if cur.len() == total {
            out.push(Word::from_slice(cur));
            return;
        }
        for r in 0..k {
            let outer = &self.shapes[r].outer;
            for i in 0..outer.len() {
                let len = state[r][i];
                let fits = len < outer[i] && (i == 0 || state[r][i - 1] > len);
                if !fits {
                    continue;
                }
                let c = SkewShape::content(i + 1, len + 1);
                cur.push((c * k as i64 + r as i64) as Letter);
                state[r][i] += 1;
                self.extend(k, total, state, cur, out);
                state[r][i] -= 1;
                cur.pop();
            }
        }
    }

    /// Words grouped by their `k`-inversion number.
    pub fn level_sets(&self) -> Result<BTreeMap<usize, BTreeSet<Word>>> {
        let k = self.level() as u8;
        let mut out: BTreeMap<usize, BTreeSet<Word>> = BTreeMap::new();
        for v in self.words()? {
            out.entry(inv_k(&v, k)).or_default().insert(v);
        }
        Ok(out)
    }

    /// `sum q^{inv_k(v)} v` over the words of the tuple.
    pub fn q_vector(&self) -> Result<NCPoly<Laurent>> {
        let k = self.level() as u8;
        Ok(NCPoly::from_terms(
            self.words()?
                .into_iter()
                .map(|v| {
                    let e = inv_k(&v, k) as i32;
                    (v, Laurent::q_pow(e))
                }),
        ))
    }
}

impl fmt::Display for SkewTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.shapes.iter().map(ToString::to_string).collect();
        f.write_str(&parts.join(";"))
    }
}

/// The LLT polynomial in both bases.
pub struct LltPolynomial {
    pub fundamental: FundExpansion<Laurent>,
    pub schur: SchurExpansion<Laurent>,
}

pub fn llt_polynomial(beta: &SkewTuple) -> Result<LltPolynomial> {
    let k = beta.level() as u8;
    let mut fundamental = FundExpansion::zero(beta.size());
    for v in beta.words()? {
        let alpha = Composition::from_descent_set(v.len(), &v.descent_set());
        fundamental.add_term(alpha, Laurent::q_pow(inv_k(&v, k) as i32));
    }
    let schur = schur_expand(&fundamental)?;
    Ok(LltPolynomial { fundamental, schur })
}

/// The Assaf ideal of the tuple's level over its natural alphabet.
pub fn assaf_spec(beta: &SkewTuple) -> Result<IdealSpec> {
    IdealSpec::new(Family::Iassaf(beta.level() as u8), beta.alphabet()?)
}

/// The unique level-`k` Assaf switchboard on the words with `inv_k = t`.
pub fn llt_switchboard(beta: &SkewTuple, t: usize) -> Result<Switchboard> {
    let spec = assaf_spec(beta)?;
    let levels = beta.level_sets()?;
    match levels.get(&t) {
        Some(ws) => build_unique(ws, &spec),
        None => Ok(Switchboard::empty(spec.n)),
    }
}

/// All nonempty LLT switchboards, keyed by `t`.
pub fn llt_switchboards(beta: &SkewTuple) -> Result<BTreeMap<usize, Switchboard>> {
    let spec = assaf_spec(beta)?;
    beta.level_sets()?
        .into_iter()
        .map(|(t, ws)| Ok((t, build_unique(&ws, &spec)?)))
        .collect()
}

fn laurent_schur(parts: impl IntoIterator<Item = (i32, SchurExpansion<BigInt>)>) -> SchurExpansion<Laurent> {
    let mut out = SchurExpansion::zero();
    for (t, s) in parts {
        for (l, c) in s.terms() {
            out.add_term(l.clone(), Laurent::monomial(c.clone(), t));
        }
    }
    out
}

/// `sum_t q^t F` over the LLT switchboards.
pub fn llt_via_boards(beta: &SkewTuple) -> Result<SchurExpansion<Laurent>> {
    let boards = llt_switchboards(beta)?;
    let mut parts = Vec::new();
    for (t, b) in boards {
        parts.push((t as i32, b.symfunc()?));
    }
    Ok(laurent_schur(parts))
}

/// Level 3 Schur coefficients from row-strict tableaux whose square reading
/// word lies in the word set.
pub fn schur_coeffs_sqread(beta: &SkewTuple) -> Result<SchurExpansion<Laurent>> {
    if beta.level() != 3 {
        return Err(Error::InvalidShape(format!("square reading needs level 3, got {}", beta.level())));
    }
    let words: BTreeSet<Word> = beta.words()?.into_iter().collect();
    let content = beta.letter_multiset()?;
    let mut out = SchurExpansion::zero();
    for lambda in Partition::all(content.len()) {
        let mut c = Laurent::zero();
        for t in rsst_with_content(&lambda, &content) {
            let v = t.sqread();
            if words.contains(&v) {
                c = c + Laurent::q_pow(inv_k(&v, 3) as i32);
            }
        }
        if !c.is_zero() {
            out.add_term(lambda, c);
        }
    }
    Ok(out)
}

/// q-Schur expansion grouped by power: `q^t : s..+s..` lines.
pub fn q_expansion_lines(s: &SchurExpansion<Laurent>) -> Vec<(i32, SchurExpansion<BigInt>)> {
    let mut powers = BTreeSet::new();
    for (_, c) in s.terms() {
        powers.extend(c.terms().map(|(e, _)| e));
    }
    powers.into_iter().map(|t| (t, s.at_power(t))).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::w;

    #[test]
    fn inversions() {
        assert_eq!(inv_k(&w("42173845"), 3), 4);
        assert_eq!(inv_k(&w("1234"), 3), 0);
    }

    #[test]
    fn nonzero_words() {
        assert!(nonzero_k_word(&w("4174"), 3));
        assert!(!nonzero_k_word(&w("141"), 3));
        assert!(!nonzero_k_word(&w("11"), 3));
    }

    #[test]
    fn single_column_has_one_word() {
        let b = SkewTuple::parse("111@3,0").unwrap();
        assert_eq!(b.words().unwrap().len(), 1);
    }

    #[test]
    fn tuple_grammar() {
        let b = SkewTuple::parse("2/1;1;2").unwrap();
        assert_eq!(b.level(), 3);
        assert_eq!(b.letter_multiset().unwrap(), vec![1, 2, 3, 5]);
        assert_eq!(b.to_string(), "2/1;1;2");
        assert!(SkewTuple::parse("1;1;11").unwrap().letter_multiset().is_err());
    }
}
