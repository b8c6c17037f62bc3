//! Sparse row echelon forms over a field.

use std::collections::{BTreeMap, HashMap};
use std::hash::Hash;

use crate::scalar::Field;

/// A sparse vector stored with keys in decreasing order.
pub type Row<K, F> = Vec<(K, F)>;

/// Rows with distinct pivots; the pivot of a row is its largest key and has
/// coefficient one.
#[derive(Clone, Debug)]
pub struct Echelon<K, F> {
    rows: Vec<Row<K, F>>,
    pivots: HashMap<K, usize>,
    reduced: bool,
}

impl<K: Ord + Clone + Hash, F: Field> Default for Echelon<K, F> {
    fn default() -> Self {
        Echelon {
            rows: Vec::new(),
            pivots: HashMap::new(),
            reduced: true,
        }
    }
}

/// `a - c * b` for rows sorted by decreasing key.
fn sub_scaled<K: Ord + Clone, F: Field>(a: &[(K, F)], c: &F, b: &[(K, F)]) -> Row<K, F> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let take_a = j >= b.len() || (i < a.len() && a[i].0 > b[j].0);
        let take_b = i >= a.len() || (j < b.len() && b[j].0 > a[i].0);
        if take_a {
            out.push(a[i].clone());
            i += 1;
        } else if take_b {
            out.push((b[j].0.clone(), -(c.clone() * b[j].1.clone())));
            j += 1;
        } else {
            let v = a[i].1.clone() - c.clone() * b[j].1.clone();
            if !v.is_zero() {
                out.push((a[i].0.clone(), v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

pub fn to_row<K: Ord + Clone, F: Field>(terms: impl IntoIterator<Item = (K, F)>) -> Row<K, F> {
    let mut m: BTreeMap<K, F> = BTreeMap::new();
    for (k, c) in terms {
        let e = m.entry(k).or_insert_with(F::zero);
        *e = e.clone() + c;
    }
    m.into_iter().rev().filter(|(_, c)| !c.is_zero()).collect()
}

impl<K: Ord + Clone + Hash, F: Field> Echelon<K, F> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_pivot(&self, k: &K) -> bool {
        self.pivots.contains_key(k)
    }

    pub fn pivot_row(&self, k: &K) -> Option<&Row<K, F>> {
        self.pivots.get(k).map(|&i| &self.rows[i])
    }

    pub fn rows(&self) -> impl Iterator<Item = &Row<K, F>> {
        self.rows.iter()
    }

    /// Top-reduce and add a row; returns false if it was already in the span.
    pub fn insert(&mut self, mut row: Row<K, F>) -> bool {
        while let Some((k, c)) = row.first() {
            match self.pivots.get(k) {
                Some(&i) => {
                    let c = c.clone();
                    row = sub_scaled(&row, &c, &self.rows[i]);
                }
                None => break,
            }
        }
        let Some((k, c)) = row.first() else {
            return false;
        };
        let k = k.clone();
        if !c.is_one() {
            let inv = c.inv();
            for (_, v) in row.iter_mut() {
                *v = v.clone() * inv.clone();
            }
        }
        self.pivots.insert(k, self.rows.len());
        self.rows.push(row);
        self.reduced = false;
        true
    }

    /// Back-substitute so that no pivot key appears in another row.
    pub fn finalize(&mut self) {
        if self.reduced {
            return;
        }
        let mut order: Vec<usize> = (0..self.rows.len()).collect();
        order.sort_by(|&a, &b| self.rows[a][0].0.cmp(&self.rows[b][0].0));
        let mut done: HashMap<K, usize> = HashMap::new();
        for &i in &order {
            let row = std::mem::take(&mut self.rows[i]);
            let (head, tail) = row.split_first().unwrap();
            let tail = Self::reduce_with(&self.rows, &done, tail.to_vec(), None);
            let mut full = vec![head.clone()];
            full.extend(tail);
            done.insert(head.0.clone(), i);
            self.rows[i] = full;
        }
        self.reduced = true;
    }

    fn reduce_with(
        rows: &[Row<K, F>],
        pivots: &HashMap<K, usize>,
        mut f: Row<K, F>,
        mut track: Option<&mut Vec<(K, F)>>,
    ) -> Row<K, F> {
        let mut out: Row<K, F> = Vec::new();
        while !f.is_empty() {
            // Move leading non-pivot terms to the output.
            let pos = f.iter().position(|(k, _)| pivots.contains_key(k));
            match pos {
                None => {
                    out.extend(f);
                    break;
                }
                Some(p) => {
                    out.extend(f.drain(..p));
                    let (k, c) = f[0].clone();
                    let r = &rows[pivots[&k]];
                    if let Some(t) = track.as_deref_mut() {
                        t.push((k, c.clone()));
                    }
                    f = sub_scaled(&f, &c, r);
                }
            }
        }
        out
    }

    /// Normal form of `f` modulo the row span.
    pub fn reduce(&self, f: Row<K, F>) -> Row<K, F> {
        Self::reduce_with(&self.rows, &self.pivots, f, None)
    }

    /// Normal form together with the multiples of pivot rows subtracted:
    /// `f = nf + sum c_k row_k`.
    pub fn reduce_tracking(&self, f: Row<K, F>) -> (Row<K, F>, Vec<(K, F)>) {
        let mut t = Vec::new();
        let nf = Self::reduce_with(&self.rows, &self.pivots, f, Some(&mut t));
        (nf, t)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;
    use num_traits::FromPrimitive;

    fn r(v: i64) -> BigRational {
        BigRational::from_i64(v).unwrap()
    }

    #[test]
    fn echelon_basics() {
        let mut e: Echelon<u32, BigRational> = Echelon::new();
        assert!(e.insert(to_row([(3, r(2)), (1, r(2))])));
        assert!(e.insert(to_row([(3, r(1)), (2, r(1))])));
        assert!(!e.insert(to_row([(2, r(1)), (1, r(-1))])));
        e.finalize();
        assert_eq!(e.rank(), 2);
        for row in e.rows() {
            for (k, _) in &row[1..] {
                assert!(!e.is_pivot(k));
            }
        }
        assert!(e.reduce(to_row([(3, r(5)), (2, r(-5))])).iter().all(|(k, _)| *k == 1));
        let (nf, t) = e.reduce_tracking(to_row([(3, r(1))]));
        let mut back = nf.clone();
        for (k, c) in &t {
            back = sub_scaled(&back, &-c.clone(), e.pivot_row(k).unwrap());
        }
        assert_eq!(back, to_row([(3, r(1))]));
    }
}
