//! Brute-force oracles shared by the integration tests.

#![allow(dead_code)]

use num_rational::BigRational;
use num_traits::Zero;

use ncschur::ideal::IdealSpec;
use ncschur::poly::NCPoly;
use ncschur::word::{all_words, Word};

pub type Q = BigRational;

/// All `u g v` of degree exactly `d`, straight from the generator list.
pub fn spanning_set(spec: &IdealSpec, d: usize) -> Vec<NCPoly<Q>> {
    let n = spec.n;
    let mut out = Vec::new();
    for g in spec.generator_list::<Q>(d).unwrap() {
        let Some(dg) = g.degree() else { continue };
        for left in 0..=d - dg {
            for u in all_words(n, left) {
                for v in all_words(n, d - dg - left) {
                    out.push(g.pad(&u, &v));
                }
            }
        }
    }
    out
}

/// Row echelon form over the dense coordinate space of `words`.
pub struct Dense {
    words: Vec<Word>,
    rows: Vec<(usize, Vec<Q>)>,
}

impl Dense {
    pub fn new(n: u8, d: usize, span: &[NCPoly<Q>]) -> Self {
        let mut words: Vec<Word> = all_words(n, d).collect();
        words.sort();
        let mut me = Dense { words, rows: Vec::new() };
        for p in span {
            let v = me.reduce_dense(me.coords(p));
            if let Some(piv) = v.iter().position(|x| !x.is_zero()) {
                let inv = v[piv].clone();
                let v: Vec<Q> = v.into_iter().map(|x| x / inv.clone()).collect();
                me.rows.push((piv, v));
            }
        }
        me
    }

    fn coords(&self, p: &NCPoly<Q>) -> Vec<Q> {
        let mut v = vec![Q::zero(); self.words.len()];
        for (w, c) in p.terms() {
            let i = self.words.binary_search(w).expect("word outside the coordinate space");
            v[i] = c.clone();
        }
        v
    }

    fn reduce_dense(&self, mut v: Vec<Q>) -> Vec<Q> {
        for (piv, row) in &self.rows {
            if v[*piv].is_zero() {
                continue;
            }
            let c = v[*piv].clone();
            for (x, r) in v.iter_mut().zip(row) {
                *x -= c.clone() * r;
            }
        }
        v
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn contains(&self, p: &NCPoly<Q>) -> bool {
        self.reduce_dense(self.coords(p)).iter().all(Zero::is_zero)
    }
}

/// Every element of `span` pairs to zero with `gamma`.
pub fn orthogonal_to_all(gamma: &NCPoly<Q>, span: &[NCPoly<Q>]) -> bool {
    span.iter().all(|g| g.pair(gamma).is_zero())
}
