//! Quasisymmetric functions in the fundamental basis and Schur expansions.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::partition::{Composition, Partition};
use crate::poly::NCPoly;
use crate::scalar::{Embed, Laurent, Ring};
use crate::tableau::{enumerate, TableauKind};

/// `sum c_alpha Q_alpha` with all compositions of one size `n`.
#[derive(Clone, PartialEq)]
pub struct FundExpansion<R> {
    degree: usize,
    terms: BTreeMap<Composition, R>,
}

impl<R: Ring> FundExpansion<R> {
    pub fn zero(degree: usize) -> Self {
        FundExpansion {
            degree,
            terms: BTreeMap::new(),
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Composition, &R)> {
        self.terms.iter()
    }

    pub fn coeff(&self, alpha: &Composition) -> R {
        self.terms.get(alpha).cloned().unwrap_or_else(R::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, alpha: Composition, c: R) {
        debug_assert_eq!(alpha.size(), self.degree);
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(alpha.clone()).or_insert_with(R::zero);
        *slot = slot.clone() + c;
        if slot.is_zero() {
            self.terms.remove(&alpha);
        }
    }

    pub fn add_scaled(&mut self, c: &R, other: &FundExpansion<R>) {
        for (a, x) in &other.terms {
            self.add_term(a.clone(), c.clone() * x.clone());
        }
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> FundExpansion<S> {
        let mut out = FundExpansion::zero(self.degree);
        for (a, c) in &self.terms {
            out.add_term(a.clone(), f(c));
        }
        out
    }

    /// Lines `<composition> : <coefficient>`.
    pub fn to_text(&self) -> String {
        self.terms
            .iter()
            .map(|(a, c)| format!("{} : {}\n", a, c))
            .collect()
    }

    /// Terms keyed by descent set, the `Q_{D}` notation.
    pub fn by_descent_set(&self) -> BTreeMap<Vec<usize>, R> {
        self.terms
            .iter()
            .map(|(a, c)| (a.descent_set().into_iter().collect(), c.clone()))
            .collect()
    }
}

impl<R: Ring> fmt::Debug for FundExpansion<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(a, c)| format!("{c}*Q[{a}]"))
            .collect();
        write!(f, "{}", if parts.is_empty() { "0".into() } else { parts.join(" + ") })
    }
}

/// `F_gamma = sum gamma_w Q_{Des(w)}` for a homogeneous dual vector.
pub fn fund_from_dual<R: Ring>(gamma: &NCPoly<R>) -> Result<FundExpansion<R>> {
    let n = gamma.homogeneous_degree()?.unwrap_or(0);
    let mut out = FundExpansion::zero(n);
    for (w, c) in gamma.terms() {
        out.add_term(Composition::from_descent_set(n, &w.descent_set()), c.clone());
    }
    Ok(out)
}

/// `s_lambda = sum_{T in SYT(lambda)} Q_{Des(T)}`.
pub fn schur_to_fund(lambda: &Partition) -> FundExpansion<BigInt> {
    static CACHE: OnceLock<Mutex<HashMap<Partition, FundExpansion<BigInt>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(hit) = cache.lock().unwrap().get(lambda) {
        return hit.clone();
    }
    let n = lambda.size();
    let mut out = FundExpansion::zero(n);
    for t in enumerate(&TableauKind::Syt, lambda) {
        out.add_term(
            Composition::from_descent_set(n, &t.standard_descents()),
            BigInt::one(),
        );
    }
    cache.lock().unwrap().insert(lambda.clone(), out.clone());
    out
}

/// `sum c_lambda s_lambda`; zero coefficients are never stored.
#[derive(Clone, PartialEq)]
pub struct SchurExpansion<R> {
    terms: BTreeMap<Partition, R>,
}

impl<R: Ring> Default for SchurExpansion<R> {
    fn default() -> Self {
        SchurExpansion {
            terms: BTreeMap::new(),
        }
    }
}

impl<R: Ring> SchurExpansion<R> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Partition, R)>) -> Self {
        let mut out = Self::zero();
        for (l, c) in terms {
            out.add_term(l, c);
        }
        out
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &R)> {
        self.terms.iter()
    }

    pub fn coeff(&self, lambda: &Partition) -> R {
        self.terms.get(lambda).cloned().unwrap_or_else(R::zero)
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

    pub fn add_term(&mut self, lambda: Partition, c: R) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(lambda.clone()).or_insert_with(R::zero);
        *slot = slot.clone() + c;
        if slot.is_zero() {
            self.terms.remove(&lambda);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (l, c) in &other.terms {
            out.add_term(l.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &R) -> Self {
        Self::from_terms(self.terms.iter().map(|(l, x)| (l.clone(), c.clone() * x.clone())))
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> SchurExpansion<S> {
        SchurExpansion::from_terms(self.terms.iter().map(|(l, c)| (l.clone(), f(c))))
    }

    /// Back to the fundamental basis.
    pub fn to_fund(&self, degree: usize) -> FundExpansion<R>
    where
        BigInt: Embed<R>,
    {
        let mut out = FundExpansion::zero(degree);
        for (l, c) in &self.terms {
            out.add_scaled(c, &schur_to_fund(l).map(|x| x.embed()));
        }
        out
    }

    /// Lines `<partition> : <coefficient>` in canonical order.
    pub fn to_text(&self) -> String {
        self.terms
            .iter()
            .map(|(l, c)| format!("{} : {}\n", l, c))
            .collect()
    }
}

impl SchurExpansion<BigInt> {
    /// Parse the compact notation `s32+s311-2s222` (single-digit parts only).
    pub fn parse_compact(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("bad Schur expression {s:?}"));
        let src: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let mut out = Self::zero();
        if src == "0" {
            return Ok(out);
        }
        let mut rest = src.as_str();
        while !rest.is_empty() {
            let (sign, body) = match rest.as_bytes()[0] {
                b'-' => (-1, &rest[1..]),
                b'+' => (1, &rest[1..]),
                _ => (1, rest),
            };
            let spos = body.find('s').ok_or_else(bad)?;
            let coeff: i64 = if spos == 0 {
                1
            } else {
                body[..spos].parse().map_err(|_| bad())?
            };
            let after = &body[spos + 1..];
            let end = after.find(['+', '-']).unwrap_or(after.len());
            let lambda = Partition::parse(&after[..end])?;
            out.add_term(lambda, BigInt::from(sign * coeff));
            rest = &after[end..];
        }
        Ok(out)
    }
}

impl SchurExpansion<Laurent> {
    /// Lines `q^t : <partition> : <coefficient>`, grouped by the power of q.
    pub fn to_q_text(&self) -> String {
        let mut by_power: BTreeMap<i32, Vec<(Partition, BigInt)>> = BTreeMap::new();
        for (l, c) in &self.terms {
            for (e, x) in c.terms() {
                by_power.entry(e).or_default().push((l.clone(), x.clone()));
            }
        }
        let mut s = String::new();
        for (e, items) in by_power {
            for (l, x) in items {
                s.push_str(&format!("q^{e} : {l} : {x}\n"));
            }
        }
        s
    }

    /// Coefficient of `q^t`.
    pub fn at_power(&self, t: i32) -> SchurExpansion<BigInt> {
        SchurExpansion::from_terms(self.terms.iter().map(|(l, c)| (l.clone(), c.coeff(t))))
    }
}

impl<R: Ring> fmt::Debug for SchurExpansion<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(l, c)| format!("({c})s[{l}]"))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Peel off Schur functions from the lexicographically largest composition
/// downward. Fails if that composition is ever not a partition.
pub fn schur_expand<R: Ring>(f: &FundExpansion<R>) -> Result<SchurExpansion<R>>
where
    BigInt: Embed<R>,
{
    let mut rest = f.clone();
    let mut out = SchurExpansion::zero();
    while let Some((top, c)) = rest.terms.iter().next_back() {
        let Some(lambda) = top.to_partition() else {
            return Err(Error::NotSymmetric(top.to_text()));
        };
        let c = c.clone();
        let s = schur_to_fund(&lambda).map(|x| x.embed());
        rest.add_scaled(&-c.clone(), &s);
        out.add_term(lambda, c);
    }
    Ok(out)
}

/// `<J_lambda(u), gamma>` over the letters `[n]`.
pub fn schur_coeff_via_pairing(lambda: &Partition, gamma: &NCPoly<BigInt>, n: u8) -> Result<BigInt> {
    if let Some(d) = gamma.homogeneous_degree()? {
        if d != lambda.size() {
            return Err(Error::DegreeMismatch { expected: lambda.size(), found: d });
        }
    }
    Ok(crate::nc_schur::nc_schur_e(lambda, n).pair(gamma))
}

/// Expand into monomials in `n` variables (`n` = degree) and test invariance
/// under permutations of the exponent vector.
pub fn is_symmetric<R: Ring>(f: &FundExpansion<R>) -> bool {
    let n = f.degree;
    if n == 0 {
        return true;
    }
    let mut mono: HashMap<Vec<u8>, R> = HashMap::new();
    for (alpha, c) in &f.terms {
        let des = alpha.descent_set();
        // i_1 <= ... <= i_n in [n], strict at descents.
        let mut seq = vec![1u8; n];
        fn rec<R: Ring>(
            k: usize,
            n: usize,
            des: &std::collections::BTreeSet<usize>,
            seq: &mut Vec<u8>,
            c: &R,
            mono: &mut HashMap<Vec<u8>, R>,
        ) {
            if k == n {
                let mut exps = vec![0u8; n];
                for &i in seq.iter() {
                    exps[i as usize - 1] += 1;
                }
                let slot = mono.entry(exps).or_insert_with(R::zero);
                *slot = slot.clone() + c.clone();
                return;
            }
            let lo = if k == 0 {
                1
            } else if des.contains(&k) {
                seq[k - 1] + 1
            } else {
                seq[k - 1]
            };
            for v in lo..=n as u8 {
                seq[k] = v;
                rec(k + 1, n, des, seq, c, mono);
            }
        }
        rec(0, n, &des, &mut seq, c, &mut mono);
    }
    let zero = R::zero();
    mono.iter().all(|(exps, c)| {
        (0..n - 1).all(|i| {
            let mut swapped = exps.clone();
            swapped.swap(i, i + 1);
            mono.get(&swapped).unwrap_or(&zero) == c
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::w;

    #[test]
    fn schur_peeling_round_trip() {
        for n in 1..=5 {
            for l in Partition::all(n) {
                let f = schur_to_fund(&l);
                assert!(is_symmetric(&f));
                let s = schur_expand(&f).unwrap();
                assert_eq!(s, SchurExpansion::from_terms([(l.clone(), BigInt::one())]));
            }
        }
    }

    #[test]
    fn single_fundamental_is_not_symmetric() {
        let mut f = FundExpansion::<BigInt>::zero(3);
        f.add_term(Composition::parse("1|2").unwrap(), BigInt::one());
        assert!(!is_symmetric(&f));
        assert!(matches!(schur_expand(&f), Err(Error::NotSymmetric(_))));
    }

    #[test]
    fn dual_of_a_decreasing_word() {
        let g = NCPoly::<BigInt>::word(w("21"));
        let f = fund_from_dual(&g).unwrap();
        let s = schur_expand(&f).unwrap();
        assert_eq!(s, SchurExpansion::parse_compact("s11").unwrap());
    }

    #[test]
    fn compact_notation() {
        let s = SchurExpansion::parse_compact("s321+s2211-s222").unwrap();
        assert_eq!(s.len(), 3);
        assert_eq!(s.coeff(&Partition::parse("222").unwrap()), BigInt::from(-1));
    }
}
