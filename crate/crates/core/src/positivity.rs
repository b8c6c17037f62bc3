//! Monomial positivity modulo an ideal: an exact cone-membership LP with
//! certificates both ways, and the search over one-word-per-class sums.

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::classic::plactic_class;
use crate::error::{Error, Result};
use crate::ideal::{degree_basis, intersect_degree, Block, DegreeBasis, IdealExpr};
use crate::nc_schur::nc_schur_e;
use crate::partition::Partition;
use crate::poly::NCPoly;
use crate::scalar::common_denominator;
use crate::tableau::{enumerate, TableauKind};
use crate::word::Word;

type Q = BigRational;

/// `scale * J ≡ sum a_w u_w` with the ideal part spelled out.
#[derive(Clone, Debug, PartialEq)]
pub struct ConeCertificate {
    pub scale: BigInt,
    pub monomials: Vec<(Word, BigInt)>,
    /// Multiples of degree-basis rows, named by pivot word.
    pub rows: Vec<(Word, Q)>,
    /// Multiples of monomials of the ideal.
    pub killed: Vec<(Word, Q)>,
}

/// Integer dual vector with `gamma >= 0`, `gamma ⊥ I_d` and `<J, gamma> < 0`.
#[derive(Clone, Debug, PartialEq)]
pub struct FarkasWitness {
    pub gamma: NCPoly<BigInt>,
    pub pairing: BigInt,
}

#[derive(Clone, Debug, PartialEq)]
pub enum Verdict {
    Positive(ConeCertificate),
    NotPositive(FarkasWitness),
}

impl Verdict {
    pub fn is_positive(&self) -> bool {
        matches!(self, Verdict::Positive(_))
    }
}

/// The degree component of an ideal expression.
pub fn basis_for(ideal: &IdealExpr, d: usize) -> Result<Arc<DegreeBasis<Q>>> {
    match ideal {
        IdealExpr::Spec(s) => degree_basis::<Q>(s, d, None),
        IdealExpr::Cap(specs) => intersect_degree::<Q>(specs, d, None),
    }
}

fn to_q(f: &NCPoly<BigInt>) -> NCPoly<Q> {
    f.embed()
}

fn blocks_of(basis: &DegreeBasis<Q>, f: &NCPoly<Q>) -> Result<Vec<Arc<Block<Q>>>> {
    let mut out: Vec<Arc<Block<Q>>> = Vec::new();
    for w in f.words() {
        if basis.kills(w) {
            continue;
        }
        let b = basis.block(&w.content())?;
        if !out.iter().any(|x| Arc::ptr_eq(x, &b)) {
            out.push(b);
        }
    }
    Ok(out)
}

/// Phase-1 simplex on `A x = b`, `x >= 0`, with Bland's rule.
struct Phase1 {
    /// Rows of `[A' | I_art | b']` after flipping rows with negative `b`.
    t: Vec<Vec<Q>>,
    z: Vec<Q>,
    basis: Vec<usize>,
    /// Column of the starting basis variable of each row.
    start: Vec<usize>,
    flipped: Vec<bool>,
    ncols: usize,
    cost: Vec<Q>,
}

enum Phase1Result {
    Feasible(Vec<Q>),
    /// Dual vector `y` with `y A >= 0` and `y b < 0`.
    Infeasible(Vec<Q>),
}

impl Phase1 {
    /// `cols[j]` is the sparse column `j` of `A`; `unit[i]` is a column equal to `e_i`.
    fn new(m: usize, cols: &[Vec<(usize, Q)>], unit: &[usize], b: &[Q]) -> Self {
        let nreal = cols.len();
        let flipped: Vec<bool> = b.iter().map(Signed::is_negative).collect();
        let mut basis = unit.to_vec();
        let mut ncols = nreal;
        for i in 0..m {
            if flipped[i] {
                basis[i] = ncols;
                ncols += 1;
            }
        }
        let mut t = vec![vec![Q::zero(); ncols + 1]; m];
        for (j, col) in cols.iter().enumerate() {
            for (i, x) in col {
                t[*i][j] = if flipped[*i] { -x.clone() } else { x.clone() };
            }
        }
        for i in 0..m {
            t[i][ncols] = b[i].abs();
            if flipped[i] {
                t[i][basis[i]] = Q::one();
            }
        }
        let cost: Vec<Q> = (0..ncols).map(|j| if j < nreal { Q::zero() } else { Q::one() }).collect();
        let mut z = cost.clone();
        z.push(Q::zero());
        for i in (0..m).filter(|&i| flipped[i]) {
            for j in 0..=ncols {
                if !t[i][j].is_zero() {
                    z[j] = z[j].clone() - t[i][j].clone();
                }
            }
        }
        let start = basis.clone();
        Phase1 { t, z, basis, start, flipped, ncols, cost }
    }

    fn pivot(&mut self, r: usize, c: usize) {
        let p = self.t[r][c].clone();
        if !p.is_one() {
            let inv = p.recip();
            for x in self.t[r].iter_mut() {
                if !x.is_zero() {
                    *x = x.clone() * inv.clone();
                }
            }
        }
        let nz: Vec<usize> = (0..=self.ncols).filter(|&j| !self.t[r][j].is_zero()).collect();
        let prow: Vec<Q> = nz.iter().map(|&j| self.t[r][j].clone()).collect();
        for i in 0..self.t.len() {
            if i == r || self.t[i][c].is_zero() {
                continue;
            }
            let f = self.t[i][c].clone();
            for (k, &j) in nz.iter().enumerate() {
                let v = self.t[i][j].clone() - f.clone() * prow[k].clone();
                self.t[i][j] = v;
            }
        }
        if !self.z[c].is_zero() {
            let f = self.z[c].clone();
            for (k, &j) in nz.iter().enumerate() {
                let v = self.z[j].clone() - f.clone() * prow[k].clone();
                self.z[j] = v;
            }
        }
        self.basis[r] = c;
    }

    fn solve(mut self, nreal: usize) -> Phase1Result {
        let rhs = self.ncols;
        while let Some(c) = (0..self.ncols).find(|&j| self.z[j].is_negative()) {
            let mut best: Option<(usize, Q)> = None;
            for i in 0..self.t.len() {
                let a = &self.t[i][c];
                if !a.is_positive() {
                    continue;
                }
                let ratio = self.t[i][rhs].clone() / a.clone();
                let better = match &best {
                    None => true,
                    Some((bi, br)) => ratio < *br || (ratio == *br && self.basis[i] < self.basis[*bi]),
                };
                if better {
                    best = Some((i, ratio));
                }
            }
            let (r, _) = best.expect("phase one objective is bounded below");
            self.pivot(r, c);
        }
        let objective = -self.z[rhs].clone();
        if objective.is_zero() {
            let mut x = vec![Q::zero(); nreal];
            for (i, &j) in self.basis.iter().enumerate() {
                if j < nreal {
                    x[j] = self.t[i][rhs].clone();
                }
            }
            Phase1Result::Feasible(x)
        } else {
            // y'_i = c_j - d_j over the starting basis column j of row i.
            let y = self
                .start
                .iter()
                .enumerate()
                .map(|(i, &j)| {
                    let yi = self.cost[j].clone() - self.z[j].clone();
                    if self.flipped[i] {
                        yi
                    } else {
                        -yi
                    }
                })
                .collect();
            Phase1Result::Infeasible(y)
        }
    }
}

/// Words of a block with their normal forms in quotient coordinates.
struct BlockLp {
    words: Vec<Word>,
    cols: Vec<Vec<(usize, Q)>>,
    unit: Vec<usize>,
    coords: Vec<Word>,
}

fn block_lp(b: &Block<Q>) -> BlockLp {
    let ech = b.echelon();
    let coords: Vec<Word> = b.live_words().iter().filter(|w| !ech.is_pivot(w)).cloned().collect();
    let index: HashMap<&Word, usize> = coords.iter().enumerate().map(|(i, w)| (w, i)).collect();
    let mut unit = vec![usize::MAX; coords.len()];
    let mut cols = Vec::with_capacity(b.live_words().len());
    for (j, w) in b.live_words().iter().enumerate() {
        match ech.pivot_row(w) {
            None => {
                unit[index[w]] = j;
                cols.push(vec![(index[w], Q::one())]);
            }
            Some(row) => cols.push(row[1..].iter().map(|(k, c)| (index[k], -c.clone())).collect()),
        }
    }
    BlockLp { words: b.live_words().to_vec(), cols, unit, coords }
}

fn lcd_integers(xs: &[Q]) -> (BigInt, Vec<BigInt>) {
    let l = common_denominator(xs.iter());
    let ints: Vec<BigInt> = xs.iter().map(|x| (x * Q::from_integer(l.clone())).to_integer()).collect();
    (l, ints)
}

/// Decide whether `J` is a nonnegative rational combination of monomials modulo `I_d`.
pub fn q_monomial_positive(j: &NCPoly<BigInt>, ideal: &IdealExpr) -> Result<Verdict> {
    let Some(d) = j.homogeneous_degree()? else {
        return Ok(Verdict::Positive(ConeCertificate {
            scale: BigInt::one(),
            monomials: vec![],
            rows: vec![],
            killed: vec![],
        }));
    };
    let basis = basis_for(ideal, d)?;
    if j.terms().all(|(_, c)| c.is_positive()) {
        let cert = ConeCertificate {
            scale: BigInt::one(),
            monomials: j.terms().map(|(w, c)| (w.clone(), c.clone())).collect(),
            rows: vec![],
            killed: vec![],
        };
        verify_certificate(j, ideal, &cert)?;
        return Ok(Verdict::Positive(cert));
    }
    let jq = to_q(j);
    let nf = basis.reduce(&jq)?;
    let mut coeffs: BTreeMap<Word, Q> = BTreeMap::new();
    for b in blocks_of(&basis, &nf)? {
        let lp = block_lp(&b);
        let rhs: Vec<Q> = lp.coords.iter().map(|w| nf.coeff(w)).collect();
        if rhs.iter().all(Zero::is_zero) {
            continue;
        }
        match Phase1::new(lp.coords.len(), &lp.cols, &lp.unit, &rhs).solve(lp.cols.len()) {
            Phase1Result::Feasible(x) => {
                for (w, c) in lp.words.iter().zip(x) {
                    if !c.is_zero() {
                        coeffs.insert(w.clone(), c);
                    }
                }
            }
            Phase1Result::Infeasible(y) => {
                let mut gamma: Vec<(Word, Q)> = Vec::new();
                for (w, col) in lp.words.iter().zip(&lp.cols) {
                    let v = col.iter().fold(Q::zero(), |acc, (i, c)| acc + c.clone() * y[*i].clone());
                    if !v.is_zero() {
                        gamma.push((w.clone(), v));
                    }
                }
                let vals: Vec<Q> = gamma.iter().map(|(_, c)| c.clone()).collect();
                let (_, ints) = lcd_integers(&vals);
                let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
                let g = if g.is_zero() { BigInt::one() } else { g };
                let gamma = NCPoly::from_terms(gamma.into_iter().zip(ints).map(|((w, _), c)| (w, c / &g)));
                let pairing = verify_witness(j, ideal, &gamma)?
                    .ok_or_else(|| Error::Verification("Farkas witness failed its checks".into()))?;
                return Ok(Verdict::NotPositive(FarkasWitness { gamma, pairing }));
            }
        }
    }
    let vals: Vec<Q> = coeffs.values().cloned().collect();
    let (scale, ints) = lcd_integers(&vals);
    let monomials: Vec<(Word, BigInt)> = coeffs.keys().cloned().zip(ints).collect();
    let sq = Q::from_integer(scale.clone());
    let diff = jq.scale(&sq).sub(&NCPoly::from_terms(
        monomials.iter().map(|(w, c)| (w.clone(), Q::from_integer(c.clone()))),
    ));
    let red = basis.reduce_tracking(&diff)?;
    let cert = ConeCertificate { scale, monomials, rows: red.rows, killed: red.killed };
    verify_certificate(j, ideal, &cert)?;
    Ok(Verdict::Positive(cert))
}

/// Re-check a positive certificate exactly; errors on failure.
pub fn verify_certificate(j: &NCPoly<BigInt>, ideal: &IdealExpr, cert: &ConeCertificate) -> Result<()> {
    if !cert.scale.is_positive() || cert.monomials.iter().any(|(_, c)| c.is_negative()) {
        return Err(Error::Verification("negative coefficient in certificate".into()));
    }
    let lhs = j.scale(&cert.scale);
    let rhs = NCPoly::from_terms(cert.monomials.iter().cloned());
    let diff = to_q(&lhs.sub(&rhs));
    let Some(d) = diff.homogeneous_degree()? else { return Ok(()) };
    let basis = basis_for(ideal, d)?;
    let mut combo: NCPoly<Q> = NCPoly::zero();
    for (p, c) in &cert.rows {
        let row = basis
            .row(p)?
            .ok_or_else(|| Error::Verification(format!("no basis row with pivot {p}")))?;
        combo.add_scaled(c, &row);
    }
    for (w, c) in &cert.killed {
        if !basis.kills(w) {
            return Err(Error::Verification(format!("{w} is not a monomial of the ideal")));
        }
        combo.add_term(w.clone(), c.clone());
    }
    if combo != diff || !basis.is_member(&diff)? {
        return Err(Error::Verification("ideal part does not match".into()));
    }
    Ok(())
}

/// `Some(<J, gamma>)` when `gamma` is a valid Farkas witness for `J`.
pub fn verify_witness(j: &NCPoly<BigInt>, ideal: &IdealExpr, gamma: &NCPoly<BigInt>) -> Result<Option<BigInt>> {
    if gamma.terms().any(|(_, c)| c.is_negative()) {
        return Ok(None);
    }
    let Some(d) = gamma.homogeneous_degree()? else { return Ok(None) };
    let basis = basis_for(ideal, d)?;
    if !basis.in_perp(&to_q(gamma))? {
        return Ok(None);
    }
    let p = j.pair(gamma);
    Ok(p.is_negative().then_some(p))
}

/// `J ≡ sum sign * u_w` modulo every ideal in the expression.
pub fn verify_expansion(j: &NCPoly<BigInt>, signed: &[(i64, Word)], ideal: &IdealExpr) -> Result<bool> {
    let rhs = NCPoly::from_terms(signed.iter().map(|(s, w)| (w.clone(), BigInt::from(*s))));
    let diff = to_q(&j.sub(&rhs));
    let Some(d) = diff.homogeneous_degree()? else { return Ok(true) };
    for s in ideal.specs() {
        if !degree_basis::<Q>(&s, d, None)?.is_member(&diff)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Plactic classes of the standard tableaux of shape `lambda`, in tableau order.
pub fn plactic_classes(lambda: &Partition) -> Vec<Vec<Word>> {
    enumerate(&TableauKind::Syt, lambda)
        .iter()
        .map(|t| plactic_class(t).into_iter().collect())
        .collect()
}

/// Every choice of one word per plactic class whose sum is congruent to
/// `J_lambda` modulo each listed ideal.
pub fn search_expansions(lambda: &Partition, ideal: &IdealExpr) -> Result<SearchResult> {
    let n = ideal.n();
    let d = lambda.size();
    let j = to_q(&nc_schur_e(lambda, n));
    let classes = plactic_classes(lambda);
    let specs = ideal.specs();
    let mut reduced_j = Vec::new();
    let mut reduced_words: Vec<Vec<Vec<NCPoly<Q>>>> = Vec::new();
    for s in &specs {
        let basis = degree_basis::<Q>(s, d, None)?;
        reduced_j.push(basis.reduce(&j)?);
        let per_class = classes
            .iter()
            .map(|class| class.iter().map(|w| basis.reduce(&NCPoly::word(w.clone()))).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        reduced_words.push(per_class);
    }
    let sizes: Vec<usize> = classes.iter().map(Vec::len).collect();
    let total: usize = sizes.iter().product();
    let mut found = Vec::new();
    let mut choice = vec![0usize; classes.len()];
    for _ in 0..total {
        let ok = (0..specs.len()).all(|s| {
            let mut acc: NCPoly<Q> = NCPoly::zero();
            for (c, &i) in choice.iter().enumerate() {
                acc.add_scaled(&Q::one(), &reduced_words[s][c][i]);
            }
            acc == reduced_j[s]
        });
        if ok {
            found.push(choice.iter().enumerate().map(|(c, &i)| classes[c][i].clone()).collect());
        }
        for c in (0..choice.len()).rev() {
            choice[c] += 1;
            if choice[c] < sizes[c] {
                break;
            }
            choice[c] = 0;
        }
    }
    Ok(SearchResult { candidates: total, expansions: found })
}

#[derive(Clone, Debug, PartialEq)]
pub struct SearchResult {
    pub candidates: usize,
    pub expansions: Vec<Vec<Word>>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::IdealSpec;
    use crate::word::w;

    #[test]
    fn single_word_is_its_own_certificate() {
        let ideal = IdealExpr::Spec(IdealSpec::parse("IC", 2).unwrap());
        let v = q_monomial_positive(&NCPoly::word(w("21")), &ideal).unwrap();
        let Verdict::Positive(c) = v else { panic!("expected positive") };
        assert_eq!(c.monomials, vec![(w("21"), BigInt::one())]);
    }

    #[test]
    fn negative_word_is_not_positive_modulo_zero() {
        let ideal = IdealExpr::Spec(IdealSpec::parse("Zero", 2).unwrap());
        let j = NCPoly::word(w("21")).sub(&NCPoly::word(w("12")));
        let Verdict::NotPositive(wit) = q_monomial_positive(&j, &ideal).unwrap() else {
            panic!("expected a witness")
        };
        assert_eq!(wit.pairing, BigInt::from(-1));
    }

    #[test]
    fn j21_modulo_ib() {
        let ideal = IdealExpr::Spec(IdealSpec::parse("IB", 3).unwrap());
        let j = nc_schur_e(&Partition::parse("21").unwrap(), 3);
        assert!(q_monomial_positive(&j, &ideal).unwrap().is_positive());
    }
}
