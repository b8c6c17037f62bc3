//! Noncommutative elementary and complete homogeneous functions and the
//! Schur functions built from them.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::poly::NCPoly;
use crate::word::{Letter, Word};

pub type IntPoly = NCPoly<BigInt>;

/// `e_k(u_S)`: the sum of the strictly decreasing words of length `k` in `S`.
pub fn elementary(k: usize, letters: &[Letter]) -> IntPoly {
    let mut s: Vec<Letter> = letters.to_vec();
    s.sort_unstable_by(|a, b| b.cmp(a));
    s.dedup();
    let mut out = IntPoly::zero();
    let mut cur = Vec::with_capacity(k);
    fn rec(s: &[Letter], k: usize, cur: &mut Vec<Letter>, out: &mut IntPoly) {
        if cur.len() == k {
            out.add_term(Word::from_slice(cur), BigInt::one());
            return;
        }
        for (i, &l) in s.iter().enumerate() {
            if s.len() - i < k - cur.len() {
                break;
            }
            cur.push(l);
            rec(&s[i + 1..], k, cur, out);
            cur.pop();
        }
    }
    rec(&s, k, &mut cur, &mut out);
    out
}

/// `h_k(u_S)`: the sum of the weakly increasing words of length `k` in `S`.
pub fn complete(k: usize, letters: &[Letter]) -> IntPoly {
    let mut s: Vec<Letter> = letters.to_vec();
    s.sort_unstable();
    s.dedup();
    let mut out = IntPoly::zero();
    fn rec(s: &[Letter], k: usize, cur: &mut Vec<Letter>, out: &mut IntPoly) {
        if cur.len() == k {
            out.add_term(Word::from_slice(cur), BigInt::one());
            return;
        }
        for (i, &l) in s.iter().enumerate() {
            cur.push(l);
            rec(&s[i..], k, cur, out);
            cur.pop();
        }
    }
    rec(&s, k, &mut Vec::new(), &mut out);
    out
}

fn interval(n: u8) -> Vec<Letter> {
    (1..=n).collect()
}

/// `e_k` of `[n]`, zero for negative `k`.
fn e_signed(k: isize, n: u8) -> IntPoly {
    if k < 0 {
        IntPoly::zero()
    } else {
        elementary(k as usize, &interval(n))
    }
}

fn h_signed(k: isize, n: u8) -> IntPoly {
    if k < 0 {
        IntPoly::zero()
    } else {
        complete(k as usize, &interval(n))
    }
}

/// Permutations of `0..m` with their signs, via Heap's algorithm.
pub(crate) fn signed_permutations(m: usize) -> Vec<(Vec<usize>, i64)> {
    let mut out = Vec::new();
    let mut a: Vec<usize> = (0..m).collect();
    let mut c = vec![0usize; m];
    let mut sign = 1i64;
    out.push((a.clone(), sign));
    let mut i = 0;
    while i < m {
        if c[i] < i {
            if i % 2 == 0 {
                a.swap(0, i);
            } else {
                a.swap(c[i], i);
            }
            sign = -sign;
            out.push((a.clone(), sign));
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    out
}

/// Noncommutative determinant with row order kept in each product:
/// `sum_pi sgn(pi) f(0, pi(0)) f(1, pi(1)) ...`, with optional words between factors.
fn nc_det(
    m: usize,
    entry: impl Fn(usize, usize) -> IntPoly,
    between: &[Word],
) -> IntPoly {
    let table: Vec<Vec<IntPoly>> = (0..m)
        .map(|i| (0..m).map(|j| entry(i, j)).collect())
        .collect();
    let mut out = IntPoly::zero();
    for (pi, sign) in signed_permutations(m) {
        let mut prod = IntPoly::one();
        for (i, &j) in pi.iter().enumerate() {
            let f = &table[i][j];
            if f.is_zero() {
                prod = IntPoly::zero();
                break;
            }
            if i > 0 {
                if let Some(w) = between.get(i - 1) {
                    if !w.is_empty() {
                        prod = prod.mul(&IntPoly::word(w.clone()));
                    }
                }
            }
            prod = prod.mul(f);
        }
        out.add_scaled(&BigInt::from(sign), &prod);
    }
    out
}

/// `J_lambda = sum_{pi in S_t} sgn(pi) e_{lambda'_1 + pi(1) - 1} ... e_{lambda'_t + pi(t) - t}`
/// over the letters `[n]`, with `t = lambda_1`.
pub fn nc_schur_e(lambda: &Partition, n: u8) -> IntPoly {
    let conj = lambda.conjugate();
    let t = lambda.part(0);
    nc_det(
        t,
        |i, j| e_signed(conj.part(i) as isize + j as isize - i as isize, n),
        &[],
    )
}

/// The complete-homogeneous determinant of size `lambda'_1`.
pub fn nc_schur_h(lambda: &Partition, n: u8) -> IntPoly {
    let l = lambda.len();
    nc_det(
        l,
        |i, j| h_signed(lambda.part(i) as isize + j as isize - i as isize, n),
        &[],
    )
}

/// Column-flagged version: `sum sgn(pi) prod_j e_{alpha_j + pi(j) - j}(u_[n_j])`.
pub fn flagged_schur(alpha: &[usize], flags: &[u8]) -> Result<IntPoly> {
    augmented_flagged_schur(alpha, flags, &[])
}

/// Flagged version with the word `ws[j]` inserted between factors `j` and `j + 1`.
pub fn augmented_flagged_schur(alpha: &[usize], flags: &[u8], ws: &[Word]) -> Result<IntPoly> {
    if alpha.len() != flags.len() {
        return Err(Error::LengthMismatch(alpha.len(), flags.len()));
    }
    if ws.len() > alpha.len().saturating_sub(1) {
        return Err(Error::LengthMismatch(ws.len(), alpha.len().saturating_sub(1)));
    }
    let l = alpha.len();
    Ok(nc_det(
        l,
        |i, j| e_signed(alpha[i] as isize + j as isize - i as isize, flags[i]),
        ws,
    ))
}

/// Smallest `j` (1-based) with `alpha_j >= alpha_{j+1}`, where `alpha_{l+1} = 0`.
pub fn peeling_index(alpha: &[usize]) -> usize {
    (0..alpha.len())
        .find(|&j| alpha[j] >= alpha.get(j + 1).copied().unwrap_or(0))
        .map(|j| j + 1)
        .unwrap_or(0)
}

/// `sum_i (-1)^i h_{m-i} e_i` over `[n]`; identically zero for `m >= 1`.
pub fn eh_alternating_sum(m: usize, n: u8) -> IntPoly {
    let s = interval(n);
    let mut out = IntPoly::zero();
    for i in 0..=m {
        let term = complete(m - i, &s).mul(&elementary(i, &s));
        let sign = if i % 2 == 0 { BigInt::one() } else { -BigInt::one() };
        out.add_scaled(&sign, &term);
    }
    out
}

/// `sum_T u_{diagread(w;T)}` over `T` in `SSYT(alpha')^flags`.
pub fn flagged_diagread_sum(alpha: &[usize], flags: &[u8], w: &Word) -> Result<IntPoly> {
    let tabs = crate::tableau::flagged_tableaux(alpha, flags)?;
    let mut out = IntPoly::zero();
    for t in tabs {
        out.add_term(t.diagread_with(w), BigInt::one());
    }
    Ok(out)
}

/// The augmented function with `w` placed right after factor `j` (1-based),
/// the form appearing in the diagonal-reading recursion.
pub fn augmented_at(alpha: &[usize], flags: &[u8], j: usize, w: &Word) -> Result<IntPoly> {
    let l = alpha.len();
    if j == 0 || j > l {
        return Err(Error::LengthMismatch(j, l));
    }
    let mut ws = vec![Word::empty(); l.saturating_sub(1)];
    if j < l {
        ws[j - 1] = w.clone();
        augmented_flagged_schur(alpha, flags, &ws)
    } else {
        Ok(augmented_flagged_schur(alpha, flags, &ws)?.mul(&IntPoly::word(w.clone())))
    }
}

/// True if `f` has only nonnegative coefficients.
pub fn is_monomial_positive(f: &IntPoly) -> bool {
    f.terms().all(|(_, c)| *c > BigInt::zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::w;

    #[test]
    fn elementary_terms() {
        let e2 = elementary(2, &[1, 2, 3]);
        let words: Vec<String> = e2.words().map(|x| x.to_string()).collect();
        assert_eq!(words, vec!["21", "31", "32"]);
        assert!(elementary(4, &[1, 2, 3]).is_zero());
        assert_eq!(elementary(0, &[1, 2]), IntPoly::one());
        assert_eq!(complete(2, &[1, 2]).len(), 3);
    }

    #[test]
    fn j_of_a_column_is_elementary() {
        let l = Partition::parse("1,1,1").unwrap();
        assert_eq!(nc_schur_e(&l, 4), elementary(3, &[1, 2, 3, 4]));
        let row = Partition::parse("3").unwrap();
        assert_eq!(nc_schur_h(&row, 3), complete(3, &[1, 2, 3]));
    }

    #[test]
    fn j_222_is_a_two_by_two_determinant() {
        let l = Partition::parse("2,2,2").unwrap();
        let e3 = elementary(3, &[1, 2, 3, 4, 5, 6]);
        let e4 = elementary(4, &[1, 2, 3, 4, 5, 6]);
        let e2 = elementary(2, &[1, 2, 3, 4, 5, 6]);
        assert_eq!(nc_schur_e(&l, 6), e3.mul(&e3).sub(&e4.mul(&e2)));
    }

    #[test]
    fn sign_table() {
        let perms = signed_permutations(3);
        assert_eq!(perms.len(), 6);
        let total: i64 = perms.iter().map(|p| p.1).sum();
        assert_eq!(total, 0);
        for (p, s) in perms {
            let inv = (0..3)
                .flat_map(|i| (i + 1..3).map(move |j| (i, j)))
                .filter(|&(i, j)| p[i] > p[j])
                .count();
            assert_eq!(s, if inv % 2 == 0 { 1 } else { -1 });
        }
    }

    #[test]
    fn peeling() {
        assert_eq!(peeling_index(&[1, 2, 2]), 2);
        assert_eq!(peeling_index(&[0, 0, 1]), 1);
        assert_eq!(peeling_index(&[1, 2, 3]), 3);
    }

    #[test]
    fn augmented_inserts_words() {
        let j = augmented_flagged_schur(&[1, 0], &[1, 2], &[w("3")]).unwrap();
        // e_1(u_1) u_3 e_0 - e_2(u_1) u_3 e_{-1} = u_13
        assert_eq!(j, IntPoly::word(w("13")));
    }
}
