//! Coefficient rings: integers, rationals, Laurent polynomials in `q` and the
//! field `Q(q)`.

use std::collections::BTreeMap;
use std::fmt::{self, Debug, Display};
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Integer = BigInt;
pub type Rational = BigRational;

pub trait Ring:
    Clone
    + Debug
    + Display
    + PartialEq
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + Send
    + Sync
    + 'static
{
    fn from_i64(n: i64) -> Self;

    /// Parse the text form used by vector files and the CLI.
    fn parse_scalar(s: &str) -> Result<Self>;
}

pub trait Field: Ring + Div<Output = Self> {
    fn inv(&self) -> Self;

    /// The indeterminate, for rings that have one.
    fn q() -> Option<Self> {
        None
    }
}

/// Coefficient-wise embedding into a larger ring.
pub trait Embed<T> {
    fn embed(&self) -> T;
}

impl<T: Ring> Embed<T> for T {
    fn embed(&self) -> T {
        self.clone()
    }
}

impl Ring for BigInt {
    fn from_i64(n: i64) -> Self {
        BigInt::from(n)
    }
    fn parse_scalar(s: &str) -> Result<Self> {
        s.trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad integer {s:?}")))
    }
}

impl Ring for BigRational {
    fn from_i64(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }
    fn parse_scalar(s: &str) -> Result<Self> {
        parse_rational(s)
    }
}

impl Field for BigRational {
    fn inv(&self) -> Self {
        self.recip()
    }
}

impl Embed<BigRational> for BigInt {
    fn embed(&self) -> BigRational {
        BigRational::from_integer(self.clone())
    }
}

fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("bad rational {s:?}"));
    match s.split_once('/') {
        Some((a, b)) => {
            let a: BigInt = a.trim().parse().map_err(|_| bad())?;
            let b: BigInt = b.trim().parse().map_err(|_| bad())?;
            if b.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(a, b))
        }
        None => Ok(BigRational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

// ---------------------------------------------------------------------------
// Laurent polynomials

/// Laurent polynomial in `q` with integer coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Laurent {
    terms: BTreeMap<i32, BigInt>,
}

impl Laurent {
    pub fn monomial(c: BigInt, e: i32) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        Laurent { terms }
    }

    pub fn q_pow(e: i32) -> Self {
        Self::monomial(BigInt::one(), e)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i32, &BigInt)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn coeff(&self, e: i32) -> BigInt {
        self.terms.get(&e).cloned().unwrap_or_default()
    }

    pub fn min_exp(&self) -> Option<i32> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i32> {
        self.terms.keys().next_back().copied()
    }

    /// Coefficients are integers and nonnegative.
    pub fn is_nonnegative(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    /// Value at q = 1.
    pub fn at_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    fn add_term(&mut self, e: i32, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(e).or_default();
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&e);
        }
    }
}

impl Zero for Laurent {
    fn zero() -> Self {
        Laurent::default()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for Laurent {
    fn one() -> Self {
        Laurent::q_pow(0)
    }
}

impl Add for Laurent {
    type Output = Laurent;
    fn add(mut self, rhs: Laurent) -> Laurent {
        for (e, c) in rhs.terms {
            self.add_term(e, c);
        }
        self
    }
}

impl Neg for Laurent {
    type Output = Laurent;
    fn neg(self) -> Laurent {
        Laurent {
            terms: self.terms.into_iter().map(|(e, c)| (e, -c)).collect(),
        }
    }
}

impl Sub for Laurent {
    type Output = Laurent;
    fn sub(self, rhs: Laurent) -> Laurent {
        self + (-rhs)
    }
}

impl Mul for Laurent {
    type Output = Laurent;
    fn mul(self, rhs: Laurent) -> Laurent {
        let mut out = Laurent::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl Ring for Laurent {
    fn from_i64(n: i64) -> Self {
        Laurent::monomial(BigInt::from(n), 0)
    }
    fn parse_scalar(s: &str) -> Result<Self> {
        let mut out = Laurent::zero();
        for (c, e) in parse_q_terms(s)? {
            if !c.is_integer() {
                return Err(Error::Parse(format!("non-integer coefficient in {s:?}")));
            }
            out.add_term(e, c.to_integer());
        }
        Ok(out)
    }
}

impl Embed<Laurent> for BigInt {
    fn embed(&self) -> Laurent {
        Laurent::monomial(self.clone(), 0)
    }
}

impl Display for Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<(i32, BigRational)> = self
            .terms
            .iter()
            .map(|(e, c)| (*e, BigRational::from_integer(c.clone())))
            .collect();
        write_q_terms(f, &terms)
    }
}

impl Debug for Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        Display::fmt(self, f)
    }
}

fn write_q_terms(f: &mut fmt::Formatter<'_>, terms: &[(i32, BigRational)]) -> fmt::Result {
    if terms.is_empty() {
        return write!(f, "0");
    }
    for (idx, (e, c)) in terms.iter().enumerate() {
        let mut piece = if *e == 0 {
            c.to_string()
        } else {
            let qpart = if *e == 1 {
                "q".to_string()
            } else {
                format!("q^{e}")
            };
            if c.is_one() {
                qpart
            } else if *c == -BigRational::one() {
                format!("-{qpart}")
            } else {
                format!("{c}*{qpart}")
            }
        };
        if idx > 0 && !piece.starts_with('-') {
            piece.insert(0, '+');
        }
        f.write_str(&piece)?;
    }
    Ok(())
}

/// Split `"3*q^2-q+1/2*q^-1"` into (coefficient, exponent) pairs.
fn parse_q_terms(s: &str) -> Result<Vec<(BigRational, i32)>> {
    let src: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let bad = || Error::Parse(format!("bad q-expression {s:?}"));
    if src.is_empty() {
        return Err(bad());
    }
    // Cut at '+'/'-' that are not part of an exponent.
    let bytes = src.as_bytes();
    let mut pieces = Vec::new();
    let mut start = 0;
    for i in 1..bytes.len() {
        if (bytes[i] == b'+' || bytes[i] == b'-') && bytes[i - 1] != b'^' {
            pieces.push(&src[start..i]);
            start = i;
        }
    }
    pieces.push(&src[start..]);
    let mut out = Vec::new();
    for piece in pieces {
        let (sign, body) = match piece.as_bytes()[0] {
            b'+' => (1, &piece[1..]),
            b'-' => (-1, &piece[1..]),
            _ => (1, piece),
        };
        if body.is_empty() {
            return Err(bad());
        }
        let (coeff, exp) = match body.find('q') {
            None => (parse_rational(body)?, 0),
            Some(pos) => {
                let before = &body[..pos];
                let after = &body[pos + 1..];
                let coeff = if before.is_empty() {
                    BigRational::one()
                } else {
                    parse_rational(before.strip_suffix('*').ok_or_else(bad)?)?
                };
                let exp = if after.is_empty() {
                    1
                } else {
                    after
                        .strip_prefix('^')
                        .ok_or_else(bad)?
                        .parse::<i32>()
                        .map_err(|_| bad())?
                };
                (coeff, exp)
            }
        };
        out.push((coeff * BigRational::from_i64(sign), exp));
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// Polynomials over Q and rational functions

/// Dense polynomial in `q` over Q; `coeffs[i]` multiplies `q^i`, no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct QPoly {
    coeffs: Vec<BigRational>,
}

impl QPoly {
    pub fn from_coeffs(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        QPoly { coeffs }
    }

    pub fn constant(c: BigRational) -> Self {
        Self::from_coeffs(vec![c])
    }

    pub fn monomial(c: BigRational, e: usize) -> Self {
        let mut coeffs = vec![BigRational::zero(); e + 1];
        coeffs[e] = c;
        Self::from_coeffs(coeffs)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn leading(&self) -> Option<&BigRational> {
        self.coeffs.last()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    fn scale(&self, c: &BigRational) -> QPoly {
        QPoly::from_coeffs(self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn add(&self, other: &QPoly) -> QPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let zero = BigRational::zero();
        QPoly::from_coeffs(
            (0..n)
                .map(|i| {
                    self.coeffs.get(i).unwrap_or(&zero) + other.coeffs.get(i).unwrap_or(&zero)
                })
                .collect(),
        )
    }

    pub fn neg(&self) -> QPoly {
        QPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn mul(&self, other: &QPoly) -> QPoly {
        if self.is_zero() || other.is_zero() {
            return QPoly::default();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        QPoly::from_coeffs(out)
    }

    pub fn div_rem(&self, d: &QPoly) -> (QPoly, QPoly) {
        let dd = d.degree().expect("division by zero polynomial");
        let lead_inv = d.coeffs[dd].recip();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigRational::zero(); rem.len().saturating_sub(dd)];
        while rem.len() > dd && !rem.is_empty() {
            let top = rem.len() - 1;
            let c = &rem[top] * &lead_inv;
            if !c.is_zero() {
                let shift = top - dd;
                for (j, dc) in d.coeffs.iter().enumerate() {
                    rem[shift + j] -= &c * dc;
                }
                quot[shift] = c;
            }
            rem.pop();
            while rem.last().is_some_and(Zero::is_zero) {
                rem.pop();
            }
        }
        (QPoly::from_coeffs(quot), QPoly::from_coeffs(rem))
    }

    pub fn monic(&self) -> QPoly {
        match self.leading() {
            Some(l) => self.scale(&l.recip()),
            None => QPoly::default(),
        }
    }

    pub fn gcd(&self, other: &QPoly) -> QPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Lowest exponent with a nonzero coefficient.
    fn valuation(&self) -> usize {
        self.coeffs.iter().position(|c| !c.is_zero()).unwrap_or(0)
    }

    fn shift_down(&self, k: usize) -> QPoly {
        QPoly::from_coeffs(self.coeffs[k..].to_vec())
    }
}

impl Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<(i32, BigRational)> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(e, c)| (e as i32, c.clone()))
            .collect();
        write_q_terms(f, &terms)
    }
}

/// Element of `Q(q)`: reduced fraction with a monic denominator.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: QPoly,
    den: QPoly,
}

impl RatFunc {
    pub fn new(num: QPoly, den: QPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return RatFunc::zero();
        }
        // Cheap path: strip common powers of q before the full gcd.
        let k = num.valuation().min(den.valuation());
        let (num, den) = if k > 0 {
            (num.shift_down(k), den.shift_down(k))
        } else {
            (num, den)
        };
        let (num, den) = if den.degree() == Some(0) {
            (num, den)
        } else {
            let g = num.gcd(&den);
            if g.is_one() {
                (num, den)
            } else {
                (num.div_rem(&g).0, den.div_rem(&g).0)
            }
        };
        let lead = den.leading().unwrap().recip();
        RatFunc {
            num: num.scale(&lead),
            den: den.scale(&lead),
        }
    }

    pub fn from_poly(p: QPoly) -> Self {
        RatFunc {
            num: p,
            den: QPoly::constant(BigRational::one()),
        }
    }

    pub fn numerator(&self) -> &QPoly {
        &self.num
    }

    pub fn denominator(&self) -> &QPoly {
        &self.den
    }

    /// Convert back to a Laurent polynomial when the denominator is a power of q
    /// and the coefficients are integers.
    pub fn to_laurent(&self) -> Option<Laurent> {
        let dd = self.den.degree()?;
        if self.den.coeffs[..dd].iter().any(|c| !c.is_zero()) {
            return None;
        }
        let mut out = Laurent::zero();
        for (i, c) in self.num.coeffs.iter().enumerate() {
            if !c.is_integer() {
                return None;
            }
            out.add_term(i as i32 - dd as i32, c.to_integer());
        }
        Some(out)
    }

    pub fn to_rational(&self) -> Option<BigRational> {
        match (self.num.degree(), self.den.degree()) {
            (None, _) => Some(BigRational::zero()),
            (Some(0), Some(0)) => Some(&self.num.coeffs[0] / &self.den.coeffs[0]),
            _ => None,
        }
    }
}

impl Zero for RatFunc {
    fn zero() -> Self {
        RatFunc::from_poly(QPoly::default())
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for RatFunc {
    fn one() -> Self {
        RatFunc::from_poly(QPoly::constant(BigRational::one()))
    }
}

impl Add for RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: RatFunc) -> RatFunc {
        if self.is_zero() {
            return rhs;
        }
        if rhs.is_zero() {
            return self;
        }
        if self.den == rhs.den {
            return RatFunc::new(self.num.add(&rhs.num), self.den);
        }
        RatFunc::new(
            self.num.mul(&rhs.den).add(&rhs.num.mul(&self.den)),
            self.den.mul(&rhs.den),
        )
    }
}

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc {
            num: self.num.neg(),
            den: self.den,
        }
    }
}

impl Sub for RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: RatFunc) -> RatFunc {
        self + (-rhs)
    }
}

impl Mul for RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: RatFunc) -> RatFunc {
        if self.is_zero() || rhs.is_zero() {
            return RatFunc::zero();
        }
        RatFunc::new(self.num.mul(&rhs.num), self.den.mul(&rhs.den))
    }
}

impl Div for RatFunc {
    type Output = RatFunc;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: RatFunc) -> RatFunc {
        self * rhs.inv()
    }
}

impl Ring for RatFunc {
    fn from_i64(n: i64) -> Self {
        RatFunc::from_poly(QPoly::constant(BigRational::from_i64(n)))
    }
    fn parse_scalar(s: &str) -> Result<Self> {
        let s = s.trim();
        if let Some(rest) = s.strip_prefix('(') {
            if let Some((a, b)) = rest.split_once(")/(") {
                let b = b
                    .strip_suffix(')')
                    .ok_or_else(|| Error::Parse(format!("bad rational function {s:?}")))?;
                let d = q_terms_to_ratfunc(&parse_q_terms(b)?);
                if d.is_zero() {
                    return Err(Error::Parse(format!("zero denominator in {s:?}")));
                }
                return Ok(q_terms_to_ratfunc(&parse_q_terms(a)?) / d);
            }
        }
        Ok(q_terms_to_ratfunc(&parse_q_terms(s)?))
    }
}

fn q_terms_to_ratfunc(terms: &[(BigRational, i32)]) -> RatFunc {
    let mut acc = RatFunc::zero();
    for (c, e) in terms {
        let t = if *e >= 0 {
            RatFunc::from_poly(QPoly::monomial(c.clone(), *e as usize))
        } else {
            RatFunc::new(
                QPoly::constant(c.clone()),
                QPoly::monomial(BigRational::one(), (-e) as usize),
            )
        };
        acc = acc + t;
    }
    acc
}

impl Field for RatFunc {
    fn inv(&self) -> Self {
        assert!(!self.is_zero(), "inverse of zero");
        RatFunc::new(self.den.clone(), self.num.clone())
    }
    fn q() -> Option<Self> {
        Some(RatFunc::from_poly(QPoly::monomial(BigRational::one(), 1)))
    }
}

impl Embed<RatFunc> for BigInt {
    fn embed(&self) -> RatFunc {
        RatFunc::from_poly(QPoly::constant(BigRational::from_integer(self.clone())))
    }
}

impl Embed<RatFunc> for BigRational {
    fn embed(&self) -> RatFunc {
        RatFunc::from_poly(QPoly::constant(self.clone()))
    }
}

impl Embed<RatFunc> for Laurent {
    fn embed(&self) -> RatFunc {
        let Some(lo) = self.min_exp() else {
            return RatFunc::zero();
        };
        let shift = (-lo).max(0) as usize;
        let hi = self.max_exp().unwrap();
        let mut coeffs = vec![BigRational::zero(); (hi + shift as i32) as usize + 1];
        for (e, c) in self.terms() {
            coeffs[(e + shift as i32) as usize] = BigRational::from_integer(c.clone());
        }
        RatFunc::new(
            QPoly::from_coeffs(coeffs),
            QPoly::monomial(BigRational::one(), shift),
        )
    }
}

impl Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(l) = self.to_laurent() {
            return Display::fmt(&l, f);
        }
        if self.den.is_one() {
            Display::fmt(&self.num, f)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        Display::fmt(self, f)
    }
}

/// Least common multiple of the denominators of a family of rationals.
pub fn common_denominator<'a>(xs: impl IntoIterator<Item = &'a BigRational>) -> BigInt {
    xs.into_iter()
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()))
}

/// Small helper for tests and display code.
pub fn to_i64(x: &BigInt) -> Option<i64> {
    x.to_i64()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn laurent_round_trip() {
        for s in ["0", "1", "q", "-q^-1", "2*q^-3+1-q+5*q^7", "q^2+q^3"] {
            let l = Laurent::parse_scalar(s).unwrap();
            assert_eq!(Laurent::parse_scalar(&l.to_string()).unwrap(), l, "{s}");
        }
        assert_eq!(Laurent::parse_scalar("q + q").unwrap().to_string(), "2*q");
    }

    #[test]
    fn ratfunc_normal_form() {
        let q = RatFunc::q().unwrap();
        let one = RatFunc::one();
        let a = (q.clone() * q.clone() - one.clone()) / (q.clone() - one.clone());
        assert_eq!(a, q.clone() + one.clone());
        assert!(a.denominator().is_one());
        let b = one.clone() / (q.clone() * RatFunc::from_i64(2) + RatFunc::from_i64(4));
        assert_eq!(b.denominator().leading().unwrap(), &BigRational::one());
        assert_eq!(b.clone() * b.inv(), one);
        let l = Laurent::parse_scalar("q^-2-3+q").unwrap();
        let r: RatFunc = l.embed();
        assert_eq!(r.to_laurent().unwrap(), l);
        assert_eq!(RatFunc::parse_scalar(&b.to_string()).unwrap(), b);
    }

    #[test]
    fn rational_text() {
        let r = BigRational::parse_scalar("6/4").unwrap();
        assert_eq!(r.to_string(), "3/2");
        assert!(BigRational::parse_scalar("1/0").is_err());
    }
}
