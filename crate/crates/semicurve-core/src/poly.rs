//! Sparse multivariate polynomials over ℤ with a weighted grading.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::{Error, Result};

/// Exponent tuple.
pub type Monomial = Vec<u32>;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SparsePolynomial {
    weights: Vec<u64>,
    terms: BTreeMap<Monomial, BigInt>,
}

impl SparsePolynomial {
    pub fn zero(weights: &[u64]) -> Self {
        Self {
            weights: weights.to_vec(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(weights: &[u64], c: impl Into<BigInt>) -> Self {
        Self::term(weights, vec![0; weights.len()], c)
    }

    pub fn one(weights: &[u64]) -> Self {
        Self::constant(weights, 1)
    }

    /// `c · x^exps`.
    pub fn term(weights: &[u64], exps: Monomial, c: impl Into<BigInt>) -> Self {
        assert_eq!(exps.len(), weights.len());
        let mut p = Self::zero(weights);
        let c = c.into();
        if !c.is_zero() {
            p.terms.insert(exps, c);
        }
        p
    }

    /// The variable `x_i`.
    pub fn var(weights: &[u64], i: usize) -> Self {
        let mut e = vec![0; weights.len()];
        e[i] = 1;
        Self::term(weights, e, 1)
    }

    /// `x_i^k`.
    pub fn var_pow(weights: &[u64], i: usize, k: u32) -> Self {
        let mut e = vec![0; weights.len()];
        e[i] = k;
        Self::term(weights, e, 1)
    }

    /// A product of variable powers given as `(index, exponent)` pairs.
    pub fn monomial(weights: &[u64], factors: &[(usize, u32)]) -> Self {
        let mut e = vec![0; weights.len()];
        for &(i, k) in factors {
            e[i] += k;
        }
        Self::term(weights, e, 1)
    }

    pub fn weights(&self) -> &[u64] {
        &self.weights
    }

    pub fn nvars(&self) -> usize {
        self.weights.len()
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

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, exps: &[u32]) -> BigInt {
        self.terms.get(exps).cloned().unwrap_or_default()
    }

    pub fn weighted_degree_of(&self, exps: &[u32]) -> u64 {
        exps.iter().zip(&self.weights).map(|(&e, &w)| e as u64 * w).sum()
    }

    /// The common weighted degree, if the polynomial is nonzero and homogeneous.
    pub fn homogeneous_degree(&self) -> Option<u64> {
        let mut it = self.terms.keys().map(|e| self.weighted_degree_of(e));
        let d = it.next()?;
        it.all(|x| x == d).then_some(d)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.homogeneous_degree().is_some()
    }

    /// Total (unweighted) degree of each term.
    pub fn term_degrees(&self) -> impl Iterator<Item = u32> + '_ {
        self.terms.keys().map(|e| e.iter().sum())
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.weights == other.weights {
            Ok(())
        } else {
            Err(Error::IncompatibleRings)
        }
    }

    fn add_term(&mut self, e: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use alloc::collections::btree_map::Entry;
        match self.terms.entry(e) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), -c);
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = Self::zero(&self.weights);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Monomial = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1 * c2);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return Self::zero(&self.weights);
        }
        Self {
            weights: self.weights.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c * k)).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut out = Self::one(&self.weights);
        for _ in 0..n {
            out = &out * self;
        }
        out
    }

    /// ∂/∂x_i.
    pub fn partial_derivative(&self, i: usize) -> Self {
        let mut out = Self::zero(&self.weights);
        for (e, c) in &self.terms {
            if e[i] > 0 {
                let mut e2 = e.clone();
                e2[i] -= 1;
                out.add_term(e2, c * BigInt::from(e[i]));
            }
        }
        out
    }

    /// `x_i ∂/∂x_i`.
    pub fn euler_component(&self, i: usize) -> Self {
        Self {
            weights: self.weights.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e[i] > 0)
                .map(|(e, c)| (e.clone(), c * BigInt::from(e[i])))
                .collect(),
        }
    }

    /// Sum of coefficients: the value at `(1, …, 1)`.
    pub fn value_at_ones(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// `x_i ↦ t^{weight_i}`.
    pub fn toric_substitute(&self) -> UnivariatePolynomial {
        let mut out = UnivariatePolynomial::default();
        for (e, c) in &self.terms {
            out.add_term(self.weighted_degree_of(e), c.clone());
        }
        out
    }

    /// Replaces `x_i` by `q`.
    pub fn substitute(&self, i: usize, q: &Self) -> Result<Self> {
        self.check(q)?;
        let mut powers: Vec<Self> = vec![Self::one(&self.weights)];
        let mut out = Self::zero(&self.weights);
        for (e, c) in &self.terms {
            while powers.len() <= e[i] as usize {
                let next = powers.last().unwrap() * q;
                powers.push(next);
            }
            let mut rest = e.clone();
            rest[i] = 0;
            let t = Self::term(&self.weights, rest, c.clone());
            out = &out + &(&t * &powers[e[i] as usize]);
        }
        Ok(out)
    }

    /// Moves into a ring with `weights`, sending variable `i` to `map[i]`.
    pub fn embed(&self, weights: &[u64], map: &[usize]) -> Self {
        assert_eq!(map.len(), self.nvars());
        let mut out = Self::zero(weights);
        for (e, c) in &self.terms {
            let mut e2 = vec![0; weights.len()];
            for (i, &k) in e.iter().enumerate() {
                e2[map[i]] += k;
            }
            out.add_term(e2, c.clone());
        }
        out
    }

    /// Keeps only the terms accepted by `keep`.
    pub fn filter_terms(&self, keep: impl Fn(&[u32]) -> bool) -> Self {
        Self {
            weights: self.weights.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| keep(e))
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }

    /// Value at `point` modulo `p`.
    pub fn eval_mod(&self, point: &[u64], p: u64) -> u64 {
        let mut acc = 0u64;
        for (e, c) in &self.terms {
            let mut t = mod_bigint(c, p);
            for (i, &k) in e.iter().enumerate() {
                if k > 0 {
                    t = t * pow_mod(point[i], k as u64, p) % p;
                }
            }
            acc = (acc + t) % p;
        }
        acc
    }

    /// Parses sums of terms such as `x0^5 - x1*x2` or `-2 U1 x0^3`. `names`
    /// gives the variable names in index order.
    pub fn parse(s: &str, weights: &[u64], names: &[&str]) -> Result<Self> {
        Parser { s: s.as_bytes(), pos: 0, weights, names }.poly()
    }

    pub fn display_with<'a>(&'a self, names: &'a [&'a str]) -> PolyDisplay<'a> {
        PolyDisplay { p: self, names: Some(names) }
    }
}

pub(crate) fn mod_bigint(c: &BigInt, p: u64) -> u64 {
    let r = c % BigInt::from(p);
    let r = if r.is_negative() { r + BigInt::from(p) } else { r };
    r.to_u64().unwrap()
}

pub(crate) fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

impl Add for &SparsePolynomial {
    type Output = SparsePolynomial;
    fn add(self, o: &SparsePolynomial) -> SparsePolynomial {
        self.checked_add(o).expect("incompatible rings")
    }
}

impl Sub for &SparsePolynomial {
    type Output = SparsePolynomial;
    fn sub(self, o: &SparsePolynomial) -> SparsePolynomial {
        self.checked_sub(o).expect("incompatible rings")
    }
}

impl Mul for &SparsePolynomial {
    type Output = SparsePolynomial;
    fn mul(self, o: &SparsePolynomial) -> SparsePolynomial {
        self.checked_mul(o).expect("incompatible rings")
    }
}

impl Neg for &SparsePolynomial {
    type Output = SparsePolynomial;
    fn neg(self) -> SparsePolynomial {
        self.scale(&BigInt::from(-1))
    }
}

impl Add for SparsePolynomial {
    type Output = SparsePolynomial;
    fn add(self, o: SparsePolynomial) -> SparsePolynomial {
        &self + &o
    }
}

impl Sub for SparsePolynomial {
    type Output = SparsePolynomial;
    fn sub(self, o: SparsePolynomial) -> SparsePolynomial {
        &self - &o
    }
}

impl Mul for SparsePolynomial {
    type Output = SparsePolynomial;
    fn mul(self, o: SparsePolynomial) -> SparsePolynomial {
        &self * &o
    }
}

impl Neg for SparsePolynomial {
    type Output = SparsePolynomial;
    fn neg(self) -> SparsePolynomial {
        -&self
    }
}

pub struct PolyDisplay<'a> {
    p: &'a SparsePolynomial,
    names: Option<&'a [&'a str]>,
}

impl fmt::Display for PolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.p.is_zero() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.p.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let is_const = e.iter().all(|&x| x == 0);
            if !a.is_one() || is_const {
                write!(f, "{a}")?;
                if !is_const {
                    write!(f, "*")?;
                }
            }
            let mut first = true;
            for (i, &x) in e.iter().enumerate() {
                if x == 0 {
                    continue;
                }
                if !first {
                    write!(f, "*")?;
                }
                first = false;
                match self.names {
                    Some(n) => write!(f, "{}", n[i])?,
                    None => write!(f, "x{i}")?,
                }
                if x > 1 {
                    write!(f, "^{x}")?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Display for SparsePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        PolyDisplay { p: self, names: None }.fmt(f)
    }
}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
    weights: &'a [u64],
    names: &'a [&'a str],
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn err(&self, what: &str) -> Error {
        Error::Parse(format!("{what} at offset {}", self.pos))
    }

    fn number(&mut self) -> Option<u64> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        core::str::from_utf8(&self.s[start..self.pos]).ok()?.parse().ok()
    }

    /// The longest variable name starting at the cursor, so that juxtaposed
    /// factors such as `x0x2` split correctly.
    fn variable(&mut self) -> Result<usize> {
        self.skip_ws();
        let rest = &self.s[self.pos..];
        let (i, len) = self
            .names
            .iter()
            .enumerate()
            .filter(|(_, n)| rest.starts_with(n.as_bytes()))
            .map(|(i, n)| (i, n.len()))
            .max_by_key(|&(_, l)| l)
            .ok_or_else(|| self.err("unknown variable"))?;
        self.pos += len;
        Ok(i)
    }

    fn poly(mut self) -> Result<SparsePolynomial> {
        let mut out = SparsePolynomial::zero(self.weights);
        let mut first = true;
        loop {
            let sign = match self.peek() {
                None if !first => break,
                None => return Err(self.err("empty polynomial")),
                Some(b'+') => {
                    self.pos += 1;
                    1
                }
                Some(b'-') => {
                    self.pos += 1;
                    -1
                }
                Some(_) if first => 1,
                Some(_) => return Err(self.err("expected + or -")),
            };
            first = false;
            let t = self.term()?;
            out.add_term(t.0, t.1 * sign);
        }
        Ok(out)
    }

    fn term(&mut self) -> Result<(Monomial, BigInt)> {
        let mut coef = BigInt::one();
        let mut exps = vec![0u32; self.weights.len()];
        let mut any = false;
        loop {
            match self.peek() {
                Some(b'*') if any => {
                    self.pos += 1;
                    continue;
                }
                Some(ch) if ch.is_ascii_digit() => {
                    coef *= BigInt::from(self.number().ok_or_else(|| self.err("bad number"))?);
                }
                Some(ch) if ch.is_ascii_alphabetic() => {
                    let i = self.variable()?;
                    let mut k = 1;
                    if self.peek() == Some(b'^') {
                        self.pos += 1;
                        k = self.number().ok_or_else(|| self.err("bad exponent"))? as u32;
                    }
                    exps[i] += k;
                }
                _ => break,
            }
            any = true;
        }
        if !any {
            return Err(self.err("expected a term"));
        }
        Ok((exps, coef))
    }
}

/// A polynomial in one variable `t`, as the image of the toric map.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct UnivariatePolynomial {
    terms: BTreeMap<u64, BigInt>,
}

impl UnivariatePolynomial {
    fn add_term(&mut self, d: u64, c: BigInt) {
        let e = self.terms.entry(d).or_default();
        *e += c;
        if e.is_zero() {
            self.terms.remove(&d);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, d: u64) -> BigInt {
        self.terms.get(&d).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&u64, &BigInt)> {
        self.terms.iter()
    }
}

impl Mul for &UnivariatePolynomial {
    type Output = UnivariatePolynomial;
    fn mul(self, o: &UnivariatePolynomial) -> UnivariatePolynomial {
        let mut out = UnivariatePolynomial::default();
        for (a, c) in &self.terms {
            for (b, d) in &o.terms {
                out.add_term(a + b, c * d);
            }
        }
        out
    }
}

/// A matrix of polynomials sharing one ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix {
    rows: Vec<Vec<SparsePolynomial>>,
}

impl PolyMatrix {
    pub fn new(rows: Vec<Vec<SparsePolynomial>>) -> Self {
        if let Some(r) = rows.first() {
            assert!(rows.iter().all(|x| x.len() == r.len()));
        }
        Self { rows }
    }

    pub fn zeros(weights: &[u64], nrows: usize, ncols: usize) -> Self {
        Self::new(vec![vec![SparsePolynomial::zero(weights); ncols]; nrows])
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.rows.first().map_or(0, |r| r.len())
    }

    pub fn get(&self, i: usize, j: usize) -> &SparsePolynomial {
        &self.rows[i][j]
    }

    pub fn set(&mut self, i: usize, j: usize, p: SparsePolynomial) {
        self.rows[i][j] = p;
    }

    pub fn rows(&self) -> &[Vec<SparsePolynomial>] {
        &self.rows
    }

    pub fn mul_vec(&self, v: &[SparsePolynomial]) -> Vec<SparsePolynomial> {
        assert_eq!(self.ncols(), v.len());
        self.rows
            .iter()
            .map(|row| {
                let mut acc = SparsePolynomial::zero(v[0].weights());
                for (a, b) in row.iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc = &acc + &(a * b);
                    }
                }
                acc
            })
            .collect()
    }

    pub fn map(&self, f: impl Fn(&SparsePolynomial) -> SparsePolynomial) -> Self {
        Self::new(self.rows.iter().map(|r| r.iter().map(&f).collect()).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().flatten().all(|p| p.is_zero())
    }
}
