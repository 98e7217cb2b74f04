//! Numerical semigroups: construction, invariants, Apéry sets, sequence
//! classes and the genus tree.

use alloc::collections::BinaryHeap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Reverse;
use core::fmt;

use num_integer::Integer;

use crate::{Error, Result};

/// A co-finite additive submonoid of ℕ.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NumericalSemigroup {
    min_generators: Vec<u32>,
    gaps: Vec<u32>,
    small_elements: Vec<u32>,
    conductor: u32,
}

impl NumericalSemigroup {
    /// The semigroup ℕ itself.
    pub fn naturals() -> Self {
        Self {
            min_generators: vec![1],
            gaps: Vec::new(),
            small_elements: Vec::new(),
            conductor: 0,
        }
    }

    /// `{0, e, e+1, ...}`.
    pub fn ordinary(e: u32) -> Result<Self> {
        if e == 0 {
            return Err(Error::ZeroGenerator);
        }
        if e == 1 {
            return Ok(Self::naturals());
        }
        Self::from_small_elements(&[0], e)
    }

    /// The semigroup generated by `gens`.
    pub fn from_generators(gens: &[u32]) -> Result<Self> {
        if gens.is_empty() {
            return Err(Error::NoGenerators);
        }
        if gens.contains(&0) {
            return Err(Error::ZeroGenerator);
        }
        let g = gens.iter().fold(0u32, |acc, &x| acc.gcd(&x));
        if g != 1 {
            return Err(Error::NotCofinite(g as u64));
        }
        let n = *gens.iter().min().unwrap();
        if n == 1 {
            return Ok(Self::naturals());
        }
        // Shortest paths over residues mod n give the Apéry set.
        let nu = n as usize;
        let mut w = vec![u64::MAX; nu];
        w[0] = 0;
        let mut heap = BinaryHeap::new();
        heap.push(Reverse((0u64, 0usize)));
        while let Some(Reverse((dist, r))) = heap.pop() {
            if dist > w[r] {
                continue;
            }
            for &a in gens {
                let nd = dist + a as u64;
                let nr = (r + a as usize) % nu;
                if nd < w[nr] {
                    w[nr] = nd;
                    heap.push(Reverse((nd, nr)));
                }
            }
        }
        let frob = *w.iter().max().unwrap() - n as u64;
        let c = (frob + 1) as u32;
        let member = |x: u32| x as u64 >= w[x as usize % nu];
        Ok(Self::from_predicate(c, member))
    }

    /// The semigroup `elements ∪ [conductor, ∞)`.
    pub fn from_small_elements(elements: &[u32], conductor: u32) -> Result<Self> {
        let mut el: Vec<u32> = elements.to_vec();
        el.sort_unstable();
        el.dedup();
        if conductor == 0 {
            if el.is_empty() || el == [0] {
                return Ok(Self::naturals());
            }
            return Err(Error::NotASemigroup("elements listed below conductor 0".into()));
        }
        if el.first() != Some(&0) {
            return Err(Error::NotASemigroup("0 is missing".into()));
        }
        if let Some(&x) = el.iter().find(|&&x| x >= conductor) {
            return Err(Error::NotASemigroup(format!("{x} is not below the conductor")));
        }
        if el.last() == Some(&(conductor - 1)) {
            return Err(Error::ConductorNotMinimal);
        }
        for (i, &a) in el.iter().enumerate() {
            for &b in &el[i..] {
                let s = a + b;
                if s < conductor && el.binary_search(&s).is_err() {
                    return Err(Error::NotASemigroup(format!("{a} + {b} = {s} is missing")));
                }
            }
        }
        Ok(Self::from_predicate(conductor, |x| el.binary_search(&x).is_ok()))
    }

    /// Builds from a membership predicate valid below `c`; `c` must be the conductor.
    fn from_predicate(c: u32, member: impl Fn(u32) -> bool) -> Self {
        let mut small = Vec::new();
        let mut gaps = Vec::new();
        for x in 0..c {
            if member(x) {
                small.push(x);
            } else {
                gaps.push(x);
            }
        }
        let mut s = Self {
            min_generators: Vec::new(),
            gaps,
            small_elements: small,
            conductor: c,
        };
        s.min_generators = s.scan_min_generators();
        s
    }

    fn scan_min_generators(&self) -> Vec<u32> {
        if self.conductor == 0 {
            return vec![1];
        }
        let e = self.multiplicity();
        let mut out = Vec::new();
        for s in e..self.conductor + e {
            if !self.contains(s) {
                continue;
            }
            let decomposable = (e..=s / 2).any(|a| self.contains(a) && self.contains(s - a));
            if !decomposable {
                out.push(s);
            }
        }
        out
    }

    pub fn min_generators(&self) -> &[u32] {
        &self.min_generators
    }

    pub fn gaps(&self) -> &[u32] {
        &self.gaps
    }

    /// Members below the conductor.
    pub fn small_elements(&self) -> &[u32] {
        &self.small_elements
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn genus(&self) -> u32 {
        self.gaps.len() as u32
    }

    /// Smallest nonzero member.
    pub fn multiplicity(&self) -> u32 {
        match self.small_elements.get(1) {
            Some(&m) => m,
            None => self.conductor.max(1),
        }
    }

    pub fn embedding_dimension(&self) -> usize {
        self.min_generators.len()
    }

    /// Largest gap, `None` for ℕ.
    pub fn frobenius(&self) -> Option<u32> {
        self.gaps.last().copied()
    }

    pub fn is_naturals(&self) -> bool {
        self.conductor == 0
    }

    pub fn is_ordinary(&self) -> bool {
        self.small_elements.len() <= 1
    }

    pub fn contains(&self, x: u32) -> bool {
        x >= self.conductor || self.small_elements.binary_search(&x).is_ok()
    }

    /// Membership for signed integers; negatives are never members.
    pub fn contains_i(&self, x: i64) -> bool {
        x >= 0 && (x >= self.conductor as i64 || self.contains(x as u32))
    }

    /// The `j`-th member `s_j`, with `s_0 = 0`.
    pub fn nth_member(&self, j: usize) -> u32 {
        let k = self.small_elements.len();
        if j < k {
            self.small_elements[j]
        } else {
            self.conductor + (j - k) as u32
        }
    }

    /// Index `j` with `s_j = x`.
    pub fn index_of(&self, x: u32) -> Result<usize> {
        if x >= self.conductor {
            Ok(self.small_elements.len() + (x - self.conductor) as usize)
        } else {
            self.small_elements
                .binary_search(&x)
                .map_err(|_| Error::NotAMember(x as u64))
        }
    }

    /// Members `s` with `s <= bound`, ascending.
    pub fn members_up_to(&self, bound: u32) -> impl Iterator<Item = u32> + '_ {
        (0..=bound).filter(move |&x| self.contains(x))
    }

    /// The member following `x`.
    pub fn next_member(&self, x: u32) -> u32 {
        (x + 1..).find(|&y| self.contains(y)).unwrap()
    }

    /// Least member in each residue class mod `n`, indexed by residue.
    pub fn apery_set(&self, n: u32) -> Result<Vec<u32>> {
        if n == 0 || !self.contains(n) {
            return Err(Error::NotAMember(n as u64));
        }
        let mut out = vec![u32::MAX; n as usize];
        let mut found = 0;
        let mut x = 0u32;
        while found < n {
            let r = (x % n) as usize;
            if out[r] == u32::MAX && self.contains(x) {
                out[r] = x;
                found += 1;
            }
            x += 1;
        }
        Ok(out)
    }

    /// Gaps `x` with `x + (S∖{0}) ⊆ S` (pseudo-Frobenius numbers).
    pub fn pseudo_frobenius(&self) -> Vec<u32> {
        self.gaps
            .iter()
            .copied()
            .filter(|&x| self.min_generators.iter().all(|&n| self.contains(x + n)))
            .collect()
    }

    /// Σ (h_i − i) over the gaps h_1 < … < h_g.
    pub fn weight(&self) -> u64 {
        self.gaps
            .iter()
            .enumerate()
            .map(|(i, &h)| (h as u64) - (i as u64 + 1))
            .sum()
    }

    /// `S ∖ {x}` for a minimal generator `x`.
    pub fn remove_generator(&self, x: u32) -> Result<Self> {
        if !self.min_generators.contains(&x) {
            return Err(Error::NotASemigroup(format!("{x} is not a minimal generator")));
        }
        let c = self.conductor.max(x + 1);
        Ok(Self::from_predicate(c, |y| y != x && self.contains(y)))
    }

    /// The invariants e, c, d, c′, d′, ℓ, s̃, g, τ.
    pub fn profile(&self) -> SemigroupProfile {
        let c = self.conductor;
        let e = self.multiplicity();
        let g = self.genus();
        let tau = self.pseudo_frobenius().len() as u32;
        let embdim = self.embedding_dimension();
        if self.is_naturals() {
            return SemigroupProfile {
                e,
                c,
                d: None,
                c_sub: None,
                d_prime: None,
                ell: None,
                s_tilde: None,
                g,
                embdim,
                tau,
                is_ordinary: true,
                is_acute: true,
            };
        }
        let d = *self.small_elements.last().unwrap();
        let ell = c - 1 - d;
        if self.is_ordinary() {
            return SemigroupProfile {
                e,
                c,
                d: Some(d),
                c_sub: None,
                d_prime: None,
                ell: Some(ell),
                s_tilde: None,
                g,
                embdim,
                tau,
                is_ordinary: true,
                is_acute: true,
            };
        }
        let mut c_sub = d;
        while self.contains(c_sub - 1) {
            c_sub -= 1;
        }
        let d_prime = *self.small_elements.iter().rev().find(|&&x| x < c_sub).unwrap();
        let s_tilde = *self
            .small_elements
            .iter()
            .rev()
            .find(|&&s| !self.contains_i(s as i64 - ell as i64))
            .unwrap();
        SemigroupProfile {
            e,
            c,
            d: Some(d),
            c_sub: Some(c_sub),
            d_prime: Some(d_prime),
            ell: Some(ell),
            s_tilde: Some(s_tilde),
            g,
            embdim,
            tau,
            is_ordinary: false,
            is_acute: c - d <= c_sub - d_prime,
        }
    }

    /// Arithmetic-type structure of the minimal generators.
    pub fn classify_sequence(&self) -> SequenceClass {
        classify(&self.min_generators)
    }
}

fn arithmetic_step(xs: &[u32]) -> Option<u32> {
    if xs.len() < 2 {
        return None;
    }
    let d = xs[1] - xs[0];
    xs.windows(2).all(|w| w[1] - w[0] == d).then_some(d)
}

fn classify(gens: &[u32]) -> SequenceClass {
    if gens.len() < 2 {
        return SequenceClass::None;
    }
    if let Some(d) = arithmetic_step(gens) {
        return SequenceClass::Arithmetic { d };
    }
    if gens.len() >= 3 {
        if let Some(d) = arithmetic_step(&gens[1..]) {
            let m0 = gens[0];
            if gens[1] > d && (gens[1] - d).is_multiple_of(m0) {
                let a = (gens[1] - d) / m0;
                if a >= 1 {
                    return SequenceClass::GeneralizedArithmetic { a, d };
                }
            }
        }
        for j in 0..gens.len() {
            let rest: Vec<u32> = gens
                .iter()
                .enumerate()
                .filter(|&(i, _)| i != j)
                .map(|(_, &x)| x)
                .collect();
            if let Some(d) = arithmetic_step(&rest) {
                return SequenceClass::AlmostArithmetic { extra: gens[j], d };
            }
        }
    }
    SequenceClass::None
}

/// How the minimal generators line up.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SequenceClass {
    /// `n_i = n_0 + i·d`.
    Arithmetic { d: u32 },
    /// `m_0` together with `a·m_0 + i·d`, `i = 1..p`, with `a ≥ 2`.
    GeneralizedArithmetic { a: u32, d: u32 },
    /// An arithmetic sequence plus one extra generator.
    AlmostArithmetic { extra: u32, d: u32 },
    None,
}

impl SequenceClass {
    /// Arithmetic sequences are generalized arithmetic with `a = 1`.
    pub fn is_generalized_arithmetic(&self) -> bool {
        matches!(self, Self::Arithmetic { .. } | Self::GeneralizedArithmetic { .. })
    }

    /// Every generalized arithmetic sequence with at least three terms is
    /// also almost arithmetic; two-generated semigroups count as well.
    pub fn is_almost_arithmetic(&self) -> bool {
        !matches!(self, Self::None)
    }
}

/// The invariants attached to a semigroup. Fields that are undefined for the
/// given shape are `None`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SemigroupProfile {
    pub e: u32,
    pub c: u32,
    pub d: Option<u32>,
    pub c_sub: Option<u32>,
    pub d_prime: Option<u32>,
    pub ell: Option<u32>,
    pub s_tilde: Option<u32>,
    pub g: u32,
    pub embdim: usize,
    pub tau: u32,
    pub is_ordinary: bool,
    pub is_acute: bool,
}

impl fmt::Display for NumericalSemigroup {
    /// `S = <0, e, ..., d, c ->; gaps = {...}`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "S = <")?;
        for x in &self.small_elements {
            write!(f, "{x}, ")?;
        }
        write!(f, "{} ->; gaps = {{", self.conductor)?;
        for (i, x) in self.gaps.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "}}")
    }
}

/// Depth-first walk of the genus tree, emitting every semigroup of genus
/// at most `g_max` exactly once.
pub struct GenusTree {
    g_max: u32,
    stack: Vec<NumericalSemigroup>,
}

impl GenusTree {
    pub fn new(g_max: u32) -> Self {
        Self {
            g_max,
            stack: vec![NumericalSemigroup::naturals()],
        }
    }
}

impl Iterator for GenusTree {
    type Item = NumericalSemigroup;

    fn next(&mut self) -> Option<Self::Item> {
        let s = self.stack.pop()?;
        if s.genus() < self.g_max {
            let f = s.frobenius().map_or(0, |f| f + 1);
            for &x in s.min_generators().iter().rev() {
                if x >= f {
                    self.stack.push(s.remove_generator(x).unwrap());
                }
            }
        }
        Some(s)
    }
}

pub fn enumerate_by_genus(g_max: u32) -> GenusTree {
    GenusTree::new(g_max)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ex24() -> NumericalSemigroup {
        NumericalSemigroup::from_small_elements(&[0, 8, 12, 14, 15, 16], 20).unwrap()
    }

    #[test]
    fn generators_4_9_11() {
        let s = NumericalSemigroup::from_generators(&[4, 9, 11]).unwrap();
        assert_eq!(s.conductor(), 15);
        assert_eq!(s.gaps(), &[1, 2, 3, 5, 6, 7, 10, 14]);
        assert_eq!(s.genus(), 8);
        assert_eq!(s.min_generators(), &[4, 9, 11]);
        let t = NumericalSemigroup::from_small_elements(&[0, 4, 8, 9, 11, 12, 13], 15).unwrap();
        assert_eq!(s, t);
    }

    #[test]
    fn naturals_and_errors() {
        let n = NumericalSemigroup::from_generators(&[1]).unwrap();
        assert!(n.gaps().is_empty());
        assert_eq!(n.conductor(), 0);
        assert_eq!(NumericalSemigroup::from_generators(&[]), Err(Error::NoGenerators));
        assert_eq!(NumericalSemigroup::from_generators(&[4, 6]), Err(Error::NotCofinite(2)));
        assert!(matches!(
            NumericalSemigroup::from_small_elements(&[0, 5, 7], 11),
            Err(Error::NotASemigroup(_))
        ));
        assert_eq!(
            NumericalSemigroup::from_small_elements(&[0, 4], 5),
            Err(Error::ConductorNotMinimal)
        );
    }

    #[test]
    fn profile_example() {
        let p = ex24().profile();
        assert_eq!(p.e, 8);
        assert_eq!(p.d_prime, Some(12));
        assert_eq!(p.c_sub, Some(14));
        assert_eq!(p.d, Some(16));
        assert_eq!(p.c, 20);
        assert_eq!(p.ell, Some(3));
        assert_eq!(p.s_tilde, Some(16));
        assert!(!p.is_acute);
    }

    #[test]
    fn profile_4_9_11() {
        let p = NumericalSemigroup::from_generators(&[4, 9, 11]).unwrap().profile();
        assert_eq!((p.e, p.d, p.c_sub, p.d_prime, p.ell, p.s_tilde), (4, Some(13), Some(11), Some(9), Some(1), Some(11)));
        assert!(p.is_acute);
    }

    #[test]
    fn profile_ordinary() {
        let s = NumericalSemigroup::ordinary(3).unwrap();
        let p = s.profile();
        assert!(p.is_ordinary);
        assert_eq!((p.e, p.c, p.g), (3, 3, 2));
        assert_eq!(p.s_tilde, None);
        assert_eq!(p.d_prime, None);
    }

    #[test]
    fn apery() {
        let s = NumericalSemigroup::from_generators(&[4, 9, 11]).unwrap();
        assert_eq!(s.apery_set(4).unwrap(), vec![0, 9, 18, 11]);
        let o = NumericalSemigroup::ordinary(5).unwrap();
        assert_eq!(o.apery_set(5).unwrap(), vec![0, 6, 7, 8, 9]);
        assert_eq!(s.apery_set(5), Err(Error::NotAMember(5)));
    }

    #[test]
    fn sequences() {
        let c = |g: &[u32]| NumericalSemigroup::from_generators(g).unwrap().classify_sequence();
        assert_eq!(c(&[5, 8, 11, 14]), SequenceClass::Arithmetic { d: 3 });
        assert_eq!(c(&[4, 7, 10, 13]), SequenceClass::Arithmetic { d: 3 });
        assert_eq!(c(&[5, 12, 14]), SequenceClass::GeneralizedArithmetic { a: 2, d: 2 });
        assert_eq!(c(&[5, 11, 17, 23]), SequenceClass::Arithmetic { d: 6 });
        assert!(matches!(c(&[6, 7, 8, 11]), SequenceClass::AlmostArithmetic { extra: 11, d: 1 }));
    }

    #[test]
    fn genus_counts() {
        let mut counts = [0u32; 9];
        for s in enumerate_by_genus(8) {
            counts[s.genus() as usize] += 1;
        }
        assert_eq!(counts, [1, 1, 2, 4, 7, 12, 23, 39, 67]);
        assert_eq!(enumerate_by_genus(0).collect::<Vec<_>>(), vec![NumericalSemigroup::naturals()]);
    }

    #[test]
    fn display() {
        let s = NumericalSemigroup::from_generators(&[3, 5]).unwrap();
        assert_eq!(std::format!("{s}"), "S = <0, 3, 5, 6, 8 ->; gaps = {1, 2, 4, 7}");
    }

    #[test]
    fn remove_generator_child() {
        let s = NumericalSemigroup::ordinary(3).unwrap();
        let t = s.remove_generator(4).unwrap();
        assert_eq!(t.gaps(), &[1, 2, 4]);
        assert_eq!(t.min_generators(), &[3, 5, 7]);
    }
}
