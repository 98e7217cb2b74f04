//! Necessary conditions for a semigroup to be Weierstrass: gap sumsets,
//! symmetric doubling and γ-hyperelliptic reduction.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::semigroup::NumericalSemigroup;
use crate::{Error, Result};

/// A bitset of non-negative integers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BitSet {
    words: Vec<u64>,
}

impl BitSet {
    pub fn with_capacity(bits: usize) -> Self {
        Self {
            words: vec![0; bits / 64 + 1],
        }
    }

    pub fn insert(&mut self, i: usize) {
        let w = i / 64;
        if w >= self.words.len() {
            self.words.resize(w + 1, 0);
        }
        self.words[w] |= 1 << (i % 64);
    }

    pub fn contains(&self, i: usize) -> bool {
        self.words.get(i / 64).is_some_and(|w| w >> (i % 64) & 1 == 1)
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// `self | (other << shift)`.
    fn or_shifted(&mut self, other: &BitSet, shift: usize) {
        let ws = shift / 64;
        let bs = shift % 64;
        let need = other.words.len() + ws + 1;
        if self.words.len() < need {
            self.words.resize(need, 0);
        }
        for (i, &w) in other.words.iter().enumerate() {
            if w == 0 {
                continue;
            }
            self.words[i + ws] |= w << bs;
            if bs > 0 {
                self.words[i + ws + 1] |= w >> (64 - bs);
            }
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            (0..64).filter(move |b| w >> b & 1 == 1).map(move |b| i * 64 + b)
        })
    }
}

fn gap_set(sg: &NumericalSemigroup) -> BitSet {
    let mut h = BitSet::with_capacity(sg.conductor() as usize);
    for &x in sg.gaps() {
        h.insert(x as usize);
    }
    h
}

fn sumset(a: &BitSet, gaps: &[u32]) -> BitSet {
    let mut out = BitSet::with_capacity(0);
    for &h in gaps {
        out.or_shifted(a, h as usize);
    }
    out
}

/// All sums of `m` gaps, with repetition.
pub fn sumset_hm(sg: &NumericalSemigroup, m: u32) -> Result<BitSet> {
    if sg.gaps().is_empty() {
        return Err(Error::NoGaps);
    }
    if m < 1 {
        return Err(Error::HypothesisViolated(format!("m = {m} < 1")));
    }
    let mut acc = gap_set(sg);
    for _ in 1..m {
        acc = sumset(&acc, sg.gaps());
    }
    Ok(acc)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SumsetRecord {
    pub m: u32,
    pub size: u64,
    pub bound: u64,
    pub violated: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ObstructionVerdict {
    Obstructed,
    NoObstructionFound,
}

impl ObstructionVerdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            Self::Obstructed => "obstructed (non-Weierstrass)",
            Self::NoObstructionFound => "no obstruction found",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ObstructionReport {
    pub genus: u32,
    pub records: Vec<SumsetRecord>,
    pub first_violation: Option<u32>,
    /// `2c < 3g` holds, so no `m` can violate the inequality.
    pub shortcut_applied: bool,
    /// The inequality is only meaningful for genus at least 2.
    pub applicable: bool,
}

impl ObstructionReport {
    pub fn verdict(&self) -> ObstructionVerdict {
        if self.first_violation.is_some() {
            ObstructionVerdict::Obstructed
        } else {
            ObstructionVerdict::NoObstructionFound
        }
    }
}

/// Checks `#H_m ≤ (2m − 1)(g − 1)` for `m = 2..=m_max`.
pub fn buchweitz_test(sg: &NumericalSemigroup, m_max: u32) -> Result<ObstructionReport> {
    if m_max < 2 {
        return Err(Error::HypothesisViolated(format!("m_max = {m_max} < 2")));
    }
    let g = sg.genus();
    let mut report = ObstructionReport {
        genus: g,
        records: Vec::new(),
        first_violation: None,
        shortcut_applied: false,
        applicable: g >= 2,
    };
    if g < 2 {
        return Ok(report);
    }
    if 2 * sg.conductor() < 3 * g {
        report.shortcut_applied = true;
        return Ok(report);
    }
    let gaps = sg.gaps();
    let mut acc = gap_set(sg);
    for m in 2..=m_max {
        acc = sumset(&acc, gaps);
        let size = acc.len() as u64;
        let bound = (2 * m as u64 - 1) * (g as u64 - 1);
        let violated = size > bound;
        if violated && report.first_violation.is_none() {
            report.first_violation = Some(m);
        }
        report.records.push(SumsetRecord { m, size, bound, violated });
    }
    Ok(report)
}

/// The symmetric semigroup `{2s : s ∈ S′} ∪ {2g − 1 − 2t : t ∉ S′}` of genus `g`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TorresDouble {
    pub semigroup: NumericalSemigroup,
    /// `S′` fails the sumset test, so the double is not Weierstrass either.
    pub non_weierstrass_by_construction: bool,
}

pub fn torres_double(s_prime: &NumericalSemigroup, g: u32) -> Result<TorresDouble> {
    let gamma = s_prime.genus();
    if g < 6 * gamma + 4 {
        return Err(Error::HypothesisViolated(format!("g = {g} < 6*{gamma} + 4")));
    }
    let two_g = 2 * g as i64;
    let member = |x: u32| {
        let x = x as i64;
        if x % 2 == 0 {
            s_prime.contains_i(x / 2)
        } else {
            !s_prime.contains_i((two_g - 1 - x) / 2)
        }
    };
    let c = 2 * g;
    let small: Vec<u32> = (0..c).filter(|&x| member(x)).collect();
    let semigroup = NumericalSemigroup::from_small_elements(&small, c)?;
    let non_weierstrass_by_construction = !s_prime.gaps().is_empty()
        && buchweitz_test(s_prime, 3)?.verdict() == ObstructionVerdict::Obstructed;
    Ok(TorresDouble {
        semigroup,
        non_weierstrass_by_construction,
    })
}

/// Which condition stopped a γ-hyperelliptic reduction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReduceFailure {
    /// Not all of the first γ nonzero elements are even.
    OddPrefix,
    /// `m_γ ≠ 4γ`.
    WrongMGamma,
    /// `4γ + 2 ∉ S`.
    Missing4GammaPlus2,
    /// `g < 6γ + 4`.
    GenusTooSmall,
}

/// Returns `{0, m_1/2, …, m_γ/2} ∪ [2γ, ∞)` when `S` is γ-hyperelliptic with `g ≥ 6γ + 4`.
pub fn gamma_hyperelliptic_reduce(
    sg: &NumericalSemigroup,
    gamma: u32,
) -> core::result::Result<NumericalSemigroup, ReduceFailure> {
    let prefix: Vec<u32> = (1..=gamma as usize).map(|j| sg.nth_member(j)).collect();
    if prefix.iter().any(|&m| m % 2 == 1) {
        return Err(ReduceFailure::OddPrefix);
    }
    let m_gamma = if gamma == 0 { 0 } else { prefix[gamma as usize - 1] };
    if m_gamma != 4 * gamma {
        return Err(ReduceFailure::WrongMGamma);
    }
    if !sg.contains(4 * gamma + 2) {
        return Err(ReduceFailure::Missing4GammaPlus2);
    }
    if sg.genus() < 6 * gamma + 4 {
        return Err(ReduceFailure::GenusTooSmall);
    }
    let mut small: Vec<u32> = core::iter::once(0).chain(prefix.iter().map(|m| m / 2)).collect();
    small.retain(|&x| x < 2 * gamma);
    let mut c = 2 * gamma;
    while c > 0 && small.last() == Some(&(c - 1)) {
        small.pop();
        c -= 1;
    }
    Ok(NumericalSemigroup::from_small_elements(&small, c).expect("reduction is a semigroup"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn buchweitz() -> NumericalSemigroup {
        NumericalSemigroup::from_generators(&[13, 14, 15, 16, 17, 18, 20, 22, 23]).unwrap()
    }

    #[test]
    fn buchweitz_h2() {
        let s = buchweitz();
        assert_eq!(s.genus(), 16);
        assert_eq!(s.conductor(), 26);
        assert_eq!(sumset_hm(&s, 2).unwrap().len(), 46);
        let r = buchweitz_test(&s, 2).unwrap();
        assert_eq!(r.first_violation, Some(2));
        assert_eq!(r.records[0].bound, 45);
        assert_eq!(r.verdict().as_str(), "obstructed (non-Weierstrass)");
    }

    #[test]
    fn small_sumsets() {
        let s = NumericalSemigroup::ordinary(2).unwrap();
        let h3 = sumset_hm(&s, 3).unwrap();
        assert_eq!(h3.iter().collect::<Vec<_>>(), vec![3]);
        assert_eq!(sumset_hm(&NumericalSemigroup::naturals(), 2), Err(Error::NoGaps));
    }

    #[test]
    fn shortcut() {
        let s = NumericalSemigroup::ordinary(5).unwrap();
        assert!(2 * s.conductor() < 3 * s.genus());
        let r = buchweitz_test(&s, 4).unwrap();
        assert!(r.shortcut_applied);
        assert_eq!(r.verdict(), ObstructionVerdict::NoObstructionFound);
    }

    #[test]
    fn torres_buchweitz() {
        let t = torres_double(&buchweitz(), 100).unwrap();
        assert_eq!(t.semigroup.genus(), 100);
        assert!(t.non_weierstrass_by_construction);
        assert_eq!(torres_double(&buchweitz(), 99).unwrap_err(), Error::HypothesisViolated("g = 99 < 6*16 + 4".into()));
        assert_eq!(gamma_hyperelliptic_reduce(&t.semigroup, 16), Ok(buchweitz()));
    }

    #[test]
    fn torres_naturals() {
        let t = torres_double(&NumericalSemigroup::naturals(), 4).unwrap();
        assert_eq!(t.semigroup.gaps(), &[1, 3, 5, 7]);
        assert!(!t.non_weierstrass_by_construction);
        assert_eq!(gamma_hyperelliptic_reduce(&t.semigroup, 0), Ok(NumericalSemigroup::naturals()));
    }

    #[test]
    fn reduce_failures() {
        let s = NumericalSemigroup::from_generators(&[3, 5]).unwrap();
        assert_eq!(gamma_hyperelliptic_reduce(&s, 1), Err(ReduceFailure::OddPrefix));
        let o = NumericalSemigroup::ordinary(5).unwrap();
        assert_eq!(gamma_hyperelliptic_reduce(&o, 0), Err(ReduceFailure::Missing4GammaPlus2));
    }
}
