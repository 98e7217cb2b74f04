//! The ν-sequence, its A/B/C/D decomposition, `s_m`, the order bound and
//! the `s_m ≥ c + d − e` check.

use alloc::vec::Vec;

use crate::semigroup::NumericalSemigroup;
use crate::{Error, Result};

/// Number of ordered pairs of members summing to `s`.
pub fn nu(sg: &NumericalSemigroup, s: u32) -> Result<u64> {
    if !sg.contains(s) {
        return Err(Error::NotAMember(s as u64));
    }
    Ok(nu_unchecked(sg, s))
}

fn nu_unchecked(sg: &NumericalSemigroup, s: u32) -> u64 {
    (0..=s).filter(|&a| sg.contains(a) && sg.contains(s - a)).count() as u64
}

/// Sizes of A(s), B(s), C(s), D(s).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct PartitionCounts {
    pub a: u64,
    pub b: u64,
    pub c: u64,
    pub d: u64,
}

impl PartitionCounts {
    pub fn total(&self) -> u64 {
        self.a + self.b + self.c + self.d
    }
}

struct Marks {
    c: u32,
    d: u32,
    c_sub: u32,
    d_prime: u32,
}

fn marks(sg: &NumericalSemigroup) -> Result<Marks> {
    let p = sg.profile();
    if p.is_ordinary {
        return Err(Error::PartitionUndefined);
    }
    Ok(Marks {
        c: p.c,
        d: p.d.unwrap(),
        c_sub: p.c_sub.unwrap(),
        d_prime: p.d_prime.unwrap(),
    })
}

fn counts_with(sg: &NumericalSemigroup, m: &Marks, s: u32) -> PartitionCounts {
    let mut out = PartitionCounts::default();
    for x in 0..=s {
        let y = s - x;
        if !(sg.contains(x) && sg.contains(y)) {
            continue;
        }
        let hi = x.max(y);
        let lo = x.min(y);
        if hi >= m.c {
            out.d += 1;
        } else if hi <= m.d_prime {
            out.c += 1;
        } else if lo >= m.c_sub && hi <= m.d {
            out.b += 1;
        } else {
            out.a += 1;
        }
    }
    out
}

/// The A/B/C/D partition of the pairs summing to `s`.
pub fn partition_counts(sg: &NumericalSemigroup, s: u32) -> Result<PartitionCounts> {
    let m = marks(sg)?;
    if !sg.contains(s) {
        return Err(Error::NotAMember(s as u64));
    }
    Ok(counts_with(sg, &m, s))
}

/// Differences of the partition counts between `s_i` and `s_{i+1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DeltaProfile {
    pub s_i: u32,
    pub s_next: u32,
    pub alpha: i64,
    pub beta: i64,
    pub gamma: i64,
    pub delta: i64,
    pub at_s: PartitionCounts,
    pub at_next: PartitionCounts,
}

impl DeltaProfile {
    /// ν(s_{i+1}) − ν(s_i).
    pub fn eta(&self) -> i64 {
        self.alpha + self.beta + self.gamma + self.delta
    }
}

pub fn delta_profile(sg: &NumericalSemigroup, s_i: u32) -> Result<DeltaProfile> {
    let m = marks(sg)?;
    if !sg.contains(s_i) {
        return Err(Error::NotAMember(s_i as u64));
    }
    let s_next = sg.next_member(s_i);
    let at_s = counts_with(sg, &m, s_i);
    let at_next = counts_with(sg, &m, s_next);
    let diff = |a: u64, b: u64| b as i64 - a as i64;
    Ok(DeltaProfile {
        s_i,
        s_next,
        alpha: diff(at_s.a, at_next.a),
        beta: diff(at_s.b, at_next.b),
        gamma: diff(at_s.c, at_next.c),
        delta: diff(at_s.d, at_next.d),
        at_s,
        at_next,
    })
}

/// Membership pattern `(s_{i+1} − c ∈ S, s_i − d ∈ S, s_{i+1} − c′ ∈ S)`.
pub type Pattern = (bool, bool, bool);

/// The tabulated `(α, β, δ)` for `s_i ≤ 2d′ − 1`, and the offset of η from γ.
pub fn eta_table(p: Pattern) -> ((i64, i64, i64), i64) {
    match p {
        (false, true, false) => ((-2, 0, 0), -2),
        (false, true, true) => ((0, 0, 0), 0),
        (false, false, false) => ((0, 0, 0), 0),
        (true, true, false) => ((-2, 0, 2), 0),
        (false, false, true) => ((2, 0, 0), 2),
        (true, false, false) => ((0, 0, 2), 2),
        (true, true, true) => ((0, 0, 2), 2),
        (true, false, true) => ((2, 0, 2), 4),
    }
}

/// The membership pattern at `s_i`.
pub fn pattern_at(sg: &NumericalSemigroup, s_i: u32) -> Result<Pattern> {
    let m = marks(sg)?;
    let next = sg.next_member(s_i) as i64;
    Ok((
        sg.contains_i(next - m.c as i64),
        sg.contains_i(s_i as i64 - m.d as i64),
        sg.contains_i(next - m.c_sub as i64),
    ))
}

/// ν over a window of members, with the position of the last strict drop.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NuProfile {
    pub s_values: Vec<u32>,
    pub nu: Vec<u64>,
    pub m_index: Option<usize>,
    pub s_m: Option<u32>,
    /// Largest member considered.
    pub window: u32,
}

/// Computes ν over members up to `max(2d, 2c) + e` and locates `s_m`.
///
/// Panics if ν fails to grow by one per step beyond `2c`.
pub fn find_sm(sg: &NumericalSemigroup) -> NuProfile {
    let c = sg.conductor();
    let d = sg.small_elements().last().copied().unwrap_or(0);
    let e = sg.multiplicity();
    let window = (2 * d).max(2 * c) + e;
    let s_values: Vec<u32> = sg.members_up_to(window).collect();
    let nu: Vec<u64> = s_values.iter().map(|&s| nu_unchecked(sg, s)).collect();
    let g = sg.genus() as i64;
    for (&s, &v) in s_values.iter().zip(&nu) {
        if s >= 2 * c {
            assert_eq!(v as i64, s as i64 - 2 * g + 1, "nu({s}) off the linear tail");
        }
    }
    let m_index = if sg.is_ordinary() {
        None
    } else {
        (0..nu.len() - 1).rev().find(|&i| nu[i] > nu[i + 1])
    };
    if let Some(m) = m_index {
        assert!(nu[m + 1..].windows(2).all(|w| w[0] <= w[1]));
    } else {
        assert!(nu.windows(2).all(|w| w[0] <= w[1]), "nu decreases on an ordinary semigroup");
    }
    NuProfile {
        s_m: m_index.map(|m| s_values[m]),
        s_values,
        nu,
        m_index,
        window,
    }
}

/// `d_ORD(C_k) = min{ν(s_j) : j > k}`.
pub fn order_bound(sg: &NumericalSemigroup, k: usize) -> u64 {
    let first = sg.nth_member(k + 1);
    let last = first.max(2 * sg.conductor());
    let mut best = u64::MAX;
    let mut j = k + 1;
    loop {
        let s = sg.nth_member(j);
        if s > last {
            break;
        }
        best = best.min(nu_unchecked(sg, s));
        j += 1;
    }
    best
}

/// Which case of the `s_m` theorem applies.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SmCase {
    /// `s̃ < 2d′ − d`.
    One,
    /// `s̃ ≥ d′ + c′ − d`.
    TwoA,
    /// `s̃ = 2d′ − d`.
    TwoB,
    /// `2d′ − d < s̃ < d′ + c′ − d`.
    TwoC,
}

/// Predicted value or range of `s_m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmPrediction {
    pub case: SmCase,
    pub exact: Option<i64>,
    pub lower: Option<i64>,
    pub upper: i64,
    /// The hypothesis that produced `exact` or `lower`, if any.
    pub fired: Option<&'static str>,
}

impl SmPrediction {
    pub fn contains(&self, s_m: i64) -> bool {
        self.exact.is_none_or(|x| x == s_m)
            && self.lower.is_none_or(|x| x <= s_m)
            && s_m <= self.upper
    }
}

fn interval_in(sg: &NumericalSemigroup, lo: i64, hi: i64) -> bool {
    (lo.max(0)..=hi).all(|x| sg.contains_i(x))
}

pub fn predict_sm(sg: &NumericalSemigroup) -> Result<SmPrediction> {
    let p = sg.profile();
    if p.is_ordinary {
        return Err(Error::PartitionUndefined);
    }
    let d = p.d.unwrap() as i64;
    let c_sub = p.c_sub.unwrap() as i64;
    let dp = p.d_prime.unwrap() as i64;
    let ell = p.ell.unwrap() as i64;
    let st = p.s_tilde.unwrap() as i64;
    if st < 2 * dp - d {
        let fires = interval_in(sg, st + 2, dp);
        return Ok(SmPrediction {
            case: SmCase::One,
            exact: fires.then_some(st + d),
            lower: None,
            upper: 2 * dp,
            fired: fires.then_some("[s~+2, d'] in S"),
        });
    }
    let upper = st + d;
    if st >= dp + c_sub - d {
        return Ok(SmPrediction {
            case: SmCase::TwoA,
            exact: Some(st + d),
            lower: None,
            upper,
            fired: Some("s~ >= d' + c' - d"),
        });
    }
    if st == 2 * dp - d {
        return Ok(SmPrediction {
            case: SmCase::TwoB,
            exact: Some(st + d),
            lower: None,
            upper,
            fired: Some("s~ = 2d' - d"),
        });
    }
    let fires = interval_in(sg, dp - ell, dp);
    Ok(SmPrediction {
        case: SmCase::TwoC,
        exact: None,
        lower: fires.then_some(st + dp - ell + 1),
        upper: if fires { upper.min(2 * dp) } else { upper },
        fired: fires.then_some("[d'-l, d'] in S"),
    })
}

/// Outcome of testing `s_m ≥ c + d − e` on one semigroup.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjectureVerdict {
    pub s_m: i64,
    pub bound: i64,
    pub holds: bool,
    /// Numbers (1–7) of the known sufficient conditions that apply.
    pub certified_by: Vec<u8>,
}

pub fn check_conjecture(sg: &NumericalSemigroup) -> Result<ConjectureVerdict> {
    let p = sg.profile();
    if p.is_ordinary {
        return Err(Error::PartitionUndefined);
    }
    let s_m = find_sm(sg).s_m.unwrap() as i64;
    let d = p.d.unwrap() as i64;
    let c_sub = p.c_sub.unwrap() as i64;
    let dp = p.d_prime.unwrap() as i64;
    let ell = p.ell.unwrap() as i64;
    let st = p.s_tilde.unwrap() as i64;
    let bound = p.c as i64 + d - p.e as i64;
    let class = sg.classify_sequence();
    let mut certified_by = Vec::new();
    if s_m >= st + d || (s_m >= 2 * dp && st < dp) {
        certified_by.push(1);
    }
    if 2 * dp - d < st && st < dp + c_sub - d && interval_in(sg, dp - ell, dp) {
        certified_by.push(2);
    }
    if ell == 2 || ell == 3 {
        certified_by.push(3);
    }
    if p.tau <= 7 {
        certified_by.push(4);
    }
    if p.e <= 8 {
        certified_by.push(5);
    }
    if class.is_generalized_arithmetic() {
        certified_by.push(6);
    }
    if class.is_almost_arithmetic() && p.embdim <= 5 {
        certified_by.push(7);
    }
    Ok(ConjectureVerdict {
        s_m,
        bound,
        holds: s_m >= bound,
        certified_by,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn elem(e: &[u32], c: u32) -> NumericalSemigroup {
        NumericalSemigroup::from_small_elements(e, c).unwrap()
    }

    #[test]
    fn nu_example() {
        let s = elem(&[0, 8, 12, 14, 15, 16], 20);
        assert_eq!(nu(&s, 30).unwrap(), 7);
        assert_eq!(nu(&s, 20).unwrap(), 4);
        assert_eq!(nu(&s, 0).unwrap(), 1);
        assert_eq!(nu(&s, 9), Err(Error::NotAMember(9)));
        assert_eq!(partition_counts(&s, 30).unwrap(), PartitionCounts { a: 0, b: 3, c: 0, d: 4 });
        assert_eq!(partition_counts(&s, 20).unwrap(), PartitionCounts { a: 0, b: 0, c: 2, d: 2 });
        assert_eq!(partition_counts(&s, 0).unwrap(), PartitionCounts { a: 0, b: 0, c: 1, d: 0 });
        assert_eq!(delta_profile(&s, 24).unwrap().gamma, -1);
    }

    #[test]
    fn ordinary_partition_undefined() {
        let s = NumericalSemigroup::ordinary(3).unwrap();
        assert_eq!(partition_counts(&s, 3), Err(Error::PartitionUndefined));
        assert_eq!(find_sm(&s).s_m, None);
        assert_eq!(order_bound(&s, 0), 2);
    }

    #[test]
    fn sm_examples() {
        let ex = [
            (elem(&[0, 25, 26, 28, 30, 31, 33], 39), 61, SmCase::One),
            (elem(&[0, 7, 13, 14, 15, 16, 17], 20), 31, SmCase::TwoA),
            (elem(&[0, 20, 21, 26, 27, 32], 39), 54, SmCase::One),
            (elem(&[0, 10, 20, 22, 23, 26], 30), 46, SmCase::TwoC),
        ];
        for (s, sm, case) in ex {
            assert_eq!(find_sm(&s).s_m, Some(sm));
            let pr = predict_sm(&s).unwrap();
            assert_eq!(pr.case, case);
            assert!(pr.contains(sm as i64));
        }
        let first = predict_sm(&ex_first()).unwrap();
        assert_eq!(first.exact, Some(61));
    }

    fn ex_first() -> NumericalSemigroup {
        elem(&[0, 25, 26, 28, 30, 31, 33], 39)
    }

    #[test]
    fn order_bound_after_sm() {
        let s = elem(&[0, 8, 12, 14, 15, 16], 20);
        let np = find_sm(&s);
        let m = np.m_index.unwrap();
        assert_eq!(np.s_m, Some(32));
        assert_eq!(order_bound(&s, m), np.nu[m + 1]);
        let v = check_conjecture(&s).unwrap();
        assert_eq!((v.s_m, v.bound, v.holds), (32, 28, true));
        assert!(v.certified_by.contains(&5));
    }
}
