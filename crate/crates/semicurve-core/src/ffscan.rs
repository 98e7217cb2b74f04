//! Exhaustive point enumeration of affine curves over `F_p` with the
//! Jacobian rank at each point.

use alloc::vec;
use alloc::vec::Vec;

use crate::poly::{mod_bigint, SparsePolynomial};
use crate::{Error, Result};

/// A polynomial with coefficients reduced mod `p`.
#[derive(Debug, Clone)]
struct ModPoly {
    terms: Vec<(u64, Vec<u32>)>,
}

impl ModPoly {
    fn new(q: &SparsePolynomial, p: u64) -> Self {
        Self {
            terms: q
                .terms()
                .map(|(e, c)| (mod_bigint(c, p), e.clone()))
                .filter(|(c, _)| *c != 0)
                .collect(),
        }
    }

    fn eval(&self, pows: &[Vec<u64>], p: u64) -> u64 {
        let mut acc = 0;
        for (c, e) in &self.terms {
            let mut t = *c;
            for (i, &k) in e.iter().enumerate() {
                if k > 0 {
                    t = t * pows[i][k as usize] % p;
                }
            }
            acc = (acc + t) % p;
        }
        acc
    }

    fn max_exp(&self) -> u32 {
        self.terms.iter().flat_map(|(_, e)| e.iter().copied()).max().unwrap_or(0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FibreScan {
    pub p: u64,
    pub points: u64,
    /// Minimum Jacobian rank over all points (`None` if the fibre is empty).
    pub min_rank: Option<usize>,
    /// Rank needed for smoothness: the codimension.
    pub expected_rank: usize,
    pub singular_points: Vec<Vec<u64>>,
    pub origin_on_fibre: bool,
    pub origin_singular: bool,
}

impl FibreScan {
    pub fn smooth(&self) -> bool {
        self.singular_points.is_empty()
    }

    pub fn verdict(&self) -> &'static str {
        if self.smooth() {
            "no singular points over F_p: consistent with a smooth generic fibre"
        } else {
            "singular points found over F_p"
        }
    }

    /// Merges scans of disjoint slices of the same fibre.
    pub fn merge(mut self, other: FibreScan) -> FibreScan {
        self.points += other.points;
        self.min_rank = match (self.min_rank, other.min_rank) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        };
        self.singular_points.extend(other.singular_points);
        self.singular_points.sort();
        self.origin_on_fibre |= other.origin_on_fibre;
        self.origin_singular |= other.origin_singular;
        self
    }
}

pub fn check_prime(p: u64) -> Result<()> {
    if p < 2 || (2..).take_while(|d| d * d <= p).any(|d| p.is_multiple_of(d)) {
        return Err(Error::BadPrime(p));
    }
    Ok(())
}

fn rank_mod(mut m: Vec<Vec<u64>>, p: u64) -> usize {
    let cols = m.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for c in 0..cols {
        let Some(piv) = (rank..m.len()).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(rank, piv);
        let inv = crate::poly::pow_mod(m[rank][c], p - 2, p);
        let (head, tail) = m.split_at_mut(rank + 1);
        let pivot = &head[rank];
        for row in tail {
            let f = row[c] * inv % p;
            if f == 0 {
                continue;
            }
            for (x, &y) in row[c..].iter_mut().zip(&pivot[c..]) {
                *x = (*x + p - f * y % p) % p;
            }
        }
        rank += 1;
    }
    rank
}

/// Prepared fibre: equations and their partial derivatives mod `p`.
#[derive(Debug, Clone)]
pub struct FibreScanner {
    p: u64,
    n: usize,
    expected_rank: usize,
    eqs: Vec<ModPoly>,
    jac: Vec<Vec<ModPoly>>,
    max_exp: u32,
}

impl FibreScanner {
    pub fn new(eqs: &[SparsePolynomial], p: u64, expected_rank: usize) -> Self {
        let n = eqs.first().map_or(0, |q| q.nvars());
        let jac: Vec<Vec<ModPoly>> = eqs
            .iter()
            .map(|q| (0..n).map(|i| ModPoly::new(&q.partial_derivative(i), p)).collect())
            .collect();
        let eqs: Vec<ModPoly> = eqs.iter().map(|q| ModPoly::new(q, p)).collect();
        let max_exp = eqs.iter().map(ModPoly::max_exp).max().unwrap_or(0);
        Self {
            p,
            n,
            expected_rank,
            eqs,
            jac,
            max_exp,
        }
    }

    pub fn nvars(&self) -> usize {
        self.n
    }

    /// Scans the points whose first coordinate is `x0`.
    pub fn scan_slice(&self, x0: u64) -> FibreScan {
        let p = self.p;
        let mut out = FibreScan {
            p,
            points: 0,
            min_rank: None,
            expected_rank: self.expected_rank,
            singular_points: Vec::new(),
            origin_on_fibre: false,
            origin_singular: false,
        };
        let total = p.pow(self.n as u32 - 1);
        let powers = |v: u64| {
            let mut row = vec![1u64; self.max_exp as usize + 1];
            for k in 1..row.len() {
                row[k] = row[k - 1] * v % p;
            }
            row
        };
        let table: Vec<Vec<u64>> = (0..p).map(powers).collect();
        let mut point = vec![0u64; self.n];
        point[0] = x0;
        let mut pows: Vec<Vec<u64>> = point.iter().map(|&v| table[v as usize].clone()).collect();
        for idx in 0..total {
            let mut rest = idx;
            for i in (1..self.n).rev() {
                point[i] = rest % p;
                rest /= p;
                pows[i].clone_from(&table[point[i] as usize]);
            }
            if self.eqs.iter().any(|q| q.eval(&pows, p) != 0) {
                continue;
            }
            out.points += 1;
            let m: Vec<Vec<u64>> = self.jac.iter().map(|row| row.iter().map(|q| q.eval(&pows, p)).collect()).collect();
            let r = rank_mod(m, p);
            out.min_rank = Some(out.min_rank.map_or(r, |x| x.min(r)));
            let origin = point.iter().all(|&v| v == 0);
            if origin {
                out.origin_on_fibre = true;
            }
            if r < self.expected_rank {
                out.singular_points.push(point.clone());
                if origin {
                    out.origin_singular = true;
                }
            }
        }
        out
    }

    pub fn scan(&self) -> FibreScan {
        (1..self.p).fold(self.scan_slice(0), |acc, x0| acc.merge(self.scan_slice(x0)))
    }
}

/// Scans all of `F_p^n` for points of the fibre cut out by `eqs`.
pub fn scan_fibre(eqs: &[SparsePolynomial], p: u64, expected_rank: usize) -> FibreScan {
    FibreScanner::new(eqs, p, expected_rank).scan()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primes() {
        assert!(check_prime(31).is_ok());
        assert_eq!(check_prime(33), Err(Error::BadPrime(33)));
        assert_eq!(check_prime(1), Err(Error::BadPrime(1)));
    }

    #[test]
    fn ranks() {
        assert_eq!(rank_mod(vec![vec![1, 2], vec![2, 4]], 7), 1);
        assert_eq!(rank_mod(vec![vec![1, 2], vec![2, 5]], 7), 2);
    }

    #[test]
    fn cusp() {
        let w = [2u64, 3];
        let f = SparsePolynomial::parse("x1^2 - x0^3", &w, &["x0", "x1"]).unwrap();
        let s = scan_fibre(&[f], 7, 1);
        assert_eq!(s.points, 7);
        assert_eq!(s.singular_points, vec![vec![0, 0]]);
        assert!(s.origin_singular);
    }
}
