//! The graded pieces `T¹(ℓ)` of the first cotangent module of a monomial
//! curve, computed from the sets `G_ℓ`, `H_ℓ` and the matrix `J(1)`.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::curve::{jacobian, CurvePresentation, JacobianPair};
use crate::linalg::{primitive, Matrix};
use crate::poly::SparsePolynomial;
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct T1Record {
    pub ell: i64,
    /// `G_ℓ = {i : n_i + ℓ ∉ S}`.
    pub g: Vec<usize>,
    /// Distinct degrees `d_j` with `d_j + ℓ ∉ S`.
    pub h_degrees: Vec<u64>,
    /// Row indices of `J(1)` with degree in `H_ℓ`.
    pub h_rows: Vec<usize>,
    pub rho: usize,
    pub dim: usize,
    /// Coefficient tuples `(α_0, …, α_k)` supported on `G_ℓ`, with
    /// `α_{min G_ℓ} = 0`, primitive.
    pub basis: Vec<Vec<BigInt>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct T1Table {
    pub records: Vec<T1Record>,
    /// `[−2c + 2 − 2n_0, c − 2 − n_0]`.
    pub window: (i64, i64),
    /// `−d'_p`: below it every piece vanishes.
    pub rank_cutoff: i64,
    pub total: usize,
    pub negative: usize,
    /// `T¹(ℓ) = 0` for every `ℓ ≥ 0`.
    pub nonnegative_vanishes: bool,
}

impl T1Table {
    pub fn dim_at(&self, ell: i64) -> usize {
        self.records.iter().find(|r| r.ell == ell).map_or(0, |r| r.dim)
    }

    pub fn record(&self, ell: i64) -> Option<&T1Record> {
        self.records.iter().find(|r| r.ell == ell)
    }

    /// The tighter of the two lower cutoffs.
    pub fn lower_cutoff(&self) -> i64 {
        self.window.0.max(self.rank_cutoff)
    }
}

/// Per-degree M² test: whether every class of `T¹(ℓ)` has a representative
/// sending `f` into `(M²)^q`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct M2Degree {
    pub ell: i64,
    pub dim: usize,
    pub certified: bool,
    /// Representatives spanning `T¹(ℓ)` whose images lie in `(M²)^q`
    /// (only as many as exist).
    pub representatives: Vec<Vec<BigInt>>,
    /// Basis elements whose every representative has an image with a
    /// constant or linear entry.
    pub candidates: Vec<Vec<BigInt>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum M2Verdict {
    /// Every first-order deformation is singular at the origin.
    Obstructed,
    /// Degrees carrying classes with linear terms in their images.
    NotObstructed { smoothing_candidates: Vec<i64> },
}

impl M2Verdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            Self::Obstructed => "obstructed: all first-order deformations singular at the origin",
            Self::NotObstructed { .. } => "not obstructed: some first-order images have linear terms",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct M2Report {
    pub degrees: Vec<M2Degree>,
    pub verdict: M2Verdict,
}

/// A presentation together with its Jacobian, the input of every graded
/// computation.
#[derive(Debug, Clone)]
pub struct T1Engine {
    pres: CurvePresentation,
    jac: JacobianPair,
}

fn rank_of(vectors: &[Vec<BigInt>], n: usize) -> usize {
    if vectors.is_empty() {
        return 0;
    }
    Matrix::from_rows(n, vectors).rank()
}

fn unit(n: usize, i: usize) -> Vec<BigInt> {
    let mut v = vec![BigInt::zero(); n];
    v[i] = BigInt::from(1);
    v
}

impl T1Engine {
    pub fn new(pres: &CurvePresentation) -> Result<Self> {
        Ok(Self {
            pres: pres.clone(),
            jac: jacobian(pres)?,
        })
    }

    pub fn presentation(&self) -> &CurvePresentation {
        &self.pres
    }

    pub fn jacobian(&self) -> &JacobianPair {
        &self.jac
    }

    fn n(&self) -> usize {
        self.pres.nvars()
    }

    fn member(&self, x: i64) -> bool {
        self.pres.semigroup().contains_i(x)
    }

    /// `G_ℓ` and the rows of `J(1)` whose degree lies in `H_ℓ`.
    pub fn graded_sets(&self, ell: i64) -> (Vec<usize>, Vec<usize>) {
        let g = (0..self.n()).filter(|&i| !self.member(self.pres.weights()[i] as i64 + ell)).collect();
        let h = (0..self.pres.degrees().len())
            .filter(|&j| !self.member(self.pres.degrees()[j] as i64 + ell))
            .collect();
        (g, h)
    }

    /// Kernel of `J_ℓ` on all `k + 1` columns for the rows `rows`.
    fn kernel(&self, rows: &[usize]) -> Vec<Vec<BigInt>> {
        if rows.is_empty() {
            return (0..self.n()).map(|i| unit(self.n(), i)).collect();
        }
        self.jac.j1.select_rows(rows).nullspace()
    }

    /// `span(e_i : i ∉ G_ℓ) + span(Euler)`: derivations trivial in degree `ℓ`.
    pub fn trivial_span(&self, ell: i64) -> Vec<Vec<BigInt>> {
        let (g, _) = self.graded_sets(ell);
        let n = self.n();
        let mut t: Vec<Vec<BigInt>> = (0..n).filter(|i| !g.contains(i)).map(|i| unit(n, i)).collect();
        t.push(self.pres.weights().iter().map(|&w| BigInt::from(w)).collect());
        t
    }

    pub fn dimension(&self, ell: i64) -> T1Record {
        let (g, h_rows) = self.graded_sets(ell);
        let mut h_degrees: Vec<u64> = h_rows.iter().map(|&j| self.pres.degrees()[j]).collect();
        h_degrees.dedup();
        let n = self.n();
        if g.is_empty() {
            return T1Record {
                ell,
                g,
                h_degrees,
                h_rows,
                rho: 0,
                dim: 0,
                basis: Vec::new(),
            };
        }
        let jg = self.jac.j1.select_rows(&h_rows).select_cols(&g);
        let rho = if h_rows.is_empty() { 0 } else { jg.rank() };
        let dim = g.len().saturating_sub(1 + rho);
        // Solve on G_ℓ with α_{min G} = 0 appended as an extra equation.
        let mut pin = vec![BigInt::zero(); g.len()];
        pin[0] = BigInt::from(1);
        let sys = if h_rows.is_empty() {
            Matrix::from_rows(g.len(), &[pin])
        } else {
            jg.stack(&Matrix::from_rows(g.len(), &[pin]))
        };
        let basis: Vec<Vec<BigInt>> = sys
            .nullspace()
            .into_iter()
            .map(|v| {
                let mut full = vec![BigInt::zero(); n];
                for (x, &i) in v.into_iter().zip(&g) {
                    full[i] = x;
                }
                primitive(full)
            })
            .collect();
        debug_assert_eq!(basis.len(), dim);
        T1Record {
            ell,
            g,
            h_degrees,
            h_rows,
            rho,
            dim,
            basis,
        }
    }

    /// `[−2c + 2 − 2n_0, c − 2 − n_0]`.
    pub fn window(&self) -> (i64, i64) {
        let c = self.pres.semigroup().conductor() as i64;
        let n0 = self.pres.weights()[0] as i64;
        (-2 * c + 2 - 2 * n0, c - 2 - n0)
    }

    /// `−d'_p`, where `p` is least with the first `p` degree-sorted rows of
    /// `J(1)` of rank `k`.
    pub fn rank_cutoff(&self) -> i64 {
        let mut order: Vec<usize> = (0..self.pres.degrees().len()).collect();
        order.sort_by_key(|&j| self.pres.degrees()[j]);
        let k = self.n() - 1;
        for p in 1..=order.len() {
            if self.jac.j1.select_rows(&order[..p]).rank() == k {
                return -(self.pres.degrees()[order[p - 1]] as i64);
            }
        }
        i64::MIN
    }

    pub fn scan(&self) -> Result<T1Table> {
        let (lo, hi) = self.window();
        let records: Vec<T1Record> = (lo..=hi).map(|ell| self.dimension(ell)).collect();
        let table = T1Table {
            total: records.iter().map(|r| r.dim).sum(),
            negative: records.iter().filter(|r| r.ell < 0).map(|r| r.dim).sum(),
            nonnegative_vanishes: records.iter().all(|r| r.ell < 0 || r.dim == 0),
            window: (lo, hi),
            rank_cutoff: self.rank_cutoff(),
            records,
        };
        self.check_vanishing(&table)?;
        Ok(table)
    }

    fn check_vanishing(&self, table: &T1Table) -> Result<()> {
        let (lo, hi) = table.window;
        let fail = |what: &str| Err(Error::HypothesisViolated(format!("vanishing check failed: {what}")));
        for ell in [lo - 3, lo - 2, lo - 1, hi + 1, hi + 2, hi + 3] {
            if self.dimension(ell).dim != 0 {
                return fail(&format!("dim T¹({ell}) ≠ 0 outside the window"));
            }
        }
        if table.records.iter().any(|r| r.ell < table.rank_cutoff && r.dim != 0) {
            return fail("nonzero piece below the rank cutoff");
        }
        let sg = self.pres.semigroup();
        let c = sg.conductor() as i64;
        let (n0, n1) = (self.pres.weights()[0] as i64, self.pres.weights()[1] as i64);
        if self.dimension(c - 1 - n0 - n1).dim == 0 {
            return fail("T¹(c − 1 − n_0 − n_1) = 0");
        }
        for r in table.records.iter().filter(|r| r.ell >= c - 2 * n1) {
            if r.dim != r.g.len().saturating_sub(1) {
                return fail(&format!("dim T¹({}) ≠ #G − 1", r.ell));
            }
        }
        if sg.is_ordinary() || sg.contains(2) {
            let g = sg.genus() as i64;
            if table.records.iter().any(|r| r.ell < -4 * g - 2 && r.dim != 0) {
                return fail("nonzero piece below −4g − 2");
            }
        }
        Ok(())
    }

    /// Whether `α` and `β` define proportional nonzero classes in `T¹(ℓ)`.
    pub fn same_class(&self, ell: i64, alpha: &[BigInt], beta: &[BigInt]) -> bool {
        let n = self.n();
        let (_, h) = self.graded_sets(ell);
        let in_kernel = |v: &[BigInt]| {
            h.iter().all(|&j| self.jac.j1.row(j).iter().zip(v).map(|(a, b)| a * b).sum::<BigInt>().is_zero())
        };
        if !in_kernel(alpha) || !in_kernel(beta) {
            return false;
        }
        let t = self.trivial_span(ell);
        let r0 = rank_of(&t, n);
        let with = |extra: &[&[BigInt]]| {
            let mut m = t.clone();
            m.extend(extra.iter().map(|v| v.to_vec()));
            rank_of(&m, n)
        };
        with(&[alpha]) == r0 + 1 && with(&[beta]) == r0 + 1 && with(&[alpha, beta]) == r0 + 1
    }

    /// Number of module generators of `T¹` in degree `ℓ`: classes not coming
    /// from `T¹(ℓ − n_i)` by multiplication with `t^{n_i}`.
    pub fn module_generators(&self, ell: i64) -> usize {
        let n = self.n();
        let (_, h) = self.graded_sets(ell);
        let mut t = self.trivial_span(ell);
        let r_t = rank_of(&t, n);
        let mut all = t.clone();
        all.extend(self.kernel(&h));
        let dim = rank_of(&all, n) - r_t;
        if dim == 0 {
            return 0;
        }
        for &w in self.pres.weights() {
            let (_, h2) = self.graded_sets(ell - w as i64);
            t.extend(self.kernel(&h2));
        }
        dim - (rank_of(&t, n) - r_t)
    }

    /// Degrees of the module generators inside the scan window.
    pub fn generator_degrees(&self) -> Vec<(i64, usize)> {
        let (lo, hi) = self.window();
        (lo..=hi)
            .map(|ell| (ell, self.module_generators(ell)))
            .filter(|&(_, m)| m > 0)
            .collect()
    }

    /// Image of `t^ℓ Σ α_i Δ_i` on `f`: entry `j` is `(J(1)_j · α) t^{d_j + ℓ}`,
    /// written as a monomial with the fewest factors.
    pub fn derivation_image(&self, ell: i64, alpha: &[BigInt]) -> Result<Vec<SparsePolynomial>> {
        let wt = self.pres.weights();
        let mut out = Vec::new();
        for (j, &d) in self.pres.degrees().iter().enumerate() {
            let c: BigInt = self.jac.j1.row(j).iter().zip(alpha).map(|(a, b)| a * b).sum();
            let s = d as i64 + ell;
            if c.is_zero() {
                out.push(SparsePolynomial::zero(wt));
                continue;
            }
            let e = (s >= 0).then(|| monomial_of_degree(wt, s as u64)).flatten();
            match e {
                Some(e) => out.push(SparsePolynomial::term(wt, e, c)),
                None => return Err(Error::InconsistentBasis(ell)),
            }
        }
        Ok(out)
    }

    /// Rows whose image would be a constant or linear monomial in degree `ℓ`.
    fn low_rows(&self, ell: i64) -> Vec<usize> {
        let wt = self.pres.weights();
        (0..self.pres.degrees().len())
            .filter(|&j| {
                let s = self.pres.degrees()[j] as i64 + ell;
                s == 0 || wt.iter().any(|&w| w as i64 == s)
            })
            .collect()
    }

    pub fn m2_degree(&self, ell: i64) -> M2Degree {
        let n = self.n();
        let rec = self.dimension(ell);
        let t = self.trivial_span(ell);
        let r_t = rank_of(&t, n);
        let (_, h) = self.graded_sets(ell);
        let mut rows = h.clone();
        rows.extend(self.low_rows(ell));
        rows.sort_unstable();
        rows.dedup();
        let mut span = t.clone();
        let mut representatives = Vec::new();
        for v in self.kernel(&rows) {
            let mut trial = span.clone();
            trial.push(v.clone());
            if rank_of(&trial, n) > rank_of(&span, n) {
                span = trial;
                representatives.push(v);
            }
        }
        let certified = rank_of(&span, n) - r_t == rec.dim;
        let mut candidates = Vec::new();
        for b in &rec.basis {
            let mut trial = span.clone();
            trial.push(b.clone());
            if rank_of(&trial, n) > rank_of(&span, n) {
                candidates.push(b.clone());
            }
        }
        M2Degree {
            ell,
            dim: rec.dim,
            certified,
            representatives,
            candidates,
        }
    }

    pub fn m2_certificate(&self) -> M2Report {
        let (lo, hi) = self.window();
        let degrees: Vec<M2Degree> =
            (lo..=hi).map(|ell| self.m2_degree(ell)).filter(|d| d.dim > 0).collect();
        let bad: Vec<i64> = degrees.iter().filter(|d| !d.certified).map(|d| d.ell).collect();
        let verdict = if bad.is_empty() {
            M2Verdict::Obstructed
        } else {
            M2Verdict::NotObstructed { smoothing_candidates: bad }
        };
        M2Report { degrees, verdict }
    }
}

/// Whether every entry lies in `M²`: no constant or linear terms.
pub fn in_m2(image: &[SparsePolynomial]) -> bool {
    image.iter().all(|p| p.terms().all(|(e, _)| e.iter().sum::<u32>() >= 2))
}

/// A monomial of weighted degree `s` with the fewest factors, preferring
/// higher powers of lower-index variables.
pub fn monomial_of_degree(weights: &[u64], s: u64) -> Option<Vec<u32>> {
    let n = weights.len();
    let mut best: Vec<Option<Vec<u32>>> = vec![None; s as usize + 1];
    best[0] = Some(vec![0; n]);
    for x in 1..=s as usize {
        let mut cand: Option<Vec<u32>> = None;
        for (i, &w) in weights.iter().enumerate() {
            let w = w as usize;
            if w > x {
                continue;
            }
            if let Some(prev) = &best[x - w] {
                let mut e = prev.clone();
                e[i] += 1;
                let better = match &cand {
                    None => true,
                    Some(c) => {
                        let (a, b): (u32, u32) = (e.iter().sum(), c.iter().sum());
                        a < b || (a == b && e > *c)
                    }
                };
                if better {
                    cand = Some(e);
                }
            }
        }
        best[x] = cand;
    }
    best.pop().flatten()
}

pub fn graded_sets(pres: &CurvePresentation, ell: i64) -> Result<(Vec<usize>, Vec<usize>)> {
    Ok(T1Engine::new(pres)?.graded_sets(ell))
}

pub fn t1_dimension(pres: &CurvePresentation, ell: i64) -> Result<T1Record> {
    Ok(T1Engine::new(pres)?.dimension(ell))
}

pub fn t1_scan(pres: &CurvePresentation) -> Result<T1Table> {
    T1Engine::new(pres)?.scan()
}

pub fn derivation_image(pres: &CurvePresentation, ell: i64, alpha: &[BigInt]) -> Result<Vec<SparsePolynomial>> {
    T1Engine::new(pres)?.derivation_image(ell, alpha)
}

pub fn m2_obstruction_certificate(pres: &CurvePresentation) -> Result<M2Report> {
    Ok(T1Engine::new(pres)?.m2_certificate())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curve::{presentation_3, presentation_4_arithmetic, presentation_buchweitz};
    use crate::semigroup::NumericalSemigroup;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn engine(g: &[u32]) -> T1Engine {
        let s = NumericalSemigroup::from_generators(g).unwrap();
        let p = if g.len() == 3 { presentation_3(&s) } else { presentation_4_arithmetic(&s) };
        T1Engine::new(&p.unwrap().normalized()).unwrap()
    }

    #[test]
    fn example_4_9_11() {
        let e = engine(&[4, 9, 11]);
        let t = e.scan().unwrap();
        assert_eq!((t.total, t.negative), (17, 15));
        let neg: Vec<i64> = e.generator_degrees().into_iter().map(|x| x.0).filter(|&l| l < 0).collect();
        assert_eq!(neg, [-18, -16, -11]);
        let b = &e.dimension(-18).basis;
        assert_eq!(b, &[ints(&[0, 1, -1])]);
        let img = e.derivation_image(-18, &b[0]).unwrap();
        let shown: Vec<_> = img.iter().map(|p| alloc::format!("{p}")).collect();
        assert_eq!(shown, ["0", "4*x0", "-4*x1"]);
        assert!(matches!(e.m2_certificate().verdict, M2Verdict::NotObstructed { .. }));
    }

    #[test]
    fn buchweitz_pieces() {
        let e = T1Engine::new(&presentation_buchweitz()).unwrap();
        let r = e.dimension(-12);
        assert_eq!((r.g.len(), r.rho, r.dim), (9, 7, 1));
        assert_eq!(r.h_degrees, [31, 33, 36, 37]);
        assert_eq!(r.basis, [ints(&[0, 1, 2, 3, 4, 5, 7, 9, 10])]);
        let img = e.derivation_image(-12, &r.basis[0]).unwrap();
        assert!(in_m2(&img));
        assert_eq!(e.dimension(-2).g, [0, 1, 8]);
        assert_eq!(e.dimension(-4).dim, 2);
        let r2 = e.dimension(2);
        assert_eq!((r2.g.as_slice(), r2.dim), (&[4, 7, 8][..], 2));
        assert_eq!(e.dimension(26).g, Vec::<usize>::new());
        assert_eq!(e.m2_certificate().verdict, M2Verdict::Obstructed);
    }

    #[test]
    fn lemma_degrees() {
        let e = engine(&[5, 8, 11, 14]);
        for ell in [-20, -14, -11] {
            assert!(e.dimension(ell).dim >= 1, "{ell}");
        }
        assert!(e.same_class(-20, &e.dimension(-20).basis[0], &ints(&[0, 1, 2, 3])));
        assert!(e.same_class(-11, &e.dimension(-11).basis[0], &ints(&[0, 4, 3, 2])));
        assert!(!e.same_class(-11, &ints(&[0, 1, 2, 3]), &ints(&[0, 4, 3, 2])));
    }

    #[test]
    fn monomials() {
        assert_eq!(monomial_of_degree(&[4, 9, 11], 4), Some(vec![1, 0, 0]));
        assert_eq!(monomial_of_degree(&[4, 9, 11], 10), None);
        assert_eq!(monomial_of_degree(&[4, 9, 11], 0), Some(vec![0, 0, 0]));
    }
}
