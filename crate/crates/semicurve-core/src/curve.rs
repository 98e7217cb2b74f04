//! Binomial presentations of monomial curves `F[S] = F[t^{n_0}, …, t^{n_k}]`
//! and their degree-0 Jacobians.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::linalg::Matrix;
use crate::poly::{PolyMatrix, SparsePolynomial};
use crate::semigroup::NumericalSemigroup;
use crate::{Error, Result};

/// Constants of a 3-generated semigroup `⟨n_0, n_1, n_2⟩`:
/// `u n_1 = λ n_0 + w n_2` and `v n_2 = μ n_0 + z n_1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StructureConstants3 {
    pub u: u32,
    pub v: u32,
    pub lambda: u32,
    pub mu: u32,
    pub w: u32,
    pub z: u32,
    /// `(λ + μ) n_0 = (u − z) n_1 + (v − w) n_2`.
    pub consistent: bool,
    /// `zwμ = 0`.
    pub complete_intersection: bool,
}

/// Constants of an arithmetic sequence `n_i = n_0 + i d`, `0 ≤ i ≤ p + 1`,
/// with `n_0 = a(p + 1) + b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ArithmeticConstants {
    pub p: u32,
    pub a: u32,
    pub b: u32,
    pub d: u32,
    pub v: u32,
    pub mu: u32,
    pub z: u32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StructureConstants {
    Three(StructureConstants3),
    Arithmetic(ArithmeticConstants),
    /// Equations given as a fixed list.
    Fixture,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurvePresentation {
    semigroup: NumericalSemigroup,
    weights: Vec<u64>,
    equations: Vec<SparsePolynomial>,
    degrees: Vec<u64>,
    relations: Option<PolyMatrix>,
    constants: StructureConstants,
}

pub fn var_names(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("x{i}")).collect()
}

impl CurvePresentation {
    fn new(
        semigroup: NumericalSemigroup,
        equations: Vec<SparsePolynomial>,
        relations: Option<PolyMatrix>,
        constants: StructureConstants,
    ) -> Result<Self> {
        let weights: Vec<u64> = semigroup.min_generators().iter().map(|&n| n as u64).collect();
        let degrees = equations
            .iter()
            .map(|f| {
                f.homogeneous_degree()
                    .ok_or_else(|| Error::HypothesisViolated(format!("{f} is not homogeneous")))
            })
            .collect::<Result<Vec<_>>>()?;
        let pres = Self {
            semigroup,
            weights,
            equations,
            degrees,
            relations,
            constants,
        };
        pres.check_invariants()?;
        Ok(pres)
    }

    pub fn semigroup(&self) -> &NumericalSemigroup {
        &self.semigroup
    }

    pub fn weights(&self) -> &[u64] {
        &self.weights
    }

    pub fn equations(&self) -> &[SparsePolynomial] {
        &self.equations
    }

    pub fn degrees(&self) -> &[u64] {
        &self.degrees
    }

    pub fn relations(&self) -> Option<&PolyMatrix> {
        self.relations.as_ref()
    }

    pub fn constants(&self) -> &StructureConstants {
        &self.constants
    }

    pub fn nvars(&self) -> usize {
        self.weights.len()
    }

    /// Binomial, homogeneous and toric-vanishing equations, and `r·f = 0`.
    pub fn check_invariants(&self) -> Result<()> {
        for f in &self.equations {
            if f.len() != 2 || f.terms().map(|(_, c)| c.clone()).sum::<BigInt>() != BigInt::zero() {
                return Err(Error::HypothesisViolated(format!("{f} is not a binomial")));
            }
            if !f.toric_substitute().is_zero() {
                return Err(Error::HypothesisViolated(format!("{f} does not vanish on the curve")));
            }
        }
        if let Some(r) = &self.relations {
            if r.ncols() != self.equations.len() {
                return Err(Error::WrongShape(format!(
                    "relation matrix has {} columns for {} equations",
                    r.ncols(),
                    self.equations.len()
                )));
            }
            if let Some(i) = r.mul_vec(&self.equations).iter().position(|p| !p.is_zero()) {
                return Err(Error::HypothesisViolated(format!("relation row {i} does not annihilate f")));
            }
        }
        Ok(())
    }

    /// Reorders to `order` and multiplies equation `i` of the result by
    /// `signs[i]`; relations follow.
    pub fn permuted(&self, order: &[usize], signs: &[i8]) -> Self {
        assert_eq!(order.len(), self.equations.len());
        assert_eq!(signs.len(), order.len());
        let sign = |s: i8, p: &SparsePolynomial| if s < 0 { -p } else { p.clone() };
        let equations = order.iter().zip(signs).map(|(&j, &s)| sign(s, &self.equations[j])).collect();
        let degrees = order.iter().map(|&j| self.degrees[j]).collect();
        let relations = self.relations.as_ref().map(|r| {
            PolyMatrix::new(
                r.rows()
                    .iter()
                    .map(|row| order.iter().zip(signs).map(|(&j, &s)| sign(s, &row[j])).collect())
                    .collect(),
            )
        });
        Self {
            semigroup: self.semigroup.clone(),
            weights: self.weights.clone(),
            equations,
            degrees,
            relations,
            constants: self.constants,
        }
    }

    /// Stable sort by degree; each binomial signed so that its term with the
    /// higher power of `x_0` is positive.
    pub fn normalized(&self) -> Self {
        let mut order: Vec<usize> = (0..self.equations.len()).collect();
        order.sort_by_key(|&j| self.degrees[j]);
        let signs: Vec<i8> = order
            .iter()
            .map(|&j| {
                let mut t: Vec<(u32, bool)> =
                    self.equations[j].terms().map(|(e, c)| (e[0], c > &BigInt::zero())).collect();
                t.sort();
                match (t.first(), t.last()) {
                    (Some(lo), Some(hi)) if lo.0 != hi.0 && !hi.1 => -1,
                    _ => 1,
                }
            })
            .collect();
        self.permuted(&order, &signs)
    }
}

/// Least `n ≥ 0` combinations: `reach[x]` tells whether `x ∈ ⟨gens⟩`.
fn reachable(gens: &[u32], limit: usize) -> Vec<bool> {
    let mut reach = vec![false; limit + 1];
    reach[0] = true;
    for x in 1..=limit {
        reach[x] = gens.iter().any(|&g| g as usize <= x && reach[x - g as usize]);
    }
    reach
}

fn three_generators(sg: &NumericalSemigroup) -> Result<[u32; 3]> {
    match sg.min_generators() {
        &[a, b, c] => Ok([a, b, c]),
        g => Err(Error::WrongShape(format!("embedding dimension {} ≠ 3", g.len()))),
    }
}

/// The constants `(u, v, λ, μ, w, z)` for an embedding dimension 3 semigroup.
pub fn structure_constants_3(sg: &NumericalSemigroup) -> Result<StructureConstants3> {
    let [n0, n1, n2] = three_generators(sg)?;
    // u: least n with n n_1 = λ n_0 + w n_2, λ ≥ 1; smallest such w.
    let mut found = None;
    'u: for n in 1..=n0 {
        let x = n * n1;
        for w in 0..=x / n2 {
            let rest = x - w * n2;
            if rest >= n0 && rest % n0 == 0 {
                found = Some((n, rest / n0, w));
                break 'u;
            }
        }
    }
    let (u, lambda, w) = found.ok_or_else(|| Error::HypothesisViolated("no u found".into()))?;
    let mut found = None;
    'v: for n in 1..=n0 {
        let x = n * n2;
        for z in 0..u.min(x / n1 + 1) {
            let rest = x - z * n1;
            if rest % n0 == 0 {
                found = Some((n, rest / n0, z));
                break 'v;
            }
        }
    }
    let (v, mu, z) = found.ok_or_else(|| Error::HypothesisViolated("no v found".into()))?;
    let consistent = u > z
        && v >= w
        && ((lambda + mu) as u64) * n0 as u64 == ((u - z) as u64) * n1 as u64 + ((v - w) as u64) * n2 as u64;
    Ok(StructureConstants3 {
        u,
        v,
        lambda,
        mu,
        w,
        z,
        consistent,
        complete_intersection: z as u64 * w as u64 * mu as u64 == 0,
    })
}

fn mono(wt: &[u64], factors: &[(usize, u32)]) -> SparsePolynomial {
    SparsePolynomial::monomial(wt, factors)
}

/// `f_1 = x_1^u − x_0^λ x_2^w`, `f_2 = x_1^{u−z} x_2^{v−w} − x_0^{λ+μ}`,
/// `f_3 = x_2^v − x_0^μ x_1^z`, with its 2×3 relation matrix.
pub fn presentation_3(sg: &NumericalSemigroup) -> Result<CurvePresentation> {
    let k = structure_constants_3(sg)?;
    if !k.consistent {
        return Err(Error::HypothesisViolated(format!("inconsistent constants {k:?}")));
    }
    if k.complete_intersection {
        return Err(Error::CompleteIntersection);
    }
    let wt: Vec<u64> = sg.min_generators().iter().map(|&n| n as u64).collect();
    let m = |f: &[(usize, u32)]| mono(&wt, f);
    let f = vec![
        m(&[(1, k.u)]) - m(&[(0, k.lambda), (2, k.w)]),
        m(&[(1, k.u - k.z), (2, k.v - k.w)]) - m(&[(0, k.lambda + k.mu)]),
        m(&[(2, k.v)]) - m(&[(0, k.mu), (1, k.z)]),
    ];
    let r = PolyMatrix::new(vec![
        vec![-m(&[(2, k.v - k.w)]), m(&[(1, k.z)]), -m(&[(0, k.lambda)])],
        vec![m(&[(0, k.mu)]), -m(&[(2, k.w)]), m(&[(1, k.u - k.z)])],
    ]);
    CurvePresentation::new(sg.clone(), f, Some(r), StructureConstants::Three(k))
}

/// `(n_0, d, p)` when the minimal generators form an arithmetic sequence of
/// length `p + 2 ≥ 3`.
pub fn arithmetic_shape(sg: &NumericalSemigroup) -> Result<(u32, u32, u32)> {
    let g = sg.min_generators();
    if g.len() < 3 {
        return Err(Error::OutOfScope(format!("embedding dimension {} < 3", g.len())));
    }
    let d = g[1] - g[0];
    if g.windows(2).any(|w| w[1] - w[0] != d) {
        return Err(Error::OutOfScope(format!("{g:?} is not an arithmetic sequence")));
    }
    Ok((g[0], d, g.len() as u32 - 2))
}

/// Constants and the minimal generators `ξ_{ij}, φ_i, ψ_j, θ` of the ideal of
/// an arithmetic sequence of any length.
pub fn arithmetic_generators(
    sg: &NumericalSemigroup,
) -> Result<(ArithmeticConstants, Vec<SparsePolynomial>)> {
    let (n0, d, p) = arithmetic_shape(sg)?;
    let a = n0 / (p + 1);
    let b = n0 % (p + 1);
    if a < 1 {
        return Err(Error::OutOfScope(format!("n_0 = {n0} < p + 1")));
    }
    let np1 = n0 + (p + 1) * d;
    let lower: Vec<u32> = (0..=p).map(|i| n0 + i * d).collect();
    let reach = reachable(&lower, (n0 as usize + 1) * np1 as usize);
    let v = (1..=n0)
        .find(|&n| reach[(n * np1) as usize])
        .ok_or_else(|| Error::HypothesisViolated("no v found".into()))?;
    let (mu, z) = if b == 0 {
        if (v * np1) % n0 != 0 {
            return Err(Error::HypothesisViolated(format!(
                "v n_{{p+1}} = {} is not a multiple of n_0 = {n0}",
                v * np1
            )));
        }
        ((v * np1) / n0, 0)
    } else {
        if v != a + 1 {
            return Err(Error::HypothesisViolated(format!("minimal v = {v}, closed form a + 1 = {}", a + 1)));
        }
        (a + d, p + 1 - b)
    };
    if v < 2 || mu < 2 {
        return Err(Error::HypothesisViolated(format!("v = {v}, μ = {mu}")));
    }
    let k = ArithmeticConstants { p, a, b, d, v, mu, z };
    let wt: Vec<u64> = (0..=p + 1).map(|i| (n0 + i * d) as u64).collect();
    let m = |f: &[(usize, u32)]| mono(&wt, f);
    let (p_, b_, q) = (p as usize, b as usize, p as usize + 1);
    let mut f = Vec::new();
    for i in 1..=p_ {
        for j in i..=p_ {
            if i + j <= p_ {
                f.push(m(&[(i, 1), (j, 1)]) - m(&[(0, 1), (i + j, 1)]));
            } else if j < p_ {
                f.push(m(&[(i, 1), (j, 1)]) - m(&[(i + j - p_, 1), (p_, 1)]));
            }
        }
    }
    for i in 0..p_ {
        f.push(m(&[(1 + i, 1), (p_, 1)]) - m(&[(i, 1), (q, 1)]));
    }
    if b == 0 {
        f.push(m(&[(q, v)]) - m(&[(0, mu)]));
    } else {
        for j in 0..=p_ - b_ {
            f.push(m(&[(b_ + j, 1), (q, v - 1)]) - m(&[(0, mu), (j, 1)]));
        }
        f.push(m(&[(q, v)]) - m(&[(0, mu), (q - b_, 1)]));
    }
    Ok((k, f))
}

/// The ideal of a 4-generated arithmetic sequence with its relation matrix.
pub fn presentation_4_arithmetic(sg: &NumericalSemigroup) -> Result<CurvePresentation> {
    let (_, _, p) = arithmetic_shape(sg)?;
    if p != 2 {
        return Err(Error::OutOfScope(format!("embedding dimension {} ≠ 4", p + 2)));
    }
    let (k, f) = arithmetic_generators(sg)?;
    let wt = f[0].weights().to_vec();
    let m = |fs: &[(usize, u32)]| mono(&wt, fs);
    let o = || SparsePolynomial::zero(&wt);
    let x = |i: usize| SparsePolynomial::var(&wt, i);
    let (v, mu) = (k.v, k.mu);
    let x3v1 = m(&[(3, v - 1)]);
    let x0mu = m(&[(0, mu)]);
    let r = match k.b {
        0 => vec![
            vec![x(2), -x(1), x(0), o()],
            vec![-x(3), x(2), -x(1), o()],
            vec![-f[3].clone(), o(), o(), f[0].clone()],
            vec![o(), -f[3].clone(), o(), f[1].clone()],
            vec![o(), o(), -f[3].clone(), f[2].clone()],
        ],
        1 => vec![
            vec![x(2), -x(1), x(0), o(), o(), o()],
            vec![-x(3), x(2), -x(1), o(), o(), o()],
            vec![x3v1.clone(), o(), o(), -x(1), x(0), o()],
            vec![o(), x3v1.clone(), o(), -x(2), o(), x(0)],
            vec![x0mu.clone(), -x3v1.clone(), o(), o(), x(1), -x(0)],
            vec![o(), x0mu.clone(), -x3v1.clone(), -x(3), x(2), o()],
            vec![o(), o(), -x3v1.clone(), o(), x(2), -x(1)],
            vec![o(), o(), x0mu.clone(), o(), -x(3), x(2)],
        ],
        _ => vec![
            vec![x(2), -x(1), x(0), o(), o()],
            vec![-x(3), x(2), -x(1), o(), o()],
            vec![o(), x3v1.clone(), o(), -x(1), x(0)],
            vec![x0mu.clone(), o(), x3v1.clone(), -x(2), x(1)],
            vec![o(), x0mu.clone(), o(), -x(3), x(2)],
        ],
    };
    CurvePresentation::new(sg.clone(), f, Some(PolyMatrix::new(r)), StructureConstants::Arithmetic(k))
}

const BUCHWEITZ_GENERATORS: [u32; 9] = [13, 14, 15, 16, 17, 18, 20, 22, 23];

const BUCHWEITZ_EQUATIONS: [&str; 32] = [
    "-x1^2+x0x2",
    "-x1x2+x0x3",
    "-x2^2+x1x3",
    "-x1x3+x0x4",
    "-x2x3+x1x4",
    "-x1x4+x0x5",
    "-x3^2+x2x4",
    "-x2x4+x1x5",
    "-x3x4+x2x5",
    "-x2x5+x0x6",
    "-x4^2+x3x5",
    "-x3x5+x1x6",
    "-x4x5+x2x6",
    "-x2x6+x0x7",
    "-x3x6+x1x7",
    "-x5^2+x3x6",
    "-x1x7+x0x8",
    "-x2x7+x1x8",
    "-x4x6+x2x7",
    "-x3x7+x2x8",
    "-x5x6+x3x7",
    "-x0^3+x4x7",
    "-x4x7+x3x8",
    "-x6^2+x5x7",
    "x0^2x1-x6^2",
    "-x5x7+x4x8",
    "-x0^2x2+x5x8",
    "-x0^2x3+x6x7",
    "-x0^2x4+x6x8",
    "x0^2x5-x7^2",
    "-x0x1x5+x7x8",
    "-x0^2x6+x8^2",
];

/// The 32 binomials of `⟨13, 14, 15, 16, 17, 18, 20, 22, 23⟩`, ordered by degree.
pub fn presentation_buchweitz() -> CurvePresentation {
    let sg = NumericalSemigroup::from_generators(&BUCHWEITZ_GENERATORS).expect("valid generators");
    let wt: Vec<u64> = BUCHWEITZ_GENERATORS.iter().map(|&n| n as u64).collect();
    let names = var_names(9);
    let names: Vec<&str> = names.iter().map(String::as_str).collect();
    let f = BUCHWEITZ_EQUATIONS
        .iter()
        .map(|s| SparsePolynomial::parse(s, &wt, &names).expect("fixture parses"))
        .collect();
    CurvePresentation::new(sg, f, None, StructureConstants::Fixture).expect("fixture is a toric ideal")
}

/// `J_0 = (x_i ∂f_j/∂x_i)` and its value `J(1)` at `(1, …, 1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JacobianPair {
    pub j0: PolyMatrix,
    pub j1: Matrix,
    pub row_degrees: Vec<u64>,
}

pub fn jacobian(pres: &CurvePresentation) -> Result<JacobianPair> {
    let n = pres.nvars();
    let j0 = PolyMatrix::new(
        pres.equations
            .iter()
            .map(|f| (0..n).map(|i| f.euler_component(i)).collect())
            .collect(),
    );
    let rows: Vec<Vec<BigInt>> =
        j0.rows().iter().map(|r| r.iter().map(|p| p.value_at_ones()).collect()).collect();
    let j1 = Matrix::from_rows(n, &rows);
    let pair = JacobianPair {
        j0,
        j1,
        row_degrees: pres.degrees.clone(),
    };
    pair.verify(pres)?;
    Ok(pair)
}

impl JacobianPair {
    /// The toric image of each `x_i ∂f_j/∂x_i` is `J(1)_{ji} t^{d_j}`, `J(1)`
    /// has rank `k` and every row is orthogonal to the weights.
    pub fn verify(&self, pres: &CurvePresentation) -> Result<()> {
        let n = pres.nvars();
        for (j, row) in self.j0.rows().iter().enumerate() {
            let d = self.row_degrees[j];
            for (i, e) in row.iter().enumerate() {
                let img = e.toric_substitute();
                let c = self.j1.get(j, i);
                let ok = if c.is_zero() {
                    img.is_zero()
                } else {
                    img.terms().count() == 1 && &img.coefficient(d) == c
                };
                if !ok {
                    return Err(Error::HypothesisViolated(format!(
                        "x{i} ∂f{j}/∂x{i} is not J(1)[{j}][{i}] t^{d}"
                    )));
                }
            }
            let euler: BigInt = (0..n).map(|i| self.j1.get(j, i) * BigInt::from(pres.weights[i])).sum();
            if !euler.is_zero() {
                return Err(Error::HypothesisViolated(format!("row {j} fails the Euler identity")));
            }
        }
        let rank = self.j1.rank();
        if rank + 1 != n {
            return Err(Error::HypothesisViolated(format!("rank J(1) = {rank}, expected {}", n - 1)));
        }
        Ok(())
    }
}

/// `J(1)` entries as `i64`, for display.
pub fn j1_rows(pair: &JacobianPair) -> Vec<Vec<i64>> {
    use num_traits::ToPrimitive;
    pair.j1
        .to_rows()
        .iter()
        .map(|r| r.iter().map(|x| x.to_i64().expect("small entry")).collect())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sg(g: &[u32]) -> NumericalSemigroup {
        NumericalSemigroup::from_generators(g).unwrap()
    }

    fn show(p: &SparsePolynomial) -> String {
        format!("{p}")
    }

    #[test]
    fn constants_4_9_11() {
        let k = structure_constants_3(&sg(&[4, 9, 11])).unwrap();
        assert_eq!((k.u, k.lambda, k.w, k.v, k.mu, k.z), (3, 4, 1, 2, 1, 2));
        assert!(k.consistent && !k.complete_intersection);
    }

    #[test]
    fn complete_intersection() {
        let s = sg(&[4, 6, 9]);
        let k = structure_constants_3(&s).unwrap();
        assert_eq!((k.u, k.lambda, k.w, k.v, k.mu, k.z), (2, 3, 0, 2, 3, 1));
        assert!(k.consistent && k.complete_intersection);
        assert_eq!(presentation_3(&s), Err(Error::CompleteIntersection));
        assert!(matches!(structure_constants_3(&sg(&[2, 3])), Err(Error::WrongShape(_))));
    }

    #[test]
    fn example_4_9_11() {
        let p = presentation_3(&sg(&[4, 9, 11])).unwrap().normalized();
        let eqs: Vec<String> = p.equations().iter().map(show).collect();
        assert_eq!(eqs, ["x0^5 - x1*x2", "x0*x1^2 - x2^2", "x0^4*x2 - x1^3"]);
        assert_eq!(p.degrees(), &[20, 22, 27]);
        let j = jacobian(&p).unwrap();
        assert_eq!(j1_rows(&j), vec![vec![5, -1, -1], vec![1, 2, -2], vec![4, -3, 1]]);
    }

    fn parsed(p: &CurvePresentation, eqs: &[&str]) -> Vec<SparsePolynomial> {
        let names = var_names(p.nvars());
        let names: Vec<&str> = names.iter().map(String::as_str).collect();
        eqs.iter().map(|e| SparsePolynomial::parse(e, p.weights(), &names).unwrap()).collect()
    }

    #[test]
    fn arithmetic_cases() {
        let p = presentation_4_arithmetic(&sg(&[6, 7, 8, 9])).unwrap();
        assert_eq!(p.equations(), parsed(&p, &["x1^2 - x0x2", "x1x2 - x0x3", "x2^2 - x1x3", "x3^2 - x0^3"]));
        let p = presentation_4_arithmetic(&sg(&[7, 10, 13, 16])).unwrap();
        assert!(matches!(p.constants(), StructureConstants::Arithmetic(k) if (k.v, k.mu, k.z) == (3, 5, 2)));
        assert_eq!(p.equations()[3], parsed(&p, &["x1x3^2 - x0^6"])[0]);
        assert_eq!(p.equations().len(), 6);
        let p = presentation_4_arithmetic(&sg(&[5, 8, 11, 14])).unwrap();
        assert!(matches!(p.constants(), StructureConstants::Arithmetic(k) if (k.v, k.mu) == (2, 4)));
        assert_eq!(&p.equations()[3..], parsed(&p, &["x2x3 - x0^5", "x3^2 - x0^4x1"]));
        assert!(matches!(presentation_4_arithmetic(&sg(&[5, 6, 9, 13])), Err(Error::OutOfScope(_))));
    }

    #[test]
    fn general_p() {
        let (k, f) = arithmetic_generators(&sg(&[9, 11, 13, 15, 17])).unwrap();
        assert_eq!((k.p, k.a, k.b), (3, 2, 1));
        assert!(f.iter().all(|q| q.is_homogeneous() && q.toric_substitute().is_zero()));
    }

    #[test]
    fn buchweitz() {
        let p = presentation_buchweitz();
        assert_eq!(p.equations().len(), 32);
        assert_eq!(p.degrees().iter().filter(|&&d| d == 36).count(), 3);
        assert_eq!(p.degrees()[0], 28);
        assert_eq!(*p.degrees().last().unwrap(), 46);
        assert!(p.degrees().windows(2).all(|w| w[0] <= w[1]));
        let j = jacobian(&p).unwrap();
        assert_eq!(j.j1.rank(), 8);
    }
}
