//! Explicit deformation families `F = f + g + h` of monomial curves, exact
//! flatness checks, projective closure and fibres.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::Pow;

use crate::curve::{
    presentation_3, presentation_4_arithmetic, var_names, ArithmeticConstants, CurvePresentation,
    StructureConstants,
};
use crate::ffscan::{self, FibreScan, FibreScanner};
use crate::poly::{PolyMatrix, SparsePolynomial};
use crate::semigroup::NumericalSemigroup;
use crate::{Error, Result};

/// A family over a parameter space, living in the ring
/// `F[x_0, …, x_k, P_1, …, P_m]` where each parameter `P` has weight
/// `−deg` of its first-order term.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeformationFamily {
    pub label: String,
    nx: usize,
    param_names: Vec<String>,
    weights: Vec<u64>,
    degrees: Vec<u64>,
    f: Vec<SparsePolynomial>,
    r: PolyMatrix,
    g: Vec<SparsePolynomial>,
    h: Vec<SparsePolynomial>,
    rho: PolyMatrix,
    rho2: PolyMatrix,
    constants: StructureConstants,
}

/// Residuals of the lifting conditions; every entry should be zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlatnessReport {
    /// `r·g + ρ·f`.
    pub first_order: Vec<SparsePolynomial>,
    /// `ρ·g + r·h + ρ'·f`.
    pub second_order: Vec<SparsePolynomial>,
    /// `ρ·h + ρ'·g`.
    pub third_order: Vec<SparsePolynomial>,
    /// `ρ'·h`.
    pub fourth_order: Vec<SparsePolynomial>,
    /// `ρ·h`.
    pub rho_h: Vec<SparsePolynomial>,
    pub homogeneous: bool,
    /// No parameter monomial of `h` has weight above `max d_j`.
    pub cutoff_respected: bool,
}

impl FlatnessReport {
    pub fn is_flat(&self) -> bool {
        self.failure().is_none()
    }

    /// The first offending entry, if any.
    pub fn failure(&self) -> Option<String> {
        let named = [
            ("r·g + ρ·f", &self.first_order),
            ("ρ·g + r·h + ρ'·f", &self.second_order),
            ("ρ·h + ρ'·g", &self.third_order),
            ("ρ'·h", &self.fourth_order),
        ];
        for (name, v) in named {
            if let Some(i) = v.iter().position(|p| !p.is_zero()) {
                return Some(format!("{name}, entry {i}: {}", v[i]));
            }
        }
        if !self.homogeneous {
            return Some("family is not homogeneous".into());
        }
        if !self.cutoff_respected {
            return Some("correction exceeds the parameter weight cutoff".into());
        }
        None
    }

    pub fn max_residual_terms(&self) -> usize {
        [&self.first_order, &self.second_order, &self.third_order, &self.fourth_order]
            .iter()
            .flat_map(|v| v.iter().map(|p| p.len()))
            .max()
            .unwrap_or(0)
    }
}

struct Ring {
    weights: Vec<u64>,
    nx: usize,
}

impl Ring {
    fn new(pres: &CurvePresentation, param_weights: &[u64]) -> Self {
        let mut weights = pres.weights().to_vec();
        weights.extend_from_slice(param_weights);
        Self {
            weights,
            nx: pres.nvars(),
        }
    }

    fn zero(&self) -> SparsePolynomial {
        SparsePolynomial::zero(&self.weights)
    }

    fn x(&self, i: usize) -> SparsePolynomial {
        SparsePolynomial::var(&self.weights, i)
    }

    fn m(&self, f: &[(usize, u32)]) -> SparsePolynomial {
        SparsePolynomial::monomial(&self.weights, f)
    }

    fn param(&self, j: usize) -> SparsePolynomial {
        SparsePolynomial::var(&self.weights, self.nx + j)
    }

    fn lift(&self, p: &SparsePolynomial) -> SparsePolynomial {
        let map: Vec<usize> = (0..self.nx).collect();
        p.embed(&self.weights, &map)
    }

    fn lift_matrix(&self, m: &PolyMatrix) -> PolyMatrix {
        m.map(|p| self.lift(p))
    }

    fn zeros(&self, r: usize, c: usize) -> PolyMatrix {
        PolyMatrix::zeros(&self.weights, r, c)
    }
}

fn add_all(v: &[SparsePolynomial], w: &[SparsePolynomial]) -> Vec<SparsePolynomial> {
    v.iter().zip(w).map(|(a, b)| a + b).collect()
}

impl DeformationFamily {
    #[allow(clippy::too_many_arguments)]
    fn assemble(
        label: &str,
        pres: &CurvePresentation,
        ring: &Ring,
        param_names: &[&str],
        r: PolyMatrix,
        g: Vec<SparsePolynomial>,
        h: Vec<SparsePolynomial>,
        rho: PolyMatrix,
    ) -> Self {
        let q = pres.equations().len();
        Self {
            label: label.into(),
            nx: ring.nx,
            param_names: param_names.iter().map(|s| String::from(*s)).collect(),
            weights: ring.weights.clone(),
            degrees: pres.degrees().to_vec(),
            f: pres.equations().iter().map(|p| ring.lift(p)).collect(),
            rho2: ring.zeros(r.nrows(), q),
            r,
            g,
            h,
            rho,
            constants: *pres.constants(),
        }
    }

    pub fn nx(&self) -> usize {
        self.nx
    }

    pub fn param_names(&self) -> &[String] {
        &self.param_names
    }

    pub fn param_weights(&self) -> &[u64] {
        &self.weights[self.nx..]
    }

    pub fn weights(&self) -> &[u64] {
        &self.weights
    }

    pub fn degrees(&self) -> &[u64] {
        &self.degrees
    }

    pub fn constants(&self) -> &StructureConstants {
        &self.constants
    }

    pub fn f(&self) -> &[SparsePolynomial] {
        &self.f
    }

    pub fn r(&self) -> &PolyMatrix {
        &self.r
    }

    pub fn g(&self) -> &[SparsePolynomial] {
        &self.g
    }

    pub fn h(&self) -> &[SparsePolynomial] {
        &self.h
    }

    pub fn rho(&self) -> &PolyMatrix {
        &self.rho
    }

    pub fn rho_prime(&self) -> &PolyMatrix {
        &self.rho2
    }

    /// Variable names: `x0, …, xk` then the parameters.
    pub fn names(&self) -> Vec<String> {
        let mut n = var_names(self.nx);
        n.extend(self.param_names.iter().cloned());
        n
    }

    /// `F = f + g + h`.
    pub fn equations(&self) -> Vec<SparsePolynomial> {
        add_all(&add_all(&self.f, &self.g), &self.h)
    }

    /// The same family with another correction term, for negative controls.
    pub fn with_h(&self, h: Vec<SparsePolynomial>) -> Self {
        Self { h, ..self.clone() }
    }

    /// Substitutes each parameter by a polynomial in new parameters with
    /// weights `new_weights`; returns the specialized `F`.
    pub fn specialize(&self, new_weights: &[u64], images: &[SparsePolynomial]) -> Result<Vec<SparsePolynomial>> {
        assert_eq!(images.len(), self.param_names.len());
        let mut w = self.weights[..self.nx].to_vec();
        w.extend_from_slice(new_weights);
        let mut out = Vec::new();
        for p in self.equations() {
            let mut acc = SparsePolynomial::zero(&w);
            for (e, c) in p.terms() {
                let mut t = SparsePolynomial::term(&w, {
                    let mut ex = e[..self.nx].to_vec();
                    ex.resize(w.len(), 0);
                    ex
                }, c.clone());
                for (j, img) in images.iter().enumerate() {
                    t = t.checked_mul(&img.pow(e[self.nx + j]))?;
                }
                acc = acc.checked_add(&t)?;
            }
            out.push(acc);
        }
        Ok(out)
    }

    /// The fibre over the parameter point `values`, in `F[x_0, …, x_k]`.
    pub fn fibre(&self, values: &[i64]) -> Vec<SparsePolynomial> {
        assert_eq!(values.len(), self.param_names.len());
        let xw = &self.weights[..self.nx];
        self.equations()
            .iter()
            .map(|p| {
                let mut acc = SparsePolynomial::zero(xw);
                for (e, c) in p.terms() {
                    let mut k = c.clone();
                    for (j, &v) in values.iter().enumerate() {
                        k *= Pow::pow(BigInt::from(v), e[self.nx + j]);
                    }
                    acc = &acc + &SparsePolynomial::term(xw, e[..self.nx].to_vec(), k);
                }
                acc
            })
            .collect()
    }
}

/// The six-parameter family of a non-complete-intersection 3-generated
/// semigroup; `h` is the vector of 2×2 minors of `ρ`.
pub fn build_family_3(sg: &NumericalSemigroup) -> Result<DeformationFamily> {
    let pres = match presentation_3(sg) {
        Err(Error::CompleteIntersection) => {
            return Err(Error::OutOfScope("complete intersection".into()));
        }
        p => p?,
    };
    let StructureConstants::Three(k) = *pres.constants() else { unreachable!() };
    let n = pres.weights();
    let pw = [
        (k.v - k.w) as u64 * n[2],
        k.mu as u64 * n[0],
        k.z as u64 * n[1],
        k.w as u64 * n[2],
        k.lambda as u64 * n[0],
        (k.u - k.z) as u64 * n[1],
    ];
    let ring = Ring::new(&pres, &pw);
    let m = |f: &[(usize, u32)]| ring.m(f);
    let o = || ring.zero();
    let cols = [
        [o(), m(&[(1, k.u - k.z)]), m(&[(2, k.w)])],
        [o(), m(&[(0, k.lambda)]), m(&[(1, k.z)])],
        [-m(&[(1, k.u - k.z)]), o(), m(&[(0, k.mu)])],
        [-m(&[(0, k.lambda)]), o(), m(&[(2, k.v - k.w)])],
        [-m(&[(2, k.w)]), -m(&[(0, k.mu)]), o()],
        [-m(&[(1, k.z)]), -m(&[(2, k.v - k.w)]), o()],
    ];
    let u: Vec<SparsePolynomial> = (0..6).map(|j| ring.param(j)).collect();
    let g: Vec<SparsePolynomial> = (0..3)
        .map(|i| cols.iter().zip(&u).fold(o(), |acc, (c, p)| &acc + &(p * &c[i])))
        .collect();
    let rho = PolyMatrix::new(vec![
        vec![-u[0].clone(), -u[2].clone(), -u[4].clone()],
        vec![-u[1].clone(), -u[3].clone(), -u[5].clone()],
    ]);
    let minor = |a: usize, b: usize| &(rho.get(0, a) * rho.get(1, b)) - &(rho.get(0, b) * rho.get(1, a));
    let h = vec![minor(1, 2), -minor(0, 2), minor(0, 1)];
    let r = ring.lift_matrix(pres.relations().expect("relations"));
    Ok(DeformationFamily::assemble(
        "embedding dimension 3",
        &pres,
        &ring,
        &["U1", "U2", "U3", "U4", "U5", "U6"],
        r,
        g,
        h,
        rho,
    ))
}

/// The three-parameter family of `⟨4, 9, 11⟩` built from the negative
/// generators of `T¹` in degrees −18, −16, −11.
pub fn family_4_9_11() -> DeformationFamily {
    let sg = NumericalSemigroup::from_generators(&[4, 9, 11]).expect("valid");
    let pres = presentation_3(&sg).expect("not a complete intersection").normalized();
    let ring = Ring::new(&pres, &[18, 16, 11]);
    let m = |f: &[(usize, u32)]| ring.m(f);
    let x = |i| ring.x(i);
    let o = || ring.zero();
    let u: Vec<SparsePolynomial> = (0..3).map(|j| ring.param(j)).collect();
    let cols = [[o(), x(0), -x(1)], [x(0), o(), x(2)], [x(1), o(), m(&[(0, 4)])]];
    let g: Vec<SparsePolynomial> = (0..3)
        .map(|i| cols.iter().zip(&u).fold(o(), |acc, (c, p)| &acc + &(p * &c[i])))
        .collect();
    let r = PolyMatrix::new(vec![
        vec![-x(2), x(1), x(0)],
        vec![m(&[(1, 2)]), -m(&[(0, 4)]), -x(2)],
    ]);
    let rho = PolyMatrix::new(vec![
        vec![-u[2].clone(), o(), o()],
        vec![u[0].clone(), -u[1].clone(), u[2].clone()],
    ]);
    let h = vec![o(), &u[2] * &u[2], &u[1] * &u[2]];
    DeformationFamily::assemble("<4,9,11> negative generators", &pres, &ring, &["U1", "U2", "U3"], r, g, h, rho)
}

fn arithmetic(pres: &CurvePresentation) -> ArithmeticConstants {
    match pres.constants() {
        StructureConstants::Arithmetic(k) => *k,
        _ => unreachable!(),
    }
}

/// The families of a 4-generated arithmetic sequence: one parameter `U` for
/// `b = 0, 1`; parameters `U`, `V` for `b = 2`.
pub fn build_family_4(sg: &NumericalSemigroup) -> Result<DeformationFamily> {
    let pres = presentation_4_arithmetic(sg)?;
    let k = arithmetic(&pres);
    let n = pres.weights();
    let r0 = pres.relations().expect("relations");
    match k.b {
        0 | 1 => {
            let ring = Ring::new(&pres, &[k.mu as u64 * n[0]]);
            let u = ring.param(0);
            let o = || ring.zero();
            let (g, rows): (Vec<SparsePolynomial>, [usize; 3]) = if k.b == 0 {
                (vec![o(), o(), o(), u.clone()], [2, 3, 4])
            } else {
                (vec![o(), o(), o(), &u * &ring.x(0), &u * &ring.x(1), &u * &ring.x(2)], [4, 5, 7])
            };
            let mut rho = ring.zeros(r0.nrows(), r0.ncols());
            for (c, &row) in rows.iter().enumerate() {
                rho.set(row, c, -u.clone());
            }
            let h = vec![o(); g.len()];
            let label = if k.b == 0 { "arithmetic, b = 0" } else { "arithmetic, b = 1" };
            Ok(DeformationFamily::assemble(label, &pres, &ring, &["U"], ring.lift_matrix(r0), g, h, rho))
        }
        _ => {
            let ring = Ring::new(&pres, &[(k.v - 1) as u64 * n[3], n[2]]);
            let (u, v) = (ring.param(0), ring.param(1));
            let x = |i| ring.x(i);
            let o = || ring.zero();
            let g1 = [o(), o(), o(), x(2), x(3)];
            let g2 = [x(0), x(1), o(), ring.m(&[(3, k.v - 1)]), o()];
            let g = (0..5).map(|i| &(&u * &g1[i]) + &(&v * &g2[i])).collect();
            let mut rho = ring.zeros(5, 5);
            rho.set(0, 0, v.clone());
            rho.set(1, 1, -v.clone());
            rho.set(2, 1, u.clone());
            rho.set(3, 2, u.clone());
            rho.set(3, 3, v.clone());
            rho.set(4, 4, v.clone());
            let h = vec![o(), o(), -(&v * &v), &u * &v, o()];
            Ok(DeformationFamily::assemble("arithmetic, b = 2", &pres, &ring, &["U", "V"], ring.lift_matrix(r0), g, h, rho))
        }
    }
}

/// The one-parameter family of a `b = 2` arithmetic sequence built from the
/// class in degree `−μ n_0` alone.
pub fn remark_family_b2(sg: &NumericalSemigroup) -> Result<DeformationFamily> {
    let pres = presentation_4_arithmetic(sg)?;
    let k = arithmetic(&pres);
    if k.b != 2 {
        return Err(Error::OutOfScope(format!("b = {} ≠ 2", k.b)));
    }
    let ring = Ring::new(&pres, &[k.mu as u64 * pres.weights()[0]]);
    let v = ring.param(0);
    let o = || ring.zero();
    let g = vec![o(), o(), o(), &v * &ring.x(0), &v * &ring.x(1)];
    let mut rho = ring.zeros(5, 5);
    rho.set(3, 0, -v.clone());
    rho.set(4, 1, -v.clone());
    let r = ring.lift_matrix(pres.relations().expect("relations"));
    Ok(DeformationFamily::assemble("arithmetic, b = 2, degree −μn0 only", &pres, &ring, &["V"], r, g, vec![o(); 5], rho))
}

pub fn verify_flatness(fam: &DeformationFamily) -> FlatnessReport {
    let r = &fam.r;
    let add = |a: Vec<SparsePolynomial>, b: Vec<SparsePolynomial>| add_all(&a, &b);
    let rho_h = fam.rho.mul_vec(&fam.h);
    let first_order = add(r.mul_vec(&fam.g), fam.rho.mul_vec(&fam.f));
    let second_order = add(
        add(fam.rho.mul_vec(&fam.g), r.mul_vec(&fam.h)),
        fam.rho2.mul_vec(&fam.f),
    );
    let third_order = add(rho_h.clone(), fam.rho2.mul_vec(&fam.g));
    let fourth_order = fam.rho2.mul_vec(&fam.h);
    let homogeneous = fam
        .equations()
        .iter()
        .zip(&fam.degrees)
        .all(|(p, &d)| p.terms().all(|(e, _)| p.weighted_degree_of(e) == d));
    let max_d = fam.degrees.iter().copied().max().unwrap_or(0);
    let cutoff_respected = fam.h.iter().all(|p| {
        p.terms().all(|(e, _)| {
            let w: u64 = e[fam.nx..].iter().zip(fam.param_weights()).map(|(&a, &b)| a as u64 * b).sum();
            w <= max_d
        })
    });
    FlatnessReport {
        first_order,
        second_order,
        third_order,
        fourth_order,
        rho_h,
        homogeneous,
        cutoff_respected,
    }
}

/// Like [`verify_flatness`], failing on the first nonzero residual.
pub fn check_flatness(fam: &DeformationFamily) -> Result<FlatnessReport> {
    let rep = verify_flatness(fam);
    match rep.failure() {
        Some(msg) => Err(Error::FlatnessFailed(msg)),
        None => Ok(rep),
    }
}

/// Closure in weighted projective space: each parameter `P` becomes
/// `P x_{k+1}^{weight(P)}` and `x_{k+1}` has weight 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProjectiveFamily {
    pub names: Vec<String>,
    /// `x_0, …, x_k, x_{k+1}`, then parameters with weight 0.
    pub weights: Vec<u64>,
    pub equations: Vec<SparsePolynomial>,
    pub degrees: Vec<u64>,
    pub homogeneous: bool,
    /// `(t^{n_0} : … : t^{n_k} : 0)` lies on every fibre.
    pub point_at_infinity: bool,
}

pub fn projectivize(fam: &DeformationFamily) -> ProjectiveFamily {
    let nx = fam.nx;
    let np = fam.param_names.len();
    let mut weights = fam.weights[..nx].to_vec();
    weights.push(1);
    weights.extend(vec![0; np]);
    let mut names = var_names(nx + 1);
    names.extend(fam.param_names.iter().cloned());
    let equations: Vec<SparsePolynomial> = fam
        .equations()
        .iter()
        .map(|p| {
            let mut acc = SparsePolynomial::zero(&weights);
            for (e, c) in p.terms() {
                let mut ex = e[..nx].to_vec();
                let t: u64 = e[nx..].iter().zip(fam.param_weights()).map(|(&a, &b)| a as u64 * b).sum();
                ex.push(t as u32);
                ex.extend_from_slice(&e[nx..]);
                acc = &acc + &SparsePolynomial::term(&weights, ex, c.clone());
            }
            acc
        })
        .collect();
    let homogeneous = equations
        .iter()
        .zip(&fam.degrees)
        .all(|(p, &d)| p.terms().all(|(e, _)| p.weighted_degree_of(e) == d));
    let point_at_infinity = equations
        .iter()
        .all(|p| p.filter_terms(|e| e[nx] == 0).toric_substitute().is_zero());
    ProjectiveFamily {
        names,
        weights,
        equations,
        degrees: fam.degrees.clone(),
        homogeneous,
        point_at_infinity,
    }
}

impl ProjectiveFamily {
    /// Sets `x_{k+1} = 1`, returning to the affine ring of the family.
    pub fn dehomogenize(&self, fam: &DeformationFamily) -> Vec<SparsePolynomial> {
        let nx = fam.nx;
        self.equations
            .iter()
            .map(|p| {
                let mut acc = SparsePolynomial::zero(&fam.weights);
                for (e, c) in p.terms() {
                    let mut ex = e[..nx].to_vec();
                    ex.extend_from_slice(&e[nx + 1..]);
                    acc = &acc + &SparsePolynomial::term(&fam.weights, ex, c.clone());
                }
                acc
            })
            .collect()
    }
}

/// The 3×3 minor on rows `(0, 1, 3)` and columns `(1, 2, 3)` of the affine
/// Jacobian of a `b = 1` family equals
/// `(3v − 2) x_0² x_3^{v−1} + 2(v − 1) x_1 x_3^{v−2} f_1 + 3(v − 1) x_0 x_3^{v−2} f_2`.
pub fn minor_identity_b1(fam: &DeformationFamily) -> Result<bool> {
    let StructureConstants::Arithmetic(k) = fam.constants else {
        return Err(Error::OutOfScope("not an arithmetic family".into()));
    };
    if k.b != 1 {
        return Err(Error::OutOfScope(format!("b = {} ≠ 1", k.b)));
    }
    let eqs = fam.equations();
    let d = |j: usize, i: usize| eqs[j].partial_derivative(i);
    let m = [[d(0, 1), d(0, 2), d(0, 3)], [d(1, 1), d(1, 2), d(1, 3)], [d(3, 1), d(3, 2), d(3, 3)]];
    let det = &(&(&m[0][0] * &(&(&m[1][1] * &m[2][2]) - &(&m[1][2] * &m[2][1])))
        - &(&m[0][1] * &(&(&m[1][0] * &m[2][2]) - &(&m[1][2] * &m[2][0]))))
        + &(&m[0][2] * &(&(&m[1][0] * &m[2][1]) - &(&m[1][1] * &m[2][0])));
    let w = &fam.weights;
    let v = k.v;
    let c = |x: u32| SparsePolynomial::constant(w, x);
    let mono = |f: &[(usize, u32)]| SparsePolynomial::monomial(w, f);
    let rhs = &(&(&c(3 * v - 2) * &mono(&[(0, 2), (3, v - 1)]))
        + &(&(&c(2 * (v - 1)) * &mono(&[(1, 1), (3, v - 2)])) * &fam.f[0]))
        + &(&(&c(3 * (v - 1)) * &mono(&[(0, 1), (3, v - 2)])) * &fam.f[1]);
    Ok(det == rhs)
}

/// Nonzero constants the smoothness argument divides by.
fn needed_constants(fam: &DeformationFamily) -> Vec<u64> {
    match fam.constants {
        StructureConstants::Arithmetic(k) => match k.b {
            0 => vec![k.mu as u64, k.v as u64],
            1 => vec![(3 * k.v - 2) as u64],
            _ => vec![2],
        },
        _ => vec![],
    }
}

/// The prepared fibre with every parameter equal to `value`, over `F_p`;
/// scan it whole or by slices of `x_0`.
pub fn smoothness_scanner(fam: &DeformationFamily, p: u64, value: i64) -> Result<FibreScanner> {
    ffscan::check_prime(p)?;
    if needed_constants(fam).iter().any(|&c| c % p == 0) {
        return Err(Error::BadPrime(p));
    }
    let fibre = fam.fibre(&vec![value; fam.param_names.len()]);
    Ok(FibreScanner::new(&fibre, p, fam.nx - 1))
}

/// Exhaustive Jacobian-rank scan of the fibre with every parameter equal to
/// `value`, over `F_p`.
pub fn finite_field_smoothness_scan(fam: &DeformationFamily, p: u64, value: i64) -> Result<FibreScan> {
    Ok(smoothness_scanner(fam, p, value)?.scan())
}
