//! Serializable payloads. Every command result is one of these, and the
//! JSON form round-trips.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use semicurve_core::curve::{CurvePresentation, StructureConstants};
use semicurve_core::deform::{DeformationFamily, FlatnessReport, ProjectiveFamily};
use semicurve_core::ffscan::FibreScan;
use semicurve_core::obstruction::ObstructionReport;
use semicurve_core::order_bound::{ConjectureVerdict, NuProfile, SmCase, SmPrediction};
use semicurve_core::poly::SparsePolynomial;
use semicurve_core::semigroup::SequenceClass;
use semicurve_core::t1::{M2Report, M2Verdict, T1Record, T1Table};
use semicurve_core::NumericalSemigroup;

use crate::spec::{format_generators, format_semigroup};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CommandResult {
    pub command: String,
    pub ok: bool,
    pub payload: Payload,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Payload {
    Profile(ProfileDto),
    Nu(NuDto),
    Sm(SmDto),
    OrdBound(OrdBoundDto),
    ConjectureScan(ScanSummaryDto),
    Obstruction(ObstructionDto),
    Torres(TorresDto),
    Reduce(ReduceDto),
    Enumerate(EnumerateDto),
    Ideal(IdealDto),
    T1(T1Dto),
    Family(FamilyDto),
    Regress(RegressDto),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProfileDto {
    pub text: String,
    pub spec: String,
    pub generators: Vec<u32>,
    pub small_elements: Vec<u32>,
    pub gaps: Vec<u32>,
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
    pub ordinary: bool,
    pub acute: bool,
    pub sequence: String,
    pub note: Option<String>,
}

pub fn sequence_name(class: SequenceClass) -> String {
    match class {
        SequenceClass::Arithmetic { d } => format!("arithmetic (d = {d})"),
        SequenceClass::GeneralizedArithmetic { a, d } => format!("generalized arithmetic (a = {a}, d = {d})"),
        SequenceClass::AlmostArithmetic { extra, d } => format!("almost arithmetic (d = {d}, extra {extra})"),
        SequenceClass::None => "none".into(),
    }
}

impl ProfileDto {
    pub fn new(sg: &NumericalSemigroup) -> Self {
        let p = sg.profile();
        let note = if sg.is_naturals() {
            Some("S = N: no gaps; ordinary".into())
        } else if p.is_ordinary {
            Some("ordinary semigroup".into())
        } else {
            None
        };
        Self {
            text: sg.to_string(),
            spec: format_semigroup(sg),
            generators: sg.min_generators().to_vec(),
            small_elements: sg.small_elements().to_vec(),
            gaps: sg.gaps().to_vec(),
            e: p.e,
            c: p.c,
            d: p.d,
            c_sub: p.c_sub,
            d_prime: p.d_prime,
            ell: p.ell,
            s_tilde: p.s_tilde,
            g: p.g,
            embdim: p.embdim,
            tau: p.tau,
            ordinary: p.is_ordinary,
            acute: p.is_acute,
            sequence: sequence_name(sg.classify_sequence()),
            note,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NuEntry {
    pub s: u32,
    pub nu: u64,
    /// `(#A, #B, #C, #D)`; absent for ordinary semigroups.
    pub partition: Option<[u64; 4]>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NuDto {
    pub entries: Vec<NuEntry>,
    pub s_m: Option<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PredictionDto {
    pub case: String,
    pub exact: Option<i64>,
    pub lower: Option<i64>,
    pub upper: i64,
    pub fired: Option<String>,
}

impl From<&SmPrediction> for PredictionDto {
    fn from(p: &SmPrediction) -> Self {
        let case = match p.case {
            SmCase::One => "1",
            SmCase::TwoA => "2a",
            SmCase::TwoB => "2b",
            SmCase::TwoC => "2c",
        };
        Self {
            case: case.into(),
            exact: p.exact,
            lower: p.lower,
            upper: p.upper,
            fired: p.fired.map(String::from),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SmDto {
    pub s_m: Option<u32>,
    pub m_index: Option<usize>,
    pub window: u32,
    pub prediction: Option<PredictionDto>,
    /// The prediction is consistent with the brute-force value.
    pub consistent: Option<bool>,
}

impl SmDto {
    pub fn new(prof: &NuProfile, pred: Option<&SmPrediction>) -> Self {
        Self {
            s_m: prof.s_m,
            m_index: prof.m_index,
            window: prof.window,
            prediction: pred.map(PredictionDto::from),
            consistent: pred.zip(prof.s_m).map(|(p, s)| p.contains(s as i64)),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrdBoundDto {
    /// `(k, s_k, d_ORD(C_k))`.
    pub rows: Vec<(usize, u32, u64)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConjectureRecord {
    pub generators: Vec<u32>,
    pub genus: u32,
    pub e: u32,
    pub c: u32,
    pub d: u32,
    pub s_m: i64,
    pub bound: i64,
    pub holds: bool,
    pub certified_by: Vec<u8>,
    pub prediction: PredictionDto,
    pub prediction_consistent: bool,
}

impl ConjectureRecord {
    pub fn new(sg: &NumericalSemigroup, v: &ConjectureVerdict, pred: &SmPrediction) -> Self {
        let p = sg.profile();
        Self {
            generators: sg.min_generators().to_vec(),
            genus: p.g,
            e: p.e,
            c: p.c,
            d: p.d.unwrap_or(0),
            s_m: v.s_m,
            bound: v.bound,
            holds: v.holds,
            certified_by: v.certified_by.clone(),
            prediction: pred.into(),
            prediction_consistent: pred.contains(v.s_m),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanSummaryDto {
    pub genus_max: u32,
    pub semigroups: usize,
    pub non_ordinary: usize,
    pub skipped: usize,
    pub counterexamples: Vec<ConjectureRecord>,
    pub prediction_violations: Vec<ConjectureRecord>,
    pub jsonl: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ObstructionDto {
    pub genus: u32,
    /// `(m, #H_m, (2m − 1)(g − 1), violated)`.
    pub records: Vec<(u32, u64, u64, bool)>,
    pub first_violation: Option<u32>,
    pub shortcut_applied: bool,
    pub applicable: bool,
    pub verdict: String,
}

impl From<&ObstructionReport> for ObstructionDto {
    fn from(r: &ObstructionReport) -> Self {
        Self {
            genus: r.genus,
            records: r.records.iter().map(|x| (x.m, x.size, x.bound, x.violated)).collect(),
            first_violation: r.first_violation,
            shortcut_applied: r.shortcut_applied,
            applicable: r.applicable,
            verdict: r.verdict().as_str().into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TorresDto {
    pub genus: u32,
    pub conductor: u32,
    pub generators: Vec<u32>,
    pub spec: String,
    pub non_weierstrass_by_construction: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReduceDto {
    pub gamma: u32,
    pub reduced: Option<String>,
    pub failure: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumerateDto {
    pub genus_max: u32,
    /// Number of semigroups of each genus `0..=genus_max`.
    pub counts: Vec<usize>,
    pub semigroups: Option<Vec<String>>,
}

fn names(n: usize) -> Vec<String> {
    semicurve_core::curve::var_names(n)
}

pub fn show(p: &SparsePolynomial, names: &[String]) -> String {
    let names: Vec<&str> = names.iter().map(String::as_str).collect();
    p.display_with(&names).to_string()
}

fn constants_map(c: &StructureConstants) -> BTreeMap<String, u32> {
    let mut m = BTreeMap::new();
    match c {
        StructureConstants::Three(k) => {
            for (n, v) in [("u", k.u), ("v", k.v), ("lambda", k.lambda), ("mu", k.mu), ("w", k.w), ("z", k.z)] {
                m.insert(n.into(), v);
            }
        }
        StructureConstants::Arithmetic(k) => {
            for (n, v) in [("p", k.p), ("a", k.a), ("b", k.b), ("d", k.d), ("v", k.v), ("mu", k.mu), ("z", k.z)] {
                m.insert(n.into(), v);
            }
        }
        StructureConstants::Fixture => {}
    }
    m
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealDto {
    pub generators: String,
    pub weights: Vec<u64>,
    pub equations: Vec<String>,
    pub degrees: Vec<u64>,
    pub constants: BTreeMap<String, u32>,
    pub relations: Option<Vec<Vec<String>>>,
    pub j1: Vec<Vec<i64>>,
}

impl IdealDto {
    pub fn new(pres: &CurvePresentation, j1: Vec<Vec<i64>>) -> Self {
        let n = names(pres.nvars());
        Self {
            generators: format_generators(pres.semigroup()),
            weights: pres.weights().to_vec(),
            equations: pres.equations().iter().map(|p| show(p, &n)).collect(),
            degrees: pres.degrees().to_vec(),
            constants: constants_map(pres.constants()),
            relations: pres
                .relations()
                .map(|r| r.rows().iter().map(|row| row.iter().map(|p| show(p, &n)).collect()).collect()),
            j1,
        }
    }
}

fn small(v: &[BigInt]) -> Vec<i64> {
    v.iter().map(|x| i64::try_from(x).expect("coefficient fits in i64")).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct T1RowDto {
    pub ell: i64,
    pub g: Vec<usize>,
    pub h: Vec<u64>,
    pub rho: usize,
    pub dim: usize,
    pub basis: Vec<Vec<i64>>,
}

impl From<&T1Record> for T1RowDto {
    fn from(r: &T1Record) -> Self {
        Self {
            ell: r.ell,
            g: r.g.clone(),
            h: r.h_degrees.clone(),
            rho: r.rho,
            dim: r.dim,
            basis: r.basis.iter().map(|b| small(b)).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct T1Dto {
    pub generators: String,
    pub window: (i64, i64),
    pub rank_cutoff: i64,
    pub total: usize,
    pub negative: usize,
    pub nonnegative_vanishes: bool,
    pub rows: Vec<T1RowDto>,
    /// Degrees of module generators with their counts.
    pub module_generators: Vec<(i64, usize)>,
    pub m2_verdict: String,
    pub smoothing_candidates: Vec<i64>,
}

impl T1Dto {
    pub fn new(sg: &NumericalSemigroup, t: &T1Table, gens: Vec<(i64, usize)>, m2: &M2Report) -> Self {
        Self {
            generators: format_generators(sg),
            window: t.window,
            rank_cutoff: t.rank_cutoff,
            total: t.total,
            negative: t.negative,
            nonnegative_vanishes: t.nonnegative_vanishes,
            rows: t.records.iter().map(T1RowDto::from).collect(),
            module_generators: gens,
            m2_verdict: m2.verdict.as_str().into(),
            smoothing_candidates: match &m2.verdict {
                M2Verdict::Obstructed => vec![],
                M2Verdict::NotObstructed { smoothing_candidates } => smoothing_candidates.clone(),
            },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanDto {
    pub p: u64,
    pub value: i64,
    pub points: u64,
    pub min_rank: Option<usize>,
    pub expected_rank: usize,
    pub singular_points: Vec<Vec<u64>>,
    pub origin_on_fibre: bool,
    pub origin_singular: bool,
    pub verdict: String,
}

impl ScanDto {
    pub fn new(s: &FibreScan, value: i64) -> Self {
        Self {
            p: s.p,
            value,
            points: s.points,
            min_rank: s.min_rank,
            expected_rank: s.expected_rank,
            singular_points: s.singular_points.clone(),
            origin_on_fibre: s.origin_on_fibre,
            origin_singular: s.origin_singular,
            verdict: s.verdict().into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyDto {
    pub generators: String,
    pub label: String,
    /// Parameter names with their weights.
    pub parameters: Vec<(String, u64)>,
    pub equations: Vec<String>,
    pub degrees: Vec<u64>,
    pub flat: Option<bool>,
    pub flatness_failure: Option<String>,
    pub projective: Vec<String>,
    pub point_at_infinity: bool,
    pub scans: Vec<ScanDto>,
    pub note: String,
}

impl FamilyDto {
    pub fn new(fam: &DeformationFamily, flat: Option<&FlatnessReport>, proj: &ProjectiveFamily, scans: Vec<ScanDto>) -> Self {
        let n = fam.names();
        Self {
            generators: String::new(),
            label: fam.label.clone(),
            parameters: fam.param_names().iter().cloned().zip(fam.param_weights().iter().copied()).collect(),
            equations: fam.equations().iter().map(|p| show(p, &n)).collect(),
            degrees: fam.degrees().to_vec(),
            flat: flat.map(FlatnessReport::is_flat),
            flatness_failure: flat.and_then(FlatnessReport::failure),
            projective: proj.equations.iter().map(|p| show(p, &proj.names)).collect(),
            point_at_infinity: proj.point_at_infinity,
            scans,
            note: "finite-field scans are a smoke test consistent with smoothness in characteristic 0, not a proof".into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FixtureOutcome {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RegressDto {
    pub fixtures: Vec<FixtureOutcome>,
}
