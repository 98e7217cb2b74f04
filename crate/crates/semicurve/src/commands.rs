//! One function per verb, each a thin adapter over the core library.

use rayon::prelude::*;
use semicurve_core::curve::{
    j1_rows, jacobian, presentation_3, presentation_4_arithmetic, presentation_buchweitz, CurvePresentation,
};
use semicurve_core::deform::{
    build_family_3, build_family_4, family_4_9_11, projectivize, remark_family_b2, smoothness_scanner,
    verify_flatness, DeformationFamily,
};
use semicurve_core::ffscan::FibreScan;
use semicurve_core::obstruction::{buchweitz_test, gamma_hyperelliptic_reduce, torres_double, ReduceFailure};
use semicurve_core::order_bound::{find_sm, nu as nu_value, order_bound, partition_counts, predict_sm};
use semicurve_core::semigroup::enumerate_by_genus;
use semicurve_core::t1::T1Engine;
use semicurve_core::{Error, NumericalSemigroup};

use crate::dto::*;
use crate::error::{CliError, Result};
use crate::fixtures;
use crate::spec::{format_semigroup, parse_semigroup};

pub fn profile(sg: &NumericalSemigroup) -> ProfileDto {
    ProfileDto::new(sg)
}

fn nu_entry(sg: &NumericalSemigroup, s: u32) -> Result<NuEntry> {
    let nu = nu_value(sg, s)?;
    let partition = match partition_counts(sg, s) {
        Ok(p) => Some([p.a, p.b, p.c, p.d]),
        Err(Error::PartitionUndefined) => None,
        Err(e) => return Err(e.into()),
    };
    Ok(NuEntry { s, nu, partition })
}

/// `ν` at one member, or over the window used to locate `s_m`.
pub fn nu(sg: &NumericalSemigroup, s: Option<u32>) -> Result<NuDto> {
    let prof = find_sm(sg);
    let entries = match s {
        Some(s) => vec![nu_entry(sg, s)?],
        None => prof.s_values.iter().map(|&s| nu_entry(sg, s)).collect::<Result<_>>()?,
    };
    Ok(NuDto { entries, s_m: prof.s_m })
}

pub fn sm(sg: &NumericalSemigroup) -> SmDto {
    let prof = find_sm(sg);
    let pred = predict_sm(sg).ok();
    SmDto::new(&prof, pred.as_ref())
}

/// `d_ORD(C_k)` at `k`, or for every `k` up to the index of `2c`.
pub fn ordbound(sg: &NumericalSemigroup, k: Option<usize>) -> Result<OrdBoundDto> {
    let ks: Vec<usize> = match k {
        Some(k) => vec![k],
        None => (0..=sg.index_of(sg.next_member(2 * sg.conductor()))?).collect(),
    };
    Ok(OrdBoundDto {
        rows: ks.into_iter().map(|k| (k, sg.nth_member(k), order_bound(sg, k))).collect(),
    })
}

pub fn buchweitz(sg: &NumericalSemigroup, m_max: u32) -> Result<ObstructionDto> {
    Ok(ObstructionDto::from(&buchweitz_test(sg, m_max)?))
}

pub fn torres(sg: &NumericalSemigroup, genus: u32) -> Result<TorresDto> {
    let t = torres_double(sg, genus)?;
    Ok(TorresDto {
        genus: t.semigroup.genus(),
        conductor: t.semigroup.conductor(),
        generators: t.semigroup.min_generators().to_vec(),
        spec: format_semigroup(&t.semigroup),
        non_weierstrass_by_construction: t.non_weierstrass_by_construction,
    })
}

pub fn reduce(sg: &NumericalSemigroup, gamma: u32) -> ReduceDto {
    match gamma_hyperelliptic_reduce(sg, gamma) {
        Ok(s) => ReduceDto {
            gamma,
            reduced: Some(format_semigroup(&s)),
            failure: None,
        },
        Err(f) => ReduceDto {
            gamma,
            reduced: None,
            failure: Some(
                match f {
                    ReduceFailure::OddPrefix => "an element among the first gamma is odd",
                    ReduceFailure::WrongMGamma => "m_gamma != 4 gamma",
                    ReduceFailure::Missing4GammaPlus2 => "4 gamma + 2 is not in S",
                    ReduceFailure::GenusTooSmall => "g < 6 gamma + 4",
                }
                .into(),
            ),
        },
    }
}

pub fn enumerate(genus_max: u32, list: bool) -> EnumerateDto {
    let mut all: Vec<NumericalSemigroup> = enumerate_by_genus(genus_max).collect();
    all.sort_by(|a, b| (a.genus(), a.small_elements()).cmp(&(b.genus(), b.small_elements())));
    let mut counts = vec![0; genus_max as usize + 1];
    for s in &all {
        counts[s.genus() as usize] += 1;
    }
    EnumerateDto {
        genus_max,
        counts,
        semigroups: list.then(|| all.iter().map(format_semigroup).collect()),
    }
}

/// The presentation used for a semigroup: embedding dimension 3 (not a
/// complete intersection), a 4-term arithmetic sequence, or the Buchweitz
/// semigroup.
pub fn presentation_for(sg: &NumericalSemigroup) -> Result<CurvePresentation> {
    if *sg == parse_semigroup(fixtures::BUCHWEITZ)? {
        return Ok(presentation_buchweitz());
    }
    match sg.embedding_dimension() {
        3 => Ok(presentation_3(sg)?),
        4 => Ok(presentation_4_arithmetic(sg)?),
        k => Err(Error::OutOfScope(format!("no presentation for embedding dimension {k}")).into()),
    }
}

pub fn ideal(sg: &NumericalSemigroup) -> Result<IdealDto> {
    let pres = presentation_for(sg)?;
    let j = jacobian(&pres)?;
    Ok(IdealDto::new(&pres, j1_rows(&j)))
}

pub fn t1(sg: &NumericalSemigroup) -> Result<T1Dto> {
    let eng = T1Engine::new(&presentation_for(sg)?)?;
    let table = eng.scan()?;
    Ok(T1Dto::new(sg, &table, eng.generator_degrees(), &eng.m2_certificate()))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum FamilyCase {
    /// Six parameters for embedding dimension 3; the arithmetic family for
    /// embedding dimension 4.
    Auto,
    /// The three-parameter family of `⟨4, 9, 11⟩`.
    Example,
    /// The one-parameter `b = 2` family built from degree `−μ n_0` only.
    Remark,
}

pub fn family(sg: &NumericalSemigroup, case: FamilyCase) -> Result<DeformationFamily> {
    Ok(match case {
        FamilyCase::Example => {
            if *sg != parse_semigroup(fixtures::EX_CURVE)? {
                return Err(Error::OutOfScope("the example family exists only for <4,9,11>".into()).into());
            }
            family_4_9_11()
        }
        FamilyCase::Remark => remark_family_b2(sg)?,
        FamilyCase::Auto => match sg.embedding_dimension() {
            3 => build_family_3(sg)?,
            4 => build_family_4(sg)?,
            k => return Err(Error::OutOfScope(format!("no family for embedding dimension {k}")).into()),
        },
    })
}

/// Fibre scan with every parameter equal to `value`, split over `x_0`.
pub fn fibre_scan(fam: &DeformationFamily, p: u64, value: i64, jobs: usize) -> Result<FibreScan> {
    let scanner = smoothness_scanner(fam, p, value)?;
    if jobs <= 1 {
        return Ok(scanner.scan());
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| CliError::Usage(e.to_string()))?;
    let slices: Vec<FibreScan> = pool.install(|| (0..p).into_par_iter().map(|x0| scanner.scan_slice(x0)).collect());
    let mut it = slices.into_iter();
    let first = it.next().expect("p ≥ 2");
    Ok(it.fold(first, FibreScan::merge))
}

pub fn deform(sg: &NumericalSemigroup, case: FamilyCase, verify: bool, scans: &[(u64, i64)], jobs: usize) -> Result<FamilyDto> {
    let fam = family(sg, case)?;
    let flat = verify.then(|| verify_flatness(&fam));
    let proj = projectivize(&fam);
    let scans = scans
        .iter()
        .map(|&(p, u)| Ok(ScanDto::new(&fibre_scan(&fam, p, u, jobs)?, u)))
        .collect::<Result<Vec<_>>>()?;
    let mut dto = FamilyDto::new(&fam, flat.as_ref(), &proj, scans);
    dto.generators = crate::spec::format_generators(sg);
    Ok(dto)
}
