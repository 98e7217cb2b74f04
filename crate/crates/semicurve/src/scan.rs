//! Batch check of `s_m ≥ c + d − e` over every semigroup up to a genus, as
//! JSON lines, one record per non-ordinary semigroup.

use std::collections::BTreeSet;
use std::fs::{File, OpenOptions};
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};

use rayon::prelude::*;
use semicurve_core::order_bound::{check_conjecture, predict_sm};
use semicurve_core::semigroup::enumerate_by_genus;
use semicurve_core::NumericalSemigroup;

use crate::dto::{ConjectureRecord, ScanSummaryDto};
use crate::error::{CliError, Result};

pub const SCAN_DIR_VAR: &str = "SEMICURVE_SCAN_DIR";

/// Relative paths are placed under `$SEMICURVE_SCAN_DIR` when it is set.
pub fn resolve_output(path: &Path) -> PathBuf {
    match std::env::var_os(SCAN_DIR_VAR) {
        Some(dir) if path.is_relative() => Path::new(&dir).join(path),
        _ => path.to_path_buf(),
    }
}

pub fn record(sg: &NumericalSemigroup) -> Result<ConjectureRecord> {
    let v = check_conjecture(sg)?;
    let pred = predict_sm(sg)?;
    Ok(ConjectureRecord::new(sg, &v, &pred))
}

fn done_keys(path: &Path) -> Result<BTreeSet<Vec<u32>>> {
    let mut keys = BTreeSet::new();
    if !path.exists() {
        return Ok(keys);
    }
    for line in BufReader::new(File::open(path)?).lines() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let r: ConjectureRecord = serde_json::from_str(&line)?;
        keys.insert(r.generators);
    }
    Ok(keys)
}

/// Scans genus `0..=genus_max` in increasing genus. With `resume`, records
/// already present in the output are skipped and new ones appended.
pub fn conjecture_scan(genus_max: u32, jsonl: Option<&Path>, resume: bool, jobs: usize) -> Result<ScanSummaryDto> {
    let path = jsonl.map(resolve_output);
    let done = match (&path, resume) {
        (Some(p), true) => done_keys(p)?,
        _ => BTreeSet::new(),
    };
    let mut out = match &path {
        Some(p) => {
            if let Some(dir) = p.parent().filter(|d| !d.as_os_str().is_empty()) {
                std::fs::create_dir_all(dir)?;
            }
            let f = OpenOptions::new().create(true).write(true).append(resume).truncate(!resume).open(p)?;
            Some(BufWriter::new(f))
        }
        None => None,
    };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| CliError::Usage(e.to_string()))?;
    let mut by_genus: Vec<Vec<NumericalSemigroup>> = vec![Vec::new(); genus_max as usize + 1];
    for s in enumerate_by_genus(genus_max) {
        by_genus[s.genus() as usize].push(s);
    }
    let mut summary = ScanSummaryDto {
        genus_max,
        semigroups: 0,
        non_ordinary: 0,
        skipped: 0,
        counterexamples: vec![],
        prediction_violations: vec![],
        jsonl: path.as_ref().map(|p| p.display().to_string()),
    };
    for mut layer in by_genus {
        layer.sort_by(|a, b| a.small_elements().cmp(b.small_elements()));
        summary.semigroups += layer.len();
        let todo: Vec<&NumericalSemigroup> = layer.iter().filter(|s| !s.is_ordinary()).collect();
        summary.non_ordinary += todo.len();
        let todo: Vec<&NumericalSemigroup> = todo.into_iter().filter(|s| !done.contains(s.min_generators())).collect();
        summary.skipped += layer.iter().filter(|s| !s.is_ordinary()).count() - todo.len();
        let records: Vec<ConjectureRecord> = pool.install(|| todo.par_iter().map(|s| record(s)).collect::<Result<_>>())?;
        for r in records {
            if let Some(w) = out.as_mut() {
                serde_json::to_writer(&mut *w, &r)?;
                w.write_all(b"\n")?;
            }
            if !r.holds {
                summary.counterexamples.push(r.clone());
            }
            if !r.prediction_consistent {
                summary.prediction_violations.push(r);
            }
        }
        if let Some(w) = out.as_mut() {
            w.flush()?;
        }
    }
    Ok(summary)
}
