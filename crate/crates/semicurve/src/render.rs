//! Plain-text output.

use std::fmt::Write;

use crate::dto::*;

fn opt<T: std::fmt::Display>(x: &Option<T>) -> String {
    x.as_ref().map_or("-".into(), |v| v.to_string())
}

fn list<T: std::fmt::Display>(v: &[T]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ")
}

pub fn text(r: &CommandResult) -> String {
    let mut s = String::new();
    let o = &mut s;
    match &r.payload {
        Payload::Profile(p) => {
            let _ = writeln!(o, "{}", p.text);
            let _ = writeln!(o, "generators: {}", list(&p.generators));
            let _ = writeln!(
                o,
                "e={} c={} d={} c'={} d'={} l={} s~={} g={} embdim={} tau={}",
                p.e,
                p.c,
                opt(&p.d),
                opt(&p.c_sub),
                opt(&p.d_prime),
                opt(&p.ell),
                opt(&p.s_tilde),
                p.g,
                p.embdim,
                p.tau
            );
            let _ = writeln!(o, "ordinary={} acute={} sequence: {}", p.ordinary, p.acute, p.sequence);
            if let Some(n) = &p.note {
                let _ = writeln!(o, "note: {n}");
            }
        }
        Payload::Nu(n) => {
            let _ = writeln!(o, "{:>6} {:>6}  (#A, #B, #C, #D)", "s", "nu");
            for e in &n.entries {
                let part = e.partition.map_or("-".into(), |p| format!("{p:?}"));
                let _ = writeln!(o, "{:>6} {:>6}  {part}", e.s, e.nu);
            }
            let _ = writeln!(o, "s_m = {}", opt(&n.s_m));
        }
        Payload::Sm(m) => {
            let _ = writeln!(o, "s_m = {} (index {}, window {})", opt(&m.s_m), opt(&m.m_index), m.window);
            if let Some(p) = &m.prediction {
                let _ = writeln!(
                    o,
                    "case {}: exact {} lower {} upper {} ({})",
                    p.case,
                    opt(&p.exact),
                    opt(&p.lower),
                    p.upper,
                    p.fired.as_deref().unwrap_or("no hypothesis fired")
                );
                let _ = writeln!(o, "consistent: {}", opt(&m.consistent));
            }
        }
        Payload::OrdBound(b) => {
            let _ = writeln!(o, "{:>4} {:>6} {:>6}", "k", "s_k", "d_ORD");
            for (k, s, v) in &b.rows {
                let _ = writeln!(o, "{k:>4} {s:>6} {v:>6}");
            }
        }
        Payload::ConjectureScan(c) => {
            let _ = writeln!(
                o,
                "genus <= {}: {} semigroups, {} non-ordinary, {} skipped (already recorded)",
                c.genus_max, c.semigroups, c.non_ordinary, c.skipped
            );
            let _ = writeln!(o, "counterexamples to s_m >= c + d - e: {}", c.counterexamples.len());
            for r in &c.counterexamples {
                let _ = writeln!(o, "  gen:{} s_m={} bound={}", list(&r.generators), r.s_m, r.bound);
            }
            let _ = writeln!(o, "s_m predictions violated: {}", c.prediction_violations.len());
            if let Some(p) = &c.jsonl {
                let _ = writeln!(o, "records: {p}");
            }
        }
        Payload::Obstruction(b) => {
            for (m, size, bound, v) in &b.records {
                let _ = writeln!(o, "m={m}: #H_m={size} bound={bound}{}", if *v { " VIOLATED" } else { "" });
            }
            if b.shortcut_applied {
                let _ = writeln!(o, "2c < 3g: no m can violate the bound");
            }
            if !b.applicable {
                let _ = writeln!(o, "genus < 2: test not applicable");
            }
            let _ = writeln!(o, "verdict: {}", b.verdict);
        }
        Payload::Torres(t) => {
            let _ = writeln!(o, "{}", t.spec);
            let _ = writeln!(o, "genus {} conductor {} generators {}", t.genus, t.conductor, list(&t.generators));
            let _ = writeln!(o, "non-Weierstrass by construction: {}", t.non_weierstrass_by_construction);
        }
        Payload::Reduce(r) => match (&r.reduced, &r.failure) {
            (Some(s), _) => {
                let _ = writeln!(o, "gamma={}: {s}", r.gamma);
            }
            (_, f) => {
                let _ = writeln!(o, "gamma={}: not reducible: {}", r.gamma, opt(f));
            }
        },
        Payload::Enumerate(e) => {
            for (g, n) in e.counts.iter().enumerate() {
                let _ = writeln!(o, "g={g}: {n}");
            }
            for s in e.semigroups.iter().flatten() {
                let _ = writeln!(o, "{s}");
            }
        }
        Payload::Ideal(i) => {
            let _ = writeln!(o, "{} weights {}", i.generators, list(&i.weights));
            for (k, v) in &i.constants {
                let _ = write!(o, "{k}={v} ");
            }
            let _ = writeln!(o);
            for (e, d) in i.equations.iter().zip(&i.degrees) {
                let _ = writeln!(o, "  [{d}] {e}");
            }
            if let Some(r) = &i.relations {
                let _ = writeln!(o, "relations:");
                for row in r {
                    let _ = writeln!(o, "  ({})", row.join(", "));
                }
            }
            let _ = writeln!(o, "J(1):");
            for row in &i.j1 {
                let _ = writeln!(o, "  {row:?}");
            }
        }
        Payload::T1(t) => {
            let _ = writeln!(o, "{}: window [{}, {}], rank cutoff {}", t.generators, t.window.0, t.window.1, t.rank_cutoff);
            let _ = writeln!(o, "{:>5}  {:<28} {:>3}  {:<32} {:>4} {:>4}", "l", "G_l", "#G", "H_l", "rho", "dim");
            for r in &t.rows {
                let _ = writeln!(
                    o,
                    "{:>5}  {:<28} {:>3}  {:<32} {:>4} {:>4}",
                    r.ell,
                    format!("{{{}}}", list(&r.g)),
                    r.g.len(),
                    format!("{{{}}}", list(&r.h)),
                    r.rho,
                    r.dim
                );
            }
            let _ = writeln!(o, "dim T1 = {}, negative part {}, T1(l) = 0 for l >= 0: {}", t.total, t.negative, t.nonnegative_vanishes);
            let gens: Vec<String> = t.module_generators.iter().map(|(l, n)| format!("{l} (x{n})")).collect();
            let _ = writeln!(o, "module generators: {}", gens.join(", "));
            let _ = writeln!(o, "M2 certificate: {}", t.m2_verdict);
        }
        Payload::Family(f) => {
            let params: Vec<String> = f.parameters.iter().map(|(n, w)| format!("{n} (weight {w})")).collect();
            let _ = writeln!(o, "{} {}: parameters {}", f.generators, f.label, params.join(", "));
            for (e, d) in f.equations.iter().zip(&f.degrees) {
                let _ = writeln!(o, "  [{d}] {e}");
            }
            match (f.flat, &f.flatness_failure) {
                (Some(true), _) => {
                    let _ = writeln!(o, "flatness: all residuals are the zero polynomial");
                }
                (Some(false), msg) => {
                    let _ = writeln!(o, "flatness FAILED: {}", opt(msg));
                }
                _ => {}
            }
            let _ = writeln!(o, "projective closure (P_inf on every fibre: {}):", f.point_at_infinity);
            for e in &f.projective {
                let _ = writeln!(o, "  {e}");
            }
            for sc in &f.scans {
                let _ = writeln!(
                    o,
                    "F_{} fibre at {}: {} points, min rank {} (need {}), {} singular{}: {}",
                    sc.p,
                    sc.value,
                    sc.points,
                    opt(&sc.min_rank),
                    sc.expected_rank,
                    sc.singular_points.len(),
                    if sc.origin_singular { ", origin singular" } else { "" },
                    sc.verdict
                );
            }
            if !f.scans.is_empty() {
                let _ = writeln!(o, "note: {}", f.note);
            }
        }
        Payload::Regress(g) => {
            for x in &g.fixtures {
                let _ = writeln!(o, "{} {}: {}", if x.passed { "PASS" } else { "FAIL" }, x.name, x.detail);
            }
            let n = g.fixtures.iter().filter(|x| x.passed).count();
            let _ = writeln!(o, "{n}/{} fixtures reproduced", g.fixtures.len());
        }
    }
    s
}
