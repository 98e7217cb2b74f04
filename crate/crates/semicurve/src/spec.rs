//! Semigroup specs: `gen:4,9,11` or `elem:0,8,12,14,15,16;c=20`.

use semicurve_core::NumericalSemigroup;

use crate::error::{CliError, Result};

fn numbers(spec: &str, list: &str) -> Result<Vec<u32>> {
    list.split(',')
        .map(|t| {
            t.trim().parse::<u32>().map_err(|_| CliError::Spec {
                spec: spec.into(),
                reason: format!("{t:?} is not a non-negative integer"),
            })
        })
        .collect()
}

pub fn parse_semigroup(spec: &str) -> Result<NumericalSemigroup> {
    let bad = |reason: &str| CliError::Spec {
        spec: spec.into(),
        reason: reason.into(),
    };
    let sg = if let Some(rest) = spec.strip_prefix("gen:") {
        NumericalSemigroup::from_generators(&numbers(spec, rest)?)
    } else if let Some(rest) = spec.strip_prefix("elem:") {
        let (list, c) = rest.split_once(";c=").ok_or_else(|| bad("expected elem:<list>;c=<conductor>"))?;
        let c: u32 = c.trim().parse().map_err(|_| bad("conductor is not an integer"))?;
        NumericalSemigroup::from_small_elements(&numbers(spec, list)?, c)
    } else {
        return Err(bad("expected gen:… or elem:…;c=…"));
    };
    sg.map_err(|e| bad(&e.to_string()))
}

/// The `elem:` form of a semigroup.
pub fn format_semigroup(sg: &NumericalSemigroup) -> String {
    let list: Vec<String> = sg.small_elements().iter().map(u32::to_string).collect();
    format!("elem:{};c={}", list.join(","), sg.conductor())
}

/// The `gen:` form of a semigroup.
pub fn format_generators(sg: &NumericalSemigroup) -> String {
    let list: Vec<String> = sg.min_generators().iter().map(u32::to_string).collect();
    format!("gen:{}", list.join(","))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn both_forms() {
        let a = parse_semigroup("gen:4,9,11").unwrap();
        let b = parse_semigroup("elem:0,4,8,9,11,12,13;c=15").unwrap();
        assert_eq!(a, b);
        assert_eq!(format_semigroup(&a), "elem:0,4,8,9,11,12,13;c=15");
        assert_eq!(format_generators(&b), "gen:4,9,11");
        assert!(parse_semigroup("gen:1").unwrap().is_naturals());
    }

    #[test]
    fn malformed() {
        for s in ["4,9,11", "gen:", "gen:4,x", "elem:0,4;c=", "gen:4,6", "elem:0,3;c=7"] {
            assert!(matches!(parse_semigroup(s), Err(CliError::Spec { .. })), "{s}");
        }
    }
}
