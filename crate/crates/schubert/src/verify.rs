//! Aggregated invariant suite over one (type, rank, weight, variant)
//! quotient, backing the CLI `verify` subcommand. Each check returns a
//! pass/fail line; any failure makes the suite fail.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::decomp;
use crate::divisors;
use crate::error::{Error, Result};
use crate::exec;
use crate::quiver::MinusculeQuiver;
use crate::rootsys::{RootSystemData, Variant};
use crate::weyl;

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct VerifyReport {
    pub system: String,
    pub weight: usize,
    pub variant: String,
    pub elements: usize,
    pub checks: Vec<CheckResult>,
    pub passed: bool,
}

pub struct VerifyOptions {
    pub seed: u64,
    pub max_length: usize,
    pub max_peaks: usize,
    pub samples: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            seed: 0,
            max_length: weyl::DEFAULT_WORD_BOUND,
            max_peaks: decomp::DEFAULT_PEAK_BOUND,
            samples: 200,
        }
    }
}

fn check(name: &str, outcome: std::result::Result<(), String>) -> CheckResult {
    match outcome {
        Ok(()) => CheckResult {
            name: name.to_string(),
            passed: true,
            detail: "ok".to_string(),
        },
        Err(detail) => CheckResult {
            name: name.to_string(),
            passed: false,
            detail,
        },
    }
}

pub fn run_suite(
    rs: Arc<RootSystemData>,
    weight: usize,
    variant: Variant,
    opts: &VerifyOptions,
) -> Result<VerifyReport> {
    let words = weyl::enumerate_minuscule(&rs, weight, variant)?;
    let quivers: Vec<MinusculeQuiver> = words
        .iter()
        .map(|w| MinusculeQuiver::build(Arc::clone(&rs), w, weight, variant))
        .collect::<Result<_>>()?;
    let mut checks = Vec::new();

    checks.push(check("root-system-invariants", (|| -> std::result::Result<(), String> {
        let mut problems = Vec::new();
        if rs.roots().len() != rs.expected_root_count() {
            problems.push(format!(
                "root count {} != {}",
                rs.roots().len(),
                rs.expected_root_count()
            ));
        }
        for i in 1..=rs.rank {
            for j in 1..=rs.rank {
                let p = rs
                    .pairing(rs.simple_root(i), rs.fundamental_weight(j))
                    .map_err(|e| e.to_string())?;
                if p != if i == j { 1 } else { 0 } {
                    problems.push(format!("weight duality fails at ({i},{j})"));
                }
            }
        }
        if problems.is_empty() { Ok(()) } else { Err(problems.join("; ")) }
    })()));

    checks.push(check("reduced-iff-length", (|| -> std::result::Result<(), String> {
        let bad: Vec<String> = words
            .iter()
            .filter_map(|w| {
                let ok = weyl::is_reduced(&rs, w).unwrap_or(false)
                    && weyl::length(&rs, w).map(|l| l == w.len()).unwrap_or(false);
                (!ok).then(|| format!("{w:?}"))
            })
            .collect();
        if bad.is_empty() { Ok(()) } else { Err(format!("failing words: {bad:?}")) }
    })()));

    checks.push(check("shape-characterization", (|| -> std::result::Result<(), String> {
        let bad: Vec<String> = quivers
            .iter()
            .filter_map(|q| {
                (!q.passes_shape_check()).then(|| format!("{:?}", q.word))
            })
            .collect();
        if bad.is_empty() { Ok(()) } else { Err(format!("shape check fails: {bad:?}")) }
    })()));

    checks.push(check("quiver-uniqueness", (|| -> std::result::Result<(), String> {
        let mut problems = Vec::new();
        for q in &quivers {
            if q.word.len() > opts.max_length {
                continue;
            }
            let canon = q.canonical_word();
            for w in weyl::all_reduced_words(&rs, &q.word, opts.max_length)
                .map_err(|e| e.to_string())?
            {
                let q2 = MinusculeQuiver::from_word_unchecked(
                    Arc::clone(&rs),
                    &w,
                    weight,
                    variant,
                );
                if q2.canonical_word() != canon {
                    problems.push(format!("{w:?} disagrees with {:?}", q.word));
                }
            }
        }
        if problems.is_empty() { Ok(()) } else { Err(problems.join("; ")) }
    })()));

    checks.push(check("bruhat-covers", (|| -> std::result::Result<(), String> {
        // Transitive closure of maximal-vertex removal equals the Bruhat
        // subword oracle on the quotient.
        let canon: Vec<Vec<usize>> = quivers.iter().map(|q| q.canonical_word()).collect();
        let n = canon.len();
        let idx_of = |w: &[usize]| canon.iter().position(|c| c == w);
        let mut covers = vec![vec![false; n]; n];
        for (i, q) in quivers.iter().enumerate() {
            for &p in &q.peaks {
                let smaller = q.remove_maximal_vertex(p).map_err(|e| e.to_string())?;
                let c = smaller.canonical_word();
                let j = idx_of(&c).ok_or_else(|| {
                    format!("cover {c:?} escapes the quotient")
                })?;
                covers[j][i] = true; // smaller <= bigger
            }
        }
        // Reflexive-transitive closure.
        let mut leq = covers;
        for i in 0..n {
            leq[i][i] = true;
        }
        for k in 0..n {
            for i in 0..n {
                if leq[i][k] {
                    for j in 0..n {
                        if leq[k][j] {
                            leq[i][j] = true;
                        }
                    }
                }
            }
        }
        let mut problems = Vec::new();
        for i in 0..n {
            for j in 0..n {
                let oracle = weyl::bruhat_leq(&rs, &canon[i], &canon[j])
                    .map_err(|e| e.to_string())?;
                if oracle != leq[i][j] {
                    problems.push(format!("{:?} <= {:?}", canon[i], canon[j]));
                }
            }
        }
        if problems.is_empty() { Ok(()) } else { Err(format!("mismatches: {problems:?}")) }
    })()));

    checks.push(check("decomposition-invariants", (|| -> std::result::Result<(), String> {
        let outcomes = exec::par_map(&quivers, |q| -> std::result::Result<(), String> {
            for d in decomp::enumerate_decompositions(q, opts.max_peaks)
                .map_err(|e| e.to_string())?
            {
                let dec = &d.decomposition;
                let mut all: Vec<usize> = dec.parts.iter().flatten().copied().collect();
                all.sort_unstable();
                if all != (1..=q.len()).collect::<Vec<_>>() {
                    return Err(format!("{:?}: parts do not partition", q.word));
                }
                let total: usize = dec.part_words.iter().map(|w| w.len()).sum();
                if total != q.len() {
                    return Err(format!("{:?}: lengths do not add", q.word));
                }
            }
            Ok(())
        });
        let problems: Vec<String> = outcomes.into_iter().filter_map(|o| o.err()).collect();
        if problems.is_empty() { Ok(()) } else { Err(problems.join("; ")) }
    })()));

    checks.push(check("gamma-positivity", (|| -> std::result::Result<(), String> {
        let outcomes = exec::par_map(&quivers, |q| -> std::result::Result<(), String> {
            let m = divisors::gamma_pairings(&rs, &q.word).map_err(|e| e.to_string())?;
            for (i, row) in m.iter().enumerate() {
                for (j, &v) in row.iter().enumerate() {
                    let bad = if i == j { v != 2 } else { v < 0 };
                    if bad {
                        return Err(format!(
                            "{:?}: <gamma_{}^v, gamma_{}> = {v}",
                            q.word,
                            i + 1,
                            j + 1
                        ));
                    }
                }
            }
            for i in 1..=q.len() {
                for (&k, &l) in &divisors::lambda_coeffs(q, i).map_err(|e| e.to_string())? {
                    if l < 0 {
                        return Err(format!("{:?}: lambda^{k}_{i} = {l}", q.word));
                    }
                }
            }
            Ok(())
        });
        let problems: Vec<String> = outcomes.into_iter().filter_map(|o| o.err()).collect();
        if problems.is_empty() { Ok(()) } else { Err(problems.join("; ")) }
    })()));

    checks.push(check("mds-cover", (|| -> std::result::Result<(), String> {
        let outcomes = exec::par_map(&quivers, |q| -> std::result::Result<(), String> {
            let report = divisors::verify_mds_cover(q, opts.seed, opts.samples, opts.max_peaks)
                .map_err(|e| e.to_string())?;
            if report.passed {
                Ok(())
            } else {
                Err(format!("{:?}: {report:?}", q.word))
            }
        });
        let problems: Vec<String> = outcomes.into_iter().filter_map(|o| o.err()).collect();
        if problems.is_empty() { Ok(()) } else { Err(problems.join("; ")) }
    })()));

    let passed = checks.iter().all(|c| c.passed);
    Ok(VerifyReport {
        system: format!("{}{}", rs.type_letter, rs.rank),
        weight,
        variant: variant.to_string(),
        elements: words.len(),
        checks,
        passed,
    })
}

/// Convenience entry point used by the CLI; maps a failed suite to a
/// verification error so the exit code is distinct from input errors.
pub fn run_suite_strict(
    rs: Arc<RootSystemData>,
    weight: usize,
    variant: Variant,
    opts: &VerifyOptions,
) -> Result<VerifyReport> {
    let report = run_suite(rs, weight, variant, opts)?;
    if report.passed {
        Ok(report)
    } else {
        let failing: Vec<&str> = report
            .checks
            .iter()
            .filter(|c| !c.passed)
            .map(|c| c.name.as_str())
            .collect();
        Err(Error::Verification(format!(
            "failing checks: {}",
            failing.join(", ")
        )))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn a2_suite_passes() {
        let rs = Arc::new(RootSystemData::from_spec("A2").unwrap());
        let report = run_suite(rs, 1, Variant::Minuscule, &VerifyOptions::default()).unwrap();
        assert!(report.passed, "{report:?}");
        assert_eq!(report.elements, 3);
    }

    #[test]
    fn c4_cominuscule_suite_passes() {
        let rs = Arc::new(RootSystemData::from_spec("C4").unwrap());
        let report = run_suite(rs, 4, Variant::Cominuscule, &VerifyOptions::default()).unwrap();
        assert!(report.passed, "{report:?}");
        assert_eq!(report.elements, 16);
    }
}
