use std::collections::HashSet;
use std::time::Instant;

use serde::Serialize;

use crate::error::Result;
use crate::groups::GroupParams;
use crate::seqengine::{check_shift_lemma, decompose, Sequence, ShiftCheck};

use super::formii::{form_ii_count, form_ii_sequences, match_form_ii};
use super::search::SearchOptions;
use super::space::SearchSpace;
use super::{enumerate_free, Enumeration};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    TheoremHolds,
    #[serde(rename = "COUNTEREXAMPLE_CASE_2_3")]
    CounterexampleCase23,
    Falsified,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::TheoremHolds => "THEOREM_HOLDS",
            Verdict::CounterexampleCase23 => "COUNTEREXAMPLE_CASE_2_3",
            Verdict::Falsified => "FALSIFIED",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ReportParams {
    pub q: u32,
    pub m: u32,
    pub s: u32,
}

#[derive(Clone, Copy, Debug, Serialize)]
pub struct ReportStats {
    pub nodes: u64,
    pub pruned: u64,
    pub seconds: f64,
}

/// Rotation checks on the minimal parts met while decomposing the emitted
/// sequences and their one-element extensions by `N`.
#[derive(Clone, Debug, Default)]
pub struct ShiftAudit {
    pub parts: u64,
    /// Parts with product 1, where distinctness is not claimed.
    pub identity_parts: u64,
    pub violations: Vec<String>,
    /// Decompositions on which the product-set bound was checked.
    pub bounds_checked: u64,
    pub bound_violations: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassificationReport {
    pub params: ReportParams,
    pub length: usize,
    pub free_count: u64,
    pub matched_count: u64,
    pub expected_count: u64,
    /// Free sequences not of Form II, orbits expanded.
    pub unmatched: Vec<String>,
    pub verdict: Verdict,
    pub stats: ReportStats,
    /// Form II sequences the enumeration did not produce.
    #[serde(skip)]
    pub missing_form_ii: Vec<String>,
    #[serde(skip)]
    pub shift_audit: ShiftAudit,
}

impl ClassificationReport {
    /// Report as a JSON value; object keys come out sorted.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("report serializes")
    }
}

/// Enumerates free sequences of length `m + q - 2` and sorts them against
/// Form II in both directions.
pub fn verify_main_theorem(params: &GroupParams, opts: &SearchOptions) -> Result<ClassificationReport> {
    let started = Instant::now();
    let space = SearchSpace::metacyclic(params)?;
    let (q, m) = (params.q() as usize, params.m() as usize);
    let length = m + q - 2;
    let found = enumerate_free(&space, length, opts)?;

    let mut matched_count = 0;
    let mut unmatched: Vec<Sequence> = Vec::new();
    for f in &found.sequences {
        if match_form_ii(&f.sequence, params)?.is_some() {
            matched_count += f.orbit_size;
        } else if opts.symmetry {
            unmatched.extend(space.orbit(&f.sequence));
        } else {
            unmatched.push(f.sequence.clone());
        }
    }
    unmatched.sort();

    let emitted: HashSet<&Sequence> = found.sequences.iter().map(|f| &f.sequence).collect();
    let missing_form_ii: Vec<String> = form_ii_sequences(params)
        .into_iter()
        .filter(|s| {
            let key = if opts.symmetry { space.canonical(s) } else { s.clone() };
            !emitted.contains(&key)
        })
        .map(|s| s.format(params))
        .collect();

    let expected_count = form_ii_count(q as u64, m as u64);
    let free_count = found.total();
    let unmatched: Vec<String> = unmatched.iter().map(|s| s.format(params)).collect();
    let verdict = if (m, q) == (2, 3) {
        if unmatched == ["x,x*y,x*y^2"] && missing_form_ii.is_empty() {
            Verdict::CounterexampleCase23
        } else {
            Verdict::Falsified
        }
    } else if unmatched.is_empty() && missing_form_ii.is_empty() && free_count == expected_count {
        Verdict::TheoremHolds
    } else {
        Verdict::Falsified
    };

    let shift_audit = audit_shifts(params, &found);
    Ok(ClassificationReport {
        params: ReportParams { q: params.q(), m: params.m(), s: params.s() },
        length,
        free_count,
        matched_count,
        expected_count,
        unmatched,
        verdict,
        stats: ReportStats {
            nodes: found.stats.nodes,
            pruned: found.stats.pruned,
            seconds: started.elapsed().as_secs_f64(),
        },
        missing_form_ii,
        shift_audit,
    })
}

/// Decomposes each emitted sequence and each extension by an element of
/// `N`, checking every minimal part's rotations.
fn audit_shifts(params: &GroupParams, found: &Enumeration) -> ShiftAudit {
    let mut audit = ShiftAudit::default();
    let outside: Vec<usize> = (0..params.order()).filter(|&g| !params.element_at(g).in_h()).collect();
    for f in &found.sequences {
        let base = &f.sequence;
        let extended = outside.iter().map(|&g| base.with(g));
        for s in std::iter::once(base.clone()).chain(extended) {
            let d = decompose(params, &s);
            if d.bound_applies() {
                audit.bounds_checked += 1;
                if !d.product_set_bound_holds(params.q()) {
                    audit.bound_violations.push(s.format(params));
                }
            }
            for part in &d.parts {
                audit.parts += 1;
                match check_shift_lemma(params, &part.elements(params)) {
                    ShiftCheck::Holds => {}
                    ShiftCheck::IdentityProduct => audit.identity_parts += 1,
                    ShiftCheck::Violated => audit.violations.push(part.format(params)),
                }
            }
        }
    }
    audit
}
