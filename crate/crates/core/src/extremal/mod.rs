//! Extremal product-one-free sequences: enumeration, Davenport constants,
//! Form II matching, and the classification report.

mod formii;
mod report;
mod search;
mod space;

pub use formii::{form_ii_count, form_ii_sequences, match_form_ii, FormII};
pub use report::{verify_main_theorem, ClassificationReport, ReportParams, ReportStats, ShiftAudit, Verdict};
pub use search::{SearchOptions, SearchStats};
pub use space::{SearchSpace, SEARCH_LENGTH_CAP, SEARCH_ORDER_CAP};

use crate::error::{Error, Result};
use crate::seqengine::{ProductEngine, Sequence};

use search::Mode;

/// A free multiset with the size of its automorphism orbit (1 when
/// symmetry reduction is off).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreeSequence {
    pub sequence: Sequence,
    pub orbit_size: u64,
}

#[derive(Clone, Debug)]
pub struct Enumeration {
    pub length: usize,
    pub symmetry: bool,
    /// Lexicographic order.
    pub sequences: Vec<FreeSequence>,
    pub stats: SearchStats,
}

impl Enumeration {
    /// Number of free multisets, orbits expanded.
    pub fn total(&self) -> u64 {
        self.sequences.iter().map(|f| f.orbit_size).sum()
    }

    /// All free multisets with orbits expanded, sorted.
    pub fn expand(&self, space: &SearchSpace) -> Vec<Sequence> {
        if !self.symmetry {
            return self.sequences.iter().map(|f| f.sequence.clone()).collect();
        }
        let mut all: Vec<Sequence> = self.sequences.iter().flat_map(|f| space.orbit(&f.sequence)).collect();
        all.sort();
        all
    }
}

/// Every product-one-free multiset of length `length` (one per orbit with
/// symmetry on).
pub fn enumerate_free(space: &SearchSpace, length: usize, opts: &SearchOptions) -> Result<Enumeration> {
    let out = search::run(space, Mode::Exact(length), opts)?;
    Ok(Enumeration {
        length,
        symmetry: opts.symmetry,
        sequences: out
            .found
            .into_iter()
            .map(|(s, orbit_size)| FreeSequence { sequence: Sequence::from_indices(s), orbit_size })
            .collect(),
        stats: out.stats,
    })
}

#[derive(Clone, Debug)]
pub struct DavenportResult {
    /// One more than the longest free length found.
    pub constant: usize,
    /// The lexicographically least free multiset of length `constant - 1`
    /// (least in its orbit with symmetry on).
    pub witness: Sequence,
    pub stats: SearchStats,
    /// Search ceiling on the length.
    pub max_len: usize,
}

impl DavenportResult {
    /// The search found free multisets at its ceiling, so `constant` is
    /// only a lower bound.
    pub fn bound_reached(&self) -> bool {
        self.witness.len() == self.max_len
    }
}

/// Default length ceiling: `m + q + 2` for metacyclic groups, the order
/// otherwise (a free sequence is shorter than the group).
pub fn default_max_len(space: &SearchSpace) -> usize {
    let cap = match space.params() {
        Some(p) => (p.m() + p.q() + 2) as usize,
        None => space.group().order(),
    };
    cap.min(SEARCH_LENGTH_CAP)
}

pub fn davenport(space: &SearchSpace, opts: &SearchOptions, max_len: Option<usize>) -> Result<DavenportResult> {
    let max_len = max_len.unwrap_or_else(|| default_max_len(space));
    let out = search::run(space, Mode::Longest(max_len), opts)?;
    let (best, _) = out.found.into_iter().next().expect("the empty sequence is free");
    let witness = Sequence::from_indices(best);
    let check = ProductEngine::new(space.group()).is_product1_free(&witness)?;
    assert!(check.free, "davenport witness is not free: {witness:?}");
    Ok(DavenportResult { constant: witness.len() + 1, witness, stats: out.stats, max_len })
}

/// Checks in `C_n` that every free sequence of length `length` has an
/// element of multiplicity at least `2 length - n + 1`, and at
/// `length = n - 1` is a generator repeated.
pub fn cyclic_structure_check(n: usize, length: usize) -> Result<bool> {
    if !(3..=16).contains(&n) {
        return Err(Error::InvalidArgument(format!("n = {n} outside 3..=16")));
    }
    if 2 * length < n + 1 || length > n - 1 {
        return Err(Error::InvalidArgument(format!(
            "length {length} outside {}..={}",
            (n + 1).div_ceil(2),
            n - 1
        )));
    }
    let space = SearchSpace::cyclic(n)?;
    let found = enumerate_free(&space, length, &SearchOptions::default())?;
    let group = space.group();
    let holds = found.sequences.iter().all(|f| {
        let s = &f.sequence;
        let mult_ok = s.max_multiplicity() + n > 2 * length;
        let top_ok = length != n - 1
            || matches!(s.entries(), [(g, c)] if *c == n - 1 && group.element_order(*g) == n);
        mult_ok && top_ok
    });
    Ok(holds)
}
