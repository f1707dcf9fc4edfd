//! Depth-first generation of product-one-free multisets.
//!
//! Multisets are grown in nondecreasing element order, so each one is
//! generated once. A child `S g` of a free `S` is free iff `g^{-1}` is not
//! an ordered product of some sub-multiset of `S`, which the incremental
//! table answers with one bit test. With symmetry on, only multisets that
//! are lexicographically least in their automorphism orbit are kept; that
//! property survives removal of the largest element, so pruning a
//! non-canonical node loses nothing.
//!
//! The tree is cut into shards at depth two. Shards are searched in
//! parallel and merged in shard order, so the result does not depend on
//! the number of workers.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::groups::Permutation;
use crate::seqengine::{BitWord, ProductDp, RightMul};

use super::space::{SearchSpace, SEARCH_LENGTH_CAP, SEARCH_ORDER_CAP};

const SHARD_DEPTH: usize = 2;

/// Options shared by the enumeration and the Davenport search.
#[derive(Clone, Debug)]
pub struct SearchOptions {
    /// Keep one representative per automorphism orbit.
    pub symmetry: bool,
    /// Worker threads; `0` means one per core.
    pub jobs: usize,
    /// File holding finished shards; read on start, rewritten as shards finish.
    pub cursor: Option<PathBuf>,
    /// Stop with a partial-result error after this many new shards.
    pub shard_budget: Option<usize>,
}

impl Default for SearchOptions {
    fn default() -> Self {
        Self { symmetry: false, jobs: 1, cursor: None, shard_budget: None }
    }
}

impl SearchOptions {
    pub fn with_symmetry(mut self, on: bool) -> Self {
        self.symmetry = on;
        self
    }

    pub fn with_jobs(mut self, jobs: usize) -> Self {
        self.jobs = jobs;
        self
    }

    pub fn with_cursor(mut self, path: impl Into<PathBuf>) -> Self {
        self.cursor = Some(path.into());
        self
    }

    pub fn with_shard_budget(mut self, shards: usize) -> Self {
        self.shard_budget = Some(shards);
        self
    }
}

/// Node counters. `nodes` counts free multisets visited (the root
/// included); `pruned` counts rejected children.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchStats {
    pub nodes: u64,
    pub pruned: u64,
}

impl SearchStats {
    fn absorb(&mut self, other: SearchStats) {
        self.nodes += other.nodes;
        self.pruned += other.pruned;
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub(crate) enum Mode {
    /// Record every free multiset of exactly this length.
    Exact(usize),
    /// Record the longest free multiset up to this length.
    Longest(usize),
}

impl Mode {
    fn depth(self) -> usize {
        match self {
            Mode::Exact(l) | Mode::Longest(l) => l,
        }
    }
}

/// Result of one shard (or of the shared prefix above the shards).
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub(crate) struct ShardResult {
    /// Recorded multisets with their orbit sizes.
    pub found: Vec<(Vec<u16>, u64)>,
    pub stats: SearchStats,
}

impl ShardResult {
    fn longest(&self) -> Option<&(Vec<u16>, u64)> {
        self.found.first()
    }
}

pub(crate) struct SearchOutcome {
    /// In lexicographic order.
    pub found: Vec<(Vec<usize>, u64)>,
    pub stats: SearchStats,
}

struct Walker<'a> {
    inv: &'a [usize],
    auts: &'a [Permutation],
    order: usize,
    mode: Mode,
    scratch: Vec<usize>,
    out: ShardResult,
}

impl Walker<'_> {
    fn is_canonical(&mut self, cur: &[usize]) -> bool {
        for p in self.auts {
            self.scratch.clear();
            self.scratch.extend(cur.iter().map(|&g| p[g]));
            self.scratch.sort_unstable();
            if self.scratch.as_slice() < cur {
                return false;
            }
        }
        true
    }

    fn orbit_size(&mut self, cur: &[usize]) -> u64 {
        if self.auts.is_empty() {
            return 1;
        }
        let mut stab = 1u64;
        for p in self.auts {
            self.scratch.clear();
            self.scratch.extend(cur.iter().map(|&g| p[g]));
            self.scratch.sort_unstable();
            if self.scratch.as_slice() == cur {
                stab += 1;
            }
        }
        (self.auts.len() as u64 + 1) / stab
    }

    fn record(&mut self, cur: &[usize]) {
        match self.mode {
            Mode::Exact(l) => {
                if cur.len() == l {
                    let orbit = self.orbit_size(cur);
                    self.out.found.push((to_u16(cur), orbit));
                }
            }
            Mode::Longest(_) => {
                let better = self.out.longest().is_none_or(|(best, _)| cur.len() > best.len());
                if better {
                    let orbit = self.orbit_size(cur);
                    self.out.found.clear();
                    self.out.found.push((to_u16(cur), orbit));
                }
            }
        }
    }

    /// Visits the children of `cur` (already recorded). Children at
    /// `split` are collected instead of visited.
    fn descend(
        &mut self,
        dp: &mut ProductDp<'_, u64>,
        cur: &mut Vec<usize>,
        split: Option<(usize, &mut Vec<Vec<usize>>)>,
    ) {
        let mut split = split;
        if cur.len() >= self.mode.depth() {
            return;
        }
        let start = cur.last().copied().unwrap_or(0);
        let reach = dp.reach();
        for g in start..self.order {
            if reach.contains(self.inv[g]) {
                self.out.stats.pruned += 1;
                continue;
            }
            cur.push(g);
            if !self.auts.is_empty() && !self.is_canonical(cur) {
                self.out.stats.pruned += 1;
                cur.pop();
                continue;
            }
            match split.as_mut() {
                Some((depth, roots)) if cur.len() == *depth => roots.push(cur.clone()),
                _ => {
                    dp.push(g);
                    self.out.stats.nodes += 1;
                    self.record(cur);
                    let next = split.as_mut().map(|(d, r)| (*d, &mut **r));
                    self.descend(dp, cur, next);
                    dp.pop();
                }
            }
            cur.pop();
        }
    }
}

fn to_u16(v: &[usize]) -> Vec<u16> {
    v.iter().map(|&g| g as u16).collect()
}

struct Prepared<'a> {
    space: &'a SearchSpace,
    mul: RightMul<u64>,
    inv: Vec<usize>,
    auts: Vec<Permutation>,
    mode: Mode,
}

impl Prepared<'_> {
    fn walker(&self) -> Walker<'_> {
        Walker {
            inv: &self.inv,
            auts: &self.auts,
            order: self.space.group().order(),
            mode: self.mode,
            scratch: Vec::new(),
            out: ShardResult::default(),
        }
    }

    /// Visits the nodes above the shard depth and returns the shard roots.
    fn prefix(&self) -> (ShardResult, Vec<Vec<usize>>) {
        let split = self.mode.depth().min(SHARD_DEPTH);
        if split == 0 {
            return (ShardResult::default(), vec![Vec::new()]);
        }
        let mut w = self.walker();
        let mut dp = ProductDp::new(self.space.group(), &self.mul);
        let mut cur = Vec::new();
        let mut roots = Vec::new();
        w.out.stats.nodes += 1;
        w.record(&cur);
        w.descend(&mut dp, &mut cur, Some((split, &mut roots)));
        (w.out, roots)
    }

    fn shard(&self, root: &[usize]) -> ShardResult {
        let mut w = self.walker();
        let mut dp = ProductDp::new(self.space.group(), &self.mul);
        for &g in root {
            dp.push(g);
        }
        let mut cur = root.to_vec();
        w.out.stats.nodes += 1;
        w.record(&cur);
        w.descend(&mut dp, &mut cur, None);
        w.out
    }
}

#[derive(Serialize, Deserialize)]
struct Cursor {
    version: String,
    group: String,
    mode: Mode,
    symmetry: bool,
    total_shards: usize,
    completed: BTreeMap<usize, ShardResult>,
}

impl Cursor {
    fn load(path: &Path) -> Result<Option<Cursor>> {
        match std::fs::read_to_string(path) {
            Ok(text) => serde_json::from_str(&text).map(Some).map_err(|e| Error::CursorMismatch {
                path: path.to_path_buf(),
                reason: format!("unreadable: {e}"),
            }),
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => Ok(None),
            Err(e) => Err(e.into()),
        }
    }

    fn save(&self, path: &Path) -> Result<()> {
        let tmp = path.with_extension("tmp");
        std::fs::write(&tmp, serde_json::to_vec(self)?)?;
        std::fs::rename(&tmp, path)?;
        Ok(())
    }

    fn check(&self, fresh: &Cursor, path: &Path) -> Result<()> {
        let reason = if self.version != fresh.version {
            Some(format!("written by version {}", self.version))
        } else if self.group != fresh.group {
            Some("different group".to_string())
        } else if self.mode != fresh.mode {
            Some("different search length".to_string())
        } else if self.symmetry != fresh.symmetry {
            Some("different symmetry setting".to_string())
        } else if self.total_shards != fresh.total_shards {
            Some("different shard count".to_string())
        } else {
            None
        };
        match reason {
            Some(reason) => Err(Error::CursorMismatch { path: path.to_path_buf(), reason }),
            None => Ok(()),
        }
    }
}

pub(crate) fn run(space: &SearchSpace, mode: Mode, opts: &SearchOptions) -> Result<SearchOutcome> {
    let n = space.group().order();
    if n > SEARCH_ORDER_CAP {
        return Err(Error::OrderCap { order: n, cap: SEARCH_ORDER_CAP });
    }
    if mode.depth() > SEARCH_LENGTH_CAP {
        return Err(Error::InvalidArgument(format!(
            "length {} exceeds the cap of {SEARCH_LENGTH_CAP}",
            mode.depth()
        )));
    }
    let identity: Vec<usize> = (0..n).collect();
    let auts = if opts.symmetry {
        space.automorphisms().iter().filter(|p| **p != identity).cloned().collect()
    } else {
        Vec::new()
    };
    let prep = Prepared {
        space,
        mul: RightMul::new(space.group()),
        inv: (0..n).map(|g| space.group().inverse(g)).collect(),
        auts,
        mode,
    };

    let (head, roots) = prep.prefix();
    let mut cursor = Cursor {
        version: crate::VERSION.to_string(),
        group: space.key().to_string(),
        mode,
        symmetry: opts.symmetry,
        total_shards: roots.len(),
        completed: BTreeMap::new(),
    };
    if let Some(path) = &opts.cursor {
        if let Some(saved) = Cursor::load(path)? {
            saved.check(&cursor, path)?;
            cursor.completed = saved.completed;
        }
    }

    let pending: Vec<usize> = (0..roots.len()).filter(|i| !cursor.completed.contains_key(i)).collect();
    let allowed = opts.shard_budget.unwrap_or(usize::MAX).min(pending.len());
    let pool = rayon::ThreadPoolBuilder::new().num_threads(opts.jobs).build().map_err(|e| {
        Error::InvalidArgument(format!("cannot start {} workers: {e}", opts.jobs))
    })?;
    let batch = (pool.current_num_threads() * 8).max(1);
    for chunk in pending[..allowed].chunks(batch) {
        let results: Vec<ShardResult> = if pool.current_num_threads() == 1 {
            chunk.iter().map(|&i| prep.shard(&roots[i])).collect()
        } else {
            pool.install(|| chunk.par_iter().map(|&i| prep.shard(&roots[i])).collect())
        };
        cursor.completed.extend(chunk.iter().copied().zip(results));
        if let Some(path) = &opts.cursor {
            cursor.save(path)?;
        }
    }
    if allowed < pending.len() {
        let done = cursor.completed.len();
        let total = roots.len();
        return Err(match &opts.cursor {
            Some(path) => Error::Partial { done, total, cursor: path.clone() },
            None => Error::Interrupted { done, total },
        });
    }

    let mut stats = head.stats;
    let mut found: Vec<(Vec<usize>, u64)> = Vec::new();
    let parts = std::iter::once(&head).chain(cursor.completed.values());
    for part in parts {
        if !std::ptr::eq(part, &head) {
            stats.absorb(part.stats);
        }
        for (seq, orbit) in &part.found {
            found.push((seq.iter().map(|&g| g as usize).collect(), *orbit));
        }
    }
    if let Mode::Longest(_) = mode {
        let best = found.iter().map(|(s, _)| s.len()).max().unwrap_or(0);
        found.retain(|(s, _)| s.len() == best);
        found.sort();
        found.truncate(1);
    } else {
        found.sort();
    }
    Ok(SearchOutcome { found, stats })
}
