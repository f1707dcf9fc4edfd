use std::fmt;

use crate::error::{Error, Result};
use crate::groups::{format_element, parse_element, Element, GroupParams};

/// A finite multiset of group elements, stored as `(element index,
/// multiplicity)` pairs sorted by index. Index order is the canonical
/// element order (`(i, j)` lexicographic for metacyclic groups).
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Sequence {
    entries: Vec<(usize, usize)>,
}

impl Sequence {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I) -> Self {
        let mut all: Vec<usize> = indices.into_iter().collect();
        all.sort_unstable();
        let mut entries: Vec<(usize, usize)> = Vec::new();
        for g in all {
            match entries.last_mut() {
                Some((h, c)) if *h == g => *c += 1,
                _ => entries.push((g, 1)),
            }
        }
        Self { entries }
    }

    pub fn from_elements(params: &GroupParams, elems: &[Element]) -> Self {
        Self::from_indices(elems.iter().map(|&g| params.index(g)))
    }

    /// Parses comma-separated element strings; multiplicity by repetition.
    /// Whitespace around elements is ignored. Error positions are offsets
    /// into `text`.
    pub fn parse(text: &str, params: &GroupParams) -> Result<Self> {
        if text.trim().is_empty() {
            return Ok(Self::empty());
        }
        let mut indices = Vec::new();
        let mut offset = 0;
        for raw in text.split(',') {
            let lead = raw.len() - raw.trim_start().len();
            let g = parse_element(raw.trim(), params).map_err(|e| match e {
                Error::Parse { pos, msg } => Error::Parse { pos: offset + lead + pos, msg },
                other => other,
            })?;
            indices.push(params.index(g));
            offset += raw.len() + 1;
        }
        Ok(Self::from_indices(indices))
    }

    pub fn format(&self, params: &GroupParams) -> String {
        self.iter().map(|i| format_element(params.element_at(i))).collect::<Vec<_>>().join(",")
    }

    pub fn entries(&self) -> &[(usize, usize)] {
        &self.entries
    }

    /// Total length `|S|`, counting multiplicity.
    pub fn len(&self) -> usize {
        self.entries.iter().map(|&(_, c)| c).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn distinct(&self) -> usize {
        self.entries.len()
    }

    pub fn multiplicity(&self, g: usize) -> usize {
        self.entries.binary_search_by_key(&g, |&(h, _)| h).map_or(0, |k| self.entries[k].1)
    }

    pub fn max_multiplicity(&self) -> usize {
        self.entries.iter().map(|&(_, c)| c).max().unwrap_or(0)
    }

    /// Elements in canonical order, repeated by multiplicity.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.entries.iter().flat_map(|&(g, c)| std::iter::repeat(g).take(c))
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn elements(&self, params: &GroupParams) -> Vec<Element> {
        self.iter().map(|i| params.element_at(i)).collect()
    }

    pub fn contains_multiset(&self, other: &Sequence) -> bool {
        other.entries.iter().all(|&(g, c)| self.multiplicity(g) >= c)
    }

    /// `S T^{-1}`: remove the elements of `other` (which must be contained).
    pub fn remove(&self, other: &Sequence) -> Sequence {
        assert!(self.contains_multiset(other), "remove: not a sub-multiset");
        let entries = self
            .entries
            .iter()
            .filter_map(|&(g, c)| {
                let left = c - other.multiplicity(g);
                (left > 0).then_some((g, left))
            })
            .collect();
        Sequence { entries }
    }

    pub fn with(&self, g: usize) -> Sequence {
        Self::from_indices(self.iter().chain(std::iter::once(g)))
    }

    pub fn filter(&self, mut keep: impl FnMut(usize) -> bool) -> Sequence {
        Sequence { entries: self.entries.iter().copied().filter(|&(g, _)| keep(g)).collect() }
    }

    /// `S cap H`.
    pub fn in_h(&self, params: &GroupParams) -> Sequence {
        self.filter(|g| params.element_at(g).in_h())
    }

    /// `S cap N`.
    pub fn outside_h(&self, params: &GroupParams) -> Sequence {
        self.filter(|g| !params.element_at(g).in_h())
    }

    /// Image under an element permutation.
    pub fn map(&self, perm: &[usize]) -> Sequence {
        Self::from_indices(self.iter().map(|g| perm[g]))
    }
}

/// Lexicographic on the element list in canonical order, repetitions
/// included (so `[1, 1, 2] < [1, 2, 2]`).
impl Ord for Sequence {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.iter().cmp(other.iter())
    }
}

impl PartialOrd for Sequence {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Sequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.iter()).finish()
    }
}
