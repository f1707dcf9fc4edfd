//! Achievable-product sets over sub-multisets.
//!
//! States are count vectors `v` (one count per distinct element, bounded by
//! its multiplicity). The set at `v` holds every ordered product of the
//! sub-multiset `v`, via the last-element recurrence
//! `P(v) = U_{c : v_c > 0} P(v - e_c) g_c`, with `P(0) = {1}`.
//!
//! Layout is mixed-radix with the most recently added element as the
//! slowest dimension, so appending one more copy of the last element (or a
//! new, larger element) appends a contiguous slab of states. This is what
//! lets the extremal search extend and retract the table in place.

use crate::error::{Error, Result};
use crate::groups::CayleyGroup;

use super::bits::{BitWord, ElementSet, RightMul};
use super::sequence::Sequence;

/// Default cap on `states * words` for one table.
pub const DEFAULT_STATE_BUDGET: u64 = 1 << 26;

pub(crate) struct ProductDp<'a, B: BitWord> {
    group: &'a CayleyGroup,
    mul: &'a RightMul<B>,
    elems: Vec<usize>,
    counts: Vec<usize>,
    strides: Vec<usize>,
    sets: Vec<B>,
    /// Union of all sets before each push, for `pop`.
    reach_stack: Vec<B>,
    reach: B,
    digits: Vec<usize>,
}

impl<'a, B: BitWord> ProductDp<'a, B> {
    pub fn new(group: &'a CayleyGroup, mul: &'a RightMul<B>) -> Self {
        let id = B::singleton(group.identity());
        Self {
            group,
            mul,
            elems: Vec::new(),
            counts: Vec::new(),
            strides: Vec::new(),
            sets: vec![id],
            reach_stack: Vec::new(),
            reach: id,
            digits: Vec::new(),
        }
    }

    /// Union of the sets over all sub-multisets, the empty one included.
    #[inline]
    pub fn reach(&self) -> B {
        self.reach
    }

    #[cfg(test)]
    pub fn state_count(&self) -> usize {
        self.sets.len()
    }

    /// Appends one copy of `g`, which must be `>=` every element already
    /// present. Returns the index range of the new slab.
    pub fn push(&mut self, g: usize) -> std::ops::Range<usize> {
        match self.elems.last() {
            Some(&last) if last == g => *self.counts.last_mut().unwrap() += 1,
            Some(&last) => {
                assert!(g > last, "push out of canonical order");
                self.new_dimension(g);
            }
            None => self.new_dimension(g),
        }
        let last = self.elems.len() - 1;
        let slab = self.strides[last];
        let start = self.sets.len();
        let g_last = self.elems[last];

        self.digits.clear();
        self.digits.resize(last, 0);
        let mut slab_union = B::default();
        for r in 0..slab {
            let idx = start + r;
            let mut acc = self.mul.apply(self.sets[idx - slab], g_last);
            for c in 0..last {
                if self.digits[c] > 0 {
                    acc = acc.union(self.mul.apply(self.sets[idx - self.strides[c]], self.elems[c]));
                }
            }
            self.sets.push(acc);
            slab_union = slab_union.union(acc);
            for c in 0..last {
                self.digits[c] += 1;
                if self.digits[c] <= self.counts[c] {
                    break;
                }
                self.digits[c] = 0;
            }
        }
        self.reach_stack.push(self.reach);
        self.reach = self.reach.union(slab_union);
        start..start + slab
    }

    fn new_dimension(&mut self, g: usize) {
        self.elems.push(g);
        self.counts.push(1);
        self.strides.push(self.sets.len());
    }

    /// Undoes the last `push`.
    pub fn pop(&mut self) {
        let last = self.elems.len() - 1;
        let slab = self.strides[last];
        self.sets.truncate(self.sets.len() - slab);
        self.counts[last] -= 1;
        if self.counts[last] == 0 {
            self.elems.pop();
            self.counts.pop();
            self.strides.pop();
        }
        self.reach = self.reach_stack.pop().expect("pop without push");
    }

    #[inline]
    pub fn set(&self, idx: usize) -> B {
        self.sets[idx]
    }

    fn digit(&self, idx: usize, c: usize) -> usize {
        let q = idx / self.strides[c];
        if c + 1 == self.elems.len() { q } else { q % (self.counts[c] + 1) }
    }

    /// Count vector of a state index.
    #[cfg(test)]
    pub fn counts_of(&self, idx: usize) -> Vec<usize> {
        (0..self.elems.len()).map(|c| self.digit(idx, c)).collect()
    }

    /// An ordering of the sub-multiset at `idx` whose product is `target`.
    pub fn ordering(&self, mut idx: usize, mut target: usize) -> Option<Vec<usize>> {
        if !self.sets[idx].contains(target) {
            return None;
        }
        let mut rev = Vec::new();
        while idx != 0 {
            let step = (0..self.elems.len()).find_map(|c| {
                if self.digit(idx, c) == 0 {
                    return None;
                }
                let prev = idx - self.strides[c];
                let want = self.group.mul(target, self.group.inverse(self.elems[c]));
                self.sets[prev].contains(want).then_some((c, prev, want))
            })?;
            rev.push(self.elems[step.0]);
            idx = step.1;
            target = step.2;
        }
        debug_assert_eq!(target, self.group.identity());
        rev.reverse();
        Some(rev)
    }
}

/// Every ordered product of every sub-multiset of a sequence.
#[derive(Clone, Debug)]
pub struct AchievableSet {
    elements: Vec<usize>,
    multiplicities: Vec<usize>,
    sets: Vec<ElementSet>,
}

impl AchievableSet {
    /// Distinct elements, in canonical order; count vectors index into this.
    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn multiplicities(&self) -> &[usize] {
        &self.multiplicities
    }

    pub fn state_count(&self) -> usize {
        self.sets.len()
    }

    fn index_of(&self, counts: &[usize]) -> Option<usize> {
        if counts.len() != self.elements.len() {
            return None;
        }
        let mut idx = 0;
        let mut stride = 1;
        for (&c, &mult) in counts.iter().zip(&self.multiplicities) {
            if c > mult {
                return None;
            }
            idx += c * stride;
            stride *= mult + 1;
        }
        Some(idx)
    }

    /// The set of products at a count vector.
    pub fn get(&self, counts: &[usize]) -> Option<&ElementSet> {
        self.index_of(counts).map(|i| &self.sets[i])
    }

    /// Iterates `(count vector, set)` over all states.
    pub fn iter(&self) -> impl Iterator<Item = (Vec<usize>, &ElementSet)> + '_ {
        self.sets.iter().enumerate().map(|(mut idx, set)| {
            let counts = self
                .multiplicities
                .iter()
                .map(|&m| {
                    let d = idx % (m + 1);
                    idx /= m + 1;
                    d
                })
                .collect();
            (counts, set)
        })
    }
}

/// An ordered sub-multiset whose product is the identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness(pub Vec<usize>);

impl Witness {
    /// Nonempty, multiplies to the identity, and fits inside `seq`.
    pub fn verify(&self, group: &CayleyGroup, seq: &Sequence) -> bool {
        !self.0.is_empty()
            && group.product(&self.0) == group.identity()
            && seq.contains_multiset(&Sequence::from_indices(self.0.iter().copied()))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Freeness {
    pub free: bool,
    pub witness: Option<Witness>,
}

enum Tables {
    Narrow(RightMul<u64>),
    Wide(RightMul<ElementSet>),
}

/// Reusable evaluator for achievable sets and freeness over one group.
pub struct ProductEngine<'g> {
    group: &'g CayleyGroup,
    tables: Tables,
    budget: u64,
}

impl<'g> ProductEngine<'g> {
    pub fn new(group: &'g CayleyGroup) -> Self {
        let tables = if group.order() <= 64 {
            Tables::Narrow(RightMul::new(group))
        } else {
            Tables::Wide(RightMul::new(group))
        };
        Self { group, tables, budget: DEFAULT_STATE_BUDGET }
    }

    pub fn with_budget(mut self, budget: u64) -> Self {
        self.budget = budget;
        self
    }

    pub fn group(&self) -> &CayleyGroup {
        self.group
    }

    fn check_budget(&self, seq: &Sequence) -> Result<()> {
        let words = self.group.order().div_ceil(64) as u64;
        let states = seq
            .entries()
            .iter()
            .fold(1u64, |acc, &(_, c)| acc.saturating_mul(c as u64 + 1));
        if states.saturating_mul(words) > self.budget {
            return Err(Error::StateBudget { states, words, budget: self.budget });
        }
        if let Some(&(g, _)) = seq.entries().iter().find(|&&(g, _)| g >= self.group.order()) {
            return Err(Error::InvalidArgument(format!("element index {g} outside the group")));
        }
        Ok(())
    }

    pub fn achievable_products(&self, seq: &Sequence) -> Result<AchievableSet> {
        self.check_budget(seq)?;
        let sets = match &self.tables {
            Tables::Narrow(mul) => build(self.group, mul, seq).into_iter().map(ElementSet::from_word).collect(),
            Tables::Wide(mul) => build(self.group, mul, seq),
        };
        Ok(AchievableSet {
            elements: seq.entries().iter().map(|&(g, _)| g).collect(),
            multiplicities: seq.entries().iter().map(|&(_, c)| c).collect(),
            sets,
        })
    }

    /// Decides whether no nonempty sub-multiset has an ordering with product
    /// 1. A returned witness has already been re-multiplied and checked.
    pub fn is_product1_free(&self, seq: &Sequence) -> Result<Freeness> {
        self.check_budget(seq)?;
        let witness = match &self.tables {
            Tables::Narrow(mul) => find_witness(self.group, mul, seq),
            Tables::Wide(mul) => find_witness(self.group, mul, seq),
        };
        if let Some(w) = &witness {
            assert!(w.verify(self.group, seq), "witness failed re-verification: {w:?}");
        }
        Ok(Freeness { free: witness.is_none(), witness })
    }
}

fn build<B: BitWord>(group: &CayleyGroup, mul: &RightMul<B>, seq: &Sequence) -> Vec<B> {
    let mut dp = ProductDp::new(group, mul);
    for g in seq.iter() {
        dp.push(g);
    }
    dp.sets
}

fn find_witness<B: BitWord>(group: &CayleyGroup, mul: &RightMul<B>, seq: &Sequence) -> Option<Witness> {
    let mut dp = ProductDp::new(group, mul);
    let id = group.identity();
    for g in seq.iter() {
        let slab = dp.push(g);
        if let Some(idx) = slab.into_iter().find(|&i| dp.set(i).contains(id)) {
            return dp.ordering(idx, id).map(Witness);
        }
    }
    None
}

pub fn achievable_products(group: &CayleyGroup, seq: &Sequence) -> Result<AchievableSet> {
    ProductEngine::new(group).achievable_products(seq)
}

pub fn is_product1_free(group: &CayleyGroup, seq: &Sequence) -> Result<Freeness> {
    ProductEngine::new(group).is_product1_free(seq)
}
