use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::groups::{automorphisms, metacyclic_automorphisms, CayleyGroup, GroupParams, Permutation};
use crate::seqengine::Sequence;

/// Largest group order the search accepts (one 64-bit word per set).
pub const SEARCH_ORDER_CAP: usize = 64;
/// Longest sequence the search accepts.
pub const SEARCH_LENGTH_CAP: usize = 32;

/// A finite group prepared for the extremal search: its table, its
/// automorphism group, and a key identifying it in cursors.
#[derive(Clone, Debug)]
pub struct SearchSpace {
    group: CayleyGroup,
    params: Option<GroupParams>,
    auts: Vec<Permutation>,
    key: String,
}

impl SearchSpace {
    pub fn metacyclic(params: &GroupParams) -> Result<Self> {
        let group = params.to_cayley_capped(SEARCH_ORDER_CAP)?;
        let auts = metacyclic_automorphisms(params)?;
        Ok(Self { group, params: Some(params.clone()), auts, key: format!("metacyclic:{params}") })
    }

    pub fn cayley(group: CayleyGroup) -> Result<Self> {
        if group.order() > SEARCH_ORDER_CAP {
            return Err(Error::OrderCap { order: group.order(), cap: SEARCH_ORDER_CAP });
        }
        let auts = automorphisms(&group)?;
        let key = format!("cayley:{}", group.to_text().replace('\n', ";"));
        Ok(Self { group, params: None, auts, key })
    }

    pub fn cyclic(n: usize) -> Result<Self> {
        Self::cayley(CayleyGroup::cyclic(n)?)
    }

    pub fn group(&self) -> &CayleyGroup {
        &self.group
    }

    pub fn params(&self) -> Option<&GroupParams> {
        self.params.as_ref()
    }

    /// All automorphisms, identity included.
    pub fn automorphisms(&self) -> &[Permutation] {
        &self.auts
    }

    pub(crate) fn key(&self) -> &str {
        &self.key
    }

    pub fn format(&self, seq: &Sequence) -> String {
        match &self.params {
            Some(p) => seq.format(p),
            None => format!("[{}]", seq.iter().map(|g| g.to_string()).collect::<Vec<_>>().join(",")),
        }
    }

    /// Every image of `seq` under the automorphism group, sorted.
    pub fn orbit(&self, seq: &Sequence) -> Vec<Sequence> {
        let images: BTreeSet<Sequence> = self.auts.iter().map(|p| seq.map(p)).collect();
        images.into_iter().collect()
    }

    /// Lexicographically least image under the automorphism group.
    pub fn canonical(&self, seq: &Sequence) -> Sequence {
        self.auts.iter().map(|p| seq.map(p)).min().unwrap_or_else(|| seq.clone())
    }
}
