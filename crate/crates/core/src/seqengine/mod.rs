//! Sequences as multisets, product-one freeness, and the coset
//! decomposition machinery for metacyclic groups.

mod achievable;
mod bits;
mod decompose;
mod sequence;

pub use achievable::{
    achievable_products, is_product1_free, AchievableSet, Freeness, ProductEngine, Witness,
    DEFAULT_STATE_BUDGET,
};
pub use bits::{BitWord, ElementSet};
pub use decompose::{check_shift_lemma, decompose, minimal_h_part, shift_products, HDecomposition, ShiftCheck};
pub use sequence::Sequence;

pub(crate) use achievable::ProductDp;
pub(crate) use bits::RightMul;
