//! Exact zero-sum computations in metacyclic groups `C_q x|_s C_m`.
//!
//! The crate decides whether a sequence (multiset) of group elements has a
//! nonempty subsequence that multiplies to the identity in some order,
//! computes Davenport constants by exhaustive pruned search, classifies the
//! longest product-one free sequences, and checks the additive
//! combinatorics facts (sumset bounds, critical pairs, residue counts) that
//! the classification relies on.
//!
//! ```
//! use zsm::groups::GroupParams;
//! use zsm::seqengine::{is_product1_free, Sequence};
//!
//! let d10 = GroupParams::new(5, 2, 4).unwrap();
//! let table = d10.to_cayley().unwrap();
//! let seq = Sequence::parse("x,x*y^4,x*y,x*y^2", &d10).unwrap();
//! let verdict = is_product1_free(&table, &seq).unwrap();
//! assert!(!verdict.free);
//! ```

pub mod cli;
pub mod error;
pub mod extremal;
pub mod groups;
pub mod lemmalab;
pub mod numtheory;
pub mod seqengine;

pub use error::{Error, Result};

/// Toolkit version, part of every cache key.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");
