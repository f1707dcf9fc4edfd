//! Metacyclic groups `C_q x|_s C_m` in exponent normal form, generic Cayley
//! tables, and automorphism groups.

mod automorphism;
mod cayley;
mod metacyclic;
mod text;

pub use automorphism::{
    automorphisms, compose, generating_set, invert, is_automorphism, metacyclic_automorphisms,
    Permutation, AUTOMORPHISM_CAP,
};
pub use cayley::CayleyGroup;
pub use metacyclic::{Element, GroupParams, DEFAULT_CAYLEY_CAP};
pub use text::{format_element, parse_element};
