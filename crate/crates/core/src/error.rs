use std::path::PathBuf;

use thiserror::Error;

/// Errors raised across the toolkit.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("m = {m} does not divide q - 1 = {}", q - 1)]
    OrderNotDivisor { q: u64, m: u64 },

    #[error("multiplicative order of {s} mod {q} is {actual}, expected {expected}")]
    OrderMismatch { s: u64, q: u64, expected: u64, actual: u64 },

    #[error("unsupported modulus {q}: {reason}")]
    UnsupportedModulus { q: u64, reason: &'static str },

    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("group order {order} exceeds the cap of {cap}")]
    OrderCap { order: usize, cap: usize },

    #[error("state budget exceeded: {states} states x {words} words > {budget}")]
    StateBudget { states: u64, words: u64, budget: u64 },

    #[error("search interrupted after {done} of {total} shards; resume from {}", cursor.display())]
    Partial { done: usize, total: usize, cursor: PathBuf },

    #[error("search interrupted after {done} of {total} shards (no cursor path configured)")]
    Interrupted { done: usize, total: usize },

    #[error("cursor {} does not match this run: {reason}", path.display())]
    CursorMismatch { path: PathBuf, reason: String },

    #[error("invalid cayley table: {0}")]
    CayleyTable(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
