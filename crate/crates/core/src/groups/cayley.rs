use std::path::Path;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::error::{Error, Result};

const MAX_ORDER: usize = 256;
const EXHAUSTIVE_ASSOC_LIMIT: usize = 64;
const SAMPLED_TRIPLES: usize = 200_000;

/// A finite group given by its multiplication table on indices `0..n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CayleyGroup {
    n: usize,
    table: Vec<u16>,
    identity: usize,
    inverse: Vec<u16>,
}

impl CayleyGroup {
    /// Builds from a row-major table and validates the group axioms.
    /// Associativity is checked on every triple up to order 64 and on a
    /// fixed-seed random sample beyond that.
    pub fn from_table(n: usize, table: Vec<u16>) -> Result<Self> {
        if n == 0 || n > MAX_ORDER {
            return Err(Error::CayleyTable(format!("order {n} outside 1..={MAX_ORDER}")));
        }
        if table.len() != n * n {
            return Err(Error::CayleyTable(format!("expected {} entries, got {}", n * n, table.len())));
        }
        if let Some(bad) = table.iter().find(|&&v| v as usize >= n) {
            return Err(Error::CayleyTable(format!("entry {bad} out of range")));
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|a| table[e * n + a] as usize == a && table[a * n + e] as usize == a))
            .ok_or_else(|| Error::CayleyTable("no two-sided identity".into()))?;
        let group = Self::from_table_unchecked(n, table, identity)?;
        group.check_associative()?;
        Ok(group)
    }

    /// Builds from a table already known to be a group with the given identity.
    pub(crate) fn from_table_unchecked(n: usize, table: Vec<u16>, identity: usize) -> Result<Self> {
        let mut inverse = vec![u16::MAX; n];
        for a in 0..n {
            let inv = (0..n)
                .find(|&b| table[a * n + b] as usize == identity && table[b * n + a] as usize == identity)
                .ok_or_else(|| Error::CayleyTable(format!("element {a} has no inverse")))?;
            inverse[a] = inv as u16;
        }
        Ok(Self { n, table, identity, inverse })
    }

    fn check_associative(&self) -> Result<()> {
        let n = self.n;
        let bad = |a: usize, b: usize, c: usize| self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c));
        if n <= EXHAUSTIVE_ASSOC_LIMIT {
            for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        if bad(a, b, c) {
                            return Err(Error::CayleyTable(format!("not associative at ({a}, {b}, {c})")));
                        }
                    }
                }
            }
        } else {
            let mut rng = StdRng::seed_from_u64(0x5eed);
            for _ in 0..SAMPLED_TRIPLES {
                let (a, b, c) = (rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n));
                if bad(a, b, c) {
                    return Err(Error::CayleyTable(format!("not associative at ({a}, {b}, {c})")));
                }
            }
        }
        Ok(())
    }

    /// The cyclic group `C_n` as addition mod `n`.
    pub fn cyclic(n: usize) -> Result<Self> {
        if n == 0 || n > MAX_ORDER {
            return Err(Error::CayleyTable(format!("order {n} outside 1..={MAX_ORDER}")));
        }
        let table = (0..n * n).map(|k| ((k / n + k % n) % n) as u16).collect();
        Self::from_table_unchecked(n, table, 0)
    }

    /// Parses the text format: first line `n`, then `n` rows of `n`
    /// whitespace-separated 0-based indices. Index 0 must be the identity.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
        let n: usize = lines
            .next()
            .ok_or_else(|| Error::CayleyTable("empty file".into()))?
            .parse()
            .map_err(|_| Error::CayleyTable("first line must be the order n".into()))?;
        if n == 0 || n > MAX_ORDER {
            return Err(Error::CayleyTable(format!("order {n} outside 1..={MAX_ORDER}")));
        }
        let mut table = Vec::with_capacity(n * n);
        for row in 0..n {
            let line = lines.next().ok_or_else(|| Error::CayleyTable(format!("missing row {row}")))?;
            let before = table.len();
            for tok in line.split_whitespace() {
                let v: u16 = tok
                    .parse()
                    .map_err(|_| Error::CayleyTable(format!("row {row}: bad entry {tok:?}")))?;
                table.push(v);
            }
            if table.len() - before != n {
                return Err(Error::CayleyTable(format!("row {row} has {} entries", table.len() - before)));
            }
        }
        if lines.next().is_some() {
            return Err(Error::CayleyTable("trailing rows after the table".into()));
        }
        let group = Self::from_table(n, table)?;
        if group.identity != 0 {
            return Err(Error::CayleyTable(format!("identity is index {}, expected 0", group.identity)));
        }
        Ok(group)
    }

    pub fn load(path: &Path) -> Result<Self> {
        Self::parse(&std::fs::read_to_string(path)?)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("{}\n", self.n);
        for a in 0..self.n {
            let row: Vec<String> = (0..self.n).map(|b| self.mul(a, b).to_string()).collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        out
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.n + b] as usize
    }

    #[inline]
    pub fn inverse(&self, a: usize) -> usize {
        self.inverse[a] as usize
    }

    pub fn product(&self, elems: &[usize]) -> usize {
        elems.iter().fold(self.identity, |acc, &g| self.mul(acc, g))
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut acc = a;
        let mut k = 1;
        while acc != self.identity {
            acc = self.mul(acc, a);
            k += 1;
        }
        k
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.n).all(|a| (0..a).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Subgroup generated by `gens`, as a membership mask.
    pub fn generated(&self, gens: &[usize]) -> Vec<bool> {
        let mut member = vec![false; self.n];
        member[self.identity] = true;
        let mut stack = vec![self.identity];
        while let Some(a) = stack.pop() {
            for &g in gens {
                let b = self.mul(a, g);
                if !member[b] {
                    member[b] = true;
                    stack.push(b);
                }
            }
        }
        member
    }
}
