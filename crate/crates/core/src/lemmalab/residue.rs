use std::fmt;

use crate::error::{Error, Result};
use crate::numtheory::is_prime;

/// A subset of `Z_q`, stored as a bit vector.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ResidueSet {
    modulus: u32,
    words: Vec<u64>,
}

impl ResidueSet {
    pub fn empty(modulus: u32) -> Self {
        assert!(modulus >= 1, "modulus must be positive");
        Self { modulus, words: vec![0; (modulus as usize).div_ceil(64)] }
    }

    pub fn full(modulus: u32) -> Self {
        Self::from_iter(modulus, 0..modulus as u64)
    }

    /// Members reduced mod `modulus`.
    pub fn from_iter<I: IntoIterator<Item = u64>>(modulus: u32, items: I) -> Self {
        let mut set = Self::empty(modulus);
        for v in items {
            set.insert(v);
        }
        set
    }

    /// Bit `k` of `mask` is residue `k`.
    pub fn from_mask(modulus: u32, mask: u64) -> Self {
        assert!(modulus <= 64);
        let mut set = Self::empty(modulus);
        set.words[0] = mask & low_bits(modulus);
        set
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn insert(&mut self, v: u64) {
        let v = (v % self.modulus as u64) as usize;
        self.words[v / 64] |= 1 << (v % 64);
    }

    pub fn contains(&self, v: u64) -> bool {
        let v = (v % self.modulus as u64) as usize;
        self.words[v / 64] >> (v % 64) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = u64> + '_ {
        (0..self.modulus as u64).filter(|&v| self.contains(v))
    }

    /// `{c s : c in self}`.
    pub fn scale(&self, s: u64) -> Self {
        let q = self.modulus as u64;
        Self::from_iter(self.modulus, self.iter().map(|v| v * (s % q) % q))
    }

    pub fn complement(&self) -> Self {
        Self::from_iter(self.modulus, (0..self.modulus as u64).filter(|&v| !self.contains(v)))
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.modulus == other.modulus && self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    fn same_modulus(&self, other: &Self) -> Result<()> {
        if self.modulus != other.modulus {
            return Err(Error::InvalidArgument(format!(
                "modulus mismatch: {} vs {}",
                self.modulus, other.modulus
            )));
        }
        Ok(())
    }
}

impl fmt::Debug for ResidueSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for ResidueSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self.iter().map(|v| v.to_string()).collect();
        write!(f, "{{{}}}", items.join(","))
    }
}

fn low_bits(q: u32) -> u64 {
    if q >= 64 { u64::MAX } else { (1 << q) - 1 }
}

/// Cyclic left rotation of a `q`-bit mask: translation by `k`.
#[inline]
fn rotate(mask: u64, k: u32, q: u32) -> u64 {
    if k == 0 {
        return mask;
    }
    ((mask << k) | (mask >> (q - k))) & low_bits(q)
}

/// `X + Y` for masks over `Z_q`, `q <= 63`.
#[inline]
fn mask_sumset(x: u64, y: u64, q: u32) -> u64 {
    let mut acc = 0;
    let mut rest = x;
    while rest != 0 {
        let k = rest.trailing_zeros();
        acc |= rotate(y, k, q);
        rest &= rest - 1;
    }
    acc
}

pub fn sumset(x: &ResidueSet, y: &ResidueSet) -> Result<ResidueSet> {
    x.same_modulus(y)?;
    let q = x.modulus;
    if q < 64 {
        return Ok(ResidueSet::from_mask(q, mask_sumset(x.words[0], y.words[0], q)));
    }
    let ys: Vec<u64> = y.iter().collect();
    Ok(ResidueSet::from_iter(q, x.iter().flat_map(|a| ys.iter().map(move |b| a + b))))
}

fn require_prime_nonempty(sets: &[&ResidueSet]) -> Result<u32> {
    let q = sets[0].modulus;
    for s in sets {
        sets[0].same_modulus(s)?;
        if s.is_empty() {
            return Err(Error::InvalidArgument("sets must be nonempty".into()));
        }
    }
    if !is_prime(q as u64) {
        return Err(Error::InvalidArgument(format!("modulus {q} is not prime")));
    }
    Ok(q)
}

/// `|X_1 + ... + X_r| >= min{q, |X_1| + ... + |X_r| - r + 1}`.
pub fn cauchy_davenport_check(sets: &[ResidueSet]) -> Result<bool> {
    if sets.is_empty() {
        return Err(Error::InvalidArgument("need at least one set".into()));
    }
    let refs: Vec<&ResidueSet> = sets.iter().collect();
    let q = require_prime_nonempty(&refs)? as usize;
    let mut total = sets[0].clone();
    for s in &sets[1..] {
        total = sumset(&total, s)?;
    }
    let sizes: usize = sets.iter().map(ResidueSet::len).sum();
    Ok(total.len() >= q.min(sizes + 1 - sets.len()))
}

/// Equality in Cauchy-Davenport against the four conditions of Vosper's
/// criterion, each evaluated on its own.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VosperVerdict {
    /// `|X + Y| = min{q, |X| + |Y| - 1}`.
    pub equality: bool,
    /// `|X| + |Y| > q`.
    pub cond_a: bool,
    /// `min{|X|, |Y|} = 1`.
    pub cond_b: bool,
    /// `|X + Y| = q - 1` and `Y = Z_q \ {c - a : a in X}` for the missing `c`.
    pub cond_c: bool,
    /// Arithmetic progressions with a common difference.
    pub cond_d: bool,
    pub missing: Option<u64>,
    /// Least common difference for (d).
    pub difference: Option<u64>,
}

impl VosperVerdict {
    pub fn any_condition(&self) -> bool {
        self.cond_a || self.cond_b || self.cond_c || self.cond_d
    }

    /// The equivalence under test.
    pub fn consistent(&self) -> bool {
        self.equality == self.any_condition()
    }
}

/// Differences `d in 1..q` for which `mask` is an arithmetic progression,
/// as a bit mask. A progression with difference `d` has at most one
/// element `a` with `a + d` outside it, which also makes sets of size 1
/// progressions for every `d` and `{a, b}` one for `d = +-(b - a)`.
fn ap_differences(mask: u64, q: u32) -> u64 {
    let mut out = 0;
    for d in 1..q {
        let escapes = (mask & !rotate(mask, q - d, q)).count_ones();
        if escapes <= 1 {
            out |= 1 << d;
        }
    }
    out
}

fn classify_masks(x: u64, y: u64, q: u32, ap_x: u64, ap_y: u64) -> VosperVerdict {
    let (nx, ny) = (x.count_ones(), y.count_ones());
    let sum = mask_sumset(x, y, q);
    let ns = sum.count_ones();
    let equality = ns == q.min(nx + ny - 1);
    let missing = (ns == q - 1).then(|| (!sum & low_bits(q)).trailing_zeros());
    let cond_c = missing.is_some_and(|c| {
        // {c - a : a in X} is X negated then translated by c
        let neg_x = (0..q).filter(|&a| x >> a & 1 == 1).fold(0u64, |acc, a| acc | 1 << ((q - a) % q));
        y == !rotate(neg_x, c, q) & low_bits(q)
    });
    let common = ap_x & ap_y;
    VosperVerdict {
        equality,
        cond_a: nx + ny > q,
        cond_b: nx.min(ny) == 1,
        cond_c,
        cond_d: common != 0,
        missing: missing.map(u64::from),
        difference: (common != 0).then(|| common.trailing_zeros() as u64),
    }
}

pub fn vosper_classify(x: &ResidueSet, y: &ResidueSet) -> Result<VosperVerdict> {
    let q = require_prime_nonempty(&[x, y])?;
    if q >= 64 {
        return Err(Error::InvalidArgument(format!("modulus {q} exceeds 63")));
    }
    let (mx, my) = (x.words[0], y.words[0]);
    Ok(classify_masks(mx, my, q, ap_differences(mx, q), ap_differences(my, q)))
}

/// Counts from an exhaustive Vosper sweep over all ordered pairs of
/// nonempty subsets.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VosperSweep {
    pub q: u32,
    pub pairs: u64,
    pub equalities: u64,
    pub cond_a: u64,
    pub cond_b: u64,
    pub cond_c: u64,
    pub cond_d: u64,
    /// Pairs `(X, Y)` as masks where the equivalence fails.
    pub violations: Vec<(u64, u64)>,
}

/// Largest modulus accepted by [`vosper_exhaustive`].
pub const VOSPER_SWEEP_CAP: u32 = 13;

pub fn vosper_exhaustive(q: u32) -> Result<VosperSweep> {
    if !is_prime(q as u64) || q > VOSPER_SWEEP_CAP {
        return Err(Error::InvalidArgument(format!(
            "exhaustive sweep needs a prime modulus <= {VOSPER_SWEEP_CAP}, got {q}"
        )));
    }
    let all = 1u64 << q;
    let aps: Vec<u64> = (0..all).map(|m| ap_differences(m, q)).collect();
    let mut out = VosperSweep { q, ..Default::default() };
    for x in 1..all {
        for y in 1..all {
            let v = classify_masks(x, y, q, aps[x as usize], aps[y as usize]);
            out.pairs += 1;
            out.equalities += v.equality as u64;
            out.cond_a += v.cond_a as u64;
            out.cond_b += v.cond_b as u64;
            out.cond_c += v.cond_c as u64;
            out.cond_d += v.cond_d as u64;
            if !v.consistent() {
                out.violations.push((x, y));
            }
        }
    }
    Ok(out)
}
