//! Coset bookkeeping for metacyclic groups: shift products, minimal
//! sub-multisets with product in `H`, and the greedy decomposition
//! `S cap N = A_1 ... A_r C` with its product set `R`.

use crate::error::{Error, Result};
use crate::groups::{Element, GroupParams};

use super::sequence::Sequence;

/// `[pi_0(A), ..., pi_{l-1}(A)]` with
/// `pi_n(A) = a_{n+1} ... a_l a_1 ... a_n`.
pub fn shift_products(params: &GroupParams, ordered: &[Element]) -> Vec<Element> {
    let l = ordered.len();
    (0..l)
        .map(|n| (0..l).fold(Element::IDENTITY, |acc, k| params.multiply(acc, ordered[(n + k) % l])))
        .collect()
}

/// The smallest sub-multiset of `t` whose elements can be ordered into `H`
/// (ties broken by canonical order). Since `xExp` of a product is the sum of
/// the `xExp`s whatever the order, this is a zero-sum search in `C_m`, and
/// smallest-first makes the result minimal.
pub fn minimal_h_part(params: &GroupParams, t: &Sequence) -> Result<Option<Sequence>> {
    let m = params.m() as usize;
    let xs: Vec<(usize, usize, usize)> = t
        .entries()
        .iter()
        .map(|&(g, c)| (g, c, params.element_at(g).x as usize))
        .collect();
    if let Some(&(g, _, _)) = xs.iter().find(|&&(_, _, x)| x == 0) {
        return Err(Error::InvalidArgument(format!(
            "element {} lies in H",
            crate::groups::format_element(params.element_at(g))
        )));
    }
    let mut picked = Vec::new();
    for size in 1..=t.len() {
        if pick(&xs, 0, size, 0, m, &mut picked) {
            return Ok(Some(Sequence::from_indices(picked)));
        }
    }
    Ok(None)
}

/// Lexicographic search for `size` more elements from `xs[from..]` bringing
/// the running `xExp` sum to 0 mod `m`.
fn pick(xs: &[(usize, usize, usize)], from: usize, size: usize, sum: usize, m: usize, out: &mut Vec<usize>) -> bool {
    if size == 0 {
        return sum % m == 0;
    }
    for k in from..xs.len() {
        let (g, mult, x) = xs[k];
        let already = out.iter().filter(|&&h| h == g).count();
        if already >= mult {
            continue;
        }
        out.push(g);
        let next = if already + 1 < mult { k } else { k + 1 };
        if pick(xs, next, size - 1, (sum + x) % m, m, out) {
            return true;
        }
        out.pop();
    }
    false
}

/// Outcome of checking the shift-product lemma on one ordered part.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ShiftCheck {
    /// Every rotation lies in `H` and they are pairwise distinct.
    Holds,
    /// `pi(A) = 1`, so every rotation is the identity; outside the lemma's
    /// scope (such an `A` is itself a product-one subsequence).
    IdentityProduct,
    Violated,
}

/// For `A` minimal with product in `H`, every rotation is a conjugate of
/// `pi_0(A)` by a prefix product; the lemma asserts distinctness whenever
/// `pi(A) != 1`.
pub fn check_shift_lemma(params: &GroupParams, ordered: &[Element]) -> ShiftCheck {
    let shifts = shift_products(params, ordered);
    if shifts.iter().any(|g| !g.in_h()) {
        return ShiftCheck::Violated;
    }
    if shifts[0] == Element::IDENTITY {
        return if shifts.iter().all(|&g| g == Element::IDENTITY) {
            ShiftCheck::IdentityProduct
        } else {
            ShiftCheck::Violated
        };
    }
    let mut ys: Vec<u32> = shifts.iter().map(|g| g.y).collect();
    ys.sort_unstable();
    ys.dedup();
    if ys.len() == shifts.len() { ShiftCheck::Holds } else { ShiftCheck::Violated }
}

#[derive(Clone, Debug)]
pub struct HDecomposition {
    /// `S cap H`.
    pub in_h: Sequence,
    /// `A_1, ..., A_r`, each minimal with product in `H`.
    pub parts: Vec<Sequence>,
    /// `C = (S cap N)(A_1 ... A_r)^{-1}`.
    pub residual: Sequence,
    /// Rotation products of each part in canonical order (`y`-exponents).
    pub shift_sets: Vec<Vec<u32>>,
    /// `y`-exponents of
    /// `R = {pi_j(A_1)} . ({1} u {pi_j(A_2)}) ... ({1} u {pi_j(A_r)})`.
    pub product_set: Vec<u32>,
}

impl HDecomposition {
    pub fn r(&self) -> usize {
        self.parts.len()
    }

    pub fn parts_len(&self) -> usize {
        self.parts.iter().map(Sequence::len).sum()
    }

    /// Whether every part has a non-identity product, the setting in which
    /// the rotation sets have full size and the bound below must hold.
    pub fn bound_applies(&self) -> bool {
        self.shift_sets.iter().all(|s| !s.contains(&0))
    }

    /// `|R| >= min{q, sum |A_i|}`.
    pub fn product_set_bound_holds(&self, q: u32) -> bool {
        self.parts.is_empty() || self.product_set.len() >= (q as usize).min(self.parts_len())
    }
}

/// Greedy extraction of minimal parts from `S cap N` while at least `m`
/// elements remain, then the product set `R` of their rotations.
pub fn decompose(params: &GroupParams, seq: &Sequence) -> HDecomposition {
    let m = params.m() as usize;
    let q = params.q() as usize;
    let in_h = seq.in_h(params);
    let mut rest = seq.outside_h(params);
    let mut parts = Vec::new();
    while rest.len() >= m {
        match minimal_h_part(params, &rest).expect("elements outside H") {
            Some(a) => {
                rest = rest.remove(&a);
                parts.push(a);
            }
            None => break,
        }
    }

    let shift_sets: Vec<Vec<u32>> = parts
        .iter()
        .map(|a| {
            let mut ys: Vec<u32> = shift_products(params, &a.elements(params)).iter().map(|g| g.y).collect();
            ys.sort_unstable();
            ys.dedup();
            ys
        })
        .collect();

    let mut product_set = Vec::new();
    if let Some((first, later)) = shift_sets.split_first() {
        let mut acc = vec![false; q];
        for &y in first {
            acc[y as usize] = true;
        }
        for set in later {
            let mut next = acc.clone(); // the adjoined {1}
            for (a, _) in acc.iter().enumerate().filter(|(_, &v)| v) {
                for &y in set {
                    next[(a + y as usize) % q] = true;
                }
            }
            acc = next;
        }
        product_set = (0..q as u32).filter(|&y| acc[y as usize]).collect();
    }

    HDecomposition { in_h, parts, residual: rest, shift_sets, product_set }
}
