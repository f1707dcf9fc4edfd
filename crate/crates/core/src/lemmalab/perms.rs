//! Sets of weighted sums `sum_k a_{sigma(k)} s^k` over permutations.

use rand::Rng;

use crate::error::{Error, Result};
use crate::numtheory::{mult_order, pow_mod};

use super::lemmas::SweepSummary;
use super::residue::ResidueSet;

/// Rearranges `v` into the next distinct arrangement in lexicographic
/// order; `false` once the last one is passed (leaving `v` sorted).
fn next_arrangement(v: &mut [u64]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
        v.reverse();
        return false;
    };
    let j = (i..v.len()).rev().find(|&j| v[j] > v[i - 1]).expect("pivot");
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// `{sum_k b_k w_k}` over distinct arrangements `b` of `coeffs`.
fn arrangement_sums(coeffs: &[u64], weights: &[u64], q: u64) -> ResidueSet {
    let mut b: Vec<u64> = coeffs.iter().map(|&c| c % q).collect();
    b.sort_unstable();
    let mut out = ResidueSet::empty(q as u32);
    loop {
        out.insert(b.iter().zip(weights).map(|(x, w)| x * w % q).sum::<u64>());
        if !next_arrangement(&mut b) {
            return out;
        }
    }
}

fn distinct_values(values: impl Iterator<Item = u64>, q: u64) -> usize {
    let mut v: Vec<u64> = values.map(|x| x % q).collect();
    v.sort_unstable();
    v.dedup();
    v.len()
}

fn require_prime_shape(q: u64) -> Result<()> {
    if q < 13 || q % 4 != 1 || !crate::numtheory::is_prime(q) {
        return Err(Error::InvalidArgument(format!(
            "hypothesis violated: q = {q} must be a prime >= 13 with q = 1 mod 4"
        )));
    }
    Ok(())
}

/// Positions `k` with `k = r (mod step)`.
fn class(a: &[u64], r: usize, step: usize) -> impl Iterator<Item = u64> + '_ {
    a.iter().copied().skip(r).step_by(step)
}

/// `{a_{sigma(0)} + a_{sigma(1)} s + ... + a_{sigma(m-1)} s^{m-1}}` over
/// all permutations, for `s` of order `m = (q - 1) / 2`.
pub fn perm_sum_set(a: &[u64], s: u64, q: u64) -> Result<ResidueSet> {
    require_prime_shape(q)?;
    let m = (q - 1) / 2;
    if mult_order(s, q)? != m {
        return Err(Error::InvalidArgument(format!("hypothesis violated: order of {s} mod {q} is not {m}")));
    }
    if a.len() as u64 != m {
        return Err(Error::InvalidArgument(format!(
            "hypothesis violated: expected {m} coefficients, got {}",
            a.len()
        )));
    }
    for (r, name) in [(0, "even"), (1, "odd")] {
        if distinct_values(class(a, r, 2), q) < 2 {
            return Err(Error::InvalidArgument(format!(
                "hypothesis violated: {name}-index coefficients need two distinct values"
            )));
        }
    }
    let weights: Vec<u64> = (0..m).map(|k| pow_mod(s, k, q)).collect();
    Ok(arrangement_sums(a, &weights, q))
}

/// The even- and odd-position sets for `s` a generator of `Z_q^*` and
/// `q - 1` coefficients: `{a_{sigma(0)} + a_{sigma(2)} s^2 + ...}` with
/// `sigma` permuting even positions, and `{a_{tau(1)} s + a_{tau(3)} s^3 +
/// ...}` with `tau` permuting odd positions.
pub fn split_perm_sum_sets(a: &[u64], s: u64, q: u64) -> Result<(ResidueSet, ResidueSet)> {
    require_prime_shape(q)?;
    if mult_order(s, q)? != q - 1 {
        return Err(Error::InvalidArgument(format!("hypothesis violated: {s} does not generate Z_{q}^*")));
    }
    if a.len() as u64 != q - 1 {
        return Err(Error::InvalidArgument(format!(
            "hypothesis violated: expected {} coefficients, got {}",
            q - 1,
            a.len()
        )));
    }
    for r in 0..4 {
        if distinct_values(class(a, r, 4), q) < 2 {
            return Err(Error::InvalidArgument(format!(
                "hypothesis violated: coefficients at positions = {r} mod 4 need two distinct values"
            )));
        }
    }
    let half = (q - 1) as usize / 2;
    let even_w: Vec<u64> = (0..half).map(|k| pow_mod(s, 2 * k as u64, q)).collect();
    let odd_w: Vec<u64> = (0..half).map(|k| pow_mod(s, 2 * k as u64 + 1, q)).collect();
    let even: Vec<u64> = class(a, 0, 2).collect();
    let odd: Vec<u64> = class(a, 1, 2).collect();
    Ok((arrangement_sums(&even, &even_w, q), arrangement_sums(&odd, &odd_w, q)))
}

/// Draws coefficient tuples uniformly, keeps the first `trials` that meet
/// the hypotheses, and checks `|A| >= q - 1` (with `split`, both halves).
pub fn perm_sum_trials<R: Rng>(q: u64, s: u64, split: bool, trials: u64, rng: &mut R) -> Result<SweepSummary> {
    let len = if split { q - 1 } else { (q - 1) / 2 } as usize;
    let mut out = SweepSummary::default();
    let mut draws = 0u64;
    while out.cases < trials {
        draws += 1;
        if draws > trials.saturating_mul(1000).max(1000) {
            return Err(Error::InvalidArgument(format!("no admissible coefficient tuples found for q={q} s={s}")));
        }
        let a: Vec<u64> = (0..len).map(|_| rng.gen_range(0..q)).collect();
        let sizes = if split {
            match split_perm_sum_sets(&a, s, q) {
                Ok((e, o)) => vec![e.len(), o.len()],
                Err(Error::InvalidArgument(msg)) if msg.starts_with("hypothesis") => continue,
                Err(e) => return Err(e),
            }
        } else {
            match perm_sum_set(&a, s, q) {
                Ok(set) => vec![set.len()],
                Err(Error::InvalidArgument(msg)) if msg.starts_with("hypothesis") => continue,
                Err(e) => return Err(e),
            }
        };
        let ok = sizes.iter().all(|&n| n as u64 >= q - 1);
        out.cases += 1;
        if !ok {
            out.violations.push(format!("a={a:?} sizes={sizes:?}"));
        }
    }
    Ok(out)
}
