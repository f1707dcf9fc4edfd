use crate::error::{Error, Result};
use crate::numtheory::{biquartic_residue_classes, is_prime, mult_order, primes_one_mod_four, quartic_histogram, SolutionCount};

/// An element that multiplication by `s` moves out of its interval.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IntervalEscape {
    /// `a` in `{1, ..., k-1}` with `s a` outside it.
    Lower(u64),
    /// `b` in `{k, ..., q-1}` with `s b` outside it.
    Upper(u64),
}

impl IntervalEscape {
    pub fn element(self) -> u64 {
        match self {
            IntervalEscape::Lower(a) | IntervalEscape::Upper(a) => a,
        }
    }
}

/// Finds an element of `{1..k-1}` or `{k..q-1}` whose `s`-multiple leaves
/// its interval. `None` would mean both intervals are `s`-invariant.
pub fn interval_invariance_counterexample(q: u64, s: u64, k: u64) -> Result<Option<IntervalEscape>> {
    if q < 5 || !is_prime(q) {
        return Err(Error::InvalidArgument(format!("q = {q} must be a prime >= 5")));
    }
    if s % q == 0 || s % q == 1 {
        return Err(Error::InvalidArgument(format!("s = {s} must be a unit other than 1 mod {q}")));
    }
    if !(2..q).contains(&k) {
        return Err(Error::InvalidArgument(format!("k = {k} outside 2..={}", q - 1)));
    }
    let s = s % q;
    if let Some(a) = (1..k).find(|&a| a * s % q >= k) {
        return Ok(Some(IntervalEscape::Lower(a)));
    }
    Ok((k..q).find(|&b| b * s % q < k).map(IntervalEscape::Upper))
}

fn weighted_sum(a: &[u64], s: u64, q: u64) -> u64 {
    a.iter().rev().fold(0, |acc, &c| (acc * s + c) % q)
}

/// Whether swapping `a_i` and `a_j` changes `sum a_k s^k (mod q)`.
pub fn coefficient_swap_distinct(a: &[u64], s: u64, q: u64, i: usize, j: usize) -> Result<bool> {
    let m = a.len();
    if mult_order(s, q)? != m as u64 {
        return Err(Error::InvalidArgument(format!("order of {s} mod {q} is not {m}")));
    }
    if i >= m || j >= m {
        return Err(Error::InvalidArgument(format!("indices {i}, {j} out of range for {m} coefficients")));
    }
    if a[i] % q == a[j] % q {
        return Err(Error::InvalidArgument(format!("hypothesis violated: a_{i} = a_{j} mod {q}")));
    }
    let mut swapped = a.to_vec();
    swapped.swap(i, j);
    Ok(weighted_sum(a, s, q) != weighted_sum(&swapped, s, q))
}

/// Outcome of an exhaustive or sampled sweep.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SweepSummary {
    pub cases: u64,
    pub violations: Vec<String>,
}

impl SweepSummary {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    fn record(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.violations.push(describe());
        }
    }
}

/// Primes `5 <= q <= q_max`.
pub fn primes_from_five(q_max: u64) -> Vec<u64> {
    (5..=q_max).filter(|&p| is_prime(p)).collect()
}

/// Every `(q, s, k)` with `q` from `primes`, `s != 0, 1` and `2 <= k < q`.
pub fn interval_sweep(primes: &[u64]) -> Result<SweepSummary> {
    let mut out = SweepSummary::default();
    for &q in primes {
        for s in 2..q {
            for k in 2..q {
                let found = interval_invariance_counterexample(q, s, k)?.is_some();
                out.record(found, || format!("q={q} s={s} k={k}"));
            }
        }
    }
    Ok(out)
}

/// Every `q <= q_max` prime, `s` of order `m >= 2`, index pair `i < j`
/// and distinct values `a_i, a_j`, the other coefficients all `0`. The
/// swap changes the sum by `(a_i - a_j)(s^i - s^j)`, so the remaining
/// coefficients never affect the outcome.
pub fn coefficient_swap_sweep(q_max: u64) -> SweepSummary {
    let mut out = SweepSummary::default();
    for q in (3..=q_max).filter(|&p| is_prime(p)) {
        for s in 2..q {
            let m = mult_order(s, q).expect("unit") as usize;
            let mut a = vec![0u64; m];
            for i in 0..m {
                for j in i + 1..m {
                    for u in 0..q {
                        for v in (0..q).filter(|&v| v != u) {
                            a[i] = u;
                            a[j] = v;
                            let ok = coefficient_swap_distinct(&a, s, q, i, j).expect("admissible");
                            out.record(ok, || format!("q={q} s={s} a={a:?} i={i} j={j}"));
                        }
                    }
                    a[i] = 0;
                    a[j] = 0;
                }
            }
        }
    }
    out
}

/// Every `q = 1 (mod 4)` prime up to `q_max` and every `a, b, c` in
/// `Z_q^*`: solution count of `a z^2 - b w^4 = c` within `3 sqrt(q)` of `q`.
pub fn quartic_sweep(q_max: u64) -> SweepSummary {
    let mut out = SweepSummary::default();
    for q in primes_one_mod_four(q_max) {
        for a in 1..q {
            for b in 1..q {
                let hist = quartic_histogram(a, b, q).expect("q = 1 mod 4");
                for c in 1..q {
                    let n = SolutionCount { count: hist[c as usize], q };
                    out.record(n.within_bound(), || format!("q={q} a={a} b={b} c={c} N={}", n.count));
                }
            }
        }
    }
    out
}

/// Every `b, c` in `Z_q^*` for each listed `q`: both quadratic classes met.
pub fn biquartic_sweep(primes: &[u64]) -> Result<SweepSummary> {
    let mut out = SweepSummary::default();
    for &q in primes {
        for b in 1..q {
            for c in 1..q {
                let classes = biquartic_residue_classes(b, c, q)?;
                out.record(classes == (true, true), || format!("q={q} b={b} c={c} classes={classes:?}"));
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn interval_examples() {
        assert_eq!(interval_invariance_counterexample(5, 4, 3).unwrap(), Some(IntervalEscape::Lower(1)));
        let w = interval_invariance_counterexample(7, 2, 4).unwrap().unwrap();
        assert!(matches!(w, IntervalEscape::Lower(a) if (1..4).contains(&a) && a * 2 % 7 >= 4));
        assert_eq!(interval_invariance_counterexample(13, 3, 2).unwrap(), Some(IntervalEscape::Lower(1)));
        assert!(interval_invariance_counterexample(5, 1, 3).is_err());
        assert!(interval_invariance_counterexample(9, 2, 3).is_err());
        assert!(interval_invariance_counterexample(7, 2, 7).is_err());
    }

    #[test]
    fn swap_examples() {
        assert!(coefficient_swap_distinct(&[0, 1], 4, 5, 0, 1).unwrap());
        assert!(coefficient_swap_distinct(&[1, 1, 3], 2, 7, 0, 2).unwrap());
        assert!(coefficient_swap_distinct(&[5, 5, 5], 2, 7, 0, 1).is_err());
        assert!(coefficient_swap_distinct(&[0, 1], 2, 7, 0, 1).is_err());
    }

    #[test]
    fn small_sweeps() {
        assert!(interval_sweep(&primes_from_five(13)).unwrap().passed());
        assert!(interval_sweep(&[9]).is_err());
        assert!(coefficient_swap_sweep(13).passed());
        let q = quartic_sweep(13);
        assert!(q.passed());
        assert_eq!(q.cases, 4 * 4 * 4 + 12 * 12 * 12);
        assert!(biquartic_sweep(&[17, 29]).unwrap().passed());
    }

    #[test]
    fn biquartic_fails_at_13_through_zero() {
        // at q = 13 the fourth powers are {1, 3, 9}, so {c + b w^4} has three
        // elements; when one of them is 0 the other two can share a class
        let sweep = biquartic_sweep(&[13]).unwrap();
        assert_eq!(sweep.cases, 144);
        assert_eq!(sweep.violations.len(), 36);
        for b in 1..13u64 {
            for c in 1..13u64 {
                let hits_zero = [1u64, 3, 9].iter().any(|w4| (c + b * w4) % 13 == 0);
                let classes = crate::numtheory::biquartic_residue_classes(b, c, 13).unwrap();
                assert_eq!(classes == (true, true), !hits_zero, "b={b} c={c}");
            }
        }
    }
}
