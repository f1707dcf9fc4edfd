//! Brute-force references shared by the integration tests.
#![allow(dead_code)]

use itertools::Itertools;
use zsm::groups::{CayleyGroup, GroupParams};
use zsm::seqengine::Sequence;

/// Free iff no nonempty sub-multiset has an ordering with product 1,
/// checked over every subset of positions and every permutation of it.
pub fn naive_free(group: &CayleyGroup, items: &[usize]) -> bool {
    let n = items.len();
    for mask in 1u32..(1 << n) {
        let chosen: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).map(|i| items[i]).collect();
        for perm in chosen.iter().permutations(chosen.len()) {
            let p = perm.iter().fold(group.identity(), |acc, &&g| group.mul(acc, g));
            if p == group.identity() {
                return false;
            }
        }
    }
    true
}

/// Every ordered product of every sub-multiset (the empty one included).
pub fn naive_products(group: &CayleyGroup, items: &[usize]) -> Vec<usize> {
    let n = items.len();
    let mut out = vec![group.identity()];
    for mask in 1u32..(1 << n) {
        let chosen: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).map(|i| items[i]).collect();
        for perm in chosen.iter().permutations(chosen.len()) {
            out.push(perm.iter().fold(group.identity(), |acc, &&g| group.mul(acc, g)));
        }
    }
    out.sort_unstable();
    out.dedup();
    out
}

/// All multisets of `len` elements from `pool`, as sorted index lists.
pub fn multisets(pool: &[usize], len: usize) -> Vec<Vec<usize>> {
    pool.iter().copied().combinations_with_replacement(len).collect()
}

/// Free multisets of length `len` by filtering every multiset.
pub fn brute_free(group: &CayleyGroup, len: usize) -> Vec<Sequence> {
    let pool: Vec<usize> = (0..group.order()).collect();
    multisets(&pool, len)
        .into_iter()
        .filter(|s| naive_free(group, s))
        .map(Sequence::from_indices)
        .collect()
}

/// Every valid `(q, m, s)` with `q * m <= max_order`.
pub fn small_groups(max_order: u64) -> Vec<GroupParams> {
    let mut out = Vec::new();
    for q in [3u64, 5, 7, 11, 13, 17, 19, 23, 29, 31] {
        for m in 2..q {
            if q * m > max_order || (q - 1) % m != 0 {
                continue;
            }
            for s in GroupParams::all_s(q, m).unwrap() {
                out.push(GroupParams::new(q, m, s).unwrap());
            }
        }
    }
    out
}

/// JSON text with every `stats.seconds` removed, line by line.
pub fn without_seconds(text: &str) -> String {
    text.lines()
        .map(|line| {
            let mut v: serde_json::Value = serde_json::from_str(line).expect("json line");
            if let Some(stats) = v.get_mut("stats").and_then(|s| s.as_object_mut()) {
                stats.remove("seconds");
            }
            v.to_string() + "\n"
        })
        .collect()
}
