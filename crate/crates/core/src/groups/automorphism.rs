//! Brute-force automorphism groups of small groups, used for symmetry
//! reduction in the extremal search.

use crate::error::{Error, Result};

use super::cayley::CayleyGroup;
use super::metacyclic::{Element, GroupParams};

/// Automorphism searches are limited to groups of this order.
pub const AUTOMORPHISM_CAP: usize = 64;

/// A bijection on element indices.
pub type Permutation = Vec<usize>;

fn check_cap(n: usize) -> Result<()> {
    if n > AUTOMORPHISM_CAP {
        return Err(Error::OrderCap { order: n, cap: AUTOMORPHISM_CAP });
    }
    Ok(())
}

/// Greedy generating set: repeatedly add the highest-order element not yet
/// generated (ties broken by index).
pub fn generating_set(group: &CayleyGroup) -> Vec<usize> {
    let mut by_order: Vec<usize> = (0..group.order()).collect();
    by_order.sort_by_key(|&a| (std::cmp::Reverse(group.element_order(a)), a));
    let mut gens = Vec::new();
    let mut member = group.generated(&gens);
    for a in by_order {
        if member.iter().all(|&m| m) {
            break;
        }
        if !member[a] {
            gens.push(a);
            member = group.generated(&gens);
        }
    }
    gens
}

/// Extends generator images to a map on the whole group along the Cayley
/// graph, failing on any inconsistency or non-injectivity.
fn extend(group: &CayleyGroup, gens: &[usize], images: &[usize]) -> Option<Permutation> {
    let n = group.order();
    let mut map = vec![usize::MAX; n];
    map[group.identity()] = group.identity();
    let mut queue = vec![group.identity()];
    let mut head = 0;
    while head < queue.len() {
        let a = queue[head];
        head += 1;
        for (&g, &img) in gens.iter().zip(images) {
            let b = group.mul(a, g);
            let fb = group.mul(map[a], img);
            if map[b] == usize::MAX {
                map[b] = fb;
                queue.push(b);
            } else if map[b] != fb {
                return None;
            }
        }
    }
    let mut seen = vec![false; n];
    for &v in &map {
        if v == usize::MAX || seen[v] {
            return None;
        }
        seen[v] = true;
    }
    Some(map)
}

pub fn is_automorphism(group: &CayleyGroup, map: &[usize]) -> bool {
    let n = group.order();
    if map.len() != n {
        return false;
    }
    let mut seen = vec![false; n];
    for &v in map {
        if v >= n || seen[v] {
            return false;
        }
        seen[v] = true;
    }
    (0..n).all(|a| (0..n).all(|b| map[group.mul(a, b)] == group.mul(map[a], map[b])))
}

/// All automorphisms of a Cayley group, sorted lexicographically.
///
/// Generator images are restricted to elements of matching order; every
/// surviving candidate is re-checked as a bijective homomorphism on all pairs.
pub fn automorphisms(group: &CayleyGroup) -> Result<Vec<Permutation>> {
    check_cap(group.order())?;
    let gens = generating_set(group);
    let orders: Vec<usize> = (0..group.order()).map(|a| group.element_order(a)).collect();
    let candidates: Vec<Vec<usize>> = gens
        .iter()
        .map(|&g| (0..group.order()).filter(|&a| orders[a] == orders[g]).collect())
        .collect();

    let mut found = Vec::new();
    let mut images = vec![0; gens.len()];
    search(group, &gens, &candidates, 0, &mut images, &mut found);
    found.sort();
    Ok(found)
}

fn search(
    group: &CayleyGroup,
    gens: &[usize],
    candidates: &[Vec<usize>],
    depth: usize,
    images: &mut Vec<usize>,
    found: &mut Vec<Permutation>,
) {
    if depth == gens.len() {
        if let Some(map) = extend(group, gens, images) {
            if is_automorphism(group, &map) {
                found.push(map);
            }
        }
        return;
    }
    for &c in &candidates[depth] {
        images[depth] = c;
        search(group, gens, candidates, depth + 1, images, found);
    }
}

/// Automorphisms of `C_q x|_s C_m` from images `(X, Y)` of the generators
/// satisfying `X^m = 1`, `Y^q = 1` and `YX = XY^s`; the induced map
/// `x^i y^j -> X^i Y^j` is then checked to be a bijective homomorphism.
pub fn metacyclic_automorphisms(params: &GroupParams) -> Result<Vec<Permutation>> {
    let n = params.order();
    check_cap(n)?;
    let cayley = params.to_cayley()?;
    let (m, q) = (params.m() as u64, params.q() as u64);
    let s = params.s() as u64;
    let elems: Vec<Element> = params.elements().collect();
    let mut found = Vec::new();
    for &big_x in &elems {
        if params.pow(big_x, m) != Element::IDENTITY {
            continue;
        }
        for &big_y in &elems {
            if params.pow(big_y, q) != Element::IDENTITY {
                continue;
            }
            let lhs = params.multiply(big_y, big_x);
            let rhs = params.multiply(big_x, params.pow(big_y, s));
            if lhs != rhs {
                continue;
            }
            let map: Permutation = elems
                .iter()
                .map(|g| {
                    let img = params.multiply(params.pow(big_x, g.x as u64), params.pow(big_y, g.y as u64));
                    params.index(img)
                })
                .collect();
            if is_automorphism(&cayley, &map) {
                found.push(map);
            }
        }
    }
    found.sort();
    Ok(found)
}

pub fn compose(outer: &[usize], inner: &[usize]) -> Permutation {
    inner.iter().map(|&a| outer[a]).collect()
}

pub fn invert(map: &[usize]) -> Permutation {
    let mut inv = vec![0; map.len()];
    for (a, &b) in map.iter().enumerate() {
        inv[b] = a;
    }
    inv
}
