use std::fmt;

use crate::groups::CayleyGroup;

/// Fixed-width set of group element indices.
pub trait BitWord: Copy + Default + Eq + Send + Sync + fmt::Debug + 'static {
    const CAPACITY: usize;

    fn singleton(i: usize) -> Self;
    fn contains(&self, i: usize) -> bool;
    fn union(self, other: Self) -> Self;
    fn is_empty(&self) -> bool;
    fn len(&self) -> usize;
    /// The `c`-th byte of the membership mask.
    fn byte(&self, c: usize) -> u8;

    fn insert(&mut self, i: usize) {
        *self = self.union(Self::singleton(i));
    }

    fn ones(&self) -> Ones<Self> {
        Ones { set: *self, next: 0 }
    }
}

pub struct Ones<B> {
    set: B,
    next: usize,
}

impl<B: BitWord> Iterator for Ones<B> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        while self.next < B::CAPACITY {
            let i = self.next;
            self.next += 1;
            if self.set.contains(i) {
                return Some(i);
            }
        }
        None
    }
}

impl BitWord for u64 {
    const CAPACITY: usize = 64;

    #[inline]
    fn singleton(i: usize) -> Self {
        1u64 << i
    }
    #[inline]
    fn contains(&self, i: usize) -> bool {
        (self >> i) & 1 == 1
    }
    #[inline]
    fn union(self, other: Self) -> Self {
        self | other
    }
    #[inline]
    fn is_empty(&self) -> bool {
        *self == 0
    }
    #[inline]
    fn len(&self) -> usize {
        self.count_ones() as usize
    }
    #[inline]
    fn byte(&self, c: usize) -> u8 {
        (self >> (8 * c)) as u8
    }
}

/// Set of element indices of a group of order at most 256.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ElementSet([u64; 4]);

impl ElementSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn iter(&self) -> Ones<Self> {
        self.ones()
    }

    pub fn from_word<B: BitWord>(word: B) -> Self {
        word.ones().fold(Self::default(), |mut acc, i| {
            acc.insert(i);
            acc
        })
    }
}

impl FromIterator<usize> for ElementSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut set = Self::default();
        for i in iter {
            set.insert(i);
        }
        set
    }
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl BitWord for ElementSet {
    const CAPACITY: usize = 256;

    #[inline]
    fn singleton(i: usize) -> Self {
        let mut w = [0; 4];
        w[i / 64] = 1 << (i % 64);
        Self(w)
    }
    #[inline]
    fn contains(&self, i: usize) -> bool {
        (self.0[i / 64] >> (i % 64)) & 1 == 1
    }
    #[inline]
    fn union(self, other: Self) -> Self {
        Self(std::array::from_fn(|k| self.0[k] | other.0[k]))
    }
    #[inline]
    fn is_empty(&self) -> bool {
        self.0.iter().all(|&w| w == 0)
    }
    #[inline]
    fn len(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }
    #[inline]
    fn byte(&self, c: usize) -> u8 {
        (self.0[c / 8] >> (8 * (c % 8))) as u8
    }
}

/// Right multiplication of a whole set by one group element.
///
/// For 64-bit words this is a table lookup per byte of the mask; wider
/// words fall back to moving one bit at a time.
pub(crate) struct RightMul<B> {
    n: usize,
    chunks: usize,
    tables: Vec<B>,
    table: Vec<u16>,
}

impl<B: BitWord> RightMul<B> {
    pub fn new(group: &CayleyGroup) -> Self {
        let n = group.order();
        assert!(n <= B::CAPACITY, "group of order {n} does not fit the set width");
        let chunks = n.div_ceil(8);
        let mut table = Vec::with_capacity(n * n);
        for a in 0..n {
            for g in 0..n {
                table.push(group.mul(a, g) as u16);
            }
        }
        let mut tables = Vec::new();
        if B::CAPACITY == 64 {
            tables.reserve(n * chunks * 256);
            for g in 0..n {
                for c in 0..chunks {
                    for byte in 0..256usize {
                        let mut acc = B::default();
                        for b in 0..8 {
                            let a = 8 * c + b;
                            if byte >> b & 1 == 1 && a < n {
                                acc.insert(table[a * n + g] as usize);
                            }
                        }
                        tables.push(acc);
                    }
                }
            }
        }
        Self { n, chunks, tables, table }
    }

    /// `{a g : a in set}`.
    #[inline]
    pub fn apply(&self, set: B, g: usize) -> B {
        if !self.tables.is_empty() {
            let base = g * self.chunks * 256;
            let mut acc = B::default();
            for c in 0..self.chunks {
                let byte = set.byte(c) as usize;
                if byte != 0 {
                    acc = acc.union(self.tables[base + c * 256 + byte]);
                }
            }
            acc
        } else {
            let mut acc = B::default();
            for a in set.ones() {
                acc.insert(self.table[a * self.n + g] as usize);
            }
            acc
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::GroupParams;

    #[test]
    fn element_set_basics() {
        let s: ElementSet = [0usize, 63, 64, 200, 255].into_iter().collect();
        assert_eq!(s.len(), 5);
        assert!(s.contains(64) && s.contains(255) && !s.contains(1));
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![0, 63, 64, 200, 255]);
        assert_eq!(s.byte(8), 1);
        assert_eq!(ElementSet::from_word(0b1010u64).iter().collect::<Vec<_>>(), vec![1, 3]);
    }

    #[test]
    fn table_and_bitwise_routes_agree() {
        let g = GroupParams::new(7, 6, 3).unwrap().to_cayley().unwrap();
        let narrow = RightMul::<u64>::new(&g);
        let wide = RightMul::<ElementSet>::new(&g);
        let mut state = 0x9e37_79b9_7f4a_7c15u64;
        for _ in 0..2000 {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            let set = state & ((1u64 << 42) - 1);
            let h = (state % 42) as usize;
            let a = narrow.apply(set, h);
            let b = wide.apply(ElementSet::from_word(set), h);
            assert_eq!(ElementSet::from_word(a), b);
            let expect: ElementSet = set.ones().map(|x| g.mul(x, h)).collect();
            assert_eq!(b, expect);
        }
    }
}
