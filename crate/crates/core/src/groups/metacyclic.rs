use std::fmt;

use crate::error::{Error, Result};
use crate::numtheory::{is_prime, mult_order, pow_mod};

use super::cayley::CayleyGroup;

/// Default cap on the order of a group turned into a Cayley table.
pub const DEFAULT_CAYLEY_CAP: usize = 256;

/// Validated parameters of `C_q x|_s C_m = <x, y | x^m, y^q, yx = xy^s>`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GroupParams {
    q: u32,
    m: u32,
    s: u32,
    /// `s^k mod q` for `k` in `0..m`.
    s_pow: Vec<u32>,
}

/// Normal form `x^i y^j` stored as the exponent pair `(i, j)`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Element {
    pub x: u32,
    pub y: u32,
}

impl Element {
    pub const IDENTITY: Element = Element { x: 0, y: 0 };

    pub fn new(x: u32, y: u32) -> Self {
        Self { x, y }
    }

    /// Whether the element lies in `H = <y>`.
    pub fn in_h(self) -> bool {
        self.x == 0
    }
}

impl GroupParams {
    /// Validates `(q, m, s)`: `q` prime, `m >= 2` dividing `q - 1`, and
    /// `ord_q(s) = m`.
    pub fn new(q: u64, m: u64, s: u64) -> Result<Self> {
        if !is_prime(q) {
            return Err(Error::NotPrime(q));
        }
        if q >= 1 << 20 {
            return Err(Error::InvalidArgument(format!("q = {q} is beyond the supported range")));
        }
        if m < 2 {
            return Err(Error::InvalidArgument(format!("m = {m} must be at least 2")));
        }
        if (q - 1) % m != 0 {
            return Err(Error::OrderNotDivisor { q, m });
        }
        let actual = mult_order(s, q)?;
        if actual != m {
            return Err(Error::OrderMismatch { s: s % q, q, expected: m, actual });
        }
        let s = s % q;
        let s_pow = (0..m).map(|k| pow_mod(s, k, q) as u32).collect();
        Ok(Self { q: q as u32, m: m as u32, s: s as u32, s_pow })
    }

    /// Every `s` with `ord_q(s) = m`, in increasing order.
    pub fn all_s(q: u64, m: u64) -> Result<Vec<u64>> {
        if !is_prime(q) {
            return Err(Error::NotPrime(q));
        }
        if m < 2 || (q - 1) % m != 0 {
            return Err(Error::OrderNotDivisor { q, m });
        }
        Ok((1..q).filter(|&s| mult_order(s, q).ok() == Some(m)).collect())
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn s(&self) -> u32 {
        self.s
    }

    pub fn order(&self) -> usize {
        self.q as usize * self.m as usize
    }

    /// `s^k mod q` for any `k` (reduced mod `m`).
    pub fn s_pow(&self, k: u32) -> u32 {
        self.s_pow[(k % self.m) as usize]
    }

    pub fn x(&self) -> Element {
        Element::new(1 % self.m, 0)
    }

    pub fn y(&self) -> Element {
        Element::new(0, 1)
    }

    pub fn element(&self, x: i64, y: i64) -> Element {
        Element::new(x.rem_euclid(self.m as i64) as u32, y.rem_euclid(self.q as i64) as u32)
    }

    pub fn is_valid(&self, g: Element) -> bool {
        g.x < self.m && g.y < self.q
    }

    /// `(i1, j1)(i2, j2) = (i1 + i2, j1 s^i2 + j2)`, from `y^j x^i = x^i y^(j s^i)`.
    pub fn multiply(&self, g: Element, h: Element) -> Element {
        let q = self.q as u64;
        let y = (g.y as u64 * self.s_pow(h.x) as u64 + h.y as u64) % q;
        Element::new((g.x + h.x) % self.m, y as u32)
    }

    pub fn inverse(&self, g: Element) -> Element {
        let x = (self.m - g.x) % self.m;
        let q = self.q as u64;
        let y = (q - (g.y as u64 * self.s_pow(x) as u64) % q) % q;
        Element::new(x, y as u32)
    }

    pub fn pow(&self, g: Element, k: u64) -> Element {
        (0..k).fold(Element::IDENTITY, |acc, _| self.multiply(acc, g))
    }

    /// Ordered product of a slice of elements.
    pub fn product(&self, elems: &[Element]) -> Element {
        elems.iter().fold(Element::IDENTITY, |acc, &g| self.multiply(acc, g))
    }

    pub fn element_order(&self, g: Element) -> u64 {
        let mut acc = g;
        let mut k = 1;
        while acc != Element::IDENTITY {
            acc = self.multiply(acc, g);
            k += 1;
        }
        k
    }

    /// Index of `g` in the `(i, j)` lexicographic enumeration: `i * q + j`.
    pub fn index(&self, g: Element) -> usize {
        g.x as usize * self.q as usize + g.y as usize
    }

    pub fn element_at(&self, index: usize) -> Element {
        let q = self.q as usize;
        Element::new((index / q) as u32, (index % q) as u32)
    }

    pub fn elements(&self) -> impl Iterator<Item = Element> + '_ {
        (0..self.order()).map(|i| self.element_at(i))
    }

    pub fn to_cayley(&self) -> Result<CayleyGroup> {
        self.to_cayley_capped(DEFAULT_CAYLEY_CAP)
    }

    pub fn to_cayley_capped(&self, cap: usize) -> Result<CayleyGroup> {
        let n = self.order();
        if n > cap {
            return Err(Error::OrderCap { order: n, cap });
        }
        let mut table = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                let p = self.multiply(self.element_at(a), self.element_at(b));
                table.push(self.index(p) as u16);
            }
        }
        CayleyGroup::from_table_unchecked(n, table, 0)
    }
}

impl fmt::Display for GroupParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "C_{} x|_{} C_{}", self.q, self.s, self.m)
    }
}
