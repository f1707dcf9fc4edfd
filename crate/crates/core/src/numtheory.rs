//! Modular arithmetic over small primes: primality, multiplicative orders,
//! quadratic character and the quartic residue counts used by the
//! permutation-sum arguments.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};

/// An element of `Z_q`, always kept reduced.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Residue {
    value: u64,
    modulus: u64,
}

impl Residue {
    pub fn new(value: i64, modulus: u64) -> Self {
        assert!(modulus > 0, "modulus must be positive");
        let value = value.rem_euclid(modulus as i64) as u64;
        Self { value, modulus }
    }

    pub fn value(self) -> u64 {
        self.value
    }

    pub fn modulus(self) -> u64 {
        self.modulus
    }

    pub fn is_zero(self) -> bool {
        self.value == 0
    }

    pub fn pow(self, exp: u64) -> Self {
        Self {
            value: pow_mod(self.value, exp, self.modulus),
            modulus: self.modulus,
        }
    }

    fn check(self, other: Self) {
        assert_eq!(self.modulus, other.modulus, "residues with different moduli");
    }
}

impl fmt::Display for Residue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.value, self.modulus)
    }
}

impl Add for Residue {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        self.check(rhs);
        Self { value: (self.value + rhs.value) % self.modulus, modulus: self.modulus }
    }
}

impl Sub for Residue {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self.check(rhs);
        Self {
            value: (self.value + self.modulus - rhs.value) % self.modulus,
            modulus: self.modulus,
        }
    }
}

impl Mul for Residue {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        self.check(rhs);
        Self { value: mul_mod(self.value, rhs.value, self.modulus), modulus: self.modulus }
    }
}

impl Neg for Residue {
    type Output = Self;
    fn neg(self) -> Self {
        Self { value: (self.modulus - self.value) % self.modulus, modulus: self.modulus }
    }
}

#[inline]
pub fn mul_mod(a: u64, b: u64, n: u64) -> u64 {
    ((a as u128 * b as u128) % n as u128) as u64
}

pub fn pow_mod(mut base: u64, mut exp: u64, n: u64) -> u64 {
    if n == 1 {
        return 0;
    }
    let mut acc = 1u64;
    base %= n;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, n);
        }
        base = mul_mod(base, base, n);
        exp >>= 1;
    }
    acc
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Euler's totient by trial division. Only used on small arguments.
pub fn totient(mut n: u64) -> u64 {
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

/// Deterministic Miller-Rabin. The witness set below is exact for all
/// `n < 3.3 * 10^24`, which covers every `u64` input we accept.
pub fn is_prime(n: u64) -> bool {
    const WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for p in WITNESSES {
        if n % p == 0 {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut r = 0;
    while d % 2 == 0 {
        d /= 2;
        r += 1;
    }
    'witness: for a in WITNESSES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..r {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Least `m >= 1` with `s^m = 1 (mod q)`.
pub fn mult_order(s: u64, q: u64) -> Result<u64> {
    if q < 2 {
        return Err(Error::InvalidArgument(format!("modulus {q} must be at least 2")));
    }
    let s = s % q;
    if s == 0 {
        return Err(Error::InvalidArgument(format!("0 has no multiplicative order mod {q}")));
    }
    if gcd(s, q) != 1 {
        return Err(Error::InvalidArgument(format!("{s} is not a unit mod {q}")));
    }
    let mut acc = s;
    let mut order = 1;
    while acc != 1 {
        acc = mul_mod(acc, s, q);
        order += 1;
    }
    Ok(order)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum QuadraticClass {
    Zero,
    Qr,
    NonQr,
}

/// Quadratic character of `a` mod the odd prime `q` (Euler's criterion).
pub fn quadratic_class(a: u64, q: u64) -> QuadraticClass {
    let a = a % q;
    if a == 0 {
        QuadraticClass::Zero
    } else if q == 2 || pow_mod(a, (q - 1) / 2, q) == 1 {
        QuadraticClass::Qr
    } else {
        QuadraticClass::NonQr
    }
}

/// Number of solutions of `a z^2 - b w^4 = c` over `Z_q^2`, together with
/// the `3 sqrt(q)` window it is expected to fall in.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SolutionCount {
    pub count: u64,
    pub q: u64,
}

impl SolutionCount {
    pub fn bound(&self) -> f64 {
        3.0 * (self.q as f64).sqrt()
    }

    /// `|N - q| < 3 sqrt(q)`, evaluated exactly as `(N - q)^2 < 9q`.
    pub fn within_bound(&self) -> bool {
        let diff = self.count.abs_diff(self.q) as u128;
        diff * diff < 9 * self.q as u128
    }
}

fn check_quartic_modulus(q: u64) -> Result<()> {
    if !is_prime(q) {
        return Err(Error::NotPrime(q));
    }
    if q % 4 != 1 {
        return Err(Error::UnsupportedModulus { q, reason: "modulus must be 1 mod 4" });
    }
    Ok(())
}

fn check_unit(name: &str, v: u64, q: u64) -> Result<()> {
    if v % q == 0 {
        return Err(Error::InvalidArgument(format!("{name} must be a unit mod {q}")));
    }
    Ok(())
}

/// Direct `O(q^2)` count of `(z, w)` with `a z^2 - b w^4 = c (mod q)`.
pub fn count_quartic_solutions(a: u64, b: u64, c: u64, q: u64) -> Result<SolutionCount> {
    check_quartic_modulus(q)?;
    check_unit("a", a, q)?;
    check_unit("b", b, q)?;
    check_unit("c", c, q)?;
    let (a, b, c) = (a % q, b % q, c % q);
    let mut count = 0;
    for z in 0..q {
        let az2 = mul_mod(a, mul_mod(z, z, q), q);
        for w in 0..q {
            let bw4 = mul_mod(b, pow_mod(w, 4, q), q);
            if (az2 + q - bw4) % q == c {
                count += 1;
            }
        }
    }
    Ok(SolutionCount { count, q })
}

/// Solution counts of `a z^2 - b w^4 = c` for every `c` at once.
///
/// Squares and fourth powers are tabulated with multiplicity first, so a
/// sweep over all `(a, b, c)` costs `O(q^4)` instead of `O(q^5)`.
pub fn quartic_histogram(a: u64, b: u64, q: u64) -> Result<Vec<u64>> {
    check_quartic_modulus(q)?;
    check_unit("a", a, q)?;
    check_unit("b", b, q)?;
    let qs = q as usize;
    let mut squares = vec![0u64; qs];
    let mut fourths = vec![0u64; qs];
    for z in 0..q {
        squares[mul_mod(z, z, q) as usize] += 1;
        fourths[pow_mod(z, 4, q) as usize] += 1;
    }
    let mut hist = vec![0u64; qs];
    for (u, &su) in squares.iter().enumerate().filter(|(_, &n)| n > 0) {
        let au = mul_mod(a, u as u64, q);
        for (v, &fv) in fourths.iter().enumerate().filter(|(_, &n)| n > 0) {
            let bv = mul_mod(b, v as u64, q);
            hist[((au + q - bv) % q) as usize] += su * fv;
        }
    }
    Ok(hist)
}

/// Whether `{c + b w^4 : w in Z_q^*}` meets both the quadratic residues and
/// the non-residues.
pub fn biquartic_residue_classes(b: u64, c: u64, q: u64) -> Result<(bool, bool)> {
    check_quartic_modulus(q)?;
    if q < 13 {
        return Err(Error::InvalidArgument(format!("modulus {q} must be at least 13")));
    }
    check_unit("b", b, q)?;
    check_unit("c", c, q)?;
    let (mut has_qr, mut has_nonqr) = (false, false);
    for w in 1..q {
        let v = (c % q + mul_mod(b % q, pow_mod(w, 4, q), q)) % q;
        match quadratic_class(v, q) {
            QuadraticClass::Qr => has_qr = true,
            QuadraticClass::NonQr => has_nonqr = true,
            QuadraticClass::Zero => {}
        }
    }
    Ok((has_qr, has_nonqr))
}

/// Odd primes `p <= max` with `p = 1 (mod 4)`.
pub fn primes_one_mod_four(max: u64) -> impl Iterator<Item = u64> {
    (5..=max).filter(|&p| p % 4 == 1 && is_prime(p))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn trial_division(n: u64) -> bool {
        n >= 2 && (2..n).take_while(|d| d * d <= n).all(|d| n % d != 0)
    }

    #[test]
    fn primality_small() {
        assert!(is_prime(5));
        assert!(!is_prime(1));
        assert!(!is_prime(91));
        for n in 0..5000 {
            assert_eq!(is_prime(n), trial_division(n), "n = {n}");
        }
    }

    #[test]
    fn primality_large() {
        assert!(is_prime(2_305_843_009_213_693_951)); // 2^61 - 1
        assert!(!is_prime(3_215_031_751)); // strong pseudoprime to bases 2, 3, 5, 7
        assert!(is_prime(1_000_000_007));
    }

    #[test]
    fn orders() {
        assert_eq!(mult_order(4, 5).unwrap(), 2);
        assert_eq!(mult_order(2, 5).unwrap(), 4);
        assert_eq!(mult_order(1, 7).unwrap(), 1);
        assert_eq!(mult_order(3, 7).unwrap(), 6);
        assert!(matches!(mult_order(0, 7), Err(Error::InvalidArgument(_))));
        assert!(matches!(mult_order(14, 7), Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn order_divides_group_order() {
        for q in (3..=101).filter(|&q| is_prime(q)) {
            for s in 1..q {
                assert_eq!((q - 1) % mult_order(s, q).unwrap(), 0);
            }
        }
    }

    #[test]
    fn quadratic_classes() {
        assert_eq!(quadratic_class(0, 13), QuadraticClass::Zero);
        assert_eq!(quadratic_class(4, 5), QuadraticClass::Qr);
        assert_eq!(quadratic_class(2, 5), QuadraticClass::NonQr);
    }

    #[test]
    fn quadratic_class_matches_squares() {
        for q in [3u64, 5, 7, 11, 13, 17, 19] {
            let squares: Vec<u64> = (1..q).map(|z| z * z % q).collect();
            for a in 1..q {
                let expect = if squares.contains(&a) { QuadraticClass::Qr } else { QuadraticClass::NonQr };
                assert_eq!(quadratic_class(a, q), expect);
            }
        }
    }

    #[test]
    fn quadratic_character_is_multiplicative() {
        use QuadraticClass::*;
        for q in [3u64, 5, 7, 11, 13, 17, 19, 23] {
            for a in 1..q {
                for b in 1..q {
                    let expect = match (quadratic_class(a, q), quadratic_class(b, q)) {
                        (Qr, Qr) | (NonQr, NonQr) => Qr,
                        _ => NonQr,
                    };
                    assert_eq!(quadratic_class(a * b % q, q), expect);
                }
            }
        }
    }

    fn brute_quartic(a: u64, b: u64, c: u64, q: u64) -> u64 {
        let mut n = 0;
        for z in 0..q {
            for w in 0..q {
                let lhs = (a * z * z % q + q - b * (w * w % q) % q * (w * w % q) % q) % q;
                if lhs == c {
                    n += 1;
                }
            }
        }
        n
    }

    #[test]
    fn quartic_examples() {
        for (a, b, c, q) in [(1, 1, 1, 13), (1, 1, 1, 17), (2, 3, 5, 29)] {
            let got = count_quartic_solutions(a, b, c, q).unwrap();
            assert_eq!(got.count, brute_quartic(a, b, c, q));
            assert!(got.within_bound(), "{got:?}");
        }
    }

    #[test]
    fn quartic_errors() {
        assert!(matches!(count_quartic_solutions(1, 1, 1, 7), Err(Error::UnsupportedModulus { .. })));
        assert!(matches!(count_quartic_solutions(0, 1, 1, 13), Err(Error::InvalidArgument(_))));
        assert!(matches!(count_quartic_solutions(1, 13, 1, 13), Err(Error::InvalidArgument(_))));
        assert!(matches!(count_quartic_solutions(1, 1, 1, 21), Err(Error::NotPrime(21))));
    }

    #[test]
    fn histogram_agrees_with_direct_count() {
        for q in [5u64, 13, 17] {
            for a in 1..q {
                for b in 1..q {
                    let hist = quartic_histogram(a, b, q).unwrap();
                    for c in 1..q {
                        assert_eq!(hist[c as usize], brute_quartic(a, b, c, q));
                    }
                }
            }
        }
    }

    #[test]
    fn biquartic_examples() {
        assert_eq!(biquartic_residue_classes(1, 1, 13).unwrap(), (true, true));
        assert_eq!(biquartic_residue_classes(1, 1, 17).unwrap(), (true, true));
        assert_eq!(biquartic_residue_classes(3, 7, 29).unwrap(), (true, true));
        assert!(biquartic_residue_classes(1, 1, 5).is_err());
        assert!(biquartic_residue_classes(0, 1, 13).is_err());
    }

    #[test]
    fn residue_ops() {
        let a = Residue::new(-3, 7);
        assert_eq!(a.value(), 4);
        assert_eq!((a + Residue::new(5, 7)).value(), 2);
        assert_eq!((a - Residue::new(5, 7)).value(), 6);
        assert_eq!((a * Residue::new(2, 7)).value(), 1);
        assert_eq!((-a).value(), 3);
        assert_eq!(Residue::new(3, 7).pow(6).value(), 1);
    }

    #[test]
    fn counting_helpers() {
        assert_eq!(totient(1), 1);
        assert_eq!(totient(6), 2);
        assert_eq!(totient(10), 4);
        assert_eq!(binomial(11, 2), 55);
        assert_eq!(binomial(11, 5), 462);
        assert_eq!(primes_one_mod_four(30).collect::<Vec<_>>(), vec![5, 13, 17, 29]);
    }
}
