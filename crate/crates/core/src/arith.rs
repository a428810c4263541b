//! Exact integer arithmetic shared by every other module: reduced fractions
//! on the unit interval, sequence orders, Bezout solvers, congruence windows,
//! and the Mobius function.
//!
//! Everything here is a pure function over immutable values. All intermediate
//! products are taken in 128 bits so that no supported input can wrap.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Largest supported sequence order.
///
/// Neighbor queries multiply values of size O(2m); with m capped at 2^30
/// every product fits comfortably in 128 bits (and almost always in 64).
pub const MAX_ORDER: i64 = 1 << 30;

/// Non-negative greatest common divisor.
pub fn gcd(mut a: i64, mut b: i64) -> i64 {
    a = a.abs();
    b = b.abs();
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Extended Euclidean algorithm: returns `(g, s, t)` with
/// `s*a + t*b == g == gcd(a, b)` (g non-negative).
pub fn extended_gcd(a: i64, b: i64) -> (i64, i64, i64) {
    let (mut r0, mut r1) = (a as i128, b as i128);
    let (mut s0, mut s1) = (1i128, 0i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    if r0 < 0 {
        (r0, s0, t0) = (-r0, -s0, -t0);
    }
    (r0 as i64, s0 as i64, t0 as i64)
}

/// The unique `x` in `[lo, hi]` with `c*x ≡ r (mod modulus)`.
///
/// Requires `gcd(c, modulus) == 1` and `hi - lo + 1 == modulus`, which force
/// existence and uniqueness. For `modulus == 1` the interval is a singleton
/// and `lo` is returned. The solution is found by a modular inverse and one
/// division; no scanning.
pub fn solve_congruence(c: i64, r: i64, modulus: i64, lo: i64, hi: i64) -> Result<i64> {
    if modulus < 1 || (hi as i128) - (lo as i128) + 1 != modulus as i128 {
        return Err(Error::IntervalModulusMismatch { lo, hi, modulus });
    }
    if modulus == 1 {
        return Ok(lo);
    }
    let c0 = c.rem_euclid(modulus);
    let (g, s, _) = extended_gcd(c0, modulus);
    if g != 1 {
        return Err(Error::NotCoprime { c, modulus });
    }
    let m = modulus as i128;
    let inv = (s as i128).rem_euclid(m);
    let x0 = (inv * (r as i128).rem_euclid(m)).rem_euclid(m);
    let x = lo as i128 + (x0 - lo as i128).rem_euclid(m);
    debug_assert!(lo as i128 <= x && x <= hi as i128);
    Ok(x as i64)
}

/// Mobius function via trial-division factorization.
///
/// Returns 0 if `n` has a squared prime factor, otherwise (-1)^(number of
/// prime factors).
pub fn mobius(n: i64) -> i64 {
    assert!(n >= 1, "mobius is defined on positive integers, got {n}");
    let mut n = n;
    let mut primes = 0;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return 0;
            }
            primes += 1;
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        primes += 1;
    }
    if primes % 2 == 0 {
        1
    } else {
        -1
    }
}

/// `ceil(num / den)` for positive `den`.
pub(crate) fn ceil_div(num: i128, den: i128) -> i128 {
    debug_assert!(den > 0);
    num.div_euclid(den) + if num.rem_euclid(den) != 0 { 1 } else { 0 }
}

/// Exact division; panics if `den` does not divide `num`.
pub(crate) fn exact_div(num: i128, den: i128) -> i64 {
    assert!(den != 0 && num % den == 0, "{num} is not divisible by {den}");
    i64::try_from(num / den).expect("quotient exceeds 64 bits")
}

/// A reduced fraction `h/k` with `0/1 <= h/k <= 1/1`.
///
/// Construction always canonicalizes, so `gcd(h, k) == 1` holds for every
/// value ever observed. The text form is exactly `"h/k"` in base 10.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Fraction {
    h: i64,
    k: i64,
}

impl Fraction {
    pub const ZERO: Fraction = Fraction { h: 0, k: 1 };
    pub const HALF: Fraction = Fraction { h: 1, k: 2 };
    pub const ONE: Fraction = Fraction { h: 1, k: 1 };

    /// Canonicalizing constructor: reduces by the gcd and checks bounds.
    pub fn new(h: i64, k: i64) -> Result<Fraction> {
        if k < 1 {
            return Err(Error::NonPositiveDenominator(k));
        }
        if h < 0 {
            return Err(Error::NegativeNumerator(h));
        }
        if h > k {
            return Err(Error::ImproperFraction { h, k });
        }
        let g = gcd(h, k);
        Ok(Fraction { h: h / g, k: k / g })
    }

    pub fn numer(self) -> i64 {
        self.h
    }

    pub fn denom(self) -> i64 {
        self.k
    }

    /// Reflection about 1/2: `h/k ↦ (k-h)/k`. Always reduced, since
    /// `gcd(k-h, k) == gcd(h, k)`.
    pub fn reflect(self) -> Fraction {
        Fraction {
            h: self.k - self.h,
            k: self.k,
        }
    }
}

impl Ord for Fraction {
    fn cmp(&self, other: &Self) -> Ordering {
        let lhs = self.h as i128 * other.k as i128;
        let rhs = other.h as i128 * self.k as i128;
        lhs.cmp(&rhs)
    }
}

impl PartialOrd for Fraction {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.h, self.k)
    }
}

impl fmt::Debug for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.h, self.k)
    }
}

impl FromStr for Fraction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Fraction> {
        let bad = || Error::ParseFraction(s.to_string());
        let (hs, ks) = s.split_once('/').ok_or_else(bad)?;
        let digits = |t: &str| !t.is_empty() && t.bytes().all(|b| b.is_ascii_digit());
        if !digits(hs) || !digits(ks) {
            return Err(bad());
        }
        let h = hs.parse::<i64>().map_err(|_| bad())?;
        let k = ks.parse::<i64>().map_err(|_| bad())?;
        Fraction::new(h, k)
    }
}

/// Mediant `(h+h')/(k+k')` of two fractions, reduced.
pub fn mediant(f: Fraction, g: Fraction) -> Fraction {
    let h = f.h as i128 + g.h as i128;
    let k = f.k as i128 + g.k as i128;
    Fraction::new(
        i64::try_from(h).expect("mediant numerator exceeds 64 bits"),
        i64::try_from(k).expect("mediant denominator exceeds 64 bits"),
    )
    .expect("mediant of valid fractions is valid")
}

/// The order of a Farey (sub)sequence; validated to `2 <= m <= 2^30`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub struct Order(i64);

impl Order {
    pub fn new(m: i64) -> Result<Order> {
        if (2..=MAX_ORDER).contains(&m) {
            Ok(Order(m))
        } else {
            Err(Error::OrderOutOfRange(m))
        }
    }

    pub fn get(self) -> i64 {
        self.0
    }
}

impl fmt::Display for Order {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}
