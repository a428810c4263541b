//! Mobius-sum coprimality counting and the two bivariate generating
//! functions enumerating the open halves of F_m, each computable either by
//! direct enumeration or by the Mobius closed form. Coefficients are exact
//! integers throughout; the closed forms are evaluated as truncated formal
//! power series whose every factor except the leading geometric one is an
//! exact finite sum.

use std::collections::BTreeMap;
use std::fmt;

use crate::arith::{ceil_div, gcd, mobius, Fraction, Order};
use crate::farey;

/// Sparse univariate integer polynomial in `y`; canonical form stores no
/// zero coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct UnivarPoly {
    coeffs: BTreeMap<u64, i64>,
}

impl UnivarPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn add_term(&mut self, exp: u64, coeff: i64) {
        if coeff == 0 {
            return;
        }
        let slot = self.coeffs.entry(exp).or_insert(0);
        *slot += coeff;
        if *slot == 0 {
            self.coeffs.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (u64, i64)> + '_ {
        self.coeffs.iter().map(|(&e, &c)| (e, c))
    }

    /// Value at `y = 1`: the plain sum of coefficients.
    pub fn eval_at_one(&self) -> i64 {
        self.coeffs.values().sum()
    }
}

/// Sparse bivariate integer polynomial in `x, y`, keyed by exponent pair
/// `(dx, dy)`; canonical form stores no zero coefficients and equality is
/// coefficient-map equality.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BivarPoly {
    coeffs: BTreeMap<(u64, u64), i64>,
}

impl BivarPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn add_term(&mut self, dx: u64, dy: u64, coeff: i64) {
        if coeff == 0 {
            return;
        }
        let slot = self.coeffs.entry((dx, dy)).or_insert(0);
        *slot += coeff;
        if *slot == 0 {
            self.coeffs.remove(&(dx, dy));
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = ((u64, u64), i64)> + '_ {
        self.coeffs.iter().map(|(&e, &c)| (e, c))
    }

    pub fn coeff(&self, dx: u64, dy: u64) -> i64 {
        self.coeffs.get(&(dx, dy)).copied().unwrap_or(0)
    }

    /// Value at `x = y = 1`: the plain sum of coefficients.
    pub fn eval_at_ones(&self) -> i64 {
        self.coeffs.values().sum()
    }

    pub fn add_scaled(&mut self, other: &BivarPoly, scale: i64) {
        for ((dx, dy), c) in other.terms() {
            self.add_term(dx, dy, c * scale);
        }
    }

    /// Product with every term of x-degree above `x_cap` or y-degree above
    /// `y_cap` discarded. Degrees only add, so truncating at each step is
    /// exact for the kept range.
    pub fn mul_truncated(&self, other: &BivarPoly, x_cap: u64, y_cap: u64) -> BivarPoly {
        let mut out = BivarPoly::zero();
        for ((ax, ay), ac) in self.terms() {
            for ((bx, by), bc) in other.terms() {
                let (dx, dy) = (ax + bx, ay + by);
                if dx <= x_cap && dy <= y_cap {
                    out.add_term(dx, dy, ac * bc);
                }
            }
        }
        out
    }

    pub fn max_x_degree(&self) -> u64 {
        self.coeffs.keys().map(|&(dx, _)| dx).max().unwrap_or(0)
    }

    pub fn max_y_degree(&self) -> u64 {
        self.coeffs.keys().map(|&(_, dy)| dy).max().unwrap_or(0)
    }
}

impl fmt::Display for BivarPoly {
    /// Terms sorted by `(dy, dx)` ascending, rendered as `c*x^a*y^b` with
    /// unit coefficients and zero exponents omitted, joined by `" + "`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut terms: Vec<_> = self.terms().collect();
        terms.sort_by_key(|&((dx, dy), _)| (dy, dx));
        let rendered: Vec<String> = terms
            .into_iter()
            .map(|((dx, dy), c)| {
                let mut parts = Vec::new();
                if c != 1 || (dx == 0 && dy == 0) {
                    parts.push(c.to_string());
                }
                for (sym, e) in [("x", dx), ("y", dy)] {
                    match e {
                        0 => {}
                        1 => parts.push(sym.to_string()),
                        _ => parts.push(format!("{sym}^{e}")),
                    }
                }
                parts.join("*")
            })
            .collect();
        write!(f, "{}", rendered.join(" + "))
    }
}

/// All positive divisors of `n`, ascending.
fn divisors(n: i64) -> Vec<i64> {
    assert!(n >= 1);
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    small
}

/// Number of integers in `[lo, hi]` coprime to `i`, by Mobius inclusion-
/// exclusion over the divisors of `i`: the multiples of `d` in the interval
/// number `floor(hi/d) - floor((lo-1)/d)`.
pub fn coprime_count(i: i64, lo: i64, hi: i64) -> i64 {
    assert!(i >= 1, "modulus must be positive");
    assert!(lo <= hi + 1, "interval may be empty but not inverted");
    if lo > hi {
        return 0;
    }
    let mut total: i64 = 0;
    for d in divisors(i) {
        let mu = mobius(d);
        if mu != 0 {
            total += mu * (hi.div_euclid(d) - (lo - 1).div_euclid(d));
        }
    }
    debug_assert!(total >= 0);
    total
}

/// The polynomial `Σ y^j` over `j` in `[lo, hi]` coprime to `i`, computed
/// via the Mobius closed form (each divisor contributes a finite geometric
/// sum stepping by `d`) and asserted against direct enumeration.
pub fn coprime_powersum(i: i64, lo: i64, hi: i64) -> UnivarPoly {
    assert!(i >= 1, "modulus must be positive");
    assert!(1 <= lo && lo <= hi + 1, "need 1 <= lo <= hi + 1");
    let mut closed = UnivarPoly::zero();
    if lo <= hi {
        for d in divisors(i) {
            let mu = mobius(d);
            if mu == 0 {
                continue;
            }
            // (y^(d*ceil(lo/d)) - y^(d*(floor(hi/d)+1))) / (1 - y^d)
            let t0 = ceil_div(lo as i128, d as i128) as i64;
            let t1 = hi.div_euclid(d);
            for t in t0..=t1 {
                closed.add_term((d * t) as u64, mu);
            }
        }
    }
    let mut direct = UnivarPoly::zero();
    for j in lo..=hi {
        if gcd(i, j) == 1 {
            direct.add_term(j as u64, 1);
        }
    }
    assert_eq!(closed, direct, "closed form disagrees with enumeration");
    closed
}

/// How to compute a generating function.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    /// Walk the fractions and sum `x^h y^k` directly.
    Enumerate,
    /// Evaluate the Mobius closed form as a truncated formal power series.
    ClosedForm,
}

/// Slack kept beyond the declared degree caps; the closed-form evaluation
/// asserts that everything in the slack window cancels to zero.
const CAP_PAD: u64 = 16;

fn enumerate_half(m: Order, lower: bool) -> BivarPoly {
    let mut out = BivarPoly::zero();
    for f in farey::sequence(m) {
        let keep = if lower {
            Fraction::ZERO < f && f < Fraction::HALF
        } else {
            Fraction::HALF < f && f < Fraction::ONE
        };
        if keep {
            out.add_term(f.numer() as u64, f.denom() as u64, 1);
        }
    }
    out
}

/// Finite geometric sum `Σ_{t=t0..=t1} x^(dx*t) y^(dy*t)`.
fn geometric(dx: u64, dy: u64, t0: u64, t1: u64) -> BivarPoly {
    let mut out = BivarPoly::zero();
    for t in t0..=t1 {
        out.add_term(dx * t, dy * t, 1);
    }
    out
}

fn closed_form_half(m: Order, lower: bool, x_cap: u64, y_cap: u64) -> BivarPoly {
    let mm = m.get();
    let x_int = x_cap + CAP_PAD;
    let y_int = y_cap + CAP_PAD;
    let mut acc = BivarPoly::zero();
    let d_max = ceil_div(mm as i128, 2) - 1;
    for d in 1..=d_max as i64 {
        let mu = mobius(d);
        if mu == 0 {
            continue;
        }
        let du = d as u64;
        let c = ceil_div(mm as i128, 2 * d as i128) as u64;
        let floor_md = (mm / d) as u64;
        // shared factor: (x^d y^2d - (x^d y^2d)^c) / (1 - x^d y^2d)
        let head = geometric(du, 2 * du, 1, c - 1);
        let bracket = if lower {
            // minus (x^d - x^(dc)) / (1 - x^d) * y^(d*floor(m/d))
            let mut tail = geometric(du, 0, 1, c - 1);
            tail = tail.mul_truncated(&geometric(0, du * floor_md, 1, 1), x_int, y_int);
            let mut b = head;
            b.add_scaled(&tail, -1);
            b
        } else {
            // minus (x^(d(floor(m/d)-c+1)) - x^(d*floor(m/d))) / (1 - x^d)
            //   * y^(d*floor(m/d))
            let mut tail = geometric(du, 0, floor_md - c + 1, floor_md - 1);
            tail = tail.mul_truncated(&geometric(0, du * floor_md, 1, 1), x_int, y_int);
            let mut b = head;
            b.add_scaled(&tail, -1);
            b
        };
        // leading geometric series: y^d/(1-y^d) for the lower half,
        // (xy)^d/(1-(xy)^d) for the upper; infinite, so truncated
        let lead = if lower {
            geometric(0, du, 1, y_int / du)
        } else {
            geometric(du, du, 1, x_int.min(y_int) / du)
        };
        let term = lead.mul_truncated(&bracket, x_int, y_int);
        acc.add_scaled(&term, mu);
    }
    // everything the Mobius sum leaves in the slack window must cancel
    assert!(
        acc.terms().all(|((dx, dy), _)| dx <= x_cap && dy <= y_cap),
        "closed form left coefficients beyond the degree caps"
    );
    acc
}

/// Generating function `Σ x^h y^k` over the fractions of F_m strictly
/// between 0/1 and 1/2.
pub fn lower(m: Order, method: Method) -> BivarPoly {
    match method {
        Method::Enumerate => enumerate_half(m, true),
        Method::ClosedForm => {
            let x_cap = (ceil_div(m.get() as i128, 2) - 1) as u64;
            closed_form_half(m, true, x_cap, m.get() as u64)
        }
    }
}

/// Generating function `Σ x^h y^k` over the fractions of F_m strictly
/// between 1/2 and 1/1.
pub fn upper(m: Order, method: Method) -> BivarPoly {
    match method {
        Method::Enumerate => enumerate_half(m, false),
        Method::ClosedForm => {
            closed_form_half(m, false, m.get() as u64 - 1, m.get() as u64)
        }
    }
}
