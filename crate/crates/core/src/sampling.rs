//! Seed-determined query generation and the enumeration baseline used to
//! check the formula-based neighbor paths against a full sequence walk.

use crate::arith::{gcd, Fraction, Order};
use crate::Family;

/// SplitMix64: small, fast, and stable across platforms, which is all the
/// reproducible benchmarks need.
#[derive(Clone, Debug)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform value in `[lo, hi]` (by rejection on the top range).
    pub fn next_in(&mut self, lo: i64, hi: i64) -> i64 {
        debug_assert!(lo <= hi);
        let span = (hi - lo + 1) as u64;
        let zone = u64::MAX - u64::MAX % span;
        loop {
            let v = self.next_u64();
            if v < zone {
                return lo + (v % span) as i64;
            }
        }
    }
}

/// Infinite stream of random non-endpoint members of the chosen sequence:
/// a random denominator, then a random coprime numerator by rejection.
#[derive(Clone, Debug)]
pub struct QuerySampler {
    rng: SplitMix64,
    family: Family,
    m: Order,
}

impl QuerySampler {
    pub fn new(family: Family, m: Order, seed: u64) -> Self {
        QuerySampler {
            rng: SplitMix64::new(seed),
            family,
            m,
        }
    }
}

impl Iterator for QuerySampler {
    type Item = Fraction;

    fn next(&mut self) -> Option<Fraction> {
        let m = self.m.get();
        loop {
            let k = match self.family {
                Family::Classic => self.rng.next_in(2, m),
                Family::Boolean => self.rng.next_in(2, 2 * m),
            };
            let (lo, hi) = match self.family {
                Family::Classic => (1, k - 1),
                Family::Boolean => (1.max(k - m), m.min(k - 1)),
            };
            let h = self.rng.next_in(lo, hi);
            if gcd(h, k) == 1 {
                return Some(Fraction::new(h, k).expect("sampled fraction is valid"));
            }
        }
    }
}

/// Answer a batch of neighbor queries by walking the full sequence once.
///
/// Every query must be a non-endpoint member; the result pairs up with the
/// input order. This is the honest O(|sequence|) baseline: one pass total,
/// not one pass per query.
pub fn neighbors_by_enumeration(
    family: Family,
    m: Order,
    queries: &[Fraction],
) -> Vec<(Fraction, Fraction)> {
    let mut order: Vec<usize> = (0..queries.len()).collect();
    order.sort_by_key(|&i| queries[i]);
    let mut out = vec![(Fraction::ZERO, Fraction::ZERO); queries.len()];
    let mut it = family.iter(m);
    let mut prev = it.next().expect("sequence is non-empty");
    let mut cur = it.next().expect("sequence has at least two entries");
    let mut ptr = 0;
    loop {
        let next = it.next();
        while ptr < order.len() && queries[order[ptr]] == cur {
            let succ = next.expect("queries must not include the last element");
            out[order[ptr]] = (prev, succ);
            ptr += 1;
        }
        match next {
            Some(n) => {
                prev = cur;
                cur = n;
            }
            None => break,
        }
    }
    assert_eq!(ptr, order.len(), "some queries were not sequence members");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{farey, fbm};

    fn ord(m: i64) -> Order {
        Order::new(m).unwrap()
    }

    #[test]
    fn sampler_is_deterministic() {
        let a: Vec<_> = QuerySampler::new(Family::Classic, ord(50), 7).take(20).collect();
        let b: Vec<_> = QuerySampler::new(Family::Classic, ord(50), 7).take(20).collect();
        let c: Vec<_> = QuerySampler::new(Family::Classic, ord(50), 8).take(20).collect();
        assert_eq!(a, b);
        assert_ne!(a, c);
    }

    #[test]
    fn sampler_yields_interior_members() {
        let m = ord(30);
        for f in QuerySampler::new(Family::Classic, m, 1).take(200) {
            assert!(farey::is_member(f, m));
            assert!(f != Fraction::ZERO && f != Fraction::ONE);
        }
        for f in QuerySampler::new(Family::Boolean, m, 2).take(200) {
            assert!(fbm::is_member(f, m));
            assert!(f != Fraction::ZERO && f != Fraction::ONE);
        }
    }

    #[test]
    fn enumeration_baseline_matches_adjacency() {
        let m = ord(40);
        for family in [Family::Classic, Family::Boolean] {
            let seq = family.sequence(m);
            let queries: Vec<_> = seq[1..seq.len() - 1].to_vec();
            let got = neighbors_by_enumeration(family, m, &queries);
            for (i, &(p, s)) in got.iter().enumerate() {
                assert_eq!(p, seq[i]);
                assert_eq!(s, seq[i + 2]);
            }
        }
    }
}
