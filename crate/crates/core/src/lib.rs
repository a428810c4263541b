//! Exact arithmetic for Farey sequences and their Boolean-lattice
//! subsequences.
//!
//! The crate constructs the classical sequence F_m and the subsequence
//! F(B(2m),m) of F_2m, answers predecessor/successor queries in O(log m)
//! by solving a congruence inside a window whose length equals the modulus,
//! realizes the ten monotone bijections connecting the two families,
//! evaluates the Mobius-sum generating functions for the halves of F_m, and
//! verifies committee decision rules over central hyperplane arrangements,
//! where the achievable vote ratios are exactly such a subsequence.
//!
//! Every formula path has a brute-force twin (`farey::sequence`,
//! `fbm::sequence`, subset enumeration) that the test suites compare
//! against exhaustively. All arithmetic is exact; orders up to 2^30 are
//! supported.

pub mod arith;
pub mod committee;
mod error;
pub mod farey;
pub mod fbm;
pub mod gf;
pub mod maps;
pub mod sampling;

pub use arith::{extended_gcd, mediant, mobius, solve_congruence, Fraction, Order, MAX_ORDER};
pub use committee::{CentralArrangement, Classification, CommitteeReport, RegionSubset};
pub use error::{Error, Result};
pub use farey::NeighborReport;
pub use fbm::Half;
pub use gf::{BivarPoly, Method, UnivarPoly};
pub use maps::MapId;

use std::fmt;

/// The two sequence families the library works with.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    /// The classical Farey sequence F_m.
    Classic,
    /// The subsequence F(B(2m),m) of F_2m.
    Boolean,
}

impl Family {
    pub fn token(self) -> &'static str {
        match self {
            Family::Classic => "fm",
            Family::Boolean => "fbm",
        }
    }

    pub fn from_token(s: &str) -> Option<Family> {
        match s {
            "fm" => Some(Family::Classic),
            "fbm" => Some(Family::Boolean),
            _ => None,
        }
    }

    pub fn sequence(self, m: Order) -> Vec<Fraction> {
        match self {
            Family::Classic => farey::sequence(m),
            Family::Boolean => fbm::sequence(m),
        }
    }

    pub fn is_member(self, f: Fraction, m: Order) -> bool {
        match self {
            Family::Classic => farey::is_member(f, m),
            Family::Boolean => fbm::is_member(f, m),
        }
    }

    pub fn pred(self, f: Fraction, m: Order) -> Result<NeighborReport> {
        match self {
            Family::Classic => farey::pred(f, m),
            Family::Boolean => fbm::pred(f, m),
        }
    }

    pub fn succ(self, f: Fraction, m: Order) -> Result<NeighborReport> {
        match self {
            Family::Classic => farey::succ(f, m),
            Family::Boolean => fbm::succ(f, m),
        }
    }

    /// Lazy ascending walk of the full sequence via the next-term
    /// recurrence (the Boolean family filters a walk of F_2m).
    pub fn iter(self, m: Order) -> Box<dyn Iterator<Item = Fraction>> {
        match self {
            Family::Classic => Box::new(farey::Stream::from_origin(m)),
            Family::Boolean => {
                let limit = 2 * m.get();
                let stream = farey::Stream::with_limit(
                    limit,
                    Fraction::ZERO,
                    Fraction::new(1, limit).expect("1/(2m) is valid"),
                )
                .expect("origin seeds are adjacent");
                Box::new(stream.filter(move |&f| fbm::is_member(f, m)))
            }
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Classic => write!(f, "F_m"),
            Family::Boolean => write!(f, "F(B(2m),m)"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_tokens() {
        assert_eq!(Family::from_token("fm"), Some(Family::Classic));
        assert_eq!(Family::from_token("fbm"), Some(Family::Boolean));
        assert_eq!(Family::from_token("f"), None);
        assert_eq!(Family::Classic.token(), "fm");
    }

    #[test]
    fn iter_matches_sequence() {
        for family in [Family::Classic, Family::Boolean] {
            for m in [2, 3, 5, 8, 13] {
                let m = Order::new(m).unwrap();
                let walked: Vec<_> = family.iter(m).collect();
                assert_eq!(walked, family.sequence(m), "{family} order {m}");
            }
        }
    }
}
