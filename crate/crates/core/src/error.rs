use crate::arith::Fraction;
use crate::Family;

/// Crate-wide error type.
#[derive(Debug, Clone, thiserror::Error)]
pub enum Error {
    #[error("denominator must be positive, got {0}")]
    NonPositiveDenominator(i64),
    #[error("numerator must be non-negative, got {0}")]
    NegativeNumerator(i64),
    #[error("numerator {h} exceeds denominator {k}; fractions live in [0/1, 1/1]")]
    ImproperFraction { h: i64, k: i64 },
    #[error("cannot parse {0:?} as a fraction; expected \"h/k\" in base 10")]
    ParseFraction(String),
    #[error("order must satisfy 2 <= m <= 2^30, got {0}")]
    OrderOutOfRange(i64),
    #[error("coefficient {c} shares a factor with modulus {modulus}; congruence has no unique solution")]
    NotCoprime { c: i64, modulus: i64 },
    #[error("interval [{lo}, {hi}] must have length equal to modulus {modulus}")]
    IntervalModulusMismatch { lo: i64, hi: i64, modulus: i64 },
    #[error("{f} is not a member of {family} of order {m}")]
    NotAMember { f: Fraction, family: Family, m: i64 },
    #[error("{0} has no predecessor")]
    NoPredecessor(Fraction),
    #[error("{0} has no successor")]
    NoSuccessor(Fraction),
    #[error("seeds {0} and {1} are not adjacent")]
    NonAdjacentSeeds(Fraction, Fraction),
    #[error("form guard violated: {0}")]
    FormGuard(String),
    #[error("{f} is not in the source sequence of the requested map at order {m}")]
    MapDomain { f: Fraction, m: i64 },
    #[error("arrangement: {0}")]
    Arrangement(String),
    #[error("unknown hyperplane id {0}")]
    UnknownHyperplane(usize),
    #[error("region subset must be non-empty")]
    EmptySubset,
    #[error("region index {index} out of range for {regions} regions")]
    RegionIndex { index: usize, regions: usize },
    #[error("duplicate region index {0}")]
    DuplicateRegionIndex(usize),
    #[error("exhaustive subset enumeration is capped at {max} regions; arrangement has {got}")]
    TooManyRegions { got: usize, max: usize },
    #[error("pattern vectors must all share one dimension")]
    DimensionMismatch,
    #[error("inner product with representative {0} is exactly zero; inputs must be in general position")]
    DegenerateInnerProduct(usize),
}

pub type Result<T> = std::result::Result<T, Error>;
