//! The ten monotone bijections connecting F_m, the two halfsequences of
//! F(B(2m),m), and the full subsequence. Each map is a single substitution
//! on `h/k` whose image is automatically reduced; applying one checks that
//! the argument lies in the declared source sequence.

use crate::arith::{Fraction, Order};
use crate::error::{Error, Result};
use crate::fbm::Half;
use crate::{farey, fbm};

/// Identifier of one bijection. CLI names follow the usual equation-number
/// shorthand (`eq10` ... `eq21`, `dual_fbm`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MapId {
    /// F_m -> F_m, `h/k ↦ (k-h)/k` (order-reversing)
    DualFm,
    /// left half -> F_m, `h/k ↦ h/(k-h)` (order-preserving)
    LeftToFm,
    /// F_m -> left half, `h/k ↦ h/(k+h)` (order-preserving)
    FmToLeft,
    /// right half -> F_m, `h/k ↦ (2h-k)/h` (order-preserving)
    RightToFm,
    /// F_m -> right half, `h/k ↦ k/(2k-h)` (order-preserving)
    FmToRight,
    /// left half -> F_m, `h/k ↦ (k-2h)/(k-h)` (order-reversing)
    LeftToFmRev,
    /// F_m -> left half, `h/k ↦ (k-h)/(2k-h)` (order-reversing)
    FmToLeftRev,
    /// right half -> F_m, `h/k ↦ (k-h)/h` (order-reversing)
    RightToFmRev,
    /// F_m -> right half, `h/k ↦ k/(k+h)` (order-reversing)
    FmToRightRev,
    /// F(B(2m),m) -> F(B(2m),m), `h/k ↦ (k-h)/k` (order-reversing)
    DualFbm,
}

/// Which sequence a map reads from or writes to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SequenceRef {
    Classic,
    BooleanHalf(Half),
    Boolean,
}

impl SequenceRef {
    pub fn contains(self, f: Fraction, m: Order) -> bool {
        match self {
            SequenceRef::Classic => farey::is_member(f, m),
            SequenceRef::BooleanHalf(Half::Left) => fbm::is_member(f, m) && f <= Fraction::HALF,
            SequenceRef::BooleanHalf(Half::Right) => fbm::is_member(f, m) && f >= Fraction::HALF,
            SequenceRef::Boolean => fbm::is_member(f, m),
        }
    }

    pub fn materialize(self, m: Order) -> Vec<Fraction> {
        match self {
            SequenceRef::Classic => farey::sequence(m),
            SequenceRef::BooleanHalf(h) => fbm::half_sequence(m, h),
            SequenceRef::Boolean => fbm::sequence(m),
        }
    }
}

pub const ALL_MAPS: [MapId; 10] = [
    MapId::DualFm,
    MapId::LeftToFm,
    MapId::FmToLeft,
    MapId::RightToFm,
    MapId::FmToRight,
    MapId::LeftToFmRev,
    MapId::FmToLeftRev,
    MapId::RightToFmRev,
    MapId::FmToRightRev,
    MapId::DualFbm,
];

impl MapId {
    pub fn is_order_reversing(self) -> bool {
        matches!(
            self,
            MapId::DualFm
                | MapId::LeftToFmRev
                | MapId::FmToLeftRev
                | MapId::RightToFmRev
                | MapId::FmToRightRev
                | MapId::DualFbm
        )
    }

    /// The map this one composes with to the identity (on either side).
    pub fn inverse(self) -> MapId {
        match self {
            MapId::DualFm => MapId::DualFm,
            MapId::LeftToFm => MapId::FmToLeft,
            MapId::FmToLeft => MapId::LeftToFm,
            MapId::RightToFm => MapId::FmToRight,
            MapId::FmToRight => MapId::RightToFm,
            MapId::LeftToFmRev => MapId::FmToLeftRev,
            MapId::FmToLeftRev => MapId::LeftToFmRev,
            MapId::RightToFmRev => MapId::FmToRightRev,
            MapId::FmToRightRev => MapId::RightToFmRev,
            MapId::DualFbm => MapId::DualFbm,
        }
    }

    pub fn source(self) -> SequenceRef {
        match self {
            MapId::DualFm | MapId::FmToLeft | MapId::FmToRight | MapId::FmToLeftRev
            | MapId::FmToRightRev => SequenceRef::Classic,
            MapId::LeftToFm | MapId::LeftToFmRev => SequenceRef::BooleanHalf(Half::Left),
            MapId::RightToFm | MapId::RightToFmRev => SequenceRef::BooleanHalf(Half::Right),
            MapId::DualFbm => SequenceRef::Boolean,
        }
    }

    pub fn target(self) -> SequenceRef {
        match self {
            MapId::DualFm | MapId::LeftToFm | MapId::RightToFm | MapId::LeftToFmRev
            | MapId::RightToFmRev => SequenceRef::Classic,
            MapId::FmToLeft | MapId::FmToLeftRev => SequenceRef::BooleanHalf(Half::Left),
            MapId::FmToRight | MapId::FmToRightRev => SequenceRef::BooleanHalf(Half::Right),
            MapId::DualFbm => SequenceRef::Boolean,
        }
    }

    pub fn cli_name(self) -> &'static str {
        match self {
            MapId::DualFm => "eq10",
            MapId::LeftToFm => "eq11",
            MapId::FmToLeft => "eq12",
            MapId::RightToFmRev => "eq13",
            MapId::FmToRightRev => "eq14",
            MapId::LeftToFmRev => "eq15",
            MapId::RightToFm => "eq16",
            MapId::FmToRight => "eq20",
            MapId::FmToLeftRev => "eq21",
            MapId::DualFbm => "dual_fbm",
        }
    }

    pub fn from_cli_name(name: &str) -> Option<MapId> {
        ALL_MAPS.into_iter().find(|m| m.cli_name() == name)
    }

    /// Apply the substitution to `f`, checking the source domain first.
    pub fn apply(self, f: Fraction, m: Order) -> Result<Fraction> {
        if !self.source().contains(f, m) {
            return Err(Error::MapDomain { f, m: m.get() });
        }
        let (h, k) = (f.numer(), f.denom());
        let image = match self {
            MapId::DualFm | MapId::DualFbm => Fraction::new(k - h, k),
            MapId::LeftToFm => Fraction::new(h, k - h),
            MapId::FmToLeft => Fraction::new(h, k + h),
            MapId::RightToFm => Fraction::new(2 * h - k, h),
            MapId::FmToRight => Fraction::new(k, 2 * k - h),
            MapId::LeftToFmRev => Fraction::new(k - 2 * h, k - h),
            MapId::FmToLeftRev => Fraction::new(k - h, 2 * k - h),
            MapId::RightToFmRev => Fraction::new(k - h, h),
            MapId::FmToRightRev => Fraction::new(k, k + h),
        }?;
        debug_assert!(
            self.target().contains(image, m),
            "{self:?} sent {f} outside its target"
        );
        Ok(image)
    }
}
