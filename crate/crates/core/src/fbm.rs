//! The Farey subsequence F(B(2m),m): the fractions `h/k` of F_2m with
//! `k-m <= h <= m`. Provides the reference enumeration, halfsequences,
//! congruence-window neighbor queries, closed-form special neighbors, and
//! the four runs of consecutive fractions around the endpoints and 1/2.

use crate::arith::{ceil_div, exact_div, solve_congruence, Fraction, Order};
use crate::error::{Error, Result};
use crate::farey::NeighborReport;
use crate::Family;

/// Which halfsequence a fraction is taken from. `1/2` belongs to both.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Half {
    /// fractions `<= 1/2`
    Left,
    /// fractions `>= 1/2`
    Right,
}

/// Membership test: reduced `h/k` is in F(B(2m),m) iff `k <= 2m` and
/// `k-m <= h <= m`.
pub fn is_member(f: Fraction, m: Order) -> bool {
    let (h, k) = (f.numer(), f.denom());
    let m = m.get();
    k <= 2 * m && k - m <= h && h <= m
}

fn require_member(f: Fraction, m: Order) -> Result<()> {
    if is_member(f, m) {
        Ok(())
    } else {
        Err(Error::NotAMember {
            f,
            family: Family::Boolean,
            m: m.get(),
        })
    }
}

/// Reference construction: filter of F_2m by the membership bounds, sorted
/// ascending.
pub fn sequence(m: Order) -> Vec<Fraction> {
    let mm = m.get();
    let mut out = Vec::new();
    for k in 1..=2 * mm {
        let lo = 0.max(k - mm);
        let hi = k.min(mm);
        for h in lo..=hi {
            if crate::arith::gcd(h, k) == 1 {
                out.push(Fraction::new(h, k).unwrap());
            }
        }
    }
    out.sort_unstable();
    out
}

/// One halfsequence of [`sequence`]. The two halves share `1/2`.
pub fn half_sequence(m: Order, half: Half) -> Vec<Fraction> {
    sequence(m)
        .into_iter()
        .filter(|f| match half {
            Half::Left => *f <= Fraction::HALF,
            Half::Right => *f >= Fraction::HALF,
        })
        .collect()
}

/// Order-reversing reflection of F(B(2m),m) onto itself: `h/k ↦ (k-h)/k`.
pub fn dual(f: Fraction) -> Fraction {
    f.reflect()
}

/// Predecessor of `f` in F(B(2m),m).
///
/// Dispatches on the half containing `f`; `1/2` itself is handled by the
/// left-half window (its right-half twin is reserved for [`succ`]). The
/// left case solves `(k-h)*a ≡ -1 (mod h)` in the length-h window ending at
/// `ceil(h*m/(k-h)) - 1`; the right case solves `k*a ≡ -1 (mod h)` on
/// `[m-h+1, m]`. Each case carries a denominator-side cross-check.
pub fn pred(f: Fraction, m: Order) -> Result<NeighborReport> {
    require_member(f, m)?;
    if f == Fraction::ZERO {
        return Err(Error::NoPredecessor(f));
    }
    let mm = m.get();
    if f == Fraction::ONE {
        // m/(m+1) precedes 1/1. The numerator window yields a = m on its
        // own; the denominator congruence has modulus k-h = 0 and is
        // skipped, so the b slot carries the denominator.
        return Ok(NeighborReport {
            neighbor: Fraction::new(mm, mm + 1)?,
            witness_a: mm,
            witness_b: mm + 1,
        });
    }
    let (h, k) = (f.numer(), f.denom());
    let kh = k - h;
    if f <= Fraction::HALF {
        let ta = ceil_div(h as i128 * mm as i128, kh as i128) as i64;
        let a = solve_congruence(kh, -1, h, ta - h, ta - 1)?;
        let via_a = Fraction::new(a, exact_div(k as i128 * a as i128 + 1, h as i128))?;
        let b = solve_congruence(h, 1, kh, mm - k + h + 1, mm)?;
        let via_b = Fraction::new(
            exact_div(h as i128 * b as i128 - 1, kh as i128),
            exact_div(k as i128 * b as i128 - 1, kh as i128),
        )?;
        assert_eq!(via_a, via_b, "predecessor routes disagree for {f} at order {mm}");
        Ok(NeighborReport {
            neighbor: via_a,
            witness_a: a,
            witness_b: b,
        })
    } else {
        let a = solve_congruence(k, -1, h, mm - h + 1, mm)?;
        let via_a = Fraction::new(a, exact_div(k as i128 * a as i128 + 1, h as i128))?;
        let tb = ceil_div(kh as i128 * mm as i128 + 2, h as i128) as i64;
        let b = solve_congruence(h, 1, kh, tb - k + h, tb - 1)?;
        let via_b = Fraction::new(
            exact_div(h as i128 * b as i128 - 1, kh as i128),
            exact_div(k as i128 * b as i128 - 1, kh as i128),
        )?;
        assert_eq!(via_a, via_b, "predecessor routes disagree for {f} at order {mm}");
        Ok(NeighborReport {
            neighbor: via_a,
            witness_a: a,
            witness_b: b,
        })
    }
}

/// Successor of `f` in F(B(2m),m); mirror of [`pred`] with the congruence
/// signs swapped. `1/2` is handled by the right-half window here.
pub fn succ(f: Fraction, m: Order) -> Result<NeighborReport> {
    require_member(f, m)?;
    if f == Fraction::ONE {
        return Err(Error::NoSuccessor(f));
    }
    let mm = m.get();
    if f == Fraction::ZERO {
        // 1/(m+1) succeeds 0/1. The denominator window yields b = m on its
        // own; the numerator congruence has modulus h = 0 and is skipped.
        return Ok(NeighborReport {
            neighbor: Fraction::new(1, mm + 1)?,
            witness_a: 1,
            witness_b: mm,
        });
    }
    let (h, k) = (f.numer(), f.denom());
    let kh = k - h;
    if f < Fraction::HALF {
        let ta = ceil_div(h as i128 * mm as i128 + 2, kh as i128) as i64;
        let a = solve_congruence(kh, 1, h, ta - h, ta - 1)?;
        let via_a = Fraction::new(a, exact_div(k as i128 * a as i128 - 1, h as i128))?;
        let b = solve_congruence(h, -1, kh, mm - k + h + 1, mm)?;
        let via_b = Fraction::new(
            exact_div(h as i128 * b as i128 + 1, kh as i128),
            exact_div(k as i128 * b as i128 + 1, kh as i128),
        )?;
        assert_eq!(via_a, via_b, "successor routes disagree for {f} at order {mm}");
        Ok(NeighborReport {
            neighbor: via_a,
            witness_a: a,
            witness_b: b,
        })
    } else {
        let a = solve_congruence(k, 1, h, mm - h + 1, mm)?;
        let via_a = Fraction::new(a, exact_div(k as i128 * a as i128 - 1, h as i128))?;
        let tb = ceil_div(kh as i128 * mm as i128, h as i128) as i64;
        let b = solve_congruence(h, -1, kh, tb - k + h, tb - 1)?;
        let via_b = Fraction::new(
            exact_div(h as i128 * b as i128 + 1, kh as i128),
            exact_div(k as i128 * b as i128 + 1, kh as i128),
        )?;
        assert_eq!(via_a, via_b, "successor routes disagree for {f} at order {mm}");
        Ok(NeighborReport {
            neighbor: via_a,
            witness_a: a,
            witness_b: b,
        })
    }
}

/// Fraction shapes with closed-form neighbors in F(B(2m),m).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SubseqForm {
    /// `1/(j+1)`, left of 1/2
    Unit,
    /// `(j-1)/(2j-1)`, left of 1/2
    LeftMid,
    /// `j/(2j-1)`, right of 1/2
    RightMid,
    /// `j/(j+1)`, right of 1/2
    UnitComplement,
    /// `2/(j+2)`, j odd, left of 1/2
    Two,
    /// `(j-2)/(2(j-1))`, j odd, left of 1/2
    LeftMid2,
    /// `j/(2(j-1))`, j odd, right of 1/2
    RightMid2,
    /// `j/(j+2)`, j odd, right of 1/2
    TwoComplement,
}

impl SubseqForm {
    pub fn fraction(self, j: i64) -> Result<Fraction> {
        match self {
            SubseqForm::Unit => Fraction::new(1, j + 1),
            SubseqForm::LeftMid => Fraction::new(j - 1, 2 * j - 1),
            SubseqForm::RightMid => Fraction::new(j, 2 * j - 1),
            SubseqForm::UnitComplement => Fraction::new(j, j + 1),
            SubseqForm::Two => Fraction::new(2, j + 2),
            SubseqForm::LeftMid2 => Fraction::new(j - 2, 2 * (j - 1)),
            SubseqForm::RightMid2 => Fraction::new(j, 2 * (j - 1)),
            SubseqForm::TwoComplement => Fraction::new(j, j + 2),
        }
    }

    fn requires_odd_j(self) -> bool {
        matches!(
            self,
            SubseqForm::Two | SubseqForm::LeftMid2 | SubseqForm::RightMid2 | SubseqForm::TwoComplement
        )
    }

    /// The strict-inequality guard each closed form states against 1/2
    /// (and, for the `j/(2j-1)` shape, against 1/1).
    fn guard(self, f: Fraction) -> bool {
        match self {
            SubseqForm::Unit | SubseqForm::Two | SubseqForm::LeftMid2 => f < Fraction::HALF,
            // the printed guard is only "< 1/2"; 0/1 is excluded because it
            // has no predecessor
            SubseqForm::LeftMid => f < Fraction::HALF && f != Fraction::ZERO,
            SubseqForm::RightMid => Fraction::HALF < f && f < Fraction::ONE,
            SubseqForm::UnitComplement | SubseqForm::RightMid2 | SubseqForm::TwoComplement => {
                Fraction::HALF < f
            }
        }
    }
}

/// Closed-form neighbors for the eight special shapes, with the parity
/// branches of the two-numerator shapes taken on `ceil(2m/j)` and
/// `ceil(2(m+1)/j)` exactly as printed.
pub fn special_neighbors(form: SubseqForm, j: i64, m: Order) -> Result<(Fraction, Fraction)> {
    if j < 1 {
        return Err(Error::FormGuard(format!("j must be positive, got {j}")));
    }
    if form.requires_odd_j() && (j % 2 == 0 || j < 3) {
        return Err(Error::FormGuard(format!(
            "form requires odd j >= 3, got {j}"
        )));
    }
    let f = form.fraction(j)?;
    require_member(f, m)?;
    if !form.guard(f) {
        return Err(Error::FormGuard(format!(
            "{f} violates the form's position guard"
        )));
    }
    let mm = m.get() as i128;
    let jj = j as i128;
    let cm = ceil_div(mm, jj) - 1;
    let cm2 = ceil_div(mm + 2, jj) - 1;
    // parity-adjusted anchors for the odd-j shapes: step back from the
    // ceiling by 1 or 2 to land on an odd value
    let back = |c: i128| if c % 2 == 0 { c - 1 } else { c - 2 };
    let t_m = back(ceil_div(2 * mm, jj));
    let t_m2 = back(ceil_div(2 * (mm + 1), jj));
    let frac = |h: i128, k: i128| -> Result<Fraction> {
        Fraction::new(exact_div(h, 1), exact_div(k, 1))
    };
    let (pred, succ) = match form {
        SubseqForm::Unit => (
            frac(cm, (jj + 1) * cm + 1)?,
            frac(cm2, (jj + 1) * cm2 - 1)?,
        ),
        SubseqForm::LeftMid => (
            frac((jj - 1) * cm2 - 1, (2 * jj - 1) * cm2 - 2)?,
            frac((jj - 1) * cm + 1, (2 * jj - 1) * cm + 2)?,
        ),
        SubseqForm::RightMid => (
            frac(jj * cm + 1, (2 * jj - 1) * cm + 2)?,
            frac(jj * cm2 - 1, (2 * jj - 1) * cm2 - 2)?,
        ),
        SubseqForm::UnitComplement => (
            frac(jj * cm2 - 1, (jj + 1) * cm2 - 1)?,
            frac(jj * cm + 1, (jj + 1) * cm + 1)?,
        ),
        SubseqForm::Two => (
            Fraction::new(exact_div(t_m, 1), exact_div((jj + 2) * t_m + 1, 2))?,
            Fraction::new(exact_div(t_m2, 1), exact_div((jj + 2) * t_m2 - 1, 2))?,
        ),
        SubseqForm::LeftMid2 => (
            Fraction::new(
                exact_div((jj - 2) * t_m2 - 1, 2),
                exact_div((jj - 1) * t_m2 - 1, 1),
            )?,
            Fraction::new(
                exact_div((jj - 2) * t_m + 1, 2),
                exact_div((jj - 1) * t_m + 1, 1),
            )?,
        ),
        SubseqForm::RightMid2 => (
            Fraction::new(
                exact_div(jj * t_m + 1, 2),
                exact_div((jj - 1) * t_m + 1, 1),
            )?,
            Fraction::new(
                exact_div(jj * t_m2 - 1, 2),
                exact_div((jj - 1) * t_m2 - 1, 1),
            )?,
        ),
        SubseqForm::TwoComplement => (
            Fraction::new(
                exact_div(jj * t_m2 - 1, 2),
                exact_div((jj + 2) * t_m2 - 1, 2),
            )?,
            Fraction::new(
                exact_div(jj * t_m + 1, 2),
                exact_div((jj + 2) * t_m + 1, 2),
            )?,
        ),
    };
    Ok((pred, succ))
}

/// The four maximal runs of consecutive fractions that have closed forms:
/// around each endpoint and on each side of 1/2. Each returned list is a
/// contiguous ascending block of [`sequence`].
pub fn runs(m: Order) -> [Vec<Fraction>; 4] {
    let mm = m.get();
    let half_up = (mm + 1) / 2; // ceil(m/2)
    let fr = |h: i64, k: i64| Fraction::new(h, k).unwrap();

    // 0/1, 1/(m+1), 1/m, ..., 1/(ceil(m/2)+1)
    let mut low = vec![Fraction::ZERO];
    for k in (half_up + 1..=mm + 1).rev() {
        low.push(fr(1, k));
    }
    // (j-1)/(2j-1) for j = ceil(m/2)..m, then 1/2
    let mut left_mid = Vec::new();
    for j in half_up..=mm {
        left_mid.push(fr(j - 1, 2 * j - 1));
    }
    left_mid.push(Fraction::HALF);
    // 1/2, then j/(2j-1) for j = m down to ceil(m/2)
    let mut right_mid = vec![Fraction::HALF];
    for j in (half_up..=mm).rev() {
        right_mid.push(fr(j, 2 * j - 1));
    }
    // j/(j+1) for j = ceil(m/2)..m, then 1/1
    let mut high = Vec::new();
    for j in half_up..=mm {
        high.push(fr(j, j + 1));
    }
    high.push(Fraction::ONE);

    [low, left_mid, right_mid, high]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fr(h: i64, k: i64) -> Fraction {
        Fraction::new(h, k).unwrap()
    }

    fn ord(m: i64) -> Order {
        Order::new(m).unwrap()
    }

    fn seq(v: &[(i64, i64)]) -> Vec<Fraction> {
        v.iter().map(|&(h, k)| fr(h, k)).collect()
    }

    fn order_five() -> Vec<Fraction> {
        seq(&[
            (0, 1),
            (1, 6),
            (1, 5),
            (1, 4),
            (2, 7),
            (1, 3),
            (3, 8),
            (2, 5),
            (3, 7),
            (4, 9),
            (1, 2),
            (5, 9),
            (4, 7),
            (3, 5),
            (5, 8),
            (2, 3),
            (5, 7),
            (3, 4),
            (4, 5),
            (5, 6),
            (1, 1),
        ])
    }

    #[test]
    fn sequence_order_five() {
        assert_eq!(sequence(ord(5)), order_five());
    }

    #[test]
    fn sequence_order_two() {
        assert_eq!(
            sequence(ord(2)),
            seq(&[(0, 1), (1, 3), (1, 2), (2, 3), (1, 1)])
        );
    }

    #[test]
    fn halves_share_the_midpoint() {
        let left = half_sequence(ord(5), Half::Left);
        let right = half_sequence(ord(5), Half::Right);
        assert_eq!(left.len(), 11);
        assert_eq!(right.len(), 11);
        assert_eq!(*left.last().unwrap(), Fraction::HALF);
        assert_eq!(right[0], Fraction::HALF);
    }

    #[test]
    fn membership_bounds() {
        assert!(is_member(fr(4, 9), ord(5)));
        assert!(!is_member(fr(1, 7), ord(5)));
        assert!(is_member(fr(1, 2), ord(2)));
        assert!(!is_member(fr(5, 6), ord(2)));
    }

    #[test]
    fn pred_examples() {
        let r = pred(fr(2, 7), ord(5)).unwrap();
        assert_eq!(r.neighbor, fr(1, 4));
        assert_eq!(r.witness_a, 1);

        let r = pred(fr(5, 9), ord(5)).unwrap();
        assert_eq!(r.neighbor, fr(1, 2));
        assert_eq!(r.witness_a, 1);

        let r = pred(Fraction::HALF, ord(5)).unwrap();
        assert_eq!(r.neighbor, fr(4, 9));
    }

    #[test]
    fn succ_examples() {
        let r = succ(fr(2, 7), ord(5)).unwrap();
        assert_eq!(r.neighbor, fr(1, 3));
        assert_eq!(r.witness_a, 1);

        let r = succ(fr(4, 9), ord(5)).unwrap();
        assert_eq!(r.neighbor, fr(1, 2));
        assert_eq!(r.witness_a, 1);

        let r = succ(Fraction::ZERO, ord(5)).unwrap();
        assert_eq!(r.neighbor, fr(1, 6));
    }

    #[test]
    fn endpoint_facts() {
        assert_eq!(pred(Fraction::ONE, ord(5)).unwrap().neighbor, fr(5, 6));
        assert_eq!(succ(Fraction::HALF, ord(5)).unwrap().neighbor, fr(5, 9));
        assert!(pred(Fraction::ZERO, ord(5)).is_err());
        assert!(succ(Fraction::ONE, ord(5)).is_err());
        assert!(matches!(
            pred(fr(1, 7), ord(5)),
            Err(Error::NotAMember { .. })
        ));
    }

    #[test]
    fn special_forms_order_five() {
        // 1/4
        assert_eq!(
            special_neighbors(SubseqForm::Unit, 3, ord(5)).unwrap(),
            (fr(1, 5), fr(2, 7))
        );
        // 2/5
        assert_eq!(
            special_neighbors(SubseqForm::Two, 3, ord(5)).unwrap(),
            (fr(3, 8), fr(3, 7))
        );
        // 5/9
        assert_eq!(
            special_neighbors(SubseqForm::RightMid, 5, ord(5)).unwrap(),
            (fr(1, 2), fr(4, 7))
        );
    }

    #[test]
    fn special_forms_reject_guard_violations() {
        // 1/2 itself fails the strict guard of the unit shape (j = 1)
        assert!(matches!(
            special_neighbors(SubseqForm::Unit, 1, ord(5)),
            Err(Error::FormGuard(_))
        ));
        // j = 1 turns (j-1)/(2j-1) into 0/1, which has no predecessor
        assert!(matches!(
            special_neighbors(SubseqForm::LeftMid, 1, ord(5)),
            Err(Error::FormGuard(_))
        ));
        // j = 1 turns j/(2j-1) into 1/1, excluded by the printed "< 1/1"
        assert!(matches!(
            special_neighbors(SubseqForm::RightMid, 1, ord(5)),
            Err(Error::FormGuard(_))
        ));
        // even j rejected for the parity shapes
        assert!(matches!(
            special_neighbors(SubseqForm::Two, 4, ord(9)),
            Err(Error::FormGuard(_))
        ));
        // non-member rejected
        assert!(matches!(
            special_neighbors(SubseqForm::Unit, 6, ord(5)),
            Err(Error::NotAMember { .. })
        ));
    }

    #[test]
    fn runs_order_five() {
        let [low, left_mid, right_mid, high] = runs(ord(5));
        assert_eq!(low, seq(&[(0, 1), (1, 6), (1, 5), (1, 4)]));
        assert_eq!(left_mid, seq(&[(2, 5), (3, 7), (4, 9), (1, 2)]));
        assert_eq!(right_mid, seq(&[(1, 2), (5, 9), (4, 7), (3, 5)]));
        assert_eq!(high, seq(&[(3, 4), (4, 5), (5, 6), (1, 1)]));
    }

    #[test]
    fn runs_are_contiguous_blocks() {
        for m in [2, 3, 4, 5, 9, 16] {
            let m = ord(m);
            let all = sequence(m);
            for run in runs(m) {
                let start = all.iter().position(|f| *f == run[0]).unwrap();
                assert_eq!(&all[start..start + run.len()], &run[..], "order {m}");
            }
        }
        let high = &runs(ord(4))[3];
        assert_eq!(*high, seq(&[(2, 3), (3, 4), (4, 5), (1, 1)]));
    }
}
