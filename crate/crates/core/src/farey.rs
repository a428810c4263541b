//! The classical Farey sequence F_m: reference enumeration, the next-term
//! recurrence, the order-reversing reflection, and logarithmic
//! predecessor/successor queries backed by congruence windows.

use crate::arith::{ceil_div, exact_div, mediant, solve_congruence, Fraction, Order};
use crate::error::{Error, Result};
use crate::Family;

/// A neighbor answer together with the two congruence witnesses that
/// produced it.
///
/// `witness_a` solves the numerator-side congruence and `witness_b` the
/// denominator-side one; each reconstructs `neighbor` on its own, and the
/// query asserts that the two reconstructions agree. Endpoint queries that
/// are answered by closed facts fill any witness slot whose congruence is
/// undefined with the corresponding component of the neighbor.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NeighborReport {
    pub neighbor: Fraction,
    pub witness_a: i64,
    pub witness_b: i64,
}

/// Membership test: `h/k` (already reduced) lies in F_m iff `k <= m`.
pub fn is_member(f: Fraction, m: Order) -> bool {
    f.denom() <= m.get()
}

fn require_member(f: Fraction, m: Order) -> Result<()> {
    if is_member(f, m) {
        Ok(())
    } else {
        Err(Error::NotAMember {
            f,
            family: Family::Classic,
            m: m.get(),
        })
    }
}

/// Reference construction of F_m: every reduced `h/k` with `k <= m`, sorted
/// ascending. Quadratic; intended as the ground truth the formula paths are
/// checked against.
pub fn sequence(m: Order) -> Vec<Fraction> {
    let m = m.get();
    let mut out = Vec::new();
    for k in 1..=m {
        for h in 0..=k {
            if crate::arith::gcd(h, k) == 1 {
                out.push(Fraction::new(h, k).unwrap());
            }
        }
    }
    out.sort_unstable();
    out
}

/// Order-reversing reflection of F_m onto itself: `h/k ↦ (k-h)/k`.
pub fn dual(f: Fraction) -> Fraction {
    f.reflect()
}

/// Predecessor of `f` in F_m.
///
/// Solves `k*a ≡ -1 (mod h)` in the length-h window ending at
/// `ceil(h*m/k) - 1`; the neighbor is `a / ((k*a+1)/h)`. The cross-check
/// route solves `h*b ≡ 1 (mod k)` on `[m-k+1, m]` and must reproduce the
/// same fraction.
pub fn pred(f: Fraction, m: Order) -> Result<NeighborReport> {
    require_member(f, m)?;
    if f == Fraction::ZERO {
        return Err(Error::NoPredecessor(f));
    }
    let mm = m.get();
    if f == Fraction::ONE {
        // (m-1)/m precedes 1/1; both congruence windows degenerate to
        // exactly these values.
        return Ok(NeighborReport {
            neighbor: Fraction::new(mm - 1, mm)?,
            witness_a: mm - 1,
            witness_b: mm,
        });
    }
    let (h, k) = (f.numer(), f.denom());
    let ta = ceil_div(h as i128 * mm as i128, k as i128) as i64;
    let a = solve_congruence(k, -1, h, ta - h, ta - 1)?;
    let via_a = Fraction::new(a, exact_div(k as i128 * a as i128 + 1, h as i128))?;
    let b = solve_congruence(h, 1, k, mm - k + 1, mm)?;
    let via_b = Fraction::new(exact_div(h as i128 * b as i128 - 1, k as i128), b)?;
    assert_eq!(via_a, via_b, "predecessor routes disagree for {f} at order {mm}");
    Ok(NeighborReport {
        neighbor: via_a,
        witness_a: a,
        witness_b: b,
    })
}

/// Successor of `f` in F_m; mirror of [`pred`] with the signs of the two
/// congruences swapped and the window shifted to `ceil((h*m+2)/k) - 1`.
pub fn succ(f: Fraction, m: Order) -> Result<NeighborReport> {
    require_member(f, m)?;
    if f == Fraction::ONE {
        return Err(Error::NoSuccessor(f));
    }
    let mm = m.get();
    if f == Fraction::ZERO {
        // 1/m succeeds 0/1. The denominator window still yields b = m; the
        // numerator congruence has modulus h = 0 and is skipped.
        return Ok(NeighborReport {
            neighbor: Fraction::new(1, mm)?,
            witness_a: 1,
            witness_b: mm,
        });
    }
    let (h, k) = (f.numer(), f.denom());
    let ta = ceil_div(h as i128 * mm as i128 + 2, k as i128) as i64;
    let a = solve_congruence(k, 1, h, ta - h, ta - 1)?;
    let via_a = Fraction::new(a, exact_div(k as i128 * a as i128 - 1, h as i128))?;
    let b = solve_congruence(h, -1, k, mm - k + 1, mm)?;
    let via_b = Fraction::new(exact_div(h as i128 * b as i128 + 1, k as i128), b)?;
    assert_eq!(via_a, via_b, "successor routes disagree for {f} at order {mm}");
    Ok(NeighborReport {
        neighbor: via_a,
        witness_a: a,
        witness_b: b,
    })
}

/// Fraction shapes with closed-form neighbors in F_m.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClassicForm {
    /// `1/j`
    Unit,
    /// `(j-1)/j`
    UnitComplement,
    /// `2/j`, j odd
    Two,
    /// `(j-2)/j`, j odd
    TwoComplement,
}

impl ClassicForm {
    pub fn fraction(self, j: i64) -> Result<Fraction> {
        match self {
            ClassicForm::Unit => Fraction::new(1, j),
            ClassicForm::UnitComplement => Fraction::new(j - 1, j),
            ClassicForm::Two => Fraction::new(2, j),
            ClassicForm::TwoComplement => Fraction::new(j - 2, j),
        }
    }
}

/// Closed-form neighbors for the four special shapes.
///
/// `None` marks the side a shape does not have: `1/1` (unit, j = 1) has no
/// successor and `0/1` (unit complement, j = 1) has no predecessor. The
/// two-numerator shapes require odd `j >= 3` and branch on the parity of a
/// ceiling, exactly as the closed forms prescribe.
pub fn special_neighbors(
    form: ClassicForm,
    j: i64,
    m: Order,
) -> Result<(Option<Fraction>, Option<Fraction>)> {
    if j < 1 {
        return Err(Error::FormGuard(format!("j must be positive, got {j}")));
    }
    if matches!(form, ClassicForm::Two | ClassicForm::TwoComplement) && (j % 2 == 0 || j < 3) {
        return Err(Error::FormGuard(format!(
            "form requires odd j >= 3, got {j}"
        )));
    }
    let f = form.fraction(j)?;
    require_member(f, m)?;
    let mm = m.get() as i128;
    let jj = j as i128;
    // ceil(m/j) - 1 and ceil((m+2)/j) - 1: the two window anchors
    let cm = ceil_div(mm, jj) - 1;
    let cm2 = ceil_div(mm + 2, jj) - 1;
    let frac = |h: i128, k: i128| Fraction::new(exact_div(h, 1), exact_div(k, 1));
    match form {
        ClassicForm::Unit => {
            let pred = frac(cm, jj * cm + 1)?;
            let succ = if j > 1 {
                Some(frac(cm2, jj * cm2 - 1)?)
            } else {
                None
            };
            Ok((Some(pred), succ))
        }
        ClassicForm::UnitComplement => {
            let pred = if j > 1 {
                Some(frac((jj - 1) * cm2 - 1, jj * cm2 - 1)?)
            } else {
                None
            };
            let succ = frac((jj - 1) * cm + 1, jj * cm + 1)?;
            Ok((pred, Some(succ)))
        }
        ClassicForm::Two => {
            // windows anchored at ceil(2m/j) and ceil(2(m+1)/j), stepped
            // back by 1 or 2 to reach the right parity
            let cp = ceil_div(2 * mm, jj);
            let p = if cp % 2 == 0 { cp - 1 } else { cp - 2 };
            let pred = Fraction::new(exact_div(p, 1), exact_div(jj * p + 1, 2))?;
            let cs = ceil_div(2 * (mm + 1), jj);
            let s = if cs % 2 == 0 { cs - 1 } else { cs - 2 };
            let succ = Fraction::new(exact_div(s, 1), exact_div(jj * s - 1, 2))?;
            Ok((Some(pred), Some(succ)))
        }
        ClassicForm::TwoComplement => {
            let cp = ceil_div(2 * (mm + 1), jj);
            let p = if cp % 2 == 0 { cp - 1 } else { cp - 2 };
            let pred = Fraction::new(
                exact_div((jj - 2) * p - 1, 2),
                exact_div(jj * p - 1, 2),
            )?;
            let cs = ceil_div(2 * mm, jj);
            let s = if cs % 2 == 0 { cs - 1 } else { cs - 2 };
            let succ = Fraction::new(
                exact_div((jj - 2) * s + 1, 2),
                exact_div(jj * s + 1, 2),
            )?;
            Ok((Some(pred), Some(succ)))
        }
    }
}

/// Lazy ascending walk of F_m via the standard two-term recurrence:
/// given adjacent `x1/y1 < x2/y2`, the next term is
/// `(t*x2 - x1) / (t*y2 - y1)` with `t = (y1 + m) / y2`.
///
/// The iterator yields the two seed fractions first and stops after `1/1`.
pub struct Stream {
    limit: i64,
    prev: Fraction,
    cur: Fraction,
    stage: StreamStage,
}

enum StreamStage {
    YieldPrev,
    YieldCur,
    Advance,
    Done,
}

impl Stream {
    /// Seeds must be adjacent in F_m: in range, unimodular
    /// (`x2*y1 - x1*y2 == 1`) and with `y1 + y2 > m` (unimodularity alone
    /// also holds for non-adjacent pairs whose mediant is still in range).
    pub fn new(m: Order, start: Fraction, start_next: Fraction) -> Result<Stream> {
        Stream::with_limit(m.get(), start, start_next)
    }

    /// Walk from the very beginning: seeds `0/1, 1/m`.
    pub fn from_origin(m: Order) -> Stream {
        Stream::with_limit(m.get(), Fraction::ZERO, Fraction::new(1, m.get()).unwrap())
            .expect("origin seeds are adjacent")
    }

    pub(crate) fn with_limit(limit: i64, start: Fraction, start_next: Fraction) -> Result<Stream> {
        let adjacent = start.denom() <= limit
            && start_next.denom() <= limit
            && start < start_next
            && start_next.numer() as i128 * start.denom() as i128
                - start.numer() as i128 * start_next.denom() as i128
                == 1
            && start.denom() + start_next.denom() > limit;
        if !adjacent {
            return Err(Error::NonAdjacentSeeds(start, start_next));
        }
        Ok(Stream {
            limit,
            prev: start,
            cur: start_next,
            stage: StreamStage::YieldPrev,
        })
    }
}

impl Iterator for Stream {
    type Item = Fraction;

    fn next(&mut self) -> Option<Fraction> {
        match self.stage {
            StreamStage::YieldPrev => {
                self.stage = StreamStage::YieldCur;
                Some(self.prev)
            }
            StreamStage::YieldCur => {
                self.stage = if self.cur == Fraction::ONE {
                    StreamStage::Done
                } else {
                    StreamStage::Advance
                };
                Some(self.cur)
            }
            StreamStage::Advance => {
                let t = (self.prev.denom() + self.limit) / self.cur.denom();
                let h = t * self.cur.numer() - self.prev.numer();
                let k = t * self.cur.denom() - self.prev.denom();
                let next = Fraction::new(h, k).expect("recurrence stays in range");
                self.prev = self.cur;
                self.cur = next;
                if next == Fraction::ONE {
                    self.stage = StreamStage::Done;
                }
                Some(next)
            }
            StreamStage::Done => None,
        }
    }
}

/// Exposed for adjacency checks in tests: consecutive Farey fractions are
/// unimodular and their mediant is the first fraction to appear between them.
pub fn are_adjacent(lo: Fraction, hi: Fraction, m: Order) -> bool {
    lo < hi
        && is_member(lo, m)
        && is_member(hi, m)
        && hi.numer() as i128 * lo.denom() as i128 - lo.numer() as i128 * hi.denom() as i128 == 1
        && mediant(lo, hi).denom() > m.get()
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

    #[test]
    fn sequence_order_five() {
        let expect = seq(&[
            (0, 1),
            (1, 5),
            (1, 4),
            (1, 3),
            (2, 5),
            (1, 2),
            (3, 5),
            (2, 3),
            (3, 4),
            (4, 5),
            (1, 1),
        ]);
        assert_eq!(sequence(ord(5)), expect);
    }

    #[test]
    fn sequence_small_orders() {
        assert_eq!(sequence(ord(2)), seq(&[(0, 1), (1, 2), (1, 1)]));
        assert_eq!(sequence(ord(7)).len(), 19);
    }

    #[test]
    fn stream_continues_the_sequence() {
        let s = Stream::new(ord(5), Fraction::ZERO, fr(1, 5)).unwrap();
        let all: Vec<_> = s.collect();
        assert_eq!(all, sequence(ord(5)));
        assert_eq!(all[2], fr(1, 4));

        let tail: Vec<_> = Stream::new(ord(5), fr(3, 4), fr(4, 5)).unwrap().collect();
        assert_eq!(tail, seq(&[(3, 4), (4, 5), (1, 1)]));

        assert_eq!(Stream::from_origin(ord(100)).count(), 3045);
    }

    #[test]
    fn stream_rejects_non_adjacent_seeds() {
        assert!(Stream::new(ord(5), fr(1, 5), fr(1, 3)).is_err());
        // unimodular but not adjacent in F_5: 1/3 lies between
        assert!(Stream::new(ord(5), Fraction::ZERO, fr(1, 2)).is_err());
        // wrong order
        assert!(Stream::new(ord(5), fr(1, 5), Fraction::ZERO).is_err());
    }

    #[test]
    fn dual_examples() {
        assert_eq!(dual(fr(1, 3)), fr(2, 3));
        assert_eq!(dual(fr(1, 2)), fr(1, 2));
        assert_eq!(dual(fr(2, 5)), fr(3, 5));
    }

    #[test]
    fn pred_examples() {
        let r = pred(fr(1, 3), ord(5)).unwrap();
        assert_eq!(r.neighbor, fr(1, 4));
        assert_eq!(r.witness_a, 1);

        // frozen from a brute-force scan of F_100
        let r = pred(fr(3, 7), ord(100)).unwrap();
        assert_eq!(r.neighbor, fr(41, 96));
        assert_eq!((r.witness_a, r.witness_b), (41, 96));

        let r = pred(Fraction::ONE, ord(5)).unwrap();
        assert_eq!(r.neighbor, fr(4, 5));
    }

    #[test]
    fn succ_examples() {
        let r = succ(fr(1, 3), ord(5)).unwrap();
        assert_eq!(r.neighbor, fr(2, 5));
        assert_eq!(r.witness_a, 2);

        let r = succ(fr(3, 7), ord(100)).unwrap();
        assert_eq!(r.neighbor, fr(43, 100));
        assert_eq!(r.witness_a, 43);

        let r = succ(Fraction::ZERO, ord(9)).unwrap();
        assert_eq!(r.neighbor, fr(1, 9));
    }

    #[test]
    fn neighbor_queries_reject_bad_input() {
        assert!(matches!(
            pred(Fraction::ZERO, ord(5)),
            Err(Error::NoPredecessor(_))
        ));
        assert!(matches!(
            succ(Fraction::ONE, ord(5)),
            Err(Error::NoSuccessor(_))
        ));
        assert!(matches!(
            pred(fr(1, 7), ord(5)),
            Err(Error::NotAMember { .. })
        ));
    }

    #[test]
    fn special_forms_order_five() {
        assert_eq!(
            special_neighbors(ClassicForm::Unit, 4, ord(5)).unwrap(),
            (Some(fr(1, 5)), Some(fr(1, 3)))
        );
        assert_eq!(
            special_neighbors(ClassicForm::Two, 5, ord(5)).unwrap(),
            (Some(fr(1, 3)), Some(fr(1, 2)))
        );
        assert_eq!(
            special_neighbors(ClassicForm::UnitComplement, 5, ord(5)).unwrap(),
            (Some(fr(3, 4)), Some(fr(1, 1)))
        );
    }

    #[test]
    fn special_forms_endpoint_sides_are_absent() {
        // 1/1 has a predecessor but no successor
        assert_eq!(
            special_neighbors(ClassicForm::Unit, 1, ord(7)).unwrap(),
            (Some(fr(6, 7)), None)
        );
        // 0/1 has a successor but no predecessor
        assert_eq!(
            special_neighbors(ClassicForm::UnitComplement, 1, ord(7)).unwrap(),
            (None, Some(fr(1, 7)))
        );
    }

    #[test]
    fn special_forms_reject_guard_violations() {
        assert!(matches!(
            special_neighbors(ClassicForm::Two, 4, ord(9)),
            Err(Error::FormGuard(_))
        ));
        assert!(matches!(
            special_neighbors(ClassicForm::Two, 1, ord(9)),
            Err(Error::FormGuard(_))
        ));
        assert!(matches!(
            special_neighbors(ClassicForm::Unit, 9, ord(5)),
            Err(Error::NotAMember { .. })
        ));
        assert!(special_neighbors(ClassicForm::Unit, 0, ord(5)).is_err());
    }

    #[test]
    fn adjacency_helper() {
        let m = ord(5);
        assert!(are_adjacent(fr(1, 3), fr(2, 5), m));
        assert!(!are_adjacent(Fraction::ZERO, fr(1, 2), m));
        assert!(!are_adjacent(fr(2, 5), fr(1, 3), m));
    }
}
