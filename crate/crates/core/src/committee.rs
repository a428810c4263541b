//! Central hyperplane arrangements as oriented sign matrices, committee
//! verification, the Farey-subsequence characterization of achievable vote
//! ratios, and the committee decision rule for new patterns.
//!
//! Regions are sign vectors, not geometric cells; the only geometric
//! pathway is the 2-D normal-vector loader, which walks the angular sectors
//! cut out by lines through the origin.

use std::collections::HashSet;

use crate::arith::{Fraction, Order};
use crate::error::{Error, Result};
use crate::fbm;

/// Exhaustive subset enumeration stops here: 2^24 subsets is the desk-scale
/// ceiling.
pub const MAX_EXHAUSTIVE_REGIONS: usize = 24;

/// Which training sample a hyperplane belongs to. Class A flips the
/// orientation of its normal; class B keeps it.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClassLabel {
    A,
    B,
}

/// Side of an oriented hyperplane.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    fn flipped(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

/// One oriented hyperplane of the training set. The normal is retained only
/// by the 2-D loader; sign-matrix input has the orientation already folded
/// in and carries no geometry.
#[derive(Clone, Debug)]
pub struct Hyperplane {
    pub label: ClassLabel,
    pub normal: Option<[f64; 2]>,
}

/// A central arrangement: regions come in antipodal pairs, so each
/// hyperplane has exactly half of them on its positive side.
#[derive(Clone, Debug)]
pub struct CentralArrangement {
    hyperplanes: Vec<Hyperplane>,
    regions: Vec<Vec<Sign>>,
}

impl CentralArrangement {
    /// Parse either input format, dispatching on the header line:
    /// `signs <n_regions> <n_hyperplanes>` followed by one '+'/'-' row per
    /// region, or `normals2d` followed by `<A|B> <px> <py>` lines.
    pub fn parse(text: &str) -> Result<CentralArrangement> {
        let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
        let header = lines
            .next()
            .ok_or_else(|| Error::Arrangement("empty input".into()))?;
        if header == "normals2d" {
            Self::from_normals(lines)
        } else if let Some(rest) = header.strip_prefix("signs") {
            let mut it = rest.split_whitespace();
            let n_regions: usize = it
                .next()
                .and_then(|t| t.parse().ok())
                .ok_or_else(|| Error::Arrangement("signs header needs <n_regions>".into()))?;
            let n_hyperplanes: usize = it
                .next()
                .and_then(|t| t.parse().ok())
                .ok_or_else(|| Error::Arrangement("signs header needs <n_hyperplanes>".into()))?;
            if it.next().is_some() {
                return Err(Error::Arrangement("trailing tokens in signs header".into()));
            }
            Self::from_sign_rows(n_regions, n_hyperplanes, lines)
        } else {
            Err(Error::Arrangement(format!("unrecognized header {header:?}")))
        }
    }

    fn from_sign_rows<'a>(
        n_regions: usize,
        n_hyperplanes: usize,
        lines: impl Iterator<Item = &'a str>,
    ) -> Result<CentralArrangement> {
        let mut regions = Vec::with_capacity(n_regions);
        for line in lines {
            let mut row = Vec::with_capacity(n_hyperplanes);
            for ch in line.chars() {
                match ch {
                    '+' => row.push(Sign::Plus),
                    '-' => row.push(Sign::Minus),
                    _ => {
                        return Err(Error::Arrangement(format!(
                            "invalid sign character {ch:?}"
                        )))
                    }
                }
            }
            if row.len() != n_hyperplanes {
                return Err(Error::Arrangement(format!(
                    "row {:?} has {} signs, expected {n_hyperplanes}",
                    line,
                    row.len()
                )));
            }
            regions.push(row);
        }
        if regions.len() != n_regions {
            return Err(Error::Arrangement(format!(
                "got {} region rows, expected {n_regions}",
                regions.len()
            )));
        }
        let hyperplanes = (0..n_hyperplanes)
            .map(|_| Hyperplane {
                label: ClassLabel::B,
                normal: None,
            })
            .collect();
        let arr = CentralArrangement {
            hyperplanes,
            regions,
        };
        arr.validate()?;
        Ok(arr)
    }

    fn from_normals<'a>(lines: impl Iterator<Item = &'a str>) -> Result<CentralArrangement> {
        let mut hyperplanes = Vec::new();
        let mut folded: Vec<[f64; 2]> = Vec::new();
        for line in lines {
            let mut it = line.split_whitespace();
            let label = match it.next() {
                Some("A") => ClassLabel::A,
                Some("B") => ClassLabel::B,
                other => {
                    return Err(Error::Arrangement(format!(
                        "expected class A or B, got {other:?}"
                    )))
                }
            };
            let mut coord = || -> Result<f64> {
                it.next()
                    .and_then(|t| t.parse::<f64>().ok())
                    .filter(|v| v.is_finite())
                    .ok_or_else(|| Error::Arrangement(format!("bad normal in line {line:?}")))
            };
            let p = [coord()?, coord()?];
            if it.next().is_some() {
                return Err(Error::Arrangement(format!("trailing tokens in {line:?}")));
            }
            if p == [0.0, 0.0] {
                return Err(Error::Arrangement("zero normal vector".into()));
            }
            // orientation folding: class A negates the normal
            let h = match label {
                ClassLabel::A => [-p[0], -p[1]],
                ClassLabel::B => p,
            };
            hyperplanes.push(Hyperplane {
                label,
                normal: Some(p),
            });
            folded.push(h);
        }
        if hyperplanes.is_empty() {
            return Err(Error::Arrangement("no hyperplanes".into()));
        }
        for i in 0..folded.len() {
            for j in i + 1..folded.len() {
                let cross = folded[i][0] * folded[j][1] - folded[i][1] * folded[j][0];
                if cross == 0.0 {
                    return Err(Error::Arrangement(format!(
                        "hyperplanes {i} and {j} are parallel"
                    )));
                }
            }
        }
        // Each line through the origin contributes two boundary rays; the
        // sectors between consecutive rays are the regions.
        let mut rays = Vec::with_capacity(2 * folded.len());
        for h in &folded {
            let dir = h[0].atan2(-h[1]); // direction of the line itself
            rays.push(dir);
            rays.push(if dir > 0.0 {
                dir - std::f64::consts::PI
            } else {
                dir + std::f64::consts::PI
            });
        }
        rays.sort_by(|a, b| a.partial_cmp(b).unwrap());
        let mut regions = Vec::with_capacity(rays.len());
        for w in 0..rays.len() {
            let lo = rays[w];
            let hi = if w + 1 < rays.len() {
                rays[w + 1]
            } else {
                rays[0] + 2.0 * std::f64::consts::PI
            };
            let mid = (lo + hi) / 2.0;
            let v = [mid.cos(), mid.sin()];
            let mut row = Vec::with_capacity(folded.len());
            for h in &folded {
                let ip = h[0] * v[0] + h[1] * v[1];
                if ip == 0.0 {
                    return Err(Error::Arrangement(
                        "degenerate sector representative".into(),
                    ));
                }
                row.push(if ip > 0.0 { Sign::Plus } else { Sign::Minus });
            }
            regions.push(row);
        }
        let arr = CentralArrangement {
            hyperplanes,
            regions,
        };
        arr.validate()?;
        Ok(arr)
    }

    fn validate(&self) -> Result<()> {
        let n = self.hyperplanes.len();
        let r = self.regions.len();
        if n == 0 || r == 0 {
            return Err(Error::Arrangement("arrangement is empty".into()));
        }
        let distinct: HashSet<&Vec<Sign>> = self.regions.iter().collect();
        if distinct.len() != r {
            return Err(Error::Arrangement("region sign vectors repeat".into()));
        }
        for row in &self.regions {
            let opposite: Vec<Sign> = row.iter().map(|s| s.flipped()).collect();
            if !distinct.contains(&opposite) {
                return Err(Error::Arrangement(format!(
                    "antipodal closure violated: missing opposite of {row:?}"
                )));
            }
        }
        for col in 0..n {
            for other in col + 1..n {
                let same = self.regions.iter().all(|row| row[col] == row[other]);
                let negated = self.regions.iter().all(|row| row[col] != row[other]);
                if same || negated {
                    return Err(Error::Arrangement(format!(
                        "hyperplanes {col} and {other} are not distinct"
                    )));
                }
            }
        }
        for col in 0..n {
            let plus = self.regions.iter().filter(|row| row[col] == Sign::Plus).count();
            debug_assert_eq!(plus * 2, r, "antipodal closure forces half on each side");
        }
        Ok(())
    }

    pub fn hyperplane_count(&self) -> usize {
        self.hyperplanes.len()
    }

    pub fn region_count(&self) -> usize {
        self.regions.len()
    }

    pub fn hyperplanes(&self) -> &[Hyperplane] {
        &self.hyperplanes
    }

    pub fn regions(&self) -> &[Vec<Sign>] {
        &self.regions
    }

    /// Number of regions on the positive side of one hyperplane; asserted
    /// to equal half the regions, as antipodal closure demands.
    pub fn positive_side_count(&self, hyperplane: usize) -> Result<usize> {
        if hyperplane >= self.hyperplanes.len() {
            return Err(Error::UnknownHyperplane(hyperplane));
        }
        let count = self
            .regions
            .iter()
            .filter(|row| row[hyperplane] == Sign::Plus)
            .count();
        assert_eq!(count * 2, self.regions.len());
        Ok(count)
    }
}

/// A non-empty set of region indices.
#[derive(Clone, Debug)]
pub struct RegionSubset {
    indices: Vec<usize>,
}

impl RegionSubset {
    /// Validates non-emptiness and rejects duplicates (a repeated index
    /// would silently change every vote ratio).
    pub fn new(mut indices: Vec<usize>) -> Result<RegionSubset> {
        if indices.is_empty() {
            return Err(Error::EmptySubset);
        }
        indices.sort_unstable();
        if let Some(w) = indices.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateRegionIndex(w[0]));
        }
        Ok(RegionSubset { indices })
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

/// Per-hyperplane vote of a region subset.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HyperplaneVote {
    pub hyperplane: usize,
    /// Reduced fraction |K on the positive side| / |K|.
    pub ratio: Fraction,
    /// Whether the ratio lies in the right halfsequence of
    /// F(B(|T|), |T|/2) with 1/2 excluded.
    pub in_upper_half: bool,
}

/// Verdict plus the per-hyperplane evidence.
#[derive(Clone, Debug)]
pub struct CommitteeReport {
    pub is_committee: bool,
    pub votes: Vec<HyperplaneVote>,
}

/// Does the subset hold a strict majority on the positive side of every
/// hyperplane? Equivalently (and checked per hyperplane): does each vote
/// ratio land strictly above 1/2 inside F(B(|T|), |T|/2)?
pub fn is_committee(arr: &CentralArrangement, subset: &RegionSubset) -> Result<CommitteeReport> {
    let total = arr.region_count();
    for &i in subset.indices() {
        if i >= total {
            return Err(Error::RegionIndex {
                index: i,
                regions: total,
            });
        }
    }
    let order = Order::new(total as i64 / 2).map_err(|_| {
        Error::Arrangement(format!(
            "vote-ratio analysis needs at least 4 regions, arrangement has {total}"
        ))
    })?;
    let size = subset.len() as i64;
    let mut votes = Vec::with_capacity(arr.hyperplane_count());
    let mut all = true;
    for hp in 0..arr.hyperplane_count() {
        let pos = subset
            .indices()
            .iter()
            .filter(|&&i| arr.regions()[i][hp] == Sign::Plus)
            .count() as i64;
        let ratio = Fraction::new(pos, size)?;
        let majority = 2 * pos > size;
        let in_upper_half = fbm::is_member(ratio, order) && ratio > Fraction::HALF;
        debug_assert_eq!(majority, in_upper_half);
        all &= majority;
        votes.push(HyperplaneVote {
            hyperplane: hp,
            ratio,
            in_upper_half,
        });
    }
    Ok(CommitteeReport {
        is_committee: all,
        votes,
    })
}

/// The ascending set of vote ratios a hyperplane can see over every
/// non-empty region subset, by exhaustive enumeration (capped at
/// [`MAX_EXHAUSTIVE_REGIONS`] regions). The result coincides with
/// F(B(|T|), |T|/2).
pub fn ratio_collection(arr: &CentralArrangement, hyperplane: usize) -> Result<Vec<Fraction>> {
    let n = arr.region_count();
    if n > MAX_EXHAUSTIVE_REGIONS {
        return Err(Error::TooManyRegions {
            got: n,
            max: MAX_EXHAUSTIVE_REGIONS,
        });
    }
    if hyperplane >= arr.hyperplane_count() {
        return Err(Error::UnknownHyperplane(hyperplane));
    }
    let mut pos_mask: u32 = 0;
    for (i, row) in arr.regions().iter().enumerate() {
        if row[hyperplane] == Sign::Plus {
            pos_mask |= 1 << i;
        }
    }
    // dedupe on (positives, size) pairs before reducing
    let mut seen = vec![false; (n + 1) * (n + 1)];
    for mask in 1u32..(1 << n) {
        let size = mask.count_ones() as usize;
        let pos = (mask & pos_mask).count_ones() as usize;
        seen[pos * (n + 1) + size] = true;
    }
    let mut out = Vec::new();
    for pos in 0..=n {
        for size in 1..=n {
            if seen[pos * (n + 1) + size] {
                out.push(Fraction::new(pos as i64, size as i64)?);
            }
        }
    }
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

/// Outcome of the committee decision rule for a new pattern.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Classification {
    ClassA,
    ClassB,
    /// Exactly half the representatives voted positive; the rule defines
    /// only the two strict cases, so no tie-break is invented.
    Undecided,
}

/// Classify a new pattern, given one representative vector per committee
/// region: class A if strictly fewer than half the inner products with the
/// pattern normal are positive, class B if strictly more.
pub fn classify_pattern(
    representatives: &[Vec<f64>],
    pattern_normal: &[f64],
) -> Result<Classification> {
    if representatives.is_empty() {
        return Err(Error::EmptySubset);
    }
    let dim = pattern_normal.len();
    if dim == 0 || representatives.iter().any(|w| w.len() != dim) {
        return Err(Error::DimensionMismatch);
    }
    let mut positive = 0usize;
    for (i, w) in representatives.iter().enumerate() {
        let ip: f64 = w.iter().zip(pattern_normal).map(|(a, b)| a * b).sum();
        if ip == 0.0 {
            return Err(Error::DegenerateInnerProduct(i));
        }
        if ip > 0.0 {
            positive += 1;
        }
    }
    let total = representatives.len();
    Ok(if 2 * positive < total {
        Classification::ClassA
    } else if 2 * positive > total {
        Classification::ClassB
    } else {
        Classification::Undecided
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::Order;

    fn fr(h: i64, k: i64) -> Fraction {
        Fraction::new(h, k).unwrap()
    }

    /// n lines through the origin at spread angles, all class B.
    pub(crate) fn spread_lines(n: usize) -> CentralArrangement {
        let mut text = String::from("normals2d\n");
        for i in 0..n {
            let angle = std::f64::consts::PI * (i as f64 + 0.1) / n as f64;
            text.push_str(&format!("B {} {}\n", angle.cos(), angle.sin()));
        }
        CentralArrangement::parse(&text).unwrap()
    }

    #[test]
    fn two_lines_make_four_quadrants() {
        let arr = CentralArrangement::parse("normals2d\nB 1.0 0.0\nB 0.0 1.0\n").unwrap();
        assert_eq!(arr.region_count(), 4);
        let mut rows: Vec<_> = arr.regions().to_vec();
        rows.sort_by_key(|r| r.iter().map(|&s| s == Sign::Plus).collect::<Vec<_>>());
        let distinct: HashSet<_> = arr.regions().iter().collect();
        assert_eq!(distinct.len(), 4);
        assert_eq!(arr.positive_side_count(0).unwrap(), 2);
        assert_eq!(arr.positive_side_count(1).unwrap(), 2);
    }

    #[test]
    fn three_lines_make_six_sectors() {
        let arr = spread_lines(3);
        assert_eq!(arr.region_count(), 6);
        for hp in 0..3 {
            assert_eq!(arr.positive_side_count(hp).unwrap(), 3);
        }
        assert!(arr.positive_side_count(3).is_err());
    }

    #[test]
    fn class_a_flips_orientation() {
        let a = CentralArrangement::parse("normals2d\nA 1.0 0.0\nB 0.0 1.0\n").unwrap();
        let b = CentralArrangement::parse("normals2d\nB -1.0 0.0\nB 0.0 1.0\n").unwrap();
        let rows = |arr: &CentralArrangement| {
            let mut v = arr.regions().to_vec();
            v.sort_by_key(|r| r.iter().map(|&s| s == Sign::Plus).collect::<Vec<_>>());
            v
        };
        assert_eq!(rows(&a), rows(&b));
    }

    #[test]
    fn sign_matrix_round_trip() {
        let arr = CentralArrangement::parse("signs 4 2\n++\n+-\n--\n-+\n").unwrap();
        assert_eq!(arr.region_count(), 4);
        assert_eq!(arr.hyperplane_count(), 2);
        assert_eq!(arr.positive_side_count(0).unwrap(), 2);
    }

    #[test]
    fn loader_rejects_bad_input() {
        // antipodal closure violated
        assert!(CentralArrangement::parse("signs 4 2\n++\n+-\n--\n++\n").is_err());
        assert!(CentralArrangement::parse("signs 2 1\n+\n+\n").is_err());
        // parallel (and anti-parallel) normals
        assert!(CentralArrangement::parse("normals2d\nB 1.0 0.0\nB 2.0 0.0\n").is_err());
        assert!(CentralArrangement::parse("normals2d\nB 1.0 1.0\nA 1.0 1.0\n").is_err());
        // malformed
        assert!(CentralArrangement::parse("signs 2 two\n+\n-\n").is_err());
        assert!(CentralArrangement::parse("signs 4 2\n++\n+x\n--\n-+\n").is_err());
        assert!(CentralArrangement::parse("normals2d\nC 1.0 0.0\n").is_err());
        assert!(CentralArrangement::parse("").is_err());
        // duplicate hyperplane columns
        assert!(CentralArrangement::parse("signs 4 2\n++\n--\n+-\n-+\n").is_ok());
        assert!(CentralArrangement::parse("signs 2 2\n++\n--\n").is_err());
    }

    #[test]
    fn all_regions_never_form_a_committee() {
        let arr = spread_lines(3);
        let all = RegionSubset::new((0..6).collect()).unwrap();
        let report = is_committee(&arr, &all).unwrap();
        assert!(!report.is_committee);
        for vote in &report.votes {
            assert_eq!(vote.ratio, fr(1, 2));
            assert!(!vote.in_upper_half);
        }
    }

    #[test]
    fn singleton_all_plus_region_is_a_committee() {
        let arr = CentralArrangement::parse("normals2d\nB 1.0 0.0\nB 0.0 1.0\n").unwrap();
        let idx = arr
            .regions()
            .iter()
            .position(|r| r.iter().all(|&s| s == Sign::Plus))
            .unwrap();
        let report = is_committee(&arr, &RegionSubset::new(vec![idx]).unwrap()).unwrap();
        assert!(report.is_committee);
        for vote in &report.votes {
            assert_eq!(vote.ratio, Fraction::ONE);
        }
    }

    #[test]
    fn symmetric_three_line_arrangement_has_a_two_thirds_committee() {
        // normals at 0, 120 and 240 degrees: no region is positive for all
        // three lines, yet committees exist
        let s = 0.8660254037844386_f64;
        let text = format!("normals2d\nB 1.0 0.0\nB -0.5 {s}\nB -0.5 -{s}\n");
        let arr = CentralArrangement::parse(&text).unwrap();
        assert!(arr
            .regions()
            .iter()
            .all(|r| r.iter().any(|&sg| sg == Sign::Minus)));
        // exhaustive search: some 3-region subset votes 2/3 on every line
        let mut found = None;
        for mask in 1u32..(1 << 6) {
            let indices: Vec<usize> = (0..6).filter(|i| mask & (1 << i) != 0).collect();
            let subset = RegionSubset::new(indices).unwrap();
            let report = is_committee(&arr, &subset).unwrap();
            if report.is_committee
                && subset.len() == 3
                && report.votes.iter().all(|v| v.ratio == fr(2, 3))
            {
                found = Some(subset);
                break;
            }
        }
        assert!(found.is_some(), "expected a 2/3 committee of three regions");
    }

    #[test]
    fn ratio_collection_matches_the_subsequence() {
        let two = CentralArrangement::parse("normals2d\nB 1.0 0.0\nB 0.0 1.0\n").unwrap();
        assert_eq!(
            ratio_collection(&two, 0).unwrap(),
            vec![fr(0, 1), fr(1, 3), fr(1, 2), fr(2, 3), fr(1, 1)]
        );
        let three = spread_lines(3);
        assert_eq!(
            ratio_collection(&three, 1).unwrap(),
            fbm::sequence(Order::new(3).unwrap())
        );
    }

    #[test]
    fn ratio_collection_respects_the_cap() {
        let arr = spread_lines(13); // 26 regions
        assert!(matches!(
            ratio_collection(&arr, 0),
            Err(Error::TooManyRegions { got: 26, .. })
        ));
    }

    #[test]
    fn subset_validation() {
        assert!(matches!(RegionSubset::new(vec![]), Err(Error::EmptySubset)));
        assert!(matches!(
            RegionSubset::new(vec![1, 2, 1]),
            Err(Error::DuplicateRegionIndex(1))
        ));
        let arr = spread_lines(2);
        let oob = RegionSubset::new(vec![7]).unwrap();
        assert!(matches!(
            is_committee(&arr, &oob),
            Err(Error::RegionIndex { index: 7, .. })
        ));
    }

    #[test]
    fn classify_examples() {
        let w = vec![vec![1.0, 0.0], vec![0.0, 1.0], vec![1.0, 1.0]];
        assert_eq!(
            classify_pattern(&w, &[1.0, 1.0]).unwrap(),
            Classification::ClassB
        );
        assert_eq!(
            classify_pattern(&w, &[-1.0, -1.0]).unwrap(),
            Classification::ClassA
        );
        let w2 = vec![vec![1.0, 0.0], vec![0.0, 1.0]];
        assert_eq!(
            classify_pattern(&w2, &[1.0, -1.0]).unwrap(),
            Classification::Undecided
        );
    }

    #[test]
    fn classify_rejects_degenerate_input() {
        let w = vec![vec![1.0, 0.0]];
        assert!(matches!(
            classify_pattern(&w, &[0.0, 1.0]),
            Err(Error::DegenerateInnerProduct(0))
        ));
        assert!(matches!(
            classify_pattern(&w, &[1.0, 0.0, 0.0]),
            Err(Error::DimensionMismatch)
        ));
        assert!(classify_pattern(&[], &[1.0]).is_err());
    }
}
