//! Re-gluing the two sides of `alpha`.
//!
//! With arc endpoints fixed on both boundary circles, the identifications
//! of the circles are the `k` cyclic rotations of one row against the other.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::distance::{distance_with, DistanceOptions, DistanceResult};
use crate::error::Result;
use crate::ladder::Ladder;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GluingResult {
    pub offset: usize,
    /// The input with its top row rotated left by `offset`.
    pub ladder: Ladder,
    pub single_curve: bool,
    pub verdict: Option<DistanceResult>,
}

/// All `k` rotations of the top row, in offset order. With `classify`, the
/// single-curve ones are run through the distance test.
pub fn enumerate_gluings(ladder: &Ladder, classify: bool) -> Result<Vec<GluingResult>> {
    enumerate_gluings_with(ladder, classify, &DistanceOptions::default())
}

pub fn enumerate_gluings_with(
    ladder: &Ladder,
    classify: bool,
    options: &DistanceOptions,
) -> Result<Vec<GluingResult>> {
    (0..ladder.k())
        .into_par_iter()
        .map(|offset| {
            let glued = ladder.rotate_top(offset);
            let single_curve = glued.is_single_curve();
            let verdict = if classify && single_curve {
                Some(distance_with(&glued, options)?)
            } else {
                None
            };
            Ok(GluingResult {
                offset,
                ladder: glued,
                single_curve,
                verdict,
            })
        })
        .collect()
}

/// Offsets `1, 2, …, k-1` followed by `0`, the order in which gluings are
/// listed to the user.
pub fn display_order(results: &[GluingResult]) -> Vec<&GluingResult> {
    results
        .iter()
        .filter(|r| r.offset != 0)
        .chain(results.iter().filter(|r| r.offset == 0))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::distance::Verdict;
    use crate::fixtures;

    #[test]
    fn fig8_has_three_single_curve_gluings() {
        let f8 = fixtures::f8();
        let all = enumerate_gluings(&f8, true).unwrap();
        assert_eq!(all.len(), 12);
        let single: Vec<(usize, Verdict)> = all
            .iter()
            .filter(|g| g.single_curve)
            .map(|g| (g.offset, g.verdict.as_ref().unwrap().verdict))
            .collect();
        assert_eq!(
            single,
            vec![
                (0, Verdict::Distance4Plus),
                (5, Verdict::Distance3),
                (8, Verdict::Distance3)
            ]
        );
        assert_eq!(all[0].ladder, f8);
    }

    #[test]
    fn printed_rows_of_curve_one() {
        // The listing starts with offset 5; relabel 12 as 0 to compare.
        let f8 = fixtures::f8();
        let glued = f8.rotate_top(5);
        let printed = Ladder::parse(
            "2,7,12,5,9,8,7,1,6,11,4,3",
            "12,5,10,3,2,1,6,11,4,10,9,8",
        )
        .unwrap();
        assert!(glued.is_relabeling_of(&printed));
        let all = enumerate_gluings(&f8, false).unwrap();
        let order: Vec<usize> = display_order(&all)
            .into_iter()
            .filter(|g| g.single_curve)
            .map(|g| g.offset)
            .collect();
        assert_eq!(order, vec![5, 8, 0]);
    }

    #[test]
    fn relative_offset_is_all_that_matters() {
        let f8 = fixtures::f8();
        for (r, s) in [(3, 1), (7, 2), (5, 0), (2, 9)] {
            let both = f8.rotate_top(r).rotate_bottom(s);
            let rel = f8.rotate_top((r + 12 - s) % 12);
            assert_eq!(both.is_single_curve(), rel.is_single_curve());
            if rel.is_single_curve() {
                assert_eq!(
                    crate::distance::distance(&both, None).unwrap().verdict,
                    crate::distance::distance(&rel, None).unwrap().verdict
                );
            }
        }
    }
}
