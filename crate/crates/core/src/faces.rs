//! Complementary regions of `alpha ∪ beta`.
//!
//! Each region is traced with the region on the left. Its boundary alternates
//! between a segment of `alpha` and an arc of `beta`. The rotation at every
//! intersection is (left, up, right, down), which gives four turning rules:
//!
//! * moving right along `alpha` into `i`, continue up the arc above `i`;
//! * moving left along `alpha` into `i`, continue down the arc below `i`;
//! * arriving at `i` through the arc above it, continue right along `alpha`;
//! * arriving at `i` through the arc below it, continue left along `alpha`.
//!
//! The segment of `alpha` between intersections `i` and `i + 1` carries the
//! label `(i + 1) mod k`.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ladder::{Ladder, Side, Slot};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum AlphaDir {
    /// Region lies above `alpha` along this segment.
    Right,
    /// Region lies below `alpha` along this segment.
    Left,
}

/// A directed segment of `alpha` on a region boundary.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct AlphaEdge {
    pub label: usize,
    pub dir: AlphaDir,
}

impl AlphaEdge {
    pub fn source(&self, k: usize) -> usize {
        match self.dir {
            AlphaDir::Right => (self.label + k - 1) % k,
            AlphaDir::Left => self.label,
        }
    }

    pub fn target(&self, k: usize) -> usize {
        match self.dir {
            AlphaDir::Right => self.label,
            AlphaDir::Left => (self.label + k - 1) % k,
        }
    }

    fn index(&self) -> usize {
        2 * self.label
            + match self.dir {
                AlphaDir::Left => 0,
                AlphaDir::Right => 1,
            }
    }
}

/// A directed arc of `beta` on a region boundary.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BetaEdge {
    pub source: usize,
    pub target: usize,
    /// Side of `alpha` through which the arc leaves `source`.
    pub side: Side,
    /// Side of `alpha` on which the arc reaches `target`.
    pub arrival: Side,
}

/// Boundary of one complementary region: `alpha[j]` is followed by `beta[j]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Face {
    pub alpha: Vec<AlphaEdge>,
    pub beta: Vec<BetaEdge>,
}

impl Face {
    /// Number of sides: a `2n`-gon has `n` segments of each curve.
    pub fn degree(&self) -> usize {
        2 * self.alpha.len()
    }

    /// The truncated boundary: `alpha` labels in traversal order.
    pub fn tuple(&self) -> Vec<usize> {
        self.alpha.iter().map(|e| e.label).collect()
    }

    /// The tuple rotated to its lexicographically least rotation.
    pub fn canonical_tuple(&self) -> Vec<usize> {
        least_rotation(&self.tuple())
    }
}

pub(crate) fn least_rotation(items: &[usize]) -> Vec<usize> {
    (0..items.len().max(1))
        .map(|r| {
            items[r.min(items.len())..]
                .iter()
                .chain(&items[..r.min(items.len())])
                .copied()
                .collect::<Vec<_>>()
        })
        .min()
        .unwrap_or_default()
}

/// Sorted list of canonical tuples; equal for face lists that agree up to
/// rotation of each tuple and order of the list.
pub fn canonical_face_list(faces: &[Face]) -> Vec<Vec<usize>> {
    let mut list: Vec<Vec<usize>> = faces.iter().map(Face::canonical_tuple).collect();
    list.sort();
    list
}

/// Trace every region boundary. Works for multi-curves too; the public
/// [`faces`] insists on a single curve.
pub fn trace_faces(ladder: &Ladder) -> Vec<Face> {
    let k = ladder.k();
    let mut used = vec![false; 2 * k];
    let mut faces = Vec::new();
    for label in 0..k {
        for dir in [AlphaDir::Left, AlphaDir::Right] {
            let seed = AlphaEdge { label, dir };
            if used[seed.index()] {
                continue;
            }
            let mut face = Face {
                alpha: Vec::new(),
                beta: Vec::new(),
            };
            let mut edge = seed;
            loop {
                used[edge.index()] = true;
                face.alpha.push(edge);
                let at = edge.target(k);
                let leave = match edge.dir {
                    AlphaDir::Right => Slot::top(at),
                    AlphaDir::Left => Slot::bottom(at),
                };
                let arrive = ladder.partner(leave);
                face.beta.push(BetaEdge {
                    source: at,
                    target: arrive.position,
                    side: leave.side,
                    arrival: arrive.side,
                });
                edge = match arrive.side {
                    Side::Top => AlphaEdge {
                        label: (arrive.position + 1) % k,
                        dir: AlphaDir::Right,
                    },
                    Side::Bottom => AlphaEdge {
                        label: arrive.position,
                        dir: AlphaDir::Left,
                    },
                };
                if edge == seed {
                    break;
                }
            }
            faces.push(face);
        }
    }
    faces
}

/// Region boundaries of a single-curve ladder.
pub fn faces(ladder: &Ladder) -> Result<Vec<Face>> {
    ladder.require_single_curve()?;
    Ok(trace_faces(ladder))
}

/// Census of regions by degree.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(into = "BTreeMap<String, usize>", try_from = "BTreeMap<String, usize>")]
pub struct FaceVector(pub BTreeMap<usize, usize>);

impl From<FaceVector> for BTreeMap<String, usize> {
    fn from(v: FaceVector) -> Self {
        v.0.into_iter().map(|(d, n)| (d.to_string(), n)).collect()
    }
}

impl TryFrom<BTreeMap<String, usize>> for FaceVector {
    type Error = std::num::ParseIntError;

    fn try_from(map: BTreeMap<String, usize>) -> std::result::Result<Self, Self::Error> {
        map.into_iter()
            .map(|(d, n)| Ok((d.parse()?, n)))
            .collect::<std::result::Result<_, _>>()
            .map(FaceVector)
    }
}

impl FaceVector {
    pub fn count(&self, degree: usize) -> usize {
        self.0.get(&degree).copied().unwrap_or(0)
    }

    pub fn total(&self) -> usize {
        self.0.values().sum()
    }
}

pub fn face_vector(faces: &[Face]) -> FaceVector {
    let mut census = BTreeMap::new();
    for face in faces {
        *census.entry(face.degree()).or_insert(0) += 1;
    }
    FaceVector(census)
}

impl fmt::Display for FaceVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|(d, n)| format!("{d}: {n}")).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

/// Genus of the closed surface obtained by capping the regular neighborhood
/// of a connected 4-valent graph with `k` vertices and `face_count` boundary
/// components: `chi = k - 2k + F`.
pub fn surface_genus(k: usize, face_count: usize) -> Result<usize> {
    let twice = (k + 2)
        .checked_sub(face_count)
        .ok_or_else(|| Error::Internal(format!("{face_count} faces for k = {k}")))?;
    if twice % 2 == 1 {
        return Err(Error::Parity {
            k,
            faces: face_count,
        });
    }
    Ok(twice / 2)
}

/// Genus of `N(alpha ∪ beta)` with its boundary capped by discs.
pub fn genus(ladder: &Ladder) -> Result<usize> {
    let faces = faces(ladder)?;
    surface_genus(ladder.k(), faces.len())
}

/// Outcome of removing bigons one at a time.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum BigonReduction {
    /// Bigon-free ladder and the number of bigons removed on the way.
    Reduced { ladder: Ladder, removed: usize },
    /// Every intersection was removed: the curves can be isotoped apart.
    Disjoint { removed: usize },
}

impl BigonReduction {
    pub fn removed(&self) -> usize {
        match self {
            BigonReduction::Reduced { removed, .. } | BigonReduction::Disjoint { removed } => {
                *removed
            }
        }
    }

    pub fn ladder(&self) -> Option<&Ladder> {
        match self {
            BigonReduction::Reduced { ladder, .. } => Some(ladder),
            BigonReduction::Disjoint { .. } => None,
        }
    }
}

/// Position `i` such that intersections `i` and `i + 1` (mod k) are joined by
/// a single arc on `side`, which together with the segment between them
/// bounds a bigon.
pub fn find_bigon(ladder: &Ladder) -> Option<(usize, Side)> {
    let k = ladder.k();
    if k < 2 {
        return None;
    }
    for side in [Side::Top, Side::Bottom] {
        for i in 0..k {
            let j = (i + 1) % k;
            if ladder.partner(Slot { side, position: i }) == (Slot { side, position: j }) {
                return Some((i, side));
            }
        }
    }
    None
}

/// Remove bigons until none remain. Each step deletes two intersections and
/// merges the two arcs on the far side of the bigon into one.
pub fn reduce_bigons(ladder: &Ladder) -> BigonReduction {
    let mut current = ladder.clone();
    let mut removed = 0;
    while let Some((i, side)) = find_bigon(&current) {
        removed += 1;
        let k = current.k();
        if k == 2 {
            return BigonReduction::Disjoint { removed };
        }
        let j = (i + 1) % k;
        let far = current.row(side.opposite());
        let (keep, merge) = (far[i], far[j]);
        let rebuild = |row: &[usize]| -> Vec<usize> {
            row.iter()
                .enumerate()
                .filter(|&(p, _)| p != i && p != j)
                .map(|(_, &l)| if l == merge { keep } else { l })
                .collect()
        };
        let top = rebuild(current.top());
        let bottom = rebuild(current.bottom());
        if top.is_empty() {
            return BigonReduction::Disjoint { removed };
        }
        current = Ladder::from_labels(&top, &bottom)
            .expect("bigon removal keeps every label paired");
    }
    BigonReduction::Reduced {
        ladder: current,
        removed,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn printed_face_list() -> Vec<Vec<usize>> {
        let printed: [&[usize]; 10] = [
            &[0, 11, 7],
            &[0, 5, 6],
            &[1, 6],
            &[8, 1],
            &[2, 7],
            &[9, 10, 2],
            &[8, 3],
            &[9, 3, 4],
            &[4, 5],
            &[10, 11],
        ];
        printed.iter().map(|t| t.to_vec()).collect()
    }

    #[test]
    fn fig8_faces_match_printed_list() {
        let faces = faces(&fixtures::f8()).unwrap();
        assert_eq!(faces.len(), 10);
        assert_eq!(face_vector(&faces).to_string(), "{4: 6, 6: 4}");
        let ours = canonical_face_list(&faces);
        let mut matched = 0;
        for t in printed_face_list() {
            if ours.contains(&least_rotation(&t)) {
                matched += 1;
            } else {
                // The printed (9, 3, 4) runs against the boundary orientation;
                // see `fig8_face_three_nine_four`.
                let mut r = t.clone();
                r.reverse();
                assert_eq!(t, vec![9, 3, 4]);
                assert!(ours.contains(&least_rotation(&r)));
            }
        }
        assert_eq!(matched, 9);
    }

    #[test]
    fn fig8_face_three_nine_four() {
        // 3 -> 2 along alpha, down the ++ arc from 2 to 9, 9 -> 8, up from 8
        // to 3, 3 -> 4, down from 4 to 3.
        let faces = faces(&fixtures::f8()).unwrap();
        let face = faces.iter().find(|f| f.canonical_tuple() == vec![3, 9, 4]).unwrap();
        let k = 12;
        let steps: Vec<(usize, usize, usize)> = face
            .alpha
            .iter()
            .zip(&face.beta)
            .map(|(a, b)| (a.source(k), a.target(k), b.target))
            .collect();
        assert_eq!(steps, vec![(3, 2, 9), (9, 8, 3), (3, 4, 3)]);
    }

    #[test]
    fn fig8_walk_from_segment_zero_going_right() {
        let faces = faces(&fixtures::f8()).unwrap();
        let face = faces
            .iter()
            .find(|f| f.alpha.contains(&AlphaEdge { label: 0, dir: AlphaDir::Right }))
            .unwrap();
        assert_eq!(face.canonical_tuple(), vec![0, 5, 6]);
        let start = face.alpha.iter().position(|e| e.label == 0).unwrap();
        let n = face.alpha.len();
        let walk: Vec<(usize, usize, usize)> = (0..n)
            .map(|s| {
                let j = (start + s) % n;
                let a = face.alpha[j];
                (a.source(12), a.target(12), face.beta[j].target)
            })
            .collect();
        assert_eq!(walk, vec![(11, 0, 5), (5, 4, 5), (5, 6, 11)]);
    }

    #[test]
    fn fig8_region_nine_ten_two() {
        // Walk from 2 to 1 along alpha, then 1 -> 8, 8 -> 9, 9 -> 10, 10 -> 9, 9 -> 2.
        let faces = faces(&fixtures::f8()).unwrap();
        let face = faces
            .iter()
            .find(|f| f.canonical_tuple() == vec![2, 9, 10])
            .unwrap();
        let mut verts: Vec<(usize, usize)> = face
            .alpha
            .iter()
            .map(|e| (e.source(12), e.target(12)))
            .collect();
        verts.sort();
        assert_eq!(verts, vec![(2, 1), (8, 9), (10, 9)]);
    }

    #[test]
    fn every_directed_edge_used_once() {
        let ladder = fixtures::f8();
        let faces = faces(&ladder).unwrap();
        let mut alpha: Vec<AlphaEdge> = faces.iter().flat_map(|f| f.alpha.clone()).collect();
        alpha.sort();
        alpha.dedup();
        assert_eq!(alpha.len(), 24);
        let mut beta: Vec<(usize, Side)> = faces
            .iter()
            .flat_map(|f| f.beta.iter().map(|b| (b.source, b.side)))
            .collect();
        beta.sort();
        beta.dedup();
        assert_eq!(beta.len(), 24);
    }

    #[test]
    fn genus_of_fixtures() {
        assert_eq!(genus(&fixtures::f8()).unwrap(), 2);
        assert_eq!(genus(&fixtures::g3()).unwrap(), 3);
        assert_eq!(fixtures::g3().k(), 29);
        assert_eq!(faces(&fixtures::g3()).unwrap().len(), 25);
        assert_eq!(genus(&Ladder::parse("0,1", "1,0").unwrap()).unwrap(), 1);
        assert_eq!(faces(&Ladder::parse("0,1", "1,0").unwrap()).unwrap().len(), 2);
    }

    #[test]
    fn single_intersection_is_one_square() {
        let ladder = Ladder::parse("0", "0").unwrap();
        let faces = faces(&ladder).unwrap();
        assert_eq!(faces.len(), 1);
        assert_eq!(faces[0].alpha.len(), 2);
        assert_eq!(faces[0].beta.len(), 2);
        assert_eq!(face_vector(&faces).to_string(), "{4: 1}");
        assert_eq!(genus(&ladder).unwrap(), 1);
    }

    #[test]
    fn multi_curve_rejected() {
        let ladder = Ladder::parse("0,1", "0,1").unwrap();
        assert_eq!(faces(&ladder), Err(Error::MultiCurve { components: 2 }));
        assert_eq!(genus(&ladder), Err(Error::MultiCurve { components: 2 }));
    }

    #[test]
    fn parity_is_checked() {
        assert_eq!(surface_genus(12, 10), Ok(2));
        assert_eq!(surface_genus(12, 9), Err(Error::Parity { k: 12, faces: 9 }));
        assert!(surface_genus(1, 5).unwrap_err().is_internal());
    }

    #[test]
    fn bigon_free_fixtures_unchanged() {
        for ladder in [fixtures::f8(), Ladder::parse("0", "0").unwrap(), fixtures::g3()] {
            assert_eq!(
                reduce_bigons(&ladder),
                BigonReduction::Reduced {
                    ladder: ladder.clone(),
                    removed: 0
                }
            );
        }
    }

    #[test]
    fn finger_move_is_undone() {
        // The two-intersection torus pair with a finger of arc 1 pushed up
        // through alpha just right of intersection 1.
        let base = Ladder::parse("0,1", "1,0").unwrap();
        let doubled = Ladder::parse("0,1,2,2", "1,3,3,0").unwrap();
        assert!(doubled.is_single_curve());
        assert_eq!(genus(&doubled).unwrap(), 1);
        match reduce_bigons(&doubled) {
            BigonReduction::Reduced { ladder, removed } => {
                assert_eq!(removed, 1);
                assert!(ladder.is_relabeling_of(&base));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn trivial_circle_reduces_to_disjoint() {
        let ladder = Ladder::parse("0,0", "1,1").unwrap();
        assert_eq!(reduce_bigons(&ladder), BigonReduction::Disjoint { removed: 1 });
    }
}
