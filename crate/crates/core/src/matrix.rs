//! The characteristic matrix: one row `[v-, w+, v+, w-]` per intersection.
//!
//! `v-` and `v+` are the neighbors along `alpha`, `w+` and `w-` the neighbors
//! along `beta` through the half-arc above and below. Entries are signed
//! residues with magnitude in `1..=k`, where `k` stands for index 0 so that
//! every entry carries a meaningful sign. `w+` is negative exactly when
//! `beta` points down at the intersection.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ladder::{Heading, Ladder, OrientationRule, Slot};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharacteristicMatrix {
    pub rows: Vec<[i64; 4]>,
}

fn residue(i: usize, k: usize) -> i64 {
    let r = i % k;
    if r == 0 {
        k as i64
    } else {
        r as i64
    }
}

impl Ladder {
    /// Characteristic matrix under the default orientation of `beta`.
    pub fn characteristic_matrix(&self) -> Result<CharacteristicMatrix> {
        self.characteristic_matrix_with(OrientationRule::DownAtMinimum)
    }

    pub fn characteristic_matrix_with(&self, rule: OrientationRule) -> Result<CharacteristicMatrix> {
        let traversal = self.beta_components_with(rule);
        if !traversal.is_single_curve() {
            return Err(Error::MultiCurve {
                components: traversal.cycles.len(),
            });
        }
        let k = self.k();
        let rows = (0..k)
            .map(|i| {
                let up = residue(self.up(i), k);
                let down = residue(self.down(i), k);
                let (w_plus, w_minus) = match traversal.orientation[i] {
                    Heading::Down => (-up, down),
                    Heading::Up => (up, -down),
                };
                [-residue(i + k - 1, k), w_plus, residue(i + 1, k), w_minus]
            })
            .collect();
        Ok(CharacteristicMatrix { rows })
    }
}

impl CharacteristicMatrix {
    pub fn k(&self) -> usize {
        self.rows.len()
    }

    /// Heading of `beta` at row `i`, read from the sign of `w+`.
    pub fn heading(&self, i: usize) -> Heading {
        if self.rows[i][1] < 0 {
            Heading::Down
        } else {
            Heading::Up
        }
    }

    /// Check the structural invariants of every row.
    pub fn validate(&self) -> Result<()> {
        let k = self.k();
        if k == 0 {
            return Err(Error::EmptyInput);
        }
        let bad = |i: usize, what: &str| Err(Error::Internal(format!("matrix row {i}: {what}")));
        for (i, row) in self.rows.iter().enumerate() {
            let [vm, wp, vp, wm] = *row;
            if vm != -residue(i + k - 1, k) || vp != residue(i + 1, k) {
                return bad(i, "alpha neighbors");
            }
            if (wp < 0) == (wm < 0) {
                return bad(i, "exactly one of w+ and w- must be negative");
            }
            for w in [wp, wm] {
                if w == 0 || w.unsigned_abs() as usize > k {
                    return bad(i, "w entry out of range");
                }
            }
        }
        Ok(())
    }

    /// Rebuild a ladder from the matrix. The positive `w` entry of a row is
    /// the next intersection along `beta`, so the arcs can be laid out in
    /// traversal order. Labels come out in that order.
    pub fn to_ladder(&self) -> Result<Ladder> {
        self.validate()?;
        let k = self.k();
        let index = |w: i64| (w.unsigned_abs() as usize) % k;
        let mut top = vec![usize::MAX; k];
        let mut bottom = vec![usize::MAX; k];
        let mut place = |slot: Slot, label: usize| -> Result<()> {
            let row = match slot.side {
                crate::ladder::Side::Top => &mut top,
                crate::ladder::Side::Bottom => &mut bottom,
            };
            if row[slot.position] != usize::MAX {
                return Err(Error::Internal(format!(
                    "matrix assigns two arcs to {:?}",
                    slot
                )));
            }
            row[slot.position] = label;
            Ok(())
        };
        for i in 0..k {
            let [_, wp, _, wm] = self.rows[i];
            let (exit, next) = match self.heading(i) {
                Heading::Down => (Slot::bottom(i), index(wm)),
                Heading::Up => (Slot::top(i), index(wp)),
            };
            let entry = match self.heading(next) {
                Heading::Down => Slot::top(next),
                Heading::Up => Slot::bottom(next),
            };
            place(exit, i)?;
            place(entry, i)?;
        }
        Ladder::from_labels(&top, &bottom)
    }
}

impl fmt::Display for CharacteristicMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (n, row) in self.rows.iter().enumerate() {
            if n > 0 {
                writeln!(f)?;
            }
            write!(f, "[{}, {}, {}, {}]", row[0], row[1], row[2], row[3])?;
        }
        Ok(())
    }
}
