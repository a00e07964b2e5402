//! Ladder representation of a curve pair.
//!
//! The curve `alpha` is drawn as a horizontal segment whose two ends are
//! identified. It meets `beta` in `k` points numbered `0..k` from left to
//! right. Above and below each intersection hangs half of an arc of
//! `beta \ alpha`; the label written there names the arc. Every arc has two
//! ends, so every label occurs exactly twice over both rows.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Which side of `alpha` a half-arc hangs from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Side {
    Top,
    Bottom,
}

impl Side {
    pub fn opposite(self) -> Side {
        match self {
            Side::Top => Side::Bottom,
            Side::Bottom => Side::Top,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Side::Top => "top",
            Side::Bottom => "bottom",
        }
    }
}

/// One endpoint position of an arc: a row and an intersection index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Slot {
    pub side: Side,
    pub position: usize,
}

impl Slot {
    pub fn top(position: usize) -> Slot {
        Slot { side: Side::Top, position }
    }

    pub fn bottom(position: usize) -> Slot {
        Slot { side: Side::Bottom, position }
    }
}

/// Direction in which `beta` crosses `alpha` at an intersection.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Heading {
    Down,
    Up,
}

/// How each component of `beta` is oriented.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OrientationRule {
    /// `beta` points down at the smallest intersection index of each cycle.
    #[default]
    DownAtMinimum,
    /// The reverse orientation of every cycle.
    UpAtMinimum,
}

/// Result of walking `beta` through the slot matching.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BetaTraversal {
    /// Each cycle lists intersection indices in the order `beta` visits them.
    pub cycles: Vec<Vec<usize>>,
    /// Heading of `beta` at each intersection index.
    pub orientation: Vec<Heading>,
}

impl BetaTraversal {
    pub fn is_single_curve(&self) -> bool {
        self.cycles.len() == 1
    }
}

#[derive(Serialize, Deserialize)]
struct LadderRows {
    top: Vec<i64>,
    bottom: Vec<i64>,
}

/// A validated, label-normalized ladder.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "LadderRows", into = "LadderRows")]
pub struct Ladder {
    top: Vec<usize>,
    bottom: Vec<usize>,
    // slot index -> matching slot index; top i is i, bottom i is k + i
    partner: Vec<usize>,
}

impl TryFrom<LadderRows> for Ladder {
    type Error = Error;

    fn try_from(rows: LadderRows) -> Result<Self> {
        Ladder::new(rows.top, rows.bottom)
    }
}

impl From<Ladder> for LadderRows {
    fn from(ladder: Ladder) -> Self {
        LadderRows {
            top: ladder.top.iter().map(|&l| l as i64).collect(),
            bottom: ladder.bottom.iter().map(|&l| l as i64).collect(),
        }
    }
}

/// Parse one row of comma-separated integers. Surrounding brackets are
/// tolerated so that rows printed by `perm` can be pasted back in.
pub fn parse_row(text: &str) -> Result<Vec<i64>> {
    let trimmed = text.trim();
    let inner = trimmed
        .strip_prefix('[')
        .and_then(|t| t.strip_suffix(']'))
        .unwrap_or(trimmed);
    if inner.trim().is_empty() {
        return Err(Error::EmptyInput);
    }
    inner
        .split(',')
        .map(|tok| {
            let tok = tok.trim();
            tok.parse::<i64>()
                .map_err(|_| Error::BadToken(tok.to_string()))
        })
        .collect()
}

impl Ladder {
    /// Validate two rows and rename labels to `0..k` preserving their order.
    pub fn new(top: Vec<i64>, bottom: Vec<i64>) -> Result<Ladder> {
        if top.is_empty() && bottom.is_empty() {
            return Err(Error::EmptyInput);
        }
        if top.len() != bottom.len() {
            return Err(Error::LengthMismatch {
                top: top.len(),
                bottom: bottom.len(),
            });
        }
        let mut counts: BTreeMap<i64, usize> = BTreeMap::new();
        for &label in top.iter().chain(&bottom) {
            *counts.entry(label).or_default() += 1;
        }
        if let Some((&label, &count)) = counts.iter().find(|(_, &c)| c != 2) {
            return Err(Error::BadMultiplicity { label, count });
        }
        let rename: BTreeMap<i64, usize> = counts
            .keys()
            .enumerate()
            .map(|(i, &label)| (label, i))
            .collect();
        let top = top.iter().map(|l| rename[l]).collect();
        let bottom = bottom.iter().map(|l| rename[l]).collect();
        Ok(Ladder::from_normalized(top, bottom))
    }

    /// Parse the two comma-separated rows typed at the prompts.
    pub fn parse(top_text: &str, bottom_text: &str) -> Result<Ladder> {
        Ladder::new(parse_row(top_text)?, parse_row(bottom_text)?)
    }

    /// Read a ladder from text: the first two lines that are neither blank
    /// nor `#` comments are the top and bottom rows. The prompt strings may
    /// precede the rows.
    pub fn from_text(text: &str) -> Result<Ladder> {
        let mut rows = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'))
            .map(|l| match l.rsplit_once(':') {
                Some((_, rest)) => rest,
                None => l,
            });
        let top = rows.next().ok_or(Error::EmptyInput)?;
        let bottom = rows.next().ok_or(Error::EmptyInput)?;
        Ladder::parse(top, bottom)
    }

    // Rows must already use labels 0..k, each exactly twice.
    fn from_normalized(top: Vec<usize>, bottom: Vec<usize>) -> Ladder {
        let k = top.len();
        let mut first: Vec<Option<usize>> = vec![None; k];
        let mut partner = vec![usize::MAX; 2 * k];
        for (slot, &label) in top.iter().chain(&bottom).enumerate() {
            match first[label] {
                None => first[label] = Some(slot),
                Some(other) => {
                    partner[slot] = other;
                    partner[other] = slot;
                }
            }
        }
        Ladder {
            top,
            bottom,
            partner,
        }
    }

    /// Build from rows with arbitrary non-negative labels.
    pub fn from_labels(top: &[usize], bottom: &[usize]) -> Result<Ladder> {
        Ladder::new(
            top.iter().map(|&l| l as i64).collect(),
            bottom.iter().map(|&l| l as i64).collect(),
        )
    }

    /// Number of intersections of `alpha` and `beta`.
    pub fn k(&self) -> usize {
        self.top.len()
    }

    pub fn top(&self) -> &[usize] {
        &self.top
    }

    pub fn bottom(&self) -> &[usize] {
        &self.bottom
    }

    pub fn row(&self, side: Side) -> &[usize] {
        match side {
            Side::Top => &self.top,
            Side::Bottom => &self.bottom,
        }
    }

    pub fn label(&self, slot: Slot) -> usize {
        self.row(slot.side)[slot.position]
    }

    fn slot_index(&self, slot: Slot) -> usize {
        match slot.side {
            Side::Top => slot.position,
            Side::Bottom => self.k() + slot.position,
        }
    }

    fn slot_at(&self, index: usize) -> Slot {
        let k = self.k();
        if index < k {
            Slot::top(index)
        } else {
            Slot::bottom(index - k)
        }
    }

    /// The other end of the arc that occupies `slot`.
    pub fn partner(&self, slot: Slot) -> Slot {
        self.slot_at(self.partner[self.slot_index(slot)])
    }

    /// Intersection reached through the half-arc above `i`.
    pub fn up(&self, i: usize) -> usize {
        self.partner(Slot::top(i)).position
    }

    /// Intersection reached through the half-arc below `i`.
    pub fn down(&self, i: usize) -> usize {
        self.partner(Slot::bottom(i)).position
    }

    /// Walk `beta`: cross each intersection vertically, then follow the arc
    /// leaving on the far side to its other end.
    pub fn beta_components(&self) -> BetaTraversal {
        self.beta_components_with(OrientationRule::DownAtMinimum)
    }

    pub fn beta_components_with(&self, rule: OrientationRule) -> BetaTraversal {
        let k = self.k();
        let mut orientation: Vec<Option<Heading>> = vec![None; k];
        let mut cycles = Vec::new();
        for start in 0..k {
            if orientation[start].is_some() {
                continue;
            }
            let mut cycle = Vec::new();
            let mut at = start;
            let mut heading = Heading::Down;
            loop {
                orientation[at] = Some(heading);
                cycle.push(at);
                let exit = match heading {
                    Heading::Down => Slot::bottom(at),
                    Heading::Up => Slot::top(at),
                };
                let arrival = self.partner(exit);
                heading = match arrival.side {
                    Side::Top => Heading::Down,
                    Side::Bottom => Heading::Up,
                };
                at = arrival.position;
                if at == start {
                    break;
                }
            }
            if rule == OrientationRule::UpAtMinimum {
                for &i in &cycle {
                    orientation[i] = orientation[i].map(|h| match h {
                        Heading::Down => Heading::Up,
                        Heading::Up => Heading::Down,
                    });
                }
                cycle[1..].reverse();
            }
            cycles.push(cycle);
        }
        BetaTraversal {
            cycles,
            orientation: orientation.into_iter().map(|h| h.unwrap()).collect(),
        }
    }

    pub fn is_single_curve(&self) -> bool {
        self.beta_components().is_single_curve()
    }

    pub(crate) fn require_single_curve(&self) -> Result<()> {
        let components = self.beta_components().cycles.len();
        if components == 1 {
            Ok(())
        } else {
            Err(Error::MultiCurve { components })
        }
    }

    /// Rotate the top row left by `offset`: new top `i` is old top `i + offset`.
    pub fn rotate_top(&self, offset: usize) -> Ladder {
        let k = self.k();
        let top = (0..k).map(|i| self.top[(i + offset) % k]).collect();
        Ladder::from_normalized(top, self.bottom.clone())
    }

    /// Rotate the bottom row left by `offset`.
    pub fn rotate_bottom(&self, offset: usize) -> Ladder {
        let k = self.k();
        let bottom = (0..k).map(|i| self.bottom[(i + offset) % k]).collect();
        Ladder::from_normalized(self.top.clone(), bottom)
    }

    /// Move the basepoint of `alpha`: both rows rotate left by `offset`.
    pub fn rotate_basepoint(&self, offset: usize) -> Ladder {
        self.rotate_top(offset).rotate_bottom(offset)
    }

    /// Exchange the rows (reflection across `alpha`).
    pub fn swap_rows(&self) -> Ladder {
        Ladder::from_normalized(self.bottom.clone(), self.top.clone())
    }

    /// Reverse the direction of `alpha` (reflection along `alpha`).
    pub fn reverse_alpha(&self) -> Ladder {
        let mut top = self.top.clone();
        let mut bottom = self.bottom.clone();
        top.reverse();
        bottom.reverse();
        Ladder::from_normalized(top, bottom)
    }

    /// Rename labels in order of first appearance along top then bottom.
    /// Two ladders are equal up to relabeling iff their canonical forms agree.
    pub fn canonical_labels(&self) -> Ladder {
        let mut rename = vec![usize::MAX; self.k()];
        let mut next = 0;
        for &l in self.top.iter().chain(&self.bottom) {
            if rename[l] == usize::MAX {
                rename[l] = next;
                next += 1;
            }
        }
        Ladder::from_normalized(
            self.top.iter().map(|&l| rename[l]).collect(),
            self.bottom.iter().map(|&l| rename[l]).collect(),
        )
    }

    pub fn is_relabeling_of(&self, other: &Ladder) -> bool {
        self.canonical_labels() == other.canonical_labels()
    }

    /// True if some rotation of the top row relative to the bottom, combined
    /// with a relabeling, turns `self` into `other`.
    pub fn is_gluing_of(&self, other: &Ladder) -> bool {
        self.k() == other.k()
            && (0..self.k()).any(|r| {
                (0..self.k()).any(|s| self.rotate_basepoint(s).rotate_top(r).is_relabeling_of(other))
            })
    }

}

pub(crate) fn format_row(row: &[usize]) -> String {
    let items: Vec<String> = row.iter().map(|l| l.to_string()).collect();
    items.join(",")
}

impl fmt::Display for Ladder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "top:    {}", format_row(&self.top))?;
        write!(f, "bottom: {}", format_row(&self.bottom))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn parses_fig8_rows() {
        let ladder = fixtures::f8();
        assert_eq!(ladder.k(), 12);
        assert_eq!(ladder.top()[0], 1);
        assert_eq!(ladder.bottom()[11], 8);
    }

    #[test]
    fn smallest_ladder() {
        let ladder = Ladder::parse("0", "0").unwrap();
        assert_eq!(ladder.k(), 1);
        assert_eq!(ladder.partner(Slot::top(0)), Slot::bottom(0));
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(
            Ladder::parse("0,1", "0,2"),
            Err(Error::BadMultiplicity { label: 1, count: 1 })
        ));
        assert!(matches!(
            Ladder::parse("0,1", "0"),
            Err(Error::LengthMismatch { top: 2, bottom: 1 })
        ));
        assert_eq!(Ladder::parse("", "0"), Err(Error::EmptyInput));
        assert_eq!(Ladder::parse("  ", " "), Err(Error::EmptyInput));
        assert_eq!(Ladder::parse("0,x", "x,0"), Err(Error::BadToken("x".into())));
        assert!(matches!(
            Ladder::parse("0,0,0", "1,1,1"),
            Err(Error::BadMultiplicity { label: 0, count: 3 })
        ));
    }

    #[test]
    fn normalizes_arbitrary_labels() {
        let ladder = Ladder::parse("[12, 7]", "7, 12").unwrap();
        assert_eq!(ladder.top(), &[1, 0]);
        assert_eq!(ladder.bottom(), &[0, 1]);
        let neg = Ladder::parse("-3, 5", "5, -3").unwrap();
        assert_eq!(neg.top(), &[0, 1]);
    }

    #[test]
    fn up_down_are_mutually_inverse() {
        let ladder = fixtures::f8();
        for i in 0..ladder.k() {
            let j = ladder.up(i);
            assert!(ladder.up(j) == i || ladder.down(j) == i);
            let j = ladder.down(i);
            assert!(ladder.up(j) == i || ladder.down(j) == i);
        }
        assert_eq!(ladder.up(0), 5);
        assert_eq!(ladder.down(0), 7);
        assert_eq!(ladder.up(9), 10);
        assert_eq!(ladder.down(9), 2);
    }

    #[test]
    fn fig8_beta_is_one_cycle() {
        let t = fixtures::f8().beta_components();
        assert_eq!(t.cycles.len(), 1);
        assert_eq!(t.cycles[0].len(), 12);
        for i in 0..12 {
            let expected = if i >= 9 { Heading::Up } else { Heading::Down };
            assert_eq!(t.orientation[i], expected, "index {i}");
        }
    }

    #[test]
    fn small_traversals() {
        let t = Ladder::parse("0", "0").unwrap().beta_components();
        assert_eq!(t.cycles, vec![vec![0]]);
        assert_eq!(t.orientation, vec![Heading::Down]);

        let t = Ladder::parse("0,1", "1,0").unwrap().beta_components();
        assert_eq!(t.cycles, vec![vec![0, 1]]);

        let t = Ladder::parse("0,0", "1,1").unwrap().beta_components();
        assert_eq!(t.cycles.len(), 1);
        assert_eq!(t.orientation, vec![Heading::Down, Heading::Up]);

        let t = Ladder::parse("0,1", "0,1").unwrap().beta_components();
        assert_eq!(t.cycles, vec![vec![0], vec![1]]);
    }

    #[test]
    fn flipped_rule_reverses_cycles() {
        let ladder = fixtures::f8();
        let down = ladder.beta_components();
        let up = ladder.beta_components_with(OrientationRule::UpAtMinimum);
        assert_eq!(up.cycles[0][0], 0);
        let mut rev = down.cycles[0].clone();
        rev[1..].reverse();
        assert_eq!(up.cycles[0], rev);
        for i in 0..12 {
            assert_ne!(up.orientation[i], down.orientation[i]);
        }
    }

    #[test]
    fn serde_round_trip_revalidates() {
        let ladder = fixtures::f8();
        let json = serde_json::to_string(&ladder).unwrap();
        let back: Ladder = serde_json::from_str(&json).unwrap();
        assert_eq!(back, ladder);
        assert!(serde_json::from_str::<Ladder>(r#"{"top":[0],"bottom":[1]}"#).is_err());
    }
}
