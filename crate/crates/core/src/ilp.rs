//! Weight constraints for arc systems and exhaustive integer search.
//!
//! Every elementary circuit of the dual graph of an arc system is a curve
//! that a realized `beta` must cross often enough to fill with it, so the
//! weights of the classes it crosses must reach the filling threshold. The
//! `++` and `--` weights must balance so that both boundary circles carry the
//! same number of endpoints.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::circuits::{elementary_circuits, DualGraph};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ArcKind {
    /// Both ends on the plus boundary.
    PP,
    /// Both ends on the minus boundary.
    MM,
    /// One end on each boundary.
    PM,
}

impl ArcKind {
    pub fn name(self) -> &'static str {
        match self {
            ArcKind::PP => "PP",
            ArcKind::MM => "MM",
            ArcKind::PM => "PM",
        }
    }
}

impl FromStr for ArcKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<ArcKind, String> {
        match s.to_ascii_uppercase().as_str() {
            "PP" | "++" => Ok(ArcKind::PP),
            "MM" | "--" => Ok(ArcKind::MM),
            "PM" | "MP" | "+-" | "-+" => Ok(ArcKind::PM),
            _ => Err(format!("unknown arc kind `{s}`")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArcClass {
    /// 1-based, as in `w1`.
    pub index: usize,
    pub kind: ArcKind,
}

/// `sum of w_i over classes >= rhs`; classes are 1-based and ascending.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Inequality {
    pub classes: Vec<usize>,
    pub rhs: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstraintSystem {
    pub classes: Vec<ArcClass>,
    pub inequalities: Vec<Inequality>,
    pub threshold: u64,
}

/// Least intersection number of a filling pair on the closed surface of
/// genus `g`.
pub fn filling_threshold(genus: usize) -> u64 {
    if genus == 2 {
        4
    } else {
        (2 * genus as u64).saturating_sub(1)
    }
}

/// One inequality per elementary circuit of `graph`, whose edge labels are
/// 0-based class indices.
pub fn build_constraints(classes: &[ArcClass], graph: &DualGraph, genus: usize) -> Result<ConstraintSystem> {
    let circuits = elementary_circuits(graph)?;
    if circuits.is_empty() {
        return Err(Error::NoCircuits);
    }
    let threshold = filling_threshold(genus);
    let inequalities = circuits
        .iter()
        .map(|c| {
            let mut classes: Vec<usize> = c.edges.iter().map(|e| e + 1).collect();
            classes.sort_unstable();
            Inequality {
                classes,
                rhs: threshold,
            }
        })
        .collect();
    Ok(ConstraintSystem {
        classes: classes.to_vec(),
        inequalities,
        threshold,
    })
}

impl ConstraintSystem {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    fn of_kind(&self, kind: ArcKind) -> Vec<usize> {
        self.classes
            .iter()
            .filter(|c| c.kind == kind)
            .map(|c| c.index)
            .collect()
    }

    /// `(sum of PP weights, sum of MM weights)`.
    pub fn balance(&self, weights: &[u64]) -> (u64, u64) {
        let sum = |kind| self.of_kind(kind).iter().map(|&i| weights[i - 1]).sum();
        (sum(ArcKind::PP), sum(ArcKind::MM))
    }

    pub fn is_feasible(&self, weights: &[u64]) -> bool {
        if weights.len() != self.len() {
            return false;
        }
        let (pp, mm) = self.balance(weights);
        pp == mm
            && self
                .inequalities
                .iter()
                .all(|q| q.classes.iter().map(|&i| weights[i - 1]).sum::<u64>() >= q.rhs)
    }

    /// Every feasible vector with total `objective`, in lexicographic order.
    pub fn enumerate_solutions(&self, objective: u64) -> Vec<Vec<u64>> {
        let n = self.len();
        if n == 0 {
            return Vec::new();
        }
        // For each inequality, the last variable it mentions: once that is
        // assigned the inequality is decided.
        let mut closes: Vec<Vec<&Inequality>> = vec![Vec::new(); n];
        for q in &self.inequalities {
            if let Some(&last) = q.classes.last() {
                closes[last - 1].push(q);
            }
        }
        let sign: Vec<i64> = self
            .classes
            .iter()
            .map(|c| match c.kind {
                ArcKind::PP => 1,
                ArcKind::MM => -1,
                ArcKind::PM => 0,
            })
            .collect();
        let mut out = Vec::new();
        let mut w = vec![0u64; n];
        #[allow(clippy::too_many_arguments)]
        fn go(
            i: usize,
            left: u64,
            imbalance: i64,
            w: &mut Vec<u64>,
            sign: &[i64],
            closes: &[Vec<&Inequality>],
            out: &mut Vec<Vec<u64>>,
        ) {
            let n = w.len();
            if imbalance.unsigned_abs() > left {
                return;
            }
            let range = if i + 1 == n { left..=left } else { 0..=left };
            for v in range {
                w[i] = v;
                let ok = closes[i]
                    .iter()
                    .all(|q| q.classes.iter().map(|&c| w[c - 1]).sum::<u64>() >= q.rhs);
                if !ok {
                    continue;
                }
                let imbalance = imbalance + sign[i] * v as i64;
                if i + 1 == n {
                    if imbalance == 0 {
                        out.push(w.clone());
                    }
                } else {
                    go(i + 1, left - v, imbalance, w, sign, closes, out);
                }
            }
            w[i] = 0;
        }
        go(0, objective, 0, &mut w, &sign, &closes, &mut out);
        out
    }

    /// Least total weight of a feasible vector, searching upward from the
    /// largest right-hand side, and every vector attaining it.
    pub fn minimize(&self) -> Result<(u64, Vec<Vec<u64>>)> {
        let start = self.inequalities.iter().map(|q| q.rhs).max().unwrap_or(0);
        // Every weight at `start` satisfies each inequality; the cap leaves
        // room for balancing on top of that.
        let cap = 2 * start.max(1) * self.len().max(1) as u64;
        for p in start..=cap {
            let found = self.enumerate_solutions(p);
            if !found.is_empty() {
                return Ok((p, found));
            }
        }
        Err(Error::Infeasible { searched_up_to: cap })
    }
}

fn join_classes(classes: &[usize]) -> String {
    classes
        .iter()
        .map(|i| format!("w{i}"))
        .collect::<Vec<_>>()
        .join(" + ")
}

pub fn format_weights(weights: &[u64]) -> String {
    let items: Vec<String> = weights.iter().map(|w| w.to_string()).collect();
    format!("[{}]", items.join(", "))
}

impl fmt::Display for ConstraintSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for q in &self.inequalities {
            writeln!(f, "{} >= {}", join_classes(&q.classes), q.rhs)?;
        }
        let pp = self.of_kind(ArcKind::PP);
        let mm = self.of_kind(ArcKind::MM);
        if !pp.is_empty() || !mm.is_empty() {
            let side = |c: &[usize]| {
                if c.is_empty() {
                    "0".to_string()
                } else {
                    join_classes(c)
                }
            };
            writeln!(f, "{} = {}", side(&pp), side(&mm))?;
        }
        let all: Vec<String> = self.classes.iter().map(|c| format!("w{}", c.index)).collect();
        write!(f, "{} >= 0", all.join(", "))
    }
}

impl FromStr for ConstraintSystem {
    type Err = Error;

    /// Reads the format written by `Display`. Classes named on the left of
    /// the equality are `++`, on the right `--`, and the rest `+-`.
    fn from_str(text: &str) -> Result<ConstraintSystem> {
        let syntax = |line: usize, message: &str| Error::Syntax {
            line,
            message: message.to_string(),
        };
        let parse_sum = |line: usize, s: &str| -> Result<Vec<usize>> {
            if s.trim() == "0" {
                return Ok(Vec::new());
            }
            s.split(['+', ','])
                .map(|t| {
                    t.trim()
                        .strip_prefix('w')
                        .and_then(|n| n.parse::<usize>().ok())
                        .filter(|&n| n > 0)
                        .ok_or_else(|| syntax(line, "expected a variable like w3"))
                })
                .collect()
        };
        let mut inequalities = Vec::new();
        let mut pp = Vec::new();
        let mut mm = Vec::new();
        let mut n = None;
        for (number, raw) in text.lines().enumerate() {
            let line = number + 1;
            let raw = raw.trim();
            if raw.is_empty() || raw.starts_with('#') {
                continue;
            }
            if let Some((lhs, rhs)) = raw.split_once(">=") {
                let rhs: u64 = rhs
                    .trim()
                    .parse()
                    .map_err(|_| syntax(line, "right-hand side must be a nonnegative integer"))?;
                let mut classes = parse_sum(line, lhs)?;
                if rhs == 0 {
                    // Sign constraints; they also fix the number of classes.
                    n = classes.iter().copied().max();
                    continue;
                }
                classes.sort_unstable();
                inequalities.push(Inequality { classes, rhs });
            } else if let Some((lhs, rhs)) = raw.split_once('=') {
                pp = parse_sum(line, lhs)?;
                mm = parse_sum(line, rhs)?;
            } else {
                return Err(syntax(line, "expected `>=` or `=`"));
            }
        }
        let mentioned = inequalities
            .iter()
            .flat_map(|q| q.classes.iter())
            .chain(&pp)
            .chain(&mm)
            .copied()
            .max()
            .unwrap_or(0);
        let n = n.unwrap_or(mentioned).max(mentioned);
        if n == 0 {
            return Err(Error::EmptyInput);
        }
        let classes = (1..=n)
            .map(|index| ArcClass {
                index,
                kind: if pp.contains(&index) {
                    ArcKind::PP
                } else if mm.contains(&index) {
                    ArcKind::MM
                } else {
                    ArcKind::PM
                },
            })
            .collect();
        let threshold = inequalities.iter().map(|q| q.rhs).max().unwrap_or(0);
        Ok(ConstraintSystem {
            classes,
            inequalities,
            threshold,
        })
    }
}
