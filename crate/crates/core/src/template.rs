//! Weighted arc templates on a surface cut open along `alpha`.
//!
//! A template lists, for each boundary circle, the cyclic order in which
//! arc classes meet it. Each class meets the boundary in two endpoint
//! groups, `a` and `b`. Expanding at a weight vector replaces every group by
//! that many parallel endpoints; the copies are numbered left to right in
//! group `a` and either left to right (`parallel`) or right to left
//! (`reversed`) in group `b`.
//!
//! The minus circle becomes the top row of a ladder and the plus circle the
//! bottom row, so `--` classes live entirely in the top row and `++`
//! classes in the bottom row.
//!
//! File format, one directive per line, `#` starts a comment:
//!
//! ```text
//! genus 2
//! separating no
//! class w1 PM parallel
//! class w2 PP reversed
//! minus w1a w2a ...
//! plus  w1b w2b ...
//! ```

use std::fmt;
use std::ops::RangeInclusive;
use std::str::FromStr;
use std::sync::atomic::{AtomicBool, Ordering};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::catalog::CatalogRecord;
use crate::circuits::{arc_dual_graph, DualGraph};
use crate::distance::DistanceOptions;
use crate::error::{Error, Result};
use crate::faces::trace_faces;
use crate::gluing::enumerate_gluings_with;
use crate::ilp::{build_constraints, ArcClass, ArcKind, ConstraintSystem};
use crate::ladder::Ladder;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Matching {
    Parallel,
    Reversed,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum End {
    A,
    B,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct TemplateClass {
    pub kind: ArcKind,
    pub matching: Matching,
}

/// One endpoint group: class index (0-based) and which end.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SlotGroup {
    pub class: usize,
    pub end: End,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArcTemplate {
    pub genus: usize,
    pub separating: bool,
    pub classes: Vec<TemplateClass>,
    /// Groups along the minus circle (top row).
    pub minus: Vec<SlotGroup>,
    /// Groups along the plus circle (bottom row).
    pub plus: Vec<SlotGroup>,
}

impl ArcTemplate {
    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    pub fn arc_classes(&self) -> Vec<ArcClass> {
        self.classes
            .iter()
            .enumerate()
            .map(|(i, c)| ArcClass {
                index: i + 1,
                kind: c.kind,
            })
            .collect()
    }

    fn validate(&self) -> Result<()> {
        let bad = |message: String| Err(Error::Syntax { line: 0, message });
        if self.classes.is_empty() {
            return bad("template has no classes".into());
        }
        for (i, class) in self.classes.iter().enumerate() {
            let count = |row: &[SlotGroup], end: End| {
                row.iter().filter(|g| g.class == i && g.end == end).count()
            };
            let (ma, mb) = (count(&self.minus, End::A), count(&self.minus, End::B));
            let (pa, pb) = (count(&self.plus, End::A), count(&self.plus, End::B));
            if ma + pa != 1 || mb + pb != 1 {
                return bad(format!("class w{} needs exactly one a end and one b end", i + 1));
            }
            let on_minus = ma + mb;
            let expected = match class.kind {
                ArcKind::MM => 2,
                ArcKind::PP => 0,
                ArcKind::PM => 1,
            };
            if on_minus != expected {
                return bad(format!(
                    "class w{} is {} but has {on_minus} ends on the minus circle",
                    i + 1,
                    class.kind.name()
                ));
            }
        }
        for g in self.minus.iter().chain(&self.plus) {
            if g.class >= self.classes.len() {
                return bad(format!("undeclared class w{}", g.class + 1));
            }
        }
        Ok(())
    }

    /// Concrete rows at `weights`, glued at offset 0.
    pub fn expand(&self, weights: &[u64]) -> Result<Ladder> {
        if weights.len() != self.classes.len() {
            return Err(Error::WeightCount {
                expected: self.classes.len(),
                got: weights.len(),
            });
        }
        let mut pp = 0i64;
        let mut mm = 0i64;
        for (class, &w) in self.classes.iter().zip(weights) {
            match class.kind {
                ArcKind::PP => pp += w as i64,
                ArcKind::MM => mm += w as i64,
                ArcKind::PM => {}
            }
        }
        if pp != mm {
            return Err(Error::Unbalanced { pp, mm });
        }
        if weights.iter().all(|&w| w == 0) {
            return Err(Error::EmptyExpansion);
        }
        let mut first = Vec::with_capacity(weights.len());
        let mut next = 0usize;
        for &w in weights {
            first.push(next);
            next += w as usize;
        }
        let row = |groups: &[SlotGroup]| -> Vec<usize> {
            let mut out = Vec::new();
            for g in groups {
                let w = weights[g.class] as usize;
                let base = first[g.class];
                let reversed = g.end == End::B && self.classes[g.class].matching == Matching::Reversed;
                for c in 0..w {
                    out.push(base + if reversed { w - 1 - c } else { c });
                }
            }
            out
        };
        Ladder::from_labels(&row(&self.minus), &row(&self.plus))
    }

    /// Dual graph of the arc system: one vertex per region of the cut
    /// surface, one edge per class (labeled by its 0-based index).
    pub fn dual_graph(&self) -> Result<DualGraph> {
        let ones = vec![1; self.classes.len()];
        let ladder = self.expand(&ones).map_err(|e| match e {
            Error::Unbalanced { .. } => Error::Internal(
                "template dual graph needs equally many ++ and -- classes".into(),
            ),
            other => other,
        })?;
        let faces = trace_faces(&ladder);
        Ok(arc_dual_graph(&ladder, &faces))
    }

    pub fn constraints(&self) -> Result<ConstraintSystem> {
        build_constraints(&self.arc_classes(), &self.dual_graph()?, self.genus)
    }
}

fn parse_group(token: &str) -> Option<SlotGroup> {
    let body = token.strip_prefix('w')?;
    let (digits, end) = body.split_at(body.len().checked_sub(1)?);
    let end = match end {
        "a" => End::A,
        "b" => End::B,
        _ => return None,
    };
    let index: usize = digits.parse().ok()?;
    Some(SlotGroup {
        class: index.checked_sub(1)?,
        end,
    })
}

impl FromStr for ArcTemplate {
    type Err = Error;

    fn from_str(text: &str) -> Result<ArcTemplate> {
        let mut genus = None;
        let mut separating = false;
        let mut classes: Vec<(usize, TemplateClass)> = Vec::new();
        let mut minus = None;
        let mut plus = None;
        for (number, raw) in text.lines().enumerate() {
            let line = number + 1;
            let syntax = |message: String| Error::Syntax { line, message };
            let content = raw.split('#').next().unwrap_or("").trim();
            let mut words = content.split_whitespace();
            let Some(keyword) = words.next() else {
                continue;
            };
            let rest: Vec<&str> = words.collect();
            match keyword {
                "genus" => {
                    genus = Some(
                        rest.first()
                            .and_then(|g| g.parse().ok())
                            .ok_or_else(|| syntax("expected `genus N`".into()))?,
                    );
                }
                "separating" => {
                    separating = match rest.first().copied() {
                        Some("yes" | "true") => true,
                        Some("no" | "false") => false,
                        _ => return Err(syntax("expected `separating yes|no`".into())),
                    };
                }
                "class" => {
                    let [name, kind, matching] = rest[..] else {
                        return Err(syntax("expected `class wN KIND parallel|reversed`".into()));
                    };
                    let index = name
                        .strip_prefix('w')
                        .and_then(|n| n.parse::<usize>().ok())
                        .filter(|&n| n > 0)
                        .ok_or_else(|| syntax(format!("bad class name `{name}`")))?;
                    let kind = kind.parse().map_err(syntax)?;
                    let matching = match matching {
                        "parallel" => Matching::Parallel,
                        "reversed" => Matching::Reversed,
                        other => return Err(syntax(format!("unknown matching `{other}`"))),
                    };
                    classes.push((index, TemplateClass { kind, matching }));
                }
                "minus" | "plus" => {
                    let groups = rest
                        .iter()
                        .map(|t| parse_group(t).ok_or_else(|| syntax(format!("bad slot `{t}`"))))
                        .collect::<Result<Vec<_>>>()?;
                    if keyword == "minus" {
                        minus = Some(groups);
                    } else {
                        plus = Some(groups);
                    }
                }
                other => return Err(syntax(format!("unknown directive `{other}`"))),
            }
        }
        classes.sort_by_key(|(i, _)| *i);
        for (n, (i, _)) in classes.iter().enumerate() {
            if *i != n + 1 {
                return Err(Error::Syntax {
                    line: 0,
                    message: format!("classes must be numbered w1..w{}", classes.len()),
                });
            }
        }
        let missing = |what: &str| Error::Syntax {
            line: 0,
            message: format!("missing `{what}` line"),
        };
        let template = ArcTemplate {
            genus: genus.ok_or_else(|| missing("genus"))?,
            separating,
            classes: classes.into_iter().map(|(_, c)| c).collect(),
            minus: minus.ok_or_else(|| missing("minus"))?,
            plus: plus.ok_or_else(|| missing("plus"))?,
        };
        template.validate()?;
        Ok(template)
    }
}

impl fmt::Display for ArcTemplate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "genus {}", self.genus)?;
        writeln!(f, "separating {}", if self.separating { "yes" } else { "no" })?;
        for (i, c) in self.classes.iter().enumerate() {
            let matching = match c.matching {
                Matching::Parallel => "parallel",
                Matching::Reversed => "reversed",
            };
            writeln!(f, "class w{} {} {}", i + 1, c.kind.name(), matching)?;
        }
        let groups = |row: &[SlotGroup]| {
            row.iter()
                .map(|g| {
                    format!(
                        "w{}{}",
                        g.class + 1,
                        match g.end {
                            End::A => "a",
                            End::B => "b",
                        }
                    )
                })
                .collect::<Vec<_>>()
                .join(" ")
        };
        writeln!(f, "minus {}", groups(&self.minus))?;
        write!(f, "plus {}", groups(&self.plus))
    }
}

/// Knobs for [`pipeline`].
#[derive(Debug, Clone, Default)]
pub struct PipelineOptions<'a> {
    pub cancel: Option<&'a AtomicBool>,
    pub circuit_limit: Option<usize>,
}

/// For each objective in `objectives`, each weight solution and each
/// single-curve gluing of its expansion, one classified record, sorted by
/// `(P, weights, offset)`.
pub fn pipeline(
    template: &ArcTemplate,
    objectives: RangeInclusive<u64>,
    options: &PipelineOptions,
) -> Result<Vec<CatalogRecord>> {
    let system = template.constraints()?;
    let distance_options = DistanceOptions {
        ambient_genus: Some(template.genus),
        circuit_limit: options.circuit_limit,
        cancel: options.cancel,
    };
    let mut records = Vec::new();
    for p in objectives {
        if options.cancel.is_some_and(|c| c.load(Ordering::Relaxed)) {
            return Err(Error::Cancelled);
        }
        let solutions = system.enumerate_solutions(p);
        let batches = solutions
            .par_iter()
            .map(|weights| -> Result<Vec<CatalogRecord>> {
                let ladder = template.expand(weights)?;
                let gluings = enumerate_gluings_with(&ladder, true, &distance_options)?;
                Ok(gluings
                    .into_iter()
                    .filter_map(|g| {
                        let verdict = g.verdict?.verdict;
                        Some(CatalogRecord {
                            objective: p,
                            weights: weights.clone(),
                            offset: g.offset,
                            k: g.ladder.k(),
                            verdict,
                        })
                    })
                    .collect())
            })
            .collect::<Result<Vec<_>>>()?;
        records.extend(batches.into_iter().flatten());
    }
    records.sort_by(|a, b| {
        (a.objective, &a.weights, a.offset).cmp(&(b.objective, &b.weights, b.offset))
    });
    Ok(records)
}
