//! Command results as structured values with a fixed text rendering.
//!
//! The interactive session and the batch interface both go through
//! [`run`], so a command prints the same bytes either way.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::distance::{candidates, distance_with, DistanceOptions, FillStatus, Verdict};
use crate::error::Result;
use crate::faces::{face_vector, faces, genus, FaceVector};
use crate::gluing::{display_order, enumerate_gluings_with};
use crate::ilp::{format_weights, ConstraintSystem};
use crate::ladder::Ladder;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Command {
    Genus,
    Distance,
    Curves,
    Matrix,
    Faces,
    Perm,
}

impl Command {
    pub const ALL: [Command; 6] = [
        Command::Genus,
        Command::Distance,
        Command::Curves,
        Command::Matrix,
        Command::Faces,
        Command::Perm,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Command::Genus => "genus",
            Command::Distance => "distance",
            Command::Curves => "curves",
            Command::Matrix => "matrix",
            Command::Faces => "faces",
            Command::Perm => "perm",
        }
    }
}

impl FromStr for Command {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Command, String> {
        Command::ALL
            .into_iter()
            .find(|c| c.name() == s.trim().to_ascii_lowercase())
            .ok_or_else(|| format!("unknown command `{}`", s.trim()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurveLine {
    pub path: Vec<usize>,
    pub genus: usize,
    pub status: FillStatus,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PermLine {
    pub number: usize,
    pub offset: usize,
    pub verdict: Verdict,
    pub top: Vec<usize>,
    pub bottom: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "command", rename_all = "lowercase")]
pub enum Report {
    Genus {
        genus: usize,
        k: usize,
    },
    Faces {
        vector: FaceVector,
        tuples: Vec<Vec<usize>>,
    },
    Curves {
        curves: Vec<CurveLine>,
    },
    Distance {
        verdict: Verdict,
        genus: usize,
        ambient_genus: usize,
        k: usize,
        candidates: usize,
        /// Circuit of the witness curve for distance 3.
        witness: Option<Vec<usize>>,
    },
    Matrix {
        rows: Vec<[i64; 4]>,
    },
    Perm {
        curves: Vec<PermLine>,
    },
}

pub fn run(ladder: &Ladder, command: Command, ambient_genus: Option<usize>) -> Result<Report> {
    let options = DistanceOptions {
        ambient_genus,
        ..Default::default()
    };
    run_with(ladder, command, &options)
}

/// [`run`] with a circuit limit and a cancel flag for the slow commands.
pub fn run_with(ladder: &Ladder, command: Command, options: &DistanceOptions) -> Result<Report> {
    let ambient_genus = options.ambient_genus;
    Ok(match command {
        Command::Genus => Report::Genus {
            genus: genus(ladder)?,
            k: ladder.k(),
        },
        Command::Faces => {
            let faces = faces(ladder)?;
            Report::Faces {
                vector: face_vector(&faces),
                tuples: faces.iter().map(|f| f.tuple()).collect(),
            }
        }
        Command::Curves => {
            let g = ambient_genus.unwrap_or(genus(ladder)?);
            Report::Curves {
                curves: candidates(ladder, g)?
                    .into_iter()
                    .map(|c| CurveLine {
                        path: c.circuit.edges,
                        genus: c.fill_genus,
                        status: c.status,
                    })
                    .collect(),
            }
        }
        Command::Distance => {
            let r = distance_with(ladder, options)?;
            Report::Distance {
                verdict: r.verdict,
                genus: r.genus,
                ambient_genus: r.ambient_genus,
                k: ladder.k(),
                candidates: r.candidates,
                witness: r.witness.map(|w| w.circuit.edges),
            }
        }
        Command::Matrix => Report::Matrix {
            rows: ladder.characteristic_matrix()?.rows,
        },
        Command::Perm => perm(ladder, options)?,
    })
}

/// Single-curve gluings of `ladder`, classified, numbered in listing order.
/// Works for multi-curve input too.
pub fn perm(ladder: &Ladder, options: &DistanceOptions) -> Result<Report> {
    let all = enumerate_gluings_with(ladder, true, options)?;
    let curves = display_order(&all)
        .into_iter()
        .filter(|g| g.single_curve)
        .enumerate()
        .map(|(n, g)| PermLine {
            number: n + 1,
            offset: g.offset,
            verdict: g.verdict.as_ref().expect("single curves are classified").verdict,
            top: g.ladder.top().to_vec(),
            bottom: g.ladder.bottom().to_vec(),
        })
        .collect();
    Ok(Report::Perm { curves })
}

fn bracketed<T: fmt::Display>(items: &[T]) -> String {
    let parts: Vec<String> = items.iter().map(|i| i.to_string()).collect();
    format!("[{}]", parts.join(", "))
}

fn parenthesized(items: &[usize]) -> String {
    let parts: Vec<String> = items.iter().map(|i| i.to_string()).collect();
    format!("({})", parts.join(", "))
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Report::Genus { genus, .. } => write!(f, "Genus:  {genus}"),
            Report::Faces { vector, tuples } => {
                write!(f, "Vector solution:  {vector}")?;
                for t in tuples {
                    write!(f, "\n{}", parenthesized(t))?;
                }
                Ok(())
            }
            Report::Curves { curves } => {
                for (n, c) in curves.iter().enumerate() {
                    if n > 0 {
                        write!(f, "\n\n")?;
                    }
                    write!(f, "Path {}\nCurve genus:  {}", bracketed(&c.path), c.genus)?;
                }
                Ok(())
            }
            Report::Distance { verdict, .. } => write!(f, "Distance:  {verdict}"),
            Report::Matrix { rows } => {
                for (n, row) in rows.iter().enumerate() {
                    if n > 0 {
                        writeln!(f)?;
                    }
                    write!(f, "{}", bracketed(row))?;
                }
                Ok(())
            }
            Report::Perm { curves } => {
                if curves.is_empty() {
                    return write!(f, "No gluing gives a single curve.");
                }
                for (n, c) in curves.iter().enumerate() {
                    if n > 0 {
                        write!(f, "\n\n")?;
                    }
                    write!(
                        f,
                        "Curve {} Distance:  {}\n{}\n{}",
                        c.number,
                        c.verdict,
                        bracketed(&c.top),
                        bracketed(&c.bottom)
                    )?;
                }
                Ok(())
            }
        }
    }
}

/// Result of the `ilp` batch command.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IlpReport {
    pub system: ConstraintSystem,
    pub minimized: bool,
    pub objective: u64,
    pub solutions: Vec<Vec<u64>>,
}

impl IlpReport {
    pub fn minimize(system: ConstraintSystem) -> Result<IlpReport> {
        let (objective, solutions) = system.minimize()?;
        Ok(IlpReport {
            system,
            minimized: true,
            objective,
            solutions,
        })
    }

    pub fn at(system: ConstraintSystem, objective: u64) -> IlpReport {
        let solutions = system.enumerate_solutions(objective);
        IlpReport {
            system,
            minimized: false,
            objective,
            solutions,
        }
    }
}

impl fmt::Display for IlpReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.system)?;
        writeln!(f)?;
        let star = if self.minimized { "*" } else { "" };
        write!(
            f,
            "P{star} = {}\nSolutions: {}",
            self.objective,
            self.solutions.len()
        )?;
        for s in &self.solutions {
            write!(f, "\n{}", format_weights(s))?;
        }
        Ok(())
    }
}
