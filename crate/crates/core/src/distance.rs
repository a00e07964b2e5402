//! Distance classification for a filling pair `(alpha, beta)`.
//!
//! Every elementary circuit of the dual graph is a simple closed curve
//! `gamma` disjoint from `beta`. The pair is at distance at least 4 exactly
//! when every such `gamma` still fills the surface together with `alpha`.
//!
//! A circuit curve crosses each segment of `alpha` at most once, so it
//! cannot bound a disc: a disc bounded by `gamma` avoids `beta`, and any
//! piece of `alpha` entering it would have to leave through `gamma` again
//! along the same segment. When bigon removal separates `gamma` from
//! `alpha` entirely the candidate is therefore an essential curve disjoint
//! from both `alpha` and `beta`, and it counts as a witness like any other
//! non-filling candidate.

use std::sync::atomic::{AtomicBool, Ordering};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::circuits::{dual_graph, elementary_circuits_limited, Circuit, DEFAULT_CIRCUIT_LIMIT};
use crate::error::{Error, Result};
use crate::faces::{faces, reduce_bigons, surface_genus, trace_faces, BigonReduction, Face};
use crate::ladder::{Ladder, Side};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FillStatus {
    Fills,
    NonFilling,
    /// Bigon removal left no intersections with `alpha`.
    Disjoint,
}

impl FillStatus {
    pub fn fills(self) -> bool {
        self == FillStatus::Fills
    }
}

/// One circuit curve `gamma` paired with `alpha`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CandidatePair {
    pub circuit: Circuit,
    /// Ladder of `(alpha, gamma)` before bigon removal; `k` is the circuit length.
    pub gamma_ladder: Ladder,
    /// Bigon-free form, absent when the curves separate.
    pub reduced: Option<Ladder>,
    pub bigons_removed: usize,
    pub fill_genus: usize,
    pub status: FillStatus,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    /// The pair does not fill the surface, so the distance is at most 2.
    #[serde(rename = "2")]
    Distance2,
    #[serde(rename = "3")]
    Distance3,
    #[serde(rename = "4+")]
    Distance4Plus,
}

impl Verdict {
    pub fn label(self) -> &'static str {
        match self {
            Verdict::Distance2 => "2",
            Verdict::Distance3 => "3",
            Verdict::Distance4Plus => "4+",
        }
    }
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.label())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DistanceResult {
    pub verdict: Verdict,
    /// For distance 3, the non-filling candidate with the least circuit.
    pub witness: Option<CandidatePair>,
    pub ambient_genus: usize,
    /// Genus filled by the input pair.
    pub genus: usize,
    /// Bigons removed from the input before the test.
    pub bigons_removed: usize,
    /// Number of candidates evaluated; zero for distance 2.
    pub candidates: usize,
}

/// Ladder of `(alpha, gamma)` for the curve described by `circuit`.
///
/// Crossings are the circuit's segments in `alpha` order. The arc of `gamma`
/// inside `faces[j]` runs from crossing `edges[j]` to crossing `edges[j+1]`
/// and leaves each crossing on the side of `alpha` where that region lies.
pub fn candidate_ladder(ladder: &Ladder, faces: &[Face], circuit: &Circuit) -> Result<Ladder> {
    let graph = dual_graph(faces);
    let m = circuit.len();
    if m == 0 {
        return Err(Error::EmptyInput);
    }
    if let Some(&e) = circuit.edges.iter().find(|&&e| e >= ladder.k()) {
        return Err(Error::Internal(format!("segment {e} is out of range")));
    }
    let mut order: Vec<usize> = circuit.edges.clone();
    order.sort_unstable();
    let position = |label: usize| order.binary_search(&label).expect("edge is in circuit");
    let mut top = vec![usize::MAX; m];
    let mut bottom = vec![usize::MAX; m];
    let mut attach = |edge: usize, face: usize, arc: usize| -> Result<()> {
        let e = graph
            .edge(edge)
            .ok_or_else(|| Error::Internal(format!("segment {edge} is not in the dual graph")))?;
        let above = e.ends[0] == face;
        let below = e.ends[1] == face;
        let p = position(edge);
        // A loop lies on both sides; take whichever is still free.
        let side = match (above, below) {
            (true, true) if top[p] == usize::MAX => Side::Top,
            (true, true) | (false, true) => Side::Bottom,
            (true, false) => Side::Top,
            (false, false) => {
                return Err(Error::Internal(format!(
                    "region {face} does not border segment {edge}"
                )))
            }
        };
        let row = match side {
            Side::Top => &mut top,
            Side::Bottom => &mut bottom,
        };
        if row[p] != usize::MAX {
            return Err(Error::SideConflict {
                edge,
                side: side.name(),
            });
        }
        row[p] = arc;
        Ok(())
    };
    for j in 0..m {
        let face = circuit.faces[j];
        attach(circuit.edges[j], face, j)?;
        attach(circuit.edges[(j + 1) % m], face, j)?;
    }
    Ladder::from_labels(&top, &bottom)
}

/// Reduce bigons and measure the genus filled by `alpha` and `gamma`.
pub fn candidate_fill_genus(circuit: Circuit, gamma_ladder: Ladder, ambient_genus: usize) -> Result<CandidatePair> {
    let reduction = reduce_bigons(&gamma_ladder);
    let bigons_removed = reduction.removed();
    let (reduced, fill_genus, status) = match reduction {
        BigonReduction::Disjoint { .. } => (None, 0, FillStatus::Disjoint),
        BigonReduction::Reduced { ladder, .. } => {
            let g = surface_genus(ladder.k(), trace_faces(&ladder).len())?;
            let status = if g == ambient_genus {
                FillStatus::Fills
            } else {
                FillStatus::NonFilling
            };
            (Some(ladder), g, status)
        }
    };
    Ok(CandidatePair {
        circuit,
        gamma_ladder,
        reduced,
        bigons_removed,
        fill_genus,
        status,
    })
}

/// Knobs for [`distance_with`].
#[derive(Debug, Clone, Default)]
pub struct DistanceOptions<'a> {
    pub ambient_genus: Option<usize>,
    pub circuit_limit: Option<usize>,
    pub cancel: Option<&'a AtomicBool>,
}

/// Every candidate curve of a bigon-free single-curve ladder, in circuit
/// order, measured against `ambient_genus`.
pub fn candidates(ladder: &Ladder, ambient_genus: usize) -> Result<Vec<CandidatePair>> {
    evaluate(ladder, ambient_genus, DEFAULT_CIRCUIT_LIMIT, None)
}

fn evaluate(
    ladder: &Ladder,
    ambient_genus: usize,
    limit: usize,
    cancel: Option<&AtomicBool>,
) -> Result<Vec<CandidatePair>> {
    let faces = faces(ladder)?;
    let circuits = elementary_circuits_limited(&dual_graph(&faces), limit)?;
    circuits
        .into_par_iter()
        .map(|circuit| {
            if cancel.is_some_and(|c| c.load(Ordering::Relaxed)) {
                return Err(Error::Cancelled);
            }
            let gamma = candidate_ladder(ladder, &faces, &circuit)?;
            candidate_fill_genus(circuit, gamma, ambient_genus)
        })
        .filter(|r| !matches!(r, Err(Error::SideConflict { .. })))
        .collect()
}

pub fn distance(ladder: &Ladder, ambient_genus: Option<usize>) -> Result<DistanceResult> {
    distance_with(
        ladder,
        &DistanceOptions {
            ambient_genus,
            ..DistanceOptions::default()
        },
    )
}

/// Bigons are removed first. That is an isotopy in the surface the input
/// fills, so `ambient_genus` defaults to the genus of the input; if the
/// reduced pair fills less of it, the pair does not fill and the distance is
/// at most 2.
pub fn distance_with(ladder: &Ladder, options: &DistanceOptions) -> Result<DistanceResult> {
    ladder.require_single_curve()?;
    let input_genus = surface_genus(ladder.k(), trace_faces(ladder).len())?;
    let ambient_genus = options.ambient_genus.unwrap_or(input_genus);
    if input_genus > ambient_genus {
        return Err(Error::AmbientTooSmall {
            genus: input_genus,
            ambient: ambient_genus,
        });
    }
    if ambient_genus < 2 {
        return Err(Error::GenusTooSmall {
            genus: ambient_genus,
        });
    }
    let (work, bigons_removed) = match reduce_bigons(ladder) {
        BigonReduction::Reduced { ladder, removed } => (Some(ladder), removed),
        BigonReduction::Disjoint { removed } => (None, removed),
    };
    let genus = match &work {
        Some(w) => surface_genus(w.k(), trace_faces(w).len())?,
        None => 0,
    };
    if genus < ambient_genus {
        return Ok(DistanceResult {
            verdict: Verdict::Distance2,
            witness: None,
            ambient_genus,
            genus,
            bigons_removed,
            candidates: 0,
        });
    }
    let work = work.expect("a pair filling genus 2 or more meets");
    let limit = options.circuit_limit.unwrap_or(DEFAULT_CIRCUIT_LIMIT);
    let all = evaluate(&work, ambient_genus, limit, options.cancel)?;
    let count = all.len();
    let witness = all.into_iter().find(|c| !c.status.fills());
    Ok(DistanceResult {
        verdict: if witness.is_some() {
            Verdict::Distance3
        } else {
            Verdict::Distance4Plus
        },
        witness,
        ambient_genus,
        genus,
        bigons_removed,
        candidates: count,
    })
}
