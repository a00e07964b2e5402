//! Checks shared by the property suite and the acceptance run. Each returns
//! `Err` with a description of the first violation.

#![allow(dead_code)]

use std::collections::BTreeSet;

use curvedist_core::circuits::{dual_graph, elementary_circuits};
use curvedist_core::distance::distance;
use curvedist_core::faces::{canonical_face_list, surface_genus, trace_faces, AlphaDir};
use curvedist_core::ladder::{OrientationRule, Side, Slot};
use curvedist_core::{reduce_bigons, BigonReduction, DualGraph, Ladder};
use rand::seq::SliceRandom;
use rand::Rng;

pub type Check = Result<(), String>;

/// Each label placed twice at random among the `2k` slots.
pub fn random_ladder<R: Rng>(rng: &mut R, k: usize) -> Ladder {
    let mut slots: Vec<usize> = (0..k).flat_map(|l| [l, l]).collect();
    slots.shuffle(rng);
    Ladder::from_labels(&slots[..k], &slots[k..]).expect("every label placed twice")
}

pub fn trivial_ladders() -> Vec<Ladder> {
    [("0", "0"), ("0,1", "0,1"), ("0,1", "1,0"), ("0,0", "1,1"), ("0,1", "0,1")]
        .iter()
        .map(|(t, b)| Ladder::parse(t, b).unwrap())
        .collect()
}

/// Every directed segment of `alpha` and every directed arc of `beta` lies on
/// exactly one region boundary.
pub fn directed_edge_partition(l: &Ladder) -> Check {
    let k = l.k();
    let faces = trace_faces(l);
    let mut alpha = BTreeSet::new();
    let mut beta = BTreeSet::new();
    for f in &faces {
        if f.alpha.len() != f.beta.len() || f.alpha.is_empty() {
            return Err(format!("face with {} alpha and {} beta sides", f.alpha.len(), f.beta.len()));
        }
        for e in &f.alpha {
            if !alpha.insert((e.label, e.dir == AlphaDir::Right)) {
                return Err(format!("alpha segment {} {:?} used twice", e.label, e.dir));
            }
        }
        for e in &f.beta {
            let key = (e.source, e.side == Side::Top, e.target, e.arrival == Side::Top);
            if !beta.insert(key) {
                return Err(format!("beta arc {key:?} used twice"));
            }
        }
    }
    if alpha.len() != 2 * k {
        return Err(format!("{} of {} directed alpha segments covered", alpha.len(), 2 * k));
    }
    let mut expected = BTreeSet::new();
    for side in [Side::Top, Side::Bottom] {
        for position in 0..k {
            let from = Slot { side, position };
            let to = l.partner(from);
            expected.insert((from.position, from.side == Side::Top, to.position, to.side == Side::Top));
        }
    }
    if beta != expected {
        return Err("directed beta arcs differ from the slot matching".into());
    }
    Ok(())
}

/// `k - 2k + |F| = 2 - 2g` with `g` a non-negative integer, and face
/// degrees summing to `4k`.
pub fn euler_identity(l: &Ladder) -> Check {
    let k = l.k();
    let faces = trace_faces(l);
    let degrees: usize = faces.iter().map(|f| f.degree()).sum();
    if degrees != 4 * k {
        return Err(format!("face degrees sum to {degrees}, expected {}", 4 * k));
    }
    if l.is_single_curve() {
        let g = surface_genus(k, faces.len()).map_err(|e| e.to_string())?;
        if k as i64 - 2 * k as i64 + faces.len() as i64 != 2 - 2 * g as i64 {
            return Err(format!("euler characteristic mismatch for genus {g}"));
        }
    }
    Ok(())
}

/// Rebuilding the ladder from the matrix of the reversed `beta` gives the
/// same regions.
pub fn faces_survive_orientation_flip(l: &Ladder) -> Check {
    if !l.is_single_curve() {
        return Ok(());
    }
    let before = canonical_face_list(&trace_faces(l));
    for rule in [OrientationRule::DownAtMinimum, OrientationRule::UpAtMinimum] {
        let m = l.characteristic_matrix_with(rule).map_err(|e| e.to_string())?;
        m.validate().map_err(|e| e.to_string())?;
        let rebuilt = m.to_ladder().map_err(|e| e.to_string())?;
        if !rebuilt.is_relabeling_of(l) {
            return Err(format!("{rule:?} matrix rebuilds a different ladder"));
        }
        if canonical_face_list(&trace_faces(&rebuilt)) != before {
            return Err(format!("{rule:?} changes the regions"));
        }
    }
    Ok(())
}

/// The verdict, or the error, is unchanged by moving the basepoint,
/// swapping the rows and reversing `alpha`.
pub fn verdict_invariance(l: &Ladder) -> Check {
    if !l.is_single_curve() {
        return Ok(());
    }
    let verdict = |x: &Ladder| distance(x, None).map(|r| r.verdict);
    let base = verdict(l);
    let mut variants = vec![("swap_rows", l.swap_rows()), ("reverse_alpha", l.reverse_alpha())];
    for r in 1..l.k() {
        variants.push(("rotate_basepoint", l.rotate_basepoint(r)));
    }
    for (name, v) in variants {
        let got = verdict(&v);
        if got != base {
            return Err(format!("{name}: {got:?} but original {base:?}"));
        }
    }
    Ok(())
}

/// Removing bigons keeps `beta` connected, removes two intersections per
/// bigon, leaves no bigon behind and never raises the capped genus. The
/// genus can drop: pushing an arc across a bigon may leave a pair that no
/// longer fills.
pub fn bigon_reduction_is_sound(l: &Ladder) -> Check {
    if !l.is_single_curve() {
        return Ok(());
    }
    let g = surface_genus(l.k(), trace_faces(l).len()).map_err(|e| e.to_string())?;
    if let BigonReduction::Reduced { ladder, removed } = reduce_bigons(l) {
        if ladder.k() + 2 * removed != l.k() {
            return Err("each bigon must remove two intersections".into());
        }
        if !ladder.is_single_curve() {
            return Err("reduction split beta".into());
        }
        let h = surface_genus(ladder.k(), trace_faces(&ladder).len()).map_err(|e| e.to_string())?;
        if h > g {
            return Err(format!("genus {g} became {h}"));
        }
        if curvedist_core::faces::find_bigon(&ladder).is_some() {
            return Err("a bigon survived".into());
        }
    }
    Ok(())
}

/// Whether bigon removal leaves the capped genus unchanged.
pub fn bigon_reduction_keeps_genus(l: &Ladder) -> bool {
    let g = surface_genus(l.k(), trace_faces(l).len()).ok();
    match reduce_bigons(l) {
        BigonReduction::Disjoint { .. } => g == Some(0),
        BigonReduction::Reduced { ladder, .. } => {
            surface_genus(ladder.k(), trace_faces(&ladder).len()).ok() == g
        }
    }
}

/// Edge sets of all elementary circuits, found by testing every edge subset
/// for being connected with all degrees two.
pub fn brute_force_circuits(g: &DualGraph) -> Vec<Vec<usize>> {
    let m = g.edges.len();
    assert!(m <= 20, "too many edges for the subset oracle");
    let mut out = Vec::new();
    for mask in 1u32..(1 << m) {
        let chosen: Vec<usize> = (0..m).filter(|i| mask >> i & 1 == 1).collect();
        let mut degree = vec![0usize; g.vertex_count];
        for &i in &chosen {
            let [a, b] = g.edges[i].ends;
            degree[a] += 1;
            degree[b] += 1;
        }
        if degree.iter().any(|&d| d != 0 && d != 2) {
            continue;
        }
        // Connected: flood from one endpoint over chosen edges.
        let start = g.edges[chosen[0]].ends[0];
        let mut seen = vec![false; g.vertex_count];
        seen[start] = true;
        let mut changed = true;
        while changed {
            changed = false;
            for &i in &chosen {
                let [a, b] = g.edges[i].ends;
                if seen[a] != seen[b] {
                    seen[a] = true;
                    seen[b] = true;
                    changed = true;
                }
            }
        }
        if (0..g.vertex_count).all(|v| degree[v] == 0 || seen[v]) {
            let mut labels: Vec<usize> = chosen.iter().map(|&i| g.edges[i].label).collect();
            labels.sort();
            out.push(labels);
        }
    }
    out.sort();
    out
}

/// Circuit enumeration agrees with the subset oracle on graphs with at most
/// eight vertices. Returns whether the graph was small enough to check.
pub fn circuits_match_oracle(l: &Ladder) -> Result<bool, String> {
    let g = dual_graph(&trace_faces(l));
    if g.vertex_count > 8 {
        return Ok(false);
    }
    let mut ours: Vec<Vec<usize>> = elementary_circuits(&g)
        .map_err(|e| e.to_string())?
        .into_iter()
        .map(|c| {
            let mut e = c.edges;
            e.sort();
            e
        })
        .collect();
    ours.sort();
    let oracle = brute_force_circuits(&g);
    if ours != oracle {
        return Err(format!("{} circuits, oracle has {}", ours.len(), oracle.len()));
    }
    Ok(true)
}

pub fn all_checks(l: &Ladder) -> Check {
    directed_edge_partition(l)?;
    euler_identity(l)?;
    faces_survive_orientation_flip(l)?;
    verdict_invariance(l)?;
    bigon_reduction_is_sound(l)?;
    circuits_match_oracle(l)?;
    Ok(())
}
