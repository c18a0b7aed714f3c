//! Proximinal and farthest graphs of a space with two disjoint parts.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::bigraph::BipartiteGraph;
use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::space::FiniteSpace;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    /// Cross pairs at minimal distance.
    Proximinal,
    /// Cross pairs at maximal distance.
    Farthest,
}

/// Best approximations of one point in each part.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Approximations {
    pub in_a: usize,
    pub in_b: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProximityReport {
    pub mode: Mode,
    /// `dist(A, B)` in proximinal mode, `max d` over `A × B` otherwise.
    pub extremum: Rational,
    pub a0: Vec<usize>,
    pub b0: Vec<usize>,
    /// Cross pairs `(a, b)` attaining the extremum, as space indices.
    pub pairs: Vec<(usize, usize)>,
    /// Indexed by point of the space.
    pub prox_witness: Vec<Approximations>,
}

/// Raw material for the ultrametric characterizations of the proximinal
/// graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct UltrametricStructure {
    pub diam_a: Rational,
    pub diam_b: Rational,
    pub diam_union: Rational,
    pub dist: Rational,
    /// `B₀ = B`.
    pub b0_equals_b: bool,
    /// Every pair of `A₀ × B₀` attains `dist(A, B)`.
    pub all_pairs_best: bool,
    pub graph_connected: bool,
    pub graph_complete_bipartite: bool,
    /// The graph is nonempty and its core is complete bipartite.
    pub core_complete_bipartite: bool,
    /// Every point of B is a vertex of the core.
    pub b_in_core: bool,
}

/// For every point, a nearest member of `s` (least index on ties).
pub fn is_proximinal(space: &FiniteSpace, s: &[usize]) -> Result<Vec<usize>> {
    space.check_members(s)?;
    Ok((0..space.len())
        .map(|x| {
            let mut best = s[0];
            for &c in &s[1..] {
                let (dc, db) = (space.d(x, c), space.d(x, best));
                if dc < db || (dc == db && c < best) {
                    best = c;
                }
            }
            best
        })
        .collect())
}

pub(crate) fn check_parts(space: &FiniteSpace, a: &[usize], b: &[usize]) -> Result<()> {
    space.check_members(a)?;
    space.check_members(b)?;
    let sa: BTreeSet<usize> = a.iter().copied().collect();
    if let Some(&x) = b.iter().find(|x| sa.contains(x)) {
        return Err(Error::PartsOverlap { label: space.label(x).to_string(), first: "A".into(), second: "B".into() });
    }
    Ok(())
}

pub fn proximity_report(space: &FiniteSpace, a: &[usize], b: &[usize], mode: Mode) -> Result<ProximityReport> {
    check_parts(space, a, b)?;
    let cross = || a.iter().flat_map(|&i| b.iter().map(move |&j| (i, j)));
    let values = cross().map(|(i, j)| space.d(i, j));
    let extremum = match mode {
        Mode::Proximinal => values.min(),
        Mode::Farthest => values.max(),
    }
    .expect("parts are nonempty")
    .clone();
    let pairs: Vec<(usize, usize)> = cross().filter(|&(i, j)| *space.d(i, j) == extremum).collect();
    let in_pairs_a: BTreeSet<usize> = pairs.iter().map(|p| p.0).collect();
    let in_pairs_b: BTreeSet<usize> = pairs.iter().map(|p| p.1).collect();
    let a0 = a.iter().copied().filter(|x| in_pairs_a.contains(x)).collect();
    let b0 = b.iter().copied().filter(|x| in_pairs_b.contains(x)).collect();
    let wa = is_proximinal(space, a)?;
    let wb = is_proximinal(space, b)?;
    let prox_witness = wa.into_iter().zip(wb).map(|(in_a, in_b)| Approximations { in_a, in_b }).collect();
    Ok(ProximityReport { mode, extremum, a0, b0, pairs, prox_witness })
}

fn extremal_graph(space: &FiniteSpace, a: &[usize], b: &[usize], mode: Mode) -> Result<BipartiteGraph> {
    let report = proximity_report(space, a, b, mode)?;
    let pos_a = |x: usize| a.iter().position(|&y| y == x).unwrap();
    let pos_b = |x: usize| b.iter().position(|&y| y == x).unwrap();
    BipartiteGraph::new(
        a.iter().map(|&i| space.label(i).to_string()).collect(),
        b.iter().map(|&i| space.label(i).to_string()).collect(),
        report.pairs.iter().map(|&(i, j)| (pos_a(i), pos_b(j))),
    )
}

/// Edges are the best proximity pairs of `A × B`.
pub fn proximinal_graph(space: &FiniteSpace, a: &[usize], b: &[usize]) -> Result<BipartiteGraph> {
    extremal_graph(space, a, b, Mode::Proximinal)
}

/// Edges are the cross pairs at maximal distance.
pub fn farthest_graph(space: &FiniteSpace, a: &[usize], b: &[usize]) -> Result<BipartiteGraph> {
    extremal_graph(space, a, b, Mode::Farthest)
}

pub fn graph(space: &FiniteSpace, a: &[usize], b: &[usize], mode: Mode) -> Result<BipartiteGraph> {
    extremal_graph(space, a, b, mode)
}

pub fn ultrametric_structure(space: &FiniteSpace, a: &[usize], b: &[usize]) -> Result<UltrametricStructure> {
    space.require_ultrametric()?;
    let report = proximity_report(space, a, b, Mode::Proximinal)?;
    let union: Vec<usize> = a.iter().chain(b).copied().collect();
    let g = proximinal_graph(space, a, b)?;
    let dist = report.extremum.clone();
    let all_pairs_best =
        report.a0.iter().all(|&x| report.b0.iter().all(|&y| *space.d(x, y) == dist));
    let (core_complete_bipartite, b_in_core) = match g.core() {
        Ok(core) => (core.is_complete_bipartite(), core.part_b().len() == b.len()),
        Err(_) => (false, false),
    };
    Ok(UltrametricStructure {
        diam_a: space.diameter(a)?,
        diam_b: space.diameter(b)?,
        diam_union: space.diameter(&union)?,
        dist,
        b0_equals_b: report.b0.len() == b.len(),
        all_pairs_best,
        graph_connected: g.is_connected(),
        graph_complete_bipartite: g.is_complete_bipartite(),
        core_complete_bipartite,
        b_in_core,
    })
}
