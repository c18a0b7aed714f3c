//! Realizability of bipartite graphs as proximinal or farthest graphs, and
//! witness spaces for the realizable ones.

use std::fmt;

use serde::{Deserialize, Serialize, Serializer};

use crate::bigraph::BipartiteGraph;
use crate::error::{Error, Result};
use crate::family::{CountableFamily, FamilyKind};
use crate::proximity::proximinal_graph;
use crate::rational::Rational;
use crate::space::FiniteSpace;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Target {
    ProximinalMetric,
    ProximinalUltrametric,
    Farthest,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum DecisionLevel {
    /// The graph itself, with its parts, must be the graph of some space.
    ExactParts,
    /// Some graph isomorphic to it must be.
    UpToIsomorphism,
}

/// Which branch of the characterization settled the decision.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Reason {
    Nonempty,
    CompleteComponents,
    IncompleteComponent { component: usize },
    EmptyBothInfinite,
    EmptySomeInfinite,
    EmptyWithFinitePart,
    EmptyInfiniteVertexSet,
    FiniteEmpty,
}

impl Reason {
    pub fn code(&self) -> &'static str {
        match self {
            Reason::Nonempty => "nonempty",
            Reason::CompleteComponents => "complete-components",
            Reason::IncompleteComponent { .. } => "incomplete-component",
            Reason::EmptyBothInfinite => "empty-both-infinite",
            Reason::EmptySomeInfinite => "empty-some-infinite",
            Reason::EmptyWithFinitePart => "empty-with-finite-part",
            Reason::EmptyInfiniteVertexSet => "empty-infinite-vertex-set",
            Reason::FiniteEmpty => "finite-empty",
        }
    }
}

impl fmt::Display for Reason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Reason::Nonempty => "graph is nonempty",
            Reason::CompleteComponents => "every core component is complete bipartite",
            Reason::IncompleteComponent { .. } => "core component not complete bipartite",
            Reason::EmptyBothInfinite => "empty graph with both parts infinite",
            Reason::EmptySomeInfinite => "empty graph with an infinite part",
            Reason::EmptyWithFinitePart => "empty graph with a finite part",
            Reason::EmptyInfiniteVertexSet => "empty graph on an infinite vertex set",
            Reason::FiniteEmpty => "graph is finite and empty",
        })
    }
}

impl Serialize for Reason {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    Space(FiniteSpace),
    /// A countable family handle. When `parts_swapped` is set the family's
    /// part A plays the graph's part B and vice versa.
    Family { family: CountableFamily, parts_swapped: bool },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decision {
    pub target: Target,
    pub level: DecisionLevel,
    pub realizable: bool,
    pub reason: Reason,
    pub witness: Option<Witness>,
}

fn carrier(g: &BipartiteGraph) -> Vec<String> {
    g.part_a().iter().chain(g.part_b()).cloned().collect()
}

fn with_graph_parts(space: FiniteSpace, g: &BipartiteGraph) -> Result<FiniteSpace> {
    let na = g.part_a().len();
    let nb = g.part_b().len();
    space.with_part("A", (0..na).collect())?.with_part("B", (na..na + nb).collect())
}

fn require_finite_nonempty(g: &BipartiteGraph) -> Result<()> {
    if !g.is_finite() {
        return Err(Error::InfiniteParts);
    }
    if !g.is_nonempty() {
        return Err(Error::EmptyGraph);
    }
    Ok(())
}

/// Metric on `A ∪ B` with edges at 1 and every other distinct pair at 2.
pub fn realize_metric(g: &BipartiteGraph) -> Result<FiniteSpace> {
    require_finite_nonempty(g)?;
    let space = FiniteSpace::from_fn(carrier(g), |i, j| {
        if g.adjacent(i, j) {
            Rational::one()
        } else {
            Rational::from(2)
        }
    })?;
    with_graph_parts(space, g)
}

/// Ultrametric on `A ∪ B`: distinct points of one core component at 1,
/// everything else at 2.
pub fn realize_ultrametric(g: &BipartiteGraph) -> Result<FiniteSpace> {
    require_finite_nonempty(g)?;
    let decomposition = g.cbd_decompose()?;
    if let Some(component) = decomposition.first_incomplete() {
        return Err(Error::NotCompletelyDecomposable { component });
    }
    let na = g.part_a().len();
    let mut block = vec![None; g.vertex_count()];
    for (k, c) in decomposition.components.iter().enumerate() {
        for &a in &c.a_side {
            block[a] = Some(k);
        }
        for &b in &c.b_side {
            block[na + b] = Some(k);
        }
    }
    let space = FiniteSpace::from_fn(carrier(g), |i, j| match (block[i], block[j]) {
        (Some(x), Some(y)) if x == y => Rational::one(),
        _ => Rational::from(2),
    })?;
    with_graph_parts(space, g)
}

/// Metric on `A ∪ B` with edges at 2 and every other distinct pair at 1.
pub fn realize_farthest(g: &BipartiteGraph) -> Result<FiniteSpace> {
    require_finite_nonempty(g)?;
    let space = FiniteSpace::from_fn(carrier(g), |i, j| {
        if g.adjacent(i, j) {
            Rational::from(2)
        } else {
            Rational::one()
        }
    })?;
    with_graph_parts(space, g)
}

/// The trivial metric on `A ∪ B`; realizes `K_{n,m}` in every mode.
pub fn trivial_witness(g: &BipartiteGraph) -> Result<FiniteSpace> {
    with_graph_parts(FiniteSpace::trivial(carrier(g))?, g)
}

/// Least size of the distance set of a metric on `A ∪ B` whose proximinal
/// graph is `g`, with a witness of that size.
///
/// A semimetric with two distance values `{0, t}` puts every distinct pair
/// at `t`, and the proximinal graph does not depend on `t`, so the two-valued
/// candidates collapse to the trivial metric and are searched by checking it
/// directly. One value is impossible since `A ∪ B` has at least two points.
/// Otherwise the edge/non-edge metric with values `{0, 1, 2}` works.
pub fn min_distance_set_size(g: &BipartiteGraph) -> Result<(usize, FiniteSpace)> {
    require_finite_nonempty(g)?;
    let trivial = trivial_witness(g)?;
    let (a, b) = (trivial.part("A")?.to_vec(), trivial.part("B")?.to_vec());
    if proximinal_graph(&trivial, &a, &b)? == *g {
        return Ok((2, trivial));
    }
    let witness = realize_metric(g)?;
    let size = witness.distance_set().len();
    debug_assert_eq!(size, 3);
    Ok((size, witness))
}

/// Decides whether `g` is a proximinal (metric or ultrametric) or farthest
/// graph, exactly or up to isomorphism, and attaches a witness when it is.
pub fn decide(g: &BipartiteGraph, target: Target, level: DecisionLevel) -> Decision {
    let card = g.cardinality();
    let verdict = |realizable: bool, reason: Reason, witness: Option<Witness>| Decision {
        target,
        level,
        realizable,
        reason,
        witness,
    };
    let family = |kind: FamilyKind, parts_swapped: bool| {
        Some(Witness::Family { family: CountableFamily::new(kind), parts_swapped })
    };

    if g.is_nonempty() {
        let complete = g.is_complete_bipartite();
        let space = |s: Result<FiniteSpace>| Some(Witness::Space(s.expect("nonempty finite graph has a witness")));
        return match target {
            Target::ProximinalMetric => verdict(
                true,
                Reason::Nonempty,
                space(if complete { trivial_witness(g) } else { realize_metric(g) }),
            ),
            Target::Farthest => verdict(
                true,
                Reason::Nonempty,
                space(if complete { trivial_witness(g) } else { realize_farthest(g) }),
            ),
            Target::ProximinalUltrametric => {
                let decomposition = g.cbd_decompose().expect("graph is nonempty");
                match decomposition.first_incomplete() {
                    Some(component) => verdict(false, Reason::IncompleteComponent { component }, None),
                    None => verdict(
                        true,
                        Reason::CompleteComponents,
                        space(if complete { trivial_witness(g) } else { realize_ultrametric(g) }),
                    ),
                }
            }
        };
    }

    if card.is_finite() {
        return verdict(false, Reason::FiniteEmpty, None);
    }
    let both = card.a_infinite && card.b_infinite;
    match (target, level) {
        (Target::ProximinalMetric | Target::ProximinalUltrametric, DecisionLevel::ExactParts) => {
            if both {
                verdict(true, Reason::EmptyBothInfinite, family(FamilyKind::EmptyProximinal, false))
            } else {
                verdict(false, Reason::EmptyWithFinitePart, None)
            }
        }
        (Target::ProximinalMetric | Target::ProximinalUltrametric, DecisionLevel::UpToIsomorphism) => {
            // an infinite vertex set can be split into two infinite parts
            verdict(true, Reason::EmptyInfiniteVertexSet, family(FamilyKind::EmptyProximinal, false))
        }
        (Target::Farthest, DecisionLevel::ExactParts) => {
            // the family's B is the infinite part
            verdict(true, Reason::EmptySomeInfinite, family(FamilyKind::EmptyFarthest, !card.b_infinite))
        }
        (Target::Farthest, DecisionLevel::UpToIsomorphism) => {
            verdict(true, Reason::EmptyInfiniteVertexSet, family(FamilyKind::EmptyFarthest, !card.b_infinite))
        }
    }
}
