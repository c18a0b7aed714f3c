//! Bipartite graphs with fixed parts.
//!
//! Vertices are numbered globally: part A occupies `0..|A|` and part B
//! `|A|..|A|+|B|`, both in declaration order. Edges are stored as
//! `(a, b)` with `a` indexing part A and `b` indexing part B.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest vertex count accepted by [`find_isomorphism`].
pub const DEFAULT_ISO_BOUND: usize = 12;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Cardinality {
    #[serde(rename = "A", default)]
    pub a_infinite: bool,
    #[serde(rename = "B", default)]
    pub b_infinite: bool,
}

impl Cardinality {
    pub fn is_finite(&self) -> bool {
        !self.a_infinite && !self.b_infinite
    }
}

/// Unvalidated graph description, the shape of the JSON graph file.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawGraph {
    #[serde(rename = "A")]
    pub a: Vec<String>,
    #[serde(rename = "B")]
    pub b: Vec<String>,
    #[serde(default)]
    pub edges: Vec<[String; 2]>,
    #[serde(default, skip_serializing_if = "Cardinality::is_finite")]
    pub infinite: Cardinality,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BipartiteGraph {
    part_a: Vec<String>,
    part_b: Vec<String>,
    edges: BTreeSet<(usize, usize)>,
    card: Cardinality,
}

/// A connected component of the core, split by part.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Component {
    /// Indices into part A.
    pub a_side: Vec<usize>,
    /// Indices into part B.
    pub b_side: Vec<usize>,
    pub complete: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Decomposition {
    pub components: Vec<Component>,
    pub all_complete: bool,
}

impl Decomposition {
    pub fn first_incomplete(&self) -> Option<usize> {
        self.components.iter().position(|c| !c.complete)
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum IsoMode {
    /// Any adjacency-preserving bijection.
    #[default]
    PartAgnostic,
    /// Additionally maps part A onto part A and part B onto part B.
    PartPreserving,
}

impl BipartiteGraph {
    /// Builds a finite graph from labels and `(a, b)` index pairs.
    pub fn new<I>(part_a: Vec<String>, part_b: Vec<String>, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let raw_edges = edges
            .into_iter()
            .map(|(a, b)| {
                let la = part_a.get(a).cloned().ok_or_else(|| Error::UnknownEndpoint(format!("A[{a}]")))?;
                let lb = part_b.get(b).cloned().ok_or_else(|| Error::UnknownEndpoint(format!("B[{b}]")))?;
                Ok([la, lb])
            })
            .collect::<Result<Vec<_>>>()?;
        BipartiteGraph::validate(RawGraph { a: part_a, b: part_b, edges: raw_edges, infinite: Cardinality::default() })
    }

    pub fn validate(raw: RawGraph) -> Result<Self> {
        if raw.a.is_empty() {
            return Err(Error::EmptyPart("A"));
        }
        if raw.b.is_empty() {
            return Err(Error::EmptyPart("B"));
        }
        // side: false = A, true = B
        let mut side: HashMap<&str, (bool, usize)> = HashMap::new();
        for (i, l) in raw.a.iter().enumerate() {
            if side.insert(l, (false, i)).is_some() {
                return Err(Error::PartsOverlap { label: l.clone(), first: "A".into(), second: "A".into() });
            }
        }
        for (i, l) in raw.b.iter().enumerate() {
            if let Some((s, _)) = side.insert(l, (true, i)) {
                let first = if s { "B" } else { "A" };
                return Err(Error::PartsOverlap { label: l.clone(), first: first.into(), second: "B".into() });
            }
        }
        let mut edges = BTreeSet::new();
        for [u, v] in &raw.edges {
            let &(su, iu) = side.get(u.as_str()).ok_or_else(|| Error::UnknownEndpoint(u.clone()))?;
            let &(sv, iv) = side.get(v.as_str()).ok_or_else(|| Error::UnknownEndpoint(v.clone()))?;
            if su == sv {
                return Err(Error::EdgeWithinPart { u: u.clone(), v: v.clone() });
            }
            edges.insert(if su { (iv, iu) } else { (iu, iv) });
        }
        if !raw.infinite.is_finite() && !edges.is_empty() {
            return Err(Error::EdgesOnInfiniteEmptyClaim);
        }
        Ok(BipartiteGraph { part_a: raw.a, part_b: raw.b, edges, card: raw.infinite })
    }

    /// An edgeless graph; the flags mark parts standing for infinite sets.
    pub fn empty(part_a: Vec<String>, part_b: Vec<String>, card: Cardinality) -> Result<Self> {
        BipartiteGraph::validate(RawGraph { a: part_a, b: part_b, edges: Vec::new(), infinite: card })
    }

    pub fn complete(part_a: Vec<String>, part_b: Vec<String>) -> Result<Self> {
        let (n, m) = (part_a.len(), part_b.len());
        BipartiteGraph::new(part_a, part_b, (0..n).flat_map(|a| (0..m).map(move |b| (a, b))))
    }

    pub fn to_raw(&self) -> RawGraph {
        RawGraph {
            a: self.part_a.clone(),
            b: self.part_b.clone(),
            edges: self.edge_labels().map(|(a, b)| [a.to_string(), b.to_string()]).collect(),
            infinite: self.card,
        }
    }

    pub fn part_a(&self) -> &[String] {
        &self.part_a
    }

    pub fn part_b(&self) -> &[String] {
        &self.part_b
    }

    pub fn edges(&self) -> &BTreeSet<(usize, usize)> {
        &self.edges
    }

    pub fn edge_labels(&self) -> impl Iterator<Item = (&str, &str)> + '_ {
        self.edges.iter().map(|&(a, b)| (self.part_a[a].as_str(), self.part_b[b].as_str()))
    }

    pub fn cardinality(&self) -> Cardinality {
        self.card
    }

    pub fn is_finite(&self) -> bool {
        self.card.is_finite()
    }

    /// True when the graph has at least one edge.
    pub fn is_nonempty(&self) -> bool {
        !self.edges.is_empty()
    }

    pub fn vertex_count(&self) -> usize {
        self.part_a.len() + self.part_b.len()
    }

    pub fn vertex_label(&self, v: usize) -> &str {
        let na = self.part_a.len();
        if v < na {
            &self.part_a[v]
        } else {
            &self.part_b[v - na]
        }
    }

    pub fn in_part_a(&self, v: usize) -> bool {
        v < self.part_a.len()
    }

    /// Adjacency on global vertex numbers.
    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        let na = self.part_a.len();
        match (u < na, v < na) {
            (true, false) => self.edges.contains(&(u, v - na)),
            (false, true) => self.edges.contains(&(v, u - na)),
            _ => false,
        }
    }

    pub fn degrees(&self) -> Vec<usize> {
        let na = self.part_a.len();
        let mut deg = vec![0; self.vertex_count()];
        for &(a, b) in &self.edges {
            deg[a] += 1;
            deg[na + b] += 1;
        }
        deg
    }

    /// Subgraph on the non-isolated vertices, all edges kept.
    pub fn core(&self) -> Result<Self> {
        if self.edges.is_empty() {
            return Err(Error::EmptyGraph);
        }
        let used_a: BTreeSet<usize> = self.edges.iter().map(|e| e.0).collect();
        let used_b: BTreeSet<usize> = self.edges.iter().map(|e| e.1).collect();
        let remap_a: BTreeMap<usize, usize> = used_a.iter().enumerate().map(|(new, &old)| (old, new)).collect();
        let remap_b: BTreeMap<usize, usize> = used_b.iter().enumerate().map(|(new, &old)| (old, new)).collect();
        Ok(BipartiteGraph {
            part_a: used_a.iter().map(|&i| self.part_a[i].clone()).collect(),
            part_b: used_b.iter().map(|&i| self.part_b[i].clone()).collect(),
            edges: self.edges.iter().map(|(a, b)| (remap_a[a], remap_b[b])).collect(),
            card: self.card,
        })
    }

    /// Connected components as sorted global vertex lists, ordered by least
    /// vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let na = self.part_a.len();
        let mut sets = DisjointSets::new(self.vertex_count());
        for &(a, b) in &self.edges {
            sets.union(a, na + b);
        }
        let mut by_root: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        let mut order = Vec::new();
        for v in 0..self.vertex_count() {
            let r = sets.find(v);
            let members = by_root.entry(r).or_default();
            if members.is_empty() {
                order.push(r);
            }
            members.push(v);
        }
        order.into_iter().map(|r| by_root.remove(&r).unwrap()).collect()
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    pub fn is_complete_bipartite(&self) -> bool {
        self.edges.len() == self.part_a.len() * self.part_b.len()
    }

    /// Components of the core with a completeness flag each.
    pub fn cbd_decompose(&self) -> Result<Decomposition> {
        if self.edges.is_empty() {
            return Err(Error::EmptyGraph);
        }
        let na = self.part_a.len();
        let deg = self.degrees();
        let components: Vec<Component> = self
            .components()
            .into_iter()
            .filter(|vs| deg[vs[0]] > 0)
            .map(|vs| {
                let (a_side, b_side): (Vec<usize>, Vec<usize>) = vs.iter().partition(|&&v| v < na);
                let b_side: Vec<usize> = b_side.into_iter().map(|v| v - na).collect();
                let complete = a_side.iter().all(|&a| b_side.iter().all(|&b| self.edges.contains(&(a, b))));
                Component { a_side, b_side, complete }
            })
            .collect();
        let all_complete = components.iter().all(|c| c.complete);
        Ok(Decomposition { components, all_complete })
    }
}

struct DisjointSets {
    parent: Vec<usize>,
}

impl DisjointSets {
    fn new(n: usize) -> Self {
        DisjointSets { parent: (0..n).collect() }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, x: usize, y: usize) {
        let (rx, ry) = (self.find(x), self.find(y));
        // smaller root wins so roots stay deterministic
        if rx < ry {
            self.parent[ry] = rx;
        } else {
            self.parent[rx] = ry;
        }
    }
}

fn check_bijection(f: &[usize], g: &BipartiteGraph, h: &BipartiteGraph) -> Result<()> {
    if f.len() != g.vertex_count() {
        return Err(Error::NotBijective(format!("{} images for {} vertices", f.len(), g.vertex_count())));
    }
    if g.vertex_count() != h.vertex_count() {
        return Err(Error::NotBijective(format!(
            "{} vertices cannot map onto {}",
            g.vertex_count(),
            h.vertex_count()
        )));
    }
    let mut hit = vec![false; h.vertex_count()];
    for &t in f {
        if t >= hit.len() {
            return Err(Error::NotBijective(format!("image {t} is not a vertex")));
        }
        if std::mem::replace(&mut hit[t], true) {
            return Err(Error::NotBijective(format!("vertex {:?} is hit twice", h.vertex_label(t))));
        }
    }
    Ok(())
}

/// Checks that `f` (global vertex of `g` to global vertex of `h`) preserves
/// adjacency and non-adjacency.
pub fn verify_isomorphism(f: &[usize], g: &BipartiteGraph, h: &BipartiteGraph, mode: IsoMode) -> Result<bool> {
    check_bijection(f, g, h)?;
    if mode == IsoMode::PartPreserving && (0..f.len()).any(|v| g.in_part_a(v) != h.in_part_a(f[v])) {
        return Ok(false);
    }
    let n = g.vertex_count();
    Ok((0..n).all(|u| (u + 1..n).all(|v| g.adjacent(u, v) == h.adjacent(f[u], f[v]))))
}

/// Label-based form of [`verify_isomorphism`].
pub fn verify_isomorphism_labels(
    f: &BTreeMap<String, String>,
    g: &BipartiteGraph,
    h: &BipartiteGraph,
    mode: IsoMode,
) -> Result<bool> {
    let h_index: HashMap<&str, usize> = (0..h.vertex_count()).map(|v| (h.vertex_label(v), v)).collect();
    let map = (0..g.vertex_count())
        .map(|v| {
            let l = g.vertex_label(v);
            let image = f.get(l).ok_or_else(|| Error::NotBijective(format!("no image for {l:?}")))?;
            h_index.get(image.as_str()).copied().ok_or_else(|| Error::NotBijective(format!("{image:?} is not a vertex")))
        })
        .collect::<Result<Vec<_>>>()?;
    if f.len() != map.len() {
        return Err(Error::NotBijective("map has keys outside the vertex set".into()));
    }
    verify_isomorphism(&map, g, h, mode)
}

/// Backtracking search for an isomorphism, pruned by degree. Vertex counts
/// above [`DEFAULT_ISO_BOUND`] are refused.
pub fn find_isomorphism(g: &BipartiteGraph, h: &BipartiteGraph, mode: IsoMode) -> Result<Option<Vec<usize>>> {
    find_isomorphism_bounded(g, h, mode, DEFAULT_ISO_BOUND)
}

pub fn find_isomorphism_bounded(
    g: &BipartiteGraph,
    h: &BipartiteGraph,
    mode: IsoMode,
    bound: usize,
) -> Result<Option<Vec<usize>>> {
    for graph in [g, h] {
        if graph.vertex_count() > bound {
            return Err(Error::TooLarge { vertices: graph.vertex_count(), bound });
        }
    }
    if g.vertex_count() != h.vertex_count() || g.edges.len() != h.edges.len() {
        return Ok(None);
    }
    let (dg, dh) = (g.degrees(), h.degrees());
    let mut sg = dg.clone();
    let mut sh = dh.clone();
    sg.sort_unstable();
    sh.sort_unstable();
    if sg != sh {
        return Ok(None);
    }
    if mode == IsoMode::PartPreserving && (g.part_a.len() != h.part_a.len()) {
        return Ok(None);
    }

    // most constrained vertices first
    let mut order: Vec<usize> = (0..g.vertex_count()).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(dg[v]), v));

    let mut search = IsoSearch {
        g,
        h,
        dg: &dg,
        dh: &dh,
        mode,
        order: &order,
        map: vec![usize::MAX; g.vertex_count()],
        used: vec![false; h.vertex_count()],
    };
    Ok(if search.extend(0) { Some(search.map) } else { None })
}

struct IsoSearch<'a> {
    g: &'a BipartiteGraph,
    h: &'a BipartiteGraph,
    dg: &'a [usize],
    dh: &'a [usize],
    mode: IsoMode,
    order: &'a [usize],
    map: Vec<usize>,
    used: Vec<bool>,
}

impl IsoSearch<'_> {
    fn extend(&mut self, depth: usize) -> bool {
        let Some(&u) = self.order.get(depth) else {
            return true;
        };
        for t in 0..self.h.vertex_count() {
            if self.used[t] || self.dg[u] != self.dh[t] {
                continue;
            }
            if self.mode == IsoMode::PartPreserving && self.g.in_part_a(u) != self.h.in_part_a(t) {
                continue;
            }
            let consistent = self.order[..depth]
                .iter()
                .all(|&w| self.g.adjacent(u, w) == self.h.adjacent(t, self.map[w]));
            if !consistent {
                continue;
            }
            self.map[u] = t;
            self.used[t] = true;
            if self.extend(depth + 1) {
                return true;
            }
            self.used[t] = false;
            self.map[u] = usize::MAX;
        }
        false
    }
}
