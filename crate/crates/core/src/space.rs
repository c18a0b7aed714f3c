//! Finite semimetric spaces with exact rational distances.
//!
//! Points are addressed by their index in declaration order; labels are kept
//! for I/O and error reporting. All point-set arguments are index slices.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::Rational;

/// Unvalidated space description, the shape of the JSON space file.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawSpace {
    pub points: Vec<String>,
    pub distances: Vec<Vec<Rational>>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub parts: BTreeMap<String, Vec<String>>,
}

/// A validated finite semimetric space, optionally carrying named parts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteSpace {
    labels: Vec<String>,
    index: HashMap<String, usize>,
    dist: Vec<Rational>,
    parts: BTreeMap<String, Vec<usize>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Level {
    Semimetric,
    Metric,
    Ultrametric,
}

/// A triple `(x, y, z)` with `d(x, y)` exceeding the bound given by the route
/// through `z`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub x: String,
    pub y: String,
    pub z: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpaceClass {
    pub level: Level,
    /// First failure of the next level up; absent for ultrametric spaces.
    pub violation: Option<Violation>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ball {
    pub center: usize,
    pub radius: Rational,
    pub members: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BallPartition {
    pub radius: Rational,
    pub blocks: Vec<Ball>,
}

impl BallPartition {
    /// One center per block, the least index in the block.
    pub fn representatives(&self) -> Vec<usize> {
        self.blocks.iter().map(|b| b.center).collect()
    }
}

impl FiniteSpace {
    /// Validates a raw description.
    ///
    /// Entries are checked row by row, so the reported indices are those of
    /// the first offending entry in row-major order.
    pub fn validate(raw: RawSpace) -> Result<Self> {
        let n = raw.points.len();
        if raw.distances.len() != n {
            return Err(Error::DimensionMismatch { points: n, rows: raw.distances.len() });
        }
        for (row, r) in raw.distances.iter().enumerate() {
            if r.len() != n {
                return Err(Error::RaggedRow { row, len: r.len(), expected: n });
            }
        }
        let mut index = HashMap::with_capacity(n);
        for (i, label) in raw.points.iter().enumerate() {
            if let Some(&first) = index.get(label) {
                return Err(Error::DuplicateLabel { label: label.clone(), first, second: i });
            }
            index.insert(label.clone(), i);
        }
        for i in 0..n {
            for j in 0..n {
                let d = &raw.distances[i][j];
                if i == j {
                    if !d.is_zero() {
                        return Err(Error::NonzeroDiagonal { i });
                    }
                    continue;
                }
                if d.is_negative() {
                    return Err(Error::NegativeDistance { i, j });
                }
                if *d != raw.distances[j][i] {
                    return Err(Error::AsymmetricMatrix { i: i.min(j), j: i.max(j) });
                }
                if d.is_zero() {
                    return Err(Error::ZeroOffDiagonal { i, j });
                }
            }
        }
        let dist = raw.distances.into_iter().flatten().collect();
        let mut space = FiniteSpace { labels: raw.points, index, dist, parts: BTreeMap::new() };
        for (name, members) in raw.parts {
            let ids = members
                .iter()
                .map(|m| space.index_of(m))
                .collect::<Result<Vec<_>>>()?;
            space = space.with_part(&name, ids)?;
        }
        Ok(space)
    }

    /// Builds a space from a distance rule evaluated on index pairs `i < j`.
    pub fn from_fn<F>(labels: Vec<String>, mut f: F) -> Result<Self>
    where
        F: FnMut(usize, usize) -> Rational,
    {
        let n = labels.len();
        let mut distances = vec![vec![Rational::zero(); n]; n];
        for i in 0..n {
            for j in i + 1..n {
                let d = f(i, j);
                distances[i][j] = d.clone();
                distances[j][i] = d;
            }
        }
        FiniteSpace::validate(RawSpace { points: labels, distances, parts: BTreeMap::new() })
    }

    /// The trivial metric: every pair of distinct points at distance 1.
    pub fn trivial(labels: Vec<String>) -> Result<Self> {
        FiniteSpace::from_fn(labels, |_, _| Rational::one())
    }

    /// Adds (or replaces) a named part. Parts must stay pairwise disjoint.
    pub fn with_part(mut self, name: &str, members: Vec<usize>) -> Result<Self> {
        let mut seen = BTreeSet::new();
        for &m in &members {
            if m >= self.len() {
                return Err(Error::UnknownPoint(m.to_string()));
            }
            if !seen.insert(m) {
                return Err(Error::PartsOverlap {
                    label: self.labels[m].clone(),
                    first: name.to_string(),
                    second: name.to_string(),
                });
            }
        }
        for (other, ids) in &self.parts {
            if other == name {
                continue;
            }
            if let Some(&m) = ids.iter().find(|m| seen.contains(m)) {
                return Err(Error::PartsOverlap {
                    label: self.labels[m].clone(),
                    first: other.clone(),
                    second: name.to_string(),
                });
            }
        }
        self.parts.insert(name.to_string(), members);
        Ok(self)
    }

    pub fn to_raw(&self) -> RawSpace {
        let n = self.len();
        RawSpace {
            points: self.labels.clone(),
            distances: (0..n).map(|i| (0..n).map(|j| self.d(i, j).clone()).collect()).collect(),
            parts: self
                .parts
                .iter()
                .map(|(k, v)| (k.clone(), v.iter().map(|&i| self.labels[i].clone()).collect()))
                .collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.index.get(label).copied().ok_or_else(|| Error::UnknownPoint(label.to_string()))
    }

    pub fn indices_of<S: AsRef<str>>(&self, labels: &[S]) -> Result<Vec<usize>> {
        labels.iter().map(|l| self.index_of(l.as_ref())).collect()
    }

    pub fn parts(&self) -> &BTreeMap<String, Vec<usize>> {
        &self.parts
    }

    pub fn part(&self, name: &str) -> Result<&[usize]> {
        self.parts.get(name).map(Vec::as_slice).ok_or_else(|| Error::UnknownPart(name.to_string()))
    }

    #[inline]
    pub fn d(&self, i: usize, j: usize) -> &Rational {
        &self.dist[i * self.labels.len() + j]
    }

    /// Highest level whose inequality holds on every ordered triple.
    pub fn classify(&self) -> SpaceClass {
        let n = self.len();
        let witness = |x: usize, y: usize, z: usize| Violation {
            x: self.labels[x].clone(),
            y: self.labels[y].clone(),
            z: self.labels[z].clone(),
        };
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    if *self.d(x, y) > self.d(x, z) + self.d(z, y) {
                        return SpaceClass { level: Level::Semimetric, violation: Some(witness(x, y, z)) };
                    }
                }
            }
        }
        match self.strong_triangle_violation() {
            Some((x, y, z)) => SpaceClass { level: Level::Metric, violation: Some(witness(x, y, z)) },
            None => SpaceClass { level: Level::Ultrametric, violation: None },
        }
    }

    fn strong_triangle_violation(&self) -> Option<(usize, usize, usize)> {
        let n = self.len();
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    if self.d(x, y) > self.d(x, z).max(self.d(z, y)) {
                        return Some((x, y, z));
                    }
                }
            }
        }
        None
    }

    pub fn is_ultrametric(&self) -> bool {
        self.strong_triangle_violation().is_none()
    }

    pub(crate) fn require_ultrametric(&self) -> Result<()> {
        match self.strong_triangle_violation() {
            None => Ok(()),
            Some((x, y, z)) => Err(Error::NotUltrametric {
                x: self.labels[x].clone(),
                y: self.labels[y].clone(),
                z: self.labels[z].clone(),
            }),
        }
    }

    /// All values taken by the metric, ascending. Contains 0 for any
    /// nonempty space.
    pub fn distance_set(&self) -> Vec<Rational> {
        self.dist.iter().cloned().collect::<BTreeSet<_>>().into_iter().collect()
    }

    /// `min { d(a, b) : a ∈ A, b ∈ B }`.
    pub fn set_distance(&self, a: &[usize], b: &[usize]) -> Result<Rational> {
        self.check_members(a)?;
        self.check_members(b)?;
        a.iter()
            .flat_map(|&i| b.iter().map(move |&j| (i, j)))
            .map(|(i, j)| self.d(i, j))
            .min()
            .cloned()
            .ok_or(Error::EmptySet)
    }

    pub fn diameter(&self, s: &[usize]) -> Result<Rational> {
        self.check_members(s)?;
        s.iter()
            .flat_map(|&i| s.iter().map(move |&j| (i, j)))
            .map(|(i, j)| self.d(i, j))
            .max()
            .cloned()
            .ok_or(Error::EmptySet)
    }

    pub fn closed_ball(&self, center: usize, radius: &Rational) -> Result<Ball> {
        if center >= self.len() {
            return Err(Error::UnknownPoint(center.to_string()));
        }
        if radius.is_negative() {
            return Err(Error::NegativeRadius);
        }
        let members = (0..self.len()).filter(|&x| self.d(center, x) <= radius).collect();
        Ok(Ball { center, radius: radius.clone(), members })
    }

    /// Partition of an ultrametric space into disjoint closed balls of a
    /// common radius.
    pub fn ball_partition(&self, radius: &Rational) -> Result<BallPartition> {
        if radius.is_negative() {
            return Err(Error::NegativeRadius);
        }
        self.require_ultrametric()?;
        let mut assigned = vec![false; self.len()];
        let mut blocks = Vec::new();
        for c in 0..self.len() {
            if assigned[c] {
                continue;
            }
            let ball = self.closed_ball(c, radius)?;
            for &m in &ball.members {
                debug_assert!(!assigned[m]);
                assigned[m] = true;
            }
            blocks.push(ball);
        }
        Ok(BallPartition { radius: radius.clone(), blocks })
    }

    /// `c + d` off the diagonal.
    pub fn shift(&self, c: &Rational) -> Result<Self> {
        if !c.is_positive() {
            return Err(Error::NonpositiveShift);
        }
        Ok(self.map_off_diagonal(|d| d + c))
    }

    /// `1 / d` off the diagonal.
    pub fn reciprocal(&self) -> Self {
        self.map_off_diagonal(|d| d.recip().expect("off-diagonal distances are positive"))
    }

    fn map_off_diagonal<F: Fn(&Rational) -> Rational>(&self, f: F) -> Self {
        let n = self.len();
        let mut out = self.clone();
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    out.dist[i * n + j] = f(self.d(i, j));
                }
            }
        }
        out
    }

    /// Relabels points through a bijection onto a new label set, keeping
    /// every distance and part.
    pub fn pushforward(&self, f: &BTreeMap<String, String>) -> Result<Self> {
        if f.len() != self.len() {
            let extra = f.keys().find(|k| !self.index.contains_key(*k));
            return Err(Error::NotBijective(match extra {
                Some(k) => format!("{k:?} is not a point"),
                None => format!("{} images for {} points", f.len(), self.len()),
            }));
        }
        let mut labels = Vec::with_capacity(self.len());
        let mut seen = BTreeSet::new();
        for l in &self.labels {
            let image = f.get(l).ok_or_else(|| Error::NotBijective(format!("no image for {l:?}")))?;
            if !seen.insert(image.clone()) {
                return Err(Error::NotBijective(format!("{image:?} is hit twice")));
            }
            labels.push(image.clone());
        }
        let index = labels.iter().enumerate().map(|(i, l)| (l.clone(), i)).collect();
        Ok(FiniteSpace { labels, index, dist: self.dist.clone(), parts: self.parts.clone() })
    }

    pub(crate) fn check_members(&self, s: &[usize]) -> Result<()> {
        if s.is_empty() {
            return Err(Error::EmptySet);
        }
        match s.iter().find(|&&i| i >= self.len()) {
            Some(i) => Err(Error::UnknownPoint(i.to_string())),
            None => Ok(()),
        }
    }
}
