//! Cyclic nonexpansive self-maps of `A ∪ B` and their action on the
//! proximinal graph.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::proximity::{check_parts, proximity_report, Mode};
use crate::rational::Rational;
use crate::space::FiniteSpace;

/// A total map on `A ∪ B` sending A into B and B into A.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclicMap {
    /// Indexed by space point; `None` outside `A ∪ B`.
    image: Vec<Option<usize>>,
    a: Vec<usize>,
    b: Vec<usize>,
}

/// Outcome of the nonexpansive check; `witness` is the first pair `(x, y)`
/// with `d(F(x), F(y)) > d(x, y)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Expansion {
    pub nonexpansive: bool,
    pub witness: Option<(usize, usize)>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Homomorphism,
    /// An edge whose image is not an edge. Cannot happen for a cyclic
    /// nonexpansive map; reported rather than hidden.
    Inconsistent { edge: (usize, usize) },
}

impl CyclicMap {
    /// Builds a map from `(source, image)` index pairs.
    pub fn new(space: &FiniteSpace, a: &[usize], b: &[usize], pairs: &[(usize, usize)]) -> Result<Self> {
        check_parts(space, a, b)?;
        let mut image = vec![None; space.len()];
        let in_a: BTreeSet<usize> = a.iter().copied().collect();
        let in_b: BTreeSet<usize> = b.iter().copied().collect();
        for &(x, y) in pairs {
            if x >= space.len() || !(in_a.contains(&x) || in_b.contains(&x)) {
                return Err(Error::UnknownPoint(label_or_index(space, x)));
            }
            if y >= space.len() {
                return Err(Error::UnknownPoint(y.to_string()));
            }
            let crosses = if in_a.contains(&x) { in_b.contains(&y) } else { in_a.contains(&y) };
            if !crosses {
                return Err(Error::NotCyclic(space.label(x).to_string()));
            }
            image[x] = Some(y);
        }
        if let Some(&x) = a.iter().chain(b).find(|&&x| image[x].is_none()) {
            return Err(Error::NotTotal(space.label(x).to_string()));
        }
        Ok(CyclicMap { image, a: a.to_vec(), b: b.to_vec() })
    }

    pub fn part_a(&self) -> &[usize] {
        &self.a
    }

    pub fn part_b(&self) -> &[usize] {
        &self.b
    }

    /// `F(x)` for `x ∈ A ∪ B`.
    pub fn apply(&self, x: usize) -> usize {
        self.image[x].expect("point outside A ∪ B")
    }

    /// `F^k(x)`.
    pub fn power(&self, x: usize, k: usize) -> usize {
        (0..k).fold(x, |y, _| self.apply(y))
    }

    pub fn domain(&self) -> impl Iterator<Item = usize> + '_ {
        self.a.iter().chain(&self.b).copied()
    }

    pub fn expansion(&self, space: &FiniteSpace) -> Expansion {
        let dom: Vec<usize> = self.domain().collect();
        for (k, &x) in dom.iter().enumerate() {
            for &y in &dom[k + 1..] {
                if space.d(self.apply(x), self.apply(y)) > space.d(x, y) {
                    return Expansion { nonexpansive: false, witness: Some((x, y)) };
                }
            }
        }
        Expansion { nonexpansive: true, witness: None }
    }

    fn require_nonexpansive(&self, space: &FiniteSpace) -> Result<()> {
        match self.expansion(space).witness {
            None => Ok(()),
            Some((x, y)) => Err(Error::PreconditionFailed(format!(
                "map expands the pair ({}, {}): {} > {}",
                space.label(x),
                space.label(y),
                space.d(self.apply(x), self.apply(y)),
                space.d(x, y)
            ))),
        }
    }
}

fn label_or_index(space: &FiniteSpace, x: usize) -> String {
    if x < space.len() {
        space.label(x).to_string()
    } else {
        x.to_string()
    }
}

/// Parses a label table and checks the cyclic and nonexpansive conditions.
pub fn validate_map(
    table: &BTreeMap<String, String>,
    space: &FiniteSpace,
    a: &[usize],
    b: &[usize],
) -> Result<(CyclicMap, Expansion)> {
    let pairs = table
        .iter()
        .map(|(x, y)| Ok((space.index_of(x)?, space.index_of(y)?)))
        .collect::<Result<Vec<_>>>()?;
    let map = CyclicMap::new(space, a, b, &pairs)?;
    let expansion = map.expansion(space);
    Ok((map, expansion))
}

/// Checks that every proximinal-graph edge maps to an edge.
pub fn verify_self_homomorphism(f: &CyclicMap, space: &FiniteSpace) -> Result<Verdict> {
    f.require_nonexpansive(space)?;
    let report = proximity_report(space, &f.a, &f.b, Mode::Proximinal)?;
    let edges: BTreeSet<(usize, usize)> = report.pairs.iter().copied().collect();
    for &(x, y) in &report.pairs {
        // F(x) ∈ B and F(y) ∈ A, so the image edge reads (F(y), F(x))
        if !edges.contains(&(f.apply(y), f.apply(x))) {
            return Ok(Verdict::Inconsistent { edge: (x, y) });
        }
    }
    Ok(Verdict::Homomorphism)
}

/// `d(F^k(a0), F^k(b0))` for `k = 1..=steps`, starting from a best
/// proximity pair.
pub fn orbit_check(f: &CyclicMap, space: &FiniteSpace, a0: usize, b0: usize, steps: usize) -> Result<Vec<Rational>> {
    let dist = space.set_distance(&f.a, &f.b)?;
    let is_pair = f.a.contains(&a0) && f.b.contains(&b0) && *space.d(a0, b0) == dist;
    if !is_pair {
        return Err(Error::NotBestProximityPair {
            a: label_or_index(space, a0),
            b: label_or_index(space, b0),
        });
    }
    f.require_nonexpansive(space)?;
    let (mut x, mut y) = (a0, b0);
    Ok((0..steps)
        .map(|_| {
            x = f.apply(x);
            y = f.apply(y);
            space.d(x, y).clone()
        })
        .collect())
}
