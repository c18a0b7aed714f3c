//! Symbolic countable spaces witnessing the empty-graph cases.
//!
//! Both families live on `A ∪ B` with countably many points addressed by
//! [`TaggedPoint`]s. Distances are evaluated in closed form, so sweeps can
//! probe arbitrarily many points without materializing the space.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FamilyKind {
    /// Ultrametric on two infinite parts with `dist(A, B) = 1` never attained.
    EmptyProximinal,
    /// Metric with infinite part B whose cross supremum 2 is never attained.
    EmptyFarthest,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Side {
    A,
    B,
}

/// A point of a countable family: its part, a positive index, and a copy
/// number distinguishing points that share an index.
///
/// In the proximinal family the index determines `Φ` (`2k` on A, `2k - 1` on
/// B) and copies are distinct points with equal `Φ`. In the farthest family
/// a B point with index `i` is the single member of block `B_i`; copies are
/// not used there.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct TaggedPoint {
    pub side: Side,
    pub index: u64,
    #[serde(default)]
    pub copy: u32,
}

impl TaggedPoint {
    pub fn a(index: u64) -> Self {
        TaggedPoint { side: Side::A, index, copy: 0 }
    }

    pub fn b(index: u64) -> Self {
        TaggedPoint { side: Side::B, index, copy: 0 }
    }
}

impl fmt::Display for TaggedPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let side = match self.side {
            Side::A => "a",
            Side::B => "b",
        };
        if self.copy == 0 {
            write!(f, "{side}{}", self.index)
        } else {
            write!(f, "{side}{}.{}", self.index, self.copy)
        }
    }
}

/// The value of the cross-part infimum or supremum and whether some pair
/// attains it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Extremum {
    pub value: Rational,
    pub attained: bool,
}

/// Serialized as `{"kind": "...", "params": {}}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CountableFamily {
    pub kind: FamilyKind,
    #[serde(default)]
    params: Params,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct Params {}

const MAX_INDEX: u64 = u64::MAX / 4;

impl CountableFamily {
    pub fn new(kind: FamilyKind) -> Self {
        CountableFamily { kind, params: Params {} }
    }

    /// Human-readable distance rule.
    pub fn dist_rule(&self) -> &'static str {
        match self.kind {
            FamilyKind::EmptyProximinal => {
                "d(x,y) = 0 if x = y; 1 if x != y and phi(x) = phi(y); max(1 + 1/phi(x), 1 + 1/phi(y)) otherwise"
            }
            FamilyKind::EmptyFarthest => "d(x,y) = 0 if x = y; 1 + i/(i+1) if x in A and y in B_i; 1 otherwise",
        }
    }

    /// Infimum (proximinal) or supremum (farthest) of `d` over `A × B`.
    pub fn extremum(&self) -> Extremum {
        match self.kind {
            FamilyKind::EmptyProximinal => Extremum { value: Rational::one(), attained: false },
            FamilyKind::EmptyFarthest => Extremum { value: Rational::from(2), attained: false },
        }
    }

    fn check(&self, p: &TaggedPoint) -> Result<()> {
        if p.index == 0 || p.index > MAX_INDEX {
            return Err(Error::InvalidIndex(format!("{p}: index must lie in 1..={MAX_INDEX}")));
        }
        if self.kind == FamilyKind::EmptyFarthest && p.copy != 0 {
            return Err(Error::InvalidIndex(format!("{p}: copies are not used in the farthest family")));
        }
        Ok(())
    }

    /// `Φ` for the proximinal family: `2k` on A, `2k - 1` on B.
    pub fn phi(&self, p: &TaggedPoint) -> Result<u64> {
        if self.kind != FamilyKind::EmptyProximinal {
            return Err(Error::WrongFamilyKind);
        }
        self.check(p)?;
        Ok(match p.side {
            Side::A => 2 * p.index,
            Side::B => 2 * p.index - 1,
        })
    }

    pub fn distance(&self, p: &TaggedPoint, q: &TaggedPoint) -> Result<Rational> {
        self.check(p)?;
        self.check(q)?;
        if p == q {
            return Ok(Rational::zero());
        }
        Ok(match self.kind {
            FamilyKind::EmptyProximinal => {
                let (fp, fq) = (self.phi(p)?, self.phi(q)?);
                if fp == fq {
                    Rational::one()
                } else {
                    // max(1 + 1/Φp, 1 + 1/Φq) = 1 + 1/min(Φp, Φq)
                    Rational::one() + Rational::ratio_u64(1, fp.min(fq))
                }
            }
            FamilyKind::EmptyFarthest => match (p.side, q.side) {
                (Side::A, Side::B) => block_distance(q.index),
                (Side::B, Side::A) => block_distance(p.index),
                _ => Rational::one(),
            },
        })
    }

    /// Nearest point of part `side` to `x` together with its distance, for
    /// the proximinal family.
    ///
    /// For `x` in the other part the minimum of `1 + 1/min(Φ(x), Φ(y))` over
    /// `y` in `side` is `1 + 1/Φ(x)`, attained exactly when `Φ(y) > Φ(x)`;
    /// the witness is the least such `y`.
    pub fn best_approximation(&self, x: &TaggedPoint, side: Side) -> Result<(TaggedPoint, Rational)> {
        if self.kind != FamilyKind::EmptyProximinal {
            return Err(Error::WrongFamilyKind);
        }
        let phi = self.phi(x)?;
        if x.side == side {
            return Ok((*x, Rational::zero()));
        }
        // Φ(x) + 1 has the parity of the target part
        let target = phi + 1;
        let witness = match side {
            Side::A => TaggedPoint::a(target / 2),
            Side::B => TaggedPoint::b(target.div_ceil(2)),
        };
        debug_assert_eq!(self.phi(&witness)?, target);
        let value = self.distance(x, &witness)?;
        Ok((witness, value))
    }
}

fn block_distance(i: u64) -> Rational {
    Rational::one() + Rational::ratio_u64(i, i + 1)
}
