use thiserror::Error;

/// Every failure the library can report. Variants carry the offending labels
/// or indices so callers can point at the bad input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    // space validation
    #[error("distance matrix has {rows} rows but {points} points")]
    DimensionMismatch { points: usize, rows: usize },
    #[error("distance matrix row {row} has {len} entries, expected {expected}")]
    RaggedRow { row: usize, len: usize, expected: usize },
    #[error("duplicate point label {label:?} at indices {first} and {second}")]
    DuplicateLabel { label: String, first: usize, second: usize },
    #[error("matrix is not symmetric at ({i}, {j})")]
    AsymmetricMatrix { i: usize, j: usize },
    #[error("negative distance at ({i}, {j})")]
    NegativeDistance { i: usize, j: usize },
    #[error("nonzero diagonal entry at index {i}")]
    NonzeroDiagonal { i: usize },
    #[error("zero distance between distinct points at ({i}, {j})")]
    ZeroOffDiagonal { i: usize, j: usize },
    #[error("unknown point {0:?}")]
    UnknownPoint(String),
    #[error("point {label:?} belongs to parts {first:?} and {second:?}")]
    PartsOverlap { label: String, first: String, second: String },
    #[error("unknown part {0:?}")]
    UnknownPart(String),
    #[error("negative radius")]
    NegativeRadius,
    #[error("empty point set")]
    EmptySet,
    #[error("space is not ultrametric: d({x},{y}) > max(d({x},{z}), d({z},{y}))")]
    NotUltrametric { x: String, y: String, z: String },
    #[error("shift constant must be positive")]
    NonpositiveShift,
    #[error("relabeling is not a bijection: {0}")]
    NotBijective(String),

    // graphs
    #[error("part {0} is empty")]
    EmptyPart(&'static str),
    #[error("edge {{{u}, {v}}} has both ends in the same part")]
    EdgeWithinPart { u: String, v: String },
    #[error("edge endpoint {0:?} is not a vertex")]
    UnknownEndpoint(String),
    #[error("a part declared infinite requires an empty edge set")]
    EdgesOnInfiniteEmptyClaim,
    #[error("graph has no edges")]
    EmptyGraph,
    #[error("graph has {vertices} vertices; the isomorphism search bound is {bound}")]
    TooLarge { vertices: usize, bound: usize },
    #[error("operation requires finite parts")]
    InfiniteParts,

    // realization
    #[error("core component {component} is not complete bipartite")]
    NotCompletelyDecomposable { component: usize },
    #[error("invalid tagged index: {0}")]
    InvalidIndex(String),
    #[error("operation is not defined for this countable family")]
    WrongFamilyKind,

    // maps
    #[error("map is not total: no image for {0:?}")]
    NotTotal(String),
    #[error("map is not cyclic at {0:?}")]
    NotCyclic(String),
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),
    #[error("({a}, {b}) is not a best proximity pair")]
    NotBestProximityPair { a: String, b: String },
}

impl Error {
    /// Malformed input as opposed to a well-formed input the domain rejects.
    pub fn is_parse(&self) -> bool {
        matches!(self, Error::Parse(_))
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
