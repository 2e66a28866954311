use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertices do not span the ambient lattice (affine rank {rank}, need {dim})")]
    NotFullDimensional { rank: usize, dim: usize },
    #[error("origin is not in the interior: facet {facet} has offset {offset}")]
    OriginNotInterior { facet: usize, offset: i64 },
    #[error("polytope is not reflexive: facet {facet} has offset {offset}")]
    NotReflexive { facet: usize, offset: i64 },
    #[error("expected a polytope of dimension {expected}, got {found}")]
    WrongDimension { expected: String, found: usize },
    #[error("operands live in lattices of different rank ({left} vs {right})")]
    LatticeMismatch { left: usize, right: usize },
    #[error("invalid vertex list: {0}")]
    InvalidVertices(String),

    #[error("condition (2): parts do not partition the vertex set: {0}")]
    NotAPartition(String),
    #[error("condition (1): support function of part {part} is not linear on the cone over facet {facet}")]
    NotLinearOnCone { part: usize, facet: usize },
    #[error("condition (4): support function of part {part} is not integral on facet {facet}")]
    NonIntegralSupport { part: usize, facet: usize },
    #[error("condition (3): support function of part {part} is not concave (facets {facet} and {other})")]
    NotConcave {
        part: usize,
        facet: usize,
        other: usize,
    },
    #[error("part {part} of the NEF partition is not ample")]
    NotAmple { part: usize },
    #[error("part index {part} out of range for a partition with {parts} parts")]
    InvalidPart { part: usize, parts: usize },
    #[error("face has no lattice point in its relative interior")]
    NoInteriorPoint,
    #[error("face with interior lattice points has vertices in several parts")]
    MixedVertices,

    #[error("geometry configuration mismatch: {0}")]
    ConfigMismatch(String),
    #[error("combinatorial count is negative ({value}); the input lies outside the formula's hypotheses")]
    NegativeCount { value: i64 },
    #[error("homology is incomplete: the rank of H_3 is unavailable in complete-intersection mode")]
    IncompleteHomology,
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("face index {index} out of range ({count} two-faces)")]
    BadFaceIndex { index: usize, count: usize },
    #[error("shelling failed: {0}")]
    NotShellable(String),

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("value {0} does not fit the report's integer range")]
    Overflow(String),
}
