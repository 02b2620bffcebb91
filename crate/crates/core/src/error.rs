use thiserror::Error;

/// Everything that can go wrong while building or transforming the objects of this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("label {label} out of range 1..={max}")]
    LabelOutOfRange { label: usize, max: usize },
    #[error("not a permutation: {0}")]
    NotAPermutation(String),
    #[error("malformed cycle notation: {0}")]
    Parse(String),
    #[error("empty generator list on {0} points")]
    NoGenerators(usize),
    #[error("alpha is not a fixed-point-free involution")]
    AlphaNotInvolution,
    #[error("map is not connected: <sigma, alpha> is not transitive")]
    NotTransitive,
    #[error("invalid genus: 2 - V + E - F = {0} is not a non-negative even number")]
    InvalidGenus(i64),
    #[error("edge {edge} out of range 1..={n}")]
    EdgeOutOfRange { edge: usize, n: usize },
    #[error("size mismatch: expected n = {expected}, got {got}")]
    SizeMismatch { expected: usize, got: usize },
    #[error("bound exceeded: n = {n} > {bound}")]
    BoundExceeded { n: usize, bound: usize },
    #[error("malformed base {0:?}")]
    BadBase(String),
    #[error("matrix is not Lagrangian: rank {rank} < {n}")]
    RankDeficient { rank: usize, n: usize },
    #[error("matrix violates the {0} isotropy condition")]
    NotIsotropic(&'static str),
    #[error("malformed matrix: {0}")]
    BadMatrix(String),
    #[error("{0} is not a base of the map")]
    NotABase(String),
    #[error("representation check failed: {0}")]
    OracleMismatch(String),
    #[error("too many points for hull computation: {points} points in dimension {dim}")]
    HullTooLarge { points: usize, dim: usize },
    #[error("invalid signed permutation word: {0}")]
    BadWord(String),
    #[error("invalid document: {0}")]
    Document(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
