use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix is not symmetric: entry ({row}, {col}) differs from its transpose")]
    NotSymmetric { row: usize, col: usize },

    #[error("class is not torsion: no rational solution of B x = v")]
    NonTorsion,

    #[error("coefficient vector is not characteristic at index {0}: c_i and B_ii differ mod 2")]
    NotCharacteristic(usize),

    #[error("torsion subgroup has order {order}, above the enumeration cap {cap}")]
    CapExceeded { order: String, cap: usize },

    #[error("stabilization coefficient must be odd, got {0}")]
    EvenCoefficient(String),

    #[error("stabilization sign must be +1 or -1, got {0}")]
    BadSign(i64),

    #[error("eta must be +1 or -1, got {0}")]
    BadEta(i64),

    #[error("index {index} out of range for {len} components")]
    IndexError { index: usize, len: usize },

    #[error("band sum needs two distinct components, got {0} twice")]
    SameComponent(usize),

    #[error(
        "framed link has a component with nonzero homology class {index}; not a Z-sphere setting"
    )]
    NotZSphere { index: usize },

    #[error("framed link carries no homology classes")]
    MissingClasses,
}
