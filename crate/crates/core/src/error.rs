use thiserror::Error;

/// Errors raised by the geometric constructors and predicates.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("zero vector has no projective class")]
    ZeroVector,
    #[error("non-finite entry in input")]
    NonFinite,
    #[error("bilinear form is not symmetric")]
    NotSymmetric,
    #[error("form is not antisymmetric")]
    NotAntisymmetric,
    #[error("form is degenerate")]
    DegenerateForm,
    #[error("rank deficient input: expected rank {expected}, found {found}")]
    RankDeficient { expected: usize, found: usize },
    #[error("vector is not null (q = {value})")]
    NotNull { value: f64 },
    #[error("vector is null; reflection undefined")]
    NullVector,
    #[error("vector is not spacelike (q = {value})")]
    NotSpacelike { value: f64 },
    #[error("plane is not totally isotropic")]
    NotIsotropic,
    #[error("points are incident: {0}")]
    Incident(&'static str),
    #[error("degenerate configuration: {0}")]
    Degenerate(String),
    #[error("plane is not Lagrangian")]
    NotLagrangian,
    #[error("plane is Lagrangian; it is its own symplectic complement")]
    Lagrangian,
    #[error("planes are not transverse: {0}")]
    NotTransverse(&'static str),
    #[error("bivector is not decomposable (b.b = {value})")]
    NotDecomposable { value: f64 },
    #[error("bivector does not lie in W (omega(b) = {value})")]
    NotInW { value: f64 },
    #[error("Det(f) = -1: the graph is Lagrangian")]
    DetMinusOne,
    #[error("invalid lightlike quadrilateral: {detail} (max deviation {max_deviation:e})")]
    InvalidQuadrilateral { detail: String, max_deviation: f64 },
    #[error("matrix is not in SL(2) (det = {det})")]
    NotSpecialLinear { det: f64 },
    #[error("horocycle configuration invalid: {0}")]
    Horocycle(&'static str),
    #[error("rejection sampling exhausted after {0} attempts")]
    RetryExhausted(usize),
    #[error("not enough samples: {0}")]
    InsufficientSamples(&'static str),
    #[error("empty input: {0}")]
    Empty(&'static str),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
