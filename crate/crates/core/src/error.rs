use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("matrix is not Hermitian (residual {residual:.3e})")]
    NotHermitian { residual: f64 },
    #[error("empty input")]
    EmptyInput,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("cannot normalize the zero vector")]
    ZeroVector,
    #[error("non-finite entry encountered")]
    NonFinite,
    #[error("leading polynomial coefficient is zero")]
    LeadingCoefficientZero,
    #[error("no convergence after {iterations} iterations (residual {residual:.3e})")]
    NoConvergence { iterations: usize, residual: f64 },
    #[error("invalid node count {0}")]
    InvalidNodeCount(usize),
    #[error("k = {k} is below the admissible floor {floor}")]
    KBelowFloor { k: f64, floor: f64 },
    #[error("invalid cutoff {0}")]
    InvalidCutoff(i64),
    #[error("label ordering violated: need l >= s >= h, got l={l}, s={s}, h={h}")]
    OrderingViolation { l: i64, s: i64, h: i64 },
    #[error("Pochhammer pole in the denominator at term {m}")]
    PochhammerPole { m: usize },
    #[error("expectation has imaginary part {imag:.3e}")]
    ComplexExpectation { imag: f64 },
    #[error("singular system: {0}")]
    Singular(String),
    #[error("{0}")]
    OutOfRange(String),
}

pub type Result<T> = std::result::Result<T, Error>;
