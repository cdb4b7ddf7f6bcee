use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("gcd of two zero polynomials")]
    BothZero,
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("cannot parse scalar {0:?}")]
    ParseScalar(String),
    #[error("invalid matrix: {0}")]
    InvalidMatrix(String),
    #[error("matrix is singular")]
    Singular,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("length {len} is not {n}^2")]
    LengthMismatch { len: usize, n: usize },
    #[error("not a character: relation {0} fails")]
    NotACharacter(String),
    #[error("not a complex: map {0} composed with map {1} is nonzero")]
    NotAComplex(usize, usize),
    #[error("polynomial uses letters outside the alphabet")]
    AlphabetMismatch,
    #[error("polynomial degree {degree} exceeds bound {bound}")]
    DegreeExceedsBound { degree: usize, bound: usize },
    #[error("operation not supported for this presentation")]
    UnsupportedPresentation,
    #[error("presentation carries no grading")]
    NotGraded,
    #[error("verification failed at {0}")]
    VerificationFailed(String),
    #[error("cannot parse word {0:?}")]
    ParseWord(String),
}

pub type Result<T> = std::result::Result<T, Error>;
