use thiserror::Error;

/// Errors raised anywhere in the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("variable count mismatch: {left} vs {right}")]
    VarMismatch { left: usize, right: usize },

    #[error("arity mismatch: expected {expected} substitutions, got {got}")]
    ArityMismatch { expected: usize, got: usize },

    #[error("cannot homogenize to degree {target}: polynomial has degree {degree}")]
    DegreeTooLow { target: u32, degree: u32 },

    #[error("polynomial is not homogeneous")]
    NotHomogeneous,

    #[error("zero polynomial where a nonzero one is required")]
    ZeroPolynomial,

    #[error("polynomial is not univariate")]
    NotUnivariate,

    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("coordinate {coordinate} is not homogeneous")]
    CoordinateNotHomogeneous { coordinate: usize },

    #[error("coordinate {coordinate} not of degree {expected} (found {found})")]
    CoordinateDegree {
        coordinate: usize,
        expected: u32,
        found: u32,
    },

    #[error("all coordinates of the map are zero")]
    AllZeroMap,

    #[error("invalid map: {0}")]
    InvalidMap(String),

    #[error("composition produced the all-zero map at iterate {iterate}")]
    DegenerateComposition { iterate: usize },

    #[error("map is not normalized: coordinates share a nonconstant factor")]
    NotNormalized,

    #[error("map is not dominant")]
    NotDominant,

    #[error("expected a map of P^{expected_n} of degree {expected_d}, got P^{n} of degree {d}")]
    WrongShape {
        expected_n: usize,
        expected_d: u32,
        n: usize,
        d: u32,
    },

    #[error("invalid weight vector: {0}")]
    InvalidWeights(String),

    #[error("parameter out of range: {0}")]
    OutOfRange(String),

    #[error("invalid Henon data: {0}")]
    InvalidHenon(String),

    #[error("certificate verification failed: mu = {mu}, expected {expected}")]
    VerificationFailed { mu: i64, expected: String },

    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },

    #[error("internal inconsistency: {0}")]
    Internal(String),
}

impl Error {
    /// Stable kebab-case name of the variant, used in JSON error reports.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::VarMismatch { .. } => "var-mismatch",
            Error::ArityMismatch { .. } => "arity-mismatch",
            Error::DegreeTooLow { .. } => "degree-too-low",
            Error::NotHomogeneous => "not-homogeneous",
            Error::ZeroPolynomial => "zero-polynomial",
            Error::NotUnivariate => "not-univariate",
            Error::Syntax { .. } => "syntax",
            Error::CoordinateNotHomogeneous { .. } => "coordinate-not-homogeneous",
            Error::CoordinateDegree { .. } => "coordinate-degree",
            Error::AllZeroMap => "all-zero-map",
            Error::InvalidMap(_) => "invalid-map",
            Error::DegenerateComposition { .. } => "degenerate-composition",
            Error::NotNormalized => "not-normalized",
            Error::NotDominant => "not-dominant",
            Error::WrongShape { .. } => "wrong-shape",
            Error::InvalidWeights(_) => "invalid-weights",
            Error::OutOfRange(_) => "out-of-range",
            Error::InvalidHenon(_) => "invalid-henon",
            Error::VerificationFailed { .. } => "verification-failed",
            Error::Io { .. } => "io",
            Error::Internal(_) => "internal",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
