use thiserror::Error;

/// Errors surfaced by the library API.
///
/// Internal arithmetic on elements of mismatched fields is a programming
/// error and panics; the variants here are the failure modes a caller can
/// run into with well-typed but unlucky inputs.
#[derive(Debug, Error)]
pub enum Error {
    #[error("field descriptor mismatch: {0}")]
    FieldMismatch(String),

    #[error("division by zero")]
    DivisionByZero,

    #[error("factorization incomplete: irreducible factor of degree {degree} exceeds bound {bound}")]
    FactorizationIncomplete { degree: usize, bound: usize },

    #[error("polynomial is reducible: {0}")]
    ReducibleModulus(String),

    #[error("{0}")]
    InvalidInput(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("cycle support touches the excluded point {0}")]
    SupportAtExcludedPoint(String),

    #[error("cubical identity violated: {0}")]
    CubicalIdentity(String),

    #[error("chain map is not a complex: d.d != 0 at degree {0}")]
    NotAComplex(usize),

    #[error("curve is contained in the divisor support: {0}")]
    CurveInsideDivisor(String),

    #[error("unresolvable root field over Q: factor of degree {0}")]
    UnresolvableRootField(usize),

    #[error("unsupported cycle shape: {0}")]
    UnsupportedShape(String),

    #[error("modulus exponent too small: given {given}, required at least {required}")]
    ModulusTooSmall { given: usize, required: usize },

    #[error("size cap exceeded: {0}")]
    CapExceeded(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}
