use thiserror::Error;

use crate::poly::Polynomial;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid quotient spec: {0}")]
    InvalidSpec(String),

    #[error("not a valid shape for {spec}: {reason}")]
    NotAShape { spec: String, reason: String },

    #[error("shapes belong to different ambient diagrams ({0} vs {1})")]
    AmbientMismatch(String, String),

    #[error("inner shape {inner} is not contained in outer shape {outer}")]
    NotContained { inner: String, outer: String },

    #[error("family {0} has no sorting game")]
    UnsupportedFamily(String),

    #[error("element is not a minimal coset representative")]
    NotQuotientRep,

    #[error("division by the zero polynomial")]
    DivisionByZero,

    #[error("{denominator} does not divide {numerator} in Z[q]")]
    NonExactDivision {
        numerator: Polynomial,
        denominator: Polynomial,
    },

    #[error("closed form for u={u} v={v} is not a polynomial: {source}")]
    NonPolynomialBase {
        u: String,
        v: String,
        #[source]
        source: Box<Error>,
    },

    #[error("closed form for u={u} v={v}: base degree {base_degree} exceeds length {length}")]
    NegativeEta {
        u: String,
        v: String,
        base_degree: usize,
        length: usize,
    },

    #[error("Kazhdan-Lusztig inversion identity fails for pair ({u}, {v})")]
    InversionInconsistent { u: usize, v: usize },

    #[error("invalid signed permutation: {0}")]
    InvalidPermutation(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
