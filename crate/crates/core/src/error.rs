use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("shape error: {0}")]
    Shape(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("unsupported piece: {0}")]
    UnsupportedPiece(String),

    #[error("singular supports intersect at {0}; use the star product")]
    Overlap(String),

    #[error("epsilon {0} too large: translated singular support meets the other factor's")]
    EpsilonTooLarge(String),

    #[error("degenerate leading coefficient: a_n is the zero expression")]
    DegenerateLeadingCoefficient,

    #[error("parse error at {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("semantics error: {0}")]
    Semantics(String),

    #[error("inexact coefficient: {0}")]
    Inexact(String),
}

impl Error {
    /// Errors caused by the mathematics rather than by malformed input.
    pub fn is_math_domain(&self) -> bool {
        matches!(
            self,
            Error::Domain(_)
                | Error::UnsupportedPiece(_)
                | Error::Overlap(_)
                | Error::EpsilonTooLarge(_)
                | Error::DegenerateLeadingCoefficient
                | Error::Inexact(_)
        )
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
