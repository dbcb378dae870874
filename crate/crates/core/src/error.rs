use thiserror::Error;

/// Every failure the library reports. Messages state the violated
/// mathematical condition.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SodError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("unknown group tag {0:?}")]
    UnknownGroup(String),

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("search region is unbounded in coordinate {coordinate}")]
    UnboundedRegion { coordinate: usize },

    #[error("weight {0} is not integral")]
    NotIntegral(String),

    #[error("weight {0} is not dominant")]
    NotDominant(String),

    #[error("point {0} lies in no dilate of the weight zonotope")]
    OffSpan(String),

    #[error("no antidominant one-parameter subgroup realizes the sign pattern of {0}")]
    UnrealizableSignature(String),

    #[error("epsilon {0} is not fixed by the Weyl group")]
    NotInvariant(String),

    #[error(
        "no T-stable point: every weight pairs non-positively with sigma = {sigma}, \
         so the weights do not positively span the character space"
    )]
    NoStablePoint { sigma: String },

    #[error("refined one-parameter subgroup did not reproduce the nested sign pattern after {0} halvings")]
    RefinementUnstable(usize),
}

pub type Result<T> = std::result::Result<T, SodError>;
