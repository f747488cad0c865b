use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("invalid Lie type: {0}")]
    InvalidLieType(String),
    #[error("invalid parabolic descriptor: {0}")]
    InvalidParabolic(String),
    #[error("entry ({0},{1}) carries no root vector: {2}")]
    NoRootVector(usize, usize, String),
    #[error("parabolic is not nice: {0}")]
    NotNice(String),
    #[error("hat-variant precondition failed: {0}")]
    HatPrecondition(String),
    #[error("matrix is not a member of {0}")]
    NotMember(String),
    #[error("matrix is not nilpotent")]
    NotNilpotent,
    #[error("self-verification failed (placement-rule bug, not a user error): {0}")]
    SelfVerification(String),
    #[error("internal criterion disagreement: {0}")]
    CriterionDisagreement(String),
    #[error("structure constant consistency failure: {0}")]
    ChevalleyInconsistency(String),
    #[error("table data error at {locator}: {message}")]
    TableData { locator: String, message: String },
    #[error("{0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;
