use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An argument outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    /// A zero denominator was hit while evaluating a continued fraction tail.
    #[error("singular evaluation at level {level}")]
    SingularEvaluation { level: usize },

    /// Fewer digits could be trusted than the caller needs.
    #[error("precision insufficient: {0}")]
    PrecisionInsufficient(String),

    /// A depth or term budget ran out before the target was met.
    #[error("budget exhausted: {0}")]
    Budget(String),

    /// An exact identity or certificate did not hold.
    #[error("identity violation: {0}")]
    IdentityViolation(String),

    /// A closed form disagreed with the recurrence it is supposed to solve.
    #[error("theorem violation: {0}")]
    TheoremViolation(String),

    #[error("unknown identity `{0}`")]
    UnknownIdentity(String),

    /// The quadratic has a perfect-square discriminant, so its roots are rational.
    #[error("degenerate root: discriminant {0} is a perfect square")]
    DegenerateRoot(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}
