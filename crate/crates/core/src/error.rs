use thiserror::Error;

/// Errors raised by library operations.
///
/// Every variant has a stable machine-readable [`Error::code`], used by the
/// command line front end under `--json`.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cannot parse {what}: {token:?}")]
    Parse { what: &'static str, token: String },

    #[error("matrix has determinant {0}, expected 1")]
    BadDeterminant(String),

    #[error("permutations do not define an action of the modular group: {0}")]
    NotAnAction(String),

    #[error("the action is not transitive; the graph would be disconnected")]
    NotTransitive,

    #[error("graph carries Farey branch stubs; operation needs a finite graph")]
    HasStubs,

    #[error("invalid ribbon graph: {0}")]
    InvalidGraph(String),

    #[error("graph has no base half-edge")]
    NoBase,

    #[error("walk is not closed at the base edge")]
    NotClosed,

    #[error("walk step {0} does not follow an adjacent half-edge")]
    NotAdjacent(usize),

    #[error("element is not hyperbolic")]
    NotHyperbolic,

    #[error("discriminant {0} is a perfect square")]
    SquareDiscriminant(String),

    #[error("form {0} is not primitive")]
    NotPrimitive(String),

    #[error("bad discriminant {0}: need a positive non-square integer congruent to 0 or 1 mod 4")]
    BadDiscriminant(String),

    #[error("discriminants differ: {0} vs {1}")]
    DiscriminantMismatch(String, String),

    #[error("representation target must be nonzero")]
    ZeroTarget,

    #[error("congruence level must be at least 1")]
    BadLevel,

    #[error("{0} exceeds the work limit {1}; raise --limit to proceed")]
    LimitExceeded(String, String),
}

impl Error {
    /// Stable identifier for machine-readable output.
    pub fn code(&self) -> &'static str {
        match self {
            Error::Parse { .. } => "Parse",
            Error::BadDeterminant(_) => "BadDeterminant",
            Error::NotAnAction(_) => "NotAnAction",
            Error::NotTransitive => "NotTransitive",
            Error::HasStubs => "HasStubs",
            Error::InvalidGraph(_) => "InvalidGraph",
            Error::NoBase => "NoBase",
            Error::NotClosed => "NotClosed",
            Error::NotAdjacent(_) => "NotAdjacent",
            Error::NotHyperbolic => "NotHyperbolic",
            Error::SquareDiscriminant(_) => "SquareDiscriminant",
            Error::NotPrimitive(_) => "NotPrimitive",
            Error::BadDiscriminant(_) => "BadDiscriminant",
            Error::DiscriminantMismatch(..) => "DiscriminantMismatch",
            Error::ZeroTarget => "ZeroTarget",
            Error::BadLevel => "BadLevel",
            Error::LimitExceeded(..) => "LimitExceeded",
        }
    }

    pub(crate) fn parse(what: &'static str, token: impl Into<String>) -> Self {
        Error::Parse {
            what,
            token: token.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
