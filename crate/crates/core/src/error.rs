use thiserror::Error;

/// Errors raised by the polynomial, root, measure and search routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("parse error at token {token:?}: {reason}")]
    Parse { token: String, reason: String },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("polynomial is not squarefree")]
    NotSquarefree,

    #[error("endpoint {endpoint} is a root; perturb the endpoint and retry")]
    RootOnEndpoint { endpoint: String },

    #[error("root extraction did not certify radius <= {target:e}; achieved {achieved:e}")]
    Convergence { target: f64, achieved: f64 },

    #[error("insufficient precision: root {index} straddles the region boundary")]
    InsufficientPrecision { index: usize },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("coincident atoms {first} and {second}: energy is infinite")]
    InfiniteEnergy { first: usize, second: usize },

    #[error("radius {radius} is exceptional: atom {index} lies on the cutoff circle")]
    ExceptionalRadius { radius: f64, index: usize },

    #[error("atom set is not symmetric about the real axis: {0}")]
    Asymmetric(String),

    #[error("no candidates: {0}")]
    NoCandidates(String),

    #[error("out of supported range: {0}")]
    OutOfRange(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    /// Short machine-readable tag used in structured error reports.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Parse { .. } => "parse",
            Error::Domain(_) => "domain",
            Error::NotSquarefree => "not_squarefree",
            Error::RootOnEndpoint { .. } => "root_on_endpoint",
            Error::Convergence { .. } => "convergence",
            Error::InsufficientPrecision { .. } => "insufficient_precision",
            Error::Precondition(_) => "precondition",
            Error::InfiniteEnergy { .. } => "infinite_energy",
            Error::ExceptionalRadius { .. } => "exceptional_radius",
            Error::Asymmetric(_) => "asymmetric",
            Error::NoCandidates(_) => "no_candidates",
            Error::OutOfRange(_) => "out_of_range",
        }
    }
}
