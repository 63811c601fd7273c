use thiserror::Error;

/// Errors raised by the numerical kernels and the classifiers.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("degenerate polynomial: leading coefficient is zero")]
    DegeneratePolynomial,

    #[error("root polishing failed: residual {residual:e} exceeds bound {bound:e}")]
    ResidualTooLarge { residual: f64, bound: f64 },

    #[error("commutator [M{0}, M{1}] is not a single multiple of a centralizer basis element")]
    DecompositionFailure(usize, usize),

    #[error("unresolved eigenvalue configuration: {0}")]
    UnresolvedConfiguration(String),

    #[error("numeric rank {0} of A^2 + beta^2 I is neither 0 nor 2")]
    RankAnomalous(usize),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("ambiguous stratum: {0}")]
    AmbiguousStratum(String),
}

pub type Result<T> = std::result::Result<T, Error>;
