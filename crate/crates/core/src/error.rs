use thiserror::Error;

/// Library-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    /// Argument outside the mathematical domain of an operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// A closed form divides by zero at this parameter combination.
    #[error("singular parameter: {0}")]
    SingularParameter(String),

    /// Requested state is not bound (c - E must be positive).
    #[error("unbound state: c - E = {0} eV is not positive")]
    Unbound(f64),

    /// A result exceeds the representable double range even in log space.
    #[error("overflow: {0}")]
    Overflow(String),

    /// Quadrature value still drifting between refinement levels.
    #[error("quadrature did not converge: {0}")]
    Convergence(String),

    /// Eigensolver grid too coarse for the requested tolerance.
    #[error("grid refinement failed: {0}")]
    Refinement(String),

    /// Malformed molecule catalog input.
    #[error("catalog line {line}: {message}")]
    Parse { line: usize, message: String },

    /// Molecule name not present in the catalog.
    #[error("unknown molecule '{0}'")]
    UnknownMolecule(String),

    /// Invalid run configuration.
    #[error("{0}")]
    Config(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// True for errors caused by how the run was configured (CLI exit code 2)
    /// rather than by a failed numerical check (exit code 1).
    pub fn is_usage(&self) -> bool {
        matches!(
            self,
            Error::Config(_) | Error::UnknownMolecule(_) | Error::Parse { .. }
        )
    }
}
