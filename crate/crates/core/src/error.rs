use thiserror::Error;

/// Everything that can go wrong in the library.
///
/// Variants are grouped by how a caller is expected to react: input
/// problems (`Parse`, `UnknownVariable`, ...), requests outside the
/// supported classes (`Unsupported`, `NotHomogeneous`, ...), and
/// resource caps (`StepLimit`, `MatrixLimit`, `CapExceeded`).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at offset {offset}: {message}")]
    Parse { offset: usize, message: String },

    #[error("unknown variable `{0}`")]
    UnknownVariable(String),

    #[error("duplicate variable `{0}`")]
    DuplicateVariable(String),

    #[error("a ring needs at least one variable")]
    EmptyRing,

    #[error("polynomials live in different rings")]
    RingMismatch,

    #[error("no image given for variable `{0}`")]
    MissingImage(String),

    #[error("constant input where a nonconstant polynomial is required")]
    ConstantInput,

    #[error("quotient ring is not finite dimensional")]
    InfiniteQuotient,

    #[error("singularity at the origin is not isolated (no power of the maximal ideal found up to exponent {0})")]
    NotIsolated(usize),

    #[error("Groebner basis computation exceeded {0} S-pair reductions")]
    StepLimit(usize),

    #[error("linear system with {rows} x {cols} entries exceeds the limit of {limit}")]
    MatrixLimit { rows: usize, cols: usize, limit: usize },

    #[error("no answer found up to cap {0}")]
    CapExceeded(usize),

    #[error("polynomial is not homogeneous")]
    NotHomogeneous,

    #[error("polynomial is not reduced (it has a repeated factor)")]
    NotReduced,

    #[error("weights do not match: {0}")]
    WeightMismatch(String),

    #[error("unsupported: {0}")]
    Unsupported(String),
}

impl Error {
    pub(crate) fn parse(offset: usize, message: impl Into<String>) -> Self {
        Error::Parse { offset, message: message.into() }
    }

    /// True for errors caused by a configured resource limit.
    pub fn is_resource(&self) -> bool {
        matches!(self, Error::StepLimit(_) | Error::MatrixLimit { .. } | Error::CapExceeded(_))
    }

    /// True for malformed input text or names.
    pub fn is_input(&self) -> bool {
        matches!(self, Error::Parse { .. } | Error::UnknownVariable(_) | Error::DuplicateVariable(_) | Error::EmptyRing)
    }
}

pub type Result<T> = std::result::Result<T, Error>;
