use thiserror::Error;

/// Errors raised by the library.
///
/// Variants are grouped the way the command-line front end reports them:
/// input problems, mathematical precondition failures, and internal
/// consistency failures (see [`Error::exit_code`]).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at byte {offset}: {message}")]
    Syntax { offset: usize, message: String },

    #[error("invalid field: {0}")]
    InvalidField(String),

    #[error("field mismatch between operands")]
    FieldMismatch,

    #[error("division by zero")]
    DivisionByZero,

    #[error("zero input: {0}")]
    ZeroInput(&'static str),

    #[error("constant input: {0}")]
    ConstantInput(&'static str),

    #[error("invalid place: {0}")]
    InvalidPlace(String),

    #[error("singular curve (discriminant is zero)")]
    SingularCurve,

    #[error("point is not on the curve")]
    OffCurve,

    #[error("characteristic {0} too small for this operation (need p >= 5)")]
    SmallCharacteristic(u32),

    #[error("curve model is not integral: {0}")]
    NonIntegralModel(String),

    #[error("denominator structure violated: {0}")]
    DenominatorStructure(String),

    #[error("isotrivial curve: j-invariant is constant")]
    Isotrivial,

    #[error("descent requires a twist; out of scope: {0}")]
    DescentImpossible(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("not a square: {0}")]
    NotSquare(String),

    #[error("internal assertion failed: {0}")]
    Internal(String),
}

impl Error {
    /// Process exit code used by the `edsfq` binary.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Syntax { .. } | Error::InvalidField(_) | Error::InvalidPlace(_) => 1,
            Error::Internal(_) => 3,
            _ => 2,
        }
    }

    pub(crate) fn syntax(offset: usize, message: impl Into<String>) -> Self {
        Error::Syntax {
            offset,
            message: message.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
