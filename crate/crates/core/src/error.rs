use thiserror::Error;

/// Errors raised by the geometry kernel.
///
/// Every variant has a stable short name (see [`Error::name`]) that the CLI
/// prints in its diagnostics.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("fields of characteristic two are not supported")]
    CharacteristicTwo,
    #[error("modulus {0} is not prime")]
    NotPrime(u64),
    #[error("invalid field descriptor `{0}` (expected `rationals` or `fp:<p>`)")]
    InvalidDescriptor(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands belong to different fields")]
    MixedContexts,
    #[error("the rational field is infinite and cannot be enumerated")]
    InfiniteField,
    #[error("cannot parse `{input}`: {reason}")]
    Parse { input: String, reason: String },
    #[error("denominator of the solving fraction is zero")]
    DegenerateDenominator,
    #[error("not an isometry: {0}")]
    NotIsometry(String),
    #[error("form is degenerate (discriminant df - e^2 is zero)")]
    DegenerateForm,
    #[error("point {arg} is null for the form")]
    NullPoint { arg: usize },
    #[error("projective point [0:0] does not exist")]
    ZeroPoint,
    #[error("form (0:0:0) does not exist")]
    ZeroForm,
    #[error("points coincide, so a reciprocal quadrance is undefined")]
    CoincidentPoints,
    #[error("polynomial has a non-integral coefficient after exact division")]
    NonIntegralResult,
    #[error("spread-cyclotomic factorization failed: {0}")]
    FactorizationFailure(String),
    #[error("isometry parameter is null in its colour")]
    NullParameter,
    #[error("isometries have different colours")]
    ColorMismatch,
    #[error("unknown verification suite `{0}`")]
    UnknownSuite(String),
    #[error("x^2 + y^2 is not a nonzero square, so the point has no unit-circle representative")]
    NotUnitCircle,
}

impl Error {
    /// Short identifier used in diagnostics and reports.
    pub fn name(&self) -> &'static str {
        match self {
            Error::CharacteristicTwo => "CharacteristicTwo",
            Error::NotPrime(_) => "NotPrime",
            Error::InvalidDescriptor(_) => "InvalidDescriptor",
            Error::DivisionByZero => "DivisionByZero",
            Error::MixedContexts => "MixedContexts",
            Error::InfiniteField => "InfiniteField",
            Error::Parse { .. } => "ParseError",
            Error::DegenerateDenominator => "DegenerateDenominator",
            Error::NotIsometry(_) => "NotIsometry",
            Error::DegenerateForm => "DegenerateForm",
            Error::NullPoint { .. } => "NullPoint",
            Error::ZeroPoint => "ZeroPoint",
            Error::ZeroForm => "ZeroForm",
            Error::CoincidentPoints => "CoincidentPoints",
            Error::NonIntegralResult => "NonIntegralResult",
            Error::FactorizationFailure(_) => "FactorizationFailure",
            Error::NullParameter => "NullParameter",
            Error::ColorMismatch => "ColorMismatch",
            Error::UnknownSuite(_) => "UnknownSuite",
            Error::NotUnitCircle => "NotUnitCircle",
        }
    }

    /// Parse errors are usage problems; everything else is a domain error.
    pub fn is_parse(&self) -> bool {
        matches!(
            self,
            Error::Parse { .. } | Error::InvalidDescriptor(_) | Error::UnknownSuite(_)
        )
    }

    pub(crate) fn parse(input: &str, reason: impl Into<String>) -> Self {
        Error::Parse {
            input: input.to_string(),
            reason: reason.into(),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
