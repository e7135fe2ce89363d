//! Machine-readable error codes for responses.

use std::fmt;

/// One code per failure class; responses never carry stack traces.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorCode {
    ParseError,
    DimensionMismatch,
    OddDimension,
    SingularAffine,
    SingularMatrix,
    SingularGram,
    MomentUnavailable,
    NotHolomorphic,
    NotRealValued,
    InvalidPair,
    PiExponentMismatch,
    NonPositiveParameter,
    DegreeOutOfRange,
    UnsupportedMode,
    IoError,
}

impl ErrorCode {
    pub fn as_str(&self) -> &'static str {
        match self {
            ErrorCode::ParseError => "ParseError",
            ErrorCode::DimensionMismatch => "DimensionMismatch",
            ErrorCode::OddDimension => "OddDimension",
            ErrorCode::SingularAffine => "SingularAffine",
            ErrorCode::SingularMatrix => "SingularMatrix",
            ErrorCode::SingularGram => "SingularGram",
            ErrorCode::MomentUnavailable => "MomentUnavailable",
            ErrorCode::NotHolomorphic => "NotHolomorphic",
            ErrorCode::NotRealValued => "NotRealValued",
            ErrorCode::InvalidPair => "InvalidPair",
            ErrorCode::PiExponentMismatch => "PiExponentMismatch",
            ErrorCode::NonPositiveParameter => "NonPositiveParameter",
            ErrorCode::DegreeOutOfRange => "DegreeOutOfRange",
            ErrorCode::UnsupportedMode => "UnsupportedMode",
            ErrorCode::IoError => "IoError",
        }
    }
}

/// Error carried through request handling and rendered into the
/// response envelope.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliError {
    pub code: ErrorCode,
    pub message: String,
}

impl CliError {
    pub fn new(code: ErrorCode, message: impl Into<String>) -> Self {
        CliError { code, message: message.into() }
    }

    pub fn parse(message: impl Into<String>) -> Self {
        CliError::new(ErrorCode::ParseError, message)
    }

    pub fn unsupported(message: impl Into<String>) -> Self {
        CliError::new(ErrorCode::UnsupportedMode, message)
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.code.as_str(), self.message)
    }
}

impl std::error::Error for CliError {}

impl From<bergman_core::Error> for CliError {
    fn from(e: bergman_core::Error) -> Self {
        use bergman_core::Error as E;
        let code = match &e {
            E::DimensionMismatch { .. } => ErrorCode::DimensionMismatch,
            E::OddDimension(_) => ErrorCode::OddDimension,
            E::SingularAffine => ErrorCode::SingularAffine,
            E::SingularMatrix => ErrorCode::SingularMatrix,
            E::SingularGram => ErrorCode::SingularGram,
            E::MomentUnavailable => ErrorCode::MomentUnavailable,
            E::NotHolomorphic => ErrorCode::NotHolomorphic,
            E::NotRealValued => ErrorCode::NotRealValued,
            E::InvalidPair(_) => ErrorCode::InvalidPair,
            E::PiExponentMismatch { .. } => ErrorCode::PiExponentMismatch,
            E::NonPositiveParameter => ErrorCode::NonPositiveParameter,
            E::DegreeOutOfRange { .. } => ErrorCode::DegreeOutOfRange,
        };
        CliError::new(code, e.to_string())
    }
}
