use core::fmt;

/// Errors reported by the engines and oracles.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A polynomial, point, or map does not match the expected number of
    /// variables.
    DimensionMismatch { expected: usize, found: usize },
    /// A real dimension was odd where complex coordinates were required.
    OddDimension(usize),
    /// The affine matrix of an ellipsoid is not invertible.
    SingularAffine,
    /// An exact linear solve met a singular matrix. For the projection
    /// engines this means the domain data do not describe an ellipsoid.
    SingularMatrix,
    /// The Gram matrix of a projection basis is singular, i.e. the basis
    /// is linearly dependent.
    SingularGram,
    /// The domain has no exact moment formula (raw defining-polynomial
    /// ellipsoids and transported domains).
    MomentUnavailable,
    /// A map component contains a conjugated variable where a holomorphic
    /// polynomial was required.
    NotHolomorphic,
    /// A defining polynomial is not real-valued.
    NotRealValued,
    /// A forward/inverse map pair failed one of the exact composition
    /// identities; the payload names the identity that failed.
    InvalidPair(&'static str),
    /// Addition of two pi-rational values with different exponents of pi.
    PiExponentMismatch { left: u32, right: u32 },
    /// A Reinhardt domain parameter was zero or negative.
    NonPositiveParameter,
    /// A polynomial exceeds the degree bound a solver was prepared for.
    DegreeOutOfRange { degree: i64, max: u32 },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DimensionMismatch { expected, found } => {
                write!(f, "dimension mismatch: expected {expected}, found {found}")
            }
            Error::OddDimension(d) => {
                write!(f, "real dimension {d} is odd; complex coordinates need an even dimension")
            }
            Error::SingularAffine => write!(f, "affine matrix is singular"),
            Error::SingularMatrix => write!(f, "exact linear system is singular"),
            Error::SingularGram => write!(f, "Gram matrix is singular (dependent basis)"),
            Error::MomentUnavailable => write!(f, "no exact moment formula for this domain"),
            Error::NotHolomorphic => write!(f, "map component is not holomorphic"),
            Error::NotRealValued => write!(f, "defining polynomial is not real-valued"),
            Error::InvalidPair(which) => write!(f, "invalid map pair: {which}"),
            Error::PiExponentMismatch { left, right } => {
                write!(f, "pi-exponent mismatch in addition: {left} vs {right}")
            }
            Error::NonPositiveParameter => write!(f, "domain parameters must be positive"),
            Error::DegreeOutOfRange { degree, max } => {
                write!(f, "degree {degree} exceeds solver bound {max}")
            }
        }
    }
}

impl core::error::Error for Error {}
