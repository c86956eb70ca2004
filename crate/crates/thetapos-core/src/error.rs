//! Error type shared by every module.

use alloc::string::String;
use core::fmt;

/// Failures of the library operations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// Malformed textual input.
    Parse(String),
    /// Malformed diagram (disconnected, bad bond, unknown label, ...).
    InvalidDiagram(String),
    /// The diagram is not of finite type.
    InfiniteType,
    /// A vector that was required to be a root is not one.
    NotARoot,
    /// A matrix does not permute the root system.
    NotWeylElement,
    /// The pair (diagram, Θ) has no Θ-positive structure.
    NoThetaPositive,
    /// Θ is empty.
    EmptyTheta,
    /// A word over R(Θ) is not reduced in W(Θ).
    NotReducedTheta,
    /// The braid-graph search would exceed the letter cap.
    ElementTooLong {
        /// Length of the element.
        length: usize,
        /// Requested cap.
        cap: usize,
    },
    /// The exponential or logarithm series does not terminate.
    NotNilpotent,
    /// The SO(3,q) model needs q >= 4.
    QTooSmall(usize),
    /// Dimension mismatch in user input.
    Dimension(String),
    /// A coordinate-reading denominator vanished.
    NotInChart,
    /// Braid change requested on boundary data.
    BraidBoundary,
    /// The matrix is not in the unipotent radical U_Θ.
    NotInUTheta,
    /// The flag is not transverse where transversality is required.
    NotTransverse,
    /// The vectors do not define an isotropic flag.
    InvalidFlag(String),
    /// A relative-position signature is missing from the calibration table.
    CalibrationIncomplete,
    /// A U_r element violates `a, b >= 0` and `0 <= c <= r a b`.
    UrMembership,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Parse(m) => write!(f, "parse error: {m}"),
            Error::InvalidDiagram(m) => write!(f, "invalid diagram: {m}"),
            Error::InfiniteType => write!(f, "infinite-type diagram"),
            Error::NotARoot => write!(f, "not a root"),
            Error::NotWeylElement => write!(f, "not a Weyl element"),
            Error::NoThetaPositive => write!(f, "no Θ-positive structure"),
            Error::EmptyTheta => write!(f, "empty Θ"),
            Error::NotReducedTheta => write!(f, "word is not reduced in W(Θ)"),
            Error::ElementTooLong { length, cap } => {
                write!(f, "element too long: length {length} exceeds cap {cap}")
            }
            Error::NotNilpotent => write!(f, "series does not terminate"),
            Error::QTooSmall(q) => write!(f, "q must be at least 4, got {q}"),
            Error::Dimension(m) => write!(f, "dimension mismatch: {m}"),
            Error::NotInChart => write!(f, "not in chart"),
            Error::BraidBoundary => write!(f, "braid change undefined on boundary"),
            Error::NotInUTheta => write!(f, "not an element of U_Θ"),
            Error::NotTransverse => write!(f, "flags are not transverse"),
            Error::InvalidFlag(m) => write!(f, "invalid flag: {m}"),
            Error::CalibrationIncomplete => write!(f, "calibration incomplete"),
            Error::UrMembership => write!(f, "element violates U_r membership"),
        }
    }
}

impl core::error::Error for Error {}
