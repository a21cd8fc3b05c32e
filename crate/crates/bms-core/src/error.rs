use core::fmt;

/// Errors surfaced by the numerical core.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// A matrix failed the unimodularity gate `|det - 1| <= 1e-9`.
    NotUnimodular { det: f64 },
    /// The zero spinor does not label a null ray.
    ZeroSpinor,
    /// A vector handed to the null-cone bridge was not on the future cone.
    NotOnNullCone,
    /// The zero functional has no stabilizer classification.
    ZeroFunctional,
    /// A functional was not invariant under the required little group.
    NotInvariant { residual: f64 },
    /// The numerically computed Radon-Nikodym derivative strayed from 1,
    /// which signals an implementation bug rather than a mathematical
    /// possibility (the orbit measures are genuinely invariant).
    MeasureNotInvariant { value: f64 },
    /// A cyclic-group element index was outside `0..n`.
    IndexOutOfRange { index: i64, order: u32 },
    /// Cyclic little groups must have even order (they contain -I).
    OddCyclicOrder { n: u32 },
    /// A little-group element was fed to a character of a different group.
    GroupMismatch,
    /// Orbit points of one section must all live on the same orbit model.
    OrbitKindMismatch,
    /// A sampled section listed the same orbit point twice.
    DuplicateSamplePoint,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NotUnimodular { det } => {
                write!(f, "matrix is not unimodular (det = {det})")
            }
            Error::ZeroSpinor => write!(f, "zero spinor does not label a null ray"),
            Error::NotOnNullCone => write!(f, "vector is not on the future null cone"),
            Error::ZeroFunctional => write!(f, "zero functional has no stabilizer"),
            Error::NotInvariant { residual } => {
                write!(f, "functional not invariant under little group (residual = {residual})")
            }
            Error::MeasureNotInvariant { value } => {
                write!(f, "Radon-Nikodym derivative deviates from 1 (value = {value})")
            }
            Error::IndexOutOfRange { index, order } => {
                write!(f, "cyclic element index {index} outside 0..{order}")
            }
            Error::OddCyclicOrder { n } => {
                write!(f, "cyclic little group must have even order, got {n}")
            }
            Error::GroupMismatch => write!(f, "little-group element belongs to a different group"),
            Error::OrbitKindMismatch => write!(f, "orbit points live on different orbit models"),
            Error::DuplicateSamplePoint => write!(f, "duplicate orbit point in sampled section"),
        }
    }
}

impl core::error::Error for Error {}
