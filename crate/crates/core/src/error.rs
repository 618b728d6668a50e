use thiserror::Error;

use crate::generator::Gen;

#[derive(Debug, Error)]
pub enum Error {
    #[error("generator {0} is not in the algebra basis")]
    UnknownGenerator(Gen),
    #[error("generator {0} has indices outside the range allowed by two_ell")]
    IndexOutOfRange(Gen),
    #[error("inconsistent structure constant for [{left}, {right}]: {existing} vs {new}")]
    InconsistentEntry { left: Gen, right: Gen, existing: String, new: String },
    #[error("central extension requires half-integer ℓ (odd two_ell), got two_ell = {two_ell}")]
    CentralExtensionUnavailable { two_ell: u32 },
    #[error("[{grader}, {generator}] = {image} is not proportional to {generator}")]
    NotDiagonal { grader: Gen, generator: Gen, image: String },
    #[error("element is not in the span; residual {residual}")]
    NotInSpan { residual: String },
    #[error("spanning element {0} is linearly dependent on the preceding ones")]
    LinearlyDependent(Gen),
    #[error("bracket [{left}, {right}] leaves the span; residual {residual}")]
    ClosureFailure { left: Gen, right: Gen, residual: String },
    #[error("algebras have different bases or degrees: {0}")]
    BasisMismatch(String),
    #[error("element is not homogeneous: {0}")]
    Inhomogeneous(String),
    #[error("the superadjoint operation requires half-integer ℓ (odd two_ell), got two_ell = {two_ell}")]
    UndefinedInvolution { two_ell: u32 },
    #[error("the Fock realization needs half-integer ℓ (odd two_ell), got two_ell = {two_ell}")]
    OddEllRequired { two_ell: u32 },
    #[error("cutoff {cutoff} is too small (minimum {minimum})")]
    CutoffTooSmall { cutoff: usize, minimum: usize },
    #[error("truncation interior is empty at cutoff {cutoff}")]
    TruncationTooSmall { cutoff: usize },
    #[error("second-order terms survive in the bracket of {left} and {right}: {residue}")]
    SecondOrderResidue { left: String, right: String, residue: String },
    #[error("schema error at {location}: {message}")]
    Schema { location: String, message: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
