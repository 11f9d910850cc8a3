use thiserror::Error;

/// Errors raised anywhere in the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(
        "invalid local ring descriptor (order {order}, maximal ideal {ideal_order}): {reason}"
    )]
    InvalidDescriptor {
        order: u64,
        ideal_order: u64,
        reason: &'static str,
    },
    #[error("order {order}, maximal ideal {ideal_order} and residue size are not all powers of one prime")]
    NotPrimePower { order: u64, ideal_order: u64 },
    #[error("no finite local ring has order {order} and maximal ideal of order {ideal_order} (order is not a power of the residue size)")]
    NotRealizable { order: u64, ideal_order: u64 },
    #[error("a ring must have at least one local factor")]
    EmptyProduct,
    #[error("parse error at byte {position}: {message}")]
    Parse { position: usize, message: String },
    #[error("factor index {index} out of range for a ring with {factors} factors")]
    IndexOutOfRange { index: usize, factors: usize },
    #[error("degree {0} does not occur in the spectrum")]
    DegreeAbsent(String),
    #[error("base moment list has length {got}, expected {expected}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("graph too large: {0}")]
    TooLarge(String),
    #[error("spectrum is not integral: {0}")]
    NotIntegral(String),
    #[error("internal inconsistency: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
