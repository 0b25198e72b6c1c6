use core::fmt;

/// Everything that can go wrong inside the engine.
///
/// Domain errors are caller mistakes (an index outside the meaningful range,
/// a modulus that is too small). [`Error::BoundViolation`] is different: it
/// means a proven periodicity bound failed to hold on the data, which can only
/// happen through an implementation bug.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// A modulus of zero was supplied where a positive integer is required.
    ZeroModulus,
    /// The modulus is below the minimum accepted by the operation.
    ModulusTooSmall { modulus: u64, min: u64 },
    /// `n < r` for an r-Fubini or r-horse quantity.
    IndexBelowRank { n: usize, r: usize },
    /// A shift operator would read the sequence at a negative index.
    NegativeIndex { n: usize, offset: i64 },
    /// A shift operator would read past the computed prefix of a sequence.
    IndexNotComputed { index: usize, available: usize },
    /// Two operands disagree in size.
    SizeMismatch { left: usize, right: usize },
    /// A brute-force enumeration was asked for more elements than its ceiling.
    EnumerationTooLarge { n: usize, max: usize },
    /// The residue sequence handed to the period detector is too short.
    WindowTooShort { len: usize, required: usize },
    /// A sequence length was too short for the requested rank.
    LengthTooShort { len: usize, min: usize },
    /// No divisor of λ(K) is an eventual period from the onset bound.
    /// Like [`Error::ExactPeriodViolation`] this signals a bug, not bad input.
    BoundViolation { carmichael: u64, onset_bound: usize },
    /// An odd modulus whose Fubini residues did not attain period λ(K).
    ExactPeriodViolation {
        modulus: u64,
        carmichael: u64,
        period: u64,
    },
    /// The input sequence does not have the expected identity.
    WrongSequence,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::ZeroModulus => write!(f, "modulus must be positive"),
            Error::ModulusTooSmall { modulus, min } => {
                write!(f, "modulus {modulus} is below the minimum {min}")
            }
            Error::IndexBelowRank { n, r } => {
                write!(
                    f,
                    "n = {n} is below r = {r}; the quantity is undefined for n < r"
                )
            }
            Error::NegativeIndex { n, offset } => {
                write!(f, "shift by {offset} at n = {n} reaches a negative index")
            }
            Error::IndexNotComputed { index, available } => write!(
                f,
                "index {index} lies beyond the computed prefix of length {available}"
            ),
            Error::SizeMismatch { left, right } => write!(f, "size mismatch: {left} vs {right}"),
            Error::EnumerationTooLarge { n, max } => {
                write!(f, "enumeration size {n} exceeds the ceiling {max}")
            }
            Error::WindowTooShort { len, required } => write!(
                f,
                "residue window of length {len} is shorter than the required {required}"
            ),
            Error::LengthTooShort { len, min } => {
                write!(f, "sequence length {len} must exceed {min}")
            }
            Error::BoundViolation {
                carmichael,
                onset_bound,
            } => write!(
                f,
                "no divisor of lambda = {carmichael} is an eventual period from index {onset_bound}"
            ),
            Error::ExactPeriodViolation {
                modulus,
                carmichael,
                period,
            } => write!(
                f,
                "odd modulus {modulus}: measured period {period} differs from lambda = {carmichael}"
            ),
            Error::WrongSequence => write!(f, "sequence has the wrong identity for this operation"),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
