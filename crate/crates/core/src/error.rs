use alloc::string::String;
use core::fmt;

pub type Result<T> = core::result::Result<T, Error>;

/// Everything that can go wrong in the computational core.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A Cartan type outside the supported list.
    UnsupportedType(String),
    /// Malformed input to an arithmetic routine.
    Arithmetic(String),
    /// A value that had to be rational (or integral) was not.
    NotRational(String),
    /// The group is larger than the enumeration budget.
    BudgetExceeded { order: u128, budget: u64 },
    /// A field literal or dataset record failed to parse.
    Parse(String),
    /// An internal consistency check failed; the message names the check.
    Verification(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::UnsupportedType(t) => write!(f, "unsupported Cartan type `{t}`"),
            Error::Arithmetic(m) => write!(f, "arithmetic error: {m}"),
            Error::NotRational(m) => write!(f, "expected a rational value: {m}"),
            Error::BudgetExceeded { order, budget } => write!(
                f,
                "group of order {order} exceeds the enumeration budget {budget}; \
                 rerun with a larger --budget (E7 needs --extended)"
            ),
            Error::Parse(m) => write!(f, "parse error: {m}"),
            Error::Verification(m) => write!(f, "verification failed: {m}"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for Error {}
