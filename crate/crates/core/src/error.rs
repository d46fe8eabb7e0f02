use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HopfError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("invalid multiplier structure: {0}")]
    InvalidStructure(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("unsupported computation: {0}")]
    Unsupported(String),

    #[error("form is not closed: d(omega) has nonzero term {0}")]
    NotClosed(String),

    #[error("form is not integrable: omega ^ d(omega) has {0} nonzero term(s)")]
    NotIntegrable(usize),

    #[error("input is not homogeneous")]
    Inhomogeneous,

    #[error("no admissible component: the monomial normal form is empty")]
    EmptyNormalForm,
}

impl HopfError {
    /// Exit status used by the command line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            HopfError::Unsupported(_) => 3,
            _ => 2,
        }
    }
}

pub type Result<T> = std::result::Result<T, HopfError>;

pub(crate) fn check_dim(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(HopfError::DimensionMismatch { expected, found })
    }
}
