use crate::algebra::IntVec;
use crate::algebra::Rat;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("length mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// `b_n(m) = 0` for an index visited by the coefficient recursion.
    #[error("resonance: b_n(m) = 0 for n = {n}, m = {m}")]
    Resonance { n: IntVec, m: IntVec },

    /// Back-substitution hit a repeated diagonal value with a nonzero
    /// right-hand side, so no eigenvector with the requested leading term
    /// exists in the triangular subspace.
    #[error("degenerate eigenvalue {eigenvalue} at {at} (coupled to the leading term)")]
    Degeneracy { at: IntVec, eigenvalue: Rat },

    /// An exact division left a nonzero remainder, or some other internal
    /// consistency condition failed.
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }

    pub(crate) fn check_len(expected: usize, found: usize) -> Result<()> {
        if expected == found {
            Ok(())
        } else {
            Err(Error::LengthMismatch { expected, found })
        }
    }
}
