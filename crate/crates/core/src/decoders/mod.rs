//! Decoders: the affine decoder interface with an exhaustive bounded-distance
//! decoder and Berlekamp-Welch for Reed-Solomon, the projective
//! Reed-Solomon decoder, and the recursive PRM decoders.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::codes::Code;
use crate::error::Error;
use crate::gf::Elem;
use crate::poly::Polynomial;

pub mod berlekamp_welch;
pub mod exhaustive;
pub mod pattern;
pub mod prs;
pub mod recursive;

pub use berlekamp_welch::BerlekampWelch;
pub use exhaustive::Exhaustive;
pub use pattern::check_error_pattern;
pub use prs::decode_prs;
pub use recursive::{Algorithm, CallStats, RecursiveDecoder, TraceEvent};

/// A decoded codeword together with a polynomial evaluating to it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decoded {
    pub codeword: Vec<Elem>,
    pub witness: Polynomial,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DecodeError {
    /// No codeword lies within the decoder's radius.
    #[error("no codeword within the decoding radius")]
    BeyondRadius,
    /// The received word is not a codeword of a code with no correction
    /// capability.
    #[error("received word is not a codeword")]
    NotInCode,
    /// A step that cannot fail within the guaranteed radius had no solution.
    #[error("inconsistent system: error weight exceeds the guaranteed radius")]
    Inconsistent,
    /// The inputs violate a precondition.
    #[error(transparent)]
    Invalid(#[from] Error),
}

impl DecodeError {
    pub fn kind(&self) -> &'static str {
        match self {
            DecodeError::BeyondRadius => "BeyondRadius",
            DecodeError::NotInCode => "NotInCode",
            DecodeError::Inconsistent => "Inconsistent",
            DecodeError::Invalid(_) => "Invalid",
        }
    }
}

pub type DecodeOutcome = Result<Decoded, DecodeError>;

/// A bounded-distance decoder for affine Reed-Muller codes. Implementations
/// must return the unique codeword within `floor((wt - 1) / 2)` of `r` with
/// its polynomial over the code's monomial basis, or fail.
pub trait AffineDecoder: Send + Sync + fmt::Debug {
    fn name(&self) -> &str;

    fn decode(&self, code: &Code, r: &[Elem]) -> DecodeOutcome;
}

/// Which affine decoder serves each `(m, d)`.
#[derive(Debug, Clone)]
pub struct AffineRegistry {
    exhaustive: Arc<dyn AffineDecoder>,
    reed_solomon: Option<Arc<dyn AffineDecoder>>,
    overrides: HashMap<(usize, usize), Arc<dyn AffineDecoder>>,
}

impl Default for AffineRegistry {
    /// Berlekamp-Welch for `m = 1`, exhaustive search elsewhere.
    fn default() -> Self {
        AffineRegistry {
            exhaustive: Arc::new(Exhaustive::from_env()),
            reed_solomon: Some(Arc::new(BerlekampWelch)),
            overrides: HashMap::new(),
        }
    }
}

impl AffineRegistry {
    /// Exhaustive search at every `(m, d)`.
    pub fn exhaustive_only() -> Self {
        AffineRegistry { reed_solomon: None, ..Self::default() }
    }

    /// Uses `decoder` for `RM_d(m)`.
    pub fn with_override(mut self, m: usize, d: usize, decoder: Arc<dyn AffineDecoder>) -> Self {
        self.overrides.insert((m, d), decoder);
        self
    }

    pub fn get(&self, m: usize, d: usize) -> &dyn AffineDecoder {
        if let Some(dec) = self.overrides.get(&(m, d)) {
            return dec.as_ref();
        }
        match (&self.reed_solomon, m) {
            (Some(rs), 1) => rs.as_ref(),
            _ => self.exhaustive.as_ref(),
        }
    }
}
