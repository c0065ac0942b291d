//! Projective Reed-Muller codes over small finite fields.
//!
//! The crate builds GF(p^e) with fixed Conway moduli, enumerates affine and
//! projective point sets in a recursive order, evaluates polynomials on them
//! to form affine (RM) and projective (PRM) Reed-Muller codes, and decodes
//! PRM codes recursively on top of pluggable affine decoders.
//!
//! ```
//! use std::sync::Arc;
//! use prm_core::{AffineRegistry, Algorithm, CodeBook, FieldCtx, RecursiveDecoder};
//!
//! let ctx = Arc::new(FieldCtx::with_order(4).unwrap());
//! let book = Arc::new(CodeBook::new(ctx.clone()));
//! let code = book.prm(2, 3).unwrap();
//! let msg = vec![prm_core::Elem::ONE; code.k()];
//! let (mut r, _) = code.encode(&msg).unwrap();
//! let sent = r.clone();
//! r[4] = ctx.add(r[4], prm_core::Elem::ONE);
//! let dec = RecursiveDecoder::new(book, AffineRegistry::default(), Algorithm::Basic);
//! assert_eq!(dec.decode(2, 3, &r).unwrap().codeword, sent);
//! ```

pub mod codes;
pub mod decoders;
pub mod error;
pub mod geometry;
pub mod gf;
pub mod linalg;
pub mod poly;
pub mod sim;

pub use codes::{Code, CodeBook, CodeParams, CodeSpec, Family, Half, RatioRow};
pub use decoders::{
    check_error_pattern, decode_prs, AffineDecoder, AffineRegistry, Algorithm, BerlekampWelch, CallStats, DecodeError,
    DecodeOutcome, Decoded, Exhaustive, RecursiveDecoder, TraceEvent,
};
pub use error::{Error, Result};
pub use geometry::{affine_points, projective_points, Point, PointKind, PointList};
pub use gf::{Elem, FieldCtx};
pub use poly::{Monomial, Polynomial};
pub use sim::{simulate, SimConfig, SimReport};
