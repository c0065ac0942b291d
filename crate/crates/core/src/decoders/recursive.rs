//! Recursive decoding of `PRM_d(m)` from affine Reed-Muller decoders.
//!
//! A received word splits as `r = (r1, r2)` along `P^m = {1} x F_q^m ++
//! {0} x P^(m-1)`. The first part decodes `r1` in `RM_d(m)` and homogenizes
//! the result, recursing on the tail in `PRM_(d-(q-1))(m-1)` when `d >= q`
//! to resolve the ambiguous (bad) monomials. If that candidate is not close
//! enough to `r`, the second part decodes the tail in `PRM_d(m-1)` and then
//! `r1 - v_(xi,d)` in `RM_(d-1)(m)`.
//!
//! Every level works in local variables `x_0..x_j`; a child's witness is
//! shifted up by one variable when handed back to its parent.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use super::{AffineRegistry, DecodeError, DecodeOutcome, Decoded};
use crate::codes::{replicate_v, split_blocks, CodeBook, CodeSpec, Half};
use crate::error::Error;
use crate::gf::{distance, Elem};
use crate::poly::{
    eval_on, homogenize, lift_to_degree, reduce_mod_affine, split_bad_good, BadGoodSplit, Monomial, Polynomial,
};

/// The two variants differ only in how a step that cannot fail within the
/// guaranteed radius is reported when it does fail.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Algorithm {
    /// Reports an unsolvable interpolation at the base case as
    /// [`DecodeError::Inconsistent`].
    Basic,
    /// Treats every inner failure as an ordinary decoding failure.
    Guarded,
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Algorithm::Basic => "alg1",
            Algorithm::Guarded => "alg2",
        })
    }
}

impl FromStr for Algorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "alg1" => Ok(Algorithm::Basic),
            "alg2" => Ok(Algorithm::Guarded),
            _ => Err(Error::Parse(format!("unknown algorithm `{s}` (expected alg1 or alg2)"))),
        }
    }
}

/// Invocation counts per local dimension.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CallStats {
    /// `affine[j]`: affine decoder calls made at dimension `j`.
    pub affine: Vec<usize>,
    /// `projective[j]`: recursive decoder invocations at dimension `j`.
    pub projective: Vec<usize>,
}

impl CallStats {
    fn new(m: usize) -> Self {
        CallStats { affine: vec![0; m + 1], projective: vec![0; m + 1] }
    }

    /// Affine calls made by the outermost invocation. Only the top level
    /// works at dimension `m`, so this is `affine[m]`.
    pub fn top_level_affine(&self) -> usize {
        self.affine.last().copied().unwrap_or(0)
    }
}

/// Which half of the decoder produced a result.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Part {
    First,
    Second,
}

/// Intermediate values recorded when tracing is enabled.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TraceEvent {
    /// Dimension zero: the single symbol is returned as `r x^d`.
    Point { d: usize, value: Elem },
    /// Low-distance base case solved by interpolation.
    Interpolated { dim: usize, d: usize, solved: bool },
    /// Affine decoder result on the first block (`degree = d`) or on
    /// `r1 - v_(xi,d)` (`degree = d - 1`).
    Affine { dim: usize, degree: usize, outcome: Result<Decoded, DecodeError> },
    /// Bad/good decomposition of the affine witness when `d >= q`.
    Split { dim: usize, d: usize, f0: Polynomial, split: BadGoodSplit, c_good: Vec<Elem> },
    /// Result of the tail decoder in the first part.
    TailRecursion { dim: usize, d: usize, outcome: Result<Decoded, DecodeError> },
    /// The first-part candidate polynomial after resolving bad monomials.
    Reassembled { dim: usize, d: usize, g0: Polynomial, lifted_bad: Polynomial, f: Polynomial },
    /// The reduced remainder had degree `d` or more, so the first part is
    /// abandoned.
    DegreeCheckFailed { dim: usize, d: usize, g0: Polynomial },
    /// Distance check of the first-part candidate against `t`.
    Candidate { dim: usize, d: usize, distance: usize, threshold: Half, accepted: bool },
    /// Second part: tail codeword, its witness and the replicated block.
    Replicated { dim: usize, d: usize, v: Vec<Elem>, g: Polynomial, v_xi: Vec<Elem> },
    /// Final result of one level.
    Finished { dim: usize, d: usize, part: Part, codeword: Vec<Elem>, witness: Polynomial },
}

struct Session {
    stats: CallStats,
    trace: Option<Vec<TraceEvent>>,
}

impl Session {
    fn log(&mut self, event: impl FnOnce() -> TraceEvent) {
        if let Some(t) = self.trace.as_mut() {
            t.push(event());
        }
    }
}

/// Recursive PRM decoder over one field.
#[derive(Debug, Clone)]
pub struct RecursiveDecoder {
    book: Arc<CodeBook>,
    affine: AffineRegistry,
    algorithm: Algorithm,
}

/// Failures that make a guarded first-part step fall through; contract
/// violations (bad inputs, enumeration bounds) abort the whole decode.
fn soft(err: DecodeError) -> Result<(), DecodeError> {
    match err {
        DecodeError::Invalid(_) => Err(err),
        _ => Ok(()),
    }
}

impl RecursiveDecoder {
    pub fn new(book: Arc<CodeBook>, affine: AffineRegistry, algorithm: Algorithm) -> Self {
        RecursiveDecoder { book, affine, algorithm }
    }

    pub fn book(&self) -> &Arc<CodeBook> {
        &self.book
    }

    pub fn algorithm(&self) -> Algorithm {
        self.algorithm
    }

    pub fn decode(&self, m: usize, d: usize, r: &[Elem]) -> DecodeOutcome {
        self.decode_with_stats(m, d, r).0
    }

    pub fn decode_with_stats(&self, m: usize, d: usize, r: &[Elem]) -> (DecodeOutcome, CallStats) {
        let (out, stats, _) = self.start(m, d, r, false);
        (out, stats)
    }

    /// Decodes and records every intermediate value.
    pub fn decode_traced(&self, m: usize, d: usize, r: &[Elem]) -> (DecodeOutcome, CallStats, Vec<TraceEvent>) {
        let (out, stats, trace) = self.start(m, d, r, true);
        (out, stats, trace.unwrap_or_default())
    }

    fn start(
        &self,
        m: usize,
        d: usize,
        r: &[Elem],
        traced: bool,
    ) -> (DecodeOutcome, CallStats, Option<Vec<TraceEvent>>) {
        let mut session = Session { stats: CallStats::new(m), trace: traced.then(Vec::new) };
        let out = match CodeSpec::prm(self.book.ctx().clone(), m, d) {
            Ok(_) => self.run(m, d, r, &mut session),
            Err(e) => Err(e.into()),
        };
        if let Ok(dec) = &out {
            debug_assert!(dec.witness.is_zero() || (dec.witness.is_homogeneous() && dec.witness.degree() == Some(d)));
            debug_assert_eq!(
                eval_on(self.book.ctx(), &dec.witness, self.book.prm(m, d).expect("validated").points()).ok().as_ref(),
                Some(&dec.codeword)
            );
        }
        (out, session.stats, session.trace)
    }

    fn run(&self, j: usize, d: usize, r: &[Elem], s: &mut Session) -> DecodeOutcome {
        s.stats.projective[j] += 1;
        let ctx = self.book.ctx().clone();
        if j == 0 {
            if r.len() != 1 {
                return Err(Error::LengthMismatch { expected: 1, found: r.len() }.into());
            }
            s.log(|| TraceEvent::Point { d, value: r[0] });
            let w = Polynomial::from_terms(&ctx, 1, [(Monomial::var(1, 0, d as u32), r[0])]);
            return Ok(Decoded { codeword: r.to_vec(), witness: w });
        }

        let code = self.book.prm(j, d)?;
        if r.len() != code.n() {
            return Err(Error::LengthMismatch { expected: code.n(), found: r.len() }.into());
        }
        let params = code.params();
        if params.wt <= 2 {
            let solved = code.interpolate(r);
            s.log(|| TraceEvent::Interpolated { dim: j, d, solved: solved.is_ok() });
            return match solved {
                Ok(f) => Ok(Decoded { codeword: r.to_vec(), witness: f }),
                Err(Error::NotInCode) => Err(match self.algorithm {
                    Algorithm::Basic => DecodeError::Inconsistent,
                    Algorithm::Guarded => DecodeError::NotInCode,
                }),
                Err(e) => Err(e.into()),
            };
        }

        let q = ctx.q();
        let t = params.radius;
        let (r1, r2) = split_blocks(q, j, r)?;
        let nvars = j + 1;

        // first part
        let rm = self.book.rm(j, d)?;
        s.stats.affine[j] += 1;
        let first = self.affine.get(j, d).decode(&rm, r1);
        s.log(|| TraceEvent::Affine { dim: j, degree: d, outcome: first.clone() });
        match first {
            Ok(Decoded { codeword: c1, witness: f0 }) => {
                let candidate = if d < q {
                    let f = homogenize(&f0, d, 0)?;
                    let c = eval_on(&ctx, &f, code.points())?;
                    Some(Decoded { codeword: c, witness: f })
                } else {
                    let split = split_bad_good(&f0, d, q);
                    let c_good = eval_on(&ctx, &split.good_top, code.points())?.split_off(r1.len());
                    s.log(|| TraceEvent::Split {
                        dim: j,
                        d,
                        f0: f0.clone(),
                        split: split.clone(),
                        c_good: c_good.clone(),
                    });
                    let shifted: Vec<Elem> = r2.iter().zip(&c_good).map(|(&a, &b)| ctx.sub(a, b)).collect();
                    let tail = self.run(j - 1, d - (q - 1), &shifted, s);
                    s.log(|| TraceEvent::TailRecursion { dim: j, d: d - (q - 1), outcome: tail.clone() });
                    match tail {
                        Ok(Decoded { codeword: c_bad, witness: bad_child }) => {
                            let f_bad = bad_child.embed(1, nvars);
                            let g0 = reduce_mod_affine(&ctx, &f0.sub(&f_bad, &ctx).sub(&split.good_top, &ctx));
                            if g0.degree().is_some_and(|deg| deg >= d) {
                                s.log(|| TraceEvent::DegreeCheckFailed { dim: j, d, g0: g0.clone() });
                                None
                            } else {
                                let lifted_bad = lift_to_degree(&ctx, &f_bad, d)?;
                                let f = homogenize(&g0, d, 0)?.add(&lifted_bad, &ctx).add(&split.good_top, &ctx);
                                s.log(|| TraceEvent::Reassembled { dim: j, d, g0, lifted_bad, f: f.clone() });
                                let mut c = c1;
                                c.extend(c_good.iter().zip(&c_bad).map(|(&a, &b)| ctx.add(a, b)));
                                Some(Decoded { codeword: c, witness: f })
                            }
                        }
                        Err(e) => {
                            soft(e)?;
                            None
                        }
                    }
                };
                if let Some(dec) = candidate {
                    let dist = distance(r, &dec.codeword);
                    let accepted = t.exceeds(dist);
                    s.log(|| TraceEvent::Candidate { dim: j, d, distance: dist, threshold: t, accepted });
                    if accepted {
                        s.log(|| TraceEvent::Finished {
                            dim: j,
                            d,
                            part: Part::First,
                            codeword: dec.codeword.clone(),
                            witness: dec.witness.clone(),
                        });
                        return Ok(dec);
                    }
                }
            }
            Err(e) => soft(e)?,
        }

        // second part
        let Decoded { codeword: v, witness: g_child } = self.run(j - 1, d, r2, s)?;
        let g = g_child.embed(1, nvars);
        let v_xi = replicate_v(&ctx, &v, d);
        s.log(|| TraceEvent::Replicated { dim: j, d, v: v.clone(), g: g.clone(), v_xi: v_xi.clone() });
        let residual: Vec<Elem> = r1.iter().zip(&v_xi).map(|(&a, &b)| ctx.sub(a, b)).collect();
        let rm_low = self.book.rm(j, d - 1)?;
        s.stats.affine[j] += 1;
        let low = self.affine.get(j, d - 1).decode(&rm_low, &residual);
        s.log(|| TraceEvent::Affine { dim: j, degree: d - 1, outcome: low.clone() });
        let Decoded { codeword: u, witness: f_low } = low?;
        let f = homogenize(&f_low, d, 0)?.add(&g, &ctx);
        let mut c: Vec<Elem> = u.iter().zip(&v_xi).map(|(&a, &b)| ctx.add(a, b)).collect();
        c.extend_from_slice(&v);
        s.log(|| TraceEvent::Finished { dim: j, d, part: Part::Second, codeword: c.clone(), witness: f.clone() });
        Ok(Decoded { codeword: c, witness: f })
    }
}
