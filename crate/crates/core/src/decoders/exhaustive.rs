//! Exhaustive bounded-distance decoding for any linear code.
//!
//! Two search strategies give the same answer and the cheaper one is used:
//! walking all `q^k` codewords, or a meet-in-the-middle over error patterns
//! keyed by syndrome. The latter splits an error of weight `w <= T` into
//! halves of weight `ceil(w/2)` and `floor(w/2)`; a table of every pattern
//! of weight at most `ceil(T/2)` is built once per code and probed with each
//! pattern of weight at most `floor(T/2)`.

use std::collections::HashMap;
use std::sync::Arc;

use super::{AffineDecoder, DecodeError, DecodeOutcome, Decoded};
use crate::codes::{binom, Code};
use crate::error::Error;
use crate::gf::{distance, weight, Elem, FieldCtx};
use crate::linalg::axpy;

pub const DEFAULT_ENUM_BOUND: u128 = 1 << 24;
pub const ENUM_BOUND_ENV: &str = "PRM_ENUM_BOUND";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    /// Membership test only (capability zero).
    Membership,
    Enumerate,
    Syndrome,
}

/// Chosen strategy and the number of elementary steps it needs.
pub fn search_cost(code: &Code) -> (Strategy, u128) {
    let t = code.params().capability;
    if t == 0 {
        return (Strategy::Membership, 1);
    }
    let q = code.spec().q() as u128;
    let enumerate = (q).checked_pow(code.k() as u32).unwrap_or(u128::MAX);
    let half = t.div_ceil(2);
    let n = code.n() as i64;
    let table: u128 = (0..=half)
        .map(|w| (binom(n, w as i64) as u128).saturating_mul((q - 1).saturating_pow(w as u32)))
        .fold(0u128, |a, b| a.saturating_add(b));
    if enumerate <= table {
        (Strategy::Enumerate, enumerate)
    } else {
        (Strategy::Syndrome, table)
    }
}

/// Syndrome table of all error patterns of weight at most `ceil(T/2)`.
#[derive(Debug)]
pub struct SearchPlan {
    columns: Vec<Vec<Elem>>,
    table: HashMap<Vec<Elem>, Vec<(usize, Elem)>>,
}

impl SearchPlan {
    fn build(code: &Code) -> SearchPlan {
        let ctx = code.ctx();
        let sys = code.systematic();
        let columns: Vec<Vec<Elem>> = (0..code.n()).map(|p| sys.parity_column(ctx, p)).collect();
        let mut table = HashMap::new();
        let half = code.params().capability.div_ceil(2);
        for_each_pattern(ctx, &columns, half, &mut |pattern, syn| {
            table.entry(syn.to_vec()).or_insert_with(|| pattern.to_vec());
            true
        });
        SearchPlan { columns, table }
    }
}

/// Receives an error pattern as `(position, value)` pairs and its syndrome.
type PatternVisitor<'a> = dyn FnMut(&[(usize, Elem)], &[Elem]) -> bool + 'a;

/// Calls `visit(pattern, syndrome)` for every error pattern of weight at
/// most `max_weight`, in order of increasing positions. Stops early when
/// `visit` returns false.
fn for_each_pattern(ctx: &FieldCtx, columns: &[Vec<Elem>], max_weight: usize, visit: &mut PatternVisitor<'_>) {
    fn rec(
        ctx: &FieldCtx,
        columns: &[Vec<Elem>],
        start: usize,
        left: usize,
        pattern: &mut Vec<(usize, Elem)>,
        syn: &mut Vec<Elem>,
        visit: &mut PatternVisitor<'_>,
    ) -> bool {
        if !visit(pattern, syn) {
            return false;
        }
        if left == 0 {
            return true;
        }
        for pos in start..columns.len() {
            for v in ctx.nonzero_elements() {
                axpy(ctx, syn, v, &columns[pos]);
                pattern.push((pos, v));
                let go_on = rec(ctx, columns, pos + 1, left - 1, pattern, syn, visit);
                pattern.pop();
                axpy(ctx, syn, ctx.neg(v), &columns[pos]);
                if !go_on {
                    return false;
                }
            }
        }
        true
    }
    let rows = columns.first().map_or(0, Vec::len);
    let mut syn = vec![Elem::ZERO; rows];
    rec(ctx, columns, 0, max_weight, &mut Vec::new(), &mut syn, visit);
}

/// Nearest-codeword decoder refusing anything beyond half the minimum
/// distance. Works for any [`Code`], not only affine ones.
#[derive(Debug, Clone)]
pub struct Exhaustive {
    bound: u128,
}

impl Default for Exhaustive {
    fn default() -> Self {
        Exhaustive { bound: DEFAULT_ENUM_BOUND }
    }
}

impl Exhaustive {
    pub fn new(bound: u128) -> Self {
        Exhaustive { bound }
    }

    /// Bound from `PRM_ENUM_BOUND` when set and parseable, else the default.
    pub fn from_env() -> Self {
        let bound =
            std::env::var(ENUM_BOUND_ENV).ok().and_then(|s| s.trim().parse().ok()).unwrap_or(DEFAULT_ENUM_BOUND);
        Exhaustive { bound }
    }

    pub fn bound(&self) -> u128 {
        self.bound
    }

    fn found(code: &Code, c: Vec<Elem>) -> DecodeOutcome {
        let witness = code.interpolate(&c)?;
        Ok(Decoded { codeword: c, witness })
    }

    fn enumerate(&self, code: &Code, r: &[Elem]) -> DecodeOutcome {
        let ctx = code.ctx();
        let (k, q, t) = (code.k(), code.spec().q(), code.params().capability);
        let g = code.generator();
        let mut digits = vec![0usize; k];
        let mut word = vec![Elem::ZERO; code.n()];
        loop {
            if distance(&word, r) <= t {
                return Self::found(code, word);
            }
            let mut i = 0;
            loop {
                if i == k {
                    return Err(DecodeError::BeyondRadius);
                }
                let old = digits[i];
                let new = (old + 1) % q;
                digits[i] = new;
                let delta = ctx.sub(Elem::from_index(new as u16), Elem::from_index(old as u16));
                axpy(ctx, &mut word, delta, g.row(i));
                if new != 0 {
                    break;
                }
                i += 1;
            }
        }
    }

    fn syndrome_search(&self, code: &Code, r: &[Elem]) -> DecodeOutcome {
        let ctx = code.ctx();
        let plan: &Arc<SearchPlan> = code.search.get_or_init(|| Arc::new(SearchPlan::build(code)));
        let t = code.params().capability;
        let s = code.systematic().syndrome(ctx, r);
        let mut hit: Option<Vec<Elem>> = None;
        for_each_pattern(ctx, &plan.columns, t / 2, &mut |low, syn| {
            let key: Vec<Elem> = s.iter().zip(syn).map(|(&a, &b)| ctx.sub(a, b)).collect();
            let Some(high) = plan.table.get(&key) else {
                return true;
            };
            let mut e = vec![Elem::ZERO; r.len()];
            for &(p, v) in high.iter().chain(low) {
                e[p] = ctx.add(e[p], v);
            }
            if weight(&e) > t {
                return true;
            }
            hit = Some(r.iter().zip(&e).map(|(&a, &b)| ctx.sub(a, b)).collect());
            false
        });
        match hit {
            Some(c) => Self::found(code, c),
            None => Err(DecodeError::BeyondRadius),
        }
    }
}

impl AffineDecoder for Exhaustive {
    fn name(&self) -> &str {
        "exhaustive"
    }

    fn decode(&self, code: &Code, r: &[Elem]) -> DecodeOutcome {
        if r.len() != code.n() {
            return Err(Error::LengthMismatch { expected: code.n(), found: r.len() }.into());
        }
        if code.contains(r) {
            return Self::found(code, r.to_vec());
        }
        let (strategy, cost) = search_cost(code);
        if strategy == Strategy::Membership {
            return Err(DecodeError::NotInCode);
        }
        if cost > self.bound {
            return Err(Error::EnumerationBound { needed: cost, bound: self.bound }.into());
        }
        match strategy {
            Strategy::Enumerate => self.enumerate(code, r),
            _ => self.syndrome_search(code, r),
        }
    }
}
