//! Monte-Carlo channel simulation: random codeword, random error of exact
//! weight, decode, tally.
//!
//! Trial `i` draws from a ChaCha8 generator seeded with `seed` on stream
//! `i`, so the tallies do not depend on how trials are scheduled.

use std::sync::Arc;
use std::time::Instant;

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::codes::Code;
use crate::decoders::{Algorithm, RecursiveDecoder};
use crate::error::{Error, Result};
use crate::gf::Elem;
use crate::poly::eval_on;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimConfig {
    pub m: usize,
    pub d: usize,
    pub error_weight: usize,
    pub trials: usize,
    pub seed: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimReport {
    pub q: usize,
    pub m: usize,
    pub d: usize,
    pub error_weight: usize,
    pub trials: usize,
    pub successes: usize,
    pub failures: usize,
    pub wrong_decodings: usize,
    pub seed: u64,
    pub algorithm: Algorithm,
    /// Wall-clock time; kept out of [`SimReport::csv_row`] so that the CSV
    /// is reproducible.
    pub elapsed_ms: u128,
}

impl SimReport {
    pub const CSV_HEADER: &'static str = "q,m,d,error_weight,trials,successes,failures,wrong_decodings,seed,alg";

    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{},{},{}",
            self.q,
            self.m,
            self.d,
            self.error_weight,
            self.trials,
            self.successes,
            self.failures,
            self.wrong_decodings,
            self.seed,
            self.algorithm
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Verdict {
    Success,
    Failure,
    Wrong,
}

/// Codeword and error vector of trial `index`.
pub fn trial_instance(code: &Code, error_weight: usize, seed: u64, index: u64) -> (Vec<Elem>, Vec<Elem>) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    let q = code.spec().q();
    let msg: Vec<Elem> = (0..code.k()).map(|_| Elem::from_index(rng.random_range(0..q) as u16)).collect();
    let (c, _) = code.encode(&msg).expect("message has length k");
    let mut e = vec![Elem::ZERO; code.n()];
    for p in sample(&mut rng, code.n(), error_weight) {
        e[p] = Elem::from_index(rng.random_range(1..q) as u16);
    }
    (c, e)
}

/// Runs `cfg.trials` independent trials in parallel.
pub fn simulate(decoder: &RecursiveDecoder, cfg: &SimConfig) -> Result<SimReport> {
    let book = decoder.book();
    let code: Arc<Code> = book.prm(cfg.m, cfg.d)?;
    crate::codes::CodeSpec::prm(book.ctx().clone(), cfg.m, cfg.d)?;
    if cfg.error_weight > code.n() {
        return Err(Error::LengthMismatch { expected: code.n(), found: cfg.error_weight });
    }
    let ctx = book.ctx().clone();
    let started = Instant::now();
    let verdicts: Vec<Result<Verdict>> = (0..cfg.trials as u64)
        .into_par_iter()
        .map(|i| {
            let (c, e) = trial_instance(&code, cfg.error_weight, cfg.seed, i);
            let r: Vec<Elem> = c.iter().zip(&e).map(|(&a, &b)| ctx.add(a, b)).collect();
            match decoder.decode(cfg.m, cfg.d, &r) {
                Ok(dec) => {
                    let sound = eval_on(&ctx, &dec.witness, code.points())? == dec.codeword;
                    Ok(if dec.codeword == c && sound { Verdict::Success } else { Verdict::Wrong })
                }
                Err(crate::decoders::DecodeError::Invalid(err)) => Err(err),
                Err(_) => Ok(Verdict::Failure),
            }
        })
        .collect();
    let mut report = SimReport {
        q: ctx.q(),
        m: cfg.m,
        d: cfg.d,
        error_weight: cfg.error_weight,
        trials: cfg.trials,
        successes: 0,
        failures: 0,
        wrong_decodings: 0,
        seed: cfg.seed,
        algorithm: decoder.algorithm(),
        elapsed_ms: 0,
    };
    for v in verdicts {
        match v? {
            Verdict::Success => report.successes += 1,
            Verdict::Failure => report.failures += 1,
            Verdict::Wrong => report.wrong_decodings += 1,
        }
    }
    report.elapsed_ms = started.elapsed().as_millis();
    Ok(report)
}
