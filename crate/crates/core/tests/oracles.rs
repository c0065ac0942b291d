//! Cross-checks between the recursive decoders, the PRS procedure and the
//! exhaustive nearest-codeword search.

use std::sync::Arc;

use prm_core::decoders::exhaustive::search_cost;
use prm_core::sim::trial_instance;
use prm_core::{
    decode_prs, AffineDecoder, AffineRegistry, Algorithm, Code, CodeBook, Elem, Exhaustive, FieldCtx, RecursiveDecoder,
};

fn book(q: u32) -> Arc<CodeBook> {
    Arc::new(CodeBook::new(Arc::new(FieldCtx::with_order(q).unwrap())))
}

fn corrupt(code: &Code, w: usize, seed: u64, i: u64) -> (Vec<Elem>, Vec<Elem>) {
    let (c, e) = trial_instance(code, w, seed, i);
    let ctx = code.ctx();
    let r = c.iter().zip(&e).map(|(&a, &b)| ctx.add(a, b)).collect();
    (c, r)
}

const GRID: [(u32, usize, usize); 9] =
    [(2, 3, 1), (2, 3, 2), (3, 2, 2), (3, 2, 3), (3, 3, 2), (4, 2, 2), (4, 2, 3), (4, 2, 4), (5, 2, 3)];

#[test]
fn basic_decoder_matches_exhaustive_search_within_recursive_radius() {
    let mut checked = 0;
    for (q, m, d) in GRID {
        let book = book(q);
        let code = book.prm(m, d).unwrap();
        let t0 = code.params().recursive_capability.unwrap();
        // The oracle is only consulted where its search stays cheap.
        let oracle = (search_cost(&code).1 < 200_000).then(Exhaustive::default);
        checked += usize::from(oracle.is_some());
        let dec = RecursiveDecoder::new(book.clone(), AffineRegistry::default(), Algorithm::Basic);
        for w in 0..=t0 {
            for i in 0..12 {
                let (c, r) = corrupt(&code, w, 31 + w as u64, i);
                let got = dec.decode(m, d, &r).unwrap_or_else(|e| panic!("q={q} m={m} d={d} w={w}: {e}"));
                assert_eq!(got.codeword, c, "q={q} m={m} d={d} w={w}");
                if let Some(oracle) = &oracle {
                    assert_eq!(oracle.decode(&code, &r).unwrap().codeword, c);
                }
                assert_eq!(code.evaluate(&got.witness).unwrap(), c);
            }
        }
    }
    println!("oracle consulted on {checked} of {} codes", GRID.len());
    assert!(checked >= 8);
}

#[test]
fn guarded_decoder_agrees_with_basic_within_recursive_radius() {
    for (q, m, d) in GRID {
        let book = book(q);
        let code = book.prm(m, d).unwrap();
        let t0 = code.params().recursive_capability.unwrap();
        let basic = RecursiveDecoder::new(book.clone(), AffineRegistry::default(), Algorithm::Basic);
        let guarded = RecursiveDecoder::new(book.clone(), AffineRegistry::default(), Algorithm::Guarded);
        for w in 0..=t0 {
            for i in 0..12 {
                let (_, r) = corrupt(&code, w, 77, i);
                let a = basic.decode(m, d, &r).unwrap();
                let b = guarded.decode(m, d, &r).unwrap();
                assert_eq!(a.codeword, b.codeword, "q={q} m={m} d={d} w={w}");
                assert_eq!(a.witness, b.witness);
            }
        }
    }
}

#[test]
fn answers_beyond_the_radius_are_still_sound() {
    // Past T0 either decoder may fail or pick a different codeword, but any
    // answer is a codeword with a homogeneous degree-d witness.
    for (q, m, d) in [(3, 2, 2), (4, 2, 3), (3, 3, 2)] {
        let book = book(q);
        let code = book.prm(m, d).unwrap();
        let t = code.params().capability;
        for alg in [Algorithm::Basic, Algorithm::Guarded] {
            let dec = RecursiveDecoder::new(book.clone(), AffineRegistry::default(), alg);
            for w in 0..=t + 2 {
                for i in 0..10 {
                    let (_, r) = corrupt(&code, w, 5, i);
                    if let Ok(out) = dec.decode(m, d, &r) {
                        assert!(code.contains(&out.codeword), "q={q} m={m} d={d} w={w}");
                        assert_eq!(code.evaluate(&out.witness).unwrap(), out.codeword);
                        assert!(out.witness.is_zero() || out.witness.is_homogeneous());
                    }
                }
            }
        }
    }
}

#[test]
fn prs_procedure_matches_basic_decoder_on_the_line() {
    for q in [3u32, 4, 5, 7, 8] {
        let book = book(q);
        let dec = RecursiveDecoder::new(book.clone(), AffineRegistry::default(), Algorithm::Basic);
        let reg = AffineRegistry::default();
        for d in 1..=(q as usize - 1) {
            let code = book.prm(1, d).unwrap();
            let t0 = code.params().recursive_capability.unwrap();
            for w in 0..=t0 {
                for i in 0..8 {
                    let (c, r) = corrupt(&code, w, 11, i);
                    let prs = decode_prs(&book, d, &r, &reg).unwrap();
                    let alg = dec.decode(1, d, &r).unwrap();
                    assert_eq!(prs.codeword, c, "q={q} d={d} w={w}");
                    assert_eq!(prs.codeword, alg.codeword);
                    assert_eq!(prs.witness, alg.witness);
                }
            }
        }
    }
}

#[test]
fn exhaustive_decoder_reaches_half_distance_on_affine_code() {
    // RM_2(2) over GF(4) is [16, 6, 8]: three errors are always correctable.
    let book = book(4);
    let code = book.rm(2, 2).unwrap();
    assert_eq!(code.params().wt, 8);
    let dec = Exhaustive::default();
    for i in 0..40 {
        let (c, r) = corrupt(&code, 3, 2024, i);
        let out = dec.decode(&code, &r).unwrap();
        assert_eq!(out.codeword, c);
        assert_eq!(code.evaluate(&out.witness).unwrap(), c);
    }
}

#[test]
fn exhaustive_only_registry_gives_the_same_answers() {
    let book = book(5);
    let code = book.prm(2, 3).unwrap();
    let auto = RecursiveDecoder::new(book.clone(), AffineRegistry::default(), Algorithm::Basic);
    let slow = RecursiveDecoder::new(book.clone(), AffineRegistry::exhaustive_only(), Algorithm::Basic);
    for i in 0..20 {
        let (c, r) = corrupt(&code, code.params().recursive_capability.unwrap(), 3, i);
        assert_eq!(auto.decode(2, 3, &r).unwrap().codeword, c);
        assert_eq!(slow.decode(2, 3, &r).unwrap().codeword, c);
    }
}
