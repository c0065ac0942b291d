//! Projective Reed-Solomon decoding through two affine Reed-Solomon calls.

use super::{AffineRegistry, DecodeError, DecodeOutcome, Decoded};
use crate::codes::{replicate_v, CodeBook, Half};
use crate::error::Error;
use crate::gf::{distance, Elem};
use crate::poly::{homogenize, Monomial, Polynomial};

/// Decodes `r = (r1, r2)` in `PRS_d = PRM_d(1)`, `1 <= d <= q - 1`.
///
/// First `r1` is decoded in `RS_d` to `(c1', f1')`, with `c2'` the
/// coefficient of `x_1^d` in `f1'`. If `(c1', c2')` is closer to `r` than
/// `(q - d + 1) / 2`, it is returned. Otherwise the last symbol must be
/// error-free, so `r1 - (r2)_(xi,d)` is decoded in `RS_(d-1)` to `(u1, g)`
/// and the result is `((u1 + (r2)_(xi,d), r2), h_d(g) + r2 x_1^d)`.
pub fn decode_prs(book: &CodeBook, d: usize, r: &[Elem], affine: &AffineRegistry) -> DecodeOutcome {
    let ctx = book.ctx().clone();
    let q = ctx.q();
    if d == 0 || d >= q {
        return Err(Error::DegreeOutOfRange { family: "prs", m: 1, d }.into());
    }
    if r.len() != q + 1 {
        return Err(Error::LengthMismatch { expected: q + 1, found: r.len() }.into());
    }
    let t = Half::of((q - d + 1) as u64);
    let (r1, r2) = (&r[..q], r[q]);

    let rs = book.rm(1, d)?;
    match affine.get(1, d).decode(&rs, r1) {
        Ok(Decoded { codeword: mut c, witness: f1 }) => {
            c.push(f1.coeff(&Monomial::var(2, 1, d as u32)));
            if t.exceeds(distance(r, &c)) {
                return Ok(Decoded { codeword: c, witness: homogenize(&f1, d, 0)? });
            }
        }
        Err(DecodeError::Invalid(e)) => return Err(e.into()),
        Err(_) => {}
    }

    let shift = replicate_v(&ctx, &[r2], d);
    let residual: Vec<Elem> = r1.iter().zip(&shift).map(|(&a, &b)| ctx.sub(a, b)).collect();
    let rs_low = book.rm(1, d - 1)?;
    let Decoded { codeword: u1, witness: g } = affine.get(1, d - 1).decode(&rs_low, &residual)?;
    let mut c: Vec<Elem> = u1.iter().zip(&shift).map(|(&a, &b)| ctx.add(a, b)).collect();
    c.push(r2);
    let tail = Polynomial::from_terms(&ctx, 2, [(Monomial::var(2, 1, d as u32), r2)]);
    let f = homogenize(&g, d, 0)?.add(&tail, &ctx);
    Ok(Decoded { codeword: c, witness: f })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decoders::{AffineDecoder, Exhaustive};
    use crate::gf::FieldCtx;
    use std::sync::Arc;

    fn book(q: u32) -> CodeBook {
        CodeBook::new(Arc::new(FieldCtx::with_order(q).unwrap()))
    }

    #[test]
    fn clean_word_round_trips() {
        let b = book(4);
        let code = b.prm(1, 2).unwrap();
        let msg: Vec<Elem> = (0..3).map(|i| Elem::from_index(i + 1)).collect();
        let (c, f) = code.encode(&msg).unwrap();
        let out = decode_prs(&b, 2, &c, &AffineRegistry::default()).unwrap();
        assert_eq!(out.codeword, c);
        assert_eq!(out.witness, f);
    }

    #[test]
    fn both_branches_on_gf5_degree_2() {
        // PRS_2 over GF(5) is [6,3,4] and corrects one error
        let b = book(5);
        let code = b.prm(1, 2).unwrap();
        let ctx = b.ctx().clone();
        let msg = vec![Elem::from_index(1), Elem::from_index(3), Elem::from_index(2)];
        let (c, _) = code.encode(&msg).unwrap();
        let oracle = Exhaustive::default();
        for pos in 0..6 {
            let mut r = c.clone();
            r[pos] = ctx.add(r[pos], Elem::from_index(2));
            let out = decode_prs(&b, 2, &r, &AffineRegistry::default()).unwrap();
            assert_eq!(out.codeword, c, "error at {pos}");
            assert_eq!(oracle.decode(&code, &r).unwrap().codeword, c);
            assert_eq!(crate::poly::eval_on(&ctx, &out.witness, code.points()).unwrap(), c);
        }
    }

    #[test]
    fn rejects_bad_degrees() {
        let b = book(3);
        let r = vec![Elem::ZERO; 4];
        assert!(matches!(decode_prs(&b, 0, &r, &AffineRegistry::default()), Err(DecodeError::Invalid(_))));
        assert!(matches!(decode_prs(&b, 3, &r, &AffineRegistry::default()), Err(DecodeError::Invalid(_))));
        assert!(matches!(decode_prs(&b, 1, &r[..3], &AffineRegistry::default()), Err(DecodeError::Invalid(_))));
    }
}
