//! Berlekamp-Welch decoding of Reed-Solomon codes `RM_d(1) = [q, d+1, q-d]`.

use super::{AffineDecoder, DecodeError, DecodeOutcome, Decoded};
use crate::codes::{Code, Family};
use crate::error::Error;
use crate::gf::{distance, Elem, FieldCtx};
use crate::linalg::{solve_linear, Matrix};
use crate::poly::{Monomial, Polynomial};

/// Rational-interpolation decoder: finds `Q` of degree `<= e + d` and monic
/// `E` of degree `e` with `Q(x_i) = r_i E(x_i)` for every evaluation point,
/// where `e = floor((q - d - 1) / 2)`, then divides.
#[derive(Debug, Clone, Copy, Default)]
pub struct BerlekampWelch;

/// Quotient and remainder of `num / den` for dense coefficient vectors
/// (lowest degree first). `den` must have a nonzero leading coefficient.
fn divide(ctx: &FieldCtx, num: &[Elem], den: &[Elem]) -> (Vec<Elem>, Vec<Elem>) {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    if rem.len() <= dd {
        return (Vec::new(), rem);
    }
    let lead_inv = ctx.inv(den[dd]).expect("divisor has a nonzero leading coefficient");
    let mut quot = vec![Elem::ZERO; rem.len() - dd];
    for i in (0..quot.len()).rev() {
        let c = ctx.mul(rem[i + dd], lead_inv);
        quot[i] = c;
        if !c.is_zero() {
            for (j, &b) in den.iter().enumerate() {
                rem[i + j] = ctx.sub(rem[i + j], ctx.mul(c, b));
            }
        }
    }
    rem.truncate(dd);
    (quot, rem)
}

impl AffineDecoder for BerlekampWelch {
    fn name(&self) -> &str {
        "berlekamp-welch"
    }

    fn decode(&self, code: &Code, r: &[Elem]) -> DecodeOutcome {
        let spec = code.spec();
        if spec.family() != Family::Rm || spec.m() != 1 {
            return Err(Error::DegreeOutOfRange { family: "rs", m: spec.m(), d: spec.d() }.into());
        }
        if r.len() != code.n() {
            return Err(Error::LengthMismatch { expected: code.n(), found: r.len() }.into());
        }
        let ctx = code.ctx();
        let (q, d) = (spec.q(), spec.d());
        let e = code.params().capability;
        let xs: Vec<Elem> = code.points().iter().map(|p| p.coords()[0]).collect();

        // unknowns: Q_0..Q_(e+d), then E_0..E_(e-1)
        let width = e + d + 1 + e;
        let mut a = Matrix::zeros(q, width);
        let mut b = Vec::with_capacity(q);
        for (i, (&x, &y)) in xs.iter().zip(r).enumerate() {
            let mut pw = Elem::ONE;
            for j in 0..=e + d {
                a.set(i, j, pw);
                if j < e {
                    a.set(i, e + d + 1 + j, ctx.neg(ctx.mul(y, pw)));
                }
                pw = ctx.mul(pw, x);
            }
            b.push(ctx.mul(y, ctx.pow(x, e as u64)));
        }
        let sol = solve_linear(ctx, &a, &b).ok_or(DecodeError::BeyondRadius)?;
        let qpoly = &sol[..=e + d];
        let mut epoly = sol[e + d + 1..].to_vec();
        epoly.push(Elem::ONE);
        let (f, rem) = divide(ctx, qpoly, &epoly);
        if rem.iter().any(|c| !c.is_zero()) || f.iter().skip(d + 1).any(|c| !c.is_zero()) {
            return Err(DecodeError::BeyondRadius);
        }
        let coeffs = &f[..f.len().min(d + 1)];
        let codeword: Vec<Elem> =
            xs.iter().map(|&x| coeffs.iter().rev().fold(Elem::ZERO, |acc, &c| ctx.add(ctx.mul(acc, x), c))).collect();
        if distance(&codeword, r) > e {
            return Err(DecodeError::BeyondRadius);
        }
        let terms = coeffs.iter().enumerate().map(|(i, &c)| (Monomial::var(2, 1, i as u32), c));
        let witness = Polynomial::from_terms(ctx, 2, terms);
        Ok(Decoded { codeword, witness })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codes::CodeSpec;
    use crate::decoders::Exhaustive;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;
    use std::sync::Arc;

    fn rs(q: u32, d: usize) -> Code {
        Code::new(CodeSpec::rm(Arc::new(FieldCtx::with_order(q).unwrap()), 1, d).unwrap())
    }

    #[test]
    fn division() {
        let ctx = FieldCtx::new(5, 1).unwrap();
        let e = |v: &[u16]| v.iter().map(|&i| Elem::from_index(i)).collect::<Vec<_>>();
        // (x^2 + 3x + 2) / (x + 1) = x + 2
        let (quo, rem) = divide(&ctx, &e(&[2, 3, 1]), &e(&[1, 1]));
        assert_eq!(quo, e(&[2, 1]));
        assert!(rem.iter().all(|c| c.is_zero()));
    }

    #[test]
    fn corrects_one_error_in_rs1_over_gf4() {
        let code = rs(4, 1);
        let c: Vec<Elem> = [1u16, 2, 3, 0].iter().map(|&i| Elem::from_index(i)).collect();
        for pos in 0..4 {
            for v in 1..4u16 {
                let mut r = c.clone();
                r[pos] = code.ctx().add(r[pos], Elem::from_index(v));
                let out = BerlekampWelch.decode(&code, &r).unwrap();
                assert_eq!(out.codeword, c);
                assert_eq!(out.witness.to_string(), "x1");
            }
        }
        assert_eq!(BerlekampWelch.decode(&code, &c).unwrap().codeword, c);
    }

    #[test]
    fn agrees_with_exhaustive() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for q in [3u32, 4, 5, 7, 8] {
            for d in 0..q as usize {
                let code = rs(q, d);
                for _ in 0..100 {
                    let r: Vec<Elem> = (0..q).map(|_| Elem::from_index(rng.random_range(0..q) as u16)).collect();
                    let a = BerlekampWelch.decode(&code, &r);
                    let b = Exhaustive::default().decode(&code, &r);
                    match (a, b) {
                        (Ok(x), Ok(y)) => assert_eq!(x, y),
                        (Err(_), Err(_)) => {}
                        (x, y) => panic!("q={q} d={d}: {x:?} vs {y:?}"),
                    }
                }
            }
        }
    }
}
