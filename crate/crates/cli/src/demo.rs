//! Annotated decoder traces for two small worked examples, each step
//! compared with known values.

use std::fmt::Display;
use std::sync::Arc;

use prm_core::codes::CodeParams;
use prm_core::decoders::recursive::Part;
use prm_core::gf::format_vector;
use prm_core::poly::{dehomogenize, reduce_mod_affine};
use prm_core::{
    check_error_pattern, AffineRegistry, Algorithm, CodeBook, Decoded, Elem, Family, FieldCtx, Polynomial,
    RecursiveDecoder, TraceEvent,
};

use crate::{DemoName, Exit};

/// Prints each step and counts mismatches against the expected values.
struct Steps {
    mismatches: Vec<String>,
}

impl Steps {
    fn check<T: PartialEq + Display>(&mut self, label: &str, got: T, want: T) {
        if got == want {
            println!("  [ok] {label} = {got}");
        } else {
            println!("  [MISMATCH] {label} = {got}, expected {want}");
            self.mismatches.push(label.to_string());
        }
    }

    fn note(&self, text: impl Display) {
        println!("{text}");
    }

    fn finish(self) -> Result<(), Exit> {
        if self.mismatches.is_empty() {
            println!("all steps match");
            Ok(())
        } else {
            Err(Exit { code: Exit::MISMATCH, message: format!("mismatched steps: {}", self.mismatches.join(", ")) })
        }
    }
}

struct V(Vec<Elem>);

impl PartialEq for V {
    fn eq(&self, other: &Self) -> bool {
        self.0 == other.0
    }
}

impl Display for V {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({})", format_vector(&self.0))
    }
}

fn v(x: &[u16]) -> V {
    V(x.iter().map(|&i| Elem::from_index(i)).collect())
}

fn poly(ctx: &FieldCtx, s: &str) -> Polynomial {
    Polynomial::parse(ctx, 3, s).expect("golden polynomial parses")
}

fn outcome_text(o: &Result<Decoded, prm_core::DecodeError>) -> String {
    match o {
        Ok(d) => format!("({}) with {}", format_vector(&d.codeword), d.witness),
        Err(e) => format!("error ({})", e.kind()),
    }
}

pub fn run(name: DemoName) -> Result<(), Exit> {
    match name {
        DemoName::Ex41 => three_errors_over_gf4(),
        DemoName::Ex33 => bad_monomials_over_gf3(),
    }
}

/// PRM_3(2) over GF(4): three errors in the affine block, beyond the
/// recursive radius, corrected by the guarded decoder's second part.
fn three_errors_over_gf4() -> Result<(), Exit> {
    let ctx = Arc::new(FieldCtx::with_order(4)?);
    let book = Arc::new(CodeBook::new(ctx.clone()));
    let mut s = Steps { mismatches: Vec::new() };
    s.note("PRM_3(2) over GF(4) (a = 2, a+1 = 3), guarded decoder (alg2)");

    let p = CodeParams::compute(Family::Prm, 4, 2, 3);
    s.check("[n,k,wt]", format!("[{},{},{}]", p.n, p.k, p.wt), "[21,10,8]".into());
    s.check(
        "eta, T, T0",
        format!("{}, {}, {}", p.eta.unwrap(), p.capability, p.recursive_capability.unwrap()),
        "6, 3, 2".into(),
    );

    let code = book.prm(2, 3)?;
    let f = poly(&ctx, "x0^3+x1^3+x2^3");
    let c = code.evaluate(&f)?;
    let c_want = [1, 1, 1, 0, 0, 1, 1, 1, 0, 0, 1, 1, 1, 0, 0, 1, 0, 0, 0, 1, 1];
    s.check("c = ev(x0^3+x1^3+x2^3)", V(c.clone()), v(&c_want));
    let e = v(&[2, 3, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0]).0;
    let r: Vec<Elem> = c.iter().zip(&e).map(|(&a, &b)| ctx.add(a, b)).collect();
    s.check("r = c + e", V(r.clone()), v(&[3, 2, 1, 0, 0, 0, 1, 1, 0, 0, 1, 1, 1, 0, 0, 1, 0, 0, 0, 1, 1]));
    s.check("error pattern qualifies", check_error_pattern(4, 2, 3, &e), true);

    let dec = RecursiveDecoder::new(book.clone(), AffineRegistry::default(), Algorithm::Guarded);
    let (out, stats, trace) = dec.decode_traced(2, 3, &r);
    for ev in &trace {
        match ev {
            TraceEvent::Affine { dim: 2, degree: 3, outcome } => {
                s.note("first part: decode r1 in RM_3(2) [16,10,4]");
                s.check("D_3(2)(r1)", outcome_text(outcome), "error (BeyondRadius)".into());
            }
            TraceEvent::Interpolated { dim: 1, d: 3, solved } => {
                s.note("second part: PRS_3 has distance 2, so r2 is interpolated directly");
                s.check("r2 is a PRS_3 codeword", *solved, true);
            }
            TraceEvent::Replicated { dim: 2, v: tail, g, v_xi, .. } => {
                s.check("v", V(tail.clone()), v(&[0, 0, 0, 1, 1]));
                s.check("g", g.clone(), poly(&ctx, "x1^3+x2^3"));
                s.check("v_xi,3", V(v_xi.clone()), v(&[0, 0, 0, 1, 1, 0, 0, 0, 1, 1, 0, 0, 0, 1, 1, 0]));
            }
            TraceEvent::Affine { dim: 2, degree: 2, outcome } => {
                s.note("decode r1 - v_xi,3 in RM_2(2) [16,6,8]");
                match outcome {
                    Ok(d) => {
                        s.check("u", V(d.codeword.clone()), V(vec![Elem::ONE; 16]));
                        s.check("f0_(<=2)", d.witness.clone(), poly(&ctx, "1"));
                    }
                    Err(err) => s.check("D_2(2)(r1 - v_xi,3)", err.kind().to_string(), "success".into()),
                }
            }
            TraceEvent::Finished { dim: 2, part, .. } => {
                s.check("finished in", format!("{part:?} part"), format!("{:?} part", Part::Second));
            }
            _ => {}
        }
    }
    match out {
        Ok(d) => {
            s.check("decoded c", V(d.codeword), v(&c_want));
            s.check("f", d.witness, f);
        }
        Err(err) => s.check("decoding", err.kind().to_string(), "success".into()),
    }
    s.check("top-level affine decoder calls", stats.top_level_affine(), 2);
    s.finish()
}

/// PRM_3(2) over GF(3): the affine witness contains a bad monomial whose
/// degree-3 lift is ambiguous; the tail recursion resolves it.
fn bad_monomials_over_gf3() -> Result<(), Exit> {
    let ctx = Arc::new(FieldCtx::with_order(3)?);
    let book = Arc::new(CodeBook::new(ctx.clone()));
    let mut s = Steps { mismatches: Vec::new() };
    s.note("PRM_3(2) over GF(3) (-1 = 2), basic decoder (alg1), no errors");

    let f = poly(&ctx, "x0^2*x1-x1^3+x1^2*x2+x0*x2^2+x2^3");
    let code = book.prm(2, 3)?;
    let c = code.evaluate(&f)?;
    let f0_want = poly(&ctx, "x1^2*x2+x2^2+x2");
    s.check("f0 = reduce(f(1,x1,x2))", reduce_mod_affine(&ctx, &dehomogenize(&ctx, &f, 0)), f0_want.clone());

    let dec = RecursiveDecoder::new(book.clone(), AffineRegistry::default(), Algorithm::Basic);
    let (out, _, trace) = dec.decode_traced(2, 3, &c);
    for ev in &trace {
        match ev {
            TraceEvent::Affine { dim: 2, degree: 3, outcome } => match outcome {
                Ok(d) => s.check("affine witness f0", d.witness.clone(), f0_want.clone()),
                Err(err) => s.check("D_3(2)(r1)", err.kind().to_string(), "success".into()),
            },
            TraceEvent::Split { dim: 2, split, .. } => {
                s.check("f0_bad", split.bad.clone(), poly(&ctx, "x2"));
                s.check("(f0_good)_3", split.good_top.clone(), poly(&ctx, "x1^2*x2"));
                s.check("(f0_good)_(<=2)", split.good_low.clone(), poly(&ctx, "x2^2"));
            }
            TraceEvent::TailRecursion { dim: 2, outcome, .. } => match outcome {
                Ok(d) => s.check("f'_bad", d.witness.embed(1, 3), poly(&ctx, "-x1+x2")),
                Err(err) => s.check("tail decoder", err.kind().to_string(), "success".into()),
            },
            TraceEvent::Reassembled { dim: 2, g0, lifted_bad, f: whole, .. } => {
                s.check("(f'_bad)_3", lifted_bad.clone(), poly(&ctx, "-x1^3+x2^3"));
                s.check("g0", g0.clone(), poly(&ctx, "x2^2+x1"));
                s.check("f = h(g0) + (f'_bad)_3 + (f0_good)_3", whole.clone(), f.clone());
            }
            TraceEvent::Candidate { dim: 2, distance, accepted, .. } => {
                s.check("distance to r", *distance, 0);
                s.check("accepted in first part", *accepted, true);
            }
            _ => {}
        }
    }
    match out {
        Ok(d) => {
            s.check("decoded c", V(d.codeword), V(c));
            s.check("f", d.witness, f);
        }
        Err(err) => s.check("decoding", err.kind().to_string(), "success".into()),
    }
    s.finish()
}
