use std::fs;
use std::io::Read;
use std::path::PathBuf;
use std::sync::Arc;

use anyhow::Context;
use prm_core::codes::{ratio_table as ratios, CodeParams};
use prm_core::gf::format_vector;
use prm_core::{
    AffineRegistry, Code, CodeBook, CodeSpec, DecodeError, Family, FieldCtx, Polynomial, RecursiveDecoder, SimConfig,
};

use crate::{AlgArg, CodeArgs, DecoderArg, Exit};

fn field(q: u32) -> Result<Arc<FieldCtx>, Exit> {
    Ok(Arc::new(FieldCtx::with_order(q)?))
}

fn spec(args: &CodeArgs) -> Result<CodeSpec, Exit> {
    Ok(CodeSpec::new(args.family.into(), field(args.q)?, args.m, args.d)?)
}

fn registry(decoder: DecoderArg) -> AffineRegistry {
    match decoder {
        DecoderArg::Auto => AffineRegistry::default(),
        DecoderArg::Exhaustive => AffineRegistry::exhaustive_only(),
    }
}

/// Writes `text` to `out`, or to stdout when no path is given.
fn emit(out: Option<PathBuf>, text: &str) -> Result<(), Exit> {
    match out {
        Some(path) => fs::write(&path, text).with_context(|| format!("writing {}", path.display()))?,
        None => print!("{text}"),
    }
    Ok(())
}

pub fn params(args: &CodeArgs) -> Result<(), Exit> {
    let s = spec(args)?;
    let row = s.params().csv_row(s.family(), s.q(), s.m(), s.d());
    emit(None, &format!("{}\n{row}\n", CodeParams::CSV_HEADER))
}

pub fn encode(args: &CodeArgs, poly: Option<&str>, message: Option<&str>, out: Option<PathBuf>) -> Result<(), Exit> {
    let s = spec(args)?;
    let code = Code::new(s);
    let ctx = code.ctx();
    let word = match (poly, message) {
        (Some(text), _) => {
            let f = Polynomial::parse(ctx, code.nvars(), text)?;
            let ok = match code.spec().family() {
                Family::Prm => f.is_zero() || (f.is_homogeneous() && f.degree() == Some(args.d)),
                Family::Rm => f.degree().is_none_or(|deg| deg <= args.d),
            };
            if !ok {
                let need = match code.spec().family() {
                    Family::Prm => format!("homogeneous of degree {}", args.d),
                    Family::Rm => format!("of degree at most {}", args.d),
                };
                return Err(Exit::usage(format!("polynomial `{f}` must be {need}")));
            }
            code.evaluate(&f)?
        }
        (None, Some(text)) => code.encode(&ctx.parse_vector(text)?)?.0,
        (None, None) => return Err(Exit::usage("one of --poly or --message is required")),
    };
    emit(out, &format!("{}\n", format_vector(&word)))
}

fn read_input(input: Option<PathBuf>) -> Result<String, Exit> {
    let mut text = String::new();
    match input {
        Some(path) => text = fs::read_to_string(&path).with_context(|| format!("reading {}", path.display()))?,
        None => {
            std::io::stdin().read_to_string(&mut text).context("reading stdin")?;
        }
    }
    Ok(text)
}

pub fn decode(
    args: &CodeArgs,
    input: Option<PathBuf>,
    alg: AlgArg,
    decoder: DecoderArg,
    out: Option<PathBuf>,
) -> Result<(), Exit> {
    let s = spec(args)?;
    let book = Arc::new(CodeBook::new(s.ctx().clone()));
    let code = book.get(s.family(), s.m(), s.d())?;
    let r = s.ctx().parse_vector(read_input(input)?.trim())?;
    if r.len() != code.n() {
        return Err(Exit::usage(format!("received word has length {}, expected {}", r.len(), code.n())));
    }
    let reg = registry(decoder);
    let outcome = match s.family() {
        Family::Prm => RecursiveDecoder::new(book.clone(), reg, alg.into()).decode(s.m(), s.d(), &r),
        Family::Rm => reg.get(s.m(), s.d()).decode(&code, &r),
    };
    match outcome {
        Ok(dec) => emit(out, &format!("{}\n{}\n", format_vector(&dec.codeword), dec.witness)),
        Err(DecodeError::Invalid(e)) => Err(e.into()),
        Err(e) => Err(Exit { code: Exit::DECODE_FAILURE, message: format!("decoding failed ({}): {e}", e.kind()) }),
    }
}

#[allow(clippy::too_many_arguments)]
pub fn simulate(
    q: u32,
    m: usize,
    d: usize,
    errors: usize,
    trials: usize,
    seed: u64,
    alg: AlgArg,
    decoder: DecoderArg,
    out: Option<PathBuf>,
) -> Result<(), Exit> {
    let ctx = field(q)?;
    CodeSpec::prm(ctx.clone(), m, d)?;
    let book = Arc::new(CodeBook::new(ctx));
    let dec = RecursiveDecoder::new(book, registry(decoder), alg.into());
    let report = prm_core::simulate(&dec, &SimConfig { m, d, error_weight: errors, trials, seed })?;
    eprintln!("elapsed_ms={}", report.elapsed_ms);
    emit(out, &format!("{}\n{}\n", prm_core::SimReport::CSV_HEADER, report.csv_row()))
}

pub fn ratio_table(q: u32, m: usize, out: Option<PathBuf>) -> Result<(), Exit> {
    let ctx = field(q)?;
    if m == 0 {
        return Err(Exit::usage("m must be at least 1"));
    }
    let mut text = String::from("d,eta,wt,T0,T,ratio\n");
    for row in ratios(ctx.q(), m) {
        let ratio = row.ratio.map(|r| format!("{r:.4}")).unwrap_or_default();
        text.push_str(&format!("{},{},{},{},{},{ratio}\n", row.d, row.eta, row.wt, row.t0, row.t));
    }
    emit(out, &text)
}
