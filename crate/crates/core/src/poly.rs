//! Sparse multivariate polynomials over GF(q).
//!
//! A polynomial over dimension `m` always carries `m + 1` variables
//! `x_0, ..., x_m`. Affine objects of dimension `j` live in the last `j`
//! variables and projective objects of dimension `j` in the last `j + 1`,
//! so witnesses produced at any recursion level embed into the same space.
//!
//! Reduction modulo the vanishing ideal of affine space is never applied
//! implicitly; callers invoke [`reduce_mod_affine`] when they need the
//! reduced representative.

use std::cmp::Reverse;
use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::geometry::{affine_points, projective_points, PointKind, PointList};
use crate::gf::{Elem, FieldCtx};

/// A monomial `x^alpha`, stored as its exponent vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Monomial {
        Monomial(exps)
    }

    pub fn one(nvars: usize) -> Monomial {
        Monomial(vec![0; nvars])
    }

    /// `x_var^exp`.
    pub fn var(nvars: usize, var: usize, exp: u32) -> Monomial {
        let mut v = vec![0; nvars];
        v[var] = exp;
        Monomial(v)
    }

    pub fn exps(&self) -> &[u32] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    /// Total degree `|alpha|`.
    pub fn degree(&self) -> usize {
        self.0.iter().map(|&e| e as usize).sum()
    }

    /// Lowest-index variable with a positive exponent.
    pub fn lead_var(&self) -> Option<usize> {
        self.0.iter().position(|&e| e > 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    fn eval(&self, ctx: &FieldCtx, offset: usize, coords: &[Elem]) -> Elem {
        let mut acc = Elem::ONE;
        for (i, &e) in self.0.iter().enumerate() {
            if e > 0 {
                acc = ctx.mul(acc, ctx.pow(coords[i - offset], e as u64));
                if acc.is_zero() {
                    break;
                }
            }
        }
        acc
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            write!(f, "x{i}")?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}

/// A polynomial as a map from monomials to nonzero coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    nvars: usize,
    terms: BTreeMap<Monomial, Elem>,
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Polynomial {
        Polynomial { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: Elem) -> Polynomial {
        Polynomial::term(Monomial::one(nvars), c)
    }

    pub fn term(mono: Monomial, c: Elem) -> Polynomial {
        let mut p = Polynomial::zero(mono.nvars());
        if !c.is_zero() {
            p.terms.insert(mono, c);
        }
        p
    }

    /// Sums the given terms, merging repeated monomials.
    pub fn from_terms(ctx: &FieldCtx, nvars: usize, terms: impl IntoIterator<Item = (Monomial, Elem)>) -> Polynomial {
        let mut p = Polynomial::zero(nvars);
        for (m, c) in terms {
            assert_eq!(m.nvars(), nvars, "monomial arity");
            p.add_term(ctx, m, c);
        }
        p
    }

    fn add_term(&mut self, ctx: &FieldCtx, m: Monomial, c: Elem) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = ctx.add(*o.get(), c);
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending monomial order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, Elem)> {
        self.terms.iter().map(|(m, &c)| (m, c))
    }

    pub fn coeff(&self, m: &Monomial) -> Elem {
        self.terms.get(m).copied().unwrap_or(Elem::ZERO)
    }

    /// Total degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// Zero counts as homogeneous of every degree.
    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(Monomial::degree);
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    /// Whether every variable with index below `first` is absent.
    pub fn uses_only_from(&self, first: usize) -> bool {
        self.terms.keys().all(|m| m.0[..first].iter().all(|&e| e == 0))
    }

    fn first_used_below(&self, first: usize) -> Option<usize> {
        self.terms.keys().filter_map(|m| m.0[..first].iter().position(|&e| e > 0)).min()
    }

    pub fn add(&self, other: &Polynomial, ctx: &FieldCtx) -> Polynomial {
        assert_eq!(self.nvars, other.nvars, "polynomial arity");
        let mut out = self.clone();
        for (m, &c) in &other.terms {
            out.add_term(ctx, m.clone(), c);
        }
        out
    }

    pub fn neg(&self, ctx: &FieldCtx) -> Polynomial {
        Polynomial { nvars: self.nvars, terms: self.terms.iter().map(|(m, &c)| (m.clone(), ctx.neg(c))).collect() }
    }

    pub fn sub(&self, other: &Polynomial, ctx: &FieldCtx) -> Polynomial {
        self.add(&other.neg(ctx), ctx)
    }

    pub fn scale(&self, c: Elem, ctx: &FieldCtx) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.nvars);
        }
        Polynomial { nvars: self.nvars, terms: self.terms.iter().map(|(m, &a)| (m.clone(), ctx.mul(a, c))).collect() }
    }

    pub fn mul(&self, other: &Polynomial, ctx: &FieldCtx) -> Polynomial {
        assert_eq!(self.nvars, other.nvars, "polynomial arity");
        let mut out = Polynomial::zero(self.nvars);
        for (ma, &a) in &self.terms {
            for (mb, &b) in &other.terms {
                out.add_term(ctx, ma.mul(mb), ctx.mul(a, b));
            }
        }
        out
    }

    /// Keeps the terms matching `pred`.
    pub fn filter(&self, mut pred: impl FnMut(&Monomial) -> bool) -> Polynomial {
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().filter(|(m, _)| pred(m)).map(|(m, &c)| (m.clone(), c)).collect(),
        }
    }

    /// The substitution `x_var = 0`.
    pub fn restrict_zero(&self, var: usize) -> Polynomial {
        self.filter(|m| m.0[var] == 0)
    }

    /// Renames `x_i` to `x_(i + shift)` inside a space of `nvars` variables.
    pub fn embed(&self, shift: usize, nvars: usize) -> Polynomial {
        assert!(self.nvars + shift <= nvars, "embedding does not fit");
        Polynomial {
            nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, &c)| {
                    let mut e = vec![0; nvars];
                    e[shift..shift + self.nvars].copy_from_slice(&m.0);
                    (Monomial(e), c)
                })
                .collect(),
        }
    }

    /// Value at a point whose coordinates are bound to the last
    /// `coords.len()` variables.
    pub fn eval_point(&self, ctx: &FieldCtx, coords: &[Elem]) -> Elem {
        let offset = self.nvars - coords.len();
        self.terms.iter().fold(Elem::ZERO, |acc, (m, &c)| ctx.add(acc, ctx.mul(c, m.eval(ctx, offset, coords))))
    }

    /// Parses the text form, e.g. `x0^3+2*x1*x2-x2^3`, over `nvars` variables.
    pub fn parse(ctx: &FieldCtx, nvars: usize, s: &str) -> Result<Polynomial> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let mut out = Polynomial::zero(nvars);
        let mut terms: Vec<(bool, &str)> = Vec::new();
        let mut start = 0;
        let mut negative = false;
        for (i, ch) in s.char_indices() {
            if (ch == '+' || ch == '-') && i >= start {
                if i > start {
                    terms.push((negative, &s[start..i]));
                } else if i > 0 {
                    return Err(Error::Parse(format!("dangling sign in `{s}`")));
                }
                negative = ch == '-';
                start = i + 1;
            }
        }
        if start >= s.len() {
            return Err(Error::Parse(format!("trailing sign in `{s}`")));
        }
        terms.push((negative, &s[start..]));

        for (negative, term) in terms {
            let mut coeff = Elem::ONE;
            let mut exps = vec![0u32; nvars];
            for factor in term.split('*') {
                if let Some(rest) = factor.strip_prefix('x') {
                    let (idx, exp) = match rest.split_once('^') {
                        Some((i, e)) => (i, e),
                        None => (rest, "1"),
                    };
                    let idx: usize = idx.parse().map_err(|_| Error::Parse(format!("bad variable `{factor}`")))?;
                    let exp: u32 = exp.parse().map_err(|_| Error::Parse(format!("bad exponent `{factor}`")))?;
                    if idx >= nvars {
                        return Err(Error::VariableOutOfRange { var: idx });
                    }
                    exps[idx] += exp;
                } else if factor.is_empty() {
                    return Err(Error::Parse(format!("empty factor in `{term}`")));
                } else {
                    coeff = ctx.mul(coeff, ctx.parse_elem(factor)?);
                }
            }
            if negative {
                coeff = ctx.neg(coeff);
            }
            out.add_term(ctx, Monomial(exps), coeff);
        }
        Ok(out)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            if i > 0 {
                f.write_str("+")?;
            }
            let constant = m.degree() == 0;
            if constant {
                write!(f, "{c}")?;
            } else if *c == Elem::ONE {
                write!(f, "{m}")?;
            } else {
                write!(f, "{c}*{m}")?;
            }
        }
        Ok(())
    }
}

/// Evaluates `f` at every point of `list`, binding point coordinates to the
/// last variables of `f`. Projective lists require `f` homogeneous.
pub fn eval_on(ctx: &FieldCtx, f: &Polynomial, list: &PointList) -> Result<Vec<Elem>> {
    let width = match list.kind() {
        PointKind::Affine => list.dim(),
        PointKind::Projective => list.dim() + 1,
    };
    if width > f.nvars() {
        return Err(Error::VariableOutOfRange { var: width - 1 });
    }
    let first = f.nvars() - width;
    if let Some(var) = f.first_used_below(first) {
        return Err(Error::VariableOutOfRange { var });
    }
    if list.kind() == PointKind::Projective && !f.is_homogeneous() {
        return Err(Error::NotHomogeneous);
    }
    Ok(list.iter().map(|p| f.eval_point(ctx, p.coords())).collect())
}

/// `ev^A_j`: evaluation over F_q^j in the last `j` variables.
pub fn eval_affine(ctx: &FieldCtx, f: &Polynomial, j: usize) -> Result<Vec<Elem>> {
    eval_on(ctx, f, &affine_points(ctx, j))
}

/// `ev^P_j`: evaluation over P^j in the last `j + 1` variables.
pub fn eval_projective(ctx: &FieldCtx, f: &Polynomial, j: usize) -> Result<Vec<Elem>> {
    eval_on(ctx, f, &projective_points(ctx, j))
}

/// Reduces modulo `<x_i^q - x_i>` by mapping every exponent `e >= q` to
/// `((e - 1) mod (q - 1)) + 1`. Applies to all variables, so pass only
/// polynomials in affine variables.
pub fn reduce_mod_affine(ctx: &FieldCtx, f: &Polynomial) -> Polynomial {
    let q = ctx.order();
    let terms = f.terms().map(|(m, c)| {
        let exps = m.exps().iter().map(|&e| if e >= q { (e - 1) % (q - 1) + 1 } else { e }).collect();
        (Monomial(exps), c)
    });
    Polynomial::from_terms(ctx, f.nvars(), terms)
}

/// The substitution `x_var = 1`.
pub fn dehomogenize(ctx: &FieldCtx, f: &Polynomial, var: usize) -> Polynomial {
    let terms = f.terms().map(|(m, c)| {
        let mut exps = m.exps().to_vec();
        exps[var] = 0;
        (Monomial(exps), c)
    });
    Polynomial::from_terms(ctx, f.nvars(), terms)
}

/// `h_d`: multiplies each term `x^alpha` by `x_var^(d - |alpha|)`.
pub fn homogenize(f: &Polynomial, d: usize, var: usize) -> Result<Polynomial> {
    if let Some(deg) = f.degree() {
        if deg > d {
            return Err(Error::DegreeTooHigh { degree: deg, max: d });
        }
    }
    Ok(Polynomial {
        nvars: f.nvars(),
        terms: f
            .terms()
            .map(|(m, c)| {
                let mut exps = m.exps().to_vec();
                exps[var] += (d - m.degree()) as u32;
                (Monomial(exps), c)
            })
            .collect(),
    })
}

/// Raises a homogeneous polynomial of degree `d'` to degree `d` by adding
/// `d - d'` to the exponent of each term's leading variable. The projective
/// evaluation is unchanged when `d' = d mod (q - 1)`.
pub fn lift_to_degree(ctx: &FieldCtx, f: &Polynomial, d: usize) -> Result<Polynomial> {
    let Some(from) = f.degree() else {
        return Ok(f.clone());
    };
    if !f.is_homogeneous() {
        return Err(Error::NotHomogeneous);
    }
    let step = ctx.q() - 1;
    if d < from || !(d - from).is_multiple_of(step) || (from == 0 && d != 0) {
        return Err(Error::IncongruentDegrees { from, to: d });
    }
    let extra = (d - from) as u32;
    Ok(Polynomial {
        nvars: f.nvars(),
        terms: f
            .terms()
            .map(|(m, c)| {
                let mut exps = m.exps().to_vec();
                if let Some(lead) = m.lead_var() {
                    exps[lead] += extra;
                }
                (Monomial(exps), c)
            })
            .collect(),
    })
}

/// Exponent vectors of length `k` with entries in `0..=cap` and sum at most
/// `max_sum`.
fn bounded_exponents(k: usize, cap: u32, max_sum: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut cur = vec![0u32; k];
    fn rec(i: usize, left: usize, cap: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if i == cur.len() {
            out.push(cur.clone());
            return;
        }
        for e in 0..=cap.min(left as u32) {
            cur[i] = e;
            rec(i + 1, left - e as usize, cap, cur, out);
        }
        cur[i] = 0;
    }
    rec(0, max_sum, cap, &mut cur, &mut out);
    out
}

/// `M_d(j)` inside the variables `x_0..x_m`: degree-`d` monomials in
/// `x_(m-j)..x_m` with `x_(m-j)` present and the other exponents below `q`.
/// Sorted in descending lexicographic order.
pub fn basis_md_block(q: usize, m: usize, d: usize, j: usize) -> Vec<Monomial> {
    assert!(j <= m);
    if d == 0 {
        return Vec::new();
    }
    let lead = m - j;
    let mut out: Vec<Monomial> = bounded_exponents(j, q as u32 - 1, d - 1)
        .into_iter()
        .map(|rest| {
            let mut exps = vec![0u32; m + 1];
            let s: u32 = rest.iter().sum();
            exps[lead] = d as u32 - s;
            exps[lead + 1..].copy_from_slice(&rest);
            Monomial(exps)
        })
        .collect();
    out.sort_by(|a, b| b.cmp(a));
    out
}

/// `M_d = M_d(m) ++ M_d(m-1) ++ ... ++ M_d(0)`.
pub fn basis_md(q: usize, m: usize, d: usize) -> Vec<Monomial> {
    (0..=m).rev().flat_map(|j| basis_md_block(q, m, d, j)).collect()
}

/// Monomials of `A(m)` of degree at most `d` in `x_1..x_m` (inside `m + 1`
/// variables), by ascending degree, then descending lexicographic order.
pub fn basis_affine(q: usize, m: usize, d: usize) -> Vec<Monomial> {
    let mut out: Vec<Monomial> = bounded_exponents(m, q as u32 - 1, d)
        .into_iter()
        .map(|rest| {
            let mut exps = vec![0u32; m + 1];
            exps[1..].copy_from_slice(&rest);
            Monomial(exps)
        })
        .collect();
    out.sort_by_key(|mono| (mono.degree(), Reverse(mono.clone())));
    out
}

/// Whether `x^alpha` is bad for degree `d`: `0 < |alpha| < d` and
/// `|alpha| = d mod (q - 1)`.
pub fn is_bad(mono: &Monomial, d: usize, q: usize) -> bool {
    let deg = mono.degree();
    deg > 0 && deg < d && (d - deg).is_multiple_of(q - 1)
}

/// Decomposition `f = f_bad + (f_good)_d + (f_good)_(<= d-1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BadGoodSplit {
    pub bad: Polynomial,
    pub good_top: Polynomial,
    pub good_low: Polynomial,
}

pub fn split_bad_good(f: &Polynomial, d: usize, q: usize) -> BadGoodSplit {
    BadGoodSplit {
        bad: f.filter(|m| is_bad(m, d, q)),
        good_top: f.filter(|m| !is_bad(m, d, q) && m.degree() == d),
        good_low: f.filter(|m| !is_bad(m, d, q) && m.degree() != d),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(q: u32) -> FieldCtx {
        FieldCtx::with_order(q).unwrap()
    }

    fn parse(ctx: &FieldCtx, nvars: usize, s: &str) -> Polynomial {
        Polynomial::parse(ctx, nvars, s).unwrap()
    }

    fn elems(v: &[u16]) -> Vec<Elem> {
        v.iter().map(|&i| Elem::from_index(i)).collect()
    }

    /// The running example over GF(3): f = x0^2 x1 - x1^3 + x1^2 x2 + x0 x2^2 + x2^3.
    const F_Q3: &str = "x0^2*x1-x1^3+x1^2*x2+x0*x2^2+x2^3";

    #[test]
    fn parse_and_display() {
        let ctx = gf(4);
        let f = parse(&ctx, 3, "x0^3 + x1^3 + x2^3");
        assert_eq!(f.to_string(), "x0^3+x1^3+x2^3");
        let g = parse(&ctx, 3, "a*x0*x1 + 3 + x1*x0");
        assert_eq!(g.coeff(&Monomial::new(vec![1, 1, 0])), Elem::from_index(3));
        assert_eq!(g.to_string(), "3*x0*x1+3");
        assert_eq!(parse(&ctx, 2, "x1 + x1").to_string(), "0");

        let f3 = gf(3);
        let h = parse(&f3, 3, "-x1 + x2");
        assert_eq!(h.coeff(&Monomial::var(3, 1, 1)), Elem::from_index(2));
        assert!(matches!(Polynomial::parse(&ctx, 3, "x3"), Err(Error::VariableOutOfRange { var: 3 })));
        assert!(Polynomial::parse(&ctx, 3, "x1+").is_err());
        assert!(Polynomial::parse(&ctx, 3, "x1^").is_err());
        assert!(Polynomial::parse(&ctx, 3, "").is_err());
        assert!(Polynomial::parse(&ctx, 3, "7*x1").is_err());
    }

    #[test]
    fn affine_evaluation() {
        let ctx = gf(4);
        assert_eq!(eval_affine(&ctx, &Polynomial::constant(3, Elem::ONE), 2).unwrap(), vec![Elem::ONE; 16]);
        let f3 = gf(3);
        let sq = parse(&f3, 2, "x1^2");
        assert_eq!(eval_affine(&f3, &sq, 1).unwrap(), elems(&[1, 1, 0]));
        assert!(matches!(eval_affine(&f3, &parse(&f3, 2, "x0"), 1), Err(Error::VariableOutOfRange { var: 0 })));
    }

    #[test]
    fn projective_evaluation() {
        let ctx = gf(4);
        let f = parse(&ctx, 3, "x0^3+x1^3+x2^3");
        let expected = elems(&[1, 1, 1, 0, 0, 1, 1, 1, 0, 0, 1, 1, 1, 0, 0, 1, 0, 0, 0, 1, 1]);
        assert_eq!(eval_projective(&ctx, &f, 2).unwrap(), expected);
        let g = parse(&ctx, 3, "x1^3+x2^3");
        assert_eq!(eval_projective(&ctx, &g, 1).unwrap(), elems(&[0, 0, 0, 1, 1]));
        assert_eq!(eval_projective(&ctx, &parse(&ctx, 3, "x0+x1^2"), 2), Err(Error::NotHomogeneous));

        // x_(m-j)^d is the indicator of the {1} x F_q^j block
        for q in [3u32, 4, 5] {
            let ctx = gf(q);
            for j in 0..=2usize {
                for d in 1..=4u32 {
                    let f = Polynomial::term(Monomial::var(3, 2 - j, d), Elem::ONE);
                    let v = eval_projective(&ctx, &f, j).unwrap();
                    let block = (q as usize).pow(j as u32);
                    assert!(v[..block].iter().all(|&x| x == Elem::ONE));
                    assert!(v[block..].iter().all(|x| x.is_zero()));
                }
            }
        }
    }

    #[test]
    fn reduction_and_dehomogenization() {
        let f3 = gf(3);
        let f = parse(&f3, 3, F_Q3);
        let dh = dehomogenize(&f3, &f, 0);
        assert_eq!(dh, parse(&f3, 3, "x1 - x1^3 + x1^2*x2 + x2^2 + x2^3"));
        let f0 = reduce_mod_affine(&f3, &dh);
        assert_eq!(f0, parse(&f3, 3, "x1^2*x2 + x2^2 + x2"));
        assert_eq!(reduce_mod_affine(&f3, &f0), f0);

        let ctx = gf(4);
        let x14 = parse(&ctx, 2, "x1^4");
        let red = reduce_mod_affine(&ctx, &x14);
        assert_eq!(red, parse(&ctx, 2, "x1"));
        assert_eq!(eval_affine(&ctx, &x14, 1).unwrap(), eval_affine(&ctx, &red, 1).unwrap());

        let g = parse(&ctx, 3, "x0^3+x1^3+x2^3");
        assert_eq!(dehomogenize(&ctx, &g, 0), parse(&ctx, 3, "1+x1^3+x2^3"));
        assert_eq!(dehomogenize(&ctx, &parse(&ctx, 3, "x0^5"), 0), Polynomial::constant(3, Elem::ONE));
    }

    #[test]
    fn homogenization() {
        let f3 = gf(3);
        let h = homogenize(&parse(&f3, 3, "x2^2+x1"), 3, 0).unwrap();
        assert_eq!(h, parse(&f3, 3, "x0*x2^2 + x0^2*x1"));
        let c = homogenize(&Polynomial::constant(3, Elem::from_index(2)), 4, 1).unwrap();
        assert_eq!(c, parse(&f3, 3, "2*x1^4"));
        let ctx = gf(4);
        let top = parse(&ctx, 3, "x1^3+x2^3");
        assert_eq!(homogenize(&top, 3, 0).unwrap(), top);
        assert_eq!(homogenize(&top, 2, 0), Err(Error::DegreeTooHigh { degree: 3, max: 2 }));
    }

    #[test]
    fn lifting() {
        let f3 = gf(3);
        let fbad = parse(&f3, 3, "-x1+x2");
        assert_eq!(lift_to_degree(&f3, &fbad, 3).unwrap(), parse(&f3, 3, "-x1^3+x2^3"));
        assert_eq!(lift_to_degree(&f3, &fbad, 1).unwrap(), fbad);
        assert!(matches!(lift_to_degree(&f3, &fbad, 2), Err(Error::IncongruentDegrees { .. })));

        let ctx = gf(4);
        let x2 = parse(&ctx, 3, "x2");
        let lifted = lift_to_degree(&ctx, &x2, 4).unwrap();
        assert_eq!(lifted, parse(&ctx, 3, "x2^4"));
        assert_eq!(eval_projective(&ctx, &x2, 1).unwrap(), eval_projective(&ctx, &lifted, 1).unwrap());
    }

    #[test]
    fn monomial_bases() {
        assert_eq!(basis_md(4, 2, 3).len(), 10);
        for q in [3usize, 4, 5, 7] {
            for d in 1..q {
                assert_eq!(basis_md(q, 1, d).len(), d + 1);
            }
        }
        let lin: Vec<String> = basis_md(3, 2, 1).iter().map(|m| m.to_string()).collect();
        assert_eq!(lin, ["x0", "x1", "x2"]);
        let b = basis_md(4, 2, 3);
        assert_eq!(b[0].to_string(), "x0^3");
        assert_eq!(b.last().unwrap().to_string(), "x2^3");
        let a: Vec<String> = basis_affine(3, 1, 1).iter().map(|m| m.to_string()).collect();
        assert_eq!(a, ["1", "x1"]);
        assert_eq!(basis_affine(4, 2, 6).len(), 16);
    }

    #[test]
    fn bad_good_split() {
        let f3 = gf(3);
        let f0 = parse(&f3, 3, "x1^2*x2 + x2^2 + x2");
        let s = split_bad_good(&f0, 3, 3);
        assert_eq!(s.bad, parse(&f3, 3, "x2"));
        assert_eq!(s.good_top, parse(&f3, 3, "x1^2*x2"));
        assert_eq!(s.good_low, parse(&f3, 3, "x2^2"));

        let ctx = gf(5);
        let g = parse(&ctx, 3, "x1^3 + 2*x1*x2 + x2 + 4");
        let s = split_bad_good(&g, 3, 5);
        assert!(s.bad.is_zero());
        assert_eq!(s.good_top.add(&s.good_low, &ctx), g);

        let z = split_bad_good(&Polynomial::zero(3), 3, 3);
        assert!(z.bad.is_zero() && z.good_top.is_zero() && z.good_low.is_zero());
    }
}
