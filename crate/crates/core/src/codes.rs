//! Affine (RM) and projective (PRM) Reed-Muller codes: parameters,
//! generator matrices, encoding, interpolation and the `(u + v_xi, v)`
//! recursive structure.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, OnceLock, RwLock};

use crate::error::{Error, Result};
use crate::geometry::{affine_points, projective_points, projective_size, PointList};
use crate::gf::{Elem, FieldCtx};
use crate::linalg::{axpy, Matrix, Systematic};
use crate::poly::{basis_affine, basis_md, eval_on, Monomial, Polynomial};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    /// Affine Reed-Muller: polynomials of degree <= d on F_q^m.
    Rm,
    /// Projective Reed-Muller: degree-d forms on P^m.
    Prm,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Rm => "rm",
            Family::Prm => "prm",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Family> {
        match s.to_ascii_lowercase().as_str() {
            "rm" => Ok(Family::Rm),
            "prm" => Ok(Family::Prm),
            _ => Err(Error::Parse(format!("unknown code family `{s}`"))),
        }
    }
}

/// A non-negative multiple of one half, stored as twice its value. Decoder
/// branch conditions compare error weights strictly against these.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Half(u64);

impl Half {
    /// The value `n / 2`.
    pub const fn of(n: u64) -> Half {
        Half(n)
    }

    pub const fn twice(self) -> u64 {
        self.0
    }

    /// `w < self`.
    pub const fn exceeds(self, w: usize) -> bool {
        2 * (w as u64) < self.0
    }

    /// Largest integer strictly below the value, i.e. `floor((n - 1) / 2)`.
    pub const fn floor_below(self) -> u64 {
        if self.0 == 0 {
            0
        } else {
            (self.0 - 1) / 2
        }
    }
}

impl fmt::Display for Half {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_multiple_of(2) {
            write!(f, "{}", self.0 / 2)
        } else {
            write!(f, "{}/2", self.0)
        }
    }
}

/// Exact binomial coefficient, zero outside `0 <= k <= n`.
pub fn binom(n: i64, k: i64) -> i128 {
    if k < 0 || n < 0 || k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: i128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as i128 / (i + 1) as i128;
    }
    acc
}

/// `(nu, mu)` with `x = nu (q - 1) + mu`, `0 <= mu < q - 1`.
pub fn degree_split(x: usize, q: usize) -> (usize, usize) {
    (x / (q - 1), x % (q - 1))
}

/// Dimension of `RM_d(m)` by the alternating binomial sum.
pub fn rm_dimension(q: usize, m: usize, d: usize) -> usize {
    let (q, m) = (q as i64, m as i64);
    let mut k: i128 = 0;
    for t in 0..=d as i64 {
        for j in 0..=m {
            let sign = if j % 2 == 0 { 1 } else { -1 };
            k += sign * binom(m, j) * binom(t - j * q + m - 1, t - j * q);
        }
    }
    k as usize
}

/// Dimension of `PRM_d(m)` by the alternating binomial sum over the degrees
/// `0 < t <= d` congruent to `d` mod `q - 1`.
pub fn prm_dimension(q: usize, m: usize, d: usize) -> usize {
    let (qi, mi) = (q as i64, m as i64);
    let mut k: i128 = 0;
    let mut t = d as i64;
    while t > 0 {
        for j in 0..=mi + 1 {
            let sign = if j % 2 == 0 { 1 } else { -1 };
            k += sign * binom(mi + 1, j) * binom(t - j * qi + mi, t - j * qi);
        }
        t -= qi - 1;
    }
    k as usize
}

/// Minimum distance of `RM_d(m)` for `0 <= d <= m (q - 1)`.
pub fn rm_min_distance(q: usize, m: usize, d: usize) -> usize {
    let (nu, mu) = degree_split(d, q);
    if nu >= m {
        return 1;
    }
    (q - mu) * q.pow((m - nu - 1) as u32)
}

/// Minimum distance of `PRM_d(m)`; 1 when the code is the whole space
/// (`m = 0` or `d > m (q - 1)`).
pub fn prm_min_distance(q: usize, m: usize, d: usize) -> usize {
    if m == 0 || d > m * (q - 1) {
        return 1;
    }
    let (nu, mu) = degree_split(d - 1, q);
    (q - mu) * q.pow((m - nu - 1) as u32)
}

/// `eta_d(m) = sum_{i=0}^{m-nu-1} wt(RM_d(m-i)) + 1`, with the sum empty
/// when `nu >= m` (the whole-space case).
pub fn eta_sum(q: usize, m: usize, d: usize) -> usize {
    let (nu, _) = degree_split(d - 1, q);
    let terms = m.saturating_sub(nu);
    (0..terms).map(|i| rm_min_distance(q, m - i, d)).sum::<usize>() + 1
}

/// Closed form `(q - mu) q^(m-nu-1) - mu (q^(m-nu-1) - 1) / (q - 1)`, for
/// `1 <= d <= m (q - 1)`.
pub fn eta_closed(q: usize, m: usize, d: usize) -> usize {
    let (nu, mu) = degree_split(d - 1, q);
    let pw = q.pow((m - nu - 1) as u32);
    (q - mu) * pw - mu * (pw - 1) / (q - 1)
}

/// Threshold `(sum_{i=1}^{m-nu-1} wt(RM_d(m-i)) + 1) / 2` on the weight of
/// the tail-block error in the second decoding branch.
fn tail_radius(q: usize, m: usize, d: usize) -> Half {
    let (nu, _) = degree_split(d - 1, q);
    let terms = m.saturating_sub(nu);
    let s: usize = (1..terms).map(|i| rm_min_distance(q, m - i, d)).sum();
    Half::of(s as u64 + 1)
}

/// Which code and at what parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CodeSpec {
    family: Family,
    ctx: Arc<FieldCtx>,
    m: usize,
    d: usize,
}

impl CodeSpec {
    /// PRM needs `1 <= d <= m (q - 1)`; RM needs `0 <= d <= m (q - 1)`.
    pub fn new(family: Family, ctx: Arc<FieldCtx>, m: usize, d: usize) -> Result<CodeSpec> {
        let max = m * (ctx.q() - 1);
        let ok = m >= 1
            && d <= max
            && match family {
                Family::Prm => d >= 1,
                Family::Rm => true,
            };
        if !ok {
            return Err(Error::DegreeOutOfRange { family: family.name(), m, d });
        }
        Ok(CodeSpec { family, ctx, m, d })
    }

    pub fn prm(ctx: Arc<FieldCtx>, m: usize, d: usize) -> Result<CodeSpec> {
        CodeSpec::new(Family::Prm, ctx, m, d)
    }

    pub fn rm(ctx: Arc<FieldCtx>, m: usize, d: usize) -> Result<CodeSpec> {
        CodeSpec::new(Family::Rm, ctx, m, d)
    }

    /// PRM of any positive degree; above `m (q - 1)` this is the whole
    /// space, which the recursive decoders meet on their tail blocks.
    pub(crate) fn prm_any_degree(ctx: Arc<FieldCtx>, m: usize, d: usize) -> Result<CodeSpec> {
        if m == 0 || d == 0 {
            return Err(Error::DegreeOutOfRange { family: "prm", m, d });
        }
        Ok(CodeSpec { family: Family::Prm, ctx, m, d })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn ctx(&self) -> &Arc<FieldCtx> {
        &self.ctx
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn q(&self) -> usize {
        self.ctx.q()
    }

    pub fn length(&self) -> usize {
        match self.family {
            Family::Rm => self.q().pow(self.m as u32),
            Family::Prm => projective_size(self.q(), self.m),
        }
    }

    pub fn params(&self) -> CodeParams {
        CodeParams::compute(self.family, self.q(), self.m, self.d)
    }
}

/// Length, dimension, minimum distance and the decoding thresholds derived
/// from them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CodeParams {
    pub n: usize,
    pub k: usize,
    pub wt: usize,
    pub nu: usize,
    pub mu: usize,
    /// Recursive lower bound on the distance (PRM only).
    pub eta: Option<usize>,
    /// `floor((wt - 1) / 2)`.
    pub capability: usize,
    /// `floor((eta - 1) / 2)` (PRM only).
    pub recursive_capability: Option<usize>,
    /// `wt / 2`.
    pub radius: Half,
    /// `eta / 2` (PRM only).
    pub radius_eta: Option<Half>,
    /// `wt(RM_d(m)) / 2`, the first-block threshold (PRM only).
    pub radius_affine: Option<Half>,
    /// Tail-block threshold of the second decoding branch (PRM only).
    pub radius_tail: Option<Half>,
}

impl CodeParams {
    /// Parameters from the closed formulas. For PRM above `m (q - 1)` the
    /// code is the whole space and `k` is taken as its length.
    pub fn compute(family: Family, q: usize, m: usize, d: usize) -> CodeParams {
        match family {
            Family::Rm => {
                let (nu, mu) = degree_split(d, q);
                let wt = rm_min_distance(q, m, d);
                CodeParams {
                    n: q.pow(m as u32),
                    k: rm_dimension(q, m, d),
                    wt,
                    nu,
                    mu,
                    eta: None,
                    capability: (wt - 1) / 2,
                    recursive_capability: None,
                    radius: Half::of(wt as u64),
                    radius_eta: None,
                    radius_affine: None,
                    radius_tail: None,
                }
            }
            Family::Prm => {
                let (nu, mu) = degree_split(d - 1, q);
                let n = projective_size(q, m);
                let saturated = d > m * (q - 1);
                let wt = prm_min_distance(q, m, d);
                let eta = eta_sum(q, m, d);
                if !saturated {
                    assert_eq!(eta, eta_closed(q, m, d), "eta closed form disagrees with the sum");
                }
                let affine_wt = if saturated { 1 } else { rm_min_distance(q, m, d) };
                CodeParams {
                    n,
                    k: if saturated { n } else { prm_dimension(q, m, d) },
                    wt,
                    nu,
                    mu,
                    eta: Some(eta),
                    capability: (wt - 1) / 2,
                    recursive_capability: Some((eta - 1) / 2),
                    radius: Half::of(wt as u64),
                    radius_eta: Some(Half::of(eta as u64)),
                    radius_affine: Some(Half::of(affine_wt as u64)),
                    radius_tail: Some(tail_radius(q, m, d)),
                }
            }
        }
    }

    /// `family,q,m,d,n,k,wt,eta,T,T0`.
    pub const CSV_HEADER: &'static str = "family,q,m,d,n,k,wt,eta,T,T0";

    pub fn csv_row(&self, family: Family, q: usize, m: usize, d: usize) -> String {
        let opt = |v: Option<usize>| v.map(|x| x.to_string()).unwrap_or_default();
        format!(
            "{family},{q},{m},{d},{},{},{},{},{},{}",
            self.n,
            self.k,
            self.wt,
            opt(self.eta),
            self.capability,
            opt(self.recursive_capability)
        )
    }
}

/// One row of the `T0 / T` comparison table.
#[derive(Debug, Clone, PartialEq)]
pub struct RatioRow {
    pub d: usize,
    pub eta: usize,
    pub wt: usize,
    pub t0: usize,
    pub t: usize,
    /// `None` when `T = 0`.
    pub ratio: Option<f64>,
}

/// `T0 / T` for every `1 <= d <= m (q - 1)`.
pub fn ratio_table(q: usize, m: usize) -> Vec<RatioRow> {
    (1..=m * (q - 1))
        .map(|d| {
            let p = CodeParams::compute(Family::Prm, q, m, d);
            let t0 = p.recursive_capability.unwrap();
            RatioRow {
                d,
                eta: p.eta.unwrap(),
                wt: p.wt,
                t0,
                t: p.capability,
                ratio: (p.capability > 0).then(|| t0 as f64 / p.capability as f64),
            }
        })
        .collect()
}

/// A code with its basis, point set and generator matrix materialized.
#[derive(Debug)]
pub struct Code {
    spec: CodeSpec,
    params: CodeParams,
    basis: Vec<Monomial>,
    points: PointList,
    generator: Matrix,
    systematic: Systematic,
    pub(crate) search: OnceLock<Arc<crate::decoders::exhaustive::SearchPlan>>,
}

impl Code {
    pub fn new(spec: CodeSpec) -> Code {
        let ctx = spec.ctx().clone();
        let (q, m, d) = (spec.q(), spec.m(), spec.d());
        let params = spec.params();
        let (basis, points) = match spec.family() {
            Family::Rm => (basis_affine(q, m, d), affine_points(&ctx, m)),
            Family::Prm => (basis_md(q, m, d), projective_points(&ctx, m)),
        };
        assert_eq!(basis.len(), params.k, "dimension formula disagrees with the monomial basis for {spec:?}");
        let rows = basis
            .iter()
            .map(|mono| {
                let f = Polynomial::term(mono.clone(), Elem::ONE);
                eval_on(&ctx, &f, &points).expect("basis monomials evaluate on their point set")
            })
            .collect();
        let generator = Matrix::from_rows(rows, points.len());
        let systematic = Systematic::new(&ctx, &generator);
        Code { spec, params, basis, points, generator, systematic, search: OnceLock::new() }
    }

    pub fn spec(&self) -> &CodeSpec {
        &self.spec
    }

    pub fn ctx(&self) -> &FieldCtx {
        self.spec.ctx()
    }

    pub fn params(&self) -> &CodeParams {
        &self.params
    }

    pub fn n(&self) -> usize {
        self.params.n
    }

    pub fn k(&self) -> usize {
        self.params.k
    }

    pub fn basis(&self) -> &[Monomial] {
        &self.basis
    }

    pub fn points(&self) -> &PointList {
        &self.points
    }

    pub fn generator(&self) -> &Matrix {
        &self.generator
    }

    pub(crate) fn systematic(&self) -> &Systematic {
        &self.systematic
    }

    /// Number of polynomial variables, `m + 1`.
    pub fn nvars(&self) -> usize {
        self.spec.m() + 1
    }

    /// `sum_i message_i basis_i`.
    pub fn message_polynomial(&self, message: &[Elem]) -> Result<Polynomial> {
        self.check_len(message.len(), self.k())?;
        let terms = self.basis.iter().cloned().zip(message.iter().copied());
        Ok(Polynomial::from_terms(self.ctx(), self.nvars(), terms))
    }

    /// Codeword `message * G` together with its polynomial.
    pub fn encode(&self, message: &[Elem]) -> Result<(Vec<Elem>, Polynomial)> {
        let f = self.message_polynomial(message)?;
        Ok((self.generator.left_mul(self.ctx(), message), f))
    }

    /// Evaluation of `f` on the code's point set.
    pub fn evaluate(&self, f: &Polynomial) -> Result<Vec<Elem>> {
        if f.nvars() != self.nvars() {
            return Err(Error::LengthMismatch { expected: self.nvars(), found: f.nvars() });
        }
        eval_on(self.ctx(), f, &self.points)
    }

    /// Message whose encoding is `c`.
    pub fn unencode(&self, c: &[Elem]) -> Result<Vec<Elem>> {
        self.systematic.solve(self.ctx(), &self.generator, c)
    }

    /// The unique basis-coefficient polynomial evaluating to `c`.
    pub fn interpolate(&self, c: &[Elem]) -> Result<Polynomial> {
        let msg = self.unencode(c)?;
        self.message_polynomial(&msg)
    }

    pub fn contains(&self, c: &[Elem]) -> bool {
        c.len() == self.n() && self.systematic.syndrome(self.ctx(), c).iter().all(|s| s.is_zero())
    }

    fn check_len(&self, found: usize, expected: usize) -> Result<()> {
        if found == expected {
            Ok(())
        } else {
            Err(Error::LengthMismatch { expected, found })
        }
    }

    /// Minimum nonzero codeword weight by enumerating all `q^k - 1` nonzero
    /// messages.
    pub fn min_distance_brute_force(&self) -> usize {
        let ctx = self.ctx();
        let (k, n, q) = (self.k(), self.n(), self.spec.q());
        let mut msg = vec![0usize; k];
        let mut word = vec![Elem::ZERO; n];
        let mut best = n;
        // q-ary counter; each step adds the difference of one or more digits
        'outer: loop {
            let mut i = 0;
            loop {
                if i == k {
                    break 'outer;
                }
                let old = msg[i];
                let new = (old + 1) % q;
                msg[i] = new;
                let delta = ctx.sub(Elem::from_index(new as u16), Elem::from_index(old as u16));
                axpy(ctx, &mut word, delta, self.generator.row(i));
                if new != 0 {
                    break;
                }
                i += 1;
            }
            let w = crate::gf::weight(&word);
            if w > 0 && w < best {
                best = w;
            }
        }
        best
    }
}

/// Shared cache of codes over one field, keyed by family and parameters.
#[derive(Debug)]
pub struct CodeBook {
    ctx: Arc<FieldCtx>,
    codes: RwLock<HashMap<(Family, usize, usize), Arc<Code>>>,
}

impl CodeBook {
    pub fn new(ctx: Arc<FieldCtx>) -> CodeBook {
        CodeBook { ctx, codes: RwLock::new(HashMap::new()) }
    }

    pub fn ctx(&self) -> &Arc<FieldCtx> {
        &self.ctx
    }

    pub fn rm(&self, m: usize, d: usize) -> Result<Arc<Code>> {
        self.get(Family::Rm, m, d)
    }

    /// PRM code of any positive degree (whole space above `m (q - 1)`).
    pub fn prm(&self, m: usize, d: usize) -> Result<Arc<Code>> {
        self.get(Family::Prm, m, d)
    }

    pub fn get(&self, family: Family, m: usize, d: usize) -> Result<Arc<Code>> {
        let key = (family, m, d);
        if let Some(c) = self.codes.read().expect("code cache poisoned").get(&key) {
            return Ok(c.clone());
        }
        let spec = match family {
            Family::Rm => CodeSpec::rm(self.ctx.clone(), m, d)?,
            Family::Prm => CodeSpec::prm_any_degree(self.ctx.clone(), m, d)?,
        };
        let mut w = self.codes.write().expect("code cache poisoned");
        Ok(w.entry(key).or_insert_with(|| Arc::new(Code::new(spec))).clone())
    }
}

/// `v_(xi,d) = (v, xi^d v, xi^(2d) v, ..., xi^((q-2)d) v, 0)`, aligned with
/// the scalar-orbit order of F_q^m.
pub fn replicate_v(ctx: &FieldCtx, v: &[Elem], d: usize) -> Vec<Elem> {
    let q = ctx.q();
    let mut out = Vec::with_capacity((q - 1) * v.len() + 1);
    for r in 0..q - 1 {
        let s = ctx.xi_pow((r * d) as u64);
        out.extend(v.iter().map(|&x| ctx.mul(s, x)));
    }
    out.push(Elem::ZERO);
    out
}

/// `(u + v_(xi,d), v)`.
pub fn recursive_compose(ctx: &FieldCtx, u: &[Elem], v: &[Elem], d: usize) -> Result<Vec<Elem>> {
    let vx = replicate_v(ctx, v, d);
    if u.len() != vx.len() {
        return Err(Error::LengthMismatch { expected: vx.len(), found: u.len() });
    }
    let mut out: Vec<Elem> = u.iter().zip(&vx).map(|(&a, &b)| ctx.add(a, b)).collect();
    out.extend_from_slice(v);
    Ok(out)
}

/// Splits a length-`p_m` word into its `{1} x F_q^m` block and its
/// `{0} x P^(m-1)` block.
pub fn split_blocks(q: usize, m: usize, c: &[Elem]) -> Result<(&[Elem], &[Elem])> {
    let n = projective_size(q, m);
    if c.len() != n {
        return Err(Error::LengthMismatch { expected: n, found: c.len() });
    }
    Ok(c.split_at(q.pow(m as u32)))
}
