//! Finite fields GF(p^e) with a fixed primitive element.
//!
//! Elements are stored as their integer encoding: the base-p digits of the
//! coefficient vector in the power basis `1, x, ..., x^(e-1)` of
//! `GF(p)[x]/(modulus)`. Nonzero multiplication goes through discrete-log
//! tables built from the primitive element `xi`, which is the class of `x`
//! (the modulus is a Conway polynomial) or the least primitive root when
//! `e = 1`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Largest supported field size.
pub const MAX_FIELD_SIZE: u32 = 1 << 16;

/// Conway polynomials for every non-prime field with q <= 128, coefficients
/// listed from the constant term up.
const CONWAY: &[(u32, u32, &[u32])] = &[
    (2, 2, &[1, 1, 1]),
    (2, 3, &[1, 1, 0, 1]),
    (2, 4, &[1, 1, 0, 0, 1]),
    (2, 5, &[1, 0, 1, 0, 0, 1]),
    (2, 6, &[1, 1, 0, 1, 1, 0, 1]),
    (2, 7, &[1, 1, 0, 0, 0, 0, 0, 1]),
    (3, 2, &[2, 2, 1]),
    (3, 3, &[1, 2, 0, 1]),
    (3, 4, &[2, 0, 0, 2, 1]),
    (5, 2, &[2, 4, 1]),
    (5, 3, &[3, 3, 0, 1]),
    (7, 2, &[3, 6, 1]),
    (11, 2, &[2, 7, 1]),
];

/// A field element, identified by its integer encoding in `[0, q)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Elem(u16);

impl Elem {
    pub const ZERO: Elem = Elem(0);
    pub const ONE: Elem = Elem(1);

    /// Wraps an encoding without range checking; see [`FieldCtx::elem`].
    pub const fn from_index(i: u16) -> Elem {
        Elem(i)
    }

    pub const fn index(self) -> usize {
        self.0 as usize
    }

    pub const fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Immutable description of GF(p^e) together with its log/antilog tables.
#[derive(Debug, Clone)]
pub struct FieldCtx {
    p: u32,
    e: u32,
    q: u32,
    modulus: Vec<u32>,
    xi: Elem,
    /// `antilog[i] = xi^i` for `i in 0..2(q-1)`, doubled to skip a reduction.
    antilog: Vec<Elem>,
    /// `log[a]` for nonzero `a`; `log[0]` is unused.
    log: Vec<u32>,
    /// Addition and negation tables, present for q <= 256.
    add_table: Option<Vec<Elem>>,
    neg: Vec<Elem>,
}

impl PartialEq for FieldCtx {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.e == other.e
    }
}

impl Eq for FieldCtx {}

pub fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut i = 2u32;
    while i.saturating_mul(i) <= n {
        if n.is_multiple_of(i) {
            return false;
        }
        i += 1;
    }
    true
}

fn prime_factors(mut n: u32) -> Vec<u32> {
    let mut out = Vec::new();
    let mut f = 2;
    while f * f <= n {
        if n.is_multiple_of(f) {
            out.push(f);
            while n.is_multiple_of(f) {
                n /= f;
            }
        }
        f += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        exp >>= 1;
    }
    acc
}

/// Smallest primitive root modulo the prime `p`.
pub fn smallest_primitive_root(p: u32) -> u32 {
    if p == 2 {
        return 1;
    }
    let factors = prime_factors(p - 1);
    (2..p)
        .find(|&g| factors.iter().all(|&r| pow_mod(g as u64, ((p - 1) / r) as u64, p as u64) != 1))
        .expect("every prime has a primitive root")
}

/// Splits `q` into `(p, e)` with `q = p^e`.
pub fn prime_power(q: u32) -> Result<(u32, u32)> {
    if q < 2 {
        return Err(Error::NotPrimePower(q));
    }
    let factors = prime_factors(q);
    if factors.len() != 1 {
        return Err(Error::NotPrimePower(q));
    }
    let p = factors[0];
    let mut e = 0;
    let mut r = q;
    while r > 1 {
        r /= p;
        e += 1;
    }
    Ok((p, e))
}

/// Remainder of `num` modulo `den` over GF(p); both are coefficient lists
/// from the constant term up and `den` must have a nonzero leading term.
fn poly_rem_mod_p(num: &[u32], den: &[u32], p: u32) -> Vec<u32> {
    let mut rem: Vec<u32> = num.to_vec();
    let dd = den.len() - 1;
    let lead_inv = pow_mod(den[dd] as u64, (p - 2) as u64, p as u64) as u32;
    while rem.len() > dd {
        let top = *rem.last().unwrap();
        if top != 0 {
            let factor = (top as u64 * lead_inv as u64 % p as u64) as u32;
            let shift = rem.len() - 1 - dd;
            for (i, &c) in den.iter().enumerate() {
                let v = &mut rem[shift + i];
                *v = ((*v as u64 + p as u64 - (factor as u64 * c as u64) % p as u64) % p as u64) as u32;
            }
        }
        rem.pop();
    }
    rem
}

/// Trial-division irreducibility test for a polynomial over GF(p), checking
/// every monic divisor of degree up to half the degree.
pub fn is_irreducible(p: u32, poly: &[u32]) -> bool {
    let deg = poly.len().saturating_sub(1);
    if deg == 0 || poly[deg] == 0 {
        return false;
    }
    for dd in 1..=deg / 2 {
        let count = (p as u64).pow(dd as u32);
        for code in 0..count {
            let mut div = Vec::with_capacity(dd + 1);
            let mut c = code;
            for _ in 0..dd {
                div.push((c % p as u64) as u32);
                c /= p as u64;
            }
            div.push(1);
            if poly_rem_mod_p(poly, &div, p).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

impl FieldCtx {
    /// Builds GF(p^e) from the built-in Conway polynomial table.
    pub fn new(p: u32, e: u32) -> Result<FieldCtx> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if e == 0 {
            return Err(Error::FieldTooLarge { p, e });
        }
        let q = (p as u64).checked_pow(e).filter(|&q| q <= MAX_FIELD_SIZE as u64);
        let Some(q) = q else {
            return Err(Error::FieldTooLarge { p, e });
        };
        let q = q as u32;

        let (modulus, xi_digits) = if e == 1 {
            let g = smallest_primitive_root(p);
            (vec![(p - g) % p, 1], vec![g])
        } else {
            let (_, _, coeffs) =
                CONWAY.iter().find(|(cp, ce, _)| *cp == p && *ce == e).ok_or(Error::NoConwayPolynomial { p, e })?;
            let mut x = vec![0; e as usize];
            x[1] = 1;
            (coeffs.to_vec(), x)
        };

        let mut ctx = FieldCtx {
            p,
            e,
            q,
            modulus,
            xi: Elem(encode_digits(&xi_digits, p) as u16),
            antilog: Vec::new(),
            log: Vec::new(),
            add_table: None,
            neg: Vec::new(),
        };
        ctx.neg = (0..q).map(|a| ctx.neg_slow(Elem(a as u16))).collect();
        ctx.build_log_tables()?;
        if q <= 256 {
            let mut table = Vec::with_capacity((q * q) as usize);
            for a in 0..q {
                for b in 0..q {
                    table.push(ctx.add_slow(Elem(a as u16), Elem(b as u16)));
                }
            }
            ctx.add_table = Some(table);
        }
        Ok(ctx)
    }

    /// Builds GF(q) for a prime power `q`.
    pub fn with_order(q: u32) -> Result<FieldCtx> {
        let (p, e) = prime_power(q)?;
        FieldCtx::new(p, e)
    }

    fn build_log_tables(&mut self) -> Result<()> {
        let q = self.q as usize;
        let mut antilog = Vec::with_capacity(2 * (q - 1));
        let mut log = vec![u32::MAX; q];
        let mut cur = Elem::ONE;
        for i in 0..q - 1 {
            if log[cur.index()] != u32::MAX {
                // x is not primitive modulo the table polynomial.
                return Err(Error::NoConwayPolynomial { p: self.p, e: self.e });
            }
            log[cur.index()] = i as u32;
            antilog.push(cur);
            cur = self.mul_by_xi_slow(cur);
        }
        if cur != Elem::ONE {
            return Err(Error::NoConwayPolynomial { p: self.p, e: self.e });
        }
        let doubled: Vec<Elem> = antilog.iter().chain(antilog.iter()).copied().collect();
        self.antilog = doubled;
        self.log = log;
        Ok(())
    }

    fn digits(&self, a: Elem) -> Vec<u32> {
        let mut v = a.0 as u32;
        (0..self.e)
            .map(|_| {
                let d = v % self.p;
                v /= self.p;
                d
            })
            .collect()
    }

    fn mul_by_xi_slow(&self, a: Elem) -> Elem {
        let p = self.p;
        if self.e == 1 {
            let g = self.xi.0 as u32;
            return Elem(((a.0 as u32 * g) % p) as u16);
        }
        let e = self.e as usize;
        let digits = self.digits(a);
        // multiply by x, then reduce the x^e coefficient using the monic modulus
        let top = digits[e - 1];
        let mut out = vec![0u32; e];
        for i in (1..e).rev() {
            out[i] = digits[i - 1];
        }
        for (i, o) in out.iter_mut().enumerate() {
            *o = ((*o as u64 + p as u64 - (top as u64 * self.modulus[i] as u64) % p as u64) % p as u64) as u32;
        }
        Elem(encode_digits(&out, p) as u16)
    }

    fn add_slow(&self, a: Elem, b: Elem) -> Elem {
        if self.p == 2 {
            return Elem(a.0 ^ b.0);
        }
        let (da, db) = (self.digits(a), self.digits(b));
        let sum: Vec<u32> = da.iter().zip(&db).map(|(x, y)| (x + y) % self.p).collect();
        Elem(encode_digits(&sum, self.p) as u16)
    }

    fn neg_slow(&self, a: Elem) -> Elem {
        let d: Vec<u32> = self.digits(a).iter().map(|&x| (self.p - x) % self.p).collect();
        Elem(encode_digits(&d, self.p) as u16)
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.e
    }

    /// Number of elements.
    pub fn order(&self) -> u32 {
        self.q
    }

    pub fn q(&self) -> usize {
        self.q as usize
    }

    /// Coefficients of the defining polynomial, constant term first.
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    /// The fixed primitive element.
    pub fn xi(&self) -> Elem {
        self.xi
    }

    /// Checked conversion from an integer encoding.
    pub fn elem(&self, i: u32) -> Result<Elem> {
        if i < self.q {
            Ok(Elem(i as u16))
        } else {
            Err(Error::ElementOutOfRange(i))
        }
    }

    /// The element `c * 1` for an integer `c`, i.e. `c mod p` in the prime field.
    pub fn from_int(&self, c: i64) -> Elem {
        Elem(c.rem_euclid(self.p as i64) as u16)
    }

    /// All elements, in encoding order.
    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        (0..self.q).map(|i| Elem(i as u16))
    }

    /// Nonzero elements, in encoding order.
    pub fn nonzero_elements(&self) -> impl Iterator<Item = Elem> {
        (1..self.q).map(|i| Elem(i as u16))
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        match &self.add_table {
            Some(t) => t[a.index() * self.q as usize + b.index()],
            None => self.add_slow(a, b),
        }
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        self.neg[a.index()]
    }

    #[inline]
    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        if a.is_zero() || b.is_zero() {
            return Elem::ZERO;
        }
        self.antilog[(self.log[a.index()] + self.log[b.index()]) as usize]
    }

    pub fn inv(&self, a: Elem) -> Result<Elem> {
        if a.is_zero() {
            return Err(Error::ZeroInverse);
        }
        let l = self.log[a.index()];
        Ok(self.antilog[((self.q - 1 - l) % (self.q - 1)) as usize])
    }

    pub fn div(&self, a: Elem, b: Elem) -> Result<Elem> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// `a^k` for a non-negative exponent, with `0^0 = 1`.
    pub fn pow(&self, a: Elem, k: u64) -> Elem {
        if k == 0 {
            return Elem::ONE;
        }
        if a.is_zero() {
            return Elem::ZERO;
        }
        let l = self.log[a.index()] as u64 * (k % (self.q as u64 - 1));
        self.antilog[(l % (self.q as u64 - 1)) as usize]
    }

    /// `a^k` for any integer exponent; negative exponents need `a != 0`.
    pub fn pow_signed(&self, a: Elem, k: i64) -> Result<Elem> {
        if k >= 0 {
            Ok(self.pow(a, k as u64))
        } else {
            Ok(self.pow(self.inv(a)?, k.unsigned_abs()))
        }
    }

    /// `xi^i`.
    pub fn xi_pow(&self, i: u64) -> Elem {
        self.antilog[(i % (self.q as u64 - 1)) as usize]
    }

    /// Discrete log base `xi`, `None` for zero.
    pub fn log(&self, a: Elem) -> Option<u32> {
        (!a.is_zero()).then(|| self.log[a.index()])
    }

    /// `[xi^0, xi^1, ..., xi^(q-2), 0]`.
    pub fn ordering(&self) -> Vec<Elem> {
        let mut out: Vec<Elem> = self.antilog[..self.q as usize - 1].to_vec();
        out.push(Elem::ZERO);
        out
    }

    /// Parses an element: its integer encoding, or `a` for the class of `x`
    /// (encoding `p`).
    pub fn parse_elem(&self, s: &str) -> Result<Elem> {
        let s = s.trim();
        if s == "a" && self.e > 1 {
            return Ok(Elem(self.p as u16));
        }
        let v = u32::from_str(s).map_err(|_| Error::Parse(format!("bad field element `{s}`")))?;
        self.elem(v)
    }

    /// Parses a comma-separated vector of elements.
    pub fn parse_vector(&self, s: &str) -> Result<Vec<Elem>> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        if s.is_empty() {
            return Ok(Vec::new());
        }
        s.split(',').map(|t| self.parse_elem(t)).collect()
    }
}

fn encode_digits(d: &[u32], p: u32) -> u32 {
    d.iter().rev().fold(0, |acc, &x| acc * p + x)
}

/// Formats a vector as comma-separated encodings.
pub fn format_vector(v: &[Elem]) -> String {
    let parts: Vec<String> = v.iter().map(|e| e.to_string()).collect();
    parts.join(",")
}

/// Number of nonzero entries.
pub fn weight(v: &[Elem]) -> usize {
    v.iter().filter(|e| !e.is_zero()).count()
}

/// Hamming distance between equal-length vectors.
pub fn distance(a: &[Elem], b: &[Elem]) -> usize {
    a.iter().zip(b).filter(|(x, y)| x != y).count()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gf4_matches_worked_example() {
        let f = FieldCtx::new(2, 2).unwrap();
        assert_eq!(f.modulus(), &[1, 1, 1]);
        let a = f.xi();
        assert_eq!(a, Elem(2));
        // a^2 = a + 1
        assert_eq!(f.mul(a, a), f.add(a, Elem::ONE));
        assert_eq!(f.mul(a, a), Elem(3));
        assert_eq!(f.add(Elem::ONE, Elem::ONE), Elem::ZERO);
        assert_eq!(f.ordering(), vec![Elem(1), Elem(2), Elem(3), Elem(0)]);
    }

    #[test]
    fn prime_fields() {
        let f2 = FieldCtx::new(2, 1).unwrap();
        assert_eq!(f2.xi(), Elem::ONE);
        assert_eq!(f2.ordering(), vec![Elem(1), Elem(0)]);

        let f3 = FieldCtx::new(3, 1).unwrap();
        // brute-force order of 2 mod 3
        let order = (1..3).find(|&k| pow_mod(2, k, 3) == 1).unwrap();
        assert_eq!(order, 2);
        assert_eq!(f3.xi(), Elem(2));
        assert_eq!(f3.ordering(), vec![Elem(1), Elem(2), Elem(0)]);
        assert_eq!(f3.inv(Elem(2)).unwrap(), Elem(2));
        let table: Vec<_> = (0..3).flat_map(|a| (0..3).map(move |b| (a * b) % 3)).collect();
        for a in 0..3u16 {
            for b in 0..3u16 {
                assert_eq!(f3.mul(Elem(a), Elem(b)).0 as usize, table[(a * 3 + b) as usize]);
            }
        }
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(FieldCtx::new(4, 1), Err(Error::NotPrime(4)));
        assert!(matches!(FieldCtx::new(2, 17), Err(Error::FieldTooLarge { .. })));
        assert!(matches!(FieldCtx::new(13, 2), Err(Error::NoConwayPolynomial { .. })));
        assert!(FieldCtx::new(65521, 1).is_ok());
        let f = FieldCtx::new(5, 1).unwrap();
        assert_eq!(f.inv(Elem::ZERO), Err(Error::ZeroInverse));
        assert!(f.pow_signed(Elem::ZERO, -1).is_err());
    }

    #[test]
    fn table_polynomials_irreducible_and_primitive() {
        for &(p, e, coeffs) in CONWAY {
            assert!(is_irreducible(p, coeffs), "GF({p}^{e})");
            let f = FieldCtx::new(p, e).unwrap();
            assert_eq!(f.order(), p.pow(e));
        }
        assert!(!is_irreducible(2, &[1, 0, 1])); // (x+1)^2
    }

    /// Conway compatibility: for every divisor d of e, xi^((q-1)/(p^d-1)) is a
    /// root of the degree-d Conway polynomial.
    #[test]
    fn conway_compatibility() {
        for &(p, e, _) in CONWAY {
            let f = FieldCtx::new(p, e).unwrap();
            for d in (1..e).filter(|d| e % d == 0) {
                let sub = FieldCtx::new(p, d).unwrap();
                let k = (f.order() as u64 - 1) / (p.pow(d) as u64 - 1);
                let y = f.xi_pow(k);
                // Evaluate the subfield modulus at y, mapping prime-field
                // coefficients into GF(p^e).
                let val =
                    sub.modulus().iter().rev().fold(Elem::ZERO, |acc, &c| f.add(f.mul(acc, y), f.from_int(c as i64)));
                assert_eq!(val, Elem::ZERO, "GF({p}^{e}) over GF({p}^{d})");
            }
        }
    }

    #[test]
    fn exhaustive_axioms_small_fields() {
        for (p, e) in [(2, 1), (3, 1), (2, 2), (5, 1), (7, 1), (2, 3), (3, 2), (2, 4)] {
            let f = FieldCtx::new(p, e).unwrap();
            let els: Vec<Elem> = f.elements().collect();
            for &a in &els {
                assert_eq!(f.add(a, f.neg(a)), Elem::ZERO);
                if !a.is_zero() {
                    assert_eq!(f.mul(a, f.inv(a).unwrap()), Elem::ONE);
                    assert_eq!(f.pow(a, f.order() as u64 - 1), Elem::ONE);
                    assert_eq!(f.xi_pow(f.log(a).unwrap() as u64), a);
                }
                for &b in &els {
                    assert_eq!(f.add(a, b), f.add(b, a));
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    for &c in &els {
                        assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                        assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                        assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                    }
                }
            }
        }
    }

    #[test]
    fn ordering_shape() {
        for q in [2u32, 3, 4, 5, 7, 8, 9, 16, 25, 27, 49, 121, 128] {
            let f = FieldCtx::with_order(q).unwrap();
            let ord = f.ordering();
            assert_eq!(ord.len(), q as usize);
            assert_eq!(ord[0], Elem::ONE);
            assert_eq!(*ord.last().unwrap(), Elem::ZERO);
            let mut sorted = ord.clone();
            sorted.sort();
            sorted.dedup();
            assert_eq!(sorted.len(), q as usize);
        }
    }

    #[test]
    fn negative_powers() {
        let f = FieldCtx::new(2, 3).unwrap();
        for a in f.nonzero_elements() {
            let inv = f.inv(a).unwrap();
            assert_eq!(f.pow_signed(a, -1).unwrap(), inv);
            assert_eq!(f.pow_signed(a, -3).unwrap(), f.pow(inv, 3));
        }
    }

    #[test]
    fn parse_elements() {
        let f = FieldCtx::new(2, 2).unwrap();
        assert_eq!(f.parse_elem("a").unwrap(), Elem(2));
        assert_eq!(f.parse_vector("(1,2,3)").unwrap(), vec![Elem(1), Elem(2), Elem(3)]);
        assert!(f.parse_elem("4").is_err());
        assert_eq!(format_vector(&[Elem(1), Elem(0)]), "1,0");
    }
}

#[cfg(test)]
mod props {
    use super::*;
    use proptest::prelude::*;

    proptest! {
        #[test]
        fn large_field_axioms(a in 0u16..121, b in 0u16..121, c in 0u16..121) {
            let f = FieldCtx::new(11, 2).unwrap();
            let (a, b, c) = (Elem(a), Elem(b), Elem(c));
            prop_assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
            prop_assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
            prop_assert_eq!(f.sub(f.add(a, b), b), a);
        }
    }
}
