//! Dense matrices over GF(q) and the elimination routines the codes need.

use crate::error::{Error, Result};
use crate::gf::{Elem, FieldCtx};

/// Row-major dense matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Elem>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Matrix {
        Matrix { rows, cols, data: vec![Elem::ZERO; rows * cols] }
    }

    pub fn from_rows(rows: Vec<Vec<Elem>>, cols: usize) -> Matrix {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged matrix");
            data.extend(r);
        }
        Matrix { rows: n, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[Elem] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    fn row_mut(&mut self, i: usize) -> &mut [Elem] {
        &mut self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn get(&self, r: usize, c: usize) -> Elem {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Elem) {
        self.data[r * self.cols + c] = v;
    }

    /// Row vector times matrix.
    pub fn left_mul(&self, ctx: &FieldCtx, v: &[Elem]) -> Vec<Elem> {
        assert_eq!(v.len(), self.rows);
        let mut out = vec![Elem::ZERO; self.cols];
        for (i, &c) in v.iter().enumerate() {
            if !c.is_zero() {
                axpy(ctx, &mut out, c, self.row(i));
            }
        }
        out
    }

    /// Reduced row echelon form in place; returns the pivot columns.
    pub fn rref(&mut self, ctx: &FieldCtx) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !self.get(i, c).is_zero()) else {
                continue;
            };
            if p != r {
                for k in 0..self.cols {
                    self.data.swap(p * self.cols + k, r * self.cols + k);
                }
            }
            let inv = ctx.inv(self.get(r, c)).expect("pivot is nonzero");
            for v in self.row_mut(r) {
                *v = ctx.mul(*v, inv);
            }
            let pivot_row = self.row(r).to_vec();
            for i in 0..self.rows {
                if i != r {
                    let f = self.get(i, c);
                    if !f.is_zero() {
                        axpy(ctx, self.row_mut(i), ctx.neg(f), &pivot_row);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self, ctx: &FieldCtx) -> usize {
        self.clone().rref(ctx).len()
    }
}

/// Some solution `x` of `A x = b`, or `None` when the system is
/// inconsistent. Free variables are set to zero.
pub fn solve_linear(ctx: &FieldCtx, a: &Matrix, b: &[Elem]) -> Option<Vec<Elem>> {
    assert_eq!(a.rows(), b.len());
    let n = a.cols();
    let mut aug = Matrix::zeros(a.rows(), n + 1);
    for (i, &bi) in b.iter().enumerate() {
        for j in 0..n {
            aug.set(i, j, a.get(i, j));
        }
        aug.set(i, n, bi);
    }
    let pivots = aug.rref(ctx);
    if pivots.last() == Some(&n) {
        return None;
    }
    let mut x = vec![Elem::ZERO; n];
    for (i, &c) in pivots.iter().enumerate() {
        x[c] = aug.get(i, n);
    }
    Some(x)
}

/// `acc += c * x`.
pub fn axpy(ctx: &FieldCtx, acc: &mut [Elem], c: Elem, x: &[Elem]) {
    for (a, &b) in acc.iter_mut().zip(x) {
        *a = ctx.add(*a, ctx.mul(c, b));
    }
}

/// Precomputed elimination data for a full-row-rank generator matrix `G`:
/// recovers messages from codewords and tests membership through the
/// systematic form.
#[derive(Debug, Clone)]
pub struct Systematic {
    /// Information set: the pivot columns of `rref(G)`.
    pivots: Vec<usize>,
    /// Columns outside the information set.
    redundant: Vec<usize>,
    /// `rref(G)`.
    reduced: Matrix,
    /// `G[:, pivots]^(-1)`.
    inverse: Matrix,
}

impl Systematic {
    pub fn new(ctx: &FieldCtx, generator: &Matrix) -> Systematic {
        let mut reduced = generator.clone();
        let pivots = reduced.rref(ctx);
        assert_eq!(pivots.len(), generator.rows(), "generator matrix must have full row rank");
        let k = pivots.len();
        let redundant = (0..generator.cols()).filter(|c| !pivots.contains(c)).collect();

        // invert the k x k pivot block by Gauss-Jordan on [B | I]
        let mut aug = Matrix::zeros(k, 2 * k);
        for i in 0..k {
            for (j, &c) in pivots.iter().enumerate() {
                aug.set(i, j, generator.get(i, c));
            }
            aug.set(i, k + i, Elem::ONE);
        }
        let piv = aug.rref(ctx);
        assert!(piv.len() == k && piv[k - 1] == k - 1, "pivot block is singular");
        let mut inverse = Matrix::zeros(k, k);
        for i in 0..k {
            for j in 0..k {
                inverse.set(i, j, aug.get(i, k + j));
            }
        }
        Systematic { pivots, redundant, reduced, inverse }
    }

    pub fn dimension(&self) -> usize {
        self.pivots.len()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Message `m` with `m G = c`, or [`Error::NotInCode`].
    pub fn solve(&self, ctx: &FieldCtx, generator: &Matrix, c: &[Elem]) -> Result<Vec<Elem>> {
        if c.len() != generator.cols() {
            return Err(Error::LengthMismatch { expected: generator.cols(), found: c.len() });
        }
        let info: Vec<Elem> = self.pivots.iter().map(|&p| c[p]).collect();
        let msg = self.inverse.left_mul(ctx, &info);
        if generator.left_mul(ctx, &msg) != c {
            return Err(Error::NotInCode);
        }
        Ok(msg)
    }

    /// Syndrome of `v`: entry `i` is `v[r_i] - sum_j v[p_j] R[j][r_i]` over the
    /// redundant columns `r_i`. Zero exactly on codewords.
    pub fn syndrome(&self, ctx: &FieldCtx, v: &[Elem]) -> Vec<Elem> {
        self.redundant
            .iter()
            .map(|&col| {
                let mut s = v[col];
                for (j, &p) in self.pivots.iter().enumerate() {
                    let r = self.reduced.get(j, col);
                    if !r.is_zero() && !v[p].is_zero() {
                        s = ctx.sub(s, ctx.mul(v[p], r));
                    }
                }
                s
            })
            .collect()
    }

    /// Column `pos` of the parity-check matrix, i.e. the syndrome of the
    /// unit vector at `pos`.
    pub fn parity_column(&self, ctx: &FieldCtx, pos: usize) -> Vec<Elem> {
        if let Some(j) = self.pivots.iter().position(|&p| p == pos) {
            self.redundant.iter().map(|&col| ctx.neg(self.reduced.get(j, col))).collect()
        } else {
            self.redundant.iter().map(|&col| if col == pos { Elem::ONE } else { Elem::ZERO }).collect()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(ctx: &FieldCtx, rows: &[&[u32]]) -> Matrix {
        let cols = rows[0].len();
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| ctx.elem(x).unwrap()).collect()).collect(), cols)
    }

    #[test]
    fn rank_over_gf3() {
        let ctx = FieldCtx::new(3, 1).unwrap();
        let a = m(&ctx, &[&[1, 2, 0], &[2, 1, 0], &[0, 0, 1]]);
        assert_eq!(a.rank(&ctx), 2);
        let b = m(&ctx, &[&[1, 1, 1], &[1, 2, 0]]);
        assert_eq!(b.rank(&ctx), 2);
    }

    #[test]
    fn linear_systems() {
        let ctx = FieldCtx::new(5, 1).unwrap();
        let a = m(&ctx, &[&[1, 1], &[1, 4], &[2, 2]]);
        let e = |v: &[u32]| v.iter().map(|&x| ctx.elem(x).unwrap()).collect::<Vec<_>>();
        let x = solve_linear(&ctx, &a, &e(&[3, 1, 1])).unwrap();
        assert_eq!(a_times(&ctx, &a, &x), e(&[3, 1, 1]));
        assert_eq!(solve_linear(&ctx, &a, &e(&[3, 1, 0])), None);
    }

    fn a_times(ctx: &FieldCtx, a: &Matrix, x: &[Elem]) -> Vec<Elem> {
        (0..a.rows())
            .map(|i| a.row(i).iter().zip(x).fold(Elem::ZERO, |s, (&p, &q)| ctx.add(s, ctx.mul(p, q))))
            .collect()
    }

    #[test]
    fn systematic_solve_and_syndrome() {
        let ctx = FieldCtx::new(2, 2).unwrap();
        let g = m(&ctx, &[&[1, 1, 1, 1, 1], &[1, 2, 3, 0, 0], &[0, 0, 0, 0, 1]]);
        let sys = Systematic::new(&ctx, &g);
        let msg = vec![Elem::from_index(3), Elem::from_index(2), Elem::ONE];
        let c = g.left_mul(&ctx, &msg);
        assert_eq!(sys.solve(&ctx, &g, &c).unwrap(), msg);
        assert!(sys.syndrome(&ctx, &c).iter().all(|s| s.is_zero()));
        let mut bad = c.clone();
        bad[3] = ctx.add(bad[3], Elem::ONE);
        assert_eq!(sys.solve(&ctx, &g, &bad), Err(Error::NotInCode));
        // syndrome is linear: H(c + e) = H e
        let mut e = vec![Elem::ZERO; 5];
        e[3] = Elem::ONE;
        assert_eq!(sys.syndrome(&ctx, &bad), sys.syndrome(&ctx, &e));
        assert_eq!(sys.syndrome(&ctx, &e), sys.parity_column(&ctx, 3));
        for pos in 0..5 {
            let mut unit = vec![Elem::ZERO; 5];
            unit[pos] = Elem::ONE;
            assert_eq!(sys.syndrome(&ctx, &unit), sys.parity_column(&ctx, pos));
        }
    }
}
