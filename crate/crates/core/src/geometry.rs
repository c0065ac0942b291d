//! Ordered point sets of affine space F_q^j and projective space P^j.
//!
//! The order is fixed recursively from the field ordering
//! `[xi^0, ..., xi^(q-2), 0]`:
//!
//! * `P^j = ({1} x F_q^j) ++ ({0} x P^(j-1))`, with `P^0 = [(1)]`;
//! * `F_q^j = P^(j-1) ++ xi P^(j-1) ++ ... ++ xi^(q-2) P^(j-1) ++ [0]`.
//!
//! Every code in this crate indexes codeword positions by these lists, and
//! the recursive decoders rely on the block structure they induce.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::gf::{Elem, FieldCtx};

/// A point given by its coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point(pub Vec<Elem>);

impl Point {
    pub fn coords(&self) -> &[Elem] {
        &self.0
    }

    /// Whether the leftmost nonzero coordinate equals one.
    pub fn is_standard(&self) -> bool {
        self.0.iter().find(|c| !c.is_zero()) == Some(&Elem::ONE)
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", crate::gf::format_vector(&self.0))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PointKind {
    Affine,
    Projective,
}

/// An ordered, duplicate-free list of points.
#[derive(Debug, Clone)]
pub struct PointList {
    points: Vec<Point>,
    kind: PointKind,
    dim: usize,
    index: HashMap<Point, usize>,
}

impl PointList {
    fn new(points: Vec<Point>, kind: PointKind, dim: usize) -> PointList {
        let index = points.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        PointList { points, kind, dim, index }
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn kind(&self) -> PointKind {
        self.kind
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn get(&self, i: usize) -> Option<&Point> {
        self.points.get(i)
    }

    /// Position of `pt` in the list.
    pub fn position(&self, pt: &Point) -> Result<usize> {
        self.index.get(pt).copied().ok_or(Error::PointNotFound)
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Point> {
        self.points.iter()
    }
}

impl<'a> IntoIterator for &'a PointList {
    type Item = &'a Point;
    type IntoIter = std::slice::Iter<'a, Point>;

    fn into_iter(self) -> Self::IntoIter {
        self.points.iter()
    }
}

/// `p_j = (q^(j+1) - 1) / (q - 1)`, the number of points of P^j.
pub fn projective_size(q: usize, j: usize) -> usize {
    (0..=j).map(|i| q.pow(i as u32)).sum()
}

fn projective_coords(ctx: &FieldCtx, j: usize) -> Vec<Vec<Elem>> {
    if j == 0 {
        return vec![vec![Elem::ONE]];
    }
    let mut out = Vec::with_capacity(projective_size(ctx.q(), j));
    for a in affine_coords(ctx, j) {
        let mut v = Vec::with_capacity(j + 1);
        v.push(Elem::ONE);
        v.extend(a);
        out.push(v);
    }
    for p in projective_coords(ctx, j - 1) {
        let mut v = Vec::with_capacity(j + 1);
        v.push(Elem::ZERO);
        v.extend(p);
        out.push(v);
    }
    out
}

fn affine_coords(ctx: &FieldCtx, j: usize) -> Vec<Vec<Elem>> {
    if j == 0 {
        return vec![Vec::new()];
    }
    let base = projective_coords(ctx, j - 1);
    let mut out = Vec::with_capacity(ctx.q().pow(j as u32));
    for r in 0..ctx.q() - 1 {
        let s = ctx.xi_pow(r as u64);
        for p in &base {
            out.push(p.iter().map(|&c| ctx.mul(s, c)).collect());
        }
    }
    out.push(vec![Elem::ZERO; j]);
    out
}

/// The standard representatives of P^j in recursive order.
pub fn projective_points(ctx: &FieldCtx, j: usize) -> PointList {
    let pts = projective_coords(ctx, j).into_iter().map(Point).collect();
    PointList::new(pts, PointKind::Projective, j)
}

/// The points of F_q^j in recursive order. `j = 0` yields the single empty
/// tuple.
pub fn affine_points(ctx: &FieldCtx, j: usize) -> PointList {
    let pts = affine_coords(ctx, j).into_iter().map(Point).collect();
    PointList::new(pts, PointKind::Affine, j)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(v: &[u16]) -> Point {
        Point(v.iter().map(|&i| Elem::from_index(i)).collect())
    }

    // GF(4) encodings: 1 -> 1, a -> 2, a+1 -> 3.
    const P2_GF4: [[u16; 3]; 21] = [
        [1, 1, 1],
        [1, 1, 2],
        [1, 1, 3],
        [1, 1, 0],
        [1, 0, 1],
        [1, 2, 2],
        [1, 2, 3],
        [1, 2, 1],
        [1, 2, 0],
        [1, 0, 2],
        [1, 3, 3],
        [1, 3, 1],
        [1, 3, 2],
        [1, 3, 0],
        [1, 0, 3],
        [1, 0, 0],
        [0, 1, 1],
        [0, 1, 2],
        [0, 1, 3],
        [0, 1, 0],
        [0, 0, 1],
    ];

    #[test]
    fn projective_plane_gf4() {
        let ctx = FieldCtx::new(2, 2).unwrap();
        let p2 = projective_points(&ctx, 2);
        let expected: Vec<Point> = P2_GF4.iter().map(|c| pt(c)).collect();
        assert_eq!(p2.points(), expected.as_slice());
        assert_eq!(p2.position(&pt(&[1, 1, 1])).unwrap(), 0);
        assert_eq!(p2.position(&pt(&[0, 0, 1])).unwrap(), 20);
        assert_eq!(p2.position(&pt(&[2, 0, 1])), Err(Error::PointNotFound));
    }

    #[test]
    fn small_cases() {
        let ctx = FieldCtx::new(2, 2).unwrap();
        assert_eq!(projective_points(&ctx, 0).points(), &[pt(&[1])]);
        let p1: Vec<Point> = [[1, 1], [1, 2], [1, 3], [1, 0], [0, 1]].iter().map(|c| pt(c)).collect();
        assert_eq!(projective_points(&ctx, 1).points(), p1.as_slice());
        let a2 = affine_points(&ctx, 2);
        let first: Vec<Point> = [[1, 1], [1, 2], [1, 3], [1, 0], [0, 1], [2, 2], [2, 3], [2, 1], [2, 0], [0, 2]]
            .iter()
            .map(|c| pt(c))
            .collect();
        assert_eq!(&a2.points()[..10], first.as_slice());

        let gf2 = FieldCtx::new(2, 1).unwrap();
        assert_eq!(affine_points(&gf2, 1).points(), &[pt(&[1]), pt(&[0])]);

        let gf3 = FieldCtx::new(3, 1).unwrap();
        let a = affine_points(&gf3, 2);
        assert_eq!(a.len(), 9);
        assert_eq!(a.points()[8], pt(&[0, 0]));
        // hand application of the scalar-orbit decomposition with xi = 2
        let expected: Vec<Point> =
            [[1, 1], [1, 2], [1, 0], [0, 1], [2, 2], [2, 1], [2, 0], [0, 2], [0, 0]].iter().map(|c| pt(c)).collect();
        assert_eq!(a.points(), expected.as_slice());
    }

    #[test]
    fn decompositions_and_cardinalities() {
        for q in [2u32, 3, 4, 5, 7, 8, 9] {
            let ctx = FieldCtx::with_order(q).unwrap();
            let qu = q as usize;
            for j in 1..=3usize {
                let pj = projective_points(&ctx, j);
                let aj = affine_points(&ctx, j);
                let pprev = projective_points(&ctx, j - 1);
                assert_eq!(pj.len(), (qu.pow(j as u32 + 1) - 1) / (qu - 1));
                assert_eq!(pj.len(), projective_size(qu, j));
                assert_eq!(aj.len(), qu.pow(j as u32));
                assert_eq!(pj.index.len(), pj.len(), "duplicates");
                assert_eq!(aj.index.len(), aj.len(), "duplicates");
                assert!(pj.iter().all(Point::is_standard));

                let mut rebuilt: Vec<Point> = aj.iter().map(|a| Point([&[Elem::ONE], a.coords()].concat())).collect();
                rebuilt.extend(pprev.iter().map(|p| Point([&[Elem::ZERO], p.coords()].concat())));
                assert_eq!(pj.points(), rebuilt.as_slice());

                let mut orbit = Vec::new();
                for r in 0..qu - 1 {
                    let s = ctx.xi_pow(r as u64);
                    orbit.extend(pprev.iter().map(|p| Point(p.coords().iter().map(|&c| ctx.mul(s, c)).collect())));
                }
                orbit.push(Point(vec![Elem::ZERO; j]));
                assert_eq!(aj.points(), orbit.as_slice());

                for (i, p) in pj.iter().enumerate() {
                    assert_eq!(pj.position(p).unwrap(), i);
                }
            }
        }
    }
}
