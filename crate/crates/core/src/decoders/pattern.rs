//! Error patterns beyond the guaranteed radius that the guarded recursive
//! decoder still corrects.

use crate::codes::{eta_sum, prm_min_distance};
use crate::geometry::projective_size;
use crate::gf::{weight, Elem};

/// Whether `e` (length `p_m`) satisfies `wt(e) < wt(PRM_d(m)) / 2` and, for
/// some `i <= m`:
///
/// 1. for every `i < j <= m`, the weight of `e` on the last `p_j`
///    coordinates (the points `{0}^(m-j) x P^j`) is below `wt(PRM_d(j)) / 2`;
/// 2. the weight on the last `p_i` coordinates is below `eta_d(i) / 2`.
///
/// Blocks where `PRM_d(j)` is the whole space have distance 1 and
/// `eta_d(j) = 1`, so they must be error-free.
pub fn check_error_pattern(q: usize, m: usize, d: usize, e: &[Elem]) -> bool {
    assert_eq!(e.len(), projective_size(q, m), "error vector length must be p_m");
    if 2 * weight(e) >= prm_min_distance(q, m, d) {
        return false;
    }
    let tail = |j: usize| weight(&e[e.len() - projective_size(q, j)..]);
    // condition 1 holds for i iff it holds for i + 1 and block i + 1 passes
    let mut upper_ok = true;
    for i in (0..=m).rev() {
        if upper_ok && 2 * tail(i) < eta_sum(q, i, d) {
            return true;
        }
        upper_ok = upper_ok && 2 * tail(i) < prm_min_distance(q, i, d);
        if !upper_ok {
            return false;
        }
    }
    false
}
