//! Fixed benchmark workloads, shared by the criterion benches and their
//! smoke test so both decode exactly the same words.

use std::sync::Arc;

use prm_core::sim::trial_instance;
use prm_core::{Code, CodeBook, Elem, FieldCtx};

/// A code together with a batch of corrupted codewords.
pub struct Workload {
    pub book: Arc<CodeBook>,
    pub code: Arc<Code>,
    pub m: usize,
    pub d: usize,
    pub received: Vec<Vec<Elem>>,
}

impl Workload {
    fn build(q: u32, m: usize, d: usize, projective: bool, errors: usize, count: u64) -> Self {
        let ctx = Arc::new(FieldCtx::with_order(q).expect("benchmark field exists"));
        let book = Arc::new(CodeBook::new(ctx.clone()));
        let code = if projective { book.prm(m, d) } else { book.rm(m, d) }.expect("benchmark code exists");
        let received = (0..count)
            .map(|i| {
                let (c, e) = trial_instance(&code, errors, 0xbe7c, i);
                c.iter().zip(&e).map(|(&a, &b)| ctx.add(a, b)).collect()
            })
            .collect();
        Workload { book, code, m, d, received }
    }

    /// Corrupted PRM codewords.
    pub fn prm(q: u32, m: usize, d: usize, errors: usize, count: u64) -> Self {
        Self::build(q, m, d, true, errors, count)
    }

    /// Corrupted affine RM codewords.
    pub fn rm(q: u32, m: usize, d: usize, errors: usize, count: u64) -> Self {
        Self::build(q, m, d, false, errors, count)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn workloads_are_reproducible() {
        let a = Workload::prm(4, 2, 3, 2, 4);
        let b = Workload::prm(4, 2, 3, 2, 4);
        assert_eq!(a.received, b.received);
        assert_eq!(a.received[0].len(), 21);
    }
}
