//! Slice-level kernels shared by the series types.

use tangle_ring::Ring;

/// Product of two coefficient slices, keeping exponents `0..len`.
pub(crate) fn mul_trunc<R: Ring>(a: &[R], b: &[R], len: usize) -> Vec<R> {
    let mut out = vec![R::zero(); len];
    for (i, ai) in a.iter().enumerate().take(len) {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate().take(len - i) {
            if !bj.is_zero() {
                out[i + j].add_product(ai, bj);
            }
        }
    }
    out
}

/// Inverse of a series whose constant term has inverse `c0_inv`.
pub(crate) fn inv_trunc<R: Ring>(a: &[R], c0_inv: &R, len: usize) -> Vec<R> {
    let mut out: Vec<R> = Vec::with_capacity(len);
    out.push(c0_inv.clone());
    for k in 1..len {
        let mut acc = R::zero();
        for i in 1..=k.min(a.len() - 1) {
            if !a[i].is_zero() {
                acc.add_product(&a[i], &out[k - i]);
            }
        }
        out.push(acc.mul_ref(c0_inv).neg_ref());
    }
    out
}
