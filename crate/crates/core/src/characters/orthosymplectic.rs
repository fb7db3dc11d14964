//! Superdimension series of the `osp(2m+1|2n)` and `osp(2m|2n)` irreps
//! `[0,…,0,p]`, summed from their branching to `gl(m|n)`: each covariant
//! `gl(m|n)` irrep `λ` at level `|λ|` contributes its superdimension.

use num::BigRational;

use super::CharacterError;
use crate::partitions::{enum_paired, Bound, BoundedPartitions, Partition};
use crate::schur::sdim_gl;
use crate::series::TruncatedSeries;

/// Largest level with a nonzero `gl(m|n)` superdimension when the sum is
/// finite: for `m ≥ n` only `ℓ(λ) ≤ m − n` survives, inside a width-`p` box.
fn finite_support(m: usize, n: usize, p: usize) -> Option<usize> {
    if p == 0 {
        Some(0)
    } else if m >= n {
        Some((m - n) * p)
    } else {
        None
    }
}

fn sdim_sum<I>(m: usize, n: usize, p: usize, order: usize, shapes: I) -> TruncatedSeries
where
    I: Iterator<Item = Partition>,
{
    let terms = shapes
        .filter(|lambda| lambda.in_hook(m, n))
        .map(|lambda| (lambda.weight(), BigRational::from_integer(sdim_gl(m, n, &lambda))));
    let complete = finite_support(m, n, p).is_some_and(|d| d <= order);
    TruncatedSeries::from_terms(order, terms, complete)
}

/// `sdim_t [0,…,0,p]` of `osp(2m+1|2n)`: `Σ_{λ_1 ≤ p} sdim gl(m|n)^λ t^{|λ|}`.
pub fn ospb_sdim_t(m: usize, n: usize, p: usize, order: usize) -> Result<TruncatedSeries, CharacterError> {
    let shapes = BoundedPartitions::new(Bound::AtMost(p), Bound::Unbounded, order);
    Ok(sdim_sum(m, n, p, order, shapes))
}

/// `sdim_t [0,…,0,p]` of `osp(2m|2n)`: the same sum restricted to shapes
/// whose parts come in pairs.
pub fn ospd_sdim_t(m: usize, n: usize, p: usize, order: usize) -> Result<TruncatedSeries, CharacterError> {
    let shapes = enum_paired(Bound::AtMost(p), Bound::Unbounded, order);
    Ok(sdim_sum(m, n, p, order, shapes))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(c: &[i64], order: usize) -> TruncatedSeries {
        TruncatedSeries::from_integers(c, order)
    }

    #[test]
    fn equal_rank_is_trivial() {
        for n in 0..4 {
            for p in 0..4 {
                let b = ospb_sdim_t(n, n, p, 16).unwrap();
                assert_eq!(b, TruncatedSeries::one(16));
                assert!(b.is_polynomial());
                assert_eq!(ospd_sdim_t(n, n, p, 16).unwrap(), TruncatedSeries::one(16));
            }
        }
    }

    #[test]
    fn odd_examples() {
        let s = ospb_sdim_t(4, 1, 1, 8).unwrap();
        assert_eq!(s, int(&[1, 3, 3, 1], 8));
        assert!(s.is_polynomial());
        assert_eq!(ospb_sdim_t(5, 2, 2, 8).unwrap(), int(&[1, 3, 9, 9, 9, 3, 1], 8));
        let s = ospb_sdim_t(1, 4, 2, 4).unwrap();
        assert_eq!(s, int(&[1, -3, 9, -18, 36], 4));
        assert!(!s.is_polynomial());
        assert_eq!(ospb_sdim_t(0, 3, 1, 4).unwrap(), int(&[1, -3, 6, -10, 15], 4));
    }

    #[test]
    fn even_examples() {
        assert_eq!(ospd_sdim_t(6, 1, 1, 8).unwrap(), int(&[1, 0, 10, 0, 5], 8));
        assert_eq!(ospd_sdim_t(7, 2, 2, 10).unwrap(), int(&[1, 0, 10, 0, 55, 0, 45, 0, 15], 10));
        assert_eq!(ospd_sdim_t(1, 4, 1, 8).unwrap(), int(&[1, 0, 6, 0, 15, 0, 28, 0, 45], 8));
        assert_eq!(ospd_sdim_t(2, 5, 2, 8).unwrap(), int(&[1, 0, 6, 0, 21, 0, 55, 0, 120], 8));
    }

    #[test]
    fn truncated_polynomial_is_not_flagged() {
        let s = ospb_sdim_t(5, 2, 2, 4).unwrap();
        assert!(!s.is_polynomial());
        assert_eq!(s, int(&[1, 3, 9, 9, 9], 4));
    }
}
