//! `osp(1|2n)` irreps with highest weight `(−p/2)^n`: the paraboson Fock
//! spaces. Two routes to `dim_t`: the infinite Schur sum over `ℓ(λ) ≤ p`,
//! and the finite signed numerator `E_{n,p}` over the product denominator.

use num::BigRational;

use super::{invalid, CharacterError, Route};
use crate::partitions::{enum_e_terms, Bound, BoundedPartitions};
use crate::schur::{dim_gl_frobenius, dim_gl_weyl};
use crate::series::{RationalFunction, TruncatedSeries};

/// `E_{n,p}(t,…,t) = Σ (−1)^{|a|+r} dim gl(n)^{(a|a+p)} t^{2|a|+(p+1)r}`.
pub fn e_np_series(n: usize, p: usize, order: usize) -> Result<TruncatedSeries, CharacterError> {
    if n == 0 {
        return Err(invalid("E_{n,p} needs n >= 1"));
    }
    let mut terms = Vec::new();
    for (form, sign) in enum_e_terms(n, p)? {
        let dim = dim_gl_frobenius(n, &form)? * sign.as_i64();
        terms.push((form.weight(), BigRational::from_integer(dim)));
    }
    Ok(TruncatedSeries::from_terms(order, terms, true))
}

/// Highest possible degree of `E_{n,p}`: all arms `0..n−p` present.
fn e_degree_bound(n: usize, p: usize) -> usize {
    let r = n.saturating_sub(p);
    r * (r.saturating_sub(1)) + (p + 1) * r
}

/// `E_{n,p}(t) / ((1−t)^n (1−t²)^{n(n−1)/2})`.
pub fn osp1_closed_form(n: usize, p: usize) -> Result<RationalFunction, CharacterError> {
    let e = e_np_series(n, p, e_degree_bound(n, p))?;
    debug_assert!(e.is_polynomial());
    let pairs = u32::try_from(n * (n - 1) / 2).map_err(|_| invalid("n too large"))?;
    let den = RationalFunction::binomial_power(-1, 1, n as u32).mul(&RationalFunction::binomial_power(-1, 2, pairs));
    Ok(RationalFunction::polynomial(e.coeffs().to_vec()).div(&den)?)
}

pub fn osp1_dim_t(n: usize, p: usize, order: usize, route: Route) -> Result<TruncatedSeries, CharacterError> {
    if n == 0 {
        return Err(invalid("osp(1|2n) needs n >= 1"));
    }
    match route {
        Route::Sum => {
            let rows = n.min(p);
            let mut terms = Vec::new();
            for lambda in BoundedPartitions::new(Bound::Unbounded, Bound::AtMost(rows), order) {
                let d = dim_gl_weyl(n, &lambda)?;
                terms.push((lambda.weight(), BigRational::from_integer(d)));
            }
            Ok(TruncatedSeries::from_terms(order, terms, rows == 0))
        }
        Route::Closed => Ok(osp1_closed_form(n, p)?.expand(order)?),
    }
}
