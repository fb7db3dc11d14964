//! Classical counterparts: `so(2k+1)`, `so(2k)` and `sp(2k)` irreps as
//! sums of `gl(k)` dimensions over their branching, plus the superpolynomial
//! spinor space `P^{m|n}`.

use num::{BigInt, BigRational, One};

use super::{invalid, CharacterError, Chirality};
use crate::partitions::{enum_even, enum_paired, enum_rectangle, Bound, Partition};
use crate::schur::dim_gl_weyl;
use crate::series::{RationalFunction, TruncatedSeries};

fn gl_sum<I>(k: usize, order: usize, complete: bool, shapes: I) -> Result<TruncatedSeries, CharacterError>
where
    I: IntoIterator<Item = (usize, Partition)>,
{
    let mut terms = Vec::new();
    for (level, shape) in shapes {
        terms.push((level, BigRational::from_integer(dim_gl_weyl(k, &shape)?)));
    }
    Ok(TruncatedSeries::from_terms(order, terms, complete))
}

/// `dim_t [0,…,0,p]` of `so(2k+1)`: `gl(k)` irreps filling the `k × p`
/// rectangle. `k = 0` is `so(1)`, whose only irrep is trivial.
pub fn so_odd_dim_t(k: usize, p: usize, order: usize) -> Result<TruncatedSeries, CharacterError> {
    if k == 0 {
        return Ok(TruncatedSeries::one(order));
    }
    gl_sum(k, order, true, enum_rectangle(p, k).map(|l| (l.weight(), l)))
}

/// `dim_t` of the `so(2k)` irrep with label `[0,…,0,p]` (`Last`) or
/// `[0,…,p,0]` (`NextToLast`). Depending on the parity of `k`, one label is
/// a sum over paired shapes `λ` in the `k × p` rectangle, the other over
/// shapes `(p, λ)` with `λ` paired; the latter are graded by `|λ|`.
pub fn so_even_dim_t(k: usize, p: usize, chirality: Chirality, order: usize) -> Result<TruncatedSeries, CharacterError> {
    if k < 2 {
        return Err(invalid(format!("so(2k) needs k >= 2, got k = {k}")));
    }
    let paired = |rows: usize| enum_paired(Bound::AtMost(p), Bound::AtMost(rows), rows * p);
    let plain_rows = if k.is_multiple_of(2) { k } else { k - 1 };
    let prepended_rows = if k.is_multiple_of(2) { k - 2 } else { k - 1 };
    let prepended = k.is_multiple_of(2) && chirality == Chirality::NextToLast || !k.is_multiple_of(2) && chirality == Chirality::Last;
    if prepended {
        let shapes = paired(prepended_rows)
            .map(|l| Ok((l.weight(), l.prepend(p)?)))
            .collect::<Result<Vec<_>, CharacterError>>()?;
        gl_sum(k, order, true, shapes)
    } else {
        gl_sum(k, order, true, paired(plain_rows).map(|l| (l.weight(), l)))
    }
}

/// `dim_t` of the infinite-dimensional `sp(2k)` irrep with highest weight
/// `(−p/2)^k`: `gl(k)` irreps with even parts and at most `min(p, k)` rows.
pub fn sp_dim_t(k: usize, p: usize, order: usize) -> Result<TruncatedSeries, CharacterError> {
    if k == 0 {
        return Err(invalid("sp(2k) needs k >= 1"));
    }
    let rows = p.min(k);
    gl_sum(k, order, rows == 0, enum_even(Bound::AtMost(rows), order).map(|l| (l.weight(), l)))
}

/// `½(1/(1−t)^k + 1/(1+t)^k)`, the `p = 1` case of [`sp_dim_t`].
pub fn sp_closed_form(k: usize) -> Result<RationalFunction, CharacterError> {
    let k = u32::try_from(k).map_err(|_| invalid("k too large"))?;
    let one = RationalFunction::polynomial(vec![BigRational::one()]);
    let minus = one.div(&RationalFunction::binomial_power(-1, 1, k))?;
    let plus = one.div(&RationalFunction::binomial_power(1, 1, k))?;
    Ok(minus.add(&plus).scale(&BigRational::new(1.into(), 2.into())))
}

/// `dim_t P^{m|n}`: level `j` holds the degree-`j` monomials in `n`
/// commuting variables times the `2^m`-dimensional Grassmann algebra.
pub fn spinor_tdim(m: usize, n: usize, order: usize) -> TruncatedSeries {
    let grassmann = BigInt::one() << m;
    let terms = (0..=order).map(|j| {
        let monomials = if n == 0 {
            BigInt::from(u8::from(j == 0))
        } else {
            binomial(n + j - 1, j)
        };
        (j, BigRational::from_integer(&grassmann * monomials))
    });
    TruncatedSeries::from_terms(order, terms, n == 0)
}

fn binomial(n: usize, k: usize) -> BigInt {
    (0..k).fold(BigInt::one(), |acc, i| acc * (n - i) / (i + 1))
}

/// `2^m / (1−t)^n`.
pub fn spinor_closed_form(m: usize, n: usize) -> Result<RationalFunction, CharacterError> {
    let n = u32::try_from(n).map_err(|_| invalid("n too large"))?;
    let num = RationalFunction::polynomial(vec![BigRational::from_integer(BigInt::one() << m)]);
    Ok(num.div(&RationalFunction::binomial_power(-1, 1, n))?)
}

/// `sdim P^{m|n} = dim_{−1} P^{m|n}`, which is `2^{m−n}`.
pub fn spinor_sdim(m: usize, n: usize) -> Result<BigRational, CharacterError> {
    spinor_closed_form(m, n)?
        .value_at(&-BigRational::one())
        .ok_or_else(|| invalid("spinor superdimension has a pole"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(c: &[i64], order: usize) -> TruncatedSeries {
        TruncatedSeries::from_integers(c, order)
    }

    fn total(s: &TruncatedSeries) -> BigRational {
        let e = s.eval_at_one();
        assert!(e.polynomial);
        e.value
    }

    #[test]
    fn so_odd_examples() {
        let s = so_odd_dim_t(3, 2, 8).unwrap();
        assert_eq!(s, int(&[1, 3, 9, 9, 9, 3, 1], 8));
        assert_eq!(total(&s), BigRational::from_integer(35.into()));
        assert_eq!(total(&so_odd_dim_t(3, 1, 8).unwrap()), BigRational::from_integer(8.into()));
        for k in 1..5 {
            assert_eq!(so_odd_dim_t(k, 0, 8).unwrap(), TruncatedSeries::one(8));
        }
    }

    #[test]
    fn so_even_examples() {
        let s = so_even_dim_t(5, 2, Chirality::NextToLast, 10).unwrap();
        assert_eq!(s, int(&[1, 0, 10, 0, 55, 0, 45, 0, 15], 10));
        assert_eq!(total(&s), BigRational::from_integer(126.into()));
        let s = so_even_dim_t(5, 1, Chirality::NextToLast, 10).unwrap();
        assert_eq!(s, int(&[1, 0, 10, 0, 5], 10));
        let s = so_even_dim_t(2, 1, Chirality::Last, 6).unwrap();
        assert_eq!(s, int(&[1, 0, 1], 6));
        assert!(so_even_dim_t(1, 1, Chirality::Last, 6).is_err());
    }

    #[test]
    fn sp_examples() {
        assert_eq!(sp_dim_t(3, 1, 8).unwrap(), int(&[1, 0, 6, 0, 15, 0, 28, 0, 45], 8));
        assert_eq!(sp_dim_t(3, 2, 8).unwrap(), int(&[1, 0, 6, 0, 21, 0, 55, 0, 120], 8));
        assert_eq!(sp_dim_t(4, 0, 8).unwrap(), TruncatedSeries::one(8));
        for k in 1..5 {
            assert_eq!(sp_dim_t(k, 1, 12).unwrap(), sp_closed_form(k).unwrap().expand(12).unwrap());
        }
    }

    #[test]
    fn spinor_space() {
        for n in 0..5 {
            let s = spinor_tdim(0, n, 10);
            for j in 0..=10usize {
                let expected = if n == 0 { BigInt::from(u8::from(j == 0)) } else { binomial(n + j - 1, j) };
                assert_eq!(s.coeff(j).unwrap(), &BigRational::from_integer(expected));
            }
        }
        for m in 0..4 {
            for n in 0..4 {
                assert_eq!(spinor_tdim(m, n, 10), spinor_closed_form(m, n).unwrap().expand(10).unwrap());
                let expected = BigRational::from_integer(2.into()).pow(m as i32 - n as i32);
                assert_eq!(spinor_sdim(m, n).unwrap(), expected);
            }
            assert_eq!(spinor_sdim(m, m).unwrap(), BigRational::one());
        }
    }
}
