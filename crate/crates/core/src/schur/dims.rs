//! Dimensions of `gl(n)` irreps by three independent formulas, and
//! superdimensions of covariant `gl(m|n)` irreps.

use num::{BigInt, Integer, One, Zero};

use super::SchurError;
use crate::partitions::{FrobeniusForm, Partition};

fn exact_quotient(num: BigInt, den: BigInt, formula: &str) -> BigInt {
    let (q, r) = num.div_rem(&den);
    assert!(r.is_zero(), "{formula}: {num} is not divisible by {den}");
    q
}

fn factorial(k: usize) -> BigInt {
    (1..=k).fold(BigInt::one(), |acc, i| acc * i)
}

fn check_rank(n: usize) -> Result<(), SchurError> {
    if n == 0 {
        Err(SchurError::ZeroRank)
    } else {
        Ok(())
    }
}

/// Weyl's product `∏_{i<j} (λ_i − λ_j + j − i)/(j − i)`, set to zero when
/// `ℓ(λ) > n`.
pub fn dim_gl_weyl(n: usize, lambda: &Partition) -> Result<BigInt, SchurError> {
    check_rank(n)?;
    if lambda.length() > n {
        return Ok(BigInt::zero());
    }
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 1..=n {
        for j in (i + 1)..=n {
            num *= lambda.part(i) - lambda.part(j) + j - i;
            den *= j - i;
        }
    }
    Ok(exact_quotient(num, den, "Weyl dimension"))
}

/// Hook-content product `∏_{(i,j)∈λ} (n + j − i)/h(i,j)`; the box `(n+1, 1)`
/// contributes a zero factor whenever `ℓ(λ) > n`.
pub fn dim_gl_hook(n: usize, lambda: &Partition) -> Result<BigInt, SchurError> {
    check_rank(n)?;
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for (row, &len) in lambda.parts().iter().enumerate() {
        let i = row + 1;
        for j in 1..=len {
            num *= BigInt::from(n + j) - BigInt::from(i);
            den *= lambda.hook_length(i, j).expect("box lies in the diagram");
        }
    }
    Ok(exact_quotient(num, den, "hook-content dimension"))
}

/// Dimension from Frobenius coordinates `(a | b)`:
///
/// ```text
/// ∏ (n+a_i)!/(n−b_i−1)!  ·  ∏_{i<j} (a_i−a_j)(b_i−b_j)
/// ─────────────────────────────────────────────────────
///        ∏ a_i! b_i!  ·  ∏_{i,j} (a_i+b_j+1)
/// ```
///
/// Zero when some leg `b_i ≥ n`.
pub fn dim_gl_frobenius(n: usize, form: &FrobeniusForm) -> Result<BigInt, SchurError> {
    check_rank(n)?;
    let (arms, legs) = (form.arms(), form.legs());
    if legs.iter().any(|&b| b >= n) {
        return Ok(BigInt::zero());
    }
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for (&a, &b) in arms.iter().zip(legs) {
        num *= factorial(n + a);
        den *= factorial(n - b - 1) * factorial(a) * factorial(b);
    }
    for (i, &ai) in arms.iter().enumerate() {
        for &bj in legs {
            den *= ai + bj + 1;
        }
        for j in (i + 1)..arms.len() {
            num *= (ai - arms[j]) * (legs[i] - legs[j]);
        }
    }
    Ok(exact_quotient(num, den, "Frobenius dimension"))
}

/// Superdimension of the covariant `gl(m|n)` irrep `λ`: with `k = |m − n|`,
/// `dim gl(k)^λ` when `m ≥ n` and `(−1)^{|λ|} dim gl(k)^{λ'}` when `m < n`.
/// For `m = n` only the trivial module survives, with superdimension 1.
pub fn sdim_gl(m: usize, n: usize, lambda: &Partition) -> BigInt {
    if m == n {
        return if lambda.is_empty() {
            BigInt::one()
        } else {
            BigInt::zero()
        };
    }
    if m > n {
        dim_gl_weyl(m - n, lambda).expect("rank is positive")
    } else {
        let d = dim_gl_weyl(n - m, &lambda.conjugate()).expect("rank is positive");
        if lambda.weight() % 2 == 1 {
            -d
        } else {
            d
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::BoundedPartitions;
    use crate::partitions::Bound;

    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    /// Semistandard tableaux of shape `λ` with entries in `1..=n`, counted
    /// by exhaustive filling.
    fn count_ssyt(lambda: &Partition, n: usize) -> u64 {
        fn go(n: usize, cells: &[(usize, usize)], idx: usize, t: &mut Vec<Vec<usize>>) -> u64 {
            if idx == cells.len() {
                return 1;
            }
            let (i, j) = cells[idx];
            let lo_row = if j > 0 { t[i][j - 1] } else { 1 };
            let lo_col = if i > 0 { t[i - 1][j] + 1 } else { 1 };
            let mut total = 0;
            for v in lo_row.max(lo_col)..=n {
                t[i][j] = v;
                total += go(n, cells, idx + 1, t);
            }
            t[i][j] = 0;
            total
        }
        let shape = lambda.parts();
        let cells: Vec<_> = shape
            .iter()
            .enumerate()
            .flat_map(|(i, &l)| (0..l).map(move |j| (i, j)))
            .collect();
        let mut t: Vec<Vec<usize>> = shape.iter().map(|&l| vec![0; l]).collect();
        go(n, &cells, 0, &mut t)
    }

    #[test]
    fn weyl_examples() {
        assert_eq!(dim_gl_weyl(5, &part("5,4,4,2")).unwrap(), 1701.into());
        assert_eq!(dim_gl_weyl(3, &Partition::empty()).unwrap(), 1.into());
        assert_eq!(dim_gl_weyl(2, &part("1,1,1")).unwrap(), 0.into());
        assert_eq!(dim_gl_weyl(0, &part("1")), Err(SchurError::ZeroRank));
    }

    #[test]
    fn hook_examples() {
        assert_eq!(dim_gl_hook(5, &part("5,4,4,2")).unwrap(), 1701.into());
        assert_eq!(dim_gl_hook(3, &part("2,1")).unwrap(), 8.into());
        assert_eq!(count_ssyt(&part("2,1"), 3), 8);
        for k in 0..=10 {
            assert_eq!(dim_gl_hook(1, &Partition::row(k)).unwrap(), 1.into());
        }
        assert_eq!(dim_gl_hook(2, &part("1,1,1")).unwrap(), 0.into());
        assert!(dim_gl_hook(0, &part("1")).is_err());
    }

    #[test]
    fn frobenius_examples() {
        let f = part("2,1").frobenius();
        assert_eq!(dim_gl_frobenius(3, &f).unwrap(), 8.into());
        assert_eq!(dim_gl_frobenius(5, &part("5,4,4,2").frobenius()).unwrap(), 1701.into());
        for n in 1..5 {
            assert_eq!(dim_gl_frobenius(n, &FrobeniusForm::default()).unwrap(), 1.into());
        }
        assert!(dim_gl_frobenius(0, &FrobeniusForm::default()).is_err());
    }

    #[test]
    fn dimensions_count_tableaux() {
        for lambda in BoundedPartitions::new(Bound::Unbounded, Bound::Unbounded, 6) {
            for n in 1..=4 {
                let expected = BigInt::from(count_ssyt(&lambda, n));
                assert_eq!(dim_gl_weyl(n, &lambda).unwrap(), expected, "{lambda} n={n}");
            }
        }
    }

    #[test]
    fn superdimension_examples() {
        assert_eq!(sdim_gl(2, 2, &part("3,1")), 0.into());
        assert_eq!(sdim_gl(2, 2, &Partition::empty()), 1.into());
        assert_eq!(sdim_gl(3, 1, &part("2,1")), 2.into());
        assert_eq!(sdim_gl(1, 3, &part("2,1")), (-2).into());
        // outside the hook the formula already vanishes
        assert_eq!(sdim_gl(4, 1, &part("2,2,2,2,2")), 0.into());
        assert_eq!(sdim_gl(1, 3, &part("5,5")), 0.into());
    }
}
