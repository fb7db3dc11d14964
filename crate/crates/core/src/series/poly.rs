//! Dense polynomial helpers over exact rationals, lowest degree first.

use num::{BigRational, Zero};

pub(crate) fn trim(mut p: Vec<BigRational>) -> Vec<BigRational> {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

pub(crate) fn mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

pub(crate) fn add(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let len = a.len().max(b.len());
    let zero = BigRational::zero();
    trim(
        (0..len)
            .map(|k| a.get(k).unwrap_or(&zero) + b.get(k).unwrap_or(&zero))
            .collect(),
    )
}

pub(crate) fn eval(p: &[BigRational], t: &BigRational) -> BigRational {
    p.iter()
        .rev()
        .fold(BigRational::zero(), |acc, c| acc * t + c)
}

/// Quotient by `(x − root)`; the caller guarantees `root` is a root.
pub(crate) fn deflate(p: &[BigRational], root: &BigRational) -> Vec<BigRational> {
    if p.len() <= 1 {
        return Vec::new();
    }
    let mut quotient = vec![BigRational::zero(); p.len() - 1];
    let mut carry = BigRational::zero();
    for k in (1..p.len()).rev() {
        carry = &p[k] + carry * root;
        quotient[k - 1] = carry.clone();
    }
    trim(quotient)
}

/// Whether `quotient · divisor` reproduces `dividend` exactly as polynomials
/// (all three given as coefficient windows with implicit zero tails).
pub(crate) fn divides_exactly(
    quotient: &[BigRational],
    divisor: &[BigRational],
    dividend: &[BigRational],
) -> bool {
    let product = mul(&trim(quotient.to_vec()), &trim(divisor.to_vec()));
    product == trim(dividend.to_vec())
}
