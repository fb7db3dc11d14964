//! Point evaluation of Schur and supersymmetric Schur functions over exact
//! rationals.

use num::{BigRational, One, Zero};

use super::lr::{lr_coefficient, LrQuery};
use crate::partitions::{Bound, Partition, PartitionsOfWeight};

/// A point `(x_1..x_m | y_1..y_n)` for supersymmetric evaluation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuperPoint {
    pub x: Vec<BigRational>,
    pub y: Vec<BigRational>,
}

impl SuperPoint {
    pub fn new(x: Vec<BigRational>, y: Vec<BigRational>) -> Self {
        SuperPoint { x, y }
    }

    /// `(1^m | (−1)^n)`, where `s_λ` evaluates to the superdimension.
    pub fn unit(m: usize, n: usize) -> Self {
        SuperPoint {
            x: vec![BigRational::one(); m],
            y: vec![-BigRational::one(); n],
        }
    }
}

/// `h_0 ..= h_max` at the point.
fn complete_homogeneous(x: &[BigRational], max: usize) -> Vec<BigRational> {
    let mut h = vec![BigRational::zero(); max + 1];
    h[0] = BigRational::one();
    for xi in x {
        for k in 1..=max {
            let prev = h[k - 1].clone();
            h[k] += xi * prev;
        }
    }
    h
}

fn determinant(mut m: Vec<Vec<BigRational>>) -> BigRational {
    let n = m.len();
    let mut det = BigRational::one();
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return BigRational::zero();
        };
        if pivot != col {
            m.swap(pivot, col);
            det = -det;
        }
        let p = m[col][col].clone();
        det *= &p;
        for r in (col + 1)..n {
            if m[r][col].is_zero() {
                continue;
            }
            let factor = &m[r][col] / &p;
            let (upper, lower) = m.split_at_mut(r);
            for (target, source) in lower[0][col..].iter_mut().zip(&upper[col][col..]) {
                *target -= &factor * source;
            }
        }
    }
    det
}

/// `s_λ(x)` by the Jacobi–Trudi determinant `det(h_{λ_i − i + j})`. Zero
/// when `ℓ(λ)` exceeds the number of variables.
pub fn schur_eval(lambda: &Partition, x: &[BigRational]) -> BigRational {
    let len = lambda.length();
    if len == 0 {
        return BigRational::one();
    }
    if len > x.len() {
        return BigRational::zero();
    }
    let h = complete_homogeneous(x, lambda.first_part() + len);
    let matrix = (1..=len)
        .map(|i| {
            (1..=len)
                .map(|j| {
                    let idx = (lambda.part(i) + j) as isize - i as isize;
                    if idx < 0 {
                        BigRational::zero()
                    } else {
                        h[idx as usize].clone()
                    }
                })
                .collect()
        })
        .collect();
    determinant(matrix)
}

/// `s_λ(x|y) = Σ c^λ_{μ,ν} s_μ(x) s_{ν'}(y)`; identically zero outside the
/// `(m, n)`-hook.
pub fn super_schur_eval(lambda: &Partition, pt: &SuperPoint) -> BigRational {
    if !lambda.in_hook(pt.x.len(), pt.y.len()) {
        return BigRational::zero();
    }
    lr_expansion(lambda, pt)
}

/// The Littlewood–Richardson sum itself, without the hook shortcut.
pub(crate) fn lr_expansion(lambda: &Partition, pt: &SuperPoint) -> BigRational {
    let (m, n) = (pt.x.len(), pt.y.len());
    let total = lambda.weight();
    let mut acc = BigRational::zero();
    for w in 0..=total {
        let inners: Vec<Partition> = PartitionsOfWeight::new(w, lambda.first_part().into(), m.into())
            .filter(|mu| lambda.contains(mu))
            .collect();
        if inners.is_empty() {
            continue;
        }
        let contents: Vec<Partition> = PartitionsOfWeight::new(total - w, n.into(), Bound::Unbounded)
            .filter(|nu| lambda.contains(nu))
            .collect();
        for mu in &inners {
            let sx = schur_eval(mu, &pt.x);
            if sx.is_zero() {
                continue;
            }
            for nu in &contents {
                let c = lr_coefficient(&LrQuery::new(lambda.clone(), mu.clone(), nu.clone()));
                if c == 0 {
                    continue;
                }
                let sy = schur_eval(&nu.conjugate(), &pt.y);
                acc += &sx * sy * BigRational::from_integer(c.into());
            }
        }
    }
    acc
}
