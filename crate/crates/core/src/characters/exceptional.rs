//! `D(2,1;α)` irreps `[0,0,p]`, graded by the `su(1,1)` diagonal element.
//!
//! Each even component is a negative discrete series of `su(1,1)` tensored
//! with an `su(2) ⊕ su(2)` irrep `(a,b)`. Its top weight sits `shift` steps
//! below `μ = −αp/(α+1)` and it occupies every second level from there. The
//! value of `α` only moves `μ`, so it never enters the series.

use num::{BigInt, BigRational, One};

use super::{invalid, CharacterError};
use crate::series::{RationalFunction, TruncatedSeries};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EvenComponent {
    pub shift: usize,
    pub spins: (usize, usize),
}

impl EvenComponent {
    /// Dimension of the `su(2) ⊕ su(2)` factor.
    pub fn dim(&self) -> usize {
        (self.spins.0 + 1) * (self.spins.1 + 1)
    }
}

/// Even-subalgebra decomposition of `[0,0,p]`.
pub fn d21_decomposition(p: usize) -> Result<Vec<EvenComponent>, CharacterError> {
    let c = |shift, a, b| EvenComponent { shift, spins: (a, b) };
    match p {
        0 => Err(invalid("D(2,1;alpha) needs p >= 1")),
        1 => Ok(vec![c(0, 0, 1), c(1, 1, 0)]),
        _ => Ok(vec![c(0, 0, p), c(1, 1, p - 1), c(2, 0, p - 2)]),
    }
}

/// `sdim_t [0,0,p]`, assembled level by level from the decomposition. Odd
/// levels are odd, so they enter with a minus sign.
pub fn d21_sdim_t(p: usize, order: usize) -> Result<TruncatedSeries, CharacterError> {
    let mut terms = Vec::new();
    for component in d21_decomposition(p)? {
        let dim = BigInt::from(component.dim());
        for level in (component.shift..=order).step_by(2) {
            let signed = if level % 2 == 0 { dim.clone() } else { -dim.clone() };
            terms.push((level, BigRational::from_integer(signed)));
        }
    }
    Ok(TruncatedSeries::from_terms(order, terms, false))
}

/// `(1 − p) + 2p/(1 + t)`.
pub fn d21_closed_form(p: usize) -> Result<RationalFunction, CharacterError> {
    if p == 0 {
        return Err(invalid("D(2,1;alpha) needs p >= 1"));
    }
    let p = BigRational::from_integer(p.into());
    let tail = RationalFunction::polynomial(vec![&p + &p]).div(&RationalFunction::binomial_power(1, 1, 1))?;
    Ok(RationalFunction::polynomial(vec![BigRational::one() - p]).add(&tail))
}
