//! Randomized check of the supersymmetric Littlewood identity
//!
//! `∏(1 + x_i y_j) / [∏_{i<j}(1 − x_i x_j) ∏_{i≤j}(1 − y_i y_j)] = Σ_{λ∈B} s_λ(x|y)`.
//!
//! Both sides are restricted to the line `x_i = a_i u`, `y_j = b_j u` for
//! random rational directions and compared as series in `u`. Homogeneity
//! puts `s_λ(a|b)` at `u^{|λ|}`.

use num::{BigInt, BigRational};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{invalid, CharacterError};
use crate::partitions::{enum_paired, Bound};
use crate::schur::{super_schur_eval, SuperPoint};
use crate::series::TruncatedSeries;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrialRecord {
    pub point: SuperPoint,
    /// First power of `u` where the sides differ.
    pub first_difference: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CumminsKingReport {
    pub m: usize,
    pub n: usize,
    pub order: usize,
    pub seed: u64,
    pub trials: Vec<TrialRecord>,
}

impl CumminsKingReport {
    pub fn matches(&self) -> bool {
        self.trials.iter().all(|t| t.first_difference.is_none())
    }

    pub fn first_difference(&self) -> Option<usize> {
        self.trials.iter().filter_map(|t| t.first_difference).min()
    }
}

fn quadratic(c: BigRational, order: usize) -> TruncatedSeries {
    TruncatedSeries::one(order) + TruncatedSeries::monomial(c, 2, order)
}

fn product_side(pt: &SuperPoint, order: usize) -> Result<TruncatedSeries, CharacterError> {
    let mut num = TruncatedSeries::one(order);
    for a in &pt.x {
        for b in &pt.y {
            num = num * quadratic(a * b, order);
        }
    }
    let mut den = TruncatedSeries::one(order);
    for (i, a) in pt.x.iter().enumerate() {
        for c in &pt.x[i + 1..] {
            den = den * quadratic(-(a * c), order);
        }
    }
    for (i, b) in pt.y.iter().enumerate() {
        for c in &pt.y[i..] {
            den = den * quadratic(-(b * c), order);
        }
    }
    Ok(num.div(&den)?)
}

fn schur_side(pt: &SuperPoint, order: usize, max_weight: usize) -> TruncatedSeries {
    let terms = enum_paired(Bound::Unbounded, Bound::Unbounded, max_weight.min(order))
        .map(|lambda| (lambda.weight(), super_schur_eval(&lambda, pt)));
    TruncatedSeries::from_terms(order, terms, false)
}

/// One comparison at a fixed point; the Schur side keeps `|λ| ≤ max_weight`.
pub fn cummins_king_trial(pt: &SuperPoint, order: usize, max_weight: usize) -> Result<TrialRecord, CharacterError> {
    let lhs = product_side(pt, order)?;
    let rhs = schur_side(pt, order, max_weight);
    Ok(TrialRecord {
        point: pt.clone(),
        first_difference: lhs.first_difference(&rhs),
    })
}

fn draw(rng: &mut ChaCha8Rng) -> BigRational {
    let mut num = rng.gen_range(1..=5i64);
    if rng.gen_bool(0.5) {
        num = -num;
    }
    let den = rng.gen_range(1..=5i64);
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Runs `trials` comparisons at directions drawn from a seeded generator.
pub fn cummins_king_check(m: usize, n: usize, order: usize, trials: usize, seed: u64) -> Result<CumminsKingReport, CharacterError> {
    if m == 0 || n == 0 {
        return Err(invalid("the check needs m >= 1 and n >= 1"));
    }
    if trials == 0 {
        return Err(invalid("the check needs at least one trial"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut records = Vec::with_capacity(trials);
    for _ in 0..trials {
        let x = (0..m).map(|_| draw(&mut rng)).collect();
        let y = (0..n).map(|_| draw(&mut rng)).collect();
        records.push(cummins_king_trial(&SuperPoint::new(x, y), order, order)?);
    }
    Ok(CumminsKingReport {
        m,
        n,
        order,
        seed,
        trials: records,
    })
}
