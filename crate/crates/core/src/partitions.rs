//! Integer partitions, Frobenius coordinates and the constrained partition
//! enumerators that every character sum iterates over.
//!
//! A [`Partition`] is stored without trailing zeros, so the zero partition
//! `(0)` is the empty sequence. Box coordinates `(i, j)` are 1-based: row
//! `i`, column `j`.
//!
//! All enumerators yield partitions by ascending weight and, within one
//! weight, in lexicographically descending order. Series accumulation relies
//! on this to stop at the truncation order.

use std::cmp::Ordering;
use std::fmt;
use std::iter::Map;
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionError {
    #[error("parts must be weakly decreasing, got {0:?}")]
    NotDecreasing(Vec<usize>),
    #[error("{which} must be strictly decreasing, got {values:?}")]
    NotStrictlyDecreasing { which: &'static str, values: Vec<usize> },
    #[error("arms and legs have different lengths ({arms} vs {legs})")]
    RankMismatch { arms: usize, legs: usize },
    #[error("box ({row}, {col}) is not in the diagram of {partition}")]
    BoxOutside { row: usize, col: usize, partition: Partition },
    #[error("cannot prepend part {part} to {partition}: it is smaller than the first part")]
    PrependTooSmall { part: usize, partition: Partition },
    #[error("E-sum over 2^{0} terms is too large to enumerate")]
    TooManyTerms(usize),
    #[error("malformed partition {0:?}")]
    Parse(String),
    #[error("weight of {0:?} overflows")]
    WeightOverflow(Vec<usize>),
}

/// A weakly decreasing sequence of positive integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition, dropping trailing zeros.
    pub fn new(mut parts: Vec<usize>) -> Result<Self, PartitionError> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(PartitionError::NotDecreasing(parts));
        }
        if parts.iter().try_fold(0usize, |acc, &x| acc.checked_add(x)).is_none() {
            return Err(PartitionError::WeightOverflow(parts));
        }
        Ok(Partition { parts })
    }

    /// Caller guarantees `parts` is weakly decreasing with no zeros.
    fn from_sorted(parts: Vec<usize>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(parts.last() != Some(&0));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The one-row partition `(k)`.
    pub fn row(k: usize) -> Self {
        if k == 0 {
            Self::empty()
        } else {
            Partition { parts: vec![k] }
        }
    }

    /// The one-column partition `(1^k)`.
    pub fn column(k: usize) -> Self {
        Partition { parts: vec![1; k] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of nonzero parts, written ℓ(λ).
    pub fn length(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The `i`-th part, 1-based, with `λ_i = 0` beyond the length.
    pub fn part(&self, i: usize) -> usize {
        assert!(i >= 1, "parts are indexed from 1");
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    pub fn first_part(&self) -> usize {
        self.parts.first().copied().unwrap_or(0)
    }

    /// Transpose of the Young diagram: `λ'_j = #{i : λ_i ≥ j}`.
    pub fn conjugate(&self) -> Partition {
        let cols = (1..=self.first_part())
            .map(|j| self.parts.iter().take_while(|&&p| p >= j).count())
            .collect();
        Partition::from_sorted(cols)
    }

    /// Number of diagonal boxes.
    pub fn frobenius_rank(&self) -> usize {
        self.parts
            .iter()
            .enumerate()
            .take_while(|&(i, &p)| p > i)
            .count()
    }

    pub fn frobenius(&self) -> FrobeniusForm {
        let conj = self.conjugate();
        let r = self.frobenius_rank();
        let arms = (0..r).map(|k| self.parts[k] - (k + 1)).collect();
        let legs = (0..r).map(|k| conj.parts[k] - (k + 1)).collect();
        FrobeniusForm { arms, legs }
    }

    pub fn contains_box(&self, i: usize, j: usize) -> bool {
        i >= 1 && j >= 1 && self.part(i) >= j
    }

    /// `h(i,j) = λ_i + λ'_j − i − j + 1` for a box of the diagram.
    pub fn hook_length(&self, i: usize, j: usize) -> Result<usize, PartitionError> {
        if !self.contains_box(i, j) {
            return Err(PartitionError::BoxOutside {
                row: i,
                col: j,
                partition: self.clone(),
            });
        }
        let leg = self.parts.iter().skip(i).take_while(|&&p| p >= j).count();
        Ok(self.part(i) - j + leg + 1)
    }

    /// Diagram containment `other ⊆ self`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.length() <= self.length()
            && other.parts.iter().zip(&self.parts).all(|(a, b)| a <= b)
    }

    /// Membership in the `(m, n)`-hook: `λ_{m+1} ≤ n`.
    pub fn in_hook(&self, m: usize, n: usize) -> bool {
        self.part(m + 1) <= n
    }

    /// Every distinct part occurs an even number of times.
    pub fn has_paired_parts(&self) -> bool {
        self.parts
            .chunk_by(|a, b| a == b)
            .all(|run| run.len() % 2 == 0)
    }

    pub fn has_even_parts(&self) -> bool {
        self.parts.iter().all(|p| p % 2 == 0)
    }

    /// The shape `(p, λ)` obtained by putting a new first row of length `p`
    /// on top of the diagram.
    pub fn prepend(&self, p: usize) -> Result<Partition, PartitionError> {
        if p < self.first_part() {
            return Err(PartitionError::PrependTooSmall {
                part: p,
                partition: self.clone(),
            });
        }
        if p == 0 {
            return Ok(Partition::empty());
        }
        let mut parts = Vec::with_capacity(self.length() + 1);
        parts.push(p);
        parts.extend_from_slice(&self.parts);
        Ok(Partition::from_sorted(parts))
    }

    /// Each part repeated twice, mapping partitions onto the paired-parts set.
    fn with_doubled_multiplicities(self) -> Partition {
        let parts = self.parts.iter().flat_map(|&p| [p, p]).collect();
        Partition::from_sorted(parts)
    }

    /// Each part doubled, mapping partitions onto the even-parts set.
    fn with_doubled_parts(self) -> Partition {
        Partition::from_sorted(self.parts.iter().map(|p| 2 * p).collect())
    }
}

/// Weight first, then lexicographically descending within a weight: the
/// order in which the enumerators yield partitions.
impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight()
            .cmp(&other.weight())
            .then_with(|| other.parts.cmp(&self.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "(0)");
        }
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// Parses comma-separated parts such as `5,4,4,2`, optionally wrapped in
/// parentheses. `0`, `()` and the empty string all denote the zero partition.
impl FromStr for Partition {
    type Err = PartitionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let trimmed = s.trim();
        let inner = trimmed
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .unwrap_or(trimmed)
            .trim();
        if inner.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = inner
            .split(',')
            .map(|tok| tok.trim().parse::<usize>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| PartitionError::Parse(s.to_string()))?;
        Partition::new(parts)
    }
}

/// Frobenius coordinates `(a_1 … a_r | b_1 … b_r)`: arm and leg lengths of
/// the diagonal boxes.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct FrobeniusForm {
    arms: Vec<usize>,
    legs: Vec<usize>,
}

impl FrobeniusForm {
    pub fn new(arms: Vec<usize>, legs: Vec<usize>) -> Result<Self, PartitionError> {
        if arms.len() != legs.len() {
            return Err(PartitionError::RankMismatch {
                arms: arms.len(),
                legs: legs.len(),
            });
        }
        for (which, values) in [("arms", &arms), ("legs", &legs)] {
            if values.windows(2).any(|w| w[0] <= w[1]) {
                return Err(PartitionError::NotStrictlyDecreasing {
                    which,
                    values: values.clone(),
                });
            }
        }
        let weight = arms
            .iter()
            .chain(&legs)
            .try_fold(arms.len(), |acc, &x| acc.checked_add(x));
        if weight.is_none() {
            return Err(PartitionError::WeightOverflow(arms.into_iter().chain(legs).collect()));
        }
        Ok(FrobeniusForm { arms, legs })
    }

    pub fn rank(&self) -> usize {
        self.arms.len()
    }

    pub fn arms(&self) -> &[usize] {
        &self.arms
    }

    pub fn legs(&self) -> &[usize] {
        &self.legs
    }

    /// `|λ| = r + Σa + Σb`.
    pub fn weight(&self) -> usize {
        self.rank() + self.arms.iter().sum::<usize>() + self.legs.iter().sum::<usize>()
    }

    pub fn to_partition(&self) -> Partition {
        let r = self.rank();
        // Row k ≤ r holds a_k + k boxes; below the diagonal, row i counts the
        // columns j ≤ r whose length b_j + j reaches it.
        let below = self
            .legs
            .iter()
            .enumerate()
            .map(|(j, b)| b + j + 1)
            .max()
            .unwrap_or(0);
        let mut parts: Vec<usize> = self.arms.iter().enumerate().map(|(k, a)| a + k + 1).collect();
        for i in (r + 1)..=below {
            let count = self
                .legs
                .iter()
                .enumerate()
                .filter(|&(j, b)| b + j + 1 >= i)
                .count();
            parts.push(count);
        }
        Partition::from_sorted(parts)
    }
}

impl From<&Partition> for FrobeniusForm {
    fn from(p: &Partition) -> Self {
        p.frobenius()
    }
}

impl fmt::Display for FrobeniusForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[usize]| {
            v.iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(" ")
        };
        write!(f, "({} | {})", join(&self.arms), join(&self.legs))
    }
}

/// Parses `(4 2 1 | 3 2 0)`; commas may replace spaces and the parentheses
/// are optional. `( | )` is the rank-zero form.
impl FromStr for FrobeniusForm {
    type Err = PartitionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || PartitionError::Parse(s.to_string());
        let trimmed = s.trim();
        let inner = trimmed
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .unwrap_or(trimmed);
        let (arms, legs) = inner.split_once('|').ok_or_else(bad)?;
        let numbers = |side: &str| {
            side.split(|c: char| c == ',' || c.is_whitespace())
                .filter(|tok| !tok.is_empty())
                .map(|tok| tok.parse::<usize>().map_err(|_| bad()))
                .collect::<Result<Vec<_>, _>>()
        };
        FrobeniusForm::new(numbers(arms)?, numbers(legs)?)
    }
}

/// An enumeration bound that may be absent. Infinite enumerations are always
/// cut by a finite weight bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Bound {
    AtMost(usize),
    Unbounded,
}

impl Bound {
    fn resolve(self, weight: usize) -> usize {
        match self {
            Bound::AtMost(b) => b.min(weight),
            Bound::Unbounded => weight,
        }
    }

    fn halve(self) -> Bound {
        match self {
            Bound::AtMost(b) => Bound::AtMost(b / 2),
            Bound::Unbounded => Bound::Unbounded,
        }
    }
}

impl From<usize> for Bound {
    fn from(b: usize) -> Self {
        Bound::AtMost(b)
    }
}

/// Partitions of a fixed weight with bounded first part and length, in
/// lexicographically descending order.
#[derive(Debug, Clone)]
pub struct PartitionsOfWeight {
    weight: usize,
    max_part: usize,
    max_len: usize,
    state: Option<Vec<usize>>,
    started: bool,
}

impl PartitionsOfWeight {
    pub fn new(weight: usize, max_part: Bound, max_len: Bound) -> Self {
        PartitionsOfWeight {
            weight,
            max_part: max_part.resolve(weight),
            max_len: max_len.resolve(weight),
            state: None,
            started: false,
        }
    }

    /// Greedy fill of `remaining` with parts at most `cap` into at most
    /// `slots` rows; the lexicographically largest completion.
    fn fill(parts: &mut Vec<usize>, mut remaining: usize, cap: usize, slots: usize) -> bool {
        if remaining > cap.saturating_mul(slots) {
            return false;
        }
        while remaining > 0 {
            let p = cap.min(remaining);
            parts.push(p);
            remaining -= p;
        }
        true
    }

    fn advance(&self, parts: &[usize]) -> Option<Vec<usize>> {
        // Rightmost position that can be lowered by one while the tail still
        // fits under the new value.
        let mut tail = 0;
        for i in (0..parts.len()).rev() {
            tail += parts[i];
            let lowered = parts[i] - 1;
            if lowered == 0 {
                continue;
            }
            let mut next = parts[..i].to_vec();
            next.push(lowered);
            if Self::fill(&mut next, tail - lowered, lowered, self.max_len - (i + 1)) {
                return Some(next);
            }
        }
        None
    }
}

impl Iterator for PartitionsOfWeight {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let next = if !self.started {
            self.started = true;
            let mut first = Vec::new();
            Self::fill(&mut first, self.weight, self.max_part, self.max_len).then_some(first)
        } else {
            let current = self.state.as_ref()?;
            self.advance(current)
        };
        self.state = next;
        self.state.clone().map(Partition::from_sorted)
    }
}

/// All partitions with `λ_1 ≤ max_part`, `ℓ(λ) ≤ max_len` and
/// `|λ| ≤ max_weight`, by ascending weight.
#[derive(Debug, Clone)]
pub struct BoundedPartitions {
    max_part: Bound,
    max_len: Bound,
    max_weight: usize,
    weight: usize,
    current: PartitionsOfWeight,
}

impl BoundedPartitions {
    pub fn new(max_part: Bound, max_len: Bound, max_weight: usize) -> Self {
        BoundedPartitions {
            max_part,
            max_len,
            max_weight,
            weight: 0,
            current: PartitionsOfWeight::new(0, max_part, max_len),
        }
    }
}

impl Iterator for BoundedPartitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        loop {
            if let Some(p) = self.current.next() {
                return Some(p);
            }
            if self.weight >= self.max_weight {
                return None;
            }
            self.weight += 1;
            self.current = PartitionsOfWeight::new(self.weight, self.max_part, self.max_len);
        }
    }
}

pub type PairedPartitions = Map<BoundedPartitions, fn(Partition) -> Partition>;
pub type EvenPartitions = Map<BoundedPartitions, fn(Partition) -> Partition>;

/// Every partition fitting in the `max_len × max_part` rectangle;
/// `binomial(max_part + max_len, max_len)` of them.
pub fn enum_rectangle(max_part: usize, max_len: usize) -> BoundedPartitions {
    BoundedPartitions::new(
        Bound::AtMost(max_part),
        Bound::AtMost(max_len),
        max_part * max_len,
    )
}

/// Partitions in which every distinct part occurs with even multiplicity.
pub fn enum_paired(max_part: Bound, max_len: Bound, max_weight: usize) -> PairedPartitions {
    BoundedPartitions::new(max_part, max_len.halve(), max_weight / 2)
        .map(Partition::with_doubled_multiplicities as fn(Partition) -> Partition)
}

/// Partitions with even parts only.
pub fn enum_even(max_len: Bound, max_weight: usize) -> EvenPartitions {
    BoundedPartitions::new(Bound::Unbounded, max_len, max_weight / 2)
        .map(Partition::with_doubled_parts as fn(Partition) -> Partition)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn from_parity(exponent: usize) -> Sign {
        if exponent.is_multiple_of(2) {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    pub fn as_i64(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

/// The signed forms `(a | a + p)` of the finite Schur sum `E_{n,p}`.
#[derive(Debug, Clone)]
pub struct ETerms {
    span: usize,
    shift: usize,
    mask: u64,
    end: u64,
}

impl Iterator for ETerms {
    type Item = (FrobeniusForm, Sign);

    fn next(&mut self) -> Option<Self::Item> {
        if self.mask >= self.end {
            return None;
        }
        let mask = self.mask;
        self.mask += 1;
        let arms: Vec<usize> = (0..self.span).rev().filter(|a| mask & (1 << a) != 0).collect();
        let legs = arms.iter().map(|a| a + self.shift).collect();
        let sign = Sign::from_parity(arms.iter().sum::<usize>() + arms.len());
        Some((FrobeniusForm { arms, legs }, sign))
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.end - self.mask) as usize;
        (left, Some(left))
    }
}

impl ExactSizeIterator for ETerms {}

/// Terms of `E_{n,p}`: for every subset `{a_1 > … > a_r}` of `{0, …, n−p−1}`
/// the form `(a | a + p)` with sign `(−1)^{|a|+r}`. For `p ≥ n` the only
/// term is the empty form with sign `+`.
pub fn enum_e_terms(n: usize, p: usize) -> Result<ETerms, PartitionError> {
    let span = n.saturating_sub(p);
    if span >= 64 {
        return Err(PartitionError::TooManyTerms(span));
    }
    Ok(ETerms {
        span,
        shift: p,
        mask: 0,
        end: 1u64 << span,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(part("5,4,4,2").conjugate(), part("4,4,3,3,1"));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(part("3,1").conjugate(), part("2,1,1"));
    }

    #[test]
    fn normalizes_trailing_zeros() {
        assert_eq!(Partition::new(vec![3, 1, 0, 0]).unwrap(), part("3,1"));
        assert_eq!(Partition::new(vec![0]).unwrap(), Partition::empty());
        assert!(Partition::new(vec![1, 2]).is_err());
        assert_eq!(part("0"), Partition::empty());
        assert_eq!(part("(2,1)"), part("2,1"));
    }

    #[test]
    fn frobenius_examples() {
        let f = part("5,4,4,2").frobenius();
        assert_eq!(f.rank(), 3);
        assert_eq!(f.arms(), &[4, 2, 1]);
        assert_eq!(f.legs(), &[3, 2, 0]);
        assert_eq!(f.to_partition(), part("5,4,4,2"));

        let z = Partition::empty().frobenius();
        assert_eq!(z.rank(), 0);
        assert_eq!(z.to_partition(), Partition::empty());

        let one = part("1").frobenius();
        assert_eq!((one.arms(), one.legs()), (&[0][..], &[0][..]));
    }

    #[test]
    fn frobenius_rejects_non_strict() {
        assert!(FrobeniusForm::new(vec![1, 1], vec![2, 0]).is_err());
        assert!(FrobeniusForm::new(vec![2, 1], vec![0, 1]).is_err());
        assert!(FrobeniusForm::new(vec![2], vec![]).is_err());
        assert_eq!(
            "(4 2 1 | 3 2 0)".parse::<FrobeniusForm>().unwrap().to_partition(),
            part("5,4,4,2")
        );
        assert_eq!("( | )".parse::<FrobeniusForm>().unwrap().rank(), 0);
    }

    #[test]
    fn hook_lengths_match_printed_grid() {
        let lam = part("5,4,4,2");
        let grid = [vec![8, 7, 5, 4, 1], vec![6, 5, 3, 2], vec![5, 4, 2, 1], vec![2, 1]];
        for (i, row) in grid.iter().enumerate() {
            for (j, &h) in row.iter().enumerate() {
                assert_eq!(lam.hook_length(i + 1, j + 1).unwrap(), h);
            }
        }
        assert_eq!(part("1").hook_length(1, 1).unwrap(), 1);
        assert!(lam.hook_length(4, 3).is_err());
        assert!(lam.hook_length(0, 1).is_err());
    }

    #[test]
    fn rectangle_enumeration() {
        let small: Vec<_> = enum_rectangle(1, 2).collect();
        assert_eq!(small, vec![Partition::empty(), part("1"), part("1,1")]);

        let r: Vec<_> = enum_rectangle(2, 3).collect();
        assert_eq!(r.len(), 10);
        assert_eq!(r.last().unwrap(), &part("2,2,2"));
        assert!(r.windows(2).all(|w| w[0] < w[1]));

        assert_eq!(enum_rectangle(0, 5).collect::<Vec<_>>(), vec![Partition::empty()]);
    }

    #[test]
    fn weight_six_order() {
        let all: Vec<_> = PartitionsOfWeight::new(6, Bound::Unbounded, Bound::Unbounded).collect();
        assert_eq!(all.len(), 11);
        assert_eq!(all[0], part("6"));
        assert_eq!(all[1], part("5,1"));
        assert_eq!(all[10], part("1,1,1,1,1,1"));
        let capped: Vec<_> = PartitionsOfWeight::new(6, Bound::AtMost(3), Bound::AtMost(3)).collect();
        assert_eq!(capped, vec![part("3,3"), part("3,2,1"), part("2,2,2")]);
    }

    #[test]
    fn paired_enumeration() {
        let b: Vec<_> = enum_paired(Bound::Unbounded, Bound::Unbounded, 6).collect();
        let expected: Vec<_> = ["0", "1,1", "2,2", "1,1,1,1", "3,3", "2,2,1,1", "1,1,1,1,1,1"]
            .iter()
            .map(|s| part(s))
            .collect();
        assert_eq!(b, expected);

        let cols: Vec<_> = enum_paired(Bound::AtMost(1), Bound::AtMost(4), 8).collect();
        assert_eq!(cols, vec![Partition::empty(), part("1,1"), part("1,1,1,1")]);
        assert!(enum_paired(Bound::Unbounded, Bound::Unbounded, 12).all(|l| l != part("2,1")));
    }

    #[test]
    fn even_enumeration() {
        let one_row: Vec<_> = enum_even(Bound::AtMost(1), 8).collect();
        let expected: Vec<_> = ["0", "2", "4", "6", "8"].iter().map(|s| part(s)).collect();
        assert_eq!(one_row, expected);

        let two_rows: Vec<_> = enum_even(Bound::AtMost(2), 8).collect();
        for extra in ["2,2", "4,2", "6,2", "4,4"] {
            assert!(two_rows.contains(&part(extra)));
        }
        assert_eq!(two_rows.len(), 9);
        assert!(two_rows.iter().all(|l| l.conjugate().has_paired_parts()));
    }

    #[test]
    fn e_terms() {
        let terms: Vec<_> = enum_e_terms(3, 2).unwrap().collect();
        assert_eq!(terms.len(), 2);
        assert_eq!(terms[0], (FrobeniusForm::default(), Sign::Plus));
        assert_eq!(terms[1].0.to_partition(), part("1,1,1"));
        assert_eq!(terms[1].1, Sign::Minus);

        assert_eq!(enum_e_terms(2, 0).unwrap().count(), 4);
        assert_eq!(enum_e_terms(4, 1).unwrap().count(), 8);
        assert_eq!(enum_e_terms(2, 5).unwrap().collect::<Vec<_>>(), vec![(FrobeniusForm::default(), Sign::Plus)]);
        assert!(enum_e_terms(70, 1).is_err());
    }

    #[test]
    fn prepend_and_hooks() {
        assert_eq!(part("1,1").prepend(2).unwrap(), part("2,1,1"));
        assert!(part("3").prepend(2).is_err());
        assert!(part("2,1").in_hook(1, 1));
        assert!(!part("2,2").in_hook(1, 1));
        assert!(part("2,2,1,1").has_paired_parts());
        assert!(!part("2,1").has_paired_parts());
    }
}
