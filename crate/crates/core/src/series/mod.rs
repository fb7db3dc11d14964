//! Truncated univariate power series in `t` with exact rational
//! coefficients.
//!
//! A series of order `N` knows its coefficients of `t^0 ..= t^N` and nothing
//! beyond. Binary operations on series of different orders work at the
//! smaller order. A series also carries a polynomial flag: it is set only
//! when the full (untruncated) object is known to be a polynomial of degree
//! at most `N`, which is what makes evaluation at `t = 1` meaningful.

mod json;
mod poly;
mod rational_function;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{BigRational, One, Signed, Zero};
use thiserror::Error;

pub use json::{format_rational, parse_rational, SeriesRepr};
pub use rational_function::RationalFunction;

/// Truncation order used when a caller does not choose one.
pub const DEFAULT_ORDER: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("division by a series with zero constant term")]
    NonUnit,
    #[error("rational function with zero denominator")]
    ZeroDenominator,
    #[error("malformed rational {0:?}")]
    BadRational(String),
    #[error("series of order {order} needs {expected} coefficients, got {got}")]
    LengthMismatch { order: usize, expected: usize, got: usize },
}

#[derive(Debug, Clone)]
pub struct TruncatedSeries {
    coeffs: Vec<BigRational>,
    polynomial: bool,
}

/// Value of a series at `t = 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EvalAtOne {
    pub value: BigRational,
    /// True when the series is a polynomial fully inside the window, so that
    /// `value` is the actual sum rather than a partial sum.
    pub polynomial: bool,
}

impl TruncatedSeries {
    pub fn zero(order: usize) -> Self {
        TruncatedSeries {
            coeffs: vec![BigRational::zero(); order + 1],
            polynomial: true,
        }
    }

    pub fn one(order: usize) -> Self {
        Self::constant(BigRational::one(), order)
    }

    pub fn constant(c: BigRational, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    /// `c·t^degree`.
    pub fn monomial(c: BigRational, degree: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if degree <= order {
            s.coeffs[degree] = c;
        } else if !c.is_zero() {
            s.polynomial = false;
        }
        s
    }

    /// A polynomial given by its coefficients, lowest degree first.
    pub fn from_polynomial(coeffs: &[BigRational], order: usize) -> Self {
        let mut s = Self::zero(order);
        for (k, c) in coeffs.iter().enumerate() {
            if k <= order {
                s.coeffs[k] = c.clone();
            } else if !c.is_zero() {
                s.polynomial = false;
            }
        }
        s
    }

    pub fn from_integers(coeffs: &[i64], order: usize) -> Self {
        let coeffs: Vec<_> = coeffs.iter().map(|&c| BigRational::from_integer(c.into())).collect();
        Self::from_polynomial(&coeffs, order)
    }

    /// Coefficients of a series known only up to `t^{len-1}`.
    pub fn from_truncated(coeffs: Vec<BigRational>) -> Self {
        assert!(!coeffs.is_empty(), "a series has at least a constant term");
        TruncatedSeries {
            coeffs,
            polynomial: false,
        }
    }

    /// Builds `Σ c_d t^d` from `(d, c_d)` terms. `complete` states that the
    /// terms are the whole support of a finite sum; the result is flagged as
    /// a polynomial when additionally every term landed inside the window.
    pub fn from_terms<I>(order: usize, terms: I, complete: bool) -> Self
    where
        I: IntoIterator<Item = (usize, BigRational)>,
    {
        let mut s = Self::zero(order);
        s.polynomial = complete;
        for (d, c) in terms {
            if d <= order {
                s.coeffs[d] += c;
            } else if !c.is_zero() {
                s.polynomial = false;
            }
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// Coefficient of `t^k`, or `None` beyond the order.
    pub fn coeff(&self, k: usize) -> Option<&BigRational> {
        self.coeffs.get(k)
    }

    pub fn is_polynomial(&self) -> bool {
        self.polynomial
    }

    /// Index of the last nonzero coefficient inside the window.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.iter().rposition(|c| !c.is_zero())
    }

    /// Polynomial whose whole support lies at or below `order`.
    fn fits(&self, order: usize) -> bool {
        self.polynomial && self.degree().is_none_or(|d| d <= order)
    }

    pub fn truncate(&self, order: usize) -> Self {
        if order >= self.order() {
            return self.clone();
        }
        TruncatedSeries {
            coeffs: self.coeffs[..=order].to_vec(),
            polynomial: self.fits(order),
        }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
            polynomial: self.polynomial,
        }
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&BigRational, &BigRational) -> BigRational) -> Self {
        let order = self.order().min(other.order());
        TruncatedSeries {
            coeffs: (0..=order).map(|k| f(&self.coeffs[k], &other.coeffs[k])).collect(),
            polynomial: self.fits(order) && other.fits(order),
        }
    }

    fn cauchy_product(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let mut coeffs = vec![BigRational::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(order + 1 - i) {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        let polynomial = self.fits(order)
            && other.fits(order)
            && match (self.degree(), other.degree()) {
                (Some(da), Some(db)) => da + db <= order,
                _ => true,
            };
        TruncatedSeries { coeffs, polynomial }
    }

    /// Quotient `self / divisor`; the divisor must have an invertible
    /// constant term.
    pub fn div(&self, divisor: &Self) -> Result<Self, SeriesError> {
        let order = self.order().min(divisor.order());
        let lead = &divisor.coeffs[0];
        if lead.is_zero() {
            return Err(SeriesError::NonUnit);
        }
        let inv = lead.recip();
        let mut q: Vec<BigRational> = Vec::with_capacity(order + 1);
        for k in 0..=order {
            let mut acc = self.coeffs[k].clone();
            for j in 1..=k {
                let d = &divisor.coeffs[j];
                if !d.is_zero() {
                    acc -= d * &q[k - j];
                }
            }
            q.push(acc * &inv);
        }
        let polynomial = self.fits(order)
            && divisor.fits(order)
            && poly::divides_exactly(&q, divisor.coeffs(), self.coeffs());
        Ok(TruncatedSeries {
            coeffs: q,
            polynomial,
        })
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.order());
        for _ in 0..e {
            acc = acc.cauchy_product(self);
        }
        acc
    }

    /// `f(t) ↦ f(−t)`: odd coefficients change sign.
    pub fn substitute_neg_t(&self) -> Self {
        TruncatedSeries {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| if k % 2 == 1 { -c } else { c.clone() })
                .collect(),
            polynomial: self.polynomial,
        }
    }

    pub fn eval_at_one(&self) -> EvalAtOne {
        EvalAtOne {
            value: self.coeffs.iter().sum(),
            polynomial: self.polynomial,
        }
    }

    /// First coefficient index, up to the common order, where the two series
    /// differ.
    pub fn first_difference(&self, other: &Self) -> Option<usize> {
        self.coeffs
            .iter()
            .zip(&other.coeffs)
            .position(|(a, b)| a != b)
    }
}

/// Coefficient-wise agreement up to the smaller of the two orders.
impl PartialEq for TruncatedSeries {
    fn eq(&self, other: &Self) -> bool {
        self.first_difference(other).is_none()
    }
}

impl Add<&TruncatedSeries> for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn add(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl Sub<&TruncatedSeries> for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn sub(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        self.zip_with(rhs, |a, b| a - b)
    }
}

impl Mul<&TruncatedSeries> for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn mul(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        self.cauchy_product(rhs)
    }
}

impl Neg for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn neg(self) -> TruncatedSeries {
        self.scale(&-BigRational::one())
    }
}

macro_rules! forward_owned {
    ($($tr:ident :: $method:ident),*) => {$(
        impl $tr for TruncatedSeries {
            type Output = TruncatedSeries;
            fn $method(self, rhs: TruncatedSeries) -> TruncatedSeries {
                (&self).$method(&rhs)
            }
        }
    )*};
}

forward_owned!(Add::add, Sub::sub, Mul::mul);

impl Neg for TruncatedSeries {
    type Output = TruncatedSeries;
    fn neg(self) -> TruncatedSeries {
        -&self
    }
}

/// `1 + 3t + 6t^2 - 1/2 t^3`, with ` + O(t^{N+1})` appended unless the
/// series is a polynomial inside its window.
impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let mag = c.abs();
            let power = match k {
                0 => String::new(),
                1 => "t".to_string(),
                _ => format!("t^{k}"),
            };
            if k == 0 {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{power}")?;
            } else if mag.is_integer() {
                write!(f, "{mag}{power}")?;
            } else {
                write!(f, "{mag} {power}")?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        if !self.polynomial {
            write!(f, " + O(t^{})", self.order() + 1)?;
        }
        Ok(())
    }
}
