use num::{BigRational, One, Zero};

use super::{poly, SeriesError, TruncatedSeries};

/// A quotient of two polynomials in `t`, kept unexpanded so that it can be
/// evaluated (with removable singularities cancelled) as well as expanded
/// into a [`TruncatedSeries`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalFunction {
    numerator: Vec<BigRational>,
    denominator: Vec<BigRational>,
}

impl RationalFunction {
    pub fn new(numerator: Vec<BigRational>, denominator: Vec<BigRational>) -> Result<Self, SeriesError> {
        let denominator = poly::trim(denominator);
        if denominator.is_empty() {
            return Err(SeriesError::ZeroDenominator);
        }
        Ok(RationalFunction {
            numerator: poly::trim(numerator),
            denominator,
        })
    }

    pub fn polynomial(coeffs: Vec<BigRational>) -> Self {
        RationalFunction {
            numerator: poly::trim(coeffs),
            denominator: vec![BigRational::one()],
        }
    }

    pub fn from_integers(numerator: &[i64], denominator: &[i64]) -> Result<Self, SeriesError> {
        let conv = |v: &[i64]| v.iter().map(|&c| BigRational::from_integer(c.into())).collect();
        Self::new(conv(numerator), conv(denominator))
    }

    /// `(1 + c·t^d)^e`.
    pub fn binomial_power(c: i64, d: usize, e: u32) -> Self {
        let mut base = vec![BigRational::zero(); d + 1];
        base[0] = BigRational::one();
        base[d] += BigRational::from_integer(c.into());
        let mut acc = vec![BigRational::one()];
        for _ in 0..e {
            acc = poly::mul(&acc, &base);
        }
        Self::polynomial(acc)
    }

    pub fn numerator(&self) -> &[BigRational] {
        &self.numerator
    }

    pub fn denominator(&self) -> &[BigRational] {
        &self.denominator
    }

    pub fn mul(&self, other: &Self) -> Self {
        RationalFunction {
            numerator: poly::mul(&self.numerator, &other.numerator),
            denominator: poly::mul(&self.denominator, &other.denominator),
        }
    }

    pub fn div(&self, other: &Self) -> Result<Self, SeriesError> {
        Self::new(
            poly::mul(&self.numerator, &other.denominator),
            poly::mul(&self.denominator, &other.numerator),
        )
    }

    pub fn add(&self, other: &Self) -> Self {
        RationalFunction {
            numerator: poly::add(
                &poly::mul(&self.numerator, &other.denominator),
                &poly::mul(&other.numerator, &self.denominator),
            ),
            denominator: poly::mul(&self.denominator, &other.denominator),
        }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        RationalFunction {
            numerator: poly::trim(self.numerator.iter().map(|x| x * c).collect()),
            denominator: self.denominator.clone(),
        }
    }

    pub fn substitute_neg_t(&self) -> Self {
        let flip = |p: &[BigRational]| {
            p.iter()
                .enumerate()
                .map(|(k, c)| if k % 2 == 1 { -c } else { c.clone() })
                .collect()
        };
        RationalFunction {
            numerator: flip(&self.numerator),
            denominator: flip(&self.denominator),
        }
    }

    /// Power-series expansion around `t = 0`.
    pub fn expand(&self, order: usize) -> Result<TruncatedSeries, SeriesError> {
        let num = TruncatedSeries::from_polynomial(&self.numerator, order);
        let den = TruncatedSeries::from_polynomial(&self.denominator, order);
        // A window too small for the full polynomials loses exactness; redo
        // the division in a window large enough to decide it.
        let q = num.div(&den)?;
        if num.is_polynomial() && den.is_polynomial() {
            return Ok(q);
        }
        let wide = self.numerator.len().max(self.denominator.len()) + order;
        let wide_q = TruncatedSeries::from_polynomial(&self.numerator, wide)
            .div(&TruncatedSeries::from_polynomial(&self.denominator, wide))?;
        Ok(wide_q.truncate(order))
    }

    /// Value at `t`, cancelling common factors `(x − t)` first. `None` means
    /// `t` is a pole.
    pub fn value_at(&self, t: &BigRational) -> Option<BigRational> {
        let mut num = self.numerator.clone();
        let mut den = self.denominator.clone();
        loop {
            let d = poly::eval(&den, t);
            if !d.is_zero() {
                return Some(poly::eval(&num, t) / d);
            }
            if num.is_empty() {
                return Some(BigRational::zero());
            }
            if !poly::eval(&num, t).is_zero() {
                return None;
            }
            num = poly::deflate(&num, t);
            den = poly::deflate(&den, t);
        }
    }
}
