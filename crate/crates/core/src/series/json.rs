//! JSON form of a series: `{"order": N, "coeffs": ["p/q", …]}` with exactly
//! `N + 1` reduced fractions.

use std::str::FromStr;

use num::{BigInt, BigRational, Zero};
use serde::{Deserialize, Serialize};

use super::{SeriesError, TruncatedSeries};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesRepr {
    pub order: usize,
    pub coeffs: Vec<String>,
}

/// Always `p/q`, reduced, with the sign on the numerator (`3/1`, `-1/2`).
pub fn format_rational(r: &BigRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Accepts `p/q` or a bare integer `p`.
pub fn parse_rational(s: &str) -> Result<BigRational, SeriesError> {
    let bad = || SeriesError::BadRational(s.to_string());
    let int = |t: &str| {
        let t = t.trim();
        if t.is_empty() || !t.trim_start_matches(['+', '-']).bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        BigInt::from_str(t).map_err(|_| bad())
    };
    match s.split_once('/') {
        Some((n, d)) => {
            let d = int(d)?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(int(n)?, d))
        }
        None => Ok(BigRational::from_integer(int(s)?)),
    }
}

impl From<&TruncatedSeries> for SeriesRepr {
    fn from(s: &TruncatedSeries) -> Self {
        SeriesRepr {
            order: s.order(),
            coeffs: s.coeffs().iter().map(format_rational).collect(),
        }
    }
}

impl TryFrom<&SeriesRepr> for TruncatedSeries {
    type Error = SeriesError;

    /// The decoded series is not flagged as a polynomial; that information
    /// travels separately.
    fn try_from(r: &SeriesRepr) -> Result<Self, SeriesError> {
        let expected = r.order.checked_add(1).ok_or(SeriesError::LengthMismatch {
            order: r.order,
            expected: usize::MAX,
            got: r.coeffs.len(),
        })?;
        if r.coeffs.len() != expected {
            return Err(SeriesError::LengthMismatch {
                order: r.order,
                expected,
                got: r.coeffs.len(),
            });
        }
        let coeffs = r
            .coeffs
            .iter()
            .map(|c| parse_rational(c))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(TruncatedSeries::from_truncated(coeffs))
    }
}

impl Serialize for TruncatedSeries {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        SeriesRepr::from(self).serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for TruncatedSeries {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let repr = SeriesRepr::deserialize(deserializer)?;
        TruncatedSeries::try_from(&repr).map_err(serde::de::Error::custom)
    }
}
