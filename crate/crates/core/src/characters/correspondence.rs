//! The superdimension correspondence between `osp` irreps and their
//! classical partners, checked by computing both sides independently.

use std::fmt;
use std::str::FromStr;

use super::{
    d21_closed_form, d21_sdim_t, invalid, ospb_sdim_t, ospd_sdim_t, osp1_dim_t, so_even_dim_t, so_odd_dim_t, sp_dim_t,
    CharacterError, Chirality, Family, IrrepSpec, Params, Route,
};
use crate::series::TruncatedSeries;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CorrespondenceCase {
    /// `osp(2n+1|2n)` against the trivial `so(1)` irrep.
    OspOddEqualRank,
    /// `osp(2n+2k+1|2n)` against `so(2k+1)`.
    OspOddVsSoOdd,
    /// `osp(2m+1|2m+2k)` against `osp(1|2k)` at `−t`.
    OspOddVsOsp1,
    /// `osp(2n|2n)` against the trivial irrep.
    OspEvenEqualRank,
    /// `osp(2n+2k|2n)` against `so(2k)`.
    OspEvenVsSoEven,
    /// `osp(2m|2m+2k)` against `sp(2k)` at `−t`.
    OspEvenVsSp,
    /// `D(2,1;α)` level sum against its closed form.
    D21,
}

impl CorrespondenceCase {
    pub const ALL: [CorrespondenceCase; 7] = [
        CorrespondenceCase::OspOddEqualRank,
        CorrespondenceCase::OspOddVsSoOdd,
        CorrespondenceCase::OspOddVsOsp1,
        CorrespondenceCase::OspEvenEqualRank,
        CorrespondenceCase::OspEvenVsSoEven,
        CorrespondenceCase::OspEvenVsSp,
        CorrespondenceCase::D21,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CorrespondenceCase::OspOddEqualRank => "ospB-equal-rank",
            CorrespondenceCase::OspOddVsSoOdd => "ospB-vs-soOdd",
            CorrespondenceCase::OspOddVsOsp1 => "ospB-vs-osp1",
            CorrespondenceCase::OspEvenEqualRank => "ospD-equal-rank",
            CorrespondenceCase::OspEvenVsSoEven => "ospD-vs-soEven",
            CorrespondenceCase::OspEvenVsSp => "ospD-vs-sp",
            CorrespondenceCase::D21 => "d21",
        }
    }

    /// Whether the case uses the rank difference `k`.
    pub fn uses_k(self) -> bool {
        !matches!(
            self,
            CorrespondenceCase::OspOddEqualRank | CorrespondenceCase::OspEvenEqualRank | CorrespondenceCase::D21
        )
    }
}

impl fmt::Display for CorrespondenceCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CorrespondenceCase {
    type Err = CharacterError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        CorrespondenceCase::ALL
            .into_iter()
            .find(|c| c.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| {
                let names: Vec<_> = CorrespondenceCase::ALL.iter().map(|c| c.name()).collect();
                invalid(format!("unknown case {s:?}, expected one of {}", names.join(", ")))
            })
    }
}

/// `base` is the smaller of the two `osp` ranks, `k` their difference.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct CaseParams {
    pub base: usize,
    pub k: usize,
    pub p: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Side {
    /// Absent for the trivial partners `so(0)`, `so(1)`, `so(2)`.
    pub spec: Option<IrrepSpec>,
    pub description: String,
    pub series: TruncatedSeries,
    pub route: Route,
    /// The series was produced at `−t`.
    pub negated: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Match,
    Mismatch,
}

impl Verdict {
    pub fn name(self) -> &'static str {
        match self {
            Verdict::Match => "match",
            Verdict::Mismatch => "mismatch",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CorrespondenceReport {
    pub case: CorrespondenceCase,
    pub params: CaseParams,
    pub left: Side,
    pub right: Side,
    pub verdict: Verdict,
    pub first_divergence: Option<usize>,
}

impl CorrespondenceReport {
    pub fn is_match(&self) -> bool {
        self.verdict == Verdict::Match
    }
}

fn side(spec: IrrepSpec, series: TruncatedSeries, route: Route, negated: bool) -> Side {
    let description = if negated {
        format!("{spec} at -t")
    } else {
        spec.to_string()
    };
    Side {
        spec: Some(spec),
        description,
        series,
        route,
        negated,
    }
}

fn trivial(description: String, order: usize) -> Side {
    Side {
        spec: None,
        description,
        series: TruncatedSeries::one(order),
        route: Route::Sum,
        negated: false,
    }
}

fn osp(family: Family, m: usize, n: usize, p: usize) -> Result<IrrepSpec, CharacterError> {
    IrrepSpec::new(family, Params { m: Some(m), n: Some(n), p: Some(p), ..Params::default() })
}

fn classical(family: Family, k: usize, p: usize, chirality: Option<Chirality>) -> Result<IrrepSpec, CharacterError> {
    let params = if family == Family::Osp1 {
        Params { n: Some(k), p: Some(p), ..Params::default() }
    } else {
        Params { k: Some(k), p: Some(p), chirality, ..Params::default() }
    };
    IrrepSpec::new(family, params)
}

/// Computes both sides of `case` through `order` and compares them. A
/// disagreement is reported, not raised.
pub fn verify_correspondence(case: CorrespondenceCase, params: CaseParams, order: usize) -> Result<CorrespondenceReport, CharacterError> {
    let CaseParams { base, k, p } = params;
    let needs_k = matches!(case, CorrespondenceCase::OspOddVsOsp1 | CorrespondenceCase::OspEvenVsSp);
    if needs_k && k == 0 {
        return Err(invalid(format!("{case} needs k >= 1")));
    }
    let (left, right) = match case {
        CorrespondenceCase::OspOddEqualRank => (
            side(osp(Family::OspOdd, base, base, p)?, ospb_sdim_t(base, base, p, order)?, Route::Sum, false),
            trivial("trivial so(1)".to_string(), order),
        ),
        CorrespondenceCase::OspOddVsSoOdd => (
            side(osp(Family::OspOdd, base + k, base, p)?, ospb_sdim_t(base + k, base, p, order)?, Route::Sum, false),
            side(classical(Family::SoOdd, k, p, None)?, so_odd_dim_t(k, p, order)?, Route::Sum, false),
        ),
        CorrespondenceCase::OspOddVsOsp1 => (
            side(osp(Family::OspOdd, base, base + k, p)?, ospb_sdim_t(base, base + k, p, order)?, Route::Sum, false),
            side(
                classical(Family::Osp1, k, p, None)?,
                osp1_dim_t(k, p, order, Route::Closed)?.substitute_neg_t(),
                Route::Closed,
                true,
            ),
        ),
        CorrespondenceCase::OspEvenEqualRank => (
            side(osp(Family::OspEven, base, base, p)?, ospd_sdim_t(base, base, p, order)?, Route::Sum, false),
            trivial("trivial so(0)".to_string(), order),
        ),
        CorrespondenceCase::OspEvenVsSoEven => {
            let left = side(osp(Family::OspEven, base + k, base, p)?, ospd_sdim_t(base + k, base, p, order)?, Route::Sum, false);
            let right = if k < 2 {
                trivial(format!("[{p}] so({})", 2 * k), order)
            } else {
                let chirality = if k % 2 == 0 { Chirality::Last } else { Chirality::NextToLast };
                side(
                    classical(Family::SoEven, k, p, Some(chirality))?,
                    so_even_dim_t(k, p, chirality, order)?,
                    Route::Sum,
                    false,
                )
            };
            (left, right)
        }
        CorrespondenceCase::OspEvenVsSp => (
            side(osp(Family::OspEven, base, base + k, p)?, ospd_sdim_t(base, base + k, p, order)?, Route::Sum, false),
            side(classical(Family::Sp, k, p, None)?, sp_dim_t(k, p, order)?.substitute_neg_t(), Route::Sum, true),
        ),
        CorrespondenceCase::D21 => {
            let spec = IrrepSpec::new(Family::D21Alpha, Params { p: Some(p), ..Params::default() })?;
            (
                side(spec.clone(), d21_sdim_t(p, order)?, Route::Sum, false),
                side(spec, d21_closed_form(p)?.expand(order)?, Route::Closed, false),
            )
        }
    };
    let first_divergence = left.series.first_difference(&right.series);
    let verdict = if first_divergence.is_none() {
        Verdict::Match
    } else {
        Verdict::Mismatch
    };
    Ok(CorrespondenceReport {
        case,
        params,
        left,
        right,
        verdict,
        first_divergence,
    })
}
