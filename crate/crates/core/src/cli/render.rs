//! Executing a [`Request`] and rendering its result as text, JSON or CSV.

use std::io::Write;

use num::BigRational;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use super::{selftest, CliError, Format, Request, SweepRange, VerifyTarget};
use crate::characters::{
    cummins_king_check, spinor_sdim, CharacterError, verify_correspondence, CaseParams, CorrespondenceCase, CorrespondenceReport,
    CumminsKingReport, Family, IrrepSpec, Route, Side, Total,
};
use crate::schur::{dim_gl_frobenius, dim_gl_hook, dim_gl_weyl, super_schur_eval, SuperPoint};
use crate::series::{format_rational, SeriesError, SeriesRepr, TruncatedSeries};

const SUPERSCHUR_MAX_WEIGHT: usize = 12;

/// The JSON document written by `series --format json`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesDocument {
    pub spec: IrrepSpec,
    pub order: usize,
    pub coeffs: Vec<String>,
    pub meta: SeriesMeta,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesMeta {
    pub route: String,
    pub polynomial: bool,
}

impl SeriesDocument {
    pub fn new(spec: IrrepSpec, series: &TruncatedSeries, route: Route) -> Self {
        let repr = SeriesRepr::from(series);
        SeriesDocument {
            spec,
            order: repr.order,
            coeffs: repr.coeffs,
            meta: SeriesMeta {
                route: route.name().to_string(),
                polynomial: series.is_polynomial(),
            },
        }
    }

    /// Decodes the coefficients; the polynomial flag is not carried over.
    pub fn series(&self) -> Result<TruncatedSeries, SeriesError> {
        TruncatedSeries::try_from(&SeriesRepr {
            order: self.order,
            coeffs: self.coeffs.clone(),
        })
    }
}

pub(super) fn execute(request: &Request, out: &mut dyn Write) -> Result<i32, CliError> {
    match request {
        Request::Dim { spec, order, format } => dim(spec, *order, *format, out),
        Request::Series {
            spec,
            order,
            route,
            format,
        } => {
            let s = spec.series(*order, *route)?;
            match format {
                Format::Text => writeln!(out, "{s}")?,
                Format::Json => writeln!(out, "{}", pretty(&SeriesDocument::new(spec.clone(), &s, *route)))?,
                Format::Csv => {
                    writeln!(out, "degree,coefficient")?;
                    for (d, c) in s.coeffs().iter().enumerate() {
                        writeln!(out, "{d},{}", format_rational(c))?;
                    }
                }
            }
            Ok(0)
        }
        Request::Verify { target, order, format } => match target {
            VerifyTarget::Correspondence { case, params } => {
                let report = verify_correspondence(*case, *params, *order)?;
                write_report(&report, *order, *format, out)?;
                Ok(i32::from(!report.is_match()))
            }
            VerifyTarget::CumminsKing { m, n, trials, seed } => {
                let report = cummins_king_check(*m, *n, *order, *trials, *seed)?;
                write_cummins_king(&report, *format, out)?;
                Ok(i32::from(!report.matches()))
            }
        },
        Request::Sweep { range, order, format } => sweep(range, *order, *format, out),
        Request::Selftest { format } => selftest::run_selftest(*format, out),
    }
}

fn pretty<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("serializable")
}

fn coeff_strings(s: &TruncatedSeries) -> Vec<String> {
    s.coeffs().iter().map(format_rational).collect()
}

fn dim(spec: &IrrepSpec, order: usize, format: Format, out: &mut dyn Write) -> Result<i32, CliError> {
    match spec.family() {
        Family::Gl => {
            let lambda = spec.lambda();
            let weyl = dim_gl_weyl(spec.n(), &lambda).map_err(CharacterError::from)?;
            let hook = dim_gl_hook(spec.n(), &lambda).map_err(CharacterError::from)?;
            let frob = dim_gl_frobenius(spec.n(), &lambda.frobenius()).map_err(CharacterError::from)?;
            let agree = weyl == hook && hook == frob;
            match format {
                Format::Text => {
                    writeln!(out, "dim {} {} = {weyl}", spec.algebra(), spec.label())?;
                    if !agree {
                        writeln!(out, "weyl={weyl} hook={hook} frobenius={frob}")?;
                    }
                    writeln!(out, "weyl=hook=frobenius: {agree}")?;
                }
                Format::Json => {
                    let doc = json!({
                        "spec": spec,
                        "weyl": weyl.to_string(),
                        "hook": hook.to_string(),
                        "frobenius": frob.to_string(),
                        "agree": agree,
                    });
                    writeln!(out, "{}", pretty(&doc))?;
                }
                Format::Csv => {
                    writeln!(out, "weyl,hook,frobenius,agree")?;
                    writeln!(out, "{weyl},{hook},{frob},{agree}")?;
                }
            }
            Ok(i32::from(!agree))
        }
        Family::GlSuper => {
            let lambda = spec.lambda();
            let sdim = spec.gl_dimension()?;
            // The Littlewood–Richardson expansion grows quickly with |λ|.
            let schur = (lambda.weight() <= SUPERSCHUR_MAX_WEIGHT)
                .then(|| super_schur_eval(&lambda, &SuperPoint::unit(spec.m(), spec.n())));
            let agree = schur.as_ref().map(|v| *v == BigRational::from_integer(sdim.clone()));
            match format {
                Format::Text => {
                    writeln!(out, "sdim {} {} = {sdim}", spec.algebra(), spec.label())?;
                    match agree {
                        Some(a) => writeln!(out, "formula=superschur: {a}")?,
                        None => writeln!(out, "formula=superschur: skipped (|λ| > {SUPERSCHUR_MAX_WEIGHT})")?,
                    }
                }
                Format::Json => {
                    let doc = json!({
                        "spec": spec,
                        "sdim": sdim.to_string(),
                        "superschur": schur.as_ref().map(format_rational),
                        "agree": agree,
                    });
                    writeln!(out, "{}", pretty(&doc))?;
                }
                Format::Csv => {
                    writeln!(out, "sdim,superschur,agree")?;
                    let shown = schur.as_ref().map(format_rational).unwrap_or_default();
                    let agree = agree.map(|a| a.to_string()).unwrap_or_default();
                    writeln!(out, "{sdim},{shown},{agree}")?;
                }
            }
            Ok(i32::from(agree == Some(false)))
        }
        _ => {
            let series = spec.series(order, Route::Sum)?;
            let total = spec.total(&series);
            let spinor = if spec.family() == Family::Spinor {
                Some(spinor_sdim(spec.m(), spec.n())?)
            } else {
                None
            };
            let (value, kind) = match &total {
                Total::Polynomial(v) => (Some(v), "polynomial"),
                Total::ClosedForm(v) => (Some(v), "closed-form"),
                Total::Divergent => (None, "divergent"),
                Total::Unknown => (None, "unknown"),
            };
            let quantity = if spec.family().is_super() { "sdim" } else { "dim" };
            match format {
                Format::Text => {
                    let shown = match (&total, value) {
                        (_, Some(v)) => format!("{v} ({kind})"),
                        (Total::Divergent, None) => "divergent (pole at t=1)".to_string(),
                        _ => format!("unknown (no closed form, not a polynomial through t^{order})"),
                    };
                    writeln!(out, "{quantity} {} {} at t=1 = {shown}", spec.algebra(), spec.label())?;
                    if let Some(s) = &spinor {
                        writeln!(out, "sdim {} = {s}", spec.label())?;
                    }
                }
                Format::Json => {
                    let mut doc = json!({
                        "spec": spec,
                        "order": order,
                        "quantity": quantity,
                        "total": value.map(format_rational),
                        "kind": kind,
                    });
                    if let Some(s) = &spinor {
                        doc["sdim"] = Value::String(format_rational(s));
                    }
                    writeln!(out, "{}", pretty(&doc))?;
                }
                Format::Csv => {
                    writeln!(out, "quantity,total,kind")?;
                    writeln!(out, "{quantity},{},{kind}", value.map(format_rational).unwrap_or_default())?;
                    if let Some(s) = &spinor {
                        writeln!(out, "sdim,{},exact", format_rational(s))?;
                    }
                }
            }
            Ok(0)
        }
    }
}

fn side_json(side: &Side) -> Value {
    json!({
        "spec": side.spec,
        "description": side.description,
        "route": side.route.name(),
        "negated": side.negated,
        "coeffs": coeff_strings(&side.series),
    })
}

fn report_json(report: &CorrespondenceReport, order: usize) -> Value {
    let CaseParams { base, k, p } = report.params;
    json!({
        "case": report.case.name(),
        "params": { "base": base, "k": k, "p": p },
        "order": order,
        "left": side_json(&report.left),
        "right": side_json(&report.right),
        "verdict": report.verdict.name(),
        "first_divergence": report.first_divergence,
    })
}

fn write_report(report: &CorrespondenceReport, order: usize, format: Format, out: &mut dyn Write) -> Result<(), CliError> {
    let CaseParams { base, k, p } = report.params;
    match format {
        Format::Text => {
            writeln!(out, "case {} base={base} k={k} p={p} order={order}", report.case)?;
            for (name, side) in [("left ", &report.left), ("right", &report.right)] {
                writeln!(out, "{name}: {} [{}]", side.description, side.route.name())?;
                writeln!(out, "       {}", side.series)?;
            }
            writeln!(out, "verdict: {}", report.verdict.name())?;
            if let Some(d) = report.first_divergence {
                writeln!(out, "first divergence: t^{d}")?;
            }
        }
        Format::Json => writeln!(out, "{}", pretty(&report_json(report, order)))?,
        Format::Csv => {
            writeln!(out, "degree,left,right,equal")?;
            let (l, r) = (report.left.series.coeffs(), report.right.series.coeffs());
            for (d, (a, b)) in l.iter().zip(r).enumerate() {
                writeln!(out, "{d},{},{},{}", format_rational(a), format_rational(b), a == b)?;
            }
        }
    }
    Ok(())
}

fn point_string(v: &[BigRational]) -> String {
    let parts: Vec<String> = v.iter().map(ToString::to_string).collect();
    format!("({})", parts.join(","))
}

fn write_cummins_king(report: &CumminsKingReport, format: Format, out: &mut dyn Write) -> Result<(), CliError> {
    let verdict = if report.matches() { "match" } else { "mismatch" };
    match format {
        Format::Text => {
            writeln!(
                out,
                "case cummins-king m={} n={} order={} seed={} trials={}",
                report.m,
                report.n,
                report.order,
                report.seed,
                report.trials.len()
            )?;
            for (i, t) in report.trials.iter().enumerate() {
                let result = match t.first_difference {
                    None => "match".to_string(),
                    Some(d) => format!("mismatch at u^{d}"),
                };
                writeln!(out, "trial {}: x={} y={} {result}", i + 1, point_string(&t.point.x), point_string(&t.point.y))?;
            }
            writeln!(out, "verdict: {verdict}")?;
        }
        Format::Json => {
            let trials: Vec<Value> = report
                .trials
                .iter()
                .map(|t| {
                    json!({
                        "x": t.point.x.iter().map(format_rational).collect::<Vec<_>>(),
                        "y": t.point.y.iter().map(format_rational).collect::<Vec<_>>(),
                        "first_difference": t.first_difference,
                    })
                })
                .collect();
            let doc = json!({
                "case": "cummins-king",
                "m": report.m,
                "n": report.n,
                "order": report.order,
                "seed": report.seed,
                "trials": trials,
                "verdict": verdict,
                "first_difference": report.first_difference(),
            });
            writeln!(out, "{}", pretty(&doc))?;
        }
        Format::Csv => {
            writeln!(out, "trial,x,y,first_difference")?;
            for (i, t) in report.trials.iter().enumerate() {
                let d = t.first_difference.map(|d| d.to_string()).unwrap_or_default();
                writeln!(out, "{},\"{}\",\"{}\",{d}", i + 1, point_string(&t.point.x), point_string(&t.point.y))?;
            }
        }
    }
    Ok(())
}

/// Parameter points of a sweep, in output order.
pub(super) fn sweep_points(range: &SweepRange) -> Vec<(CorrespondenceCase, CaseParams)> {
    let mut points = Vec::new();
    for &case in &range.cases {
        let bases = if case == CorrespondenceCase::D21 { 0..=0 } else { 0..=range.max_base };
        let ks = if case.uses_k() { 1..=range.max_k } else { 0..=0 };
        let ps = if case == CorrespondenceCase::D21 { 1..=range.max_p } else { 0..=range.max_p };
        for base in bases {
            for k in ks.clone() {
                for p in ps.clone() {
                    points.push((case, CaseParams { base, k, p }));
                }
            }
        }
    }
    points
}

fn sweep(range: &SweepRange, order: usize, format: Format, out: &mut dyn Write) -> Result<i32, CliError> {
    let points = sweep_points(range);
    let workers = std::thread::available_parallelism().map_or(1, |n| n.get()).min(points.len().max(1));
    let chunk = points.len().div_ceil(workers).max(1);
    let reports = std::thread::scope(|scope| {
        let handles: Vec<_> = points
            .chunks(chunk)
            .map(|part| {
                scope.spawn(move || {
                    part.iter()
                        .map(|&(case, params)| verify_correspondence(case, params, order))
                        .collect::<Vec<_>>()
                })
            })
            .collect();
        handles
            .into_iter()
            .flat_map(|h| h.join().expect("sweep worker panicked"))
            .collect::<Result<Vec<_>, _>>()
    })?;
    let mismatches = reports.iter().filter(|r| !r.is_match()).count();
    match format {
        Format::Text => {
            for r in &reports {
                let CaseParams { base, k, p } = r.params;
                let tail = r.first_divergence.map(|d| format!(" at t^{d}")).unwrap_or_default();
                writeln!(out, "{} base={base} k={k} p={p}: {}{tail}", r.case, r.verdict.name())?;
            }
            writeln!(out, "{} checks, {mismatches} mismatches", reports.len())?;
        }
        Format::Json => {
            let results: Vec<Value> = reports
                .iter()
                .map(|r| {
                    json!({
                        "case": r.case.name(),
                        "base": r.params.base,
                        "k": r.params.k,
                        "p": r.params.p,
                        "verdict": r.verdict.name(),
                        "first_divergence": r.first_divergence,
                    })
                })
                .collect();
            let doc = json!({ "order": order, "results": results, "mismatches": mismatches });
            writeln!(out, "{}", pretty(&doc))?;
        }
        Format::Csv => {
            writeln!(out, "case,base,k,p,verdict,first_divergence")?;
            for r in &reports {
                let CaseParams { base, k, p } = r.params;
                let d = r.first_divergence.map(|d| d.to_string()).unwrap_or_default();
                writeln!(out, "{},{base},{k},{p},{},{d}", r.case, r.verdict.name())?;
            }
        }
    }
    Ok(i32::from(mismatches > 0))
}
