//! Reference values recomputed from scratch by `selftest`.

use std::io::Write;

use num::{BigInt, BigRational, One, Zero};
use serde_json::json;

use super::{CliError, Format};
use crate::characters::{
    d21_closed_form, d21_sdim_t, e_np_series, osp1_dim_t, ospb_sdim_t, ospd_sdim_t, so_even_dim_t, so_odd_dim_t,
    sp_dim_t, spinor_sdim, spinor_tdim, verify_correspondence, CaseParams, Chirality, CorrespondenceCase, Route,
};
use crate::partitions::{enum_e_terms, enum_even, enum_paired, Bound, Partition, Sign};
use crate::schur::{dim_gl_weyl, schur_eval, sdim_gl};
use crate::series::{RationalFunction, TruncatedSeries};

/// A named check; `Err` carries a description of the deviation.
#[derive(Debug, Clone, Copy)]
pub struct Check {
    pub name: &'static str,
    pub run: fn() -> Result<(), String>,
}

type Outcome = Result<(), String>;

fn part(s: &str) -> Partition {
    s.parse().expect("literal partition")
}

fn int(c: &[i64], order: usize) -> TruncatedSeries {
    TruncatedSeries::from_integers(c, order)
}

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

fn same<T: PartialEq + std::fmt::Debug>(got: T, expected: T) -> Outcome {
    if got == expected {
        Ok(())
    } else {
        Err(format!("expected {expected:?}, got {got:?}"))
    }
}

/// Coefficient-by-coefficient comparison over the expected window.
fn series_eq(got: &TruncatedSeries, expected: &TruncatedSeries) -> Outcome {
    if got.order() < expected.order() {
        return Err(format!("order {} is below {}", got.order(), expected.order()));
    }
    match got.first_difference(expected) {
        None => Ok(()),
        Some(d) => Err(format!(
            "t^{d}: expected {}, got {} (series {got})",
            expected.coeffs()[d],
            got.coeffs()[d]
        )),
    }
}

fn total(s: &TruncatedSeries, expected: i64) -> Outcome {
    let e = s.eval_at_one();
    if !e.polynomial {
        return Err(format!("{s} is not flagged as a polynomial"));
    }
    same(e.value, BigRational::from_integer(expected.into()))
}

fn all(outcomes: impl IntoIterator<Item = Outcome>) -> Outcome {
    outcomes.into_iter().collect()
}

fn e(n: usize, p: usize, order: usize) -> TruncatedSeries {
    e_np_series(n, p, order).expect("valid E parameters")
}

fn rf(num: &[i64], den: &[i64]) -> RationalFunction {
    RationalFunction::from_integers(num, den).expect("nonzero denominator")
}

fn binomial_power(c: i64, d: usize, e: u32) -> RationalFunction {
    RationalFunction::binomial_power(c, d, e)
}

fn cli_output(args: &[&str]) -> (i32, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = super::run(std::iter::once("osp-superdim").chain(args.iter().copied()), &mut out, &mut err);
    (code, String::from_utf8_lossy(&out).into_owned())
}

pub fn selftest_checks() -> Vec<Check> {
    macro_rules! check {
        ($name:expr, $body:expr) => {
            Check {
                name: $name,
                run: || $body,
            }
        };
    }
    vec![
        check!("conjugate (5,4,4,2)", same(part("5,4,4,2").conjugate(), part("4,4,3,3,1"))),
        check!("frobenius (5,4,4,2)", same(part("5,4,4,2").frobenius().to_string(), "(4 2 1 | 3 2 0)".to_string())),
        check!("frobenius rank of (0)", same(part("0").frobenius().rank(), 0)),
        check!("hook length (1,1) of (5,4,4,2)", same(part("5,4,4,2").hook_length(1, 1), Ok(8))),
        check!("hook length (4,2) of (5,4,4,2)", same(part("5,4,4,2").hook_length(4, 2), Ok(1))),
        check!("hook grid first row of (5,4,4,2) at n=5", {
            let l = part("5,4,4,2");
            let contents: Vec<usize> = (1..=5).map(|j| 5 + j - 1).collect();
            let hooks: Vec<usize> = (1..=5).map(|j| l.hook_length(1, j).unwrap_or(0)).collect();
            all([same(contents, vec![5, 6, 7, 8, 9]), same(hooks, vec![8, 7, 5, 4, 1])])
        }),
        check!("paired partitions up to weight 6", {
            let got: Vec<String> = enum_paired(Bound::Unbounded, Bound::Unbounded, 6).map(|l| l.to_string()).collect();
            same(got.join(" "), "(0) (1,1) (2,2) (1,1,1,1) (3,3) (2,2,1,1) (1,1,1,1,1,1)".to_string())
        }),
        check!("even partitions, one row, weight 8", {
            let got: Vec<String> = enum_even(Bound::AtMost(1), 8).map(|l| l.to_string()).collect();
            same(got.join(" "), "(0) (2) (4) (6) (8)".to_string())
        }),
        check!("even partitions, two rows, weight 8", {
            let got: Vec<String> = enum_even(Bound::AtMost(2), 8).map(|l| l.to_string()).collect();
            same(got.join(" "), "(0) (2) (4) (2,2) (6) (4,2) (8) (6,2) (4,4)".to_string())
        }),
        check!("E_{3,2} terms", {
            let terms: Vec<(Partition, Sign)> =
                enum_e_terms(3, 2).map_err(|e| e.to_string())?.map(|(f, s)| (f.to_partition(), s)).collect();
            same(terms, vec![(part("0"), Sign::Plus), (part("1,1,1"), Sign::Minus)])
        }),
        check!("E_{2,0} has 4 terms", same(enum_e_terms(2, 0).map_err(|e| e.to_string())?.count(), 4)),
        check!("sdim gl(2|2) (3,1) = 0", same(sdim_gl(2, 2, &part("3,1")), BigInt::zero())),
        check!("s_(0) = 1", same(schur_eval(&part("0"), &[rat(2, 3), rat(-5, 7)]), BigRational::one())),
        check!("s_λ(1,…,1) = dim gl(n)^λ", {
            all(["2,1", "3,3,1", "4,2,2,1", "5,4,4,2"].into_iter().flat_map(|l| {
                (1..=5).map(move |n| {
                    let l = part(l);
                    let ones = vec![BigRational::one(); n];
                    let d = dim_gl_weyl(n, &l).map_err(|e| e.to_string())?;
                    same(schur_eval(&l, &ones), BigRational::from_integer(d))
                })
            }))
        }),
        check!("s_λ(t,…,t) = t^|λ| s_λ(1,…,1) at t = 2/3", {
            all(["2,1", "3,1,1", "2,2,2", "4,3,1"].into_iter().map(|l| {
                let l = part(l);
                let t = rat(2, 3);
                let at_t = schur_eval(&l, &vec![t.clone(); 4]);
                let at_one = schur_eval(&l, &vec![BigRational::one(); 4]);
                same(at_t, num::pow(t, l.weight()) * at_one)
            }))
        }),
        check!("1/2 (1/(1+t)^3 + 1/(1-t)^3)", {
            let a = binomial_power(1, 1, 3).expand(8).map_err(|e| e.to_string())?;
            let b = binomial_power(-1, 1, 3).expand(8).map_err(|e| e.to_string())?;
            let one = TruncatedSeries::one(8);
            let s = (one.div(&a).map_err(|e| e.to_string())? + one.div(&b).map_err(|e| e.to_string())?).scale(&rat(1, 2));
            series_eq(&s, &int(&[1, 0, 6, 0, 15, 0, 28, 0, 45], 8))
        }),
        check!("(1-t)^2 (1-t^2)", {
            let s = binomial_power(-1, 1, 2).mul(&binomial_power(-1, 2, 1)).expand(8).map_err(|e| e.to_string())?;
            series_eq(&s, &int(&[1, -2, 0, 2, -1, 0, 0, 0, 0], 8))
        }),
        check!("(1-t^2)^6", {
            let s = binomial_power(-1, 2, 6).expand(14).map_err(|e| e.to_string())?;
            series_eq(&s, &int(&[1, 0, -6, 0, 15, 0, -20, 0, 15, 0, -6, 0, 1, 0, 0], 14))
        }),
        check!("1/(1+t)^3", {
            let s = rf(&[1], &[1, 3, 3, 1]).expand(4).map_err(|e| e.to_string())?;
            series_eq(&s, &int(&[1, -3, 6, -10, 15], 4))
        }),
        check!("(1-t^3)/((1-t)^3 (1-t^2)^3)", {
            let den = binomial_power(-1, 1, 3).mul(&binomial_power(-1, 2, 3));
            let s = rf(&[1, 0, 0, -1], &[1]).div(&den).map_err(|e| e.to_string())?.expand(4).map_err(|e| e.to_string())?;
            series_eq(&s, &int(&[1, 3, 9, 18, 36], 4))
        }),
        check!("osp(1|6) p=1 at -t is 1/(1+t)^3", {
            let s = osp1_dim_t(3, 1, 8, Route::Sum).map_err(|e| e.to_string())?.substitute_neg_t();
            let expected = rf(&[1], &[1, 3, 3, 1]).expand(8).map_err(|e| e.to_string())?;
            series_eq(&s, &expected)
        }),
        check!("1+3t+3t^2+t^3 at t=1 is 8", total(&int(&[1, 3, 3, 1], 8).truncate(8), 8)),
        check!("so(10) [0,0,0,2,0] at t=1 is 126", {
            total(&so_even_dim_t(5, 2, Chirality::NextToLast, 10).map_err(|e| e.to_string())?, 126)
        }),
        check!("E_{3,2} = 1-t^3", series_eq(&e(3, 2, 12), &int(&[1, 0, 0, -1], 12))),
        check!("E_{3,1} = (1-t^2)^3", series_eq(&e(3, 1, 12), &int(&[1, 0, -3, 0, 3, 0, -1], 12))),
        check!("E_{2,0} = 1-2t+2t^3-t^4", series_eq(&e(2, 0, 12), &int(&[1, -2, 0, 2, -1], 12))),
        check!("E_{4,1} = (1-t^2)^6", series_eq(&e(4, 1, 14), &int(&[1, 0, -6, 0, 15, 0, -20, 0, 15, 0, -6, 0, 1], 14))),
        check!("E_{p+2,p} for p=1..4", {
            all((1..=4usize).map(|p| {
                let q = p as i64 + 2;
                let mut c = vec![0i64; 2 * p + 5];
                c[0] = 1;
                c[p + 1] = -q;
                c[p + 3] = q;
                c[2 * p + 4] = -1;
                series_eq(&e(p + 2, p, 2 * p + 4), &int(&c, 2 * p + 4))
            }))
        }),
        check!("osp(1|6) p=0..3, both routes", {
            let expected = [
                int(&[1, 0, 0, 0, 0], 4),
                int(&[1, 3, 6, 10, 15], 4),
                int(&[1, 3, 9, 18, 36], 4),
                int(&[1, 3, 9, 19, 39], 4),
            ];
            all(expected.iter().enumerate().flat_map(|(p, want)| {
                [Route::Sum, Route::Closed].map(|route| series_eq(&osp1_dim_t(3, p, 4, route).map_err(|e| e.to_string())?, want))
            }))
        }),
        check!("osp(2n+1|2n) is trivial", {
            all((0..4).flat_map(|n| (0..4).map(move |p| series_eq(&ospb_sdim_t(n, n, p, 16).map_err(|e| e.to_string())?, &TruncatedSeries::one(16)))))
        }),
        check!("osp(2n+7|2n) p=1", {
            all((0..3).map(|n| {
                let s = ospb_sdim_t(n + 3, n, 1, 8).map_err(|e| e.to_string())?;
                series_eq(&s, &int(&[1, 3, 3, 1, 0, 0, 0, 0, 0], 8)).and(total(&s, 8))
            }))
        }),
        check!("osp(2n+7|2n) p=2", {
            all((0..3).map(|n| {
                let s = ospb_sdim_t(n + 3, n, 2, 8).map_err(|e| e.to_string())?;
                series_eq(&s, &int(&[1, 3, 9, 9, 9, 3, 1, 0, 0], 8)).and(total(&s, 35))
            }))
        }),
        check!("osp(2m+1|2m+6) p=1 and p=2", {
            all((0..3).flat_map(|m| {
                [(1, [1, -3, 6, -10, 15]), (2, [1, -3, 9, -18, 36])]
                    .map(|(p, c)| series_eq(&ospb_sdim_t(m, m + 3, p, 4).map_err(|e| e.to_string())?, &int(&c, 4)))
            }))
        }),
        check!("so(7) [0,0,2] and [0,0,1]", {
            let two = so_odd_dim_t(3, 2, 8).map_err(|e| e.to_string())?;
            let one = so_odd_dim_t(3, 1, 8).map_err(|e| e.to_string())?;
            all([series_eq(&two, &int(&[1, 3, 9, 9, 9, 3, 1, 0, 0], 8)), total(&two, 35), total(&one, 8)])
        }),
        check!("osp(2n|2n) is trivial", {
            all((0..4).flat_map(|n| (0..4).map(move |p| series_eq(&ospd_sdim_t(n, n, p, 16).map_err(|e| e.to_string())?, &TruncatedSeries::one(16)))))
        }),
        check!("osp(2n+10|2n) p=1 and p=2", {
            all((0..3).flat_map(|n| {
                let one = ospd_sdim_t(n + 5, n, 1, 10);
                let two = ospd_sdim_t(n + 5, n, 2, 10);
                [
                    one.map_err(|e| e.to_string()).and_then(|s| {
                        series_eq(&s, &int(&[1, 0, 10, 0, 5, 0, 0, 0, 0, 0, 0], 10)).and(total(&s, 16))
                    }),
                    two.map_err(|e| e.to_string()).and_then(|s| {
                        series_eq(&s, &int(&[1, 0, 10, 0, 55, 0, 45, 0, 15, 0, 0], 10)).and(total(&s, 126))
                    }),
                ]
            }))
        }),
        check!("osp(2m|2m+6) p=1 and p=2", {
            all((0..3).flat_map(|m| {
                [(1, [1, 0, 6, 0, 15, 0, 28, 0, 45]), (2, [1, 0, 6, 0, 21, 0, 55, 0, 120])]
                    .map(|(p, c)| series_eq(&ospd_sdim_t(m, m + 3, p, 8).map_err(|e| e.to_string())?, &int(&c, 8)))
            }))
        }),
        check!("so(10) [0,0,0,2,0]", {
            let s = so_even_dim_t(5, 2, Chirality::NextToLast, 10).map_err(|e| e.to_string())?;
            series_eq(&s, &int(&[1, 0, 10, 0, 55, 0, 45, 0, 15, 0, 0], 10))
        }),
        check!("sp(6) p=1 and p=2", {
            let one = sp_dim_t(3, 1, 8).map_err(|e| e.to_string())?;
            let two = sp_dim_t(3, 2, 8).map_err(|e| e.to_string())?;
            let half = rf(&[1], &[1, 3, 3, 1])
                .add(&rf(&[1], &[1, -3, 3, -1]))
                .scale(&rat(1, 2))
                .expand(8)
                .map_err(|e| e.to_string())?;
            all([
                series_eq(&one, &int(&[1, 0, 6, 0, 15, 0, 28, 0, 45], 8)),
                series_eq(&one, &half),
                series_eq(&two, &int(&[1, 0, 6, 0, 21, 0, 55, 0, 120], 8)),
            ])
        }),
        check!("spinor space t-dimension and superdimension", {
            let binom = |n: i64, k: i64| (0..k).fold(1i64, |acc, i| acc * (n - i) / (i + 1));
            let levels = (1..6i64).flat_map(|n| {
                let s = spinor_tdim(0, n as usize, 8);
                (0..=8i64).map(move |j| same(s.coeffs()[j as usize].clone(), BigRational::from_integer(binom(n + j - 1, j).into())))
            });
            let sdims = (0..4usize).flat_map(|m| {
                (0..4usize).map(move |n| {
                    let expected = num::pow(rat(2, 1), m) / num::pow(rat(2, 1), n);
                    same(spinor_sdim(m, n).map_err(|e| e.to_string())?, expected)
                })
            });
            all(levels.chain(sdims))
        }),
        check!("D(2,1;alpha) p=1 head", series_eq(&d21_sdim_t(1, 8).map_err(|e| e.to_string())?, &int(&[2, -2, 2, -2, 2, -2, 2, -2, 2], 8))),
        check!("D(2,1;alpha) p=3 head", series_eq(&d21_sdim_t(3, 8).map_err(|e| e.to_string())?, &int(&[4, -6, 6, -6, 6, -6, 6, -6, 6], 8))),
        check!("D(2,1;alpha) superdimension is 1", {
            all((1..=6).map(|p| same(d21_closed_form(p).map_err(|e| e.to_string())?.value_at(&BigRational::one()), Some(BigRational::one()))))
        }),
        check!("correspondence osp(2n+7|2n) [0,…,0,2] = so(7)", {
            let r = verify_correspondence(CorrespondenceCase::OspOddVsSoOdd, CaseParams { base: 2, k: 3, p: 2 }, 12).map_err(|e| e.to_string())?;
            same(r.first_divergence, None)
        }),
        check!("correspondence osp(2m+1|2m+6) p=1 = osp(1|6) at -t", {
            let r = verify_correspondence(CorrespondenceCase::OspOddVsOsp1, CaseParams { base: 1, k: 3, p: 1 }, 12).map_err(|e| e.to_string())?;
            same(r.first_divergence, None)
        }),
        check!("correspondence osp(2n+10|2n) p=2 = so(10) [0,0,0,2,0]", {
            let r = verify_correspondence(CorrespondenceCase::OspEvenVsSoEven, CaseParams { base: 2, k: 5, p: 2 }, 12).map_err(|e| e.to_string())?;
            same(r.first_divergence, None)
        }),
        check!("cli series ospB m=5 n=2 p=2", {
            let (code, text) = cli_output(&["series", "--family", "ospB", "--m", "5", "--n", "2", "--p", "2", "--order", "8", "--format", "text"]);
            same((code, text.trim_end().to_string()), (0, "1 + 3t + 9t^2 + 9t^3 + 9t^4 + 3t^5 + t^6".to_string()))
        }),
        check!("cli verify ospB-vs-soOdd k=3 p=1", {
            let (code, text) = cli_output(&["verify", "--case", "ospB-vs-soOdd", "--k", "3", "--p", "1", "--order", "10"]);
            same((code, text.contains("verdict: match")), (0, true))
        }),
    ]
}

pub(super) fn run_selftest(format: Format, out: &mut dyn Write) -> Result<i32, CliError> {
    let results: Vec<(&str, Outcome)> = selftest_checks().into_iter().map(|c| (c.name, (c.run)())).collect();
    let failed = results.iter().filter(|(_, r)| r.is_err()).count();
    match format {
        Format::Text => {
            for (name, r) in &results {
                match r {
                    Ok(()) => writeln!(out, "ok   {name}")?,
                    Err(detail) => writeln!(out, "FAIL {name}: {detail}")?,
                }
            }
            writeln!(out, "{} checks, {failed} failed", results.len())?;
        }
        Format::Json => {
            let checks: Vec<_> = results
                .iter()
                .map(|(name, r)| json!({ "name": name, "passed": r.is_ok(), "detail": r.as_ref().err() }))
                .collect();
            let doc = json!({ "checks": checks, "failed": failed });
            writeln!(out, "{}", serde_json::to_string_pretty(&doc).expect("serializable"))?;
        }
        Format::Csv => {
            writeln!(out, "name,passed")?;
            for (name, r) in &results {
                writeln!(out, "\"{name}\",{}", r.is_ok())?;
            }
        }
    }
    Ok(i32::from(failed > 0))
}
