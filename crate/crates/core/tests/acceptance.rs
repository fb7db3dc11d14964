use std::process::ExitCode;
use std::time::Instant;

use num::{BigRational, Zero};

use osp_superdim::characters::{
    cummins_king_check, d21_sdim_t, e_np_series, osp1_dim_t, ospb_sdim_t, ospd_sdim_t, verify_correspondence,
    CaseParams, CorrespondenceCase, Route,
};
use osp_superdim::partitions::{Bound, BoundedPartitions, Partition};
use osp_superdim::schur::{dim_gl_frobenius, dim_gl_hook, dim_gl_weyl, sdim_gl, super_schur_eval, SuperPoint};
use osp_superdim::series::TruncatedSeries;

type Outcome = Result<(), String>;
type Criterion = (&'static str, fn() -> Outcome);

fn coeffs(s: &TruncatedSeries) -> Vec<BigRational> {
    s.coeffs().to_vec()
}

fn ints(v: &[i64]) -> Vec<BigRational> {
    v.iter().map(|&c| BigRational::from_integer(c.into())).collect()
}

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

fn expect_head(what: &str, s: &TruncatedSeries, head: &[i64]) -> Outcome {
    let got: Vec<BigRational> = s.coeffs().iter().take(head.len()).cloned().collect();
    if got == ints(head) {
        Ok(())
    } else {
        Err(format!("{what}: got {s}"))
    }
}

fn expect_polynomial(what: &str, s: &TruncatedSeries, poly: &[i64], sum: i64) -> Outcome {
    if !s.is_polynomial() {
        return Err(format!("{what}: not a polynomial: {s}"));
    }
    let mut padded = ints(poly);
    padded.resize(s.order() + 1, BigRational::zero());
    if coeffs(s) != padded {
        return Err(format!("{what}: got {s}"));
    }
    let total: BigRational = s.coeffs().iter().sum();
    if total != BigRational::from_integer(sum.into()) {
        return Err(format!("{what}: sum {total}, expected {sum}"));
    }
    Ok(())
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn golden_series() -> Outcome {
    let table: [(usize, usize, &[i64]); 4] = [
        (2, 0, &[1, -2, 0, 2, -1]),
        (3, 1, &[1, 0, -3, 0, 3, 0, -1]),
        (3, 2, &[1, 0, 0, -1]),
        (4, 1, &[1, 0, -6, 0, 15, 0, -20, 0, 15, 0, -6, 0, 1]),
    ];
    for (n, p, poly) in table {
        let e = e_np_series(n, p, 16).map_err(err)?;
        let sum = poly.iter().sum();
        expect_polynomial(&format!("E_{n},{p}"), &e, poly, sum)?;
    }
    let osp16: [&[i64]; 4] = [&[1, 0, 0, 0, 0], &[1, 3, 6, 10, 15], &[1, 3, 9, 18, 36], &[1, 3, 9, 19, 39]];
    for (p, head) in osp16.iter().enumerate() {
        for route in [Route::Sum, Route::Closed] {
            let s = osp1_dim_t(3, p, 4, route).map_err(err)?;
            expect_head(&format!("osp(1|6) p={p} {route:?}"), &s, head)?;
        }
    }
    Ok(())
}

fn golden_polynomials() -> Outcome {
    for n in 1..=3 {
        let b1 = ospb_sdim_t(n + 3, n, 1, 14).map_err(err)?;
        expect_polynomial(&format!("osp({}|{}) p=1", 2 * n + 7, 2 * n), &b1, &[1, 3, 3, 1], 8)?;
        let b2 = ospb_sdim_t(n + 3, n, 2, 14).map_err(err)?;
        expect_polynomial(&format!("osp({}|{}) p=2", 2 * n + 7, 2 * n), &b2, &[1, 3, 9, 9, 9, 3, 1], 35)?;
        let d1 = ospd_sdim_t(n + 5, n, 1, 14).map_err(err)?;
        expect_polynomial(&format!("osp({}|{}) p=1", 2 * n + 10, 2 * n), &d1, &[1, 0, 10, 0, 5], 16)?;
        let d2 = ospd_sdim_t(n + 5, n, 2, 14).map_err(err)?;
        expect_polynomial(&format!("osp({}|{}) p=2", 2 * n + 10, 2 * n), &d2, &[1, 0, 10, 0, 55, 0, 45, 0, 15], 126)?;
    }
    Ok(())
}

fn binomial(n: i64, k: i64) -> i64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn golden_heads() -> Outcome {
    for m in 1..=3 {
        // 1/(1+t)^3
        let inverse_cube: Vec<i64> = (0..=8).map(|j| if j % 2 == 0 { 1 } else { -1 } * binomial(j + 2, 2)).collect();
        expect_head(&format!("osp({}|{}) p=1", 2 * m + 1, 2 * m + 6), &ospb_sdim_t(m, m + 3, 1, 8).map_err(err)?, &inverse_cube)?;
        expect_head(&format!("osp({}|{}) p=2", 2 * m + 1, 2 * m + 6), &ospb_sdim_t(m, m + 3, 2, 8).map_err(err)?, &[1, -3, 9, -18, 36])?;
        expect_head(&format!("osp({}|{}) p=1", 2 * m, 2 * m + 6), &ospd_sdim_t(m, m + 3, 1, 8).map_err(err)?, &[1, 0, 6, 0, 15, 0, 28, 0, 45])?;
        expect_head(&format!("osp({}|{}) p=2", 2 * m, 2 * m + 6), &ospd_sdim_t(m, m + 3, 2, 8).map_err(err)?, &[1, 0, 6, 0, 21, 0, 55, 0, 120])?;
    }
    for p in 1..=6i64 {
        let head: Vec<i64> = (0..=8).map(|j| if j == 0 { p + 1 } else if j % 2 == 0 { 2 * p } else { -2 * p }).collect();
        expect_head(&format!("D(2,1;a) p={p}"), &d21_sdim_t(p as usize, 8).map_err(err)?, &head)?;
    }
    Ok(())
}

fn identity_sweeps() -> Outcome {
    for n in 1..=5 {
        for p in 0..=5 {
            let sum = osp1_dim_t(n, p, 14, Route::Sum).map_err(err)?;
            let closed = osp1_dim_t(n, p, 14, Route::Closed).map_err(err)?;
            if coeffs(&sum) != coeffs(&closed) {
                return Err(format!("osp(1|{}) p={p}: routes differ at t^{:?}", 2 * n, sum.first_difference(&closed)));
            }
        }
    }
    let families = [
        CorrespondenceCase::OspOddVsSoOdd,
        CorrespondenceCase::OspOddVsOsp1,
        CorrespondenceCase::OspEvenVsSoEven,
        CorrespondenceCase::OspEvenVsSp,
    ];
    for case in families {
        for k in 1..=4 {
            for p in 0..=4 {
                for base in 1..=3 {
                    let report = verify_correspondence(case, CaseParams { base, k, p }, 12).map_err(err)?;
                    if !report.is_match() {
                        return Err(format!("{case} base={base} k={k} p={p}: diverges at t^{:?}", report.first_divergence));
                    }
                }
            }
        }
    }
    for p in 0..=5usize {
        let order = 2 * p + 6;
        let mut near = vec![0i64; order + 1];
        near[0] = 1;
        near[p + 1] = -1;
        expect_polynomial(&format!("E_{},{p}", p + 1), &e_np_series(p + 1, p, order).map_err(err)?, &near, 0)?;
        let c = p as i64 + 2;
        let mut next = vec![0i64; order + 1];
        next[0] = 1;
        next[p + 1] = -c;
        next[p + 3] += c;
        next[2 * p + 4] = -1;
        expect_polynomial(&format!("E_{},{p}", p + 2), &e_np_series(p + 2, p, order).map_err(err)?, &next, 0)?;
    }
    Ok(())
}

fn all_partitions(max_weight: usize) -> impl Iterator<Item = Partition> {
    BoundedPartitions::new(Bound::Unbounded, Bound::Unbounded, max_weight)
}

fn oracle_equivalences() -> Outcome {
    for lambda in all_partitions(14) {
        for n in 1..=6 {
            let w = dim_gl_weyl(n, &lambda).map_err(err)?;
            let h = dim_gl_hook(n, &lambda).map_err(err)?;
            let f = dim_gl_frobenius(n, &lambda.frobenius()).map_err(err)?;
            if w != h || w != f {
                return Err(format!("dim gl({n}) {lambda}: weyl {w}, hook {h}, frobenius {f}"));
            }
        }
    }
    let (x2, y2) = (q(2, 3), q(-5, 7));
    let ts = [q(0, 1), q(1, 1), q(1, 2), q(-3, 1)];
    for lambda in all_partitions(8).filter(|l| l.in_hook(2, 2)) {
        let values: Vec<BigRational> = ts
            .iter()
            .map(|t| super_schur_eval(&lambda, &SuperPoint::new(vec![t.clone(), x2.clone()], vec![-t.clone(), y2.clone()])))
            .collect();
        if values.iter().any(|v| v != &values[0]) {
            return Err(format!("cancellation fails for {lambda}: {values:?}"));
        }
    }
    for m in 0..=3 {
        for n in 0..=3 {
            let pt = SuperPoint::unit(m, n);
            for lambda in all_partitions(10) {
                let expected = BigRational::from_integer(sdim_gl(m, n, &lambda));
                if super_schur_eval(&lambda, &pt) != expected {
                    return Err(format!("s_{lambda}(1^{m}|(-1)^{n}) differs from sdim {expected}"));
                }
            }
        }
    }
    for (m, n) in [(1, 1), (2, 1), (1, 2), (2, 2)] {
        let report = cummins_king_check(m, n, 8, 5, 2024).map_err(err)?;
        if !report.matches() {
            return Err(format!("cummins-king {m}|{n}: first difference at u^{:?}", report.first_difference()));
        }
    }
    Ok(())
}

fn scope_statement() -> Outcome {
    println!("  note: general-rank character theory is covered only through the golden values and cross-route suites above");
    Ok(())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 6] = [
        ("golden E_{n,p} and osp(1|6) series", golden_series),
        ("golden superdimension polynomials", golden_polynomials),
        ("golden infinite-series heads", golden_heads),
        ("identity sweeps", identity_sweeps),
        ("oracle equivalences", oracle_equivalences),
        ("scope of large-scale claims", scope_statement),
    ];
    let start = Instant::now();
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let t = Instant::now();
        match check() {
            Ok(()) => println!("PASS {} {name} ({:.2?})", i + 1, t.elapsed()),
            Err(e) => {
                failed += 1;
                println!("FAIL {} {name}: {e}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed in {:.2?}", criteria.len() - failed, criteria.len(), start.elapsed());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
