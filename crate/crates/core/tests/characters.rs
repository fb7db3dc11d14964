use num::{BigInt, BigRational, One, Zero};

use osp_superdim::characters::{
    d21_closed_form, d21_decomposition, d21_sdim_t, e_np_series, osp1_closed_form, osp1_dim_t, ospb_sdim_t,
    ospd_sdim_t, so_even_dim_t, so_odd_dim_t, sp_dim_t, verify_correspondence, CaseParams, Chirality,
    CorrespondenceCase, Route,
};
use osp_superdim::series::{RationalFunction, TruncatedSeries};

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

fn binomial_power(c: i64, d: usize, e: usize, order: usize) -> TruncatedSeries {
    let base = TruncatedSeries::one(order) + TruncatedSeries::monomial(BigRational::from_integer(c.into()), d, order);
    base.pow(e as u32)
}

/// Weyl dimension for a weight given in the orthonormal basis with `ρ`.
/// `odd` selects `B_k` (short roots `e_i`) over `D_k`.
fn weyl_orthogonal(lambda: &[BigRational], odd: bool) -> BigRational {
    let k = lambda.len();
    let rho: Vec<BigRational> = (0..k)
        .map(|i| {
            let r = BigRational::from_integer(((k - 1 - i) as i64).into());
            if odd {
                r + q(1, 2)
            } else {
                r
            }
        })
        .collect();
    let shifted: Vec<BigRational> = lambda.iter().zip(&rho).map(|(l, r)| l + r).collect();
    let mut num = BigRational::one();
    let mut den = BigRational::one();
    for i in 0..k {
        for j in i + 1..k {
            num *= &shifted[i] * &shifted[i] - &shifted[j] * &shifted[j];
            den *= &rho[i] * &rho[i] - &rho[j] * &rho[j];
        }
        if odd {
            num *= &shifted[i];
            den *= &rho[i];
        }
    }
    num / den
}

fn so_odd_oracle(k: usize, p: usize) -> BigRational {
    weyl_orthogonal(&vec![q(p as i64, 2); k], true)
}

fn so_even_oracle(k: usize, p: usize, chirality: Chirality) -> BigRational {
    let mut lambda = vec![q(p as i64, 2); k];
    if chirality == Chirality::NextToLast {
        lambda[k - 1] = -lambda[k - 1].clone();
    }
    weyl_orthogonal(&lambda, false)
}

fn total(s: &TruncatedSeries) -> BigRational {
    assert!(s.is_polynomial());
    s.coeffs().iter().sum()
}

#[test]
fn oracle_reproduces_known_dimensions() {
    assert_eq!(so_odd_oracle(3, 1), q(8, 1));
    assert_eq!(so_odd_oracle(2, 2), q(10, 1));
    assert_eq!(so_even_oracle(5, 1, Chirality::Last), q(16, 1));
    assert_eq!(so_even_oracle(4, 2, Chirality::NextToLast), q(35, 1));
    assert_eq!(so_even_oracle(3, 2, Chirality::Last), q(10, 1));
}

#[test]
fn so_odd_matches_weyl_dimension() {
    for k in 1..=5 {
        for p in 0..=4 {
            let s = so_odd_dim_t(k, p, 40).unwrap();
            assert_eq!(total(&s), so_odd_oracle(k, p), "so({}) p={p}", 2 * k + 1);
        }
    }
}

#[test]
fn so_even_matches_weyl_dimension() {
    for k in 2..=4 {
        for p in 0..=3 {
            for chirality in [Chirality::Last, Chirality::NextToLast] {
                let s = so_even_dim_t(k, p, chirality, 40).unwrap();
                assert_eq!(total(&s), so_even_oracle(k, p, chirality), "so({}) p={p} {chirality:?}", 2 * k);
            }
        }
    }
}

#[test]
fn so_even_chiralities_differ_in_grading() {
    for k in 2..=5 {
        let last = so_even_dim_t(k, 1, Chirality::Last, 20).unwrap();
        let next = so_even_dim_t(k, 1, Chirality::NextToLast, 20).unwrap();
        assert_eq!(total(&last), total(&next));
        let even_levels_only = |s: &TruncatedSeries| s.coeffs().iter().skip(1).step_by(2).all(Zero::is_zero);
        assert!(even_levels_only(if k % 2 == 0 { &last } else { &next }), "k={k}");
    }
}

#[test]
fn osp1_routes_agree() {
    for n in 1..=5 {
        for p in 0..=5 {
            let sum = osp1_dim_t(n, p, 14, Route::Sum).unwrap();
            let closed = osp1_dim_t(n, p, 14, Route::Closed).unwrap();
            assert_eq!(sum.coeffs(), closed.coeffs(), "n={n} p={p}");
        }
    }
}

#[test]
fn osp1_without_row_bound_sums_all_schur_functions() {
    for n in 1..=4 {
        let pairs = (n * (n - 1) / 2) as u32;
        let free = RationalFunction::binomial_power(-1, 1, n as u32).mul(&RationalFunction::binomial_power(-1, 2, pairs));
        let expected = RationalFunction::polynomial(vec![BigRational::one()]).div(&free).unwrap().expand(12).unwrap();
        for p in n..=n + 2 {
            assert_eq!(osp1_dim_t(n, p, 12, Route::Sum).unwrap(), expected, "n={n} p={p}");
        }
    }
}

#[test]
fn e_factorization() {
    for n in 1..=6 {
        let pairs = n * (n - 1) / 2;
        let order = n + 2 * pairs + 2;
        let e0 = e_np_series(n, 0, order).unwrap();
        let f0 = &binomial_power(-1, 1, n, order) * &binomial_power(-1, 2, pairs, order);
        assert_eq!(e0.coeffs(), f0.coeffs(), "E_{{{n},0}}");
        let e1 = e_np_series(n, 1, order).unwrap();
        assert_eq!(e1.coeffs(), binomial_power(-1, 2, pairs, order).coeffs(), "E_{{{n},1}}");
    }
}

#[test]
fn e_near_diagonal_closed_forms() {
    for p in 0..=6 {
        let order = 2 * p + 6;
        let e = e_np_series(p + 1, p, order).unwrap();
        let expected = TruncatedSeries::one(order) - TruncatedSeries::monomial(BigRational::one(), p + 1, order);
        assert_eq!(e.coeffs(), expected.coeffs(), "E_{{{},{p}}}", p + 1);
    }
    for p in 0..=5 {
        let order = 2 * p + 6;
        let c = BigRational::from_integer(BigInt::from(p + 2));
        let e = e_np_series(p + 2, p, order).unwrap();
        let expected = TruncatedSeries::one(order) - TruncatedSeries::monomial(c.clone(), p + 1, order)
            + TruncatedSeries::monomial(c, p + 3, order)
            - TruncatedSeries::monomial(BigRational::one(), 2 * p + 4, order);
        assert_eq!(e.coeffs(), expected.coeffs(), "E_{{{},{p}}}", p + 2);
    }
}

#[test]
fn e_vanishes_at_one() {
    for n in 1..=6 {
        for p in 0..n {
            let e = e_np_series(n, p, 60).unwrap();
            assert!(e.is_polynomial());
            assert!(total(&e).is_zero(), "n={n} p={p}");
        }
    }
}

#[test]
fn osp1_closed_form_is_reduced_by_the_sum() {
    for n in 1..=4 {
        for p in 0..=4 {
            let rf = osp1_closed_form(n, p).unwrap();
            let series = osp1_dim_t(n, p, 10, Route::Sum).unwrap();
            assert_eq!(rf.expand(10).unwrap().coeffs(), series.coeffs());
        }
    }
}

#[test]
fn equal_rank_is_trivial() {
    for n in 0..=4 {
        for p in 0..=4 {
            assert_eq!(ospb_sdim_t(n, n, p, 16).unwrap().coeffs(), TruncatedSeries::one(16).coeffs(), "B n={n} p={p}");
            assert_eq!(ospd_sdim_t(n, n, p, 16).unwrap().coeffs(), TruncatedSeries::one(16).coeffs(), "D n={n} p={p}");
        }
    }
}

#[test]
fn superdimension_is_stable_in_n() {
    for k in 0..=3 {
        for p in 0..=3 {
            let reference_b = ospb_sdim_t(2 * k, k, p, 12).unwrap();
            let reference_d = ospd_sdim_t(2 * k, k, p, 12).unwrap();
            let reference_b_rev = ospb_sdim_t(k, 2 * k, p, 12).unwrap();
            let reference_d_rev = ospd_sdim_t(k, 2 * k, p, 12).unwrap();
            for n in k + 1..=k + 3 {
                assert_eq!(ospb_sdim_t(n + k, n, p, 12).unwrap().coeffs(), reference_b.coeffs(), "B k={k} p={p} n={n}");
                assert_eq!(ospd_sdim_t(n + k, n, p, 12).unwrap().coeffs(), reference_d.coeffs(), "D k={k} p={p} n={n}");
                assert_eq!(ospb_sdim_t(n, n + k, p, 12).unwrap().coeffs(), reference_b_rev.coeffs(), "B' k={k} p={p} n={n}");
                assert_eq!(ospd_sdim_t(n, n + k, p, 12).unwrap().coeffs(), reference_d_rev.coeffs(), "D' k={k} p={p} n={n}");
            }
        }
    }
}

#[test]
fn sp_matches_negated_osp_even() {
    for k in 1..=3 {
        for p in 0..=3 {
            let sp = sp_dim_t(k, p, 12).unwrap().substitute_neg_t();
            assert_eq!(ospd_sdim_t(2, 2 + k, p, 12).unwrap().coeffs(), sp.coeffs(), "k={k} p={p}");
        }
    }
}

#[test]
fn correspondence_sweep() {
    for case in CorrespondenceCase::ALL {
        let ks: Vec<usize> = if case.uses_k() { (1..=4).collect() } else { vec![0] };
        let bases: Vec<usize> = if case == CorrespondenceCase::D21 { vec![0] } else { (0..=4).collect() };
        let ps: Vec<usize> = if case == CorrespondenceCase::D21 { (1..=4).collect() } else { (0..=4).collect() };
        for &base in &bases {
            for &k in &ks {
                for &p in &ps {
                    let report = verify_correspondence(case, CaseParams { base, k, p }, 12).unwrap();
                    assert!(report.is_match(), "{case:?} base={base} k={k} p={p}: {:?}", report.first_divergence);
                    assert_eq!(report.left.series.first_difference(&report.right.series), None);
                }
            }
        }
    }
}

#[test]
fn d21_series_agree_with_closed_form() {
    for p in 1..=8 {
        let series = d21_sdim_t(p, 14).unwrap();
        let closed = d21_closed_form(p).unwrap().expand(14).unwrap();
        assert_eq!(series.coeffs(), closed.coeffs(), "p={p}");
        let dims: usize = d21_decomposition(p).unwrap().iter().map(|c| c.dim()).sum();
        assert_eq!(dims, 4 * p, "p={p}");
        let expected = q(1 - p as i64, 1) + q(2 * p as i64, 1) / (BigRational::one() + q(1, 3));
        assert_eq!(d21_closed_form(p).unwrap().value_at(&q(1, 3)), Some(expected));
        assert_eq!(d21_closed_form(p).unwrap().value_at(&q(-1, 1)), None);
    }
}
