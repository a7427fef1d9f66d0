//! Property checks shared by the property suite and the acceptance run.
#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use proptest::test_runner::{Config, TestError, TestRunner};

use current_weyl::combinat::partitions;
use current_weyl::exactla::{rank, RankMode, SparseMatrix};
use current_weyl::polyring::{permute_blocks, polarized_power_sum, reynolds, MultiMonomial, Poly};
use current_weyl::symfunc::{e_to_schur, h_to_schur, kostka, tensor_sign, Basis, SymFuncExpr};
use current_weyl::uea::{normal_order_apply, normal_order_apply_with, CurrentWord, FormalCoeff, Generator, Letter, Strategy as Rewrite};

pub const CASES: u32 = 256;

fn runner(cases: u32) -> TestRunner {
    TestRunner::new_with_rng(
        Config {
            cases,
            failure_persistence: None,
            ..Config::default()
        },
        proptest::test_runner::TestRng::deterministic_rng(proptest::test_runner::RngAlgorithm::ChaCha),
    )
}

fn outcome<T: std::fmt::Debug>(r: Result<(), TestError<T>>) -> Result<(), String> {
    r.map_err(|e| e.to_string())
}

fn matrix(max_rows: usize, max_cols: usize, lo: i64, hi: i64) -> impl Strategy<Value = (usize, Vec<Vec<i64>>)> {
    (1..=max_rows, 1..=max_cols).prop_flat_map(move |(r, c)| {
        (Just(c), prop::collection::vec(prop::collection::vec(lo..=hi, c), r))
    })
}

fn dense(cols: usize, rows: &[Vec<i64>]) -> SparseMatrix {
    SparseMatrix::from_dense(cols, rows)
}

/// Rational rank is unchanged by permuting rows or columns and by scaling a
/// row by a nonzero rational; a prime rank never exceeds it.
pub fn rank_invariance(cases: u32) -> Result<(), String> {
    let strat = matrix(6, 6, -3, 3).prop_flat_map(|(c, rows)| {
        let nr = rows.len();
        (
            Just(c),
            Just(rows),
            Just((0..nr).collect::<Vec<_>>()).prop_shuffle(),
            Just((0..c).collect::<Vec<_>>()).prop_shuffle(),
            0..nr,
            (1i64..=5, 1i64..=7, any::<bool>()),
        )
    });
    outcome(runner(cases).run(&strat, |(c, rows, rp, cp, which, (num, den, neg))| {
        let base = rank(&dense(c, &rows), RankMode::Rational).unwrap();
        let permuted: Vec<Vec<i64>> = rp.iter().map(|&i| cp.iter().map(|&j| rows[i][j]).collect()).collect();
        prop_assert_eq!(rank(&dense(c, &permuted), RankMode::Rational).unwrap(), base);

        let mut scaled = SparseMatrix::zeros(rows.len(), c);
        let factor = BigRational::new(BigInt::from(if neg { -num } else { num }), BigInt::from(den));
        for (i, row) in rows.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                let mut x = BigRational::from_integer(v.into());
                if i == which {
                    x *= &factor;
                }
                scaled.set(i, j, x).unwrap();
            }
        }
        prop_assert_eq!(rank(&scaled, RankMode::Rational).unwrap(), base);
        for p in [2u64, 3, 5, 7] {
            prop_assert!(rank(&dense(c, &rows), RankMode::Prime(p)).unwrap() <= base);
        }
        Ok(())
    }))
}

/// Small integer matrices have the same rank over `Q` and modulo a large prime.
pub fn prime_rank_agrees(cases: u32) -> Result<(), String> {
    outcome(runner(cases).run(&matrix(20, 20, -2, 2), |(c, rows)| {
        let m = dense(c, &rows);
        let q = rank(&m, RankMode::Rational).unwrap();
        prop_assert_eq!(rank(&m, RankMode::Prime(1_000_003)).unwrap(), q);
        prop_assert_eq!(rank(&m, RankMode::Prime(2_147_483_647)).unwrap(), q);
        Ok(())
    }))
}

/// Every polarized power sum is fixed by every block permutation.
pub fn power_sum_invariance(cases: u32) -> Result<(), String> {
    let strat = (1usize..=5, 1usize..=3).prop_flat_map(|(n, d)| {
        (
            Just(n),
            prop::collection::vec(0u32..=3, d).prop_filter("nonzero exponent", |a| a.iter().any(|&x| x > 0)),
            Just((0..n).collect::<Vec<_>>()).prop_shuffle(),
        )
    });
    outcome(runner(cases).run(&strat, |(n, alpha, sigma)| {
        let p = polarized_power_sum(&alpha, n).unwrap();
        prop_assert_eq!(permute_blocks(&sigma, &p).unwrap(), p);
        Ok(())
    }))
}

fn composition_of(n: usize) -> impl Strategy<Value = Vec<usize>> {
    prop::collection::vec(any::<bool>(), n.saturating_sub(1)).prop_map(move |cuts| {
        let mut parts = Vec::new();
        let mut len = 1;
        for cut in cuts {
            if cut {
                parts.push(len);
                len = 1;
            } else {
                len += 1;
            }
        }
        parts.push(len);
        parts
    })
}

/// The Young-subgroup average is idempotent and its output is fixed by the
/// subgroup's generators.
pub fn reynolds_idempotence(cases: u32) -> Result<(), String> {
    let strat = (1usize..=4, 1usize..=2).prop_flat_map(|(n, d)| {
        (
            Just(n),
            Just(d),
            prop::collection::vec((prop::collection::vec(0u32..=2, n * d), -4i64..=4), 1..=4),
            composition_of(n),
        )
    });
    outcome(runner(cases).run(&strat, |(n, d, terms, comp)| {
        let p = Poly::from_terms(
            n,
            d,
            terms
                .into_iter()
                .map(|(e, c)| (MultiMonomial::from_rows(n, d, e), BigRational::from_integer(c.into()))),
        );
        let once = reynolds(&comp, &p).unwrap();
        prop_assert_eq!(reynolds(&comp, &once).unwrap(), once.clone());
        let mut start = 0;
        for len in &comp {
            for i in start..start + len - 1 {
                let mut sigma: Vec<usize> = (0..n).collect();
                sigma.swap(i, i + 1);
                prop_assert_eq!(permute_blocks(&sigma, &once).unwrap(), once.clone());
            }
            start += len;
        }
        Ok(())
    }))
}

fn sym_expr(basis: Basis) -> impl Strategy<Value = SymFuncExpr> {
    (1u32..=6).prop_flat_map(move |n| {
        let shapes = partitions(n);
        let k = shapes.len();
        prop::collection::vec((0..k, -5i64..=5), 1..=4).prop_map(move |terms| {
            SymFuncExpr::from_terms(basis, n, terms.into_iter().map(|(i, c)| (shapes[i].clone(), c)))
        })
    })
}

/// `omega` is an involution and commutes with passing to the Schur basis.
pub fn omega_involution(cases: u32) -> Result<(), String> {
    let strat = (sym_expr(Basis::H), sym_expr(Basis::E));
    outcome(runner(cases).run(&strat, |(h, e)| {
        for x in [&h, &e] {
            prop_assert_eq!(tensor_sign(&tensor_sign(x).unwrap()).unwrap(), x.clone());
        }
        let hs = h_to_schur(&h).unwrap();
        prop_assert_eq!(tensor_sign(&tensor_sign(&hs).unwrap()).unwrap(), hs.clone());
        prop_assert_eq!(e_to_schur(&tensor_sign(&h).unwrap()).unwrap(), tensor_sign(&hs).unwrap());
        let es = e_to_schur(&e).unwrap();
        prop_assert_eq!(h_to_schur(&tensor_sign(&e).unwrap()).unwrap(), tensor_sign(&es).unwrap());
        Ok(())
    }))
}

/// `K_{lambda mu}` vanishes unless `lambda` dominates `mu`, and `K_{lambda lambda} = 1`.
pub fn kostka_dominance(cases: u32) -> Result<(), String> {
    let strat = (1u32..=9).prop_flat_map(|n| {
        let k = partitions(n).len();
        (Just(n), 0..k, 0..k)
    });
    outcome(runner(cases).run(&strat, |(n, i, j)| {
        let ps = partitions(n);
        let (l, m) = (&ps[i], &ps[j]);
        let k = kostka(l, m).unwrap();
        if !l.dominates(m) {
            prop_assert_eq!(k, 0);
        } else {
            prop_assert!(k >= 1);
        }
        prop_assert_eq!(kostka(l, l).unwrap(), 1);
        Ok(())
    }))
}

fn letter() -> impl Strategy<Value = Letter> {
    (
        prop_oneof![Just(Generator::E), Just(Generator::H), Just(Generator::F)],
        prop::collection::vec(1u32..=3, 0..=2),
    )
        .prop_map(|(g, s)| Letter::new(g, FormalCoeff::from_symbols(s)))
}

/// Normal ordering does not depend on which admissible commutation is done
/// first.
pub fn rewriting_confluence(cases: u32) -> Result<(), String> {
    let random_word = prop::collection::vec(letter(), 0..=7).prop_map(CurrentWord);
    let martini = (0usize..=3, 0usize..=3).prop_map(|(n, m)| CurrentWord::martini(n, n + m));
    let strat = (prop_oneof![random_word, martini], prop::collection::vec(any::<usize>(), 1..=32));
    outcome(runner(cases).run(&strat, |(word, picks)| {
        let reference = normal_order_apply(&word);
        let mut it = picks.into_iter().cycle();
        let mut choose = move |k: usize| it.next().unwrap() % k;
        let other = normal_order_apply_with(&word, Rewrite::Choose(&mut choose));
        prop_assert_eq!(other, reference);
        Ok(())
    }))
}

pub fn all_properties(cases: u32) -> Vec<(&'static str, Result<(), String>)> {
    vec![
        ("rank invariance", rank_invariance(cases)),
        ("prime rank agreement", prime_rank_agrees(cases)),
        ("power sum invariance", power_sum_invariance(cases)),
        ("reynolds idempotence", reynolds_idempotence(cases)),
        ("omega involution", omega_involution(cases)),
        ("kostka dominance", kostka_dominance(cases)),
        ("rewriting confluence", rewriting_confluence(cases)),
    ]
}

