use std::collections::BTreeMap;

use current_weyl::coinvariants::{coinvariant_dims, invariant_coinvariant_dims, CoinvariantConfig};
use current_weyl::combinat::{enumerate_parking_functions, multinomial};
use current_weyl::exactla::{RankStrategy, Ranker};
use current_weyl::uea::{enumerate_servings, martini_check, CocktailServing};
use current_weyl::weylmod::origin_weyl_character;

fn ranker() -> Ranker {
    Ranker::new(RankStrategy::default()).unwrap()
}

#[test]
fn highest_weight_is_simple_and_sl2_characters_are_symmetric() {
    let r = ranker();
    let cfg = CoinvariantConfig::default();
    for d in 1..=2 {
        for n in 0..=4 {
            let c = origin_weyl_character(n, d, 1, &r, &cfg).unwrap();
            assert_eq!(c.get(&c.highest_composition()), 1);
            for i in 0..=n as u32 {
                let j = n as u32 - i;
                assert_eq!(c.get(&[i, j]), c.get(&[j, i]), "n={n} d={d}");
            }
        }
    }
}

#[test]
fn coinvariant_dims_are_symmetric_in_coordinates() {
    let r = ranker();
    let cfg = CoinvariantConfig::default();
    for (n, d) in [(2, 2), (3, 2), (4, 2), (2, 3), (3, 3)] {
        let g = coinvariant_dims(n, d, &r, &cfg).unwrap();
        for (mu, dim) in g.iter() {
            let mut rev = mu.clone();
            rev.reverse();
            assert_eq!(g.get(&rev), dim);
            for k in 0..d - 1 {
                let mut sw = mu.clone();
                sw.swap(k, k + 1);
                assert_eq!(g.get(&sw), dim);
            }
        }
    }
}

/// Young invariants of the trivial subgroup recover the whole quotient, and
/// the multiplicities do not depend on the order of the blocks.
#[test]
fn young_invariants_are_consistent_with_the_full_quotient() {
    let r = ranker();
    let cfg = CoinvariantConfig::default();
    for d in 1..=2 {
        for n in 1..=3 {
            let full = coinvariant_dims(n, d, &r, &cfg).unwrap();
            let ones = invariant_coinvariant_dims(n, d, &vec![1; n], &r, &cfg).unwrap();
            assert_eq!(ones, full);
            let c = origin_weyl_character(n, d, (n - 1).max(1), &r, &cfg).unwrap();
            let mut by_sorted: BTreeMap<Vec<u32>, u64> = BTreeMap::new();
            for (comp, m) in c.iter() {
                let mut key = comp.clone();
                key.sort();
                assert_eq!(*by_sorted.entry(key).or_insert(m), m, "n={n} d={d} {comp:?}");
            }
        }
    }
    // d = 1 gives the regular representation, whose Young invariants are counted by cosets
    let c = origin_weyl_character(3, 1, 2, &r, &cfg).unwrap();
    for (comp, m) in c.iter() {
        assert_eq!(multinomial(comp), m.into());
    }
}

#[test]
fn diagonal_quotient_counts_parking_functions() {
    let r = ranker();
    let cfg = CoinvariantConfig::default();
    for n in 1..=4 {
        let g = coinvariant_dims(n, 2, &r, &cfg).unwrap();
        assert_eq!(g.total(), enumerate_parking_functions(n).len() as u64);
    }
}

fn relabel(s: &CocktailServing, sigma: &[u32]) -> CocktailServing {
    CocktailServing::new(
        s.glasses()
            .iter()
            .map(|g| g.iter().map(|&i| sigma[i as usize - 1]).collect())
            .collect(),
    )
}

#[test]
fn martini_coefficients_are_symmetric_under_relabeling() {
    for n in 1..=3usize {
        for m in 0..=3usize {
            let rep = martini_check(m, n);
            let table: BTreeMap<_, _> = rep.table.iter().cloned().collect();
            let mut sigma: Vec<u32> = (1..=n as u32).collect();
            loop {
                for s in enumerate_servings(m, n) {
                    assert_eq!(table[&s], table[&relabel(&s, &sigma)], "n={n} m={m} {s}");
                }
                if !current_weyl::polyring::next_permutation(&mut sigma) {
                    break;
                }
            }
        }
    }
}
