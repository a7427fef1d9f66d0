use std::collections::BTreeMap;

use crate::polyring::weak_compositions;

/// Weight multiplicities of an `sl(r+1)`-module built from `n` copies of the
/// vector representation, keyed by compositions `(i_0, ..., i_r)` of `n`.
///
/// The composition `(i_0, ..., i_r)` is the weight `(i_0 - i_1, ..., i_{r-1} - i_r)`
/// in fundamental-weight coordinates. Zero multiplicities are not stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightCharacter {
    n: usize,
    r: usize,
    entries: BTreeMap<Vec<u32>, u64>,
}

impl WeightCharacter {
    pub fn new(n: usize, r: usize) -> Self {
        WeightCharacter {
            n,
            r,
            entries: BTreeMap::new(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn highest_composition(&self) -> Vec<u32> {
        let mut c = vec![0; self.r + 1];
        c[0] = self.n as u32;
        c
    }

    fn check(&self, composition: &[u32]) {
        assert_eq!(composition.len(), self.r + 1, "composition needs r+1 parts");
        assert_eq!(
            composition.iter().map(|&c| c as usize).sum::<usize>(),
            self.n,
            "composition must sum to n"
        );
    }

    pub fn get(&self, composition: &[u32]) -> u64 {
        self.entries.get(composition).copied().unwrap_or(0)
    }

    pub fn set(&mut self, composition: Vec<u32>, mult: u64) {
        self.check(&composition);
        if mult == 0 {
            self.entries.remove(&composition);
        } else {
            self.entries.insert(composition, mult);
        }
    }

    pub fn add(&mut self, composition: Vec<u32>, mult: u64) {
        let cur = self.get(&composition);
        self.set(composition, cur + mult);
    }

    pub fn total(&self) -> u64 {
        self.entries.values().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    /// Nonzero entries in ascending lexicographic order of compositions.
    pub fn iter(&self) -> impl Iterator<Item = (&Vec<u32>, u64)> {
        self.entries.iter().map(|(k, &v)| (k, v))
    }

    /// Every composition of `n` into `r+1` parts, highest weight first,
    /// with its multiplicity (possibly zero).
    pub fn full_table(&self) -> Vec<(Vec<u32>, u64)> {
        compositions(self.n, self.r)
            .into_iter()
            .map(|c| {
                let m = self.get(&c);
                (c, m)
            })
            .collect()
    }

    /// Character of a tensor product: weights add, so compositions add.
    pub fn product(&self, other: &WeightCharacter) -> WeightCharacter {
        assert_eq!(self.r, other.r, "characters of different rank");
        let mut out = WeightCharacter::new(self.n + other.n, self.r);
        for (a, ma) in self.iter() {
            for (b, mb) in other.iter() {
                let sum = a.iter().zip(b).map(|(x, y)| x + y).collect();
                out.add(sum, ma * mb);
            }
        }
        out
    }
}

/// Compositions `(i_0, ..., i_r)` of `n`, highest weight `(n, 0, ..., 0)` first.
pub fn compositions(n: usize, r: usize) -> Vec<Vec<u32>> {
    weak_compositions(n as u32, r + 1)
}

/// `sl(r+1)` weight `(i_0 - i_1, ..., i_{r-1} - i_r)` of a composition.
pub fn sl_weight(composition: &[u32]) -> Vec<i64> {
    composition
        .windows(2)
        .map(|w| w[0] as i64 - w[1] as i64)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weights_and_products() {
        assert_eq!(sl_weight(&[2, 0]), vec![2]);
        assert_eq!(sl_weight(&[1, 1, 1]), vec![0, 0]);
        let mut v = WeightCharacter::new(1, 1);
        v.set(vec![1, 0], 1);
        v.set(vec![0, 1], 1);
        let sq = v.product(&v);
        assert_eq!(sq.get(&[1, 1]), 2);
        assert_eq!(sq.total(), 4);
        assert_eq!(compositions(2, 1), vec![vec![2, 0], vec![1, 1], vec![0, 2]]);
        assert_eq!(compositions(0, 2), vec![vec![0, 0, 0]]);
    }
}
