//! Partitions, parking functions, the sequence class `A_n`, Raney sets, and
//! the closed-form counts attached to them.

use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::character::WeightCharacter;

/// A weakly decreasing list of positive parts.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition(Vec<u32>);

impl Partition {
    /// Sorts the parts and drops zeros, so any composition can be fed in.
    pub fn new(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Part `i` (zero-based), or 0 past the end.
    pub fn part(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let cols = self.part(0);
        Partition((1..=cols).map(|c| self.0.iter().filter(|&&p| p >= c).count() as u32).collect())
    }

    /// Dominance order `self ⊵ other` for partitions of the same size.
    pub fn dominates(&self, other: &Partition) -> bool {
        let len = self.len().max(other.len());
        let (mut a, mut b) = (0, 0);
        for i in 0..len {
            a += self.part(i);
            b += other.part(i);
            if a < b {
                return false;
            }
        }
        true
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Partitions of `n` in reverse lexicographic order, `(n)` first.
pub fn partitions(n: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(left: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if left == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for p in (1..=left.min(max)).rev() {
            cur.push(p);
            rec(left - p, p, cur, out);
            cur.pop();
        }
    }
    rec(n, n, &mut cur, &mut out);
    out
}

/// A function `{1..n} -> {1..n}` with `|f^{-1}({1..k})| >= k` for all `k`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ParkingFunction(Vec<u32>);

impl ParkingFunction {
    pub fn new(values: Vec<u32>) -> Option<Self> {
        is_parking(&values).then_some(ParkingFunction(values))
    }

    pub fn values(&self) -> &[u32] {
        &self.0
    }

    /// `a_i = |f^{-1}(i)|`; always a member of `A_n`.
    pub fn fiber_sizes(&self) -> Vec<u32> {
        let mut a = vec![0; self.0.len()];
        for &v in &self.0 {
            a[v as usize - 1] += 1;
        }
        a
    }
}

fn is_parking(values: &[u32]) -> bool {
    let n = values.len();
    if values.iter().any(|&v| v == 0 || v as usize > n) {
        return false;
    }
    let mut sorted = values.to_vec();
    sorted.sort_unstable();
    sorted.iter().enumerate().all(|(i, &v)| v as usize <= i + 1)
}

/// All parking functions of length `n` in lexicographic order.
pub fn enumerate_parking_functions(n: usize) -> Vec<ParkingFunction> {
    let mut out = Vec::new();
    let mut cur = vec![1u32; n];
    if n == 0 {
        out.push(ParkingFunction(cur));
        return out;
    }
    loop {
        if is_parking(&cur) {
            out.push(ParkingFunction(cur.clone()));
        }
        let mut k = n;
        loop {
            if k == 0 {
                return out;
            }
            k -= 1;
            if (cur[k] as usize) < n {
                cur[k] += 1;
                break;
            }
            cur[k] = 1;
        }
    }
}

/// A member of `A_n`: nonnegative, sums to `n`, prefix sums `a_1+...+a_k >= k`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ASequence(Vec<u32>);

impl ASequence {
    pub fn new(a: Vec<u32>) -> Option<Self> {
        let n = a.len() as u32;
        let mut prefix = 0;
        for (k, &v) in a.iter().enumerate() {
            prefix += v;
            if prefix < k as u32 + 1 {
                return None;
            }
        }
        (prefix == n).then_some(ASequence(a))
    }

    pub fn values(&self) -> &[u32] {
        &self.0
    }

    /// The partition obtained by sorting and dropping zeros.
    pub fn shape(&self) -> Partition {
        Partition::new(self.0.clone())
    }
}

/// `A_n`, lexicographically largest first (`(n, 0, ..., 0)` leads).
pub fn enumerate_a(n: usize) -> Vec<ASequence> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(n);
    fn rec(n: u32, prefix: u32, cur: &mut Vec<u32>, out: &mut Vec<ASequence>) {
        let k = cur.len() as u32;
        if k == n {
            if prefix == n {
                out.push(ASequence(cur.clone()));
            }
            return;
        }
        // prefix after this entry must reach k+1
        let lo = (k + 1).saturating_sub(prefix);
        for v in (lo..=n - prefix).rev() {
            cur.push(v);
            rec(n, prefix + v, cur, out);
            cur.pop();
        }
    }
    rec(n as u32, 0, &mut cur, &mut out);
    out
}

/// `H ⊂ {1..s n}` with `|H| = n` and `s |H ∩ {1..k}| >= k` for every `k`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RaneySet {
    elements: Vec<u32>,
    n: usize,
    s: usize,
}

impl RaneySet {
    pub fn new(mut elements: Vec<u32>, n: usize, s: usize) -> Option<Self> {
        elements.sort_unstable();
        elements.dedup();
        if elements.len() != n || elements.iter().any(|&e| e == 0 || e as usize > s * n) {
            return None;
        }
        let ok = (1..=s * n).all(|k| s * elements.iter().filter(|&&e| e as usize <= k).count() >= k);
        ok.then_some(RaneySet { elements, n, s })
    }

    pub fn elements(&self) -> &[u32] {
        &self.elements
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn s(&self) -> usize {
        self.s
    }
}

/// All Raney sets for `(n, s)`, in lexicographic order of the sorted element lists.
pub fn enumerate_raney(n: usize, s: usize) -> Vec<RaneySet> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(n);
    // choose elements in increasing order; before element `e` is picked,
    // the prefix {1..e-1} must already satisfy the density condition
    fn rec(n: usize, s: usize, next: usize, cur: &mut Vec<u32>, out: &mut Vec<RaneySet>) {
        let max = s * n;
        if cur.len() == n {
            // remaining k up to s n: count stays n and s n >= k holds
            out.push(RaneySet {
                elements: cur.clone(),
                n,
                s,
            });
            return;
        }
        for e in next..=max {
            // all k in [next, e-1] are skipped: need s * |cur| >= k for k = e - 1
            if e > 1 && s * cur.len() < e - 1 {
                break;
            }
            cur.push(e as u32);
            rec(n, s, e + 1, cur, out);
            cur.pop();
        }
    }
    rec(n, s, 1, &mut cur, &mut out);
    out
}

/// Weight census of `R_{n+1}^{r+1}`: `i_j` counts elements congruent to
/// `j+1` mod `r+1` for `j = 1..r`, and `i_0 = n - (i_1 + ... + i_r)`.
pub fn raney_weight_census(n: usize, r: usize) -> WeightCharacter {
    let modulus = (r + 1) as u32;
    let mut ch = WeightCharacter::new(n, r);
    for h in enumerate_raney(n + 1, r + 1) {
        let mut comp = vec![0u32; r + 1];
        for &e in h.elements() {
            // class j holds e ≡ j+1 (mod r+1)
            let j = ((e + modulus - 1) % modulus) as usize;
            if j >= 1 {
                comp[j] += 1;
            }
        }
        comp[0] = n as u32 - comp[1..].iter().sum::<u32>();
        ch.add(comp, 1);
    }
    ch
}

pub fn factorial(n: u64) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * k)
}

pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    factorial(n) / (factorial(k) * factorial(n - k))
}

pub fn multinomial(parts: &[u32]) -> BigUint {
    let n: u64 = parts.iter().map(|&p| p as u64).sum();
    parts
        .iter()
        .fold(factorial(n), |acc, &p| acc / factorial(p as u64))
}

/// `(2n+2)! / ((n+1)! (n+2)!)`, i.e. the Catalan number `C_{n+1}`.
pub fn catalan(n: u64) -> BigUint {
    factorial(2 * n + 2) / (factorial(n + 1) * factorial(n + 2))
}

/// `(n+1)! n! / ((n-i+1)! (n-i)! (i+1)! i!)` for `0 <= i <= n`.
pub fn narayana(n: u64, i: u64) -> BigUint {
    assert!(i <= n, "narayana needs i <= n");
    factorial(n + 1) * factorial(n)
        / (factorial(n - i + 1) * factorial(n - i) * factorial(i + 1) * factorial(i))
}

/// `((r+1)(n+1))! / ((n+1)! (r(n+1)+1)!)`.
pub fn higher_catalan(n: u64, r: u64) -> BigUint {
    factorial((r + 1) * (n + 1)) / (factorial(n + 1) * factorial(r * (n + 1) + 1))
}

/// Coefficients of `[n]_q! = prod_{k=1..n} (1 + q + ... + q^(k-1))`, lowest
/// degree first.
pub fn q_factorial(n: usize) -> Vec<u64> {
    let mut poly = vec![1u64];
    for k in 1..=n {
        let mut next = vec![0u64; poly.len() + k - 1];
        for (i, &c) in poly.iter().enumerate() {
            for slot in &mut next[i..i + k] {
                *slot += c;
            }
        }
        poly = next;
    }
    poly
}

/// The conjectured dimension of the weight-`(n-2i)` space of the `sl_2`
/// local Weyl module in dimension `d`:
/// `prod_{k<i} (d+n-1-k)! k! / ((n-1-k)! (d+k)!)`.
///
/// The factor `2! ... (i-1)!` in the closed form is the superfactorial
/// `0! 1! ... (i-1)!`, which makes `i = 0` and `i = n` both evaluate to 1.
pub fn hoggatt_conjecture_dim(n: u64, i: u64, d: u64) -> BigUint {
    assert!(i <= n, "hoggatt formula needs i <= n");
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for k in 0..i {
        num *= factorial(d + n - 1 - k) * factorial(k);
        den *= factorial(n - 1 - k) * factorial(d + k);
    }
    num / den
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: u64) -> BigUint {
        BigUint::from(v)
    }

    /// Inversion counts of all permutations of `0..n`.
    fn mahonian(n: usize) -> Vec<u64> {
        let mut perm: Vec<usize> = (0..n).collect();
        let mut counts = vec![0u64; n * n.saturating_sub(1) / 2 + 1];
        loop {
            let inv = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).filter(|&(i, j)| perm[i] > perm[j]).count();
            counts[inv] += 1;
            if !crate::polyring::next_permutation(&mut perm) {
                break;
            }
        }
        counts
    }

    #[test]
    fn q_factorial_counts_inversions() {
        assert_eq!(q_factorial(0), vec![1]);
        assert_eq!(q_factorial(3), vec![1, 2, 2, 1]);
        for n in 1..=6 {
            assert_eq!(q_factorial(n), mahonian(n));
        }
    }

    #[test]
    fn parking_small_cases() {
        let pf1 = enumerate_parking_functions(1);
        assert_eq!(pf1, vec![ParkingFunction(vec![1])]);
        let pf2: Vec<Vec<u32>> = enumerate_parking_functions(2).into_iter().map(|p| p.0).collect();
        assert_eq!(pf2, vec![vec![1, 1], vec![1, 2], vec![2, 1]]);
        assert_eq!(enumerate_parking_functions(3).len(), 16);
        assert!(ParkingFunction::new(vec![2, 2]).is_none());
    }

    #[test]
    fn a_sequences_small_cases() {
        assert_eq!(enumerate_a(1), vec![ASequence(vec![1])]);
        assert_eq!(enumerate_a(2), vec![ASequence(vec![2, 0]), ASequence(vec![1, 1])]);
        assert_eq!(enumerate_a(3).len(), 5);
        assert!(ASequence::new(vec![0, 2]).is_none());
        assert!(ASequence::new(vec![2, 1]).is_none());
    }

    #[test]
    fn raney_small_cases() {
        let r = enumerate_raney(1, 2);
        assert_eq!(r.len(), 1);
        assert_eq!(r[0].elements(), &[1]);
        assert_eq!(enumerate_raney(3, 2).len(), 5);
        assert!(RaneySet::new(vec![2], 1, 2).is_none());
    }

    #[test]
    fn raney_enumeration_matches_filter_of_all_subsets() {
        for n in 1..=4usize {
            for s in 2..=3usize {
                let max = (s * n) as u32;
                let mut brute = Vec::new();
                for mask in 0u32..(1 << max) {
                    if mask.count_ones() as usize != n {
                        continue;
                    }
                    let elems: Vec<u32> = (1..=max).filter(|e| mask & (1 << (e - 1)) != 0).collect();
                    if let Some(h) = RaneySet::new(elems, n, s) {
                        brute.push(h);
                    }
                }
                brute.sort();
                assert_eq!(enumerate_raney(n, s), brute, "n={n} s={s}");
            }
        }
    }

    #[test]
    fn census_examples() {
        let ch = raney_weight_census(2, 1);
        assert_eq!(ch.get(&[2, 0]), 1);
        assert_eq!(ch.get(&[1, 1]), 3);
        assert_eq!(ch.get(&[0, 2]), 1);
        let ch0 = raney_weight_census(0, 3);
        assert_eq!(ch0.total(), 1);
        assert_eq!(ch0.iter().count(), 1);
        assert_eq!(big(raney_weight_census(3, 2).total()), higher_catalan(3, 2));
        assert_eq!(higher_catalan(3, 2), factorial(12) / (factorial(4) * factorial(9)));
    }

    #[test]
    fn closed_forms() {
        assert_eq!(catalan(2), big(5));
        assert_eq!(
            (0..=2).map(|i| narayana(2, i)).collect::<Vec<_>>(),
            vec![big(1), big(3), big(1)]
        );
        assert_eq!(higher_catalan(1, 2), big(3));
        assert_eq!((0..=3).map(|n| higher_catalan(n, 2)).collect::<Vec<_>>(), vec![big(1), big(3), big(12), big(55)]);
        assert_eq!(hoggatt_conjecture_dim(5, 0, 4), big(1));
        assert_eq!(hoggatt_conjecture_dim(5, 5, 4), big(1));
        assert_eq!(hoggatt_conjecture_dim(2, 1, 3), big(4));
        assert_eq!(hoggatt_conjecture_dim(2, 1, 1), big(2));
    }

    #[test]
    fn counting_identities() {
        for n in 1..=5u64 {
            assert_eq!(big(enumerate_parking_functions(n as usize).len() as u64), big(n + 1).pow(n as u32 - 1));
        }
        // |A_n| is the n-th Catalan number, which is catalan(n - 1) in the shifted indexing
        for n in 1..=6u64 {
            assert_eq!(big(enumerate_a(n as usize).len() as u64), catalan(n - 1));
        }
        for n in 0..=8u64 {
            let sum: BigUint = (0..=n).map(|i| narayana(n, i)).sum();
            assert_eq!(sum, catalan(n));
        }
        for n in 0..=4u64 {
            for r in 1..=3u64 {
                assert_eq!(
                    big(enumerate_raney(n as usize + 1, r as usize + 1).len() as u64),
                    higher_catalan(n, r)
                );
            }
        }
        for n in 0..=6u64 {
            let census = raney_weight_census(n as usize, 1);
            for i in 0..=n {
                let comp = vec![(n - i) as u32, i as u32];
                assert_eq!(big(census.get(&comp)), narayana(n, i), "n={n} i={i}");
            }
        }
        for n in 0..=8u64 {
            for i in 0..=n {
                assert_eq!(hoggatt_conjecture_dim(n, i, 1), binomial(n, i));
            }
        }
    }

    #[test]
    fn parking_fibers_land_in_a() {
        for pf in enumerate_parking_functions(4) {
            assert!(ASequence::new(pf.fiber_sizes()).is_some());
        }
    }

    #[test]
    fn partition_basics() {
        let p = Partition::new(vec![1, 0, 3, 1]);
        assert_eq!(p.parts(), &[3, 1, 1]);
        assert_eq!(p.conjugate().parts(), &[3, 1, 1]);
        assert_eq!(Partition::new(vec![2, 1]).conjugate(), Partition::new(vec![2, 1]));
        assert_eq!(Partition::new(vec![4]).conjugate().parts(), &[1, 1, 1, 1]);
        assert_eq!(partitions(4).len(), 5);
        assert_eq!(partitions(4)[0], Partition::new(vec![4]));
        assert_eq!(partitions(0), vec![Partition::new(vec![])]);
        assert!(Partition::new(vec![3, 1]).dominates(&Partition::new(vec![2, 2])));
        assert!(!Partition::new(vec![2, 2]).dominates(&Partition::new(vec![3, 1])));
    }
}
