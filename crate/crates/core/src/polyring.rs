//! Polynomials in `n` multivariables of dimension `d` over `Q`.
//!
//! A monomial is an `n x d` exponent table stored row-major: row `i` holds
//! the exponents of the coordinates of the multivariable `x_i`. The symmetric
//! group acts by permuting rows.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("shape mismatch: ({0}, {1}) vs ({2}, {3})")]
    Shape(usize, usize, usize, usize),
    #[error("the zero multi-exponent does not index an ideal generator")]
    ZeroExponent,
    #[error("composition {parts:?} does not sum to {n}")]
    BadComposition { parts: Vec<usize>, n: usize },
    #[error("{0:?} is not a permutation")]
    NotPermutation(Vec<usize>),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MultiMonomial {
    n: usize,
    d: usize,
    exps: Vec<u32>,
}

impl MultiMonomial {
    pub fn one(n: usize, d: usize) -> Self {
        MultiMonomial {
            n,
            d,
            exps: vec![0; n * d],
        }
    }

    pub fn from_rows(n: usize, d: usize, exps: Vec<u32>) -> Self {
        assert_eq!(exps.len(), n * d, "exponent table must be n*d");
        MultiMonomial { n, d, exps }
    }

    /// `x_i^alpha`, with `i` zero-based.
    pub fn power_of(n: usize, i: usize, alpha: &[u32]) -> Self {
        let d = alpha.len();
        let mut m = Self::one(n, d);
        m.exps[i * d..(i + 1) * d].copy_from_slice(alpha);
        m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn row(&self, i: usize) -> &[u32] {
        &self.exps[i * self.d..(i + 1) * self.d]
    }

    pub fn total_degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    /// Column sums: the `N^d` multidegree.
    pub fn multidegree(&self) -> Vec<u32> {
        let mut deg = vec![0; self.d];
        for row in self.exps.chunks(self.d.max(1)) {
            for (acc, e) in deg.iter_mut().zip(row) {
                *acc += e;
            }
        }
        deg
    }

    pub fn mul(&self, other: &Self) -> Self {
        debug_assert_eq!((self.n, self.d), (other.n, other.d));
        MultiMonomial {
            n: self.n,
            d: self.d,
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect(),
        }
    }

    /// Row `i` moves to row `sigma[i]`.
    pub fn permute(&self, sigma: &[usize]) -> Self {
        let mut exps = vec![0; self.exps.len()];
        for (i, &target) in sigma.iter().enumerate() {
            exps[target * self.d..(target + 1) * self.d].copy_from_slice(self.row(i));
        }
        MultiMonomial {
            n: self.n,
            d: self.d,
            exps,
        }
    }
}

/// Graded lexicographic order with `x_1 > x_2 > ...` on the flattened table.
impl Ord for MultiMonomial {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.n, self.d)
            .cmp(&(other.n, other.d))
            .then_with(|| self.total_degree().cmp(&other.total_degree()))
            .then_with(|| self.exps.cmp(&other.exps))
    }
}

impl PartialOrd for MultiMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for MultiMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for i in 0..self.n {
            let row = self.row(i);
            if row.iter().all(|&e| e == 0) {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if self.d == 1 {
                write!(f, "x{}^{}", i + 1, row[0])?;
            } else {
                write!(f, "x{}^{:?}", i + 1, row)?;
            }
        }
        if first {
            write!(f, "1")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly {
    n: usize,
    d: usize,
    terms: BTreeMap<MultiMonomial, BigRational>,
}

impl Poly {
    pub fn zero(n: usize, d: usize) -> Self {
        Poly {
            n,
            d,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_monomial(m: MultiMonomial, coeff: BigRational) -> Self {
        let mut p = Self::zero(m.n, m.d);
        if !coeff.is_zero() {
            p.terms.insert(m, coeff);
        }
        p
    }

    pub fn from_terms(n: usize, d: usize, terms: impl IntoIterator<Item = (MultiMonomial, BigRational)>) -> Self {
        let mut p = Self::zero(n, d);
        for (m, c) in terms {
            assert_eq!((m.n, m.d), (n, d), "monomial shape mismatch");
            p.add_term(m, c);
        }
        p
    }

    fn add_term(&mut self, m: MultiMonomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get() + c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&MultiMonomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &MultiMonomial) -> BigRational {
        self.terms.get(m).cloned().unwrap_or_else(BigRational::zero)
    }

    fn same_shape(&self, other: &Poly) -> Result<(), PolyError> {
        if (self.n, self.d) != (other.n, other.d) {
            return Err(PolyError::Shape(self.n, self.d, other.n, other.d));
        }
        Ok(())
    }

    pub fn add(&self, other: &Poly) -> Result<Poly, PolyError> {
        self.same_shape(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Poly) -> Result<Poly, PolyError> {
        self.add(&other.scale(&-BigRational::one()))
    }

    pub fn scale(&self, c: &BigRational) -> Poly {
        let mut out = Poly::zero(self.n, self.d);
        for (m, v) in &self.terms {
            out.add_term(m.clone(), v * c);
        }
        out
    }

    pub fn mul(&self, other: &Poly) -> Result<Poly, PolyError> {
        self.same_shape(other)?;
        let mut out = Poly::zero(self.n, self.d);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        Ok(out)
    }

    pub fn mul_monomial(&self, m: &MultiMonomial) -> Poly {
        let mut out = Poly::zero(self.n, self.d);
        for (m1, c) in &self.terms {
            out.terms.insert(m1.mul(m), c.clone());
        }
        out
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})*{m}")?;
        }
        Ok(())
    }
}

fn check_permutation(sigma: &[usize]) -> Result<(), PolyError> {
    let mut seen = vec![false; sigma.len()];
    for &s in sigma {
        if s >= sigma.len() || seen[s] {
            return Err(PolyError::NotPermutation(sigma.to_vec()));
        }
        seen[s] = true;
    }
    Ok(())
}

/// `(sigma tau)(i) = sigma(tau(i))`.
pub fn compose(sigma: &[usize], tau: &[usize]) -> Vec<usize> {
    tau.iter().map(|&t| sigma[t]).collect()
}

/// Applies the block permutation `x_i -> x_{sigma(i)}` (zero-based).
pub fn permute_blocks(sigma: &[usize], p: &Poly) -> Result<Poly, PolyError> {
    check_permutation(sigma)?;
    if sigma.len() != p.n {
        return Err(PolyError::NotPermutation(sigma.to_vec()));
    }
    Ok(Poly::from_terms(
        p.n,
        p.d,
        p.terms.iter().map(|(m, c)| (m.permute(sigma), c.clone())),
    ))
}

/// `p_alpha = sum_i x_i^alpha`.
pub fn polarized_power_sum(alpha: &[u32], n: usize) -> Result<Poly, PolyError> {
    if alpha.iter().all(|&a| a == 0) {
        return Err(PolyError::ZeroExponent);
    }
    Ok(Poly::from_terms(
        n,
        alpha.len(),
        (0..n).map(|i| (MultiMonomial::power_of(n, i, alpha), BigRational::one())),
    ))
}

/// Consecutive index ranges of the Young subgroup blocks.
pub fn young_blocks(composition: &[usize], n: usize) -> Result<Vec<std::ops::Range<usize>>, PolyError> {
    if composition.iter().sum::<usize>() != n {
        return Err(PolyError::BadComposition {
            parts: composition.to_vec(),
            n,
        });
    }
    let mut start = 0;
    Ok(composition
        .iter()
        .map(|&len| {
            let r = start..start + len;
            start += len;
            r
        })
        .collect())
}

/// True when rows within each Young block are weakly decreasing; exactly one
/// monomial per orbit has this form.
pub fn is_young_canonical(blocks: &[std::ops::Range<usize>], m: &MultiMonomial) -> bool {
    blocks
        .iter()
        .all(|b| b.clone().skip(1).all(|i| m.row(i - 1) >= m.row(i)))
}

/// Distinct images of `m` under the Young subgroup, sorted.
pub fn young_orbit(blocks: &[std::ops::Range<usize>], m: &MultiMonomial) -> Vec<MultiMonomial> {
    let mut rows: Vec<Vec<u32>> = (0..m.n).map(|i| m.row(i).to_vec()).collect();
    let mut out = Vec::new();
    fn rec(
        blocks: &[std::ops::Range<usize>],
        level: usize,
        rows: &mut Vec<Vec<u32>>,
        n: usize,
        d: usize,
        out: &mut Vec<MultiMonomial>,
    ) {
        if level == blocks.len() {
            out.push(MultiMonomial::from_rows(n, d, rows.concat()));
            return;
        }
        let range = blocks[level].clone();
        let mut block: Vec<Vec<u32>> = rows[range.clone()].to_vec();
        block.sort();
        loop {
            rows[range.clone()].clone_from_slice(&block);
            rec(blocks, level + 1, rows, n, d, out);
            if !next_permutation(&mut block) {
                break;
            }
        }
    }
    rec(blocks, 0, &mut rows, m.n, m.d, &mut out);
    out.sort();
    out
}

/// Lexicographic successor of a sequence; false when already the last one.
pub fn next_permutation<T: Ord>(v: &mut [T]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Average of `p` over the Young subgroup `S_{i_0} x ... x S_{i_r}`.
pub fn reynolds(composition: &[usize], p: &Poly) -> Result<Poly, PolyError> {
    let blocks = young_blocks(composition, p.n)?;
    let mut out = Poly::zero(p.n, p.d);
    for (m, c) in &p.terms {
        let orbit = young_orbit(&blocks, m);
        let share = c / BigRational::from_integer(orbit.len().into());
        for image in orbit {
            out.add_term(image, share.clone());
        }
    }
    Ok(out)
}

/// All monomials of the given multidegree, largest first in graded-lex order.
pub fn monomial_basis(n: usize, d: usize, multidegree: &[u32]) -> Vec<MultiMonomial> {
    assert_eq!(multidegree.len(), d, "multidegree must have d entries");
    // per coordinate: the ways to spread that coordinate's degree over n rows
    let spreads: Vec<Vec<Vec<u32>>> = multidegree.iter().map(|&k| weak_compositions(k, n)).collect();
    let mut out = Vec::new();
    let mut choice = vec![0usize; d];
    if spreads.iter().any(|s| s.is_empty()) {
        return out;
    }
    loop {
        let mut exps = vec![0u32; n * d];
        for (k, s) in spreads.iter().enumerate() {
            for (i, &e) in s[choice[k]].iter().enumerate() {
                exps[i * d + k] = e;
            }
        }
        out.push(MultiMonomial::from_rows(n, d, exps));
        let mut k = 0;
        loop {
            if k == d {
                out.sort_by(|a, b| b.cmp(a));
                return out;
            }
            choice[k] += 1;
            if choice[k] < spreads[k].len() {
                break;
            }
            choice[k] = 0;
            k += 1;
        }
    }
}

/// Sequences of `parts` nonnegative integers summing to `total`.
pub fn weak_compositions(total: u32, parts: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(parts);
    fn rec(left: u32, parts: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() + 1 == parts {
            cur.push(left);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for v in (0..=left).rev() {
            cur.push(v);
            rec(left - v, parts, cur, out);
            cur.pop();
        }
    }
    if parts == 0 {
        if total == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    rec(total, parts, &mut cur, &mut out);
    out
}
