//! Exact scalars and sparse rank computation.
//!
//! Matrices are stored with rational entries. Rank is computed either over
//! the rationals or over a prime field `F_p` after reducing every entry; the
//! default strategy runs two primes and falls back to rational elimination
//! when they disagree.

use std::cmp::Reverse;
use std::collections::{BTreeMap, BinaryHeap};
use std::sync::atomic::{AtomicU64, Ordering};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use thiserror::Error;

/// Default primes for the two-prime crosscheck. Both lie just below 2^31.
pub const DEFAULT_PRIMES: (u64, u64) = (2_147_483_647, 2_147_483_629);

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ExactError {
    #[error("prime {prime} divides a denominator; retry with another prime")]
    Reduction { prime: u64 },
    #[error("{0} is not a prime below 2^32")]
    NotPrime(u64),
    #[error("crosscheck needs two distinct primes, got {0} twice")]
    SamePrimes(u64),
    #[error("entry ({row}, {col}) outside a {rows}x{cols} matrix")]
    OutOfBounds {
        row: usize,
        col: usize,
        rows: usize,
        cols: usize,
    },
}

/// Trial division; fine for the 32-bit primes used here.
pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p.is_multiple_of(2) {
        return p == 2;
    }
    let mut q = 3;
    while q * q <= p {
        if p.is_multiple_of(q) {
            return false;
        }
        q += 2;
    }
    true
}

/// An element of `F_p`, always kept in `[0, p)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Residue {
    value: u64,
    modulus: u64,
}

impl Residue {
    pub fn new(value: i64, modulus: u64) -> Self {
        let m = modulus as i128;
        let v = (value as i128).rem_euclid(m) as u64;
        Residue { value: v, modulus }
    }

    /// Reduces `a/b` modulo `p`. Fails when `p | b`.
    pub fn from_rational(q: &BigRational, modulus: u64) -> Result<Self, ExactError> {
        let p = BigInt::from(modulus);
        let num = q.numer().mod_floor(&p).to_u64().expect("residue fits");
        let den = q.denom().mod_floor(&p).to_u64().expect("residue fits");
        if den == 0 {
            return Err(ExactError::Reduction { prime: modulus });
        }
        let inv = BigInt::from(den).modpow(&(&p - 2u32), &p);
        let value = (BigInt::from(num) * inv).mod_floor(&p).to_u64().expect("residue fits");
        Ok(Residue { value, modulus })
    }

    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparseMatrix {
    rows: usize,
    cols: usize,
    entries: BTreeMap<(usize, usize), BigRational>,
}

impl SparseMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        SparseMatrix {
            rows,
            cols,
            entries: BTreeMap::new(),
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.entries.insert((i, i), BigRational::one());
        }
        m
    }

    /// Builds a matrix from small integer rows; every row must have `cols` entries.
    pub fn from_dense(cols: usize, rows: &[Vec<i64>]) -> Self {
        let mut m = Self::zeros(rows.len(), cols);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), cols, "ragged dense matrix");
            for (j, &v) in row.iter().enumerate() {
                if v != 0 {
                    m.entries.insert((i, j), BigRational::from_integer(v.into()));
                }
            }
        }
        m
    }

    /// Builds a matrix from sparse integer rows `(col, value)`. Repeated columns
    /// within a row are summed.
    pub fn from_sparse_rows(
        cols: usize,
        rows: impl IntoIterator<Item = Vec<(usize, i64)>>,
    ) -> Result<Self, ExactError> {
        let mut m = Self::zeros(0, cols);
        for row in rows {
            let r = m.rows;
            m.rows += 1;
            for (c, v) in row {
                m.add_to(r, c, BigRational::from_integer(v.into()))?;
            }
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, row: usize, col: usize) -> BigRational {
        self.entries
            .get(&(row, col))
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    fn check(&self, row: usize, col: usize) -> Result<(), ExactError> {
        if row >= self.rows || col >= self.cols {
            return Err(ExactError::OutOfBounds {
                row,
                col,
                rows: self.rows,
                cols: self.cols,
            });
        }
        Ok(())
    }

    pub fn set(&mut self, row: usize, col: usize, value: BigRational) -> Result<(), ExactError> {
        self.check(row, col)?;
        if value.is_zero() {
            self.entries.remove(&(row, col));
        } else {
            self.entries.insert((row, col), value);
        }
        Ok(())
    }

    pub fn add_to(&mut self, row: usize, col: usize, value: BigRational) -> Result<(), ExactError> {
        self.check(row, col)?;
        let sum = self.get(row, col) + value;
        self.set(row, col, sum)
    }

    /// Appends every row of `other` below `self`. Column counts must agree.
    pub fn vstack(&self, other: &SparseMatrix) -> SparseMatrix {
        assert_eq!(self.cols, other.cols, "vstack column mismatch");
        let mut out = self.clone();
        for (&(r, c), v) in &other.entries {
            out.entries.insert((r + self.rows, c), v.clone());
        }
        out.rows += other.rows;
        out
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &BigRational)> {
        self.entries.iter().map(|(&(r, c), v)| (r, c, v))
    }

    fn row_lists<T>(&self, mut conv: impl FnMut(&BigRational) -> Result<T, ExactError>) -> Result<Vec<Vec<(usize, T)>>, ExactError> {
        let mut rows: Vec<Vec<(usize, T)>> = (0..self.rows).map(|_| Vec::new()).collect();
        for (&(r, c), v) in &self.entries {
            rows[r].push((c, conv(v)?));
        }
        Ok(rows)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RankMode {
    Rational,
    Prime(u64),
}

/// Rank over `Q` or over `F_p`. In prime mode the answer never exceeds the
/// rational rank.
pub fn rank(m: &SparseMatrix, mode: RankMode) -> Result<usize, ExactError> {
    match mode {
        RankMode::Rational => {
            let rows = m.row_lists(|v| Ok(v.clone()))?;
            Ok(eliminate(RationalField, rows, m.cols))
        }
        RankMode::Prime(p) => {
            if !is_prime(p) || p >= 1 << 32 {
                return Err(ExactError::NotPrime(p));
            }
            let rows = m.row_lists(|v| Residue::from_rational(v, p).map(|r| r.value))?;
            Ok(eliminate(PrimeField(p), rows, m.cols))
        }
    }
}

pub fn nullity(m: &SparseMatrix, mode: RankMode) -> Result<usize, ExactError> {
    Ok(m.cols - rank(m, mode)?)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RankOutcome {
    pub rank: usize,
    pub escalated: bool,
}

/// Ranks modulo two primes; if they disagree (or either reduction fails),
/// recomputes over the rationals.
pub fn crosscheck_rank(m: &SparseMatrix, p1: u64, p2: u64) -> Result<RankOutcome, ExactError> {
    if p1 == p2 {
        return Err(ExactError::SamePrimes(p1));
    }
    let first = rank(m, RankMode::Prime(p1));
    let second = rank(m, RankMode::Prime(p2));
    match (first, second) {
        (Ok(a), Ok(b)) if a == b => Ok(RankOutcome {
            rank: a,
            escalated: false,
        }),
        (Err(e @ ExactError::NotPrime(_)), _) | (_, Err(e @ ExactError::NotPrime(_))) => Err(e),
        _ => Ok(RankOutcome {
            rank: rank(m, RankMode::Rational)?,
            escalated: true,
        }),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RankStrategy {
    CrossCheck { p1: u64, p2: u64 },
    Exact,
}

impl Default for RankStrategy {
    fn default() -> Self {
        RankStrategy::CrossCheck {
            p1: DEFAULT_PRIMES.0,
            p2: DEFAULT_PRIMES.1,
        }
    }
}

/// Rank oracle shared by the linear-algebra routes. Counts calls and
/// escalations so reports can state how every rank was obtained.
#[derive(Debug, Default)]
pub struct Ranker {
    strategy: RankStrategy,
    calls: AtomicU64,
    escalations: AtomicU64,
}

#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct RankProvenance {
    pub mode: String,
    pub primes: Option<(u64, u64)>,
    pub rank_calls: u64,
    pub escalations: u64,
}

impl Ranker {
    pub fn new(strategy: RankStrategy) -> Result<Self, ExactError> {
        if let RankStrategy::CrossCheck { p1, p2 } = strategy {
            for p in [p1, p2] {
                if !is_prime(p) || p >= 1 << 32 {
                    return Err(ExactError::NotPrime(p));
                }
            }
            if p1 == p2 {
                return Err(ExactError::SamePrimes(p1));
            }
        }
        Ok(Ranker {
            strategy,
            calls: AtomicU64::new(0),
            escalations: AtomicU64::new(0),
        })
    }

    pub fn strategy(&self) -> RankStrategy {
        self.strategy
    }

    pub fn rank(&self, m: &SparseMatrix) -> Result<usize, ExactError> {
        self.calls.fetch_add(1, Ordering::Relaxed);
        match self.strategy {
            RankStrategy::Exact => rank(m, RankMode::Rational),
            RankStrategy::CrossCheck { p1, p2 } => {
                let out = crosscheck_rank(m, p1, p2)?;
                if out.escalated {
                    self.escalations.fetch_add(1, Ordering::Relaxed);
                }
                Ok(out.rank)
            }
        }
    }

    /// Runs a whole computation under the ranker's strategy: once per prime,
    /// comparing the answers, and once over the rationals when they differ.
    pub fn run<T, E>(
        &self,
        prime_run: impl Fn(PrimeField) -> Result<T, E>,
        rational_run: impl FnOnce() -> Result<T, E>,
    ) -> Result<T, E>
    where
        T: PartialEq,
        E: From<ExactError>,
    {
        self.calls.fetch_add(1, Ordering::Relaxed);
        match self.strategy {
            RankStrategy::Exact => rational_run(),
            RankStrategy::CrossCheck { p1, p2 } => {
                let a = prime_run(PrimeField::new(p1)?)?;
                let b = prime_run(PrimeField::new(p2)?)?;
                if a == b {
                    Ok(a)
                } else {
                    self.escalations.fetch_add(1, Ordering::Relaxed);
                    rational_run()
                }
            }
        }
    }

    pub fn provenance(&self) -> RankProvenance {
        let (mode, primes) = match self.strategy {
            RankStrategy::Exact => ("rational".to_string(), None),
            RankStrategy::CrossCheck { p1, p2 } => ("two-prime".to_string(), Some((p1, p2))),
        };
        RankProvenance {
            mode,
            primes,
            rank_calls: self.calls.load(Ordering::Relaxed),
            escalations: self.escalations.load(Ordering::Relaxed),
        }
    }
}

/// Field arithmetic used by [`Echelon`].
pub trait EliminationField: Clone {
    type Elem: Clone + std::fmt::Debug;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn integer(&self, v: i64) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn inv(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    /// `acc - a * b`
    fn sub_mul(&self, acc: &Self::Elem, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
}

#[derive(Debug, Clone, Copy, Default)]
pub struct RationalField;

impl EliminationField for RationalField {
    type Elem = BigRational;
    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn integer(&self, v: i64) -> BigRational {
        BigRational::from_integer(v.into())
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn inv(&self, a: &BigRational) -> BigRational {
        a.recip()
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn sub_mul(&self, acc: &BigRational, a: &BigRational, b: &BigRational) -> BigRational {
        acc - a * b
    }
}

/// Integers modulo a prime below `2^32`.
#[derive(Debug, Clone, Copy)]
pub struct PrimeField(u64);

impl PrimeField {
    pub fn new(p: u64) -> Result<Self, ExactError> {
        if !is_prime(p) || p >= 1 << 32 {
            return Err(ExactError::NotPrime(p));
        }
        Ok(PrimeField(p))
    }

    pub fn modulus(&self) -> u64 {
        self.0
    }

    fn mulm(&self, a: u64, b: u64) -> u64 {
        a * b % self.0
    }

    fn pow(&self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc = 1;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mulm(acc, base);
            }
            base = self.mulm(base, base);
            exp >>= 1;
        }
        acc
    }
}

impl EliminationField for PrimeField {
    type Elem = u64;
    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1
    }
    fn integer(&self, v: i64) -> u64 {
        v.rem_euclid(self.0 as i64) as u64
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn inv(&self, a: &u64) -> u64 {
        debug_assert!(*a != 0);
        self.pow(*a, self.0 - 2)
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        self.mulm(*a, *b)
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        (a + b) % self.0
    }
    fn neg(&self, a: &u64) -> u64 {
        (self.0 - a) % self.0
    }
    fn sub_mul(&self, acc: &u64, a: &u64, b: &u64) -> u64 {
        (acc + self.0 - self.mulm(*a, *b)) % self.0
    }
}

/// Sparse row vector: `(column, value)` pairs with distinct columns.
pub type SparseRow<E> = Vec<(usize, E)>;

/// Incrementally built row echelon form.
///
/// Each inserted row is reduced against the existing pivot rows in
/// pivot-creation order and, if anything survives, pivots on the surviving
/// column with the smallest cost (ties to the smallest column). A pivot row
/// never contains an earlier pivot column, so reducing a vector leaves it
/// supported on non-pivot columns only.
#[derive(Debug, Clone)]
pub struct Echelon<F: EliminationField> {
    field: F,
    ncols: usize,
    cost: Vec<usize>,
    pivot_rows: Vec<SparseRow<F::Elem>>,
    pivot_col: Vec<usize>,
    pivot_of_col: Vec<Option<usize>>,
    acc: Vec<F::Elem>,
    is_touched: Vec<bool>,
}

impl<F: EliminationField> Echelon<F> {
    pub fn new(field: F, ncols: usize) -> Self {
        Self::with_costs(field, vec![0; ncols])
    }

    /// Pivot selection prefers columns with a low `cost`.
    pub fn with_costs(field: F, cost: Vec<usize>) -> Self {
        let ncols = cost.len();
        let zero = field.zero();
        Echelon {
            field,
            ncols,
            cost,
            pivot_rows: Vec::new(),
            pivot_col: Vec::new(),
            pivot_of_col: vec![None; ncols],
            acc: vec![zero; ncols],
            is_touched: vec![false; ncols],
        }
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.pivot_rows.len()
    }

    pub fn is_pivot(&self, col: usize) -> bool {
        self.pivot_of_col[col].is_some()
    }

    /// Reduce `row` modulo the row space; the result is sorted by column.
    pub fn reduce(&mut self, row: SparseRow<F::Elem>) -> SparseRow<F::Elem> {
        let field = &self.field;
        let acc = &mut self.acc;
        let is_touched = &mut self.is_touched;
        let mut touched: Vec<usize> = Vec::new();
        let mut heap = BinaryHeap::new();
        for (c, v) in row {
            acc[c] = if is_touched[c] { field.add(&acc[c], &v) } else { v };
            if !is_touched[c] {
                is_touched[c] = true;
                touched.push(c);
            }
            if let Some(k) = self.pivot_of_col[c] {
                heap.push(Reverse(k));
            }
        }
        let mut last = None;
        while let Some(Reverse(k)) = heap.pop() {
            if last == Some(k) {
                continue;
            }
            last = Some(k);
            let c = self.pivot_col[k];
            if field.is_zero(&acc[c]) {
                continue;
            }
            let factor = acc[c].clone();
            for (c2, v) in &self.pivot_rows[k] {
                acc[*c2] = field.sub_mul(&acc[*c2], &factor, v);
                if !is_touched[*c2] {
                    is_touched[*c2] = true;
                    touched.push(*c2);
                }
                if *c2 != c {
                    if let Some(k2) = self.pivot_of_col[*c2] {
                        heap.push(Reverse(k2));
                    }
                }
            }
        }
        let mut out = Vec::new();
        for c in touched {
            is_touched[c] = false;
            let v = std::mem::replace(&mut acc[c], field.zero());
            if !field.is_zero(&v) {
                out.push((c, v));
            }
        }
        out.sort_by_key(|(c, _)| *c);
        out
    }

    /// Add `row` to the row space. Returns the new pivot column, or `None`
    /// if the row was already dependent.
    pub fn insert(&mut self, row: SparseRow<F::Elem>) -> Option<usize> {
        let survivors = self.reduce(row);
        let (pc, pv) = survivors
            .iter()
            .min_by_key(|(c, _)| (self.cost[*c], *c))
            .map(|(c, v)| (*c, v.clone()))?;
        let scale = self.field.inv(&pv);
        let normalized = survivors
            .into_iter()
            .map(|(c, v)| (c, self.field.mul(&v, &scale)))
            .collect();
        self.pivot_of_col[pc] = Some(self.pivot_rows.len());
        self.pivot_col.push(pc);
        self.pivot_rows.push(normalized);
        Some(pc)
    }
}

/// Sparse Gaussian elimination returning the rank. Rows go in shortest
/// first and pivots follow a static Markowitz cost (input column counts).
fn eliminate<F: EliminationField>(field: F, mut rows: Vec<SparseRow<F::Elem>>, ncols: usize) -> usize {
    rows.retain(|r| r.iter().any(|(_, v)| !field.is_zero(v)));
    rows.sort_by_key(|r| r.len());
    let mut col_count = vec![0usize; ncols];
    for row in &rows {
        for (c, _) in row {
            col_count[*c] += 1;
        }
    }
    let mut ech = Echelon::with_costs(field, col_count);
    for row in rows {
        ech.insert(row);
    }
    ech.rank()
}
