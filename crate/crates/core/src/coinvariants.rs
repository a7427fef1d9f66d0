//! Multigraded dimensions of the coinvariant ring
//! `C[x_1..x_n] / (positive-degree Sigma_n invariants)` for multivariables
//! of dimension `d`, and of the images of Young-subgroup invariants in it.
//!
//! Pieces are built one total degree at a time: each piece is presented as
//! a quotient of copies of the pieces one degree lower, which keeps the
//! linear algebra at the size of the quotient rather than of the monomial
//! space. [`ideal_piece_dim`] computes the same information directly as the
//! rank of the matrix of products `m * p_alpha`.

use std::collections::{BTreeMap, HashMap};
use std::ops::Range;

use num_traits::ToPrimitive;
use thiserror::Error;

use crate::exactla::{EliminationField, Echelon, ExactError, Ranker, RationalField, SparseMatrix, SparseRow};
use crate::polyring::{
    is_young_canonical, monomial_basis, polarized_power_sum, weak_compositions, young_blocks,
    young_orbit, MultiMonomial, PolyError,
};

pub const DEFAULT_MAX_DEGREE: u32 = 40;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CoinvariantError {
    #[error(transparent)]
    Exact(#[from] ExactError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("reached the total-degree cap {cap} without the quotient vanishing")]
    DegreeCap { cap: u32 },
    #[error("layer {degree} vanished but layer {} did not", degree + 1)]
    StoppingRule { degree: u32 },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedDims {
    n: usize,
    d: usize,
    dims: BTreeMap<Vec<u32>, u64>,
}

impl GradedDims {
    fn new(n: usize, d: usize) -> Self {
        GradedDims {
            n,
            d,
            dims: BTreeMap::new(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn get(&self, multidegree: &[u32]) -> u64 {
        self.dims.get(multidegree).copied().unwrap_or(0)
    }

    pub fn total(&self) -> u64 {
        self.dims.values().sum()
    }

    /// Nonzero pieces by multidegree.
    pub fn iter(&self) -> impl Iterator<Item = (&Vec<u32>, u64)> {
        self.dims.iter().map(|(k, &v)| (k, v))
    }

    /// Dimensions summed over each total degree, from degree 0 to the top.
    pub fn by_total_degree(&self) -> Vec<u64> {
        let top = self.dims.keys().map(|k| k.iter().sum::<u32>()).max();
        let Some(top) = top else { return Vec::new() };
        let mut out = vec![0; top as usize + 1];
        for (k, v) in &self.dims {
            out[k.iter().sum::<u32>() as usize] += v;
        }
        out
    }

    fn insert(&mut self, multidegree: Vec<u32>, dim: u64) {
        if dim > 0 {
            self.dims.insert(multidegree, dim);
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CoinvariantConfig {
    /// Hard cap on the total degree; hitting it is an error, never a result.
    pub max_degree: u32,
    /// Recompute the layer after the first vanishing one and insist it vanishes.
    pub check_stopping_rule: bool,
}

impl Default for CoinvariantConfig {
    fn default() -> Self {
        CoinvariantConfig {
            max_degree: DEFAULT_MAX_DEGREE,
            check_stopping_rule: cfg!(debug_assertions),
        }
    }
}

/// Columns and ideal rows of one multidegree piece.
struct Piece {
    basis: Vec<MultiMonomial>,
    ideal_rows: Vec<Vec<(usize, i64)>>,
}

impl Piece {
    fn build(n: usize, d: usize, multidegree: &[u32]) -> Result<Piece, CoinvariantError> {
        let basis = monomial_basis(n, d, multidegree);
        let index: HashMap<MultiMonomial, usize> =
            basis.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        let mut ideal_rows = Vec::new();
        let total: u32 = multidegree.iter().sum();
        // p_alpha with |alpha| <= n generate the invariant algebra, so higher
        // ones add nothing to the ideal
        let max_alpha = total.min(n as u32);
        for size in 1..=max_alpha {
            for alpha in weak_compositions(size, d) {
                if alpha.iter().zip(multidegree).any(|(a, m)| a > m) {
                    continue;
                }
                let p = polarized_power_sum(&alpha, n)?;
                let rest: Vec<u32> = multidegree.iter().zip(&alpha).map(|(m, a)| m - a).collect();
                for m in monomial_basis(n, d, &rest) {
                    let row = p
                        .mul_monomial(&m)
                        .terms()
                        .map(|(mono, c)| {
                            let coeff = c.to_integer().to_i64().expect("small integer coefficient");
                            (index[mono], coeff)
                        })
                        .collect();
                    ideal_rows.push(row);
                }
            }
        }
        Ok(Piece {
            basis,
            ideal_rows,
        })
    }

    fn ideal_matrix(&self) -> Result<SparseMatrix, ExactError> {
        SparseMatrix::from_sparse_rows(self.basis.len(), self.ideal_rows.iter().cloned())
    }
}

/// Dimension of the ideal's piece in the given multidegree.
pub fn ideal_piece_dim(n: usize, d: usize, multidegree: &[u32], ranker: &Ranker) -> Result<usize, CoinvariantError> {
    let piece = Piece::build(n, d, multidegree)?;
    Ok(ranker.rank(&piece.ideal_matrix()?)?)
}

/// Quotient data for one multidegree: a basis of the coinvariant piece and
/// the normal form of every monomial of that multidegree in that basis.
struct Level<E> {
    dim: usize,
    index: HashMap<Vec<u32>, usize>,
    basis: Vec<MultiMonomial>,
    nf: Vec<SparseRow<E>>,
}

impl<E: Clone> Level<E> {
    fn normal_form(&self, exps: &[u32]) -> &SparseRow<E> {
        &self.nf[self.index[exps]]
    }
}

/// Builds the piece of multidegree `mu` from the pieces one degree lower.
///
/// Every monomial of positive degree is `x_i^(k) * m'`, so the piece is a
/// quotient of the direct sum, over variables `x_i^(k)`, of the pieces of
/// multidegree `mu - e_k`. The kernel is spanned by the differences between
/// two factorizations of the same monomial together with `p_mu` itself.
fn build_level<F: EliminationField>(
    field: &F,
    n: usize,
    d: usize,
    mu: &[u32],
    prev: &HashMap<Vec<u32>, Level<F::Elem>>,
) -> Level<F::Elem> {
    let basis = monomial_basis(n, d, mu);
    let index: HashMap<Vec<u32>, usize> = basis
        .iter()
        .enumerate()
        .map(|(i, m)| (m.exponents().to_vec(), i))
        .collect();
    if mu.iter().all(|&a| a == 0) {
        return Level {
            dim: 1,
            index,
            basis,
            nf: vec![vec![(0, field.one())]],
        };
    }

    let lower: Vec<Option<&Level<F::Elem>>> = (0..d)
        .map(|k| {
            (mu[k] > 0).then(|| {
                let mut below = mu.to_vec();
                below[k] -= 1;
                &prev[&below]
            })
        })
        .collect();
    // slot (i, k) holds x_i^(k) times the piece of multidegree mu - e_k
    let mut offset = vec![0usize; n * d];
    let mut width = 0;
    for i in 0..n {
        for k in 0..d {
            offset[i * d + k] = width;
            width += lower[k].map_or(0, |l| l.dim);
        }
    }

    let lift = |exps: &[u32], slot: usize| -> SparseRow<F::Elem> {
        let k = slot % d;
        let level = lower[k].expect("factor through a positive coordinate");
        let mut below = exps.to_vec();
        below[slot] -= 1;
        level
            .normal_form(&below)
            .iter()
            .map(|(c, v)| (offset[slot] + c, v.clone()))
            .collect()
    };

    let mut ech = Echelon::new(field.clone(), width);
    let mut first_lift = Vec::with_capacity(basis.len());
    for m in &basis {
        let exps = m.exponents();
        let mut slots = (0..n * d).filter(|&s| exps[s] > 0);
        let s0 = slots.next().expect("positive degree");
        let v0 = lift(exps, s0);
        for s in slots {
            let mut rel = v0.clone();
            rel.extend(lift(exps, s).into_iter().map(|(c, v)| (c, field.neg(&v))));
            ech.insert(rel);
        }
        first_lift.push(v0);
    }
    let k0 = mu.iter().position(|&a| a > 0).expect("positive degree");
    let mut power_sum = Vec::new();
    for i in 0..n {
        power_sum.extend(lift(MultiMonomial::power_of(n, i, mu).exponents(), i * d + k0));
    }
    ech.insert(power_sum);

    let mut new_col = vec![usize::MAX; width];
    let mut dim = 0;
    for (c, slot) in new_col.iter_mut().enumerate() {
        if !ech.is_pivot(c) {
            *slot = dim;
            dim += 1;
        }
    }
    let nf = first_lift
        .into_iter()
        .map(|v| ech.reduce(v).into_iter().map(|(c, x)| (new_col[c], x)).collect())
        .collect();
    Level { dim, index, basis, nf }
}

/// Dimension of the image of the Young-orbit sums in one piece.
fn invariant_dim<F: EliminationField>(field: &F, level: &Level<F::Elem>, blocks: &[Range<usize>]) -> u64 {
    if level.dim == 0 {
        return 0;
    }
    let mut ech = Echelon::new(field.clone(), level.dim);
    for m in level.basis.iter().filter(|m| is_young_canonical(blocks, m)) {
        let mut row = Vec::new();
        for o in young_orbit(blocks, m) {
            row.extend(level.normal_form(o.exponents()).iter().cloned());
        }
        ech.insert(row);
        if ech.rank() == level.dim {
            break;
        }
    }
    ech.rank() as u64
}

type Walk = (GradedDims, Vec<GradedDims>);

/// Walks total degrees upward until a whole layer of the coinvariant ring
/// vanishes. The ring is generated in degree one, so every later layer
/// vanishes too.
fn walk_layers<F: EliminationField>(
    field: F,
    n: usize,
    d: usize,
    groups: &[Vec<Range<usize>>],
    cfg: &CoinvariantConfig,
) -> Result<Walk, CoinvariantError> {
    let mut full = GradedDims::new(n, d);
    let mut parts: Vec<GradedDims> = groups.iter().map(|_| GradedDims::new(n, d)).collect();
    let mut prev: HashMap<Vec<u32>, Level<F::Elem>> = HashMap::new();
    let mut degree = 0u32;
    loop {
        if degree > cfg.max_degree {
            return Err(CoinvariantError::DegreeCap { cap: cfg.max_degree });
        }
        let mut layer = HashMap::new();
        let mut layer_total = 0;
        for mu in weak_compositions(degree, d) {
            let level = build_level(&field, n, d, &mu, &prev);
            layer_total += level.dim as u64;
            full.insert(mu.clone(), level.dim as u64);
            for (g, blocks) in parts.iter_mut().zip(groups) {
                g.insert(mu.clone(), invariant_dim(&field, &level, blocks));
            }
            layer.insert(mu, level);
        }
        if layer_total == 0 {
            if cfg.check_stopping_rule {
                for mu in weak_compositions(degree + 1, d) {
                    if build_level(&field, n, d, &mu, &layer).dim != 0 {
                        return Err(CoinvariantError::StoppingRule { degree });
                    }
                }
            }
            return Ok((full, parts));
        }
        prev = layer;
        degree += 1;
    }
}

fn walk(n: usize, d: usize, groups: &[Vec<Range<usize>>], ranker: &Ranker, cfg: &CoinvariantConfig) -> Result<Walk, CoinvariantError> {
    ranker.run(
        |p| walk_layers(p, n, d, groups, cfg),
        || walk_layers(RationalField, n, d, groups, cfg),
    )
}

pub fn coinvariant_dims(n: usize, d: usize, ranker: &Ranker, cfg: &CoinvariantConfig) -> Result<GradedDims, CoinvariantError> {
    Ok(walk(n, d, &[], ranker, cfg)?.0)
}

/// Per-multidegree dimensions of the image of the
/// `Sigma_{i_0} x ... x Sigma_{i_r}`-invariants (acting on consecutive
/// blocks of multivariables) in the coinvariant ring.
pub fn invariant_coinvariant_dims(
    n: usize,
    d: usize,
    composition: &[usize],
    ranker: &Ranker,
    cfg: &CoinvariantConfig,
) -> Result<GradedDims, CoinvariantError> {
    let mut all = invariant_coinvariant_dims_many(n, d, &[composition.to_vec()], ranker, cfg)?;
    Ok(all.pop().expect("one composition in, one out"))
}

/// Same as [`invariant_coinvariant_dims`] for several compositions at once,
/// sharing the ideal computations.
pub fn invariant_coinvariant_dims_many(
    n: usize,
    d: usize,
    compositions: &[Vec<usize>],
    ranker: &Ranker,
    cfg: &CoinvariantConfig,
) -> Result<Vec<GradedDims>, CoinvariantError> {
    let groups = compositions
        .iter()
        .map(|c| young_blocks(c, n))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(walk(n, d, &groups, ranker, cfg)?.1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::{rank, RankMode, RankStrategy};
    use num_rational::BigRational;
    use num_traits::{One, Zero};

    fn ranker() -> Ranker {
        Ranker::new(RankStrategy::default()).unwrap()
    }

    /// Independent row reduction over Q on dense rows, used as an oracle.
    fn dense_rank(mut rows: Vec<Vec<BigRational>>) -> usize {
        let mut rank = 0;
        let cols = rows.first().map_or(0, |r| r.len());
        for c in 0..cols {
            let Some(p) = (rank..rows.len()).find(|&i| !rows[i][c].is_zero()) else { continue };
            rows.swap(rank, p);
            let pivot = rows[rank][c].clone();
            for i in 0..rows.len() {
                if i != rank && !rows[i][c].is_zero() {
                    let f = &rows[i][c] / &pivot;
                    let prow = rows[rank].clone();
                    for (x, p) in rows[i].iter_mut().zip(&prow) {
                        *x -= p * &f;
                    }
                }
            }
            rank += 1;
        }
        rank
    }

    #[test]
    fn ideal_piece_examples() {
        let r = ranker();
        assert_eq!(ideal_piece_dim(3, 2, &[0, 0], &r).unwrap(), 0);
        assert_eq!(ideal_piece_dim(2, 1, &[1], &r).unwrap(), 1);
        // spanned by x1^2 + x2^2, (x1 + x2) x1, (x1 + x2) x2 in the basis x1^2, x1 x2, x2^2
        let one = BigRational::one();
        let zero = BigRational::zero();
        let rows = vec![
            vec![one.clone(), zero.clone(), one.clone()],
            vec![one.clone(), one.clone(), zero.clone()],
            vec![zero, one.clone(), one],
        ];
        // the three generators are independent, so the whole degree-2 piece
        // lies in the ideal (matching the Chevalley count 1, 1 for n = 2)
        assert_eq!(dense_rank(rows), 3);
        assert_eq!(ideal_piece_dim(2, 1, &[2], &r).unwrap(), 3);
    }

    #[test]
    fn ideal_rank_matches_rational_route() {
        for (n, d, mu) in [(3usize, 2usize, vec![2u32, 1]), (3, 1, vec![3]), (2, 3, vec![1, 1, 1])] {
            let piece = Piece::build(n, d, &mu).unwrap();
            let m = piece.ideal_matrix().unwrap();
            let exact = rank(&m, RankMode::Rational).unwrap();
            let dense: Vec<Vec<BigRational>> = piece
                .ideal_rows
                .iter()
                .map(|row| {
                    let mut v = vec![BigRational::zero(); piece.basis.len()];
                    for &(c, x) in row {
                        v[c] += BigRational::from_integer(x.into());
                    }
                    v
                })
                .collect();
            assert_eq!(exact, dense_rank(dense));
        }
    }

    #[test]
    fn tower_matches_direct_ideal_rank() {
        let r = ranker();
        for (n, d) in [(2usize, 1usize), (3, 1), (4, 1), (2, 2), (3, 2), (2, 3)] {
            let g = coinvariant_dims(n, d, &r, &CoinvariantConfig::default()).unwrap();
            let top = g.by_total_degree().len() as u32;
            for degree in 0..=top {
                for mu in weak_compositions(degree, d) {
                    let monomials = monomial_basis(n, d, &mu).len();
                    let ideal = ideal_piece_dim(n, d, &mu, &r).unwrap();
                    assert_eq!(g.get(&mu), (monomials - ideal) as u64, "n={n} d={d} mu={mu:?}");
                }
            }
        }
    }

    #[test]
    fn chevalley_n3() {
        let g = coinvariant_dims(3, 1, &ranker(), &CoinvariantConfig::default()).unwrap();
        assert_eq!(g.total(), 6);
        assert_eq!(g.by_total_degree(), vec![1, 2, 2, 1]);
    }

    #[test]
    fn single_multivariable_has_trivial_quotient() {
        for d in 1..=3 {
            let g = coinvariant_dims(1, d, &ranker(), &CoinvariantConfig::default()).unwrap();
            assert_eq!(g.total(), 1);
        }
    }

    #[test]
    fn diagonal_n3_matches_parking_count() {
        let g = coinvariant_dims(3, 2, &ranker(), &CoinvariantConfig::default()).unwrap();
        assert_eq!(g.total(), 16);
        // symmetric in the two coordinates
        for (mu, dim) in g.iter() {
            assert_eq!(g.get(&[mu[1], mu[0]]), dim);
        }
    }

    #[test]
    fn invariant_examples() {
        let r = ranker();
        let cfg = CoinvariantConfig::default();
        for (n, d) in [(3, 1), (2, 2), (3, 2)] {
            assert_eq!(invariant_coinvariant_dims(n, d, &[n], &r, &cfg).unwrap().total(), 1);
        }
        assert_eq!(invariant_coinvariant_dims(2, 1, &[1, 1], &r, &cfg).unwrap().total(), 2);
        assert_eq!(invariant_coinvariant_dims(2, 2, &[1, 1], &r, &cfg).unwrap().total(), 3);
        assert!(matches!(
            invariant_coinvariant_dims(2, 2, &[1, 2], &r, &cfg),
            Err(CoinvariantError::Poly(PolyError::BadComposition { .. }))
        ));
    }

    #[test]
    fn degree_cap_is_an_error() {
        let cfg = CoinvariantConfig {
            max_degree: 1,
            check_stopping_rule: true,
        };
        assert_eq!(
            coinvariant_dims(3, 1, &ranker(), &cfg),
            Err(CoinvariantError::DegreeCap { cap: 1 })
        );
    }

    #[test]
    fn exact_mode_agrees_with_crosscheck() {
        let exact = Ranker::new(RankStrategy::Exact).unwrap();
        let cfg = CoinvariantConfig::default();
        assert_eq!(
            coinvariant_dims(3, 2, &exact, &cfg).unwrap(),
            coinvariant_dims(3, 2, &ranker(), &cfg).unwrap()
        );
    }
}
