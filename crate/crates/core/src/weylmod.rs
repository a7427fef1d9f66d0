//! Characters of local Weyl modules for `sl(r+1)` with highest weight
//! `n * omega_1`.
//!
//! At the origin the weight space of composition `(i_0, ..., i_r)` is the
//! image of the `Sigma_{i_0} x ... x Sigma_{i_r}`-invariants in the
//! coinvariant ring. For `d = 1` and arbitrary points the module is the
//! quotient of `S^n(A_N (x) V)` by `J_Z`, where `A_N` is the polynomial ring
//! modulo the `N`-th power of the vanishing ideal of the point set and `J_Z`
//! is the kernel of evaluation at the points.

use std::collections::{BTreeMap, HashMap};

use num_rational::BigRational;
use thiserror::Error;

use crate::character::{compositions, WeightCharacter};
use crate::coinvariants::{invariant_coinvariant_dims_many, CoinvariantConfig, CoinvariantError};
use crate::exactla::{Echelon, EliminationField, ExactError, Ranker, RationalField};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WeylError {
    #[error(transparent)]
    Coinvariant(#[from] CoinvariantError),
    #[error(transparent)]
    Exact(#[from] ExactError),
    #[error("point models are only available for d = 1 (got d = {d})")]
    Unsupported { d: usize },
    #[error("truncation order {order} is below n = {n}")]
    Truncation { order: usize, n: usize },
    #[error("r must be at least 1")]
    Rank,
    #[error("every point needs {d} coordinates")]
    PointShape { d: usize },
}

/// `n` points of `C^d`, repetitions allowed, all attached to the first node.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointMultiset {
    d: usize,
    points: Vec<Vec<BigRational>>,
}

impl PointMultiset {
    pub fn new(d: usize, points: Vec<Vec<BigRational>>) -> Result<Self, WeylError> {
        if points.iter().any(|p| p.len() != d) {
            return Err(WeylError::PointShape { d });
        }
        Ok(PointMultiset { d, points })
    }

    /// Points on the line.
    pub fn on_line(points: impl IntoIterator<Item = BigRational>) -> Self {
        PointMultiset {
            d: 1,
            points: points.into_iter().map(|p| vec![p]).collect(),
        }
    }

    pub fn from_integers(points: &[i64]) -> Self {
        Self::on_line(points.iter().map(|&p| BigRational::from_integer(p.into())))
    }

    pub fn n(&self) -> usize {
        self.points.len()
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn points(&self) -> &[Vec<BigRational>] {
        &self.points
    }

    /// Distinct locations in increasing order with their multiplicities.
    pub fn groups(&self) -> Vec<(Vec<BigRational>, usize)> {
        let mut counts: BTreeMap<&Vec<BigRational>, usize> = BTreeMap::new();
        for p in &self.points {
            *counts.entry(p).or_default() += 1;
        }
        counts.into_iter().map(|(p, c)| (p.clone(), c)).collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TruncationOrder(usize);

impl TruncationOrder {
    pub fn new(order: usize, n: usize) -> Result<Self, WeylError> {
        if order < n {
            return Err(WeylError::Truncation { order, n });
        }
        Ok(TruncationOrder(order))
    }

    /// The default order `N = n`.
    pub fn minimal(n: usize) -> Self {
        TruncationOrder(n)
    }

    pub fn get(&self) -> usize {
        self.0
    }
}

/// Weight character of the local Weyl module at the origin of `C^d`.
pub fn origin_weyl_character(
    n: usize,
    d: usize,
    r: usize,
    ranker: &Ranker,
    cfg: &CoinvariantConfig,
) -> Result<WeightCharacter, WeylError> {
    if r == 0 {
        return Err(WeylError::Rank);
    }
    let comps = compositions(n, r);
    let groups: Vec<Vec<usize>> = comps
        .iter()
        .map(|c| c.iter().map(|&x| x as usize).collect())
        .collect();
    let dims = invariant_coinvariant_dims_many(n, d, &groups, ranker, cfg)?;
    let mut out = WeightCharacter::new(n, r);
    for (c, g) in comps.into_iter().zip(dims) {
        out.set(c, g.total());
    }
    Ok(out)
}

/// A weight-space basis vector: for each colour `j` of `V`, the sorted
/// multiset of `A_N` basis elements paired with `v_j`. Element `l * N + k`
/// stands for `t^k e_l`, the `k`-th power of the local coordinate at
/// location `l` times its idempotent.
type Tableau = Vec<Vec<usize>>;

fn multisets(size: usize, universe: usize) -> Vec<Vec<usize>> {
    fn go(size: usize, start: usize, universe: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == size {
            out.push(cur.clone());
            return;
        }
        for e in start..universe {
            cur.push(e);
            go(size, e, universe, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(size, 0, universe, &mut Vec::new(), &mut out);
    out
}

/// Nonnegative integer matrices with the given row and column sums, row-major.
fn contingency_tables(rows: &[usize], cols: &[usize]) -> Vec<Vec<usize>> {
    fn go(rows: &[usize], left: &mut Vec<usize>, row: usize, col: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let ncols = left.len();
        if row == rows.len() {
            if left.iter().all(|&l| l == 0) {
                out.push(cur.clone());
            }
            return;
        }
        let filled: usize = cur[row * ncols..].iter().sum();
        let remaining = rows[row] - filled;
        if col + 1 == ncols {
            if remaining <= left[col] {
                left[col] -= remaining;
                cur.push(remaining);
                go(rows, left, row + 1, 0, cur, out);
                cur.pop();
                left[col] += remaining;
            }
            return;
        }
        for v in 0..=remaining.min(left[col]) {
            left[col] -= v;
            cur.push(v);
            go(rows, left, row, col + 1, cur, out);
            cur.pop();
            left[col] += v;
        }
    }
    let mut out = Vec::new();
    if cols.is_empty() {
        if rows.iter().all(|&r| r == 0) {
            out.push(Vec::new());
        }
        return out;
    }
    go(rows, &mut cols.to_vec(), 0, 0, &mut Vec::new(), &mut out);
    out
}

/// Basis tableaux of one weight space whose location counts match the
/// multiplicities; all others lie in `J_Z` already, because the idempotent
/// `e_l` acts on them by a nonzero scalar once its evaluation is subtracted.
fn weight_basis(composition: &[u32], mults: &[usize], order: usize) -> Vec<Tableau> {
    let rows: Vec<usize> = composition.iter().map(|&c| c as usize).collect();
    let locations = mults.len();
    let mut out = Vec::new();
    for table in contingency_tables(&rows, mults) {
        let mut partial: Vec<Tableau> = vec![Vec::new()];
        for colour in 0..rows.len() {
            let mut options: Vec<Vec<usize>> = vec![Vec::new()];
            for loc in 0..locations {
                let count = table[colour * locations + loc];
                let local = multisets(count, order);
                options = options
                    .iter()
                    .flat_map(|o| {
                        local.iter().map(move |ms| {
                            let mut v = o.clone();
                            v.extend(ms.iter().map(|k| loc * order + k));
                            v
                        })
                    })
                    .collect();
            }
            partial = partial
                .iter()
                .flat_map(|t| {
                    options.iter().map(move |o| {
                        let mut t = t.clone();
                        t.push(o.clone());
                        t
                    })
                })
                .collect();
        }
        out.extend(partial);
    }
    out
}

/// Grading preserved by the generators: the number of elements of each
/// colour at each location, then the local degree at each location.
fn tableau_grade(t: &Tableau, locations: usize, order: usize) -> Vec<usize> {
    let mut grade = vec![0; t.len() * locations + locations];
    for (colour, ms) in t.iter().enumerate() {
        for &e in ms {
            grade[colour * locations + e / order] += 1;
            grade[t.len() * locations + e / order] += e % order;
        }
    }
    grade
}

/// Dimension of one weight space of the point model.
fn points_weight_dim<F: EliminationField>(field: &F, composition: &[u32], mults: &[usize], order: usize) -> u64 {
    let locations = mults.len();
    let basis = weight_basis(composition, mults, order);
    let mut by_grade: BTreeMap<Vec<usize>, Vec<Tableau>> = BTreeMap::new();
    for t in basis {
        by_grade.entry(tableau_grade(&t, locations, order)).or_default().push(t);
    }
    let index: HashMap<&Tableau, usize> = by_grade
        .values()
        .flat_map(|ts| ts.iter().enumerate().map(|(i, t)| (t, i)))
        .collect();

    // J_Z is spanned by the degree-one generators sum_i P(x_i) - sum_i P(z_i)
    // with P running over the basis of A_N. For P = t^k e_l with k >= 1 the
    // evaluation vanishes and P acts as a derivation raising the local
    // degree at l by k.
    let degree_slot = composition.len() * locations;
    let mut rows: BTreeMap<Vec<usize>, Vec<Vec<(usize, i64)>>> = BTreeMap::new();
    for (grade, ts) in &by_grade {
        for loc in 0..locations {
            for k in 1..order {
                let mut target = grade.clone();
                target[degree_slot + loc] += k;
                if !by_grade.contains_key(&target) {
                    continue;
                }
                for t in ts {
                    let mut image: BTreeMap<usize, i64> = BTreeMap::new();
                    for (colour, ms) in t.iter().enumerate() {
                        let mut prev = None;
                        for (pos, &e) in ms.iter().enumerate() {
                            if prev == Some(e) || e / order != loc || e % order + k >= order {
                                prev = Some(e);
                                continue;
                            }
                            prev = Some(e);
                            let mult = ms.iter().filter(|&&x| x == e).count() as i64;
                            let mut moved = ms.clone();
                            moved[pos] = e + k;
                            moved.sort_unstable();
                            let mut nt = t.clone();
                            nt[colour] = moved;
                            *image.entry(index[&nt]).or_default() += mult;
                        }
                    }
                    if !image.is_empty() {
                        rows.entry(target.clone()).or_default().push(image.into_iter().collect());
                    }
                }
            }
        }
    }

    let mut total = 0u64;
    for (grade, ts) in &by_grade {
        let mut ech = Echelon::new(field.clone(), ts.len());
        for row in rows.remove(grade).unwrap_or_default() {
            ech.insert(row.into_iter().map(|(c, v)| (c, field.integer(v))).collect());
            if ech.rank() == ts.len() {
                break;
            }
        }
        total += (ts.len() - ech.rank()) as u64;
    }
    total
}

/// Weight character of the local Weyl module at a multiset of points on the
/// line, computed in the truncated symmetric-power model.
pub fn points_weyl_character(
    points: &PointMultiset,
    r: usize,
    order: TruncationOrder,
    ranker: &Ranker,
) -> Result<WeightCharacter, WeylError> {
    if points.d() != 1 {
        return Err(WeylError::Unsupported { d: points.d() });
    }
    if r == 0 {
        return Err(WeylError::Rank);
    }
    let n = points.n();
    let order = TruncationOrder::new(order.get(), n)?.get();
    let mults: Vec<usize> = points.groups().into_iter().map(|(_, m)| m).collect();
    let comps = compositions(n, r);
    let table = |field: &dyn Fn(&[u32]) -> u64| comps.iter().map(|c| field(c)).collect::<Vec<u64>>();
    let dims = ranker.run(
        |p| Ok::<_, WeylError>(table(&|c| points_weight_dim(&p, c, &mults, order.max(1)))),
        || Ok(table(&|c| points_weight_dim(&RationalField, c, &mults, order.max(1)))),
    )?;
    let mut out = WeightCharacter::new(n, r);
    for (c, dim) in comps.into_iter().zip(dims) {
        out.set(c, dim);
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TensorFactor {
    pub location: BigRational,
    pub multiplicity: usize,
    pub character: WeightCharacter,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TensorReport {
    pub whole: WeightCharacter,
    pub factors: Vec<TensorFactor>,
    pub product: WeightCharacter,
    pub totals_match: bool,
    pub characters_match: bool,
}

impl TensorReport {
    pub fn passed(&self) -> bool {
        self.totals_match && self.characters_match
    }
}

/// Compares the module at all points with the tensor product of the modules
/// at each distinct location, using the default truncation `N = n` for each.
pub fn verify_tensor_factorization(points: &PointMultiset, r: usize, ranker: &Ranker) -> Result<TensorReport, WeylError> {
    if points.d() != 1 {
        return Err(WeylError::Unsupported { d: points.d() });
    }
    let whole = points_weyl_character(points, r, TruncationOrder::minimal(points.n()), ranker)?;
    let mut factors = Vec::new();
    let mut product = WeightCharacter::new(0, r);
    product.set(vec![0; r + 1], 1);
    for (loc, mult) in points.groups() {
        let group = PointMultiset::on_line(std::iter::repeat_n(loc[0].clone(), mult));
        let character = points_weyl_character(&group, r, TruncationOrder::minimal(mult), ranker)?;
        product = product.product(&character);
        factors.push(TensorFactor {
            location: loc[0].clone(),
            multiplicity: mult,
            character,
        });
    }
    Ok(TensorReport {
        totals_match: whole.total() == product.total(),
        characters_match: whole == product,
        whole,
        factors,
        product,
    })
}

/// True when raising the truncation order from `N` to `N + 1` leaves the
/// character unchanged.
pub fn truncation_stability_check(
    points: &PointMultiset,
    r: usize,
    order: TruncationOrder,
    ranker: &Ranker,
) -> Result<bool, WeylError> {
    let here = points_weyl_character(points, r, order, ranker)?;
    let next = points_weyl_character(points, r, TruncationOrder(order.get() + 1), ranker)?;
    Ok(here == next)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::RankStrategy;

    fn ranker() -> Ranker {
        Ranker::new(RankStrategy::default()).unwrap()
    }

    fn entries(c: &WeightCharacter) -> Vec<u64> {
        c.full_table().into_iter().map(|(_, m)| m).collect()
    }

    #[test]
    fn origin_examples() {
        let r = ranker();
        let cfg = CoinvariantConfig::default();
        let c = origin_weyl_character(2, 2, 1, &r, &cfg).unwrap();
        assert_eq!(entries(&c), vec![1, 3, 1]);
        let c = origin_weyl_character(3, 1, 2, &r, &cfg).unwrap();
        assert_eq!(c.total(), 27);
        assert_eq!(c.get(&[1, 1, 1]), 6);
        assert_eq!(c.get(&[2, 1, 0]), 3);
        let c = origin_weyl_character(0, 2, 1, &r, &cfg).unwrap();
        assert_eq!(c.total(), 1);
        assert_eq!(c.get(&[0, 0]), 1);
    }

    #[test]
    fn point_examples() {
        let r = ranker();
        let two = TruncationOrder::new(2, 2).unwrap();
        let c = points_weyl_character(&PointMultiset::from_integers(&[0, 0]), 1, two, &r).unwrap();
        assert_eq!(entries(&c), vec![1, 2, 1]);
        let c = points_weyl_character(&PointMultiset::from_integers(&[0, 1]), 1, two, &r).unwrap();
        assert_eq!(c.total(), 4);
        for rank in 1..=3 {
            let c = points_weyl_character(&PointMultiset::from_integers(&[5]), rank, TruncationOrder::minimal(1), &r)
                .unwrap();
            assert_eq!(c.total(), rank as u64 + 1);
        }
    }

    #[test]
    fn point_model_rejects_bad_input() {
        let r = ranker();
        let pts = PointMultiset::from_integers(&[0, 0, 0]);
        assert_eq!(
            TruncationOrder::new(2, 3),
            Err(WeylError::Truncation { order: 2, n: 3 })
        );
        assert!(matches!(
            points_weyl_character(&pts, 1, TruncationOrder(2), &r),
            Err(WeylError::Truncation { .. })
        ));
        let plane = PointMultiset::new(2, vec![vec![BigRational::from_integer(0.into()); 2]]).unwrap();
        assert_eq!(
            points_weyl_character(&plane, 1, TruncationOrder::minimal(1), &r),
            Err(WeylError::Unsupported { d: 2 })
        );
    }

    #[test]
    fn origin_points_agree_with_coinvariants() {
        let r = ranker();
        let cfg = CoinvariantConfig::default();
        for n in 0..=3 {
            for rank in 1..=2 {
                let pts = PointMultiset::from_integers(&vec![0; n]);
                let a = points_weyl_character(&pts, rank, TruncationOrder::minimal(n), &r).unwrap();
                let b = origin_weyl_character(n, 1, rank, &r, &cfg).unwrap();
                assert_eq!(a, b, "n={n} r={rank}");
            }
        }
    }

    #[test]
    fn tensor_examples() {
        let r = ranker();
        let rep = verify_tensor_factorization(&PointMultiset::from_integers(&[0, 1, 2]), 1, &r).unwrap();
        assert!(rep.passed());
        assert_eq!(rep.whole.total(), 8);
        assert_eq!(rep.factors.len(), 3);
        let rep = verify_tensor_factorization(&PointMultiset::from_integers(&[0, 0, 1]), 1, &r).unwrap();
        assert!(rep.passed());
        let totals: Vec<u64> = rep.factors.iter().map(|f| f.character.total()).collect();
        assert_eq!(totals, vec![4, 2]);
        let rep = verify_tensor_factorization(&PointMultiset::from_integers(&[0, 0]), 1, &r).unwrap();
        assert!(rep.passed());
        assert_eq!(rep.factors.len(), 1);
    }

    #[test]
    fn truncation_examples() {
        let r = ranker();
        let pts = PointMultiset::from_integers(&[0, 0]);
        assert!(truncation_stability_check(&pts, 1, TruncationOrder::minimal(2), &r).unwrap());
        let pts = PointMultiset::from_integers(&[0]);
        assert!(truncation_stability_check(&pts, 1, TruncationOrder::minimal(1), &r).unwrap());
    }

    /// Below the safe order the model is too small: at N = 1 every factor
    /// collapses to its value, leaving only the symmetric power of V.
    #[test]
    fn undersized_truncation_loses_dimension() {
        let pts = PointMultiset::from_integers(&[0, 0]);
        let field = crate::exactla::PrimeField::new(crate::exactla::DEFAULT_PRIMES.0).unwrap();
        let dim = points_weight_dim(&field, &[1, 1], &[2], 1);
        assert_eq!(dim, 1);
        assert_eq!(pts.groups().len(), 1);
    }
}
