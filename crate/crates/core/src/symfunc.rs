//! Symmetric functions in the `h`, `e`, `s` and `m` bases, Kostka numbers,
//! and the Frobenius transformation to `sl(r+1)`-modules.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Mutex, OnceLock};

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::character::WeightCharacter;
use crate::combinat::{enumerate_a, partitions, Partition};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SymError {
    #[error("partitions of different sizes: {0} and {1}")]
    SizeMismatch(u32, u32),
    #[error("expected an expression in the {expected:?} basis, got {got:?}")]
    WrongBasis { expected: Basis, got: Basis },
    #[error("coefficient {coeff} on s_{shape} is not a nonnegative integer; not a module")]
    NotAModule { shape: String, coeff: String },
    #[error("the sign twist of the monomial basis leaves {{h, e, s, m}}")]
    SignTwistOfMonomial,
    #[error("highest weight {hw:?} does not fit degree {n} for sl({rank})")]
    DegreeMismatch { hw: Vec<u32>, n: usize, rank: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Basis {
    H,
    E,
    S,
    M,
}

/// A homogeneous symmetric function of fixed degree in one basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymFuncExpr {
    basis: Basis,
    degree: u32,
    coeffs: BTreeMap<Partition, BigRational>,
}

impl SymFuncExpr {
    pub fn zero(basis: Basis, degree: u32) -> Self {
        SymFuncExpr {
            basis,
            degree,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn basis_element(basis: Basis, shape: Partition) -> Self {
        let mut x = Self::zero(basis, shape.size());
        x.add_term(shape, BigRational::one());
        x
    }

    pub fn from_terms(
        basis: Basis,
        degree: u32,
        terms: impl IntoIterator<Item = (Partition, i64)>,
    ) -> Self {
        let mut x = Self::zero(basis, degree);
        for (p, c) in terms {
            x.add_term(p, BigRational::from_integer(c.into()));
        }
        x
    }

    pub fn add_term(&mut self, shape: Partition, c: BigRational) {
        assert_eq!(shape.size(), self.degree, "inhomogeneous symmetric function");
        let sum = self.coeff(&shape) + c;
        if sum.is_zero() {
            self.coeffs.remove(&shape);
        } else {
            self.coeffs.insert(shape, sum);
        }
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn coeff(&self, shape: &Partition) -> BigRational {
        self.coeffs.get(shape).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &BigRational)> {
        self.coeffs.iter()
    }

    fn expect(&self, basis: Basis) -> Result<(), SymError> {
        if self.basis != basis {
            return Err(SymError::WrongBasis {
                expected: basis,
                got: self.basis,
            });
        }
        Ok(())
    }
}

impl fmt::Display for SymFuncExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let label = match self.basis {
            Basis::H => "h",
            Basis::E => "e",
            Basis::S => "s",
            Basis::M => "m",
        };
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .rev()
            .map(|(p, c)| format!("{c}*{label}{p}"))
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

type KostkaKey = (Vec<u32>, Vec<u32>);

fn kostka_cache() -> &'static Mutex<HashMap<KostkaKey, u64>> {
    static CACHE: OnceLock<Mutex<HashMap<KostkaKey, u64>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Number of semistandard tableaux of shape `lambda` and content `mu`.
pub fn kostka(lambda: &Partition, mu: &Partition) -> Result<u64, SymError> {
    if lambda.size() != mu.size() {
        return Err(SymError::SizeMismatch(lambda.size(), mu.size()));
    }
    Ok(kostka_content(lambda.parts(), mu.parts()))
}

/// Kostka number for an arbitrary content vector (zeros allowed). Tableaux
/// are enumerated by peeling off the cells holding the largest letter,
/// which always form a horizontal strip.
fn kostka_content(shape: &[u32], content: &[u32]) -> u64 {
    let shape: Vec<u32> = shape.iter().copied().filter(|&p| p > 0).collect();
    let total: u32 = shape.iter().sum();
    if total != content.iter().sum::<u32>() {
        return 0;
    }
    if content.is_empty() || total == 0 {
        return 1;
    }
    // a column of height > #letters can never be filled
    if shape.len() > content.len() {
        return 0;
    }
    let key = (shape.clone(), content.to_vec());
    if let Some(&v) = kostka_cache().lock().expect("kostka cache").get(&key) {
        return v;
    }
    let (&last, rest) = content.split_last().expect("nonempty");
    let mut count = 0;
    for inner in horizontal_strips_removed(&shape, last) {
        count += kostka_content(&inner, rest);
    }
    kostka_cache().lock().expect("kostka cache").insert(key, count);
    count
}

/// Shapes `nu ⊂ shape` with `shape / nu` a horizontal strip of `size` cells.
fn horizontal_strips_removed(shape: &[u32], size: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(shape.len());
    fn rec(shape: &[u32], i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if i == shape.len() {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        // row i of nu lies between shape[i+1] and shape[i]
        let floor = shape.get(i + 1).copied().unwrap_or(0);
        let most = (shape[i] - floor).min(left);
        for take in 0..=most {
            cur.push(shape[i] - take);
            rec(shape, i + 1, left - take, cur, out);
            cur.pop();
        }
    }
    rec(shape, 0, size, &mut cur, &mut out);
    out
}

/// `h_mu = sum_lambda K_{lambda mu} s_lambda`.
pub fn h_to_schur(x: &SymFuncExpr) -> Result<SymFuncExpr, SymError> {
    x.expect(Basis::H)?;
    expand_into_schur(x, false)
}

/// `e_mu = sum_lambda K_{lambda' mu} s_lambda`.
pub fn e_to_schur(x: &SymFuncExpr) -> Result<SymFuncExpr, SymError> {
    x.expect(Basis::E)?;
    expand_into_schur(x, true)
}

fn expand_into_schur(x: &SymFuncExpr, transpose: bool) -> Result<SymFuncExpr, SymError> {
    let mut out = SymFuncExpr::zero(Basis::S, x.degree);
    for lambda in partitions(x.degree) {
        let row_shape = if transpose { lambda.conjugate() } else { lambda.clone() };
        let mut c = BigRational::zero();
        for (mu, coeff) in x.terms() {
            let k = kostka(&row_shape, mu)?;
            if k > 0 {
                c += coeff * BigRational::from_integer(k.into());
            }
        }
        out.add_term(lambda, c);
    }
    Ok(out)
}

/// `s_lambda = sum_mu K_{lambda mu} m_mu`.
pub fn schur_to_monomial(x: &SymFuncExpr) -> Result<SymFuncExpr, SymError> {
    x.expect(Basis::S)?;
    let mut out = SymFuncExpr::zero(Basis::M, x.degree);
    for (lambda, coeff) in x.terms() {
        for mu in partitions(x.degree) {
            let k = kostka(lambda, &mu)?;
            if k > 0 {
                out.add_term(mu, coeff * BigRational::from_integer(k.into()));
            }
        }
    }
    Ok(out)
}

/// Frobenius characteristic of the parking-function permutation module:
/// the sum over `A_n` of `h` indexed by the sorted nonzero entries.
pub fn parking_frobenius(n: usize) -> SymFuncExpr {
    let mut out = SymFuncExpr::zero(Basis::H, n as u32);
    for a in enumerate_a(n) {
        out.add_term(a.shape(), BigRational::one());
    }
    out
}

/// Tensoring with the sign representation: the involution `omega`.
pub fn tensor_sign(x: &SymFuncExpr) -> Result<SymFuncExpr, SymError> {
    let (basis, conj) = match x.basis {
        Basis::H => (Basis::E, false),
        Basis::E => (Basis::H, false),
        Basis::S => (Basis::S, true),
        Basis::M => return Err(SymError::SignTwistOfMonomial),
    };
    let mut out = SymFuncExpr::zero(basis, x.degree);
    for (p, c) in x.terms() {
        let shape = if conj { p.conjugate() } else { p.clone() };
        out.add_term(shape, c.clone());
    }
    Ok(out)
}

/// Dimension of a `Sigma_n`-module given by its Frobenius characteristic:
/// the coefficient extraction `<x, h_1^n>`.
pub fn specialize_dimension(x: &SymFuncExpr) -> Result<BigRational, SymError> {
    let ones = Partition::new(vec![1; x.degree as usize]);
    let schur = match x.basis {
        Basis::S => x.clone(),
        Basis::H => h_to_schur(x)?,
        Basis::E => e_to_schur(x)?,
        Basis::M => {
            // <m_mu, h_1^n> = [mu = 1^n]
            return Ok(x.coeff(&ones));
        }
    };
    let mut dim = BigRational::zero();
    for (lambda, c) in schur.terms() {
        dim += c * BigRational::from_integer(kostka(lambda, &ones)?.into());
    }
    Ok(dim)
}

/// `sl(r+1)` irreducibles with multiplicities, for a module of degree `n`
/// (a constituent of `V^{⊗n}`). Keys are highest weights in
/// fundamental-weight coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IrrepList {
    n: usize,
    r: usize,
    entries: BTreeMap<Vec<u32>, u64>,
}

impl IrrepList {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Vec<u32>, u64)> {
        self.entries.iter().map(|(k, &v)| (k, v))
    }

    pub fn get(&self, hw: &[u32]) -> u64 {
        self.entries.get(hw).copied().unwrap_or(0)
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Sum of the weight characters of all constituents.
    pub fn weight_character(&self) -> Result<WeightCharacter, SymError> {
        let mut ch = WeightCharacter::new(self.n, self.r);
        for (hw, mult) in self.iter() {
            for (comp, m) in irrep_character_in_degree(self.r, hw, self.n)?.iter() {
                ch.add(comp.clone(), m * mult);
            }
        }
        Ok(ch)
    }

    pub fn dimension(&self) -> BigUint {
        self.iter()
            .map(|(hw, mult)| irrep_dim(self.r, hw) * mult)
            .sum()
    }
}

/// Sends `s_xi` to the irreducible of highest weight
/// `(xi_1 - xi_2, ..., xi_r - xi_{r+1})` and drops shapes with more than
/// `r+1` rows.
pub fn frobenius_transform(x: &SymFuncExpr, r: usize) -> Result<IrrepList, SymError> {
    x.expect(Basis::S)?;
    let mut out = IrrepList {
        n: x.degree as usize,
        r,
        entries: BTreeMap::new(),
    };
    for (xi, c) in x.terms() {
        let mult = if c.is_integer() && !c.is_negative() {
            c.to_integer().to_u64()
        } else {
            None
        };
        let Some(mult) = mult else {
            return Err(SymError::NotAModule {
                shape: xi.to_string(),
                coeff: c.to_string(),
            });
        };
        if xi.len() > r + 1 {
            continue;
        }
        let hw: Vec<u32> = (0..r).map(|i| xi.part(i) - xi.part(i + 1)).collect();
        *out.entries.entry(hw).or_insert(0) += mult;
    }
    out.entries.retain(|_, m| *m > 0);
    Ok(out)
}

/// The partition with `r+1` rows (last row possibly nonzero) of size `n`
/// carrying highest weight `hw`.
fn shape_of(r: usize, hw: &[u32], n: usize) -> Result<Vec<u32>, SymError> {
    assert_eq!(hw.len(), r, "highest weight needs r coordinates");
    let mismatch = || SymError::DegreeMismatch {
        hw: hw.to_vec(),
        n,
        rank: r + 1,
    };
    let base: Vec<u32> = (0..=r).map(|i| hw[i..].iter().sum()).collect();
    let base_size: usize = base.iter().map(|&b| b as usize).sum();
    if n < base_size || !(n - base_size).is_multiple_of(r + 1) {
        return Err(mismatch());
    }
    let shift = ((n - base_size) / (r + 1)) as u32;
    Ok(base.into_iter().map(|b| b + shift).collect())
}

fn irrep_character_in_degree(r: usize, hw: &[u32], n: usize) -> Result<WeightCharacter, SymError> {
    let shape = shape_of(r, hw, n)?;
    let mut ch = WeightCharacter::new(n, r);
    for comp in crate::character::compositions(n, r) {
        let k = kostka_content(&shape, &comp);
        if k > 0 {
            ch.set(comp, k);
        }
    }
    Ok(ch)
}

/// Weight multiplicities of the irreducible `sl(r+1)`-module with highest
/// weight `hw`, realized in the smallest tensor power of `V` containing it.
/// The multiplicity of a composition is the Kostka number of the shape
/// against that content.
pub fn irrep_weight_character(r: usize, hw: &[u32]) -> WeightCharacter {
    let n: usize = hw.iter().enumerate().map(|(i, &a)| (i + 1) * a as usize).sum();
    irrep_character_in_degree(r, hw, n).expect("minimal degree always fits")
}

/// Hook-content formula: `prod (r+1 + content) / hook` over the cells.
pub fn irrep_dim(r: usize, hw: &[u32]) -> BigUint {
    let n: usize = hw.iter().enumerate().map(|(i, &a)| (i + 1) * a as usize).sum();
    let shape = Partition::new(shape_of(r, hw, n).expect("minimal degree always fits"));
    let conj = shape.conjugate();
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for (i, &row) in shape.parts().iter().enumerate() {
        for j in 0..row as usize {
            let content = j as i64 - i as i64;
            num *= r as i64 + 1 + content;
            let hook = (row as usize - j - 1) + (conj.part(j) as usize - i - 1) + 1;
            den *= hook as i64;
        }
    }
    (num / den).to_biguint().expect("dimension is positive")
}

/// The full chain `A_n -> h -> sign twist -> s -> sl(r+1)` giving the
/// irreducible decomposition of the `d = 2` local Weyl module at the origin.
pub fn parking_chain_irreps(n: usize, r: usize) -> Result<IrrepList, SymError> {
    let twisted = tensor_sign(&parking_frobenius(n))?;
    frobenius_transform(&e_to_schur(&twisted)?, r)
}
