//! Normal ordering in `U(sl_2 (x) A)` applied to a highest-weight vector `v`
//! with `(e (x) P) v = (h (x) P) v = 0`, over a formal commutative algebra
//! generated by symbols `P_1, P_2, ...`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

/// Monomial in the formal symbols; the empty multiset is `1`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct FormalCoeff(Vec<u32>);

impl FormalCoeff {
    pub fn one() -> Self {
        FormalCoeff(Vec::new())
    }

    /// The symbol `P_i`.
    pub fn symbol(i: u32) -> Self {
        FormalCoeff(vec![i])
    }

    pub fn from_symbols(mut symbols: Vec<u32>) -> Self {
        symbols.sort_unstable();
        FormalCoeff(symbols)
    }

    pub fn symbols(&self) -> &[u32] {
        &self.0
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn mul(&self, other: &FormalCoeff) -> FormalCoeff {
        let mut s = self.0.clone();
        s.extend_from_slice(&other.0);
        FormalCoeff::from_symbols(s)
    }
}

impl fmt::Display for FormalCoeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self.0.iter().map(|i| format!("P{i}")).collect();
        write!(f, "{}", parts.join(""))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Generator {
    E,
    H,
    F,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter {
    pub generator: Generator,
    pub coeff: FormalCoeff,
}

impl Letter {
    pub fn new(generator: Generator, coeff: FormalCoeff) -> Self {
        Letter { generator, coeff }
    }

    pub fn e(coeff: FormalCoeff) -> Self {
        Letter::new(Generator::E, coeff)
    }

    pub fn h(coeff: FormalCoeff) -> Self {
        Letter::new(Generator::H, coeff)
    }

    pub fn f(coeff: FormalCoeff) -> Self {
        Letter::new(Generator::F, coeff)
    }
}

/// A product of letters, read left to right and applied to `v`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct CurrentWord(pub Vec<Letter>);

impl CurrentWord {
    /// `(e (x) P_1) ... (e (x) P_n) f^k`.
    pub fn martini(n: usize, k: usize) -> Self {
        let mut letters: Vec<Letter> = (1..=n as u32).map(|i| Letter::e(FormalCoeff::symbol(i))).collect();
        letters.extend(std::iter::repeat_n(Letter::f(FormalCoeff::one()), k));
        CurrentWord(letters)
    }
}

/// Unordered product of `f`-letters applied to `v`, stored as the sorted
/// list of their coefficients.
pub type FProduct = Vec<FormalCoeff>;

/// How the rewriting picks among the positions where an `e` or `h` stands
/// immediately left of an `f`.
pub enum Strategy<'a> {
    Leftmost,
    /// Receives the number of candidate positions, returns the index to use.
    Choose(&'a mut dyn FnMut(usize) -> usize),
}

/// Sorts every maximal run of `f`-letters; they commute.
fn canonical(mut word: Vec<Letter>) -> Vec<Letter> {
    let mut i = 0;
    while i < word.len() {
        if word[i].generator != Generator::F {
            i += 1;
            continue;
        }
        let start = i;
        while i < word.len() && word[i].generator == Generator::F {
            i += 1;
        }
        word[start..i].sort();
    }
    word
}

pub fn normal_order_apply(word: &CurrentWord) -> BTreeMap<FProduct, BigInt> {
    normal_order_apply_with(word, Strategy::Leftmost)
}

pub fn normal_order_apply_with(word: &CurrentWord, mut strategy: Strategy<'_>) -> BTreeMap<FProduct, BigInt> {
    let mut result: BTreeMap<FProduct, BigInt> = BTreeMap::new();
    let mut pending: BTreeMap<Vec<Letter>, BigInt> = BTreeMap::new();
    pending.insert(canonical(word.0.clone()), BigInt::from(1));

    while !pending.is_empty() {
        let mut next: BTreeMap<Vec<Letter>, BigInt> = BTreeMap::new();
        for (w, c) in pending {
            if c.is_zero() {
                continue;
            }
            let candidates: Vec<usize> = (0..w.len().saturating_sub(1))
                .filter(|&i| w[i].generator != Generator::F && w[i + 1].generator == Generator::F)
                .collect();
            if candidates.is_empty() {
                // every e or h sits in a trailing block and kills v
                if w.iter().all(|l| l.generator == Generator::F) {
                    let key: FProduct = w.into_iter().map(|l| l.coeff).collect();
                    *result.entry(key).or_default() += c;
                }
                continue;
            }
            let i = match &mut strategy {
                Strategy::Leftmost => candidates[0],
                Strategy::Choose(pick) => candidates[pick(candidates.len()) % candidates.len()],
            };
            let x = &w[i];
            let y = &w[i + 1];

            let mut swapped = w.clone();
            swapped.swap(i, i + 1);
            *next.entry(canonical(swapped)).or_default() += &c;

            let (gen, factor) = match x.generator {
                Generator::E => (Generator::H, BigInt::from(1)),
                Generator::H => (Generator::F, BigInt::from(-2)),
                Generator::F => unreachable!("candidates start with e or h"),
            };
            let mut bracket = w[..i].to_vec();
            bracket.push(Letter::new(gen, x.coeff.mul(&y.coeff)));
            bracket.extend_from_slice(&w[i + 2..]);
            *next.entry(canonical(bracket)).or_default() += c * factor;
        }
        pending = next;
    }
    result.retain(|_, c| !c.is_zero());
    result
}

/// Distribution of ingredients `1..=n` into `m` indistinguishable glasses,
/// empty glasses allowed. Glasses are kept sorted.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CocktailServing {
    glasses: Vec<Vec<u32>>,
}

impl CocktailServing {
    pub fn new(glasses: Vec<Vec<u32>>) -> Self {
        let mut glasses: Vec<Vec<u32>> = glasses
            .into_iter()
            .map(|mut g| {
                g.sort_unstable();
                g
            })
            .collect();
        glasses.sort();
        CocktailServing { glasses }
    }

    pub fn glasses(&self) -> &[Vec<u32>] {
        &self.glasses
    }

    pub fn m(&self) -> usize {
        self.glasses.len()
    }

    /// The `f`-product `prod_G f (x) P(G)` attached to the serving.
    pub fn f_product(&self) -> FProduct {
        let mut out: FProduct = self.glasses.iter().map(|g| FormalCoeff::from_symbols(g.clone())).collect();
        out.sort();
        out
    }
}

impl fmt::Display for CocktailServing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .glasses
            .iter()
            .map(|g| {
                if g.is_empty() {
                    "-".to_string()
                } else {
                    g.iter().map(|i| format!("I{i}")).collect::<Vec<_>>().join("")
                }
            })
            .collect();
        write!(f, "{{{}}}", parts.join("|"))
    }
}

/// All servings of `n` ingredients into `m` glasses: set partitions of
/// `1..=n` into at most `m` blocks, padded with empty glasses.
pub fn enumerate_servings(m: usize, n: usize) -> Vec<CocktailServing> {
    fn go(next: u32, n: u32, m: usize, blocks: &mut Vec<Vec<u32>>, out: &mut Vec<CocktailServing>) {
        if next > n {
            let mut glasses = blocks.clone();
            glasses.resize(m, Vec::new());
            out.push(CocktailServing::new(glasses));
            return;
        }
        for b in 0..blocks.len() {
            blocks[b].push(next);
            go(next + 1, n, m, blocks, out);
            blocks[b].pop();
        }
        if blocks.len() < m {
            blocks.push(vec![next]);
            go(next + 1, n, m, blocks, out);
            blocks.pop();
        }
    }
    let mut out = Vec::new();
    go(1, n as u32, m, &mut Vec::new(), &mut out);
    out.sort();
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MartiniReport {
    pub m: usize,
    pub n: usize,
    /// Coefficient of each serving's `f`-product (zero if absent).
    pub table: Vec<(CocktailServing, BigInt)>,
    /// Products in the output that come from no serving.
    pub stray: Vec<(FProduct, BigInt)>,
    pub support_ok: bool,
    pub sign_ok: bool,
}

impl MartiniReport {
    pub fn passed(&self) -> bool {
        self.support_ok && self.sign_ok
    }
}

/// Expands `(e (x) P_1) ... (e (x) P_n) f^(n+m) v` and checks that its
/// support is exactly the set of servings and that `(-1)^n c(S) > 0` when
/// `m > 0`.
pub fn martini_check(m: usize, n: usize) -> MartiniReport {
    let out = normal_order_apply(&CurrentWord::martini(n, n + m));
    let servings = enumerate_servings(m, n);
    let keys: BTreeSet<FProduct> = servings.iter().map(|s| s.f_product()).collect();
    let table: Vec<(CocktailServing, BigInt)> = servings
        .into_iter()
        .map(|s| {
            let c = out.get(&s.f_product()).cloned().unwrap_or_default();
            (s, c)
        })
        .collect();
    let stray: Vec<(FProduct, BigInt)> = out
        .iter()
        .filter(|(k, _)| !keys.contains(*k))
        .map(|(k, c)| (k.clone(), c.clone()))
        .collect();
    let support_ok = stray.is_empty() && table.iter().all(|(_, c)| !c.is_zero());
    let sign_ok = m == 0
        || table.iter().all(|(_, c)| {
            let signed = if n.is_multiple_of(2) { c.clone() } else { -c };
            signed.is_positive()
        });
    MartiniReport {
        m,
        n,
        table,
        stray,
        support_ok,
        sign_ok,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnrReport {
    pub k: usize,
    pub support: Vec<(FProduct, BigInt)>,
    pub passed: bool,
}

/// `(e (x) P_1) ... (e (x) P_k) f^(k+1) v` must be a nonzero multiple of
/// `(f (x) P_1 ... P_k) v`.
pub fn anr_check(k: usize) -> AnrReport {
    let out = normal_order_apply(&CurrentWord::martini(k, k + 1));
    let all = FormalCoeff::from_symbols((1..=k as u32).collect());
    let support: Vec<(FProduct, BigInt)> = out.into_iter().collect();
    let passed = support.len() == 1 && support[0].0 == vec![all] && !support[0].1.is_zero();
    AnrReport { k, support, passed }
}
