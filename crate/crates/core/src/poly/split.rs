use std::collections::BTreeMap;
use std::fmt;
use std::ops::Range;

use serde::{Deserialize, Serialize};

use super::coefficient::Coefficient;
use super::key::key_polynomial;
use super::polynomial::{Exponents, Polynomial};
use super::schur::SchurTable;
use crate::error::{Error, Result};
use crate::typea::{w_act_on_partition, Partition, Permutation};

/// A split set `D = {d_1 < ... < d_k} ⊆ [n-1]`, cutting the variables into
/// blocks `X_i = {x_{d_{i-1}+1}, ..., x_{d_i}}` with `d_0 = 0`, `d_{k+1} = n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SplitSet {
    n: usize,
    cuts: Vec<usize>,
}

impl SplitSet {
    pub fn new(n: usize, cuts: &[usize]) -> Result<Self> {
        let mut cuts = cuts.to_vec();
        cuts.sort_unstable();
        cuts.dedup();
        if let Some(&d) = cuts.iter().find(|&&d| d == 0 || d >= n) {
            return Err(Error::InvalidArgument(format!(
                "split point {d} outside [1, {}]",
                n.saturating_sub(1)
            )));
        }
        Ok(Self { n, cuts })
    }

    /// `D = ∅`: a single block.
    pub fn none(n: usize) -> Self {
        Self {
            n,
            cuts: Vec::new(),
        }
    }

    /// `D = [n-1]`: every variable in its own block.
    pub fn full(n: usize) -> Self {
        Self {
            n,
            cuts: (1..n).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn cuts(&self) -> &[usize] {
        &self.cuts
    }

    /// Zero-based variable ranges of the blocks.
    pub fn blocks(&self) -> Vec<Range<usize>> {
        let mut bounds = vec![0];
        bounds.extend(&self.cuts);
        bounds.push(self.n);
        bounds.windows(2).map(|p| p[0]..p[1]).collect()
    }

    pub fn block_sizes(&self) -> Vec<usize> {
        self.blocks().iter().map(|b| b.len()).collect()
    }

    /// Adjacent transpositions `s_j` preserving every block.
    pub fn inner_swaps(&self) -> Vec<usize> {
        (1..self.n).filter(|j| !self.cuts.contains(j)).collect()
    }
}

impl fmt::Display for SplitSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.cuts.iter().map(|d| d.to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// A tuple `(lambda^1, ..., lambda^{k+1})`; `lambda^i` is padded with zeros to
/// the size of block `i`.
pub type SchurTuple = Vec<Vec<u32>>;

/// Expansion `sum c * s_{lambda^1}(X_1) ... s_{lambda^{k+1}}(X_{k+1})` in the
/// D-Schur basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Expansion<C> {
    split: SplitSet,
    terms: BTreeMap<SchurTuple, C>,
}

impl<C: Coefficient> Expansion<C> {
    pub fn new(split: SplitSet) -> Self {
        Self {
            split,
            terms: BTreeMap::new(),
        }
    }

    pub fn split(&self) -> &SplitSet {
        &self.split
    }

    /// Terms in increasing lexicographic order of tuples.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&SchurTuple, &C)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, tuple: &[Vec<u32>]) -> C {
        self.terms.get(tuple).cloned().unwrap_or_else(C::zero)
    }

    /// Adds `c` to the coefficient of `tuple` (padded to block sizes).
    pub fn add(&mut self, tuple: SchurTuple, c: C) -> Result<()> {
        let tuple = pad_tuple(&self.split, tuple)?;
        if c.is_zero() {
            return Ok(());
        }
        let sum = self.coefficient(&tuple).add_exact(&c);
        if sum.is_zero() {
            self.terms.remove(&tuple);
        } else {
            self.terms.insert(tuple, sum);
        }
        Ok(())
    }

    /// All coefficients lie in `{0, 1}`.
    pub fn is_multiplicity_free(&self) -> bool {
        self.terms.values().all(|c| c.is_one())
    }

    pub fn is_nonnegative(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    /// `sum c * s_tuple`.
    pub fn reconstruct(&self) -> Polynomial<C> {
        let mut table = SchurTable::new();
        let mut out = Polynomial::zero(self.split.n());
        for (tuple, c) in &self.terms {
            let p = d_schur_with(&mut table, &self.split, tuple)
                .expect("stored tuples fit their blocks");
            out.add_scaled(&p, c);
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        let json = ExpansionJson {
            split: self.split.cuts.clone(),
            terms: self
                .terms
                .iter()
                .rev()
                .map(|(t, c)| TermJson {
                    lambdas: t.clone(),
                    coeff: match c.to_i64() {
                        Some(v) => serde_json::Value::from(v),
                        None => serde_json::Value::from(c.to_string()),
                    },
                })
                .collect(),
        };
        serde_json::to_value(json).expect("expansion serializes")
    }

    /// Parses the `{"D": [...], "terms": [{"lambdas": ..., "coeff": ...}]}`
    /// form. The variable count is the total block length of the tuples, or
    /// `max(D) + 1` when there are none.
    pub fn from_json(value: &serde_json::Value) -> Result<Self> {
        let json: ExpansionJson =
            serde_json::from_value(value.clone()).map_err(|e| Error::Parse(e.to_string()))?;
        let n = match json.terms.first() {
            Some(t) => t.lambdas.iter().map(Vec::len).sum(),
            None => json.split.iter().max().map_or(1, |d| d + 1),
        };
        let mut out = Self::new(SplitSet::new(n, &json.split)?);
        for term in json.terms {
            let c = match &term.coeff {
                serde_json::Value::Number(x) => x.as_i64().and_then(C::from_i64),
                serde_json::Value::String(s) => s.parse::<i64>().ok().and_then(C::from_i64),
                _ => None,
            }
            .ok_or_else(|| Error::Parse(format!("bad coefficient {}", term.coeff)))?;
            out.add(term.lambdas, c)?;
        }
        Ok(out)
    }
}

impl<C: Coefficient> fmt::Display for Expansion<C> {
    /// `c s(5,3),(3,2),(2) + ...`, lexicographically descending.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (tuple, c)) in self.terms.iter().rev().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            let blocks: Vec<String> = tuple
                .iter()
                .map(|l| {
                    format!(
                        "({})",
                        l.iter()
                            .map(|p| p.to_string())
                            .collect::<Vec<_>>()
                            .join(",")
                    )
                })
                .collect();
            write!(f, "{c} s{}", blocks.join(","))?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    lambdas: SchurTuple,
    coeff: serde_json::Value,
}

#[derive(Serialize, Deserialize)]
struct ExpansionJson {
    #[serde(rename = "D")]
    split: Vec<usize>,
    terms: Vec<TermJson>,
}

fn pad_tuple(split: &SplitSet, tuple: SchurTuple) -> Result<SchurTuple> {
    let sizes = split.block_sizes();
    if tuple.len() != sizes.len() {
        return Err(Error::InvalidArgument(format!(
            "expected {} partitions for split {split}, got {}",
            sizes.len(),
            tuple.len()
        )));
    }
    tuple
        .into_iter()
        .zip(sizes)
        .map(|(mut lam, size)| {
            while lam.len() > size && lam.last() == Some(&0) {
                lam.pop();
            }
            if lam.len() > size || lam.windows(2).any(|p| p[0] < p[1]) {
                return Err(Error::InvalidArgument(format!(
                    "{lam:?} is not a partition with at most {size} parts"
                )));
            }
            lam.resize(size, 0);
            Ok(lam)
        })
        .collect()
}

fn d_schur_with<C: Coefficient>(
    table: &mut SchurTable<C>,
    split: &SplitSet,
    tuple: &[Vec<u32>],
) -> Result<Polynomial<C>> {
    let blocks = split.blocks();
    if tuple.len() != blocks.len() {
        return Err(Error::InvalidArgument(format!(
            "expected {} partitions",
            blocks.len()
        )));
    }
    // the blocks use disjoint variables, so the product concatenates exponents
    let mut acc: Vec<(Exponents, C)> = vec![(Exponents::new(), C::one())];
    for (lam, block) in tuple.iter().zip(&blocks) {
        let s = table.get(lam, block.len())?;
        acc = acc
            .iter()
            .flat_map(|(e, c)| {
                s.terms().map(move |(f, d)| {
                    let mut t = e.clone();
                    t.extend_from_slice(f);
                    (t, c.mul_exact(d))
                })
            })
            .collect();
    }
    Ok(Polynomial::from_terms(split.n(), acc))
}

/// `s_{lambda^1}(X_1) ... s_{lambda^{k+1}}(X_{k+1})`.
pub fn d_schur<C: Coefficient>(split: &SplitSet, tuple: &[Vec<u32>]) -> Result<Polynomial<C>> {
    d_schur_with(&mut SchurTable::new(), split, tuple)
}

/// Invariance under every adjacent transposition inside a block.
pub fn is_split_symmetric<C: Coefficient>(f: &Polynomial<C>, split: &SplitSet) -> bool {
    f.nvars() == split.n()
        && split
            .inner_swaps()
            .into_iter()
            .all(|j| f.is_symmetric_in(j))
}

/// Peels lexicographically largest monomials. Stops early, returning the
/// partial expansion, once `stop` accepts a freshly peeled coefficient.
fn peel<C: Coefficient>(
    f: &Polynomial<C>,
    split: &SplitSet,
    stop: impl Fn(&C) -> bool,
) -> Result<(Expansion<C>, bool)> {
    if !is_split_symmetric(f, split) {
        return Err(Error::NotSplitSymmetric(format!(
            "polynomial in {} variables is not symmetric in the blocks of D = {split}",
            f.nvars()
        )));
    }
    let blocks = split.blocks();
    let mut table = SchurTable::new();
    let mut rest = f.clone();
    let mut out = Expansion::new(split.clone());
    while let Some((e, c)) = rest.leading_term() {
        let tuple: SchurTuple = blocks
            .iter()
            .map(|b| e[b.clone()].iter().map(|&a| a as u32).collect())
            .collect();
        let c = c.clone();
        let s = d_schur_with(&mut table, split, &tuple)?;
        rest.add_scaled(&s, &-c.clone());
        let halt = stop(&c);
        out.terms.insert(tuple, c);
        if halt {
            return Ok((out, true));
        }
    }
    Ok((out, false))
}

/// The unique expansion of a split-symmetric polynomial in the D-Schur basis.
///
/// The lexicographically largest monomial of a D-Schur polynomial is the
/// concatenation of its partitions, so subtracting leading terms one at a
/// time is exact.
pub fn split_expand<C: Coefficient>(f: &Polynomial<C>, split: &SplitSet) -> Result<Expansion<C>> {
    Ok(peel(f, split, |_| false)?.0)
}

/// Every D-Schur coefficient is 0 or 1. Stops at the first offending
/// coefficient.
pub fn is_d_multiplicity_free<C: Coefficient>(f: &Polynomial<C>, split: &SplitSet) -> Result<bool> {
    Ok(!peel(f, split, |c| !c.is_one())?.1)
}

/// `kappa_{w lambda}` for the staircase `lambda = (n, ..., 1)` is
/// `D`-multiplicity-free, where `D = [n-1] - I`.
pub fn staircase_test(w: &Permutation, subset: &[usize]) -> Result<bool> {
    let descents = w.left_descents();
    if subset.iter().any(|i| !descents.contains(i)) {
        let mut subset = subset.to_vec();
        subset.sort_unstable();
        subset.dedup();
        return Err(Error::NotInDescentSet { subset, descents });
    }
    let n = w.n();
    let alpha = w_act_on_partition(w, &Partition::staircase(n))?;
    let cuts: Vec<usize> = (1..n).filter(|d| !subset.contains(d)).collect();
    let key: Polynomial<num_bigint::BigInt> = key_polynomial(&alpha);
    is_d_multiplicity_free(&key, &SplitSet::new(n, &cuts)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::typea::Composition;

    type P = Polynomial<i64>;

    fn comp(s: &str) -> Composition {
        s.parse().unwrap()
    }

    fn g() -> P {
        [
            [1, 2, 0, 1],
            [2, 1, 0, 1],
            [1, 2, 1, 0],
            [2, 1, 1, 0],
            [2, 2, 0, 0],
        ]
        .iter()
        .fold(P::zero(4), |acc, e| &acc + &P::monomial(e, 1))
    }

    #[test]
    fn split_set_blocks() {
        let d = SplitSet::new(5, &[2, 4]).unwrap();
        assert_eq!(d.blocks(), vec![0..2, 2..4, 4..5]);
        assert_eq!(d.inner_swaps(), vec![1, 3]);
        assert!(SplitSet::new(3, &[3]).is_err());
        assert_eq!(SplitSet::full(3).block_sizes(), vec![1, 1, 1]);
        assert_eq!(d.to_string(), "{2,4}");
    }

    #[test]
    fn basis_example() {
        let d = SplitSet::new(4, &[2]).unwrap();
        let e = split_expand(&g(), &d).unwrap();
        assert_eq!(e.len(), 2);
        assert_eq!(e.coefficient(&[vec![2, 1], vec![1, 0]]), 1);
        assert_eq!(e.coefficient(&[vec![2, 2], vec![0, 0]]), 1);
        assert_eq!(e.reconstruct(), g());
    }

    #[test]
    fn symmetric_polynomials_split_for_every_d() {
        let s: P = d_schur(&SplitSet::none(3), &[vec![2, 1, 0]]).unwrap();
        for cuts in [vec![], vec![1], vec![2], vec![1, 2]] {
            let d = SplitSet::new(3, &cuts).unwrap();
            assert!(is_split_symmetric(&s, &d));
            let e = split_expand(&s, &d).unwrap();
            assert!(e.is_nonnegative());
            assert_eq!(e.reconstruct(), s);
        }
        let e = split_expand(&s, &SplitSet::none(3)).unwrap();
        assert_eq!(e.len(), 1);
    }

    #[test]
    fn non_split_symmetric_is_an_error() {
        let x1 = P::variable(1, 2);
        assert!(!is_split_symmetric(&x1, &SplitSet::none(2)));
        assert!(matches!(
            split_expand(&x1, &SplitSet::none(2)),
            Err(Error::NotSplitSymmetric(_))
        ));
        assert!(is_split_symmetric(&x1, &SplitSet::full(2)));
    }

    #[test]
    fn keys_lie_in_their_descent_split() {
        for a in ["(1,5,2,4,3)", "(0,2,1,3)", "(2,0,0,1)"] {
            let alpha = comp(a);
            let d = SplitSet::new(alpha.len(), &alpha.descents()).unwrap();
            assert!(
                is_split_symmetric(&key_polynomial::<i64>(&alpha), &d),
                "{a}"
            );
        }
    }

    #[test]
    fn multiplicity_examples() {
        let k: P = key_polynomial(&comp("(1,5,2,4,3)"));
        assert!(!is_d_multiplicity_free(&k, &SplitSet::new(5, &[2, 4]).unwrap()).unwrap());
        let k: P = key_polynomial(&comp("(0,0,1,1)"));
        assert!(is_d_multiplicity_free(&k, &SplitSet::full(4)).unwrap());
        let k: P = key_polynomial(&comp("(0,1,2)"));
        assert!(!is_d_multiplicity_free(&k, &SplitSet::full(3)).unwrap());
    }

    #[test]
    fn staircase_examples() {
        let w: Permutation = "24531".parse().unwrap();
        assert!(!staircase_test(&w, &[1, 3]).unwrap());
        assert!(staircase_test(&Permutation::identity(4), &[]).unwrap());
        assert!(matches!(
            staircase_test(&w, &[2]),
            Err(Error::NotInDescentSet { .. })
        ));
        for w in Permutation::all(4) {
            assert!(staircase_test(&w, &w.left_descents()).unwrap(), "{w}");
        }
    }

    #[test]
    fn json_round_trip() {
        let k: P = key_polynomial(&comp("(1,5,2,4,3)"));
        let e = split_expand(&k, &SplitSet::new(5, &[2, 4]).unwrap()).unwrap();
        let v = e.to_json();
        assert_eq!(v["D"], serde_json::json!([2, 4]));
        assert_eq!(Expansion::<i64>::from_json(&v).unwrap(), e);
    }
}
