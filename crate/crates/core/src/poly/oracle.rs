//! Reference D-Schur expansion by solving a linear system over the
//! rationals. Exponential in the degree; meant for cross-checking.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use super::coefficient::Coefficient;
use super::polynomial::{Exponents, Polynomial};
use super::split::{d_schur, is_split_symmetric, Expansion, SchurTuple, SplitSet};
use crate::error::{Error, Result};

/// Partitions of `d` with at most `k` parts, padded to length `k`.
pub fn partitions_bounded(d: u32, k: usize) -> Vec<Vec<u32>> {
    fn go(d: u32, k: usize, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if d == 0 {
            let mut p = prefix.clone();
            p.resize(prefix.len() + k, 0);
            out.push(p);
            return;
        }
        if k == 0 {
            return;
        }
        for first in (1..=max.min(d)).rev() {
            prefix.push(first);
            go(d - first, k - 1, first, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(d, k, d, &mut Vec::new(), &mut out);
    out
}

/// Every tuple in `Par_D` whose per-block degrees are `degrees`.
fn tuples_with_degrees(split: &SplitSet, degrees: &[u32]) -> Vec<SchurTuple> {
    let mut out: Vec<SchurTuple> = vec![Vec::new()];
    for (&d, size) in degrees.iter().zip(split.block_sizes()) {
        let options = partitions_bounded(d, size);
        out = out
            .into_iter()
            .flat_map(|prefix| {
                options.iter().map(move |lam| {
                    let mut t = prefix.clone();
                    t.push(lam.clone());
                    t
                })
            })
            .collect();
    }
    out
}

fn to_rational<C: Coefficient>(c: &C) -> Result<BigRational> {
    c.to_i64()
        .map(|v| BigRational::from_integer(BigInt::from(v)))
        .ok_or_else(|| Error::InvalidArgument(format!("coefficient {c} exceeds the oracle range")))
}

/// D-Schur expansion by Gaussian elimination over every candidate tuple.
/// Coefficients must fit in `i64`.
pub fn split_expand_linear<C: Coefficient>(
    f: &Polynomial<C>,
    split: &SplitSet,
) -> Result<Expansion<C>> {
    if !is_split_symmetric(f, split) {
        return Err(Error::NotSplitSymmetric(format!(
            "polynomial is not symmetric in the blocks of D = {split}"
        )));
    }
    let blocks = split.blocks();
    let degree_vectors: BTreeSet<Vec<u32>> = f
        .terms()
        .map(|(e, _)| {
            blocks
                .iter()
                .map(|b| e[b.clone()].iter().map(|&a| a as u32).sum())
                .collect()
        })
        .collect();
    let tuples: Vec<SchurTuple> = degree_vectors
        .iter()
        .flat_map(|dv| tuples_with_degrees(split, dv))
        .collect();
    let columns: Vec<Polynomial<C>> = tuples
        .iter()
        .map(|t| d_schur(split, t))
        .collect::<Result<_>>()?;

    let mut rows: BTreeMap<Exponents, usize> = BTreeMap::new();
    for p in columns.iter().chain(std::iter::once(f)) {
        for (e, _) in p.terms() {
            let next = rows.len();
            rows.entry(e.clone()).or_insert(next);
        }
    }
    let (m, k) = (rows.len(), tuples.len());
    let mut a = vec![vec![BigRational::zero(); k + 1]; m];
    for (col, p) in columns.iter().enumerate() {
        for (e, c) in p.terms() {
            a[rows[e]][col] = to_rational(c)?;
        }
    }
    for (e, c) in f.terms() {
        a[rows[e]][k] = to_rational(c)?;
    }

    // row reduction to reduced echelon form
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..k {
        let Some(p) = (r..m).find(|&i| !a[i][col].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let inv = BigRational::one() / a[r][col].clone();
        for x in a[r].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..m {
            if i != r && !a[i][col].is_zero() {
                let factor = a[i][col].clone();
                let pivot_row = a[r].clone();
                for (x, y) in a[i].iter_mut().zip(&pivot_row) {
                    *x = &*x - &factor * y;
                }
            }
        }
        pivots.push(col);
        r += 1;
    }
    if pivots.len() != k {
        return Err(Error::InvalidArgument(
            "D-Schur candidates are linearly dependent".into(),
        ));
    }
    if a[r..].iter().any(|row| !row[k].is_zero()) {
        return Err(Error::InvalidArgument(
            "polynomial is not in the span of the D-Schur basis".into(),
        ));
    }
    let mut out = Expansion::new(split.clone());
    for (i, &col) in pivots.iter().enumerate() {
        let v = &a[i][k];
        if v.is_zero() {
            continue;
        }
        if !v.is_integer() {
            return Err(Error::InvalidArgument(format!(
                "non-integral coefficient {v}"
            )));
        }
        let c = v
            .to_integer()
            .to_i64()
            .and_then(C::from_i64)
            .ok_or_else(|| {
                Error::InvalidArgument(format!("coefficient {v} exceeds the oracle range"))
            })?;
        out.add(tuples[col].clone(), c)?;
    }
    Ok(out)
}
