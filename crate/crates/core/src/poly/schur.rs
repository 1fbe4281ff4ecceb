use rustc_hash::FxHashMap;

use super::coefficient::Coefficient;
use super::polynomial::{Exponents, Polynomial};
use crate::error::{Error, Result};
use crate::typea::Partition;

/// Memoized Schur polynomials `s_lambda(x1, ..., xm)`, computed by the
/// branching rule over horizontal strips.
#[derive(Debug, Clone)]
pub struct SchurTable<C> {
    memo: FxHashMap<(Vec<u32>, usize), Polynomial<C>>,
}

impl<C: Coefficient> Default for SchurTable<C> {
    fn default() -> Self {
        Self::new()
    }
}

impl<C: Coefficient> SchurTable<C> {
    pub fn new() -> Self {
        Self {
            memo: FxHashMap::default(),
        }
    }

    /// `s_lambda` in `m` variables; `lambda` may carry trailing zeros.
    pub fn get(&mut self, lambda: &[u32], m: usize) -> Result<Polynomial<C>> {
        if lambda.windows(2).any(|p| p[0] < p[1]) {
            return Err(Error::InvalidArgument(format!(
                "{lambda:?} is not a partition"
            )));
        }
        let trimmed: Vec<u32> = lambda.iter().copied().take_while(|&p| p > 0).collect();
        if trimmed.len() > m {
            return Err(Error::InvalidArgument(format!(
                "partition {lambda:?} has more than {m} parts"
            )));
        }
        Ok(self.branch(trimmed, m))
    }

    fn branch(&mut self, lambda: Vec<u32>, m: usize) -> Polynomial<C> {
        if m == 0 {
            return Polynomial::one(0);
        }
        if let Some(p) = self.memo.get(&(lambda.clone(), m)) {
            return p.clone();
        }
        let size: u32 = lambda.iter().sum();
        let mut out = Polynomial::zero(m);
        for mu in interlacing(&lambda, m - 1) {
            let rest = size - mu.iter().sum::<u32>();
            let sub = self.branch(mu, m - 1);
            for (e, c) in sub.terms() {
                let mut t: Exponents = e.clone();
                t.push(rest as u16);
                out.add_term(t, c.clone());
            }
        }
        self.memo.insert((lambda, m), out.clone());
        out
    }
}

/// Partitions `mu` with at most `k` parts and
/// `lambda_{i+1} <= mu_i <= lambda_i`, with trailing zeros removed.
fn interlacing(lambda: &[u32], k: usize) -> Vec<Vec<u32>> {
    let mut out = vec![Vec::new()];
    for i in 0..lambda.len().min(k) {
        let lo = lambda.get(i + 1).copied().unwrap_or(0);
        out = out
            .into_iter()
            .flat_map(|prefix: Vec<u32>| {
                (lo..=lambda[i]).map(move |v| {
                    let mut p = prefix.clone();
                    p.push(v);
                    p
                })
            })
            .collect();
    }
    for mu in &mut out {
        while mu.last() == Some(&0) {
            mu.pop();
        }
    }
    out
}

/// `s_lambda(x1, ..., xm)`.
pub fn schur<C: Coefficient>(lambda: &Partition, m: usize) -> Result<Polynomial<C>> {
    SchurTable::new().get(lambda.parts(), m)
}
