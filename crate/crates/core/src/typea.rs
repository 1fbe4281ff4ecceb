//! Type `A` specifics: one-line permutations, codes, Rothe diagrams,
//! canonical reduced words, permutation and composition patterns.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::coxeter::{CoxeterSystem, Element, Family};
use crate::error::{Error, Result};
use crate::words::{evaluate, Word};

/// A permutation of `1..=n` in one-line notation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(one_line: Vec<usize>) -> Result<Self> {
        let n = one_line.len();
        let mut seen = vec![false; n + 1];
        for &v in &one_line {
            if v == 0 || v > n || seen[v] {
                return Err(Error::InvalidArgument(format!(
                    "{one_line:?} is not a permutation of 1..={n}"
                )));
            }
            seen[v] = true;
        }
        Ok(Self(one_line))
    }

    pub fn identity(n: usize) -> Self {
        Self((1..=n).collect())
    }

    /// `w0 = n n-1 ... 1`.
    pub fn longest(n: usize) -> Self {
        Self((1..=n).rev().collect())
    }

    pub fn one_line(&self) -> &[usize] {
        &self.0
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    /// `w(i)` for 1-based `i`.
    pub fn at(&self, i: usize) -> usize {
        self.0[i - 1]
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.n()];
        for (i, &v) in self.0.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Self(inv)
    }

    /// Composition `(self * other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Self) -> Self {
        assert_eq!(self.n(), other.n());
        Self(other.0.iter().map(|&v| self.0[v - 1]).collect())
    }

    /// Inversion count, i.e. the Coxeter length.
    pub fn length(&self) -> usize {
        let mut inv = 0;
        for i in 0..self.n() {
            for j in (i + 1)..self.n() {
                if self.0[i] > self.0[j] {
                    inv += 1;
                }
            }
        }
        inv
    }

    /// Right multiplication by `s_i`: swaps positions `i` and `i + 1`.
    pub fn mul_generator(&self, i: usize) -> Self {
        let mut v = self.0.clone();
        v.swap(i - 1, i);
        Self(v)
    }

    /// Descent positions `{i : w(i) > w(i+1)}` (right descents).
    pub fn descents(&self) -> Vec<usize> {
        (1..self.n())
            .filter(|&i| self.0[i - 1] > self.0[i])
            .collect()
    }

    /// `J(w) = {j : j + 1 appears left of j}` (left descents).
    pub fn left_descents(&self) -> Vec<usize> {
        self.inverse().descents()
    }

    /// The permutation of an element of `A_{n-1}`.
    pub fn from_element(sys: &CoxeterSystem, w: &Element) -> Result<Self> {
        require_type_a(sys)?;
        sys.check_member(w)?;
        let mut p = Self::identity(sys.rank() + 1);
        for a in sys.reduced_word(w) {
            p = p.mul_generator(a);
        }
        Ok(p)
    }

    /// The element of `A_{n-1}` with this one-line notation.
    pub fn to_element(&self, sys: &CoxeterSystem) -> Result<Element> {
        require_type_a(sys)?;
        if self.n() != sys.rank() + 1 {
            return Err(Error::InvalidArgument(format!(
                "permutation {self} does not belong to {}",
                sys.cartan_type()
            )));
        }
        evaluate(sys, &canonical_word(self))
    }

    /// Every permutation of `1..=n` in lexicographic order.
    pub fn all(n: usize) -> Vec<Self> {
        let mut out = Vec::new();
        let mut cur: Vec<usize> = (1..=n).collect();
        loop {
            out.push(Self(cur.clone()));
            // next lexicographic permutation
            let Some(i) = (0..n.saturating_sub(1))
                .rev()
                .find(|&i| cur[i] < cur[i + 1])
            else {
                return out;
            };
            let j = (i + 1..n)
                .rev()
                .find(|&j| cur[j] > cur[i])
                .expect("successor exists");
            cur.swap(i, j);
            cur[i + 1..].reverse();
        }
    }
}

pub(crate) fn require_type_a(sys: &CoxeterSystem) -> Result<()> {
    if sys.cartan_type().family() != Family::A {
        return Err(Error::NotTypeA(sys.cartan_type().to_string()));
    }
    Ok(())
}

impl fmt::Display for Permutation {
    /// One-line without separators when `n <= 9`, comma separated otherwise.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.n() <= 9 { "" } else { "," };
        let parts: Vec<String> = self.0.iter().map(|v| v.to_string()).collect();
        f.write_str(&parts.join(sep))
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let values: Vec<usize> = if s.contains(|c: char| c == ',' || c.is_whitespace()) {
            s.split(|c: char| c == ',' || c.is_whitespace())
                .filter(|t| !t.is_empty())
                .map(|t| {
                    t.parse()
                        .map_err(|_| Error::Parse(format!("bad permutation {s:?}")))
                })
                .collect::<Result<_>>()?
        } else {
            s.chars()
                .map(|c| {
                    c.to_digit(10)
                        .map(|d| d as usize)
                        .ok_or_else(|| Error::Parse(format!("bad permutation {s:?}")))
                })
                .collect::<Result<_>>()?
        };
        Self::new(values)
    }
}

/// A weak composition.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Composition(Vec<u32>);

impl Composition {
    pub fn new(parts: Vec<u32>) -> Self {
        Self(parts)
    }

    pub fn zeros(n: usize) -> Self {
        Self(vec![0; n])
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Positions `j` (1-based) with `alpha_j > alpha_{j+1}`.
    pub fn descents(&self) -> Vec<usize> {
        (1..self.len())
            .filter(|&j| self.0[j - 1] > self.0[j])
            .collect()
    }

    pub fn is_weakly_decreasing(&self) -> bool {
        self.0.windows(2).all(|p| p[0] >= p[1])
    }

    /// Right-pads with zeros to length `n` (no-op when already long enough).
    pub fn padded(&self, n: usize) -> Self {
        let mut v = self.0.clone();
        if v.len() < n {
            v.resize(n, 0);
        }
        Self(v)
    }

    /// Every composition of length `len` with parts at most `max_part`, in
    /// lexicographic order.
    pub fn all(len: usize, max_part: u32) -> Vec<Self> {
        let mut out = vec![Vec::with_capacity(len)];
        for _ in 0..len {
            out = out
                .into_iter()
                .flat_map(|prefix: Vec<u32>| {
                    (0..=max_part).map(move |p| {
                        let mut v = prefix.clone();
                        v.push(p);
                        v
                    })
                })
                .collect();
        }
        out.into_iter().map(Self).collect()
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|v| v.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl FromStr for Composition {
    type Err = Error;

    /// Accepts `(1,5,2,4,3)`, `1,5,2,4,3` or `1 5 2 4 3`.
    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches('(').trim_end_matches(')');
        inner
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<u32>()
                    .map_err(|_| Error::Parse(format!("bad composition {s:?}")))
            })
            .collect::<Result<Vec<_>>>()
            .map(Self)
    }
}

/// A partition `lambda_1 >= lambda_2 >= ... >= 0` (trailing zeros allowed).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.windows(2).any(|p| p[0] < p[1]) {
            return Err(Error::InvalidArgument(format!(
                "{parts:?} is not weakly decreasing"
            )));
        }
        Ok(Self(parts))
    }

    /// `(n, n-1, ..., 1)`.
    pub fn staircase(n: usize) -> Self {
        Self((1..=n as u32).rev().collect())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Number of nonzero parts.
    pub fn num_parts(&self) -> usize {
        self.0.iter().take_while(|&&p| p > 0).count()
    }

    /// Nonzero parts only.
    pub fn trimmed(&self) -> Self {
        Self(self.0[..self.num_parts()].to_vec())
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|v| v.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Rothe diagram `D(w) = {(i, j) : j < w(i), i < w^{-1}(j)}` in matrix
/// coordinates, sorted row-major.
pub fn rothe_diagram(w: &Permutation) -> Vec<(usize, usize)> {
    let inv = w.inverse();
    let n = w.n();
    let mut cells = Vec::new();
    for i in 1..=n {
        for j in 1..w.at(i) {
            if i < inv.at(j) {
                cells.push((i, j));
            }
        }
    }
    cells
}

/// Row counts of the Rothe diagram; sums to `l(w)`.
pub fn code(w: &Permutation) -> Composition {
    let mut c = vec![0u32; w.n()];
    for (i, _) in rothe_diagram(w) {
        c[i - 1] += 1;
    }
    Composition(c)
}

/// The permutation with the given code, trimmed of trailing fixed points but
/// never shorter than the composition.
pub fn perm_from_code(alpha: &Composition) -> Permutation {
    let max = alpha.parts().iter().copied().max().unwrap_or(0) as usize;
    let big_n = alpha.len() + max;
    let mut available: Vec<usize> = (1..=big_n).collect();
    let mut one_line = Vec::with_capacity(big_n);
    for i in 0..big_n {
        let c = alpha.parts().get(i).copied().unwrap_or(0) as usize;
        one_line.push(available.remove(c));
    }
    let mut n = big_n;
    while n > alpha.len().max(1) && one_line[n - 1] == n {
        n -= 1;
    }
    one_line.truncate(n);
    Permutation(one_line)
}

/// Row `i` of `D(w)` is filled left to right with `s_i, s_{i+1}, ...`; each
/// row is read right to left, rows top to bottom.
pub fn canonical_word(w: &Permutation) -> Word {
    let mut letters = Vec::with_capacity(w.length());
    for (i, &c) in code(w).parts().iter().enumerate() {
        let row = i + 1;
        letters.extend((row..row + c as usize).rev());
    }
    Word::new(letters)
}

/// True iff some subsequence of `v` is order-isomorphic to `u`.
pub fn contains_perm_pattern(v: &Permutation, u: &Permutation) -> bool {
    fn extend(v: &[usize], u: &[usize], chosen: &mut Vec<usize>, from: usize) -> bool {
        let t = chosen.len();
        if t == u.len() {
            return true;
        }
        // leave room for the remaining pattern letters
        let last = v.len() - (u.len() - t);
        for p in from..=last {
            let ok = chosen
                .iter()
                .enumerate()
                .all(|(s, &q)| (v[q] < v[p]) == (u[s] < u[t]));
            if ok {
                chosen.push(p);
                if extend(v, u, chosen, p + 1) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }
    if u.n() > v.n() {
        return false;
    }
    extend(
        v.one_line(),
        u.one_line(),
        &mut Vec::with_capacity(u.n()),
        0,
    )
}

/// True when both `w` and `w^{-1}` have exactly one descent.
pub fn is_bigrassmannian(w: &Permutation) -> bool {
    w.descents().len() == 1 && w.inverse().descents().len() == 1
}

/// For bigrassmannian `w` with code `(0^f, b^a, 0^g)`: true iff the code is
/// a single row, a single column, or the `2 x 2` square.
pub fn bigrassmannian_spherical(w: &Permutation) -> Result<bool> {
    if !is_bigrassmannian(w) {
        return Err(Error::NotBigrassmannian(w.to_string()));
    }
    let c = code(w);
    let nonzero: Vec<u32> = c.parts().iter().copied().filter(|&p| p > 0).collect();
    let (rows, cols) = (nonzero.len(), nonzero[0]);
    Ok(rows == 1 || cols == 1 || (rows == 2 && cols == 2))
}

/// `w lambda = (lambda_{w^{-1}(1)}, ..., lambda_{w^{-1}(n)})`.
pub fn w_act_on_partition(w: &Permutation, lambda: &Partition) -> Result<Composition> {
    if lambda.len() != w.n() {
        return Err(Error::InvalidArgument(format!(
            "partition {lambda} has {} entries, permutation {w} has {}",
            lambda.len(),
            w.n()
        )));
    }
    let inv = w.inverse();
    Ok(Composition(
        (1..=w.n()).map(|i| lambda.parts()[inv.at(i) - 1]).collect(),
    ))
}

/// Composition pattern containment: indices `j_1 < ... < j_k` whose values are
/// order-isomorphic to `beta` with pairwise gaps at least those of `beta`.
pub fn contains_comp_pattern(alpha: &Composition, beta: &Composition) -> bool {
    fn compatible(a_s: u32, a_t: u32, b_s: u32, b_t: u32) -> bool {
        (a_s <= a_t) == (b_s <= b_t)
            && (a_t <= a_s) == (b_t <= b_s)
            && a_s.abs_diff(a_t) >= b_s.abs_diff(b_t)
    }
    fn extend(a: &[u32], b: &[u32], chosen: &mut Vec<usize>, from: usize) -> bool {
        let t = chosen.len();
        if t == b.len() {
            return true;
        }
        let last = a.len() - (b.len() - t);
        for p in from..=last {
            if chosen
                .iter()
                .enumerate()
                .all(|(s, &q)| compatible(a[q], a[p], b[s], b[t]))
            {
                chosen.push(p);
                if extend(a, b, chosen, p + 1) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }
    if beta.len() > alpha.len() {
        return false;
    }
    extend(
        alpha.parts(),
        beta.parts(),
        &mut Vec::with_capacity(beta.len()),
        0,
    )
}

/// The five composition patterns whose avoidance characterizes full-split
/// multiplicity-freeness of key polynomials.
pub fn km_patterns() -> [Composition; 5] {
    [
        Composition(vec![0, 1, 2]),
        Composition(vec![0, 0, 2, 2]),
        Composition(vec![0, 0, 2, 1]),
        Composition(vec![1, 0, 3, 2]),
        Composition(vec![1, 0, 2, 2]),
    ]
}

pub fn avoids_km(alpha: &Composition) -> bool {
    km_patterns()
        .iter()
        .all(|p| !contains_comp_pattern(alpha, p))
}
