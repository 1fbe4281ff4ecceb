use std::collections::btree_map::{self, BTreeMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use smallvec::SmallVec;

use super::coefficient::Coefficient;

/// Exponent vector `(a_1, ..., a_n)` of the monomial `x1^a1 ... xn^an`.
///
/// The derived order is lexicographic with position 1 most significant.
pub type Exponents = SmallVec<[u16; 8]>;

/// A sparse polynomial in `x1, ..., xn` with exact coefficients. Zero
/// coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polynomial<C> {
    nvars: usize,
    terms: BTreeMap<Exponents, C>,
}

impl<C: Coefficient> Polynomial<C> {
    pub fn zero(nvars: usize) -> Self {
        Self {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::monomial(&vec![0; nvars], C::one())
    }

    /// `c * x^exps`.
    pub fn monomial(exps: &[u32], c: C) -> Self {
        let mut p = Self::zero(exps.len());
        p.add_term(exps.iter().map(|&e| to_exp(e)).collect(), c);
        p
    }

    /// The variable `x_i` (1-based) in `nvars` variables.
    pub fn variable(i: usize, nvars: usize) -> Self {
        let mut exps = vec![0; nvars];
        exps[i - 1] = 1;
        Self::monomial(&exps, C::one())
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Exponents, C)>) -> Self {
        let mut p = Self::zero(nvars);
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// Number of nonzero terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in increasing lexicographic order of exponents.
    pub fn terms(&self) -> btree_map::Iter<'_, Exponents, C> {
        self.terms.iter()
    }

    pub fn coeff(&self, exps: &[u16]) -> C {
        self.terms.get(exps).cloned().unwrap_or_else(C::zero)
    }

    /// Lexicographically largest term.
    pub fn leading_term(&self) -> Option<(&Exponents, &C)> {
        self.terms.iter().next_back()
    }

    /// Lexicographically smallest term.
    pub fn trailing_term(&self) -> Option<(&Exponents, &C)> {
        self.terms.iter().next()
    }

    pub fn add_term(&mut self, exps: Exponents, c: C) {
        assert_eq!(exps.len(), self.nvars, "exponent vector length");
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
            btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            btree_map::Entry::Occupied(mut o) => {
                let sum = o.get().add_exact(&c);
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    /// `self += c * other`.
    pub fn add_scaled(&mut self, other: &Self, c: &C) {
        assert_eq!(self.nvars, other.nvars, "variable count");
        for (e, d) in &other.terms {
            self.add_term(e.clone(), d.mul_exact(c));
        }
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        Self {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, d)| (e.clone(), d.mul_exact(c)))
                .collect(),
        }
    }

    /// Multiplication by `x^exps`.
    pub fn mul_monomial(&self, exps: &[u16]) -> Self {
        Self {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.iter().zip(exps).map(|(a, b)| a + b).collect(), c.clone()))
                .collect(),
        }
    }

    /// `s_j f`: exchanges `x_j` and `x_{j+1}` (1-based `j`).
    pub fn swap_vars(&self, j: usize) -> Self {
        Self {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let mut e = e.clone();
                    e.swap(j - 1, j);
                    (e, c.clone())
                })
                .collect(),
        }
    }

    /// Invariance under `x_j <-> x_{j+1}`.
    pub fn is_symmetric_in(&self, j: usize) -> bool {
        self.terms.iter().all(|(e, c)| {
            if e[j - 1] == e[j] {
                return true;
            }
            let mut t = e.clone();
            t.swap(j - 1, j);
            self.terms.get(&t) == Some(c)
        })
    }

    /// Largest total degree of a term, 0 for the zero polynomial.
    pub fn degree(&self) -> u32 {
        self.terms
            .keys()
            .map(|e| e.iter().map(|&a| a as u32).sum())
            .max()
            .unwrap_or(0)
    }

    pub fn map_coefficients<D: Coefficient>(&self, f: impl Fn(&C) -> D) -> Polynomial<D> {
        Polynomial::from_terms(
            self.nvars,
            self.terms.iter().map(|(e, c)| (e.clone(), f(c))),
        )
    }
}

pub(crate) fn to_exp(e: u32) -> u16 {
    u16::try_from(e).expect("exponent fits in u16")
}

impl<C: Coefficient> Add for &Polynomial<C> {
    type Output = Polynomial<C>;

    fn add(self, rhs: Self) -> Polynomial<C> {
        let mut out = self.clone();
        out.add_scaled(rhs, &C::one());
        out
    }
}

impl<C: Coefficient> Sub for &Polynomial<C> {
    type Output = Polynomial<C>;

    fn sub(self, rhs: Self) -> Polynomial<C> {
        let mut out = self.clone();
        out.add_scaled(rhs, &-C::one());
        out
    }
}

impl<C: Coefficient> Neg for &Polynomial<C> {
    type Output = Polynomial<C>;

    fn neg(self) -> Polynomial<C> {
        self.scale(&-C::one())
    }
}

impl<C: Coefficient> Mul for &Polynomial<C> {
    type Output = Polynomial<C>;

    fn mul(self, rhs: Self) -> Polynomial<C> {
        assert_eq!(self.nvars, rhs.nvars, "variable count");
        let mut out = Polynomial::zero(self.nvars);
        for (a, c) in &self.terms {
            for (b, d) in &rhs.terms {
                out.add_term(
                    a.iter().zip(b).map(|(x, y)| x + y).collect(),
                    c.mul_exact(d),
                );
            }
        }
        out
    }
}

impl<C: Coefficient> fmt::Display for Polynomial<C> {
    /// Terms as `c * x1^a1 x2^a2`, lexicographically descending, joined by
    /// ` + `; the zero polynomial prints as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (e, c)) in self.terms.iter().rev().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{c}")?;
            let vars: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &a)| a > 0)
                .map(|(i, a)| format!("x{}^{a}", i + 1))
                .collect();
            if !vars.is_empty() {
                write!(f, " * {}", vars.join(" "))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    type P = Polynomial<i64>;

    #[test]
    fn arithmetic() {
        let x1 = P::variable(1, 2);
        let x2 = P::variable(2, 2);
        let s = &x1 + &x2;
        let sq = &s * &s;
        assert_eq!(sq.coeff(&[1, 1]), 2);
        assert_eq!(sq.len(), 3);
        assert!((&sq - &sq).is_zero());
        assert_eq!((-&x1).coeff(&[1, 0]), -1);
        assert_eq!(sq.degree(), 2);
        assert!(sq.is_symmetric_in(1));
        assert!(!x1.is_symmetric_in(1));
        assert_eq!(x1.swap_vars(1), x2);
    }

    #[test]
    fn display_is_lex_descending() {
        let p = &(&P::variable(2, 2) + &P::monomial(&[2, 0], 3)) + &P::one(2);
        assert_eq!(p.to_string(), "3 * x1^2 + 1 * x2^1 + 1");
        assert_eq!(P::zero(3).to_string(), "0");
    }

    #[test]
    #[should_panic(expected = "coefficient overflow")]
    fn fixed_width_overflow_panics() {
        let p = P::monomial(&[1], i64::MAX);
        let _ = &p + &p;
    }

    #[test]
    fn bigint_coefficients() {
        let p = Polynomial::<BigInt>::monomial(&[1], BigInt::from(i64::MAX));
        let q = &p + &p;
        assert_eq!(q.coeff(&[1]), BigInt::from(i64::MAX) * 2);
    }
}
