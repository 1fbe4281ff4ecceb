use std::collections::BTreeMap;

use rustc_hash::FxHashSet;

use super::coefficient::Coefficient;
use super::polynomial::{Exponents, Polynomial};
use crate::typea::Composition;

/// The isobaric divided difference
/// `pi_j f = (x_j f - x_{j+1} s_j f) / (x_j - x_{j+1})`, computed term by
/// term from the closed form of the quotient.
pub fn demazure_pi<C: Coefficient>(j: usize, f: &Polynomial<C>) -> Polynomial<C> {
    assert!(
        j >= 1 && j < f.nvars(),
        "pi_{j} needs 1 <= j < {}",
        f.nvars()
    );
    let (a, b) = (j - 1, j);
    let mut out = Polynomial::zero(f.nvars());
    for (e, c) in f.terms() {
        let (p, q) = (e[a], e[b]);
        let mut push = |x: u16, y: u16, c: C| {
            let mut t = e.clone();
            t[a] = x;
            t[b] = y;
            out.add_term(t, c);
        };
        if p >= q {
            // (x_j x_{j+1})^q (x_j^d + x_j^{d-1} x_{j+1} + ... + x_{j+1}^d), d = p - q
            let d = p - q;
            for k in 0..=d {
                push(q + d - k, q + k, c.clone());
            }
        } else if q - p >= 2 {
            // -(x_j x_{j+1})^{p+1} (sum of degree q - p - 2 terms)
            let d = q - p - 2;
            for k in 0..=d {
                push(p + 1 + k, p + 1 + d - k, -c.clone());
            }
        }
    }
    out
}

/// The key polynomial of `alpha` in `len(alpha)` variables: `x^alpha` when
/// `alpha` is weakly decreasing, otherwise `pi_j kappa_{s_j alpha}` for the
/// first ascent `alpha_j < alpha_{j+1}`.
pub fn key_polynomial<C: Coefficient>(alpha: &Composition) -> Polynomial<C> {
    let mut parts = alpha.parts().to_vec();
    let mut moves = Vec::new();
    while let Some(j) = (1..parts.len()).find(|&j| parts[j - 1] < parts[j]) {
        parts.swap(j - 1, j);
        moves.push(j);
    }
    let mut f = Polynomial::monomial(&parts, C::one());
    for &j in moves.iter().rev() {
        f = demazure_pi(j, &f);
    }
    f
}

/// The key polynomial by Kohnert's rule: starting from the diagram with
/// `alpha_i` left-justified cells in row `i`, repeatedly move the rightmost
/// cell of a row to the nearest empty cell above it in its column. Each
/// distinct reachable diagram contributes `x^(row counts)`.
pub fn key_via_kohnert<C: Coefficient>(alpha: &Composition) -> Polynomial<C> {
    let n = alpha.len();
    let start: Vec<u64> = alpha
        .parts()
        .iter()
        .map(|&a| {
            assert!(a < 64, "Kohnert diagrams support parts below 64");
            (1u64 << a) - 1
        })
        .collect();
    let mut seen: FxHashSet<Vec<u64>> = FxHashSet::default();
    let mut stack = vec![start.clone()];
    seen.insert(start);
    let mut out = Polynomial::zero(n);
    while let Some(diagram) = stack.pop() {
        let weight: Exponents = diagram.iter().map(|r| r.count_ones() as u16).collect();
        out.add_term(weight, C::one());
        for row in 1..n {
            if diagram[row] == 0 {
                continue;
            }
            let col = 63 - diagram[row].leading_zeros();
            let bit = 1u64 << col;
            if let Some(target) = (0..row).rev().find(|&r| diagram[r] & bit == 0) {
                let mut next = diagram.clone();
                next[row] &= !bit;
                next[target] |= bit;
                if seen.insert(next.clone()) {
                    stack.push(next);
                }
            }
        }
    }
    out
}

/// Expansion in the key basis. The monomial `x^alpha` is the
/// lexicographically smallest one in `kappa_alpha`, with coefficient 1, so
/// repeatedly peeling the smallest monomial is exact.
pub fn key_expand<C: Coefficient>(f: &Polynomial<C>) -> BTreeMap<Composition, C> {
    let mut rest = f.clone();
    let mut out = BTreeMap::new();
    while let Some((e, c)) = rest.trailing_term() {
        let alpha = Composition::new(e.iter().map(|&a| a as u32).collect());
        let c = c.clone();
        rest.add_scaled(&key_polynomial(&alpha), &-c.clone());
        out.insert(alpha, c);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    type P = Polynomial<i64>;

    fn c(s: &str) -> Composition {
        s.parse().unwrap()
    }

    #[test]
    fn pi_examples() {
        let x1 = P::variable(1, 2);
        let p = demazure_pi(1, &x1);
        assert_eq!(p, &x1 + &P::variable(2, 2));
        let sq = demazure_pi(1, &P::monomial(&[2, 0], 1));
        assert_eq!(sq.to_string(), "1 * x1^2 + 1 * x1^1 x2^1 + 1 * x2^2");
        assert_eq!(demazure_pi(1, &sq), sq);
        assert!(demazure_pi(1, &P::monomial(&[0, 1], 1)).is_zero());
        assert_eq!(
            demazure_pi(1, &P::monomial(&[0, 2], 1)),
            P::monomial(&[1, 1], -1)
        );
    }

    #[test]
    fn pi_is_the_divided_difference() {
        // (x_j - x_{j+1}) pi_j f == x_j f - x_{j+1} s_j f
        let f = &(&P::monomial(&[3, 0, 1], 2) + &P::monomial(&[0, 4, 2], -5))
            + &P::monomial(&[1, 2, 0], 7);
        for j in 1..3 {
            let xj = P::variable(j, 3);
            let xk = P::variable(j + 1, 3);
            let lhs = &(&xj - &xk) * &demazure_pi(j, &f);
            let rhs = &(&xj * &f) - &(&xk * &f.swap_vars(j));
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn key_examples() {
        assert_eq!(
            key_polynomial::<i64>(&c("(3,1,1,0)")),
            P::monomial(&[3, 1, 1, 0], 1)
        );
        let sum = &key_polynomial::<i64>(&c("(1,2,0,1)")) + &key_polynomial(&c("(2,2,0,0)"));
        let expected = [
            [1, 2, 0, 1],
            [2, 1, 0, 1],
            [1, 2, 1, 0],
            [2, 1, 1, 0],
            [2, 2, 0, 0],
        ]
        .iter()
        .fold(P::zero(4), |acc, e| &acc + &P::monomial(e, 1));
        assert_eq!(sum, expected);
        let k = key_polynomial::<i64>(&c("(1,5,2,4,3)"));
        assert_eq!(k.coeff(&[1, 5, 2, 4, 3]), 1);
    }

    #[test]
    fn kohnert_examples() {
        assert_eq!(key_via_kohnert::<i64>(&c("(2,1)")), P::monomial(&[2, 1], 1));
        assert_eq!(
            key_via_kohnert::<i64>(&c("(0,2)")).to_string(),
            "1 * x1^2 + 1 * x1^1 x2^1 + 1 * x2^2"
        );
        assert_eq!(
            key_via_kohnert::<i64>(&c("(1,5,2,4,3)")),
            key_polynomial(&c("(1,5,2,4,3)"))
        );
    }

    #[test]
    fn key_basis_peeling() {
        let f = &key_polynomial::<i64>(&c("(1,2,0,1)")) + &key_polynomial(&c("(2,2,0,0)"));
        let exp = key_expand(&f);
        assert_eq!(exp.len(), 2);
        assert_eq!(exp[&c("(1,2,0,1)")], 1);
        assert_eq!(exp[&c("(2,2,0,0)")], 1);
    }
}
