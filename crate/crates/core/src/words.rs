//! Words in the generators: evaluation, reducedness, enumeration of
//! `Red(w)` and the Bruhat order.

use std::fmt;
use std::str::FromStr;

use rustc_hash::FxHashMap;
use serde::{Deserialize, Serialize};

use crate::coxeter::{CoxeterSystem, Element, GroupView};
use crate::error::{Error, Result};

/// A sequence of 1-based generator labels. Not necessarily reduced.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Word(Vec<usize>);

impl Word {
    pub fn new(letters: Vec<usize>) -> Self {
        Self(letters)
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn into_letters(self) -> Vec<usize> {
        self.0
    }

    /// Number of occurrences of each letter, indexed by label (index 0 unused).
    pub fn letter_counts(&self, rank: usize) -> Vec<usize> {
        let mut counts = vec![0; rank + 1];
        for &a in &self.0 {
            if a < counts.len() {
                counts[a] += 1;
            }
        }
        counts
    }
}

impl From<Vec<usize>> for Word {
    fn from(v: Vec<usize>) -> Self {
        Self(v)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, a) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "s{a}")?;
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = Error;

    /// Accepts `s2 s3 s4`, `2 3 4`, or comma separated variants.
    fn from_str(s: &str) -> Result<Self> {
        s.split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .map(|t| {
                let t = t.strip_prefix('s').unwrap_or(t);
                let t = t.strip_prefix('_').unwrap_or(t);
                t.parse::<usize>()
                    .ok()
                    .filter(|&a| a > 0)
                    .ok_or_else(|| Error::Parse(format!("bad generator token in word {s:?}")))
            })
            .collect::<Result<Vec<_>>>()
            .map(Word)
    }
}

/// The product `s_{i1} ... s_{ik}`.
pub fn evaluate(sys: &CoxeterSystem, word: &Word) -> Result<Element> {
    let mut w = sys.identity();
    for &a in word.letters() {
        w = sys.right_mul(&w, a)?;
    }
    Ok(w)
}

/// True iff the word's length equals the length of its product.
pub fn is_reduced(sys: &CoxeterSystem, word: &Word) -> Result<bool> {
    let mut w = sys.identity();
    for &a in word.letters() {
        sys.check_letter(a)?;
        if sys.is_right_descent(&w, a) {
            return Ok(false);
        }
        w = sys.right_mul(&w, a)?;
    }
    Ok(true)
}

/// Lazy iterator over `Red(w)` in lexicographic order.
///
/// Each word is built left to right by peeling left descents, so the first
/// letter varies slowest.
pub struct ReducedWords<'a, G: GroupView> {
    group: &'a G,
    stack: Vec<(G::Elem, usize)>,
    word: Vec<usize>,
}

impl<'a, G: GroupView> ReducedWords<'a, G> {
    pub fn new(group: &'a G, w: G::Elem) -> Self {
        Self {
            group,
            stack: vec![(w, 1)],
            word: Vec::new(),
        }
    }
}

impl<G: GroupView> Iterator for ReducedWords<'_, G> {
    type Item = Word;

    fn next(&mut self) -> Option<Word> {
        let rank = self.group.rank();
        loop {
            let (elem, next) = self.stack.last_mut()?;
            if self.group.length(elem) == 0 {
                let out = Word(self.word.clone());
                self.stack.pop();
                self.word.pop();
                return Some(out);
            }
            let mut i = *next;
            while i <= rank && !self.group.is_left_descent(elem, i) {
                i += 1;
            }
            if i > rank {
                self.stack.pop();
                self.word.pop();
                continue;
            }
            *next = i + 1;
            let child = self.group.left_mul(i, elem);
            self.word.push(i);
            self.stack.push((child, 1));
        }
    }
}

/// Iterator over `Red(w)`.
pub fn reduced_words<'a, G: GroupView>(group: &'a G, w: &G::Elem) -> ReducedWords<'a, G> {
    ReducedWords::new(group, w.clone())
}

/// `#Red(w)` without materializing any word.
pub fn count_reduced_words<G: GroupView>(group: &G, w: &G::Elem) -> u128 {
    fn go<G: GroupView>(group: &G, w: &G::Elem, memo: &mut FxHashMap<G::Elem, u128>) -> u128 {
        if group.length(w) == 0 {
            return 1;
        }
        if let Some(&c) = memo.get(w) {
            return c;
        }
        let total = (1..=group.rank())
            .filter(|&i| group.is_left_descent(w, i))
            .map(|i| go(group, &group.left_mul(i, w), memo))
            .sum();
        memo.insert(w.clone(), total);
        total
    }
    go(group, w, &mut FxHashMap::default())
}

/// Strong Bruhat order `u <= v`, decided by the descent recursion: for a left
/// descent `s` of `v`, `u <= v` iff `su <= sv` (when `s` is a descent of `u`)
/// or `u <= sv` (otherwise).
pub fn bruhat_leq<G: GroupView>(group: &G, u: &G::Elem, v: &G::Elem) -> bool {
    let mut u = u.clone();
    let mut v = v.clone();
    loop {
        let (lu, lv) = (group.length(&u), group.length(&v));
        if lu > lv {
            return false;
        }
        if lu == 0 {
            return true;
        }
        let i = (1..=group.rank())
            .find(|&i| group.is_left_descent(&v, i))
            .expect("nonidentity has a left descent");
        if group.is_left_descent(&u, i) {
            u = group.left_mul(i, &u);
        }
        v = group.left_mul(i, &v);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::EnumeratedGroup;
    use crate::typea::Permutation;

    fn sys(s: &str) -> CoxeterSystem {
        CoxeterSystem::new(s.parse().unwrap())
    }

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn one_line(sys: &CoxeterSystem, word: &str) -> String {
        let e = evaluate(sys, &w(word)).unwrap();
        Permutation::from_element(sys, &e).unwrap().to_string()
    }

    #[test]
    fn parse_formats() {
        assert_eq!(w("s2 s3 s4"), Word::new(vec![2, 3, 4]));
        assert_eq!(w("2 3 4"), Word::new(vec![2, 3, 4]));
        assert_eq!(w(""), Word::empty());
        assert!("s0".parse::<Word>().is_err());
        assert!("sx".parse::<Word>().is_err());
        assert_eq!(w("s2 s3 s4").to_string(), "s2 s3 s4");
    }

    #[test]
    fn evaluate_examples() {
        let a4 = sys("A4");
        assert!(evaluate(&a4, &Word::empty()).unwrap().is_identity());
        assert_eq!(one_line(&a4, "s3 s1 s2 s3 s4 s3"), "24531");
        assert_eq!(one_line(&sys("A3"), "s2 s1 s3 s2"), "3412");
        assert!(matches!(
            evaluate(&a4, &w("s5")),
            Err(Error::LetterOutOfRange { letter: 5, rank: 4 })
        ));
    }

    #[test]
    fn is_reduced_examples() {
        let a2 = sys("A2");
        assert!(!is_reduced(&a2, &w("s1 s1")).unwrap());
        assert!(is_reduced(&a2, &w("s1 s2 s1")).unwrap());
        let e8 = sys("E8");
        assert!(is_reduced(
            &e8,
            &w("s2 s3 s4 s2 s3 s4 s5 s4 s2 s3 s1 s4 s5 s6 s7 s6 s8 s7 s6")
        )
        .unwrap());
    }

    #[test]
    fn reduced_word_counts() {
        let a3 = sys("A3");
        let w0 = a3.longest_element();
        assert_eq!(reduced_words(&a3, &w0).count(), 16);
        assert_eq!(count_reduced_words(&a3, &w0), 16);

        let f4 = sys("F4");
        let x = evaluate(&f4, &w("s1 s2 s3 s2 s4 s3 s2 s3 s4")).unwrap();
        assert_eq!(reduced_words(&f4, &x).count(), 25);
        assert_eq!(count_reduced_words(&f4, &x), 25);

        let id = a3.identity();
        assert_eq!(
            reduced_words(&a3, &id).collect::<Vec<_>>(),
            vec![Word::empty()]
        );
    }

    #[test]
    fn reduced_words_are_sorted_distinct_and_correct() {
        let b3 = sys("B3");
        let w0 = b3.longest_element();
        let all: Vec<Word> = reduced_words(&b3, &w0).collect();
        assert!(all.windows(2).all(|p| p[0] < p[1]));
        for r in &all {
            assert!(is_reduced(&b3, r).unwrap());
            assert_eq!(evaluate(&b3, r).unwrap(), w0);
        }
        assert_eq!(all.len() as u128, count_reduced_words(&b3, &w0));
    }

    #[test]
    fn red_counts_match_brute_force_in_s4() {
        // every word of length <= 6 over {1,2,3}, kept when reduced
        let a3 = sys("A3");
        let mut brute: FxHashMap<Element, u128> = FxHashMap::default();
        let mut frontier = vec![Vec::<usize>::new()];
        for _ in 0..=6 {
            let mut next = Vec::new();
            for word in frontier {
                let word = Word::new(word);
                if !is_reduced(&a3, &word).unwrap() {
                    continue;
                }
                *brute.entry(evaluate(&a3, &word).unwrap()).or_default() += 1;
                for a in 1..=3 {
                    let mut longer = word.letters().to_vec();
                    longer.push(a);
                    next.push(longer);
                }
            }
            frontier = next;
        }
        let g = EnumeratedGroup::new(&a3).unwrap();
        let total: u128 = g
            .elements()
            .iter()
            .map(|e| count_reduced_words(&a3, e))
            .sum();
        assert_eq!(total, brute.values().sum::<u128>());
        for e in g.elements() {
            assert_eq!(brute[e], count_reduced_words(&a3, e));
        }
    }

    #[test]
    fn bruhat_examples() {
        let a3 = sys("A3");
        let g = EnumeratedGroup::new(&a3).unwrap();
        let w0 = a3.longest_element();
        let id = a3.identity();
        for e in g.elements() {
            assert!(bruhat_leq(&a3, &id, e));
            assert!(bruhat_leq(&a3, e, &w0));
        }
        let x = evaluate(&a3, &w("s2 s1 s3 s2")).unwrap();
        assert!(bruhat_leq(&a3, &x, &w0));
        assert!(!bruhat_leq(&a3, &w0, &x));
    }
}
