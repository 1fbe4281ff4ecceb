//! `I`-sphericality: witness verification, witness search, censuses and the
//! closed-form classifications for `w0` and dihedral groups.
//!
//! A reduced word `R` of `w` is an `I`-witness when every letter outside `I`
//! occurs at most once (S.1) and, for every connected component `C` of the
//! diagram induced on `I`, the letters of `C` occur at most
//! `l(w0(C)) + #C` times in total (S.2).

use rayon::prelude::*;
use rustc_hash::FxHashSet;
use serde::{Deserialize, Serialize};

use crate::coxeter::{
    ComponentDecomposition, CoxeterSystem, Element, EnumeratedGroup, Family, GroupView,
};
use crate::error::{Error, Result};
use crate::words::{evaluate, is_reduced, Word};

/// A witness word together with its letter tallies.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessCertificate {
    pub word: Word,
    /// Occurrences of each letter, indexed by label (index 0 unused).
    pub per_node_counts: Vec<usize>,
    /// Occurrences of letters of each component of `I`.
    pub per_component_counts: Vec<usize>,
    pub budgets: Vec<usize>,
}

impl WitnessCertificate {
    fn new(word: Word, rank: usize, dec: &ComponentDecomposition) -> Self {
        let per_node_counts = word.letter_counts(rank);
        let per_component_counts = dec
            .components()
            .iter()
            .map(|c| c.iter().map(|&v| per_node_counts[v]).sum())
            .collect();
        Self {
            word,
            per_node_counts,
            per_component_counts,
            budgets: dec.budgets().to_vec(),
        }
    }
}

fn normalize(subset: &[usize]) -> Vec<usize> {
    let mut v = subset.to_vec();
    v.sort_unstable();
    v.dedup();
    v
}

/// Checks `I ⊆ J(w)` and returns the component decomposition of `I`.
fn check_query(
    sys: &CoxeterSystem,
    w: &Element,
    subset: &[usize],
) -> Result<ComponentDecomposition> {
    sys.check_member(w)?;
    let dec = sys.decompose_subset(subset)?;
    let descents = sys.left_descents(w);
    if dec.subset().iter().any(|i| !descents.contains(i)) {
        return Err(Error::NotInDescentSet {
            subset: dec.subset().to_vec(),
            descents,
        });
    }
    Ok(dec)
}

fn satisfies_bounds(word: &Word, rank: usize, dec: &ComponentDecomposition) -> bool {
    let counts = word.letter_counts(rank);
    let s1 = (1..=rank).all(|j| dec.contains(j) || counts[j] <= 1);
    let s2 = dec
        .components()
        .iter()
        .zip(dec.budgets())
        .all(|(c, &b)| c.iter().map(|&v| counts[v]).sum::<usize>() <= b);
    s1 && s2
}

/// True iff `word` is a reduced word of `w` satisfying (S.1) and (S.2) for `I`.
///
/// Recounts the word from scratch, independently of how it was found.
pub fn verify_witness(
    sys: &CoxeterSystem,
    w: &Element,
    subset: &[usize],
    word: &Word,
) -> Result<bool> {
    let dec = check_query(sys, w, subset)?;
    if !is_reduced(sys, word)? || evaluate(sys, word)? != *w {
        return Ok(false);
    }
    Ok(satisfies_bounds(word, sys.rank(), &dec))
}

/// Depth-first witness search. Words are grown right to left by peeling right
/// descents; the remaining (S.1) and (S.2) allowances travel with the search
/// and failed `(element, allowance)` states are remembered.
struct Search<'a, G: GroupView> {
    group: &'a G,
    component_of: Vec<Option<usize>>,
    node_left: Vec<u8>,
    comp_left: Vec<usize>,
    failed: FxHashSet<(G::Elem, u128)>,
    letters: Vec<usize>,
}

impl<'a, G: GroupView> Search<'a, G> {
    fn new(group: &'a G, dec: &ComponentDecomposition) -> Self {
        let rank = group.rank();
        let component_of: Vec<Option<usize>> = (0..=rank).map(|v| dec.component_of(v)).collect();
        let node_left = (0..=rank)
            .map(|v| u8::from(v > 0 && component_of[v].is_none()))
            .collect();
        Self {
            group,
            component_of,
            node_left,
            comp_left: dec.budgets().to_vec(),
            failed: FxHashSet::default(),
            letters: Vec::new(),
        }
    }

    /// Allowances packed into one key. Component allowances beyond the
    /// remaining length are equivalent, so they are clamped to it.
    fn key(&self, len: usize) -> u128 {
        let mut key = 0u128;
        let mut shift = 0;
        for (v, &left) in self.node_left.iter().enumerate().skip(1) {
            if self.component_of[v].is_none() {
                key |= (left as u128) << shift;
                shift += 1;
            }
        }
        for &left in &self.comp_left {
            key |= (left.min(len).min(255) as u128) << shift;
            shift += 8;
        }
        key
    }

    fn run(&mut self, x: G::Elem) -> bool {
        let len = self.group.length(&x);
        if len == 0 {
            return true;
        }
        let room: usize = self.node_left.iter().map(|&b| b as usize).sum::<usize>()
            + self.comp_left.iter().sum::<usize>();
        if len > room {
            return false;
        }
        let key = self.key(len);
        if self.failed.contains(&(x.clone(), key)) {
            return false;
        }
        for i in 1..=self.group.rank() {
            if !self.group.is_right_descent(&x, i) {
                continue;
            }
            match self.component_of[i] {
                None if self.node_left[i] == 0 => continue,
                None => self.node_left[i] -= 1,
                Some(z) if self.comp_left[z] == 0 => continue,
                Some(z) => self.comp_left[z] -= 1,
            }
            self.letters.push(i);
            if self.run(self.group.right_mul(&x, i)) {
                return true;
            }
            self.letters.pop();
            match self.component_of[i] {
                None => self.node_left[i] += 1,
                Some(z) => self.comp_left[z] += 1,
            }
        }
        self.failed.insert((x, key));
        false
    }
}

/// Searches for an `I`-witness of `w` without validating `I ⊆ J(w)`.
pub fn find_witness_in<G: GroupView>(
    group: &G,
    w: &G::Elem,
    dec: &ComponentDecomposition,
) -> Option<Word> {
    let mut search = Search::new(group, dec);
    if search.run(w.clone()) {
        let mut letters = search.letters;
        letters.reverse();
        Some(Word::new(letters))
    } else {
        None
    }
}

/// An `I`-witness for `w` with its tallies, or `None` when `w` is not
/// `I`-spherical.
pub fn find_witness(
    sys: &CoxeterSystem,
    w: &Element,
    subset: &[usize],
) -> Result<Option<WitnessCertificate>> {
    let dec = check_query(sys, w, subset)?;
    Ok(find_witness_in(sys, w, &dec).map(|word| WitnessCertificate::new(word, sys.rank(), &dec)))
}

pub fn is_i_spherical(sys: &CoxeterSystem, w: &Element, subset: &[usize]) -> Result<bool> {
    Ok(find_witness(sys, w, subset)?.is_some())
}

/// `w` is `J(w)`-spherical.
pub fn is_maximally_spherical(sys: &CoxeterSystem, w: &Element) -> bool {
    let dec = sys
        .decompose_subset(&sys.left_descents(w))
        .expect("descents are valid nodes");
    find_witness_in(sys, w, &dec).is_some()
}

/// One row of a census: an element, its left descents and a `J(w)`-witness
/// when one exists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusEntry {
    pub id: u32,
    pub left_descents: Vec<usize>,
    pub witness: Option<Word>,
}

impl CensusEntry {
    pub fn spherical(&self) -> bool {
        self.witness.is_some()
    }
}

/// Decides maximal sphericality of every element, in enumeration order.
pub fn census(group: &EnumeratedGroup) -> Vec<CensusEntry> {
    let sys = group.system();
    group
        .ids()
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|id| {
            let left_descents = group.left_descents_of(id);
            let dec = sys
                .decompose_subset(&left_descents)
                .expect("descents are valid nodes");
            let witness = find_witness_in(group, &id, &dec);
            CensusEntry {
                id,
                left_descents,
                witness,
            }
        })
        .collect()
}

/// Every element that is not maximally spherical, in enumeration order.
pub fn nonspherical_census(sys: &CoxeterSystem) -> Result<Vec<Element>> {
    let group = EnumeratedGroup::new(sys)?;
    Ok(census(&group)
        .into_iter()
        .filter(|e| !e.spherical())
        .map(|e| group.element(e.id).clone())
        .collect())
}

/// Closed form for `I`-sphericality of `w0`: in `A_{n-1}` with `n >= 4`,
/// exactly `I = [1,n-1], [2,n-1], [1,n-2]`; in other irreducible types only
/// `I = S`. Smaller type `A` cases are decided by search.
pub fn w0_sphericality_closed_form(sys: &CoxeterSystem, subset: &[usize]) -> Result<bool> {
    let subset = normalize(subset);
    sys.decompose_subset(&subset)?;
    let r = sys.rank();
    let all: Vec<usize> = (1..=r).collect();
    if sys.cartan_type().family() == Family::A {
        let n = r + 1;
        if n < 4 {
            return is_i_spherical(sys, &sys.longest_element(), &subset);
        }
        return Ok(subset == all || subset == all[1..] || subset == all[..r - 1]);
    }
    Ok(subset == all)
}

/// In a rank two group, `w` is maximally spherical iff `l(w) <= 3` or
/// `w = w0`.
pub fn dihedral_classification(sys: &CoxeterSystem, w: &Element) -> Result<bool> {
    if sys.rank() != 2 {
        return Err(Error::NotDihedral(sys.cartan_type().to_string()));
    }
    sys.check_member(w)?;
    Ok(w.length() <= 3 || w.length() == sys.longest_length())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::typea::Permutation;
    use crate::words::reduced_words;

    fn sys(s: &str) -> CoxeterSystem {
        CoxeterSystem::new(s.parse().unwrap())
    }

    fn elem(s: &CoxeterSystem, word: &str) -> Element {
        evaluate(s, &word.parse().unwrap()).unwrap()
    }

    fn perm(s: &CoxeterSystem, one_line: &str) -> Element {
        one_line
            .parse::<Permutation>()
            .unwrap()
            .to_element(s)
            .unwrap()
    }

    #[test]
    fn e8_witnesses() {
        let e8 = sys("E8");
        let w = elem(
            &e8,
            "s2 s3 s4 s2 s3 s4 s5 s4 s2 s3 s1 s4 s5 s6 s7 s6 s8 s7 s6",
        );
        let j = e8.left_descents(&w);
        let bad: Word = "s2 s3 s4 s2 s3 s4 s5 s4 s2 s3 s1 s4 s5 s6 s7 s6 s8 s7 s6"
            .parse()
            .unwrap();
        let good: Word = "s2 s3 s4 s2 s3 s4 s5 s4 s2 s3 s1 s4 s5 s7 s8 s7 s6 s7 s8"
            .parse()
            .unwrap();
        assert!(!verify_witness(&e8, &w, &j, &bad).unwrap());
        assert!(verify_witness(&e8, &w, &j, &good).unwrap());
        let cert = find_witness(&e8, &w, &j).unwrap().unwrap();
        assert!(verify_witness(&e8, &w, &j, &cert.word).unwrap());
    }

    #[test]
    fn a7_witness() {
        let a7 = sys("A7");
        let w = perm(&a7, "35246781");
        let word: Word = "s1 s2 s1 s4 s3 s2 s4 s5 s6 s7".parse().unwrap();
        assert!(verify_witness(&a7, &w, &[1, 2, 4], &word).unwrap());
        assert!(is_maximally_spherical(&a7, &w));
    }

    #[test]
    fn query_outside_descents_is_an_error() {
        let a4 = sys("A4");
        let w = perm(&a4, "24531");
        assert!(matches!(
            is_i_spherical(&a4, &w, &[2]),
            Err(Error::NotInDescentSet { .. })
        ));
        let word = Word::new(sys("A4").reduced_word(&w));
        assert!(verify_witness(&a4, &w, &[4], &word).is_err());
    }

    #[test]
    fn verify_rejects_wrong_or_unreduced_words() {
        let a2 = sys("A2");
        let w = a2.longest_element();
        assert!(!verify_witness(&a2, &w, &[1, 2], &"s1 s2".parse().unwrap()).unwrap());
        assert!(!verify_witness(&a2, &w, &[1, 2], &"s1 s2 s1 s1 s1".parse().unwrap()).unwrap());
        assert!(verify_witness(&a2, &w, &[1, 2], &"s2 s1 s2".parse().unwrap()).unwrap());
    }

    #[test]
    fn example_answers() {
        let a4 = sys("A4");
        assert!(!is_i_spherical(&a4, &perm(&a4, "24531"), &[1, 3]).unwrap());
        assert!(is_maximally_spherical(&a4, &perm(&a4, "51423")));

        let f4 = sys("F4");
        let w = elem(&f4, "s2 s3 s2 s3 s4 s3 s2 s1 s3 s2 s4 s3");
        assert!(is_i_spherical(&f4, &w, &[2, 3, 4]).unwrap());

        let b3 = sys("B3");
        assert!(!is_maximally_spherical(&b3, &elem(&b3, "s2 s3 s1 s2 s3")));
    }

    #[test]
    fn coxeter_elements_are_spherical_for_every_subset() {
        for t in ["A4", "B3", "D4", "F4", "E6"] {
            let s = sys(t);
            let c = Word::new((1..=s.rank()).rev().collect());
            let w = evaluate(&s, &c).unwrap();
            let j = s.left_descents(&w);
            for mask in 0..(1u32 << j.len()) {
                let subset: Vec<usize> = j
                    .iter()
                    .enumerate()
                    .filter(|(k, _)| mask >> k & 1 == 1)
                    .map(|x| *x.1)
                    .collect();
                assert!(is_i_spherical(&s, &w, &subset).unwrap(), "{t} {subset:?}");
            }
        }
    }

    #[test]
    fn all_of_s4_is_maximally_spherical() {
        let s = sys("A3");
        let g = EnumeratedGroup::new(&s).unwrap();
        assert!(census(&g).iter().all(CensusEntry::spherical));
    }

    #[test]
    fn census_witnesses_verify() {
        let s = sys("B3");
        let g = EnumeratedGroup::new(&s).unwrap();
        for entry in census(&g) {
            let w = g.element(entry.id);
            assert_eq!(entry.left_descents, s.left_descents(w));
            if let Some(word) = &entry.witness {
                assert!(verify_witness(&s, w, &entry.left_descents, word).unwrap());
            }
        }
    }

    #[test]
    fn closed_form_examples() {
        let a4 = sys("A4");
        assert!(w0_sphericality_closed_form(&a4, &[2, 3, 4]).unwrap());
        assert!(!w0_sphericality_closed_form(&a4, &[2, 3]).unwrap());
        assert!(!w0_sphericality_closed_form(&sys("B3"), &[1, 2]).unwrap());
        assert!(w0_sphericality_closed_form(&sys("B3"), &[1, 2, 3]).unwrap());
    }

    #[test]
    fn dihedral_examples() {
        let i5 = sys("I2(5)");
        let w = elem(&i5, "s1 s2 s1 s2");
        assert!(!dihedral_classification(&i5, &w).unwrap());
        assert!(!is_maximally_spherical(&i5, &w));
        let i7 = sys("I2(7)");
        assert!(dihedral_classification(&i7, &i7.longest_element()).unwrap());
        let i9 = sys("I2(9)");
        assert!(dihedral_classification(&i9, &elem(&i9, "s2 s1 s2")).unwrap());
        assert!(matches!(
            dihedral_classification(&sys("A3"), &sys("A3").identity()),
            Err(Error::NotDihedral(_))
        ));
    }

    /// The type `A` form of (S.2): cutting `[n]` at `D = [n-1] - I` into blocks
    /// `(d_{t-1}, d_t]`, the letters strictly inside block `t` occur fewer than
    /// `binom(d_t - d_{t-1} + 1, 2)` times.
    fn strict_block_bound(word: &Word, n: usize, subset: &[usize]) -> bool {
        let counts = word.letter_counts(n - 1);
        let mut cuts: Vec<usize> = vec![0];
        cuts.extend((1..n).filter(|d| !subset.contains(d)));
        cuts.push(n);
        cuts.windows(2).all(|p| {
            let (lo, hi) = (p[0], p[1]);
            let inside: usize = (lo + 1..hi).map(|v| counts[v]).sum();
            let size = hi - lo;
            inside < (size + 1) * size / 2
        })
    }

    #[test]
    fn type_a_block_form_agrees() {
        let s = sys("A4");
        let g = EnumeratedGroup::new(&s).unwrap();
        for w in g.elements() {
            let j = s.left_descents(w);
            let dec = s.decompose_subset(&j).unwrap();
            for word in reduced_words(&s, w) {
                let counts = word.letter_counts(4);
                let s2 = dec
                    .components()
                    .iter()
                    .zip(dec.budgets())
                    .all(|(c, &b)| c.iter().map(|&v| counts[v]).sum::<usize>() <= b);
                assert_eq!(s2, strict_block_bound(&word, 5, &j));
            }
        }
    }
}
