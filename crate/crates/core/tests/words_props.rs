use std::collections::HashSet;

use coxsph::words::{bruhat_leq, count_reduced_words, evaluate, is_reduced, reduced_words};
use coxsph::{CoxeterSystem, Element, EnumeratedGroup, Word};

fn sys(t: &str) -> CoxeterSystem {
    CoxeterSystem::new(t.parse().unwrap())
}

/// Elements below `v`: products of reduced subwords of one reduced word.
fn lower_interval(s: &CoxeterSystem, v: &Element) -> HashSet<Element> {
    let word = s.reduced_word(v);
    let mut out = HashSet::new();
    for mask in 0u32..1 << word.len() {
        let sub: Vec<usize> = (0..word.len())
            .filter(|k| mask >> k & 1 == 1)
            .map(|k| word[k])
            .collect();
        let sub = Word::new(sub);
        if is_reduced(s, &sub).unwrap() {
            out.insert(evaluate(s, &sub).unwrap());
        }
    }
    out
}

#[test]
fn bruhat_order_matches_subwords() {
    for t in ["A3", "B3", "I2(5)"] {
        let s = sys(t);
        let g = EnumeratedGroup::new(&s).unwrap();
        for v in g.elements() {
            let below = lower_interval(&s, v);
            for u in g.elements() {
                assert_eq!(bruhat_leq(&s, u, v), below.contains(u), "{t}");
            }
        }
    }
}

/// Words of length `l(w)` over the generators that multiply to `w`.
fn brute_reduced_count(s: &CoxeterSystem, w: &Element) -> u128 {
    let r = s.rank();
    let l = w.length();
    let mut count = 0;
    let total = (r as u64).pow(l as u32);
    for mut code in 0..total {
        let mut letters = Vec::with_capacity(l);
        for _ in 0..l {
            letters.push((code % r as u64) as usize + 1);
            code /= r as u64;
        }
        if &evaluate(s, &Word::new(letters)).unwrap() == w {
            count += 1;
        }
    }
    count
}

#[test]
fn reduced_word_enumeration() {
    for t in ["A3", "B3", "G2"] {
        let s = sys(t);
        let g = EnumeratedGroup::new(&s).unwrap();
        for w in g.elements() {
            let words: Vec<Word> = reduced_words(&s, w).collect();
            let distinct: HashSet<&Word> = words.iter().collect();
            assert_eq!(distinct.len(), words.len());
            for word in &words {
                assert_eq!(word.len(), w.length());
                assert_eq!(&evaluate(&s, word).unwrap(), w);
            }
            assert_eq!(words.len() as u128, count_reduced_words(&s, w));
            if w.length() <= 6 {
                assert_eq!(words.len() as u128, brute_reduced_count(&s, w), "{t}");
            }
        }
    }
}

#[test]
fn enumerated_ids_agree_with_elements() {
    let s = sys("B3");
    let g = EnumeratedGroup::new(&s).unwrap();
    for id in g.ids() {
        let w = g.element(id);
        let words: HashSet<Word> = reduced_words(&s, w).collect();
        let by_id: HashSet<Word> = reduced_words(&g, &id).collect();
        assert_eq!(words, by_id);
        assert!(bruhat_leq(&g, &0, &id));
    }
}

#[test]
fn longest_element_word_counts() {
    // staircase tableaux count for A3, and the known B3 value
    assert_eq!(
        count_reduced_words(&sys("A3"), &sys("A3").longest_element()),
        16
    );
    assert_eq!(
        count_reduced_words(&sys("A4"), &sys("A4").longest_element()),
        768
    );
    assert_eq!(
        count_reduced_words(&sys("B3"), &sys("B3").longest_element()),
        42
    );
    assert_eq!(
        count_reduced_words(&sys("I2(7)"), &sys("I2(7)").longest_element()),
        2
    );
}
