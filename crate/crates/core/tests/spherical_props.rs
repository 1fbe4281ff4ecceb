use coxsph::spherical::{find_witness, is_i_spherical, is_maximally_spherical, verify_witness};
use coxsph::words::{bruhat_leq, evaluate, reduced_words};
use coxsph::{CoxeterSystem, Element, EnumeratedGroup, Word};

fn sys(t: &str) -> CoxeterSystem {
    CoxeterSystem::new(t.parse().unwrap())
}

fn subsets(labels: &[usize]) -> Vec<Vec<usize>> {
    (0u32..1 << labels.len())
        .map(|m| {
            labels
                .iter()
                .enumerate()
                .filter(|(k, _)| m >> k & 1 == 1)
                .map(|(_, &l)| l)
                .collect()
        })
        .collect()
}

fn is_subset(a: &[usize], b: &[usize]) -> bool {
    a.iter().all(|x| b.contains(x))
}

#[test]
fn witnesses_verify_and_satisfy_the_budgets() {
    for t in ["A4", "B3", "D4", "G2"] {
        let s = sys(t);
        for w in EnumeratedGroup::new(&s).unwrap().elements() {
            for i in subsets(&s.left_descents(w)) {
                if let Some(cert) = find_witness(&s, w, &i).unwrap() {
                    assert!(verify_witness(&s, w, &i, &cert.word).unwrap());
                    assert_eq!(&evaluate(&s, &cert.word).unwrap(), w);
                    for node in 1..=s.rank() {
                        if !i.contains(&node) {
                            assert!(cert.per_node_counts[node] <= 1);
                        }
                    }
                    for (c, b) in cert.per_component_counts.iter().zip(&cert.budgets) {
                        assert!(c <= b);
                    }
                }
            }
        }
    }
}

/// Exhaustive check of every reduced word, independent of the search.
fn spherical_by_brute_force(s: &CoxeterSystem, w: &Element, i: &[usize]) -> bool {
    reduced_words(s, w).any(|r| verify_witness(s, w, i, &r).unwrap())
}

#[test]
fn search_agrees_with_exhaustive_check() {
    for t in ["A4", "B3", "D4", "G2", "I2(5)", "I2(8)"] {
        let s = sys(t);
        for w in EnumeratedGroup::new(&s).unwrap().elements() {
            for i in subsets(&s.left_descents(w)) {
                assert_eq!(
                    is_i_spherical(&s, w, &i).unwrap(),
                    spherical_by_brute_force(&s, w, &i),
                    "{t}"
                );
            }
        }
    }
}

#[test]
fn downward_closure() {
    for t in ["A4", "B3"] {
        let s = sys(t);
        let g = EnumeratedGroup::new(&s).unwrap();
        for y in g.elements() {
            let jy = s.left_descents(y);
            for x in g.elements().iter().filter(|x| bruhat_leq(&s, x, y)) {
                let jx = s.left_descents(x);
                let common: Vec<usize> = jx.iter().copied().filter(|j| jy.contains(j)).collect();
                for i in subsets(&common) {
                    if is_i_spherical(&s, y, &i).unwrap() {
                        assert!(is_i_spherical(&s, x, &i).unwrap(), "{t}");
                    }
                }
            }
        }
    }
}

#[test]
fn monotonicity() {
    for t in ["A4", "B3", "D4"] {
        let s = sys(t);
        for w in EnumeratedGroup::new(&s).unwrap().elements() {
            let all = subsets(&s.left_descents(w));
            for small in &all {
                if !is_i_spherical(&s, w, small).unwrap() {
                    continue;
                }
                for big in all.iter().filter(|b| is_subset(small, b)) {
                    assert!(is_i_spherical(&s, w, big).unwrap(), "{t}");
                }
            }
        }
    }
}

fn shifted(word: &Word, by: usize) -> Word {
    Word::new(word.letters().iter().map(|&a| a + by).collect())
}

#[test]
fn commuting_parabolic_products() {
    // A5 with X = {1,2}, Y = {4,5}; B5 with X = {1,2} of type A2 and Y = {4,5} of type B2
    for (big, left, right) in [("A5", "A2", "A2"), ("B5", "A2", "B2")] {
        let s = sys(big);
        let (l, r) = (sys(left), sys(right));
        for u in EnumeratedGroup::new(&l).unwrap().elements() {
            for v in EnumeratedGroup::new(&r).unwrap().elements() {
                let mut word = Word::new(l.reduced_word(u));
                let tail = shifted(&Word::new(r.reduced_word(v)), 3);
                word = Word::new(
                    word.letters()
                        .iter()
                        .chain(tail.letters())
                        .copied()
                        .collect(),
                );
                let w = evaluate(&s, &word).unwrap();
                for i in subsets(&s.left_descents(&w)) {
                    let ix: Vec<usize> = i.iter().copied().filter(|&a| a <= 2).collect();
                    let iy: Vec<usize> = i.iter().filter(|&&a| a >= 4).map(|a| a - 3).collect();
                    let expected =
                        is_i_spherical(&l, u, &ix).unwrap() && is_i_spherical(&r, v, &iy).unwrap();
                    assert_eq!(is_i_spherical(&s, &w, &i).unwrap(), expected, "{big}");
                }
            }
        }
    }
}

#[test]
fn diagram_embeddings() {
    // (small, big, image of node k)
    let cases: [(&str, &str, &[usize]); 4] = [
        ("A3", "A5", &[2, 3, 4]),
        ("A3", "D5", &[1, 2, 3]),
        ("B2", "B4", &[3, 4]),
        ("A4", "E6", &[1, 3, 4, 5]),
    ];
    for (small, big, phi) in cases {
        let (s, b) = (sys(small), sys(big));
        for w in EnumeratedGroup::new(&s).unwrap().elements() {
            let image = evaluate(
                &b,
                &Word::new(s.reduced_word(w).iter().map(|&a| phi[a - 1]).collect()),
            )
            .unwrap();
            let mut j: Vec<usize> = s.left_descents(w).iter().map(|&a| phi[a - 1]).collect();
            j.sort_unstable();
            assert_eq!(j, b.left_descents(&image));
            for i in subsets(&s.left_descents(w)) {
                if is_i_spherical(&s, w, &i).unwrap() {
                    let pi: Vec<usize> = i.iter().map(|&a| phi[a - 1]).collect();
                    assert!(is_i_spherical(&b, &image, &pi).unwrap(), "{small} in {big}");
                }
            }
        }
    }
}

#[test]
fn empty_subset_means_distinct_letters() {
    for t in ["B3", "D4", "F4"] {
        let s = sys(t);
        for w in EnumeratedGroup::new(&s).unwrap().elements() {
            let distinct = reduced_words(&s, w).any(|r| {
                let mut l = r.into_letters();
                l.sort_unstable();
                l.windows(2).all(|x| x[0] != x[1])
            });
            assert_eq!(is_i_spherical(&s, w, &[]).unwrap(), distinct, "{t}");
        }
    }
}

#[test]
fn identity_and_longest_are_maximally_spherical() {
    for t in ["A6", "B4", "D5", "E6", "F4", "E8", "I2(9)"] {
        let s = sys(t);
        assert!(is_maximally_spherical(&s, &s.identity()), "{t}");
        assert!(is_maximally_spherical(&s, &s.longest_element()), "{t}");
    }
}

#[test]
fn inverse_is_not_invariant() {
    let s = sys("A4");
    let w: Element = "24531"
        .parse::<coxsph::typea::Permutation>()
        .unwrap()
        .to_element(&s)
        .unwrap();
    assert!(!is_maximally_spherical(&s, &w));
    assert!(is_maximally_spherical(&s, &s.inverse(&w)));
}
