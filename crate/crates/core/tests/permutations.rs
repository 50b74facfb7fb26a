use std::collections::BTreeSet;

use clanhess::perm::{bruhat_leq, phi, Permutation, ReducedWord};
use proptest::prelude::*;

fn arb_perm(max_n: usize) -> impl Strategy<Value = Permutation> {
    (1..=max_n).prop_flat_map(perm_of_degree)
}

fn perm_of_degree(n: usize) -> impl Strategy<Value = Permutation> {
    Just((1..=n).collect::<Vec<usize>>())
        .prop_shuffle()
        .prop_map(|v| Permutation::new(v).unwrap())
}

fn perm_pair(max_n: usize) -> impl Strategy<Value = (Permutation, Permutation)> {
    (1..=max_n).prop_flat_map(|n| (perm_of_degree(n), perm_of_degree(n)))
}

fn inversions(w: &Permutation) -> usize {
    let v = w.images();
    (0..v.len())
        .flat_map(|i| (i + 1..v.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| v[i] > v[j])
        .count()
}

// Bruhat order by the subword property: x ≤ y iff some subword of a reduced
// word of y multiplies to x.
fn subword_leq(x: &Permutation, y: &Permutation) -> bool {
    let n = y.degree();
    let word = y.reduced_word();
    let letters = word.letters();
    let mut reached = BTreeSet::from([Permutation::identity(n)]);
    for &s in letters {
        let next: Vec<Permutation> = reached.iter().map(|u| u.right_mul_simple(s)).collect();
        reached.extend(next);
    }
    reached.contains(x)
}

#[test]
fn bruhat_matches_subword_property_on_s4() {
    let all: Vec<Permutation> = Permutation::all(4).collect();
    for x in &all {
        for y in &all {
            assert_eq!(bruhat_leq(x, y), subword_leq(x, y), "{x} {y}");
        }
    }
}

#[test]
fn longest_element_counts() {
    for n in 1..=6 {
        let w0 = Permutation::longest(n);
        assert_eq!(w0.length(), n * (n - 1) / 2);
        assert_eq!(Permutation::all(n).filter(|w| w.length() == w0.length()).count(), 1);
    }
}

proptest! {
    #[test]
    fn length_counts_inversions(w in arb_perm(8)) {
        prop_assert_eq!(w.length(), inversions(&w));
        prop_assert_eq!(w.inverse().length(), w.length());
    }

    #[test]
    fn inverse_and_identity(w in arb_perm(8)) {
        let n = w.degree();
        prop_assert!(w.compose(&w.inverse()).is_identity());
        prop_assert_eq!(w.compose(&Permutation::identity(n)), w.clone());
    }

    #[test]
    fn code_round_trip(w in arb_perm(8)) {
        let back = Permutation::from_code(&w.code()).unwrap();
        prop_assert_eq!(back.trimmed(), w.trimmed());
        prop_assert_eq!(w.code().iter().sum::<usize>(), w.length());
    }

    #[test]
    fn reduced_word_multiplies_back(w in arb_perm(7)) {
        let word = w.reduced_word();
        prop_assert_eq!(word.len(), w.length());
        prop_assert_eq!(Permutation::from_word(&word, w.degree()).unwrap(), w.clone());
        prop_assert!(word.is_reduced_word_for(&w));
        let parsed: ReducedWord = word.to_string().parse().unwrap();
        prop_assert_eq!(parsed, word);
    }

    #[test]
    fn descents_shorten((w, i) in (2usize..=7).prop_flat_map(|n| (perm_of_degree(n), 1..n))) {
        let left = w.left_mul_simple(i);
        let right = w.right_mul_simple(i);
        prop_assert_eq!(left.clone(), Permutation::simple(i, w.degree()).unwrap().compose(&w));
        if w.is_left_descent(i) {
            prop_assert_eq!(left.length() + 1, w.length());
        } else {
            prop_assert_eq!(left.length(), w.length() + 1);
        }
        if w.is_right_descent(i) {
            prop_assert_eq!(right.length() + 1, w.length());
        } else {
            prop_assert_eq!(right.length(), w.length() + 1);
        }
    }

    #[test]
    fn text_and_json_round_trip(w in arb_perm(9)) {
        let text = w.to_string();
        prop_assert_eq!(text.parse::<Permutation>().unwrap(), w.clone());
        let json = serde_json::to_string(&w).unwrap();
        prop_assert_eq!(serde_json::from_str::<Permutation>(&json).unwrap(), w);
    }

    #[test]
    fn phi_is_length_preserving_anti_homomorphism((u, v) in perm_pair(5), extra in 0usize..3) {
        let q = v.degree();
        let n = 2 * q + extra;
        let pv = phi(&v, n).unwrap();
        prop_assert_eq!(pv.length(), v.length());
        prop_assert_eq!(phi(&u.compose(&v), n).unwrap(), pv.compose(&phi(&u, n).unwrap()));
    }

    #[test]
    fn pattern_avoidance_by_brute_force(w in arb_perm(7)) {
        let v = w.images();
        let has = |a: usize, b: usize, c: usize| {
            (0..v.len()).any(|i| (i + 1..v.len()).any(|j| (j + 1..v.len()).any(|k| {
                let t = [v[i], v[j], v[k]];
                let rank = |x: usize| t.iter().filter(|&&y| y < x).count() + 1;
                (rank(t[0]), rank(t[1]), rank(t[2])) == (a, b, c)
            })))
        };
        prop_assert_eq!(w.avoids_231(), !has(2, 3, 1));
        prop_assert_eq!(w.avoids_312(), !has(3, 1, 2));
    }
}
