//! Randomised cross-checks between independent implementations.

use std::collections::BTreeSet;

use klheap::deodhar::{deodhar_table_naive, deodhar_table_parallel};
use klheap::enumerate::all_permutations;
use klheap::perm::{all_below, bruhat_leq};
use klheap::{canonical_reduced_word, deodhar_table, is_321_hexagon_avoiding, Permutation, Word};
use proptest::prelude::*;

fn perm_of(n: usize) -> impl Strategy<Value = Permutation> {
    let all = all_permutations(n);
    (0..all.len()).prop_map(move |i| all[i].clone())
}

fn subword_products(a: &Word) -> BTreeSet<Permutation> {
    (0u64..1 << a.len())
        .map(|bits| {
            let mut x = Permutation::identity(a.n());
            for (j, &l) in a.letters().iter().enumerate() {
                if bits >> j & 1 == 1 {
                    x = x.mul_gen_right(l as usize);
                }
            }
            x
        })
        .collect()
}

// A reduced word of `w` chosen by `picks`, which select among right descents.
fn some_reduced_word(w: &Permutation, picks: &[usize]) -> Word {
    let mut cur = w.clone();
    let mut letters = Vec::new();
    let mut k = 0;
    while !cur.is_identity() {
        let ds: Vec<usize> = cur.right_descents().collect();
        let d = ds[picks.get(k).copied().unwrap_or(0) % ds.len()];
        k += 1;
        letters.push(d as u8);
        cur = cur.mul_gen_right(d);
    }
    letters.reverse();
    Word::new(letters, w.n()).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rank_matrix_order_matches_subwords(w in perm_of(5)) {
        let below = subword_products(&canonical_reduced_word(&w));
        prop_assert_eq!(&below, &all_below(&w));
        for x in all_permutations(5) {
            prop_assert_eq!(bruhat_leq(&x, &w).unwrap(), below.contains(&x));
        }
    }

    #[test]
    fn table_strategies_agree(w in perm_of(6), picks in prop::collection::vec(0usize..6, 15)) {
        let a = some_reduced_word(&w, &picks);
        let t = deodhar_table(&a).unwrap();
        prop_assert_eq!(&t, &deodhar_table_naive(&a).unwrap());
        prop_assert_eq!(&t, &deodhar_table_parallel(&a, 3).unwrap());
    }

    #[test]
    fn mask_sum_is_word_independent_when_hexagon_avoiding(
        w in perm_of(6),
        p in prop::collection::vec(0usize..6, 15),
        q in prop::collection::vec(0usize..6, 15),
    ) {
        prop_assume!(is_321_hexagon_avoiding(&w));
        let a = some_reduced_word(&w, &p);
        let b = some_reduced_word(&w, &q);
        prop_assert_eq!(deodhar_table(&a).unwrap(), deodhar_table(&b).unwrap());
    }

    #[test]
    fn group_laws(x in perm_of(6), y in perm_of(6)) {
        let xy = x.compose(&y).unwrap();
        prop_assert_eq!(xy.compose(&y.inverse()).unwrap(), x.clone());
        prop_assert_eq!(x.inverse().length(), x.length());
        prop_assert_eq!(x.to_string().parse::<Permutation>().unwrap(), x.clone());
        prop_assert_eq!(canonical_reduced_word(&x).apply(), x.clone());
        prop_assert_eq!(canonical_reduced_word(&x).len(), x.length());
    }
}
