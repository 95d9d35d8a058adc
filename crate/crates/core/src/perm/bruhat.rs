use std::collections::{BTreeSet, HashSet};

use super::{canonical_reduced_word, Permutation};
use crate::error::{Error, Result};

/// Bruhat order by the rank-matrix criterion: `x <= w` iff for every prefix
/// `1..=i` and threshold `k`, `#{a <= i : x(a) >= k} <= #{a <= i : w(a) >= k}`.
pub fn bruhat_leq(x: &Permutation, w: &Permutation) -> Result<bool> {
    if x.n() != w.n() {
        return Err(Error::RankMismatch {
            left: x.n(),
            right: w.n(),
        });
    }
    let n = x.n();
    // cx[k] - cw[k] for thresholds k = 1..=n, kept as a running difference.
    let mut diff = vec![0i32; n + 2];
    for i in 0..n {
        let (a, b) = (x.images()[i] as usize, w.images()[i] as usize);
        for d in diff.iter_mut().take(a + 1).skip(1) {
            *d += 1;
        }
        for d in diff.iter_mut().take(b + 1).skip(1) {
            *d -= 1;
        }
        if diff[1..=n].iter().any(|&d| d > 0) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The Bruhat interval `[e, w]`, as the set of products of subwords of the
/// canonical reduced word.
pub fn all_below(w: &Permutation) -> BTreeSet<Permutation> {
    let word = canonical_reduced_word(w);
    let mut seen: HashSet<Permutation> = HashSet::new();
    seen.insert(Permutation::identity(w.n()));
    for &l in word.letters() {
        let extra: Vec<Permutation> = seen
            .iter()
            .map(|x| x.mul_gen_right(l as usize))
            .filter(|y| !seen.contains(y))
            .collect();
        seen.extend(extra);
    }
    seen.into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn bruhat_examples() {
        let w = p("3,4,5,1,2");
        assert!(bruhat_leq(&Permutation::identity(5), &w).unwrap());
        assert!(bruhat_leq(&p("2,1,3,4,5"), &w).unwrap());
        assert!(!bruhat_leq(&p("2,1"), &p("1,2")).unwrap());
        assert!(bruhat_leq(&w, &w).unwrap());
        assert!(bruhat_leq(&p("1,2"), &p("1,2,3")).is_err());
    }

    #[test]
    fn interval_examples() {
        assert_eq!(all_below(&Permutation::identity(3)).len(), 1);
        let s1 = p("2,1");
        let below: Vec<_> = all_below(&s1).into_iter().collect();
        assert_eq!(below, vec![p("1,2"), s1]);
    }

    #[test]
    fn interval_matches_subword_brute_force() {
        let w = p("3,4,5,1,2");
        let word = canonical_reduced_word(&w);
        let mut brute = BTreeSet::new();
        for mask in 0u32..(1 << word.len()) {
            let mut x = Permutation::identity(5);
            for (j, &l) in word.letters().iter().enumerate() {
                if mask >> j & 1 == 1 {
                    x.mul_gen_right_in_place(l as usize);
                }
            }
            brute.insert(x);
        }
        assert_eq!(all_below(&w), brute);
        // 4 + 10 + 32 elements across the three KL classes of this w
        assert_eq!(brute.len(), 46);
    }
}
