//! Exhaustive generation of `S_n` and of its 321-avoiding elements.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::perm::pattern::{is_321_avoiding_raw, is_hexagon_avoiding_raw};
use crate::perm::Permutation;

/// Largest `n` counted without an explicit override.
pub const MAX_ENUM_N: usize = 13;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct EnumRow {
    pub n: usize,
    pub count_321: u64,
    pub count_321_hexagon: u64,
}

/// All of `S_n` in lexicographic order of one-line notation. Empty for
/// `n = 0`, since permutations have rank at least 1.
pub fn all_permutations(n: usize) -> Vec<Permutation> {
    if n == 0 {
        return Vec::new();
    }
    let mut cur: Vec<u8> = (1..=n as u8).collect();
    let mut out = vec![Permutation::from_images_unchecked(cur.clone())];
    while next_permutation(&mut cur) {
        out.push(Permutation::from_images_unchecked(cur.clone()));
    }
    out
}

fn next_permutation(a: &mut [u8]) -> bool {
    let Some(i) = (1..a.len()).rev().find(|&i| a[i - 1] < a[i]) else {
        return false;
    };
    let j = (i..a.len())
        .rev()
        .find(|&j| a[j] > a[i - 1])
        .expect("pivot exists");
    a.swap(i - 1, j);
    a[i..].reverse();
    true
}

pub fn catalan(n: usize) -> u64 {
    let mut c = 1u64;
    for k in 0..n as u64 {
        c = c * 2 * (2 * k + 1) / (k + 2);
    }
    c
}

// Extends `prefix` to every 321-avoiding permutation of 1..n. A new entry
// is either a new left-to-right maximum or the smallest unused value; the
// latter must also exceed the last non-maximum placed.
fn extend_321<F: FnMut(&[u8])>(
    n: usize,
    prefix: &mut Vec<u8>,
    used: &mut Vec<bool>,
    max: u8,
    visit: &mut F,
) {
    if prefix.len() == n {
        visit(prefix);
        return;
    }
    let smallest = (1..=n as u8)
        .find(|&v| !used[v as usize])
        .expect("unused value");
    if smallest < max {
        place(n, prefix, used, smallest, max, visit);
    }
    for v in max + 1..=n as u8 {
        place(n, prefix, used, v, v, visit);
    }
}

fn place<F: FnMut(&[u8])>(
    n: usize,
    prefix: &mut Vec<u8>,
    used: &mut Vec<bool>,
    v: u8,
    max: u8,
    visit: &mut F,
) {
    prefix.push(v);
    used[v as usize] = true;
    extend_321(n, prefix, used, max, visit);
    used[v as usize] = false;
    prefix.pop();
}

/// Calls `visit` on every 321-avoiding permutation of `S_n` whose one-line
/// notation starts with `prefix`. The prefix itself must be 321-avoiding.
pub fn for_each_321_avoiding<F: FnMut(&[u8])>(n: usize, prefix: &[u8], mut visit: F) {
    if !is_321_avoiding_raw(prefix) {
        return;
    }
    let mut used = vec![false; n + 1];
    for &v in prefix {
        used[v as usize] = true;
    }
    // unused values below the running maximum become later non-maxima, so
    // they must all exceed the last non-maximum of the prefix
    let max = prefix.iter().copied().max().unwrap_or(0);
    let mut running = 0;
    let mut last_small = 0;
    for &v in prefix {
        if v > running {
            running = v;
        } else {
            last_small = v;
        }
    }
    if (1..last_small).any(|v| !used[v as usize]) {
        return;
    }
    let mut buf = prefix.to_vec();
    extend_321(n, &mut buf, &mut used, max, &mut visit);
}

pub fn all_321_avoiding(n: usize) -> Vec<Permutation> {
    let mut out = Vec::new();
    if n == 0 {
        return out;
    }
    for_each_321_avoiding(n, &[], |p| {
        out.push(Permutation::from_images_unchecked(p.to_vec()))
    });
    out
}

fn prefixes(n: usize, len: usize) -> Vec<Vec<u8>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len.min(n) {
        let mut next = Vec::new();
        for p in &out {
            for v in 1..=n as u8 {
                if !p.contains(&v) {
                    let mut q = p.clone();
                    q.push(v);
                    if is_321_avoiding_raw(&q) {
                        next.push(q);
                    }
                }
            }
        }
        out = next;
    }
    out
}

/// Counts 321-avoiding and 321-hexagon-avoiding elements of `S_n`, split by
/// two-entry prefixes across the current rayon pool.
pub fn count_row(n: usize) -> EnumRow {
    let (count_321, count_321_hexagon) = prefixes(n, 2)
        .into_par_iter()
        .map(|p| {
            let (mut a, mut b) = (0u64, 0u64);
            for_each_321_avoiding(n, &p, |w| {
                a += 1;
                b += u64::from(is_hexagon_avoiding_raw(w));
            });
            (a, b)
        })
        .reduce(|| (0, 0), |x, y| (x.0 + y.0, x.1 + y.1));
    EnumRow {
        n,
        count_321,
        count_321_hexagon,
    }
}

/// Rows for `n = 1..=n_max`. Refuses `n_max > MAX_ENUM_N` unless forced.
pub fn enum_table(n_max: usize, force: bool) -> Result<Vec<EnumRow>> {
    if n_max > MAX_ENUM_N && !force {
        return Err(Error::RankTooLarge {
            n: n_max,
            max: MAX_ENUM_N,
        });
    }
    Ok((1..=n_max).map(count_row).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::{is_321_avoiding, is_321_hexagon_avoiding};

    #[test]
    fn symmetric_group_sizes() {
        assert!(all_permutations(0).is_empty());
        assert_eq!(all_permutations(4).len(), 24);
        let s5 = all_permutations(5);
        assert_eq!(s5.len(), 120);
        assert!(s5.windows(2).all(|p| p[0] < p[1]));
    }

    #[test]
    fn generator_matches_filter() {
        assert!(all_321_avoiding(0).is_empty());
        for n in 1..=7 {
            let mut brute: Vec<_> = all_permutations(n)
                .into_iter()
                .filter(is_321_avoiding)
                .collect();
            let mut fast = all_321_avoiding(n);
            brute.sort();
            fast.sort();
            assert_eq!(fast, brute, "n = {n}");
            assert_eq!(fast.len() as u64, catalan(n));
        }
    }

    #[test]
    fn hexagon_counts_against_brute_force() {
        let brute = all_permutations(8)
            .iter()
            .filter(|w| is_321_hexagon_avoiding(w))
            .count() as u64;
        assert_eq!(count_row(8).count_321_hexagon, brute);
    }

    #[test]
    fn catalan_values() {
        let v: Vec<u64> = (0..8).map(catalan).collect();
        assert_eq!(v, [1, 1, 2, 5, 14, 42, 132, 429]);
    }

    #[test]
    fn guard() {
        assert_eq!(
            enum_table(14, false),
            Err(Error::RankTooLarge { n: 14, max: 13 })
        );
        assert_eq!(enum_table(3, false).unwrap().len(), 3);
    }
}
