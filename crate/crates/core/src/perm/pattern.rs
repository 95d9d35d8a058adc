use super::Permutation;
use crate::error::{Error, Result};

/// The four length-8 patterns whose avoidance (together with 321) defines
/// the 321-hexagon-avoiding permutations.
pub const HEXAGON_PATTERNS: [[u8; 8]; 4] = [
    [4, 6, 7, 1, 8, 2, 3, 5],
    [4, 6, 7, 8, 1, 2, 3, 5],
    [5, 6, 7, 1, 8, 2, 3, 4],
    [5, 6, 7, 8, 1, 2, 3, 4],
];

/// True iff some subsequence of `w` is order-isomorphic to `p`.
pub fn contains_pattern(w: &Permutation, p: &Permutation) -> Result<bool> {
    if p.n() > w.n() {
        return Err(Error::PatternTooLong {
            pattern: p.n(),
            host: w.n(),
        });
    }
    Ok(contains_raw(w.images(), p.images()))
}

pub(crate) fn contains_raw(host: &[u8], pattern: &[u8]) -> bool {
    if pattern.len() > host.len() {
        return false;
    }
    let mut chosen = Vec::with_capacity(pattern.len());
    extend_match(host, pattern, 0, &mut chosen)
}

// `chosen` holds host values already matched to pattern[..chosen.len()].
fn extend_match(host: &[u8], pattern: &[u8], start: usize, chosen: &mut Vec<u8>) -> bool {
    let m = chosen.len();
    if m == pattern.len() {
        return true;
    }
    let remaining = pattern.len() - m;
    let target = pattern[m];
    // Bounds on the next host value implied by the pattern prefix.
    let mut lo = 0u8;
    let mut hi = u8::MAX;
    for (k, &pv) in pattern[..m].iter().enumerate() {
        if pv < target {
            lo = lo.max(chosen[k]);
        } else {
            hi = hi.min(chosen[k]);
        }
    }
    for pos in start..=host.len() - remaining {
        let v = host[pos];
        if v > lo && v < hi {
            chosen.push(v);
            if extend_match(host, pattern, pos + 1, chosen) {
                return true;
            }
            chosen.pop();
        }
    }
    false
}

/// Linear-time 321 test: the entries that are not left-to-right maxima must
/// increase.
pub fn is_321_avoiding(w: &Permutation) -> bool {
    is_321_avoiding_raw(w.images())
}

pub(crate) fn is_321_avoiding_raw(w: &[u8]) -> bool {
    let mut max_seen = 0u8;
    let mut last_small = 0u8;
    for &v in w {
        if v > max_seen {
            max_seen = v;
        } else {
            if v < last_small {
                return false;
            }
            last_small = v;
        }
    }
    true
}

/// Vacuously true for hosts shorter than 8.
pub fn is_hexagon_avoiding(w: &Permutation) -> bool {
    is_hexagon_avoiding_raw(w.images())
}

pub(crate) fn is_hexagon_avoiding_raw(w: &[u8]) -> bool {
    w.len() < 8 || HEXAGON_PATTERNS.iter().all(|p| !contains_raw(w, p))
}

pub fn is_321_hexagon_avoiding(w: &Permutation) -> bool {
    is_321_avoiding(w) && is_hexagon_avoiding(w)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn containment_examples() {
        assert!(contains_pattern(&p("3,2,1"), &p("3,2,1")).unwrap());
        assert!(!contains_pattern(&p("3,4,5,1,2"), &p("3,2,1")).unwrap());
        let hex = p("4,6,7,1,8,2,3,5");
        assert!(contains_pattern(&hex, &hex).unwrap());
        assert!(matches!(
            contains_pattern(&p("2,1"), &p("3,2,1")),
            Err(Error::PatternTooLong { .. })
        ));
    }

    #[test]
    fn hexagon_avoidance_examples() {
        assert!(is_321_hexagon_avoiding(&p("3,4,5,1,2")));
        assert!(!is_321_hexagon_avoiding(&p("4,6,7,1,8,2,3,5")));
        assert!(is_321_avoiding(&p("4,6,7,1,8,2,3,5")));
        assert!(!is_321_hexagon_avoiding(&p("3,2,1")));
    }

    #[test]
    fn linear_321_test_matches_pattern_search() {
        let pat = p("3,2,1");
        for n in 3..=7 {
            for w in crate::enumerate::all_permutations(n) {
                assert_eq!(is_321_avoiding(&w), !contains_pattern(&w, &pat).unwrap());
            }
        }
    }
}
