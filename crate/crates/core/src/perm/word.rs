use std::fmt;

use serde::{Deserialize, Serialize};

use super::{is_321_avoiding, Permutation};
use crate::error::{Error, Result};

/// A product `s_{i_1} ... s_{i_r}` of adjacent transpositions in `S_n`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Word {
    letters: Vec<u8>,
    n: usize,
}

impl Word {
    pub fn new(letters: Vec<u8>, n: usize) -> Result<Self> {
        if n == 0 || n > u8::MAX as usize {
            return Err(Error::LetterOutOfRange { letter: 0, n });
        }
        if let Some(&bad) = letters.iter().find(|&&l| l == 0 || l as usize >= n) {
            return Err(Error::LetterOutOfRange {
                letter: bad as usize,
                n,
            });
        }
        Ok(Self { letters, n })
    }

    /// Builds a word in the smallest symmetric group containing every letter.
    pub fn from_letters(letters: Vec<u8>) -> Result<Self> {
        let n = letters.iter().copied().max().map_or(1, |m| m as usize + 1);
        Self::new(letters, n)
    }

    pub fn empty(n: usize) -> Self {
        Self {
            letters: Vec::new(),
            n,
        }
    }

    /// Parses space-separated generator indices such as `"2 1 3 2 4 3"`.
    pub fn parse(s: &str, n: Option<usize>) -> Result<Self> {
        let mut letters = Vec::new();
        let mut pos = 0;
        for tok in s.split(|c: char| c.is_whitespace() || c == ',') {
            if !tok.is_empty() {
                let v: u8 = tok.parse().map_err(|_| Error::Parse {
                    pos,
                    msg: format!("expected a generator index, found {tok:?}"),
                })?;
                letters.push(v);
            }
            pos += tok.len() + 1;
        }
        match n {
            Some(n) => Self::new(letters, n),
            None => Self::from_letters(letters),
        }
    }

    pub fn letters(&self) -> &[u8] {
        &self.letters
    }

    pub fn letter(&self, j: usize) -> usize {
        self.letters[j] as usize
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Same letters, viewed in `S_m`.
    pub fn with_rank(&self, m: usize) -> Result<Self> {
        Self::new(self.letters.clone(), m)
    }

    /// The word with its final letter removed.
    pub fn truncated(&self) -> Word {
        let mut letters = self.letters.clone();
        letters.pop();
        Word { letters, n: self.n }
    }

    /// The permutation `s_{i_1} ... s_{i_r}`.
    pub fn apply(&self) -> Permutation {
        let mut p = Permutation::identity(self.n);
        for &l in &self.letters {
            p.mul_gen_right_in_place(l as usize);
        }
        p
    }

    pub fn is_reduced(&self) -> bool {
        let mut p = Permutation::identity(self.n);
        for &l in &self.letters {
            if p.has_right_descent(l as usize) {
                return false;
            }
            p.mul_gen_right_in_place(l as usize);
        }
        true
    }

    pub(crate) fn require_reduced(&self) -> Result<()> {
        if self.is_reduced() {
            Ok(())
        } else {
            Err(Error::NotReduced)
        }
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, l) in self.letters.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word[{self}] in S_{}", self.n)
    }
}

/// Reduced word for `p`: strip the smallest right descent until the identity
/// is reached, then reverse the collected letters.
pub fn canonical_reduced_word(p: &Permutation) -> Word {
    let mut rest = p.clone();
    let mut stripped = Vec::with_capacity(p.length());
    loop {
        let Some(d) = rest.right_descents().next() else {
            break;
        };
        rest.mul_gen_right_in_place(d);
        stripped.push(d as u8);
    }
    stripped.reverse();
    Word {
        letters: stripped,
        n: p.n(),
    }
}

/// Every two occurrences of a letter `i` are separated by both an `i-1` and
/// an `i+1`.
pub fn lateral_convexity_check(a: &Word) -> Result<bool> {
    a.require_reduced()?;
    let letters = a.letters();
    for (j, &x) in letters.iter().enumerate() {
        let Some(k) = letters[j + 1..].iter().position(|&y| y == x) else {
            continue;
        };
        let between = &letters[j + 1..j + 1 + k];
        let has_lower = x > 1 && between.contains(&(x - 1));
        let has_upper = between.contains(&(x + 1));
        if !(has_lower && has_upper) {
            return Ok(false);
        }
    }
    Ok(true)
}

impl Word {
    /// Rejects words that are not reduced or whose product contains 321.
    pub(crate) fn require_fully_commutative(&self) -> Result<()> {
        self.require_reduced()?;
        if is_321_avoiding(&self.apply()) {
            Ok(())
        } else {
            Err(Error::Not321Avoiding)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        Word::parse(s, None).unwrap()
    }

    #[test]
    fn apply_examples() {
        assert_eq!(w("2 1 3 2 4 3").apply().to_string(), "3,4,5,1,2");
        assert!(Word::empty(4).apply().is_identity());
        assert_eq!(
            w("3 2 1 5 4 3 2 6 5 4 3 7 6 5").apply().to_string(),
            "4,6,7,1,8,2,3,5"
        );
    }

    #[test]
    fn reducedness() {
        assert!(w("1 2 1").is_reduced());
        assert!(!w("1 1").is_reduced());
        assert!(w("2 1 3 2 4 3").is_reduced());
    }

    #[test]
    fn canonical_words() {
        let e = Permutation::identity(3);
        assert!(canonical_reduced_word(&e).is_empty());
        let s1: Permutation = "2,1".parse().unwrap();
        assert_eq!(canonical_reduced_word(&s1).letters(), &[1]);
        let x: Permutation = "3,4,5,1,2".parse().unwrap();
        let a = canonical_reduced_word(&x);
        assert_eq!(a.len(), 6);
        assert!(a.is_reduced());
        assert_eq!(a.apply(), x);
        // fixed by the smallest-descent stripping rule
        assert_eq!(a.to_string(), "2 3 4 1 2 3");
    }

    #[test]
    fn lateral_convexity_examples() {
        assert!(!lateral_convexity_check(&w("1 2 1")).unwrap());
        assert!(lateral_convexity_check(&w("2 1 3 2 4 3")).unwrap());
        assert!(lateral_convexity_check(&w("3 2 1 4 3 2 5 4 3")).unwrap());
        assert_eq!(lateral_convexity_check(&w("1 1")), Err(Error::NotReduced));
    }

    #[test]
    fn parse_errors_carry_position() {
        assert!(matches!(
            Word::parse("1 2 x", None),
            Err(Error::Parse { pos: 4, .. })
        ));
        assert!(matches!(
            Word::parse("1 5", Some(4)),
            Err(Error::LetterOutOfRange { letter: 5, n: 4 })
        ));
        assert_eq!(Word::parse("", None).unwrap().n(), 1);
    }
}
