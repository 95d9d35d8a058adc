//! Symmetric-group arithmetic.
//!
//! Permutations are stored in one-line notation with 1-based values, and the
//! generator `s_i` is the adjacent transposition `(i, i+1)`. Products are
//! composed as functions, so right multiplication by `s_i` swaps the entries
//! at positions `i` and `i+1` while left multiplication swaps the values.

mod bruhat;
pub(crate) mod pattern;
mod word;

pub use bruhat::{all_below, bruhat_leq};
pub use pattern::{
    contains_pattern, is_321_avoiding, is_321_hexagon_avoiding, is_hexagon_avoiding,
    HEXAGON_PATTERNS,
};
pub use word::{canonical_reduced_word, lateral_convexity_check, Word};

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A permutation of `1..=n` in one-line notation.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct Permutation {
    images: Vec<u8>,
}

impl Permutation {
    pub fn new(images: Vec<u8>) -> Result<Self> {
        let n = images.len();
        if n == 0 || n > u8::MAX as usize {
            return Err(Error::InvalidPermutation(images));
        }
        let mut seen = vec![false; n];
        for &v in &images {
            let v = v as usize;
            if v == 0 || v > n || seen[v - 1] {
                return Err(Error::InvalidPermutation(images));
            }
            seen[v - 1] = true;
        }
        Ok(Self { images })
    }

    pub(crate) fn from_images_unchecked(images: Vec<u8>) -> Self {
        debug_assert!(Self::new(images.clone()).is_ok());
        Self { images }
    }

    pub fn identity(n: usize) -> Self {
        assert!(n >= 1 && n <= u8::MAX as usize, "rank {n} out of range");
        Self {
            images: (1..=n as u8).collect(),
        }
    }

    /// The adjacent transposition `s_i` in `S_n`.
    pub fn generator(i: usize, n: usize) -> Result<Self> {
        if i == 0 || i >= n {
            return Err(Error::LetterOutOfRange { letter: i, n });
        }
        let mut p = Self::identity(n);
        p.images.swap(i - 1, i);
        Ok(p)
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[u8] {
        &self.images
    }

    /// `w(i)` for 1-based `i`.
    pub fn at(&self, i: usize) -> usize {
        self.images[i - 1] as usize
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(k, &v)| v as usize == k + 1)
    }

    /// `(self ∘ other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.n() != other.n() {
            return Err(Error::RankMismatch {
                left: self.n(),
                right: other.n(),
            });
        }
        Ok(Permutation {
            images: other
                .images
                .iter()
                .map(|&i| self.images[i as usize - 1])
                .collect(),
        })
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u8; self.n()];
        for (k, &v) in self.images.iter().enumerate() {
            inv[v as usize - 1] = (k + 1) as u8;
        }
        Permutation { images: inv }
    }

    /// Coxeter length, i.e. the number of inversions.
    pub fn length(&self) -> usize {
        let w = &self.images;
        let mut inv = 0;
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                if w[i] > w[j] {
                    inv += 1;
                }
            }
        }
        inv
    }

    /// True iff `l(w s_i) < l(w)`.
    #[inline]
    pub fn has_right_descent(&self, i: usize) -> bool {
        self.images[i - 1] > self.images[i]
    }

    /// True iff `l(s_i w) < l(w)`.
    pub fn has_left_descent(&self, i: usize) -> bool {
        self.inverse().has_right_descent(i)
    }

    pub fn right_descents(&self) -> impl Iterator<Item = usize> + '_ {
        (1..self.n()).filter(move |&i| self.has_right_descent(i))
    }

    /// `w s_i`, in place.
    #[inline]
    pub fn mul_gen_right_in_place(&mut self, i: usize) {
        self.images.swap(i - 1, i);
    }

    pub fn mul_gen_right(&self, i: usize) -> Permutation {
        let mut p = self.clone();
        p.mul_gen_right_in_place(i);
        p
    }

    /// `s_i w`.
    pub fn mul_gen_left(&self, i: usize) -> Permutation {
        let images = self
            .images
            .iter()
            .map(|&v| match v as usize {
                x if x == i => v + 1,
                x if x == i + 1 => v - 1,
                _ => v,
            })
            .collect();
        Permutation { images }
    }

    /// Embeds into `S_m` for `m >= n` by appending fixed points.
    pub fn extend_to(&self, m: usize) -> Result<Permutation> {
        if m < self.n() {
            return Err(Error::RankMismatch {
                left: self.n(),
                right: m,
            });
        }
        let mut images = self.images.clone();
        images.extend((self.n() + 1..=m).map(|v| v as u8));
        Ok(Permutation { images })
    }

    /// Parses one-line notation, or `e` for the identity of rank `n`.
    ///
    /// When `n` is given, shorter inputs are padded with fixed points.
    pub fn parse_with_rank(s: &str, n: Option<usize>) -> Result<Permutation> {
        let t = s.trim();
        if t == "e" {
            return Ok(Permutation::identity(n.unwrap_or(1)));
        }
        let p: Permutation = t.parse()?;
        match n {
            Some(m) => p.extend_to(m),
            None => Ok(p),
        }
    }

    /// Sort key used for every table this crate prints: length, then
    /// lexicographic one-line notation.
    pub fn table_key(&self) -> (usize, Vec<u8>) {
        (self.length(), self.images.clone())
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, v) in self.images.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().trim_start_matches('[').trim_end_matches(']');
        let mut images = Vec::new();
        let mut offset = 0;
        for tok in t.split(',') {
            let trimmed = tok.trim();
            let v: u8 = trimmed.parse().map_err(|_| Error::Parse {
                pos: offset,
                msg: format!("expected a positive integer, found {trimmed:?}"),
            })?;
            images.push(v);
            offset += tok.len() + 1;
        }
        Permutation::new(images)
    }
}

impl TryFrom<String> for Permutation {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<Permutation> for String {
    fn from(p: Permutation) -> String {
        p.to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn compose_examples() {
        let w = p("3,4,5,1,2");
        assert_eq!(Permutation::identity(5).compose(&w).unwrap(), w);
        let s1 = Permutation::generator(1, 2).unwrap();
        assert!(s1.compose(&s1).unwrap().is_identity());
        assert_eq!(p("2,1,3").compose(&p("1,3,2")).unwrap(), p("2,3,1"));
        assert!(matches!(
            p("2,1").compose(&p("1,2,3")),
            Err(Error::RankMismatch { .. })
        ));
    }

    #[test]
    fn length_examples() {
        assert_eq!(Permutation::identity(4).length(), 0);
        assert_eq!(p("3,4,5,1,2").length(), 6);
        assert_eq!(p("3,2,1").length(), 3);
    }

    #[test]
    fn generator_multiplication_changes_length_by_one() {
        let w = p("3,1,4,2,5");
        for d in 1..5 {
            let l = w.length();
            let ws = w.mul_gen_right(d);
            let expected = if w.has_right_descent(d) { l - 1 } else { l + 1 };
            assert_eq!(ws.length(), expected);
            assert_eq!(
                ws,
                w.compose(&Permutation::generator(d, 5).unwrap()).unwrap()
            );
            let sw = w.mul_gen_left(d);
            assert_eq!(
                sw,
                Permutation::generator(d, 5).unwrap().compose(&w).unwrap()
            );
        }
    }

    #[test]
    fn parse_rejects_non_bijections() {
        assert!("1,1,2".parse::<Permutation>().is_err());
        assert!("0,1".parse::<Permutation>().is_err());
        match "1,x,3".parse::<Permutation>() {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 2),
            other => panic!("unexpected {other:?}"),
        }
        assert_eq!(
            Permutation::parse_with_rank("e", Some(4)).unwrap(),
            Permutation::identity(4)
        );
        assert_eq!(
            Permutation::parse_with_rank("2,1", Some(3)).unwrap(),
            p("2,1,3")
        );
    }

    #[test]
    fn display_round_trip() {
        let w = p("4,6,7,1,8,2,3,5");
        assert_eq!(w.to_string(), "4,6,7,1,8,2,3,5");
        assert_eq!(w.to_string().parse::<Permutation>().unwrap(), w);
    }
}
