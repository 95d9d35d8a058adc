//! Masks over a fixed reduced word and Deodhar's defect statistic.
//!
//! A mask `σ` selects a subexpression of `a = s_{i_1} ... s_{i_r}`. Position
//! `j` (1-based) is a defect when right-multiplying the product of the
//! masked prefix `σ[j-1]` by `s_{i_j}` shortens it. Summing `q^{#defects}`
//! over the masks with product `x` gives `P_x(a)`.

mod graph;
mod tables;

pub use graph::{critical_zeros, defect_graph, is_forest, CriticalZeros, DefectGraph};
pub use tables::{
    degree_bound_holds, deodhar_poly, deodhar_table, deodhar_table_naive, deodhar_table_parallel,
    recursion_check, MAX_WORD_LEN,
};

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::perm::{Permutation, Word};

/// A 0/1 sequence aligned with a word.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Mask {
    bits: Vec<bool>,
}

impl Mask {
    pub fn new(bits: Vec<bool>) -> Self {
        Self { bits }
    }

    pub fn ones(r: usize) -> Self {
        Self {
            bits: vec![true; r],
        }
    }

    /// Bit `k` of `index` becomes `σ_{k+1}`.
    pub fn from_index(index: u64, r: usize) -> Self {
        Self {
            bits: (0..r).map(|k| index >> k & 1 == 1).collect(),
        }
    }

    /// Ones everywhere except the given 1-based positions.
    pub fn zeros_at(r: usize, zeros: &[usize]) -> Self {
        let mut m = Self::ones(r);
        for &z in zeros {
            m.bits[z - 1] = false;
        }
        m
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    /// `σ_j` for 1-based `j`.
    pub fn bit(&self, j: usize) -> bool {
        self.bits[j - 1]
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    pub fn zero_count(&self) -> usize {
        self.bits.iter().filter(|&&b| !b).count()
    }

    /// Product of the selected letters.
    pub fn product(&self, a: &Word) -> Result<Permutation> {
        self.check_len(a)?;
        let mut x = Permutation::identity(a.n());
        for (&l, &b) in a.letters().iter().zip(&self.bits) {
            if b {
                x.mul_gen_right_in_place(l as usize);
            }
        }
        Ok(x)
    }

    fn check_len(&self, a: &Word) -> Result<()> {
        if self.len() == a.len() {
            Ok(())
        } else {
            Err(Error::MaskLength {
                mask: self.len(),
                word: a.len(),
            })
        }
    }
}

impl fmt::Display for Mask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (k, &b) in self.bits.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            f.write_str(if b { "1" } else { "0" })?;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for Mask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Mask{self}")
    }
}

/// Accepts `(1,0,1)`, `1,0,1`, `1 0 1` or `101`.
impl FromStr for Mask {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut bits = Vec::new();
        for (pos, c) in s.char_indices() {
            match c {
                '0' => bits.push(false),
                '1' => bits.push(true),
                '(' | ')' | ',' | ' ' | '\t' => {}
                other => {
                    return Err(Error::Parse {
                        pos,
                        msg: format!("unexpected {other:?} in mask"),
                    })
                }
            }
        }
        Ok(Mask { bits })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DefectRecord {
    pub defects: BTreeSet<usize>,
    /// Defects whose mask bit is 0.
    pub zero_defects: BTreeSet<usize>,
    /// Defects whose mask bit is 1.
    pub one_defects: BTreeSet<usize>,
    /// `π(w^σ)`.
    pub product: Permutation,
}

pub fn defect_set(a: &Word, m: &Mask) -> Result<DefectRecord> {
    m.check_len(a)?;
    let mut x = Permutation::identity(a.n());
    let mut rec = DefectRecord {
        defects: BTreeSet::new(),
        zero_defects: BTreeSet::new(),
        one_defects: BTreeSet::new(),
        product: x.clone(),
    };
    for (j, (&l, &b)) in a.letters().iter().zip(m.bits()).enumerate() {
        let l = l as usize;
        if x.has_right_descent(l) {
            rec.defects.insert(j + 1);
            if b {
                rec.one_defects.insert(j + 1);
            } else {
                rec.zero_defects.insert(j + 1);
            }
        }
        if b {
            x.mul_gen_right_in_place(l);
        }
    }
    rec.product = x;
    Ok(rec)
}

/// An exact half-integer `numerator / 2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct HalfInt(pub i64);

impl HalfInt {
    pub fn is_negative(self) -> bool {
        self.0 < 0
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 % 2 == 0 {
            write!(f, "{}", self.0 / 2)
        } else {
            write!(f, "{}/2", self.0)
        }
    }
}

/// `(l(w) - l(π(w^σ)) - 1)/2 - |D(σ)|` for a reduced word of `w`.
pub fn delta(a: &Word, m: &Mask) -> Result<HalfInt> {
    a.require_reduced()?;
    let rec = defect_set(a, m)?;
    let top = a.len() as i64;
    let below = rec.product.length() as i64;
    if below == top {
        return Err(Error::DeltaUndefined);
    }
    Ok(HalfInt(top - below - 1 - 2 * rec.defects.len() as i64))
}

/// `#zeros(σ) >= 2 |D⁰(σ)| + 1`, the zero-count form of `Δ_σ >= 0`.
pub fn zero_count_condition(m: &Mask, rec: &DefectRecord) -> bool {
    m.zero_count() > 2 * rec.zero_defects.len()
}
