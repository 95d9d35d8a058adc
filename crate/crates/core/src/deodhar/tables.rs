use std::collections::HashMap;

use rayon::prelude::*;

use super::{defect_set, Mask};
use crate::error::{Error, Result};
use crate::perm::{Permutation, Word};
use crate::poly::{Degree, QPoly};
use crate::table::PolyTable;

/// Longest word whose `2^r` masks are enumerated.
pub const MAX_WORD_LEN: usize = 40;

/// Per-product histogram of defect counts.
type Histogram = HashMap<Vec<u8>, Vec<u64>>;

fn check_enumerable(a: &Word) -> Result<()> {
    if a.len() > MAX_WORD_LEN {
        return Err(Error::WordTooLong {
            len: a.len(),
            max: MAX_WORD_LEN,
        });
    }
    a.require_reduced()
}

// Depth-first walk of the mask tree. `x` holds the product of the masked
// prefix and is restored on the way back up, so each mask costs O(1)
// amortised work.
fn walk(letters: &[u8], depth: usize, x: &mut Vec<u8>, defects: usize, acc: &mut Histogram) {
    if depth == letters.len() {
        let counts = match acc.get_mut(x.as_slice()) {
            Some(c) => c,
            None => acc.entry(x.clone()).or_default(),
        };
        if counts.len() <= defects {
            counts.resize(defects + 1, 0);
        }
        counts[defects] += 1;
        return;
    }
    let l = letters[depth] as usize;
    let d = defects + usize::from(x[l - 1] > x[l]);
    walk(letters, depth + 1, x, d, acc);
    x.swap(l - 1, l);
    walk(letters, depth + 1, x, d, acc);
    x.swap(l - 1, l);
}

fn histogram_to_table(h: Histogram) -> PolyTable {
    h.into_iter()
        .map(|(x, counts)| {
            let coeffs = counts
                .into_iter()
                .map(|c| i64::try_from(c).expect("mask count fits in i64"))
                .collect();
            (
                Permutation::from_images_unchecked(x),
                QPoly::from_coeffs(coeffs),
            )
        })
        .collect()
}

/// `P_x(a)` for every `x` reached by some mask, in one pass over all masks.
pub fn deodhar_table(a: &Word) -> Result<PolyTable> {
    check_enumerable(a)?;
    let mut acc = Histogram::new();
    let mut x = Permutation::identity(a.n()).images().to_vec();
    walk(a.letters(), 0, &mut x, 0, &mut acc);
    Ok(histogram_to_table(acc))
}

/// Same table, with the masks split by their first `prefix_bits` bits
/// across the current rayon pool and the partial tables merged.
pub fn deodhar_table_parallel(a: &Word, prefix_bits: usize) -> Result<PolyTable> {
    check_enumerable(a)?;
    let letters = a.letters();
    let p = prefix_bits.min(letters.len());
    let partials: Vec<PolyTable> = (0u64..1 << p)
        .into_par_iter()
        .map(|prefix| {
            let mut x = Permutation::identity(a.n()).images().to_vec();
            let mut defects = 0;
            for (k, &l) in letters[..p].iter().enumerate() {
                let l = l as usize;
                defects += usize::from(x[l - 1] > x[l]);
                if prefix >> k & 1 == 1 {
                    x.swap(l - 1, l);
                }
            }
            let mut acc = Histogram::new();
            walk(letters, p, &mut x, defects, &mut acc);
            histogram_to_table(acc)
        })
        .collect();
    let mut out = PolyTable::new();
    for t in &partials {
        out.merge(t);
    }
    Ok(out)
}

/// Reference path: every mask evaluated from scratch.
pub fn deodhar_table_naive(a: &Word) -> Result<PolyTable> {
    check_enumerable(a)?;
    let r = a.len();
    let mut out = PolyTable::new();
    for index in 0u64..1 << r {
        let rec = defect_set(a, &Mask::from_index(index, r))?;
        out.add(rec.product, &QPoly::monomial(1, rec.defects.len()));
    }
    Ok(out)
}

/// `P_x(a) = sum over masks with product x of q^{|D(σ)|}`.
pub fn deodhar_poly(a: &Word, x: &Permutation) -> Result<QPoly> {
    if x.n() != a.n() {
        return Err(Error::RankMismatch {
            left: a.n(),
            right: x.n(),
        });
    }
    Ok(deodhar_table(a)?.get(x))
}

/// `deg P_x(a) <= (l(w) - l(x) - 1)/2` for every `x ≠ w` in the table, and
/// `P_w(a) = 1`.
pub fn degree_bound_holds(a: &Word, table: &PolyTable) -> bool {
    let w = a.apply();
    let lw = w.length() as i64;
    table.iter().all(|(x, p)| {
        if *x == w {
            return p.is_one();
        }
        match p.degree() {
            Degree::MinusInfinity => true,
            Degree::Finite(d) => 2 * (d as i64) < lw - x.length() as i64,
        }
    })
}

/// Checks `P_x(a) = q^{c} P_x(a/s) + q^{1-c} P_{xs}(a/s)` for every
/// relevant `x`, where `s` is the last letter of `a` and `c = 1` iff
/// `xs < x`.
pub fn recursion_check(a: &Word) -> Result<bool> {
    a.require_reduced()?;
    let Some(&s) = a.letters().last() else {
        return Ok(true);
    };
    let s = s as usize;
    let full = deodhar_table(a)?;
    let truncated = deodhar_table(&a.truncated())?;
    let mut candidates: Vec<Permutation> = full.keys().cloned().collect();
    for y in truncated.keys() {
        candidates.push(y.clone());
        candidates.push(y.mul_gen_right(s));
    }
    Ok(candidates.iter().all(|x| {
        let xs = x.mul_gen_right(s);
        let (c, c_bar) = if x.has_right_descent(s) {
            (1, 0)
        } else {
            (0, 1)
        };
        let rhs = &truncated.get(x).shift(c) + &truncated.get(&xs).shift(c_bar);
        full.get(x) == rhs
    }))
}
