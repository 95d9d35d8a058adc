//! Maximal singular loci of Schubert varieties `X_w`.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::deodhar::Mask;
use crate::error::{Error, Result};
use crate::heap::{build_heap, cone_contains, ConeDirection, HeapEmbedding};
use crate::hecke::KlStore;
use crate::perm::pattern::contains_raw;
use crate::perm::{bruhat_leq, canonical_reduced_word, is_321_hexagon_avoiding, Permutation, Word};

/// Three word positions forming the upper corners of a heap diamond:
/// `pt(j) = pt(k) - (α, α)` and `pt(l) = pt(k) + (β, -β)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct SingularTriple {
    pub j: usize,
    pub k: usize,
    pub l: usize,
}

impl SingularTriple {
    pub fn mask(&self, r: usize) -> Mask {
        Mask::zeros_at(r, &[self.j, self.k, self.l])
    }
}

fn lower_cones_meet(h: &HeapEmbedding, j: usize, l: usize) -> bool {
    (1..=h.len()).any(|p| {
        h.same_piece(p, j)
            && cone_contains(h.pt(j), ConeDirection::Lower, h.pt(p)).is_some()
            && cone_contains(h.pt(l), ConeDirection::Lower, h.pt(p)).is_some()
    })
}

fn triples_in(h: &HeapEmbedding) -> Vec<SingularTriple> {
    let mut out = Vec::new();
    for k in 1..=h.len() {
        for j in h.diagonal_run(k, -1, -1) {
            for l in h.diagonal_run(k, 1, -1) {
                if h.same_piece(j, k) && h.same_piece(l, k) && lower_cones_meet(h, j, l) {
                    out.push(SingularTriple { j, k, l });
                }
            }
        }
    }
    out.sort();
    out
}

/// Every diamond triple of the heap of `a`.
pub fn singular_triples(a: &Word) -> Result<Vec<SingularTriple>> {
    if !is_321_hexagon_avoiding(&a.apply()) {
        return Err(Error::NotHexagonAvoiding);
    }
    a.require_reduced()?;
    Ok(triples_in(&build_heap(a)?))
}

/// Products of the masks that zero exactly one diamond triple.
pub fn max_singular_locus_of_word(a: &Word) -> Result<BTreeSet<Permutation>> {
    singular_triples(a)?
        .iter()
        .map(|t| t.mask(a.len()).product(a))
        .collect()
}

pub fn max_singular_locus(w: &Permutation) -> Result<BTreeSet<Permutation>> {
    max_singular_locus_of_word(&canonical_reduced_word(w))
}

/// Bruhat-maximal `x <= w` with `P_{x,w} ≠ 1`, read off the KL table.
pub fn max_singular_locus_oracle_in(
    store: &KlStore,
    w: &Permutation,
) -> Result<BTreeSet<Permutation>> {
    let t = store.table(w)?;
    let singular: Vec<&Permutation> = t
        .entries()
        .iter()
        .filter(|(_, p)| !p.is_one())
        .map(|(x, _)| x)
        .collect();
    let mut out = BTreeSet::new();
    for &x in &singular {
        let mut maximal = true;
        for &y in &singular {
            if y != x && y.length() > x.length() && bruhat_leq(x, y)? {
                maximal = false;
                break;
            }
        }
        if maximal {
            out.insert(x.clone());
        }
    }
    Ok(out)
}

pub fn max_singular_locus_oracle(w: &Permutation) -> Result<BTreeSet<Permutation>> {
    max_singular_locus_oracle_in(KlStore::global(), w)
}

/// `w` avoids `[3,4,1,2]` and `[4,2,3,1]`.
pub fn is_smooth(w: &Permutation) -> bool {
    !contains_raw(w.images(), &[3, 4, 1, 2]) && !contains_raw(w.images(), &[4, 2, 3, 1])
}

/// Every point of the maximal singular locus sits at codimension 3.
pub fn codim_check(w: &Permutation) -> Result<bool> {
    let lw = w.length();
    Ok(max_singular_locus(w)?.iter().all(|y| lw - y.length() == 3))
}

#[derive(Serialize)]
struct LocusRow<'a> {
    perm: &'a Permutation,
    codimension: usize,
}

fn rows<'a>(w: &Permutation, locus: &'a BTreeSet<Permutation>) -> Vec<LocusRow<'a>> {
    let mut rows: Vec<_> = locus
        .iter()
        .map(|y| LocusRow {
            perm: y,
            codimension: w.length() - y.length(),
        })
        .collect();
    rows.sort_by_cached_key(|r| r.perm.table_key());
    rows
}

pub fn locus_to_json(w: &Permutation, locus: &BTreeSet<Permutation>) -> String {
    serde_json::to_string(&rows(w, locus)).expect("locus serialises")
}

pub fn locus_to_csv(w: &Permutation, locus: &BTreeSet<Permutation>) -> String {
    let mut out = csv::Writer::from_writer(Vec::new());
    out.write_record(["perm", "codimension"])
        .expect("in-memory write");
    for r in rows(w, locus) {
        out.write_record([r.perm.to_string(), r.codimension.to_string()])
            .expect("in-memory write");
    }
    String::from_utf8(out.into_inner().expect("flush")).expect("utf8")
}

pub fn locus_to_text(w: &Permutation, locus: &BTreeSet<Permutation>) -> String {
    rows(w, locus)
        .iter()
        .map(|r| format!("{}\tcodim {}\n", r.perm, r.codimension))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn word(s: &str) -> Word {
        Word::parse(s, None).unwrap()
    }

    #[test]
    fn single_diamond() {
        let a = word("2 1 3 2");
        let t = singular_triples(&a).unwrap();
        assert_eq!(t, vec![SingularTriple { j: 2, k: 4, l: 3 }]);
        let locus = max_singular_locus_of_word(&a).unwrap();
        assert_eq!(locus.len(), 1);
        assert_eq!(locus, max_singular_locus_oracle(&a.apply()).unwrap());
    }

    #[test]
    fn distinct_letters_have_no_triples() {
        assert!(singular_triples(&word("1 2 3 4")).unwrap().is_empty());
        assert!(singular_triples(&word("3 1 2")).unwrap().is_empty());
    }

    #[test]
    fn non_hexagon_avoiding_is_rejected() {
        assert_eq!(
            singular_triples(&word("1 2 1")),
            Err(Error::NotHexagonAvoiding)
        );
    }

    #[test]
    fn smoothness() {
        assert!(!is_smooth(&"3,4,1,2".parse().unwrap()));
        assert!(!is_smooth(&"4,2,3,1".parse().unwrap()));
        assert!(is_smooth(&Permutation::identity(5)));
        assert!(is_smooth(&"3,2,1".parse().unwrap()));
        assert!(!is_smooth(&"3,4,5,1,2".parse().unwrap()));
        assert!(max_singular_locus_oracle(&"3,2,1".parse().unwrap())
            .unwrap()
            .is_empty());
        assert!(max_singular_locus_oracle(&Permutation::identity(3))
            .unwrap()
            .is_empty());
    }

    #[test]
    fn exports() {
        let w: Permutation = "3,4,1,2".parse().unwrap();
        let locus = max_singular_locus(&w).unwrap();
        assert_eq!(
            locus_to_json(&w, &locus),
            r#"[{"perm":"1,3,2,4","codimension":3}]"#
        );
        assert_eq!(
            locus_to_csv(&w, &locus),
            "perm,codimension\n\"1,3,2,4\",3\n"
        );
    }
}
