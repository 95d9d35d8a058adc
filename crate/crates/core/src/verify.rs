//! The equivalence battery: for each `w`, the mask sum, the Hecke-algebra
//! oracle and the pattern tests must all tell the same story.

use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::deodhar::{
    defect_set, degree_bound_holds, delta, deodhar_table, is_forest, recursion_check,
    zero_count_condition, DefectGraph, Mask,
};
use crate::enumerate::all_permutations;
use crate::error::{Error, Result};
use crate::heap::build_heap;
use crate::hecke::{is_tight_in, poincare_ih_in, KlStore};
use crate::perm::{canonical_reduced_word, is_321_hexagon_avoiding, Permutation};
use crate::poly::QPoly;
use crate::schubert::{is_smooth, max_singular_locus, max_singular_locus_oracle_in};

/// Largest rank checked exhaustively.
pub const MAX_EXHAUSTIVE_N: usize = 6;
/// Largest rank accepted in sampling mode.
pub const MAX_SAMPLE_N: usize = 8;
/// Masks per element are enumerated up to this word length, sampled above.
const EXHAUSTIVE_MASK_LEN: usize = 12;
const SAMPLED_MASKS: usize = 256;
const BAR_CHECK_MAX_N: usize = 5;
/// Longer element lists are summarised by their size in text reports.
const LISTED: usize = 12;

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CheckCount {
    pub passed: u64,
    pub failed: u64,
    /// Elements on which the check failed.
    pub failures: Vec<Permutation>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub n: usize,
    pub elements: usize,
    pub hexagon_avoiding: usize,
    pub checks: BTreeMap<&'static str, CheckCount>,
    /// Elements whose product of `C'_s` differs from `C'_w`.
    pub non_tight: Vec<Permutation>,
    /// Elements whose mask table differs from the KL table.
    pub deodhar_mismatch: Vec<Permutation>,
}

impl VerifyReport {
    pub fn total_failures(&self) -> u64 {
        self.checks.values().map(|c| c.failed).sum()
    }

    pub fn passed(&self) -> bool {
        self.total_failures() == 0
    }

    pub fn to_text(&self) -> String {
        let mut out = format!(
            "n = {}: {} elements, {} 321-hexagon-avoiding\n",
            self.n, self.elements, self.hexagon_avoiding
        );
        for (name, c) in &self.checks {
            out.push_str(&format!(
                "{name}\tpassed {}\tfailed {}\n",
                c.passed, c.failed
            ));
            for w in &c.failures {
                out.push_str(&format!("  fails at {w}\n"));
            }
        }
        let list = |ws: &[Permutation]| {
            if ws.len() > LISTED {
                format!("{} elements", ws.len())
            } else {
                ws.iter()
                    .map(|w| format!("[{w}]"))
                    .collect::<Vec<_>>()
                    .join(" ")
            }
        };
        out.push_str(&format!("non-tight: {}\n", list(&self.non_tight)));
        out.push_str(&format!(
            "deodhar/kl mismatch: {}\n",
            list(&self.deodhar_mismatch)
        ));
        out.push_str(&format!("failures: {}\n", self.total_failures()));
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serialises")
    }

    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["check", "passed", "failed"])
            .expect("in-memory write");
        for (name, c) in &self.checks {
            w.write_record([name.to_string(), c.passed.to_string(), c.failed.to_string()])
                .expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("flush")).expect("utf8")
    }
}

#[derive(Default)]
struct Outcome {
    results: Vec<(&'static str, bool)>,
    tight: bool,
    deodhar_matches: bool,
}

fn masks_for(r: usize, seed: u64) -> Vec<Mask> {
    if r <= EXHAUSTIVE_MASK_LEN {
        (0u64..1 << r).map(|i| Mask::from_index(i, r)).collect()
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        (0..SAMPLED_MASKS)
            .map(|_| Mask::from_index(rng.gen::<u64>() & ((1 << r) - 1), r))
            .collect()
    }
}

fn check_one(store: &KlStore, w: &Permutation, seed: u64) -> Result<Outcome> {
    let a = canonical_reduced_word(w);
    let hex = is_321_hexagon_avoiding(w);
    let kl = store.table(w)?;
    let dt = deodhar_table(&a)?;
    let mut out = Outcome {
        deodhar_matches: dt == *kl.entries(),
        tight: is_tight_in(store, w)?,
        ..Outcome::default()
    };
    let poincare = poincare_ih_in(store, w)? == QPoly::one_plus_q().pow(w.length() as u32);
    out.results
        .push(("deodhar_vs_kl", out.deodhar_matches == hex));
    out.results.push(("tight", out.tight == hex));
    out.results.push(("poincare", poincare == hex));
    out.results
        .push(("degree_gate", degree_bound_holds(&a, &dt) == hex));
    out.results.push(("recursion", recursion_check(&a)?));

    let masks = masks_for(a.len(), seed);
    let mut zero_count = true;
    for m in &masks {
        let rec = defect_set(&a, m)?;
        if rec.product != *w {
            zero_count &= !delta(&a, m)?.is_negative() == zero_count_condition(m, &rec);
        }
    }
    out.results.push(("zero_count", zero_count));

    if hex {
        let h = build_heap(&a)?;
        let mut forest = true;
        for m in &masks {
            let rec = defect_set(&a, m)?;
            forest &= is_forest(&DefectGraph::from_heap(&h, m, &rec)?);
        }
        out.results.push(("forest", forest));
    }

    let oracle_locus = max_singular_locus_oracle_in(store, w)?;
    out.results
        .push(("smooth", is_smooth(w) == oracle_locus.is_empty()));
    if hex {
        out.results
            .push(("singular_locus", max_singular_locus(w)? == oracle_locus));
    }
    Ok(out)
}

/// Runs the battery over all of `S_n`, or over `sample` elements drawn with
/// `seed`. Work is spread over the current rayon pool.
pub fn verify(n: usize, sample: Option<usize>, seed: u64) -> Result<VerifyReport> {
    let limit = if sample.is_some() {
        MAX_SAMPLE_N
    } else {
        MAX_EXHAUSTIVE_N
    };
    if n > limit {
        return Err(Error::RankTooLarge { n, max: limit });
    }
    let mut elements = all_permutations(n);
    if let Some(k) = sample {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        elements = elements.choose_multiple(&mut rng, k).cloned().collect();
        elements.sort();
    }
    let store = KlStore::new();
    let outcomes = elements
        .par_iter()
        .enumerate()
        .map(|(k, w)| check_one(&store, w, seed.wrapping_add(k as u64)))
        .collect::<Result<Vec<_>>>()?;

    let mut checks: BTreeMap<&'static str, CheckCount> = BTreeMap::new();
    let mut report_non_tight = Vec::new();
    let mut mismatch = Vec::new();
    for (w, o) in elements.iter().zip(&outcomes) {
        for &(name, ok) in &o.results {
            let c = checks.entry(name).or_default();
            if ok {
                c.passed += 1;
            } else {
                c.failed += 1;
                c.failures.push(w.clone());
            }
        }
        if !o.tight {
            report_non_tight.push(w.clone());
        }
        if !o.deodhar_matches {
            mismatch.push(w.clone());
        }
    }
    if n <= BAR_CHECK_MAX_N {
        let c = checks.entry("bar_invariance").or_default();
        if store.check_bar_invariance() {
            c.passed += store.len() as u64;
        } else {
            c.failed += 1;
        }
    }
    Ok(VerifyReport {
        n,
        elements: elements.len(),
        hexagon_avoiding: elements
            .iter()
            .filter(|w| is_321_hexagon_avoiding(w))
            .count(),
        checks,
        non_tight: report_non_tight,
        deodhar_mismatch: mismatch,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_three_flags_the_longest_element() {
        let r = verify(3, None, 0).unwrap();
        assert!(r.passed(), "{}", r.to_text());
        let w0: Permutation = "3,2,1".parse().unwrap();
        assert_eq!(r.non_tight, vec![w0.clone()]);
        assert_eq!(r.deodhar_mismatch, vec![w0]);
        assert_eq!(r.hexagon_avoiding, 5);
    }

    #[test]
    fn rank_four_passes() {
        let r = verify(4, None, 0).unwrap();
        assert_eq!(r.total_failures(), 0, "{}", r.to_text());
        assert_eq!(r.elements, 24);
        assert_eq!(r.non_tight.len(), 24 - 14);
    }

    #[test]
    fn guards() {
        assert!(matches!(
            verify(7, None, 0),
            Err(Error::RankTooLarge { .. })
        ));
        assert!(matches!(
            verify(9, Some(3), 0),
            Err(Error::RankTooLarge { .. })
        ));
    }

    #[test]
    fn sampling_is_reproducible() {
        let a = verify(5, Some(10), 7).unwrap();
        let b = verify(5, Some(10), 7).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.elements, 10);
    }
}
