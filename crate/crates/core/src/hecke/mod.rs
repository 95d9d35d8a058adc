//! The Hecke algebra of `S_n`, its Kazhdan-Lusztig basis, and quantities
//! read off it.

mod element;
mod kl;

pub use element::{bar_element, c_prime_s, BarCache, HeckeElement};
pub use kl::{kl_poly, kl_table, KlStore, KlTable};

use crate::error::Result;
use crate::perm::{canonical_reduced_word, Permutation};
use crate::poly::QPoly;

/// Whether `C'_w` equals `C'_{s_1} ... C'_{s_r}` along a reduced word.
pub fn is_tight_in(store: &KlStore, w: &Permutation) -> Result<bool> {
    let mut prod = HeckeElement::t(&Permutation::identity(w.n()));
    for &s in canonical_reduced_word(w).letters() {
        prod = prod.mul_c_prime_s(s as usize);
    }
    Ok(&prod == store.table(w)?.c_prime())
}

pub fn is_tight(w: &Permutation) -> Result<bool> {
    is_tight_in(KlStore::global(), w)
}

/// `sum_{x <= w} q^{l(x)} P_{x,w}`.
pub fn poincare_ih_in(store: &KlStore, w: &Permutation) -> Result<QPoly> {
    let t = store.table(w)?;
    let mut out = QPoly::zero();
    for (x, p) in t.entries().iter() {
        out += &p.shift(x.length());
    }
    Ok(out)
}

pub fn poincare_ih(w: &Permutation) -> Result<QPoly> {
    poincare_ih_in(KlStore::global(), w)
}
