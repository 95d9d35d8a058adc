//! Kazhdan-Lusztig polynomials of 321-hexagon-avoiding permutations.
//!
//! For such a permutation `w` with reduced word `a`, the polynomial
//! `P_{x,w}` equals the generating function of masks on `a` with product
//! `x`, counted by their number of defects. This crate computes both sides:
//! the mask sum in [`deodhar`], and an independent Hecke-algebra recursion
//! in [`hecke`]. Around them sit permutation arithmetic, heap embeddings of
//! fully commutative words, singular loci, and enumeration helpers.
//!
//! ```
//! use klheap::{deodhar_poly, Permutation, QPoly, Word};
//!
//! let a = Word::parse("2 1 3 2 4 3", None)?;
//! let p = deodhar_poly(&a, &Permutation::identity(a.n()))?;
//! assert_eq!(p, QPoly::from_coeffs(vec![1, 2]));
//! # Ok::<(), klheap::Error>(())
//! ```

pub mod cli;
pub mod deodhar;
pub mod enumerate;
pub mod error;
pub mod heap;
pub mod hecke;
pub mod perm;
pub mod poly;
pub mod schubert;
pub mod table;
pub mod verify;

pub use deodhar::{
    defect_set, delta, deodhar_poly, deodhar_table, deodhar_table_parallel, is_forest, Mask,
};
pub use error::{Error, Result};
pub use heap::{build_heap, render_ascii, HeapEmbedding, Point};
pub use hecke::{is_tight, kl_poly, kl_table, poincare_ih, KlStore};
pub use perm::{
    canonical_reduced_word, is_321_avoiding, is_321_hexagon_avoiding, is_hexagon_avoiding,
    Permutation, Word,
};
pub use poly::{HalfLaurent, QPoly};
pub use schubert::{max_singular_locus, max_singular_locus_oracle};
pub use table::PolyTable;
