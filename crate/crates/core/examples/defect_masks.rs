// Lists the masks of a reduced word that carry exactly one defect,
// together with the permutation each one multiplies out to.

use std::error::Error;

use klheap::deodhar::{defect_set, Mask};
use klheap::{canonical_reduced_word, Word};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let a = Word::parse("2 1 3 2 4 3", None)?;
    let mut count = 0;
    for i in 0..1u64 << a.len() {
        let m = Mask::from_index(i, a.len());
        let rec = defect_set(&a, &m)?;
        if rec.defects.len() == 1 {
            count += 1;
            let word = canonical_reduced_word(&rec.product);
            println!(
                "{m}  defect at {:?}  product {} (word: {word})",
                rec.defects, rec.product
            );
        }
    }
    assert_eq!(count, 18);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
