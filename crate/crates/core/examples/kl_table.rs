// Kazhdan-Lusztig polynomials of w = 3,4,5,1,2 two ways: as a sum over
// masks of a reduced word, and from the Hecke algebra.

use std::error::Error;

use klheap::{deodhar_table, kl_table, Permutation, Word};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let a = Word::parse("2 1 3 2 4 3", None)?;
    let w: Permutation = "3,4,5,1,2".parse()?;
    assert_eq!(a.apply(), w);

    let masks = deodhar_table(&a)?;
    let hecke = kl_table(&w)?;
    assert_eq!(&masks, hecke.entries());
    print!("{}", masks.to_text());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
