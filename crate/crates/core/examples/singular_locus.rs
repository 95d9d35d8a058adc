// Maximal singular locus of a Schubert variety, read off the heap and
// checked against the KL table.

use std::error::Error;

use klheap::schubert::{locus_to_text, max_singular_locus_of_word};
use klheap::{max_singular_locus_oracle, Word};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let a = Word::parse("2 1 5 4 3 2 6 5 4 3", None)?;
    let w = a.apply();
    let fast = max_singular_locus_of_word(&a)?;
    assert_eq!(fast, max_singular_locus_oracle(&w)?);
    println!("w = {w}");
    print!("{}", locus_to_text(&w, &fast));
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
