// Draws the heap of a fully commutative word, then the same heap with the
// zeros of a mask marked.

use std::error::Error;

use klheap::deodhar::Mask;
use klheap::{build_heap, render_ascii, Word};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let a = Word::parse("3 2 1 4 3 2 5 4 3", None)?;
    let h = build_heap(&a)?;
    println!("{}", render_ascii(&h, None)?);

    let m: Mask = "(1,1,0,1,0,1,0,1,0)".parse()?;
    println!("{}", render_ascii(&h, Some(&m))?);
    println!("{}", h.to_json());

    // braids have no heap
    assert!(build_heap(&Word::parse("1 2 1", None)?).is_err());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
