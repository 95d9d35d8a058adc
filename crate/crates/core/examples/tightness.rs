// Tight elements and intersection-cohomology Poincare polynomials in S_4.

use std::error::Error;

use klheap::enumerate::all_permutations;
use klheap::{is_321_hexagon_avoiding, is_tight, poincare_ih, QPoly};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    for w in all_permutations(4) {
        let p = poincare_ih(&w)?;
        let tight = is_tight(&w)?;
        assert_eq!(tight, is_321_hexagon_avoiding(&w));
        assert_eq!(tight, p == QPoly::one_plus_q().pow(w.length() as u32));
        println!("{w}\ttight {tight}\t{p}");
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
