// Pattern avoidance and Bruhat comparisons on a few permutations.

use std::error::Error;

use klheap::perm::{bruhat_leq, is_hexagon_avoiding};
use klheap::{is_321_avoiding, is_321_hexagon_avoiding, Permutation};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    for s in ["3,4,5,1,2", "3,2,1", "4,6,7,1,8,2,3,5", "2,1,4,3"] {
        let w: Permutation = s.parse()?;
        println!(
            "{w}: length {}, 321-avoiding {}, hexagon-avoiding {}, both {}",
            w.length(),
            is_321_avoiding(&w),
            is_hexagon_avoiding(&w),
            is_321_hexagon_avoiding(&w)
        );
    }
    let x: Permutation = "1,3,2,4,5".parse()?;
    let w: Permutation = "3,4,5,1,2".parse()?;
    println!("{x} <= {w}: {}", bruhat_leq(&x, &w)?);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
