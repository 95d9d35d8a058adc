// Counts 321-avoiding and 321-hexagon-avoiding permutations for small n.

use std::error::Error;

use klheap::enumerate::{catalan, enum_table};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    println!("n\t321-avoiding\t321-hexagon-avoiding");
    for row in enum_table(10, false)? {
        assert_eq!(row.count_321, catalan(row.n));
        println!("{}\t{}\t{}", row.n, row.count_321, row.count_321_hexagon);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
