// Runs the equivalence battery over S_4 and prints the report.

use std::error::Error;

use klheap::verify::verify;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let report = verify(4, None, 0)?;
    print!("{}", report.to_text());
    assert!(report.passed());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
