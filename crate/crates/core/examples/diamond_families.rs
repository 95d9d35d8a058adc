// P_{e,w} for two-row and three-row diamond heaps: q-Fibonacci numbers and
// the coefficients of a rational generating function.

use std::error::Error;

use klheap::poly::{q_fibonacci, ThreeRowSeries};
use klheap::{deodhar_poly, Permutation, Word};

fn word(letters: impl Iterator<Item = usize>, n: usize) -> Result<Word, klheap::Error> {
    let s: Vec<String> = letters.map(|l| l.to_string()).collect();
    Word::parse(&s.join(" "), Some(n))
}

pub fn run_example() -> Result<(), Box<dyn Error>> {
    for m in 1..=6 {
        let a = word((2..m + 2).flat_map(|t| [t, t - 1]), m + 2)?;
        let p = deodhar_poly(&a, &Permutation::identity(a.n()))?;
        assert_eq!(p, q_fibonacci(m as i64));
        println!("2 x {m}: {p}");
    }
    let g = ThreeRowSeries::new();
    for m in 1..=4 {
        let a = word((1..=m).rev().flat_map(|t| [t, t + 1, t + 2]), m + 3)?;
        let p = deodhar_poly(&a, &Permutation::identity(a.n()))?;
        assert_eq!(p, g.coeff(m));
        println!("3 x {m}: {p}");
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
