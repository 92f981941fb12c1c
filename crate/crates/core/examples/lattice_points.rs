//! Count lattice points degree by degree, optionally in parallel and under
//! a search budget.

use std::error::Error;
use std::fmt::Write;

use graphcone::fixtures;
use graphcone::semigroup::{points_of_degree, points_of_degree_with, EnumOptions};

pub fn run_example() -> Result<String, Box<dyn Error>> {
    let mut out = String::new();
    let g = fixtures::hexagon();
    for m in 0..=3 {
        writeln!(
            out,
            "hexagon, degree {m}: {} points",
            points_of_degree(&g, m)?.len()
        )?;
    }
    let par = EnumOptions {
        parallel: true,
        ..EnumOptions::default()
    };
    writeln!(
        out,
        "parallel degree 3: {}",
        points_of_degree_with(&g, 3, &par)?.len()
    )?;
    let tight = EnumOptions {
        budget: 1000,
        ..EnumOptions::default()
    };
    match points_of_degree_with(&g, 4, &tight) {
        Ok(p) => writeln!(out, "degree 4 fit the budget: {}", p.len())?,
        Err(e) => writeln!(out, "degree 4: {e}")?,
    }
    Ok(out)
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    print!("{}", run_example()?);
    Ok(())
}
