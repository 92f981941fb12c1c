//! Decide whether a degree-two point on a polygon graph splits into two
//! networks.

use std::error::Error;
use std::fmt::Write;

use graphcone::semigroup::{points_of_degree, polygon_graph, split_degree2, Split};

pub fn run_example() -> Result<String, Box<dyn Error>> {
    let mut out = String::new();
    for k in 2..=5 {
        let p = polygon_graph(k);
        let mut split = 0;
        let mut stuck = Vec::new();
        for w in points_of_degree(&p, 2)? {
            match split_degree2(&p, &w)? {
                Split::Decomposable(_) => split += 1,
                Split::Indecomposable => stuck.push(w.to_text(&p)),
            }
        }
        writeln!(
            out,
            "{k}-gon: {split} split, {} indecomposable",
            stuck.len()
        )?;
        if let Some(first) = stuck.first() {
            writeln!(out, "  e.g. {first}")?;
        }
    }
    Ok(out)
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    print!("{}", run_example()?);
    Ok(())
}
