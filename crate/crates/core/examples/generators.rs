//! Minimal generators by the method that fits the first Betti number.

use std::error::Error;
use std::fmt::Write;

use graphcone::fixtures;
use graphcone::semigroup::minimal_generators;

pub fn run_example() -> Result<String, Box<dyn Error>> {
    let mut out = String::new();
    for name in [
        "tripod",
        "quartet",
        "littleman",
        "hammock",
        "two_loops_one_leaf",
    ] {
        let g = fixtures::by_name(name).expect("known fixture");
        let set = minimal_generators(&g, 3)?;
        let counts: Vec<String> = set
            .by_degree()
            .iter()
            .map(|(d, v)| format!("{} in degree {d}", v.len()))
            .collect();
        let note = if set.truncation_warning {
            " (cap reached)"
        } else {
            ""
        };
        writeln!(
            out,
            "{name}: {} via {}{note}",
            counts.join(", "),
            set.method
        )?;
    }
    let lm = fixtures::littleman();
    for w in minimal_generators(&lm, 4)?
        .generators
        .iter()
        .filter(|w| w.degree == 2)
    {
        writeln!(out, "  littleman quadric generator {}", w.to_text(&lm))?;
    }
    Ok(out)
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    print!("{}", run_example()?);
    Ok(())
}
