//! Mutations, their inverses, and the caterpillar normal form.

use std::error::Error;
use std::fmt::Write;

use graphcone::graph::{caterpillar_normal_form, inverse_step, is_isomorphic, mutate, replay};
use graphcone::{fixtures, MutationStep, Variant};

pub fn run_example() -> Result<String, Box<dyn Error>> {
    let mut out = String::new();
    let hm = fixtures::hammock();
    let step = MutationStep::new("c1", Variant::One);
    let once = mutate(&hm, &step)?;
    let back = inverse_step(&hm, &step)?;
    let undone = mutate(&once, &back)?;
    writeln!(
        out,
        "{step} then {back} restores the hammock: {}",
        undone == hm
    )?;

    let nf = caterpillar_normal_form(&hm)?;
    for s in &nf.steps {
        writeln!(out, "# step {s}")?;
    }
    out.push_str(&nf.graph.to_text());
    writeln!(
        out,
        "replay agrees: {}",
        replay(&hm, &nf.steps)? == nf.graph
    )?;
    let lm = is_isomorphic(&nf.graph, &fixtures::littleman())?.is_some();
    writeln!(out, "normal form is the little man: {lm}")?;
    Ok(out)
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    print!("{}", run_example()?);
    Ok(())
}
