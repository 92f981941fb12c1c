//! Graphs related by mutations have the same Hilbert table, leaf grading
//! included.

use std::error::Error;
use std::fmt::Write;

use graphcone::fixtures;
use graphcone::graph::caterpillar_normal_form;
use graphcone::hilbert::verify_mutation_invariance;

pub fn run_example() -> Result<String, Box<dyn Error>> {
    let mut out = String::new();
    let hm = fixtures::hammock();
    let nf = caterpillar_normal_form(&hm)?;
    let r = verify_mutation_invariance(&hm, &nf.graph, 5, &["a", "b"], &["a", "b"])?;
    writeln!(out, "hammock vs its normal form: {r}")?;
    let r = verify_mutation_invariance(&fixtures::theta(), &fixtures::dumbbell(), 5, &[], &[])?;
    writeln!(out, "theta vs dumbbell: {r}")?;
    let r = verify_mutation_invariance(&fixtures::littleman(), &fixtures::dumbbell(), 5, &[], &[])?;
    writeln!(out, "little man vs dumbbell: {r}")?;
    Ok(out)
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    print!("{}", run_example()?);
    Ok(())
}
