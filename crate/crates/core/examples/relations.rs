//! Check relations among generators: equal sums on both sides.

use std::error::Error;
use std::fmt::Write;

use graphcone::semigroup::verify_relation;
use graphcone::{fixtures, ConeElement, TrivalentGraph};

fn elements(g: &TrivalentGraph, texts: &[&str]) -> Result<Vec<ConeElement>, Box<dyn Error>> {
    Ok(texts
        .iter()
        .map(|t| ConeElement::parse(g, t))
        .collect::<Result<_, _>>()?)
}

pub fn run_example() -> Result<String, Box<dyn Error>> {
    let mut out = String::new();
    let lm = fixtures::littleman();
    let cases = [
        (
            vec!["deg=1;loop=1", "deg=1;p3=1,p4=1"],
            vec!["deg=1;", "deg=1;loop=1,p3=1,p4=1"],
        ),
        (
            vec![
                "deg=2;loop=1,bar=2,p3=1,p4=1",
                "deg=2;loop=1,bar=2,p3=1,p4=1",
            ],
            vec!["deg=2;loop=1,bar=2,p3=2", "deg=2;loop=1,bar=2,p4=2"],
        ),
        (
            vec!["deg=1;loop=1", "deg=1;"],
            vec!["deg=1;p3=1,p4=1", "deg=1;"],
        ),
    ];
    for (lhs, rhs) in &cases {
        let holds = verify_relation(&lm, &elements(&lm, lhs)?, &elements(&lm, rhs)?)?;
        writeln!(out, "{} = {}: {holds}", lhs.join(" + "), rhs.join(" + "))?;
    }
    Ok(out)
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    print!("{}", run_example()?);
    Ok(())
}
