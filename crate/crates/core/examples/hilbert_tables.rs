//! Hilbert tables three ways: counting points, convolving local tables, and
//! expanding a rational series.

use std::error::Error;
use std::fmt::Write;

use graphcone::fixtures;
use graphcone::hilbert::{hilbert_brute, hilbert_compose, hilbert_series};

pub fn run_example() -> Result<String, Box<dyn Error>> {
    let mut out = String::new();
    let lm = fixtures::littleman();
    let brute = hilbert_brute(&lm, 4, &["a", "b"])?;
    let compose = hilbert_compose(&lm, 4, &["a", "b"])?;
    let series = hilbert_series(&lm, 4, &["a", "b"], false)?;
    writeln!(
        out,
        "brute = compose: {}, brute = series: {}",
        brute == compose,
        brute == series
    )?;
    writeln!(out, "totals {:?}", brute.totals())?;
    out.push_str(&brute.marginalize("b")?.to_table());

    let cat = fixtures::caterpillar6();
    let t = hilbert_compose(&cat, 6, &[])?;
    writeln!(out, "caterpillar6 by composition: {:?}", t.totals())?;

    let balloon = hilbert_brute(&fixtures::balloon(), 2, &["l"])?;
    writeln!(out, "{}", balloon.to_json())?;
    Ok(out)
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    print!("{}", run_example()?);
    Ok(())
}
