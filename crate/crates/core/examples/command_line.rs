//! Drive the `graphcone` command line in-process, with a graph on stdin.

use std::error::Error;
use std::fmt::Write;

use graphcone::{cli, fixtures};

fn call(args: &[&str], stdin: &str) -> Result<String, Box<dyn Error>> {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = cli::run(
        std::iter::once("graphcone").chain(args.iter().copied()),
        &mut stdin.as_bytes(),
        &mut out,
        &mut err,
    );
    Ok(format!(
        "$ graphcone {} -> {code}\n{}{}",
        args.join(" "),
        String::from_utf8(out)?,
        String::from_utf8(err)?
    ))
}

pub fn run_example() -> Result<String, Box<dyn Error>> {
    let lm = fixtures::source("littleman").expect("known fixture");
    let mut out = String::new();
    for args in [
        &["info", "-"][..],
        &[
            "hilbert",
            "-",
            "--max-degree",
            "3",
            "--leaves",
            "a",
            "--method",
            "compose",
        ],
        &["decompose", "-", "deg=2;loop=1,bar=2,p3=1,p4=1"],
        &["decompose", "-", "deg=1;loop=1,bar=1"],
        &["relation", "-", "--lhs", "deg=1;loop=1", "--rhs", "deg=1;"],
    ] {
        write!(out, "{}", call(args, lm)?)?;
    }
    Ok(out)
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    print!("{}", run_example()?);
    Ok(())
}
