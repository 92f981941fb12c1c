//! Membership in the graded cone, with the reason when it fails.

use std::error::Error;
use std::fmt::Write;

use graphcone::cone::{check_cone, deg_min, deg_v, local_paths};
use graphcone::{fixtures, ConeElement};

pub fn run_example() -> Result<String, Box<dyn Error>> {
    let mut out = String::new();
    let g = fixtures::littleman();
    for text in [
        "deg=2;loop=1,bar=2,p3=1,p4=1",
        "deg=1;loop=1,bar=1",
        "deg=1;p3=2",
        "deg=1;loop=1,bar=2,p3=1,p4=1",
    ] {
        let w = ConeElement::parse(&g, text)?;
        match check_cone(&g, &w) {
            Ok(()) => writeln!(out, "{text}: in the cone, least degree {}", deg_min(&g, &w))?,
            Err(v) => writeln!(out, "{text}: {v}")?,
        }
    }
    let w = ConeElement::parse(&g, "deg=2;loop=1,bar=2,p3=1,p4=1")?;
    let t = local_paths(&g, &w, "w")?;
    writeln!(
        out,
        "local paths at w: x={} y={} z={}, deg_w = {}",
        t.x,
        t.y,
        t.z,
        deg_v(&g, &w, "w")?
    )?;
    Ok(out)
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    print!("{}", run_example()?);
    Ok(())
}
