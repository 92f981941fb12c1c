//! Write cone points as sums of generators. A `Decomposer` is built once per
//! graph and reused.

use std::error::Error;
use std::fmt::Write;

use graphcone::semigroup::{layer_decompose, points_of_degree, Decomposer};
use graphcone::{fixtures, ConeElement};

pub fn run_example() -> Result<String, Box<dyn Error>> {
    let mut out = String::new();
    let lm = fixtures::littleman();
    let dec = Decomposer::new(&lm)?;
    let w = ConeElement::parse(&lm, "deg=4;loop=2,bar=4,p3=3,p4=1")?;
    writeln!(out, "{} =", w.to_text(&lm))?;
    for p in dec.decompose(&w)?.parts {
        writeln!(out, "  + {}", p.to_text(&lm))?;
    }

    let tripod = fixtures::tripod();
    let w = ConeElement::parse(&tripod, "deg=3;e1=2,e2=2,e3=2")?;
    let nets = layer_decompose(&tripod, &w)?;
    writeln!(
        out,
        "tripod {} splits into {} networks",
        w.to_text(&tripod),
        nets.len()
    )?;

    let hm = fixtures::hammock();
    let dec = Decomposer::new(&hm)?;
    let pts = points_of_degree(&hm, 4)?;
    let mut quadric = 0;
    for p in &pts {
        quadric += dec
            .decompose(p)?
            .degrees()
            .iter()
            .filter(|&&d| d == 2)
            .count();
    }
    writeln!(
        out,
        "hammock degree 4: {} points, {quadric} quadric parts in total",
        pts.len()
    )?;
    Ok(out)
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    print!("{}", run_example()?);
    Ok(())
}
