//! Parse a graph, read its invariants, then cut, glue and graft.

use std::error::Error;
use std::fmt::Write;

use graphcone::graph::{cut_edge, glue_leaves, graft, parse_graph};

pub fn run_example() -> Result<String, Box<dyn Error>> {
    let mut out = String::new();
    let lm = parse_graph("edge loop u u\nedge bar u w\nedge p3 w a\nedge p4 w b\n")?;
    writeln!(out, "littleman: {}", lm.invariants())?;

    let cut = cut_edge(&lm, "bar")?;
    writeln!(
        out,
        "cut bar: {} (halves {} {})",
        cut.graph.invariants(),
        cut.halves[0],
        cut.halves[1]
    )?;

    let glued = glue_leaves(&cut.graph, cut.leaves[0].as_str(), cut.leaves[1].as_str())?;
    writeln!(
        out,
        "glued back along {}: {}",
        glued.edge,
        glued.graph.invariants()
    )?;

    let tripod = parse_graph("edge e1 c x\nedge e2 c y\nedge e3 c z\n")?;
    let g = graft(&lm, "a", &tripod, "x")?;
    writeln!(out, "grafted tripod at a: {}", g.graph.invariants())?;
    out.push_str(&g.graph.to_text());
    Ok(out)
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    print!("{}", run_example()?);
    Ok(())
}
