//! Networks: 0/1 labelings where every inner vertex sees 0 or 2 edges.

use std::error::Error;
use std::fmt::Write;

use graphcone::graph::{enumerate_networks, NetworkPiece};
use graphcone::{fixtures, ConeElement};

pub fn run_example() -> Result<String, Box<dyn Error>> {
    let mut out = String::new();
    for g in [fixtures::tripod(), fixtures::hammock()] {
        let nets = enumerate_networks(&g);
        writeln!(
            out,
            "{} networks on a graph with {} leaves",
            nets.len(),
            g.leaves().count()
        )?;
        for n in &nets {
            let pieces: Vec<String> = n
                .pieces(&g)
                .iter()
                .map(|p| match p {
                    NetworkPiece::Path { vertices, .. } => format!(
                        "path {}",
                        vertices
                            .iter()
                            .map(|v| v.as_str())
                            .collect::<Vec<_>>()
                            .join("-")
                    ),
                    NetworkPiece::Cycle { edges } => format!("cycle of {} edges", edges.len()),
                })
                .collect();
            writeln!(
                out,
                "  {}  [{}]",
                ConeElement::from_network(n).to_text(&g),
                pieces.join(", ")
            )?;
        }
    }
    Ok(out)
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    print!("{}", run_example()?);
    Ok(())
}
