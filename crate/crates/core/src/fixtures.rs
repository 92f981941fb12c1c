//! The bundled example graphs.

use crate::graph::{parse_graph, TrivalentGraph};

pub const NAMES: [&str; 10] = [
    "tripod",
    "quartet",
    "caterpillar6",
    "balloon",
    "littleman",
    "hammock",
    "theta",
    "dumbbell",
    "hexagon",
    "two_loops_one_leaf",
];

/// Source text of a bundled graph.
pub fn source(name: &str) -> Option<&'static str> {
    Some(match name {
        "tripod" => include_str!("../fixtures/tripod.graph"),
        "quartet" => include_str!("../fixtures/quartet.graph"),
        "caterpillar6" => include_str!("../fixtures/caterpillar6.graph"),
        "balloon" => include_str!("../fixtures/balloon.graph"),
        "littleman" => include_str!("../fixtures/littleman.graph"),
        "hammock" => include_str!("../fixtures/hammock.graph"),
        "theta" => include_str!("../fixtures/theta.graph"),
        "dumbbell" => include_str!("../fixtures/dumbbell.graph"),
        "hexagon" => include_str!("../fixtures/hexagon.graph"),
        "two_loops_one_leaf" => include_str!("../fixtures/two_loops_one_leaf.graph"),
        _ => return None,
    })
}

pub fn by_name(name: &str) -> Option<TrivalentGraph> {
    source(name).map(|s| parse_graph(s).expect("bundled fixtures parse"))
}

pub fn all() -> Vec<TrivalentGraph> {
    NAMES.iter().map(|n| by_name(n).expect("listed")).collect()
}

macro_rules! fixture_fns {
    ($($name:ident),*) => {
        $(
            pub fn $name() -> TrivalentGraph {
                by_name(stringify!($name)).expect("listed")
            }
        )*
    };
}

fixture_fns!(
    tripod,
    quartet,
    caterpillar6,
    balloon,
    littleman,
    hammock,
    theta,
    dumbbell,
    hexagon,
    two_loops_one_leaf
);
