use super::{EdgeId, GraphError, TrivalentGraph, VertexId};

/// Parses the line format: one `edge <id> <end> <end>` per line, blank lines
/// and `#` comments ignored. Leaves are the vertices of valency 1.
///
/// Components without an inner vertex are rejected; the empty text gives the
/// empty graph.
pub fn parse_graph(text: &str) -> Result<TrivalentGraph, GraphError> {
    let mut edges: Vec<(EdgeId, VertexId, VertexId)> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        match tokens.as_slice() {
            ["edge", id, a, b] => edges.push(((*id).into(), (*a).into(), (*b).into())),
            ["edge", ..] => {
                return Err(GraphError::Syntax {
                    line: i + 1,
                    message: format!(
                        "expected `edge <id> <end> <end>`, got {} fields",
                        tokens.len()
                    ),
                })
            }
            [word, ..] => {
                return Err(GraphError::Syntax {
                    line: i + 1,
                    message: format!("unknown keyword `{word}`"),
                })
            }
            [] => unreachable!(),
        }
    }
    let graph = TrivalentGraph::from_edges(edges)?;
    if let Some(e) = graph.bare_edges().next() {
        return Err(GraphError::BareEdge(graph.edge_id(e).clone()));
    }
    Ok(graph)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn littleman_text() {
        let g = parse_graph("edge loop u u\nedge bar u w\nedge p3 w a\nedge p4 w b\n").unwrap();
        assert_eq!(g.num_edges(), 4);
        assert_eq!(g.leaves().count(), 2);
        assert_eq!(g.betti(), 1);
    }

    #[test]
    fn tripod_text() {
        let g = parse_graph("edge e1 c a\nedge e2 c b\nedge e3 c d").unwrap();
        assert_eq!(g.leaves().count(), 3);
        assert_eq!(g.betti(), 0);
    }

    #[test]
    fn balloon_text_is_accepted() {
        let g = parse_graph("edge x u u\nedge y u w\n").unwrap();
        assert_eq!(g.leaves().count(), 1);
    }

    #[test]
    fn lone_edge_is_rejected() {
        assert_eq!(
            parse_graph("edge x u w").unwrap_err(),
            GraphError::BareEdge("x".into())
        );
    }

    #[test]
    fn empty_text_is_the_empty_graph() {
        let g = parse_graph("# nothing\n\n").unwrap();
        assert_eq!(g.num_vertices(), 0);
        assert_eq!(g.invariants().num_components, 0);
    }

    #[test]
    fn syntax_errors_report_the_line() {
        let err = parse_graph("edge a u u\nedge b u\n").unwrap_err();
        assert!(matches!(err, GraphError::Syntax { line: 2, .. }));
        let err = parse_graph("\nvertex v\n").unwrap_err();
        assert!(matches!(err, GraphError::Syntax { line: 2, .. }));
    }

    #[test]
    fn valency_error_names_the_vertex() {
        let err = parse_graph("edge a u v\nedge b v w\nedge c u x\nedge d u y").unwrap_err();
        assert_eq!(
            err,
            GraphError::Valency {
                vertex: "v".into(),
                valency: 2
            }
        );
    }

    #[test]
    fn comments_after_fields() {
        let g = parse_graph("edge e1 c a # first\nedge e2 c b\nedge e3 c d\n").unwrap();
        assert_eq!(g.num_edges(), 3);
    }
}
