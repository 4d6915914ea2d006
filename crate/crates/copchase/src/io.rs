//! Graph file formats.
//!
//! Two interchangeable encodings, both lossless up to edge order:
//!
//! * edge-list text: a required `n <count>` header, then one `u v` pair per
//!   line; blank lines and `#` comments are ignored,
//! * JSON: `{"n": <count>, "edges": [[u, v], ...]}`.
//!
//! [`read_graph_path`] / [`write_graph_path`] dispatch on the file extension:
//! `.json` selects JSON, anything else the edge-list text form.

use std::fs::File;
use std::io::{BufRead, BufReader, BufWriter, Read, Write};
use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, GraphError};

#[derive(Debug, Error)]
pub enum GraphIoError {
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
    #[error("missing 'n <count>' header line")]
    MissingHeader,
    #[error("bad header line {line:?}")]
    BadHeader { line: String },
    #[error("bad edge line {line:?}")]
    BadEdgeLine { line: String },
    #[error("bad json graph document: {0}")]
    Json(#[from] serde_json::Error),
    #[error("invalid graph: {0}")]
    Invalid(#[from] GraphError),
}

/// Serde shape of the JSON encoding.
#[derive(Debug, Serialize, Deserialize)]
struct GraphDoc {
    n: usize,
    edges: Vec<(usize, usize)>,
}

/// Parses the edge-list text format.
pub fn read_edge_list<R: Read>(reader: R) -> Result<Graph, GraphIoError> {
    let mut lines = BufReader::new(reader).lines();
    let header = loop {
        match lines.next() {
            Some(line) => {
                let line = line?;
                let content = strip_comment(&line);
                if !content.is_empty() {
                    break content.to_string();
                }
            }
            None => return Err(GraphIoError::MissingHeader),
        }
    };
    let n = match header.split_whitespace().collect::<Vec<_>>()[..] {
        ["n", count] => count
            .parse::<usize>()
            .map_err(|_| GraphIoError::BadHeader { line: header.clone() })?,
        _ => return Err(GraphIoError::BadHeader { line: header }),
    };

    let mut edges = Vec::new();
    for line in lines {
        let line = line?;
        let content = strip_comment(&line);
        if content.is_empty() {
            continue;
        }
        let pair: Vec<_> = content.split_whitespace().collect();
        let (u, v) = match pair[..] {
            [u, v] => (u.parse::<usize>(), v.parse::<usize>()),
            _ => {
                return Err(GraphIoError::BadEdgeLine {
                    line: line.to_string(),
                })
            }
        };
        match (u, v) {
            (Ok(u), Ok(v)) => edges.push((u, v)),
            _ => {
                return Err(GraphIoError::BadEdgeLine {
                    line: line.to_string(),
                })
            }
        }
    }
    Ok(Graph::from_edges(n, &edges)?)
}

fn strip_comment(line: &str) -> &str {
    line.split('#').next().unwrap_or("").trim()
}

/// Writes the edge-list text format, edges ascending with `u < v`.
pub fn write_edge_list<W: Write>(g: &Graph, writer: W) -> Result<(), GraphIoError> {
    let mut w = BufWriter::new(writer);
    writeln!(w, "n {}", g.n())?;
    for (u, v) in g.edges() {
        writeln!(w, "{u} {v}")?;
    }
    w.flush()?;
    Ok(())
}

/// Parses the JSON encoding.
pub fn read_json<R: Read>(reader: R) -> Result<Graph, GraphIoError> {
    let doc: GraphDoc = serde_json::from_reader(reader)?;
    Ok(Graph::from_edges(doc.n, &doc.edges)?)
}

/// Writes the JSON encoding, edges ascending with `u < v`.
pub fn write_json<W: Write>(g: &Graph, writer: W) -> Result<(), GraphIoError> {
    let doc = GraphDoc {
        n: g.n(),
        edges: g.edges().collect(),
    };
    serde_json::to_writer_pretty(writer, &doc)?;
    Ok(())
}

fn is_json(path: &Path) -> bool {
    path.extension().is_some_and(|e| e.eq_ignore_ascii_case("json"))
}

/// Reads either format, selected by file extension.
pub fn read_graph_path(path: &Path) -> Result<Graph, GraphIoError> {
    let file = File::open(path)?;
    if is_json(path) {
        read_json(file)
    } else {
        read_edge_list(file)
    }
}

/// Writes either format, selected by file extension.
pub fn write_graph_path(g: &Graph, path: &Path) -> Result<(), GraphIoError> {
    let file = File::create(path)?;
    if is_json(path) {
        write_json(g, file)
    } else {
        write_edge_list(g, file)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> Graph {
        Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (1, 3)]).unwrap()
    }

    fn graphs_equal(a: &Graph, b: &Graph) -> bool {
        a.n() == b.n() && a.edges().collect::<Vec<_>>() == b.edges().collect::<Vec<_>>()
    }

    #[test]
    fn edge_list_round_trip() {
        let g = sample();
        let mut buf = Vec::new();
        write_edge_list(&g, &mut buf).unwrap();
        let back = read_edge_list(buf.as_slice()).unwrap();
        assert!(graphs_equal(&g, &back));
    }

    #[test]
    fn json_round_trip() {
        let g = sample();
        let mut buf = Vec::new();
        write_json(&g, &mut buf).unwrap();
        let back = read_json(buf.as_slice()).unwrap();
        assert!(graphs_equal(&g, &back));
    }

    #[test]
    fn edge_list_tolerates_comments_blanks_and_odd_whitespace() {
        let text = "\n# a 5-cycle with a chord\n  n 5\n0 1 # first edge\n\n1 2\n2\t3\n3 4\n4 0\n1 3\n";
        let g = read_edge_list(text.as_bytes()).unwrap();
        assert!(graphs_equal(&g, &sample()));
    }

    #[test]
    fn edge_list_order_does_not_matter() {
        let text_a = "n 3\n0 1\n1 2\n";
        let text_b = "n 3\n2 1\n1 0\n";
        let a = read_edge_list(text_a.as_bytes()).unwrap();
        let b = read_edge_list(text_b.as_bytes()).unwrap();
        assert!(graphs_equal(&a, &b));
    }

    #[test]
    fn missing_or_broken_header_is_rejected() {
        assert!(matches!(
            read_edge_list("".as_bytes()).unwrap_err(),
            GraphIoError::MissingHeader
        ));
        assert!(matches!(
            read_edge_list("# only comments\n\n".as_bytes()).unwrap_err(),
            GraphIoError::MissingHeader
        ));
        assert!(matches!(
            read_edge_list("5\n0 1\n".as_bytes()).unwrap_err(),
            GraphIoError::BadHeader { .. }
        ));
        assert!(matches!(
            read_edge_list("n five\n".as_bytes()).unwrap_err(),
            GraphIoError::BadHeader { .. }
        ));
    }

    #[test]
    fn bad_edge_lines_are_rejected() {
        assert!(matches!(
            read_edge_list("n 3\n0 1 2\n".as_bytes()).unwrap_err(),
            GraphIoError::BadEdgeLine { .. }
        ));
        assert!(matches!(
            read_edge_list("n 3\n0 x\n".as_bytes()).unwrap_err(),
            GraphIoError::BadEdgeLine { .. }
        ));
    }

    #[test]
    fn validation_errors_surface_through_io() {
        // Self loop inside an otherwise fine file.
        let err = read_edge_list("n 3\n0 1\n1 2\n2 2\n".as_bytes()).unwrap_err();
        assert!(matches!(err, GraphIoError::Invalid(GraphError::SelfLoop(2))));
        let err = read_json(r#"{"n": 4, "edges": [[0,1],[2,3]]}"#.as_bytes()).unwrap_err();
        assert!(matches!(
            err,
            GraphIoError::Invalid(GraphError::Disconnected { .. })
        ));
    }

    #[test]
    fn path_dispatch_by_extension() {
        let dir = std::env::temp_dir().join(format!("copchase-io-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        let g = sample();
        for name in ["g.edges", "g.txt", "g.json"] {
            let path = dir.join(name);
            write_graph_path(&g, &path).unwrap();
            let back = read_graph_path(&path).unwrap();
            assert!(graphs_equal(&g, &back), "round trip through {name}");
        }
        // The .json file really is JSON.
        let raw = std::fs::read_to_string(dir.join("g.json")).unwrap();
        assert!(raw.trim_start().starts_with('{'));
        std::fs::remove_dir_all(&dir).unwrap();
    }
}
