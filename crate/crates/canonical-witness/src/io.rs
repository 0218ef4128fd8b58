//! The text edge-list format shared repo-wide.
//!
//! First non-comment line is `n m`, followed by `m` lines `u v` with 0-based
//! endpoints. Lines starting with `#` and blank lines are ignored. Parse
//! errors report 1-based line numbers.

use crate::error::{Error, Result};
use crate::graph::Graph;

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut header: Option<(usize, usize)> = None;
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut fields = line.split_whitespace();
        let a = fields.next();
        let b = fields.next();
        let extra = fields.next();
        let (a, b) = match (a, b, extra) {
            (Some(a), Some(b), None) => (a, b),
            _ => {
                return Err(Error::Parse {
                    line: line_no,
                    message: format!("expected two integers, got {line:?}"),
                })
            }
        };
        let a: usize = a.parse().map_err(|_| Error::Parse {
            line: line_no,
            message: format!("not an integer: {a:?}"),
        })?;
        let b: usize = b.parse().map_err(|_| Error::Parse {
            line: line_no,
            message: format!("not an integer: {b:?}"),
        })?;
        match header {
            None => header = Some((a, b)),
            Some((n, m)) => {
                if pairs.len() == m {
                    return Err(Error::Parse {
                        line: line_no,
                        message: format!("more than the declared {m} edges"),
                    });
                }
                if a >= n || b >= n {
                    return Err(Error::Parse {
                        line: line_no,
                        message: format!("edge ({a},{b}) out of range for n={n}"),
                    });
                }
                if a == b {
                    return Err(Error::Parse {
                        line: line_no,
                        message: format!("loop at vertex {a}"),
                    });
                }
                pairs.push((a, b));
            }
        }
    }
    let (n, m) = header.ok_or(Error::Parse {
        line: 1,
        message: "missing 'n m' header line".to_string(),
    })?;
    if pairs.len() != m {
        return Err(Error::Parse {
            line: text.lines().count().max(1),
            message: format!("declared {m} edges but found {}", pairs.len()),
        });
    }
    Graph::from_edge_list(n, &pairs)
}

/// Serializes a graph in the shared format, edges in sorted order.
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.vertex_count(), g.edge_count());
    for &(u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}
