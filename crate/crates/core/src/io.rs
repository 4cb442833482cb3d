//! Plain-text formats for graphs, edge colorings, and vertex partitions.
//!
//! Graph: header line `n m`, then m lines `u v` with u < v. Writers emit
//! edges in lexicographic order; readers accept any order but reject loops,
//! duplicates, and out-of-range endpoints.
//!
//! Coloring: header line `n c`, then one line `u v color` for every pair
//! u < v, in lexicographic order.
//!
//! Partition: one line per class, vertices separated by spaces; an empty
//! class is an empty line.
//!
//! Lines starting with `#` and blank lines are skipped everywhere.

use std::fmt::Write as _;

use crate::detect::EdgeColoring;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::partition::PartitionClasses;

struct Lines<'a> {
    inner: std::iter::Enumerate<std::str::Lines<'a>>,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Self {
        Lines { inner: text.lines().enumerate() }
    }

    /// Next meaningful line as (1-based line number, trimmed content).
    fn next(&mut self) -> Option<(usize, &'a str)> {
        for (idx, raw) in self.inner.by_ref() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            return Some((idx + 1, line));
        }
        None
    }
}

fn parse_fields(line: usize, text: &str, expect: usize) -> Result<Vec<usize>> {
    let fields: Vec<usize> = text
        .split_whitespace()
        .map(|t| {
            t.parse::<usize>().map_err(|_| Error::Parse {
                line,
                msg: format!("expected an integer, found {t:?}"),
            })
        })
        .collect::<Result<_>>()?;
    if fields.len() != expect {
        return Err(Error::Parse {
            line,
            msg: format!("expected {expect} fields, found {}", fields.len()),
        });
    }
    Ok(fields)
}

pub fn write_graph(g: &Graph) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{} {}", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

pub fn read_graph(text: &str) -> Result<Graph> {
    let mut lines = Lines::new(text);
    let (lno, header) = lines
        .next()
        .ok_or(Error::Parse { line: 0, msg: "empty input".into() })?;
    let h = parse_fields(lno, header, 2)?;
    let (n, m) = (h[0], h[1]);
    let mut edges = Vec::with_capacity(m);
    for _ in 0..m {
        let (lno, line) = lines.next().ok_or(Error::Parse {
            line: 0,
            msg: format!("expected {m} edge lines, input ended early"),
        })?;
        let f = parse_fields(lno, line, 2)?;
        let (u, v) = (f[0], f[1]);
        if u == v {
            return Err(Error::Parse { line: lno, msg: format!("loop at vertex {u}") });
        }
        if u >= n || v >= n {
            return Err(Error::Parse {
                line: lno,
                msg: format!("edge {u} {v} out of range 0..{n}"),
            });
        }
        edges.push((u.min(v), u.max(v)));
    }
    if let Some((lno, _)) = lines.next() {
        return Err(Error::Parse { line: lno, msg: "trailing content after edge list".into() });
    }
    let mut sorted = edges.clone();
    sorted.sort_unstable();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        let dup = sorted.windows(2).find(|w| w[0] == w[1]).unwrap()[0];
        return Err(Error::Parse { line: 0, msg: format!("duplicate edge {} {}", dup.0, dup.1) });
    }
    Graph::from_edges(n, &edges)
}

pub fn write_coloring(col: &EdgeColoring) -> String {
    let n = col.n();
    let mut out = String::new();
    let _ = writeln!(out, "{} {}", n, col.num_colors());
    for u in 0..n {
        for v in u + 1..n {
            let _ = writeln!(out, "{u} {v} {}", col.color(u, v));
        }
    }
    out
}

pub fn read_coloring(text: &str) -> Result<EdgeColoring> {
    let mut lines = Lines::new(text);
    let (lno, header) = lines
        .next()
        .ok_or(Error::Parse { line: 0, msg: "empty input".into() })?;
    let h = parse_fields(lno, header, 2)?;
    let (n, c) = (h[0], h[1]);
    let pairs = n * n.saturating_sub(1) / 2;
    let mut colors: Vec<Option<u32>> = vec![None; pairs];
    for _ in 0..pairs {
        let (lno, line) = lines.next().ok_or(Error::Parse {
            line: 0,
            msg: format!("expected {pairs} pair lines, input ended early"),
        })?;
        let f = parse_fields(lno, line, 3)?;
        let (u, v, color) = (f[0], f[1], f[2]);
        if u >= v || v >= n {
            return Err(Error::Parse {
                line: lno,
                msg: format!("pair {u} {v} is not a valid pair with u < v < {n}"),
            });
        }
        if color >= c {
            return Err(Error::Parse {
                line: lno,
                msg: format!("color {color} out of range 0..{c}"),
            });
        }
        let idx = crate::detect::pair_index(n, u, v);
        if colors[idx].is_some() {
            return Err(Error::Parse { line: lno, msg: format!("duplicate pair {u} {v}") });
        }
        colors[idx] = Some(color as u32);
    }
    if let Some((lno, _)) = lines.next() {
        return Err(Error::Parse { line: lno, msg: "trailing content after pair list".into() });
    }
    let colors: Vec<u32> = colors.into_iter().map(|c| c.expect("all pairs seen")).collect();
    EdgeColoring::new(n, c as u32, colors)
}

pub fn write_partition(parts: &PartitionClasses) -> String {
    let mut out = String::new();
    for class in parts.classes() {
        let mut first = true;
        for v in class.iter() {
            if !first {
                out.push(' ');
            }
            let _ = write!(out, "{v}");
            first = false;
        }
        out.push('\n');
    }
    out
}

/// Partition lines cover vertices 0..n for the n supplied by the caller;
/// blank lines are empty classes here, so only `#` lines are skipped.
pub fn read_partition(n: usize, text: &str) -> Result<PartitionClasses> {
    let mut classes = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.starts_with('#') {
            continue;
        }
        let vs: Vec<usize> = line
            .split_whitespace()
            .map(|t| {
                t.parse::<usize>().map_err(|_| Error::Parse {
                    line: idx + 1,
                    msg: format!("expected an integer, found {t:?}"),
                })
            })
            .collect::<Result<_>>()?;
        classes.push(VertexSet::new(vs));
    }
    PartitionClasses::new(n, classes)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graph_round_trip() {
        let g = Graph::turan(7, 3).unwrap();
        let text = write_graph(&g);
        let h = read_graph(&text).unwrap();
        assert_eq!(write_graph(&h), text);
    }

    #[test]
    fn graph_reader_rejections() {
        assert!(matches!(read_graph(""), Err(Error::Parse { .. })));
        assert!(read_graph("3 1\n0 0\n").is_err()); // loop
        assert!(read_graph("3 1\n0 5\n").is_err()); // out of range
        assert!(read_graph("3 2\n0 1\n1 0\n").is_err()); // duplicate
        assert!(read_graph("3 2\n0 1\n").is_err()); // short
        assert!(read_graph("3 1\n0 1\n1 2\n").is_err()); // trailing
        assert!(read_graph("3 1\n0 x\n").is_err()); // non-integer
    }

    #[test]
    fn graph_comments_and_order() {
        let text = "# a triangle\n3 3\n\n1 2\n0 2\n0 1\n";
        let g = read_graph(text).unwrap();
        assert_eq!(g.edge_count(), 3);
        assert_eq!(write_graph(&g), "3 3\n0 1\n0 2\n1 2\n");
    }

    #[test]
    fn coloring_round_trip() {
        let col = EdgeColoring::new(4, 3, vec![0, 1, 2, 2, 1, 0]).unwrap();
        let text = write_coloring(&col);
        let back = read_coloring(&text).unwrap();
        assert_eq!(write_coloring(&back), text);
    }

    #[test]
    fn coloring_reader_rejections() {
        assert!(read_coloring("3 2\n0 1 0\n0 2 1\n").is_err()); // missing pair
        assert!(read_coloring("3 2\n0 1 0\n0 1 1\n0 2 1\n1 2 0\n").is_err()); // dup + trailing
        assert!(read_coloring("3 2\n0 1 0\n0 2 5\n1 2 1\n").is_err()); // color range
        assert!(read_coloring("3 2\n1 0 0\n0 2 1\n1 2 1\n").is_err()); // u >= v
    }

    #[test]
    fn partition_round_trip() {
        let parts = PartitionClasses::turan_layout(7, 3).unwrap();
        let text = write_partition(&parts);
        let back = read_partition(7, &text).unwrap();
        assert_eq!(back, parts);
    }

    #[test]
    fn partition_with_empty_class() {
        let parts = PartitionClasses::new(
            3,
            vec![VertexSet::new(vec![0, 1, 2]), VertexSet::new(vec![])],
        )
        .unwrap();
        let text = write_partition(&parts);
        assert_eq!(text, "0 1 2\n\n");
        let back = read_partition(3, &text).unwrap();
        assert_eq!(back, parts);
    }

    #[test]
    fn partition_reader_rejections() {
        assert!(read_partition(4, "0 1\n2\n").is_err()); // vertex 3 uncovered
        assert!(read_partition(3, "0 1\n1 2\n").is_err()); // overlap
    }
}
