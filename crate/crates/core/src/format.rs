//! Text serialization of rotation systems.
//!
//! ```text
//! planegraph v1
//! <vertex_count> <edge_count>
//! <vertex_id>: (<neighbor_id>,<edge_id>) (<neighbor_id>,<edge_id>) ...
//! ```
//!
//! Vertex lines appear in id order and list incident darts in clockwise
//! rotation order. Every edge id appears exactly twice in the whole file.
//! Blank lines and `#` comments are ignored.

use crate::embedding::{PlaneGraph, VertexId};
use crate::error::{Error, Result};

pub const HEADER: &str = "planegraph v1";

pub fn write(g: &PlaneGraph) -> String {
    let mut out = String::new();
    out.push_str(HEADER);
    out.push('\n');
    out.push_str(&format!("{} {}\n", g.vertex_count(), g.edge_count()));
    for v in 0..g.vertex_count() {
        out.push_str(&format!("{v}:"));
        for (w, e) in g.neighbor_entries(v) {
            out.push_str(&format!(" ({w},{e})"));
        }
        out.push('\n');
    }
    out
}

pub fn parse(text: &str) -> Result<PlaneGraph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());

    let (line_no, header) = lines.next().ok_or_else(|| Error::Parse {
        line: 1,
        msg: "empty file".into(),
    })?;
    if header != HEADER {
        return Err(Error::Parse {
            line: line_no,
            msg: format!("expected header `{HEADER}`, found `{header}`"),
        });
    }

    let (line_no, counts) = lines.next().ok_or_else(|| Error::Parse {
        line: line_no + 1,
        msg: "missing `<vertex_count> <edge_count>` line".into(),
    })?;
    let mut it = counts.split_whitespace();
    let n: usize = parse_number(it.next(), line_no, "vertex count")?;
    let m: usize = parse_number(it.next(), line_no, "edge count")?;
    if it.next().is_some() {
        return Err(Error::Parse {
            line: line_no,
            msg: "trailing tokens after vertex and edge count".into(),
        });
    }
    if n == 0 {
        return Err(Error::Parse {
            line: line_no,
            msg: "graph needs at least one vertex".into(),
        });
    }

    let mut adj: Vec<Vec<(VertexId, usize)>> = Vec::with_capacity(n);
    let mut edge_seen = vec![0usize; m];
    for expected in 0..n {
        let (line_no, line) = lines.next().ok_or_else(|| Error::Parse {
            line: line_no + 1,
            msg: format!("missing line for vertex {expected}"),
        })?;
        let (id_part, rest) = line.split_once(':').ok_or_else(|| Error::Parse {
            line: line_no,
            msg: "vertex line needs the form `<id>: (n,e) ...`".into(),
        })?;
        let id: usize = id_part.trim().parse().map_err(|_| Error::Parse {
            line: line_no,
            msg: format!("bad vertex id `{}`", id_part.trim()),
        })?;
        if id != expected {
            return Err(Error::Parse {
                line: line_no,
                msg: format!("vertex lines must be in id order: expected {expected}, found {id}"),
            });
        }
        let mut entries = Vec::new();
        for token in rest.split_whitespace() {
            let inner = token
                .strip_prefix('(')
                .and_then(|t| t.strip_suffix(')'))
                .ok_or_else(|| Error::Parse {
                    line: line_no,
                    msg: format!("bad dart `{token}`, expected `(neighbor,edge)`"),
                })?;
            let (ns, es) = inner.split_once(',').ok_or_else(|| Error::Parse {
                line: line_no,
                msg: format!("bad dart `{token}`, expected `(neighbor,edge)`"),
            })?;
            let nbr: usize = ns.trim().parse().map_err(|_| Error::Parse {
                line: line_no,
                msg: format!("bad neighbor id `{ns}`"),
            })?;
            let edge: usize = es.trim().parse().map_err(|_| Error::Parse {
                line: line_no,
                msg: format!("bad edge id `{es}`"),
            })?;
            if nbr >= n {
                return Err(Error::Parse {
                    line: line_no,
                    msg: format!("neighbor {nbr} out of range (vertex count {n})"),
                });
            }
            if edge >= m {
                return Err(Error::Parse {
                    line: line_no,
                    msg: format!("edge {edge} out of range (edge count {m})"),
                });
            }
            edge_seen[edge] += 1;
            entries.push((nbr, edge));
        }
        adj.push(entries);
    }
    if let Some((line_no, _)) = lines.next() {
        return Err(Error::Parse {
            line: line_no,
            msg: "trailing content after the last vertex line".into(),
        });
    }
    for (e, &count) in edge_seen.iter().enumerate() {
        if count != 2 {
            return Err(Error::Parse {
                line: 0,
                msg: format!("edge {e} appears {count} times, expected exactly 2"),
            });
        }
    }
    PlaneGraph::from_rotations(adj).map_err(|err| match err {
        Error::Malformed(msg) => Error::Parse { line: 0, msg },
        other => other,
    })
}

fn parse_number(token: Option<&str>, line: usize, what: &str) -> Result<usize> {
    token
        .ok_or_else(|| Error::Parse {
            line,
            msg: format!("missing {what}"),
        })?
        .parse()
        .map_err(|_| Error::Parse {
            line,
            msg: format!("bad {what}"),
        })
}
