//! Line-based instance file format.
//!
//! ```text
//! # optional comments
//! n 6
//! delta 4
//! c 1
//! edge 0 1 0
//! edge 0 2 3
//! ```
//!
//! Color `0` marks the uncolored edge. The writer emits comments first, then
//! the header, then edges sorted by endpoints, so write -> read -> write is
//! byte-identical.

use thiserror::Error;

use crate::graph::{ColoredGraph, GraphError, UNCOLORED};

#[derive(Debug, Error)]
pub enum InstanceError {
    #[error("line {0}: {1}")]
    Parse(usize, String),
    #[error("missing header field `{0}`")]
    MissingHeader(&'static str),
    #[error("graph rejected instance data: {0}")]
    Graph(#[from] GraphError),
}

pub fn write_instance(g: &ColoredGraph, comments: &[String]) -> String {
    let mut out = String::new();
    for c in comments {
        out.push_str("# ");
        out.push_str(c);
        out.push('\n');
    }
    out.push_str(&format!("n {}\n", g.vertex_count()));
    out.push_str(&format!("delta {}\n", g.max_degree_bound()));
    out.push_str(&format!("c {}\n", g.extra_colors()));
    for (u, v, color) in g.edges() {
        out.push_str(&format!("edge {u} {v} {color}\n"));
    }
    out
}

pub fn read_instance(text: &str) -> Result<(ColoredGraph, Vec<String>), InstanceError> {
    let mut n = None;
    let mut delta = None;
    let mut extra = None;
    let mut comments = Vec::new();
    let mut edges: Vec<(usize, usize, usize)> = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix('#') {
            comments.push(rest.trim_start().to_string());
            continue;
        }
        let mut parts = line.split_whitespace();
        let tag = parts.next().unwrap();
        let mut next_int = |what: &str| -> Result<usize, InstanceError> {
            parts
                .next()
                .ok_or_else(|| parse_err(lineno, format!("missing {what}")))?
                .parse::<usize>()
                .map_err(|e| parse_err(lineno, format!("bad {what}: {e}")))
        };
        match tag {
            "n" => n = Some(next_int("vertex count")?),
            "delta" => delta = Some(next_int("degree bound")?),
            "c" => extra = Some(next_int("extra colors")?),
            "edge" => {
                let u = next_int("endpoint")?;
                let v = next_int("endpoint")?;
                let color = next_int("color")?;
                edges.push((u, v, color));
            }
            other => {
                return Err(parse_err(lineno, format!("unknown tag `{other}`")));
            }
        }
        if let Some(extra_tok) = parts.next() {
            return Err(parse_err(lineno, format!("trailing token `{extra_tok}`")));
        }
    }

    let n = n.ok_or(InstanceError::MissingHeader("n"))?;
    let delta = delta.ok_or(InstanceError::MissingHeader("delta"))?;
    let extra = extra.ok_or(InstanceError::MissingHeader("c"))?;
    let mut g = ColoredGraph::new(n, delta, extra);
    for (u, v, color) in edges {
        g.insert_edge(u, v)?;
        if color != UNCOLORED {
            g.assign_color(u, v, color)?;
        }
    }
    Ok((g, comments))
}

fn parse_err(line: usize, msg: String) -> InstanceError {
    InstanceError::Parse(line, msg)
}
