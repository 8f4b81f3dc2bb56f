//! Edge-list text format.
//!
//! ```text
//! # comment
//! p q          (or "p q d" for a digraph)
//! u v          (q lines, 1-indexed, "u u" is a loop)
//! ```

use std::fmt::Write as _;

use thiserror::Error;

use super::{Digraph, Graph, GraphError};

#[derive(Debug, Error)]
pub enum EdgeListError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("missing header line")]
    MissingHeader,
    #[error("header declares {declared} edges, found {found}")]
    CountMismatch { declared: usize, found: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Either kind of edge-list file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EdgeList {
    Graph(Graph),
    Digraph(Digraph),
}

impl EdgeList {
    pub fn is_directed(&self) -> bool {
        matches!(self, EdgeList::Digraph(_))
    }
}

fn parse_usize(tok: &str, line: usize) -> Result<usize, EdgeListError> {
    tok.parse().map_err(|_| EdgeListError::Syntax {
        line,
        message: format!("expected a non-negative integer, found {tok:?}"),
    })
}

pub fn parse(text: &str) -> Result<EdgeList, EdgeListError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());

    let (hline, header) = lines.next().ok_or(EdgeListError::MissingHeader)?;
    let toks: Vec<&str> = header.split_whitespace().collect();
    let directed = match toks.as_slice() {
        [_, _] => false,
        [_, _, "d"] => true,
        _ => {
            return Err(EdgeListError::Syntax {
                line: hline,
                message: "header must be \"p q\" or \"p q d\"".into(),
            })
        }
    };
    let order = parse_usize(toks[0], hline)?;
    let size = parse_usize(toks[1], hline)?;

    let mut pairs = Vec::with_capacity(size);
    for (line, l) in lines {
        let toks: Vec<&str> = l.split_whitespace().collect();
        if toks.len() != 2 {
            return Err(EdgeListError::Syntax { line, message: "expected \"u v\"".into() });
        }
        pairs.push((parse_usize(toks[0], line)?, parse_usize(toks[1], line)?));
    }
    if pairs.len() != size {
        return Err(EdgeListError::CountMismatch { declared: size, found: pairs.len() });
    }
    Ok(if directed {
        EdgeList::Digraph(Digraph::new(order, pairs)?)
    } else {
        EdgeList::Graph(Graph::new(order, pairs)?)
    })
}

pub fn parse_graph(text: &str) -> Result<Graph, EdgeListError> {
    match parse(text)? {
        EdgeList::Graph(g) => Ok(g),
        EdgeList::Digraph(_) => Err(EdgeListError::Syntax {
            line: 1,
            message: "expected an undirected graph, found a digraph header".into(),
        }),
    }
}

pub fn parse_digraph(text: &str) -> Result<Digraph, EdgeListError> {
    match parse(text)? {
        EdgeList::Digraph(d) => Ok(d),
        EdgeList::Graph(_) => Err(EdgeListError::Syntax {
            line: 1,
            message: "expected a digraph (header \"p q d\")".into(),
        }),
    }
}

pub fn write_graph(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.order(), g.size());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

pub fn write_digraph(d: &Digraph) -> String {
    let mut out = format!("{} {} d\n", d.order(), d.size());
    for (a, b) in d.arcs() {
        let _ = writeln!(out, "{a} {b}");
    }
    out
}
