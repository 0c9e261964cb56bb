//! Plain text formats for graphs and interval hypergraphs.
//!
//! Graphs:
//!
//! ```text
//! graph <n> <m>
//! v <label>        (optional; when absent the vertices are 1..n)
//! e <u> <v>        (m lines)
//! ```
//!
//! Interval hypergraphs:
//!
//! ```text
//! ihg <n> <m>
//! i <id> <l> <r>   (m lines)
//! ```
//!
//! Text after `#` is a comment and blank lines are ignored in both.

use std::collections::HashSet;
use std::fmt::Write as _;

use crate::graphs::Graph;
use crate::hyperkit::{validate, Interval, IntervalHypergraph};
use crate::{Error, Result};

/// A whitespace separated token with its 1-based column.
#[derive(Debug, Clone, Copy)]
pub(crate) struct Token<'a> {
    pub text: &'a str,
    pub column: usize,
}

/// A non-empty line split into tokens, comments removed.
pub(crate) struct Line<'a> {
    pub number: usize,
    pub tokens: Vec<Token<'a>>,
    /// The comment text after `#`, if any.
    pub comment: Option<&'a str>,
}

impl Line<'_> {
    pub fn error(&self, column: usize, message: impl Into<String>) -> Error {
        Error::Parse {
            line: self.number,
            column,
            message: message.into(),
        }
    }

    pub fn expect_arity(&self, arity: usize, shape: &str) -> Result<()> {
        if self.tokens.len() == arity {
            return Ok(());
        }
        let column = self
            .tokens
            .get(arity)
            .or(self.tokens.last())
            .map_or(1, |t| t.column);
        Err(self.error(column, format!("expected `{shape}`")))
    }

    pub fn number(&self, index: usize, what: &str) -> Result<usize> {
        let t = self.tokens[index];
        t.text
            .parse()
            .map_err(|_| self.error(t.column, format!("{what} must be a non-negative integer, found `{}`", t.text)))
    }
}

pub(crate) fn lines(text: &str) -> Vec<Line<'_>> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let (body, comment) = match raw.find('#') {
            Some(p) => (&raw[..p], Some(&raw[p + 1..])),
            None => (raw, None),
        };
        let mut tokens = Vec::new();
        let mut start = None;
        for (pos, ch) in body.char_indices().chain(std::iter::once((body.len(), ' '))) {
            match (ch.is_whitespace(), start) {
                (false, None) => start = Some(pos),
                (true, Some(s)) => {
                    tokens.push(Token {
                        text: &body[s..pos],
                        column: body[..s].chars().count() + 1,
                    });
                    start = None;
                }
                _ => {}
            }
        }
        if !tokens.is_empty() || comment.is_some() {
            out.push(Line {
                number: i + 1,
                tokens,
                comment,
            });
        }
    }
    out
}

fn content<'a>(text: &'a str) -> impl Iterator<Item = Line<'a>> {
    lines(text).into_iter().filter(|l| !l.tokens.is_empty())
}

fn header(line: Option<&Line<'_>>, keyword: &str) -> Result<(usize, usize)> {
    let Some(line) = line else {
        return Err(Error::Parse {
            line: 1,
            column: 1,
            message: format!("missing `{keyword} <n> <m>` header"),
        });
    };
    if line.tokens[0].text != keyword {
        return Err(line.error(1.max(line.tokens[0].column), format!("expected `{keyword} <n> <m>` header")));
    }
    line.expect_arity(3, &format!("{keyword} <n> <m>"))?;
    Ok((line.number(1, "n")?, line.number(2, "m")?))
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    let all: Vec<Line<'_>> = content(text).collect();
    let (n, m) = header(all.first(), "graph")?;
    let mut labels: Vec<String> = Vec::new();
    let mut declared = HashSet::new();
    let mut edges: Vec<(&Line<'_>, &str, &str)> = Vec::new();
    for line in &all[1..] {
        match line.tokens[0].text {
            "v" => {
                line.expect_arity(2, "v <label>")?;
                if !edges.is_empty() {
                    return Err(line.error(line.tokens[0].column, "vertex lines must precede edge lines"));
                }
                let label = line.tokens[1].text;
                if !declared.insert(label) {
                    return Err(line.error(line.tokens[1].column, format!("vertex {label} declared twice")));
                }
                labels.push(label.to_string());
            }
            "e" => {
                line.expect_arity(3, "e <u> <v>")?;
                edges.push((line, line.tokens[1].text, line.tokens[2].text));
            }
            other => {
                return Err(line.error(line.tokens[0].column, format!("unknown record `{other}`")));
            }
        }
    }
    let last = all.last().map_or(1, |l| l.number);
    let count_error = |message: String| Error::Parse {
        line: last,
        column: 1,
        message,
    };
    if labels.is_empty() {
        labels = (1..=n).map(|i| i.to_string()).collect();
        declared = labels.iter().map(String::as_str).collect();
    } else if labels.len() != n {
        return Err(count_error(format!("header declares {n} vertices, found {}", labels.len())));
    }
    if edges.len() != m {
        return Err(count_error(format!("header declares {m} edges, found {}", edges.len())));
    }
    let index: std::collections::HashMap<&str, usize> =
        labels.iter().enumerate().map(|(i, l)| (l.as_str(), i)).collect();
    let mut seen = HashSet::new();
    let mut pairs = Vec::with_capacity(m);
    for (line, a, b) in edges {
        for (k, label) in [(1, a), (2, b)] {
            if !declared.contains(label) {
                return Err(line.error(line.tokens[k].column, format!("unknown vertex {label}")));
            }
        }
        if a == b {
            return Err(line.error(line.tokens[1].column, format!("loop at {a}")));
        }
        let (x, y) = (index[a], index[b]);
        if !seen.insert((x.min(y), x.max(y))) {
            return Err(line.error(line.tokens[1].column, format!("edge {a} {b} repeated")));
        }
        pairs.push((x, y));
    }
    Graph::from_indexed(labels, pairs)
}

/// Writes `g` with explicit `v` lines and edges in index order.
pub fn write_graph(g: &Graph) -> String {
    let mut out = format!("graph {} {}\n", g.vertex_count(), g.edge_count());
    for l in g.labels() {
        let _ = writeln!(out, "v {l}");
    }
    for (u, v) in g.edges() {
        let _ = writeln!(out, "e {} {}", g.label(u), g.label(v));
    }
    out
}

pub fn parse_hypergraph(text: &str) -> Result<IntervalHypergraph> {
    let all: Vec<Line<'_>> = content(text).collect();
    let (n, m) = header(all.first(), "ihg")?;
    let mut intervals = Vec::new();
    let mut ids = HashSet::new();
    for line in &all[1..] {
        if line.tokens[0].text != "i" {
            return Err(line.error(line.tokens[0].column, format!("unknown record `{}`", line.tokens[0].text)));
        }
        line.expect_arity(4, "i <id> <l> <r>")?;
        let id = line.tokens[1].text;
        let (l, r) = (line.number(2, "l")?, line.number(3, "r")?);
        if !ids.insert(id) {
            return Err(line.error(line.tokens[1].column, format!("interval id {id} repeated")));
        }
        if l < 1 || l > r || r > n {
            return Err(line.error(
                line.tokens[2].column,
                format!("interval [{l}, {r}] must satisfy 1 <= l <= r <= {n}"),
            ));
        }
        intervals.push(Interval::new(id, l, r));
    }
    if intervals.len() != m {
        return Err(Error::Parse {
            line: all.last().map_or(1, |l| l.number),
            column: 1,
            message: format!("header declares {m} intervals, found {}", intervals.len()),
        });
    }
    let h = IntervalHypergraph::new(n, intervals);
    debug_assert!(validate(&h).is_empty());
    Ok(h)
}

pub fn write_hypergraph(h: &IntervalHypergraph) -> String {
    let mut out = format!("ihg {} {}\n", h.points(), h.intervals().len());
    for i in h.intervals() {
        let _ = writeln!(out, "i {} {} {}", i.id, i.l, i.r);
    }
    out
}
