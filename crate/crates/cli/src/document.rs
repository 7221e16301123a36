//! Graph documents: the two equivalent input formats and their validation.
//!
//! The line-oriented text format has an `n <count>` header, one `u v` pair
//! per line and `#` comments; repeated pairs make it a multigraph. The JSON
//! format spells the kind out. Both are loopless-validated at parse time.

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DocKind {
    Graph,
    Multigraph,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphDocument {
    pub kind: DocKind,
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub names: Option<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub msg: String,
}

impl std::fmt::Display for ParseError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "parse error at line {}, column {}: {}", self.line, self.col, self.msg)
    }
}

impl GraphDocument {
    /// Parses either format, sniffing JSON by a leading brace.
    pub fn parse(text: &str) -> Result<GraphDocument, ParseError> {
        let doc = if text.trim_start().starts_with('{') {
            parse_json(text)?
        } else {
            parse_text(text)?
        };
        doc.validate()?;
        Ok(doc.canonicalized())
    }

    /// Sorted edge list with sorted endpoints; parallel edges stay.
    pub fn canonicalized(mut self) -> GraphDocument {
        for e in &mut self.edges {
            *e = (e.0.min(e.1), e.0.max(e.1));
        }
        self.edges.sort_unstable();
        self
    }

    #[cfg(test)]
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("document serializes")
    }

    fn validate(&self) -> Result<(), ParseError> {
        let fail = |msg: String| Err(ParseError { line: 0, col: 0, msg });
        for &(u, v) in &self.edges {
            if u == v {
                return fail(format!("loop at vertex {u}"));
            }
            if u >= self.n || v >= self.n {
                return fail(format!("edge ({u},{v}) has an endpoint >= n = {}", self.n));
            }
        }
        if self.kind == DocKind::Graph {
            let mut norm: Vec<(usize, usize)> =
                self.edges.iter().map(|&(u, v)| (u.min(v), u.max(v))).collect();
            norm.sort_unstable();
            if norm.windows(2).any(|w| w[0] == w[1]) {
                return fail("parallel edge in a document of kind \"graph\"".into());
            }
        }
        if let Some(names) = &self.names {
            if names.len() != self.n {
                return fail(format!("expected {} names, got {}", self.n, names.len()));
            }
            let mut sorted = names.clone();
            sorted.sort();
            if sorted.windows(2).any(|w| w[0] == w[1]) {
                return fail("vertex names must be unique".into());
            }
        }
        Ok(())
    }
}

fn parse_json(text: &str) -> Result<GraphDocument, ParseError> {
    serde_json::from_str(text).map_err(|e| ParseError {
        line: e.line(),
        col: e.column(),
        msg: e.to_string(),
    })
}

fn parse_text(text: &str) -> Result<GraphDocument, ParseError> {
    let mut n: Option<usize> = None;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let content = raw.split('#').next().unwrap_or("");
        let mut tokens = content.split_whitespace();
        let Some(first) = tokens.next() else { continue };
        let col = |tok: &str| content.find(tok).map_or(1, |p| p + 1);
        if n.is_none() {
            if first != "n" {
                return Err(ParseError {
                    line: line_no,
                    col: col(first),
                    msg: "expected header `n <count>`".into(),
                });
            }
            let Some(count) = tokens.next() else {
                return Err(ParseError { line: line_no, col: 1, msg: "missing vertex count".into() });
            };
            let parsed = count.parse::<usize>().map_err(|_| ParseError {
                line: line_no,
                col: col(count),
                msg: format!("bad vertex count `{count}`"),
            })?;
            if tokens.next().is_some() {
                return Err(ParseError { line: line_no, col: 1, msg: "trailing tokens after header".into() });
            }
            n = Some(parsed);
            continue;
        }
        let u = first.parse::<usize>().map_err(|_| ParseError {
            line: line_no,
            col: col(first),
            msg: format!("bad vertex id `{first}`"),
        })?;
        let Some(second) = tokens.next() else {
            return Err(ParseError { line: line_no, col: 1, msg: "edge line needs two endpoints".into() });
        };
        let v = second.parse::<usize>().map_err(|_| ParseError {
            line: line_no,
            col: col(second),
            msg: format!("bad vertex id `{second}`"),
        })?;
        if tokens.next().is_some() {
            return Err(ParseError { line: line_no, col: 1, msg: "trailing tokens after edge".into() });
        }
        if u == v {
            return Err(ParseError { line: line_no, col: col(first), msg: format!("loop at vertex {u}") });
        }
        let n = n.expect("header seen");
        if u >= n || v >= n {
            return Err(ParseError {
                line: line_no,
                col: col(first),
                msg: format!("edge ({u},{v}) has an endpoint >= n = {n}"),
            });
        }
        edges.push((u, v));
    }
    let Some(n) = n else {
        return Err(ParseError { line: 1, col: 1, msg: "missing header `n <count>`".into() });
    };
    let mut norm: Vec<(usize, usize)> = edges.iter().map(|&(u, v)| (u.min(v), u.max(v))).collect();
    norm.sort_unstable();
    let kind = if norm.windows(2).any(|w| w[0] == w[1]) { DocKind::Multigraph } else { DocKind::Graph };
    Ok(GraphDocument { kind, n, edges, names: None })
}
