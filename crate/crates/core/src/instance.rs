//! Line-oriented instance file format, in the DIMACS tradition.
//!
//! ```text
//! c optional comment, ignored anywhere
//! p minlinks <n> <m> <k>
//! t <v> <threshold>        (one line per node)
//! e <u> <v>                (one line per edge, u != v)
//! ```
//!
//! Ids are 1-based in files and 0-based in memory; the translation happens
//! here and nowhere else. [`serialize`] emits the canonical form: no
//! comments, thresholds ascending by node, edges ascending with the lower
//! endpoint first, so parsing it back yields the identical instance.

use std::collections::HashSet;
use std::fmt;

use crate::diffusion::DiffusionTrace;
use crate::graph::{Graph, InfluencerBudget, Solution};

/// A parse failure, pinned to the 1-based line that caused it. Errors only
/// detectable at end of input (missing lines) point one past the last line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParseErrorKind {
    /// The first non-comment line must be the `p minlinks n m k` header.
    HeaderMissing,
    /// Header present but not of the shape `p minlinks <n> <m> <k>` with
    /// counts fitting 32 bits.
    HeaderMalformed,
    HeaderDuplicate,
    /// Line starts with a tag other than c, p, t or e.
    UnknownTag(String),
    /// Tagged line with the wrong number of fields or a non-integer field.
    MalformedLine,
    NodeOutOfRange { id: u64, nodes: u64 },
    ThresholdNotPositive { node: u64 },
    BudgetNotPositive,
    DuplicateThreshold { node: u64 },
    MissingThreshold { node: u64 },
    SelfLoop { node: u64 },
    DuplicateEdge { u: u64, v: u64 },
    /// More `e` lines than the header's m.
    TooManyEdges { declared: u64 },
    /// Fewer `e` lines than the header's m, noticed at end of input.
    EdgeCountMismatch { declared: u64, found: u64 },
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}: {}", self.line, self.kind)
    }
}

impl fmt::Display for ParseErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseErrorKind::HeaderMissing => {
                write!(f, "expected the `p minlinks <n> <m> <k>` header")
            }
            ParseErrorKind::HeaderMalformed => {
                write!(f, "malformed header, expected `p minlinks <n> <m> <k>`")
            }
            ParseErrorKind::HeaderDuplicate => write!(f, "second `p` header"),
            ParseErrorKind::UnknownTag(tag) => write!(f, "unknown line tag `{tag}`"),
            ParseErrorKind::MalformedLine => write!(f, "malformed line"),
            ParseErrorKind::NodeOutOfRange { id, nodes } => {
                write!(f, "node id {id} out of range 1..={nodes}")
            }
            ParseErrorKind::ThresholdNotPositive { node } => {
                write!(f, "threshold of node {node} must be at least 1")
            }
            ParseErrorKind::BudgetNotPositive => write!(f, "k must be at least 1"),
            ParseErrorKind::DuplicateThreshold { node } => {
                write!(f, "node {node} already has a threshold")
            }
            ParseErrorKind::MissingThreshold { node } => {
                write!(f, "no threshold line for node {node}")
            }
            ParseErrorKind::SelfLoop { node } => write!(f, "self-loop on node {node}"),
            ParseErrorKind::DuplicateEdge { u, v } => write!(f, "duplicate edge {u} {v}"),
            ParseErrorKind::TooManyEdges { declared } => {
                write!(f, "more than the declared {declared} edges")
            }
            ParseErrorKind::EdgeCountMismatch { declared, found } => {
                write!(f, "header declared {declared} edges but {found} were given")
            }
        }
    }
}

impl std::error::Error for ParseError {}

fn fail(line: usize, kind: ParseErrorKind) -> ParseError {
    ParseError { line, kind }
}

/// Parses instance text into a validated graph and budget.
pub fn parse(text: &str) -> Result<(Graph, InfluencerBudget), ParseError> {
    let mut header: Option<(u64, u64, u32)> = None;
    let mut thresholds: Vec<Option<u32>> = Vec::new();
    let mut edges: Vec<(u32, u32)> = Vec::new();
    let mut seen_edges: HashSet<(u32, u32)> = HashSet::new();
    let mut line_count = 0;

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        line_count = line;
        let mut fields = raw.split_whitespace();
        let tag = match fields.next() {
            None => continue,
            Some(tag) => tag,
        };
        let rest: Vec<&str> = fields.collect();
        match tag {
            "c" => continue,
            "p" => {
                if header.is_some() {
                    return Err(fail(line, ParseErrorKind::HeaderDuplicate));
                }
                if rest.len() != 4 || rest[0] != "minlinks" {
                    return Err(fail(line, ParseErrorKind::HeaderMalformed));
                }
                let n: u64 = rest[1]
                    .parse()
                    .map_err(|_| fail(line, ParseErrorKind::HeaderMalformed))?;
                let m: u64 = rest[2]
                    .parse()
                    .map_err(|_| fail(line, ParseErrorKind::HeaderMalformed))?;
                let k: u64 = rest[3]
                    .parse()
                    .map_err(|_| fail(line, ParseErrorKind::HeaderMalformed))?;
                if n > u32::MAX as u64 || k > u32::MAX as u64 {
                    return Err(fail(line, ParseErrorKind::HeaderMalformed));
                }
                if k == 0 {
                    return Err(fail(line, ParseErrorKind::BudgetNotPositive));
                }
                thresholds = vec![None; n as usize];
                header = Some((n, m, k as u32));
            }
            "t" => {
                let (n, _, _) =
                    header.ok_or_else(|| fail(line, ParseErrorKind::HeaderMissing))?;
                if rest.len() != 2 {
                    return Err(fail(line, ParseErrorKind::MalformedLine));
                }
                let v = parse_node_id(rest[0], n, line)?;
                let t: u64 = rest[1]
                    .parse()
                    .map_err(|_| fail(line, ParseErrorKind::MalformedLine))?;
                if t == 0 {
                    return Err(fail(line, ParseErrorKind::ThresholdNotPositive { node: v + 1 }));
                }
                if t > u32::MAX as u64 {
                    return Err(fail(line, ParseErrorKind::MalformedLine));
                }
                let slot = &mut thresholds[v as usize];
                if slot.is_some() {
                    return Err(fail(line, ParseErrorKind::DuplicateThreshold { node: v + 1 }));
                }
                *slot = Some(t as u32);
            }
            "e" => {
                let (n, m, _) =
                    header.ok_or_else(|| fail(line, ParseErrorKind::HeaderMissing))?;
                if rest.len() != 2 {
                    return Err(fail(line, ParseErrorKind::MalformedLine));
                }
                let u = parse_node_id(rest[0], n, line)?;
                let v = parse_node_id(rest[1], n, line)?;
                if u == v {
                    return Err(fail(line, ParseErrorKind::SelfLoop { node: u + 1 }));
                }
                let pair = (u.min(v) as u32, u.max(v) as u32);
                if !seen_edges.insert(pair) {
                    return Err(fail(
                        line,
                        ParseErrorKind::DuplicateEdge { u: pair.0 as u64 + 1, v: pair.1 as u64 + 1 },
                    ));
                }
                if edges.len() as u64 == m {
                    return Err(fail(line, ParseErrorKind::TooManyEdges { declared: m }));
                }
                edges.push(pair);
            }
            other => {
                return Err(fail(line, ParseErrorKind::UnknownTag(other.to_string())));
            }
        }
    }

    let eof = line_count + 1;
    let (_, m, k) = header.ok_or_else(|| fail(eof, ParseErrorKind::HeaderMissing))?;
    let mut resolved = Vec::with_capacity(thresholds.len());
    for (v, t) in thresholds.iter().enumerate() {
        match t {
            Some(t) => resolved.push(*t),
            None => {
                return Err(fail(eof, ParseErrorKind::MissingThreshold { node: v as u64 + 1 }))
            }
        }
    }
    if (edges.len() as u64) < m {
        return Err(fail(
            eof,
            ParseErrorKind::EdgeCountMismatch { declared: m, found: edges.len() as u64 },
        ));
    }

    let graph = Graph::new(resolved, &edges).expect("all graph invariants checked line by line");
    let budget = InfluencerBudget::new(k).expect("k checked at the header");
    Ok((graph, budget))
}

fn parse_node_id(field: &str, n: u64, line: usize) -> Result<u64, ParseError> {
    let id: u64 = field
        .parse()
        .map_err(|_| fail(line, ParseErrorKind::MalformedLine))?;
    if id == 0 || id > n {
        return Err(fail(line, ParseErrorKind::NodeOutOfRange { id, nodes: n }));
    }
    Ok(id - 1)
}

/// Canonical text for an instance; [`parse`] returns it unchanged.
pub fn serialize(g: &Graph, k: InfluencerBudget) -> String {
    let mut out = String::new();
    serialize_into(&mut out, g, k);
    out
}

/// [`serialize`] preceded by `c` lines, for generators that record how the
/// instance was produced.
pub fn serialize_with_comments(g: &Graph, k: InfluencerBudget, comments: &[String]) -> String {
    let mut out = String::new();
    for comment in comments {
        out.push_str("c ");
        out.push_str(comment);
        out.push('\n');
    }
    serialize_into(&mut out, g, k);
    out
}

fn serialize_into(out: &mut String, g: &Graph, k: InfluencerBudget) {
    use fmt::Write;
    writeln!(out, "p minlinks {} {} {}", g.node_count(), g.edge_count(), k.get()).unwrap();
    for v in g.nodes() {
        writeln!(out, "t {} {}", v + 1, g.threshold(v)).unwrap();
    }
    for (u, v) in g.edges() {
        writeln!(out, "e {} {}", u + 1, v + 1).unwrap();
    }
}

/// Solution text: `s <v> <count>` for each linked node ascending, then
/// `total <L>`; or the single word `infeasible`.
pub fn format_solution(solution: &Solution) -> String {
    use fmt::Write;
    match solution {
        Solution::Infeasible => "infeasible\n".to_string(),
        Solution::Feasible(links) => {
            let mut out = String::new();
            for (v, count) in links.entries() {
                writeln!(out, "s {} {}", v + 1, count).unwrap();
            }
            writeln!(out, "total {}", links.total()).unwrap();
            out
        }
    }
}

/// Trace text: one `round <j>: <ids>` line per round, each listing every
/// node active at that round (1-based, ascending).
pub fn format_trace(trace: &DiffusionTrace) -> String {
    use fmt::Write;
    let mut out = String::new();
    for j in 0..=trace.fixpoint_round() {
        write!(out, "round {j}:").unwrap();
        for v in trace.active_at(j) {
            write!(out, " {}", v + 1).unwrap();
        }
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diffusion::simulate;
    use crate::graph::LinkVector;

    #[test]
    fn parses_the_two_node_path() {
        let text = "p minlinks 2 1 1\nt 1 1\nt 2 1\ne 1 2\n";
        let (g, k) = parse(text).unwrap();
        assert_eq!(g.node_count(), 2);
        assert_eq!(g.thresholds(), &[1, 1]);
        assert_eq!(g.edges(), vec![(0, 1)]);
        assert_eq!(k.get(), 1);
    }

    #[test]
    fn ignores_comments_and_blank_lines() {
        let text = "c a path\n\np minlinks 2 1 2\nc thresholds\nt 2 3\nt 1 1\ne 2 1\nc done\n";
        let (g, k) = parse(text).unwrap();
        assert_eq!(g.thresholds(), &[1, 3]);
        assert_eq!(k.get(), 2);
    }

    #[test]
    fn round_trips_canonical_instances() {
        let cases = vec![
            (Graph::complete(vec![1, 1, 1, 1, 1, 6, 6]).unwrap(), 6),
            (Graph::ring(vec![1, 2, 1, 2]).unwrap(), 2),
            (Graph::new(vec![5], &[]).unwrap(), 9),
            (Graph::new(vec![], &[]).unwrap(), 1),
        ];
        for (g, k) in cases {
            let k = InfluencerBudget::new(k).unwrap();
            let text = serialize(&g, k);
            let (back_g, back_k) = parse(&text).unwrap();
            assert_eq!(back_g, g);
            assert_eq!(back_k, k);
            assert_eq!(serialize(&back_g, back_k), text);
        }
    }

    #[test]
    fn comments_do_not_change_the_parse() {
        let g = Graph::star(vec![4, 1, 1, 1]).unwrap();
        let k = InfluencerBudget::new(2).unwrap();
        let plain = parse(&serialize(&g, k)).unwrap();
        let commented = parse(&serialize_with_comments(
            &g,
            k,
            &["generated for a test".to_string(), "seed 7".to_string()],
        ))
        .unwrap();
        assert_eq!(plain, commented);
    }

    #[test]
    fn errors_carry_the_offending_line() {
        let cases: Vec<(&str, usize, ParseErrorKind)> = vec![
            ("", 1, ParseErrorKind::HeaderMissing),
            ("c x\nc y\n", 3, ParseErrorKind::HeaderMissing),
            ("t 1 1\n", 1, ParseErrorKind::HeaderMissing),
            ("p minlinks 1 0\n", 1, ParseErrorKind::HeaderMalformed),
            ("p minlinks a 0 1\n", 1, ParseErrorKind::HeaderMalformed),
            ("p other 1 0 1\n", 1, ParseErrorKind::HeaderMalformed),
            ("p minlinks 1 0 0\n", 1, ParseErrorKind::BudgetNotPositive),
            (
                "p minlinks 1 0 1\np minlinks 1 0 1\n",
                2,
                ParseErrorKind::HeaderDuplicate,
            ),
            (
                "p minlinks 2 1 1\nt 1 1\nt 2 1\nx 1 2\n",
                4,
                ParseErrorKind::UnknownTag("x".to_string()),
            ),
            ("p minlinks 1 0 1\nt 1\n", 2, ParseErrorKind::MalformedLine),
            (
                "p minlinks 1 0 1\nt 2 1\n",
                2,
                ParseErrorKind::NodeOutOfRange { id: 2, nodes: 1 },
            ),
            (
                "p minlinks 1 0 1\nt 1 0\n",
                2,
                ParseErrorKind::ThresholdNotPositive { node: 1 },
            ),
            (
                "p minlinks 1 0 1\nt 1 1\nt 1 2\n",
                3,
                ParseErrorKind::DuplicateThreshold { node: 1 },
            ),
            (
                "p minlinks 2 1 1\nt 1 1\nt 2 1\ne 1 1\n",
                4,
                ParseErrorKind::SelfLoop { node: 1 },
            ),
            (
                "p minlinks 2 2 1\nt 1 1\nt 2 1\ne 1 2\ne 2 1\n",
                5,
                ParseErrorKind::DuplicateEdge { u: 1, v: 2 },
            ),
            (
                "p minlinks 3 1 1\nt 1 1\nt 2 1\nt 3 1\ne 1 2\ne 2 3\n",
                6,
                ParseErrorKind::TooManyEdges { declared: 1 },
            ),
            (
                "p minlinks 2 1 1\nt 1 1\ne 1 2\n",
                4,
                ParseErrorKind::MissingThreshold { node: 2 },
            ),
            (
                "p minlinks 2 2 1\nt 1 1\nt 2 1\ne 1 2\n",
                5,
                ParseErrorKind::EdgeCountMismatch { declared: 2, found: 1 },
            ),
        ];
        for (text, line, kind) in cases {
            assert_eq!(parse(text), Err(ParseError { line, kind }), "input: {text:?}");
        }
    }

    #[test]
    fn solution_text_lists_nonzero_entries() {
        let links = LinkVector::new(vec![0, 2, 0, 1]);
        let text = format_solution(&Solution::Feasible(links));
        assert_eq!(text, "s 2 2\ns 4 1\ntotal 3\n");
        assert_eq!(format_solution(&Solution::Infeasible), "infeasible\n");
    }

    #[test]
    fn trace_text_reports_cumulative_rounds() {
        let g = Graph::path(vec![1, 1, 1]).unwrap();
        let links = LinkVector::new(vec![1, 0, 0]);
        let trace = simulate(&g, &links).unwrap();
        assert_eq!(format_trace(&trace), "round 0: 1\nround 1: 1 2\nround 2: 1 2 3\n");
    }

    #[test]
    fn error_text_is_line_prefixed() {
        let err = parse("p minlinks 1 0 0\n").unwrap_err();
        assert_eq!(err.to_string(), "line 1: k must be at least 1");
    }
}
