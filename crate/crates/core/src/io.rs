//! The line-oriented instance and solution formats.
//!
//! Instance format (UTF-8, 1-based vertex indices on the wire):
//!
//! ```text
//! c <comment>                    ignored
//! p nws <n> <m> <c>              header, must precede e/s lines
//! w stars | w conn               property (default: conn)
//! e <u> <v> [<weight>]           weight is a decimal string, default 1
//! s <k> <v1> ... <vk>            community of size k
//! l <ell>                        edge budget (default: m)
//! b <budget>                     weight budget decimal or "inf" (default)
//! ```
//!
//! Solution format: `SOLUTION <edge_count> <total_weight>` followed by
//! `e <u> <v>` lines sorted by (u, v), then `cert <i> center <v>` or
//! `cert <i> connected` per community (1-based i), or the single line `NO`.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use crate::error::{InstanceError, ParseError};
use crate::graph::{Community, EdgeId, WeightedGraph};
use crate::instance::{Instance, Property};
use crate::rational::{Budget, Rational};
use crate::solution::{Certificate, Solution};

pub fn parse_instance(text: &str) -> Result<Instance, InstanceError> {
    let mut header: Option<(usize, usize, usize)> = None;
    let mut property = Property::Connectivity;
    let mut edges: Vec<(usize, usize, Rational)> = Vec::new();
    let mut communities: Vec<Community> = Vec::new();
    let mut ell: Option<usize> = None;
    let mut budget = Budget::Infinite;

    for (lineno, raw) in text.lines().enumerate() {
        let lineno = lineno + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        let mut tokens = line.split_whitespace();
        let tag = tokens.next().unwrap();
        let rest: Vec<&str> = tokens.collect();
        let fail = |msg: String| -> InstanceError { ParseError::new(lineno, msg).into() };
        match tag {
            "p" => {
                if rest.len() != 4 || rest[0] != "nws" {
                    return Err(fail("expected: p nws <n> <m> <c>".into()));
                }
                let n = parse_usize(rest[1], lineno)?;
                let m = parse_usize(rest[2], lineno)?;
                let c = parse_usize(rest[3], lineno)?;
                if header.replace((n, m, c)).is_some() {
                    return Err(fail("duplicate p line".into()));
                }
            }
            "w" => {
                property = match rest.as_slice() {
                    ["stars"] => Property::Stars,
                    ["conn"] => Property::Connectivity,
                    _ => return Err(fail("expected: w stars | w conn".into())),
                };
            }
            "e" => {
                let (n, _, _) = header.ok_or_else(|| fail("e line before p header".into()))?;
                if rest.len() != 2 && rest.len() != 3 {
                    return Err(fail("expected: e <u> <v> [<weight>]".into()));
                }
                let u = parse_wire_vertex(rest[0], n, lineno)?;
                let v = parse_wire_vertex(rest[1], n, lineno)?;
                let w = match rest.get(2) {
                    Some(t) => t.parse::<Rational>().map_err(|e| e.at(lineno))?,
                    None => Rational::one(),
                };
                edges.push((u, v, w));
            }
            "s" => {
                let (n, _, _) = header.ok_or_else(|| fail("s line before p header".into()))?;
                if rest.is_empty() {
                    return Err(fail("expected: s <k> <v1> ... <vk>".into()));
                }
                let k = parse_usize(rest[0], lineno)?;
                if rest.len() != k + 1 {
                    return Err(fail(format!(
                        "community declares {k} members but lists {}",
                        rest.len() - 1
                    )));
                }
                let members = rest[1..]
                    .iter()
                    .map(|t| parse_wire_vertex(t, n, lineno))
                    .collect::<Result<Vec<_>, _>>()?;
                communities.push(Community::new(members));
            }
            "l" => {
                if rest.len() != 1 {
                    return Err(fail("expected: l <ell>".into()));
                }
                ell = Some(parse_usize(rest[0], lineno)?);
            }
            "b" => {
                if rest.len() != 1 {
                    return Err(fail("expected: b <budget>".into()));
                }
                budget = rest[0].parse::<Budget>().map_err(|e| e.at(lineno))?;
            }
            other => return Err(fail(format!("unknown line tag {other:?}"))),
        }
    }

    let (n, m, c) = header.ok_or_else(|| ParseError::new(0, "missing p nws header"))?;
    if edges.len() != m {
        return Err(ParseError::new(
            0,
            format!("header declares {m} edges, found {}", edges.len()),
        )
        .into());
    }
    if communities.len() != c {
        return Err(ParseError::new(
            0,
            format!(
                "header declares {c} communities, found {}",
                communities.len()
            ),
        )
        .into());
    }
    let graph = WeightedGraph::new(n, edges)?;
    let ell = ell.unwrap_or(m);
    Instance::new(graph, communities, property, ell, budget)
}

pub fn write_instance(instance: &Instance) -> String {
    let g = instance.graph();
    let mut out = String::new();
    let _ = writeln!(
        out,
        "p nws {} {} {}",
        g.vertex_count(),
        g.edge_count(),
        instance.community_count()
    );
    let _ = writeln!(out, "w {}", instance.property().name());
    for e in g.edges() {
        if e.weight == Rational::one() {
            let _ = writeln!(out, "e {} {}", e.u + 1, e.v + 1);
        } else {
            let _ = writeln!(out, "e {} {} {}", e.u + 1, e.v + 1, e.weight);
        }
    }
    for c in instance.communities() {
        let _ = write!(out, "s {}", c.len());
        for v in c.iter() {
            let _ = write!(out, " {}", v + 1);
        }
        out.push('\n');
    }
    let _ = writeln!(out, "l {}", instance.ell());
    let _ = writeln!(out, "b {}", instance.budget());
    out
}

pub fn write_solution(instance: &Instance, solution: &Solution) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "SOLUTION {} {}",
        solution.edge_count(),
        solution.total_weight(instance)
    );
    for (u, v) in solution.edge_pairs(instance) {
        let _ = writeln!(out, "e {} {}", u + 1, v + 1);
    }
    for (i, cert) in solution.certificates().iter().enumerate() {
        match cert {
            Certificate::Center(v) => {
                let _ = writeln!(out, "cert {} center {}", i + 1, v + 1);
            }
            Certificate::Connected => {
                let _ = writeln!(out, "cert {} connected", i + 1);
            }
        }
    }
    out
}

pub fn write_no() -> String {
    "NO\n".to_string()
}

/// A parsed solution file: the edge set plus the header counts as stated.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SolutionFile {
    No,
    Solution {
        edges: BTreeSet<EdgeId>,
        stated_edge_count: usize,
        stated_weight: Rational,
    },
}

pub fn parse_solution(text: &str, instance: &Instance) -> Result<SolutionFile, ParseError> {
    let mut lines = text
        .lines()
        .map(str::trim)
        .enumerate()
        .filter(|(_, l)| !l.is_empty());
    let (lineno, first) = lines
        .next()
        .ok_or_else(|| ParseError::new(0, "empty solution file"))?;
    if first == "NO" {
        return Ok(SolutionFile::No);
    }
    let mut head = first.split_whitespace();
    if head.next() != Some("SOLUTION") {
        return Err(ParseError::new(lineno + 1, "expected SOLUTION or NO"));
    }
    let stated_edge_count = parse_usize(
        head.next()
            .ok_or_else(|| ParseError::new(lineno + 1, "missing edge count"))?,
        lineno + 1,
    )
    .map_err(|e| match e {
        InstanceError::Parse(p) => p,
        _ => ParseError::new(lineno + 1, "bad edge count"),
    })?;
    let stated_weight: Rational = head
        .next()
        .ok_or_else(|| ParseError::new(lineno + 1, "missing total weight"))?
        .parse()
        .map_err(|e: ParseError| e.at(lineno + 1))?;
    let mut edges = BTreeSet::new();
    let n = instance.graph().vertex_count();
    for (lineno, line) in lines {
        let lineno = lineno + 1;
        let mut tokens = line.split_whitespace();
        match tokens.next() {
            Some("e") => {
                let u = tokens
                    .next()
                    .and_then(|t| t.parse::<usize>().ok())
                    .filter(|&u| u >= 1 && u <= n)
                    .ok_or_else(|| ParseError::new(lineno, "bad edge endpoint"))?;
                let v = tokens
                    .next()
                    .and_then(|t| t.parse::<usize>().ok())
                    .filter(|&v| v >= 1 && v <= n)
                    .ok_or_else(|| ParseError::new(lineno, "bad edge endpoint"))?;
                let id = instance.graph().edge_id(u - 1, v - 1).ok_or_else(|| {
                    ParseError::new(lineno, format!("edge {{{u}, {v}}} not in instance"))
                })?;
                edges.insert(id);
            }
            Some("cert") | Some("c") => {} // informational; validity is recomputed
            Some(other) => {
                return Err(ParseError::new(
                    lineno,
                    format!("unknown line tag {other:?}"),
                ))
            }
            None => {}
        }
    }
    Ok(SolutionFile::Solution {
        edges,
        stated_edge_count,
        stated_weight,
    })
}

fn parse_usize(token: &str, lineno: usize) -> Result<usize, InstanceError> {
    token
        .parse::<usize>()
        .map_err(|_| ParseError::new(lineno, format!("invalid integer {token:?}")).into())
}

fn parse_wire_vertex(token: &str, n: usize, lineno: usize) -> Result<usize, InstanceError> {
    let v = parse_usize(token, lineno)?;
    if v < 1 || v > n {
        return Err(ParseError::new(lineno, format!("vertex {v} out of range 1..={n}")).into());
    }
    Ok(v - 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::solution::Solution;

    const SAMPLE: &str = "\
c a triangle with one community
p nws 3 3 1
w stars
e 1 2
e 1 3 2.5
e 2 3
s 3 1 2 3
l 2
b 3.5
";

    #[test]
    fn parses_and_round_trips() {
        let ins = parse_instance(SAMPLE).unwrap();
        assert_eq!(ins.graph().vertex_count(), 3);
        assert_eq!(ins.graph().edge_count(), 3);
        assert_eq!(ins.property(), Property::Stars);
        assert_eq!(ins.ell(), 2);
        assert_eq!(
            ins.graph().edge(ins.graph().edge_id(0, 2).unwrap()).weight,
            Rational::new(5, 2)
        );
        let text = write_instance(&ins);
        let again = parse_instance(&text).unwrap();
        assert_eq!(write_instance(&again), text);
    }

    #[test]
    fn defaults_and_errors() {
        let ins = parse_instance("p nws 2 1 1\ne 1 2\ns 2 1 2\n").unwrap();
        assert_eq!(ins.property(), Property::Connectivity);
        assert_eq!(ins.ell(), 1);
        assert_eq!(ins.budget(), &Budget::Infinite);

        assert!(parse_instance("e 1 2\n").is_err());
        assert!(parse_instance("p nws 2 1 0\ne 1 2 0\n").is_err());
        assert!(parse_instance("p nws 2 2 0\ne 1 2\n").is_err());
        assert!(parse_instance("p nws 2 1 0\ne 1 3\n").is_err());
    }

    #[test]
    fn solution_round_trip() {
        let ins = parse_instance(SAMPLE).unwrap();
        let e01 = ins.graph().edge_id(0, 1).unwrap();
        let e02 = ins.graph().edge_id(0, 2).unwrap();
        let sol = Solution::build(&ins, [e01, e02].into()).unwrap();
        let text = write_solution(&ins, &sol);
        assert!(text.starts_with("SOLUTION 2 3.5\n"));
        match parse_solution(&text, &ins).unwrap() {
            SolutionFile::Solution {
                edges,
                stated_edge_count,
                stated_weight,
            } => {
                assert_eq!(edges, [e01, e02].into());
                assert_eq!(stated_edge_count, 2);
                assert_eq!(stated_weight, Rational::new(7, 2));
            }
            SolutionFile::No => panic!("expected a solution"),
        }
        assert_eq!(parse_solution("NO\n", &ins).unwrap(), SolutionFile::No);
    }
}
