//! Plain-text file formats.
//!
//! * Graph: `n m`, then `m` lines `u v` with `u < v`.
//! * Coloring: `n k`, then one line `u v color` per pair, pairs in
//!   lexicographic order.
//! * Bitstring family: `lambda mu`, then `mu` lines of `0`/`1` strings in
//!   index order.
//! * Pair family: `n`, then one line `a b x1 x2 …` per pair `a < b` in
//!   lexicographic order, listing the elements of `u(a, b)`.
//!
//! Blank lines and lines starting with `#` are ignored. Parse errors carry the
//! 1-based line number.

use std::fmt::Write as _;

use crate::coloring::{pair_count, EdgeColoring};
use crate::colorings::{BitstringFamily, PairFamily};
use crate::error::{Error, Result};
use crate::graph::{lex_pairs, Graph};

struct Lines<'a> {
    inner: std::iter::Enumerate<std::str::Lines<'a>>,
    last: usize,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Self {
        Lines {
            inner: text.lines().enumerate(),
            last: 0,
        }
    }

    fn next_fields(&mut self, what: &str) -> Result<(usize, Vec<&'a str>)> {
        for (i, line) in self.inner.by_ref() {
            self.last = i + 1;
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            return Ok((i + 1, line.split_whitespace().collect()));
        }
        Err(Error::Parse {
            line: self.last + 1,
            message: format!("unexpected end of input, expected {what}"),
        })
    }

    fn finish(mut self) -> Result<()> {
        match self.next_fields("") {
            Ok((line, _)) => Err(Error::Parse {
                line,
                message: "trailing content".into(),
            }),
            Err(_) => Ok(()),
        }
    }
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn numbers<const N: usize>(line: usize, fields: &[&str], what: &str) -> Result<[usize; N]> {
    if fields.len() != N {
        return Err(parse_err(line, format!("expected {what}, got {} fields", fields.len())));
    }
    let mut out = [0; N];
    for (slot, f) in out.iter_mut().zip(fields) {
        *slot = f
            .parse()
            .map_err(|_| parse_err(line, format!("field {f:?} is not a nonnegative integer")))?;
    }
    Ok(out)
}

pub fn write_graph(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut lines = Lines::new(text);
    let (line, fields) = lines.next_fields("header \"n m\"")?;
    let [n, m] = numbers(line, &fields, "header \"n m\"")?;
    let mut g = Graph::empty(n);
    for _ in 0..m {
        let (line, fields) = lines.next_fields("edge \"u v\"")?;
        let [u, v] = numbers(line, &fields, "edge \"u v\"")?;
        if u >= v {
            return Err(parse_err(line, format!("edge {u} {v} must satisfy u < v")));
        }
        g.add_edge(u, v).map_err(|e| parse_err(line, e.to_string()))?;
    }
    lines.finish()?;
    Ok(g)
}

pub fn write_coloring(c: &EdgeColoring) -> String {
    let mut out = format!("{} {}\n", c.n(), c.k());
    for (u, v, color) in c.entries() {
        let _ = writeln!(out, "{u} {v} {color}");
    }
    out
}

pub fn parse_coloring(text: &str) -> Result<EdgeColoring> {
    let mut lines = Lines::new(text);
    let (line, fields) = lines.next_fields("header \"n k\"")?;
    let [n, k] = numbers(line, &fields, "header \"n k\"")?;
    let mut colors = Vec::with_capacity(pair_count(n));
    for (u, v) in lex_pairs(n) {
        let (line, fields) = lines.next_fields("pair line \"u v color\"")?;
        let [a, b, color] = numbers(line, &fields, "pair line \"u v color\"")?;
        if (a, b) != (u, v) {
            return Err(parse_err(line, format!("expected pair {u} {v}, found {a} {b}")));
        }
        if color >= k {
            return Err(parse_err(line, format!("color {color} out of range for k = {k}")));
        }
        colors.push(color);
    }
    lines.finish()?;
    EdgeColoring::from_colors(n, k, colors)
}

pub fn write_bitstrings(f: &BitstringFamily) -> String {
    let mut out = format!("{} {}\n", f.lambda(), f.len());
    for s in f.strings() {
        out.extend(s.iter().map(|&b| if b { '1' } else { '0' }));
        out.push('\n');
    }
    out
}

pub fn parse_bitstrings(text: &str) -> Result<BitstringFamily> {
    let mut lines = Lines::new(text);
    let (line, fields) = lines.next_fields("header \"lambda mu\"")?;
    let [lambda, mu] = numbers(line, &fields, "header \"lambda mu\"")?;
    let mut strings = Vec::with_capacity(mu);
    for _ in 0..mu {
        let (line, fields) = lines.next_fields("bitstring")?;
        let [s] = fields[..] else {
            return Err(parse_err(line, "expected one bitstring per line"));
        };
        if s.len() != lambda {
            return Err(parse_err(
                line,
                format!("string has length {}, expected {lambda}", s.len()),
            ));
        }
        let bits = s
            .chars()
            .map(|ch| match ch {
                '0' => Ok(false),
                '1' => Ok(true),
                other => Err(parse_err(line, format!("bad bit {other:?}"))),
            })
            .collect::<Result<Vec<bool>>>()?;
        strings.push(bits);
    }
    lines.finish()?;
    BitstringFamily::new(lambda, strings)
}

pub fn write_pair_family(f: &PairFamily) -> String {
    let mut out = format!("{}\n", f.n());
    for (a, b, set) in f.entries() {
        let _ = write!(out, "{a} {b}");
        for x in set {
            let _ = write!(out, " {x}");
        }
        out.push('\n');
    }
    out
}

pub fn parse_pair_family(text: &str) -> Result<PairFamily> {
    let mut lines = Lines::new(text);
    let (line, fields) = lines.next_fields("header \"n\"")?;
    let [n] = numbers(line, &fields, "header \"n\"")?;
    let mut sets = Vec::with_capacity(pair_count(n));
    for (a, b) in lex_pairs(n) {
        let (line, fields) = lines.next_fields("pair line \"a b elements…\"")?;
        if fields.len() < 2 {
            return Err(parse_err(line, "expected \"a b\" followed by elements"));
        }
        let [x, y] = numbers(line, &fields[..2], "pair \"a b\"")?;
        if (x, y) != (a, b) {
            return Err(parse_err(line, format!("expected pair {a} {b}, found {x} {y}")));
        }
        let set = fields[2..]
            .iter()
            .map(|t| {
                t.parse::<u64>()
                    .map_err(|_| parse_err(line, format!("bad element {t:?}")))
            })
            .collect::<Result<_>>()?;
        sets.push(set);
    }
    lines.finish()?;
    PairFamily::new(n, sets)
}
