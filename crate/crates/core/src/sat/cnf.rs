use std::collections::BTreeSet;
use std::fmt::Write as _;

use itertools::Itertools;

use crate::coloring::{pair_count, pair_index, EdgeColoring};
use crate::error::{Error, Result};
use crate::search::{minimal_connected_graphs, SearchParams, FORBIDDEN_LIMIT};

/// Largest instance [`emit_cnf`] will build.
pub const CLAUSE_LIMIT: u128 = 20_000_000;

/// A CNF formula satisfiable iff some `k`-coloring of `K_n` has no
/// monochromatic κ-connected `m`-set.
///
/// Variable `pair_index(u, v) * k + color + 1` says pair `{u, v}` has `color`,
/// with pairs in lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CnfInstance {
    pub params: SearchParams,
    pub num_vars: usize,
    pub clauses: Vec<Vec<i32>>,
    /// Digest of the forbidden-subgraph list the clauses were built from.
    pub forbidden_digest: String,
}

impl CnfInstance {
    pub fn var(&self, u: usize, v: usize, color: usize) -> i32 {
        let (a, b) = if u < v { (u, v) } else { (v, u) };
        (pair_index(self.params.n, a, b) * self.params.k + color + 1) as i32
    }

    /// Index of the first clause falsified by `assignment` (indexed by
    /// variable minus one).
    pub fn first_violated(&self, assignment: &[bool]) -> Option<usize> {
        self.clauses.iter().position(|clause| {
            !clause
                .iter()
                .any(|&lit| assignment[lit.unsigned_abs() as usize - 1] == (lit > 0))
        })
    }

    pub fn satisfied_by(&self, assignment: &[bool]) -> bool {
        assignment.len() == self.num_vars && self.first_violated(assignment).is_none()
    }

    /// The one-hot assignment describing `coloring`.
    pub fn encode(&self, coloring: &EdgeColoring) -> Result<Vec<bool>> {
        let p = self.params;
        if coloring.n() != p.n || coloring.k() != p.k {
            return Err(Error::InvalidParameter(format!(
                "coloring is on K_{} with {} colors, instance expects K_{} with {}",
                coloring.n(),
                coloring.k(),
                p.n,
                p.k
            )));
        }
        let mut assignment = vec![false; self.num_vars];
        for (u, v, c) in coloring.entries() {
            assignment[self.var(u, v, c) as usize - 1] = true;
        }
        Ok(assignment)
    }

    /// DIMACS text with the provenance record in comment lines.
    pub fn to_dimacs(&self) -> String {
        let p = self.params;
        let mut out = String::new();
        out.push_str("c kc-ramsey avoidance instance\n");
        let _ = writeln!(out, "c params n={} m={} kappa={} k={}", p.n, p.m, p.kappa, p.k);
        let _ = writeln!(out, "c forbidden sha256={}", self.forbidden_digest);
        out.push_str("c var(u,v,color) = pairindex(u,v)*k + color + 1, pairs lexicographic\n");
        let _ = writeln!(out, "p cnf {} {}", self.num_vars, self.clauses.len());
        for clause in &self.clauses {
            for lit in clause {
                let _ = write!(out, "{lit} ");
            }
            out.push_str("0\n");
        }
        out
    }

    /// Parses DIMACS produced by [`CnfInstance::to_dimacs`]; the `c params`
    /// comment is required.
    pub fn from_dimacs(text: &str) -> Result<Self> {
        let mut params = None;
        let mut digest = String::new();
        let mut header: Option<(usize, usize, usize)> = None;
        let mut clauses = Vec::new();
        let mut current = Vec::new();
        for (i, line) in text.lines().enumerate() {
            let lineno = i + 1;
            let err = |message: String| Error::Parse { line: lineno, message };
            let line = line.trim();
            if let Some(rest) = line.strip_prefix("c params") {
                let mut vals = [None; 4];
                for field in rest.split_whitespace() {
                    let (key, value) = field
                        .split_once('=')
                        .ok_or_else(|| err(format!("bad field {field:?}")))?;
                    let value: usize = value.parse().map_err(|_| err(format!("bad value in {field:?}")))?;
                    let slot = match key {
                        "n" => 0,
                        "m" => 1,
                        "kappa" => 2,
                        "k" => 3,
                        _ => return Err(err(format!("unknown parameter {key:?}"))),
                    };
                    vals[slot] = Some(value);
                }
                match vals {
                    [Some(n), Some(m), Some(kappa), Some(k)] => {
                        params = Some((SearchParams { n, m, kappa, k }, lineno))
                    }
                    _ => return Err(err("incomplete params record".into())),
                }
            } else if let Some(rest) = line.strip_prefix("c forbidden sha256=") {
                digest = rest.trim().to_string();
            } else if line.is_empty() || line.starts_with('c') {
                continue;
            } else if let Some(rest) = line.strip_prefix("p cnf") {
                let nums: Vec<usize> = rest
                    .split_whitespace()
                    .map(|t| t.parse().map_err(|_| err(format!("bad header token {t:?}"))))
                    .collect::<Result<_>>()?;
                let [vars, count] = nums[..] else {
                    return Err(err("header must be \"p cnf V C\"".into()));
                };
                header = Some((vars, count, lineno));
            } else {
                let Some((vars, _, _)) = header else {
                    return Err(err("clause before header".into()));
                };
                for tok in line.split_whitespace() {
                    let lit: i32 = tok.parse().map_err(|_| err(format!("bad literal {tok:?}")))?;
                    if lit == 0 {
                        clauses.push(std::mem::take(&mut current));
                    } else if lit.unsigned_abs() as usize > vars {
                        return Err(err(format!("literal {lit} exceeds {vars} variables")));
                    } else {
                        current.push(lit);
                    }
                }
            }
        }
        let (vars, count, header_line) = header.ok_or(Error::Parse {
            line: 0,
            message: "missing \"p cnf\" header".into(),
        })?;
        if !current.is_empty() {
            return Err(Error::Parse {
                line: text.lines().count(),
                message: "last clause not terminated by 0".into(),
            });
        }
        if clauses.len() != count {
            return Err(Error::Parse {
                line: header_line,
                message: format!("header announces {count} clauses, found {}", clauses.len()),
            });
        }
        let (params, params_line) = params.ok_or(Error::Parse {
            line: 0,
            message: "missing \"c params\" provenance comment".into(),
        })?;
        if vars != pair_count(params.n) * params.k {
            return Err(Error::Parse {
                line: params_line,
                message: format!("{vars} variables do not match params"),
            });
        }
        Ok(CnfInstance {
            params,
            num_vars: vars,
            clauses,
            forbidden_digest: digest,
        })
    }
}

fn binomial(n: usize, r: usize) -> u128 {
    if r > n {
        return 0;
    }
    (0..r).fold(1u128, |acc, i| acc * (n - i) as u128 / (i as u128 + 1))
}

/// One-hot edge-color variables, plus one clause per `m`-set, color and
/// forbidden graph placed on that set, saying some edge of the placement is
/// not in that color.
pub fn emit_cnf(n: usize, m: usize, kappa: usize, k: usize) -> Result<CnfInstance> {
    if m > FORBIDDEN_LIMIT {
        return Err(Error::EnumerationLimit {
            m,
            limit: FORBIDDEN_LIMIT,
        });
    }
    if k == 0 {
        return Err(Error::InvalidParameter("need at least one color".into()));
    }
    let list = minimal_connected_graphs(m, kappa)?;
    let edges = pair_count(n);
    let estimate = edges as u128 * (1 + (k * (k - 1) / 2) as u128) + binomial(n, m) * k as u128 * list.len() as u128;
    if estimate > CLAUSE_LIMIT {
        return Err(Error::CnfTooLarge {
            estimate,
            limit: CLAUSE_LIMIT,
        });
    }

    let params = SearchParams { n, m, kappa, k };
    let mut inst = CnfInstance {
        params,
        num_vars: edges * k,
        clauses: Vec::with_capacity(estimate as usize),
        forbidden_digest: list.digest(),
    };
    for e in 0..edges {
        let var = |c: usize| (e * k + c + 1) as i32;
        inst.clauses.push((0..k).map(var).collect());
        for (a, b) in (0..k).tuple_combinations() {
            inst.clauses.push(vec![-var(a), -var(b)]);
        }
    }

    let local_pairs: Vec<(usize, usize)> = crate::graph::lex_pairs(m).collect();
    let mut forbidden: BTreeSet<Vec<i32>> = BTreeSet::new();
    for set in (0..n).combinations(m) {
        for color in 0..k {
            for &mask in list.masks() {
                let mut clause: Vec<i32> = local_pairs
                    .iter()
                    .enumerate()
                    .filter(|&(bit, _)| mask >> bit & 1 == 1)
                    .map(|(_, &(i, j))| -inst.var(set[i], set[j], color))
                    .collect();
                clause.sort_unstable_by_key(|lit| lit.unsigned_abs());
                forbidden.insert(clause);
            }
        }
    }
    inst.clauses.extend(forbidden);
    Ok(inst)
}
