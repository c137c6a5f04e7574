use crate::coloring::EdgeColoring;
use crate::error::{Error, Result};
use crate::graph::lex_pairs;
use crate::sat::cnf::CnfInstance;

/// Reads solver output: `v`-lines or bare literal lists, stopping at `0`.
/// Comment (`c`) lines are skipped; an `s UNSATISFIABLE` line is an error.
pub fn parse_model(text: &str) -> Result<Vec<i32>> {
    let mut lits = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        if let Some(status) = line.strip_prefix('s') {
            if status.trim() != "SATISFIABLE" {
                return Err(Error::MalformedModel(format!("solver status {:?}", status.trim())));
            }
            continue;
        }
        let body = line.strip_prefix('v').unwrap_or(line);
        for tok in body.split_whitespace() {
            let lit: i32 = tok.parse().map_err(|_| Error::Parse {
                line: i + 1,
                message: format!("bad literal {tok:?}"),
            })?;
            if lit == 0 {
                return Ok(lits);
            }
            lits.push(lit);
        }
    }
    Ok(lits)
}

/// Turns a literal list into a total assignment over `num_vars` variables.
pub fn assignment_from_literals(num_vars: usize, lits: &[i32]) -> Result<Vec<bool>> {
    let mut value: Vec<Option<bool>> = vec![None; num_vars];
    for &lit in lits {
        let var = lit.unsigned_abs() as usize;
        if var == 0 || var > num_vars {
            return Err(Error::MalformedModel(format!(
                "literal {lit} out of range 1..={num_vars}"
            )));
        }
        match value[var - 1] {
            Some(v) if v != (lit > 0) => {
                return Err(Error::MalformedModel(format!("variable {var} assigned both ways")));
            }
            _ => value[var - 1] = Some(lit > 0),
        }
    }
    value
        .iter()
        .enumerate()
        .map(|(i, v)| v.ok_or_else(|| Error::MalformedModel(format!("variable {} unassigned", i + 1))))
        .collect()
}

/// Reads the coloring off the one-hot variables; every pair must have exactly
/// one true color.
pub fn decode_model(instance: &CnfInstance, assignment: &[bool]) -> Result<EdgeColoring> {
    let p = instance.params;
    if assignment.len() != instance.num_vars {
        return Err(Error::MalformedModel(format!(
            "assignment has {} values for {} variables",
            assignment.len(),
            instance.num_vars
        )));
    }
    let colors = lex_pairs(p.n)
        .map(|(u, v)| {
            let on: Vec<usize> = (0..p.k)
                .filter(|&c| assignment[instance.var(u, v, c) as usize - 1])
                .collect();
            match on[..] {
                [c] => Ok(c),
                _ => Err(Error::MalformedModel(format!(
                    "pair {{{u}, {v}}} has {} colors set",
                    on.len()
                ))),
            }
        })
        .collect::<Result<Vec<_>>>()?;
    EdgeColoring::from_colors(p.n, p.k, colors)
}
