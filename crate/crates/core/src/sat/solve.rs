//! Exhaustive assignment enumeration for small instances.
//!
//! Variables are fixed in index order; a clause is evaluated once its largest
//! variable is set, and a falsified clause cuts the branch. This explores
//! every assignment not ruled out by a falsified clause, independently of
//! the coloring search.

use crate::sat::cnf::CnfInstance;

/// Largest instance [`solve_exhaustive`] accepts.
pub const EXHAUSTIVE_VAR_LIMIT: usize = 40;

/// A satisfying assignment, or `None` if the formula is unsatisfiable.
/// Panics above [`EXHAUSTIVE_VAR_LIMIT`] variables.
pub fn solve_exhaustive(instance: &CnfInstance) -> Option<Vec<bool>> {
    assert!(
        instance.num_vars <= EXHAUSTIVE_VAR_LIMIT,
        "instance too large for enumeration"
    );
    let v = instance.num_vars;
    let mut closing: Vec<Vec<&[i32]>> = vec![Vec::new(); v + 1];
    for clause in &instance.clauses {
        let top = clause.iter().map(|l| l.unsigned_abs() as usize).max().unwrap_or(0);
        closing[top].push(clause);
    }
    if !closing[0].is_empty() {
        // an empty clause
        return None;
    }
    let mut assignment = vec![false; v];
    descend(&closing, &mut assignment, 0).then_some(assignment)
}

fn descend(closing: &[Vec<&[i32]>], assignment: &mut [bool], depth: usize) -> bool {
    if depth == assignment.len() {
        return true;
    }
    for value in [false, true] {
        assignment[depth] = value;
        let ok = closing[depth + 1].iter().all(|clause| {
            clause
                .iter()
                .any(|&lit| assignment[lit.unsigned_abs() as usize - 1] == (lit > 0))
        });
        if ok && descend(closing, assignment, depth + 1) {
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sat::emit_cnf;
    use crate::search::SearchParams;

    fn raw(num_vars: usize, clauses: Vec<Vec<i32>>) -> CnfInstance {
        CnfInstance {
            params: SearchParams {
                n: 0,
                m: 0,
                kappa: 0,
                k: 0,
            },
            num_vars,
            clauses,
            forbidden_digest: String::new(),
        }
    }

    #[test]
    fn tiny_formulas() {
        let sat = raw(2, vec![vec![1, 2], vec![-1]]);
        assert_eq!(solve_exhaustive(&sat), Some(vec![false, true]));
        let unsat = raw(1, vec![vec![1], vec![-1]]);
        assert_eq!(solve_exhaustive(&unsat), None);
        assert_eq!(solve_exhaustive(&raw(1, vec![vec![]])), None);
    }

    #[test]
    fn ramsey_instances() {
        let five = emit_cnf(5, 3, 3, 2).unwrap();
        let model = solve_exhaustive(&five).expect("satisfiable");
        assert!(five.satisfied_by(&model));
        assert!(solve_exhaustive(&emit_cnf(6, 3, 3, 2).unwrap()).is_none());
        assert!(solve_exhaustive(&emit_cnf(3, 3, 1, 1).unwrap()).is_none());
    }
}
