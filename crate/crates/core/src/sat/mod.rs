//! CNF formulas, DIMACS I/O, and the SAT / NAE-SAT procedures used to
//! validate the reductions.

mod cnf;
mod dpll;

use thiserror::Error;

pub use cnf::{parse_dimacs, Assignment, Clause, CnfFormula, Lit};
pub use dpll::dpll_solve;

/// Largest variable count the exhaustive oracles accept.
pub const BRUTE_FORCE_VAR_CAP: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SatError {
    #[error("clause {index} is empty")]
    EmptyClause { index: usize },
    #[error("literal {literal} exceeds the declared {var_count} variables")]
    VarOutOfRange { literal: i32, var_count: usize },
    #[error("{vars} variables exceed the exhaustive-search cap of {cap}")]
    TooManyVariables { vars: usize, cap: usize },
    #[error("clause {index} has {len} literal(s); not-all-equal needs at least 2")]
    ClauseTooShort { index: usize, len: usize },
}

fn check_cap(f: &CnfFormula) -> Result<(), SatError> {
    if f.var_count() > BRUTE_FORCE_VAR_CAP {
        return Err(SatError::TooManyVariables {
            vars: f.var_count(),
            cap: BRUTE_FORCE_VAR_CAP,
        });
    }
    Ok(())
}

/// Assignments in lexicographic order: variable 1 is the most significant
/// position and false comes before true.
fn lexicographic(var_count: usize) -> impl Iterator<Item = Assignment> {
    (0u64..1 << var_count).map(move |idx| {
        Assignment::from_values(
            (1..=var_count)
                .map(|v| idx >> (var_count - v) & 1 == 1)
                .collect(),
        )
    })
}

/// First satisfying assignment in lexicographic order, if any.
pub fn brute_force_sat(f: &CnfFormula) -> Result<Option<Assignment>, SatError> {
    check_cap(f)?;
    Ok(lexicographic(f.var_count()).find(|a| f.satisfied_by(a)))
}

/// First assignment, in lexicographic order, under which every clause has
/// both a true and a false literal.
pub fn brute_force_nae(f: &CnfFormula) -> Result<Option<Assignment>, SatError> {
    check_cap(f)?;
    if let Some((index, c)) = f.clauses().iter().enumerate().find(|(_, c)| c.len() < 2) {
        return Err(SatError::ClauseTooShort { index, len: c.len() });
    }
    Ok(lexicographic(f.var_count()).find(|a| f.nae_satisfied_by(a)))
}
