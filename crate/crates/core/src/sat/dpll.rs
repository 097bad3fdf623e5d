//! Plain DPLL: unit propagation, pure-literal elimination, and branching on
//! the first unassigned variable (true first). No learning.

use crate::sat::{Assignment, CnfFormula, Lit};

type Partial = Vec<Option<bool>>;

fn lit_value(vals: &Partial, lit: Lit) -> Option<bool> {
    vals[lit.var() - 1].map(|b| b == lit.is_positive())
}

enum Status {
    Conflict,
    Satisfied,
    Open,
}

/// Runs propagation to a fixpoint.
fn simplify(f: &CnfFormula, vals: &mut Partial) -> Status {
    loop {
        let mut changed = false;
        let mut all_sat = true;
        for clause in f.clauses() {
            let mut unassigned = None;
            let mut open = 0;
            let mut sat = false;
            for &lit in clause {
                match lit_value(vals, lit) {
                    Some(true) => {
                        sat = true;
                        break;
                    }
                    Some(false) => {}
                    None => {
                        open += 1;
                        unassigned = Some(lit);
                    }
                }
            }
            if sat {
                continue;
            }
            all_sat = false;
            match (open, unassigned) {
                (0, _) => return Status::Conflict,
                (1, Some(lit)) => {
                    vals[lit.var() - 1] = Some(lit.is_positive());
                    changed = true;
                }
                _ => {}
            }
        }
        if all_sat {
            return Status::Satisfied;
        }
        if changed {
            continue;
        }

        // polarity bits: 1 = seen positive, 2 = seen negative
        let mut polarity = vec![0u8; vals.len()];
        for clause in f.clauses() {
            if clause.iter().any(|&l| lit_value(vals, l) == Some(true)) {
                continue;
            }
            for &lit in clause.iter().filter(|&&l| lit_value(vals, l).is_none()) {
                polarity[lit.var() - 1] |= if lit.is_positive() { 1 } else { 2 };
            }
        }
        for (i, &pol) in polarity.iter().enumerate() {
            if pol == 1 || pol == 2 {
                vals[i] = Some(pol == 1);
                changed = true;
            }
        }
        if !changed {
            return Status::Open;
        }
    }
}

fn first_open_var(f: &CnfFormula, vals: &Partial) -> Option<usize> {
    f.clauses()
        .iter()
        .filter(|c| !c.iter().any(|&l| lit_value(vals, l) == Some(true)))
        .flat_map(|c| c.iter())
        .filter(|&&l| lit_value(vals, l).is_none())
        .map(|l| l.var())
        .min()
}

fn search(f: &CnfFormula, mut vals: Partial) -> Option<Partial> {
    match simplify(f, &mut vals) {
        Status::Conflict => None,
        Status::Satisfied => Some(vals),
        Status::Open => {
            let var = first_open_var(f, &vals)?;
            for value in [true, false] {
                let mut branch = vals.clone();
                branch[var - 1] = Some(value);
                if let Some(model) = search(f, branch) {
                    return Some(model);
                }
            }
            None
        }
    }
}

/// A satisfying assignment, or `None` if the formula is unsatisfiable.
/// Variables left free by the search are set to false.
pub fn dpll_solve(f: &CnfFormula) -> Option<Assignment> {
    let model = search(f, vec![None; f.var_count()])?;
    let asg = Assignment::from_values(model.into_iter().map(|v| v.unwrap_or(false)).collect());
    debug_assert!(f.satisfied_by(&asg));
    Some(asg)
}
