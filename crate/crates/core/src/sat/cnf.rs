use std::fmt;
use std::fmt::Write as _;

use crate::io::{content_lines, parse_usize, ParseError};
use crate::sat::SatError;

/// A nonzero DIMACS literal: `v` for variable `v`, `-v` for its negation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Lit(i32);

impl Lit {
    pub fn new(dimacs: i32) -> Self {
        assert!(dimacs != 0, "literal 0 is the clause terminator");
        Lit(dimacs)
    }

    pub fn pos(var: usize) -> Self {
        Lit(var as i32)
    }

    pub fn neg(var: usize) -> Self {
        Lit(-(var as i32))
    }

    pub fn var(self) -> usize {
        self.0.unsigned_abs() as usize
    }

    pub fn is_positive(self) -> bool {
        self.0 > 0
    }

    pub fn negated(self) -> Lit {
        Lit(-self.0)
    }

    pub fn dimacs(self) -> i32 {
        self.0
    }

    pub fn eval(self, asg: &Assignment) -> bool {
        asg.value(self.var()) == self.is_positive()
    }
}

impl fmt::Display for Lit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

pub type Clause = Vec<Lit>;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CnfFormula {
    var_count: usize,
    clauses: Vec<Clause>,
}

impl CnfFormula {
    pub fn new(var_count: usize, clauses: Vec<Clause>) -> Result<Self, SatError> {
        for (index, clause) in clauses.iter().enumerate() {
            if clause.is_empty() {
                return Err(SatError::EmptyClause { index });
            }
            if let Some(lit) = clause.iter().find(|l| l.var() > var_count) {
                return Err(SatError::VarOutOfRange {
                    literal: lit.dimacs(),
                    var_count,
                });
            }
        }
        Ok(CnfFormula { var_count, clauses })
    }

    /// Convenience constructor from raw DIMACS integers.
    pub fn from_dimacs_clauses(var_count: usize, clauses: &[&[i32]]) -> Result<Self, SatError> {
        CnfFormula::new(
            var_count,
            clauses
                .iter()
                .map(|c| c.iter().map(|&l| Lit::new(l)).collect())
                .collect(),
        )
    }

    pub fn var_count(&self) -> usize {
        self.var_count
    }

    pub fn clauses(&self) -> &[Clause] {
        &self.clauses
    }

    pub fn satisfied_by(&self, asg: &Assignment) -> bool {
        self.clauses
            .iter()
            .all(|c| c.iter().any(|l| l.eval(asg)))
    }

    /// Every clause has at least one true and at least one false literal.
    pub fn nae_satisfied_by(&self, asg: &Assignment) -> bool {
        self.clauses.iter().all(|c| {
            let t = c.iter().filter(|l| l.eval(asg)).count();
            t > 0 && t < c.len()
        })
    }

    /// The formula with every literal negated.
    pub fn complemented(&self) -> CnfFormula {
        CnfFormula {
            var_count: self.var_count,
            clauses: self
                .clauses
                .iter()
                .map(|c| c.iter().map(|l| l.negated()).collect())
                .collect(),
        }
    }

    pub fn to_dimacs(&self) -> String {
        let mut out = String::new();
        writeln!(out, "p cnf {} {}", self.var_count, self.clauses.len()).unwrap();
        for clause in &self.clauses {
            for lit in clause {
                write!(out, "{lit} ").unwrap();
            }
            out.push_str("0\n");
        }
        out
    }
}

/// A total truth assignment over variables `1..=var_count`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Assignment {
    values: Vec<bool>,
}

impl Assignment {
    pub fn all_false(var_count: usize) -> Self {
        Assignment {
            values: vec![false; var_count],
        }
    }

    /// `values[v - 1]` is the value of variable `v`.
    pub fn from_values(values: Vec<bool>) -> Self {
        Assignment { values }
    }

    pub fn var_count(&self) -> usize {
        self.values.len()
    }

    pub fn value(&self, var: usize) -> bool {
        self.values[var - 1]
    }

    pub fn set(&mut self, var: usize, value: bool) {
        self.values[var - 1] = value;
    }

    pub fn values(&self) -> &[bool] {
        &self.values
    }

    pub fn complemented(&self) -> Assignment {
        Assignment {
            values: self.values.iter().map(|b| !b).collect(),
        }
    }

    /// `v <±1> <±2> ... 0`
    pub fn to_dimacs_line(&self) -> String {
        let mut out = String::from("v");
        for (i, &b) in self.values.iter().enumerate() {
            let var = i as i64 + 1;
            write!(out, " {}", if b { var } else { -var }).unwrap();
        }
        out.push_str(" 0");
        out
    }
}

/// Parses DIMACS CNF. Clauses may span lines; each must end with `0`.
pub fn parse_dimacs(text: &str) -> Result<CnfFormula, ParseError> {
    let mut lines = content_lines(text);
    let (header_line, header) = lines
        .next()
        .ok_or_else(|| ParseError::new(1, "missing `p cnf <vars> <clauses>` header"))?;
    let toks: Vec<&str> = header.split_whitespace().collect();
    if toks.len() != 4 || toks[0] != "p" || toks[1] != "cnf" {
        return Err(ParseError::new(
            header_line,
            format!("malformed header `{header}`, expected `p cnf <vars> <clauses>`"),
        ));
    }
    let var_count = parse_usize(header_line, toks[2], "variable count")?;
    let clause_count = parse_usize(header_line, toks[3], "clause count")?;

    let mut clauses = Vec::with_capacity(clause_count);
    let mut current = Vec::new();
    let mut last_line = header_line;
    for (line, body) in lines {
        if body.starts_with('%') {
            break;
        }
        last_line = line;
        for tok in body.split_whitespace() {
            let lit: i64 = tok
                .parse()
                .map_err(|_| ParseError::new(line, format!("expected a literal, got `{tok}`")))?;
            if lit == 0 {
                if current.is_empty() {
                    return Err(ParseError::new(line, "empty clause"));
                }
                clauses.push(std::mem::take(&mut current));
                continue;
            }
            if lit.unsigned_abs() as usize > var_count {
                return Err(ParseError::new(
                    line,
                    format!("literal {lit} exceeds the declared {var_count} variables"),
                ));
            }
            current.push(Lit::new(lit as i32));
        }
    }
    if !current.is_empty() {
        return Err(ParseError::new(last_line, "last clause is missing its terminating 0"));
    }
    if clauses.len() != clause_count {
        return Err(ParseError::new(
            last_line,
            format!("header declares {clause_count} clauses but {} were found", clauses.len()),
        ));
    }
    CnfFormula::new(var_count, clauses).map_err(|e| ParseError::new(header_line, e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_examples() {
        let f = parse_dimacs("p cnf 1 1\n1 0").unwrap();
        assert_eq!(f.clauses(), &[vec![Lit::pos(1)]]);

        let f = parse_dimacs("p cnf 3 2\n1 -2 3 0\n-1 2 -3 0").unwrap();
        assert_eq!(f.clauses().len(), 2);
        assert_eq!(f.clauses()[1], vec![Lit::neg(1), Lit::pos(2), Lit::neg(3)]);

        assert!(parse_dimacs("p cnf 1 1\n2 0").is_err());
    }

    #[test]
    fn parse_errors() {
        assert!(parse_dimacs("p cnf 2 1\n1 2").is_err());
        assert!(parse_dimacs("p cnf 2 1\n0\n").is_err());
        assert!(parse_dimacs("p cnf 2 2\n1 0\n").is_err());
        assert!(parse_dimacs("p sat 2 1\n1 0\n").is_err());
        assert!(parse_dimacs("p cnf 2 1\n1 x 0\n").is_err());
        assert!(parse_dimacs("").is_err());
    }

    #[test]
    fn multi_line_clauses_and_comments() {
        let f = parse_dimacs("c x\np cnf 3 1\n1\n-2\n3 0\n%\n0\n").unwrap();
        assert_eq!(f.clauses()[0].len(), 3);
    }

    #[test]
    fn dimacs_round_trip() {
        let f = CnfFormula::from_dimacs_clauses(3, &[&[1, -2, 3], &[-3]]).unwrap();
        assert_eq!(f.to_dimacs(), "p cnf 3 2\n1 -2 3 0\n-3 0\n");
        assert_eq!(parse_dimacs(&f.to_dimacs()).unwrap(), f);
    }

    #[test]
    fn assignment_line() {
        let a = Assignment::from_values(vec![true, false, true]);
        assert_eq!(a.to_dimacs_line(), "v 1 -2 3 0");
    }

    #[test]
    fn nae_uses_literal_multiset() {
        let f = CnfFormula::from_dimacs_clauses(1, &[&[1, 1, 1]]).unwrap();
        assert!(!f.nae_satisfied_by(&Assignment::from_values(vec![true])));
        assert!(!f.nae_satisfied_by(&Assignment::from_values(vec![false])));
        let g = CnfFormula::from_dimacs_clauses(1, &[&[1, -1, 1]]).unwrap();
        assert!(g.nae_satisfied_by(&Assignment::from_values(vec![true])));
    }

    #[test]
    fn constructor_validation() {
        assert!(matches!(
            CnfFormula::new(1, vec![vec![]]),
            Err(SatError::EmptyClause { index: 0 })
        ));
        assert!(matches!(
            CnfFormula::from_dimacs_clauses(1, &[&[-2]]),
            Err(SatError::VarOutOfRange { literal: -2, .. })
        ));
    }
}
