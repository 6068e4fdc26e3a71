//! DIMACS CNF encoding of "some 2-coloring of `[r]` has no monochromatic
//! solution". Variable `v` is true when the integer `v` is blue.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use crate::equations::Equation;
use crate::error::{RadoError, Result};
use crate::search::coloring::{Color, Coloring};
use crate::search::solutions::for_each_solution;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cnf {
    pub num_vars: usize,
    pub clauses: Vec<Vec<i64>>,
    pub comments: Vec<String>,
}

/// One clause pair per distinct value set that supports a solution, plus the
/// unit clause making `1` red.
pub fn export_cnf(eq: &Equation, r: u64) -> Result<Cnf> {
    if r == 0 {
        return Err(RadoError::Precondition("r must be at least 1".into()));
    }
    let num_vars = usize::try_from(r).map_err(|_| RadoError::TooLarge(format!("r = {r}")))?;
    let mut supports: BTreeSet<Vec<u64>> = BTreeSet::new();
    for_each_solution(eq, r, |lhs, rhs| {
        let mut set: Vec<u64> = lhs.iter().chain(rhs).copied().collect();
        set.sort_unstable();
        set.dedup();
        supports.insert(set);
    });

    let mut clauses = vec![vec![-1]];
    for set in &supports {
        // not all red, then not all blue
        clauses.push(set.iter().map(|&v| v as i64).collect());
        clauses.push(set.iter().map(|&v| -(v as i64)).collect());
    }
    Ok(Cnf {
        num_vars,
        clauses,
        comments: vec![
            format!("equation {eq}"),
            format!("r {r}"),
            "variable v is true iff integer v is blue".to_string(),
        ],
    })
}

impl Cnf {
    pub fn to_dimacs(&self) -> String {
        let mut out = String::new();
        for c in &self.comments {
            let _ = writeln!(out, "c {c}");
        }
        let _ = writeln!(out, "p cnf {} {}", self.num_vars, self.clauses.len());
        for clause in &self.clauses {
            for lit in clause {
                let _ = write!(out, "{lit} ");
            }
            out.push_str("0\n");
        }
        out
    }

    pub fn parse_dimacs(text: &str) -> Result<Cnf> {
        let bad = |reason: String| RadoError::Parse {
            text: "<dimacs>".into(),
            reason,
        };
        let mut comments = Vec::new();
        let mut header: Option<(usize, usize)> = None;
        let mut clauses = Vec::new();
        let mut current = Vec::new();
        for line in text.lines() {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            if let Some(c) = line.strip_prefix('c') {
                comments.push(c.trim_start().to_string());
                continue;
            }
            if let Some(rest) = line.strip_prefix("p cnf") {
                let nums: Vec<usize> = rest
                    .split_whitespace()
                    .map(|t| t.parse().map_err(|_| bad(format!("bad header {line:?}"))))
                    .collect::<Result<_>>()?;
                let [v, c] = nums[..] else {
                    return Err(bad(format!("bad header {line:?}")));
                };
                header = Some((v, c));
                continue;
            }
            let (num_vars, _) = header.ok_or_else(|| bad("clause before header".into()))?;
            for tok in line.split_whitespace() {
                let lit: i64 = tok
                    .parse()
                    .map_err(|_| bad(format!("bad literal {tok:?}")))?;
                if lit == 0 {
                    clauses.push(std::mem::take(&mut current));
                } else if lit.unsigned_abs() as usize > num_vars {
                    return Err(bad(format!("literal {lit} exceeds {num_vars} variables")));
                } else {
                    current.push(lit);
                }
            }
        }
        let (num_vars, num_clauses) = header.ok_or_else(|| bad("missing header".into()))?;
        if !current.is_empty() {
            return Err(bad("unterminated clause".into()));
        }
        if clauses.len() != num_clauses {
            return Err(bad(format!(
                "header promises {num_clauses} clauses, found {}",
                clauses.len()
            )));
        }
        Ok(Cnf {
            num_vars,
            clauses,
            comments,
        })
    }

    pub fn satisfied_by(&self, coloring: &Coloring) -> bool {
        self.clauses.iter().all(|clause| {
            clause.iter().any(|&lit| {
                let blue = coloring.color(lit.unsigned_abs()) == Color::Blue;
                blue == (lit > 0)
            })
        })
    }

    /// Lexicographically first satisfying assignment among the `2^(r-1)`
    /// colorings with `1` red, by exhaustive enumeration.
    pub fn solve_exhaustive(&self) -> Result<Option<Coloring>> {
        if self.num_vars > 30 {
            return Err(RadoError::TooLarge(format!(
                "exhaustive check over {} variables",
                self.num_vars
            )));
        }
        Ok(Coloring::all_canonical(self.num_vars).find(|c| self.satisfied_by(c)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::search::has_mono_solution;

    #[test]
    fn schur_at_four_and_five() {
        let eq: Equation = "1,1=1".parse().unwrap();
        let four = export_cnf(&eq, 4).unwrap();
        let w = four
            .solve_exhaustive()
            .unwrap()
            .expect("satisfiable at r=4");
        assert_eq!(w, Coloring::from_red(4, &[1, 4]));
        assert!(!has_mono_solution(&eq, &w).unwrap());
        assert!(export_cnf(&eq, 5)
            .unwrap()
            .solve_exhaustive()
            .unwrap()
            .is_none());
    }

    #[test]
    fn identical_sides_conflict_immediately() {
        let eq: Equation = "1,1=1,1".parse().unwrap();
        let cnf = export_cnf(&eq, 1).unwrap();
        assert_eq!(cnf.clauses, vec![vec![-1], vec![1], vec![-1]]);
        assert!(cnf.solve_exhaustive().unwrap().is_none());
    }

    #[test]
    fn dimacs_text() {
        let eq: Equation = "1,1=1".parse().unwrap();
        let cnf = export_cnf(&eq, 3).unwrap();
        let text = cnf.to_dimacs();
        assert_eq!(
            text,
            "c equation 1,1=1\nc r 3\nc variable v is true iff integer v is blue\n\
             p cnf 3 5\n-1 0\n1 2 0\n-1 -2 0\n1 2 3 0\n-1 -2 -3 0\n"
        );
        assert_eq!(Cnf::parse_dimacs(&text).unwrap(), cnf);
        assert!(Cnf::parse_dimacs("p cnf 2 1\n1 3 0\n").is_err());
        assert!(Cnf::parse_dimacs("p cnf 2 2\n1 0\n").is_err());
        assert!(Cnf::parse_dimacs("1 0\n").is_err());
        assert!(Cnf::parse_dimacs("p cnf 2 1\n1 2\n").is_err());
    }
}
