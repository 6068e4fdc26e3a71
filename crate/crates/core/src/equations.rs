//! Linear equations `a1*x1 + ... + an*xn = b1*y1 + ... + bk*yk` over the
//! positive integers, and their classification into the families that have
//! closed-form Rado numbers.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{RadoError, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "EquationRepr", into = "EquationRepr")]
pub struct Equation {
    lhs: Vec<u64>,
    rhs: Vec<u64>,
}

#[derive(Serialize, Deserialize)]
struct EquationRepr {
    lhs: Vec<u64>,
    rhs: Vec<u64>,
}

impl TryFrom<EquationRepr> for Equation {
    type Error = RadoError;

    fn try_from(r: EquationRepr) -> Result<Self> {
        Equation::new(r.lhs, r.rhs)
    }
}

impl From<Equation> for EquationRepr {
    fn from(e: Equation) -> Self {
        EquationRepr {
            lhs: e.lhs,
            rhs: e.rhs,
        }
    }
}

impl Equation {
    pub fn new(lhs: Vec<u64>, rhs: Vec<u64>) -> Result<Self> {
        if lhs.is_empty() || rhs.is_empty() {
            return Err(RadoError::InvalidEquation(
                "both sides need at least one variable".into(),
            ));
        }
        if lhs.len() + rhs.len() < 3 {
            return Err(RadoError::InvalidEquation(format!(
                "need at least 3 variables in total, got {}",
                lhs.len() + rhs.len()
            )));
        }
        if lhs.iter().chain(&rhs).any(|&c| c == 0) {
            return Err(RadoError::InvalidEquation(
                "coefficients must be positive".into(),
            ));
        }
        Ok(Equation { lhs, rhs })
    }

    /// `x1 + ... + xn = y1 + ... + yk`.
    pub fn unit(n: usize, k: usize) -> Result<Self> {
        Equation::new(vec![1; n], vec![1; k])
    }

    /// `x1 + ... + x_{m-1} = a*y`.
    pub fn single_rhs(m: usize, a: u64) -> Result<Self> {
        if m < 2 {
            return Err(RadoError::InvalidEquation(format!(
                "m must be at least 2, got {m}"
            )));
        }
        Equation::new(vec![1; m - 1], vec![a])
    }

    /// `x1 + ... + xn = a1*y1 + ... + al*yl`.
    pub fn weighted_rhs(n: usize, rhs: Vec<u64>) -> Result<Self> {
        Equation::new(vec![1; n], rhs)
    }

    pub fn lhs(&self) -> &[u64] {
        &self.lhs
    }

    pub fn rhs(&self) -> &[u64] {
        &self.rhs
    }

    pub fn num_vars(&self) -> usize {
        self.lhs.len() + self.rhs.len()
    }

    pub fn swap_sides(&self) -> Equation {
        Equation {
            lhs: self.rhs.clone(),
            rhs: self.lhs.clone(),
        }
    }

    pub fn is_all_unit(&self) -> bool {
        self.lhs.iter().chain(&self.rhs).all(|&c| c == 1)
    }

    pub fn lhs_sum(&self) -> Result<u64> {
        checked_sum(&self.lhs)
    }

    pub fn rhs_sum(&self) -> Result<u64> {
        checked_sum(&self.rhs)
    }

    /// Most specific family the equation belongs to. Order of coefficients
    /// within a side never matters.
    pub fn classify(&self) -> Result<EquationClass> {
        let lhs_unit = self.lhs.iter().all(|&c| c == 1);
        let rhs_unit = self.rhs.iter().all(|&c| c == 1);
        let n = self.lhs.len();
        let k = self.rhs.len();

        if lhs_unit && rhs_unit && n >= 2 && k >= 2 {
            return Ok(EquationClass::UnitBothSides { n, k });
        }
        if lhs_unit && k == 1 {
            return Ok(EquationClass::UnitLhsSingleRhs {
                m: n + 1,
                a: self.rhs[0],
            });
        }
        if lhs_unit {
            return Ok(EquationClass::UnitLhsWeightedRhs {
                n,
                coeffs: sorted(&self.rhs),
                total: self.rhs_sum()?,
            });
        }
        if self.rhs == [1] {
            let a_min = *self.lhs.iter().min().expect("lhs is nonempty");
            return Ok(EquationClass::GuoSunForm {
                coeffs: sorted(&self.lhs),
                a_min,
                w: self.lhs_sum()?,
            });
        }
        Ok(EquationClass::General)
    }
}

fn sorted(v: &[u64]) -> Vec<u64> {
    let mut v = v.to_vec();
    v.sort_unstable();
    v
}

fn checked_sum(v: &[u64]) -> Result<u64> {
    v.iter()
        .try_fold(0u64, |acc, &c| acc.checked_add(c))
        .ok_or_else(|| RadoError::Overflow("coefficient sum".into()))
}

/// The equation families the closed forms know about.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "class")]
pub enum EquationClass {
    /// `x1 + ... + xn = y1 + ... + yk` with `n, k >= 2`.
    UnitBothSides {
        n: usize,
        k: usize,
    },
    /// `x1 + ... + x_{m-1} = a*y`.
    UnitLhsSingleRhs {
        m: usize,
        a: u64,
    },
    /// `x1 + ... + xn = a1*y1 + ... + al*yl`; `coeffs` sorted, `total` is their sum.
    UnitLhsWeightedRhs {
        n: usize,
        coeffs: Vec<u64>,
        total: u64,
    },
    /// `a1*x1 + ... + a_{m-1}*x_{m-1} = y`.
    GuoSunForm {
        coeffs: Vec<u64>,
        a_min: u64,
        w: u64,
    },
    General,
}

impl fmt::Display for Equation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[u64]| v.iter().map(u64::to_string).collect::<Vec<_>>().join(",");
        write!(f, "{}={}", join(&self.lhs), join(&self.rhs))
    }
}

/// Parses the text form `1,1,1=1,2`. Whitespace is ignored anywhere.
impl FromStr for Equation {
    type Err = RadoError;

    fn from_str(s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let err = |reason: &str| RadoError::Parse {
            text: s.to_string(),
            reason: reason.to_string(),
        };
        let (l, r) = compact.split_once('=').ok_or_else(|| err("missing '='"))?;
        if r.contains('=') {
            return Err(err("more than one '='"));
        }
        let side = |part: &str| -> Result<Vec<u64>> {
            if part.is_empty() {
                return Err(err("empty side"));
            }
            part.split(',')
                .map(|tok| {
                    tok.parse::<u64>()
                        .map_err(|_| err(&format!("bad coefficient {tok:?}")))
                })
                .collect()
        };
        Equation::new(side(l)?, side(r)?)
    }
}
