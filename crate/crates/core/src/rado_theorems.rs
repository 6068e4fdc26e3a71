//! Rado numbers of `x1 + ... + xn = y1 + ... + yk` (written `r2(n, k)`) and of
//! `x1 + ... + xn = a1*y1 + ... + al*yl`, reduced to `R2(m, a)`.

use serde::{Deserialize, Serialize};

use crate::closed_forms::{
    beutelspacher_brestovansky, guo_sun, nested_ceil, r2_single_rhs, Provenance, RadoResult,
};
use crate::equations::{Equation, EquationClass};
use crate::error::{RadoError, Result};
use crate::scalar::{add, scale, RadoInt};

/// `(n, A)` pairs with `n < A <= 2n` where `r2(n, A) != R2(n+1, A)`.
pub const EXCEPTIONAL_PAIRS: [ExceptionalPair; 8] = [
    ExceptionalPair { n: 2, total: 3 },
    ExceptionalPair { n: 2, total: 4 },
    ExceptionalPair { n: 3, total: 5 },
    ExceptionalPair { n: 5, total: 10 },
    ExceptionalPair { n: 6, total: 11 },
    ExceptionalPair { n: 7, total: 12 },
    ExceptionalPair { n: 8, total: 13 },
    ExceptionalPair { n: 9, total: 14 },
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ExceptionalPair {
    pub n: u64,
    /// Sum of the right-side coefficients.
    pub total: u64,
}

pub fn is_exceptional<T: RadoInt>(n: &T, total: &T) -> bool {
    EXCEPTIONAL_PAIRS
        .iter()
        .any(|p| *n == T::lit(p.n) && *total == T::lit(p.total))
}

/// `r2(n, k)`. Always exact.
pub fn r2_unit<T: RadoInt>(n: &T, k: &T) -> Result<RadoResult<T>> {
    if n.is_zero() || k.is_zero() || add(n, k, "n+k")? < T::lit(3) {
        return Err(RadoError::Precondition(format!(
            "r2(n,k) needs n, k >= 1 and n+k >= 3, got n={n}, k={k}"
        )));
    }
    if n == k {
        return Ok(RadoResult::exact(T::one(), Provenance::Theorem1));
    }
    if n < k {
        // the equation is symmetric in its two sides
        let swapped = r2_unit(k, n)?;
        let tag = if n.is_one() {
            Provenance::Bb1982
        } else if *k <= scale(n, 2, "2n")? {
            Provenance::Theorem2
        } else {
            Provenance::Theorem1
        };
        return Ok(swapped.with_provenance(tag));
    }
    let m = add(n, &T::one(), "n+1")?;
    if k.is_one() {
        return Ok(RadoResult::exact(
            beutelspacher_brestovansky(&m)?,
            Provenance::Bb1982,
        ));
    }
    match r2_single_rhs(&m, k)? {
        RadoResult::Exact { value, .. } => Ok(RadoResult::exact(value, Provenance::Theorem1)),
        other => unreachable!("R2(n+1,k) with n > k is always covered, got {other:?}"),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Theorem2Comparison<T> {
    pub r2: T,
    pub r2_single_rhs: RadoResult<T>,
    pub agree: bool,
}

/// Compares `r2(n, k)` with `R2(n+1, k)` in the window `n < k <= 2n`.
pub fn r2_vs_r2_single_rhs<T: RadoInt>(n: &T, k: &T) -> Result<Theorem2Comparison<T>> {
    if *n < T::lit(2) || k <= n || *k > scale(n, 2, "2n")? {
        return Err(RadoError::Precondition(format!(
            "comparison needs 2n >= k > n >= 2, got n={n}, k={k}"
        )));
    }
    let r2 = r2_unit(n, k)?
        .exact_value()
        .cloned()
        .expect("r2_unit is always exact");
    let single = r2_single_rhs(&add(n, &T::one(), "n+1")?, k)?;
    let agree = single.exact_value() == Some(&r2);
    Ok(Theorem2Comparison {
        r2,
        r2_single_rhs: single,
        agree,
    })
}

/// Rado number (or bounds) of `x1 + ... + xn = a1*y1 + ... + al*yl`.
pub fn rado_general<T: RadoInt>(n: &T, rhs_coeffs: &[T]) -> Result<RadoResult<T>> {
    if *n < T::lit(2) {
        return Err(RadoError::Precondition(format!("need n >= 2, got {n}")));
    }
    if rhs_coeffs.is_empty() || rhs_coeffs.iter().any(|c| c.is_zero()) {
        return Err(RadoError::Precondition(
            "right side needs at least one positive coefficient".into(),
        ));
    }
    let total = rhs_coeffs
        .iter()
        .try_fold(T::zero(), |acc, c| add(&acc, c, "coefficient sum"))?;
    if rhs_coeffs.iter().all(|c| c.is_one()) {
        return r2_unit(n, &total);
    }
    let m = add(n, &T::one(), "n+1")?;
    let two_n = scale(n, 2, "2n")?;
    let theorem4 = || -> Result<RadoResult<T>> {
        Ok(RadoResult::Bounds {
            lower: nested_ceil(&total, n)?,
            upper: None,
            provenance: Provenance::Theorem4Lower,
        })
    };
    let single = || -> Result<T> {
        Ok(r2_single_rhs(&m, &total)?
            .exact_value()
            .cloned()
            .expect("R2(n+1,A) is covered when A <= 2n"))
    };

    if rhs_coeffs.len() == 1 {
        // this is R2(n+1, a) itself
        return match r2_single_rhs(&m, &total)? {
            exact @ RadoResult::Exact { .. } => Ok(exact),
            _ => theorem4(),
        };
    }
    if total > two_n {
        return theorem4();
    }
    if total > *n && is_exceptional(n, &total) {
        let lower = r2_unit(n, &total)?
            .exact_value()
            .cloned()
            .expect("r2_unit is always exact");
        return Ok(RadoResult::Bounds {
            lower,
            upper: Some(single()?),
            provenance: Provenance::Theorem3,
        });
    }
    Ok(RadoResult::exact(single()?, Provenance::Theorem3))
}

/// Closed-form result for any equation, routed by its family. Equations whose
/// swapped form is a known family are handled through the swap.
pub fn rado_for_equation<T: RadoInt>(eq: &Equation) -> Result<RadoResult<T>> {
    let len =
        |v: usize| T::from_usize(v).ok_or_else(|| RadoError::Overflow("variable count".into()));
    if eq.is_all_unit() {
        return r2_unit(&len(eq.lhs().len())?, &len(eq.rhs().len())?);
    }
    if let Some(r) = by_class(eq)? {
        return Ok(r);
    }
    if let Some(r) = by_class(&eq.swap_sides())? {
        return Ok(r);
    }
    Ok(RadoResult::NotCovered {
        reason: format!("no closed form for the equation family of {eq}"),
    })
}

fn by_class<T: RadoInt>(eq: &Equation) -> Result<Option<RadoResult<T>>> {
    let lit = |v: u64| T::lit(v);
    let coeffs = |v: &[u64]| v.iter().map(|&c| T::lit(c)).collect::<Vec<_>>();
    Ok(match eq.classify()? {
        EquationClass::UnitLhsSingleRhs { m, a } => Some(r2_single_rhs(&lit(m as u64), &lit(a))?),
        EquationClass::UnitLhsWeightedRhs { n, coeffs: c, .. } if n >= 2 => {
            Some(rado_general(&lit(n as u64), &coeffs(&c))?)
        }
        EquationClass::GuoSunForm { coeffs: c, .. } => Some(RadoResult::exact(
            guo_sun(&coeffs(&c))?,
            Provenance::GuoSun2008,
        )),
        _ => None,
    })
}

/// Default `max_r` for the search oracle: four times the best known upper
/// bound, or 64 when none is known (raised to `4·lower` if the known lower
/// bound already exceeds 64).
pub fn default_search_cutoff(eq: &Equation) -> u64 {
    match rado_for_equation::<u64>(eq) {
        Ok(RadoResult::Exact { value, .. }) => value.saturating_mul(4).max(1),
        Ok(RadoResult::Bounds { upper: Some(u), .. }) => u.saturating_mul(4),
        Ok(RadoResult::Bounds { lower, .. }) if lower >= 64 => lower.saturating_mul(4),
        _ => 64,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn exact(r: RadoResult<u64>) -> (u64, Provenance) {
        match r {
            RadoResult::Exact { value, provenance } => (value, provenance),
            other => panic!("expected exact, got {other:?}"),
        }
    }

    #[test]
    fn r2_unit_examples() {
        assert_eq!(
            exact(r2_unit(&2u64, &3).unwrap()),
            (4, Provenance::Theorem2)
        );
        assert_eq!(
            exact(r2_unit(&7u64, &7).unwrap()),
            (1, Provenance::Theorem1)
        );
        assert_eq!(
            exact(r2_unit(&5u64, &10).unwrap()),
            (5, Provenance::Theorem2)
        );
        assert_eq!(
            exact(r2_unit(&6u64, &2).unwrap()),
            (9, Provenance::Theorem1)
        );
        assert_eq!(exact(r2_unit(&2u64, &1).unwrap()), (5, Provenance::Bb1982));
        assert_eq!(exact(r2_unit(&1u64, &3).unwrap()), (11, Provenance::Bb1982));
        assert_eq!(exact(r2_unit(&2u64, &7).unwrap()).1, Provenance::Theorem1);
        assert!(r2_unit(&1u64, &1).is_err());
        assert!(r2_unit(&0u64, &4).is_err());
    }

    #[test]
    fn theorem2_comparison_examples() {
        let c = r2_vs_r2_single_rhs(&2u64, &4).unwrap();
        assert_eq!(
            (c.r2, c.r2_single_rhs.exact_value(), c.agree),
            (5, Some(&10), false)
        );
        let c = r2_vs_r2_single_rhs(&3u64, &5).unwrap();
        assert_eq!(
            (c.r2, c.r2_single_rhs.exact_value(), c.agree),
            (5, Some(&9), false)
        );
        // r2(3,4) = R2(5,3) = 4 and R2(4,4) = 4 (4 ≢ 3 mod 2)
        let c = r2_vs_r2_single_rhs(&3u64, &4).unwrap();
        assert_eq!(
            c.r2,
            r2_single_rhs(&5u64, &3)
                .unwrap()
                .exact_value()
                .copied()
                .unwrap()
        );
        assert_eq!(c.r2, 4);
        assert_eq!(c.r2_single_rhs.exact_value(), Some(&4));
        assert!(c.agree);
        assert!(r2_vs_r2_single_rhs(&3u64, &7).is_err());
        assert!(r2_vs_r2_single_rhs(&3u64, &3).is_err());
    }

    #[test]
    fn rado_general_examples() {
        assert_eq!(
            exact(rado_general(&5u64, &[2, 1]).unwrap()),
            (5, Provenance::Theorem3)
        );
        assert_eq!(
            rado_general(&2u64, &[1, 2]).unwrap(),
            RadoResult::Bounds {
                lower: 4,
                upper: Some(9),
                provenance: Provenance::Theorem3
            }
        );
        assert_eq!(
            rado_general(&2u64, &[5]).unwrap(),
            RadoResult::Bounds {
                lower: 8,
                upper: None,
                provenance: Provenance::Theorem4Lower
            }
        );
        // single weighted variable inside the exceptional window is R2 itself
        assert_eq!(
            exact(rado_general(&2u64, &[3]).unwrap()),
            (9, Provenance::Fact3)
        );
        assert_eq!(exact(rado_general(&3u64, &[1, 1, 1]).unwrap()).0, 1);
        assert!(matches!(
            rado_general(&3u64, &[4, 4]).unwrap(),
            RadoResult::Bounds {
                lower: 8,
                upper: None,
                ..
            }
        ));
        assert!(rado_general(&1u64, &[2, 1]).is_err());
        assert!(rado_general(&2u64, &[]).is_err());
    }

    #[test]
    fn routing_by_family() {
        let r = |s: &str| rado_for_equation::<u64>(&s.parse().unwrap()).unwrap();
        assert_eq!(exact(r("1,1=1")), (5, Provenance::Bb1982));
        assert_eq!(exact(r("1=1,1")), (5, Provenance::Bb1982));
        assert_eq!(exact(r("1,2=1")), (11, Provenance::GuoSun2008));
        assert_eq!(exact(r("1=2,3")), (53, Provenance::GuoSun2008));
        assert_eq!(exact(r("1,1,1,1,1=3")), (5, Provenance::Fact2));
        assert_eq!(exact(r("3=1,1,1,1,1")), (5, Provenance::Fact2));
        assert!(matches!(r("2,1=1,3"), RadoResult::NotCovered { .. }));
    }

    #[test]
    fn cutoffs() {
        assert_eq!(default_search_cutoff(&"1,1=1".parse().unwrap()), 20);
        assert_eq!(default_search_cutoff(&"1,1=5".parse().unwrap()), 64);
        assert_eq!(default_search_cutoff(&"1,1=1,2".parse().unwrap()), 36);
        assert_eq!(default_search_cutoff(&"2,1=1,3".parse().unwrap()), 64);
    }
}
