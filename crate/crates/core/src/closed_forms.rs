//! Closed forms for `R2(m, a)`, the 2-color Rado number of
//! `x1 + ... + x_{m-1} = a*y`, together with the nested ceiling `C(m, a)` and
//! the Guo–Sun formula for `a1*x1 + ... + a_{m-1}*x_{m-1} = y`.
//!
//! Every range test on fractions such as `3a/2 + 1` is done by
//! cross-multiplying, so no floating point is involved anywhere.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{RadoError, Result};
use crate::scalar::{add, congruent, mul, scale, sub, RadoInt};

/// Where a value comes from. The string forms are stable and appear in JSON.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Provenance {
    #[serde(rename = "BB1982")]
    Bb1982,
    #[serde(rename = "GuoSun2008")]
    GuoSun2008,
    #[serde(rename = "SchaalVestal2008")]
    SchaalVestal2008,
    Fact1,
    Fact2,
    Fact3,
    Fact4,
    Theorem1,
    Theorem2,
    Theorem3,
    #[serde(rename = "Theorem4-lower")]
    Theorem4Lower,
    #[serde(rename = "Lemma-lower")]
    LemmaLower,
    #[serde(rename = "search")]
    Search,
}

impl Provenance {
    pub const ALL: [Provenance; 13] = [
        Provenance::Bb1982,
        Provenance::GuoSun2008,
        Provenance::SchaalVestal2008,
        Provenance::Fact1,
        Provenance::Fact2,
        Provenance::Fact3,
        Provenance::Fact4,
        Provenance::Theorem1,
        Provenance::Theorem2,
        Provenance::Theorem3,
        Provenance::Theorem4Lower,
        Provenance::LemmaLower,
        Provenance::Search,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Provenance::Bb1982 => "BB1982",
            Provenance::GuoSun2008 => "GuoSun2008",
            Provenance::SchaalVestal2008 => "SchaalVestal2008",
            Provenance::Fact1 => "Fact1",
            Provenance::Fact2 => "Fact2",
            Provenance::Fact3 => "Fact3",
            Provenance::Fact4 => "Fact4",
            Provenance::Theorem1 => "Theorem1",
            Provenance::Theorem2 => "Theorem2",
            Provenance::Theorem3 => "Theorem3",
            Provenance::Theorem4Lower => "Theorem4-lower",
            Provenance::LemmaLower => "Lemma-lower",
            Provenance::Search => "search",
        }
    }
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Provenance {
    type Err = RadoError;

    fn from_str(s: &str) -> Result<Self> {
        Provenance::ALL
            .into_iter()
            .find(|p| p.as_str() == s)
            .ok_or_else(|| RadoError::Parse {
                text: s.to_string(),
                reason: "unknown provenance tag".into(),
            })
    }
}

/// An exact Rado number, an interval known to contain it, or a gap.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "outcome")]
pub enum RadoResult<T> {
    Exact {
        value: T,
        provenance: Provenance,
    },
    /// `upper: None` means no upper bound is known.
    Bounds {
        lower: T,
        upper: Option<T>,
        provenance: Provenance,
    },
    NotCovered {
        reason: String,
    },
}

impl<T: RadoInt> RadoResult<T> {
    pub fn exact(value: T, provenance: Provenance) -> Self {
        RadoResult::Exact { value, provenance }
    }

    pub fn exact_value(&self) -> Option<&T> {
        match self {
            RadoResult::Exact { value, .. } => Some(value),
            _ => None,
        }
    }

    pub fn provenance(&self) -> Option<Provenance> {
        match self {
            RadoResult::Exact { provenance, .. } | RadoResult::Bounds { provenance, .. } => {
                Some(*provenance)
            }
            RadoResult::NotCovered { .. } => None,
        }
    }

    pub fn with_provenance(self, p: Provenance) -> Self {
        match self {
            RadoResult::Exact { value, .. } => RadoResult::Exact {
                value,
                provenance: p,
            },
            RadoResult::Bounds { lower, upper, .. } => RadoResult::Bounds {
                lower,
                upper,
                provenance: p,
            },
            nc => nc,
        }
    }

    /// Whether `v` is consistent with this result.
    pub fn admits(&self, v: &T) -> bool {
        match self {
            RadoResult::Exact { value, .. } => value == v,
            RadoResult::Bounds { lower, upper, .. } => {
                lower <= v && upper.as_ref().is_none_or(|u| v <= u)
            }
            RadoResult::NotCovered { .. } => true,
        }
    }
}

/// `⌈(num/den)·⌈num/den⌉⌉`, evaluated as `⌈num·q/den⌉` with `q = ⌈num/den⌉`.
pub fn nested_ceil<T: RadoInt>(num: &T, den: &T) -> Result<T> {
    if den.is_zero() {
        return Err(RadoError::Precondition(
            "nested ceiling with zero denominator".into(),
        ));
    }
    let q = num.div_ceil(den);
    Ok(mul(num, &q, "nested ceiling")?.div_ceil(den))
}

/// `C(m, a) = ⌈((m-1)/a)·⌈(m-1)/a⌉⌉`.
pub fn ceil_c<T: RadoInt>(m: &T, a: &T) -> Result<T> {
    if *m < T::lit(2) || a.is_zero() {
        return Err(RadoError::Precondition(format!(
            "C(m,a) needs m >= 2 and a >= 1, got m={m}, a={a}"
        )));
    }
    nested_ceil(&sub(m, &T::one(), "m-1")?, a)
}

/// `m² - m - 1`, the Rado number of `x1 + ... + x_{m-1} = x_m`.
pub fn beutelspacher_brestovansky<T: RadoInt>(m: &T) -> Result<T> {
    if *m < T::lit(3) {
        return Err(RadoError::Precondition(format!(
            "m must be at least 3, got {m}"
        )));
    }
    let sq = mul(m, m, "m^2-m-1")?;
    sub(&sub(&sq, m, "m^2-m-1")?, &T::one(), "m^2-m-1")
}

/// `a·w² + w - a` with `a` the least and `w` the sum of the left-side
/// coefficients of `a1*x1 + ... + a_{m-1}*x_{m-1} = y`.
pub fn guo_sun<T: RadoInt>(lhs_coeffs: &[T]) -> Result<T> {
    if lhs_coeffs.len() < 2 {
        return Err(RadoError::Precondition(format!(
            "need at least two left-side coefficients, got {}",
            lhs_coeffs.len()
        )));
    }
    if lhs_coeffs.iter().any(|c| c.is_zero()) {
        return Err(RadoError::Precondition(
            "coefficients must be positive".into(),
        ));
    }
    let a = lhs_coeffs.iter().min().expect("nonempty").clone();
    let w = lhs_coeffs
        .iter()
        .try_fold(T::zero(), |acc, c| add(&acc, c, "coefficient sum"))?;
    let aw2 = mul(&a, &mul(&w, &w, "a*w^2+w-a")?, "a*w^2+w-a")?;
    // a*w^2 + w >= a always holds since w >= a
    sub(&add(&aw2, &w, "a*w^2+w-a")?, &a, "a*w^2+w-a")
}

/// The piecewise regimes of `R2(m, a)`. Ranges overlap in one place
/// (`3 | a`, `m = 2a + 1`), where [`Branch::Fact1`] and [`Branch::Fact2`]
/// both apply and agree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Branch {
    /// `a = 1`: `m² - m - 1`.
    Bb,
    /// `a = 1` read through the Guo–Sun formula with all coefficients 1.
    GuoSunUnit,
    /// `a = 2`, `m >= 6`: the Schaal–Vestal nested ceiling.
    SchaalVestal,
    /// `a >= 2`, `m >= 2a+1` if `3 | a`, else `m >= 2a+2`: `C(m, a)`.
    Fact1,
    /// `a >= 2`, `a+1 <= m <= 2a+1`: values in `{1, 3, 4, 5}`.
    Fact2,
    /// `a >= 3`, `2a/3 + 1 <= m <= a`.
    Fact3,
    /// `a >= 4`, `a/2 + 1 <= m < 2a/3 + 1`.
    Fact4,
}

impl Branch {
    pub const ALL: [Branch; 7] = [
        Branch::Bb,
        Branch::GuoSunUnit,
        Branch::SchaalVestal,
        Branch::Fact1,
        Branch::Fact2,
        Branch::Fact3,
        Branch::Fact4,
    ];

    pub fn provenance(self) -> Provenance {
        match self {
            Branch::Bb => Provenance::Bb1982,
            Branch::GuoSunUnit => Provenance::GuoSun2008,
            Branch::SchaalVestal => Provenance::SchaalVestal2008,
            Branch::Fact1 => Provenance::Fact1,
            Branch::Fact2 => Provenance::Fact2,
            Branch::Fact3 => Provenance::Fact3,
            Branch::Fact4 => Provenance::Fact4,
        }
    }

    /// Whether `(m, a)` lies in this branch's range.
    pub fn contains<T: RadoInt>(self, m: &T, a: &T) -> Result<bool> {
        let one = T::one();
        let two = T::lit(2);
        if *m < T::lit(3) || a.is_zero() {
            return Ok(false);
        }
        let m1 = sub(m, &one, "m-1")?;
        Ok(match self {
            Branch::Bb | Branch::GuoSunUnit => a.is_one(),
            Branch::SchaalVestal => *a == two && *m >= T::lit(6),
            Branch::Fact1 => {
                if *a < two {
                    false
                } else {
                    let start = add(&scale(a, 2, "2a+1")?, &one, "2a+1")?;
                    let start = if congruent(a, &T::zero(), 3) {
                        start
                    } else {
                        add(&start, &one, "2a+2")?
                    };
                    *m >= start
                }
            }
            Branch::Fact2 => {
                *a >= two
                    && *m >= add(a, &one, "a+1")?
                    && *m <= add(&scale(a, 2, "2a+1")?, &one, "2a+1")?
            }
            Branch::Fact3 => {
                *a >= T::lit(3) && scale(&m1, 3, "3(m-1)")? >= scale(a, 2, "2a")? && m <= a
            }
            Branch::Fact4 => {
                *a >= T::lit(4)
                    && scale(&m1, 2, "2(m-1)")? >= *a
                    && scale(&m1, 3, "3(m-1)")? < scale(a, 2, "2a")?
            }
        })
    }

    /// This branch's formula at `(m, a)`. Only meaningful inside the range.
    pub fn evaluate<T: RadoInt>(self, m: &T, a: &T) -> Result<T> {
        if !self.contains(m, a)? {
            return Err(RadoError::Precondition(format!(
                "(m={m}, a={a}) is outside the {self:?} range"
            )));
        }
        let m1 = sub(m, &T::one(), "m-1")?;
        let lit = T::lit;
        Ok(match self {
            Branch::Bb => beutelspacher_brestovansky(m)?,
            Branch::GuoSunUnit => {
                let ones = vec![T::one(); to_len(&m1)?];
                guo_sun(&ones)?
            }
            Branch::SchaalVestal => {
                let two = lit(2);
                let inner = m1.div_ceil(&two);
                mul(&m1, &inner, "Schaal-Vestal")?.div_ceil(&two)
            }
            Branch::Fact1 => ceil_c(m, a)?,
            Branch::Fact2 => {
                if *m == add(a, &T::one(), "a+1")? {
                    T::one()
                } else if scale(&m1, 2, "2(m-1)")? <= scale(a, 3, "3a")? {
                    if congruent(a, &m1, 2) {
                        lit(3)
                    } else {
                        lit(4)
                    }
                } else if congruent(a, &m1, 3) {
                    lit(4)
                } else {
                    lit(5)
                }
            }
            Branch::Fact3 => {
                if *a == lit(3) {
                    lit(9)
                } else if congruent(a, &m1, 2) {
                    lit(3)
                } else {
                    lit(4)
                }
            }
            Branch::Fact4 => {
                if congruent(a, &m1, 3) {
                    lit(4)
                } else if *m == lit(3) && *a == lit(4) {
                    lit(10)
                } else if *m == lit(4) && *a == lit(5) {
                    lit(9)
                } else if *a >= lit(10) && *a <= lit(14) && add(m, &lit(4), "m+4")? == *a {
                    lit(6)
                } else {
                    lit(5)
                }
            }
        })
    }
}

fn to_len<T: RadoInt>(v: &T) -> Result<usize> {
    v.to_usize()
        .ok_or_else(|| RadoError::Overflow(format!("{v} variables")))
}

/// Every branch whose range contains `(m, a)`.
pub fn branches_containing<T: RadoInt>(m: &T, a: &T) -> Result<Vec<Branch>> {
    let mut out = Vec::new();
    for b in Branch::ALL {
        if b.contains(m, a)? {
            out.push(b);
        }
    }
    Ok(out)
}

/// `R2(m, a)`, the 2-color Rado number of `x1 + ... + x_{m-1} = a*y`.
///
/// Returns `NotCovered` below `m = a/2 + 1`; every other `(m, a)` with
/// `m >= 3` gets an exact value.
pub fn r2_single_rhs<T: RadoInt>(m: &T, a: &T) -> Result<RadoResult<T>> {
    if *m < T::lit(3) || a.is_zero() {
        return Err(RadoError::Precondition(format!(
            "R2(m,a) needs m >= 3 and a >= 1, got m={m}, a={a}"
        )));
    }
    // precedence: Bb first, then the large-m nested ceiling (which wins the
    // 3|a, m=2a+1 overlap with Fact2), then the finite windows
    const ORDER: [Branch; 6] = [
        Branch::Bb,
        Branch::SchaalVestal,
        Branch::Fact1,
        Branch::Fact2,
        Branch::Fact3,
        Branch::Fact4,
    ];
    for b in ORDER {
        if b.contains(m, a)? {
            return Ok(RadoResult::exact(b.evaluate(m, a)?, b.provenance()));
        }
    }
    Ok(RadoResult::NotCovered {
        reason: format!("below Fact 4 range: m={m} < a/2+1 with a={a}"),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigUint;

    fn exact(m: u64, a: u64) -> (u64, Provenance) {
        match r2_single_rhs(&m, &a).unwrap() {
            RadoResult::Exact { value, provenance } => (value, provenance),
            other => panic!("R2({m},{a}) = {other:?}"),
        }
    }

    #[test]
    fn ceil_c_examples() {
        assert_eq!(ceil_c(&6u64, &3).unwrap(), 4);
        assert_eq!(ceil_c(&7u64, &2).unwrap(), 9);
        assert_eq!(ceil_c(&5u64, &1).unwrap(), 16);
        assert!(ceil_c(&1u64, &1).is_err());
        assert!(ceil_c(&5u64, &0).is_err());
    }

    #[test]
    fn r2_single_rhs_examples() {
        assert_eq!(exact(4, 3), (1, Provenance::Fact2));
        assert_eq!(exact(3, 3), (9, Provenance::Fact3));
        assert_eq!(exact(6, 3), (5, Provenance::Fact2));
        assert_eq!(exact(3, 4), (10, Provenance::Fact4));
        assert_eq!(exact(4, 5), (9, Provenance::Fact4));
        assert_eq!(exact(6, 10), (6, Provenance::Fact4));
        assert_eq!(exact(10, 1), (89, Provenance::Bb1982));
        assert_eq!(exact(7, 2), (9, Provenance::SchaalVestal2008));
        assert_eq!(exact(7, 3), (4, Provenance::Fact1));
    }

    #[test]
    fn not_covered_below_fact4() {
        assert!(matches!(
            r2_single_rhs(&3u64, &5).unwrap(),
            RadoResult::NotCovered { .. }
        ));
        // a/2+1 = 6 for a = 10: m = 6 covered, m = 5 not
        assert!(matches!(
            r2_single_rhs(&5u64, &10).unwrap(),
            RadoResult::NotCovered { .. }
        ));
        assert!(r2_single_rhs(&2u64, &1).is_err());
    }

    #[test]
    fn guo_sun_examples() {
        assert_eq!(guo_sun(&[1u64, 1]).unwrap(), 5);
        assert_eq!(guo_sun(&[1u64, 2]).unwrap(), 11);
        assert_eq!(guo_sun(&[2u64, 3]).unwrap(), 53);
        assert!(guo_sun(&[3u64]).is_err());
    }

    #[test]
    fn overflow_is_reported() {
        assert!(matches!(
            beutelspacher_brestovansky(&u64::MAX),
            Err(RadoError::Overflow(_))
        ));
        assert!(matches!(
            guo_sun(&[u64::MAX, 2]),
            Err(RadoError::Overflow(_))
        ));
        assert!(matches!(
            r2_single_rhs(&(1u64 << 40), &1),
            Err(RadoError::Overflow(_))
        ));
    }

    #[test]
    fn bigint_matches_u64_and_survives_overflow() {
        for m in 3u64..40 {
            for a in 1u64..20 {
                let small = r2_single_rhs(&m, &a).unwrap();
                let big = r2_single_rhs(&BigUint::from(m), &BigUint::from(a)).unwrap();
                assert_eq!(
                    small.exact_value().map(|v| BigUint::from(*v)),
                    big.exact_value().cloned()
                );
            }
        }
        let m = BigUint::from(1u64 << 40);
        let expected = &m * &m - &m - 1u32;
        assert_eq!(
            r2_single_rhs(&m, &BigUint::from(1u32))
                .unwrap()
                .exact_value(),
            Some(&expected)
        );
    }

    #[test]
    fn provenance_strings_round_trip() {
        for p in Provenance::ALL {
            assert_eq!(p.as_str().parse::<Provenance>().unwrap(), p);
            assert_eq!(
                serde_json::to_string(&p).unwrap(),
                format!("\"{}\"", p.as_str())
            );
        }
    }
}
