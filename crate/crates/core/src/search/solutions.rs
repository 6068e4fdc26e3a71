use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::equations::Equation;

/// Values for each side, aligned with that side's coefficients. Positions
/// sharing a coefficient value carry nondecreasing values, so every solution
/// has exactly one representative.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Solution {
    pub lhs: Vec<u64>,
    pub rhs: Vec<u64>,
}

/// Every canonical solution with all values in `[r]`, in lexicographic order.
pub fn enumerate_solutions(eq: &Equation, r: u64) -> Vec<Solution> {
    let mut out = Vec::new();
    for_each_solution(eq, r, |lhs, rhs| {
        out.push(Solution {
            lhs: lhs.to_vec(),
            rhs: rhs.to_vec(),
        })
    });
    out.sort();
    out
}

pub(crate) fn for_each_solution(eq: &Equation, r: u64, mut f: impl FnMut(&[u64], &[u64])) {
    if r == 0 {
        return;
    }
    let mut by_total: BTreeMap<u64, Vec<Vec<u64>>> = BTreeMap::new();
    visit_side(eq.rhs(), r, u64::MAX, &mut |vals, total| {
        by_total.entry(total).or_default().push(vals.to_vec());
    });
    let Some((&cap, _)) = by_total.last_key_value() else {
        return;
    };
    visit_side(eq.lhs(), r, cap, &mut |vals, total| {
        if let Some(rhs) = by_total.get(&total) {
            for y in rhs {
                f(vals, y);
            }
        }
    });
}

/// Calls `f(values, total)` for every canonical assignment of `[r]` values to
/// `coeffs` whose total is at most `cap`.
fn visit_side(coeffs: &[u64], r: u64, cap: u64, f: &mut dyn FnMut(&[u64], u64)) {
    // previous position with the same coefficient, for the ordering constraint
    let prev_same: Vec<Option<usize>> = (0..coeffs.len())
        .map(|i| (0..i).rev().find(|&j| coeffs[j] == coeffs[i]))
        .collect();
    // smallest possible contribution of positions i.. (all ones)
    let mut tail_min = vec![0u64; coeffs.len() + 1];
    for i in (0..coeffs.len()).rev() {
        tail_min[i] = tail_min[i + 1].saturating_add(coeffs[i]);
    }
    let mut vals = vec![0u64; coeffs.len()];
    rec(coeffs, &prev_same, &tail_min, r, cap, 0, 0, &mut vals, f);

    #[allow(clippy::too_many_arguments)]
    fn rec(
        coeffs: &[u64],
        prev_same: &[Option<usize>],
        tail_min: &[u64],
        r: u64,
        cap: u64,
        i: usize,
        total: u64,
        vals: &mut Vec<u64>,
        f: &mut dyn FnMut(&[u64], u64),
    ) {
        if i == coeffs.len() {
            f(vals, total);
            return;
        }
        let start = prev_same[i].map_or(1, |j| vals[j]);
        for v in start..=r {
            let Some(t) = coeffs[i]
                .checked_mul(v)
                .and_then(|cv| total.checked_add(cv))
            else {
                break;
            };
            // remaining positions add at least tail_min[i+1]
            if t.saturating_add(tail_min[i + 1]) > cap {
                break;
            }
            vals[i] = v;
            rec(coeffs, prev_same, tail_min, r, cap, i + 1, t, vals, f);
        }
    }
}
