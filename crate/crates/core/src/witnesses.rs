//! Explicit valid colorings that certify lower bounds on `r2(n, k)`.

use serde::{Deserialize, Serialize};

use crate::closed_forms::ceil_c;
use crate::equations::Equation;
use crate::error::{RadoError, Result};
use crate::search::{has_mono_solution, Coloring};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum WitnessName {
    LemmaColoring,
    ParityColoring3,
    Mod3Coloring4,
}

/// A coloring of `[r]` claimed to have no monochromatic solution of
/// `claims_no_mono_for` whenever `applicable` holds, which certifies a Rado
/// number of at least `r + 1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessColoring {
    pub name: WitnessName,
    #[serde(flatten)]
    pub coloring: Coloring,
    pub applicable: bool,
    pub applicable_when: String,
    pub claims_no_mono_for: Equation,
    pub certifies_lower_bound: u64,
}

impl WitnessColoring {
    /// Checks the claim with the search module.
    pub fn verify(&self) -> Result<bool> {
        Ok(!has_mono_solution(
            &self.claims_no_mono_for,
            &self.coloring,
        )?)
    }
}

fn usize_of(v: u64) -> Result<usize> {
    usize::try_from(v).map_err(|_| RadoError::TooLarge(format!("{v} variables")))
}

/// Red = `{1, ..., ⌈n/k⌉ - 1}`, blue = the rest of `[C(n+1, k) - 1]`.
pub fn lemma_coloring(n: u64, k: u64) -> Result<WitnessColoring> {
    if k == 0 || n <= k {
        return Err(RadoError::Precondition(format!(
            "lemma coloring needs n > k >= 1, got n={n}, k={k}"
        )));
    }
    let bound = ceil_c(&(n + 1), &k)?;
    let r = usize_of(bound - 1)?;
    let red_top = n.div_ceil(k) - 1;
    let red: Vec<u64> = (1..=red_top).collect();
    Ok(WitnessColoring {
        name: WitnessName::LemmaColoring,
        coloring: Coloring::from_red(r, &red),
        applicable: true,
        applicable_when: "n > k >= 1".into(),
        claims_no_mono_for: Equation::unit(usize_of(n)?, usize_of(k)?)?,
        certifies_lower_bound: bound,
    })
}

/// Red = `{1, 3}`, blue = `{2}`.
pub fn parity_coloring_3() -> Coloring {
    Coloring::from_red(3, &[1, 3])
}

/// `k + 1 <= n <= 3k/2` and `n ≢ k (mod 2)`.
pub fn apply_parity(n: u64, k: u64) -> bool {
    k < n && 2 * n <= 3 * k && n % 2 != k % 2
}

pub fn parity_witness(n: u64, k: u64) -> Result<WitnessColoring> {
    Ok(WitnessColoring {
        name: WitnessName::ParityColoring3,
        coloring: parity_coloring_3(),
        applicable: apply_parity(n, k),
        applicable_when: "k+1 <= n <= 3k/2 and n, k of different parity".into(),
        claims_no_mono_for: Equation::unit(usize_of(n)?, usize_of(k)?)?,
        certifies_lower_bound: 4,
    })
}

/// Red = `{1, 4}`, blue = `{2, 3}`.
pub fn mod3_coloring_4() -> Coloring {
    Coloring::from_red(4, &[1, 4])
}

/// `n > 3k/2` and `n ≢ k (mod 3)`.
pub fn apply_mod3(n: u64, k: u64) -> bool {
    2 * n > 3 * k && n % 3 != k % 3
}

pub fn mod3_witness(n: u64, k: u64) -> Result<WitnessColoring> {
    Ok(WitnessColoring {
        name: WitnessName::Mod3Coloring4,
        coloring: mod3_coloring_4(),
        applicable: apply_mod3(n, k),
        applicable_when: "n > 3k/2 and n ≢ k (mod 3)".into(),
        claims_no_mono_for: Equation::unit(usize_of(n)?, usize_of(k)?)?,
        certifies_lower_bound: 5,
    })
}

/// Every witness construction for `(n, k)`: the lemma coloring when `n > k`,
/// then the parity and mod-3 colorings (possibly inapplicable).
pub fn all_witnesses(n: u64, k: u64) -> Result<Vec<WitnessColoring>> {
    let mut out = Vec::new();
    if n > k && k >= 1 {
        out.push(lemma_coloring(n, k)?);
    }
    out.push(parity_witness(n, k)?);
    out.push(mod3_witness(n, k)?);
    Ok(out)
}
