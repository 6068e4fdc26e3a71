//! 2-color Rado numbers of `x1 + ... + xn = a1*y1 + ... + al*yl`.
//!
//! Closed forms live in [`closed_forms`] and [`rado_theorems`]; they are
//! generic over the exact integer type ([`RadoInt`]). [`search`] is an
//! independent exhaustive oracle that recomputes the same numbers from the
//! definition and produces witness colorings and DIMACS encodings.

pub mod cli;
pub mod closed_forms;
pub mod equations;
pub mod error;
pub mod rado_theorems;
pub mod scalar;
pub mod search;
pub mod witnesses;

pub use closed_forms::{Provenance, RadoResult};
pub use equations::{Equation, EquationClass};
pub use error::{RadoError, Result};
pub use scalar::RadoInt;
pub use search::{Color, Coloring, SearchOutcome};

/// Closed-form results on machine words; overflow is reported, not wrapped.
pub type Rado64 = RadoResult<u64>;
/// Closed-form results on 128-bit words.
pub type Rado128 = RadoResult<u128>;
/// Closed-form results on arbitrary-precision integers.
pub type RadoBig = RadoResult<num_bigint::BigUint>;
