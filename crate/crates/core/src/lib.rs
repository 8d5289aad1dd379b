//! Exact orbit-level algebra for rotation symmetric Boolean functions (RSBFs).
//!
//! The cyclic group `C_n` acts on `F_2^n` by rotating coordinates. Every RSBF is
//! constant on the orbits of that action, so its Walsh spectrum is determined by
//! `g_n` values, one per orbit. This crate builds the `g_n x g_n` integer matrix
//! whose `(i, j)` entry is `sum_{x in orbit i} (-1)^(x . rep_j)`, checks its
//! algebraic identities in exact integer arithmetic, and uses it to compute
//! spectra and bentness without touching all `2^n` points.
//!
//! Every closed form has a deliberately naive counterpart in [`oracle`].
//!
//! Dimensions `n = 1` and `n = 2` are supported by the orbit and matrix code as
//! an extension; the eigenvalue statements only hold for `n > 2` and
//! [`eigen_multiplicities`] rejects smaller dimensions.

#![forbid(unsafe_code)]

mod bits;
mod budget;
mod eigen;
mod error;
pub mod format;
mod matrix;
pub mod oracle;
mod orbits;
mod search;
mod walsh;

pub use crate::bits::{BitVector, MAX_DIMENSION};
pub use crate::budget::Budget;
pub use crate::eigen::{
    eigen_multiplicities, sigma_sum_closed_form, trace_by_divisors, trace_via_sigma_sums,
    CyclicShift, EigenReport,
};
pub use crate::error::{Error, Result};
pub use crate::matrix::{RsbfMatrix, SquareCheck, SquareFailure};
pub use crate::orbits::{
    canonical_representative, count_orbits_burnside, enumerate_orbits, euler_phi, Orbit, OrbitTable,
};
pub use crate::search::{search_bent, search_bent_within, SearchMode, SearchReport};
pub use crate::walsh::{
    expand, expand_within, is_bent, spectrum_via_matrix, walsh_brute, RsbfFunction, TruthTable,
    WalshSpectrum,
};
