use crate::bits::MAX_DIMENSION;
use crate::error::{Error, Result};

/// Size limits for every computation whose cost grows like `2^n` or faster.
///
/// Closed-form quantities (`g_n`, traces via sigma sums, eigenvalue counts) are
/// not budgeted and work up to `n = 32`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    /// Full orbit enumeration touches all `2^n` vectors.
    pub enumerate_max_n: u32,
    /// Building the `g_n x g_n` matrix.
    pub matrix_max_n: u32,
    /// The full cubic product for the square identity.
    pub square_max_n: u32,
    /// Materialized truth tables of `2^n` bits.
    pub truth_table_max_n: u32,
    /// Exhaustive bent search enumerates `2^g` functions.
    pub search_max_orbits: usize,
    /// Sampled bent search.
    pub sample_max_n: u32,
    /// Brute-force sigma sums and traces in [`crate::oracle`].
    pub oracle_max_n: u32,
    /// Brute-force orbit counting in [`crate::oracle`].
    pub orbit_oracle_max_n: u32,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            enumerate_max_n: 24,
            matrix_max_n: 16,
            square_max_n: 14,
            truth_table_max_n: 24,
            search_max_orbits: 26,
            sample_max_n: 12,
            oracle_max_n: 16,
            orbit_oracle_max_n: 20,
        }
    }
}

impl Budget {
    /// A budget whose every dimension cap is `max_n` (clamped to 32).
    /// The exhaustive-search cap on `g_n` is left unchanged.
    pub fn with_max_n(max_n: u32) -> Self {
        let n = max_n.min(MAX_DIMENSION);
        Budget {
            enumerate_max_n: n,
            matrix_max_n: n,
            square_max_n: n,
            truth_table_max_n: n,
            sample_max_n: n,
            oracle_max_n: n,
            orbit_oracle_max_n: n,
            ..Budget::default()
        }
    }

    pub(crate) fn check(what: &'static str, n: u32, max: u32) -> Result<()> {
        if n > max {
            Err(Error::Budget { what, n, max })
        } else {
            Ok(())
        }
    }
}
