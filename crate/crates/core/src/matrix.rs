use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::bits::{parity, BitVector};
use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::orbits::OrbitTable;

/// The `g_n x g_n` matrix with entry `(i, j) = sum_{x in orbit i} (-1)^(x . rep_j)`.
///
/// Rows and columns follow the orbit order of the owned [`OrbitTable`].
/// Entries are bounded in magnitude by the orbit size, hence by `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RsbfMatrix {
    table: OrbitTable,
    entries: Vec<i32>,
}

/// Outcome of checking `A * A = 2^n * I`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SquareCheck {
    pub n: u32,
    pub holds: bool,
    /// First mismatch in row-major order, if any.
    pub failure: Option<SquareFailure>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SquareFailure {
    pub row: usize,
    pub col: usize,
    pub got: i64,
    pub expected: i64,
}

impl SquareCheck {
    fn from_failure(n: u32, failure: Option<SquareFailure>) -> Self {
        SquareCheck {
            n,
            holds: failure.is_none(),
            failure,
        }
    }
}

impl RsbfMatrix {
    pub fn build(table: OrbitTable) -> Result<RsbfMatrix> {
        RsbfMatrix::build_within(table, &Budget::default())
    }

    /// Iterates the elements of each orbit and sums dot-product signs against
    /// every representative. Rows are computed in parallel.
    pub fn build_within(table: OrbitTable, budget: &Budget) -> Result<RsbfMatrix> {
        Budget::check("matrix construction", table.n(), budget.matrix_max_n)?;
        let g = table.g();
        let reps: Vec<u32> = table.representatives().map(|r| r.bits()).collect();
        let mut entries = vec![0i32; g * g];
        entries
            .par_chunks_mut(g)
            .zip(table.orbits().par_iter())
            .for_each(|(row, orbit)| {
                for x in orbit.elements() {
                    let x = x.bits();
                    for (cell, &rep) in row.iter_mut().zip(&reps) {
                        *cell += if parity(x & rep) { -1 } else { 1 };
                    }
                }
            });
        Ok(RsbfMatrix { table, entries })
    }

    /// Wraps externally supplied entries (row-major) for the given orbit order.
    /// Useful for checking matrices that were not produced by [`RsbfMatrix::build`].
    pub fn from_entries(table: OrbitTable, entries: Vec<i32>) -> Result<RsbfMatrix> {
        let expected = table.g() * table.g();
        if entries.len() != expected {
            return Err(Error::LengthMismatch {
                expected,
                got: entries.len(),
            });
        }
        Ok(RsbfMatrix { table, entries })
    }

    pub fn n(&self) -> u32 {
        self.table.n()
    }

    pub fn g(&self) -> usize {
        self.table.g()
    }

    pub fn table(&self) -> &OrbitTable {
        &self.table
    }

    pub fn representatives(&self) -> impl Iterator<Item = BitVector> + '_ {
        self.table.representatives()
    }

    /// Row-major entries.
    pub fn entries(&self) -> &[i32] {
        &self.entries
    }

    pub fn entry(&self, i: usize, j: usize) -> i32 {
        assert!(
            i < self.g() && j < self.g(),
            "index ({i}, {j}) out of range"
        );
        self.entries[i * self.g() + j]
    }

    pub fn row(&self, i: usize) -> &[i32] {
        let g = self.g();
        &self.entries[i * g..(i + 1) * g]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[i32]> {
        self.entries.chunks(self.g())
    }

    /// Sum of the diagonal.
    pub fn trace_direct(&self) -> i64 {
        (0..self.g()).map(|i| i64::from(self.entry(i, i))).sum()
    }

    /// `A * x` with checked accumulation.
    pub fn apply(&self, x: &[i64]) -> Result<Vec<i64>> {
        if x.len() != self.g() {
            return Err(Error::LengthMismatch {
                expected: self.g(),
                got: x.len(),
            });
        }
        self.rows()
            .map(|row| {
                row.iter().zip(x).try_fold(0i64, |acc, (&a, &b)| {
                    i64::from(a)
                        .checked_mul(b)
                        .and_then(|p| acc.checked_add(p))
                        .ok_or(Error::Overflow("matrix-vector product"))
                })
            })
            .collect()
    }

    pub fn verify_square_identity(&self) -> Result<SquareCheck> {
        self.verify_square_identity_within(&Budget::default())
    }

    /// Full integer product `A * A` compared against `2^n * I`.
    ///
    /// Products are accumulated in `i64`. Before multiplying, the worst case
    /// `g * max|a|^2` is checked to fit; if it does not the check fails with
    /// [`Error::Overflow`] instead of wrapping.
    pub fn verify_square_identity_within(&self, budget: &Budget) -> Result<SquareCheck> {
        Budget::check("square identity check", self.n(), budget.square_max_n)?;
        let g = self.g();
        let max_abs = self
            .entries
            .iter()
            .map(|a| i64::from(a.unsigned_abs()))
            .max()
            .unwrap_or(0);
        i64::try_from(g)
            .ok()
            .and_then(|g| max_abs.checked_mul(max_abs)?.checked_mul(g))
            .ok_or(Error::Overflow("square identity accumulation"))?;

        let mut transposed = vec![0i32; g * g];
        for i in 0..g {
            for j in 0..g {
                transposed[j * g + i] = self.entries[i * g + j];
            }
        }
        let scale = 1i64 << self.n();
        let failure = (0..g).into_par_iter().find_map_first(|i| {
            let row = self.row(i);
            (0..g).find_map(|j| {
                let col = &transposed[j * g..(j + 1) * g];
                let got: i64 = row
                    .iter()
                    .zip(col)
                    .map(|(&a, &b)| i64::from(a) * i64::from(b))
                    .sum();
                let expected = if i == j { scale } else { 0 };
                (got != expected).then_some(SquareFailure {
                    row: i,
                    col: j,
                    got,
                    expected,
                })
            })
        });
        Ok(SquareCheck::from_failure(self.n(), failure))
    }

    /// Cheap probe of the square identity: checks `A (A x) = 2^n x` for
    /// `trials` seeded random integer vectors. Reported failures carry the
    /// trial number in `col` and the first differing coordinate in `row`.
    pub fn probe_square_identity(&self, seed: u64, trials: usize) -> Result<SquareCheck> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let scale = 1i64 << self.n();
        for trial in 0..trials {
            let x: Vec<i64> = (0..self.g())
                .map(|_| rng.random_range(-1000..=1000))
                .collect();
            let y = self.apply(&self.apply(&x)?)?;
            for (i, (&got, &xi)) in y.iter().zip(&x).enumerate() {
                let expected = xi * scale;
                if got != expected {
                    return Ok(SquareCheck::from_failure(
                        self.n(),
                        Some(SquareFailure {
                            row: i,
                            col: trial,
                            got,
                            expected,
                        }),
                    ));
                }
            }
        }
        Ok(SquareCheck::from_failure(self.n(), None))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::orbits::enumerate_orbits;

    const PRINTED_N4: [[i32; 6]; 6] = [
        [1, 1, 1, 1, 1, 1],
        [4, 2, 0, 0, -2, -4],
        [4, 0, 0, -4, 0, 4],
        [2, 0, -2, 2, 0, 2],
        [4, -2, 0, 0, 2, -4],
        [1, -1, 1, 1, -1, 1],
    ];

    fn built(n: u32) -> RsbfMatrix {
        RsbfMatrix::build(enumerate_orbits(n).unwrap()).unwrap()
    }

    #[test]
    fn n4_matches_printed_matrix() {
        let m = built(4);
        for (i, row) in PRINTED_N4.iter().enumerate() {
            assert_eq!(m.row(i), row, "row {i}");
        }
        assert_eq!(m.entry(3, 3), 2);
    }

    #[test]
    fn first_row_ones_first_column_sizes() {
        for n in 1..=9 {
            let m = built(n);
            assert!(m.row(0).iter().all(|&a| a == 1));
            for (i, o) in m.table().orbits().iter().enumerate() {
                assert_eq!(m.entry(i, 0), o.size() as i32);
                assert!(m.row(i).iter().all(|a| a.unsigned_abs() <= o.size()));
            }
        }
    }

    #[test]
    fn square_identity_small() {
        let m = built(4);
        let check = m.verify_square_identity().unwrap();
        assert!(check.holds);
        let m3 = built(3);
        assert!(m3.verify_square_identity().unwrap().holds);
        // n=1 and n=2 are outside the theorem's stated range but still square to 2^n I
        assert!(built(1).verify_square_identity().unwrap().holds);
        assert!(built(2).verify_square_identity().unwrap().holds);
    }

    #[test]
    fn perturbed_matrix_reports_coordinates() {
        let m = built(4);
        let mut entries = m.entries().to_vec();
        entries[2 * 6 + 3] += 1;
        let bad = RsbfMatrix::from_entries(m.table().clone(), entries).unwrap();
        let check = bad.verify_square_identity().unwrap();
        assert!(!check.holds);
        // row 0 times column 3 picks up the perturbed entry first
        assert_eq!(
            check.failure,
            Some(SquareFailure {
                row: 0,
                col: 3,
                got: 1,
                expected: 0
            })
        );
        assert!(!bad.probe_square_identity(7, 4).unwrap().holds);
    }

    #[test]
    fn overflow_is_detected() {
        let t = enumerate_orbits(3).unwrap();
        let g = t.g();
        let bad = RsbfMatrix::from_entries(t, vec![i32::MIN; g * g]).unwrap();
        // 4 * 2^62 does not fit
        assert_eq!(
            bad.verify_square_identity(),
            Err(Error::Overflow("square identity accumulation"))
        );
        assert!(bad.apply(&vec![i64::MAX; g]).is_err());
    }

    #[test]
    fn from_entries_checks_length() {
        let t = enumerate_orbits(3).unwrap();
        assert!(RsbfMatrix::from_entries(t, vec![0; 5]).is_err());
    }

    #[test]
    fn trace_examples() {
        assert_eq!(built(4).trace_direct(), 8);
        assert_eq!(built(3).trace_direct(), 0);
        assert_eq!(built(6).trace_direct(), 16);
    }

    #[test]
    fn probe_holds_for_built_matrices() {
        for n in [5, 8, 12] {
            assert!(
                built(n)
                    .probe_square_identity(u64::from(n), 3)
                    .unwrap()
                    .holds
            );
        }
    }

    #[test]
    fn budgets() {
        let t = enumerate_orbits(6).unwrap();
        let tight = Budget::with_max_n(5);
        assert!(RsbfMatrix::build_within(t.clone(), &tight)
            .unwrap_err()
            .is_resource());
        let m = RsbfMatrix::build(t).unwrap();
        assert!(m
            .verify_square_identity_within(&tight)
            .unwrap_err()
            .is_resource());
    }
}
