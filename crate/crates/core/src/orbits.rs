use rayon::prelude::*;

use crate::bits::{check_dimension, mask, rotate_word, BitVector};
use crate::budget::Budget;
use crate::error::{Error, Result};

/// One orbit of `C_n` acting on `F_2^n`, i.e. a binary necklace.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Orbit {
    representative: BitVector,
    size: u32,
}

impl Orbit {
    /// The orbit of `v`, represented by its lexicographically first rotation.
    pub fn of(v: BitVector) -> Orbit {
        let representative = canonical_representative(v);
        Orbit {
            representative,
            size: period(representative.bits(), representative.dimension()),
        }
    }

    /// Lexicographically (equivalently, numerically) smallest element.
    pub fn representative(&self) -> BitVector {
        self.representative
    }

    /// Number of distinct rotations; always divides `n`.
    pub fn size(&self) -> u32 {
        self.size
    }

    /// The distinct elements `rho^0(rep), ..., rho^(size-1)(rep)`.
    pub fn elements(&self) -> impl Iterator<Item = BitVector> + '_ {
        let rep = self.representative;
        (0..self.size as usize).map(move |k| rep.rotate(k))
    }

    pub fn contains(&self, v: &BitVector) -> bool {
        v.dimension() == self.representative.dimension()
            && canonical_representative(*v) == self.representative
    }
}

/// All orbits of `F_2^n`, sorted ascending by representative.
///
/// Index 0 is the all-zero orbit and index `g - 1` the all-ones orbit. This
/// order fixes the row and column order of [`crate::RsbfMatrix`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitTable {
    n: u32,
    orbits: Vec<Orbit>,
}

/// Smallest `t > 0` with `rho^t(word) = word`.
fn period(word: u32, n: u32) -> u32 {
    (1..n)
        .filter(|t| n.is_multiple_of(*t))
        .find(|&t| rotate_word(word, n, t) == word)
        .unwrap_or(n)
}

#[inline]
fn min_rotation(word: u32, n: u32) -> u32 {
    (1..n).fold(word, |m, k| m.min(rotate_word(word, n, k)))
}

/// Minimum over all `n` rotations in lexicographic order.
pub fn canonical_representative(v: BitVector) -> BitVector {
    BitVector::from_word(v.dimension(), min_rotation(v.bits(), v.dimension()))
}

/// Enumerates the orbits of `F_2^n` under the default [`Budget`].
pub fn enumerate_orbits(n: u32) -> Result<OrbitTable> {
    OrbitTable::enumerate(n)
}

impl OrbitTable {
    pub fn enumerate(n: u32) -> Result<OrbitTable> {
        OrbitTable::enumerate_within(n, &Budget::default())
    }

    /// Single pass over all `2^n` encodings; `x` starts a new orbit iff it is
    /// its own minimum rotation.
    pub fn enumerate_within(n: u32, budget: &Budget) -> Result<OrbitTable> {
        check_dimension(n)?;
        Budget::check("orbit enumeration", n, budget.enumerate_max_n)?;

        const CHUNK: u64 = 1 << 14;
        let total = u64::from(mask(n)) + 1;
        let chunks = total.div_ceil(CHUNK);
        let per_chunk: Vec<Vec<Orbit>> = (0..chunks)
            .into_par_iter()
            .map(|c| {
                let start = c * CHUNK;
                let end = (start + CHUNK).min(total);
                (start..end)
                    .map(|w| w as u32)
                    .filter(|&w| min_rotation(w, n) == w)
                    .map(|w| Orbit {
                        representative: BitVector::from_word(n, w),
                        size: period(w, n),
                    })
                    .collect()
            })
            .collect();
        let orbits: Vec<Orbit> = per_chunk.into_iter().flatten().collect();

        let table = OrbitTable { n, orbits };
        let expected = count_orbits_burnside(n)?;
        if table.g() as u64 != expected {
            return Err(Error::Internal(format!(
                "enumerated {} orbits for n={n}, Burnside count is {expected}",
                table.g()
            )));
        }
        Ok(table)
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// Number of orbits `g_n`.
    pub fn g(&self) -> usize {
        self.orbits.len()
    }

    pub fn orbits(&self) -> &[Orbit] {
        &self.orbits
    }

    pub fn get(&self, index: usize) -> Option<&Orbit> {
        self.orbits.get(index)
    }

    pub fn representatives(&self) -> impl Iterator<Item = BitVector> + '_ {
        self.orbits.iter().map(Orbit::representative)
    }

    /// Index of the orbit containing `v`.
    pub fn index_of(&self, v: &BitVector) -> Option<usize> {
        if v.dimension() != self.n {
            return None;
        }
        let rep = min_rotation(v.bits(), self.n);
        self.index_of_representative_word(rep)
    }

    pub(crate) fn index_of_representative_word(&self, rep: u32) -> Option<usize> {
        self.orbits
            .binary_search_by_key(&rep, |o| o.representative.bits())
            .ok()
    }
}

/// Euler's totient by trial-division factorization.
pub fn euler_phi(k: u64) -> u64 {
    assert!(k >= 1, "euler_phi is defined for k >= 1");
    let mut rest = k;
    let mut phi = k;
    let mut p = 2;
    while p * p <= rest {
        if rest.is_multiple_of(p) {
            while rest.is_multiple_of(p) {
                rest /= p;
            }
            phi -= phi / p;
        }
        p += 1;
    }
    if rest > 1 {
        phi -= phi / rest;
    }
    phi
}

pub(crate) fn divisors(n: u32) -> impl Iterator<Item = u32> {
    (1..=n).filter(move |d| n.is_multiple_of(*d))
}

/// `g_n = (1/n) sum_{k | n} phi(k) 2^(n/k)`, in exact integer arithmetic.
pub fn count_orbits_burnside(n: u32) -> Result<u64> {
    check_dimension(n)?;
    let sum: u128 = divisors(n)
        .map(|k| u128::from(euler_phi(u64::from(k))) << (n / k))
        .sum();
    let n128 = u128::from(n);
    if !sum.is_multiple_of(n128) {
        return Err(Error::Internal(format!(
            "Burnside sum {sum} not divisible by n={n}"
        )));
    }
    u64::try_from(sum / n128).map_err(|_| Error::Overflow("orbit count"))
}
