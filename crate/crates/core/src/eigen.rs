//! Trace and eigenvalue multiplicities of the RSBF matrix from closed forms.
//!
//! Since `A^2 = 2^n I`, `A` is diagonalizable with eigenvalues `+-2^(n/2)`.
//! Their multiplicities follow from `pos + neg = g_n` and
//! `pos - neg = Tr(A) / 2^(n/2)`, so no floating-point eigensolver is needed.
//! The trace itself is `(1/n) sum_{sigma in C_n} S_sigma` where
//! `S_sigma = sum_x (-1)^(x . sigma x)`.

use serde::Serialize;

use crate::bits::check_dimension;
use crate::error::{Error, Result};
use crate::orbits::{count_orbits_burnside, divisors, euler_phi};

/// The shift `sigma = rho^k` acting on `F_2^n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CyclicShift {
    n: u32,
    k: u32,
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

impl CyclicShift {
    /// `k` is reduced mod `n`.
    pub fn new(n: u32, k: u32) -> Result<CyclicShift> {
        check_dimension(n)?;
        Ok(CyclicShift { n, k: k % n })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    /// `n / gcd(n, k)`; the identity shift has order 1.
    pub fn order(&self) -> u32 {
        self.n / self.cycle_length()
    }

    /// `gcd(n, k)`, the number of disjoint cycles of the coordinate permutation.
    pub fn cycle_length(&self) -> u32 {
        gcd(self.n, self.k)
    }
}

/// `S_sigma = 2^(n/2 + n/ord(sigma))` if `ord(sigma)` is even, else 0.
pub fn sigma_sum_closed_form(shift: CyclicShift) -> u64 {
    let order = shift.order();
    if order % 2 == 1 {
        return 0;
    }
    1u64 << (shift.n / 2 + shift.n / order)
}

/// `Tr(A) = (1/n) sum_{k=0}^{n-1} S_{rho^k}` using the closed form for each sum.
pub fn trace_via_sigma_sums(n: u32) -> Result<i64> {
    check_dimension(n)?;
    let total: u128 = (0..n)
        .map(|k| u128::from(sigma_sum_closed_form(CyclicShift { n, k })))
        .sum();
    exact_div(total, u128::from(n), "sigma-sum trace")
}

/// The divisor form of the trace: 0 for odd `n`, otherwise
/// `(1/n) 2^(n/2) sum_{d | n, n/d even} phi(n/d) 2^d`.
pub fn trace_by_divisors(n: u32) -> Result<i64> {
    check_dimension(n)?;
    if n % 2 == 1 {
        return Ok(0);
    }
    let sum: u128 = divisors(n)
        .filter(|d| (n / d).is_multiple_of(2))
        .map(|d| u128::from(euler_phi(u64::from(n / d))) << d)
        .sum();
    exact_div(sum << (n / 2), u128::from(n), "divisor trace")
}

fn exact_div(num: u128, den: u128, what: &str) -> Result<i64> {
    if !num.is_multiple_of(den) {
        return Err(Error::Internal(format!(
            "{what}: {num} not divisible by {den}"
        )));
    }
    i64::try_from(num / den).map_err(|_| Error::Overflow("trace"))
}

/// Multiplicities of the eigenvalues `+2^(n/2)` and `-2^(n/2)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct EigenReport {
    pub n: u32,
    pub g: u64,
    pub trace: i64,
    pub positive: u64,
    pub negative: u64,
}

/// Eigenvalue counts for `n > 2`.
///
/// Odd `n` gives `g_n / 2` of each sign. For even `n` the surplus of positive
/// eigenvalues is `(1/n) sum_{k | n, k even} phi(k) 2^(n/k)`. The result is
/// cross-checked against [`trace_via_sigma_sums`].
pub fn eigen_multiplicities(n: u32) -> Result<EigenReport> {
    check_dimension(n)?;
    if n <= 2 {
        return Err(Error::OutsideTheoremScope(n));
    }
    let g = count_orbits_burnside(n)?;
    if g % 2 != 0 {
        return Err(Error::Internal(format!("g_{n} = {g} is odd")));
    }
    let trace = trace_via_sigma_sums(n)?;
    let half = g / 2;

    let (positive, negative) = if n % 2 == 1 {
        if trace != 0 {
            return Err(Error::Internal(format!("odd n={n} has trace {trace}")));
        }
        (half, half)
    } else {
        let surplus: u128 = divisors(n)
            .filter(|k| k % 2 == 0)
            .map(|k| u128::from(euler_phi(u64::from(k))) << (n / k))
            .sum();
        let two_n = 2 * u128::from(n);
        if !surplus.is_multiple_of(two_n) {
            return Err(Error::Internal(format!(
                "eigenvalue correction {surplus} not divisible by {two_n}"
            )));
        }
        let delta = u64::try_from(surplus / two_n).map_err(|_| Error::Overflow("eigen count"))?;
        let negative = half
            .checked_sub(delta)
            .ok_or_else(|| Error::Internal(format!("negative multiplicity below zero at n={n}")))?;
        let positive = half + delta;

        let scale = 1i128 << (n / 2);
        if i128::from(trace) != (i128::from(positive) - i128::from(negative)) * scale {
            return Err(Error::Internal(format!(
                "trace {trace} disagrees with multiplicities ({positive}, {negative})"
            )));
        }
        (positive, negative)
    };

    Ok(EigenReport {
        n,
        g,
        trace,
        positive,
        negative,
    })
}
