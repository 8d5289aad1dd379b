//! Naive reference implementations of every closed form in the crate.
//!
//! Nothing here shares code with the optimized paths beyond [`BitVector`]'s
//! own primitives (`rotate`, `dot`). All loops are literal sums over `F_2^n`.
//! Performance is not a goal.

use std::collections::BTreeMap;

use crate::bits::BitVector;
use crate::budget::Budget;
use crate::error::{Error, Result};

fn sign(bit: u8) -> i64 {
    if bit == 0 {
        1
    } else {
        -1
    }
}

fn dot(x: &BitVector, y: &BitVector) -> u8 {
    x.dot(y).expect("same dimension")
}

/// `sum_x (-1)^(x . rho^k x)` over all `2^n` vectors.
pub fn sigma_sum_brute(n: u32, k: u32) -> Result<i64> {
    sigma_sum_brute_within(n, k, &Budget::default())
}

pub fn sigma_sum_brute_within(n: u32, k: u32, budget: &Budget) -> Result<i64> {
    Budget::check("brute-force sigma sum", n, budget.oracle_max_n)?;
    Ok(BitVector::all(n)?
        .map(|x| sign(dot(&x, &x.rotate(k as usize))))
        .sum())
}

/// `(1/n) sum_{k=0}^{n-1} sigma_sum_brute(n, k)`.
pub fn trace_brute(n: u32) -> Result<i64> {
    trace_brute_within(n, &Budget::default())
}

pub fn trace_brute_within(n: u32, budget: &Budget) -> Result<i64> {
    let mut total = 0i64;
    for k in 0..n {
        total += sigma_sum_brute_within(n, k, budget)?;
    }
    if total % i64::from(n) != 0 {
        return Err(Error::Internal(format!(
            "brute trace sum {total} not divisible by n={n}"
        )));
    }
    Ok(total / i64::from(n))
}

/// Counts orbits by marking every rotation of each unvisited vector.
pub fn orbit_count_brute(n: u32) -> Result<u64> {
    orbit_count_brute_within(n, &Budget::default())
}

pub fn orbit_count_brute_within(n: u32, budget: &Budget) -> Result<u64> {
    Budget::check("brute-force orbit count", n, budget.orbit_oracle_max_n)?;
    let mut seen = vec![false; 1usize << n];
    let mut count = 0;
    for x in BitVector::all(n)? {
        if seen[x.bits() as usize] {
            continue;
        }
        count += 1;
        for k in 0..n as usize {
            seen[x.rotate(k).bits() as usize] = true;
        }
    }
    Ok(count)
}

/// Orbits as sorted member lists, keyed and ordered by their smallest member.
pub fn orbits_brute(n: u32) -> Result<Vec<Vec<BitVector>>> {
    Budget::check(
        "brute-force orbits",
        n,
        Budget::default().orbit_oracle_max_n,
    )?;
    let mut groups: BTreeMap<BitVector, Vec<BitVector>> = BTreeMap::new();
    for x in BitVector::all(n)? {
        let rep = (0..n as usize).map(|k| x.rotate(k)).min().expect("n >= 1");
        groups.entry(rep).or_default().push(x);
    }
    Ok(groups.into_values().collect())
}

/// The RSBF matrix straight from its definition.
pub fn matrix_brute(n: u32) -> Result<Vec<Vec<i64>>> {
    Budget::check("brute-force matrix", n, 12)?;
    let orbits = orbits_brute(n)?;
    let reps: Vec<BitVector> = orbits.iter().map(|o| o[0]).collect();
    Ok(orbits
        .iter()
        .map(|orbit| {
            reps.iter()
                .map(|rep| orbit.iter().map(|x| sign(dot(x, rep))).sum())
                .collect()
        })
        .collect())
}

/// Walsh transform of a `2^n`-entry truth table at `w`, term by term.
pub fn walsh_naive(n: u32, truth_table: &[bool], w: &BitVector) -> Result<i64> {
    if truth_table.len() != 1usize << n {
        return Err(Error::LengthMismatch {
            expected: 1 << n,
            got: truth_table.len(),
        });
    }
    Ok(BitVector::all(n)?
        .map(|x| sign(u8::from(truth_table[x.bits() as usize]) ^ dot(&x, w)))
        .sum())
}

/// Bentness by evaluating the Walsh transform at every point of `F_2^n`.
pub fn is_bent_brute(n: u32, truth_table: &[bool]) -> Result<bool> {
    if n % 2 == 1 {
        return Ok(false);
    }
    let target = 1i64 << (n / 2);
    for w in BitVector::all(n)? {
        if walsh_naive(n, truth_table, &w)?.abs() != target {
            return Ok(false);
        }
    }
    Ok(true)
}

/// All bent RSBFs of dimension `n` as orbit-value strings in ascending order,
/// found by expanding each function to its truth table.
pub fn bent_search_brute(n: u32) -> Result<Vec<String>> {
    let orbits = orbits_brute(n)?;
    let g = orbits.len();
    if g > 20 {
        return Err(Error::SearchBudget { g, max: 20 });
    }
    let mut found = Vec::new();
    for mask in 0u64..(1 << g) {
        let values: String = (0..g)
            .map(|i| {
                if (mask >> (g - 1 - i)) & 1 == 1 {
                    '1'
                } else {
                    '0'
                }
            })
            .collect();
        let mut tt = vec![false; 1 << n];
        for (orbit, c) in orbits.iter().zip(values.chars()) {
            for x in orbit {
                tt[x.bits() as usize] = c == '1';
            }
        }
        if is_bent_brute(n, &tt)? {
            found.push(values);
        }
    }
    Ok(found)
}
