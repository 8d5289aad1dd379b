use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::bits::{check_dimension, format_bits};
use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::matrix::RsbfMatrix;
use crate::orbits::OrbitTable;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchMode {
    /// Every one of the `2^g_n` RSBFs.
    Exhaustive,
    /// `count` uniformly random RSBFs drawn with replacement.
    Sampled { count: u64, seed: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchReport {
    pub n: u32,
    pub mode: SearchMode,
    pub functions_tested: u64,
    /// Orbit-value strings of the bent functions, in test order.
    pub bent_found: Vec<String>,
    /// Set when the search was skipped, e.g. for odd `n`.
    pub reason: Option<String>,
}

impl SearchReport {
    pub fn bent_count(&self) -> usize {
        self.bent_found.len()
    }
}

/// Bentness check against the precomputed transposed matrix, with early exit.
struct BentTester {
    g: usize,
    columns: Vec<i32>,
    target: i64,
}

impl BentTester {
    fn new(m: &RsbfMatrix) -> Self {
        let g = m.g();
        let mut columns = vec![0; g * g];
        for i in 0..g {
            for j in 0..g {
                columns[j * g + i] = m.entry(i, j);
            }
        }
        BentTester {
            g,
            columns,
            target: 1i64 << (m.n() / 2),
        }
    }

    fn is_bent(&self, values: &[bool]) -> bool {
        self.columns.chunks(self.g).all(|col| {
            let w: i64 = col
                .iter()
                .zip(values)
                .map(|(&a, &f)| if f { -i64::from(a) } else { i64::from(a) })
                .sum();
            w.abs() == self.target
        })
    }
}

/// Orbit values for mask `mask`, with orbit 0 as the most significant bit so
/// that ascending masks give ascending orbit-value strings.
fn mask_values(mask: u64, g: usize) -> Vec<bool> {
    (0..g).map(|i| (mask >> (g - 1 - i)) & 1 == 1).collect()
}

pub fn search_bent(n: u32, mode: SearchMode) -> Result<SearchReport> {
    search_bent_within(n, mode, &Budget::default())
}

pub fn search_bent_within(n: u32, mode: SearchMode, budget: &Budget) -> Result<SearchReport> {
    check_dimension(n)?;
    match mode {
        SearchMode::Exhaustive => exhaustive(n, budget),
        SearchMode::Sampled { count, seed } => sampled(n, count, seed, budget),
    }
}

fn exhaustive(n: u32, budget: &Budget) -> Result<SearchReport> {
    if n % 2 == 1 {
        return Ok(SearchReport {
            n,
            mode: SearchMode::Exhaustive,
            functions_tested: 0,
            bent_found: Vec::new(),
            reason: Some("no bent functions for odd n".into()),
        });
    }
    let g = crate::orbits::count_orbits_burnside(n)? as usize;
    if g > budget.search_max_orbits || g >= 64 {
        return Err(Error::SearchBudget {
            g,
            max: budget.search_max_orbits,
        });
    }
    let table = OrbitTable::enumerate_within(n, budget)?;
    let m = RsbfMatrix::build_within(table, budget)?;
    let tester = BentTester::new(&m);

    let total = 1u64 << g;
    const CHUNK: u64 = 1 << 12;
    let bent_found: Vec<String> = (0..total.div_ceil(CHUNK))
        .into_par_iter()
        .flat_map_iter(|c| {
            let tester = &tester;
            (c * CHUNK..((c + 1) * CHUNK).min(total)).filter_map(move |mask| {
                let values = mask_values(mask, g);
                tester.is_bent(&values).then(|| format_bits(&values))
            })
        })
        .collect();

    Ok(SearchReport {
        n,
        mode: SearchMode::Exhaustive,
        functions_tested: total,
        bent_found,
        reason: None,
    })
}

fn sampled(n: u32, count: u64, seed: u64, budget: &Budget) -> Result<SearchReport> {
    Budget::check("sampled bent search", n, budget.sample_max_n)?;
    let table = OrbitTable::enumerate_within(n, budget)?;
    let g = table.g();
    let m = RsbfMatrix::build_within(table, budget)?;
    let tester = BentTester::new(&m);

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut bent_found = Vec::new();
    for _ in 0..count {
        let values: Vec<bool> = (0..g).map(|_| rng.random::<bool>()).collect();
        if tester.is_bent(&values) {
            bent_found.push(format_bits(&values));
        }
    }
    Ok(SearchReport {
        n,
        mode: SearchMode::Sampled { count, seed },
        functions_tested: count,
        bent_found,
        reason: None,
    })
}
