use std::fmt;

use rayon::prelude::*;

use crate::bits::{check_dimension, format_bits, mask, parity, parse_bits, rotate_word, BitVector};
use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::matrix::RsbfMatrix;
use crate::orbits::OrbitTable;

/// A rotation symmetric Boolean function given by one value per orbit.
///
/// `values()[i]` is `f` on orbit `i` of the associated [`OrbitTable`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RsbfFunction {
    n: u32,
    orbit_values: Vec<bool>,
}

impl RsbfFunction {
    pub fn new(table: &OrbitTable, orbit_values: Vec<bool>) -> Result<RsbfFunction> {
        if orbit_values.len() != table.g() {
            return Err(Error::LengthMismatch {
                expected: table.g(),
                got: orbit_values.len(),
            });
        }
        Ok(RsbfFunction {
            n: table.n(),
            orbit_values,
        })
    }

    pub fn constant(table: &OrbitTable, value: bool) -> RsbfFunction {
        RsbfFunction {
            n: table.n(),
            orbit_values: vec![value; table.g()],
        }
    }

    /// Parses `g_n` characters in orbit-index order.
    pub fn from_bitstring(table: &OrbitTable, s: &str) -> Result<RsbfFunction> {
        RsbfFunction::new(table, parse_bits(s)?)
    }

    /// Reads a function from either a `g_n`-character orbit-value string or a
    /// `2^n`-character truth table. Truth tables must be rotation invariant.
    pub fn parse(table: &OrbitTable, s: &str, budget: &Budget) -> Result<RsbfFunction> {
        let bits = parse_bits(s)?;
        if bits.len() == table.g() {
            return RsbfFunction::new(table, bits);
        }
        let full = 1usize.checked_shl(table.n()).ok_or(Error::LengthMismatch {
            expected: table.g(),
            got: bits.len(),
        })?;
        if bits.len() == full {
            let tt = TruthTable::new_within(table.n(), bits, budget)?;
            return RsbfFunction::from_truth_table(&tt, table);
        }
        Err(Error::LengthMismatch {
            expected: table.g(),
            got: bits.len(),
        })
    }

    /// Projects a truth table onto orbits; fails on the first orbit where the
    /// table is not constant.
    pub fn from_truth_table(tt: &TruthTable, table: &OrbitTable) -> Result<RsbfFunction> {
        if tt.n != table.n() {
            return Err(Error::DimensionMismatch {
                left: tt.n,
                right: table.n(),
            });
        }
        if let Some((a, b)) = tt.rotation_violation() {
            return Err(Error::NotRotationInvariant {
                left: a.to_string(),
                right: b.to_string(),
            });
        }
        let orbit_values = table.representatives().map(|r| tt.get(r.bits())).collect();
        Ok(RsbfFunction {
            n: tt.n,
            orbit_values,
        })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn values(&self) -> &[bool] {
        &self.orbit_values
    }

    pub fn complement(&self) -> RsbfFunction {
        RsbfFunction {
            n: self.n,
            orbit_values: self.orbit_values.iter().map(|b| !b).collect(),
        }
    }
}

impl fmt::Display for RsbfFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_bits(&self.orbit_values))
    }
}

/// A Boolean function on `F_2^n` as `2^n` values indexed by vector encoding.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruthTable {
    n: u32,
    values: Vec<bool>,
}

impl TruthTable {
    pub fn new(n: u32, values: Vec<bool>) -> Result<TruthTable> {
        TruthTable::new_within(n, values, &Budget::default())
    }

    pub fn new_within(n: u32, values: Vec<bool>, budget: &Budget) -> Result<TruthTable> {
        check_dimension(n)?;
        Budget::check("truth table", n, budget.truth_table_max_n)?;
        let expected = 1usize << n;
        if values.len() != expected {
            return Err(Error::LengthMismatch {
                expected,
                got: values.len(),
            });
        }
        Ok(TruthTable { n, values })
    }

    /// Parses `2^n` characters; character `x` is `f` at the vector with encoding `x`.
    pub fn from_bitstring(n: u32, s: &str) -> Result<TruthTable> {
        TruthTable::new(n, parse_bits(s)?)
    }

    pub fn from_fn(n: u32, f: impl Fn(BitVector) -> bool) -> Result<TruthTable> {
        let values = BitVector::all(n)?.map(f).collect();
        TruthTable::new(n, values)
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn values(&self) -> &[bool] {
        &self.values
    }

    pub fn get(&self, x: u32) -> bool {
        self.values[x as usize]
    }

    /// First pair `(x, rho(x))` with differing values, if any.
    pub fn rotation_violation(&self) -> Option<(BitVector, BitVector)> {
        (0..=u64::from(mask(self.n)))
            .map(|x| x as u32)
            .find_map(|x| {
                let y = rotate_word(x, self.n, 1 % self.n);
                (self.get(x) != self.get(y)).then(|| {
                    (
                        BitVector::from_word(self.n, x),
                        BitVector::from_word(self.n, y),
                    )
                })
            })
    }

    pub fn is_rotation_invariant(&self) -> bool {
        self.rotation_violation().is_none()
    }
}

impl fmt::Display for TruthTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_bits(&self.values))
    }
}

/// Walsh values at the orbit representatives; `values[j] = W_f(rep_j)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WalshSpectrum {
    pub n: u32,
    pub values: Vec<i64>,
}

impl WalshSpectrum {
    /// `sum_j |orbit j| * W_f(rep_j)^2`, which equals `2^(2n)` for every `f`.
    pub fn orbit_parseval_sum(&self, table: &OrbitTable) -> i128 {
        self.values
            .iter()
            .zip(table.orbits())
            .map(|(&w, o)| i128::from(o.size()) * i128::from(w) * i128::from(w))
            .sum()
    }

    /// True iff every value is `+-2^(n/2)`. Always false for odd `n`.
    pub fn is_bent(&self) -> bool {
        if self.n % 2 == 1 {
            return false;
        }
        let target = 1i64 << (self.n / 2);
        self.values.iter().all(|w| w.abs() == target)
    }
}

/// `W_f(rep_j) = sum_i (-1)^(f_i) A[i][j]`.
pub fn spectrum_via_matrix(f: &RsbfFunction, m: &RsbfMatrix) -> Result<WalshSpectrum> {
    if f.n != m.n() {
        return Err(Error::DimensionMismatch {
            left: f.n,
            right: m.n(),
        });
    }
    let g = m.g();
    let values = (0..g)
        .into_par_iter()
        .map(|j| {
            f.orbit_values
                .iter()
                .enumerate()
                .map(|(i, &fi)| {
                    let a = i64::from(m.entry(i, j));
                    if fi {
                        -a
                    } else {
                        a
                    }
                })
                .sum()
        })
        .collect();
    Ok(WalshSpectrum { n: f.n, values })
}

/// `W_f(w) = sum_x (-1)^(f(x) + x . w)`, one term per `x`. No butterfly.
pub fn walsh_brute(tt: &TruthTable, w: &BitVector) -> Result<i64> {
    if w.dimension() != tt.n {
        return Err(Error::DimensionMismatch {
            left: tt.n,
            right: w.dimension(),
        });
    }
    let w = w.bits();
    Ok(tt
        .values
        .iter()
        .enumerate()
        .map(|(x, &fx)| if fx ^ parity(x as u32 & w) { -1i64 } else { 1 })
        .sum())
}

/// Full truth table of an RSBF; `tt[x]` is the value on the orbit containing `x`.
pub fn expand(f: &RsbfFunction, table: &OrbitTable) -> Result<TruthTable> {
    expand_within(f, table, &Budget::default())
}

pub fn expand_within(f: &RsbfFunction, table: &OrbitTable, budget: &Budget) -> Result<TruthTable> {
    if f.n != table.n() || f.orbit_values.len() != table.g() {
        return Err(Error::DimensionMismatch {
            left: f.n,
            right: table.n(),
        });
    }
    let n = f.n;
    Budget::check("truth table", n, budget.truth_table_max_n)?;
    let mut values = vec![false; 1usize << n];
    for (orbit, &value) in table.orbits().iter().zip(&f.orbit_values) {
        if value {
            for x in orbit.elements() {
                values[x.bits() as usize] = true;
            }
        }
    }
    Ok(TruthTable { n, values })
}

/// Bentness from the orbit-level spectrum.
pub fn is_bent(f: &RsbfFunction, m: &RsbfMatrix) -> Result<bool> {
    Ok(spectrum_via_matrix(f, m)?.is_bent())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::orbits::enumerate_orbits;

    fn setup(n: u32) -> (OrbitTable, RsbfMatrix) {
        let t = enumerate_orbits(n).unwrap();
        let m = RsbfMatrix::build(t.clone()).unwrap();
        (t, m)
    }

    #[test]
    fn spectrum_examples_n4() {
        let (t, m) = setup(4);
        let zero = RsbfFunction::constant(&t, false);
        assert_eq!(
            spectrum_via_matrix(&zero, &m).unwrap().values,
            [16, 0, 0, 0, 0, 0]
        );
        let one = RsbfFunction::constant(&t, true);
        assert_eq!(
            spectrum_via_matrix(&one, &m).unwrap().values,
            [-16, 0, 0, 0, 0, 0]
        );
        let f = RsbfFunction::from_bitstring(&t, "000110").unwrap();
        let s = spectrum_via_matrix(&f, &m).unwrap();
        assert_eq!(s.values, [4, 4, 4, -4, -4, 4]);
        assert_eq!(s.orbit_parseval_sum(&t), 1 << 8);
        assert!(is_bent(&f, &m).unwrap());
        assert!(!is_bent(&zero, &m).unwrap());
    }

    #[test]
    fn orbit_values_describe_x1x3_plus_x2x4() {
        let t = enumerate_orbits(4).unwrap();
        let tt = TruthTable::from_fn(4, |x| {
            (x.component(1) & x.component(3)) ^ (x.component(2) & x.component(4))
        })
        .unwrap();
        let f = RsbfFunction::from_truth_table(&tt, &t).unwrap();
        assert_eq!(f.to_string(), "000110");
        assert_eq!(walsh_brute(&tt, &BitVector::zero(4).unwrap()).unwrap(), 4);
    }

    #[test]
    fn walsh_brute_constant() {
        for n in 1..=8 {
            let tt = TruthTable::new(n, vec![false; 1 << n]).unwrap();
            for w in BitVector::all(n).unwrap() {
                let expected = if w.bits() == 0 { 1i64 << n } else { 0 };
                assert_eq!(walsh_brute(&tt, &w).unwrap(), expected);
            }
        }
    }

    #[test]
    fn expand_examples() {
        let t = enumerate_orbits(4).unwrap();
        let zero = expand(&RsbfFunction::constant(&t, false), &t).unwrap();
        assert!(zero.values().iter().all(|&b| !b));

        let f = RsbfFunction::from_bitstring(&t, "010000").unwrap();
        let tt = expand(&f, &t).unwrap();
        let ones: Vec<String> = BitVector::all(4)
            .unwrap()
            .filter(|x| tt.get(x.bits()))
            .map(|x| x.to_string())
            .collect();
        assert_eq!(ones, ["0001", "0010", "0100", "1000"]);
        assert!(tt.is_rotation_invariant());
        assert_eq!(RsbfFunction::from_truth_table(&tt, &t).unwrap(), f);
    }

    #[test]
    fn non_invariant_table_is_rejected() {
        let t = enumerate_orbits(3).unwrap();
        let tt = TruthTable::from_bitstring(3, "01000000").unwrap();
        assert!(matches!(
            RsbfFunction::from_truth_table(&tt, &t),
            Err(Error::NotRotationInvariant { .. })
        ));
        assert!(RsbfFunction::parse(&t, "01000000", &Budget::default()).is_err());
        let ok = RsbfFunction::parse(&t, "01101001", &Budget::default()).unwrap();
        assert_eq!(ok.values().len(), 4);
    }

    #[test]
    fn parse_length_errors() {
        let t = enumerate_orbits(4).unwrap();
        assert_eq!(
            RsbfFunction::parse(&t, "0101", &Budget::default()),
            Err(Error::LengthMismatch {
                expected: 6,
                got: 4
            })
        );
        assert!(matches!(
            RsbfFunction::from_bitstring(&t, "00x110"),
            Err(Error::Parse(_))
        ));
    }

    #[test]
    fn dimension_mismatch() {
        let (t4, _) = setup(4);
        let (_, m5) = setup(5);
        let f = RsbfFunction::constant(&t4, false);
        assert!(matches!(
            spectrum_via_matrix(&f, &m5),
            Err(Error::DimensionMismatch { .. })
        ));
        let tt = expand(&f, &t4).unwrap();
        assert!(walsh_brute(&tt, &BitVector::zero(5).unwrap()).is_err());
    }

    #[test]
    fn odd_n_never_bent() {
        let (t, m) = setup(5);
        for mask in 0u32..(1 << t.g()) {
            let values = (0..t.g()).map(|i| (mask >> i) & 1 == 1).collect();
            let f = RsbfFunction::new(&t, values).unwrap();
            assert!(!is_bent(&f, &m).unwrap());
        }
    }

    #[test]
    fn complement_negates_spectrum() {
        let (t, m) = setup(6);
        for mask in [0u32, 1, 0b1011_0011_0101, 0x3fff, 0x1234] {
            let values = (0..t.g()).map(|i| (mask >> i) & 1 == 1).collect();
            let f = RsbfFunction::new(&t, values).unwrap();
            let s = spectrum_via_matrix(&f, &m).unwrap();
            let c = spectrum_via_matrix(&f.complement(), &m).unwrap();
            assert!(s.values.iter().zip(&c.values).all(|(a, b)| *a == -b));
            assert_eq!(s.is_bent(), c.is_bent());
        }
    }

    #[test]
    fn truth_table_budget() {
        assert!(TruthTable::new(25, Vec::new()).unwrap_err().is_resource());
    }
}
