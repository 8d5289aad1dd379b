use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Largest supported dimension; a vector always fits one `u32` word.
pub const MAX_DIMENSION: u32 = 32;

/// An element `(x_1, ..., x_n)` of `F_2^n`.
///
/// `x_1` is the most significant bit of the integer encoding, so the
/// lexicographic order on tuples coincides with the numeric order on
/// encodings.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitVector {
    n: u32,
    bits: u32,
}

pub(crate) fn check_dimension(n: u32) -> Result<()> {
    if (1..=MAX_DIMENSION).contains(&n) {
        Ok(())
    } else {
        Err(Error::DimensionOutOfRange(n))
    }
}

#[inline]
pub(crate) fn mask(n: u32) -> u32 {
    if n >= 32 {
        u32::MAX
    } else {
        (1u32 << n) - 1
    }
}

/// Cyclic left shift of the low `n` bits of `word` by `k < n` places.
#[inline]
pub(crate) fn rotate_word(word: u32, n: u32, k: u32) -> u32 {
    if k == 0 {
        return word;
    }
    let w = u64::from(word);
    (((w << k) | (w >> (n - k))) & u64::from(mask(n))) as u32
}

#[inline]
pub(crate) fn parity(word: u32) -> bool {
    word.count_ones() & 1 == 1
}

impl BitVector {
    /// Wraps an integer encoding. Fails if `n` is out of range or `bits` has
    /// ones above position `n`.
    pub fn new(n: u32, bits: u32) -> Result<Self> {
        check_dimension(n)?;
        if bits & !mask(n) != 0 {
            return Err(Error::Parse(format!(
                "encoding {bits} does not fit in {n} bits"
            )));
        }
        Ok(BitVector { n, bits })
    }

    pub(crate) fn from_word(n: u32, bits: u32) -> Self {
        debug_assert!(bits & !mask(n) == 0);
        BitVector { n, bits }
    }

    pub fn zero(n: u32) -> Result<Self> {
        BitVector::new(n, 0)
    }

    pub fn ones(n: u32) -> Result<Self> {
        check_dimension(n)?;
        Ok(BitVector { n, bits: mask(n) })
    }

    /// Builds a vector from its components `x_1, ..., x_n`.
    pub fn from_components(components: &[bool]) -> Result<Self> {
        let n =
            u32::try_from(components.len()).map_err(|_| Error::DimensionOutOfRange(u32::MAX))?;
        check_dimension(n)?;
        let bits = components
            .iter()
            .fold(0u32, |acc, &b| (acc << 1) | u32::from(b));
        Ok(BitVector { n, bits })
    }

    /// All `2^n` vectors in ascending encoding order.
    pub fn all(n: u32) -> Result<impl Iterator<Item = BitVector>> {
        check_dimension(n)?;
        Ok((0..=u64::from(mask(n))).map(move |b| BitVector { n, bits: b as u32 }))
    }

    pub fn dimension(&self) -> u32 {
        self.n
    }

    /// The integer encoding, with `x_1` as the most significant bit.
    pub fn bits(&self) -> u32 {
        self.bits
    }

    /// Component `x_i` for `1 <= i <= n`.
    pub fn component(&self, i: u32) -> bool {
        assert!(
            i >= 1 && i <= self.n,
            "component index {i} out of 1..={}",
            self.n
        );
        (self.bits >> (self.n - i)) & 1 == 1
    }

    pub fn components(&self) -> Vec<bool> {
        (1..=self.n).map(|i| self.component(i)).collect()
    }

    /// `rho^k(x)`; `rotate(x, 1) = (x_2, ..., x_n, x_1)`. `k` is reduced mod `n`.
    pub fn rotate(&self, k: usize) -> BitVector {
        let k = (k % self.n as usize) as u32;
        BitVector {
            n: self.n,
            bits: rotate_word(self.bits, self.n, k),
        }
    }

    /// Scalar product `sum x_i y_i` over `F_2`, as 0 or 1.
    pub fn dot(&self, other: &BitVector) -> Result<u8> {
        self.same_dimension(other)?;
        Ok(u8::from(parity(self.bits & other.bits)))
    }

    pub fn xor(&self, other: &BitVector) -> Result<BitVector> {
        self.same_dimension(other)?;
        Ok(BitVector {
            n: self.n,
            bits: self.bits ^ other.bits,
        })
    }

    /// Hamming weight.
    pub fn weight(&self) -> u32 {
        self.bits.count_ones()
    }

    /// Hamming distance.
    pub fn distance(&self, other: &BitVector) -> Result<u32> {
        Ok(self.xor(other)?.weight())
    }

    fn same_dimension(&self, other: &BitVector) -> Result<()> {
        if self.n == other.n {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                left: self.n,
                right: other.n,
            })
        }
    }
}

impl fmt::Display for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:0width$b}", self.bits, width = self.n as usize)
    }
}

impl fmt::Debug for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitVector({self})")
    }
}

impl FromStr for BitVector {
    type Err = Error;

    /// Parses `n` characters `'0'`/`'1'`, leftmost character is `x_1`.
    fn from_str(s: &str) -> Result<Self> {
        let components = parse_bits(s)?;
        BitVector::from_components(&components)
    }
}

/// Parses a string of `'0'`/`'1'` characters. Surrounding whitespace is ignored.
pub(crate) fn parse_bits(s: &str) -> Result<Vec<bool>> {
    let s = s.trim();
    if s.is_empty() {
        return Err(Error::Parse("empty bit string".into()));
    }
    s.chars()
        .enumerate()
        .map(|(i, c)| match c {
            '0' => Ok(false),
            '1' => Ok(true),
            other => Err(Error::Parse(format!(
                "unexpected character {other:?} at position {i}"
            ))),
        })
        .collect()
}

pub(crate) fn format_bits(bits: &[bool]) -> String {
    bits.iter().map(|&b| if b { '1' } else { '0' }).collect()
}
