use std::fmt;
use std::str::FromStr;

use crate::boolean::Var;
use crate::error::{Error, Result};

/// Boolean tuple `B = (b_1, ..., b_n)`; `b_i` is the membership bit of the
/// i-th element.
///
/// The integer encoding reads the tuple as a binary number with `b_1` as the
/// most significant bit, so `0101` is 5. Ordering of equal-length
/// assignments agrees with that encoding.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Assignment {
    bits: Vec<bool>,
}

impl Assignment {
    pub fn new(bits: Vec<bool>) -> Self {
        Assignment { bits }
    }

    pub fn zeros(n: usize) -> Self {
        Assignment { bits: vec![false; n] }
    }

    /// Decodes `index` into an `n`-bit tuple. Requires `n <= 64`.
    pub fn from_index(index: u64, n: usize) -> Self {
        assert!(n <= 64, "integer encoding supports at most 64 variables");
        Assignment { bits: (1..=n).map(|i| (index >> (n - i)) & 1 == 1).collect() }
    }

    /// Integer encoding, `None` above 64 bits.
    pub fn to_index(&self) -> Option<u64> {
        if self.bits.len() > 64 {
            return None;
        }
        Some(self.bits.iter().fold(0u64, |acc, &b| (acc << 1) | b as u64))
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    pub fn value(&self, var: Var) -> Result<bool> {
        self.bits
            .get(var.index() - 1)
            .copied()
            .ok_or(Error::VarOutOfRange { var: var.index(), arity: self.bits.len() })
    }

    /// Bit of `x_i`, 1-based. Panics when out of range.
    pub fn get(&self, index: usize) -> bool {
        self.bits[index - 1]
    }

    pub fn set(&mut self, index: usize, value: bool) {
        self.bits[index - 1] = value;
    }

    pub fn count_ones(&self) -> usize {
        self.bits.iter().filter(|&&b| b).count()
    }

    /// 1-based indices of the set bits.
    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits.iter().enumerate().filter(|(_, &b)| b).map(|(i, _)| i + 1)
    }

    pub(crate) fn check_arity(&self, arity: usize) -> Result<()> {
        if self.bits.len() != arity {
            return Err(Error::ArityMismatch { expected: arity, found: self.bits.len() });
        }
        Ok(())
    }
}

impl FromIterator<bool> for Assignment {
    fn from_iter<T: IntoIterator<Item = bool>>(iter: T) -> Self {
        Assignment { bits: iter.into_iter().collect() }
    }
}

impl fmt::Display for Assignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.bits {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl FromStr for Assignment {
    type Err = Error;

    /// Parses a bit string such as `01100`.
    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                other => Err(Error::domain(format!("invalid bit {other:?} in assignment {s:?}"))),
            })
            .collect::<Result<Vec<_>>>()
            .map(Assignment::new)
    }
}
