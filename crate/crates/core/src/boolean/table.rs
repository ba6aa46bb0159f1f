use std::fmt;

use crate::boolean::{Assignment, ENUMERATION_CAP};
use crate::error::{Error, Result};

/// Value of a function at each of the `2^n` assignments, indexed by the
/// integer encoding (x_1 most significant).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TruthTable {
    n: usize,
    values: Vec<bool>,
}

impl TruthTable {
    pub fn new(n: usize, values: Vec<bool>) -> Result<Self> {
        check_cap(n)?;
        if values.len() != 1usize << n {
            return Err(Error::domain(format!(
                "truth table over {n} variables needs {} rows, got {}",
                1usize << n,
                values.len()
            )));
        }
        Ok(TruthTable { n, values })
    }

    /// Table whose rows are true exactly at the listed assignments.
    pub fn from_ones<'a>(n: usize, ones: impl IntoIterator<Item = &'a Assignment>) -> Result<Self> {
        check_cap(n)?;
        let mut values = vec![false; 1 << n];
        for a in ones {
            a.check_arity(n)?;
            values[a.to_index().expect("capped arity") as usize] = true;
        }
        Ok(TruthTable { n, values })
    }

    pub fn from_fn(n: usize, f: impl Fn(u64) -> bool) -> Result<Self> {
        check_cap(n)?;
        Ok(TruthTable { n, values: (0..1u64 << n).map(f).collect() })
    }

    pub fn arity(&self) -> usize {
        self.n
    }

    pub fn values(&self) -> &[bool] {
        &self.values
    }

    #[inline]
    pub fn get(&self, index: u64) -> bool {
        self.values[index as usize]
    }

    pub fn count_ones(&self) -> u64 {
        self.values.iter().filter(|&&v| v).count() as u64
    }

    /// Rows as hex digits, four rows per digit, first row in the high bit of
    /// the first digit. Tables shorter than four rows are zero padded.
    pub fn to_hex(&self) -> String {
        self.values
            .chunks(4)
            .map(|chunk| {
                let nibble = (0..4).fold(0u32, |acc, i| (acc << 1) | chunk.get(i).copied().unwrap_or(false) as u32);
                char::from_digit(nibble, 16).expect("nibble")
            })
            .collect()
    }

    pub fn from_hex(n: usize, hex: &str) -> Result<Self> {
        check_cap(n)?;
        let rows = 1usize << n;
        let digits = rows.div_ceil(4);
        if hex.len() != digits {
            return Err(Error::domain(format!(
                "hex table over {n} variables needs {digits} digits, got {}",
                hex.len()
            )));
        }
        let mut values = Vec::with_capacity(digits * 4);
        for c in hex.chars() {
            let nibble = c.to_digit(16).ok_or_else(|| Error::domain(format!("invalid hex digit {c:?}")))?;
            values.extend((0..4).rev().map(|i| (nibble >> i) & 1 == 1));
        }
        if values[rows..].iter().any(|&v| v) {
            return Err(Error::domain("padding bits of hex table must be zero"));
        }
        values.truncate(rows);
        Ok(TruthTable { n, values })
    }
}

impl fmt::Display for TruthTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &v in &self.values {
            f.write_str(if v { "1" } else { "0" })?;
        }
        Ok(())
    }
}

pub(crate) fn check_cap(n: usize) -> Result<()> {
    if n > ENUMERATION_CAP {
        return Err(Error::EnumerationCap { n, cap: ENUMERATION_CAP });
    }
    Ok(())
}
