//! Scalar type used for costs and tetrad weights.

use std::fmt::{Debug, Display};
use std::hash::Hash;
use std::iter::Sum;
use std::str::FromStr;

use num_traits::{NumAssign, PrimInt};

/// Exact integer weight used for costs.
pub trait Weight:
    PrimInt + NumAssign + Sum + Hash + Default + Debug + Display + FromStr + Send + Sync + 'static
{
    /// Lossless conversion of a count (popcount, 0/1 flag) into the weight type.
    fn from_count(count: usize) -> Self {
        <Self as num_traits::NumCast>::from(count).expect("count fits the weight type")
    }
}

impl<T> Weight for T where
    T: PrimInt + NumAssign + Sum + Hash + Default + Debug + Display + FromStr + Send + Sync + 'static
{
}
