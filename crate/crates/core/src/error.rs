use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("variable count mismatch: expected {expected}, found {found}")]
    VariableCount { expected: usize, found: usize },

    #[error("multinomial parts sum to {sum}, expected {n}")]
    PartsSum { n: u64, sum: u64 },

    #[error("|m| = {size} but the closed form requires |m| = k = {k}")]
    SizeMismatch { size: u64, k: u64 },

    #[error("wt(m) = {weight} exceeds k + n = {bound}")]
    WeightTooLarge { weight: u64, bound: u64 },

    #[error("partition has a part of size {part}, larger than the {l} available variables")]
    PartTooLarge { part: u32, l: usize },

    #[error("expected an expansion in the {expected} basis, found {found}")]
    WrongBasis {
        expected: &'static str,
        found: &'static str,
    },

    #[error("expansion is not homogeneous: found degrees {first} and {second}")]
    Inhomogeneous { first: u64, second: u64 },

    #[error("exponent vector has length {found}, expected {expected}")]
    ExponentLength { expected: usize, found: usize },

    #[error("{0}")]
    Parse(String),
}
