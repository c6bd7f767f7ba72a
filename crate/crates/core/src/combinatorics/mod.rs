//! Ordered r-Stirling partitions, coinversion codes and words.

mod code;
mod params;
mod partition;
mod permutation;
mod words;

pub use code::{
    enumerate_codes, enumerate_partitions, iota, is_valid_code, reverse_skip, skip_composition,
    validate_code, CoinversionCode, CodeViolation,
};
pub use params::{ordered_count, stirling_r, Parameters};
pub use partition::{max_inv, OrderedSetPartition};
pub use permutation::Permutation;
pub use words::{enumerate_words, Word};
