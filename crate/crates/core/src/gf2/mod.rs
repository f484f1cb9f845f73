//! GF(2) linear-code algebra.

mod chain;
mod code;
mod word;

pub use chain::{build_chain, least_word_outside, ChainLink};
pub use code::{
    make_code, reed_muller, BinaryCode, CodeLiteral, Divisibility, WeightEnumerator,
    ENUMERATION_CAP,
};
pub(crate) use code::pow2;
pub use word::{BitWord, MAX_LENGTH};
