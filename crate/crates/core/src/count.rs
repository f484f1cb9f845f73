//! Serialization of exact counts: a JSON integer when it fits in `u64`,
//! otherwise a decimal string.

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use serde::Serializer;

pub fn serialize<S: Serializer>(x: &BigUint, s: S) -> Result<S::Ok, S::Error> {
    match x.to_u64() {
        Some(v) => s.serialize_u64(v),
        None => s.collect_str(x),
    }
}
