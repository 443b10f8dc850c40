//! Exact JSON numbers for big integers.

use num_bigint::{BigInt, BigUint};
use serde::Serializer;
use serde_json::{Number, Value};

pub fn number(n: &BigInt) -> Value {
    Value::Number(n.to_string().parse::<Number>().expect("decimal integer"))
}

pub fn unsigned(n: &BigUint) -> Value {
    Value::Number(n.to_string().parse::<Number>().expect("decimal integer"))
}

pub(crate) fn serialize_biguint<S: Serializer>(n: &BigUint, s: S) -> Result<S::Ok, S::Error> {
    serde::Serialize::serialize(&unsigned(n), s)
}
