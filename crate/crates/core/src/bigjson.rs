//! Big integers in JSON: plain numbers when they fit in an `i64`, decimal
//! strings otherwise.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum Repr {
    Small(i64),
    Big(String),
}

pub(crate) fn ser<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    match v.to_i64() {
        Some(x) => s.serialize_i64(x),
        None => s.serialize_str(&v.to_string()),
    }
}

pub(crate) fn de<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
    match Repr::deserialize(d)? {
        Repr::Small(x) => Ok(BigInt::from(x)),
        Repr::Big(s) => s.parse().map_err(D::Error::custom),
    }
}

/// Newtype used inside containers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JsonInt(pub BigInt);

impl Serialize for JsonInt {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        ser(&self.0, s)
    }
}

impl<'de> Deserialize<'de> for JsonInt {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        de(d).map(JsonInt)
    }
}
