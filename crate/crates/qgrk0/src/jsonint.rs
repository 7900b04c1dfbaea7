//! JSON encoding for arbitrary-precision integers: plain JSON numbers while
//! the value fits in `i64`/`u64`, decimal strings beyond that. Both forms are
//! accepted on input, so emit(parse(x)) == x byte for byte.

use num_bigint::BigInt;
use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;

#[derive(Clone, PartialEq, Eq, Debug, Default, PartialOrd, Ord, Hash)]
pub struct JsonInt(pub BigInt);

impl From<BigInt> for JsonInt {
    fn from(v: BigInt) -> Self {
        JsonInt(v)
    }
}

impl From<i64> for JsonInt {
    fn from(v: i64) -> Self {
        JsonInt(BigInt::from(v))
    }
}

impl Serialize for JsonInt {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        if let Ok(v) = i64::try_from(&self.0) {
            serializer.serialize_i64(v)
        } else if let Ok(v) = u64::try_from(&self.0) {
            serializer.serialize_u64(v)
        } else {
            serializer.serialize_str(&self.0.to_string())
        }
    }
}

struct JsonIntVisitor;

impl Visitor<'_> for JsonIntVisitor {
    type Value = JsonInt;

    fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
        f.write_str("an integer or a decimal string")
    }

    fn visit_i64<E: de::Error>(self, v: i64) -> Result<JsonInt, E> {
        Ok(JsonInt(BigInt::from(v)))
    }

    fn visit_u64<E: de::Error>(self, v: u64) -> Result<JsonInt, E> {
        Ok(JsonInt(BigInt::from(v)))
    }

    fn visit_str<E: de::Error>(self, v: &str) -> Result<JsonInt, E> {
        v.parse::<BigInt>()
            .map(JsonInt)
            .map_err(|_| E::custom(format!("invalid integer string {v:?}")))
    }
}

impl<'de> Deserialize<'de> for JsonInt {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        deserializer.deserialize_any(JsonIntVisitor)
    }
}

pub fn wrap_vec(values: &[BigInt]) -> Vec<JsonInt> {
    values.iter().cloned().map(JsonInt).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values_are_numbers() {
        let v = JsonInt(BigInt::from(-42));
        assert_eq!(serde_json::to_string(&v).unwrap(), "-42");
        let back: JsonInt = serde_json::from_str("-42").unwrap();
        assert_eq!(back, v);
    }

    #[test]
    fn huge_values_are_strings() {
        let big: BigInt = "123456789012345678901234567890".parse().unwrap();
        let v = JsonInt(big.clone());
        let s = serde_json::to_string(&v).unwrap();
        assert_eq!(s, "\"123456789012345678901234567890\"");
        let back: JsonInt = serde_json::from_str(&s).unwrap();
        assert_eq!(back.0, big);
    }

    #[test]
    fn u64_range_is_numeric() {
        let v = JsonInt(BigInt::from(u64::MAX));
        assert_eq!(serde_json::to_string(&v).unwrap(), format!("{}", u64::MAX));
    }
}
