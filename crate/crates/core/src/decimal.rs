//! Serde adapters writing big integers as decimal strings.

use std::str::FromStr;

use num_bigint::BigUint;
use serde::{de, Deserialize, Deserializer, Serializer};

pub fn serialize<S: Serializer>(value: &BigUint, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&value.to_str_radix(10))
}

pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigUint, D::Error> {
    let text = String::deserialize(d)?;
    BigUint::from_str(&text).map_err(de::Error::custom)
}

pub mod vec {
    use super::*;
    use serde::ser::SerializeSeq;

    pub fn serialize<S: Serializer>(values: &[BigUint], s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(values.len()))?;
        for v in values {
            seq.serialize_element(&v.to_str_radix(10))?;
        }
        seq.end()
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigUint>, D::Error> {
        let texts = Vec::<String>::deserialize(d)?;
        texts.iter().map(|t| BigUint::from_str(t).map_err(de::Error::custom)).collect()
    }
}

pub mod array3 {
    use super::*;

    pub fn serialize<S: Serializer>(values: &[BigUint; 3], s: S) -> Result<S::Ok, S::Error> {
        super::vec::serialize(values, s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<[BigUint; 3], D::Error> {
        let v = super::vec::deserialize(d)?;
        <[BigUint; 3]>::try_from(v).map_err(|v| de::Error::invalid_length(v.len(), &"3 values"))
    }
}
