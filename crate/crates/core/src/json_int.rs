//! Serde helpers writing [`BigInt`] values as plain JSON numbers of any width.

use num_bigint::BigInt;
use serde::{de, Deserialize, Deserializer, Serialize, Serializer};

/// A [`BigInt`] that serializes as a bare JSON number.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JsonInt(pub BigInt);

impl Serialize for JsonInt {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let number: serde_json::Number = self
            .0
            .to_string()
            .parse()
            .map_err(serde::ser::Error::custom)?;
        number.serialize(s)
    }
}

impl<'de> Deserialize<'de> for JsonInt {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let number = serde_json::Number::deserialize(d)?;
        number
            .to_string()
            .parse::<BigInt>()
            .map(JsonInt)
            .map_err(|_| de::Error::custom(format!("expected an integer, got {number}")))
    }
}

pub fn serialize<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    JsonInt(v.clone()).serialize(s)
}

pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
    JsonInt::deserialize(d).map(|j| j.0)
}

pub mod option {
    use super::*;

    pub fn serialize<S: Serializer>(v: &Option<BigInt>, s: S) -> Result<S::Ok, S::Error> {
        v.clone().map(JsonInt).serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<BigInt>, D::Error> {
        Ok(Option::<JsonInt>::deserialize(d)?.map(|j| j.0))
    }
}

pub mod vec {
    use super::*;

    pub fn serialize<S: Serializer>(v: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(v.iter().cloned().map(JsonInt))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigInt>, D::Error> {
        Ok(Vec::<JsonInt>::deserialize(d)?
            .into_iter()
            .map(|j| j.0)
            .collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn wide_integers_are_bare_numbers() {
        let big: BigInt = "-123456789012345678901234567890".parse().unwrap();
        let text = serde_json::to_string(&JsonInt(big.clone())).unwrap();
        assert_eq!(text, "-123456789012345678901234567890");
        let back: JsonInt = serde_json::from_str(&text).unwrap();
        assert_eq!(back.0, big);
        assert!(serde_json::from_str::<JsonInt>("1.5").is_err());
    }
}
