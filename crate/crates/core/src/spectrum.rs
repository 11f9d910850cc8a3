use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::json_int::JsonInt;

/// An integral spectrum: distinct eigenvalues, strictly decreasing, each with
/// a positive multiplicity.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Spectrum {
    entries: Vec<(BigInt, BigInt)>,
}

impl Spectrum {
    /// Merges `(value, multiplicity)` pairs. Zero multiplicities are dropped;
    /// a negative multiplicity anywhere is an internal error.
    pub fn from_multiset<I>(pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (BigInt, BigInt)>,
    {
        let mut merged: BTreeMap<BigInt, BigInt> = BTreeMap::new();
        for (value, mult) in pairs {
            if mult.is_negative() {
                return Err(Error::Internal(format!(
                    "negative multiplicity {mult} for eigenvalue {value}"
                )));
            }
            *merged.entry(value).or_default() += mult;
        }
        let entries = merged
            .into_iter()
            .rev()
            .filter(|(_, m)| !m.is_zero())
            .collect();
        Ok(Spectrum { entries })
    }

    pub fn from_pairs<I: IntoIterator<Item = (i64, u64)>>(pairs: I) -> Result<Self> {
        Self::from_multiset(
            pairs
                .into_iter()
                .map(|(v, m)| (BigInt::from(v), BigInt::from(m))),
        )
    }

    pub fn entries(&self) -> &[(BigInt, BigInt)] {
        &self.entries
    }

    /// Total multiplicity (vertex count).
    pub fn order(&self) -> BigInt {
        self.entries.iter().map(|(_, m)| m).sum()
    }

    pub fn distinct(&self) -> usize {
        self.entries.len()
    }

    pub fn multiplicity(&self, value: &BigInt) -> BigInt {
        self.entries
            .iter()
            .find(|(v, _)| v == value)
            .map(|(_, m)| m.clone())
            .unwrap_or_default()
    }

    pub fn contains(&self, value: &BigInt) -> bool {
        self.entries.iter().any(|(v, _)| v == value)
    }

    pub fn largest(&self) -> Option<&BigInt> {
        self.entries.first().map(|(v, _)| v)
    }

    /// `Σ λ^k · mult`, with `s_0` the vertex count.
    pub fn moment(&self, k: u32) -> BigInt {
        self.entries
            .iter()
            .map(|(v, m)| num_traits::pow(v.clone(), k as usize) * m)
            .sum()
    }

    /// `Σ |λ| · mult`.
    pub fn energy(&self) -> BigInt {
        self.entries.iter().map(|(v, m)| v.abs() * m).sum()
    }

    /// Applies `f` to every value and re-merges.
    pub fn map_values(&self, f: impl Fn(&BigInt) -> BigInt) -> Result<Self> {
        Self::from_multiset(self.entries.iter().map(|(v, m)| (f(v), m.clone())))
    }

    /// `value,mult` rows with a header line.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("value,mult\n");
        for (v, m) in &self.entries {
            out.push_str(&format!("{v},{m}\n"));
        }
        out
    }
}

impl fmt::Display for Spectrum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, (v, m)) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{v}:{m}")?;
        }
        f.write_str("}")
    }
}

#[derive(Serialize, Deserialize)]
struct SpectrumWire {
    order: JsonInt,
    entries: Vec<(JsonInt, JsonInt)>,
}

impl Serialize for Spectrum {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        SpectrumWire {
            order: JsonInt(self.order()),
            entries: self
                .entries
                .iter()
                .map(|(v, m)| (JsonInt(v.clone()), JsonInt(m.clone())))
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Spectrum {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let wire = SpectrumWire::deserialize(d)?;
        let spectrum = Spectrum::from_multiset(wire.entries.into_iter().map(|(v, m)| (v.0, m.0)))
            .map_err(D::Error::custom)?;
        if spectrum.order() != wire.order.0 {
            return Err(D::Error::custom(
                "spectrum order does not match its multiplicities",
            ));
        }
        Ok(spectrum)
    }
}
