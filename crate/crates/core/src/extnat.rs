use std::fmt;

use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// A nonnegative integer or infinity. Serializes as a number or the string `"inf"`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ExtNat {
    Finite(u64),
    Infinite,
}

impl ExtNat {
    pub fn finite(self) -> Option<u64> {
        match self {
            ExtNat::Finite(n) => Some(n),
            ExtNat::Infinite => None,
        }
    }

    pub fn is_infinite(self) -> bool {
        self == ExtNat::Infinite
    }
}

impl From<u64> for ExtNat {
    fn from(n: u64) -> Self {
        ExtNat::Finite(n)
    }
}

impl From<Option<usize>> for ExtNat {
    fn from(n: Option<usize>) -> Self {
        n.map_or(ExtNat::Infinite, |n| ExtNat::Finite(n as u64))
    }
}

impl fmt::Display for ExtNat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtNat::Finite(n) => write!(f, "{n}"),
            ExtNat::Infinite => f.write_str("inf"),
        }
    }
}

impl Serialize for ExtNat {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            ExtNat::Finite(n) => s.serialize_u64(*n),
            ExtNat::Infinite => s.serialize_str("inf"),
        }
    }
}

struct ExtNatVisitor;

impl Visitor<'_> for ExtNatVisitor {
    type Value = ExtNat;

    fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
        f.write_str("a nonnegative integer or \"inf\"")
    }

    fn visit_u64<E: de::Error>(self, v: u64) -> Result<ExtNat, E> {
        Ok(ExtNat::Finite(v))
    }

    fn visit_i64<E: de::Error>(self, v: i64) -> Result<ExtNat, E> {
        u64::try_from(v).map(ExtNat::Finite).map_err(|_| E::custom("negative value"))
    }

    fn visit_str<E: de::Error>(self, v: &str) -> Result<ExtNat, E> {
        if v == "inf" {
            Ok(ExtNat::Infinite)
        } else {
            Err(E::invalid_value(de::Unexpected::Str(v), &self))
        }
    }
}

impl<'de> Deserialize<'de> for ExtNat {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        d.deserialize_any(ExtNatVisitor)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_round_trip() {
        assert_eq!(serde_json::to_string(&ExtNat::Infinite).unwrap(), "\"inf\"");
        assert_eq!(serde_json::to_string(&ExtNat::Finite(4)).unwrap(), "4");
        for v in [ExtNat::Infinite, ExtNat::Finite(0), ExtNat::Finite(17)] {
            let s = serde_json::to_string(&v).unwrap();
            assert_eq!(serde_json::from_str::<ExtNat>(&s).unwrap(), v);
        }
        assert!(serde_json::from_str::<ExtNat>("\"infinity\"").is_err());
    }

    #[test]
    fn ordering() {
        assert!(ExtNat::Finite(1000) < ExtNat::Infinite);
        assert_eq!(ExtNat::from(None), ExtNat::Infinite);
        assert_eq!(ExtNat::from(Some(3)).to_string(), "3");
    }
}
