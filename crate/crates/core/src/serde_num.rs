//! Serde adapters for exact numbers: integers are written as JSON numbers when
//! they fit in 64 bits and as decimal strings otherwise; rationals are always
//! strings of the form `"num/den"` (or `"num"` for integral values).

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde::de::{self, Visitor};
use serde::{Deserializer, Serializer};

pub(crate) mod bigint {
    use super::*;

    pub(crate) fn serialize<S: Serializer>(value: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        match value.to_i64() {
            Some(v) => s.serialize_i64(v),
            None => s.serialize_str(&value.to_string()),
        }
    }

    struct BigIntVisitor;

    impl Visitor<'_> for BigIntVisitor {
        type Value = BigInt;

        fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            f.write_str("an integer or a decimal string")
        }

        fn visit_i64<E: de::Error>(self, v: i64) -> Result<BigInt, E> {
            Ok(v.into())
        }

        fn visit_u64<E: de::Error>(self, v: u64) -> Result<BigInt, E> {
            Ok(v.into())
        }

        fn visit_str<E: de::Error>(self, v: &str) -> Result<BigInt, E> {
            BigInt::from_str(v).map_err(E::custom)
        }
    }

    pub(crate) fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        d.deserialize_any(BigIntVisitor)
    }
}

pub(crate) mod bigint_vec {
    use serde::{Deserialize, Serialize};

    use super::*;

    #[derive(Serialize, Deserialize)]
    struct Wrap(#[serde(with = "super::bigint")] BigInt);

    pub(crate) fn serialize<S: Serializer>(values: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(values.iter().map(|v| Wrap(v.clone())))
    }

    pub(crate) fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigInt>, D::Error> {
        Ok(Vec::<Wrap>::deserialize(d)?.into_iter().map(|w| w.0).collect())
    }
}

pub(crate) mod rational_vec {
    use serde::Deserialize;

    use super::*;

    pub(crate) fn serialize<S: Serializer>(values: &[BigRational], s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(values.iter().map(|v| v.to_string()))
    }

    pub(crate) fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigRational>, D::Error> {
        Vec::<String>::deserialize(d)?
            .iter()
            .map(|s| crate::hkg::parse_rational(s).map_err(de::Error::custom))
            .collect()
    }
}
