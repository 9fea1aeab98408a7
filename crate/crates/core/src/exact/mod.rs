//! Exact scalars, univariate polynomials and linear algebra over Q.

mod matrix;
mod rational;
mod unipoly;

pub use matrix::RationalMatrix;
pub use rational::{ceil_div, floor, int, parse_rational, rat, to_fixed, to_i64, Rational};
pub use unipoly::{power_base, squarefree_decomposition, PowerBase, SquarefreeDecomposition, UniPoly};

/// Serde adapters that write rationals as `"p/q"` strings.
pub mod serde_rational {
    use super::{parse_rational, Rational};
    use serde::{de::Error as _, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(value: &Rational, ser: S) -> Result<S::Ok, S::Error> {
        ser.serialize_str(&value.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(de: D) -> Result<Rational, D::Error> {
        let raw = RationalRepr::deserialize(de)?;
        raw.into_rational().map_err(D::Error::custom)
    }

    /// Rationals are canonically strings, but integer literals are accepted on input.
    #[derive(Deserialize)]
    #[serde(untagged)]
    pub(crate) enum RationalRepr {
        Text(String),
        Int(i64),
    }

    impl RationalRepr {
        pub(crate) fn into_rational(self) -> crate::Result<Rational> {
            match self {
                RationalRepr::Text(s) => parse_rational(&s),
                RationalRepr::Int(n) => Ok(super::int(n)),
            }
        }
    }

    pub mod vec {
        use super::{Rational, RationalRepr};
        use serde::{de::Error as _, ser::SerializeSeq, Deserialize, Deserializer, Serializer};

        pub fn serialize<S: Serializer>(values: &[Rational], ser: S) -> Result<S::Ok, S::Error> {
            let mut seq = ser.serialize_seq(Some(values.len()))?;
            for v in values {
                seq.serialize_element(&v.to_string())?;
            }
            seq.end()
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(de: D) -> Result<Vec<Rational>, D::Error> {
            Vec::<RationalRepr>::deserialize(de)?
                .into_iter()
                .map(|r| r.into_rational().map_err(D::Error::custom))
                .collect()
        }
    }
}
