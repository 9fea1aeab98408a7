//! JSON formats.
//!
//! - system: `{"matrix": [[a, b], ...], "c": ["p/q", ...]}`
//! - Γ-product: `{"factors": [{"vector": [a, b], "constant": "p/q", "multiplicity": m}, ...]}`
//! - polynomial: `{"terms": [["s", "t", "coeff"], ...]}` in canonical order
//!
//! Rationals are written as strings; integer literals are accepted on input.

use serde::de::Error as _;
use serde::ser::{SerializeSeq, SerializeStruct};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::exact::serde_rational::RationalRepr;
use crate::exact::{Rational, RationalMatrix};
use crate::horn::{GammaFactor, HornSystem};
use crate::puiseux::{Direction, ExponentPoint, PuiseuxPoly, Support};
use crate::solver::{Residuals, SolutionBasis, SupportEntry, SupportReport};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SystemJson {
    pub matrix: Vec<[i64; 2]>,
    #[serde(with = "crate::exact::serde_rational::vec")]
    pub c: Vec<Rational>,
}

impl SystemJson {
    pub fn from_system(sys: &HornSystem) -> Self {
        SystemJson { matrix: sys.rows().to_vec(), c: sys.params().to_vec() }
    }

    pub fn into_system(self) -> Result<HornSystem> {
        HornSystem::new(self.matrix, self.c)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GammaJson {
    pub factors: Vec<GammaFactor>,
}

/// Reads a system given as system JSON, Γ-product JSON, or any object with
/// a `"system"` field holding one of those (fixture files).
pub fn parse_system(text: &str) -> Result<HornSystem> {
    let value: serde_json::Value =
        serde_json::from_str(text).map_err(|e| Error::InvalidInput(e.to_string()))?;
    system_from_value(value)
}

fn system_from_value(value: serde_json::Value) -> Result<HornSystem> {
    let invalid = |e: serde_json::Error| Error::InvalidInput(e.to_string());
    let obj = value.as_object().ok_or_else(|| Error::InvalidInput("expected a JSON object".into()))?;
    if obj.contains_key("matrix") {
        serde_json::from_value::<SystemJson>(value).map_err(invalid)?.into_system()
    } else if obj.contains_key("factors") {
        let g: GammaJson = serde_json::from_value(value).map_err(invalid)?;
        HornSystem::from_gamma_products(&g.factors)
    } else if let Some(inner) = obj.get("system") {
        system_from_value(inner.clone())
    } else {
        Err(Error::InvalidInput("expected \"matrix\", \"factors\" or \"system\"".into()))
    }
}

pub fn system_to_json(sys: &HornSystem) -> serde_json::Value {
    serde_json::to_value(SystemJson::from_system(sys)).expect("serializable")
}

pub fn parse_poly(text: &str) -> Result<PuiseuxPoly> {
    serde_json::from_str(text).map_err(|e| Error::InvalidInput(e.to_string()))
}

impl Serialize for Direction {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        [self.ds, self.dt].serialize(ser)
    }
}

impl Serialize for ExponentPoint {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        [self.s.to_string(), self.t.to_string()].serialize(ser)
    }
}

impl Serialize for Support {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = ser.serialize_seq(Some(self.len()))?;
        for p in self.iter() {
            seq.serialize_element(p)?;
        }
        seq.end()
    }
}

struct Terms<'a>(&'a PuiseuxPoly);

impl Serialize for Terms<'_> {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = ser.serialize_seq(Some(self.0.len()))?;
        for (p, c) in self.0.terms() {
            seq.serialize_element(&[p.s.to_string(), p.t.to_string(), c.to_string()])?;
        }
        seq.end()
    }
}

impl Serialize for PuiseuxPoly {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = ser.serialize_struct("PuiseuxPoly", 1)?;
        st.serialize_field("terms", &Terms(self))?;
        st.end()
    }
}

impl<'de> Deserialize<'de> for PuiseuxPoly {
    fn deserialize<D: Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            terms: Vec<(RationalRepr, RationalRepr, RationalRepr)>,
        }
        let raw = Raw::deserialize(de)?;
        let mut out = PuiseuxPoly::zero();
        for (s, t, c) in raw.terms {
            let conv = |r: RationalRepr| r.into_rational().map_err(D::Error::custom);
            out.add_term(ExponentPoint::new(conv(s)?, conv(t)?), conv(c)?);
        }
        Ok(out)
    }
}

impl Serialize for Residuals {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = ser.serialize_struct("Residuals", 3)?;
        st.serialize_field("x", &self.x)?;
        st.serialize_field("y", &self.y)?;
        st.serialize_field("zero", &self.is_zero())?;
        st.end()
    }
}

impl Serialize for SolutionBasis {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = ser.serialize_struct("SolutionBasis", 3)?;
        st.serialize_field("size", &self.len())?;
        st.serialize_field("elements", &self.elements)?;
        st.serialize_field("certificates", &self.certificates)?;
        st.end()
    }
}

impl Serialize for SupportEntry {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = ser.serialize_struct("SupportEntry", 4)?;
        st.serialize_field("pair", &[self.pair.0, self.pair.1])?;
        st.serialize_field("status", &self.status)?;
        st.serialize_field("size", &self.support.len())?;
        st.serialize_field("support", &self.support)?;
        st.end()
    }
}

impl Serialize for SupportReport {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = ser.serialize_struct("SupportReport", 3)?;
        st.serialize_field("entries", &self.entries)?;
        st.serialize_field("union_size", &self.union.len())?;
        st.serialize_field("union", &self.union)?;
        st.end()
    }
}

impl Serialize for RationalMatrix {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        let rows: Vec<Vec<String>> =
            (0..self.rows()).map(|r| self.row(r).iter().map(|x| x.to_string()).collect()).collect();
        rows.serialize(ser)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat};

    #[test]
    fn system_round_trip() {
        let text = r#"{"matrix": [[1, 1], [-1, -1]], "c": ["-1/2", 3]}"#;
        let sys = parse_system(text).unwrap();
        assert_eq!(sys.params(), &[rat(-1, 2), int(3)]);
        let back = system_to_json(&sys);
        assert_eq!(back, serde_json::json!({"matrix": [[1, 1], [-1, -1]], "c": ["-1/2", "3"]}));
        assert_eq!(parse_system(&back.to_string()).unwrap(), sys);
    }

    #[test]
    fn gamma_and_wrapped_systems() {
        let text = r#"{"factors": [{"vector": [1, 0], "constant": "0", "multiplicity": 2},
                                   {"vector": [-1, 0], "constant": 0, "multiplicity": 2}]}"#;
        let sys = parse_system(text).unwrap();
        assert_eq!(sys.rows(), &[[1, 0], [1, 0], [-1, 0], [-1, 0]]);
        let wrapped = format!(r#"{{"name": "x", "system": {text}}}"#);
        assert_eq!(parse_system(&wrapped).unwrap(), sys);
    }

    #[test]
    fn bad_systems() {
        assert!(matches!(parse_system("[1]"), Err(Error::InvalidInput(_))));
        assert!(matches!(parse_system("{}"), Err(Error::InvalidInput(_))));
        assert!(matches!(
            parse_system(r#"{"matrix": [[1, 0]], "c": ["1/0"]}"#),
            Err(Error::InvalidInput(_)) | Err(Error::InvalidRational(_))
        ));
        assert!(matches!(parse_system(r#"{"matrix": [[1, 0]], "c": []}"#), Err(Error::InvalidSystem(_))));
    }

    #[test]
    fn polynomial_round_trip() {
        let mut p = PuiseuxPoly::from_int_terms(&[(0, 0, 1), (1, 0, -4)]);
        p.add_term(ExponentPoint::new(rat(1, 2), int(2)), rat(-3, 2));
        let v = serde_json::to_value(&p).unwrap();
        assert_eq!(
            v,
            serde_json::json!({"terms": [["0", "0", "1"], ["1/2", "2", "-3/2"], ["1", "0", "-4"]]})
        );
        assert_eq!(parse_poly(&v.to_string()).unwrap(), p);
        assert_eq!(parse_poly(r#"{"terms": [[0, 1, 2], [0, 1, -2]]}"#).unwrap(), PuiseuxPoly::zero());
    }
}
