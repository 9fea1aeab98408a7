//! Bundled example systems with their expected values.

use serde::Deserialize;

use crate::exact::Rational;
use crate::horn::HornSystem;
use crate::puiseux::PuiseuxPoly;
use crate::{Error, Result};

#[derive(Clone, Debug, Default, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Expected {
    pub rank: Option<i64>,
    #[serde(default, with = "opt_rationals")]
    pub c_hat: Option<Vec<Rational>>,
    #[serde(default, with = "opt_rationals")]
    pub c_hat_sorted: Option<Vec<Rational>>,
    pub bound_raw: Option<u64>,
    pub bound_refined: Option<u64>,
    pub v: Option<Vec<u64>>,
    pub support_sizes: Option<Vec<usize>>,
    pub support_union: Option<usize>,
    pub basis_size: Option<usize>,
    pub basis_term_counts: Option<Vec<usize>>,
    pub vertices: Option<Vec<[i64; 2]>>,
    pub block_line_bound: Option<u64>,
    /// Solve box `[smin, smax, tmin, tmax]` for systems without a pairing.
    #[serde(rename = "box")]
    pub solve_box: Option<[i64; 4]>,
    /// Indices into `printed_basis` of the elements in `Cl_1`.
    pub printed_cl1: Option<Vec<usize>>,
    pub printed_bounds: Option<Vec<u64>>,
    pub sum_bound: Option<u64>,
}

mod opt_rationals {
    use serde::{Deserialize, Deserializer};

    use crate::exact::Rational;

    pub fn deserialize<'de, D: Deserializer<'de>>(de: D) -> Result<Option<Vec<Rational>>, D::Error> {
        #[derive(Deserialize)]
        struct Wrap(#[serde(with = "crate::exact::serde_rational::vec")] Vec<Rational>);
        Ok(Option::<Wrap>::deserialize(de)?.map(|w| w.0))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fixture {
    pub name: String,
    pub description: String,
    pub system: HornSystem,
    pub expected: Expected,
    pub notes: Vec<String>,
    pub printed_basis: Vec<PuiseuxPoly>,
    /// Listed solutions of the operators with the opposite sign in the `y` equation.
    pub printed_basis_y_sign_flipped: Vec<PuiseuxPoly>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawFixture {
    name: String,
    description: String,
    system: serde_json::Value,
    expected: Expected,
    #[serde(default)]
    notes: Vec<String>,
    #[serde(default)]
    printed_basis: Vec<PuiseuxPoly>,
    #[serde(default)]
    printed_basis_y_sign_flipped: Vec<PuiseuxPoly>,
}

impl Fixture {
    pub fn parse(text: &str) -> Result<Self> {
        let raw: RawFixture = serde_json::from_str(text).map_err(|e| Error::InvalidInput(e.to_string()))?;
        Ok(Fixture {
            name: raw.name,
            description: raw.description,
            system: crate::json::parse_system(&raw.system.to_string())?,
            expected: raw.expected,
            notes: raw.notes,
            printed_basis: raw.printed_basis,
            printed_basis_y_sign_flipped: raw.printed_basis_y_sign_flipped,
        })
    }
}

const BUILTIN: &[(&str, &str)] = &[
    ("hexagon", include_str!("../../../fixtures/hexagon.json")),
    ("parallelogram", include_str!("../../../fixtures/parallelogram.json")),
    ("octagon", include_str!("../../../fixtures/octagon.json")),
    ("decagon", include_str!("../../../fixtures/decagon.json")),
    ("pentagon", include_str!("../../../fixtures/pentagon.json")),
    ("triangle", include_str!("../../../fixtures/triangle.json")),
    ("trapezoid-2", include_str!("../../../fixtures/trapezoid-2.json")),
    ("trapezoid-3", include_str!("../../../fixtures/trapezoid-3.json")),
    ("trapezoid-4", include_str!("../../../fixtures/trapezoid-4.json")),
    ("trapezoid-5", include_str!("../../../fixtures/trapezoid-5.json")),
    ("trapezoid-6", include_str!("../../../fixtures/trapezoid-6.json")),
];

pub fn builtin_names() -> impl Iterator<Item = &'static str> {
    BUILTIN.iter().map(|(n, _)| *n)
}

pub fn builtin_source(name: &str) -> Option<&'static str> {
    BUILTIN.iter().find(|(n, _)| *n == name).map(|(_, s)| *s)
}

pub fn builtin(name: &str) -> Result<Fixture> {
    let text =
        builtin_source(name).ok_or_else(|| Error::InvalidInput(format!("unknown fixture {name:?}")))?;
    Fixture::parse(text)
}

pub fn all_builtin() -> Vec<Fixture> {
    builtin_names().map(|n| builtin(n).expect("bundled fixtures parse")).collect()
}

/// `c_{s,t} ↦ (-1)^t c_{s,t}`, relating solutions of operators that differ
/// by the sign of the `y` equation. Needs integral `t`.
pub fn twist_y(p: &PuiseuxPoly) -> Result<PuiseuxPoly> {
    let mut out = PuiseuxPoly::zero();
    for (q, c) in p.terms() {
        if !q.t.is_integer() {
            return Err(Error::InvalidInput(format!("exponent {} is not an integer", q.t)));
        }
        let odd = q.t.to_integer() % 2u8 != 0.into();
        out.add_term(q.clone(), if odd { -c.clone() } else { c.clone() });
    }
    Ok(out)
}
