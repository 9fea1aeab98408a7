//! The Horn system model.
//!
//! A system is an integer row matrix `A` (rows `A_i ∈ Z²`) with a rational
//! parameter vector `c`. For `j ∈ {x, y}` it consists of the equation
//! `x_j P_j(θ) f = Q_j(θ) f`, where `P_j` multiplies the factors
//! `<A_i, s> + c_i + l` over rows with `A_ij > 0` and `0 ≤ l < A_ij`, and `Q_j`
//! does the same over rows with `A_ij < 0` and `0 ≤ l < |A_ij|`.

mod pairing;
mod polygon;
mod rank;

use serde::{Deserialize, Serialize};

use crate::exact::{int, Rational};
use crate::puiseux::{AffineForm, ExponentPoint, PuiseuxPoly};
use crate::{Error, Result};

pub use crate::puiseux::Variable;
pub use pairing::ZonotopePairing;
pub use polygon::{LatticePolygon, PolygonSide};
pub use rank::{RankBreakdown, RankCorrection};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HornSystem {
    rows: Vec<[i64; 2]>,
    params: Vec<Rational>,
}

impl HornSystem {
    pub fn new(rows: Vec<[i64; 2]>, params: Vec<Rational>) -> Result<Self> {
        if rows.is_empty() {
            return Err(Error::InvalidSystem("matrix has no rows".into()));
        }
        if rows.len() != params.len() {
            return Err(Error::InvalidSystem(format!("{} rows but {} parameters", rows.len(), params.len())));
        }
        if let Some(i) = rows.iter().position(|r| r == &[0, 0]) {
            return Err(Error::InvalidSystem(format!("row {i} is zero")));
        }
        Ok(HornSystem { rows, params })
    }

    /// Convenience constructor for integer parameters.
    pub fn from_ints(rows: &[[i64; 2]], params: &[i64]) -> Result<Self> {
        Self::new(rows.to_vec(), params.iter().map(|&c| int(c)).collect())
    }

    pub fn m(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[[i64; 2]] {
        &self.rows
    }

    pub fn params(&self) -> &[Rational] {
        &self.params
    }

    pub fn build_operator(&self, var: Variable) -> HornOperator {
        let j = var.index() - 1;
        let mut p = Vec::new();
        let mut q = Vec::new();
        for (row, c) in self.rows.iter().zip(&self.params) {
            let a = row[j];
            let target = if a > 0 { &mut p } else { &mut q };
            for l in 0..a.unsigned_abs() {
                target.push(AffineForm::new(int(row[0]), int(row[1]), c + int(l as i64)));
            }
        }
        HornOperator { var, p, q }
    }

    pub fn operators(&self) -> [HornOperator; 2] {
        [self.build_operator(Variable::X), self.build_operator(Variable::Y)]
    }

    /// Rows sum to zero.
    pub fn is_nonconfluent(&self) -> bool {
        let sum = self.rows.iter().fold([0i64, 0], |acc, r| [acc[0] + r[0], acc[1] + r[1]]);
        sum == [0, 0]
    }

    /// One row per Γ-factor occurrence of the Ore–Sato coefficient
    /// `∏ Γ(<vector, (s,t)> + constant)^multiplicity`.
    pub fn from_gamma_products(factors: &[GammaFactor]) -> Result<Self> {
        let mut rows = Vec::new();
        let mut params = Vec::new();
        for f in factors {
            if f.multiplicity == 0 {
                return Err(Error::InvalidSystem("Γ-factor with multiplicity 0".into()));
            }
            for _ in 0..f.multiplicity {
                rows.push(f.vector);
                params.push(f.constant.clone());
            }
        }
        Self::new(rows, params)
    }
}

/// `x_j P_j(θ) - Q_j(θ)` kept as lists of affine factors.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HornOperator {
    #[serde(serialize_with = "ser_var")]
    pub var: Variable,
    #[serde(serialize_with = "ser_forms")]
    pub p: Vec<AffineForm>,
    #[serde(serialize_with = "ser_forms")]
    pub q: Vec<AffineForm>,
}

fn ser_var<S: serde::Serializer>(v: &Variable, ser: S) -> Result<S::Ok, S::Error> {
    ser.serialize_u64(v.index() as u64)
}

fn ser_forms<S: serde::Serializer>(forms: &[AffineForm], ser: S) -> Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = ser.serialize_seq(Some(forms.len()))?;
    for f in forms {
        seq.serialize_element(&[f.a.to_string(), f.b.to_string(), f.gamma.to_string()])?;
    }
    seq.end()
}

impl HornOperator {
    pub fn eval_p(&self, p: &ExponentPoint) -> Rational {
        self.p.iter().fold(Rational::from_integer(1.into()), |acc, f| acc * f.eval(p))
    }

    pub fn eval_q(&self, p: &ExponentPoint) -> Rational {
        self.q.iter().fold(Rational::from_integer(1.into()), |acc, f| acc * f.eval(p))
    }

    /// `x_j P_j(θ) f - Q_j(θ) f`, computed exactly.
    pub fn apply(&self, f: &PuiseuxPoly) -> PuiseuxPoly {
        let lhs = f.apply_theta_product(&self.p).times_variable(self.var);
        let rhs = f.apply_theta_product(&self.q);
        &lhs - &rhs
    }

    /// Text in θ notation, e.g. `x*(θx + θy - 23)*(θx - 10) - (-θx - θy + 22)*(-θx)`.
    pub fn render(&self) -> String {
        let side = |forms: &[AffineForm]| -> String {
            if forms.is_empty() {
                return "1".into();
            }
            forms.iter().map(|f| format!("({})", f.render("θx", "θy"))).collect::<Vec<_>>().join("*")
        };
        format!("{}*{} - {}", self.var.name(), side(&self.p), side(&self.q))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GammaFactor {
    pub vector: [i64; 2],
    #[serde(with = "crate::exact::serde_rational")]
    pub constant: Rational,
    pub multiplicity: u32,
}

pub(crate) fn gcd_i64(a: i64, b: i64) -> i64 {
    num_integer::Integer::gcd(&a, &b)
}
