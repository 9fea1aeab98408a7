use std::collections::HashMap;

use num_traits::Zero;
use serde::Serialize;

use super::HornSystem;
use crate::exact::{to_i64, Rational};
use crate::{Error, Result};

/// Rows matched into `±Â`: pair `(i⁺, i⁻)` has `A[i⁻] = -A[i⁺]`, `α = c[i⁺]`,
/// `β = c[i⁻]` and `ĉ = -α - β`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ZonotopePairing {
    pub pairs: Vec<(usize, usize)>,
    pub hat_rows: Vec<[i64; 2]>,
    #[serde(with = "crate::exact::serde_rational::vec")]
    pub alpha: Vec<Rational>,
    #[serde(with = "crate::exact::serde_rational::vec")]
    pub beta: Vec<Rational>,
    #[serde(with = "crate::exact::serde_rational::vec")]
    pub c_hat: Vec<Rational>,
    /// Another matching of duplicate rows would pair different parameters;
    /// individual ĉ_i may then differ, their sum does not.
    pub ambiguous: bool,
}

impl ZonotopePairing {
    pub fn k(&self) -> usize {
        self.pairs.len()
    }

    /// Every ĉ_i is a positive integer: the general solution is polynomial.
    pub fn is_polynomial_regime(&self) -> bool {
        self.c_hat.iter().all(|c| c.is_integer() && c > &Rational::zero())
    }

    /// ĉ as positive integers, or `NonPolynomialRegime`.
    pub fn c_hat_positive_integers(&self) -> Result<Vec<u64>> {
        self.c_hat
            .iter()
            .map(|c| match to_i64(c) {
                Some(v) if v > 0 => Ok(v as u64),
                _ if c.is_integer() && c > &Rational::zero() => Err(Error::Overflow),
                _ => Err(Error::NonPolynomialRegime),
            })
            .collect()
    }

    pub fn c_hat_sorted(&self) -> Vec<Rational> {
        let mut v = self.c_hat.clone();
        v.sort();
        v
    }
}

impl HornSystem {
    /// Greedy matching by ascending row index: each unmatched row becomes an
    /// `Â` row and takes the lowest-indexed unmatched negated row.
    pub fn zonotope_pairing(&self) -> Result<ZonotopePairing> {
        let rows = self.rows();
        let params = self.params();
        let mut used = vec![false; rows.len()];
        let mut out = ZonotopePairing {
            pairs: Vec::new(),
            hat_rows: Vec::new(),
            alpha: Vec::new(),
            beta: Vec::new(),
            c_hat: Vec::new(),
            ambiguous: false,
        };
        for i in 0..rows.len() {
            if used[i] {
                continue;
            }
            used[i] = true;
            let neg = [-rows[i][0], -rows[i][1]];
            let j = (0..rows.len()).find(|&j| !used[j] && rows[j] == neg).ok_or(Error::NotZonotope)?;
            used[j] = true;
            out.pairs.push((i, j));
            out.hat_rows.push(rows[i]);
            out.alpha.push(params[i].clone());
            out.beta.push(params[j].clone());
            out.c_hat.push(-&params[i] - &params[j]);
        }
        out.ambiguous = matching_is_ambiguous(self);
        Ok(out)
    }
}

fn matching_is_ambiguous(sys: &HornSystem) -> bool {
    let mut groups: HashMap<[i64; 2], Vec<&Rational>> = HashMap::new();
    for (r, c) in sys.rows().iter().zip(sys.params()) {
        groups.entry(*r).or_default().push(c);
    }
    let varied = |v: &[&Rational]| v.iter().any(|c| *c != v[0]);
    groups.iter().any(|(r, cs)| {
        let neg = [-r[0], -r[1]];
        cs.len() >= 2 && varied(cs) && groups.get(&neg).is_some_and(|ns| ns.len() >= 2 && varied(ns))
    })
}
