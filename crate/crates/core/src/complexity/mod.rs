//! Upper bounds on analytic complexity.
//!
//! A bound `N` means the function lies in `Cl_N`. Every bound carries the
//! rule that produced it.

mod delta;
mod lines;

use std::cmp::Reverse;
use std::collections::BinaryHeap;
use std::fmt;

use serde::Serialize;

use crate::exact::Rational;
use crate::horn::ZonotopePairing;
use crate::{Error, Result};

pub use delta::{delta1, is_cl0, is_cl1};
pub use lines::{
    get_short, line_support_bound, poly_bound, poly_estimate, DirectionEstimate, PolyEstimate, ShortBase,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Rule {
    Alg1,
    Alg3,
    TheoremRaw,
    TheoremRefined,
    LineSupport,
    Theta,
    ThetaProduct,
    Delta1,
    Cl0,
    Manual,
}

impl Rule {
    pub fn name(self) -> &'static str {
        match self {
            Rule::Alg1 => "alg1",
            Rule::Alg3 => "alg3",
            Rule::TheoremRaw => "theorem_raw",
            Rule::TheoremRefined => "theorem_refined",
            Rule::LineSupport => "line_support",
            Rule::Theta => "theta",
            Rule::ThetaProduct => "theta_product",
            Rule::Delta1 => "delta1",
            Rule::Cl0 => "cl0",
            Rule::Manual => "manual",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct ComplexityBound {
    pub value: u64,
    pub rule: Rule,
}

impl ComplexityBound {
    pub fn new(value: u64, rule: Rule) -> Self {
        ComplexityBound { value, rule }
    }

    pub fn manual(value: u64) -> Self {
        Self::new(value, Rule::Manual)
    }
}

impl fmt::Display for ComplexityBound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cl_{} ({})", self.value, self.rule.name())
    }
}

/// Smallest `e` with `2^e ≥ m`.
pub fn ceil_log2(m: u64) -> Result<u64> {
    if m == 0 {
        return Err(Error::NonPositive);
    }
    Ok(u64::from(64 - (m - 1).leading_zeros()))
}

/// Bound for a sum of functions with the given bounds: merge the two
/// smallest into `max + 1` until one remains.
pub fn sum_bound(bounds: &[u64]) -> Result<ComplexityBound> {
    if bounds.is_empty() {
        return Err(Error::EmptyInput);
    }
    let mut heap: BinaryHeap<Reverse<u64>> = bounds.iter().map(|&b| Reverse(b)).collect();
    while heap.len() > 1 {
        let Reverse(a) = heap.pop().unwrap();
        let Reverse(b) = heap.pop().unwrap();
        heap.push(Reverse(a.max(b) + 1));
    }
    Ok(ComplexityBound::new(heap.pop().unwrap().0, Rule::Alg1))
}

/// An affine θ-operator applied to a `Cl_n` function: `2n + 1`.
pub fn theta_bound(n: u64) -> ComplexityBound {
    ComplexityBound::new(2 * n + 1, Rule::Theta)
}

/// `k` affine θ-operators applied to a `Cl_n` function: `2^k (n+1) - 1`.
pub fn theta_product_bound(n: u64, k: u32) -> Result<ComplexityBound> {
    let v =
        1u64.checked_shl(k).filter(|_| k < 64).and_then(|p| p.checked_mul(n + 1)).ok_or(Error::Overflow)?;
    Ok(ComplexityBound::new(v - 1, Rule::ThetaProduct))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EstimateVectors {
    #[serde(with = "crate::exact::serde_rational::vec")]
    pub c_hat_sorted: Vec<Rational>,
    pub v: Vec<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ZonotopeBound {
    pub raw: ComplexityBound,
    pub refined: ComplexityBound,
    pub vectors: EstimateVectors,
}

/// `3·2^{k-2} - 1`, saturating.
fn pair_term(k: u64) -> u64 {
    1u64.checked_shl((k - 2) as u32).filter(|_| k - 2 < 62).map_or(u64::MAX / 2, |p| 3 * p - 1)
}

/// Bounds for the general polynomial solution of a zonotope system with `k`
/// pairs, from the pair count and the sorted ĉ vector.
pub fn zonotope_bound(pairing: &ZonotopePairing) -> Result<ZonotopeBound> {
    let mut c = pairing.c_hat_positive_integers()?;
    let k = c.len() as u64;
    if k < 2 {
        return Err(Error::KTooSmall(k as usize));
    }
    c.sort_unstable();
    let base = pair_term(k);
    let max = *c.last().unwrap();
    let raw = (base.saturating_add(ceil_log2(k * (k - 1) / 2)?))
        .min(2 + ceil_log2(max.saturating_add(1))? + ceil_log2(k - 1)?);
    let v = (1..k)
        .map(|i| {
            let ci = c[(i - 1) as usize];
            Ok((2 + ceil_log2(ci.saturating_add(1))?).min(base.saturating_add(ceil_log2(k - i)?)))
        })
        .collect::<Result<Vec<u64>>>()?;
    let refined = sum_bound(&v)?.value;
    Ok(ZonotopeBound {
        raw: ComplexityBound::new(raw, Rule::TheoremRaw),
        refined: ComplexityBound::new(refined, Rule::TheoremRefined),
        vectors: EstimateVectors { c_hat_sorted: pairing.c_hat_sorted(), v },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::horn::HornSystem;
    use proptest::prelude::*;

    #[test]
    fn logarithms() {
        assert_eq!(ceil_log2(1), Ok(0));
        assert_eq!(ceil_log2(2), Ok(1));
        assert_eq!(ceil_log2(3), Ok(2));
        assert_eq!(ceil_log2(11), Ok(4));
        assert_eq!(ceil_log2(16), Ok(4));
        assert_eq!(ceil_log2(0), Err(Error::NonPositive));
    }

    #[test]
    fn sums() {
        let v = |b: &[u64]| sum_bound(b).unwrap().value;
        assert_eq!(v(&[3, 4, 4]), 6);
        assert_eq!(v(&[5]), 5);
        assert_eq!(v(&[1, 1, 2, 2]), 4);
        let mut octagon = vec![1; 28];
        octagon.extend([2, 2, 2]);
        assert_eq!(v(&octagon), 7);
        let mut decagon = vec![1; 14];
        decagon.extend([2; 20]);
        assert_eq!(v(&decagon), 7);
        assert_eq!(sum_bound(&[]), Err(Error::EmptyInput));
    }

    #[test]
    fn theta_formulas() {
        assert_eq!(theta_bound(0).value, 1);
        assert_eq!(theta_bound(1).value, 3);
        assert_eq!(theta_bound(2).value, 5);
        assert_eq!(theta_product_bound(4, 0).unwrap().value, 4);
        assert_eq!(theta_product_bound(1, 1).unwrap().value, 3);
        assert_eq!(theta_product_bound(2, 2).unwrap().value, 11);
    }

    fn bound(rows: &[[i64; 2]], c: &[i64]) -> ZonotopeBound {
        let sys = HornSystem::from_ints(rows, c).unwrap();
        zonotope_bound(&sys.zonotope_pairing().unwrap()).unwrap()
    }

    #[test]
    fn octagon() {
        let b = bound(
            &[[1, 2], [-1, -2], [-1, 1], [1, -1], [-3, -2], [3, 2], [2, -1], [-2, 1]],
            &[3, -5, -2, 1, -2, -1, -1, -1],
        );
        assert_eq!((b.raw.value, b.refined.value), (6, 6));
        assert_eq!(b.vectors.v, vec![3, 4, 4]);
    }

    #[test]
    fn decagon() {
        let b = bound(
            &[[-1, 0], [1, 0], [0, -1], [0, 1], [-2, 1], [2, -1], [3, 1], [-3, -1], [3, 2], [-3, -2]],
            &[-1, 0, 4, -5, 1, -4, -9, 6, -4, 0],
        );
        assert_eq!((b.raw.value, b.refined.value), (7, 6));
        assert_eq!(b.vectors.v, vec![3, 3, 4, 4]);
    }

    #[test]
    fn hexagon() {
        let b = bound(&[[1, 1], [-1, -1], [1, 0], [-1, 0], [0, 1], [0, -1]], &[-23, 22, -10, 0, -9, 0]);
        assert_eq!((b.raw.value, b.refined.value), (7, 6));
        assert_eq!(b.vectors.v, vec![3, 5]);
    }

    #[test]
    fn parallelogram_and_errors() {
        let b = bound(&[[1, 0], [0, 1], [0, -1], [-1, 0]], &[-10, -9, 1, 1]);
        assert_eq!(b.raw.value, 2);
        let sys = HornSystem::from_ints(&[[1, 0], [-1, 0]], &[-1, 0]).unwrap();
        assert_eq!(zonotope_bound(&sys.zonotope_pairing().unwrap()), Err(Error::KTooSmall(1)));
        let sys = HornSystem::from_ints(&[[1, 0], [-1, 0], [0, 1], [0, -1]], &[2, 0, 0, 0]).unwrap();
        assert_eq!(zonotope_bound(&sys.zonotope_pairing().unwrap()), Err(Error::NonPolynomialRegime));
    }

    proptest! {
        #[test]
        fn sum_bound_range(bounds in prop::collection::vec(0u64..20, 1..40), seed in any::<u64>()) {
            use rand::seq::SliceRandom;
            use rand::SeedableRng;
            let r = sum_bound(&bounds).unwrap().value;
            let max = *bounds.iter().max().unwrap();
            prop_assert!(r >= max);
            prop_assert!(r <= max + ceil_log2(bounds.len() as u64).unwrap());
            let mut shuffled = bounds.clone();
            shuffled.shuffle(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed));
            prop_assert_eq!(sum_bound(&shuffled).unwrap().value, r);
        }
    }
}
