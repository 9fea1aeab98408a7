use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{int, Rational};
use crate::{Error, Result};

/// Dense univariate polynomial over Q, coefficients indexed by degree.
///
/// The coefficient vector never ends in a zero, so the zero polynomial is the
/// empty vector and `degree` is `len - 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct UniPoly {
    coeffs: Vec<Rational>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| int(c)).collect())
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// The monomial `w`.
    pub fn var() -> Self {
        Self::from_ints(&[0, 1])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn eval(&self, w: &Rational) -> Rational {
        self.coeffs.iter().rev().fold(Rational::zero(), |acc, c| acc * w + c)
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let zero = Rational::zero();
        Self::new(
            (0..n)
                .map(|i| self.coeffs.get(i).unwrap_or(&zero) + other.coeffs.get(i).unwrap_or(&zero))
                .collect(),
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&int(-1)))
    }

    pub fn scale(&self, r: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * r).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub fn pow(&self, mut k: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            k >>= 1;
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        Self::new(self.coeffs.iter().enumerate().skip(1).map(|(i, c)| c * int(i as i64)).collect())
    }

    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self)> {
        let lead = divisor.leading().ok_or(Error::DivisionByZero)?.clone();
        let dd = divisor.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Self::zero(), self.clone()));
        }
        let mut quot = vec![Rational::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let q = &rem[k + dd] / &lead;
            if !q.is_zero() {
                for (j, d) in divisor.coeffs.iter().enumerate() {
                    rem[k + j] -= &q * d;
                }
            }
            quot[k] = q;
        }
        rem.truncate(dd);
        Ok((Self::new(quot), Self::new(rem)))
    }

    /// Exact quotient; errors if `divisor` does not divide `self`.
    pub fn exact_div(&self, divisor: &Self) -> Result<Self> {
        let (q, r) = self.div_rem(divisor)?;
        if !r.is_zero() {
            return Err(Error::InvalidInput("non-exact polynomial division".into()));
        }
        Ok(q)
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            Some(lc) => self.scale(&lc.recip()),
            None => Self::zero(),
        }
    }

    /// Monic greatest common divisor (zero only when both inputs are zero).
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Splits `self = content * primitive`, where `primitive` has coprime
    /// integer coefficients and a positive leading coefficient.
    pub fn content_primitive(&self) -> (Rational, Self) {
        if self.is_zero() {
            return (Rational::zero(), Self::zero());
        }
        let den_lcm = self.coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> =
            self.coeffs.iter().map(|c| (c * Rational::from_integer(den_lcm.clone())).to_integer()).collect();
        let mut g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        if self.leading().is_some_and(|lc| lc.is_negative()) {
            g = -g;
        }
        let content = Rational::new(g.clone(), den_lcm);
        let prim = Self::new(ints.into_iter().map(|c| Rational::from_integer(c / &g)).collect());
        (content, prim)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }
}

impl fmt::Display for UniPoly {
    /// Descending-degree text in the variable `w`, e.g. `w^3 + 2*w - 1/2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (deg, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            let unit = abs.is_one();
            match (deg, unit) {
                (0, _) => write!(f, "{abs}")?,
                (1, true) => f.write_str("w")?,
                (1, false) => write!(f, "{abs}*w")?,
                (_, true) => write!(f, "w^{deg}")?,
                (_, false) => write!(f, "{abs}*w^{deg}")?,
            }
        }
        Ok(())
    }
}

/// `u = content * ∏ factor_i ^ multiplicity_i` with every factor squarefree,
/// primitive, positive-leading and pairwise coprime; factors are listed by
/// ascending multiplicity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SquarefreeDecomposition {
    pub content: Rational,
    pub factors: Vec<(UniPoly, u32)>,
}

/// Yun's algorithm over Q.
pub fn squarefree_decomposition(u: &UniPoly) -> Result<SquarefreeDecomposition> {
    if u.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut factors = Vec::new();
    if !u.is_constant() {
        let du = u.derivative();
        let a0 = u.gcd(&du);
        let mut b = u.exact_div(&a0)?;
        let c = du.exact_div(&a0)?;
        let mut d = c.sub(&b.derivative());
        let mut mult = 1u32;
        while !b.is_constant() {
            let a = b.gcd(&d);
            let next_b = b.exact_div(&a)?;
            let next_c = d.exact_div(&a)?;
            d = next_c.sub(&next_b.derivative());
            b = next_b;
            if !a.is_constant() {
                factors.push((a.content_primitive().1, mult));
            }
            mult += 1;
        }
    }
    let mut lc_product = Rational::one();
    for (f, m) in &factors {
        let lc = f.leading().expect("nonzero factor");
        lc_product *= num_traits::pow(lc.clone(), *m as usize);
    }
    let content = u.leading().expect("nonzero") / lc_product;
    Ok(SquarefreeDecomposition { content, factors })
}

/// `u = content * base ^ exponent` with `exponent` maximal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerBase {
    pub base: UniPoly,
    pub exponent: u32,
    pub content: Rational,
}

impl PowerBase {
    pub fn reconstruct(&self) -> UniPoly {
        self.base.pow(self.exponent).scale(&self.content)
    }
}

/// Largest perfect-power structure visible from the squarefree multiplicities:
/// `exponent` is their gcd and `base` the product of factors to the reduced
/// multiplicities. A nonzero constant gives `base = 1, exponent = 1`.
pub fn power_base(u: &UniPoly) -> Result<PowerBase> {
    let sqf = squarefree_decomposition(u)?;
    let exponent = sqf.factors.iter().fold(0u32, |g, (_, m)| g.gcd(m)).max(1);
    let base = sqf.factors.iter().fold(UniPoly::one(), |acc, (f, m)| acc.mul(&f.pow(m / exponent)));
    Ok(PowerBase { base, exponent, content: sqf.content })
}
