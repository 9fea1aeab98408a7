//! Sparse bivariate Puiseux polynomials and the θ-operator calculus.
//!
//! A [`PuiseuxPoly`] is a finite map from rational exponent pairs `(s, t)` to
//! nonzero rational coefficients, i.e. `Σ c_{s,t} x^s y^t`. Monomials are
//! eigenfunctions of the Euler operators `θ_x = x ∂/∂x`, `θ_y = y ∂/∂y`, so an
//! affine form `a θ_x + b θ_y + γ` acts termwise by `a s + b t + γ`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::exact::{int, Rational};
use crate::{Error, Result};

/// Exponent pair of `x^s y^t`, ordered lexicographically by `s` then `t`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExponentPoint {
    pub s: Rational,
    pub t: Rational,
}

impl ExponentPoint {
    pub fn new(s: Rational, t: Rational) -> Self {
        ExponentPoint { s, t }
    }

    pub fn ints(s: i64, t: i64) -> Self {
        ExponentPoint::new(int(s), int(t))
    }

    pub fn origin() -> Self {
        Self::ints(0, 0)
    }

    pub fn is_origin(&self) -> bool {
        self.s.is_zero() && self.t.is_zero()
    }

    pub fn shifted(&self, ds: &Rational, dt: &Rational) -> Self {
        ExponentPoint::new(&self.s + ds, &self.t + dt)
    }

    pub fn plus(&self, other: &ExponentPoint) -> Self {
        self.shifted(&other.s, &other.t)
    }

    pub fn step(&self, var: Variable) -> Self {
        match var {
            Variable::X => self.shifted(&Rational::one(), &Rational::zero()),
            Variable::Y => self.shifted(&Rational::zero(), &Rational::one()),
        }
    }

    pub fn shifted_back(&self, var: Variable) -> Self {
        match var {
            Variable::X => self.shifted(&-Rational::one(), &Rational::zero()),
            Variable::Y => self.shifted(&Rational::zero(), &-Rational::one()),
        }
    }

    pub fn coord(&self, var: Variable) -> &Rational {
        match var {
            Variable::X => &self.s,
            Variable::Y => &self.t,
        }
    }
}

impl fmt::Display for ExponentPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.s, self.t)
    }
}

/// One of the two variables `x` (index 1) and `y` (index 2).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Variable {
    X,
    Y,
}

impl Variable {
    pub const BOTH: [Variable; 2] = [Variable::X, Variable::Y];

    /// 1-based index as used in `x_j P_j(θ) f = Q_j(θ) f`.
    pub fn index(self) -> usize {
        match self {
            Variable::X => 1,
            Variable::Y => 2,
        }
    }

    pub fn from_index(j: usize) -> Option<Self> {
        match j {
            1 => Some(Variable::X),
            2 => Some(Variable::Y),
            _ => None,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Variable::X => "x",
            Variable::Y => "y",
        }
    }
}

/// `a θ_x + b θ_y + γ`, which is also the affine function `a s + b t + γ`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AffineForm {
    pub a: Rational,
    pub b: Rational,
    pub gamma: Rational,
}

impl AffineForm {
    pub fn new(a: Rational, b: Rational, gamma: Rational) -> Self {
        AffineForm { a, b, gamma }
    }

    pub fn ints(a: i64, b: i64, gamma: i64) -> Self {
        AffineForm::new(int(a), int(b), int(gamma))
    }

    pub fn eval(&self, p: &ExponentPoint) -> Rational {
        &self.a * &p.s + &self.b * &p.t + &self.gamma
    }

    /// Text using the given symbols for the two coordinates, e.g. `s + t - 23`.
    pub fn render(&self, s_name: &str, t_name: &str) -> String {
        let mut out = String::new();
        let mut push = |coef: &Rational, sym: &str| {
            if coef.is_zero() {
                return;
            }
            let neg = coef.is_negative();
            let abs = coef.abs();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            match (abs.is_one(), sym.is_empty()) {
                (_, true) => out.push_str(&abs.to_string()),
                (true, false) => out.push_str(sym),
                (false, false) => out.push_str(&format!("{abs}*{sym}")),
            }
        };
        push(&self.a, s_name);
        push(&self.b, t_name);
        push(&self.gamma, "");
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

impl fmt::Display for AffineForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("s", "t"))
    }
}

/// Primitive integer direction, normalised so the first nonzero component is positive.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Direction {
    pub ds: i64,
    pub dt: i64,
}

impl Direction {
    pub const X: Direction = Direction { ds: 1, dt: 0 };
    pub const Y: Direction = Direction { ds: 0, dt: 1 };

    pub fn new(ds: i64, dt: i64) -> Result<Self> {
        if ds == 0 && dt == 0 {
            return Err(Error::ZeroDirection);
        }
        let g = ds.gcd(&dt);
        let (mut a, mut b) = (ds / g, dt / g);
        if a < 0 || (a == 0 && b < 0) {
            a = -a;
            b = -b;
        }
        Ok(Direction { ds: a, dt: b })
    }

    pub fn is_axis(&self) -> bool {
        self.ds == 0 || self.dt == 0
    }

    /// Normalised primitive direction of an arbitrary-size integer vector, if
    /// the primitive vector fits in `i64`.
    pub fn from_big(ds: &BigInt, dt: &BigInt) -> Option<Self> {
        if ds.is_zero() && dt.is_zero() {
            return None;
        }
        let g = ds.gcd(dt);
        Direction::new((ds / &g).to_i64()?, (dt / &g).to_i64()?).ok()
    }

    /// Position of an integer point across the family of parallel lines.
    pub(crate) fn offset(&self, p: &(BigInt, BigInt)) -> BigInt {
        &p.0 * self.dt - &p.1 * self.ds
    }

    /// Position of an integer point along its line.
    pub(crate) fn along(&self, p: &(BigInt, BigInt)) -> BigInt {
        &p.0 * self.ds + &p.1 * self.dt
    }
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.ds, self.dt)
    }
}

/// A finite set of exponent points in canonical order.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Support {
    points: BTreeSet<ExponentPoint>,
}

impl Support {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, p: ExponentPoint) -> bool {
        self.points.insert(p)
    }

    pub fn contains(&self, p: &ExponentPoint) -> bool {
        self.points.contains(p)
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &ExponentPoint> {
        self.points.iter()
    }

    pub fn union(&self, other: &Support) -> Support {
        self.points.union(&other.points).cloned().collect()
    }

    pub fn is_subset(&self, other: &Support) -> bool {
        self.points.is_subset(&other.points)
    }

    /// Least common multiple of all exponent denominators (1 when empty).
    pub fn denominator_lcm(&self) -> BigInt {
        self.points.iter().fold(BigInt::one(), |acc, p| acc.lcm(p.s.denom()).lcm(p.t.denom()))
    }

    /// `(s_min, s_max, t_min, t_max)`, or `None` for the empty support.
    pub fn bounds(&self) -> Option<(Rational, Rational, Rational, Rational)> {
        let first = self.points.iter().next()?;
        let mut b = (first.s.clone(), first.s.clone(), first.t.clone(), first.t.clone());
        for p in &self.points {
            if p.s < b.0 {
                b.0 = p.s.clone();
            }
            if p.s > b.1 {
                b.1 = p.s.clone();
            }
            if p.t < b.2 {
                b.2 = p.t.clone();
            }
            if p.t > b.3 {
                b.3 = p.t.clone();
            }
        }
        Some(b)
    }

    /// All points of the support scaled by `lcm` onto the integer lattice.
    pub fn scaled(&self, lcm: &BigInt) -> Vec<(BigInt, BigInt)> {
        self.points.iter().map(|p| scale_point(p, lcm)).collect()
    }
}

impl FromIterator<ExponentPoint> for Support {
    fn from_iter<I: IntoIterator<Item = ExponentPoint>>(iter: I) -> Self {
        Support { points: iter.into_iter().collect() }
    }
}

impl<'a> IntoIterator for &'a Support {
    type Item = &'a ExponentPoint;
    type IntoIter = std::collections::btree_set::Iter<'a, ExponentPoint>;

    fn into_iter(self) -> Self::IntoIter {
        self.points.iter()
    }
}

pub(crate) fn scale_point(p: &ExponentPoint, lcm: &BigInt) -> (BigInt, BigInt) {
    let l = Rational::from_integer(lcm.clone());
    ((&p.s * &l).to_integer(), (&p.t * &l).to_integer())
}

/// Splits `supp` into maximal subsets lying on common lines parallel to
/// `direction`, ordered by line offset (`s·dt - t·ds` after clearing
/// denominators), points in each subset in canonical order.
pub fn lines_partition(supp: &Support, direction: Direction) -> Vec<Support> {
    let lcm = supp.denominator_lcm();
    let mut lines: BTreeMap<BigInt, Support> = BTreeMap::new();
    for p in supp {
        let key = direction.offset(&scale_point(p, &lcm));
        lines.entry(key).or_default().insert(p.clone());
    }
    lines.into_values().collect()
}

struct IntegerForm {
    den: BigInt,
    terms: Vec<((i64, i64), BigInt)>,
}

/// Sparse polynomial `Σ c_{s,t} x^s y^t` with rational exponents; zero
/// coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct PuiseuxPoly {
    terms: BTreeMap<ExponentPoint, Rational>,
}

impl PuiseuxPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(ExponentPoint::origin(), c)
    }

    pub fn monomial(p: ExponentPoint, c: Rational) -> Self {
        let mut out = Self::zero();
        out.add_term(p, c);
        out
    }

    /// `x^s y^t` with integer exponents and coefficient 1.
    pub fn xy(s: i64, t: i64) -> Self {
        Self::monomial(ExponentPoint::ints(s, t), Rational::one())
    }

    /// Builds a polynomial from integer-exponent terms `(s, t, coefficient)`.
    pub fn from_int_terms(terms: &[(i64, i64, i64)]) -> Self {
        terms.iter().map(|&(s, t, c)| (ExponentPoint::ints(s, t), int(c))).collect()
    }

    /// Adds `c x^p` in place, dropping the term if it cancels.
    pub fn add_term(&mut self, p: ExponentPoint, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(p) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ExponentPoint, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, p: &ExponentPoint) -> Rational {
        self.terms.get(p).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn support(&self) -> Support {
        self.terms.keys().cloned().collect()
    }

    /// Terms whose exponents lie in `points`.
    pub fn restrict(&self, points: &Support) -> PuiseuxPoly {
        points.iter().filter_map(|p| self.terms.get(p).map(|c| (p.clone(), c.clone()))).collect()
    }

    pub fn scale(&self, r: &Rational) -> PuiseuxPoly {
        if r.is_zero() {
            return Self::zero();
        }
        PuiseuxPoly { terms: self.terms.iter().map(|(p, c)| (p.clone(), c * r)).collect() }
    }

    /// Multiplication by the monomial `x^shift`.
    pub fn shift(&self, shift: &ExponentPoint) -> PuiseuxPoly {
        PuiseuxPoly { terms: self.terms.iter().map(|(p, c)| (p.plus(shift), c.clone())).collect() }
    }

    pub fn add(&self, other: &PuiseuxPoly) -> PuiseuxPoly {
        let mut out = self.clone();
        for (p, c) in &other.terms {
            out.add_term(p.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &PuiseuxPoly) -> PuiseuxPoly {
        let mut out = self.clone();
        for (p, c) in &other.terms {
            out.add_term(p.clone(), -c);
        }
        out
    }

    pub fn mul(&self, other: &PuiseuxPoly) -> PuiseuxPoly {
        if let (Some(a), Some(b)) = (self.integer_form(), other.integer_form()) {
            return Self::mul_integer_forms(&a, &b);
        }
        let mut out = PuiseuxPoly::zero();
        for (p, a) in &self.terms {
            for (q, b) in &other.terms {
                out.add_term(p.plus(q), a * b);
            }
        }
        out
    }

    /// Integer exponents and integer numerators over one common denominator,
    /// when every exponent is an integer that fits in `i64`.
    fn integer_form(&self) -> Option<IntegerForm> {
        let mut den = BigInt::one();
        let mut terms = Vec::with_capacity(self.terms.len());
        for (p, c) in &self.terms {
            if !p.s.is_integer() || !p.t.is_integer() {
                return None;
            }
            terms.push(((p.s.to_integer().to_i64()?, p.t.to_integer().to_i64()?), c));
            den = den.lcm(c.denom());
        }
        let terms = terms.into_iter().map(|(k, c)| (k, c.numer() * (&den / c.denom()))).collect();
        Some(IntegerForm { den, terms })
    }

    fn mul_integer_forms(a: &IntegerForm, b: &IntegerForm) -> PuiseuxPoly {
        let mut acc: std::collections::HashMap<(i64, i64), BigInt> =
            std::collections::HashMap::with_capacity(a.terms.len() * b.terms.len());
        for ((s1, t1), c1) in &a.terms {
            for ((s2, t2), c2) in &b.terms {
                *acc.entry((s1 + s2, t1 + t2)).or_default() += c1 * c2;
            }
        }
        let den = &a.den * &b.den;
        PuiseuxPoly {
            terms: acc
                .into_iter()
                .filter(|(_, c)| !c.is_zero())
                .map(|((s, t), c)| (ExponentPoint::ints(s, t), Rational::new(c, den.clone())))
                .collect(),
        }
    }

    pub fn pow(&self, k: u32) -> PuiseuxPoly {
        (0..k).fold(PuiseuxPoly::constant(Rational::one()), |acc, _| acc.mul(self))
    }

    /// `(a θ_x + b θ_y + γ) p`: each term is multiplied by `a s + b t + γ`.
    pub fn apply_affine_theta(&self, form: &AffineForm) -> PuiseuxPoly {
        self.terms.iter().map(|(p, c)| (p.clone(), form.eval(p) * c)).collect()
    }

    /// `∏ forms (θ) p`. The operators commute, so the order is irrelevant.
    pub fn apply_theta_product(&self, forms: &[AffineForm]) -> PuiseuxPoly {
        self.terms
            .iter()
            .map(|(p, c)| {
                let factor = forms.iter().fold(Rational::one(), |acc, f| acc * f.eval(p));
                (p.clone(), factor * c)
            })
            .collect()
    }

    pub fn partial_derivative(&self, var: Variable) -> PuiseuxPoly {
        let (ds, dt) = match var {
            Variable::X => (-Rational::one(), Rational::zero()),
            Variable::Y => (Rational::zero(), -Rational::one()),
        };
        self.terms.iter().map(|(p, c)| (p.shifted(&ds, &dt), p.coord(var) * c)).collect()
    }

    /// `x_j · p`.
    pub fn times_variable(&self, var: Variable) -> PuiseuxPoly {
        PuiseuxPoly { terms: self.terms.iter().map(|(p, c)| (p.step(var), c.clone())).collect() }
    }

    /// Substitutes `x = y = 1`, i.e. the sum of all coefficients.
    pub fn coefficient_sum(&self) -> Rational {
        self.terms.values().fold(Rational::zero(), |acc, c| acc + c)
    }
}

impl FromIterator<(ExponentPoint, Rational)> for PuiseuxPoly {
    fn from_iter<I: IntoIterator<Item = (ExponentPoint, Rational)>>(iter: I) -> Self {
        let mut out = PuiseuxPoly::zero();
        for (p, c) in iter {
            out.add_term(p, c);
        }
        out
    }
}

impl Add for &PuiseuxPoly {
    type Output = PuiseuxPoly;
    fn add(self, rhs: &PuiseuxPoly) -> PuiseuxPoly {
        PuiseuxPoly::add(self, rhs)
    }
}

impl Sub for &PuiseuxPoly {
    type Output = PuiseuxPoly;
    fn sub(self, rhs: &PuiseuxPoly) -> PuiseuxPoly {
        PuiseuxPoly::sub(self, rhs)
    }
}

impl Mul for &PuiseuxPoly {
    type Output = PuiseuxPoly;
    fn mul(self, rhs: &PuiseuxPoly) -> PuiseuxPoly {
        PuiseuxPoly::mul(self, rhs)
    }
}

impl Neg for &PuiseuxPoly {
    type Output = PuiseuxPoly;
    fn neg(self) -> PuiseuxPoly {
        self.scale(&-Rational::one())
    }
}

fn fmt_power(f: &mut fmt::Formatter<'_>, sym: &str, e: &Rational) -> fmt::Result {
    if e.is_one() {
        f.write_str(sym)
    } else if e.is_integer() && !e.is_negative() {
        write!(f, "{sym}^{e}")
    } else {
        write!(f, "{sym}^({e})")
    }
}

impl fmt::Display for PuiseuxPoly {
    /// Human-readable text in canonical term order, e.g. `1 - 4*x + 12*x*y`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (p, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let abs = c.abs();
            let mut factors = 0;
            if !abs.is_one() || p.is_origin() {
                write!(f, "{abs}")?;
                factors += 1;
            }
            for (sym, e) in [("x", &p.s), ("y", &p.t)] {
                if e.is_zero() {
                    continue;
                }
                if factors > 0 {
                    f.write_str("*")?;
                }
                fmt_power(f, sym, e)?;
                factors += 1;
            }
        }
        Ok(())
    }
}

/// `x^shift · (1 + x^u)^n` expanded with binomial coefficients.
pub fn binomial_power(u: &ExponentPoint, n: u32, shift: &ExponentPoint) -> PuiseuxPoly {
    let mut out = PuiseuxPoly::zero();
    let mut binom = BigInt::one();
    let mut point = shift.clone();
    for j in 0..=n {
        out.add_term(point.clone(), Rational::from_integer(binom.clone()));
        binom = binom * BigInt::from(n - j) / BigInt::from(j + 1);
        point = point.plus(u);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    fn pt(s: i64, t: i64) -> ExponentPoint {
        ExponentPoint::ints(s, t)
    }

    #[test]
    fn ring_operations() {
        let x = PuiseuxPoly::xy(1, 0);
        assert!((&x - &x).is_zero());
        assert!(x.add(&x.scale(&int(-1))).is_zero());

        let half = PuiseuxPoly::monomial(ExponentPoint::new(rat(1, 2), int(0)), int(1));
        assert_eq!(&half * &half, x);

        let one = PuiseuxPoly::xy(0, 0);
        let lhs = &(&one + &x) * &(&one + &PuiseuxPoly::xy(0, 1));
        let rhs = PuiseuxPoly::from_int_terms(&[(0, 0, 1), (1, 0, 1), (0, 1, 1), (1, 1, 1)]);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn theta_forms() {
        let p = PuiseuxPoly::xy(2, 1);
        assert_eq!(p.apply_affine_theta(&AffineForm::ints(1, 0, 0)), p.scale(&int(2)));
        assert!(PuiseuxPoly::xy(10, 13).apply_affine_theta(&AffineForm::ints(1, 1, -23)).is_zero());
        let q = PuiseuxPoly::from_int_terms(&[(1, 0, 1), (0, 1, 1)]);
        assert_eq!(
            q.apply_affine_theta(&AffineForm::ints(2, 3, -4)),
            PuiseuxPoly::from_int_terms(&[(1, 0, -2), (0, 1, -1)])
        );
        assert_eq!(q.apply_theta_product(&[]), q);
        let f = AffineForm::ints(2, 3, -4);
        assert_eq!(q.apply_theta_product(std::slice::from_ref(&f)), q.apply_affine_theta(&f));
    }

    #[test]
    fn derivatives() {
        let sqrt_x = PuiseuxPoly::monomial(ExponentPoint::new(rat(1, 2), int(0)), int(1));
        assert_eq!(
            sqrt_x.partial_derivative(Variable::X),
            PuiseuxPoly::monomial(ExponentPoint::new(rat(-1, 2), int(0)), rat(1, 2))
        );
        let p = PuiseuxPoly::from_int_terms(&[(1, 0, 1), (0, 2, 1)]);
        assert_eq!(p.partial_derivative(Variable::Y), PuiseuxPoly::from_int_terms(&[(0, 1, 2)]));
        assert!(PuiseuxPoly::constant(int(7)).partial_derivative(Variable::X).is_zero());
    }

    #[test]
    fn binomial_expansion() {
        let p = binomial_power(&pt(-1, 0), 2, &pt(0, 0));
        assert_eq!(p, PuiseuxPoly::from_int_terms(&[(0, 0, 1), (-1, 0, 2), (-2, 0, 1)]));
        assert_eq!(binomial_power(&pt(3, 1), 0, &pt(2, 5)), PuiseuxPoly::xy(2, 5));
        let p = binomial_power(&pt(-1, 1), 10, &pt(0, 0));
        assert_eq!(p.len(), 11);
        for j in 0..=10i64 {
            let c = (0..j).fold(1i64, |acc, i| acc * (10 - i) / (i + 1));
            assert_eq!(p.coeff(&pt(-j, j)), int(c));
        }
    }

    #[test]
    fn partition_into_lines() {
        let supp: Support = [pt(0, 0), pt(1, 1), pt(2, 0)].into_iter().collect();
        let lines = lines_partition(&supp, Direction::new(1, 1).unwrap());
        let expected: Vec<Support> =
            vec![[pt(0, 0), pt(1, 1)].into_iter().collect(), [pt(2, 0)].into_iter().collect()];
        assert_eq!(lines, expected);

        let grid: Support = (0..11).flat_map(|s| (0..10).map(move |t| pt(s, t))).collect();
        let rows = lines_partition(&grid, Direction::X);
        assert_eq!(rows.len(), 10);
        assert!(rows.iter().all(|l| l.len() == 11));
        // offset s·0 - t·1 puts the top line first
        for (i, line) in rows.iter().enumerate() {
            assert!(line.iter().all(|p| p.t == int(9 - i as i64)));
        }
    }

    #[test]
    fn direction_normalisation() {
        assert_eq!(Direction::new(-2, 4).unwrap(), Direction { ds: 1, dt: -2 });
        assert_eq!(Direction::new(0, -3).unwrap(), Direction::Y);
        assert_eq!(Direction::new(0, 0), Err(Error::ZeroDirection));
    }

    #[test]
    fn display() {
        let p = PuiseuxPoly::from_int_terms(&[(0, 0, 1), (1, 0, -4), (1, 1, 12)]);
        assert_eq!(p.to_string(), "1 - 4*x + 12*x*y");
        let q = PuiseuxPoly::monomial(ExponentPoint::new(rat(-1, 2), int(2)), rat(-3, 2));
        assert_eq!(q.to_string(), "-3/2*x^(-1/2)*y^2");
    }
}
