use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use super::{ceil_log2, is_cl0, ComplexityBound, Rule};
use crate::exact::{power_base, Rational, UniPoly};
use crate::puiseux::{lines_partition, scale_point, Direction, PuiseuxPoly};
use crate::{Error, Result};

const DIRECTION_CAP: i64 = 20;

/// Base of the perfect-power part of a slice polynomial, written in the
/// step variable `w` along `direction`; translation-invariant.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ShortBase {
    pub direction: Direction,
    #[serde(serialize_with = "ser_unipoly")]
    pub base: UniPoly,
}

fn ser_unipoly<S: serde::Serializer>(u: &UniPoly, ser: S) -> std::result::Result<S::Ok, S::Error> {
    ser.serialize_str(&u.to_string())
}

/// The slice written as `monomial · u(w)`, `w` the lattice step along `direction`.
fn slice_unipoly(slice: &PuiseuxPoly, direction: Direction, lcm: &BigInt) -> Result<UniPoly> {
    let scaled: Vec<((BigInt, BigInt), &Rational)> =
        slice.terms().map(|(p, c)| (scale_point(p, lcm), c)).collect();
    let Some(first) = scaled.first() else {
        return Err(Error::ZeroPolynomial);
    };
    let offset = direction.offset(&first.0);
    if scaled.iter().any(|(p, _)| direction.offset(p) != offset) {
        return Err(Error::NonCollinear);
    }
    let norm = BigInt::from(direction.ds * direction.ds + direction.dt * direction.dt);
    let along: Vec<BigInt> = scaled.iter().map(|(p, _)| direction.along(p)).collect();
    let min = along.iter().min().unwrap().clone();
    let mut coeffs: Vec<Rational> = Vec::new();
    for (a, (_, c)) in along.iter().zip(&scaled) {
        let k = ((a - &min) / &norm).to_usize().ok_or(Error::Overflow)?;
        if coeffs.len() <= k {
            coeffs.resize(k + 1, Rational::zero());
        }
        coeffs[k] = (*c).clone();
    }
    Ok(UniPoly::new(coeffs))
}

fn short_with_lcm(slice: &PuiseuxPoly, direction: Direction, lcm: &BigInt) -> Result<Vec<ShortBase>> {
    let u = slice_unipoly(slice, direction, lcm)?;
    let pb = power_base(&u)?;
    Ok(vec![ShortBase { direction, base: pb.base }])
}

/// getShort for a collinear slice: the perfect-power base of its slice polynomial.
pub fn get_short(slice: &PuiseuxPoly, direction: Direction) -> Result<Vec<ShortBase>> {
    short_with_lcm(slice, direction, &slice.support().denominator_lcm())
}

/// The outcome of one candidate direction.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DirectionEstimate {
    pub direction: Direction,
    pub lines: u64,
    /// Slice counter: slices whose bases were not all seen before.
    pub result: u64,
    pub alg3: u64,
    pub line_support: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PolyEstimate {
    pub bound: ComplexityBound,
    pub direction: Option<Direction>,
    pub per_direction: Vec<DirectionEstimate>,
}

/// Axes plus every normalised primitive difference of support points (after
/// clearing denominators) with both coordinates at most 20 in magnitude.
fn candidate_directions(p: &PuiseuxPoly) -> BTreeSet<Direction> {
    let supp = p.support();
    let lcm = supp.denominator_lcm();
    let pts = supp.scaled(&lcm);
    let mut out: BTreeSet<Direction> = [Direction::X, Direction::Y].into_iter().collect();
    for (i, a) in pts.iter().enumerate() {
        for b in &pts[i + 1..] {
            if let Some(d) = Direction::from_big(&(&b.0 - &a.0), &(&b.1 - &a.1)) {
                if d.ds.abs() <= DIRECTION_CAP && d.dt.abs() <= DIRECTION_CAP {
                    out.insert(d);
                }
            }
        }
    }
    out
}

fn line_bound_for(direction: Direction, lines: u64) -> Result<u64> {
    let b = if direction.is_axis() { 1 } else { 2 };
    Ok(b + ceil_log2(lines)?)
}

fn estimate_direction(p: &PuiseuxPoly, direction: Direction, lcm: &BigInt) -> Result<DirectionEstimate> {
    let slices = lines_partition(&p.support(), direction);
    let mut short: Vec<ShortBase> = Vec::new();
    let mut result = 0u64;
    for s in &slices {
        let curr = short_with_lcm(&p.restrict(s), direction, lcm)?;
        if !curr.iter().all(|b| short.contains(b)) {
            result += 1;
            for b in curr {
                if !short.contains(&b) {
                    short.push(b);
                }
            }
        }
    }
    let lines = slices.len() as u64;
    Ok(DirectionEstimate {
        direction,
        lines,
        result,
        alg3: 2 + ceil_log2(result)?,
        line_support: line_bound_for(direction, lines)?,
    })
}

/// The repeated-base slice count (`alg3`) and the line-count bound over all candidate directions, plus
/// the `Cl_0` check. On ties the order of preference is cl0, alg3,
/// line_support, then the lexicographically smallest direction.
pub fn poly_estimate(p: &PuiseuxPoly) -> Result<PolyEstimate> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let lcm = p.support().denominator_lcm();
    let per_direction = candidate_directions(p)
        .into_iter()
        .map(|d| estimate_direction(p, d, &lcm))
        .collect::<Result<Vec<_>>>()?;
    if is_cl0(p) {
        return Ok(PolyEstimate {
            bound: ComplexityBound::new(0, Rule::Cl0),
            direction: None,
            per_direction,
        });
    }
    let mut best: Option<(u64, u8, Direction)> = None;
    for e in &per_direction {
        for cand in [(e.alg3, 0u8, e.direction), (e.line_support, 1u8, e.direction)] {
            if best.is_none_or(|b| (cand.0, cand.1) < (b.0, b.1)) {
                best = Some(cand);
            }
        }
    }
    let (value, kind, direction) = best.expect("axes are always candidates");
    let rule = if kind == 0 { Rule::Alg3 } else { Rule::LineSupport };
    Ok(PolyEstimate { bound: ComplexityBound::new(value, rule), direction: Some(direction), per_direction })
}

pub fn poly_bound(p: &PuiseuxPoly) -> Result<ComplexityBound> {
    poly_estimate(p).map(|e| e.bound)
}

/// `min_d b(d) + ⌈log2 L(d)⌉` over candidate directions, `L(d)` the number of
/// support lines parallel to `d`, `b` = 1 on axes and 2 otherwise; 0 for a
/// function of one variable.
pub fn line_support_bound(p: &PuiseuxPoly) -> Result<ComplexityBound> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if is_cl0(p) {
        return Ok(ComplexityBound::new(0, Rule::Cl0));
    }
    let supp = p.support();
    let mut best = u64::MAX;
    for d in candidate_directions(p) {
        let lines = lines_partition(&supp, d).len() as u64;
        best = best.min(line_bound_for(d, lines)?);
    }
    Ok(ComplexityBound::new(best, Rule::LineSupport))
}
