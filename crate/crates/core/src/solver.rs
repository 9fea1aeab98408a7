//! Polynomial solutions: pair supports, the parallelogram closed form, an
//! exact recurrence solver and residual certificates.
//!
//! A Puiseux polynomial `f = Σ c_q x^q` solves the `x_j` equation iff
//! `c_{q-e_j} P_j(q-e_j) = c_q Q_j(q)` for every exponent point `q`.

use std::collections::{BTreeMap, BTreeSet};

use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::exact::{floor, int, Rational, RationalMatrix};
use crate::horn::{HornSystem, Variable, ZonotopePairing};
use crate::puiseux::{binomial_power, AffineForm, ExponentPoint, PuiseuxPoly, Support};
use crate::{Error, Result};

/// Two pairs of the zonotope pairing viewed as a parallelogram system.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairSubsystem {
    /// Indices into `Â`.
    pub pair: (usize, usize),
    pub matrix: [[i64; 2]; 2],
    pub alpha: [Rational; 2],
    pub beta: [Rational; 2],
    pub inverse: RationalMatrix,
}

impl PairSubsystem {
    pub fn new(pairing: &ZonotopePairing, a: usize, b: usize) -> Result<Self> {
        let matrix = [pairing.hat_rows[a], pairing.hat_rows[b]];
        let inverse = RationalMatrix::from_i64_rows(&[&matrix[0], &matrix[1]])?
            .inverse2x2()
            .map_err(|_| Error::SingularPair)?;
        Ok(PairSubsystem {
            pair: (a, b),
            matrix,
            alpha: [pairing.alpha[a].clone(), pairing.alpha[b].clone()],
            beta: [pairing.beta[a].clone(), pairing.beta[b].clone()],
            inverse,
        })
    }

    /// `n_i = -α_i - β_i`.
    pub fn exponents(&self) -> [Rational; 2] {
        [-&self.alpha[0] - &self.beta[0], -&self.alpha[1] - &self.beta[1]]
    }

    /// Both exponents as positive integers, if they are.
    pub fn polynomial_exponents(&self) -> Option<[u32; 2]> {
        let n = self.exponents();
        let conv = |r: &Rational| -> Option<u32> {
            if r.is_integer() && r.is_positive() {
                u32::try_from(r.to_integer()).ok()
            } else {
                None
            }
        };
        Some([conv(&n[0])?, conv(&n[1])?])
    }

    /// `-M⁻¹ v`.
    fn neg_inverse_apply(&self, v: [Rational; 2]) -> ExponentPoint {
        let w = self.inverse.mul_vec(&v);
        ExponentPoint::new(-&w[0], -&w[1])
    }

    /// The exponent point for `(k1, k2)`: `-M⁻¹(α + k)`.
    pub fn point(&self, k1: u32, k2: u32) -> ExponentPoint {
        self.neg_inverse_apply([&self.alpha[0] + int(k1 as i64), &self.alpha[1] + int(k2 as i64)])
    }

    /// The lattice support `{ -M⁻¹(α + k) : 0 ≤ k_i ≤ n_i }`.
    pub fn support(&self) -> Result<Support> {
        let [n1, n2] = self.polynomial_exponents().ok_or(Error::NonPolynomialRegime)?;
        Ok((0..=n1)
            .flat_map(|k1| (0..=n2).map(move |k2| (k1, k2)))
            .map(|(k1, k2)| self.point(k1, k2))
            .collect())
    }

    /// `x^{-M⁻¹α} (1 + x^{-M⁻¹e1})^{n1} (1 + x^{-M⁻¹e2})^{n2}`.
    pub fn closed_form(&self) -> Result<PuiseuxPoly> {
        let [n1, n2] = self.polynomial_exponents().ok_or(Error::NonPolynomialRegime)?;
        let shift = self.neg_inverse_apply(self.alpha.clone());
        let u1 = self.neg_inverse_apply([int(1), int(0)]);
        let u2 = self.neg_inverse_apply([int(0), int(1)]);
        let origin = ExponentPoint::origin();
        Ok(binomial_power(&u1, n1, &shift).mul(&binomial_power(&u2, n2, &origin)))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PairStatus {
    Admissible,
    SkippedNonpolynomial,
    SkippedSingular,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SupportEntry {
    pub pair: (usize, usize),
    pub status: PairStatus,
    pub support: Support,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SupportReport {
    pub entries: Vec<SupportEntry>,
    pub union: Support,
}

impl SupportReport {
    pub fn admissible(&self) -> impl Iterator<Item = &SupportEntry> {
        self.entries.iter().filter(|e| e.status == PairStatus::Admissible)
    }
}

/// Runs over all pairs `a < b` of `Â`, reporting skipped pairs with their reason.
pub fn candidate_supports(sys: &HornSystem) -> Result<SupportReport> {
    let pairing = sys.zonotope_pairing()?;
    let k = pairing.k();
    let mut entries = Vec::new();
    let mut union = Support::new();
    for a in 0..k {
        for b in a + 1..k {
            let entry = match PairSubsystem::new(&pairing, a, b) {
                Err(_) => SupportEntry {
                    pair: (a, b),
                    status: PairStatus::SkippedSingular,
                    support: Support::new(),
                },
                Ok(sub) => match sub.support() {
                    Ok(support) => {
                        union = union.union(&support);
                        SupportEntry { pair: (a, b), status: PairStatus::Admissible, support }
                    }
                    Err(_) => SupportEntry {
                        pair: (a, b),
                        status: PairStatus::SkippedNonpolynomial,
                        support: Support::new(),
                    },
                },
            };
            entries.push(entry);
        }
    }
    Ok(SupportReport { entries, union })
}

/// The closed-form solution of a system made of exactly two `±` pairs,
/// certified before it is returned.
pub fn parallelogram_solution(sys: &HornSystem) -> Result<PuiseuxPoly> {
    let pairing = sys.zonotope_pairing()?;
    if pairing.k() != 2 {
        return Err(Error::NotParallelogram { pairs: pairing.k() });
    }
    let sub = PairSubsystem::new(&pairing, 0, 1)?;
    let f = sub.closed_form()?;
    let residuals = verify_solution(sys, &f);
    if !residuals.is_zero() {
        return Err(Error::VerificationFailed(format!("closed form leaves {residuals:?}")));
    }
    Ok(f)
}

/// Operator-application residuals `x_j P_j(θ)f - Q_j(θ)f` for `j = 1, 2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Residuals {
    pub x: PuiseuxPoly,
    pub y: PuiseuxPoly,
}

impl Residuals {
    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }

    pub fn get(&self, var: Variable) -> &PuiseuxPoly {
        match var {
            Variable::X => &self.x,
            Variable::Y => &self.y,
        }
    }
}

pub fn verify_solution(sys: &HornSystem, f: &PuiseuxPoly) -> Residuals {
    let [ox, oy] = sys.operators();
    Residuals { x: ox.apply(f), y: oy.apply(f) }
}

/// Certified solutions, one residual pair per element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolutionBasis {
    pub elements: Vec<PuiseuxPoly>,
    pub certificates: Vec<Residuals>,
}

impl SolutionBasis {
    fn certify(sys: &HornSystem, elements: Vec<PuiseuxPoly>) -> Self {
        let certificates = elements.iter().map(|f| verify_solution(sys, f)).collect();
        SolutionBasis { elements, certificates }
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn all_certified(&self) -> bool {
        self.certificates.iter().all(Residuals::is_zero)
    }
}

/// Every solution whose support lies in `s`.
///
/// Each recurrence constraint touches at most two coefficients, so the
/// solution space splits over connected components of the constraint graph:
/// a component contributes one basis element unless some constraint forces a
/// coefficient to zero or a cycle of ratios is inconsistent. Elements are
/// ordered by their least point and normalised to coefficient 1 there.
pub fn solve_on_support(sys: &HornSystem, s: &Support) -> SolutionBasis {
    let points: Vec<&ExponentPoint> = s.iter().collect();
    let index: BTreeMap<&ExponentPoint, usize> = points.iter().enumerate().map(|(i, p)| (*p, i)).collect();
    let n = points.len();
    let mut forced_zero = vec![false; n];
    // edges[i] holds (neighbour, ratio) with c_neighbour = ratio * c_i
    let mut edges: Vec<Vec<(usize, Rational)>> = vec![Vec::new(); n];

    for op in sys.operators() {
        let var = op.var;
        for (i, p) in points.iter().enumerate() {
            // constraint at q = p: c_{p-e} P(p-e) - c_p Q(p)
            let qp = op.eval_q(p);
            let prev = p.shifted_back(var);
            match index.get(&prev) {
                Some(&h) => {
                    let pp = op.eval_p(&prev);
                    match (pp.is_zero(), qp.is_zero()) {
                        (true, true) => {}
                        (false, true) => forced_zero[h] = true,
                        (true, false) => forced_zero[i] = true,
                        (false, false) => {
                            let ratio = &pp / &qp;
                            edges[i].push((h, Rational::one() / &ratio));
                            edges[h].push((i, ratio));
                        }
                    }
                }
                None => {
                    if !qp.is_zero() {
                        forced_zero[i] = true;
                    }
                }
            }
            // constraint at q = p + e with no coefficient at q
            let next = p.step(var);
            if !index.contains_key(&next) && !op.eval_p(p).is_zero() {
                forced_zero[i] = true;
            }
        }
    }

    let mut value: Vec<Option<Rational>> = vec![None; n];
    let mut elements = Vec::new();
    for start in 0..n {
        if value[start].is_some() {
            continue;
        }
        value[start] = Some(Rational::one());
        let mut component = vec![start];
        let mut stack = vec![start];
        let mut consistent = true;
        while let Some(i) = stack.pop() {
            let vi = value[i].clone().unwrap();
            for (j, ratio) in &edges[i] {
                let vj = &vi * ratio;
                match &value[*j] {
                    Some(existing) => consistent &= *existing == vj,
                    None => {
                        value[*j] = Some(vj);
                        component.push(*j);
                        stack.push(*j);
                    }
                }
            }
        }
        if consistent && component.iter().all(|&i| !forced_zero[i]) {
            elements.push(
                component
                    .iter()
                    .map(|&i| ((*points[i]).clone(), value[i].clone().unwrap()))
                    .collect::<PuiseuxPoly>(),
            );
        }
    }
    SolutionBasis::certify(sys, elements)
}

/// The support as a dense constraint matrix; its nullspace is the solution
/// space of [`solve_on_support`].
pub fn constraint_matrix(sys: &HornSystem, s: &Support) -> RationalMatrix {
    let points: Vec<&ExponentPoint> = s.iter().collect();
    let index: BTreeMap<&ExponentPoint, usize> = points.iter().enumerate().map(|(i, p)| (*p, i)).collect();
    let mut rows = Vec::new();
    for op in sys.operators() {
        let var = op.var;
        let targets: BTreeSet<ExponentPoint> =
            points.iter().flat_map(|p| [(*p).clone(), p.step(var)]).collect();
        for q in targets {
            let mut row = vec![Rational::zero(); points.len()];
            let prev = q.shifted_back(var);
            if let Some(&h) = index.get(&prev) {
                row[h] += op.eval_p(&prev);
            }
            if let Some(&i) = index.get(&q) {
                row[i] -= op.eval_q(&q);
            }
            if row.iter().any(|x| !x.is_zero()) {
                rows.push(row);
            }
        }
    }
    if rows.is_empty() {
        return RationalMatrix::zeros(0, points.len());
    }
    RationalMatrix::from_rows(rows).expect("rows have equal length")
}

/// Integer points of `[smin..smax] × [tmin..tmax]`.
pub fn integer_box(smin: i64, smax: i64, tmin: i64, tmax: i64) -> Support {
    (smin..=smax).flat_map(|s| (tmin..=tmax).map(move |t| ExponentPoint::ints(s, t))).collect()
}

/// For each integer-shift coset met by `s`, the bounding box of its points
/// in that coset grown by one step on every side.
pub fn inflated_box(s: &Support) -> Support {
    let mut cosets: BTreeMap<(Rational, Rational), Vec<&ExponentPoint>> = BTreeMap::new();
    for p in s.iter() {
        let frac = |r: &Rational| r - Rational::from_integer(floor(r));
        cosets.entry((frac(&p.s), frac(&p.t))).or_default().push(p);
    }
    let mut out = Support::new();
    for ((fs, ft), pts) in cosets {
        let lo_s: num_bigint::BigInt = pts.iter().map(|p| floor(&p.s)).min().unwrap() - 1i32;
        let hi_s = pts.iter().map(|p| floor(&p.s)).max().unwrap() + 1i32;
        let lo_t = pts.iter().map(|p| floor(&p.t)).min().unwrap() - 1i32;
        let hi_t = pts.iter().map(|p| floor(&p.t)).max().unwrap() + 1i32;
        let mut a = lo_s.clone();
        while a <= hi_s {
            let mut b = lo_t.clone();
            while b <= hi_t {
                out.insert(ExponentPoint::new(
                    &fs + Rational::from_integer(a.clone()),
                    &ft + Rational::from_integer(b.clone()),
                ));
                b += 1;
            }
            a += 1;
        }
    }
    out
}

/// Keeps the elements that are not rational combinations of earlier ones.
pub fn independent_subset(polys: Vec<PuiseuxPoly>) -> Vec<PuiseuxPoly> {
    // rows of an echelon form keyed by pivot point
    let mut echelon: BTreeMap<ExponentPoint, PuiseuxPoly> = BTreeMap::new();
    let mut kept = Vec::new();
    for p in polys {
        let mut r = p.clone();
        loop {
            let Some((lead, coeff)) = r.terms().next().map(|(k, c)| (k.clone(), c.clone())) else {
                break;
            };
            match echelon.get(&lead) {
                Some(row) => r = &r - &row.scale(&coeff),
                None => {
                    echelon.insert(lead, r.scale(&(Rational::one() / coeff)));
                    kept.push(p);
                    break;
                }
            }
        }
    }
    kept
}

/// Solves on the inflated box of every admissible pair support and keeps a
/// linearly independent subset, in ascending pair order.
pub fn full_polynomial_basis(sys: &HornSystem) -> Result<SolutionBasis> {
    let report = candidate_supports(sys)?;
    let mut all = Vec::new();
    for entry in report.admissible() {
        all.extend(solve_on_support(sys, &inflated_box(&entry.support)).elements);
    }
    Ok(SolutionBasis::certify(sys, independent_subset(all)))
}

/// Lifts a solution across an appended divisor pair: rows `r` with parameter
/// `γ` and `-r` with parameter `2 - γ`. The lift multiplies the coefficient
/// at `q` by `(1 - γ - <r,q>)·(-1)^{<r,q>}`, i.e. applies the θ-form
/// `-<r,θ> + 1 - γ` and a sign twist. Needs `<r,q>` integral on the support.
pub fn divisor_pair_lift(f: &PuiseuxPoly, r: [i64; 2], gamma: &Rational) -> Result<PuiseuxPoly> {
    let form = AffineForm::new(int(-r[0]), int(-r[1]), Rational::one() - gamma);
    let lifted = f.apply_affine_theta(&form);
    let mut out = PuiseuxPoly::zero();
    for (q, c) in lifted.terms() {
        let dot = &q.s * int(r[0]) + &q.t * int(r[1]);
        if !dot.is_integer() {
            return Err(Error::InvalidInput(format!("<r, q> = {dot} is not an integer")));
        }
        let c = if dot.to_integer().is_odd() { -c.clone() } else { c.clone() };
        out.add_term(q.clone(), c);
    }
    Ok(out)
}

/// The system with the divisor pair of [`divisor_pair_lift`] appended.
pub fn append_divisor_pair(sys: &HornSystem, r: [i64; 2], gamma: &Rational) -> Result<HornSystem> {
    let mut rows = sys.rows().to_vec();
    let mut params = sys.params().to_vec();
    rows.push(r);
    params.push(gamma.clone());
    rows.push([-r[0], -r[1]]);
    params.push(int(2) - gamma);
    HornSystem::new(rows, params)
}
