use std::fmt::Write as _;

use horn_core::complexity::{ComplexityBound, PolyEstimate, ZonotopeBound};
use horn_core::horn::{HornOperator, LatticePolygon, RankBreakdown, ZonotopePairing};
use horn_core::solver::{Residuals, SolutionBasis, SupportReport};
use horn_core::{PuiseuxPoly, Rational};

fn join<T: ToString>(items: &[T]) -> String {
    items.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
}

fn vec2(v: [i64; 2]) -> String {
    format!("({}, {})", v[0], v[1])
}

pub fn rank(r: &RankBreakdown) -> String {
    let mut out = format!("d1 = {}\nd2 = {}\n", r.d1, r.d2);
    for c in &r.corrections {
        let _ = writeln!(out, "nu({}, {}) = {}", c.i, c.j, c.nu);
    }
    let _ = writeln!(out, "rank = {}", r.rank);
    out
}

pub fn operators(ops: &[HornOperator]) -> String {
    ops.iter().map(|op| op.render() + "\n").collect()
}

pub fn polygon(p: &LatticePolygon) -> String {
    let mut out = String::from("sides (normal, tangent, multiplicity):\n");
    for s in &p.sides {
        let _ = writeln!(out, "  {} {} {}", vec2(s.normal), vec2(s.tangent), s.multiplicity);
    }
    let verts: Vec<String> = p.vertices.iter().map(|v| vec2(*v)).collect();
    let _ = writeln!(out, "vertices: {}", verts.join(" "));
    match &p.segments {
        Some(segs) => {
            let segs: Vec<String> = segs.iter().map(|v| vec2(*v)).collect();
            let _ = writeln!(out, "segments: {}", segs.join(" "));
        }
        None => out.push_str("segments: none (not a zonotope)\n"),
    }
    out
}

pub fn pairing(p: &ZonotopePairing) -> String {
    let mut out = String::from("pair  rows    A_hat    alpha  beta  c_hat\n");
    for (i, (a, b)) in p.pairs.iter().enumerate() {
        let _ = writeln!(
            out,
            "{i:<5} {a},{b:<5} {:<8} {:<6} {:<5} {}",
            vec2(p.hat_rows[i]),
            p.alpha[i],
            p.beta[i],
            p.c_hat[i]
        );
    }
    let sorted: Vec<Rational> = p.c_hat_sorted();
    let _ = writeln!(out, "c_hat sorted: ({})", join(&sorted));
    let _ = writeln!(out, "polynomial regime: {}", p.is_polynomial_regime());
    if p.ambiguous {
        out.push_str("note: duplicate rows admit other matchings; individual c_hat may differ\n");
    }
    out
}

pub fn supports(r: &SupportReport, points: bool) -> String {
    let mut out = String::new();
    for e in &r.entries {
        let status = serde_json::to_value(e.status).unwrap();
        let _ = writeln!(
            out,
            "pair ({}, {}) {} {} points",
            e.pair.0,
            e.pair.1,
            status.as_str().unwrap_or_default(),
            e.support.len()
        );
        if points && !e.support.is_empty() {
            let pts: Vec<String> = e.support.iter().map(ToString::to_string).collect();
            let _ = writeln!(out, "  {}", pts.join(" "));
        }
    }
    let _ = writeln!(out, "union: {} points", r.union.len());
    out
}

fn residual_text(r: &Residuals) -> String {
    let show = |p: &PuiseuxPoly| if p.is_zero() { "0".to_string() } else { p.to_string() };
    format!("residual x: {}\nresidual y: {}", show(&r.x), show(&r.y))
}

pub fn basis(b: &SolutionBasis) -> String {
    let mut out = format!("basis: {} elements\n", b.len());
    for (i, (f, cert)) in b.elements.iter().zip(&b.certificates).enumerate() {
        let status = if cert.is_zero() { "certified" } else { "NOT A SOLUTION" };
        let _ = writeln!(out, "[{i}] {} terms, {status}\n    {f}", f.len());
    }
    out
}

pub fn verify(results: &[Residuals]) -> String {
    let mut out = String::new();
    for (i, r) in results.iter().enumerate() {
        let verdict = if r.is_zero() { "solution" } else { "not a solution" };
        let _ = writeln!(out, "[{i}] {verdict}\n{}", residual_text(r));
    }
    let ok = results.iter().filter(|r| r.is_zero()).count();
    let _ = writeln!(out, "{ok} of {} verified", results.len());
    out
}

pub fn bound(b: &ComplexityBound) -> String {
    format!("{b}\n")
}

pub fn zonotope_bound(b: &ZonotopeBound) -> String {
    format!(
        "raw: {}\nrefined: {}\nc_hat sorted: ({})\nv: ({})\n",
        b.raw,
        b.refined,
        join(&b.vectors.c_hat_sorted),
        join(&b.vectors.v)
    )
}

pub fn poly_estimate(e: &PolyEstimate) -> String {
    let mut out = format!("bound: {}\n", e.bound);
    if let Some(d) = e.direction {
        let _ = writeln!(out, "direction: {d}");
    }
    out.push_str("direction  lines  result  alg3  line_support\n");
    for d in &e.per_direction {
        let _ = writeln!(
            out,
            "{:<10} {:<6} {:<7} {:<5} {}",
            d.direction.to_string(),
            d.lines,
            d.result,
            d.alg3,
            d.line_support
        );
    }
    out
}

pub fn delta1(d: &PuiseuxPoly, cl0: bool) -> String {
    let shown = if d.is_zero() { "0".to_string() } else { d.to_string() };
    format!("delta1 = {shown}\ncl0: {cl0}\ncl1: {}\n", d.is_zero())
}
