//! Deterministic SVG and ASCII drawings of exponent supports.
//!
//! One lattice unit is 24 px and the default viewport is the bounding box of
//! all points grown by one unit. Coordinates are computed exactly and printed
//! with two decimals, so identical input gives byte-identical output.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::exact::{ceil_div, floor, int, to_fixed, Rational};
use crate::horn::ZonotopePairing;
use crate::puiseux::{scale_point, AffineForm, ExponentPoint, Support};

pub const UNIT: i64 = 24;
const COLORS: [&str; 6] = ["#1f5fa8", "#c2410c", "#15803d", "#7e22ce", "#a16207", "#be123c"];
const GLYPHS: [char; 6] = ['*', 'o', '+', 'x', '%', '@'];

/// Integer viewport `[smin, smax] × [tmin, tmax]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Viewport {
    pub smin: i64,
    pub smax: i64,
    pub tmin: i64,
    pub tmax: i64,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PlotSpec {
    /// Drawn in order; a point already drawn by an earlier layer is skipped.
    pub layers: Vec<Support>,
    /// Lines `a s + b t + γ = 0`.
    pub divisors: Vec<AffineForm>,
    pub viewport: Option<Viewport>,
}

impl PlotSpec {
    pub fn new(layers: Vec<Support>) -> Self {
        PlotSpec { layers, ..Default::default() }
    }

    pub fn viewport(&self) -> Viewport {
        if let Some(v) = self.viewport {
            return v;
        }
        let union = self.layers.iter().fold(Support::new(), |acc, l| acc.union(l));
        match union.bounds() {
            None => Viewport { smin: -1, smax: 1, tmin: -1, tmax: 1 },
            Some((s0, s1, t0, t1)) => {
                let lo = |r: &Rational| floor(r).to_i64().unwrap_or(i64::MIN / 4) - 1;
                let hi = |r: &Rational| ceil_div(r.numer(), r.denom()).to_i64().unwrap_or(i64::MAX / 4) + 1;
                Viewport { smin: lo(&s0), smax: hi(&s1), tmin: lo(&t0), tmax: hi(&t1) }
            }
        }
    }

    /// Each point once, with the index of the first layer containing it.
    fn points(&self) -> Vec<(ExponentPoint, usize)> {
        let mut seen = Support::new();
        let mut out = Vec::new();
        for (i, layer) in self.layers.iter().enumerate() {
            for p in layer.iter() {
                if seen.insert(p.clone()) {
                    out.push((p.clone(), i));
                }
            }
        }
        out
    }
}

fn px(v: &Rational) -> String {
    to_fixed(v, 2)
}

/// Clips `a s + b t + γ = 0` to the viewport rectangle.
fn clip(form: &AffineForm, vp: &Viewport) -> Option<(ExponentPoint, ExponentPoint)> {
    let (s0, s1, t0, t1) = (int(vp.smin), int(vp.smax), int(vp.tmin), int(vp.tmax));
    let mut hits: Vec<ExponentPoint> = Vec::new();
    let mut push = |p: ExponentPoint| {
        if p.s >= s0 && p.s <= s1 && p.t >= t0 && p.t <= t1 && !hits.contains(&p) {
            hits.push(p);
        }
    };
    if !form.b.is_zero() {
        for s in [&s0, &s1] {
            push(ExponentPoint::new(s.clone(), -(&form.a * s + &form.gamma) / &form.b));
        }
    }
    if !form.a.is_zero() {
        for t in [&t0, &t1] {
            push(ExponentPoint::new(-(&form.b * t + &form.gamma) / &form.a, t.clone()));
        }
    }
    hits.sort();
    match (hits.first(), hits.last()) {
        (Some(a), Some(b)) if a != b => Some((a.clone(), b.clone())),
        _ => None,
    }
}

pub fn render_svg(spec: &PlotSpec) -> String {
    let vp = spec.viewport();
    let unit = int(UNIT);
    let x = |s: &Rational| px(&((s - int(vp.smin)) * &unit));
    let y = |t: &Rational| px(&((int(vp.tmax) - t) * &unit));
    let width = (vp.smax - vp.smin) * UNIT;
    let height = (vp.tmax - vp.tmin) * UNIT;
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    );
    let _ = writeln!(out, r##"<rect x="0" y="0" width="{width}" height="{height}" fill="#ffffff"/>"##);
    let _ = writeln!(out, r##"<g stroke="#e5e7eb" stroke-width="1">"##);
    for s in vp.smin..=vp.smax {
        let xs = x(&int(s));
        let _ = writeln!(out, r#"<line x1="{xs}" y1="0.00" x2="{xs}" y2="{height}.00"/>"#);
    }
    for t in vp.tmin..=vp.tmax {
        let yt = y(&int(t));
        let _ = writeln!(out, r#"<line x1="0.00" y1="{yt}" x2="{width}.00" y2="{yt}"/>"#);
    }
    let _ = writeln!(out, "</g>");
    let _ = writeln!(out, r##"<g stroke="#111827" stroke-width="1.5">"##);
    if vp.tmin <= 0 && 0 <= vp.tmax {
        let y0 = y(&int(0));
        let _ = writeln!(out, r#"<line x1="0.00" y1="{y0}" x2="{width}.00" y2="{y0}"/>"#);
    }
    if vp.smin <= 0 && 0 <= vp.smax {
        let x0 = x(&int(0));
        let _ = writeln!(out, r#"<line x1="{x0}" y1="0.00" x2="{x0}" y2="{height}.00"/>"#);
    }
    let _ = writeln!(out, "</g>");
    let _ = writeln!(out, r##"<g font-family="monospace" font-size="9" fill="#374151">"##);
    for s in vp.smin + 1..vp.smax {
        let _ = writeln!(
            out,
            r#"<text x="{}" y="{}.00" text-anchor="middle">{s}</text>"#,
            x(&int(s)),
            height - 3
        );
    }
    for t in vp.tmin + 1..vp.tmax {
        let _ = writeln!(
            out,
            r#"<text x="3.00" y="{}">{t}</text>"#,
            px(&((int(vp.tmax) - int(t)) * &unit + int(3)))
        );
    }
    let _ = writeln!(out, "</g>");
    if !spec.divisors.is_empty() {
        let _ = writeln!(out, r##"<g stroke="#6b7280" stroke-width="1" stroke-dasharray="4 3">"##);
        for form in &spec.divisors {
            if let Some((a, b)) = clip(form, &vp) {
                let _ = writeln!(
                    out,
                    r#"<line x1="{}" y1="{}" x2="{}" y2="{}"/>"#,
                    x(&a.s),
                    y(&a.t),
                    x(&b.s),
                    y(&b.t)
                );
            }
        }
        let _ = writeln!(out, "</g>");
    }
    for (p, layer) in spec.points() {
        let _ = writeln!(
            out,
            r#"<circle cx="{}" cy="{}" r="4" fill="{}"/>"#,
            x(&p.s),
            y(&p.t),
            COLORS[layer % COLORS.len()]
        );
    }
    out.push_str("</svg>\n");
    out
}

/// Text grid, top row first. Rational supports are drawn on the lattice
/// scaled by the common denominator, noted in the first line.
pub fn render_ascii(spec: &PlotSpec) -> String {
    let union = spec.layers.iter().fold(Support::new(), |acc, l| acc.union(l));
    let lcm = union.denominator_lcm();
    let scale = lcm.to_i64().unwrap_or(1);
    let vp = spec.viewport();
    let (smin, smax, tmin, tmax) = (vp.smin * scale, vp.smax * scale, vp.tmin * scale, vp.tmax * scale);
    let w = (smax - smin + 1) as usize;
    let h = (tmax - tmin + 1) as usize;
    let mut grid = vec![vec!['.'; w]; h];
    for (row, t) in (tmin..=tmax).rev().enumerate() {
        for (col, s) in (smin..=smax).enumerate() {
            grid[row][col] = match (s == 0, t == 0) {
                (true, true) => '+',
                (true, false) => '|',
                (false, true) => '-',
                _ => '.',
            };
        }
    }
    for (p, layer) in spec.points() {
        let (s, t) = scale_point(&p, &lcm);
        let (Some(s), Some(t)) = (s.to_i64(), t.to_i64()) else { continue };
        if (smin..=smax).contains(&s) && (tmin..=tmax).contains(&t) {
            grid[(tmax - t) as usize][(s - smin) as usize] = GLYPHS[layer % GLYPHS.len()];
        }
    }
    let mut out = String::new();
    if lcm != BigInt::from(1) {
        let _ = writeln!(out, "scale 1/{lcm}");
    }
    let _ = writeln!(out, "s {}..{}, t {}..{}", vp.smin, vp.smax, vp.tmin, vp.tmax);
    for row in grid {
        out.extend(row);
        out.push('\n');
    }
    out
}

/// Lines `⟨Â_i, q⟩ + α_i = 0` and `⟨Â_i, q⟩ - β_i = 0` of every divisor pair.
pub fn divisor_lines(pairing: &ZonotopePairing) -> Vec<AffineForm> {
    let mut out = Vec::new();
    for (i, r) in pairing.hat_rows.iter().enumerate() {
        out.push(AffineForm::new(int(r[0]), int(r[1]), pairing.alpha[i].clone()));
        out.push(AffineForm::new(int(r[0]), int(r[1]), -pairing.beta[i].clone()));
    }
    out
}
