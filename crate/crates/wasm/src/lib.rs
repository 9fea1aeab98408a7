//! Browser bindings: every export takes and returns JSON text so the page
//! needs no generated glue beyond wasm-bindgen's string passing.
//!
//! Errors come back as `{"error": "..."}` rather than exceptions.

use horn_core::complexity::{delta1, is_cl0, poly_estimate as estimate_poly, sum_bound, zonotope_bound};
use horn_core::fixtures;
use horn_core::json::{parse_poly, parse_system};
use horn_core::plot::{divisor_lines, render_svg, PlotSpec};
use horn_core::solver::{candidate_supports, integer_box, solve_on_support};
use horn_core::{HornSystem, Result};
use serde_json::{json, Value};
use wasm_bindgen::prelude::wasm_bindgen;

fn respond(r: Result<Value>) -> String {
    match r {
        Ok(v) => v.to_string(),
        Err(e) => json!({ "error": e.to_string() }).to_string(),
    }
}

fn to_value<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("serializable")
}

/// Names of the bundled example systems.
#[wasm_bindgen]
pub fn fixture_names() -> String {
    json!(fixtures::builtin_names().collect::<Vec<_>>()).to_string()
}

/// The `{"matrix", "c"}` text of a bundled system, for the editor.
#[wasm_bindgen]
pub fn fixture_system(name: &str) -> String {
    respond(fixtures::builtin(name).map(|fx| {
        let sys = horn_core::json::SystemJson::from_system(&fx.system);
        json!({ "system": to_value(&sys), "description": fx.description })
    }))
}

fn layers(sys: &HornSystem) -> Vec<horn_core::Support> {
    if let Ok(report) = candidate_supports(sys) {
        return report.admissible().map(|e| e.support.clone()).collect();
    }
    let bx =
        fixtures::all_builtin().into_iter().find(|fx| fx.system == *sys).and_then(|fx| fx.expected.solve_box);
    match bx {
        Some([s0, s1, t0, t1]) => {
            solve_on_support(sys, &integer_box(s0, s1, t0, t1)).elements.iter().map(|f| f.support()).collect()
        }
        None => Vec::new(),
    }
}

/// Rank, polygon, pairing, zonotope bounds and an SVG of the supports.
#[wasm_bindgen]
pub fn analyze(system_json: &str) -> String {
    respond(parse_system(system_json).map(|sys| {
        let pairing = sys.zonotope_pairing().ok();
        let bound = pairing.as_ref().and_then(|p| zonotope_bound(p).ok());
        let mut spec = PlotSpec::new(layers(&sys));
        if let Some(p) = &pairing {
            spec.divisors = divisor_lines(p);
        }
        json!({
            "rank": to_value(&sys.holonomic_rank()),
            "polygon": sys.polygon().ok().map(|p| to_value(&p)),
            "pairing": pairing.as_ref().map(to_value),
            "bound": bound.map(|b| to_value(&b)),
            "svg": render_svg(&spec),
        })
    }))
}

/// Sum bound for whitespace or comma separated class indices.
#[wasm_bindgen]
pub fn sum_estimate(bounds: &str) -> String {
    let parsed: std::result::Result<Vec<u64>, _> = bounds
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|s| !s.is_empty())
        .map(str::parse)
        .collect();
    match parsed {
        Ok(v) => respond(sum_bound(&v).map(|b| to_value(&b))),
        Err(e) => json!({ "error": e.to_string() }).to_string(),
    }
}

/// Line-based bound and Δ1 test for a `{"terms": [[s, t, c], ...]}` polynomial.
#[wasm_bindgen]
pub fn poly_estimate(poly_json: &str) -> String {
    respond(parse_poly(poly_json).and_then(|p| {
        let e = estimate_poly(&p)?;
        let d = delta1(&p);
        Ok(json!({
            "estimate": to_value(&e),
            "text": p.to_string(),
            "cl0": is_cl0(&p),
            "cl1": d.is_zero(),
        }))
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(s: &str) -> Value {
        serde_json::from_str(s).unwrap()
    }

    #[test]
    fn analyze_hexagon() {
        let src = parse(&fixture_system("hexagon"));
        let v = parse(&analyze(&src["system"].to_string()));
        assert_eq!(v["rank"]["rank"], 3);
        assert_eq!(v["bound"]["refined"]["value"], 6);
        assert_eq!(v["svg"].as_str().unwrap().matches("<circle").count(), 152);
    }

    #[test]
    fn analyze_pentagon_uses_fixture_box() {
        let src = parse(&fixture_system("pentagon"));
        let v = parse(&analyze(&src["system"].to_string()));
        assert_eq!(v["rank"]["rank"], 4);
        assert!(v["pairing"].is_null());
        assert!(v["svg"].as_str().unwrap().contains("<circle"));
    }

    #[test]
    fn errors_are_json() {
        assert!(parse(&analyze("{")).get("error").is_some());
        assert!(parse(&sum_estimate("1 x")).get("error").is_some());
        assert!(parse(&fixture_system("nope")).get("error").is_some());
    }

    #[test]
    fn sum_and_poly() {
        assert_eq!(parse(&sum_estimate("3, 4 4"))["value"], 6);
        let v = parse(&poly_estimate(r#"{"terms": [[0, 0, 1], [1, 0, 1], [0, 1, 1], [1, 1, 1]]}"#));
        assert_eq!(v["estimate"]["bound"]["value"], 2);
        assert_eq!(v["cl1"], true);
        assert_eq!(parse(&fixture_names()).as_array().unwrap().len(), 11);
    }
}
