use std::fs;
use std::io::Read;

use anyhow::{anyhow, bail, Context, Result};
use horn_core::fixtures::{self, Fixture};
use horn_core::json::parse_system;
use horn_core::{ExponentPoint, HornSystem, PuiseuxPoly, Support};
use serde_json::Value;

/// Reads a path, `-` for stdin, or `@name` for a bundled fixture.
pub fn read_source(path: &str) -> Result<String> {
    if let Some(name) = path.strip_prefix('@') {
        return fixtures::builtin_source(name)
            .map(str::to_owned)
            .ok_or_else(|| anyhow!("unknown fixture {name:?}; try `horncalc fixtures`"));
    }
    if path == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).context("reading stdin")?;
        return Ok(s);
    }
    fs::read_to_string(path).with_context(|| format!("reading {path}"))
}

fn parse_value(text: &str, path: &str) -> Result<Value> {
    serde_json::from_str(text).with_context(|| format!("{path} is not valid JSON"))
}

pub fn load_system(path: &str) -> Result<HornSystem> {
    Ok(parse_system(&read_source(path)?)?)
}

/// The fixture in `path`, if the file is one.
pub fn load_fixture(path: &str) -> Result<Option<Fixture>> {
    let text = read_source(path)?;
    let value = parse_value(&text, path)?;
    if value.get("expected").is_none() {
        return Ok(None);
    }
    Ok(Some(Fixture::parse(&text)?))
}

/// Polynomial JSON, `{"polynomials": [...]}`, a JSON array of polynomials,
/// `solve` output (`{"elements": [...]}`) or a fixture file (its listed basis).
pub fn load_polys(path: &str) -> Result<Vec<PuiseuxPoly>> {
    let text = read_source(path)?;
    let value = parse_value(&text, path)?;
    let list = if value.get("terms").is_some() {
        vec![value]
    } else if let Some(Value::Array(v)) = value.get("polynomials") {
        v.clone()
    } else if let Some(Value::Array(v)) = value.get("elements") {
        v.clone()
    } else if let Some(Value::Array(v)) = value.get("printed_basis") {
        v.clone()
    } else if let Value::Array(v) = value {
        v
    } else {
        bail!("{path}: expected polynomial JSON with a \"terms\" field");
    };
    list.into_iter()
        .map(|v| serde_json::from_value(v).with_context(|| format!("{path}: bad polynomial")))
        .collect()
}

pub fn load_poly(path: &str) -> Result<PuiseuxPoly> {
    let mut polys = load_polys(path)?;
    match polys.len() {
        1 => Ok(polys.remove(0)),
        n => bail!("{path}: expected one polynomial, found {n}"),
    }
}

pub enum PlotInput {
    System(HornSystem),
    Support(Support),
}

/// A system, a polynomial (its support) or `{"points": [[s, t], ...]}`.
pub fn load_plot_input(path: &str) -> Result<PlotInput> {
    let text = read_source(path)?;
    let value = parse_value(&text, path)?;
    if let Some(points) = value.get("points") {
        let raw: Vec<(Value, Value)> =
            serde_json::from_value(points.clone()).context("points must be [s, t] pairs")?;
        let mut supp = Support::new();
        for (s, t) in raw {
            let r = |v: Value| -> Result<horn_core::Rational> {
                match v {
                    Value::String(s) => Ok(horn_core::exact::parse_rational(&s)?),
                    Value::Number(n) => n
                        .as_i64()
                        .map(horn_core::exact::int)
                        .ok_or_else(|| anyhow!("coordinate {n} is not an integer")),
                    other => bail!("bad coordinate {other}"),
                }
            };
            supp.insert(ExponentPoint::new(r(s)?, r(t)?));
        }
        return Ok(PlotInput::Support(supp));
    }
    if value.get("terms").is_some() {
        let p: PuiseuxPoly = serde_json::from_value(value)?;
        return Ok(PlotInput::Support(p.support()));
    }
    Ok(PlotInput::System(parse_system(&text)?))
}
