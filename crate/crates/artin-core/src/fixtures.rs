//! Coefficient fixtures: built-in braided spaces and a JSON format for
//! user-supplied ones.
//!
//! ```json
//! {"field": "Q", "dim_v": 2, "dim_w": 2,
//!  "sigma": [[0, 0, "2"], [2, 1, "1"], ...], "tau": [...], "phi": [...]}
//! ```
//!
//! Matrices are `[row, col, value]` triplets on little-endian tensor bases.
//! Without `tau` the fixture is a braided space; `"kind": "squared_braiding"`
//! builds (V, V, σ, σ², φ = σ) from `sigma` alone.

use serde_json::Value;

use crate::braid::{check_braid_equation, BraidedSpace, LeftBraidedSpace};
use crate::error::{Error, Result};
use crate::field::{Field, FieldElement};
use crate::linear::{apply_on_block, basis_vector, LinearMap};

#[derive(Debug, Clone)]
pub enum Fixture {
    Braided(BraidedSpace),
    LeftBraided(LeftBraidedSpace),
}

impl Fixture {
    pub fn dim_v(&self) -> usize {
        match self {
            Fixture::Braided(s) => s.dim_v(),
            Fixture::LeftBraided(s) => s.dim_v(),
        }
    }

    pub fn field(&self) -> &Field {
        match self {
            Fixture::Braided(s) => s.field(),
            Fixture::LeftBraided(s) => s.field(),
        }
    }
}

/// The Hecke-type R-matrix on a 2-dimensional space: t on e₁⊗e₁ and e₂⊗e₂,
/// the flip on mixed tensors, and t − t⁻¹ on the diagonal mixed entry.
pub fn hecke_sigma(t: &FieldElement) -> Result<LinearMap> {
    let f = t.field();
    let diff = t - &t.inv()?;
    LinearMap::from_triplets(
        f,
        4,
        4,
        vec![(0, 0, t.clone()), (2, 1, f.one()), (1, 2, f.one()), (1, 1, diff), (3, 3, t.clone())],
    )
}

pub fn hecke_space(t: &FieldElement) -> Result<BraidedSpace> {
    BraidedSpace::new(2, hecke_sigma(t)?)
}

/// (V, V, σ, σ², σ) over the Hecke-type braiding.
pub fn squared_hecke(t: &FieldElement) -> Result<LeftBraidedSpace> {
    LeftBraidedSpace::squared_braiding(&hecke_space(t)?)
}

fn at(path: &str, e: Error) -> Error {
    Error::parse(format!("{path}: {e}"))
}

fn parse_usize(v: &Value, key: &str) -> Result<usize> {
    v.get(key)
        .and_then(Value::as_u64)
        .map(|x| x as usize)
        .ok_or_else(|| Error::parse(format!("{key}: expected a positive integer")))
}

fn parse_map(field: &Field, v: &Value, key: &str, size: usize) -> Result<Option<LinearMap>> {
    let Some(raw) = v.get(key) else { return Ok(None) };
    let items = raw.as_array().ok_or_else(|| Error::parse(format!("{key}: expected a list of triplets")))?;
    let mut entries = Vec::with_capacity(items.len());
    for (k, item) in items.iter().enumerate() {
        let path = format!("{key}[{k}]");
        let t = item.as_array().filter(|t| t.len() == 3).ok_or_else(|| Error::parse(format!("{path}: expected [row, col, value]")))?;
        let idx = |x: &Value, what: &str| -> Result<usize> {
            let i = x.as_u64().ok_or_else(|| Error::parse(format!("{path}: {what} is not an integer")))? as usize;
            if i >= size {
                return Err(Error::parse(format!("{path}: {what} {i} is outside 0..{size}")));
            }
            Ok(i)
        };
        let value = FieldElement::from_json(field, &t[2]).map_err(|e| at(&path, e))?;
        entries.push((idx(&t[0], "row")?, idx(&t[1], "col")?, value));
    }
    LinearMap::from_triplets(field, size, size, entries).map(Some).map_err(|e| at(key, e))
}

fn parse_field(v: &Value) -> Result<Field> {
    match v.get("field") {
        None => Ok(Field::rationals()),
        Some(Value::String(s)) => Field::parse_spec(s).map_err(|e| at("field", e)),
        Some(obj) => Field::from_json(obj).map_err(|e| at("field", e)),
    }
}

/// The first basis vector of V^{⊗3} on which the braid equation fails, with
/// the first coordinate where the two sides differ.
pub fn braid_equation_failure(sigma: &LinearMap, dim_v: usize) -> Option<String> {
    let field = sigma.field();
    let block = dim_v * dim_v;
    for k in 0..dim_v.pow(3) {
        let e = basis_vector(field, k);
        let lhs = apply_on_block(sigma, 1, block, &apply_on_block(sigma, dim_v, block, &apply_on_block(sigma, 1, block, &e)));
        let rhs = apply_on_block(sigma, dim_v, block, &apply_on_block(sigma, 1, block, &apply_on_block(sigma, dim_v, block, &e)));
        if lhs != rhs {
            let coord = lhs
                .keys()
                .chain(rhs.keys())
                .copied()
                .find(|c| lhs.get(c) != rhs.get(c))
                .expect("vectors differ");
            let show = |v: &crate::linear::Vector| v.get(&coord).map(|x| x.render()).unwrap_or_else(|| "0".into());
            return Some(format!(
                "braid equation fails on basis vector {k} at coordinate {coord}: {} vs {}",
                show(&lhs),
                show(&rhs)
            ));
        }
    }
    None
}

pub fn parse_fixture(v: &Value) -> Result<Fixture> {
    let field = parse_field(v)?;
    let dim_v = parse_usize(v, "dim_v")?;
    let sigma = parse_map(&field, v, "sigma", dim_v * dim_v)?.ok_or_else(|| Error::parse("sigma: missing"))?;
    if !check_braid_equation(&sigma, dim_v)? {
        let detail = braid_equation_failure(&sigma, dim_v).unwrap_or_default();
        return Err(Error::invalid(format!("sigma: {detail}")));
    }
    let kind = v.get("kind").and_then(Value::as_str).unwrap_or("");
    if kind == "squared_braiding" {
        return Ok(Fixture::LeftBraided(LeftBraidedSpace::squared_braiding(&BraidedSpace::new(dim_v, sigma)?)?));
    }
    if v.get("tau").is_none() {
        return Ok(Fixture::Braided(BraidedSpace::new(dim_v, sigma)?));
    }
    let dim_w = parse_usize(v, "dim_w")?;
    let tau = parse_map(&field, v, "tau", dim_v * dim_w)?.expect("present");
    let phi = parse_map(&field, v, "phi", dim_v * dim_w)?;
    Ok(Fixture::LeftBraided(LeftBraidedSpace::new(dim_v, dim_w, sigma, tau, phi)?))
}

pub fn parse_fixture_str(text: &str) -> Result<Fixture> {
    let v: Value = serde_json::from_str(text).map_err(|e| Error::parse(format!("fixture is not JSON: {e}")))?;
    parse_fixture(&v)
}

/// Serializes σ (and τ, φ when present) in the fixture format.
pub fn fixture_to_json(fixture: &Fixture) -> Value {
    let triplets = |m: &LinearMap| -> Value {
        Value::Array(
            m.triplets()
                .into_iter()
                .map(|(r, c, x)| serde_json::json!([r, c, x.to_json()]))
                .collect(),
        )
    };
    match fixture {
        Fixture::Braided(s) => serde_json::json!({
            "field": s.field().to_json(),
            "dim_v": s.dim_v(),
            "sigma": triplets(s.sigma()),
        }),
        Fixture::LeftBraided(s) => {
            let mut v = serde_json::json!({
                "field": s.field().to_json(),
                "dim_v": s.dim_v(),
                "dim_w": s.dim_w(),
                "sigma": triplets(s.sigma()),
                "tau": triplets(s.tau()),
            });
            if let Some(phi) = s.phi() {
                v["phi"] = triplets(phi);
            }
            v
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let f = Field::rationals();
        let s = squared_hecke(&f.from_int(2)).unwrap();
        let fx = Fixture::LeftBraided(s.clone());
        let back = parse_fixture(&fixture_to_json(&fx)).unwrap();
        match back {
            Fixture::LeftBraided(b) => {
                assert_eq!(b.sigma(), s.sigma());
                assert_eq!(b.tau(), s.tau());
                assert_eq!(b.phi(), s.phi());
            }
            Fixture::Braided(_) => panic!("lost tau"),
        }
    }

    #[test]
    fn corrupted_sigma_is_located() {
        let f = Field::rationals();
        let mut v = fixture_to_json(&Fixture::Braided(hecke_space(&f.from_int(2)).unwrap()));
        v["sigma"][0][2] = Value::String("5".into());
        let err = parse_fixture(&v).unwrap_err().to_string();
        assert!(err.contains("basis vector"), "{err}");
        v["sigma"][1][0] = Value::from(9);
        let err = parse_fixture(&v).unwrap_err().to_string();
        assert!(err.contains("sigma[1]"), "{err}");
    }

    #[test]
    fn squared_kind() {
        let text = r#"{"kind":"squared_braiding","dim_v":1,"sigma":[[0,0,"3"]]}"#;
        match parse_fixture_str(text).unwrap() {
            Fixture::LeftBraided(s) => assert_eq!(s.tau().column(0)[0].1, Field::rationals().from_int(9)),
            Fixture::Braided(_) => panic!("expected a left-braided space"),
        }
    }
}
