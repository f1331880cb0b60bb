//! Turning command-line flags into coefficients, fields and degree ranges.

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use artin_core::braid::{BraidedSpace, Family, LeftBraidedSpace};
use artin_core::complexes::Coefficients;
use artin_core::field::{Field, FieldElement};
use artin_core::fixtures::{parse_fixture_str, Fixture};

use crate::Failure;

/// One-dimensional scalars as given on the command line.
#[derive(Debug, Clone)]
pub struct OneDim {
    pub q: FieldElement,
    pub p: Option<FieldElement>,
    pub u: FieldElement,
}

/// Where coefficients come from, plus a printable description.
#[derive(Debug, Clone)]
pub struct CoefficientSource {
    pub one_dim: Option<OneDim>,
    pub fixture: Option<Fixture>,
    pub description: BTreeMap<String, String>,
}

pub fn parse_field(spec: &str) -> Result<Field, Failure> {
    Field::parse_spec(spec).map_err(|e| Failure::Usage(e.to_string()))
}

/// `q=1,p=-1,u=1`; u defaults to 1 and p may be omitted for braid groups.
pub fn parse_one_dim(text: &str, field: &Field) -> Result<OneDim, Failure> {
    let mut values: BTreeMap<String, FieldElement> = BTreeMap::new();
    for part in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let (key, raw) = part
            .split_once('=')
            .ok_or_else(|| Failure::Usage(format!("expected key=value in --onedim, got {part:?}")))?;
        let key = key.trim().to_ascii_lowercase();
        if !matches!(key.as_str(), "q" | "p" | "u") {
            return Err(Failure::Usage(format!("unknown --onedim key {key:?}; use q, p and u")));
        }
        let v = field.parse(raw).map_err(|e| Failure::Usage(format!("{key}: {e}")))?;
        if v.is_zero() {
            return Err(Failure::Usage(format!("{key} must be a unit")));
        }
        values.insert(key, v);
    }
    let q = values.remove("q").ok_or_else(|| Failure::Usage("--onedim needs q".into()))?;
    let u = values.remove("u").unwrap_or_else(|| field.one());
    Ok(OneDim { q, p: values.remove("p"), u })
}

pub fn load_fixture(path: &Path) -> Result<Fixture, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
    parse_fixture_str(&text).map_err(|e| Failure::Check(format!("fixture {}: {e}", path.display())))
}

impl CoefficientSource {
    pub fn new(onedim: Option<&str>, fixture: Option<&Path>, field_spec: &str) -> Result<Self, Failure> {
        match (onedim, fixture) {
            (Some(_), Some(_)) => Err(Failure::Usage("give either --onedim or --fixture, not both".into())),
            (None, None) => Err(Failure::Usage("coefficients are required: --onedim or --fixture".into())),
            (Some(text), None) => {
                let field = parse_field(field_spec)?;
                let one = parse_one_dim(text, &field)?;
                let mut description = BTreeMap::from([("q".to_string(), one.q.render())]);
                if let Some(p) = &one.p {
                    description.insert("p".into(), p.render());
                    description.insert("u".into(), one.u.render());
                }
                Ok(CoefficientSource { one_dim: Some(one), fixture: None, description })
            }
            (None, Some(path)) => {
                let fx = load_fixture(path)?;
                let mut description = BTreeMap::from([
                    ("fixture".to_string(), path.display().to_string()),
                    ("dim_v".to_string(), fx.dim_v().to_string()),
                ]);
                if let Fixture::LeftBraided(s) = &fx {
                    description.insert("dim_w".into(), s.dim_w().to_string());
                }
                Ok(CoefficientSource { one_dim: None, fixture: Some(fx), description })
            }
        }
    }

    pub fn dim_v(&self) -> usize {
        self.fixture.as_ref().map_or(1, Fixture::dim_v)
    }

    /// Coefficients for the given family.
    pub fn coefficients(&self, family: Family) -> Result<Coefficients, Failure> {
        let err = |e: artin_core::Error| Failure::Usage(e.to_string());
        match (&self.one_dim, &self.fixture, family) {
            (Some(one), _, Family::A) => Ok(Coefficients::Braided(BraidedSpace::one_dim(&one.q).map_err(err)?)),
            (Some(one), _, Family::B) => {
                let p = one.p.as_ref().ok_or_else(|| Failure::Usage("type-B coefficients need p".into()))?;
                Ok(Coefficients::LeftBraided(LeftBraidedSpace::one_dim(&one.q, p, Some(&one.u)).map_err(err)?))
            }
            (None, Some(Fixture::Braided(s)), Family::A) => Ok(Coefficients::Braided(s.clone())),
            (None, Some(Fixture::LeftBraided(s)), Family::A) => Ok(Coefficients::Braided(s.braided_part())),
            (None, Some(Fixture::LeftBraided(s)), Family::B) => Ok(Coefficients::LeftBraided(s.clone())),
            (None, Some(Fixture::Braided(_)), Family::B) => {
                Err(Failure::Usage("the fixture has no tau; type-B homology needs a left-braided space".into()))
            }
            (None, None, _) => unreachable!("checked in new"),
        }
    }

    /// (q, p) when the closed-form tables apply.
    pub fn oracle_params(&self, family: Family) -> Option<(FieldElement, FieldElement)> {
        match (family, &self.one_dim) {
            (Family::B, Some(OneDim { q, p: Some(p), .. })) => Some((q.clone(), p.clone())),
            _ => None,
        }
    }
}

/// `4`, `1..6`, `1-6` or `1,3,5`.
pub fn parse_range(text: &str) -> Result<Vec<usize>, Failure> {
    let bad = || Failure::Usage(format!("bad n range {text:?}; use 1..6, 1-6 or 1,3,5"));
    let t = text.trim();
    let bounds = t.split_once("..=").or_else(|| t.split_once("..")).or_else(|| t.split_once('-'));
    if let Some((a, b)) = bounds {
        let a: usize = a.trim().parse().map_err(|_| bad())?;
        let b: usize = b.trim().parse().map_err(|_| bad())?;
        if a > b {
            return Err(bad());
        }
        return Ok((a..=b).collect());
    }
    t.split(',').map(|s| s.trim().parse::<usize>().map_err(|_| bad())).collect()
}

/// Rejects n beyond the default caps unless explicitly allowed.
pub fn check_cap(n: usize, dim_v: usize, allow_large: bool) -> Result<(), Failure> {
    let cap = if dim_v <= 1 { 8 } else { 4 };
    if n <= cap {
        return Ok(());
    }
    let cells = (n + 1) as u128 * (1u128 << n.min(100)) * (dim_v as u128).pow(n as u32);
    if allow_large {
        eprintln!("warning: n={n} exceeds the default cap {cap}; about {cells} basis elements in the top complex");
        Ok(())
    } else {
        Err(Failure::Usage(format!(
            "n={n} exceeds the cap {cap} for dim_v={dim_v} (about {cells} basis elements); pass --allow-large to run anyway"
        )))
    }
}
