//! Rendering results as text, CSV or JSON. Output depends only on the inputs.

use std::fmt::Write as _;

use clap::ValueEnum;
use serde_json::{json, Map, Value};

use artin_core::braid::Family;
use artin_core::complexes::iso::IsoReport;
use artin_core::complexes::HomologyTable;
use artin_core::oracle::{CaseTag, ExpectedTable};

use crate::verify::CheckResult;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Csv,
    Json,
}

/// One computed table and, when available, the closed-form one.
pub struct Row {
    pub table: HomologyTable,
    pub tag: Option<CaseTag>,
    pub expected: Option<ExpectedTable>,
}

impl Row {
    pub fn matches(&self) -> Option<bool> {
        self.expected.as_ref().map(|e| e.dims_vec() == self.table.dims_vec())
    }
}

pub struct Comparison {
    pub family: Family,
    pub n: usize,
    pub tables: Vec<HomologyTable>,
    pub isos: Vec<(String, Result<IsoReport, String>)>,
    pub expected: Option<(CaseTag, ExpectedTable)>,
}

impl Comparison {
    pub fn routes_agree(&self) -> bool {
        self.tables.windows(2).all(|w| w[0].dims == w[1].dims)
    }

    pub fn oracle_match(&self) -> Option<bool> {
        let (_, e) = self.expected.as_ref()?;
        Some(self.tables.iter().all(|t| t.dims_vec() == e.dims_vec()))
    }

    pub fn agree(&self) -> bool {
        self.routes_agree() && self.isos.iter().all(|(_, r)| r.is_ok()) && self.oracle_match() != Some(false)
    }
}

fn dims_json(dims: &[usize]) -> Value {
    Value::Object(dims.iter().enumerate().map(|(j, d)| (j.to_string(), json!(d))).collect::<Map<_, _>>())
}

fn coefficients_text(t: &HomologyTable) -> String {
    t.coefficients.iter().map(|(k, v)| format!("{k}={v}")).collect::<Vec<_>>().join(",")
}

fn row_json(r: &Row) -> Value {
    let t = &r.table;
    json!({
        "group": t.family.to_string(),
        "n": t.n,
        "field": t.field.to_json(),
        "coefficients": t.coefficients,
        "route": t.route.to_string(),
        "dims": dims_json(&t.dims_vec()),
        "case": r.tag.map(|c| c.to_string()),
        "expected": r.expected.as_ref().map(|e| dims_json(&e.dims_vec())),
        "oracle_match": r.matches(),
    })
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values serialize");
    s.push('\n');
    s
}

fn dims_line(dims: &[usize]) -> String {
    dims.iter().map(|d| format!("{d:>3}")).collect()
}

pub fn homology(rows: &[Row], format: Format) -> String {
    match format {
        Format::Json => {
            if let [single] = rows {
                pretty(&row_json(single))
            } else {
                pretty(&Value::Array(rows.iter().map(row_json).collect()))
            }
        }
        Format::Csv => {
            let mut out = String::from("n,j,dim\n");
            for r in rows {
                for line in r.table.csv_rows() {
                    out.push_str(&line);
                    out.push('\n');
                }
            }
            out
        }
        Format::Text => {
            let mut out = String::new();
            for r in rows {
                let t = &r.table;
                let _ = writeln!(out, "{}_{} over {} [{}], route {}", t.family, t.n, t.field, coefficients_text(t), t.route);
                let _ = writeln!(out, "  j   {}", dims_line(&(0..=t.n).collect::<Vec<_>>()));
                let _ = writeln!(out, "  dim {}", dims_line(&t.dims_vec()));
                if let (Some(tag), Some(e)) = (r.tag, &r.expected) {
                    let verdict = if r.matches() == Some(true) { "match" } else { "MISMATCH" };
                    let _ = writeln!(out, "  expected ({tag}) {} : {verdict}", dims_line(&e.dims_vec()));
                }
            }
            out
        }
    }
}

fn iso_json(r: &Result<IsoReport, String>) -> Value {
    match r {
        Ok(rep) => json!({"ok": true, "degrees": rep.degrees, "basis_elements": rep.basis_elements, "entries": rep.entries}),
        Err(e) => json!({"ok": false, "error": e}),
    }
}

pub fn comparison(c: &Comparison, format: Format) -> String {
    match format {
        Format::Json => {
            let routes: Map<String, Value> =
                c.tables.iter().map(|t| (t.route.to_string(), dims_json(&t.dims_vec()))).collect();
            let isos: Map<String, Value> = c.isos.iter().map(|(k, r)| (k.clone(), iso_json(r))).collect();
            let first = c.tables.first();
            pretty(&json!({
                "group": c.family.to_string(),
                "n": c.n,
                "field": first.map(|t| t.field.to_json()),
                "coefficients": first.map(|t| t.coefficients.clone()),
                "routes": routes,
                "routes_agree": c.routes_agree(),
                "isomorphisms": isos,
                "case": c.expected.as_ref().map(|(tag, _)| tag.to_string()),
                "oracle_match": c.oracle_match(),
                "agree": c.agree(),
            }))
        }
        Format::Csv => {
            let mut out = String::from("route,n,j,dim\n");
            for t in &c.tables {
                for line in t.csv_rows() {
                    let _ = writeln!(out, "{},{line}", t.route);
                }
            }
            out
        }
        Format::Text => {
            let mut out = String::new();
            let _ = writeln!(out, "{}_{}: comparing routes", c.family, c.n);
            for t in &c.tables {
                let _ = writeln!(out, "  route {} dims {}", t.route, dims_line(&t.dims_vec()));
            }
            if let Some((tag, e)) = &c.expected {
                let _ = writeln!(out, "  expected ({tag}) {}", dims_line(&e.dims_vec()));
            }
            for (name, r) in &c.isos {
                match r {
                    Ok(rep) => {
                        let _ = writeln!(
                            out,
                            "  {name}: isomorphic ({} degrees, {} basis elements, {} entries)",
                            rep.degrees, rep.basis_elements, rep.entries
                        );
                    }
                    Err(e) => {
                        let _ = writeln!(out, "  {name}: FAILED {e}");
                    }
                }
            }
            let _ = writeln!(out, "{}", if c.agree() { "all routes agree" } else { "DISAGREEMENT" });
            out
        }
    }
}

pub fn verification(results: &[CheckResult], format: Format) -> String {
    let passed = results.iter().filter(|c| c.passed).count();
    match format {
        Format::Json => pretty(&json!({
            "checks": results.iter().map(|c| json!({
                "suite": c.suite,
                "name": c.name,
                "kind": c.kind,
                "passed": c.passed,
                "detail": c.detail,
            })).collect::<Vec<_>>(),
            "passed": passed,
            "total": results.len(),
        })),
        Format::Csv => {
            let mut out = String::from("suite,name,kind,passed\n");
            for c in results {
                let _ = writeln!(out, "{},{},{},{}", c.suite, c.name, c.kind, c.passed);
            }
            out
        }
        Format::Text => {
            let mut out = String::new();
            for c in results {
                let status = if c.passed { "PASS" } else { "FAIL" };
                let _ = writeln!(out, "{status} [{}/{}] {}: {}", c.suite, c.kind, c.name, c.detail);
            }
            let _ = writeln!(out, "{passed} of {} checks passed", results.len());
            out
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use artin_core::braid::LeftBraidedSpace;
    use artin_core::complexes::{artin_homology, Coefficients, Route};
    use artin_core::field::Field;
    use artin_core::oracle::expected_homology;

    fn row(p: i64, expected: ExpectedTable) -> Row {
        let f = Field::rationals();
        let s = LeftBraidedSpace::one_dim(&f.one(), &f.from_int(p), Some(&f.one())).unwrap();
        let table = artin_homology(Family::B, 2, &Coefficients::LeftBraided(s), Route::D, None).unwrap();
        Row { table, tag: Some(CaseTag::UnityR { m: 2, r: 2 }), expected: Some(expected) }
    }

    #[test]
    fn mismatch_is_flagged() {
        let tag = CaseTag::UnityR { m: 2, r: 2 };
        let good = row(1, expected_homology(tag, 2));
        assert_eq!(good.matches(), Some(true));
        let bad = row(-1, expected_homology(tag, 2));
        assert_eq!(bad.matches(), Some(false));
        assert!(homology(&[bad], Format::Text).contains("MISMATCH"));
    }

    #[test]
    fn csv_has_one_row_per_degree() {
        let r = row(1, expected_homology(CaseTag::UnityR { m: 2, r: 2 }, 2));
        assert_eq!(homology(&[r], Format::Csv), "n,j,dim\n2,0,1\n2,1,2\n2,2,1\n");
    }
}
