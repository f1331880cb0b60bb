//! Verification suites run by `artin verify`.

use std::collections::HashSet;
use std::path::Path;

use clap::ValueEnum;

use artin_core::braid::{ArtinRep, BraidedSpace, Family, IndModel, InducedRep, LeftBraidedSpace};
use artin_core::complexes::{
    artin_homology, build_c, build_c_induced, build_d, build_f, check_d_squared, iso_check_d_vs_c, iso_check_f_vs_c,
    Coefficients, Route,
};
use artin_core::field::{Field, FieldElement};
use artin_core::fixtures::{squared_hecke, Fixture};
use artin_core::oracle::{classify, expected_homology};
use artin_core::shuffle_algebra::{
    bimodule_left_mult, bimodule_right_mult, closed_form_xy, closed_form_yx, left_module_matrix, right_module_matrix,
    substitute_change_of_basis, AlgebraElement, BimoduleElement, OneDimParams,
};
use artin_core::shuffles::{
    c_constant, c_marked, c_marked_enumerated, decompose_marked, enumerate_marked, quantum_binomial, MarkKind,
};

use crate::job::load_fixture;
use crate::Failure;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Combinatorics,
    Algebra,
    Complexes,
    Routes,
    All,
}

/// Outcome of one property check.
#[derive(Debug, Clone)]
pub struct CheckResult {
    pub suite: &'static str,
    pub name: String,
    /// How the property is established: closed form against enumeration, identity, and so on.
    pub kind: &'static str,
    pub passed: bool,
    pub detail: String,
}

type Outcome = Result<String, String>;

fn record(out: &mut Vec<CheckResult>, suite: &'static str, name: &str, kind: &'static str, outcome: Outcome) {
    let (passed, detail) = match outcome {
        Ok(d) => (true, d),
        Err(d) => (false, d),
    };
    out.push(CheckResult { suite, name: name.to_string(), kind, passed, detail });
}

fn s<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn binom(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn sign(e: usize) -> i64 {
    if e.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

fn constant_is_binomial(max: usize) -> Outcome {
    let f = Field::rationals();
    let minus_one = f.from_int(-1);
    let mut count = 0;
    for total in 0..=max {
        for q in 0..=total {
            let p = total - q;
            let qb = quantum_binomial(p + q, q, &minus_one).map_err(s)?;
            if qb != f.from_int(c_constant(p, q)) {
                return Err(format!("p={p} q={q}: {} vs {qb}", c_constant(p, q)));
            }
            count += 1;
        }
    }
    Ok(format!("{count} pairs with p+q <= {max}"))
}

fn constant_convolution(max: usize) -> Outcome {
    let bound = max.min(6);
    for p in 0..=bound {
        for q in 0..=bound {
            for h in 0..=p {
                let sum: i64 = (0..=h.min(q))
                    .map(|k| sign(k * (p - h + k)) * c_constant(h - k, k) * c_constant(p - h + k, q - k))
                    .sum();
                if sum != c_constant(p, q) {
                    return Err(format!("p={p} q={q} h={h}: {sum} vs {}", c_constant(p, q)));
                }
            }
        }
    }
    Ok(format!("p, q <= {bound}"))
}

fn marked_counts(max: usize) -> Outcome {
    let bound = max.min(7);
    let mut count = 0;
    for p in 1..=bound {
        for q in 1..=bound.saturating_sub(p) {
            for (kind, hs, js) in [(MarkKind::Right, q, p), (MarkKind::Left, p, q)] {
                for h in 0..=hs {
                    for j in 0..js {
                        let closed = c_marked(kind, p, q, h, j).map_err(s)?;
                        let counted = c_marked_enumerated(kind, p, q, h, j).map_err(s)?;
                        if closed != counted {
                            return Err(format!("{kind:?} p={p} q={q} h={h} j={j}: {closed} vs {counted}"));
                        }
                        count += 1;
                    }
                }
            }
        }
    }
    Ok(format!("{count} signed sums with p+q <= {bound}"))
}

fn marked_decomposition(max: usize) -> Outcome {
    let bound = max.min(7);
    let mut count = 0;
    for p in 1..=bound {
        for q in 1..=bound.saturating_sub(p) {
            for (kind, hs, js) in [(MarkKind::Right, q, p), (MarkKind::Left, p, q)] {
                for h in 0..=hs {
                    for j in 0..js {
                        let shuffles = enumerate_marked(kind, p, q, h, j).map_err(s)?;
                        let expect = match kind {
                            MarkKind::Right => binom(j + h, h) * binom(p + q - j - h - 1, q - h),
                            MarkKind::Left => binom(h + j, j) * binom(p + q - h - j - 1, p - h),
                        };
                        if shuffles.len() != expect {
                            return Err(format!("{kind:?} p={p} q={q} h={h} j={j}: {} vs {expect}", shuffles.len()));
                        }
                        let mut seen = HashSet::new();
                        for sh in &shuffles {
                            let d = decompose_marked(sh).map_err(s)?;
                            if d.recompose() != sh.base.image() {
                                return Err(format!("{kind:?} p={p} q={q} h={h} j={j}: recomposition differs"));
                            }
                            seen.insert((d.beta.image().to_vec(), d.delta.image().to_vec()));
                        }
                        if seen.len() != shuffles.len() {
                            return Err(format!("{kind:?} p={p} q={q} h={h} j={j}: not injective"));
                        }
                        count += shuffles.len();
                    }
                }
            }
            for j in 0..p {
                let total: usize = (0..=q)
                    .map(|h| enumerate_marked(MarkKind::Right, p, q, h, j).map(|v| v.len()).unwrap_or(0))
                    .sum();
                if total != binom(p + q, p) {
                    return Err(format!("p={p} q={q} j={j}: marked classes do not partition"));
                }
            }
        }
    }
    Ok(format!("{count} marked shuffles"))
}

fn algebra_params() -> Result<Vec<OneDimParams>, String> {
    let q = Field::rationals();
    let c3 = Field::cyclotomic(3).map_err(s)?;
    let z = c3.generator().map_err(s)?;
    Ok(vec![
        OneDimParams::new(q.from_int(2), q.from_int(3), q.from_int(5)).map_err(s)?,
        OneDimParams::new(q.from_int(-1), q.from_ratio(1, 2), q.from_int(3)).map_err(s)?,
        OneDimParams::new(z, c3.from_int(2), c3.from_ratio(-1, 3)).map_err(s)?,
    ])
}

fn closed_forms(max: usize) -> Outcome {
    let mut count = 0;
    for pr in algebra_params()? {
        let f = pr.field().clone();
        let space = pr.space().map_err(s)?;
        for n in 1..max {
            for m in 1..=max - n {
                let y = BimoduleElement::y(&f, n, n);
                let x = AlgebraElement::x(&f, m);
                if bimodule_left_mult(&x, &y, &space).map_err(s)? != closed_form_xy(n, m, &pr).map_err(s)? {
                    return Err(format!("x_{m} y_{n} at q={}", pr.q));
                }
                if bimodule_right_mult(&y, &x, &space).map_err(s)? != closed_form_yx(n, m, &pr).map_err(s)? {
                    return Err(format!("y_{n} x_{m} at q={}", pr.q));
                }
                count += 2;
            }
        }
    }
    Ok(format!("{count} products with n+m <= {max}"))
}

fn change_of_basis(max: usize) -> Outcome {
    let pr = &algebra_params()?[0];
    let bound = max.saturating_sub(1);
    for n in 1..bound {
        for m in 1..=bound - n {
            if substitute_change_of_basis(n, m, pr).map_err(s)? != closed_form_yx(n, m, pr).map_err(s)? {
                return Err(format!("n={n} m={m}"));
            }
        }
    }
    Ok(format!("n+m <= {bound}"))
}

fn binomial_at_roots(max: usize) -> Outcome {
    for m in 1..=6u32 {
        let f = Field::cyclotomic(m).map_err(s)?;
        let z = f.generator().map_err(s)?;
        for n in 1..=max + 4 {
            let b = quantum_binomial(n - 1 + m as usize, m as usize, &z).map_err(s)?;
            let want = f.from_int(n.div_ceil(m as usize) as i64);
            if b != want {
                return Err(format!("m={m} n={n}: {b} vs {want}"));
            }
        }
    }
    Ok(format!("m <= 6, n <= {}", max + 4))
}

fn module_matrices(max: usize) -> Outcome {
    for pr in algebra_params()? {
        let f = pr.field().clone();
        for n in 1..=max {
            let left = left_module_matrix(n, &pr).map_err(s)?;
            let right = right_module_matrix(n, &pr).map_err(s)?;
            for k in 1..=n {
                for i in 1..k {
                    if !left[i - 1][k - 1].is_zero() || !right[i - 1][k - 1].is_zero() {
                        return Err(format!("n={n}: product {k} has a y_{i} component"));
                    }
                }
                let diag = pr.u.pow((n - k) as i64).map_err(s)? * pr.q.pow(((k - 1) * (n - k)) as i64).map_err(s)?;
                if left[k - 1][k - 1] != diag || right[k - 1][k - 1] != f.one() {
                    return Err(format!("n={n} k={k}: diagonal entries"));
                }
            }
        }
    }
    Ok(format!("n <= {max}"))
}

struct Params {
    name: &'static str,
    field: Field,
    q: &'static str,
    p: &'static str,
}

impl Params {
    fn elements(&self) -> Result<(FieldElement, FieldElement), String> {
        Ok((self.field.parse(self.q).map_err(s)?, self.field.parse(self.p).map_err(s)?))
    }

    fn space(&self) -> Result<LeftBraidedSpace, String> {
        let (q, p) = self.elements()?;
        LeftBraidedSpace::one_dim(&q, &p, Some(&self.field.one())).map_err(s)
    }
}

fn param_sets() -> Result<Vec<Params>, String> {
    let q = Field::rationals;
    let c3 = Field::cyclotomic(3).map_err(s)?;
    Ok(vec![
        Params { name: "q=1,p=1", field: q(), q: "1", p: "1" },
        Params { name: "q=1,p=-1", field: q(), q: "1", p: "-1" },
        Params { name: "q=2,p=3", field: q(), q: "2", p: "3" },
        Params { name: "q=2,p=-1/2", field: q(), q: "2", p: "-1/2" },
        Params { name: "q=-z,p=2z", field: c3.clone(), q: "-z", p: "2*z" },
        Params { name: "q=-z,p=z", field: c3.clone(), q: "-z", p: "z" },
        Params { name: "q=-z,p=z^2", field: c3, q: "-z", p: "z^2" },
    ])
}

fn d_squared_all(space: &LeftBraidedSpace, nmax: usize) -> Result<usize, String> {
    let mut count = 0;
    for n in 0..=nmax {
        for model in [IndModel::Separable, IndModel::Generic] {
            if model == IndModel::Separable && !space.is_separable() {
                continue;
            }
            let ind = InducedRep::build(space, n, model).map_err(s)?;
            for c in [build_d(&ind), build_c_induced(&ind)] {
                check_d_squared(&c.map_err(s)?).map_err(|e| format!("n={n} {model:?}: {e}"))?;
                count += 1;
            }
        }
        if space.is_separable() {
            let f = build_f(&space.epsilon_twist().map_err(s)?, n + 1).map_err(s)?;
            check_d_squared(&f).map_err(|e| format!("n={n} F: {e}"))?;
            count += 1;
        }
    }
    Ok(count)
}

fn one_dim_d_squared(nmax: usize) -> Outcome {
    let mut count = 0;
    for set in param_sets()? {
        let dual = set.space()?.dual().map_err(s)?;
        count += d_squared_all(&dual, nmax).map_err(|e| format!("{}: {e}", set.name))?;
    }
    Ok(format!("{count} complexes, n <= {nmax}"))
}

fn fixture_d_squared(space: &LeftBraidedSpace, nmax: usize) -> Outcome {
    let count = d_squared_all(space, nmax)? + d_squared_all(&space.dual().map_err(s)?, nmax)?;
    Ok(format!("{count} complexes, n <= {nmax}"))
}

fn isomorphisms(nmax: usize) -> Outcome {
    let mut count = 0;
    for set in param_sets()? {
        let dual = set.space()?.dual().map_err(s)?;
        for n in 0..=nmax {
            for model in [IndModel::Separable, IndModel::Generic] {
                iso_check_d_vs_c(&dual, n, model).map_err(|e| format!("{} n={n} D~C {model:?}: {e}", set.name))?;
                count += 1;
            }
            iso_check_f_vs_c(&dual, n).map_err(|e| format!("{} n={n} F~C: {e}", set.name))?;
            count += 1;
        }
    }
    Ok(format!("{count} chain isomorphisms, n <= {nmax}"))
}

fn braid_groups(nmax: usize) -> Outcome {
    let f = Field::rationals();
    let trivial = Coefficients::Braided(BraidedSpace::one_dim(&f.one()).map_err(s)?);
    let top = nmax + 2;
    for n in 0..=top {
        let t = artin_homology(Family::A, n, &trivial, Route::C, None).map_err(s)?;
        let want: Vec<usize> = (0..=n).map(|j| usize::from(j == 0 || (j == 1 && n >= 2))).collect();
        if t.dims_vec() != want {
            return Err(format!("A_{n}: {:?} vs {want:?}", t.dims_vec()));
        }
    }
    Ok(format!("A_n, n <= {top}"))
}

fn routes_against_oracle(set: &Params, nmax: usize) -> Outcome {
    let (q, p) = set.elements()?;
    let tag = classify(&q, &p, nmax).map_err(s)?;
    let coeffs = Coefficients::LeftBraided(set.space()?);
    for n in 0..=nmax {
        let expected = expected_homology(tag, n).dims_vec();
        for route in [Route::C, Route::D, Route::F] {
            let got = artin_homology(Family::B, n, &coeffs, route, None).map_err(s)?.dims_vec();
            if got != expected {
                return Err(format!("n={n} route {route}: {got:?} vs {expected:?} ({tag})"));
            }
        }
    }
    Ok(format!("{tag}, n <= {nmax}, routes C/D/F"))
}

fn braided_fixture(space: &BraidedSpace, nmax: usize) -> Outcome {
    for n in 0..=nmax {
        let rep = ArtinRep::tensor_power(&space.dual().map_err(s)?, n).map_err(s)?;
        check_d_squared(&build_c(n, &rep).map_err(s)?).map_err(|e| format!("n={n}: {e}"))?;
    }
    Ok(format!("C(n), n <= {nmax}"))
}

fn fixture_routes(space: &LeftBraidedSpace, nmax: usize) -> Outcome {
    let coeffs = Coefficients::LeftBraided(space.clone());
    for n in 0..=nmax {
        let c = artin_homology(Family::B, n, &coeffs, Route::C, None).map_err(s)?;
        let d = artin_homology(Family::B, n, &coeffs, Route::D, None).map_err(s)?;
        if c.dims != d.dims {
            return Err(format!("n={n}: C {:?} vs D {:?}", c.dims_vec(), d.dims_vec()));
        }
    }
    Ok(format!("routes C and D agree, n <= {nmax}"))
}

pub fn run(suite: Suite, max: usize, nmax: usize, fixture: Option<&Path>) -> Result<Vec<CheckResult>, Failure> {
    if max == 0 {
        return Err(Failure::Usage("--max must be positive".into()));
    }
    let wants = |x: Suite| suite == Suite::All || suite == x;
    let mut out = Vec::new();
    if wants(Suite::Combinatorics) {
        let c = "combinatorics";
        record(&mut out, c, "shuffle constant equals the binomial at -1", "closed form", constant_is_binomial(max));
        record(&mut out, c, "convolution identity for shuffle constants", "identity", constant_convolution(max));
        record(&mut out, c, "marked constants match enumeration", "enumeration", marked_counts(max));
        record(&mut out, c, "marked shuffles decompose bijectively", "enumeration", marked_decomposition(max));
    }
    if wants(Suite::Algebra) {
        let c = "algebra";
        record(&mut out, c, "bimodule products match closed forms", "brute force", closed_forms(max));
        record(&mut out, c, "change of basis reproduces the right action", "identity", change_of_basis(max));
        record(&mut out, c, "binomials at roots of unity", "closed form", binomial_at_roots(max));
        record(&mut out, c, "module matrices are triangular with unit diagonal", "closed form", module_matrices(max));
    }
    if wants(Suite::Complexes) {
        let c = "complexes";
        let cap = nmax.min(3);
        record(&mut out, c, "d^2 = 0, one-dimensional coefficients", "exhaustive", one_dim_d_squared(nmax));
        let hecke = squared_hecke(&Field::rationals().from_int(2)).map_err(|e| Failure::Check(e.to_string()))?;
        record(&mut out, c, "d^2 = 0, squared Hecke fixture", "exhaustive", fixture_d_squared(&hecke, cap));
        record(&mut out, c, "chain isomorphisms D~C and F~C", "entrywise", isomorphisms(nmax));
        record(&mut out, c, "braid groups with trivial coefficients", "closed form", braid_groups(nmax));
    }
    if wants(Suite::Routes) {
        for set in param_sets().map_err(Failure::Check)? {
            let name = format!("routes agree with closed form at {} over {}", set.name, set.field);
            record(&mut out, "routes", &name, "closed form", routes_against_oracle(&set, nmax));
        }
    }
    if let Some(path) = fixture {
        let c = "fixture";
        let cap = nmax.min(3);
        match load_fixture(path) {
            Err(Failure::Check(msg)) | Err(Failure::Usage(msg)) => record(&mut out, c, "fixture loads", "validation", Err(msg)),
            Ok(fx) => {
                record(&mut out, c, "fixture loads", "validation", Ok(format!("dim_v={}", fx.dim_v())));
                match fx {
                    Fixture::Braided(space) => record(&mut out, c, "d^2 = 0", "exhaustive", braided_fixture(&space, cap)),
                    Fixture::LeftBraided(space) => {
                        record(&mut out, c, "d^2 = 0", "exhaustive", fixture_d_squared(&space, cap));
                        record(&mut out, c, "routes agree", "comparison", fixture_routes(&space, cap));
                    }
                }
            }
        }
    }
    Ok(out)
}
