//! Artin-group homology from the complexes: dualize the coefficients, build
//! one route's complex, take homology, and re-index degrees.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde_json::{json, Map, Value};

use super::{build_c, build_c_induced, build_d, build_f, homology_dims, GradedComplex};
use crate::braid::{ArtinRep, BraidedSpace, Family, GenRep, IndModel, InducedRep, LeftBraidedSpace};
use crate::error::{Error, Result};
use crate::field::Field;

/// Which complex computes the homology.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Route {
    /// C(n+1) with induced coefficients (family B), or C(n) itself (family A).
    C,
    /// The punctured-plane complex D(n).
    D,
    /// The shuffle-algebra bar complex F(n+1).
    F,
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Route::C => "C",
            Route::D => "D",
            Route::F => "F",
        })
    }
}

impl FromStr for Route {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "C" | "C-INDUCED" => Ok(Route::C),
            "D" => Ok(Route::D),
            "F" => Ok(Route::F),
            other => Err(Error::parse(format!("unknown route {other:?}"))),
        }
    }
}

/// Where the coefficient representation comes from.
#[derive(Debug, Clone)]
pub enum Coefficients {
    /// V^{⊗n} for A_n.
    Braided(BraidedSpace),
    /// V^{⊗n}⊗W for B_n (or V^{⊗n} for A_n).
    LeftBraided(LeftBraidedSpace),
    /// Explicit generator matrices.
    Rep { rep: GenRep, field: Field },
}

impl Coefficients {
    pub fn field(&self) -> &Field {
        match self {
            Coefficients::Braided(s) => s.field(),
            Coefficients::LeftBraided(s) => s.field(),
            Coefficients::Rep { field, .. } => field,
        }
    }
}

/// dim H_j of an Artin group, j = 0..=n, with how it was obtained.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomologyTable {
    pub family: Family,
    pub n: usize,
    pub route: Route,
    pub model: Option<IndModel>,
    pub field: Field,
    /// Display strings describing the coefficients, e.g. q, p, u.
    pub coefficients: BTreeMap<String, String>,
    pub dims: BTreeMap<usize, usize>,
    /// Homology of the complex itself, by complex degree.
    pub complex_dims: BTreeMap<i64, usize>,
    /// How group degree j maps to complex degree.
    pub convention: String,
}

impl HomologyTable {
    pub fn dim(&self, j: usize) -> usize {
        self.dims.get(&j).copied().unwrap_or(0)
    }

    pub fn dims_vec(&self) -> Vec<usize> {
        (0..=self.n).map(|j| self.dim(j)).collect()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.dims.iter().map(|(j, d)| if j % 2 == 0 { *d as i64 } else { -(*d as i64) }).sum()
    }

    pub fn to_json(&self) -> Value {
        let dims: Map<String, Value> = self.dims.iter().map(|(j, d)| (j.to_string(), json!(d))).collect();
        json!({
            "group": self.family.to_string(),
            "n": self.n,
            "field": self.field.to_json(),
            "coefficients": self.coefficients,
            "route": self.route.to_string(),
            "dims": dims,
            "convention": self.convention,
        })
    }

    /// `n,j,dim` rows without a header.
    pub fn csv_rows(&self) -> Vec<String> {
        self.dims.iter().map(|(j, d)| format!("{},{},{}", self.n, j, d)).collect()
    }
}

fn table(
    family: Family,
    n: usize,
    route: Route,
    model: Option<IndModel>,
    coeffs: &Coefficients,
    complex: &GradedComplex,
    top: i64,
    convention: String,
) -> Result<HomologyTable> {
    let complex_dims = homology_dims(complex)?;
    let dims = (0..=n)
        .map(|j| (j, complex_dims.get(&(top - j as i64)).copied().unwrap_or(0)))
        .collect();
    Ok(HomologyTable {
        family,
        n,
        route,
        model,
        field: coeffs.field().clone(),
        coefficients: BTreeMap::new(),
        dims,
        complex_dims,
        convention,
    })
}

fn default_model(space: &LeftBraidedSpace) -> IndModel {
    if space.is_separable() {
        IndModel::Separable
    } else {
        IndModel::Generic
    }
}

/// H_*(A_n; T) or H_*(B_n; L) over the coefficient field.
///
/// Family B: H_j = H_{2n−j}(D(n)⊗L*) = H_{2n+2−j}(C(n+1)⊗Ind L*) = H_{n+1−j}(F(n+1))
/// with F built over ε(L*). Family A: H_j = H_{2n−j}(C(n)⊗T*).
pub fn artin_homology(
    family: Family,
    n: usize,
    coeffs: &Coefficients,
    route: Route,
    model: Option<IndModel>,
) -> Result<HomologyTable> {
    let two_n = 2 * n as i64;
    match family {
        Family::A => {
            if route != Route::C {
                return Err(Error::invalid(format!("braid groups are computed on route C only, not {route}")));
            }
            let rep = match coeffs {
                Coefficients::Braided(s) => ArtinRep::tensor_power(&s.dual()?, n)?,
                Coefficients::LeftBraided(s) => ArtinRep::tensor_power(&s.braided_part().dual()?, n)?,
                Coefficients::Rep { rep, field } => {
                    if rep.family() != Family::A || rep.n() != n {
                        return Err(Error::invalid(format!("expected an A_{n} representation")));
                    }
                    ArtinRep::from_genrep(&rep.dual()?, field)?
                }
            };
            let c = build_c(n, &rep)?;
            table(family, n, route, None, coeffs, &c, two_n, "H_j = H_{2n-j}(C(n) (x) T*)".into())
        }
        Family::B => {
            let (ind, model) = match coeffs {
                Coefficients::Braided(_) => {
                    return Err(Error::invalid("type-B homology needs left-braided coefficients or a B_n representation"))
                }
                Coefficients::LeftBraided(s) => {
                    let dual = s.dual()?;
                    if route == Route::F {
                        if !dual.is_separable() {
                            return Err(Error::NotSeparable(
                                "route F needs a separated braiding; use route C or D".into(),
                            ));
                        }
                        let f = build_f(&dual.epsilon_twist()?, n + 1)?;
                        return table(
                            family,
                            n,
                            route,
                            None,
                            coeffs,
                            &f,
                            n as i64 + 1,
                            "H_j = H_{n+1-j}(F(n+1) over eps(L*))".into(),
                        );
                    }
                    let model = model.unwrap_or_else(|| default_model(&dual));
                    (InducedRep::build(&dual, n, model)?, model)
                }
                Coefficients::Rep { rep, field } => {
                    if route == Route::F {
                        return Err(Error::NotSeparable(
                            "route F needs left-braided coefficients with a separated braiding".into(),
                        ));
                    }
                    if rep.family() != Family::B || rep.n() != n {
                        return Err(Error::invalid(format!("expected a B_{n} representation")));
                    }
                    if model == Some(IndModel::Separable) {
                        return Err(Error::invalid("an explicit representation only has the generic induced model"));
                    }
                    (InducedRep::generic(&rep.dual()?, field)?, IndModel::Generic)
                }
            };
            match route {
                Route::D => {
                    let d = build_d(&ind)?;
                    table(family, n, route, Some(model), coeffs, &d, two_n, "H_j = H_{2n-j}(D(n) (x) L*)".into())
                }
                Route::C => {
                    let c = build_c_induced(&ind)?;
                    table(
                        family,
                        n,
                        route,
                        Some(model),
                        coeffs,
                        &c,
                        two_n + 2,
                        "H_j = H_{2n+2-j}(C(n+1) (x) Ind L*)".into(),
                    )
                }
                Route::F => unreachable!("handled above"),
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn one_dim(q: i64, p: i64, u: i64) -> Coefficients {
        let f = Field::rationals();
        Coefficients::LeftBraided(
            LeftBraidedSpace::one_dim(&f.from_int(q), &f.from_int(p), Some(&f.from_int(u))).unwrap(),
        )
    }

    #[test]
    fn trivial_b2_on_every_route() {
        let c = one_dim(1, 1, 1);
        for route in [Route::C, Route::D, Route::F] {
            let t = artin_homology(Family::B, 2, &c, route, None).unwrap();
            assert_eq!(t.dims_vec(), vec![1, 2, 1], "route {route}");
        }
    }

    #[test]
    fn odd_b_vanishes_at_p_minus_one() {
        let t = artin_homology(Family::B, 3, &one_dim(1, -1, 1), Route::D, None).unwrap();
        assert_eq!(t.dims_vec(), vec![0, 0, 0, 0]);
    }

    #[test]
    fn braid_group_a4() {
        let f = Field::rationals();
        let c = Coefficients::Braided(BraidedSpace::one_dim(&f.one()).unwrap());
        let t = artin_homology(Family::A, 4, &c, Route::C, None).unwrap();
        assert_eq!(t.dims_vec(), vec![1, 1, 0, 0, 0]);
        assert!(artin_homology(Family::A, 4, &c, Route::D, None).is_err());
    }

    #[test]
    fn route_f_rejects_non_separable() {
        let f = Field::rationals();
        let s = LeftBraidedSpace::one_dim(&f.one(), &f.one(), None).unwrap();
        let err = artin_homology(Family::B, 2, &Coefficients::LeftBraided(s), Route::F, None).unwrap_err();
        assert!(matches!(err, Error::NotSeparable(_)));
    }

    #[test]
    fn generic_model_matches_separable() {
        let c = one_dim(2, 3, 5);
        for n in 0..=3 {
            let a = artin_homology(Family::B, n, &c, Route::D, Some(IndModel::Separable)).unwrap();
            let b = artin_homology(Family::B, n, &c, Route::D, Some(IndModel::Generic)).unwrap();
            assert_eq!(a.dims, b.dims);
        }
    }

    #[test]
    fn json_shape() {
        let t = artin_homology(Family::B, 1, &one_dim(1, 1, 1), Route::D, None).unwrap();
        let v = t.to_json();
        assert_eq!(v["group"], "B");
        assert_eq!(v["route"], "D");
        assert_eq!(v["dims"]["0"], 1);
        assert_eq!(t.csv_rows(), vec!["1,0,1", "1,1,1"]);
    }
}
