//! Chain complexes computing braid and type-B Artin group homology, with
//! exact homology dimensions and cell-level comparisons between them.

mod artin;
mod bar;
mod fox_neuwirth;
pub mod iso;
mod punctured;

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::field::Field;
use crate::matrix::SparseMatrix;
use crate::par;
use crate::shuffles::Composition;

pub use artin::{artin_homology, Coefficients, HomologyTable, Route};
pub use bar::build_f;
pub use fox_neuwirth::{build_c, build_c_induced, build_c_untwisted};
pub use iso::{iso_check_d_vs_c, iso_check_f_vs_c};
pub use punctured::{build_d, build_d_untwisted};

/// A basis element of one of the three complexes.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BasisLabel {
    /// Fox–Neuwirth cell λ tensored with basis vector `rep` of the coefficients.
    Cell { parts: Composition, rep: usize },
    /// Punctured-plane cell (λ, i, j): the puncture sits in column `axis`
    /// with `below` points under it.
    Marked { parts: Composition, axis: usize, below: usize, rep: usize },
    /// Bar chain whose factors have degrees λ; factor `module_factor` carries W
    /// at offset `w_offset` inside it; `tensor` indexes the joint tensor.
    Chain { parts: Composition, module_factor: usize, w_offset: usize, tensor: usize },
}

impl fmt::Display for BasisLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BasisLabel::Cell { parts, rep } => write!(f, "{parts}|{rep}"),
            BasisLabel::Marked { parts, axis, below, rep } => write!(f, "{parts};i={axis};j={below}|{rep}"),
            BasisLabel::Chain { parts, module_factor, w_offset, tensor } => {
                write!(f, "{parts};M={module_factor};j={w_offset}|{tensor}")
            }
        }
    }
}

/// Finitely many degrees, each with a labelled basis and a boundary into the
/// degree below.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedComplex {
    field: Field,
    min_degree: i64,
    bases: Vec<Vec<BasisLabel>>,
    /// `boundaries[k]` maps degree `min_degree + k` to the degree below.
    boundaries: Vec<SparseMatrix>,
}

impl GradedComplex {
    /// Assembles a complex; `boundaries[k]` must have `bases[k-1].len()` rows
    /// (zero rows for the bottom degree) and `bases[k].len()` columns.
    pub fn new(field: &Field, min_degree: i64, bases: Vec<Vec<BasisLabel>>, boundaries: Vec<SparseMatrix>) -> Result<Self> {
        if bases.len() != boundaries.len() {
            return Err(Error::DimensionMismatch("one boundary per degree is required".into()));
        }
        for (k, d) in boundaries.iter().enumerate() {
            let below = if k == 0 { 0 } else { bases[k - 1].len() };
            if d.cols() != bases[k].len() || d.rows() != below {
                return Err(Error::DimensionMismatch(format!(
                    "boundary in degree {} is {}x{}, expected {}x{}",
                    min_degree + k as i64,
                    d.rows(),
                    d.cols(),
                    below,
                    bases[k].len()
                )));
            }
        }
        Ok(GradedComplex { field: field.clone(), min_degree, bases, boundaries })
    }

    pub fn empty(field: &Field) -> Self {
        GradedComplex { field: field.clone(), min_degree: 0, bases: Vec::new(), boundaries: Vec::new() }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    /// Degrees present, ascending.
    pub fn degrees(&self) -> impl Iterator<Item = i64> + '_ {
        (0..self.bases.len()).map(move |k| self.min_degree + k as i64)
    }

    fn slot(&self, degree: i64) -> Option<usize> {
        let k = degree - self.min_degree;
        (k >= 0 && (k as usize) < self.bases.len()).then_some(k as usize)
    }

    pub fn basis(&self, degree: i64) -> &[BasisLabel] {
        self.slot(degree).map(|k| self.bases[k].as_slice()).unwrap_or(&[])
    }

    pub fn dim(&self, degree: i64) -> usize {
        self.basis(degree).len()
    }

    /// d_q : C_q → C_{q−1}, if degree q is present.
    pub fn boundary(&self, degree: i64) -> Option<&SparseMatrix> {
        self.slot(degree).map(|k| &self.boundaries[k])
    }

    pub fn boundary_mut(&mut self, degree: i64) -> Option<&mut SparseMatrix> {
        self.slot(degree).map(move |k| &mut self.boundaries[k])
    }

    /// Label → position within its degree.
    pub fn index(&self, degree: i64) -> HashMap<&BasisLabel, usize> {
        self.basis(degree).iter().enumerate().map(|(k, l)| (l, k)).collect()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.degrees()
            .map(|q| if q.rem_euclid(2) == 0 { 1 } else { -1 } * self.dim(q) as i64)
            .sum()
    }

    /// `{"degrees":[lo,hi],"bases":{q:[labels]},"boundaries":{q:[[row,col,"value"],...]}}`.
    pub fn to_json(&self) -> Value {
        let mut bases = Map::new();
        let mut boundaries = Map::new();
        for q in self.degrees() {
            let labels: Vec<String> = self.basis(q).iter().map(|l| l.to_string()).collect();
            bases.insert(q.to_string(), json!(labels));
            let d = self.boundary(q).expect("present");
            let triplets: Vec<Value> = d
                .triplets()
                .into_iter()
                .map(|(r, c, x)| json!([r, c, x.render()]))
                .collect();
            boundaries.insert(q.to_string(), Value::Array(triplets));
        }
        let top = self.min_degree + self.bases.len() as i64 - 1;
        json!({
            "field": self.field.to_json(),
            "degrees": [self.min_degree, top],
            "bases": bases,
            "boundaries": boundaries,
        })
    }
}

/// Checks d_{q−1} ∘ d_q = 0 for every adjacent pair, reporting the first
/// nonzero entry.
pub fn check_d_squared(c: &GradedComplex) -> Result<()> {
    let degrees: Vec<i64> = c.degrees().collect();
    for &q in degrees.iter().skip(1) {
        let upper = c.boundary(q).expect("present");
        let lower = c.boundary(q - 1).expect("present");
        let product = lower.mul(upper)?;
        if let Some((row, col, value)) = product.first_nonzero() {
            return Err(Error::DSquaredNonzero { upper: q, lower: q - 1, row, col, value: value.render() });
        }
    }
    Ok(())
}

pub fn is_d_squared_zero(c: &GradedComplex) -> bool {
    check_d_squared(c).is_ok()
}

/// dim H_q = dim C_q − rank d_q − rank d_{q+1}, per degree.
pub fn homology_dims(c: &GradedComplex) -> Result<BTreeMap<i64, usize>> {
    check_d_squared(c)?;
    let degrees: Vec<i64> = c.degrees().collect();
    let ranks = par::map(&degrees, |&q| c.boundary(q).map(SparseMatrix::rank).unwrap_or(0));
    let rank_of: HashMap<i64, usize> = degrees.iter().copied().zip(ranks).collect();
    let dims: BTreeMap<i64, usize> = degrees
        .iter()
        .map(|&q| {
            let r_out = rank_of[&q];
            let r_in = rank_of.get(&(q + 1)).copied().unwrap_or(0);
            (q, c.dim(q) - r_out - r_in)
        })
        .collect();
    debug_assert_eq!(
        dims.iter().map(|(q, d)| if q.rem_euclid(2) == 0 { *d as i64 } else { -(*d as i64) }).sum::<i64>(),
        c.euler_characteristic()
    );
    Ok(dims)
}

fn sign(exponent: usize) -> i64 {
    if exponent.is_multiple_of(2) {
        1
    } else {
        -1
    }
}
