//! Sparse vectors and small sparse linear maps, plus the mixed-radix tensor
//! index arithmetic shared by every tensor action.
//!
//! Tensor bases are little-endian: in V₁⊗…⊗V_k the basis vector
//! e_{a₁}⊗…⊗e_{a_k} has index a₁ + d₁·(a₂ + d₂·(a₃ + …)).

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::field::{Field, FieldElement};

/// Sparse vector: basis index → nonzero coefficient.
pub type Vector = BTreeMap<usize, FieldElement>;

/// `v[idx] += c`, dropping the entry if it cancels.
pub fn add_entry(v: &mut Vector, idx: usize, c: FieldElement) {
    if c.is_zero() {
        return;
    }
    match v.entry(idx) {
        std::collections::btree_map::Entry::Vacant(e) => {
            e.insert(c);
        }
        std::collections::btree_map::Entry::Occupied(mut e) => {
            let sum = e.get() + &c;
            if sum.is_zero() {
                e.remove();
            } else {
                e.insert(sum);
            }
        }
    }
}

/// `acc += c · v`.
pub fn add_scaled(acc: &mut Vector, c: &FieldElement, v: &Vector) {
    for (&k, x) in v {
        add_entry(acc, k, c * x);
    }
}

pub fn basis_vector(field: &Field, idx: usize) -> Vector {
    let mut v = Vector::new();
    v.insert(idx, field.one());
    v
}

/// A linear map stored column by column: `columns[c]` lists (row, value).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearMap {
    field: Field,
    rows: usize,
    cols: usize,
    columns: Vec<Vec<(usize, FieldElement)>>,
}

impl LinearMap {
    pub fn from_triplets(field: &Field, rows: usize, cols: usize, entries: Vec<(usize, usize, FieldElement)>) -> Result<Self> {
        let mut dense: Vec<Vector> = vec![Vector::new(); cols];
        for (r, c, x) in entries {
            if r >= rows || c >= cols {
                return Err(Error::DimensionMismatch(format!("entry ({r},{c}) outside a {rows}x{cols} map")));
            }
            if x.field() != field {
                return Err(Error::FieldMismatch {
                    left: field.to_string(),
                    right: x.field().to_string(),
                });
            }
            add_entry(&mut dense[c], r, x);
        }
        Ok(Self::from_columns(field, rows, dense))
    }

    pub fn from_columns(field: &Field, rows: usize, columns: Vec<Vector>) -> Self {
        LinearMap {
            field: field.clone(),
            rows,
            cols: columns.len(),
            columns: columns.into_iter().map(|c| c.into_iter().collect()).collect(),
        }
    }

    pub fn identity(field: &Field, n: usize) -> Self {
        Self::scalar(field, n, &field.one())
    }

    pub fn scalar(field: &Field, n: usize, c: &FieldElement) -> Self {
        let columns = (0..n)
            .map(|k| if c.is_zero() { vec![] } else { vec![(k, c.clone())] })
            .collect();
        LinearMap { field: field.clone(), rows: n, cols: n, columns }
    }

    /// The flip a⊗b ↦ b⊗a from A⊗B to B⊗A, scaled by `c`.
    pub fn swap(field: &Field, dim_a: usize, dim_b: usize, c: &FieldElement) -> Self {
        let n = dim_a * dim_b;
        let columns = (0..n)
            .map(|idx| {
                let (a, b) = (idx % dim_a, idx / dim_a);
                if c.is_zero() { vec![] } else { vec![(b + dim_b * a, c.clone())] }
            })
            .collect();
        LinearMap { field: field.clone(), rows: n, cols: n, columns }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn column(&self, c: usize) -> &[(usize, FieldElement)] {
        &self.columns[c]
    }

    pub fn triplets(&self) -> Vec<(usize, usize, FieldElement)> {
        let mut out = Vec::new();
        for (c, col) in self.columns.iter().enumerate() {
            for (r, x) in col {
                out.push((*r, c, x.clone()));
            }
        }
        out.sort_by_key(|t| (t.0, t.1));
        out
    }

    pub fn apply(&self, v: &Vector) -> Vector {
        let mut out = Vector::new();
        for (&c, x) in v {
            for (r, y) in &self.columns[c] {
                add_entry(&mut out, *r, x * y);
            }
        }
        out
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &LinearMap) -> Result<LinearMap> {
        if inner.rows != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "cannot compose {}x{} after {}x{}",
                self.rows, self.cols, inner.rows, inner.cols
            )));
        }
        let columns = inner
            .columns
            .iter()
            .map(|col| self.apply(&col.iter().cloned().collect()))
            .collect();
        Ok(Self::from_columns(&self.field, self.rows, columns))
    }

    pub fn scale(&self, c: &FieldElement) -> LinearMap {
        let columns = self
            .columns
            .iter()
            .map(|col| col.iter().map(|(r, x)| (*r, x * c)).filter(|(_, x)| !x.is_zero()).collect())
            .collect();
        LinearMap { field: self.field.clone(), rows: self.rows, cols: self.cols, columns }
    }

    pub fn transpose(&self) -> LinearMap {
        let mut columns: Vec<Vec<(usize, FieldElement)>> = vec![Vec::new(); self.rows];
        for (c, col) in self.columns.iter().enumerate() {
            for (r, x) in col {
                columns[*r].push((c, x.clone()));
            }
        }
        LinearMap { field: self.field.clone(), rows: self.cols, cols: self.rows, columns }
    }

    /// Dense Gauss–Jordan inverse; these maps are at most a few hundred wide.
    pub fn inverse(&self) -> Result<LinearMap> {
        if self.rows != self.cols {
            return Err(Error::Singular(format!("{}x{} map is not square", self.rows, self.cols)));
        }
        let n = self.rows;
        let f = &self.field;
        let mut a: Vec<Vec<FieldElement>> = vec![vec![f.zero(); n]; n];
        for (c, col) in self.columns.iter().enumerate() {
            for (r, x) in col {
                a[*r][c] = x.clone();
            }
        }
        let mut inv: Vec<Vec<FieldElement>> = (0..n)
            .map(|r| (0..n).map(|c| if r == c { f.one() } else { f.zero() }).collect())
            .collect();
        for col in 0..n {
            let pivot = (col..n)
                .find(|&r| !a[r][col].is_zero())
                .ok_or_else(|| Error::Singular(format!("no pivot in column {col}")))?;
            a.swap(col, pivot);
            inv.swap(col, pivot);
            let p = a[col][col].inv()?;
            for k in 0..n {
                a[col][k] = &a[col][k] * &p;
                inv[col][k] = &inv[col][k] * &p;
            }
            for r in 0..n {
                if r != col && !a[r][col].is_zero() {
                    let factor = a[r][col].clone();
                    for k in 0..n {
                        let da = &factor * &a[col][k];
                        let di = &factor * &inv[col][k];
                        a[r][k] = &a[r][k] - &da;
                        inv[r][k] = &inv[r][k] - &di;
                    }
                }
            }
        }
        let mut entries = Vec::new();
        for (r, row) in inv.into_iter().enumerate() {
            for (c, x) in row.into_iter().enumerate() {
                if !x.is_zero() {
                    entries.push((r, c, x));
                }
            }
        }
        LinearMap::from_triplets(f, n, n, entries)
    }

    /// Inverse-transpose, the structure map induced on the dual space.
    pub fn dual(&self) -> Result<LinearMap> {
        Ok(self.inverse()?.transpose())
    }
}

/// Applies a map on a two-factor block inside a larger tensor.
///
/// `low` is the product of the factor dimensions before the block and `block`
/// the block's total dimension; the map must preserve the block dimension
/// (it may permute the factor dimensions, as V⊗W → W⊗V does).
pub fn apply_on_block(map: &LinearMap, low: usize, block: usize, v: &Vector) -> Vector {
    debug_assert_eq!(map.rows(), block);
    debug_assert_eq!(map.cols(), block);
    let mut out = Vector::new();
    for (&idx, x) in v {
        let lo = idx % low;
        let local = (idx / low) % block;
        let hi = idx - idx % (low * block);
        for (r, y) in map.column(local) {
            add_entry(&mut out, lo + low * r + hi, x * y);
        }
    }
    out
}
