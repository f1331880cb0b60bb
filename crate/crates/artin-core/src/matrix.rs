//! Sparse boundary matrices and exact rank by sparse Gaussian elimination.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::field::{Field, FieldElement};
use crate::linear::{add_entry, Vector};
use crate::par;

/// How eliminated rows are updated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Elimination {
    /// row ← row − (a/p)·pivot_row.
    #[default]
    Fraction,
    /// row ← p·row − a·pivot_row, no division.
    FractionFree,
}

/// A matrix stored by columns, each column sorted by row with no zeros.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparseMatrix {
    field: Field,
    rows: usize,
    columns: Vec<Vec<(usize, FieldElement)>>,
}

type Row = Vec<(usize, FieldElement)>;

impl SparseMatrix {
    pub fn from_columns(field: &Field, rows: usize, columns: Vec<Vector>) -> Self {
        SparseMatrix {
            field: field.clone(),
            rows,
            columns: columns.into_iter().map(|c| c.into_iter().collect()).collect(),
        }
    }

    pub fn zero(field: &Field, rows: usize, cols: usize) -> Self {
        SparseMatrix { field: field.clone(), rows, columns: vec![Vec::new(); cols] }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.columns.len()
    }

    pub fn column(&self, c: usize) -> &[(usize, FieldElement)] {
        &self.columns[c]
    }

    pub fn nnz(&self) -> usize {
        self.columns.iter().map(Vec::len).sum()
    }

    pub fn get(&self, r: usize, c: usize) -> FieldElement {
        self.columns[c]
            .iter()
            .find(|(k, _)| *k == r)
            .map(|(_, x)| x.clone())
            .unwrap_or_else(|| self.field.zero())
    }

    /// Overwrites one entry; used to build negative controls.
    pub fn set(&mut self, r: usize, c: usize, value: FieldElement) {
        let col = &mut self.columns[c];
        col.retain(|(k, _)| *k != r);
        if !value.is_zero() {
            col.push((r, value));
            col.sort_by_key(|(k, _)| *k);
        }
    }

    pub fn triplets(&self) -> Vec<(usize, usize, FieldElement)> {
        let mut out: Vec<_> = self
            .columns
            .iter()
            .enumerate()
            .flat_map(|(c, col)| col.iter().map(move |(r, x)| (*r, c, x.clone())))
            .collect();
        out.sort_by_key(|t| (t.0, t.1));
        out
    }

    /// `self · other`.
    pub fn mul(&self, other: &SparseMatrix) -> Result<SparseMatrix> {
        if self.cols() != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows,
                self.cols(),
                other.rows,
                other.cols()
            )));
        }
        let columns = par::map(&other.columns, |col| {
            let mut acc = Vector::new();
            for (k, y) in col {
                for (r, x) in &self.columns[*k] {
                    add_entry(&mut acc, *r, x * y);
                }
            }
            acc
        });
        Ok(SparseMatrix::from_columns(&self.field, self.rows, columns))
    }

    /// First nonzero entry in column-major order.
    pub fn first_nonzero(&self) -> Option<(usize, usize, FieldElement)> {
        self.columns
            .iter()
            .enumerate()
            .find_map(|(c, col)| col.first().map(|(r, x)| (*r, c, x.clone())))
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(Vec::is_empty)
    }

    pub fn rank(&self) -> usize {
        self.rank_with(Elimination::default())
    }

    /// Exact rank. Pivots are chosen from the shortest remaining row, in the
    /// column of that row with the fewest other entries.
    pub fn rank_with(&self, mode: Elimination) -> usize {
        let mut rows: Vec<Row> = vec![Vec::new(); self.rows];
        for (c, col) in self.columns.iter().enumerate() {
            for (r, x) in col {
                rows[*r].push((c, x.clone()));
            }
        }
        let mut col_rows: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); self.cols()];
        let mut active: BTreeSet<(usize, usize)> = BTreeSet::new();
        for (r, row) in rows.iter().enumerate() {
            if !row.is_empty() {
                active.insert((row.len(), r));
                for (c, _) in row {
                    col_rows[*c].insert(r);
                }
            }
        }
        let mut rank = 0;
        while let Some((len, r)) = active.pop_first() {
            debug_assert_eq!(len, rows[r].len());
            let pivot_row = std::mem::take(&mut rows[r]);
            for (c, _) in &pivot_row {
                col_rows[*c].remove(&r);
            }
            let (pc, pv) = pivot_row
                .iter()
                .min_by_key(|(c, _)| (col_rows[*c].len(), *c))
                .map(|(c, x)| (*c, x.clone()))
                .expect("active rows are nonempty");
            let targets: Vec<usize> = col_rows[pc].iter().copied().collect();
            let old: Vec<Row> = targets.iter().map(|&s| std::mem::take(&mut rows[s])).collect();
            let pivot_inv = match mode {
                Elimination::Fraction => Some(pv.inv().expect("pivot is nonzero")),
                Elimination::FractionFree => None,
            };
            let updated = par::map(&old, |row| eliminate(row, &pivot_row, pc, &pv, pivot_inv.as_ref()));
            for ((&s, old_row), new_row) in targets.iter().zip(&old).zip(updated) {
                active.remove(&(old_row.len(), s));
                for (c, _) in old_row {
                    col_rows[*c].remove(&s);
                }
                for (c, _) in &new_row {
                    col_rows[*c].insert(s);
                }
                if !new_row.is_empty() {
                    active.insert((new_row.len(), s));
                }
                rows[s] = new_row;
            }
            rank += 1;
        }
        rank
    }
}

/// Clears column `pc` of `row` using the pivot row.
fn eliminate(row: &Row, pivot: &Row, pc: usize, pv: &FieldElement, pivot_inv: Option<&FieldElement>) -> Row {
    let a = &row.iter().find(|(c, _)| *c == pc).expect("target row has the pivot column").1;
    // new = s·row − t·pivot
    let (s, t) = match pivot_inv {
        Some(inv) => (None, a * inv),
        None => (Some(pv), a.clone()),
    };
    let mut out = Vec::with_capacity(row.len() + pivot.len());
    let (mut i, mut j) = (0, 0);
    while i < row.len() || j < pivot.len() {
        let take_row = j >= pivot.len() || (i < row.len() && row[i].0 < pivot[j].0);
        let take_pivot = i >= row.len() || (j < pivot.len() && pivot[j].0 < row[i].0);
        let (c, x) = if take_row {
            let x = match s {
                Some(s) => s * &row[i].1,
                None => row[i].1.clone(),
            };
            i += 1;
            (row[i - 1].0, x)
        } else if take_pivot {
            j += 1;
            (pivot[j - 1].0, -(&t * &pivot[j - 1].1))
        } else {
            let lhs = match s {
                Some(s) => s * &row[i].1,
                None => row[i].1.clone(),
            };
            let x = lhs - &t * &pivot[j].1;
            i += 1;
            j += 1;
            (row[i - 1].0, x)
        };
        if c == pc || x.is_zero() {
            continue;
        }
        out.push((c, x));
    }
    out
}
