//! C(n)⊗T: the Fox–Neuwirth cellular chains of the one-point compactified
//! configuration space, twisted by an A_n-representation T.

use std::collections::HashMap;

use super::{sign, BasisLabel, GradedComplex};
use crate::braid::{ArtinRep, InducedRep};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linear::{add_entry, add_scaled, basis_vector, Vector};
use crate::matrix::SparseMatrix;
use crate::par;
use crate::shuffles::{c_constant, compositions, enumerate_shuffles, Composition};

/// Signed, unshifted lift words of all (a, b)-shuffles for a + b ≤ total.
pub(super) struct ShuffleWords {
    table: HashMap<(usize, usize), Vec<(i64, Vec<usize>)>>,
}

impl ShuffleWords {
    pub(super) fn new(total: usize) -> Self {
        let mut table = HashMap::new();
        for a in 1..total {
            for b in 1..=total - a {
                let words = enumerate_shuffles(a, b)
                    .iter()
                    .map(|s| (s.sign(), s.word(0, a + b).expect("fits")))
                    .collect();
                table.insert((a, b), words);
            }
        }
        ShuffleWords { table }
    }

    pub(super) fn get(&self, a: usize, b: usize) -> &[(i64, Vec<usize>)] {
        &self.table[&(a, b)]
    }
}

pub(super) fn shifted(word: &[usize], offset: usize) -> Vec<usize> {
    word.iter().map(|g| g + offset).collect()
}

/// Cells of C(n) in degree q: compositions of n with q − n parts.
fn cells(n: usize, q: usize) -> Vec<Composition> {
    if n == 0 {
        compositions(0, 0)
    } else {
        compositions(n, q - n)
    }
}

fn degree_range(n: usize) -> (usize, usize) {
    if n == 0 {
        (0, 0)
    } else {
        (n + 1, 2 * n)
    }
}

/// d[λ⊗t] = Σ_m (−1)^{m−1} [ρ^m ⊗ Σ_γ (−1)^{|γ|} γ̃(t)], the shuffle of
/// columns m, m+1 lifted onto the strands of those columns.
pub fn build_c(n: usize, rep: &ArtinRep) -> Result<GradedComplex> {
    if rep.strands() != n {
        return Err(Error::invalid(format!("C({n}) needs an A_{n} action, got {} strands", rep.strands())));
    }
    let field = rep.field();
    let dim = rep.dim();
    let words = ShuffleWords::new(n);
    let (lo, hi) = degree_range(n);
    let cell_lists: Vec<Vec<Composition>> = (lo..=hi).map(|q| cells(n, q)).collect();
    let mut bases = Vec::new();
    let mut boundaries = Vec::new();
    for (k, q_cells) in cell_lists.iter().enumerate() {
        bases.push(
            q_cells
                .iter()
                .flat_map(|c| (0..dim).map(move |b| BasisLabel::Cell { parts: c.clone(), rep: b }))
                .collect::<Vec<_>>(),
        );
        if k == 0 {
            boundaries.push(SparseMatrix::zero(field, 0, q_cells.len() * dim));
            continue;
        }
        let below: HashMap<&Composition, usize> = cell_lists[k - 1].iter().enumerate().map(|(i, c)| (c, i)).collect();
        let columns = par::map_range(q_cells.len() * dim, |col| {
            let (lambda, b) = (&q_cells[col / dim], col % dim);
            let e = basis_vector(field, b);
            let mut out = Vector::new();
            for m in 1..lambda.len() {
                let (a, c) = (lambda.parts()[m - 1], lambda.parts()[m]);
                let off = lambda.offset(m);
                let rho = lambda.coarsen(m).expect("valid merge");
                let mut merged = Vector::new();
                for (s, w) in words.get(a, c) {
                    let img = rep.apply_word(&shifted(w, off), &e);
                    add_scaled(&mut merged, &field.from_int(sign(m - 1) * s), &img);
                }
                let base = below[&rho] * dim;
                for (t, x) in merged {
                    add_entry(&mut out, base + t, x);
                }
            }
            out
        });
        boundaries.push(SparseMatrix::from_columns(field, cell_lists[k - 1].len() * dim, columns));
    }
    GradedComplex::new(field, lo as i64, bases, boundaries)
}

/// C(n+1)⊗Ind(L).
pub fn build_c_induced(ind: &InducedRep) -> Result<GradedComplex> {
    build_c(ind.n() + 1, ind.artin())
}

/// C(n) with trivial rational coefficients, built from the integers c_{a,b} alone.
pub fn build_c_untwisted(n: usize) -> Result<GradedComplex> {
    let field = Field::rationals();
    let (lo, hi) = degree_range(n);
    let cell_lists: Vec<Vec<Composition>> = (lo..=hi).map(|q| cells(n, q)).collect();
    let mut bases = Vec::new();
    let mut boundaries = Vec::new();
    for (k, q_cells) in cell_lists.iter().enumerate() {
        bases.push(q_cells.iter().map(|c| BasisLabel::Cell { parts: c.clone(), rep: 0 }).collect());
        if k == 0 {
            boundaries.push(SparseMatrix::zero(&field, 0, q_cells.len()));
            continue;
        }
        let below: HashMap<&Composition, usize> = cell_lists[k - 1].iter().enumerate().map(|(i, c)| (c, i)).collect();
        let columns = q_cells
            .iter()
            .map(|lambda| {
                let mut out = Vector::new();
                for m in 1..lambda.len() {
                    let (a, c) = (lambda.parts()[m - 1], lambda.parts()[m]);
                    let rho = lambda.coarsen(m).expect("valid merge");
                    add_entry(&mut out, below[&rho], field.from_int(sign(m - 1) * c_constant(a, c)));
                }
                out
            })
            .collect();
        boundaries.push(SparseMatrix::from_columns(&field, cell_lists[k - 1].len(), columns));
    }
    GradedComplex::new(&field, lo as i64, bases, boundaries)
}
