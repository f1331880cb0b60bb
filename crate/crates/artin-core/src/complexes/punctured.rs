//! D(n)⊗Ind(L): cells of the plane with a puncture on the axis, indexed by
//! (λ, i, j) where the puncture sits in column i with j points below it.

use std::collections::HashMap;

use super::fox_neuwirth::{shifted, ShuffleWords};
use super::{sign, BasisLabel, GradedComplex};
use crate::braid::InducedRep;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linear::{add_entry, add_scaled, basis_vector, Vector};
use crate::matrix::SparseMatrix;
use crate::par;
use crate::shuffles::{c_constant, c_marked, compositions, enumerate_marked, Composition, MarkKind};

type Cell = (Composition, usize, usize);

/// Cells of D(n) in degree q: λ ⊨ n+1 with q − n + 1 parts, axis column i, offset j < λ_i.
fn cells(n: usize, q: usize) -> Vec<Cell> {
    let mut out = Vec::new();
    for lambda in compositions(n + 1, q + 1 - n) {
        for i in 1..=lambda.len() {
            for j in 0..lambda.parts()[i - 1] {
                out.push((lambda.clone(), i, j));
            }
        }
    }
    out
}

/// Signed words of marked shuffles keyed by (kind, p, q, h, j).
struct MarkedWords {
    table: HashMap<(MarkKind, usize, usize, usize, usize), Vec<(i64, Vec<usize>)>>,
}

impl MarkedWords {
    fn new(total: usize) -> Self {
        let mut table = HashMap::new();
        for p in 1..total {
            for q in 1..=total - p {
                for (kind, hs, js) in [(MarkKind::Left, p, q), (MarkKind::Right, q, p)] {
                    for h in 0..=hs {
                        for j in 0..js {
                            let words = enumerate_marked(kind, p, q, h, j)
                                .expect("in range")
                                .iter()
                                .map(|s| (s.base.sign(), s.base.word(0, p + q).expect("fits")))
                                .collect();
                            table.insert((kind, p, q, h, j), words);
                        }
                    }
                }
            }
        }
        MarkedWords { table }
    }

    fn get(&self, kind: MarkKind, p: usize, q: usize, h: usize, j: usize) -> &[(i64, Vec<usize>)] {
        &self.table[&(kind, p, q, h, j)]
    }
}

/// One group of shuffles in a merge: all land on the same target cell.
struct Merge<'a> {
    words: &'a [(i64, Vec<usize>)],
    target: Cell,
    /// Position the puncture's strand must reach.
    slot: usize,
}

/// The shuffle groups of merging columns m, m+1 of (λ, i, j).
fn merges<'a>(cell: &Cell, m: usize, plain: &'a ShuffleWords, marked: &'a MarkedWords) -> Vec<Merge<'a>> {
    let (lambda, i, j) = (&cell.0, cell.1, cell.2);
    let (a, c) = (lambda.parts()[m - 1], lambda.parts()[m]);
    let off = lambda.offset(m);
    let rho = lambda.coarsen(m).expect("valid merge");
    if m + 1 == i {
        (0..=a)
            .map(|h| Merge {
                words: marked.get(MarkKind::Left, a, c, h, j),
                target: (rho.clone(), m, h + j),
                slot: off + h + j + 1,
            })
            .collect()
    } else if m == i {
        (0..=c)
            .map(|h| Merge {
                words: marked.get(MarkKind::Right, a, c, h, j),
                target: (rho.clone(), i, j + h),
                slot: off + j + h + 1,
            })
            .collect()
    } else {
        let axis = if m + 1 < i { i - 1 } else { i };
        let slot = j + 1 + lambda.offset(i);
        vec![Merge { words: plain.get(a, c), target: (rho, axis, j), slot }]
    }
}

fn marked_label(cell: &Cell, rep: usize) -> BasisLabel {
    BasisLabel::Marked { parts: cell.0.clone(), axis: cell.1, below: cell.2, rep }
}

/// d[(λ,i,j)⊗t] = Σ_m (−1)^{m−1} Σ_γ (−1)^{|γ|} [(ρ^m, i', j') ⊗ γ̃(t)], where
/// (i', j') is read off from where γ sends the puncture's strand.
pub fn build_d(ind: &InducedRep) -> Result<GradedComplex> {
    let n = ind.n();
    let rep = ind.artin();
    let field = rep.field();
    let sdim = ind.slot_dim();
    let plain = ShuffleWords::new(n + 1);
    let marked = MarkedWords::new(n + 1);
    let cell_lists: Vec<Vec<Cell>> = (n..=2 * n).map(|q| cells(n, q)).collect();
    let mut bases = Vec::new();
    let mut boundaries = Vec::new();
    for (k, q_cells) in cell_lists.iter().enumerate() {
        bases.push(q_cells.iter().flat_map(|c| (0..sdim).map(move |b| marked_label(c, b))).collect::<Vec<_>>());
        if k == 0 {
            boundaries.push(SparseMatrix::zero(field, 0, q_cells.len() * sdim));
            continue;
        }
        let below: HashMap<&Cell, usize> = cell_lists[k - 1].iter().enumerate().map(|(i, c)| (c, i)).collect();
        let columns = par::map_range(q_cells.len() * sdim, |col| -> Result<Vector> {
            let (cell, b) = (&q_cells[col / sdim], col % sdim);
            let slot = cell.2 + 1 + cell.0.offset(cell.1);
            let e = basis_vector(field, ind.join(slot, b));
            let mut out = Vector::new();
            for m in 1..cell.0.len() {
                let off = cell.0.offset(m);
                for merge in merges(cell, m, &plain, &marked) {
                    let mut acc = Vector::new();
                    for (s, w) in merge.words {
                        let img = rep.apply_word(&shifted(w, off), &e);
                        add_scaled(&mut acc, &field.from_int(sign(m - 1) * s), &img);
                    }
                    let base = below[&merge.target] * sdim;
                    for (idx, x) in acc {
                        let (landed, local) = ind.split(idx);
                        if landed != merge.slot {
                            return Err(Error::invalid(format!(
                                "merge {m} of {} sent the puncture to slot {landed}, expected {}",
                                marked_label(cell, b),
                                merge.slot
                            )));
                        }
                        add_entry(&mut out, base + local, x);
                    }
                }
            }
            Ok(out)
        })
        .into_iter()
        .collect::<Result<Vec<_>>>()?;
        boundaries.push(SparseMatrix::from_columns(field, cell_lists[k - 1].len() * sdim, columns));
    }
    GradedComplex::new(field, n as i64, bases, boundaries)
}

/// D(n) with trivial rational coefficients, from c_{a,b} and the marked constants.
pub fn build_d_untwisted(n: usize) -> Result<GradedComplex> {
    let field = Field::rationals();
    let cell_lists: Vec<Vec<Cell>> = (n..=2 * n).map(|q| cells(n, q)).collect();
    let mut bases = Vec::new();
    let mut boundaries = Vec::new();
    for (k, q_cells) in cell_lists.iter().enumerate() {
        bases.push(q_cells.iter().map(|c| marked_label(c, 0)).collect());
        if k == 0 {
            boundaries.push(SparseMatrix::zero(&field, 0, q_cells.len()));
            continue;
        }
        let below: HashMap<&Cell, usize> = cell_lists[k - 1].iter().enumerate().map(|(i, c)| (c, i)).collect();
        let mut columns = Vec::with_capacity(q_cells.len());
        for (lambda, i, j) in q_cells {
            let (i, j) = (*i, *j);
            let mut out = Vector::new();
            for m in 1..lambda.len() {
                let (a, c) = (lambda.parts()[m - 1], lambda.parts()[m]);
                let rho = lambda.coarsen(m)?;
                let s = sign(m - 1);
                if m + 1 == i {
                    for h in 0..=a {
                        let x = c_marked(MarkKind::Left, a, c, h, j)?;
                        add_entry(&mut out, below[&(rho.clone(), m, h + j)], field.from_int(s * x));
                    }
                } else if m == i {
                    for h in 0..=c {
                        let x = c_marked(MarkKind::Right, a, c, h, j)?;
                        add_entry(&mut out, below[&(rho.clone(), i, j + h)], field.from_int(s * x));
                    }
                } else {
                    let axis = if m + 1 < i { i - 1 } else { i };
                    add_entry(&mut out, below[&(rho, axis, j)], field.from_int(s * c_constant(a, c)));
                }
            }
            columns.push(out);
        }
        boundaries.push(SparseMatrix::from_columns(&field, cell_lists[k - 1].len(), columns));
    }
    GradedComplex::new(&field, n as i64, bases, boundaries)
}
