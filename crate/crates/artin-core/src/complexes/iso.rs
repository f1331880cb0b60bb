//! Explicit chain isomorphisms: a bijection of labelled bases, shifted in
//! degree, under which the boundary matrices agree entry by entry.

use super::{build_c_induced, build_d, build_f, BasisLabel, GradedComplex};
use crate::braid::{IndModel, InducedRep, LeftBraidedSpace};
use crate::error::{Error, Result};

/// Sizes of what an isomorphism check compared.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct IsoReport {
    pub degrees: usize,
    pub basis_elements: usize,
    pub entries: usize,
}

/// Checks that `relabel` (with degree shift `shift`) carries `source` onto
/// `target` exactly.
pub fn check_isomorphism<F>(source: &GradedComplex, target: &GradedComplex, shift: i64, relabel: F) -> Result<IsoReport>
where
    F: Fn(&BasisLabel) -> Result<BasisLabel>,
{
    if source.field() != target.field() {
        return Err(Error::IsoMismatch("different coefficient fields".into()));
    }
    let mut report = IsoReport::default();
    for q in target.degrees() {
        if source.dim(q - shift) == 0 && target.dim(q) > 0 {
            return Err(Error::IsoMismatch(format!("target degree {q} has no source")));
        }
    }
    for q in source.degrees() {
        let tq = q + shift;
        let (sb, tb) = (source.basis(q), target.basis(tq));
        if sb.len() != tb.len() {
            return Err(Error::IsoMismatch(format!(
                "degree {q}: {} source cells, {} target cells",
                sb.len(),
                tb.len()
            )));
        }
        let index = target.index(tq);
        let perm = sb
            .iter()
            .map(|l| {
                let image = relabel(l)?;
                index
                    .get(&image)
                    .copied()
                    .ok_or_else(|| Error::IsoMismatch(format!("degree {q}: {l} maps to missing {image}")))
            })
            .collect::<Result<Vec<_>>>()?;
        let mut hit = vec![false; tb.len()];
        for &k in &perm {
            if std::mem::replace(&mut hit[k], true) {
                return Err(Error::IsoMismatch(format!("degree {q}: label map is not injective")));
            }
        }
        let rows_perm: Vec<usize> = if q == source.degrees().next().expect("nonempty") {
            Vec::new()
        } else {
            let below = target.index(tq - 1);
            source
                .basis(q - 1)
                .iter()
                .map(|l| {
                    let image = relabel(l)?;
                    below
                        .get(&image)
                        .copied()
                        .ok_or_else(|| Error::IsoMismatch(format!("degree {}: {l} maps to missing {image}", q - 1)))
                })
                .collect::<Result<Vec<_>>>()?
        };
        let ds = source.boundary(q).expect("present");
        let dt = target.boundary(tq).expect("present");
        if ds.nnz() != dt.nnz() {
            return Err(Error::IsoMismatch(format!(
                "degree {q}: {} nonzero entries against {}",
                ds.nnz(),
                dt.nnz()
            )));
        }
        for c in 0..ds.cols() {
            for (r, x) in ds.column(c) {
                let y = dt.get(rows_perm[*r], perm[c]);
                if &y != x {
                    return Err(Error::IsoMismatch(format!(
                        "degree {q}: entry ({}, {}) is {} but its image is {}",
                        source.basis(q - 1)[*r],
                        sb[c],
                        x.render(),
                        y.render()
                    )));
                }
                report.entries += 1;
            }
        }
        report.degrees += 1;
        report.basis_elements += sb.len();
    }
    Ok(report)
}

fn cell_for(parts: &crate::shuffles::Composition, axis: usize, below: usize, local: usize, slot_dim: usize) -> BasisLabel {
    let slot = below + 1 + parts.offset(axis);
    BasisLabel::Cell { parts: parts.clone(), rep: (slot - 1) * slot_dim + local }
}

/// D(n)⊗Ind(L) ≅ C(n+1)⊗Ind(L) in degrees q ↦ q + 2, cell (λ, i, j) going
/// to λ with the induced basis vector in the puncture's slot.
pub fn iso_check_d_vs_c(space: &LeftBraidedSpace, n: usize, model: IndModel) -> Result<IsoReport> {
    let ind = InducedRep::build(space, n, model)?;
    let d = build_d(&ind)?;
    let c = build_c_induced(&ind)?;
    let sdim = ind.slot_dim();
    check_isomorphism(&d, &c, 2, |l| match l {
        BasisLabel::Marked { parts, axis, below, rep } => Ok(cell_for(parts, *axis, *below, *rep, sdim)),
        other => Err(Error::IsoMismatch(format!("unexpected label {other}"))),
    })
}

/// F(n+1) over ε(L) ≅ C(n+1)⊗Ind(L) in degrees q ↦ q + n + 1.
pub fn iso_check_f_vs_c(space: &LeftBraidedSpace, n: usize) -> Result<IsoReport> {
    let ind = InducedRep::separable(space, n)?;
    let f = build_f(&space.epsilon_twist()?, n + 1)?;
    let c = build_c_induced(&ind)?;
    let sdim = ind.slot_dim();
    check_isomorphism(&f, &c, n as i64 + 1, |l| match l {
        BasisLabel::Chain { parts, module_factor, w_offset, tensor } => {
            Ok(cell_for(parts, *module_factor, *w_offset, *tensor, sdim))
        }
        other => Err(Error::IsoMismatch(format!("unexpected label {other}"))),
    })
}
