//! The bar-type complex F(N) built from the quantum shuffle algebra 𝔸(V) and
//! the bimodule 𝔐(V, W): chains [a₁|…|μ|…|a_q] with total degree N and
//! exactly one factor in 𝔐.

use std::collections::HashMap;

use super::{sign, BasisLabel, GradedComplex};
use crate::braid::{Layout, LeftBraidedSpace};
use crate::error::{Error, Result};
use crate::linear::{add_entry, Vector};
use crate::matrix::SparseMatrix;
use crate::par;
use crate::shuffle_algebra::{
    bimodule_left_mult, bimodule_right_mult, shuffle_product, AlgebraElement, BimoduleElement,
};
use crate::shuffles::{compositions, Composition};

type Chain = (Composition, usize, usize);

fn chains(total: usize, q: usize) -> Vec<Chain> {
    let mut out = Vec::new();
    for lambda in compositions(total, q) {
        for i in 1..=lambda.len() {
            for j in 0..lambda.parts()[i - 1] {
                out.push((lambda.clone(), i, j));
            }
        }
    }
    out
}

fn chain_label(c: &Chain, tensor: usize) -> BasisLabel {
    BasisLabel::Chain { parts: c.0.clone(), module_factor: c.1, w_offset: c.2, tensor }
}

/// d[a₁|…|a_q] = Σ_m (−1)^{m−1} [a₁|…|a_m ⋆ a_{m+1}|…|a_q]; requires a
/// separated braiding. Degrees 1..=N count the factors.
pub fn build_f(space: &LeftBraidedSpace, total: usize) -> Result<GradedComplex> {
    if !space.is_separable() {
        return Err(Error::NotSeparable("the bar complex multiplies through phi".into()));
    }
    if total == 0 {
        return Err(Error::invalid("the bar complex needs total degree at least 1"));
    }
    let field = space.field();
    let (dv, dw) = (space.dim_v(), space.dim_w());
    let braided = space.braided_part();
    let tdim = Layout::with_w(total, 1).dim(dv, dw);
    let chain_lists: Vec<Vec<Chain>> = (1..=total).map(|q| chains(total, q)).collect();
    let mut bases = Vec::new();
    let mut boundaries = Vec::new();
    for (k, q_chains) in chain_lists.iter().enumerate() {
        bases.push(q_chains.iter().flat_map(|c| (0..tdim).map(move |t| chain_label(c, t))).collect::<Vec<_>>());
        if k == 0 {
            boundaries.push(SparseMatrix::zero(field, 0, q_chains.len() * tdim));
            continue;
        }
        let below: HashMap<&Chain, usize> = chain_lists[k - 1].iter().enumerate().map(|(i, c)| (c, i)).collect();
        let columns = par::map_range(q_chains.len() * tdim, |col| -> Result<Vector> {
            let (chain, t) = (&q_chains[col / tdim], col % tdim);
            let (lambda, i, j) = (&chain.0, chain.1, chain.2);
            let w_slot = j + 1 + lambda.offset(i);
            let width = |from: usize, to: usize| -> usize {
                (from..to).map(|pos| if pos == w_slot { dw } else { dv }).product()
            };
            let mut out = Vector::new();
            for m in 1..lambda.len() {
                let (a, c) = (lambda.parts()[m - 1], lambda.parts()[m]);
                let off = lambda.offset(m);
                let low = width(1, off + 1);
                let left = width(off + 1, off + a + 1);
                let right = width(off + a + 1, off + a + c + 1);
                let block = (t / low) % (left * right);
                let rest = t - block * low;
                let (li, ri) = (block % left, block / left);
                let rho = lambda.coarsen(m)?;
                let s = field.from_int(sign(m - 1));
                // (new axis factor, new offset, tensor index, coefficient)
                let mut terms = Vec::new();
                if m == i {
                    let mu = BimoduleElement::basis(field, a, j + 1, li);
                    let prod = bimodule_right_mult(&mu, &AlgebraElement::basis(field, c, ri), space)?;
                    for (&(_, w2, kk), x) in prod.terms() {
                        terms.push((m, w2 - 1, kk, x.clone()));
                    }
                } else if m + 1 == i {
                    let mu = BimoduleElement::basis(field, c, j + 1, ri);
                    let prod = bimodule_left_mult(&AlgebraElement::basis(field, a, li), &mu, space)?;
                    for (&(_, w2, kk), x) in prod.terms() {
                        terms.push((m, w2 - 1, kk, x.clone()));
                    }
                } else {
                    let prod = shuffle_product(
                        &AlgebraElement::basis(field, a, li),
                        &AlgebraElement::basis(field, c, ri),
                        &braided,
                    )?;
                    let axis = if m < i { i - 1 } else { i };
                    for (&(_, kk), x) in prod.terms() {
                        terms.push((axis, j, kk, x.clone()));
                    }
                }
                for (axis, offset, kk, x) in terms {
                    let target = below[&(rho.clone(), axis, offset)];
                    add_entry(&mut out, target * tdim + rest + low * kk, &s * &x);
                }
            }
            Ok(out)
        })
        .into_iter()
        .collect::<Result<Vec<_>>>()?;
        boundaries.push(SparseMatrix::from_columns(field, chain_lists[k - 1].len() * tdim, columns));
    }
    GradedComplex::new(field, 1, bases, boundaries)
}
