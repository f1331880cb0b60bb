//! Braided and left-braided vector spaces, braid-group actions on their tensor
//! powers, and the induced A_{n+1}-representation of a B_n-representation.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::field::{Field, FieldElement};
use crate::linear::{add_scaled, apply_on_block, basis_vector, LinearMap, Vector};

/// A braid generator acting on adjacent tensor positions (m, m+1), 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Gen {
    Sigma(usize),
    SigmaInv(usize),
    /// τ acting on (m, m+1) = (V, W).
    Tau(usize),
    TauInv(usize),
}

/// Which tensor factor is W, if any, in a tensor of `len` factors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Layout {
    pub len: usize,
    pub w_pos: Option<usize>,
}

impl Layout {
    pub fn plain(len: usize) -> Self {
        Layout { len, w_pos: None }
    }

    pub fn with_w(len: usize, w_pos: usize) -> Self {
        assert!(w_pos >= 1 && w_pos <= len, "W position {w_pos} outside 1..={len}");
        Layout { len, w_pos: Some(w_pos) }
    }

    fn factor_dim(&self, pos: usize, dim_v: usize, dim_w: usize) -> usize {
        if self.w_pos == Some(pos) {
            dim_w
        } else {
            dim_v
        }
    }

    /// Total dimension of the tensor product.
    pub fn dim(&self, dim_v: usize, dim_w: usize) -> usize {
        (1..=self.len).map(|k| self.factor_dim(k, dim_v, dim_w)).product()
    }

    /// Product of the factor dimensions before position `pos`.
    fn low(&self, pos: usize, dim_v: usize, dim_w: usize) -> usize {
        (1..pos).map(|k| self.factor_dim(k, dim_v, dim_w)).product()
    }
}

/// (V, σ) with σ invertible and satisfying the braid equation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BraidedSpace {
    dim_v: usize,
    sigma: LinearMap,
    sigma_inv: LinearMap,
}

impl BraidedSpace {
    pub fn new(dim_v: usize, sigma: LinearMap) -> Result<Self> {
        if !check_braid_equation(&sigma, dim_v)? {
            return Err(Error::invalid("sigma does not satisfy the braid equation"));
        }
        let sigma_inv = sigma.inverse()?;
        Ok(BraidedSpace { dim_v, sigma, sigma_inv })
    }

    /// The 1-dimensional space with σ = q.
    pub fn one_dim(q: &FieldElement) -> Result<Self> {
        Self::new(1, LinearMap::scalar(q.field(), 1, q))
    }

    pub fn field(&self) -> &Field {
        self.sigma.field()
    }

    pub fn dim_v(&self) -> usize {
        self.dim_v
    }

    pub fn sigma(&self) -> &LinearMap {
        &self.sigma
    }

    pub fn dual(&self) -> Result<Self> {
        Ok(BraidedSpace {
            dim_v: self.dim_v,
            sigma: self.sigma_inv.transpose(),
            sigma_inv: self.sigma.transpose(),
        })
    }

    /// Applies a word of σ^{±1} generators to a vector in V^{⊗strands}.
    pub fn tensor_action(&self, word: &[Gen], v: &Vector, strands: usize) -> Result<Vector> {
        let d = self.dim_v;
        let mut cur = v.clone();
        for &g in word {
            let (m, map) = match g {
                Gen::Sigma(m) => (m, &self.sigma),
                Gen::SigmaInv(m) => (m, &self.sigma_inv),
                _ => return Err(Error::invalid("tau acts only on left-braided layouts")),
            };
            if m == 0 || m >= strands {
                return Err(Error::invalid(format!("generator {m} out of range for {strands} strands")));
            }
            cur = apply_on_block(map, d.pow(m as u32 - 1), d * d, &cur);
        }
        Ok(cur)
    }
}

/// φ together with the maps derived from it.
#[derive(Debug, Clone, PartialEq, Eq)]
struct Separation {
    phi: LinearMap,
    phi_inv: LinearMap,
    /// ψ = τ∘φ⁻¹ : W⊗V → V⊗W.
    psi: LinearMap,
    psi_inv: LinearMap,
}

/// (V, W, σ, τ) with an optional separated braiding φ : V⊗W → W⊗V.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeftBraidedSpace {
    dim_v: usize,
    dim_w: usize,
    sigma: LinearMap,
    sigma_inv: LinearMap,
    tau: LinearMap,
    tau_inv: LinearMap,
    sep: Option<Separation>,
}

impl LeftBraidedSpace {
    pub fn new(dim_v: usize, dim_w: usize, sigma: LinearMap, tau: LinearMap, phi: Option<LinearMap>) -> Result<Self> {
        if !check_braid_equation(&sigma, dim_v)? {
            return Err(Error::invalid("sigma does not satisfy the braid equation"));
        }
        if !check_lbvs(&sigma, &tau, dim_v, dim_w)? {
            return Err(Error::invalid("(sigma, tau) does not satisfy the type-B braid equation"));
        }
        let sep = match phi {
            None => None,
            Some(phi) => {
                if !check_separable(&sigma, &tau, &phi, dim_v, dim_w)? {
                    return Err(Error::NotSeparable("phi fails the separability identities".into()));
                }
                Some(Separation::new(phi, &tau)?)
            }
        };
        Ok(LeftBraidedSpace {
            dim_v,
            dim_w,
            sigma_inv: sigma.inverse()?,
            tau_inv: tau.inverse()?,
            sigma,
            tau,
            sep,
        })
    }

    /// The 1-dimensional space σ = q, τ = p, and φ = u·swap when `u` is given.
    pub fn one_dim(q: &FieldElement, p: &FieldElement, u: Option<&FieldElement>) -> Result<Self> {
        let f = q.field();
        Self::new(
            1,
            1,
            LinearMap::scalar(f, 1, q),
            LinearMap::scalar(f, 1, p),
            u.map(|u| LinearMap::scalar(f, 1, u)),
        )
    }

    /// (V, V, σ, σ², φ = σ) built from a braided space.
    pub fn squared_braiding(space: &BraidedSpace) -> Result<Self> {
        let s = space.sigma().clone();
        let tau = s.compose(&s)?;
        Self::new(space.dim_v(), space.dim_v(), s.clone(), tau, Some(s))
    }

    pub fn field(&self) -> &Field {
        self.sigma.field()
    }

    pub fn dim_v(&self) -> usize {
        self.dim_v
    }

    pub fn dim_w(&self) -> usize {
        self.dim_w
    }

    pub fn sigma(&self) -> &LinearMap {
        &self.sigma
    }

    pub fn tau(&self) -> &LinearMap {
        &self.tau
    }

    pub fn phi(&self) -> Option<&LinearMap> {
        self.sep.as_ref().map(|s| &s.phi)
    }

    pub fn is_separable(&self) -> bool {
        self.sep.is_some()
    }

    /// The braided space (V, σ).
    pub fn braided_part(&self) -> BraidedSpace {
        BraidedSpace {
            dim_v: self.dim_v,
            sigma: self.sigma.clone(),
            sigma_inv: self.sigma_inv.clone(),
        }
    }

    /// Every structure map replaced by its inverse-transpose.
    pub fn dual(&self) -> Result<Self> {
        let sep = match &self.sep {
            None => None,
            Some(s) => Some(Separation::new(s.phi_inv.transpose(), &self.tau_inv.transpose())?),
        };
        Ok(LeftBraidedSpace {
            dim_v: self.dim_v,
            dim_w: self.dim_w,
            sigma: self.sigma_inv.transpose(),
            sigma_inv: self.sigma.transpose(),
            tau: self.tau_inv.transpose(),
            tau_inv: self.tau.transpose(),
            sep,
        })
    }

    /// σ ↦ −σ, φ ↦ −φ, τ unchanged.
    pub fn epsilon_twist(&self) -> Result<Self> {
        let f = self.field();
        let minus = -f.one();
        let sep = match &self.sep {
            None => None,
            Some(s) => Some(Separation::new(s.phi.scale(&minus), &self.tau)?),
        };
        Ok(LeftBraidedSpace {
            dim_v: self.dim_v,
            dim_w: self.dim_w,
            sigma: self.sigma.scale(&minus),
            sigma_inv: self.sigma_inv.scale(&minus),
            tau: self.tau.clone(),
            tau_inv: self.tau_inv.clone(),
            sep,
        })
    }

    /// One generator on a tensor with the given layout. With `moves`, σ may
    /// cross the W factor through φ and ψ = τφ⁻¹ (the separable induced action).
    fn step(&self, g: Gen, layout: &mut Layout, v: &Vector, moves: bool) -> Result<Vector> {
        let (dv, dw) = (self.dim_v, self.dim_w);
        let m = match g {
            Gen::Sigma(m) | Gen::SigmaInv(m) | Gen::Tau(m) | Gen::TauInv(m) => m,
        };
        if m == 0 || m >= layout.len {
            return Err(Error::invalid(format!("generator {g:?} out of range for {} factors", layout.len)));
        }
        let low = layout.low(m, dv, dw);
        let here = layout.w_pos;
        let inverse = matches!(g, Gen::SigmaInv(_) | Gen::TauInv(_));
        match g {
            Gen::Tau(_) | Gen::TauInv(_) => {
                if here != Some(m + 1) {
                    return Err(Error::invalid(format!("{g:?} needs W at position {}", m + 1)));
                }
                let map = if inverse { &self.tau_inv } else { &self.tau };
                Ok(apply_on_block(map, low, dv * dw, v))
            }
            Gen::Sigma(_) | Gen::SigmaInv(_) => {
                if here != Some(m) && here != Some(m + 1) {
                    let map = if inverse { &self.sigma_inv } else { &self.sigma };
                    return Ok(apply_on_block(map, low, dv * dv, v));
                }
                if !moves {
                    return Err(Error::invalid(format!("{g:?} would move the W factor")));
                }
                let sep = self
                    .sep
                    .as_ref()
                    .ok_or_else(|| Error::NotSeparable("moving W requires a separated braiding".into()))?;
                // (V,W) --φ--> (W,V) --ψ--> (V,W)
                let (map, new_pos) = match (here == Some(m + 1), inverse) {
                    (true, false) => (&sep.phi, m),
                    (true, true) => (&sep.psi_inv, m),
                    (false, false) => (&sep.psi, m + 1),
                    (false, true) => (&sep.phi_inv, m + 1),
                };
                layout.w_pos = Some(new_pos);
                Ok(apply_on_block(map, low, dv * dw, v))
            }
        }
    }

    /// Applies a word on a left-braided layout; the W factor never moves.
    pub fn tensor_action(&self, word: &[Gen], v: &Vector, layout: Layout) -> Result<Vector> {
        let mut layout = layout;
        let mut cur = v.clone();
        for &g in word {
            cur = self.step(g, &mut layout, &cur, false)?;
        }
        Ok(cur)
    }

    /// Applies a word of σ^{±1} letters letting W move, as in the separable
    /// model of the induced representation; returns the final layout too.
    pub fn separable_action(&self, word: &[Gen], v: &Vector, layout: Layout) -> Result<(Vector, Layout)> {
        let mut layout = layout;
        let mut cur = v.clone();
        for &g in word {
            cur = self.step(g, &mut layout, &cur, true)?;
        }
        Ok((cur, layout))
    }
}

impl Separation {
    fn new(phi: LinearMap, tau: &LinearMap) -> Result<Self> {
        let phi_inv = phi.inverse()?;
        let psi = tau.compose(&phi_inv)?;
        let psi_inv = psi.inverse()?;
        Ok(Separation { phi, phi_inv, psi, psi_inv })
    }
}

fn expect_size(map: &LinearMap, rows: usize, cols: usize, name: &str) -> Result<()> {
    if map.rows() != rows || map.cols() != cols {
        return Err(Error::DimensionMismatch(format!(
            "{name} is {}x{}, expected {rows}x{cols}",
            map.rows(),
            map.cols()
        )));
    }
    Ok(())
}

/// A map on two adjacent factors, placed by the product of the dimensions below it.
type Placed<'a> = (&'a LinearMap, usize);

fn run(steps: &[Placed], v: &Vector) -> Vector {
    steps
        .iter()
        .fold(v.clone(), |cur, (map, low)| apply_on_block(map, *low, map.rows(), &cur))
}

/// Compares two composites (listed in order of application) on every basis vector.
fn same_composite(field: &Field, dim: usize, lhs: &[Placed], rhs: &[Placed]) -> bool {
    (0..dim).all(|k| {
        let e = basis_vector(field, k);
        run(lhs, &e) == run(rhs, &e)
    })
}

/// (σ⊗id)(id⊗σ)(σ⊗id) = (id⊗σ)(σ⊗id)(id⊗σ) on V^{⊗3}.
pub fn check_braid_equation(sigma: &LinearMap, dim_v: usize) -> Result<bool> {
    expect_size(sigma, dim_v * dim_v, dim_v * dim_v, "sigma")?;
    let lhs = [(sigma, 1), (sigma, dim_v), (sigma, 1)];
    let rhs = [(sigma, dim_v), (sigma, 1), (sigma, dim_v)];
    Ok(same_composite(sigma.field(), dim_v.pow(3), &lhs, &rhs))
}

/// (σ⊗id)(id⊗τ)(σ⊗id)(id⊗τ) = (id⊗τ)(σ⊗id)(id⊗τ)(σ⊗id) on V⊗V⊗W.
pub fn check_lbvs(sigma: &LinearMap, tau: &LinearMap, dim_v: usize, dim_w: usize) -> Result<bool> {
    expect_size(sigma, dim_v * dim_v, dim_v * dim_v, "sigma")?;
    expect_size(tau, dim_v * dim_w, dim_v * dim_w, "tau")?;
    let lhs = [(tau, dim_v), (sigma, 1), (tau, dim_v), (sigma, 1)];
    let rhs = [(sigma, 1), (tau, dim_v), (sigma, 1), (tau, dim_v)];
    Ok(same_composite(sigma.field(), dim_v * dim_v * dim_w, &lhs, &rhs))
}

/// The two separability identities on V⊗V⊗W:
/// (id⊗σ)(φ⊗id)(id⊗φ) = (φ⊗id)(id⊗φ)(σ⊗id) and
/// (τ⊗id)(id⊗φ) = (id⊗φ)(σ⊗id)(id⊗τ)(σ⁻¹⊗id).
pub fn check_separable(sigma: &LinearMap, tau: &LinearMap, phi: &LinearMap, dim_v: usize, dim_w: usize) -> Result<bool> {
    expect_size(sigma, dim_v * dim_v, dim_v * dim_v, "sigma")?;
    expect_size(tau, dim_v * dim_w, dim_v * dim_w, "tau")?;
    expect_size(phi, dim_v * dim_w, dim_v * dim_w, "phi")?;
    let field = sigma.field();
    let dim = dim_v * dim_v * dim_w;
    // first identity ends in W⊗V⊗V
    let lhs1 = [(phi, dim_v), (phi, 1), (sigma, dim_w)];
    let rhs1 = [(sigma, 1), (phi, dim_v), (phi, 1)];
    if !same_composite(field, dim, &lhs1, &rhs1) {
        return Ok(false);
    }
    let sigma_inv = sigma.inverse()?;
    // second identity ends in V⊗W⊗V
    let lhs2 = [(phi, dim_v), (tau, 1)];
    let rhs2 = [(&sigma_inv, 1), (tau, dim_v), (sigma, 1), (phi, dim_v)];
    Ok(same_composite(field, dim, &lhs2, &rhs2))
}

/// Assembles σ_X on (V⊕W)^{⊗2} from σ, φ, ψ = τφ⁻¹ and σ_W = 0 and checks the
/// braid equation on (V⊕W)^{⊗3}.
pub fn check_lax_sum(sigma: &LinearMap, tau: &LinearMap, phi: &LinearMap, dim_v: usize, dim_w: usize) -> Result<bool> {
    expect_size(sigma, dim_v * dim_v, dim_v * dim_v, "sigma")?;
    expect_size(tau, dim_v * dim_w, dim_v * dim_w, "tau")?;
    expect_size(phi, dim_v * dim_w, dim_v * dim_w, "phi")?;
    let psi = tau.compose(&phi.inverse()?)?;
    lax_sum(sigma, phi, &psi, dim_v, dim_w)
        .and_then(|sx| check_braid_equation(&sx, dim_v + dim_w))
}

fn lax_sum(sigma: &LinearMap, phi: &LinearMap, psi: &LinearMap, dv: usize, dw: usize) -> Result<LinearMap> {
    let dx = dv + dw;
    let mut entries = Vec::new();
    for (r, c, x) in sigma.triplets() {
        let (a, b) = (c % dv, c / dv);
        let (ra, rb) = (r % dv, r / dv);
        entries.push((ra + dx * rb, a + dx * b, x));
    }
    // φ: V⊗W → W⊗V
    for (r, c, x) in phi.triplets() {
        let (v, w) = (c % dv, c / dv);
        let (rw, rv) = (r % dw, r / dw);
        entries.push(((dv + rw) + dx * rv, v + dx * (dv + w), x));
    }
    // ψ: W⊗V → V⊗W
    for (r, c, x) in psi.triplets() {
        let (w, v) = (c % dw, c / dw);
        let (rv, rw) = (r % dv, r / dv);
        entries.push((rv + dx * (dv + rw), (dv + w) + dx * v, x));
    }
    LinearMap::from_triplets(sigma.field(), dx * dx, dx * dx, entries)
}

/// Group family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    A,
    B,
}

impl std::fmt::Display for Family {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Family::A => "A",
            Family::B => "B",
        })
    }
}

/// Explicit generator matrices of a representation of A_n (σ_1..σ_{n−1}) or
/// B_n (σ_1..σ_{n−1}, τ_n).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenRep {
    family: Family,
    n: usize,
    dim: usize,
    gens: Vec<LinearMap>,
    inverses: Vec<LinearMap>,
}

impl GenRep {
    pub fn new(family: Family, n: usize, dim: usize, gens: Vec<LinearMap>) -> Result<Self> {
        let expected = match family {
            Family::A => n.saturating_sub(1),
            Family::B => n,
        };
        if gens.len() != expected {
            return Err(Error::invalid(format!("{family}_{n} needs {expected} generators, got {}", gens.len())));
        }
        for g in &gens {
            expect_size(g, dim, dim, "generator")?;
        }
        let inverses = gens.iter().map(LinearMap::inverse).collect::<Result<Vec<_>>>()?;
        let rep = GenRep { family, n, dim, gens, inverses };
        if let Some(rel) = rep.failing_relation() {
            return Err(Error::invalid(format!("relation {rel} fails")));
        }
        Ok(rep)
    }

    /// V^{⊗n}⊗W as a B_n-representation.
    pub fn from_left_braided(space: &LeftBraidedSpace, n: usize) -> Result<Self> {
        let layout = Layout::with_w(n + 1, n + 1);
        let dim = layout.dim(space.dim_v(), space.dim_w());
        let word_gens: Vec<Gen> = (1..n).map(Gen::Sigma).chain((n > 0).then_some(Gen::Tau(n))).collect();
        let gens = word_gens
            .iter()
            .map(|&g| {
                let cols = (0..dim)
                    .map(|k| space.tensor_action(&[g], &basis_vector(space.field(), k), layout))
                    .collect::<Result<Vec<_>>>()?;
                Ok(LinearMap::from_columns(space.field(), dim, cols))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(Family::B, n, dim, gens)
    }

    /// V^{⊗n} as an A_n-representation.
    pub fn from_braided(space: &BraidedSpace, n: usize) -> Result<Self> {
        let dim = space.dim_v().pow(n as u32);
        let gens = (1..n)
            .map(|m| {
                let cols = (0..dim)
                    .map(|k| space.tensor_action(&[Gen::Sigma(m)], &basis_vector(space.field(), k), n))
                    .collect::<Result<Vec<_>>>()?;
                Ok(LinearMap::from_columns(space.field(), dim, cols))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(Family::A, n, dim, gens)
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn field(&self) -> Option<&Field> {
        self.gens.first().map(LinearMap::field)
    }

    pub fn generators(&self) -> &[LinearMap] {
        &self.gens
    }

    /// The matrix of a generator (σ_m, or τ_n for family B).
    pub fn matrix(&self, g: Gen) -> Result<&LinearMap> {
        let (idx, inv) = match (g, self.family) {
            (Gen::Sigma(m), _) if m >= 1 && m < self.n => (m - 1, false),
            (Gen::SigmaInv(m), _) if m >= 1 && m < self.n => (m - 1, true),
            (Gen::Tau(m), Family::B) if m == self.n => (self.n - 1, false),
            (Gen::TauInv(m), Family::B) if m == self.n => (self.n - 1, true),
            _ => return Err(Error::invalid(format!("{g:?} is not a generator of {}_{}", self.family, self.n))),
        };
        Ok(if inv { &self.inverses[idx] } else { &self.gens[idx] })
    }

    pub fn apply_word(&self, word: &[Gen], v: &Vector) -> Result<Vector> {
        let mut cur = v.clone();
        for &g in word {
            cur = self.matrix(g)?.apply(&cur);
        }
        Ok(cur)
    }

    /// Inverse-transpose of every generator.
    pub fn dual(&self) -> Result<Self> {
        Ok(GenRep {
            family: self.family,
            n: self.n,
            dim: self.dim,
            gens: self.inverses.iter().map(LinearMap::transpose).collect(),
            inverses: self.gens.iter().map(LinearMap::transpose).collect(),
        })
    }

    /// The first defining relation that fails, if any.
    pub fn failing_relation(&self) -> Option<String> {
        let n = self.n;
        let sigma_count = n.saturating_sub(1);
        let mut relations: Vec<(String, Vec<Gen>, Vec<Gen>)> = Vec::new();
        for i in 1..=sigma_count {
            for k in i + 1..=sigma_count {
                let (a, b) = (Gen::Sigma(i), Gen::Sigma(k));
                if k == i + 1 {
                    relations.push((format!("s{i}s{k}s{i}=s{k}s{i}s{k}"), vec![a, b, a], vec![b, a, b]));
                } else {
                    relations.push((format!("s{i}s{k}=s{k}s{i}"), vec![a, b], vec![b, a]));
                }
            }
        }
        if self.family == Family::B {
            let t = Gen::Tau(n);
            for i in 1..=sigma_count {
                let s = Gen::Sigma(i);
                if i + 1 == n {
                    relations.push((format!("s{i}t s{i}t=t s{i}t s{i}"), vec![s, t, s, t], vec![t, s, t, s]));
                } else {
                    relations.push((format!("s{i}t=t s{i}"), vec![s, t], vec![t, s]));
                }
            }
        }
        let field = self.field()?.clone();
        for (name, lhs, rhs) in relations {
            for k in 0..self.dim {
                let e = basis_vector(&field, k);
                if self.apply_word(&lhs, &e).ok() != self.apply_word(&rhs, &e).ok() {
                    return Some(name);
                }
            }
        }
        None
    }
}

/// A vector in the induced representation, split by slot.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct IndSlotVector {
    pub n: usize,
    pub slots: BTreeMap<usize, Vector>,
}

impl IndSlotVector {
    pub fn single(n: usize, slot: usize, v: Vector) -> Self {
        let mut slots = BTreeMap::new();
        if !v.is_empty() {
            slots.insert(slot, v);
        }
        IndSlotVector { n, slots }
    }

    fn add(&mut self, slot: usize, v: &Vector, field: &Field) {
        let entry = self.slots.entry(slot).or_default();
        add_scaled(entry, &field.one(), v);
        if entry.is_empty() {
            self.slots.remove(&slot);
        }
    }
}

/// σ_m on the separable model ⊕_i V^{⊗i−1}⊗W⊗V^{⊗n+1−i}.
pub fn induced_action_separable(space: &LeftBraidedSpace, n: usize, m: usize, v: &IndSlotVector) -> Result<IndSlotVector> {
    if !space.is_separable() {
        return Err(Error::NotSeparable("the separable model needs phi".into()));
    }
    if m == 0 || m > n {
        return Err(Error::invalid(format!("sigma_{m} is not a generator of A_{}", n + 1)));
    }
    let mut out = IndSlotVector { n, slots: BTreeMap::new() };
    for (&slot, vec) in &v.slots {
        let (img, layout) = space.separable_action(&[Gen::Sigma(m)], vec, Layout::with_w(n + 1, slot))?;
        out.add(layout.w_pos.expect("W present"), &img, space.field());
    }
    Ok(out)
}

/// σ_m on slot `slot` of the generic model ⊕_i α_i L, following the
/// four-case formula; returns the landing slot and the vector there.
pub fn induced_action_generic(rep: &GenRep, m: usize, slot: usize, l: &Vector) -> Result<(usize, Vector)> {
    if rep.family() != Family::B {
        return Err(Error::invalid("the induced representation starts from a B_n-representation"));
    }
    let n = rep.n();
    if m == 0 || m > n || slot == 0 || slot > n + 1 {
        return Err(Error::invalid(format!("sigma_{m} on slot {slot} out of range for A_{}", n + 1)));
    }
    if m + 1 < slot {
        Ok((slot, rep.apply_word(&[Gen::Sigma(m)], l)?))
    } else if m + 1 == slot {
        Ok((slot - 1, l.clone()))
    } else if m == slot {
        // α_i τ_n α_i⁻¹ = σ_i … σ_{n−1} τ_n σ_{n−1}⁻¹ … σ_i⁻¹, rightmost letter first
        let mut word: Vec<Gen> = (slot..n).map(Gen::SigmaInv).collect();
        word.push(Gen::Tau(n));
        word.extend((slot..n).rev().map(Gen::Sigma));
        Ok((slot + 1, rep.apply_word(&word, l)?))
    } else {
        Ok((slot, rep.apply_word(&[Gen::Sigma(m - 1)], l)?))
    }
}

/// Maps slot `slot` of the generic model (a copy of V^{⊗n}⊗W) into the
/// separable model by moving W leftwards with φ: φ_slot ∘ … ∘ φ_n.
pub fn slot_identification(space: &LeftBraidedSpace, n: usize, slot: usize, l: &Vector) -> Result<Vector> {
    let word: Vec<Gen> = (slot..=n).rev().map(Gen::Sigma).collect();
    let (v, layout) = space.separable_action(&word, l, Layout::with_w(n + 1, n + 1))?;
    debug_assert_eq!(layout.w_pos, Some(slot));
    Ok(v)
}

/// Generator matrices for an action of A_k on a finite-dimensional space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArtinRep {
    field: Field,
    strands: usize,
    dim: usize,
    gens: Vec<LinearMap>,
}

impl ArtinRep {
    pub fn new(field: &Field, strands: usize, dim: usize, gens: Vec<LinearMap>) -> Result<Self> {
        if gens.len() != strands.saturating_sub(1) {
            return Err(Error::invalid("wrong number of generators"));
        }
        for g in &gens {
            expect_size(g, dim, dim, "generator")?;
        }
        Ok(ArtinRep { field: field.clone(), strands, dim, gens })
    }

    /// V^{⊗n} with σ_i acting on factors i, i+1.
    pub fn tensor_power(space: &BraidedSpace, n: usize) -> Result<Self> {
        let rep = GenRep::from_braided(space, n)?;
        Self::from_genrep(&rep, space.field())
    }

    pub fn from_genrep(rep: &GenRep, field: &Field) -> Result<Self> {
        if rep.family() != Family::A {
            return Err(Error::invalid("an A_n action needs a family-A representation"));
        }
        Self::new(field, rep.n(), rep.dim(), rep.generators().to_vec())
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn generator(&self, m: usize) -> &LinearMap {
        &self.gens[m - 1]
    }

    /// Applies σ_{w₁}, σ_{w₂}, … in order.
    pub fn apply_word(&self, word: &[usize], v: &Vector) -> Vector {
        word.iter().fold(v.clone(), |cur, &m| self.gens[m - 1].apply(&cur))
    }
}

/// Which construction of the induced representation to use.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum IndModel {
    Separable,
    Generic,
}

/// Ind_{B_n}^{A_{n+1}}(L) with slot-major basis: global index (i−1)·slot_dim + b.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InducedRep {
    n: usize,
    slot_dim: usize,
    model: IndModel,
    rep: ArtinRep,
}

impl InducedRep {
    pub fn separable(space: &LeftBraidedSpace, n: usize) -> Result<Self> {
        if !space.is_separable() {
            return Err(Error::NotSeparable("the separable model needs phi".into()));
        }
        let field = space.field();
        let slot_dim = Layout::with_w(n + 1, 1).dim(space.dim_v(), space.dim_w());
        let dim = (n + 1) * slot_dim;
        let gens = (1..=n)
            .map(|m| {
                let mut cols = Vec::with_capacity(dim);
                for slot in 1..=n + 1 {
                    for b in 0..slot_dim {
                        let (img, layout) =
                            space.separable_action(&[Gen::Sigma(m)], &basis_vector(field, b), Layout::with_w(n + 1, slot))?;
                        let shift = (layout.w_pos.expect("W present") - 1) * slot_dim;
                        cols.push(img.into_iter().map(|(k, x)| (k + shift, x)).collect());
                    }
                }
                Ok(LinearMap::from_columns(field, dim, cols))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(InducedRep { n, slot_dim, model: IndModel::Separable, rep: ArtinRep::new(field, n + 1, dim, gens)? })
    }

    pub fn generic(rep: &GenRep, field: &Field) -> Result<Self> {
        let n = rep.n();
        let slot_dim = rep.dim();
        let dim = (n + 1) * slot_dim;
        let gens = (1..=n)
            .map(|m| {
                let mut cols = Vec::with_capacity(dim);
                for slot in 1..=n + 1 {
                    for b in 0..slot_dim {
                        let (landed, img) = induced_action_generic(rep, m, slot, &basis_vector(field, b))?;
                        let shift = (landed - 1) * slot_dim;
                        cols.push(img.into_iter().map(|(k, x)| (k + shift, x)).collect());
                    }
                }
                Ok(LinearMap::from_columns(field, dim, cols))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(InducedRep { n, slot_dim, model: IndModel::Generic, rep: ArtinRep::new(field, n + 1, dim, gens)? })
    }

    pub fn build(space: &LeftBraidedSpace, n: usize, model: IndModel) -> Result<Self> {
        match model {
            IndModel::Separable => Self::separable(space, n),
            IndModel::Generic => Self::generic(&GenRep::from_left_braided(space, n)?, space.field()),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn slot_dim(&self) -> usize {
        self.slot_dim
    }

    pub fn model(&self) -> IndModel {
        self.model
    }

    pub fn artin(&self) -> &ArtinRep {
        &self.rep
    }

    /// Slot (1-based) and local index of a global basis index.
    pub fn split(&self, idx: usize) -> (usize, usize) {
        (idx / self.slot_dim + 1, idx % self.slot_dim)
    }

    pub fn join(&self, slot: usize, local: usize) -> usize {
        (slot - 1) * self.slot_dim + local
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;

    fn q() -> Field {
        Field::rationals()
    }

    fn hecke(f: &Field, t: i64) -> LinearMap {
        // Ř for U_t(sl_2) on basis (11, 21, 12, 22) in little-endian order
        let tt = f.from_int(t);
        let diff = &tt - &f.from_ratio(1, t);
        LinearMap::from_triplets(
            f,
            4,
            4,
            vec![(0, 0, tt.clone()), (2, 1, f.one()), (1, 2, f.one()), (1, 1, diff), (3, 3, tt)],
        )
        .unwrap()
    }

    #[test]
    fn braid_equation_examples() {
        let f = q();
        assert!(check_braid_equation(&LinearMap::scalar(&f, 1, &f.from_int(7)), 1).unwrap());
        assert!(check_braid_equation(&LinearMap::swap(&f, 2, 2, &f.one()), 2).unwrap());
        assert!(check_braid_equation(&hecke(&f, 2), 2).unwrap());
        let bad = LinearMap::from_triplets(
            &f,
            4,
            4,
            vec![(0, 0, f.one()), (1, 0, f.one()), (1, 1, f.one()), (2, 2, f.one()), (3, 3, f.from_int(2))],
        )
        .unwrap();
        assert!(!check_braid_equation(&bad, 2).unwrap());
        assert!(check_braid_equation(&bad, 3).is_err());
    }

    #[test]
    fn lbvs_and_separability_examples() {
        let f = q();
        let v = BraidedSpace::new(2, hecke(&f, 2)).unwrap();
        let sq = LeftBraidedSpace::squared_braiding(&v).unwrap();
        assert!(check_lbvs(sq.sigma(), sq.tau(), 2, 2).unwrap());
        assert!(check_lax_sum(sq.sigma(), sq.tau(), sq.phi().unwrap(), 2, 2).unwrap());
        let swap = LinearMap::swap(&f, 2, 2, &f.one());
        assert!(!check_separable(sq.sigma(), sq.tau(), &swap, 2, 2).unwrap());
        assert!(!check_lax_sum(sq.sigma(), sq.tau(), &swap, 2, 2).unwrap());
        let one = LeftBraidedSpace::one_dim(&f.from_int(2), &f.from_int(3), Some(&f.from_int(5))).unwrap();
        assert!(one.is_separable());
        assert!(check_lax_sum(one.sigma(), one.tau(), one.phi().unwrap(), 1, 1).unwrap());
    }

    #[test]
    fn one_dim_actions() {
        let f = q();
        let (qq, p, u) = (f.from_int(2), f.from_int(3), f.from_int(5));
        let s = LeftBraidedSpace::one_dim(&qq, &p, Some(&u)).unwrap();
        let e = basis_vector(&f, 0);
        let v = s.braided_part().tensor_action(&[Gen::Sigma(1), Gen::Sigma(1)], &e, 2).unwrap();
        assert_eq!(v[&0], f.from_int(4));
        let t = s.tensor_action(&[Gen::Tau(2)], &e, Layout::with_w(3, 3)).unwrap();
        assert_eq!(t[&0], p);
        assert!(s.tensor_action(&[Gen::Sigma(2)], &e, Layout::with_w(3, 3)).is_err());

        let n = 3;
        let at = |slot| IndSlotVector::single(n, slot, e.clone());
        let r = induced_action_separable(&s, n, 3, &at(4)).unwrap();
        assert_eq!(r.slots[&3][&0], u);
        let r = induced_action_separable(&s, n, 2, &at(2)).unwrap();
        assert_eq!(r.slots[&3][&0], p.checked_div(&u).unwrap());
        let r = induced_action_separable(&s, n, 1, &at(3)).unwrap();
        assert_eq!(r.slots[&3][&0], qq);
    }

    #[test]
    fn generic_cases() {
        let f = q();
        let s = LeftBraidedSpace::one_dim(&f.from_int(2), &f.from_int(3), None).unwrap();
        let rep = GenRep::from_left_braided(&s, 3).unwrap();
        let e = basis_vector(&f, 0);
        assert_eq!(induced_action_generic(&rep, 1, 3, &e).unwrap(), (3, [(0, f.from_int(2))].into()));
        assert_eq!(induced_action_generic(&rep, 2, 3, &e).unwrap(), (2, e.clone()));
        assert_eq!(induced_action_generic(&rep, 3, 3, &e).unwrap(), (4, [(0, f.from_int(3))].into()));
    }

    #[test]
    fn duals_and_twists() {
        let f = q();
        let s = LeftBraidedSpace::one_dim(&f.from_int(2), &f.from_int(3), Some(&f.from_int(5))).unwrap();
        let d = s.dual().unwrap();
        assert_eq!(d.sigma().column(0)[0].1, f.from_ratio(1, 2));
        assert_eq!(d.tau().column(0)[0].1, f.from_ratio(1, 3));
        assert_eq!(d.phi().unwrap().column(0)[0].1, f.from_ratio(1, 5));
        assert_eq!(d.dual().unwrap(), s);
        let t = s.epsilon_twist().unwrap();
        assert_eq!(t.sigma().column(0)[0].1, f.from_int(-2));
        assert_eq!(t.tau().column(0)[0].1, f.from_int(3));
        assert_eq!(t.phi().unwrap().column(0)[0].1, f.from_int(-5));
        assert_eq!(t.epsilon_twist().unwrap(), s);

        let v = BraidedSpace::new(2, hecke(&f, 3)).unwrap();
        assert!(check_braid_equation(v.dual().unwrap().sigma(), 2).unwrap());
        let sq = LeftBraidedSpace::squared_braiding(&v).unwrap();
        let sqd = sq.dual().unwrap();
        assert!(sqd.is_separable());
        assert!(sq.epsilon_twist().unwrap().is_separable());
    }
}
