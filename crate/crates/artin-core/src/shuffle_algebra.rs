//! The quantum shuffle algebra 𝔸(V), the bimodule 𝔐(V, W), and the
//! one-dimensional closed forms for products of x_m and y_n.
//!
//! Brute-force products (sums over shuffles of lifted braids) are the
//! reference; the closed forms are checked against them.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::braid::{BraidedSpace, Gen, Layout, LeftBraidedSpace};
use crate::error::{Error, Result};
use crate::field::{multiplicative_order, Field, FieldElement};
use crate::linear::basis_vector;
use crate::shuffles::{enumerate_shuffles, quantum_binomial};

/// Element of 𝔸(V): (internal degree, tensor index over V^{⊗n}) → coefficient.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraElement {
    field: Field,
    terms: BTreeMap<(usize, usize), FieldElement>,
}

/// Element of 𝔐(V, W): (degree q, W position i, tensor index) → coefficient.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BimoduleElement {
    field: Field,
    terms: BTreeMap<(usize, usize, usize), FieldElement>,
}

fn add_term<K: Ord>(terms: &mut BTreeMap<K, FieldElement>, key: K, c: FieldElement) {
    if c.is_zero() {
        return;
    }
    let sum = match terms.remove(&key) {
        Some(old) => old + c,
        None => c,
    };
    if !sum.is_zero() {
        terms.insert(key, sum);
    }
}

impl AlgebraElement {
    pub fn zero(field: &Field) -> Self {
        AlgebraElement { field: field.clone(), terms: BTreeMap::new() }
    }

    /// The empty tensor.
    pub fn unit(field: &Field) -> Self {
        Self::basis(field, 0, 0)
    }

    pub fn basis(field: &Field, degree: usize, idx: usize) -> Self {
        let mut e = Self::zero(field);
        e.add(degree, idx, field.one());
        e
    }

    /// x_n = [1|…|1] for a one-dimensional V.
    pub fn x(field: &Field, n: usize) -> Self {
        Self::basis(field, n, 0)
    }

    pub fn add(&mut self, degree: usize, idx: usize, c: FieldElement) {
        add_term(&mut self.terms, (degree, idx), c);
    }

    pub fn terms(&self) -> &BTreeMap<(usize, usize), FieldElement> {
        &self.terms
    }

    pub fn coeff(&self, degree: usize, idx: usize) -> FieldElement {
        self.terms.get(&(degree, idx)).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn field(&self) -> &Field {
        &self.field
    }
}

impl BimoduleElement {
    pub fn zero(field: &Field) -> Self {
        BimoduleElement { field: field.clone(), terms: BTreeMap::new() }
    }

    pub fn basis(field: &Field, degree: usize, w_pos: usize, idx: usize) -> Self {
        let mut e = Self::zero(field);
        e.add(degree, w_pos, idx, field.one());
        e
    }

    /// y_{i,n}: the one-dimensional basis element of degree n with W in position i.
    pub fn y(field: &Field, i: usize, n: usize) -> Self {
        Self::basis(field, n, i, 0)
    }

    pub fn add(&mut self, degree: usize, w_pos: usize, idx: usize, c: FieldElement) {
        assert!(w_pos >= 1 && w_pos <= degree, "W position {w_pos} outside 1..={degree}");
        add_term(&mut self.terms, (degree, w_pos, idx), c);
    }

    pub fn add_scaled(&mut self, c: &FieldElement, other: &BimoduleElement) {
        for (&(d, w, k), x) in &other.terms {
            self.add(d, w, k, c * x);
        }
    }

    pub fn terms(&self) -> &BTreeMap<(usize, usize, usize), FieldElement> {
        &self.terms
    }

    pub fn coeff(&self, degree: usize, w_pos: usize, idx: usize) -> FieldElement {
        self.terms.get(&(degree, w_pos, idx)).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn field(&self) -> &Field {
        &self.field
    }
}

impl fmt::Display for BimoduleElement {
    /// Bar notation for one-dimensional spaces, e.g. `2*[1|w|1]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(&(d, w, k), c)| {
                let bar: Vec<&str> = (1..=d).map(|p| if p == w { "w" } else { "1" }).collect();
                let suffix = if k == 0 { String::new() } else { format!("#{k}") };
                format!("({c})*[{}]{suffix}", bar.join("|"))
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

fn check_field(a: &Field, b: &Field) -> Result<()> {
    if a == b {
        Ok(())
    } else {
        Err(Error::FieldMismatch { left: a.to_string(), right: b.to_string() })
    }
}

/// Lifted words of all (n, m)-shuffles.
fn shuffle_words(n: usize, m: usize) -> Vec<Vec<Gen>> {
    enumerate_shuffles(n, m)
        .iter()
        .map(|s| s.word(0, n + m).expect("fits").into_iter().map(Gen::Sigma).collect())
        .collect()
}

/// a ⋆ b = Σ_γ γ̃ [a|b].
pub fn shuffle_product(a: &AlgebraElement, b: &AlgebraElement, space: &BraidedSpace) -> Result<AlgebraElement> {
    check_field(a.field(), b.field())?;
    check_field(a.field(), space.field())?;
    let field = space.field();
    let dv = space.dim_v();
    let mut words: HashMap<(usize, usize), Vec<Vec<Gen>>> = HashMap::new();
    let mut out = AlgebraElement::zero(field);
    for (&(n, i), x) in &a.terms {
        for (&(m, j), y) in &b.terms {
            let joint = i + dv.pow(n as u32) * j;
            let coeff = x * y;
            let e = basis_vector(field, joint);
            for word in words.entry((n, m)).or_insert_with(|| shuffle_words(n, m)).iter() {
                for (k, z) in space.tensor_action(word, &e, n + m)? {
                    out.add(n + m, k, &coeff * &z);
                }
            }
        }
    }
    Ok(out)
}

fn require_separable(space: &LeftBraidedSpace) -> Result<()> {
    if space.is_separable() {
        Ok(())
    } else {
        Err(Error::NotSeparable("bimodule multiplication needs a separated braiding".into()))
    }
}

/// a ⋆ μ: the algebra element on the left, W crossing through φ and τφ⁻¹.
pub fn bimodule_left_mult(a: &AlgebraElement, mu: &BimoduleElement, space: &LeftBraidedSpace) -> Result<BimoduleElement> {
    require_separable(space)?;
    check_field(a.field(), mu.field())?;
    let field = space.field();
    let dv = space.dim_v();
    let mut words: HashMap<(usize, usize), Vec<Vec<Gen>>> = HashMap::new();
    let mut out = BimoduleElement::zero(field);
    for (&(p, i), x) in &a.terms {
        for (&(q, w, t), y) in &mu.terms {
            let joint = i + dv.pow(p as u32) * t;
            let coeff = x * y;
            let e = basis_vector(field, joint);
            let layout = Layout::with_w(p + q, p + w);
            for word in words.entry((p, q)).or_insert_with(|| shuffle_words(p, q)).iter() {
                let (img, landed) = space.separable_action(word, &e, layout)?;
                let w2 = landed.w_pos.expect("W present");
                for (k, z) in img {
                    out.add(p + q, w2, k, &coeff * &z);
                }
            }
        }
    }
    Ok(out)
}

/// μ ⋆ b.
pub fn bimodule_right_mult(mu: &BimoduleElement, b: &AlgebraElement, space: &LeftBraidedSpace) -> Result<BimoduleElement> {
    require_separable(space)?;
    check_field(mu.field(), b.field())?;
    let field = space.field();
    let (dv, dw) = (space.dim_v(), space.dim_w());
    let mut words: HashMap<(usize, usize), Vec<Vec<Gen>>> = HashMap::new();
    let mut out = BimoduleElement::zero(field);
    for (&(q, w, t), x) in &mu.terms {
        let block = dv.pow(q as u32 - 1) * dw;
        for (&(m, j), y) in &b.terms {
            let joint = t + block * j;
            let coeff = x * y;
            let e = basis_vector(field, joint);
            let layout = Layout::with_w(q + m, w);
            for word in words.entry((q, m)).or_insert_with(|| shuffle_words(q, m)).iter() {
                let (img, landed) = space.separable_action(word, &e, layout)?;
                let w2 = landed.w_pos.expect("W present");
                for (k, z) in img {
                    out.add(q + m, w2, k, &coeff * &z);
                }
            }
        }
    }
    Ok(out)
}

/// x_n ⋆ x_m = binom(n+m, m)_q x_{n+m} in Γ_q[x].
pub fn gamma_product(n: usize, m: usize, q: &FieldElement) -> Result<FieldElement> {
    quantum_binomial(n + m, m, q)
}

/// The scalars (q, p, u) of a one-dimensional separable left-braided space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OneDimParams {
    pub q: FieldElement,
    pub p: FieldElement,
    pub u: FieldElement,
}

impl OneDimParams {
    pub fn new(q: FieldElement, p: FieldElement, u: FieldElement) -> Result<Self> {
        if q.is_zero() || p.is_zero() || u.is_zero() {
            return Err(Error::invalid("q, p and u must be nonzero"));
        }
        check_field(q.field(), p.field())?;
        check_field(q.field(), u.field())?;
        Ok(OneDimParams { q, p, u })
    }

    pub fn field(&self) -> &Field {
        self.q.field()
    }

    pub fn space(&self) -> Result<LeftBraidedSpace> {
        LeftBraidedSpace::one_dim(&self.q, &self.p, Some(&self.u))
    }
}

/// x_m ⋆ y_n = Σ_h u^{m−h} q^{(n−1)(m−h)} binom(n−1+h, h)_q y_{n+h, n+m}.
pub fn closed_form_xy(n: usize, m: usize, params: &OneDimParams) -> Result<BimoduleElement> {
    let OneDimParams { q, u, .. } = params;
    let field = params.field();
    let mut out = BimoduleElement::zero(field);
    for h in 0..=m {
        let c = u.pow((m - h) as i64)? * q.pow(((n - 1) * (m - h)) as i64)? * quantum_binomial(n - 1 + h, h, q)?;
        out.add(n + m, n + h, 0, c);
    }
    Ok(out)
}

/// y_n ⋆ x_m = Σ_h (p/u)^h binom(n−1+h, h)_q y_{n+h, n+m}.
pub fn closed_form_yx(n: usize, m: usize, params: &OneDimParams) -> Result<BimoduleElement> {
    let OneDimParams { q, p, u } = params;
    let ratio = p.checked_div(u)?;
    let mut out = BimoduleElement::zero(params.field());
    for h in 0..=m {
        let c = ratio.pow(h as i64)? * quantum_binomial(n - 1 + h, h, q)?;
        out.add(n + m, n + h, 0, c);
    }
    Ok(out)
}

/// Coefficients c_h (h = 0..=m) with y_n x_m = Σ_h c_h · x_{m−h} y_{n+h}:
/// c_h = u^{−m} q^{−(m−h)(n−1+h)} binom(n−1+h, h)_q Π_{k<h} (p − q^{−(n−1+k)}).
pub fn change_of_basis_yx(n: usize, m: usize, params: &OneDimParams) -> Result<Vec<FieldElement>> {
    let OneDimParams { q, p, u } = params;
    let u_m = u.pow(-(m as i64))?;
    let mut out = Vec::with_capacity(m + 1);
    let mut product = params.field().one();
    for h in 0..=m {
        if h > 0 {
            let k = h - 1;
            product = product * (p - &q.pow(-((n - 1 + k) as i64))?);
        }
        let c = &u_m * &q.pow(-(((m - h) * (n - 1 + h)) as i64))? * quantum_binomial(n - 1 + h, h, q)? * &product;
        out.push(c);
    }
    Ok(out)
}

/// Σ_h c_h · (x_{m−h} y_{n+h}) with each product taken in closed form.
pub fn substitute_change_of_basis(n: usize, m: usize, params: &OneDimParams) -> Result<BimoduleElement> {
    let coeffs = change_of_basis_yx(n, m, params)?;
    let field = params.field();
    let mut out = BimoduleElement::zero(field);
    for (h, c) in coeffs.iter().enumerate() {
        let product = if h == m {
            BimoduleElement::y(field, n + m, n + m)
        } else {
            closed_form_xy(n + h, m - h, params)?
        };
        out.add_scaled(c, &product);
    }
    Ok(out)
}

/// At q of exact order m: the y_{n+m} coefficient of y_n x_m modulo left
/// multiples, u^{−m} ⌈n/m⌉ Π_{k<m} (p − q^{−(n−1+k)}).
pub fn root_of_unity_leading_coeff(n: usize, m: usize, params: &OneDimParams) -> Result<FieldElement> {
    let OneDimParams { q, p, u } = params;
    if multiplicative_order(q, m as u64)? != Some(m as u64) {
        return Err(Error::invalid(format!("q = {q} is not a primitive {m}-th root of unity")));
    }
    let field = params.field();
    let ceil = field.from_int(n.div_ceil(m) as i64);
    let mut acc = u.pow(-(m as i64))? * ceil;
    for k in 0..m {
        acc = acc * (p - &q.pow(-((n - 1 + k) as i64))?);
    }
    Ok(acc)
}

/// Coefficients of x_{n−k} ⋆ y_k in the basis y_{i,n}: entry [i−1][k−1].
pub fn left_module_matrix(n: usize, params: &OneDimParams) -> Result<Vec<Vec<FieldElement>>> {
    module_matrix(n, params, true)
}

/// Coefficients of y_k ⋆ x_{n−k} in the basis y_{i,n}: entry [i−1][k−1].
pub fn right_module_matrix(n: usize, params: &OneDimParams) -> Result<Vec<Vec<FieldElement>>> {
    module_matrix(n, params, false)
}

fn module_matrix(n: usize, params: &OneDimParams, left: bool) -> Result<Vec<Vec<FieldElement>>> {
    let field = params.field();
    let space = params.space()?;
    let mut m = vec![vec![field.zero(); n]; n];
    for k in 1..=n {
        let x = AlgebraElement::x(field, n - k);
        let y = BimoduleElement::y(field, k, k);
        let prod = if left {
            bimodule_left_mult(&x, &y, &space)?
        } else {
            bimodule_right_mult(&y, &x, &space)?
        };
        for i in 1..=n {
            m[i - 1][k - 1] = prod.coeff(n, i, 0);
        }
    }
    Ok(m)
}
