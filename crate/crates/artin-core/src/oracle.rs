//! Closed-form homology of type-B Artin groups with one-dimensional braid
//! coefficients (σ = q, τ = p), the vanishing lines that follow from it, and
//! the structure of the divided-power shuffle algebra.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::field::{multiplicative_order, FieldElement};
use crate::shuffle_algebra::gamma_product;

/// Which closed-form case a parameter pair (q, p) falls into.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CaseTag {
    /// −q not a root of unity, p not a power of (−q)⁻¹.
    GenericGeneric,
    /// −q not a root of unity, p = (−q)^{−(r−1)}, r ≥ 1.
    GenericPower { r: usize },
    /// −q of exact order m, p not a power of −q.
    UnityGeneric { m: usize },
    /// −q of exact order m, p = −q.
    UnityR1 { m: usize },
    /// −q of exact order m, p = (−q)^r with 2 ≤ r ≤ m.
    UnityR { m: usize, r: usize },
}

impl fmt::Display for CaseTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CaseTag::GenericGeneric => write!(f, "generic_generic"),
            CaseTag::GenericPower { r } => write!(f, "generic_power(r={r})"),
            CaseTag::UnityGeneric { m } => write!(f, "unity_generic(m={m})"),
            CaseTag::UnityR1 { m } => write!(f, "unity_r1(m={m})"),
            CaseTag::UnityR { m, r } => write!(f, "unity_r(m={m},r={r})"),
        }
    }
}

/// Expected dim H_j(B_n) for j = 0..=n.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExpectedTable {
    pub n: usize,
    pub dims: BTreeMap<usize, usize>,
}

impl ExpectedTable {
    pub fn dim(&self, j: usize) -> usize {
        self.dims.get(&j).copied().unwrap_or(0)
    }

    pub fn dims_vec(&self) -> Vec<usize> {
        (0..=self.n).map(|j| self.dim(j)).collect()
    }

    pub fn total(&self) -> usize {
        self.dims.values().sum()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.dims.iter().map(|(j, d)| if j % 2 == 0 { *d as i64 } else { -(*d as i64) }).sum()
    }
}

/// Classifies (q, p). Powers (−q)^{−(r−1)} are searched for r ≤ n_max + 1,
/// since larger r only contribute at n = r.
pub fn classify(q: &FieldElement, p: &FieldElement, n_max: usize) -> Result<CaseTag> {
    if q.is_zero() || p.is_zero() {
        return Err(Error::invalid("q and p must be nonzero"));
    }
    let minus_q = -q;
    let bound = match q.field().conductor() {
        None => 2,
        Some(m) => 2 * m as u64,
    };
    match multiplicative_order(&minus_q, bound)? {
        None => {
            let inv = minus_q.inv()?;
            let mut power = q.field().one();
            for r in 1..=n_max + 1 {
                if &power == p {
                    return Ok(CaseTag::GenericPower { r });
                }
                power = &power * &inv;
            }
            Ok(CaseTag::GenericGeneric)
        }
        Some(m) => {
            let m = m as usize;
            let mut power = minus_q.clone();
            for r in 1..=m {
                if &power == p {
                    return Ok(if r == 1 { CaseTag::UnityR1 { m } } else { CaseTag::UnityR { m, r } });
                }
                power = &power * &minus_q;
            }
            Ok(CaseTag::UnityGeneric { m })
        }
    }
}

fn ones(n: usize, entries: impl IntoIterator<Item = (usize, usize)>) -> ExpectedTable {
    let mut dims: BTreeMap<usize, usize> = (0..=n).map(|j| (j, 0)).collect();
    for (j, d) in entries {
        dims.insert(j, d);
    }
    ExpectedTable { n, dims }
}

/// The published table for `tag` at B_n.
pub fn expected_homology(tag: CaseTag, n: usize) -> ExpectedTable {
    if n == 0 {
        return ones(0, [(0, 1)]);
    }
    match tag {
        CaseTag::GenericGeneric | CaseTag::UnityGeneric { .. } => ones(n, []),
        CaseTag::GenericPower { r } => {
            if n == r {
                ones(n, [(r - 1, 1), (r, 1)])
            } else {
                ones(n, [])
            }
        }
        CaseTag::UnityR1 { m } => {
            if n.is_multiple_of(m) {
                ones(n, [(n - 1, 1), (n, 1)])
            } else {
                ones(n, [])
            }
        }
        CaseTag::UnityR { m, r } => {
            let shift = m - r + 1;
            if n.is_multiple_of(m) {
                let k = n / m;
                band(n, n - 2 * k)
            } else if n >= shift && (n - shift).is_multiple_of(m) {
                let k = (n - shift) / m;
                band(n, n - 2 * k - 1)
            } else {
                ones(n, [])
            }
        }
    }
}

/// 1 at j = low and j = n, 2 strictly between.
fn band(n: usize, low: usize) -> ExpectedTable {
    ones(n, (low..=n).map(|j| (j, if j == low || j == n { 1 } else { 2 })))
}

/// The largest j such that H_j(B_n) is guaranteed to vanish for every j ≤ it
/// (may be negative).
pub fn vanishing_line(tag: CaseTag, n: usize) -> Result<i64> {
    let n = n as i64;
    match tag {
        CaseTag::UnityR1 { .. } => Ok(n - 2),
        CaseTag::UnityR { m, .. } => {
            let m = m as i64;
            Ok(((m - 2) * n - m).div_euclid(m))
        }
        other => Err(Error::invalid(format!("no vanishing line is stated for {other}"))),
    }
}

/// Shape of Γ_q[x] seen through x₁^{⋆k} = [k]_q!·x_k.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GammaKind {
    /// Every [k]_q! up to the probe degree is nonzero: x₁ generates.
    Polynomial,
    /// x₁^{⋆m} = 0 first at k = m, where x_m is a new generator.
    Truncated { m: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GammaReport {
    /// factorials[k−1] is the coefficient of x_k in x₁^{⋆k}.
    pub factorials: Vec<FieldElement>,
    pub kind: GammaKind,
}

pub fn gamma_presentation(q: &FieldElement, probe: usize) -> Result<GammaReport> {
    let mut factorials = Vec::with_capacity(probe);
    let mut acc = q.field().one();
    let mut kind = GammaKind::Polynomial;
    for k in 1..=probe {
        acc = &acc * &gamma_product(k - 1, 1, q)?;
        if acc.is_zero() && kind == GammaKind::Polynomial {
            kind = GammaKind::Truncated { m: k };
        }
        factorials.push(acc.clone());
    }
    Ok(GammaReport { factorials, kind })
}
