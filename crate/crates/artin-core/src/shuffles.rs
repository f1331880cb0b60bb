//! Compositions, shuffles, marked shuffles and the signed shuffle counts.
//!
//! Permutations are image arrays with 1-based values: `image[k - 1]` is where
//! the k-th letter goes.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::FieldElement;

/// An ordered partition of `total` into positive parts.
///
/// The empty composition of 0 is allowed; it is the single cell of the
/// configuration space of zero points.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition {
    parts: Vec<usize>,
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::invalid(format!("composition parts must be positive: {parts:?}")));
        }
        Ok(Composition { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn total(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Sum of the parts strictly before the 1-based index `k`.
    pub fn offset(&self, k: usize) -> usize {
        self.parts[..k - 1].iter().sum()
    }

    /// Merges parts `m` and `m + 1` (1-based).
    pub fn coarsen(&self, m: usize) -> Result<Composition> {
        if m == 0 || m >= self.parts.len() {
            return Err(Error::invalid(format!("cannot merge part {m} of {self}")));
        }
        let mut parts = self.parts.clone();
        let merged = parts[m - 1] + parts[m];
        parts[m - 1] = merged;
        parts.remove(m);
        Ok(Composition { parts })
    }

    /// The 1-based part containing position `pos` (1-based), with the offset
    /// of `pos` inside that part (0-based).
    pub fn locate(&self, pos: usize) -> (usize, usize) {
        let mut start = 0;
        for (k, &p) in self.parts.iter().enumerate() {
            if pos <= start + p {
                return (k + 1, pos - start - 1);
            }
            start += p;
        }
        panic!("position {pos} beyond composition {self}");
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// All compositions of `total` with exactly `length` parts, lexicographically.
pub fn compositions(total: usize, length: usize) -> Vec<Composition> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(length);
    fn rec(remaining: usize, slots: usize, current: &mut Vec<usize>, out: &mut Vec<Composition>) {
        if slots == 0 {
            if remaining == 0 {
                out.push(Composition { parts: current.clone() });
            }
            return;
        }
        if remaining < slots {
            return;
        }
        for first in 1..=remaining - (slots - 1) {
            current.push(first);
            rec(remaining - first, slots - 1, current, out);
            current.pop();
        }
    }
    rec(total, length, &mut current, &mut out);
    out
}

/// A (p, q)-shuffle: order-preserving on the first p and on the last q letters.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ShufflePerm {
    image: Vec<usize>,
    p: usize,
    q: usize,
}

impl ShufflePerm {
    pub fn new(image: Vec<usize>, p: usize) -> Result<Self> {
        let n = image.len();
        if p > n {
            return Err(Error::invalid("block size exceeds permutation length"));
        }
        let mut seen = vec![false; n];
        for &x in &image {
            if x == 0 || x > n || seen[x - 1] {
                return Err(Error::invalid(format!("{image:?} is not a permutation")));
            }
            seen[x - 1] = true;
        }
        let increasing = |s: &[usize]| s.windows(2).all(|w| w[0] < w[1]);
        if !increasing(&image[..p]) || !increasing(&image[p..]) {
            return Err(Error::invalid(format!("{image:?} is not a ({p},{})-shuffle", n - p)));
        }
        Ok(ShufflePerm { image, p, q: n - p })
    }

    pub fn identity(p: usize, q: usize) -> Self {
        ShufflePerm {
            image: (1..=p + q).collect(),
            p,
            q,
        }
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    pub fn blocks(&self) -> (usize, usize) {
        (self.p, self.q)
    }

    /// Where the 1-based letter `k` goes.
    pub fn apply(&self, k: usize) -> usize {
        self.image[k - 1]
    }

    pub fn inversions(&self) -> usize {
        inversions(&self.image)
    }

    pub fn sign(&self) -> i64 {
        if self.inversions().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// Reduced braid word of the positive lift, shifted by `offset`.
    pub fn word(&self, offset: usize, total_strands: usize) -> Result<Vec<usize>> {
        word_of(&self.image, offset, total_strands)
    }
}

fn inversions(image: &[usize]) -> usize {
    let mut count = 0;
    for a in 0..image.len() {
        for b in a + 1..image.len() {
            if image[a] > image[b] {
                count += 1;
            }
        }
    }
    count
}

/// All C(p+q, p) shuffles, ordered by the image of the first block.
pub fn enumerate_shuffles(p: usize, q: usize) -> Vec<ShufflePerm> {
    let n = p + q;
    let mut out = Vec::new();
    let mut chosen = Vec::with_capacity(p);
    fn rec(start: usize, n: usize, p: usize, chosen: &mut Vec<usize>, out: &mut Vec<ShufflePerm>) {
        if chosen.len() == p {
            let mut image = chosen.clone();
            image.extend((1..=n).filter(|x| !chosen.contains(x)));
            out.push(ShufflePerm { image, p, q: n - p });
            return;
        }
        let need = p - chosen.len();
        for x in start..=n + 1 - need {
            chosen.push(x);
            rec(x + 1, n, p, chosen, out);
            chosen.pop();
        }
    }
    rec(1, n, p, &mut chosen, &mut out);
    out
}

/// Reduced word for a permutation (image array, 1-based values), obtained by
/// bubble-sorting; generator k swaps the letters at positions k and k+1, so
/// applying the word left to right moves letter k to position `image[k-1]`.
pub fn word_of(image: &[usize], offset: usize, total_strands: usize) -> Result<Vec<usize>> {
    let n = image.len();
    if offset + n > total_strands {
        return Err(Error::invalid(format!(
            "word on {n} strands at offset {offset} does not fit in {total_strands} strands"
        )));
    }
    let mut at: Vec<usize> = image.to_vec();
    let mut word = Vec::with_capacity(inversions(image));
    for pass in 0..n {
        let mut swapped = false;
        for pos in 0..n.saturating_sub(1 + pass) {
            if at[pos] > at[pos + 1] {
                at.swap(pos, pos + 1);
                word.push(pos + 1 + offset);
                swapped = true;
            }
        }
        if !swapped {
            break;
        }
    }
    Ok(word)
}

/// Which side of a merge carries the marked letter.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MarkKind {
    /// (p, (q, h), j): letter j+1 of the left block goes to j+h+1.
    Right,
    /// ((p, h), q, j): letter j+1 of the right block (p+j+1) goes to h+j+1.
    Left,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MarkedShuffle {
    pub base: ShufflePerm,
    pub kind: MarkKind,
    pub h: usize,
    pub j: usize,
}

fn check_marked_bounds(kind: MarkKind, p: usize, q: usize, h: usize, j: usize) -> Result<()> {
    let ok = match kind {
        MarkKind::Right => h <= q && j < p,
        MarkKind::Left => h <= p && j < q,
    };
    if ok {
        Ok(())
    } else {
        Err(Error::invalid(format!("bad marked shuffle type {kind:?} p={p} q={q} h={h} j={j}")))
    }
}

/// The shuffles of a given marked type.
pub fn enumerate_marked(kind: MarkKind, p: usize, q: usize, h: usize, j: usize) -> Result<Vec<MarkedShuffle>> {
    check_marked_bounds(kind, p, q, h, j)?;
    let (from, to) = match kind {
        MarkKind::Right => (j + 1, j + h + 1),
        MarkKind::Left => (p + j + 1, h + j + 1),
    };
    Ok(enumerate_shuffles(p, q)
        .into_iter()
        .filter(|s| s.apply(from) == to)
        .map(|base| MarkedShuffle { base, kind, h, j })
        .collect())
}

/// The factorisation s = δ' ∘ β' ∘ ω of a marked shuffle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MarkedDecomposition {
    /// The fixed shuffle determined by the type alone.
    pub omega: Vec<usize>,
    /// Shuffle on the low window [1, j+h] (right) or [1, h+j] (left).
    pub beta: ShufflePerm,
    /// Shuffle on the high window above the marked letter's target.
    pub delta: ShufflePerm,
}

impl MarkedDecomposition {
    /// Reassembles δ' ∘ β' ∘ ω.
    pub fn recompose(&self) -> Vec<usize> {
        let n = self.omega.len();
        let low = self.beta.image.len();
        let high_start = low + 2;
        let lifted = |x: usize| -> usize {
            let x = if x <= low { self.beta.apply(x) } else { x };
            if x >= high_start {
                self.delta.apply(x - high_start + 1) + high_start - 1
            } else {
                x
            }
        };
        (0..n).map(|k| lifted(self.omega[k])).collect()
    }
}

/// The fixed shuffle ω of a marked type.
pub fn marked_omega(kind: MarkKind, p: usize, q: usize, h: usize, j: usize) -> Vec<usize> {
    (1..=p + q)
        .map(|m| match kind {
            MarkKind::Right => {
                if m <= j {
                    m
                } else if m <= p {
                    m + h
                } else if m <= p + h {
                    m - p + j
                } else {
                    m
                }
            }
            MarkKind::Left => {
                if m <= h {
                    m
                } else if m <= p {
                    m + j + 1
                } else if m <= p + j + 1 {
                    m - p + h
                } else {
                    m
                }
            }
        })
        .collect()
}

pub fn decompose_marked(s: &MarkedShuffle) -> Result<MarkedDecomposition> {
    let (p, q) = s.base.blocks();
    let (h, j) = (s.h, s.j);
    check_marked_bounds(s.kind, p, q, h, j)?;
    let omega = marked_omega(s.kind, p, q, h, j);
    let n = p + q;
    let mut omega_inv = vec![0; n];
    for (k, &x) in omega.iter().enumerate() {
        omega_inv[x - 1] = k + 1;
    }
    // π = s ∘ ω⁻¹ fixes the marked target and preserves both windows.
    let pi: Vec<usize> = (1..=n).map(|x| s.base.apply(omega_inv[x - 1])).collect();
    let (low, low_split, high_split) = match s.kind {
        MarkKind::Right => (j + h, j, p - j - 1),
        MarkKind::Left => (h + j, h, p - h),
    };
    if pi[low] != low + 1 {
        return Err(Error::invalid("marked letter does not land on its target"));
    }
    let beta = ShufflePerm::new(pi[..low].to_vec(), low_split)?;
    let delta_image: Vec<usize> = pi[low + 1..].iter().map(|&x| x - low - 1).collect();
    let delta = ShufflePerm::new(delta_image, high_split)?;
    Ok(MarkedDecomposition { omega, beta, delta })
}

/// c_{p,q}: the signed count of (p, q)-shuffles, via the recurrence
/// c_{p,q} = (−1)^p c_{p,q−1} + c_{p−1,q}.
pub fn c_constant(p: usize, q: usize) -> i64 {
    let mut table = vec![vec![0i64; q + 1]; p + 1];
    for a in 0..=p {
        for b in 0..=q {
            table[a][b] = if a == 0 || b == 0 {
                1
            } else {
                let sign = if a % 2 == 0 { 1 } else { -1 };
                sign * table[a][b - 1] + table[a - 1][b]
            };
        }
    }
    table[p][q]
}

/// Signed count of marked shuffles, in closed form.
pub fn c_marked(kind: MarkKind, p: usize, q: usize, h: usize, j: usize) -> Result<i64> {
    check_marked_bounds(kind, p, q, h, j)?;
    let parity = |e: usize| if e.is_multiple_of(2) { 1 } else { -1 };
    Ok(match kind {
        MarkKind::Right => parity(h * (p - j)) * c_constant(j, h) * c_constant(p - j - 1, q - h),
        MarkKind::Left => parity((j + 1) * (p - h)) * c_constant(h, j) * c_constant(p - h, q - j - 1),
    })
}

/// Signed count of marked shuffles by enumeration.
pub fn c_marked_enumerated(kind: MarkKind, p: usize, q: usize, h: usize, j: usize) -> Result<i64> {
    Ok(enumerate_marked(kind, p, q, h, j)?.iter().map(|s| s.base.sign()).sum())
}

/// binom(a, b)_q by the q-Pascal recurrence binom(a,b) = binom(a−1,b−1) + q^b binom(a−1,b).
pub fn quantum_binomial(a: usize, b: usize, q: &FieldElement) -> Result<FieldElement> {
    if b > a {
        return Err(Error::invalid(format!("quantum binomial ({a} choose {b}) out of range")));
    }
    let field = q.field();
    let mut powers = vec![field.one()];
    for k in 1..=b {
        powers.push(&powers[k - 1] * q);
    }
    // row[k] = binom(r, k)_q for the current r.
    let mut row = vec![field.one()];
    for r in 1..=a {
        let mut next = Vec::with_capacity((r + 1).min(b + 1));
        for k in 0..=r.min(b) {
            let left = if k == 0 { field.zero() } else { row[k - 1].clone() };
            let right = if k < row.len() && k < r { &powers[k] * &row[k] } else { field.zero() };
            next.push(left + right);
        }
        row = next;
    }
    Ok(row[b].clone())
}
