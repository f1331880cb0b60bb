//! Exact scalars: the rationals and cyclotomic fields ℚ(ζ_m).
//!
//! A cyclotomic element is stored as its reduced residue modulo Φ_m, so two
//! elements are equal exactly when their coefficient lists are equal.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};

pub type Rational = BigRational;

/// Which field a scalar lives in.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum FieldKind {
    Rationals,
    Cyclotomic(u32),
}

/// Read-only description of a field: its kind and the defining polynomial.
#[derive(Debug, PartialEq, Eq)]
pub struct FieldCtx {
    kind: FieldKind,
    /// Ascending coefficients of Φ_m (or of `x` for ℚ, which is never used for reduction).
    modulus: Vec<BigInt>,
}

/// Cheap, shareable handle to a [`FieldCtx`].
#[derive(Debug, Clone)]
pub struct Field(Arc<FieldCtx>);

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.kind == other.0.kind
    }
}
impl Eq for Field {}

impl Field {
    pub fn rationals() -> Self {
        Field(Arc::new(FieldCtx {
            kind: FieldKind::Rationals,
            modulus: vec![BigInt::zero(), BigInt::one()],
        }))
    }

    pub fn cyclotomic(m: u32) -> Result<Self> {
        if m == 0 {
            return Err(Error::invalid("cyclotomic conductor must be at least 1"));
        }
        Ok(Field(Arc::new(FieldCtx {
            kind: FieldKind::Cyclotomic(m),
            modulus: cyclotomic_poly(m),
        })))
    }

    pub fn kind(&self) -> &FieldKind {
        &self.0.kind
    }

    pub fn conductor(&self) -> Option<u32> {
        match self.0.kind {
            FieldKind::Rationals => None,
            FieldKind::Cyclotomic(m) => Some(m),
        }
    }

    /// Degree over ℚ.
    pub fn degree(&self) -> usize {
        self.0.modulus.len() - 1
    }

    pub fn modulus(&self) -> &[BigInt] {
        &self.0.modulus
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement {
            field: self.clone(),
            coeffs: vec![Rational::zero(); self.degree()],
        }
    }

    pub fn one(&self) -> FieldElement {
        self.from_rational(Rational::one())
    }

    pub fn from_int(&self, n: i64) -> FieldElement {
        self.from_rational(Rational::from_integer(BigInt::from(n)))
    }

    pub fn from_ratio(&self, num: i64, den: i64) -> FieldElement {
        self.from_rational(Rational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn from_rational(&self, r: Rational) -> FieldElement {
        let mut e = self.zero();
        e.coeffs[0] = r;
        e
    }

    /// The canonical generator ζ_m (the class of `x`).
    pub fn generator(&self) -> Result<FieldElement> {
        if self.conductor().is_none() {
            return Err(Error::invalid("the rationals have no cyclotomic generator"));
        }
        let poly = vec![Rational::zero(), Rational::one()];
        Ok(self.reduce(poly))
    }

    /// Builds an element from ascending polynomial coefficients in ζ_m, reducing mod Φ_m.
    pub fn from_poly(&self, coeffs: Vec<Rational>) -> FieldElement {
        self.reduce(coeffs)
    }

    fn reduce(&self, mut poly: Vec<Rational>) -> FieldElement {
        let d = self.degree();
        let modulus = &self.0.modulus;
        if self.conductor().is_some() {
            while poly.len() > d {
                let top = poly.pop().expect("nonempty");
                if top.is_zero() {
                    continue;
                }
                let base = poly.len() - d;
                for (t, c) in modulus.iter().take(d).enumerate() {
                    if !c.is_zero() {
                        poly[base + t] -= &top * Rational::from_integer(c.clone());
                    }
                }
            }
        } else {
            assert!(poly.len() <= 1, "rational element with positive-degree terms");
        }
        poly.resize(d, Rational::zero());
        FieldElement {
            field: self.clone(),
            coeffs: poly,
        }
    }

    /// JSON description, e.g. `{"kind":"cyclotomic","m":3}`.
    pub fn to_json(&self) -> Value {
        match self.0.kind {
            FieldKind::Rationals => json!({"kind": "rationals"}),
            FieldKind::Cyclotomic(m) => json!({"kind": "cyclotomic", "m": m}),
        }
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        match v.get("kind").and_then(Value::as_str) {
            Some("rationals") | None => Ok(Field::rationals()),
            Some("cyclotomic") => {
                let m = v
                    .get("m")
                    .and_then(Value::as_u64)
                    .ok_or_else(|| Error::parse("cyclotomic field needs an integer \"m\""))?;
                Field::cyclotomic(m as u32)
            }
            Some(other) => Err(Error::parse(format!("unknown field kind {other:?}"))),
        }
    }

    /// Parses a field spec: `Q` or `cyclo:m=3`.
    pub fn parse_spec(spec: &str) -> Result<Self> {
        let s = spec.trim();
        if s.eq_ignore_ascii_case("q") || s.eq_ignore_ascii_case("rationals") {
            return Ok(Field::rationals());
        }
        if let Some(rest) = s.strip_prefix("cyclo:") {
            let m = rest
                .trim()
                .strip_prefix("m=")
                .and_then(|v| v.trim().parse::<u32>().ok())
                .ok_or_else(|| Error::parse(format!("bad field spec {spec:?}")))?;
            return Field::cyclotomic(m);
        }
        Err(Error::parse(format!("bad field spec {spec:?}; expected Q or cyclo:m=<m>")))
    }

    /// Parses a scalar written as a polynomial in `z` = ζ_m with rational
    /// coefficients, e.g. `-z`, `2*z^2 - 1/3`, `3/2`.
    pub fn parse(&self, text: &str) -> Result<FieldElement> {
        let poly = parse_poly(text)?;
        if poly.len() > 1 && self.conductor().is_none() {
            return Err(Error::parse(format!("{text:?} uses z, which is not defined over Q")));
        }
        Ok(self.reduce(poly))
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0.kind {
            FieldKind::Rationals => write!(f, "Q"),
            FieldKind::Cyclotomic(m) => write!(f, "Q(zeta_{m})"),
        }
    }
}

/// An exact element of a [`Field`].
#[derive(Debug, Clone)]
pub struct FieldElement {
    field: Field,
    coeffs: Vec<Rational>,
}

impl PartialEq for FieldElement {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.coeffs == other.coeffs
    }
}
impl Eq for FieldElement {}

impl FieldElement {
    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }

    /// The value as a rational, if it lies in ℚ.
    pub fn as_rational(&self) -> Option<&Rational> {
        if self.coeffs[1..].iter().all(Zero::is_zero) {
            Some(&self.coeffs[0])
        } else {
            None
        }
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch {
                left: self.field.to_string(),
                right: other.field.to_string(),
            })
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect();
        Ok(FieldElement { field: self.field.clone(), coeffs })
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect();
        Ok(FieldElement { field: self.field.clone(), coeffs })
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        if self.coeffs.len() == 1 {
            return Ok(FieldElement {
                field: self.field.clone(),
                coeffs: vec![&self.coeffs[0] * &other.coeffs[0]],
            });
        }
        if let Some(r) = other.as_rational() {
            return Ok(self.scale(r));
        }
        if let Some(r) = self.as_rational() {
            return Ok(other.scale(r));
        }
        let d = self.coeffs.len();
        let mut prod = vec![Rational::zero(); 2 * d - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    prod[i + j] += a * b;
                }
            }
        }
        Ok(self.field.reduce(prod))
    }

    pub fn scale(&self, r: &Rational) -> Self {
        FieldElement {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().map(|c| c * r).collect(),
        }
    }

    /// Multiplicative inverse via the extended Euclidean algorithm modulo Φ_m.
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if let Some(r) = self.as_rational() {
            return Ok(self.field.from_rational(r.recip()));
        }
        let modulus: Vec<Rational> = self
            .field
            .modulus()
            .iter()
            .map(|c| Rational::from_integer(c.clone()))
            .collect();
        // Invariant: s_k * self ≡ r_k (mod Φ_m).
        let (mut r0, mut r1) = (modulus, trim(self.coeffs.clone()));
        let (mut s0, mut s1) = (Vec::<Rational>::new(), vec![Rational::one()]);
        while r1.len() > 1 {
            let (quot, rem) = poly_divrem(&r0, &r1);
            let s2 = poly_sub(&s0, &poly_mul(&quot, &s1));
            r0 = std::mem::replace(&mut r1, rem);
            s0 = std::mem::replace(&mut s1, s2);
        }
        // r1 is a nonzero constant because Φ_m is irreducible.
        let c = r1[0].recip();
        let inv: Vec<Rational> = s1.iter().map(|x| x * &c).collect();
        Ok(self.field.reduce(inv))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        self.checked_mul(&other.inv()?)
    }

    /// Integer power; negative exponents invert first.
    pub fn pow(&self, e: i64) -> Result<Self> {
        let mut base = if e < 0 { self.inv()? } else { self.clone() };
        let mut k = e.unsigned_abs();
        let mut acc = self.field.one();
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            k >>= 1;
        }
        Ok(acc)
    }

    /// Text form: a rational `a/b`, or a polynomial in `z` for cyclotomic fields.
    pub fn render(&self) -> String {
        if let Some(r) = self.as_rational() {
            return r.to_string();
        }
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { "-" } else { "+" });
            }
            let monomial = match k {
                0 => String::new(),
                1 => "z".to_string(),
                _ => format!("z^{k}"),
            };
            if monomial.is_empty() {
                out.push_str(&mag.to_string());
            } else if mag.is_one() {
                out.push_str(&monomial);
            } else {
                out.push_str(&format!("{mag}*{monomial}"));
            }
        }
        out
    }

    /// JSON form: a string for rationals, `{"m":m,"coeffs":[...]}` for cyclotomic fields.
    pub fn to_json(&self) -> Value {
        match self.field.conductor() {
            None => Value::String(self.coeffs[0].to_string()),
            Some(m) => json!({
                "m": m,
                "coeffs": self.coeffs.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
            }),
        }
    }

    pub fn from_json(field: &Field, v: &Value) -> Result<Self> {
        match v {
            Value::String(s) => field.parse(s),
            Value::Number(n) => field.parse(&n.to_string()),
            Value::Object(obj) => {
                let m = obj.get("m").and_then(Value::as_u64);
                if m.map(|m| m as u32) != field.conductor() {
                    return Err(Error::parse("cyclotomic element conductor does not match field"));
                }
                let coeffs = obj
                    .get("coeffs")
                    .and_then(Value::as_array)
                    .ok_or_else(|| Error::parse("cyclotomic element needs \"coeffs\""))?;
                let poly = coeffs
                    .iter()
                    .map(|c| {
                        c.as_str()
                            .ok_or_else(|| Error::parse("coefficient must be a string"))
                            .and_then(parse_rational)
                    })
                    .collect::<Result<Vec<_>>>()?;
                Ok(field.reduce(poly))
            }
            _ => Err(Error::parse(format!("cannot read a field element from {v}"))),
        }
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&FieldElement> for &FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: &FieldElement) -> FieldElement {
                self.$checked(rhs).expect("field mismatch in arithmetic")
            }
        }
        impl $trait<FieldElement> for FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: FieldElement) -> FieldElement {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&FieldElement> for FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: &FieldElement) -> FieldElement {
                (&self).$method(rhs)
            }
        }
    };
}
forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);

impl Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        FieldElement {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}
impl Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        -&self
    }
}

fn trim(mut p: Vec<Rational>) -> Vec<Rational> {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

fn poly_sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let n = a.len().max(b.len());
    let out = (0..n)
        .map(|k| {
            let x = a.get(k).cloned().unwrap_or_else(Rational::zero);
            match b.get(k) {
                Some(y) => x - y,
                None => x,
            }
        })
        .collect();
    trim(out)
}

fn poly_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

fn poly_divrem(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let b = trim(b.to_vec());
    let mut rem = trim(a.to_vec());
    let lead = b.last().expect("division by zero polynomial").clone();
    if rem.len() < b.len() {
        return (Vec::new(), rem);
    }
    let mut quot = vec![Rational::zero(); rem.len() - b.len() + 1];
    while rem.len() >= b.len() {
        let shift = rem.len() - b.len();
        let c = rem.last().expect("nonempty") / &lead;
        for (k, y) in b.iter().enumerate() {
            rem[shift + k] -= &c * y;
        }
        quot[shift] = c;
        rem.pop();
        rem = trim(rem);
    }
    (trim(quot), rem)
}

/// Φ_m with ascending integer coefficients, obtained by dividing x^m − 1 by Φ_d
/// for every proper divisor d of m.
pub fn cyclotomic_poly(m: u32) -> Vec<BigInt> {
    assert!(m >= 1, "cyclotomic_poly needs m >= 1");
    let mut num = vec![BigInt::zero(); m as usize + 1];
    num[0] = BigInt::from(-1);
    num[m as usize] = BigInt::one();
    for d in (1..m).filter(|d| m.is_multiple_of(*d)) {
        num = int_poly_div_exact(&num, &cyclotomic_poly(d));
    }
    num
}

fn int_poly_div_exact(a: &[BigInt], monic: &[BigInt]) -> Vec<BigInt> {
    let mut rem = a.to_vec();
    let db = monic.len() - 1;
    let mut quot = vec![BigInt::zero(); a.len() - db];
    for k in (0..quot.len()).rev() {
        let c = rem[k + db].clone();
        for (t, y) in monic.iter().enumerate() {
            rem[k + t] -= &c * y;
        }
        quot[k] = c;
    }
    debug_assert!(rem.iter().all(Zero::is_zero));
    quot
}

/// Smallest d ≤ `bound` with a^d = 1.
///
/// Over ℚ only ±1 qualify. Over ℚ(ζ_m) every root of unity has order dividing
/// lcm(2, m), so only those divisors are tried.
pub fn multiplicative_order(a: &FieldElement, bound: u64) -> Result<Option<u64>> {
    if a.is_zero() {
        return Err(Error::DivisionByZero);
    }
    let field = a.field();
    match field.conductor() {
        None => {
            let r = a.as_rational().expect("rational");
            let d = if r.is_one() {
                Some(1)
            } else if (-r).is_one() {
                Some(2)
            } else {
                None
            };
            Ok(d.filter(|d| *d <= bound))
        }
        Some(m) => {
            let l = (m as u64).lcm(&2);
            for d in (1..=l.min(bound)).filter(|d| l.is_multiple_of(*d)) {
                if a.pow(d as i64)?.is_one() {
                    return Ok(Some(d));
                }
            }
            Ok(None)
        }
    }
}

pub fn parse_rational(s: &str) -> Result<Rational> {
    let t = s.trim();
    let r = match t.split_once('/') {
        Some((n, d)) => {
            let n = BigInt::from_str(n.trim()).map_err(|_| Error::parse(format!("bad rational {s:?}")))?;
            let d = BigInt::from_str(d.trim()).map_err(|_| Error::parse(format!("bad rational {s:?}")))?;
            if d.is_zero() {
                return Err(Error::DivisionByZero);
            }
            Rational::new(n, d)
        }
        None => Rational::from_integer(
            BigInt::from_str(t).map_err(|_| Error::parse(format!("bad rational {s:?}")))?,
        ),
    };
    Ok(r)
}

/// Parses `term (('+'|'-') term)*` where a term is `[coef]['*']z[^k]` or `coef`.
fn parse_poly(text: &str) -> Result<Vec<Rational>> {
    let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Err(Error::parse("empty scalar"));
    }
    let mut poly: Vec<Rational> = Vec::new();
    let bytes = s.as_bytes();
    let mut pos = 0;
    while pos < bytes.len() {
        let mut neg = false;
        while pos < bytes.len() && (bytes[pos] == b'+' || bytes[pos] == b'-') {
            neg ^= bytes[pos] == b'-';
            pos += 1;
        }
        let start = pos;
        while pos < bytes.len() && bytes[pos] != b'+' && bytes[pos] != b'-' {
            pos += 1;
        }
        let term = &s[start..pos];
        if term.is_empty() {
            return Err(Error::parse(format!("dangling sign in {text:?}")));
        }
        let (coef, power) = parse_term(term).map_err(|_| Error::parse(format!("bad term {term:?} in {text:?}")))?;
        if poly.len() <= power {
            poly.resize(power + 1, Rational::zero());
        }
        poly[power] += if neg { -coef } else { coef };
    }
    Ok(poly)
}

fn parse_term(term: &str) -> Result<(Rational, usize)> {
    match term.find('z') {
        None => Ok((parse_rational(term)?, 0)),
        Some(zpos) => {
            let coef_part = term[..zpos].trim_end_matches('*');
            let coef = if coef_part.is_empty() {
                Rational::one()
            } else {
                parse_rational(coef_part)?
            };
            let rest = &term[zpos + 1..];
            let power = if rest.is_empty() {
                1
            } else {
                rest.strip_prefix('^')
                    .and_then(|p| p.parse::<usize>().ok())
                    .ok_or_else(|| Error::parse(term.to_string()))?
            };
            Ok((coef, power))
        }
    }
}

/// Convenience for tests and tables: the value as an i64 when it is a small integer.
pub fn to_small_int(a: &FieldElement) -> Option<i64> {
    let r = a.as_rational()?;
    if r.is_integer() {
        r.to_integer().to_i64()
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Field {
        Field::rationals()
    }

    #[test]
    fn rational_sum() {
        let f = q();
        assert_eq!(f.from_ratio(1, 2) + f.from_ratio(1, 3), f.from_ratio(5, 6));
    }

    #[test]
    fn zeta3_identities() {
        let f = Field::cyclotomic(3).unwrap();
        let z = f.generator().unwrap();
        assert!((&(&z * &z) * &z).is_one());
        assert_eq!(&z + &(&z * &z), f.from_int(-1));
        assert_eq!(z.inv().unwrap(), &z * &z);
    }

    #[test]
    fn inverses() {
        let f = q();
        assert_eq!(f.from_ratio(2, 3).inv().unwrap(), f.from_ratio(3, 2));
        assert!(f.one().inv().unwrap().is_one());
        assert!(matches!(f.zero().inv(), Err(Error::DivisionByZero)));
    }

    #[test]
    fn cyclotomic_polys() {
        let ints = |v: &[i64]| v.iter().map(|&c| BigInt::from(c)).collect::<Vec<_>>();
        assert_eq!(cyclotomic_poly(1), ints(&[-1, 1]));
        assert_eq!(cyclotomic_poly(2), ints(&[1, 1]));
        assert_eq!(cyclotomic_poly(6), ints(&[1, -1, 1]));
        assert_eq!(cyclotomic_poly(12), ints(&[1, 0, -1, 0, 1]));
    }

    #[test]
    fn generator_is_root_of_its_polynomial() {
        for m in 1..=24 {
            let f = Field::cyclotomic(m).unwrap();
            let z = f.generator().unwrap();
            let mut acc = f.zero();
            for (k, c) in cyclotomic_poly(m).iter().enumerate() {
                let term = z.pow(k as i64).unwrap().scale(&Rational::from_integer(c.clone()));
                acc = acc + term;
            }
            assert!(acc.is_zero(), "Phi_{m}(zeta_{m}) != 0");
        }
    }

    #[test]
    fn orders() {
        let f = q();
        assert_eq!(multiplicative_order(&f.from_int(-1), 10).unwrap(), Some(2));
        assert_eq!(multiplicative_order(&f.from_int(2), 100).unwrap(), None);
        let c6 = Field::cyclotomic(6).unwrap();
        let z = c6.generator().unwrap();
        let zeta3 = &z * &z;
        assert_eq!(multiplicative_order(&-zeta3, 12).unwrap(), Some(6));
    }

    #[test]
    fn field_mismatch_is_an_error() {
        let a = q().one();
        let b = Field::cyclotomic(3).unwrap().one();
        assert!(matches!(a.checked_add(&b), Err(Error::FieldMismatch { .. })));
    }

    #[test]
    fn parse_and_render() {
        let f = Field::cyclotomic(3).unwrap();
        let z = f.generator().unwrap();
        assert_eq!(f.parse("-z").unwrap(), -z.clone());
        assert_eq!(f.parse("z^2").unwrap(), &z * &z);
        assert_eq!(f.parse("2*z + 1/3").unwrap().render(), "1/3+2*z");
        assert_eq!(f.parse("2z").unwrap(), z.scale(&Rational::from_integer(2.into())));
        assert!(q().parse("z").is_err());
        assert_eq!(q().parse("-1/2").unwrap(), q().from_ratio(-1, 2));
        let e = f.parse("3/4 - 5*z").unwrap();
        assert_eq!(FieldElement::from_json(&f, &e.to_json()).unwrap(), e);
    }

    #[test]
    fn field_specs() {
        assert_eq!(Field::parse_spec("Q").unwrap(), q());
        assert_eq!(Field::parse_spec("cyclo:m=3").unwrap().conductor(), Some(3));
        assert!(Field::parse_spec("cyclo:3").is_err());
    }
}
