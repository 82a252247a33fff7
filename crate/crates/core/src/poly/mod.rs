//! Dense univariate polynomials over `F_{q^n}`.
//!
//! A [`Poly`] is a bare coefficient vector; every operation takes the
//! [`FieldCtx`] it runs in. Coefficients are stored low degree first with
//! trailing zeros stripped, so the zero polynomial is the empty vector and
//! has degree `None`.

mod factor;

pub use factor::{factorize, is_irreducible, roots_in_field, Factorization, DEFAULT_SEED};

use crate::error::{Error, Result};
use crate::field::{FFElement, FieldCtx};

const KARATSUBA_THRESHOLD: usize = 64;

#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Poly {
    coeffs: Vec<FFElement>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly { coeffs: vec![FFElement::from_index(1)] }
    }

    /// The indeterminate.
    pub fn x() -> Self {
        Poly { coeffs: vec![FFElement::ZERO, FFElement::from_index(1)] }
    }

    pub fn constant(c: FFElement) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `c·x^d`.
    pub fn monomial(c: FFElement, d: usize) -> Self {
        let mut coeffs = vec![FFElement::ZERO; d + 1];
        coeffs[d] = c;
        Self::from_coeffs(coeffs)
    }

    pub fn from_coeffs(mut coeffs: Vec<FFElement>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    /// Builds `Σ c·x^d` from sparse `(degree, coefficient)` terms.
    pub fn from_terms(k: &FieldCtx, terms: &[(usize, FFElement)]) -> Self {
        let top = terms.iter().map(|&(d, _)| d).max().unwrap_or(0);
        let mut coeffs = vec![FFElement::ZERO; top + 1];
        for &(d, c) in terms {
            coeffs[d] = k.add(coeffs[d], c);
        }
        Self::from_coeffs(coeffs)
    }

    /// Convenience for polynomials with prime-field coefficients.
    pub fn from_ints(k: &FieldCtx, coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| k.from_int(c)).collect())
    }

    pub fn coeffs(&self) -> &[FFElement] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> FFElement {
        self.coeffs.get(i).copied().unwrap_or(FFElement::ZERO)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn lead(&self) -> Option<FFElement> {
        self.coeffs.last().copied()
    }

    pub fn is_monic(&self) -> bool {
        self.lead().is_some_and(|c| c.index() == 1)
    }

    /// Indices of nonzero coefficients.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, _)| i)
    }

    pub fn add(&self, other: &Poly, k: &FieldCtx) -> Poly {
        let len = self.coeffs.len().max(other.coeffs.len());
        Self::from_coeffs((0..len).map(|i| k.add(self.coeff(i), other.coeff(i))).collect())
    }

    pub fn sub(&self, other: &Poly, k: &FieldCtx) -> Poly {
        let len = self.coeffs.len().max(other.coeffs.len());
        Self::from_coeffs((0..len).map(|i| k.sub(self.coeff(i), other.coeff(i))).collect())
    }

    pub fn neg(&self, k: &FieldCtx) -> Poly {
        Poly { coeffs: self.coeffs.iter().map(|&c| k.neg(c)).collect() }
    }

    pub fn scale(&self, c: FFElement, k: &FieldCtx) -> Poly {
        Self::from_coeffs(self.coeffs.iter().map(|&a| k.mul(a, c)).collect())
    }

    /// `self · x^s`.
    pub fn shift(&self, s: usize) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![FFElement::ZERO; s];
        coeffs.extend_from_slice(&self.coeffs);
        Poly { coeffs }
    }

    pub fn mul(&self, other: &Poly, k: &FieldCtx) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        Self::from_coeffs(mul_dense(&self.coeffs, &other.coeffs, k))
    }

    pub fn pow(&self, mut e: u64, k: &FieldCtx) -> Poly {
        let mut base = self.clone();
        let mut acc = Poly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base, k);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base, k);
            }
        }
        acc
    }

    /// Euclidean division: `self = quotient·divisor + remainder`.
    pub fn divrem(&self, divisor: &Poly, k: &FieldCtx) -> Result<(Poly, Poly)> {
        let db = divisor.degree().ok_or(Error::DivisionByZero)?;
        let lead_inv = k.inv(divisor.coeffs[db])?;
        let mut rem = self.coeffs.clone();
        if rem.len() <= db {
            return Ok((Poly::zero(), self.clone()));
        }
        let mut quot = vec![FFElement::ZERO; rem.len() - db];
        for i in (db..rem.len()).rev() {
            let c = k.mul(rem[i], lead_inv);
            if c.is_zero() {
                continue;
            }
            quot[i - db] = c;
            for (j, &b) in divisor.coeffs.iter().enumerate() {
                rem[i - db + j] = k.sub(rem[i - db + j], k.mul(c, b));
            }
        }
        rem.truncate(db);
        Ok((Self::from_coeffs(quot), Self::from_coeffs(rem)))
    }

    pub fn rem(&self, divisor: &Poly, k: &FieldCtx) -> Result<Poly> {
        Ok(self.divrem(divisor, k)?.1)
    }

    /// Exact quotient; panics in debug builds if the division leaves a remainder.
    pub fn div_exact(&self, divisor: &Poly, k: &FieldCtx) -> Result<Poly> {
        let (q, r) = self.divrem(divisor, k)?;
        debug_assert!(r.is_zero(), "inexact polynomial division");
        Ok(q)
    }

    pub fn monic(&self, k: &FieldCtx) -> Poly {
        match self.lead() {
            None => Poly::zero(),
            Some(c) => self.scale(k.inv(c).expect("nonzero lead"), k),
        }
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Poly, k: &FieldCtx) -> Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b, k).expect("b is nonzero");
            a = b;
            b = r;
        }
        a.monic(k)
    }

    pub fn derivative(&self, k: &FieldCtx) -> Poly {
        Self::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, &c)| k.mul(c, k.from_int((i as u64 % k.p()) as i64)))
                .collect(),
        )
    }

    /// Horner evaluation.
    pub fn eval(&self, a: FFElement, k: &FieldCtx) -> FFElement {
        self.coeffs.iter().rev().fold(FFElement::ZERO, |acc, &c| k.add(k.mul(acc, a), c))
    }

    /// `self(inner(x))`.
    pub fn compose(&self, inner: &Poly, k: &FieldCtx) -> Poly {
        self.coeffs.iter().rev().fold(Poly::zero(), |acc, &c| acc.mul(inner, k).add(&Poly::constant(c), k))
    }

    /// `self^e mod m`.
    pub fn pow_mod(&self, mut e: u64, m: &Poly, k: &FieldCtx) -> Result<Poly> {
        let mut base = self.rem(m, k)?;
        let mut acc = Poly::one().rem(m, k)?;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base, k).rem(m, k)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base, k).rem(m, k)?;
            }
        }
        Ok(acc)
    }

    /// Applies `c ↦ f(c)` to every coefficient.
    pub fn map_coeffs(&self, f: impl Fn(FFElement) -> FFElement) -> Poly {
        Self::from_coeffs(self.coeffs.iter().map(|&c| f(c)).collect())
    }

    /// The unique polynomial of degree `< q^n` congruent to `self` modulo
    /// `t^(q^n) − t`.
    pub fn reduce_mod_field_poly(&self, k: &FieldCtx) -> Poly {
        let order = k.order() as usize;
        if self.coeffs.len() <= order {
            return self.clone();
        }
        let mut out = vec![FFElement::ZERO; order];
        for (e, &c) in self.coeffs.iter().enumerate() {
            let r = reduce_exponent(e as u64, k.order()) as usize;
            out[r] = k.add(out[r], c);
        }
        Self::from_coeffs(out)
    }

    /// Multiplicity of `factor` in `self` (`self` nonzero, `factor` non-constant).
    pub fn multiplicity(&self, factor: &Poly, k: &FieldCtx) -> u32 {
        let mut count = 0;
        let mut cur = self.clone();
        loop {
            match cur.divrem(factor, k) {
                Ok((q, r)) if r.is_zero() && !cur.is_zero() => {
                    cur = q;
                    count += 1;
                }
                _ => return count,
            }
        }
    }

    /// Rendering such as `x^10 + 2x^6 + x^2 + 3`; non-prime-field coefficients
    /// are parenthesized.
    pub fn render(&self, k: &FieldCtx, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut parts = Vec::new();
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mono = match i {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{i}"),
            };
            let coef = k.render(c);
            let coef = if (c.index() as u64) < k.p() { coef } else { format!("({coef})") };
            parts.push(match (c.index(), i) {
                (_, 0) => coef,
                (1, _) => mono,
                _ => format!("{coef}{mono}"),
            });
        }
        parts.join(" + ")
    }
}

/// Exponent of the representative of `t^e` modulo `t^Q − t`.
pub fn reduce_exponent(e: u64, order: u64) -> u64 {
    if e < order {
        e
    } else {
        (e - 1) % (order - 1) + 1
    }
}

fn mul_dense(a: &[FFElement], b: &[FFElement], k: &FieldCtx) -> Vec<FFElement> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    if a.len().min(b.len()) <= KARATSUBA_THRESHOLD {
        let mut out = vec![FFElement::ZERO; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = k.add(out[i + j], k.mul(x, y));
            }
        }
        return out;
    }
    // one Karatsuba split, then schoolbook (or further splits) on the halves
    let half = a.len().max(b.len()) / 2;
    let (a0, a1) = a.split_at(half.min(a.len()));
    let (b0, b1) = b.split_at(half.min(b.len()));
    let z0 = mul_dense(a0, b0, k);
    let z2 = mul_dense(a1, b1, k);
    let sa = add_slices(a0, a1, k);
    let sb = add_slices(b0, b1, k);
    let mut z1 = mul_dense(&sa, &sb, k);
    for (i, &c) in z0.iter().enumerate() {
        z1[i] = k.sub(z1[i], c);
    }
    for (i, &c) in z2.iter().enumerate() {
        z1[i] = k.sub(z1[i], c);
    }
    let mut out = vec![FFElement::ZERO; a.len() + b.len() - 1];
    for (i, &c) in z0.iter().enumerate() {
        out[i] = k.add(out[i], c);
    }
    for (i, &c) in z1.iter().enumerate() {
        if i + half < out.len() {
            out[i + half] = k.add(out[i + half], c);
        }
    }
    for (i, &c) in z2.iter().enumerate() {
        out[i + 2 * half] = k.add(out[i + 2 * half], c);
    }
    out
}

fn add_slices(a: &[FFElement], b: &[FFElement], k: &FieldCtx) -> Vec<FFElement> {
    let len = a.len().max(b.len());
    (0..len)
        .map(|i| {
            let x = a.get(i).copied().unwrap_or_default();
            let y = b.get(i).copied().unwrap_or_default();
            k.add(x, y)
        })
        .collect()
}

/// The unique polynomial of degree `< points.len()` through every point.
pub fn lagrange_interpolate(k: &FieldCtx, points: &[(FFElement, FFElement)]) -> Result<Poly> {
    let mut xs: Vec<FFElement> = points.iter().map(|&(x, _)| x).collect();
    xs.sort_unstable();
    if xs.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::DuplicateAbscissa);
    }
    if points.is_empty() {
        return Ok(Poly::zero());
    }
    // master(x) = Π (x − a_i), kept as a dense vector
    let mut master = vec![FFElement::from_index(1)];
    for &(a, _) in points {
        let mut next = vec![FFElement::ZERO; master.len() + 1];
        for (i, &c) in master.iter().enumerate() {
            next[i + 1] = k.add(next[i + 1], c);
            next[i] = k.sub(next[i], k.mul(c, a));
        }
        master = next;
    }
    let n = points.len();
    let mut acc = vec![FFElement::ZERO; n];
    let mut basis = vec![FFElement::ZERO; n];
    for &(a, y) in points {
        if y.is_zero() {
            continue;
        }
        // synthetic division of master by (x − a)
        let mut carry = FFElement::ZERO;
        for i in (0..n).rev() {
            carry = k.add(master[i + 1], k.mul(carry, a));
            basis[i] = carry;
        }
        let denom = basis.iter().rev().fold(FFElement::ZERO, |s, &c| k.add(k.mul(s, a), c));
        let w = k.div(y, denom)?;
        for (slot, &b) in acc.iter_mut().zip(&basis) {
            *slot = k.add(*slot, k.mul(w, b));
        }
    }
    Ok(Poly::from_coeffs(acc))
}
