//! The field tower `F_p ⊂ F_q ⊂ F_{q^n}` realized as a single quotient ring
//! `F_p[u]/(modulus)` of degree `m·n`.
//!
//! Elements are packed as the integer `Σ c_i p^i` of their coefficient vector,
//! which makes them `Copy`, hashable and totally ordered. The packed order is
//! the canonical element order used everywhere (orbits, reports, factor lists).
//! `F_q` is never a separate ring: it is recognized as the fixed field of
//! `a ↦ a^q`.

use serde::{Deserialize, Serialize};

use crate::arith;
use crate::error::{Error, Result};

/// Largest supported field order.
pub const MAX_ORDER: u64 = 1 << 31;
/// Fields up to this order get exp/log tables for constant-time multiplication.
const TABLE_LIMIT: u64 = 1 << 16;
const MAX_DIGITS: usize = 32;

/// An element of `F_{q^n}`, packed as `Σ c_i p^i` where `c_i` is the
/// coefficient of `u^i`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FFElement(u32);

impl FFElement {
    pub const ZERO: FFElement = FFElement(0);

    /// The packed integer. Stable across runs and used as the canonical order.
    pub fn index(self) -> u32 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    pub(crate) fn from_index(i: u32) -> Self {
        FFElement(i)
    }
}

#[derive(Clone)]
struct LogTables {
    // exp has length 2·(order−1) so that log a + log b never needs a reduction.
    exp: Vec<u32>,
    log: Vec<u32>,
}

/// Arithmetic context for `F_{q^n}` with `q = p^m`.
#[derive(Clone)]
pub struct FieldCtx {
    p: u64,
    m: u32,
    n: u32,
    degree: u32,
    q: u64,
    order: u64,
    modulus: Vec<u64>,
    pow_p: Vec<u64>,
    primitive: FFElement,
    tables: Option<LogTables>,
}

impl PartialEq for FieldCtx {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.m == other.m && self.n == other.n && self.modulus == other.modulus
    }
}

impl Eq for FieldCtx {}

impl std::fmt::Debug for FieldCtx {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("FieldCtx")
            .field("p", &self.p)
            .field("m", &self.m)
            .field("n", &self.n)
            .field("modulus", &self.modulus)
            .finish()
    }
}

impl FieldCtx {
    /// Builds the context with the least monic irreducible modulus of degree
    /// `m·n`, ordering candidates by the packed value of their non-leading
    /// coefficients.
    pub fn new(p: u64, m: u32, n: u32) -> Result<Self> {
        let degree = Self::check_params(p, m, n)?;
        let modulus = least_irreducible(p, degree as usize);
        Self::build(p, m, n, modulus)
    }

    /// Builds the context with a caller-supplied modulus, which must be monic,
    /// of degree `m·n` and irreducible over `F_p`.
    pub fn with_modulus(p: u64, m: u32, n: u32, modulus: Vec<u64>) -> Result<Self> {
        let degree = Self::check_params(p, m, n)? as usize;
        if modulus.len() != degree + 1 {
            return Err(Error::InvalidModulus(format!("expected {} coefficients, got {}", degree + 1, modulus.len())));
        }
        if modulus.iter().any(|&c| c >= p) {
            return Err(Error::InvalidModulus("coefficient not reduced mod p".into()));
        }
        if modulus[degree] != 1 {
            return Err(Error::InvalidModulus("modulus is not monic".into()));
        }
        if !fp_poly::is_irreducible(&modulus, p) {
            return Err(Error::InvalidModulus("modulus is reducible over F_p".into()));
        }
        Self::build(p, m, n, modulus)
    }

    fn check_params(p: u64, m: u32, n: u32) -> Result<u32> {
        if !arith::is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if m == 0 {
            return Err(Error::ZeroSubfieldDegree);
        }
        if n < 2 {
            return Err(Error::ExtensionDegreeTooSmall(n));
        }
        let degree = m.checked_mul(n).ok_or(Error::FieldTooLarge { p, degree: u32::MAX })?;
        match arith::checked_pow(p, degree) {
            Some(order) if order <= MAX_ORDER => Ok(degree),
            _ => Err(Error::FieldTooLarge { p, degree }),
        }
    }

    fn build(p: u64, m: u32, n: u32, modulus: Vec<u64>) -> Result<Self> {
        let degree = m * n;
        let pow_p: Vec<u64> = (0..=degree).map(|i| p.pow(i)).collect();
        let mut ctx = FieldCtx {
            p,
            m,
            n,
            degree,
            q: p.pow(m),
            order: pow_p[degree as usize],
            modulus,
            pow_p,
            primitive: FFElement::ZERO,
            tables: None,
        };
        ctx.primitive = ctx.find_primitive();
        if ctx.order <= TABLE_LIMIT {
            ctx.tables = Some(ctx.build_tables());
        }
        Ok(ctx)
    }

    fn find_primitive(&self) -> FFElement {
        let group = self.order - 1;
        let primes: Vec<u64> = arith::factor(group).into_iter().map(|(l, _)| l).collect();
        (1..self.order as u32)
            .map(FFElement)
            .find(|&g| primes.iter().all(|&l| self.pow_slow(g, group / l) != self.one()))
            .expect("multiplicative group of a finite field is cyclic")
    }

    fn build_tables(&self) -> LogTables {
        let group = (self.order - 1) as usize;
        let mut exp = vec![0u32; 2 * group];
        let mut log = vec![0u32; self.order as usize];
        let mut x = self.one();
        for i in 0..group {
            exp[i] = x.0;
            exp[i + group] = x.0;
            log[x.0 as usize] = i as u32;
            x = self.mul_slow(x, self.primitive);
        }
        LogTables { exp, log }
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// `q = p^m`.
    pub fn q(&self) -> u64 {
        self.q
    }

    /// `q^n`, the number of elements.
    pub fn order(&self) -> u64 {
        self.order
    }

    /// `m·n`, the degree over the prime field.
    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    /// A fixed generator of the multiplicative group.
    pub fn primitive(&self) -> FFElement {
        self.primitive
    }

    pub fn zero(&self) -> FFElement {
        FFElement::ZERO
    }

    pub fn one(&self) -> FFElement {
        FFElement(1)
    }

    /// The class of `u` in `F_p[u]/(modulus)`.
    pub fn generator(&self) -> FFElement {
        FFElement(self.p as u32)
    }

    /// The prime-field element `c mod p`.
    pub fn from_int(&self, c: i64) -> FFElement {
        FFElement(c.rem_euclid(self.p as i64) as u32)
    }

    /// Element with the given coefficient vector (`coeffs[i]` multiplies `u^i`).
    pub fn element(&self, coeffs: &[u64]) -> Result<FFElement> {
        if coeffs.len() != self.degree as usize {
            return Err(Error::ForeignElement(format!("expected {} coefficients, got {}", self.degree, coeffs.len())));
        }
        let mut packed = 0u64;
        for (i, &c) in coeffs.iter().enumerate() {
            if c >= self.p {
                return Err(Error::ForeignElement(format!("coefficient {c} not reduced mod {}", self.p)));
            }
            packed += c * self.pow_p[i];
        }
        Ok(FFElement(packed as u32))
    }

    pub fn coeffs(&self, a: FFElement) -> Vec<u64> {
        let mut out = vec![0u64; self.degree as usize];
        let mut x = u64::from(a.0);
        for c in out.iter_mut() {
            *c = x % self.p;
            x /= self.p;
        }
        out
    }

    /// The element with packed value `i`.
    pub fn element_at(&self, i: u64) -> Result<FFElement> {
        if i < self.order {
            Ok(FFElement(i as u32))
        } else {
            Err(Error::ForeignElement(format!("packed value {i} out of range")))
        }
    }

    /// Checks that a packed value denotes an element of this field.
    pub fn check(&self, a: FFElement) -> Result<FFElement> {
        if u64::from(a.0) < self.order {
            Ok(a)
        } else {
            Err(Error::ForeignElement(format!("packed value {} out of range", a.0)))
        }
    }

    /// Every element, in canonical order.
    pub fn elements(&self) -> impl Iterator<Item = FFElement> {
        (0..self.order as u32).map(FFElement)
    }

    fn digits(&self, a: FFElement, out: &mut [u64; MAX_DIGITS]) {
        let mut x = u64::from(a.0);
        for d in out.iter_mut().take(self.degree as usize) {
            *d = x % self.p;
            x /= self.p;
        }
    }

    fn pack(&self, digits: &[u64]) -> FFElement {
        let packed: u64 = digits.iter().zip(&self.pow_p).map(|(&d, &w)| d * w).sum();
        FFElement(packed as u32)
    }

    pub fn add(&self, a: FFElement, b: FFElement) -> FFElement {
        if self.p == 2 {
            return FFElement(a.0 ^ b.0);
        }
        let (mut da, mut db) = ([0u64; MAX_DIGITS], [0u64; MAX_DIGITS]);
        self.digits(a, &mut da);
        self.digits(b, &mut db);
        for i in 0..self.degree as usize {
            da[i] = (da[i] + db[i]) % self.p;
        }
        self.pack(&da[..self.degree as usize])
    }

    pub fn neg(&self, a: FFElement) -> FFElement {
        if self.p == 2 {
            return a;
        }
        let mut da = [0u64; MAX_DIGITS];
        self.digits(a, &mut da);
        for d in da.iter_mut().take(self.degree as usize) {
            *d = (self.p - *d) % self.p;
        }
        self.pack(&da[..self.degree as usize])
    }

    pub fn sub(&self, a: FFElement, b: FFElement) -> FFElement {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: FFElement, b: FFElement) -> FFElement {
        if a.0 == 0 || b.0 == 0 {
            return FFElement::ZERO;
        }
        match &self.tables {
            Some(t) => FFElement(t.exp[(t.log[a.0 as usize] + t.log[b.0 as usize]) as usize]),
            None => self.mul_slow(a, b),
        }
    }

    fn mul_slow(&self, a: FFElement, b: FFElement) -> FFElement {
        let k = self.degree as usize;
        let (mut da, mut db) = ([0u64; MAX_DIGITS], [0u64; MAX_DIGITS]);
        self.digits(a, &mut da);
        self.digits(b, &mut db);
        let mut prod = [0u64; 2 * MAX_DIGITS];
        for i in 0..k {
            if da[i] == 0 {
                continue;
            }
            for j in 0..k {
                prod[i + j] = (prod[i + j] + da[i] * db[j]) % self.p;
            }
        }
        for i in (k..2 * k - 1).rev() {
            let c = prod[i];
            if c == 0 {
                continue;
            }
            prod[i] = 0;
            for j in 0..k {
                let sub = c * self.modulus[j] % self.p;
                prod[i - k + j] = (prod[i - k + j] + self.p - sub) % self.p;
            }
        }
        self.pack(&prod[..k])
    }

    pub fn square(&self, a: FFElement) -> FFElement {
        self.mul(a, a)
    }

    pub fn pow(&self, a: FFElement, e: u64) -> FFElement {
        if e == 0 {
            return self.one();
        }
        if a.0 == 0 {
            return FFElement::ZERO;
        }
        if let Some(t) = &self.tables {
            let group = self.order - 1;
            let l = (u64::from(t.log[a.0 as usize]) * (e % group)) % group;
            return FFElement(t.exp[l as usize]);
        }
        self.pow_slow(a, e)
    }

    fn pow_slow(&self, a: FFElement, mut e: u64) -> FFElement {
        let mut base = a;
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul_slow(acc, base);
            }
            base = self.mul_slow(base, base);
            e >>= 1;
        }
        acc
    }

    /// `a^(q^n − 2)`.
    pub fn inv(&self, a: FFElement) -> Result<FFElement> {
        if a.is_zero() {
            return Err(Error::InverseOfZero);
        }
        Ok(self.pow(a, self.order - 2))
    }

    pub fn div(&self, a: FFElement, b: FFElement) -> Result<FFElement> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// `a ↦ a^q`.
    pub fn frobenius_q(&self, a: FFElement) -> FFElement {
        self.pow(a, self.q)
    }

    /// `a ↦ a^p`.
    pub fn frobenius_p(&self, a: FFElement) -> FFElement {
        self.pow(a, self.p)
    }

    /// The unique `b` with `b^p = a`.
    pub fn pth_root(&self, a: FFElement) -> FFElement {
        self.pth_power_root(a, 1)
    }

    /// The unique `b` with `b^(p^s) = a`.
    pub fn pth_power_root(&self, a: FFElement, s: u32) -> FFElement {
        let k = self.degree;
        let shift = (k - s % k) % k;
        let mut x = a;
        for _ in 0..shift {
            x = self.frobenius_p(x);
        }
        x
    }

    /// `a + a^q + … + a^(q^(n−1))`.
    pub fn trace_to_fq(&self, a: FFElement) -> FFElement {
        let mut acc = FFElement::ZERO;
        let mut x = a;
        for _ in 0..self.n {
            acc = self.add(acc, x);
            x = self.frobenius_q(x);
        }
        acc
    }

    /// Absolute trace to the prime field.
    pub fn trace_to_fp(&self, a: FFElement) -> FFElement {
        let mut acc = FFElement::ZERO;
        let mut x = a;
        for _ in 0..self.degree {
            acc = self.add(acc, x);
            x = self.frobenius_p(x);
        }
        acc
    }

    /// `a^(1 + q + … + q^(n−1))`.
    pub fn norm_to_fq(&self, a: FFElement) -> FFElement {
        self.pow(a, (self.order - 1) / (self.q - 1))
    }

    pub fn is_in_fq(&self, a: FFElement) -> bool {
        self.frobenius_q(a) == a
    }

    /// The `q` elements of `F_q`, in canonical order.
    pub fn subfield_elements(&self) -> Vec<FFElement> {
        let step = (self.order - 1) / (self.q - 1);
        let g = self.pow(self.primitive, step);
        let mut out = Vec::with_capacity(self.q as usize);
        out.push(FFElement::ZERO);
        let mut x = self.one();
        for _ in 0..self.q - 1 {
            out.push(x);
            x = self.mul(x, g);
        }
        out.sort_unstable();
        out
    }

    /// The Frobenius orbit of `a`, sorted.
    pub fn orbit_of(&self, a: FFElement) -> Vec<FFElement> {
        let mut orbit = vec![a];
        let mut x = self.frobenius_q(a);
        while x != a {
            orbit.push(x);
            x = self.frobenius_q(x);
        }
        orbit.sort_unstable();
        orbit
    }

    /// Partition of the field into orbits of `a ↦ a^q`, ordered by least element.
    pub fn galois_orbits(&self) -> Vec<Vec<FFElement>> {
        let mut seen = vec![false; self.order as usize];
        let mut orbits = Vec::new();
        for a in self.elements() {
            if seen[a.0 as usize] {
                continue;
            }
            let orbit = self.orbit_of(a);
            for x in &orbit {
                seen[x.0 as usize] = true;
            }
            orbits.push(orbit);
        }
        orbits
    }

    /// Human-readable rendering such as `2u+3`.
    pub fn render(&self, a: FFElement) -> String {
        let coeffs = self.coeffs(a);
        let mut parts = Vec::new();
        for (i, &c) in coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let mono = match i {
                0 => String::new(),
                1 => "u".to_string(),
                _ => format!("u^{i}"),
            };
            parts.push(match (c, i) {
                (_, 0) => c.to_string(),
                (1, _) => mono,
                _ => format!("{c}{mono}"),
            });
        }
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join("+")
        }
    }
}

/// `Σ_{d | n} I_q(d)`, the number of Frobenius orbits on `F_{q^n}`.
pub fn orbit_count_formula(q: u64, n: u32) -> u64 {
    arith::divisors(u64::from(n)).into_iter().map(|d| arith::irreducible_count(q, d as u32)).sum()
}

#[derive(Serialize, Deserialize)]
struct FieldSpec {
    p: u64,
    m: u32,
    n: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    modulus: Option<Vec<u64>>,
}

impl Serialize for FieldCtx {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        FieldSpec { p: self.p, m: self.m, n: self.n, modulus: Some(self.modulus.clone()) }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for FieldCtx {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let spec = FieldSpec::deserialize(d)?;
        let ctx = match spec.modulus {
            Some(m) => FieldCtx::with_modulus(spec.p, spec.m, spec.n, m),
            None => FieldCtx::new(spec.p, spec.m, spec.n),
        };
        ctx.map_err(serde::de::Error::custom)
    }
}

fn least_irreducible(p: u64, degree: usize) -> Vec<u64> {
    let total = p.pow(degree as u32);
    for packed in 0..total {
        let mut f = Vec::with_capacity(degree + 1);
        let mut x = packed;
        for _ in 0..degree {
            f.push(x % p);
            x /= p;
        }
        f.push(1);
        if f[0] != 0 && fp_poly::is_irreducible(&f, p) {
            return f;
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}

/// Polynomials over the prime field, used only to vet moduli.
mod fp_poly {
    fn trim(a: &mut Vec<u64>) {
        while a.last() == Some(&0) {
            a.pop();
        }
    }

    fn inv(a: u64, p: u64) -> u64 {
        let mut acc = 1u64;
        let (mut b, mut e) = (a % p, p - 2);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * b % p;
            }
            b = b * b % p;
            e >>= 1;
        }
        acc
    }

    fn rem(a: &[u64], m: &[u64], p: u64) -> Vec<u64> {
        let mut r = a.to_vec();
        trim(&mut r);
        let dm = m.len() - 1;
        let lead_inv = inv(m[dm], p);
        while r.len() > dm {
            let c = r[r.len() - 1] * lead_inv % p;
            let shift = r.len() - 1 - dm;
            for (j, &mj) in m.iter().enumerate() {
                r[shift + j] = (r[shift + j] + p - c * mj % p) % p;
            }
            trim(&mut r);
        }
        r
    }

    fn mulmod(a: &[u64], b: &[u64], m: &[u64], p: u64) -> Vec<u64> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut prod = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            for (j, &y) in b.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % p;
            }
        }
        rem(&prod, m, p)
    }

    fn gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        let (mut a, mut b) = (a.to_vec(), b.to_vec());
        trim(&mut a);
        trim(&mut b);
        while !b.is_empty() {
            let r = rem(&a, &b, p);
            a = b;
            b = r;
        }
        a
    }

    /// Ben-Or: `f` of degree `k` is irreducible iff
    /// `gcd(x^(p^i) − x, f) = 1` for `1 ≤ i ≤ k/2`.
    pub fn is_irreducible(f: &[u64], p: u64) -> bool {
        let k = f.len() - 1;
        if k == 1 {
            return true;
        }
        let x = vec![0u64, 1];
        let mut power = x.clone();
        for _ in 0..k / 2 {
            let mut next = vec![1u64];
            let mut base = power.clone();
            let mut e = p;
            while e > 0 {
                if e & 1 == 1 {
                    next = mulmod(&next, &base, f, p);
                }
                base = mulmod(&base, &base, f, p);
                e >>= 1;
            }
            power = next;
            let mut diff = power.clone();
            diff.resize(diff.len().max(2), 0);
            diff[1] = (diff[1] + p - 1) % p;
            let g = gcd(&diff, f, p);
            if g.len() > 1 {
                return false;
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f25() -> FieldCtx {
        FieldCtx::new(5, 1, 2).unwrap()
    }

    // Lex scan over monic polynomials of the given degree, testing
    // irreducibility by brute-force root absence (valid for degree ≤ 3).
    fn lex_least_by_roots(p: u64, degree: usize) -> Vec<u64> {
        for packed in 0..p.pow(degree as u32) {
            let mut f: Vec<u64> = (0..degree).map(|i| packed / p.pow(i as u32) % p).collect();
            f.push(1);
            let has_root = (0..p).any(|x| f.iter().rev().fold(0u64, |acc, &c| (acc * x + c) % p) == 0);
            if !has_root {
                return f;
            }
        }
        unreachable!()
    }

    #[test]
    fn moduli_are_lex_least() {
        assert_eq!(lex_least_by_roots(5, 2), vec![2, 0, 1]);
        assert_eq!(lex_least_by_roots(2, 3), vec![1, 1, 0, 1]);
        assert_eq!(FieldCtx::new(5, 1, 2).unwrap().modulus(), &[2, 0, 1]);
        assert_eq!(FieldCtx::new(2, 1, 3).unwrap().modulus(), &[1, 1, 0, 1]);
        assert_eq!(FieldCtx::new(3, 1, 2).unwrap().modulus(), lex_least_by_roots(3, 2).as_slice());
    }

    #[test]
    fn constructor_errors() {
        assert_eq!(FieldCtx::new(2, 1, 1).unwrap_err(), Error::ExtensionDegreeTooSmall(1));
        assert_eq!(FieldCtx::new(4, 1, 2).unwrap_err(), Error::NotPrime(4));
        assert_eq!(FieldCtx::new(3, 0, 2).unwrap_err(), Error::ZeroSubfieldDegree);
        assert!(matches!(FieldCtx::new(2, 4, 8), Err(Error::FieldTooLarge { .. })));
        assert!(FieldCtx::with_modulus(5, 1, 2, vec![1, 0, 1]).is_err());
        assert!(FieldCtx::with_modulus(5, 1, 2, vec![3, 0, 1]).is_ok());
    }

    #[test]
    fn deterministic_construction() {
        let a = FieldCtx::new(3, 2, 2).unwrap();
        let b = FieldCtx::new(3, 2, 2).unwrap();
        assert_eq!(a.modulus(), b.modulus());
        assert_eq!(a, b);
    }

    #[test]
    fn f25_examples() {
        let k = f25();
        let u = k.generator();
        assert_eq!(k.inv(k.one()).unwrap(), k.one());
        assert_eq!(k.mul(u, u), k.from_int(3));
        assert_eq!(k.pow(u, 24), k.one());
        assert_eq!(k.frobenius_q(k.zero()), k.zero());
        assert_eq!(k.frobenius_q(u), k.mul(k.from_int(4), u));
        assert_eq!(k.trace_to_fq(k.zero()), k.zero());
        assert_eq!(k.trace_to_fq(u), k.zero());
        assert_eq!(k.trace_to_fq(k.one()), k.from_int(2));
        assert_eq!(k.norm_to_fq(k.one()), k.one());
        assert_eq!(k.norm_to_fq(u), k.from_int(2));
        assert_eq!(k.norm_to_fq(k.zero()), k.zero());
        assert!(k.is_in_fq(k.zero()));
        assert!(!k.is_in_fq(u));
        assert!(k.is_in_fq(k.from_int(3)));
        assert_eq!(k.inv(k.zero()), Err(Error::InverseOfZero));
    }

    #[test]
    fn table_and_slow_paths_agree() {
        let k = FieldCtx::new(3, 1, 3).unwrap();
        for a in k.elements() {
            for b in k.elements() {
                assert_eq!(k.mul(a, b), k.mul_slow(a, b));
            }
        }
    }

    #[test]
    fn large_field_without_tables() {
        let k = FieldCtx::new(2, 1, 17).unwrap();
        assert!(k.tables.is_none());
        let u = k.generator();
        assert_eq!(k.pow(u, k.order() - 1), k.one());
        assert_eq!(k.mul(u, k.inv(u).unwrap()), k.one());
    }

    #[test]
    fn orbits_small_fields() {
        let f4 = FieldCtx::new(2, 1, 2).unwrap();
        let orbits = f4.galois_orbits();
        assert_eq!(orbits.len(), 3);
        assert_eq!(orbits[0], vec![f4.zero()]);
        assert_eq!(orbits[2].len(), 2);
        let orbits = f25().galois_orbits();
        assert_eq!(orbits.len(), 15);
        assert_eq!(orbits.iter().filter(|o| o.len() == 1).count(), 5);
        assert_eq!(orbit_count_formula(2, 2), 3);
        assert_eq!(orbit_count_formula(5, 2), 15);
        assert_eq!(orbit_count_formula(7, 1), 7);
    }

    #[test]
    fn subfield_of_f16_over_f4() {
        let k = FieldCtx::new(2, 2, 2).unwrap();
        let sub = k.subfield_elements();
        assert_eq!(sub.len(), 4);
        assert!(sub.iter().all(|&c| k.is_in_fq(c)));
        assert_eq!(k.elements().filter(|&c| k.is_in_fq(c)).count(), 4);
    }

    #[test]
    fn element_roundtrip_and_validation() {
        let k = f25();
        let e = k.element(&[3, 4]).unwrap();
        assert_eq!(k.coeffs(e), vec![3, 4]);
        assert!(k.element(&[5, 0]).is_err());
        assert!(k.element(&[1]).is_err());
        assert_eq!(k.render(e), "4u+3");
    }

    #[test]
    fn pth_roots() {
        let k = FieldCtx::new(3, 1, 3).unwrap();
        for a in k.elements() {
            assert_eq!(k.frobenius_p(k.pth_root(a)), a);
            let r = k.pth_power_root(a, 2);
            assert_eq!(k.pow(r, 9), a);
        }
    }
}
