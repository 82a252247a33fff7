//! Factorization over `F_{q^n}`: squarefree decomposition, distinct-degree
//! splitting, then Cantor–Zassenhaus equal-degree splitting driven by a
//! seeded ChaCha stream.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::Poly;
use crate::error::{Error, Result};
use crate::field::{FFElement, FieldCtx};

/// Default seed for the equal-degree splitting stream.
pub const DEFAULT_SEED: u64 = 0xC0FFEE;

/// `f = unit · Π factor^multiplicity`, factors monic irreducible and sorted by
/// degree, then by coefficient vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub unit: FFElement,
    pub factors: Vec<(Poly, u32)>,
}

impl Factorization {
    pub fn expand(&self, k: &FieldCtx) -> Poly {
        self.factors.iter().fold(Poly::constant(self.unit), |acc, (f, e)| acc.mul(&f.pow(u64::from(*e), k), k))
    }
}

pub fn factorize(f: &Poly, k: &FieldCtx, seed: u64) -> Result<Factorization> {
    let unit = f.lead().ok_or(Error::ZeroPolynomial)?;
    let monic = f.monic(k);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut factors: Vec<(Poly, u32)> = Vec::new();
    for (part, mult) in squarefree(&monic, k) {
        for (block, d) in distinct_degree(&part, k) {
            for irreducible in equal_degree(&block, d, k, &mut rng) {
                factors.push((irreducible, mult));
            }
        }
    }
    factors.sort_by(|(a, _), (b, _)| canonical_key(a).cmp(&canonical_key(b)));
    let mut merged: Vec<(Poly, u32)> = Vec::with_capacity(factors.len());
    for (p, e) in factors {
        match merged.last_mut() {
            Some((last, m)) if *last == p => *m += e,
            _ => merged.push((p, e)),
        }
    }
    Ok(Factorization { unit, factors: merged })
}

fn canonical_key(f: &Poly) -> (usize, &[FFElement]) {
    (f.degree().unwrap_or(0), f.coeffs())
}

/// Roots of `f` in `F_{q^n}`, sorted.
pub fn roots_in_field(f: &Poly, k: &FieldCtx, seed: u64) -> Result<Vec<FFElement>> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let f = f.monic(k);
    if f.degree() == Some(0) {
        return Ok(Vec::new());
    }
    let xq = Poly::x().pow_mod(k.order(), &f, k)?;
    let split = f.gcd(&xq.sub(&Poly::x(), k), k);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut roots: Vec<FFElement> =
        equal_degree(&split, 1, k, &mut rng).into_iter().map(|lin| k.neg(lin.coeff(0))).collect();
    roots.sort_unstable();
    Ok(roots)
}

/// `sqrt[p]` of a polynomial all of whose exponents are multiples of `p`.
fn pth_root_poly(f: &Poly, k: &FieldCtx) -> Poly {
    let p = k.p() as usize;
    let coeffs = f.coeffs().iter().step_by(p).map(|&c| k.pth_root(c)).collect();
    Poly::from_coeffs(coeffs)
}

fn squarefree(f: &Poly, k: &FieldCtx) -> Vec<(Poly, u32)> {
    let mut out = Vec::new();
    if f.degree().unwrap_or(0) == 0 {
        return out;
    }
    let p = k.p() as u32;
    let d = f.derivative(k);
    if d.is_zero() {
        for (g, e) in squarefree(&pth_root_poly(f, k), k) {
            out.push((g, e * p));
        }
        return out;
    }
    let mut c = f.gcd(&d, k);
    let mut w = f.div_exact(&c, k).expect("gcd divides f");
    let mut i = 1u32;
    while w.degree() != Some(0) {
        let y = w.gcd(&c, k);
        let fac = w.div_exact(&y, k).expect("gcd divides w");
        if fac.degree() != Some(0) {
            out.push((fac, i));
        }
        i += 1;
        w = y;
        c = c.div_exact(&w, k).expect("w divides c");
    }
    if c.degree() != Some(0) {
        for (g, e) in squarefree(&pth_root_poly(&c, k), k) {
            out.push((g, e * p));
        }
    }
    out
}

/// Splits a squarefree monic polynomial into `(product of all degree-d factors, d)`.
fn distinct_degree(f: &Poly, k: &FieldCtx) -> Vec<(Poly, usize)> {
    let mut out = Vec::new();
    let mut rest = f.clone();
    let mut h = Poly::x().rem(&rest, k).expect("f nonconstant");
    let mut d = 1;
    while rest.degree().unwrap_or(0) >= 2 * d {
        h = h.pow_mod(k.order(), &rest, k).expect("rest nonzero");
        let g = rest.gcd(&h.sub(&Poly::x(), k), k);
        if g.degree() != Some(0) {
            rest = rest.div_exact(&g, k).expect("gcd divides rest");
            h = h.rem(&rest, k).expect("rest nonzero");
            out.push((g, d));
        }
        d += 1;
    }
    if let Some(deg) = rest.degree().filter(|&deg| deg > 0) {
        out.push((rest, deg));
    }
    out
}

fn random_poly(len: usize, k: &FieldCtx, rng: &mut ChaCha8Rng) -> Poly {
    Poly::from_coeffs((0..len).map(|_| FFElement::from_index(rng.gen_range(0..k.order() as u32))).collect())
}

/// Cantor–Zassenhaus on a squarefree monic product of degree-`d` irreducibles.
fn equal_degree(f: &Poly, d: usize, k: &FieldCtx, rng: &mut ChaCha8Rng) -> Vec<Poly> {
    let n = match f.degree() {
        None | Some(0) => return Vec::new(),
        Some(n) => n,
    };
    if n == d {
        return vec![f.clone()];
    }
    loop {
        let a = random_poly(n, k, rng);
        if a.degree().unwrap_or(0) == 0 {
            continue;
        }
        let b = splitting_map(&a, d, f, k);
        let g = if k.p() == 2 { f.gcd(&b, k) } else { f.gcd(&b.sub(&Poly::one(), k), k) };
        let dg = g.degree().unwrap_or(0);
        if dg > 0 && dg < n {
            let other = f.div_exact(&g, k).expect("gcd divides f");
            let mut out = equal_degree(&g, d, k, rng);
            out.extend(equal_degree(&other, d, k, rng));
            return out;
        }
    }
}

/// Odd characteristic: `a^((Q^d − 1)/2)`. Characteristic two: the trace
/// `a + a^2 + … + a^(2^(kd−1))` where `Q = 2^k`.
fn splitting_map(a: &Poly, d: usize, f: &Poly, k: &FieldCtx) -> Poly {
    if k.p() == 2 {
        let steps = k.degree() as usize * d;
        let mut t = a.rem(f, k).expect("f nonzero");
        let mut acc = t.clone();
        for _ in 1..steps {
            t = t.mul(&t, k).rem(f, k).expect("f nonzero");
            acc = acc.add(&t, k);
        }
        acc
    } else {
        // (Q^d − 1)/2 = (Q − 1)/2 · (1 + Q + … + Q^(d−1))
        let mut t = a.rem(f, k).expect("f nonzero");
        let mut acc = t.clone();
        for _ in 1..d {
            t = t.pow_mod(k.order(), f, k).expect("f nonzero");
            acc = acc.mul(&t, k).rem(f, k).expect("f nonzero");
        }
        acc.pow_mod((k.order() - 1) / 2, f, k).expect("f nonzero")
    }
}

/// Irreducibility over `F_{q^n}` via distinct-degree splitting.
pub fn is_irreducible(f: &Poly, k: &FieldCtx) -> bool {
    match f.degree() {
        None | Some(0) => false,
        Some(1) => true,
        Some(n) => {
            let m = f.monic(k);
            let sf = squarefree(&m, k);
            sf.len() == 1 && sf[0].1 == 1 && {
                let dd = distinct_degree(&m, k);
                dd.len() == 1 && dd[0].1 == n
            }
        }
    }
}
